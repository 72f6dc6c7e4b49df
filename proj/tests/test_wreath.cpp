#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "realclif/rng.hpp"
#include "realclif/wreath.hpp"

using namespace realclif;

namespace {

WreathElement random_wreath(const Signature& sig, int k, SplitMix64& rng) {
    std::size_t n = static_cast<std::size_t>(sig.dim());
    WreathElement w = WreathElement::identity(sig, k);
    for (int j = 0; j < k; ++j) {
        SignedPermutation sp = SignedPermutation::identity(n);
        for (std::size_t i = n - 1; i > 0; --i) std::swap(sp.perm[i], sp.perm[rng.below(i + 1)]);
        for (auto& s : sp.sign)
            if (rng.below(2)) s = -1;
        w.blocks[static_cast<std::size_t>(j)] = sp.to_orthogonal();
    }
    for (std::size_t j = static_cast<std::size_t>(k) - 1; j > 0; --j)
        std::swap(w.perm[j], w.perm[rng.below(j + 1)]);
    return w;
}

TensorElement random_tensor(const Signature& sig, int k, SplitMix64& rng) {
    TensorElement t(sig, k);
    for (int s = 0; s < 2; ++s) {
        std::vector<Monomial> tuple(static_cast<std::size_t>(k));
        for (auto& m : tuple) m = Monomial(rng.below(std::uint64_t(1) << sig.dim()));
        t.add_term(tuple, Cyc8(rng.range(-2, 2)));
    }
    return t;
}

} // namespace

TEST_CASE("embed basic examples") {
    Signature sig{1, 0};
    CHECK(wreath_embed(sig, WreathElement::identity(sig, 2)) ==
          OrthogonalMatrix::identity(2));

    WreathElement swap = WreathElement::identity(sig, 2);
    std::swap(swap.perm[0], swap.perm[1]);
    Matrix expect(2, 2);
    expect.at(0, 1) = Cyc8(1);
    expect.at(1, 0) = Cyc8(1);
    CHECK(wreath_embed(sig, swap).matrix() == expect);
}

TEST_CASE("embed is a homomorphism") {
    SplitMix64 rng(61);
    Signature sig{1, 1};
    for (int t = 0; t < 100; ++t) {
        WreathElement a = random_wreath(sig, 3, rng);
        WreathElement b = random_wreath(sig, 3, rng);
        REQUIRE(wreath_embed(sig, a.compose(b)) ==
                wreath_embed(sig, a) * wreath_embed(sig, b));
    }
    for (int t = 0; t < 20; ++t) {
        WreathElement a = random_wreath(sig, 2, rng);
        CHECK(wreath_embed(sig, a.compose(a.inverse())) == OrthogonalMatrix::identity(4));
    }
}

TEST_CASE("koszul permutation sign") {
    CHECK(koszul_perm_sign({1, 0}, {1, 1}) == -1);
    CHECK(koszul_perm_sign({1, 0}, {1, 0}) == 1);
    CHECK(koszul_perm_sign({0, 1}, {1, 1}) == 1);
    CHECK(koszul_perm_sign({2, 1, 0}, {1, 1, 1}) == -1);  // three pairwise inversions
}

TEST_CASE("act_on_tensor examples") {
    Signature sig{1, 0};
    CliffordElement e = CliffordElement::generator(sig, 1);
    TensorElement e_1 = TensorElement::embed_factor(e, 2, 0);
    TensorElement one_e = TensorElement::embed_factor(e, 2, 1);
    TensorElement ee = TensorElement::single_term(sig, {1, 1}, Cyc8(1));

    WreathElement swap = WreathElement::identity(sig, 2);
    std::swap(swap.perm[0], swap.perm[1]);

    CHECK(act_on_tensor(WreathElement::identity(sig, 2), e_1) == e_1);
    CHECK(act_on_tensor(swap, e_1) == one_e);
    CHECK(act_on_tensor(swap, ee) == -ee);
}

TEST_CASE("act_on_tensor is a multiplicative group action") {
    SplitMix64 rng(67);
    Signature sig{1, 1};
    int k = 2;
    for (int t = 0; t < 60; ++t) {
        WreathElement w1 = random_wreath(sig, k, rng);
        WreathElement w2 = random_wreath(sig, k, rng);
        TensorElement a = random_tensor(sig, k, rng);
        TensorElement b = random_tensor(sig, k, rng);
        REQUIRE(act_on_tensor(w1, act_on_tensor(w2, a)) ==
                act_on_tensor(w1.compose(w2), a));
        REQUIRE(act_on_tensor(w1, a * b) ==
                act_on_tensor(w1, a) * act_on_tensor(w1, b));
    }
}

TEST_CASE("act_on_tensor intertwines the real involution") {
    SplitMix64 rng(71);
    Signature sig{1, 1};
    int k = 2;
    for (int t = 0; t < 60; ++t) {
        WreathElement w = random_wreath(sig, k, rng);
        TensorElement a = random_tensor(sig, k, rng);
        REQUIRE(act_on_tensor(w.conjugated(sig), a.real_involution()) ==
                act_on_tensor(w, a).real_involution());
    }
    // conjugation-fixed blocks commute with the involution outright
    for (int t = 0; t < 30; ++t) {
        WreathElement w = WreathElement::identity(sig, k);
        std::swap(w.perm[0], w.perm[1]);
        TensorElement a = random_tensor(sig, k, rng);
        REQUIRE(act_on_tensor(w, a.real_involution()) ==
                act_on_tensor(w, a).real_involution());
    }
}

TEST_CASE("phi equivariance across small shapes") {
    for (int n = 1; n <= 3; ++n)
        for (int p = 0; p <= n; ++p)
            for (int k = 1; k * n <= 4; ++k) {
                Report r = verify_phi_equivariance(p, n - p, k);
                INFO(r.suite, " p=", p, " q=", n - p, " k=", k);
                REQUIRE(r.all_pass());
            }
}
