#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "realclif/pin.hpp"
#include "realclif/rng.hpp"
#include "realclif/textio.hpp"

using namespace realclif;

namespace {

Cyc8 random_cyc8(SplitMix64& rng) {
    auto coef = [&] {
        Rational r(rng.range(-6, 6), rng.range(1, 5));
        r.canonicalize();
        return r;
    };
    return Cyc8(coef(), coef(), coef(), coef());
}

} // namespace

TEST_CASE("scalar rendering") {
    CHECK(to_string(Cyc8(0)) == "0");
    CHECK(to_string(Cyc8(1)) == "1");
    CHECK(to_string(Cyc8::i()) == "z^2");
    CHECK(to_string(-Cyc8::zeta(3)) == "-z^3");
    CHECK(to_string(Cyc8(Rational(1, 2)) + Cyc8::i()) == "1/2 + z^2");
    CHECK(to_string(Cyc8::sqrt2()) == "z - z^3");
}

TEST_CASE("scalar parsing") {
    CHECK(parse_cyc8("0") == Cyc8(0));
    CHECK(parse_cyc8("3/2") == Cyc8(Rational(3, 2)));
    CHECK(parse_cyc8("z^2") == Cyc8::i());
    CHECK(parse_cyc8("-z") == -Cyc8::zeta());
    CHECK(parse_cyc8("1/2 + 1/2*z^2") == Cyc8(Rational(1, 2)) + Cyc8(Rational(1, 2)) * Cyc8::i());
    CHECK_THROWS_AS(parse_cyc8(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_cyc8("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cyc8("z^2 banana"), std::invalid_argument);

    SplitMix64 rng(83);
    for (int t = 0; t < 300; ++t) {
        Cyc8 a = random_cyc8(rng);
        CHECK(parse_cyc8(to_string(a)) == a);
    }
}

TEST_CASE("element round trip") {
    Signature sig{2, 1};
    CHECK(to_string(CliffordElement(sig)) == "0");
    CHECK(to_string(CliffordElement::scalar(sig, Cyc8(1))) == "1");
    CHECK(to_string(CliffordElement::generator(sig, 1)) == "e1");

    CHECK(parse_clifford("e1", sig) == CliffordElement::generator(sig, 1));
    CHECK(parse_clifford("1", sig) == CliffordElement::scalar(sig, Cyc8(1)));
    CHECK(parse_clifford("e1e3 - e2", sig) ==
          CliffordElement::monomial_term(sig, 0b101, Cyc8(1)) -
              CliffordElement::generator(sig, 2));
    CHECK(parse_clifford("(1/2 + 1/2*z^2)*e1e2", sig) ==
          CliffordElement::monomial_term(sig, 0b011,
                                         Cyc8(Rational(1, 2)) * (Cyc8(1) + Cyc8::i())));
    CHECK(parse_clifford("z^2*e1", sig) ==
          CliffordElement::generator(sig, 1).scaled(Cyc8::i()));
    CHECK_THROWS_AS(parse_clifford("e9", sig), std::invalid_argument);
    CHECK_THROWS_AS(parse_clifford("e1e1", sig), std::invalid_argument);

    SplitMix64 rng(89);
    for (int t = 0; t < 300; ++t) {
        CliffordElement e(sig);
        int terms = static_cast<int>(rng.below(4));
        for (int s = 0; s < terms; ++s)
            e.add_term(Monomial(rng.below(8)), random_cyc8(rng));
        CHECK(parse_clifford(to_string(e), sig) == e);
    }
}

TEST_CASE("operator dump round trip") {
    Signature sig{1, 1};
    Operator op = spinor_rep(CliffordElement::generator(sig, 2).scaled(Cyc8::i()) +
                             CliffordElement::scalar(sig, Cyc8(Rational(1, 2))));
    std::string dump = operator_dump(op);
    Operator back = parse_operator_dump(dump);
    CHECK(back == op);
    CHECK(operator_dump(back) == dump);
    CHECK_THROWS_AS(parse_operator_dump("nonsense"), std::invalid_argument);
}

TEST_CASE("signed permutation notation") {
    SignedPermutation sp = parse_signed_permutation("(1 2)", 3);
    CHECK(sp.perm == std::vector<int>{1, 0, 2});
    CHECK(sp.sign == std::vector<int>{1, 1, 1});

    SignedPermutation id = parse_signed_permutation("id", 2);
    CHECK(id == SignedPermutation::identity(2));

    SignedPermutation mixed = parse_signed_permutation("(1 2 3) -2", 3);
    CHECK(mixed.perm == std::vector<int>{1, 2, 0});
    CHECK(mixed.sign == std::vector<int>{1, -1, 1});
    // rendering round-trips through the parser
    CHECK(parse_signed_permutation(mixed.str(), 3) == mixed);

    CHECK_THROWS_AS(parse_signed_permutation("(1 5)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_signed_permutation("(1 2)(2 3)", 3), std::invalid_argument);
}
