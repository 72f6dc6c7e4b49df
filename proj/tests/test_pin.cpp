#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "realclif/pin.hpp"
#include "realclif/rng.hpp"
#include "realclif/suites.hpp"

using namespace realclif;

TEST_CASE("twisted adjoint of basic elements") {
    Signature sig{2, 0};
    PinElement e1(CliffordElement::generator(sig, 1));
    Matrix expect(2, 2);
    expect.at(0, 0) = Cyc8(-1);
    expect.at(1, 1) = Cyc8(1);
    CHECK(e1.twisted_adjoint().matrix() == expect);

    PinElement one(CliffordElement::scalar(sig, Cyc8(1)));
    CHECK(one.twisted_adjoint() == OrthogonalMatrix::identity(2));

    PinElement zeta(CliffordElement::scalar(sig, Cyc8::zeta()));
    CHECK(zeta.twisted_adjoint() == OrthogonalMatrix::identity(2));
}

TEST_CASE("pin element construction rejects bad input") {
    Signature sig{2, 0};
    CliffordElement mixed = CliffordElement::scalar(sig, Cyc8(1)) +
                            CliffordElement::generator(sig, 1);
    CHECK_THROWS_AS((void)PinElement(mixed), std::invalid_argument);
    CHECK_THROWS_AS((void)PinElement(CliffordElement(sig)), std::invalid_argument);
    // invertible even element outside Pin^c: 1 + e1e2 scaled to stay invertible
    CliffordElement not_pin =
        CliffordElement::scalar(sig, Cyc8(2)) +
        CliffordElement::monomial_term(sig, 0b11, Cyc8(1));
    CHECK_THROWS_AS((void)PinElement(not_pin), std::invalid_argument);
}

TEST_CASE("grading identity and homomorphism on random elements") {
    SplitMix64 rng(51);
    for (int n = 1; n <= 4; ++n)
        for (int p = 0; p <= n; ++p) {
            Signature sig{p, n - p};
            for (int t = 0; t < 60; ++t) {
                PinElement w = random_pin_element(sig, rng);
                Cyc8 det = w.twisted_adjoint().det();
                REQUIRE(det == (w.parity() ? Cyc8(-1) : Cyc8(1)));
                PinElement v = random_pin_element(sig, rng);
                PinElement prod(w.value() * v.value(),
                                v.value_inverse() * w.value_inverse());
                REQUIRE(prod.twisted_adjoint() ==
                        w.twisted_adjoint() * v.twisted_adjoint());
            }
        }
}

TEST_CASE("lifting signed permutations") {
    Signature sig{2, 0};
    {
        SignedPermutation flip = SignedPermutation::identity(2);
        flip.sign[0] = -1;
        PinElement w = lift_signed_permutation(sig, flip);
        CHECK(w.value() == CliffordElement::generator(sig, 1));
    }
    {
        SignedPermutation swap = SignedPermutation::identity(2);
        std::swap(swap.perm[0], swap.perm[1]);
        PinElement w = lift_signed_permutation(sig, swap);
        CliffordElement expect = (CliffordElement::generator(sig, 1) -
                                  CliffordElement::generator(sig, 2))
                                     .scaled(Cyc8::sqrt2().inverse());
        CHECK(w.value() == expect);
        Matrix anti(2, 2);
        anti.at(0, 1) = Cyc8(1);
        anti.at(1, 0) = Cyc8(1);
        CHECK(w.twisted_adjoint().matrix() == anti);
    }
    {
        PinElement w = lift_signed_permutation(sig, SignedPermutation::identity(2));
        CHECK(w.value() == CliffordElement::scalar(sig, Cyc8(1)));
    }
    // non signed permutation input
    Matrix rot(2, 2);
    rot.at(0, 0) = Cyc8(Rational(3, 5));
    rot.at(1, 0) = Cyc8(Rational(4, 5));
    rot.at(0, 1) = Cyc8(Rational(-4, 5));
    rot.at(1, 1) = Cyc8(Rational(3, 5));
    CHECK_THROWS_AS(lift_signed_permutation(sig, OrthogonalMatrix(rot)),
                    std::invalid_argument);
}

TEST_CASE("lift roundtrip is exhaustive at n = 2") {
    for (int p = 0; p <= 2; ++p) {
        Signature sig{p, 2 - p};
        std::vector<int> perms[2] = {{0, 1}, {1, 0}};
        for (const auto& perm : perms)
            for (int mask = 0; mask < 4; ++mask) {
                SignedPermutation sp;
                sp.perm = perm;
                sp.sign = {(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1};
                PinElement w = lift_signed_permutation(sig, sp);
                REQUIRE(w.twisted_adjoint() == sp.to_orthogonal());
            }
    }
}

TEST_CASE("spinor representation") {
    Signature sig{1, 0};
    Operator gamma = spinor_rep(CliffordElement::generator(sig, 1));
    Matrix swap(2, 2);
    swap.at(0, 1) = Cyc8(1);
    swap.at(1, 0) = Cyc8(1);
    CHECK(gamma.mat == swap);
    CHECK(is_unitary(gamma));
    CHECK(is_self_adjoint(gamma));
    CHECK(gamma.mat * gamma.mat == Matrix::identity(2));

    Operator scalar = spinor_rep(CliffordElement::scalar(sig, Cyc8::i()));
    CHECK(scalar.mat == Matrix::identity(2).scaled(Cyc8::i()));

    SplitMix64 rng(53);
    Signature sig2{1, 2};
    for (int t = 0; t < 40; ++t) {
        PinElement a = random_pin_element(sig2, rng);
        PinElement b = random_pin_element(sig2, rng);
        REQUIRE(spinor_rep(a.value() * b.value()).mat ==
                spinor_rep(a).mat * spinor_rep(b).mat);
        REQUIRE(is_unitary(spinor_rep(a)));
    }
}

TEST_CASE("generator spinor matrices are unitary, self-adjoint, odd") {
    for (int n = 1; n <= 6; ++n)
        for (int p = 0; p <= n; ++p) {
            Signature sig{p, n - p};
            for (int i = 1; i <= n; ++i) {
                Operator gamma = spinor_rep(CliffordElement::generator(sig, i));
                REQUIRE(is_unitary(gamma));
                REQUIRE(is_self_adjoint(gamma));
                REQUIRE(is_odd(gamma));
            }
        }
}

TEST_CASE("membership flags") {
    {
        Signature sig{2, 0};
        Membership m = PinElement(CliffordElement::generator(sig, 1)).membership();
        CHECK(m.pin);
        CHECK(!m.spin_c);
        CHECK(!m.spin);

        CliffordElement e12 = CliffordElement::generator(sig, 1) *
                              CliffordElement::generator(sig, 2);
        Membership m12 = PinElement(e12).membership();
        CHECK(m12.pin);
        CHECK(m12.spin_c);
        CHECK(m12.spin);

        Membership mz = PinElement(CliffordElement::scalar(sig, Cyc8::zeta())).membership();
        CHECK(!mz.pin);
        CHECK(mz.spin_c);
        CHECK(!mz.spin);
    }
    {
        // bar-negated generator is not in the Pin subgroup
        Signature sig{0, 1};
        Membership m = PinElement(CliffordElement::generator(sig, 1)).membership();
        CHECK(!m.pin);
        // the real-subalgebra unit i e_1 is
        Membership mf =
            PinElement(CliffordElement::generator(sig, 1).scaled(Cyc8::i())).membership();
        CHECK(mf.pin);
    }
}

TEST_CASE("right actions") {
    Signature sig{1, 0};
    Operator plain = right_action(sig, 1, RightActionVariant::Plain);
    CHECK(plain.mat * plain.mat == Matrix::identity(2));
    CHECK(is_self_adjoint(plain));

    Operator koszul = right_action(sig, 1, RightActionVariant::Koszul);
    CHECK(koszul.mat * koszul.mat == -Matrix::identity(2));
    CHECK(adjoint(koszul).mat == -koszul.mat);

    Operator left = spinor_rep(CliffordElement::generator(sig, 1));
    CHECK(plain.mat * left.mat == left.mat * plain.mat);
    CHECK(koszul.mat * left.mat == -(left.mat * koszul.mat));

    Signature sig3{2, 1};
    for (int i = 1; i <= 3; ++i) {
        Operator r = right_action(sig3, i, RightActionVariant::Plain);
        Operator rk = right_action(sig3, i, RightActionVariant::Koszul);
        CHECK(r.mat * r.mat == Matrix::identity(8));
        CHECK(rk.mat * rk.mat == -Matrix::identity(8));
        CHECK(is_self_adjoint(r));
        CHECK(adjoint(rk).mat == -rk.mat);
        for (int j = 1; j <= 3; ++j) {
            Operator left3 = spinor_rep(CliffordElement::generator(sig3, j));
            CHECK(r.mat * left3.mat == left3.mat * r.mat);
            CHECK(rk.mat * left3.mat == -(left3.mat * rk.mat));
        }
    }
}

TEST_CASE("real equivariance of the spinor representation") {
    SplitMix64 rng(59);
    for (int n = 1; n <= 3; ++n)
        for (int p = 0; p <= n; ++p) {
            Signature sig{p, n - p};
            for (int t = 0; t < 40; ++t) {
                PinElement w = random_pin_element(sig, rng);
                Operator u = spinor_rep(w);
                Operator bar_u = spinor_rep(w.value().real_involution());
                REQUIRE(bar_u == spinor_real_conjugate(sig, u));
            }
        }
}
