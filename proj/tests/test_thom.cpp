#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "realclif/rng.hpp"
#include "realclif/thom.hpp"

using namespace realclif;

TEST_CASE("thom evaluation basics") {
    Signature sig{1, 0};
    ThomFamily fam{sig};

    Operator zero = fam.evaluate({Cyc8(0)});
    CHECK(zero.mat.is_zero());
    GradedKernel k0 = kernel(zero);
    CHECK(k0.even_dim == 1);
    CHECK(k0.odd_dim == 1);

    Operator cl = fam.evaluate({Cyc8(1)});
    Matrix swap(2, 2);
    swap.at(0, 1) = Cyc8(1);
    swap.at(1, 0) = Cyc8(1);
    CHECK(cl.mat == swap);
    CHECK(cl.mat * cl.mat == Matrix::identity(2));
}

TEST_CASE("square equals the squared norm") {
    Signature sig{2, 0};
    Operator cl = thom_evaluate(sig, {Cyc8(3), Cyc8(4)});
    CHECK(cl.mat * cl.mat == Matrix::identity(4).scaled(Cyc8(25)));
    CHECK(is_odd(cl));
    CHECK(is_self_adjoint(cl));

    SplitMix64 rng(73);
    for (int n = 1; n <= 4; ++n)
        for (int p = 0; p <= n; ++p) {
            Signature s{p, n - p};
            for (int t = 0; t < 25; ++t) {
                std::vector<Cyc8> x(static_cast<std::size_t>(n));
                Cyc8 norm;
                for (auto& c : x) {
                    c = Cyc8(rng.range(-3, 3));
                    norm += c * c;
                }
                Operator cl_x = thom_evaluate(s, x);
                REQUIRE(cl_x.mat * cl_x.mat ==
                        Matrix::identity(cl_x.dim()).scaled(norm));
                bool invertible = cl_x.mat.rank() == cl_x.dim();
                bool nonzero = !norm.is_zero();
                REQUIRE(invertible == nonzero);
            }
        }
}

TEST_CASE("linearity and right-action commutation") {
    Signature sig{1, 2};
    SplitMix64 rng(79);
    for (int t = 0; t < 20; ++t) {
        std::vector<Cyc8> x(3), y(3);
        for (auto& c : x) c = Cyc8(rng.range(-3, 3));
        for (auto& c : y) c = Cyc8(rng.range(-3, 3));
        Cyc8 a(rng.range(-2, 2)), b(rng.range(-2, 2));
        std::vector<Cyc8> combo(3);
        for (std::size_t i = 0; i < 3; ++i) combo[i] = a * x[i] + b * y[i];
        CHECK(thom_evaluate(sig, combo).mat ==
              thom_evaluate(sig, x).mat.scaled(a) + thom_evaluate(sig, y).mat.scaled(b));

        for (int i = 1; i <= 3; ++i) {
            Operator r = right_action(sig, i, RightActionVariant::Plain);
            CHECK(thom_evaluate(sig, x).mat * r.mat == r.mat * thom_evaluate(sig, x).mat);
        }
    }
}

TEST_CASE("power family basics") {
    Signature sig{1, 0};
    auto zero2 = std::vector<std::vector<Cyc8>>{{Cyc8(0)}, {Cyc8(0)}};
    CHECK(power_family(sig, 2, zero2).mat.is_zero());

    // cl_{e1} (x) id: the invertible factor forces a zero kernel, matching
    // the tensor-of-kernels rule (ker cl_{e1} = 0).
    auto e1_zero = std::vector<std::vector<Cyc8>>{{Cyc8(1)}, {Cyc8(0)}};
    Operator pf = power_family(sig, 2, e1_zero);
    GradedKernel k = kernel(pf);
    CHECK(k.even_dim == 0);
    CHECK(k.odd_dim == 0);
    CHECK(pf.mat.rank() == 4);

    // with both vectors zero the kernel is everything
    GradedKernel kz = kernel(power_family(sig, 2, zero2));
    CHECK(kz.even_dim == 2);
    CHECK(kz.odd_dim == 2);

    auto e1_e1 = std::vector<std::vector<Cyc8>>{{Cyc8(1)}, {Cyc8(1)}};
    Operator pf2 = power_family(sig, 2, e1_e1);
    CHECK(pf2.mat * pf2.mat == Matrix::identity(4).scaled(Cyc8(2)));

    // tensor sum of two families at nonzero vectors is invertible
    Signature sig2{2, 0};
    Operator s = tensor_sum(thom_evaluate(sig2, {Cyc8(3), Cyc8(4)}),
                            thom_evaluate(sig2, {Cyc8(1), Cyc8(0)}));
    CHECK(s.mat * s.mat == Matrix::identity(16).scaled(Cyc8(26)));
    CHECK(s.mat.rank() == 16);
}

TEST_CASE("theorem-a verifier on the smallest interesting shapes") {
    for (auto [p, q, k] : {std::tuple<int, int, int>{1, 0, 2},
                           {0, 1, 2},
                           {1, 1, 2},
                           {1, 0, 1}}) {
        Report r = verify_theorem_a(p, q, k, 4, 0);
        INFO("p=", p, " q=", q, " k=", k);
        for (const auto& c : r.cases) {
            INFO(c.key, " ", c.detail);
            REQUIRE(c.pass);
        }
    }
}

TEST_CASE("power axioms on small shapes") {
    for (auto [p, q, j, k] : {std::tuple<int, int, int, int>{1, 0, 1, 1},
                              {1, 0, 2, 1},
                              {1, 0, 1, 2},
                              {0, 1, 2, 1},
                              {1, 1, 1, 1}}) {
        Report r = verify_power_axioms(p, q, j, k, 0);
        INFO("p=", p, " q=", q, " j=", j, " k=", k);
        REQUIRE(r.all_pass());
    }
}

TEST_CASE("sampling is deterministic in the seed") {
    auto a = sample_vector_tuples({1, 1}, 2, 6, 42);
    auto b = sample_vector_tuples({1, 1}, 2, 6, 42);
    CHECK(a == b);
    auto c = sample_vector_tuples({1, 1}, 2, 6, 43);
    CHECK(a != c);
    // index 0 is the zero tuple
    for (const auto& v : a[0])
        for (const auto& coord : v) CHECK(coord.is_zero());
}
