#include "realclif/thom.hpp"

#include <stdexcept>

#include "realclif/pin.hpp"
#include "realclif/rng.hpp"
#include "realclif/textio.hpp"

namespace realclif {

Operator ThomFamily::evaluate(const std::vector<Cyc8>& x) const {
    return thom_evaluate(sig, x);
}

Operator thom_evaluate(const Signature& sig, const std::vector<Cyc8>& x) {
    if (static_cast<int>(x.size()) != sig.dim())
        throw std::invalid_argument("thom_evaluate: coordinate count mismatch");
    for (const Cyc8& c : x)
        if (!c.is_real())
            throw std::invalid_argument("thom_evaluate: coordinates must be real");
    return spinor_rep(CliffordElement::from_vector(sig, x));
}

Operator power_family(const Signature& sig, int k,
                      const std::vector<std::vector<Cyc8>>& xs) {
    if (k < 1 || static_cast<int>(xs.size()) != k)
        throw std::invalid_argument("power_family: need one vector per factor");
    if (k * sig.dim() > dimension_cap())
        throw std::invalid_argument("power_family: total dimension exceeds the cap");
    Operator acc = thom_evaluate(sig, xs[0]);
    for (int m = 1; m < k; ++m) acc = tensor_sum(acc, thom_evaluate(sig, xs[static_cast<std::size_t>(m)]));
    return acc;
}

std::vector<Cyc8> concat_reindexed(const Signature& sig, int k,
                                   const std::vector<std::vector<Cyc8>>& xs) {
    std::vector<Cyc8> out(static_cast<std::size_t>(k * sig.dim()));
    for (int j = 0; j < k; ++j)
        for (int i = 1; i <= sig.dim(); ++i)
            out[static_cast<std::size_t>(iso_phi_target_index(sig, k, j, i) - 1)] =
                xs[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)];
    return out;
}

Operator koszul_permutation_operator(const Signature& sig, int k,
                                     const std::vector<int>& perm) {
    std::size_t n = static_cast<std::size_t>(sig.dim());
    std::size_t dim = std::size_t(1) << (static_cast<std::size_t>(k) * n);
    Matrix m(dim, dim);
    std::vector<Monomial> tuple(static_cast<std::size_t>(k));
    std::vector<int> parities(static_cast<std::size_t>(k));
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t rest = col;
        for (int j = k - 1; j >= 0; --j) {
            tuple[static_cast<std::size_t>(j)] = Monomial(rest & ((std::size_t(1) << n) - 1));
            rest >>= n;
        }
        for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j)
            parities[j] = monomial_parity(tuple[j]);
        int sign = koszul_perm_sign(perm, parities);
        std::size_t row = 0;
        for (int j = 0; j < k; ++j) {
            std::size_t slot = static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]);
            // factor j lands in slot perm[j]; rebuild the row index with the
            // first factor most significant
            row |= static_cast<std::size_t>(tuple[static_cast<std::size_t>(j)])
                   << (n * (static_cast<std::size_t>(k) - 1 - slot));
        }
        m.at(row, col) = Cyc8(sign);
    }

    // Product basis of the iterated graded tensor.
    GradedBasis factor = spinor_basis(sig);
    Operator id{factor, Matrix::identity(factor.size())};
    Operator acc = id;
    for (int j = 1; j < k; ++j) acc = graded_tensor(acc, id);
    return Operator{acc.basis, std::move(m)};
}

Operator tensor_power_spinor_action(const Signature& sig, const WreathElement& w) {
    int k = w.factors();
    Operator acc = spinor_rep(lift_signed_permutation(sig, w.blocks[0]));
    for (int j = 1; j < k; ++j)
        acc = graded_tensor(acc, spinor_rep(lift_signed_permutation(sig, w.blocks[static_cast<std::size_t>(j)])));
    Operator perm_op = koszul_permutation_operator(sig, k, w.perm);
    return Operator{acc.basis, perm_op.mat * acc.mat};
}

std::vector<std::vector<std::vector<Cyc8>>> sample_vector_tuples(
    const Signature& sig, int k, int count, std::uint64_t seed) {
    std::size_t n = static_cast<std::size_t>(sig.dim());
    std::vector<std::vector<std::vector<Cyc8>>> tuples;
    auto zero_tuple = std::vector<std::vector<Cyc8>>(
        static_cast<std::size_t>(k), std::vector<Cyc8>(n, Cyc8(0)));
    tuples.push_back(zero_tuple);
    // Standard basis tuples: factor j gets e_{(j mod n)+1}.
    auto basis_tuple = zero_tuple;
    if (n > 0)
        for (int j = 0; j < k; ++j)
            basis_tuple[static_cast<std::size_t>(j)][static_cast<std::size_t>(j) % n] = Cyc8(1);
    tuples.push_back(basis_tuple);

    SplitMix64 rng(mix_seed({seed, 0x7f0e, std::uint64_t(sig.p), std::uint64_t(sig.q),
                             std::uint64_t(k)}));
    while (static_cast<int>(tuples.size()) < count) {
        std::vector<std::vector<Cyc8>> t;
        t.reserve(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            std::vector<Cyc8> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = Cyc8(rng.range(-3, 3));
            t.push_back(std::move(v));
        }
        tuples.push_back(std::move(t));
    }
    tuples.resize(static_cast<std::size_t>(count));
    return tuples;
}

namespace {

std::string case_prefix(int p, int q, int k) {
    return "p" + std::to_string(p) + "q" + std::to_string(q) + "k" + std::to_string(k);
}

std::string pad2(std::size_t v) { return (v < 10 ? "0" : "") + std::to_string(v); }

// Random sparse tensor elements with small integer lattice coefficients.
TensorElement random_tensor_element(const Signature& sig, int k, SplitMix64& rng) {
    std::size_t n = static_cast<std::size_t>(sig.dim());
    TensorElement t(sig, k);
    int terms = static_cast<int>(rng.below(3)) + 1;
    for (int s = 0; s < terms; ++s) {
        std::vector<Monomial> tuple(static_cast<std::size_t>(k));
        for (auto& m : tuple) m = Monomial(rng.below(std::uint64_t(1) << n));
        Cyc8 c(Rational(rng.range(-2, 2)), Rational(rng.range(-2, 2)),
               Rational(rng.range(-2, 2)), Rational(rng.range(-2, 2)));
        t.add_term(tuple, c);
    }
    return t;
}

} // namespace

Report verify_theorem_a(int p, int q, int k, int samples, std::uint64_t seed) {
    Signature sig{p, q};
    check_signature(sig);
    if (k < 1 || k * sig.dim() > dimension_cap())
        throw std::invalid_argument("verify_theorem_a: k(p+q) exceeds the cap");
    Report report;
    report.suite = "theorem-a";
    std::string prefix = case_prefix(p, q, k);
    Signature target{k * p, k * q};

    SplitMix64 rng(mix_seed({seed, 0xA11CE, std::uint64_t(p), std::uint64_t(q),
                             std::uint64_t(k)}));

    // (a) iso_phi is a graded Real algebra isomorphism.
    {
        bool ok = true;
        std::string detail;
        for (int s = 0; s < samples && ok; ++s) {
            TensorElement a = random_tensor_element(sig, k, rng);
            TensorElement b = random_tensor_element(sig, k, rng);
            if (iso_phi(a * b) != iso_phi(a) * iso_phi(b)) {
                ok = false;
                detail = "multiplicativity failed";
            }
            if (ok && iso_phi(a.real_involution()) != iso_phi(a).real_involution()) {
                ok = false;
                detail = "Real involution not intertwined";
            }
            if (ok && iso_phi_inv(iso_phi(a), sig, k) != a) {
                ok = false;
                detail = "inverse roundtrip failed";
            }
            if (ok) {
                auto pa = a.parity(), pim = iso_phi(a).parity();
                if (pa && (!pim || *pim != *pa)) {
                    ok = false;
                    detail = "grading not preserved";
                }
            }
        }
        if (ok && iso_phi(TensorElement::unit(sig, k)) !=
                      CliffordElement::scalar(target, Cyc8(1))) {
            ok = false;
            detail = "unit not preserved";
        }
        report.add(prefix + "/a-iso", ok, detail);

        Report equivariance = verify_phi_equivariance(p, q, k);
        for (const auto& c : equivariance.cases)
            report.add(prefix + "/a-equivariance/" + c.key.substr(c.key.find('/') + 1),
                       c.pass, c.detail);
    }

    Matrix phi = iso_phi_matrix(sig, k);
    auto tuples = sample_vector_tuples(sig, k, samples, seed);

    // (b) the isomorphism intertwines the power family with the restricted
    // Thom family.
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        Operator pf = power_family(sig, k, tuples[t]);
        Operator cl = thom_evaluate(target, concat_reindexed(sig, k, tuples[t]));
        bool ok = phi * pf.mat == cl.mat * phi;
        std::string detail;
        if (!ok)
            detail = "power family dump:\n" + operator_dump(pf) +
                     "restricted family dump:\n" + operator_dump(cl);
        report.add(prefix + "/b-family/sample" + pad2(t), ok, detail);
    }

    // (c) projective equivariance: the restricted spinor action of the lift
    // matches the Koszul tensor-power action up to a measured mu8 scalar
    // and, when the factor permutation is nontrivial, the right-multiplication
    // twist of the permutation lift (the Koszul permutation operator carries
    // the algebra automorphism, not a left multiplication).
    Matrix phi_inv = phi.transpose();  // signed permutation matrix
    auto generators = default_wreath_generators(sig, k);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const WreathElement& w = generators[g];
        PinElement lift = lift_signed_permutation(target, wreath_embed(sig, w));
        Matrix lhs = spinor_rep(lift).mat * phi;

        WreathElement perm_part = WreathElement::identity(sig, k);
        perm_part.perm = w.perm;
        PinElement perm_lift = lift_signed_permutation(target, wreath_embed(sig, perm_part));
        Matrix twist = right_mult(perm_lift.value()).mat;
        if (perm_lift.parity()) twist = parity_operator(target).mat * twist;

        Matrix rhs = phi * tensor_power_spinor_action(sig, w).mat * phi_inv * twist * phi;
        bool ok = true;
        std::string detail;
        // lhs = lambda * rhs with lambda in mu8.
        Cyc8 lambda;
        bool found = false;
        for (std::size_t i = 0; i < rhs.rows() && !found; ++i)
            for (std::size_t j = 0; j < rhs.cols() && !found; ++j)
                if (!rhs.at(i, j).is_zero()) {
                    lambda = lhs.at(i, j) / rhs.at(i, j);
                    found = true;
                }
        bool trivial_perm = perm_lift.parity() == 0 && perm_lift.value().is_scalar();
        if (!found) {
            ok = false;
            detail = "tensor action vanished";
        } else if (lhs != rhs.scaled(lambda)) {
            ok = false;
            detail = "sides differ by more than a scalar; generator " + w.str() +
                     "\nlhs dump:\n" + operator_dump(Operator{spinor_basis(target), lhs}) +
                     "rhs dump:\n" + operator_dump(Operator{spinor_basis(target), rhs});
        } else if (auto e = lambda.mu8_exponent(); !e) {
            ok = false;
            detail = "scalar " + to_string(lambda) + " is not in mu8";
        } else {
            detail = "lambda=z^" + std::to_string(*e);
            if (!trivial_perm)
                detail += ", perm twist by " + to_string(perm_lift.value()) +
                          " (parity " + std::to_string(perm_lift.parity()) + ")";
        }
        report.add(prefix + "/c-projective/gen" + pad2(g), ok, detail);
    }

    // (d) conjugation equivariance of the family on R^{kp,kq}.
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const WreathElement& w = generators[g];
        OrthogonalMatrix big = wreath_embed(sig, w);
        PinElement lift = lift_signed_permutation(target, big);
        Operator u = spinor_rep(lift);
        Matrix u_inv = u.mat.conj_transpose();
        bool ok = true;
        std::string detail;
        for (std::size_t t = 0; t < tuples.size() && ok; ++t) {
            std::vector<Cyc8> x = concat_reindexed(sig, k, tuples[t]);
            std::vector<Cyc8> gx = big.matrix().apply(x);
            Matrix conj = u.mat * thom_evaluate(target, x).mat * u_inv;
            if (lift.parity()) conj = -conj;
            if (conj != thom_evaluate(target, gx).mat) {
                ok = false;
                detail = "generator " + w.str() + " sample " + std::to_string(t) +
                         "\nconjugated dump:\n" +
                         operator_dump(Operator{spinor_basis(target), conj}) +
                         "expected dump:\n" + operator_dump(thom_evaluate(target, gx));
            }
        }
        report.add(prefix + "/d-conjugation/gen" + pad2(g), ok, detail);
    }

    report.sort_cases();
    return report;
}

Report verify_power_axioms(int p, int q, int j, int k, std::uint64_t seed) {
    Signature sig{p, q};
    check_signature(sig);
    if (j < 1 || k < 1 || (j + k) * sig.dim() > dimension_cap() ||
        j * k * sig.dim() > dimension_cap())
        throw std::invalid_argument("verify_power_axioms: dimensions exceed the cap");
    Report report;
    report.suite = "power-axioms";
    std::string prefix = "p" + std::to_string(p) + "q" + std::to_string(q) +
                         "j" + std::to_string(j) + "k" + std::to_string(k);

    const int samples = 4;

    // (alpha): P_{j+k}(xs ++ ys) = tensor_sum(P_j(xs), P_k(ys)).
    {
        auto xs = sample_vector_tuples(sig, j, samples, mix_seed({seed, 1}));
        auto ys = sample_vector_tuples(sig, k, samples, mix_seed({seed, 2}));
        for (int s = 0; s < samples; ++s) {
            auto joined = xs[static_cast<std::size_t>(s)];
            for (const auto& v : ys[static_cast<std::size_t>(s)]) joined.push_back(v);
            Operator whole = power_family(sig, j + k, joined);
            Operator split = tensor_sum(power_family(sig, j, xs[static_cast<std::size_t>(s)]),
                                        power_family(sig, k, ys[static_cast<std::size_t>(s)]));
            bool ok = whole.mat == split.mat;
            report.add(prefix + "/alpha/sample" + pad2(static_cast<std::size_t>(s)), ok,
                       ok ? "" : "tensor_sum of partial powers differs from the joint power");
        }
    }

    // (beta): P_{jk}(flat) equals the j-fold tensor_sum of k-fold powers.
    {
        auto flat = sample_vector_tuples(sig, j * k, samples, mix_seed({seed, 3}));
        for (int s = 0; s < samples; ++s) {
            const auto& tuple = flat[static_cast<std::size_t>(s)];
            Operator whole = power_family(sig, j * k, tuple);
            Operator nested = power_family(
                sig, k, std::vector<std::vector<Cyc8>>(tuple.begin(), tuple.begin() + k));
            for (int a = 1; a < j; ++a) {
                auto first = tuple.begin() + static_cast<std::ptrdiff_t>(a) * k;
                nested = tensor_sum(nested,
                                    power_family(sig, k, std::vector<std::vector<Cyc8>>(
                                                            first, first + k)));
            }
            bool ok = whole.mat == nested.mat;
            report.add(prefix + "/beta/sample" + pad2(static_cast<std::size_t>(s)), ok,
                       ok ? "" : "nested powers differ from the flat power");
        }
    }

    report.sort_cases();
    return report;
}

} // namespace realclif
