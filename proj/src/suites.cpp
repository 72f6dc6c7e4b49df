#include "realclif/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <stdexcept>

#include "realclif/extension.hpp"
#include "realclif/textio.hpp"
#include "realclif/thom.hpp"
#include "realclif/wreath.hpp"

namespace realclif {

std::vector<Cyc8> random_unit_vector(const Signature& sig, SplitMix64& rng) {
    std::size_t n = static_cast<std::size_t>(sig.dim());
    std::vector<Cyc8> v(n);
    int kind = static_cast<int>(rng.below(n >= 4 ? 4 : (n >= 2 ? 3 : 1)));
    auto sgn = [&]() { return rng.below(2) ? Cyc8(-1) : Cyc8(1); };
    switch (kind) {
        case 0: {
            v[rng.below(n)] = sgn();
            break;
        }
        case 1: {
            std::size_t i = rng.below(n), j = rng.below(n - 1);
            if (j >= i) ++j;
            Cyc8 inv_sqrt2 = Cyc8::sqrt2().inverse();
            v[i] = sgn() * inv_sqrt2;
            v[j] = sgn() * inv_sqrt2;
            break;
        }
        case 2: {
            std::size_t i = rng.below(n), j = rng.below(n - 1);
            if (j >= i) ++j;
            v[i] = sgn() * Cyc8(Rational(3, 5));
            v[j] = sgn() * Cyc8(Rational(4, 5));
            break;
        }
        default: {
            // four coordinates of 1/2 each
            std::vector<std::size_t> idx(n);
            for (std::size_t i = 0; i < n; ++i) idx[i] = i;
            for (std::size_t i = n - 1; i > 0; --i)
                std::swap(idx[i], idx[rng.below(i + 1)]);
            for (int t = 0; t < 4; ++t) v[idx[static_cast<std::size_t>(t)]] = sgn() * Cyc8(Rational(1, 2));
            break;
        }
    }
    return v;
}

PinElement random_pin_element(const Signature& sig, SplitMix64& rng, int max_factors) {
    int factors = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_factors)));
    CliffordElement value =
        CliffordElement::scalar(sig, Cyc8::zeta(static_cast<int>(rng.below(8))));
    CliffordElement inverse =
        CliffordElement::scalar(sig, value.scalar_part().inverse());
    for (int f = 0; f < factors; ++f) {
        CliffordElement vec = CliffordElement::from_vector(sig, random_unit_vector(sig, rng));
        value = value * vec;
        inverse = vec * inverse;  // unit vectors square to 1
    }
    return PinElement(std::move(value), std::move(inverse));
}

Operator random_odd_self_adjoint(std::size_t even_dim, std::size_t odd_dim,
                                 SplitMix64& rng) {
    GradedBasis basis;
    for (std::size_t i = 0; i < even_dim; ++i) {
        basis.labels.push_back("u" + std::to_string(i));
        basis.parity.push_back(0);
    }
    for (std::size_t i = 0; i < odd_dim; ++i) {
        basis.labels.push_back("v" + std::to_string(i));
        basis.parity.push_back(1);
    }
    Matrix m(even_dim + odd_dim, even_dim + odd_dim);
    for (std::size_t i = 0; i < even_dim; ++i)
        for (std::size_t j = 0; j < odd_dim; ++j) {
            Cyc8 b = Cyc8(Rational(rng.range(-2, 2)), Rational(), Rational(rng.range(-2, 2)),
                          Rational());  // Gaussian integer a + b*i
            m.at(i, even_dim + j) = b;
            m.at(even_dim + j, i) = b.conjugate();
        }
    return Operator{std::move(basis), std::move(m)};
}

Report run_grading_identity_suite(std::uint64_t seed) {
    Report report;
    report.suite = "grading-identity";
    for (int n = 1; n <= 4; ++n)
        for (int p = 0; p <= n; ++p) {
            Signature sig{p, n - p};
            SplitMix64 rng(mix_seed({seed, 0x9AD1, std::uint64_t(p), std::uint64_t(n - p)}));
            bool ok = true;
            std::string detail;
            bool hom_ok = true;
            for (int s = 0; s < 1000 && ok; ++s) {
                PinElement w = random_pin_element(sig, rng);
                Cyc8 det = w.twisted_adjoint().det();
                Cyc8 expect = w.parity() ? Cyc8(-1) : Cyc8(1);
                if (det != expect) {
                    ok = false;
                    detail = "det(Ad) != (-1)^parity for " + to_string(w.value());
                }
                if (ok && s % 50 == 0) {
                    // homomorphism spot check alongside
                    PinElement w2 = random_pin_element(sig, rng);
                    PinElement prod(w.value() * w2.value(),
                                    w2.value_inverse() * w.value_inverse());
                    if (prod.twisted_adjoint() !=
                        w.twisted_adjoint() * w2.twisted_adjoint()) {
                        hom_ok = false;
                        ok = false;
                        detail = "Ad not multiplicative";
                    }
                }
            }
            (void)hom_ok;
            report.add("p" + std::to_string(p) + "q" + std::to_string(n - p), ok,
                       ok ? "1000 elements" : detail);
        }
    report.sort_cases();
    return report;
}

Report run_lift_roundtrip_suite(std::uint64_t seed) {
    Report report;
    report.suite = "lift-roundtrip";
    for (int n = 1; n <= 4; ++n)
        for (int p = 0; p <= n; ++p) {
            Signature sig{p, n - p};
            bool ok = true;
            std::string detail;
            std::size_t count = 0;
            if (n <= 3) {
                std::vector<int> perm(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
                do {
                    for (std::uint32_t mask = 0; mask < (1u << n) && ok; ++mask) {
                        SignedPermutation sp;
                        sp.perm = perm;
                        sp.sign.resize(static_cast<std::size_t>(n));
                        for (int i = 0; i < n; ++i)
                            sp.sign[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
                        PinElement w = lift_signed_permutation(sig, sp);
                        if (w.twisted_adjoint() != sp.to_orthogonal()) {
                            ok = false;
                            detail = "roundtrip failed at " + sp.str();
                        }
                        ++count;
                    }
                } while (ok && std::next_permutation(perm.begin(), perm.end()));
            } else {
                SplitMix64 rng(mix_seed({seed, 0x11F7, std::uint64_t(p)}));
                for (int s = 0; s < 200 && ok; ++s) {
                    SignedPermutation sp = SignedPermutation::identity(4);
                    for (std::size_t i = 3; i > 0; --i)
                        std::swap(sp.perm[i], sp.perm[rng.below(i + 1)]);
                    for (auto& sgn : sp.sign)
                        if (rng.below(2)) sgn = -1;
                    PinElement w = lift_signed_permutation(sig, sp);
                    if (w.twisted_adjoint() != sp.to_orthogonal()) {
                        ok = false;
                        detail = "roundtrip failed at " + sp.str();
                    }
                    ++count;
                }
            }
            report.add("p" + std::to_string(p) + "q" + std::to_string(n - p), ok,
                       ok ? std::to_string(count) + " lifts" : detail);
        }
    report.sort_cases();
    return report;
}

Report run_unitarity_suite() {
    Report report;
    report.suite = "unitarity";
    for (int n = 1; n <= 6; ++n)
        for (int p = 0; p <= n; ++p) {
            Signature sig{p, n - p};
            bool ok = true;
            std::string detail;
            for (int i = 1; i <= n && ok; ++i) {
                Operator gamma = spinor_rep(CliffordElement::generator(sig, i));
                if (!is_unitary(gamma)) {
                    ok = false;
                    detail = "generator e" + std::to_string(i) + " not unitary";
                } else if (!is_self_adjoint(gamma)) {
                    ok = false;
                    detail = "generator e" + std::to_string(i) + " not self-adjoint";
                } else if (!is_odd(gamma)) {
                    ok = false;
                    detail = "generator e" + std::to_string(i) + " not odd";
                }
            }
            report.add("p" + std::to_string(p) + "q" + std::to_string(n - p), ok, detail);
        }
    report.sort_cases();
    return report;
}

Report run_kernel_multiplicativity_suite(std::uint64_t seed) {
    Report report;
    report.suite = "kernel-multiplicativity";
    SplitMix64 rng(mix_seed({seed, 0x6E51}));
    for (int s = 0; s < 100; ++s) {
        std::size_t e1 = 1 + rng.below(3), o1 = 1 + rng.below(3);
        std::size_t e2 = 1 + rng.below(3), o2 = 1 + rng.below(3);
        Operator f = random_odd_self_adjoint(e1, o1, rng);
        Operator g = random_odd_self_adjoint(e2, o2, rng);
        Operator s_op = tensor_sum(f, g);
        GradedKernel kf = kernel(f), kg = kernel(g), ks = kernel(s_op);
        bool ok = ks.even_dim == kf.even_dim * kg.even_dim + kf.odd_dim * kg.odd_dim &&
                  ks.odd_dim == kf.even_dim * kg.odd_dim + kf.odd_dim * kg.even_dim;
        // Tensor products of kernel vectors must lie in the kernel.
        std::size_t dg = g.dim();
        for (const auto& v : kf.basis)
            for (const auto& w : kg.basis) {
                if (!ok) break;
                std::vector<Cyc8> vw(f.dim() * dg);
                for (std::size_t i = 0; i < f.dim(); ++i)
                    for (std::size_t j = 0; j < dg; ++j) vw[i * dg + j] = v[i] * w[j];
                for (const Cyc8& c : s_op.mat.apply(vw))
                    if (!c.is_zero()) {
                        ok = false;
                        break;
                    }
            }
        // Square identity comes along for free in the same sample.
        if (ok) {
            Operator f2 = Operator{f.basis, f.mat * f.mat};
            Operator g2 = Operator{g.basis, g.mat * g.mat};
            Matrix expect = graded_tensor(f2, identity_operator(g.basis)).mat +
                            graded_tensor(identity_operator(f.basis), g2).mat;
            ok = s_op.mat * s_op.mat == expect;
        }
        report.add("sample" + std::string(s < 10 ? "0" : "") + std::to_string(s), ok,
                   ok ? "" : "dims or kernel vectors disagree:\n" + operator_dump(s_op));
    }
    report.sort_cases();
    return report;
}

Report run_morita_suite() {
    Report report;
    report.suite = "morita";
    for (int n = 0; n <= 3; ++n)
        for (int p = 0; p <= n; ++p) {
            Signature sig{p, n - p};
            bool ok = true;
            std::string detail;
            try {
                MoritaWitness w = morita_one_one(sig);
                auto failures = verify_morita(w);
                if (!failures.empty()) {
                    ok = false;
                    detail = failures.front();
                }
            } catch (const std::exception& e) {
                ok = false;
                detail = e.what();
            }
            report.add("p" + std::to_string(p) + "q" + std::to_string(n - p), ok, detail);
        }
    report.sort_cases();
    return report;
}

Report run_extension_suite() {
    Report report;
    report.suite = "extension";
    for (int n = 1; n <= 4; ++n)
        for (int p = 0; p <= n; ++p) {
            Signature sig{p, n - p};
            // Exhaustive checks are cubic in |B_4|; three signatures cover
            // the q = 0, mixed and p = 0 involutions at that rank.
            if (n == 4 && p != 4 && p != 2 && p != 0) continue;
            FiniteGradedExtension ext = from_pin_lifts(n, sig);
            Report sub = verify_cocycle(ext);
            for (const auto& c : sub.cases) report.add(c.key, c.pass, c.detail);
        }
    {
        FiniteGradedExtension b2 = from_pin_lifts(2, Signature{2, 0});
        Report sub = verify_cocycle(tensor_same_group(b2, b2));
        for (const auto& c : sub.cases) report.add(c.key, c.pass, c.detail);
    }
    {
        FiniteGradedExtension b1 = from_pin_lifts(1, Signature{1, 0});
        FiniteGradedExtension b2 = from_pin_lifts(2, Signature{1, 1});
        Report sub = verify_cocycle(tensor_product_group(b1, b2));
        for (const auto& c : sub.cases) report.add(c.key, c.pass, c.detail);
    }
    report.sort_cases();
    return report;
}

std::vector<Report> run_theorem_a_suite(const SuiteOptions& opt) {
    std::vector<Report> reports;
    for (int total = 1; total <= opt.max_total; ++total)
        for (int p = 0; p <= total; ++p)
            for (int k = 2; k * total <= opt.max_total; ++k)
                reports.push_back(verify_theorem_a(p, total - p, k, opt.samples, opt.seed));
    return reports;
}

std::vector<Report> run_power_axiom_suite(const SuiteOptions& opt) {
    std::vector<Report> reports;
    for (int total = 1; total <= opt.max_total; ++total)
        for (int p = 0; p <= total; ++p)
            for (int j = 1; j * total <= opt.max_total; ++j)
                for (int k = 1; (j + k) * total <= opt.max_total && j * k * total <= opt.max_total;
                     ++k)
                    reports.push_back(
                        verify_power_axioms(p, total - p, j, k, opt.seed));
    return reports;
}

namespace {

Report merge_reports(std::string suite, const std::vector<Report>& parts) {
    Report merged;
    merged.suite = std::move(suite);
    for (const Report& r : parts)
        for (const CaseResult& c : r.cases) merged.cases.push_back(c);
    merged.sort_cases();
    return merged;
}

} // namespace

std::vector<Report> run_all_suites(const SuiteOptions& opt) {
    // Each entry is an independent pure computation; jobs > 1 only reorders
    // the evaluation, never the output.
    std::vector<std::function<Report()>> tasks;
    tasks.push_back([&] { return merge_reports("theorem-a", run_theorem_a_suite(opt)); });
    tasks.push_back([&] { return merge_reports("power-axioms", run_power_axiom_suite(opt)); });
    tasks.push_back([&] { return run_grading_identity_suite(opt.seed); });
    tasks.push_back([&] { return run_lift_roundtrip_suite(opt.seed); });
    tasks.push_back([&] { return run_unitarity_suite(); });
    tasks.push_back([&] { return run_kernel_multiplicativity_suite(opt.seed); });
    tasks.push_back([&] { return run_morita_suite(); });
    tasks.push_back([&] { return run_extension_suite(); });

    std::vector<Report> results(tasks.size());
    if (opt.jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> next{0};
        // Simple shared-counter pool: results are written by task index.
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                results[i] = tasks[i]();
            }
        };
        std::vector<std::future<void>> pool;
        for (int t = 0; t < opt.jobs; ++t)
            pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    }
    return results;
}

} // namespace realclif
