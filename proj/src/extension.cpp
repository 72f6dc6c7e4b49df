#include "realclif/extension.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "realclif/textio.hpp"

namespace realclif {

namespace {

std::vector<SignedPermutation> enumerate_bn(int n) {
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<SignedPermutation> elems;
    std::vector<int> perm = base;
    do {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            SignedPermutation sp;
            sp.perm = perm;
            sp.sign.resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                sp.sign[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
            elems.push_back(std::move(sp));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return elems;
}

// mu8 exponent table of a cocycle; a failing entry is reported by index pair.
std::vector<std::vector<int>> cocycle_exponents(const FiniteGradedExtension& ext,
                                                std::string* error) {
    std::vector<std::vector<int>> exp(ext.size(), std::vector<int>(ext.size(), 0));
    for (std::size_t g = 0; g < ext.size(); ++g)
        for (std::size_t h = 0; h < ext.size(); ++h) {
            auto e = ext.cocycle[g][h].mu8_exponent();
            if (!e) {
                if (error)
                    *error = "cocycle(" + ext.labels[g] + ", " + ext.labels[h] +
                             ") = " + to_string(ext.cocycle[g][h]) + " is not in mu8";
                return {};
            }
            exp[g][h] = *e;
        }
    return exp;
}

} // namespace

FiniteGradedExtension from_pin_lifts(int n, Signature sig) {
    if (sig.dim() != n) throw std::invalid_argument("from_pin_lifts: n must equal p+q");
    if (n < 1 || n > 4)
        throw std::invalid_argument("from_pin_lifts: n must be between 1 and 4");

    std::vector<SignedPermutation> elems = enumerate_bn(n);
    std::map<SignedPermutation, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);

    FiniteGradedExtension ext;
    ext.name = "pin-lifts-B" + std::to_string(n) + "-p" + std::to_string(sig.p) + "q" +
               std::to_string(sig.q);
    std::size_t m = elems.size();
    ext.labels.reserve(m);
    ext.grading.reserve(m);
    ext.involution.reserve(m);

    std::vector<CliffordElement> lifts;
    lifts.reserve(m);
    for (const SignedPermutation& sp : elems) {
        ext.labels.push_back(sp.str());
        ext.grading.push_back(sp.det() < 0 ? 1 : 0);
        ext.involution.push_back(index.at(sp.conjugated(sig)));
        lifts.push_back(lift_signed_permutation(sig, sp).value());
    }

    // Real-equivariant gauge.  Block-preserving elements have canonical
    // lifts fixed by the involution; every swapped orbit transports the
    // representative's lift so that bar(lift(g)) = lift(conj g) throughout.
    for (std::size_t g = 0; g < m; ++g) {
        std::size_t cg = static_cast<std::size_t>(ext.involution[g]);
        if (cg == g) {
            if (lifts[g].real_involution() != lifts[g])
                throw std::logic_error("from_pin_lifts: canonical lift of a conjugation-fixed "
                                       "element is not bar-fixed");
        } else if (cg > g) {
            lifts[cg] = lifts[g].real_involution();
        }
    }

    // The product of two adjoint-verified lifts is a scalar multiple of the
    // lifted product, so the scalar shows on any single monomial.  Full
    // product equality is re-checked on every pair for small groups and on a
    // deterministic sample for B_4.
    auto product_coefficient = [](const CliffordElement& a, const CliffordElement& b,
                                  Monomial target) {
        Cyc8 acc;
        for (const auto& [ma, ca] : a.terms()) {
            Cyc8 cb = b.coefficient(ma ^ target);
            if (cb.is_zero()) continue;
            auto [mono, sign] = monomial_product(ma, ma ^ target);
            Cyc8 t = ca * cb;
            acc += sign < 0 ? -t : t;
        }
        return acc;
    };

    ext.mult.assign(m, std::vector<int>(m, 0));
    ext.cocycle.assign(m, std::vector<Cyc8>(m));
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t h = 0; h < m; ++h) {
            int gh = index.at(elems[g].compose(elems[h]));
            ext.mult[g][h] = gh;
            const CliffordElement& ref = lifts[static_cast<std::size_t>(gh)];
            Monomial lead = ref.terms().begin()->first;
            Cyc8 c = product_coefficient(lifts[g], lifts[h], lead) / ref.coefficient(lead);
            bool check_full = m <= 48 || (g * 31 + h) % 97 == 0;
            if (!c.mu8_exponent() ||
                (check_full && lifts[g] * lifts[h] != ref.scaled(c)))
                throw std::logic_error("from_pin_lifts: lift product is not a mu8 multiple "
                                       "of the lifted product");
            ext.cocycle[g][h] = c;
        }
    return ext;
}

FiniteGradedExtension trivial_extension(const FiniteGradedExtension& like) {
    FiniteGradedExtension ext = like;
    ext.name = like.name + "-trivialized";
    ext.grading.assign(ext.size(), 0);
    ext.cocycle.assign(ext.size(), std::vector<Cyc8>(ext.size(), Cyc8(1)));
    return ext;
}

Report verify_cocycle(const FiniteGradedExtension& ext) {
    Report report;
    report.suite = "extension";
    std::size_t m = ext.size();
    std::string prefix = ext.name.empty() ? "extension" : ext.name;

    std::string mu8_error;
    auto exp = cocycle_exponents(ext, &mu8_error);
    if (exp.empty()) {
        report.add(prefix + "/mu8", false, mu8_error);
        return report;
    }
    report.add(prefix + "/mu8", true, std::to_string(m * m) + " values in mu8");

    {
        bool ok = true;
        std::string detail;
        for (std::size_t g = 0; g < m && ok; ++g)
            if (exp[0][g] != 0 || exp[g][0] != 0) {
                ok = false;
                detail = "not normalized at " + ext.labels[g];
            }
        report.add(prefix + "/normalized", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        std::size_t checked = 0;
        for (std::size_t g = 0; g < m && ok; ++g)
            for (std::size_t h = 0; h < m && ok; ++h) {
                int gh = ext.mult[g][h];
                int base = exp[g][h];
                for (std::size_t l = 0; l < m; ++l) {
                    int lhs = base + exp[static_cast<std::size_t>(gh)][l];
                    int rhs = exp[h][l] + exp[g][static_cast<std::size_t>(ext.mult[h][l])];
                    if ((lhs - rhs) % 8 != 0) {
                        ok = false;
                        detail = "2-cocycle identity fails at triple (" + ext.labels[g] +
                                 ", " + ext.labels[h] + ", " + ext.labels[l] + ")";
                        break;
                    }
                    ++checked;
                }
            }
        report.add(prefix + "/cocycle-identity", ok,
                   ok ? std::to_string(checked) + " triples checked" : detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (std::size_t g = 0; g < m && ok; ++g)
            for (std::size_t h = 0; h < m; ++h)
                if (ext.grading[static_cast<std::size_t>(ext.mult[g][h])] !=
                    (ext.grading[g] ^ ext.grading[h])) {
                    ok = false;
                    detail = "grading fails at (" + ext.labels[g] + ", " + ext.labels[h] + ")";
                    break;
                }
        report.add(prefix + "/grading-homomorphism", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (std::size_t g = 0; g < m && ok; ++g) {
            std::size_t cg = static_cast<std::size_t>(ext.involution[g]);
            if (ext.involution[cg] != static_cast<int>(g) ||
                ext.grading[cg] != ext.grading[g]) {
                ok = false;
                detail = "involution is not a grading-preserving involution at " +
                         ext.labels[g];
                break;
            }
            for (std::size_t h = 0; h < m; ++h) {
                std::size_t ch = static_cast<std::size_t>(ext.involution[h]);
                if (ext.mult[cg][ch] != ext.involution[static_cast<std::size_t>(ext.mult[g][h])]) {
                    ok = false;
                    detail = "involution is not a homomorphism at (" + ext.labels[g] +
                             ", " + ext.labels[h] + ")";
                    break;
                }
                if ((exp[cg][ch] + exp[g][h]) % 8 != 0) {
                    ok = false;
                    detail = "Real compatibility fails at (" + ext.labels[g] + ", " +
                             ext.labels[h] + ")";
                    break;
                }
            }
        }
        report.add(prefix + "/real-compatibility", ok, detail);
    }

    report.sort_cases();
    return report;
}

namespace {

void require_same_group(const FiniteGradedExtension& a, const FiniteGradedExtension& b) {
    if (a.size() != b.size() || a.mult != b.mult || a.involution != b.involution)
        throw std::invalid_argument("extension tensor: underlying groups differ");
}

} // namespace

FiniteGradedExtension tensor_same_group(const FiniteGradedExtension& a,
                                        const FiniteGradedExtension& b) {
    require_same_group(a, b);
    FiniteGradedExtension r = a;
    r.name = a.name + "(x)" + b.name;
    for (std::size_t g = 0; g < r.size(); ++g) {
        r.grading[g] = a.grading[g] ^ b.grading[g];
        for (std::size_t h = 0; h < r.size(); ++h) {
            Cyc8 c = a.cocycle[g][h] * b.cocycle[g][h];
            // Braiding swaps the second fiber of g past the first fiber of h.
            if (b.grading[g] && a.grading[h]) c = -c;
            r.cocycle[g][h] = c;
        }
    }
    return r;
}

FiniteGradedExtension tensor_product_group(const FiniteGradedExtension& a,
                                           const FiniteGradedExtension& b) {
    FiniteGradedExtension r;
    r.name = a.name + "[x]" + b.name;
    std::size_t na = a.size(), nb = b.size(), n = na * nb;
    r.labels.reserve(n);
    r.grading.reserve(n);
    r.involution.reserve(n);
    for (std::size_t g1 = 0; g1 < na; ++g1)
        for (std::size_t g2 = 0; g2 < nb; ++g2) {
            r.labels.push_back(a.labels[g1] + "|" + b.labels[g2]);
            r.grading.push_back(a.grading[g1] ^ b.grading[g2]);
            r.involution.push_back(static_cast<int>(
                static_cast<std::size_t>(a.involution[g1]) * nb +
                static_cast<std::size_t>(b.involution[g2])));
        }
    r.mult.assign(n, std::vector<int>(n, 0));
    r.cocycle.assign(n, std::vector<Cyc8>(n));
    for (std::size_t g1 = 0; g1 < na; ++g1)
        for (std::size_t g2 = 0; g2 < nb; ++g2)
            for (std::size_t h1 = 0; h1 < na; ++h1)
                for (std::size_t h2 = 0; h2 < nb; ++h2) {
                    std::size_t g = g1 * nb + g2, h = h1 * nb + h2;
                    r.mult[g][h] = static_cast<int>(
                        static_cast<std::size_t>(a.mult[g1][h1]) * nb +
                        static_cast<std::size_t>(b.mult[g2][h2]));
                    Cyc8 c = a.cocycle[g1][h1] * b.cocycle[g2][h2];
                    if (b.grading[g2] && a.grading[h1]) c = -c;
                    r.cocycle[g][h] = c;
                }
    return r;
}

std::string extension_to_json(const FiniteGradedExtension& ext) {
    std::string mu8_error;
    auto exp = cocycle_exponents(ext, &mu8_error);
    if (exp.empty())
        throw std::invalid_argument("extension_to_json: " + mu8_error);
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["kind"] = "graded-extension";
    doc["name"] = ext.name;
    doc["labels"] = ext.labels;
    doc["grading"] = ext.grading;
    doc["involution"] = ext.involution;
    doc["mult"] = ext.mult;
    doc["cocycle_mu8_exponents"] = exp;
    return doc.dump(2) + "\n";
}

FiniteGradedExtension extension_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (doc.value("kind", "") != "graded-extension")
        throw std::invalid_argument("extension_from_json: not an extension dump");
    FiniteGradedExtension ext;
    ext.name = doc.value("name", "loaded");
    ext.labels = doc.at("labels").get<std::vector<std::string>>();
    ext.grading = doc.at("grading").get<std::vector<int>>();
    ext.involution = doc.at("involution").get<std::vector<int>>();
    ext.mult = doc.at("mult").get<std::vector<std::vector<int>>>();
    auto exp = doc.at("cocycle_mu8_exponents").get<std::vector<std::vector<int>>>();
    std::size_t m = ext.labels.size();
    if (ext.grading.size() != m || ext.involution.size() != m || ext.mult.size() != m ||
        exp.size() != m)
        throw std::invalid_argument("extension_from_json: inconsistent table sizes");
    ext.cocycle.assign(m, std::vector<Cyc8>(m));
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t h = 0; h < m; ++h)
            ext.cocycle[g][h] = Cyc8::zeta(exp[g][h]);
    return ext;
}

} // namespace realclif
