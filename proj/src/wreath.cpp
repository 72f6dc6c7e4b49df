#include "realclif/wreath.hpp"

#include <stdexcept>

namespace realclif {

WreathElement WreathElement::identity(const Signature& sig, int k) {
    WreathElement w;
    w.blocks.assign(static_cast<std::size_t>(k),
                    OrthogonalMatrix::identity(static_cast<std::size_t>(sig.dim())));
    w.perm.resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) w.perm[static_cast<std::size_t>(j)] = j;
    return w;
}

WreathElement WreathElement::compose(const WreathElement& o) const {
    if (factors() != o.factors())
        throw std::invalid_argument("WreathElement: factor count mismatch");
    // (g; pi)(h; sigma) = (g_{sigma(j)} h_j ; pi sigma)
    WreathElement r;
    r.blocks.reserve(blocks.size());
    r.perm.resize(perm.size());
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        std::size_t s = static_cast<std::size_t>(o.perm[j]);
        r.blocks.push_back(blocks[s] * o.blocks[j]);
        r.perm[j] = perm[s];
    }
    return r;
}

WreathElement WreathElement::inverse() const {
    WreathElement r;
    r.blocks.assign(blocks.size(), OrthogonalMatrix::identity(0));
    r.perm.resize(perm.size());
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        std::size_t target = static_cast<std::size_t>(perm[j]);
        r.perm[target] = static_cast<int>(j);
        r.blocks[target] = blocks[j].inverse();
    }
    return r;
}

WreathElement WreathElement::conjugated(const Signature& sig) const {
    Matrix inv = Matrix::identity(static_cast<std::size_t>(sig.dim()));
    for (int i = sig.p; i < sig.dim(); ++i)
        inv.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = Cyc8(-1);
    OrthogonalMatrix iota{inv};
    WreathElement r = *this;
    for (auto& b : r.blocks) b = iota * b * iota;
    return r;
}

std::string WreathElement::str() const {
    std::string s = "perm[";
    for (std::size_t j = 0; j < perm.size(); ++j) {
        if (j) s += " ";
        s += std::to_string(perm[j] + 1);
    }
    s += "] blocks[";
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (j) s += ", ";
        auto sp = as_signed_permutation(blocks[j]);
        s += sp ? sp->str() : "general";
    }
    return s + "]";
}

OrthogonalMatrix wreath_embed(const Signature& sig, const WreathElement& w) {
    int k = w.factors();
    std::size_t n = static_cast<std::size_t>(sig.dim());
    Matrix m(n * static_cast<std::size_t>(k), n * static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        const Matrix& block = w.blocks[static_cast<std::size_t>(j)].matrix();
        if (block.rows() != n)
            throw std::invalid_argument("wreath_embed: block size mismatch");
        int target_factor = w.perm[static_cast<std::size_t>(j)];
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t src =
                static_cast<std::size_t>(iso_phi_target_index(sig, k, j, static_cast<int>(col) + 1) - 1);
            for (std::size_t row = 0; row < n; ++row) {
                if (block.at(row, col).is_zero()) continue;
                std::size_t dst = static_cast<std::size_t>(
                    iso_phi_target_index(sig, k, target_factor, static_cast<int>(row) + 1) - 1);
                m.at(dst, src) = block.at(row, col);
            }
        }
    }
    return OrthogonalMatrix(std::move(m));
}

int koszul_perm_sign(const std::vector<int>& perm, const std::vector<int>& parities) {
    if (perm.size() != parities.size())
        throw std::invalid_argument("koszul_perm_sign: length mismatch");
    int sign = 1;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b] && parities[a] && parities[b]) sign = -sign;
    return sign;
}

TensorElement act_on_tensor(const WreathElement& w, const TensorElement& a) {
    const Signature& sig = a.factor_signature();
    std::size_t k = static_cast<std::size_t>(a.factors());
    if (w.factors() != a.factors())
        throw std::invalid_argument("act_on_tensor: factor count mismatch");

    TensorElement result(sig, a.factors());
    for (const auto& [tuple, coeff] : a.terms()) {
        // Blockwise automorphism; each factor image is parity-homogeneous.
        std::vector<CliffordElement> images;
        std::vector<int> parities(k);
        images.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            images.push_back(clifford_automorphism(
                w.blocks[j].matrix(),
                CliffordElement::monomial_term(sig, tuple[j], Cyc8(1))));
            parities[j] = monomial_parity(tuple[j]);
        }
        int sign = koszul_perm_sign(w.perm, parities);

        // Distribute the factor expansions over permuted slots: Cartesian
        // product over the terms of each factor image.
        std::vector<Monomial> out(k);
        std::vector<std::vector<std::pair<Monomial, Cyc8>>> factor_terms(k);
        bool empty = false;
        for (std::size_t j = 0; j < k; ++j) {
            for (const auto& [m, c] : images[j].terms()) factor_terms[j].emplace_back(m, c);
            empty |= factor_terms[j].empty();
        }
        if (empty) continue;

        std::vector<std::size_t> idx(k, 0);
        while (true) {
            Cyc8 c = coeff;
            for (std::size_t j = 0; j < k; ++j) {
                const auto& [m, cf] = factor_terms[j][idx[j]];
                out[static_cast<std::size_t>(w.perm[j])] = m;
                c *= cf;
            }
            result.add_term(out, sign < 0 ? -c : c);
            std::size_t j = 0;
            while (j < k && ++idx[j] == factor_terms[j].size()) {
                idx[j] = 0;
                ++j;
            }
            if (j == k) break;
        }
    }
    return result;
}

std::vector<WreathElement> default_wreath_generators(const Signature& sig, int k) {
    std::size_t n = static_cast<std::size_t>(sig.dim());
    std::vector<WreathElement> gens;
    for (int j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            WreathElement w = WreathElement::identity(sig, k);
            SignedPermutation flip = SignedPermutation::identity(n);
            flip.sign[i] = -1;
            w.blocks[static_cast<std::size_t>(j)] = flip.to_orthogonal();
            gens.push_back(std::move(w));
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            WreathElement w = WreathElement::identity(sig, k);
            SignedPermutation swap = SignedPermutation::identity(n);
            std::swap(swap.perm[i], swap.perm[i + 1]);
            w.blocks[static_cast<std::size_t>(j)] = swap.to_orthogonal();
            gens.push_back(std::move(w));
        }
    }
    for (int j = 0; j + 1 < k; ++j) {
        WreathElement w = WreathElement::identity(sig, k);
        std::swap(w.perm[static_cast<std::size_t>(j)], w.perm[static_cast<std::size_t>(j) + 1]);
        gens.push_back(std::move(w));
    }
    return gens;
}

Report verify_phi_equivariance(int p, int q, int k,
                               const std::vector<WreathElement>& generators) {
    Signature sig{p, q};
    Report report;
    report.suite = "phi-equivariance";
    std::size_t n = static_cast<std::size_t>(sig.dim());
    std::size_t dim = std::size_t(1) << (static_cast<std::size_t>(k) * n);

    for (std::size_t g = 0; g < generators.size(); ++g) {
        const WreathElement& w = generators[g];
        OrthogonalMatrix embedded = wreath_embed(sig, w);
        std::string base = "p" + std::to_string(p) + "q" + std::to_string(q) +
                           "k" + std::to_string(k) + "/gen" +
                           (g < 10 ? "0" : "") + std::to_string(g);
        bool ok = true;
        std::string detail;
        for (std::size_t idx = 0; idx < dim; ++idx) {
            std::vector<Monomial> tuple(static_cast<std::size_t>(k));
            std::size_t rest = idx;
            for (int j = k - 1; j >= 0; --j) {
                tuple[static_cast<std::size_t>(j)] = Monomial(rest & ((std::size_t(1) << n) - 1));
                rest >>= n;
            }
            TensorElement a = TensorElement::single_term(sig, tuple, Cyc8(1));
            CliffordElement lhs = iso_phi(act_on_tensor(w, a));
            CliffordElement rhs = clifford_automorphism(embedded.matrix(), iso_phi(a));
            if (lhs != rhs) {
                ok = false;
                detail = "generator " + w.str() + " basis tuple index " + std::to_string(idx);
                break;
            }
        }
        report.add(base, ok, detail);
    }
    report.sort_cases();
    return report;
}

Report verify_phi_equivariance(int p, int q, int k) {
    return verify_phi_equivariance(p, q, k, default_wreath_generators({p, q}, k));
}

} // namespace realclif
