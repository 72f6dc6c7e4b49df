#include "realclif/clifford.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>

namespace realclif {

namespace {
std::atomic<int> g_dimension_cap{12};
}

int dimension_cap() { return g_dimension_cap.load(); }
void set_dimension_cap(int cap) {
    if (cap < 1) throw std::invalid_argument("dimension cap must be positive");
    g_dimension_cap.store(cap);
}

void check_signature(const Signature& sig) {
    if (sig.p < 0 || sig.q < 0)
        throw std::invalid_argument("signature components must be nonnegative");
    if (sig.dim() > dimension_cap())
        throw std::invalid_argument("signature exceeds the dimension cap");
}

int monomial_parity(Monomial m) { return std::popcount(m) & 1; }

std::pair<Monomial, int> monomial_product(Monomial a, Monomial b) {
    // Each generator of b moves left past the generators of a with larger
    // index; coincident generators contract with square +1.
    int swaps = 0;
    Monomial rest = b;
    while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        swaps += std::popcount(a >> (j + 1));
    }
    return {a ^ b, (swaps & 1) ? -1 : 1};
}

CliffordElement::CliffordElement(Signature sig) : sig_(sig) { check_signature(sig); }

CliffordElement CliffordElement::scalar(Signature sig, const Cyc8& c) {
    CliffordElement e(sig);
    e.add_term(0, c);
    return e;
}

CliffordElement CliffordElement::generator(Signature sig, int index) {
    if (index < 1 || index > sig.dim())
        throw std::invalid_argument("generator index out of range");
    CliffordElement e(sig);
    e.add_term(Monomial(1) << (index - 1), Cyc8(1));
    return e;
}

CliffordElement CliffordElement::monomial_term(Signature sig, Monomial m, const Cyc8& c) {
    if (m >= (Monomial(1) << sig.dim()))
        throw std::invalid_argument("monomial uses generators outside the signature");
    CliffordElement e(sig);
    e.add_term(m, c);
    return e;
}

CliffordElement CliffordElement::from_vector(Signature sig, const std::vector<Cyc8>& coords) {
    if (static_cast<int>(coords.size()) != sig.dim())
        throw std::invalid_argument("coordinate count must equal p+q");
    CliffordElement e(sig);
    for (int i = 0; i < sig.dim(); ++i) e.add_term(Monomial(1) << i, coords[i]);
    return e;
}

void CliffordElement::add_term(Monomial m, const Cyc8& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool CliffordElement::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Cyc8 CliffordElement::scalar_part() const { return coefficient(0); }

Cyc8 CliffordElement::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Cyc8() : it->second;
}

std::optional<int> CliffordElement::parity() const {
    if (terms_.empty()) return 0;
    int par = monomial_parity(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_parity(m) != par) return std::nullopt;
    return par;
}

CliffordElement CliffordElement::operator-() const {
    CliffordElement r(sig_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
    if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch");
    CliffordElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
    return *this + (-o);
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
    if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch");
    CliffordElement r(sig_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            auto [m, sign] = monomial_product(ma, mb);
            Cyc8 c = ca * cb;
            r.add_term(m, sign < 0 ? -c : c);
        }
    return r;
}

CliffordElement CliffordElement::scaled(const Cyc8& s) const {
    CliffordElement r(sig_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

CliffordElement CliffordElement::real_involution() const {
    Monomial negated_mask = ((Monomial(1) << sig_.dim()) - 1) & ~((Monomial(1) << sig_.p) - 1);
    CliffordElement r(sig_);
    for (const auto& [m, c] : terms_) {
        int flips = std::popcount(m & negated_mask);
        Cyc8 cc = c.conjugate();
        r.terms_.emplace(m, (flips & 1) ? -cc : cc);
    }
    return r;
}

CliffordElement CliffordElement::grading_involution() const {
    CliffordElement r(sig_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, monomial_parity(m) ? -c : c);
    return r;
}

CliffordElement CliffordElement::reversed() const {
    CliffordElement r(sig_);
    for (const auto& [m, c] : terms_) {
        int d = std::popcount(m);
        r.terms_.emplace(m, (d * (d - 1) / 2) % 2 ? -c : c);
    }
    return r;
}

CliffordElement CliffordElement::inverse() const {
    std::size_t dim = std::size_t(1) << sig_.dim();
    Matrix left(dim, dim);
    for (std::size_t col = 0; col < dim; ++col)
        for (const auto& [m, c] : terms_) {
            auto [prod, sign] = monomial_product(m, Monomial(col));
            left.at(prod, col) += sign < 0 ? -c : c;
        }
    std::vector<Cyc8> unit(dim);
    unit[0] = Cyc8(1);
    std::vector<Cyc8> x = left.solve(unit);
    if (x.empty()) throw std::domain_error("CliffordElement: not invertible");
    CliffordElement inv(sig_);
    for (std::size_t m = 0; m < dim; ++m) inv.add_term(Monomial(m), x[m]);
    return inv;
}

CliffordElement opposite_multiply(const CliffordElement& a, const CliffordElement& b) {
    auto pa = a.parity(), pb = b.parity();
    if (!pa || !pb)
        throw std::invalid_argument("opposite_multiply: inputs must be parity-homogeneous");
    CliffordElement r = b * a;
    return (*pa && *pb) ? -r : r;
}

std::vector<CliffordElement> fixed_subalgebra_basis(Signature sig) {
    check_signature(sig);
    Monomial negated_mask = ((Monomial(1) << sig.dim()) - 1) & ~((Monomial(1) << sig.p) - 1);
    std::vector<CliffordElement> basis;
    basis.reserve(std::size_t(1) << sig.dim());
    for (Monomial m = 0; m < (Monomial(1) << sig.dim()); ++m) {
        int imag = std::popcount(m & negated_mask);
        basis.push_back(CliffordElement::monomial_term(sig, m, Cyc8::zeta(2 * imag)));
    }
    return basis;
}

CliffordElement clifford_automorphism(const Matrix& m, const CliffordElement& a) {
    Signature sig = a.signature();
    std::size_t n = static_cast<std::size_t>(sig.dim());
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("clifford_automorphism: matrix size mismatch");
    std::vector<CliffordElement> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        CliffordElement img(sig);
        for (std::size_t j = 0; j < n; ++j) img.add_term(Monomial(1) << j, m.at(j, i));
        images.push_back(std::move(img));
    }
    CliffordElement r(sig);
    for (const auto& [mono, c] : a.terms()) {
        CliffordElement prod = CliffordElement::scalar(sig, c);
        Monomial rest = mono;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            prod = prod * images[static_cast<std::size_t>(i)];
        }
        r = r + prod;
    }
    return r;
}

TensorElement::TensorElement(Signature factor_sig, int k) : sig_(factor_sig), k_(k) {
    check_signature(factor_sig);
    if (k < 1) throw std::invalid_argument("TensorElement: need at least one factor");
    if (k * factor_sig.dim() > dimension_cap())
        throw std::invalid_argument("TensorElement: total dimension exceeds the cap");
}

TensorElement TensorElement::unit(Signature factor_sig, int k) {
    TensorElement t(factor_sig, k);
    t.add_term(std::vector<Monomial>(static_cast<std::size_t>(k), 0), Cyc8(1));
    return t;
}

TensorElement TensorElement::single_term(Signature factor_sig,
                                         const std::vector<Monomial>& tuple, const Cyc8& c) {
    TensorElement t(factor_sig, static_cast<int>(tuple.size()));
    t.add_term(tuple, c);
    return t;
}

TensorElement TensorElement::embed_factor(const CliffordElement& a, int k, int factor) {
    if (factor < 0 || factor >= k)
        throw std::invalid_argument("embed_factor: slot out of range");
    TensorElement t(a.signature(), k);
    for (const auto& [m, c] : a.terms()) {
        std::vector<Monomial> tuple(static_cast<std::size_t>(k), 0);
        tuple[static_cast<std::size_t>(factor)] = m;
        t.add_term(tuple, c);
    }
    return t;
}

void TensorElement::add_term(const std::vector<Monomial>& tuple, const Cyc8& c) {
    if (static_cast<int>(tuple.size()) != k_)
        throw std::invalid_argument("TensorElement: tuple length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(tuple, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<int> TensorElement::parity() const {
    if (terms_.empty()) return 0;
    auto tuple_parity = [](const std::vector<Monomial>& t) {
        int p = 0;
        for (Monomial m : t) p ^= monomial_parity(m);
        return p;
    };
    int par = tuple_parity(terms_.begin()->first);
    for (const auto& [t, c] : terms_)
        if (tuple_parity(t) != par) return std::nullopt;
    return par;
}

TensorElement TensorElement::operator-() const {
    TensorElement r(sig_, k_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    if (sig_ != o.sig_ || k_ != o.k_)
        throw std::invalid_argument("TensorElement: shape mismatch");
    TensorElement r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const { return *this + (-o); }

TensorElement TensorElement::operator*(const TensorElement& o) const {
    if (sig_ != o.sig_ || k_ != o.k_)
        throw std::invalid_argument("TensorElement: shape mismatch");
    TensorElement r(sig_, k_);
    std::size_t k = static_cast<std::size_t>(k_);
    for (const auto& [ta, ca] : terms_)
        for (const auto& [tb, cb] : o.terms_) {
            // Koszul sign: factor m of the right operand crosses factors
            // m+1..k of the left operand.
            int crossings = 0;
            for (std::size_t m = 0; m + 1 < k; ++m) {
                if (!monomial_parity(tb[m])) continue;
                for (std::size_t l = m + 1; l < k; ++l)
                    crossings += monomial_parity(ta[l]);
            }
            int sign = (crossings & 1) ? -1 : 1;
            std::vector<Monomial> tuple(k);
            for (std::size_t m = 0; m < k; ++m) {
                auto [mono, s] = monomial_product(ta[m], tb[m]);
                tuple[m] = mono;
                sign *= s;
            }
            Cyc8 c = ca * cb;
            r.add_term(tuple, sign < 0 ? -c : c);
        }
    return r;
}

TensorElement TensorElement::scaled(const Cyc8& s) const {
    TensorElement r(sig_, k_);
    if (s.is_zero()) return r;
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, c * s);
    return r;
}

TensorElement TensorElement::real_involution() const {
    Monomial negated_mask = ((Monomial(1) << sig_.dim()) - 1) & ~((Monomial(1) << sig_.p) - 1);
    TensorElement r(sig_, k_);
    for (const auto& [t, c] : terms_) {
        int flips = 0;
        for (Monomial m : t) flips += std::popcount(m & negated_mask);
        Cyc8 cc = c.conjugate();
        r.terms_.emplace(t, (flips & 1) ? -cc : cc);
    }
    return r;
}

int iso_phi_target_index(Signature factor_sig, int k, int factor_j, int coord_i) {
    if (factor_j < 0 || factor_j >= k || coord_i < 1 || coord_i > factor_sig.dim())
        throw std::invalid_argument("iso_phi_target_index: out of range");
    if (coord_i <= factor_sig.p) return factor_j * factor_sig.p + coord_i;
    return k * factor_sig.p + factor_j * factor_sig.q + (coord_i - factor_sig.p);
}

namespace {

// Image of a monomial tuple under iso_phi: a single target monomial with a
// reordering sign.
std::pair<Monomial, int> iso_phi_tuple(Signature sig, int k, const std::vector<Monomial>& tuple) {
    Monomial target = 0;
    int sign = 1;
    for (int j = 0; j < k; ++j) {
        Monomial rest = tuple[static_cast<std::size_t>(j)];
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            int t = iso_phi_target_index(sig, k, j, i + 1);
            auto [next, s] = monomial_product(target, Monomial(1) << (t - 1));
            target = next;
            sign *= s;
        }
    }
    return {target, sign};
}

} // namespace

CliffordElement iso_phi(const TensorElement& a) {
    Signature sig = a.factor_signature();
    int k = a.factors();
    Signature target{k * sig.p, k * sig.q};
    CliffordElement r(target);
    for (const auto& [tuple, c] : a.terms()) {
        auto [mono, sign] = iso_phi_tuple(sig, k, tuple);
        r.add_term(mono, sign < 0 ? -c : c);
    }
    return r;
}

TensorElement iso_phi_inv(const CliffordElement& a, Signature factor_sig, int k) {
    if (a.signature() != Signature{k * factor_sig.p, k * factor_sig.q})
        throw std::invalid_argument("iso_phi_inv: signature mismatch");
    TensorElement r(factor_sig, k);
    for (const auto& [mono, c] : a.terms()) {
        std::vector<Monomial> tuple(static_cast<std::size_t>(k), 0);
        Monomial rest = mono;
        while (rest) {
            int t = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            int j, i;
            if (t <= k * factor_sig.p) {
                j = (t - 1) / factor_sig.p;
                i = (t - 1) % factor_sig.p + 1;
            } else {
                int u = t - k * factor_sig.p - 1;
                j = u / factor_sig.q;
                i = factor_sig.p + u % factor_sig.q + 1;
            }
            tuple[static_cast<std::size_t>(j)] |= Monomial(1) << (i - 1);
        }
        auto [back, sign] = iso_phi_tuple(factor_sig, k, tuple);
        if (back != mono) throw std::logic_error("iso_phi_inv: reindexing mismatch");
        r.add_term(tuple, sign < 0 ? -c : c);
    }
    return r;
}

Matrix iso_phi_matrix(Signature factor_sig, int k) {
    int n = factor_sig.dim();
    if (k * n > dimension_cap())
        throw std::invalid_argument("iso_phi_matrix: total dimension exceeds the cap");
    std::size_t dim = std::size_t(1) << (k * n);
    Matrix m(dim, dim);
    // Columns run over monomial tuples in lexicographic order, which matches
    // interpreting the column index base 2^n with the first factor as the
    // most significant digit.
    std::vector<Monomial> tuple(static_cast<std::size_t>(k));
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t rest = col;
        for (int j = k - 1; j >= 0; --j) {
            tuple[static_cast<std::size_t>(j)] = Monomial(rest & ((std::size_t(1) << n) - 1));
            rest >>= n;
        }
        auto [mono, sign] = iso_phi_tuple(factor_sig, k, tuple);
        m.at(mono, col) = Cyc8(sign);
    }
    return m;
}

namespace {

// Cl_{p,q} (x) End(C^{1|1}) with basis keys (monomial << 2) | unit, where the
// unit index is r*2+c over {E11, E12, E21, E22}.  Multiplication carries the
// Koszul sign (-1)^{|unit||monomial'|}.
using MoritaElem = std::map<std::uint32_t, Cyc8>;

int unit_row(int u) { return u >> 1; }
int unit_col(int u) { return u & 1; }
int unit_parity(int u) { return unit_row(u) == unit_col(u) ? 0 : 1; }

void morita_add(MoritaElem& e, std::uint32_t key, const Cyc8& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = e.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

MoritaElem morita_mul(const MoritaElem& a, const MoritaElem& b) {
    MoritaElem r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            int ua = int(ka & 3), ub = int(kb & 3);
            if (unit_col(ua) != unit_row(ub)) continue;
            Monomial ma = ka >> 2, mb = kb >> 2;
            auto [m, sign] = monomial_product(ma, mb);
            if (unit_parity(ua) && monomial_parity(mb)) sign = -sign;
            int u = unit_row(ua) * 2 + unit_col(ub);
            Cyc8 c = ca * cb;
            morita_add(r, (m << 2) | std::uint32_t(u), sign < 0 ? -c : c);
        }
    return r;
}

MoritaElem morita_bar(const MoritaElem& a, Signature factor_sig) {
    Monomial negated =
        ((Monomial(1) << factor_sig.dim()) - 1) & ~((Monomial(1) << factor_sig.p) - 1);
    MoritaElem r;
    for (const auto& [k, c] : a) {
        int flips = std::popcount((k >> 2) & negated);
        Cyc8 cc = c.conjugate();
        r.emplace(k, (flips & 1) ? -cc : cc);
    }
    return r;
}

int morita_parity(std::uint32_t key) {
    return (monomial_parity(key >> 2) + unit_parity(int(key & 3))) & 1;
}

std::vector<MoritaElem> morita_generator_images(Signature factor_sig) {
    int p = factor_sig.p, q = factor_sig.q;
    std::vector<MoritaElem> images;
    auto diag_embed = [](Monomial m) {
        MoritaElem e;
        e.emplace((m << 2) | 0u, Cyc8(1));  // E11
        e.emplace((m << 2) | 3u, Cyc8(1));  // E22
        return e;
    };
    for (int i = 1; i <= p; ++i) images.push_back(diag_embed(Monomial(1) << (i - 1)));
    {
        MoritaElem e;  // extra fixed generator: offdiag(1, 1)
        e.emplace(1u, Cyc8(1));  // E12
        e.emplace(2u, Cyc8(1));  // E21
        images.push_back(std::move(e));
    }
    for (int i = 1; i <= q; ++i) images.push_back(diag_embed(Monomial(1) << (p + i - 1)));
    {
        MoritaElem e;  // extra negated generator: offdiag(i, -i)
        e.emplace(1u, Cyc8::i());
        e.emplace(2u, -Cyc8::i());
        images.push_back(std::move(e));
    }
    return images;
}

MoritaElem morita_image_of_monomial(const std::vector<MoritaElem>& gen_images, Monomial m) {
    MoritaElem acc;
    acc.emplace(0u, Cyc8(1));  // 1 (x) E11
    acc.emplace(3u, Cyc8(1));  // 1 (x) E22
    Monomial rest = m;
    while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        acc = morita_mul(acc, gen_images[static_cast<std::size_t>(i)]);
    }
    return acc;
}

std::string morita_label(Signature factor_sig, std::uint32_t key) {
    static const char* unit_names[4] = {"E11", "E12", "E21", "E22"};
    Monomial m = key >> 2;
    std::string s;
    if (m == 0) {
        s = "1";
    } else {
        for (int i = 0; i < factor_sig.dim(); ++i)
            if (m & (Monomial(1) << i)) s += "e" + std::to_string(i + 1);
    }
    return s + "(x)" + unit_names[key & 3];
}

} // namespace

MoritaWitness morita_one_one(Signature factor_sig) {
    check_signature(factor_sig);
    if (factor_sig.dim() + 2 > dimension_cap())
        throw std::invalid_argument("morita_one_one: source exceeds the dimension cap");
    Signature source{factor_sig.p + 1, factor_sig.q + 1};
    int n = source.dim();
    std::size_t dim = std::size_t(1) << n;

    auto gen_images = morita_generator_images(factor_sig);
    Matrix map(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        MoritaElem img = morita_image_of_monomial(gen_images, Monomial(col));
        for (const auto& [key, c] : img) map.at(key, col) = c;
    }

    MoritaWitness w{source, factor_sig, std::move(map), {}};
    w.target_labels.reserve(dim);
    for (std::uint32_t key = 0; key < dim; ++key)
        w.target_labels.push_back(morita_label(factor_sig, key));

    auto failures = verify_morita(w);
    if (!failures.empty())
        throw std::logic_error("morita_one_one: witness failed verification: " + failures.front());
    return w;
}

std::vector<std::string> verify_morita(const MoritaWitness& w) {
    std::vector<std::string> failures;
    int n = w.source_sig.dim();
    std::size_t dim = std::size_t(1) << n;
    if (w.map.rows() != dim || w.map.cols() != dim) {
        failures.push_back("witness matrix has wrong shape");
        return failures;
    }

    auto column = [&](Monomial m) {
        MoritaElem e;
        for (std::size_t row = 0; row < dim; ++row)
            if (!w.map.at(row, m).is_zero()) e.emplace(std::uint32_t(row), w.map.at(row, m));
        return e;
    };

    // Multiplicative on all monomial pairs.
    for (Monomial a = 0; a < dim; ++a) {
        MoritaElem ia = column(a);
        for (Monomial b = 0; b < dim; ++b) {
            MoritaElem prod = morita_mul(ia, column(b));
            auto [m, sign] = monomial_product(a, b);
            MoritaElem expect = column(m);
            if (sign < 0)
                for (auto& [k, c] : expect) c = -c;
            if (prod != expect) {
                failures.push_back("not multiplicative at monomial pair (" +
                                   std::to_string(a) + ", " + std::to_string(b) + ")");
                if (failures.size() > 8) return failures;
            }
        }
    }

    // Graded and Real-compatible on monomials.
    Monomial negated = ((Monomial(1) << n) - 1) & ~((Monomial(1) << w.source_sig.p) - 1);
    for (Monomial a = 0; a < dim; ++a) {
        MoritaElem ia = column(a);
        for (const auto& [key, c] : ia)
            if (morita_parity(key) != monomial_parity(a)) {
                failures.push_back("grading violated at monomial " + std::to_string(a));
                break;
            }
        // bar_target(image(e_a)) must equal image(bar_source(e_a)), and
        // bar_source(e_a) is e_a up to the sign of its negated generators.
        MoritaElem bar_img = morita_bar(ia, w.factor_sig);
        MoritaElem img_bar = ia;
        if (std::popcount(a & negated) & 1)
            for (auto& [k, c] : img_bar) c = -c;
        if (bar_img != img_bar)
            failures.push_back("Real structure violated at monomial " + std::to_string(a));
    }

    if (w.map.rank() != dim) failures.push_back("witness matrix is singular");
    return failures;
}

} // namespace realclif
