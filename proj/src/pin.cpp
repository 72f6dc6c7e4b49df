#include "realclif/pin.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace realclif {

OrthogonalMatrix::OrthogonalMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
        throw std::invalid_argument("OrthogonalMatrix: not square");
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j)
            if (!m_.at(i, j).is_real())
                throw std::invalid_argument("OrthogonalMatrix: entries must be real");
    if (m_.transpose() * m_ != Matrix::identity(m_.rows()))
        throw std::invalid_argument("OrthogonalMatrix: M^T M != id");
}

OrthogonalMatrix OrthogonalMatrix::identity(std::size_t n) {
    return OrthogonalMatrix(Matrix::identity(n));
}

OrthogonalMatrix OrthogonalMatrix::operator*(const OrthogonalMatrix& o) const {
    return OrthogonalMatrix(m_ * o.m_);
}

OrthogonalMatrix OrthogonalMatrix::inverse() const {
    return OrthogonalMatrix(m_.transpose());
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
    SignedPermutation sp;
    sp.perm.resize(n);
    sp.sign.assign(n, 1);
    for (std::size_t i = 0; i < n; ++i) sp.perm[i] = static_cast<int>(i);
    return sp;
}

OrthogonalMatrix SignedPermutation::to_orthogonal() const {
    Matrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i)
        m.at(static_cast<std::size_t>(perm[i]), i) = Cyc8(sign[i]);
    return OrthogonalMatrix(std::move(m));
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& o) const {
    if (size() != o.size()) throw std::invalid_argument("SignedPermutation: size mismatch");
    SignedPermutation r;
    r.perm.resize(size());
    r.sign.resize(size());
    for (std::size_t i = 0; i < size(); ++i) {
        r.perm[i] = perm[static_cast<std::size_t>(o.perm[i])];
        r.sign[i] = sign[static_cast<std::size_t>(o.perm[i])] * o.sign[i];
    }
    return r;
}

SignedPermutation SignedPermutation::inverse() const {
    SignedPermutation r;
    r.perm.resize(size());
    r.sign.resize(size());
    for (std::size_t i = 0; i < size(); ++i) {
        r.perm[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
        r.sign[static_cast<std::size_t>(perm[i])] = sign[i];
    }
    return r;
}

SignedPermutation SignedPermutation::conjugated(const Signature& sig) const {
    auto eps = [&](int i) { return i < sig.p ? 1 : -1; };
    SignedPermutation r = *this;
    for (std::size_t i = 0; i < size(); ++i)
        r.sign[i] = sign[i] * eps(static_cast<int>(i)) * eps(perm[i]);
    return r;
}

int SignedPermutation::det() const {
    int d = 1;
    for (int s : sign) d *= s;
    std::vector<bool> seen(size(), false);
    for (std::size_t i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(perm[j]);
            ++len;
        }
        if (len % 2 == 0) d = -d;
    }
    return d;
}

std::string SignedPermutation::str() const {
    std::string s;
    std::vector<bool> seen(size(), false);
    for (std::size_t i = 0; i < size(); ++i) {
        if (seen[i] || perm[i] == static_cast<int>(i)) continue;
        s += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) s += " ";
            s += std::to_string(j + 1);
            first = false;
            j = static_cast<std::size_t>(perm[j]);
        }
        s += ")";
    }
    for (std::size_t i = 0; i < size(); ++i)
        if (sign[i] < 0) s += (s.empty() ? "-" : " -") + std::to_string(i + 1);
    return s.empty() ? "id" : s;
}

std::optional<SignedPermutation> as_signed_permutation(const OrthogonalMatrix& m) {
    SignedPermutation sp;
    sp.perm.assign(m.size(), -1);
    sp.sign.assign(m.size(), 0);
    for (std::size_t col = 0; col < m.size(); ++col) {
        int hits = 0;
        for (std::size_t row = 0; row < m.size(); ++row) {
            const Cyc8& e = m.at(row, col);
            if (e.is_zero()) continue;
            ++hits;
            if (e == Cyc8(1))
                sp.sign[col] = 1;
            else if (e == Cyc8(-1))
                sp.sign[col] = -1;
            else
                return std::nullopt;
            sp.perm[col] = static_cast<int>(row);
        }
        if (hits != 1) return std::nullopt;
    }
    return sp;
}

namespace {

CliffordElement checked_inverse(const CliffordElement& v) {
    if (!v.parity() || v.is_zero())
        throw std::invalid_argument("PinElement: value must be nonzero and parity-homogeneous");
    try {
        return v.inverse();
    } catch (const std::domain_error&) {
        throw std::invalid_argument("PinElement: value is not invertible");
    }
}

} // namespace

PinElement::PinElement(CliffordElement value)
    : PinElement(value, checked_inverse(value)) {}

PinElement::PinElement(CliffordElement value, CliffordElement inverse)
    : value_(std::move(value)),
      inverse_(std::move(inverse)),
      parity_(0),
      adjoint_(OrthogonalMatrix::identity(0)) {
    auto par = value_.parity();
    if (!par || value_.is_zero())
        throw std::invalid_argument("PinElement: value must be nonzero and parity-homogeneous");
    parity_ = *par;
    if (value_ * inverse_ != CliffordElement::scalar(value_.signature(), Cyc8(1)))
        throw std::invalid_argument("PinElement: inverse does not invert the value");
    // Spinor norm: w * reverse(w) is a unit scalar exactly on products of
    // unit vectors and unit scalars.
    CliffordElement norm = value_ * value_.reversed();
    if (!norm.is_scalar() || norm.scalar_part().norm_squared() != Cyc8(1))
        throw std::invalid_argument("PinElement: spinor norm is not a unit scalar (not in Pin^c)");

    const Signature& sig = value_.signature();
    std::size_t n = static_cast<std::size_t>(sig.dim());
    Matrix ad(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        CliffordElement image =
            value_ * CliffordElement::generator(sig, static_cast<int>(i) + 1) * inverse_;
        if (parity_) image = -image;
        for (const auto& [m, c] : image.terms()) {
            if (std::popcount(m) != 1)
                throw std::invalid_argument(
                    "PinElement: twisted adjoint leaves the generator span (not in Pin^c)");
            ad.at(static_cast<std::size_t>(std::countr_zero(m)), i) = c;
        }
    }
    try {
        adjoint_ = OrthogonalMatrix(std::move(ad));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("PinElement: twisted adjoint is not orthogonal (not in Pin^c)");
    }
}

Membership PinElement::membership() const {
    Membership m;
    m.pin = value_.real_involution() == value_;
    m.spin_c = adjoint_.det() == Cyc8(1);
    m.spin = m.pin && m.spin_c;
    return m;
}

namespace {

// Flip factor at 1-based index i: e_i on the fixed block, i*e_i on the
// negated block (the latter is fixed by the real involution).
CliffordElement flip_factor(const Signature& sig, int i) {
    CliffordElement e = CliffordElement::generator(sig, i);
    return i <= sig.p ? e : e.scaled(Cyc8::i());
}

// Transposition factor for the adjacent swap (i, i+1), 1-based.
CliffordElement transposition_factor(const Signature& sig, int i) {
    Cyc8 inv_sqrt2 = Cyc8::sqrt2().inverse();
    CliffordElement e = (CliffordElement::generator(sig, i) -
                         CliffordElement::generator(sig, i + 1))
                            .scaled(inv_sqrt2);
    return i > sig.p ? e.scaled(Cyc8::i()) : e;
}

// Inverse of a factor f with f^2 scalar: f / f^2.
CliffordElement reflection_factor_inverse(const CliffordElement& f) {
    CliffordElement sq = f * f;
    if (!sq.is_scalar() || sq.is_zero())
        throw std::logic_error("reflection factor must square to a nonzero scalar");
    return f.scaled(sq.scalar_part().inverse());
}

} // namespace

PinElement lift_signed_permutation(const Signature& sig, const SignedPermutation& sp) {
    if (static_cast<int>(sp.size()) != sig.dim())
        throw std::invalid_argument("lift_signed_permutation: size mismatch");

    // Bubble-sort the image array; the recorded adjacent swaps compose to the
    // permutation when multiplied in reverse recording order.
    std::vector<int> a = sp.perm;
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t j = 0; j + 1 < a.size(); ++j)
            if (a[j] > a[j + 1]) {
                std::swap(a[j], a[j + 1]);
                swaps.push_back(static_cast<int>(j));
                moved = true;
            }
    }

    CliffordElement lift = CliffordElement::scalar(sig, Cyc8(1));
    CliffordElement lift_inv = lift;
    auto append = [&](const CliffordElement& f) {
        lift = lift * f;
        lift_inv = reflection_factor_inverse(f) * lift_inv;
    };
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
        append(transposition_factor(sig, *it + 1));
    for (std::size_t i = 0; i < sp.size(); ++i)
        if (sp.sign[i] < 0) append(flip_factor(sig, static_cast<int>(i) + 1));

    PinElement w(std::move(lift), std::move(lift_inv));
    if (w.twisted_adjoint() != sp.to_orthogonal())
        throw std::logic_error("lift_signed_permutation: adjoint roundtrip failed");
    return w;
}

PinElement lift_signed_permutation(const Signature& sig, const OrthogonalMatrix& m) {
    auto sp = as_signed_permutation(m);
    if (!sp)
        throw std::invalid_argument("lift_signed_permutation: not a signed permutation matrix");
    return lift_signed_permutation(sig, *sp);
}

GradedBasis spinor_basis(const Signature& sig) {
    check_signature(sig);
    std::size_t dim = std::size_t(1) << sig.dim();
    GradedBasis b;
    b.labels.reserve(dim);
    b.parity.reserve(dim);
    for (Monomial m = 0; m < dim; ++m) {
        std::string label;
        if (m == 0) {
            label = "1";
        } else {
            for (int i = 0; i < sig.dim(); ++i)
                if (m & (Monomial(1) << i)) label += "e" + std::to_string(i + 1);
        }
        b.labels.push_back(std::move(label));
        b.parity.push_back(monomial_parity(m));
    }
    return b;
}

Operator spinor_rep(const CliffordElement& a) {
    const Signature& sig = a.signature();
    std::size_t dim = std::size_t(1) << sig.dim();
    Matrix m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col)
        for (const auto& [mono, c] : a.terms()) {
            auto [prod, sign] = monomial_product(mono, Monomial(col));
            m.at(prod, col) += sign < 0 ? -c : c;
        }
    return Operator{spinor_basis(sig), std::move(m)};
}

Operator spinor_rep(const PinElement& w) { return spinor_rep(w.value()); }

Operator right_action(const Signature& sig, int index, RightActionVariant variant) {
    if (index < 1 || index > sig.dim())
        throw std::invalid_argument("right_action: index out of range");
    std::size_t dim = std::size_t(1) << sig.dim();
    Monomial e = Monomial(1) << (index - 1);
    Matrix m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        auto [prod, sign] = monomial_product(Monomial(col), e);
        if (variant == RightActionVariant::Koszul && monomial_parity(Monomial(col)))
            sign = -sign;
        m.at(prod, col) = Cyc8(sign);
    }
    return Operator{spinor_basis(sig), std::move(m)};
}

Operator right_mult(const CliffordElement& a) {
    const Signature& sig = a.signature();
    std::size_t dim = std::size_t(1) << sig.dim();
    Matrix m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col)
        for (const auto& [mono, c] : a.terms()) {
            auto [prod, sign] = monomial_product(Monomial(col), mono);
            m.at(prod, col) += sign < 0 ? -c : c;
        }
    return Operator{spinor_basis(sig), std::move(m)};
}

Operator parity_operator(const Signature& sig) {
    std::size_t dim = std::size_t(1) << sig.dim();
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        m.at(i, i) = Cyc8(monomial_parity(Monomial(i)) ? -1 : 1);
    return Operator{spinor_basis(sig), std::move(m)};
}

Operator spinor_real_conjugate(const Signature& sig, const Operator& a) {
    std::size_t dim = std::size_t(1) << sig.dim();
    if (a.dim() != dim)
        throw std::invalid_argument("spinor_real_conjugate: dimension mismatch");
    Monomial negated = ((Monomial(1) << sig.dim()) - 1) & ~((Monomial(1) << sig.p) - 1);
    auto sgn = [&](std::size_t m) { return std::popcount(Monomial(m) & negated) & 1 ? -1 : 1; };
    Matrix r(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (a.mat.at(i, j).is_zero()) continue;
            Cyc8 c = a.mat.at(i, j).conjugate();
            r.at(i, j) = (sgn(i) * sgn(j) < 0) ? -c : c;
        }
    return Operator{a.basis, std::move(r)};
}

} // namespace realclif
