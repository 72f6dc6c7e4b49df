#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realclif/clifford.hpp"
#include "realclif/linalg.hpp"

namespace realclif {

/// Square matrix over the real subfield with M^T M = id, size p+q.
class OrthogonalMatrix {
public:
    explicit OrthogonalMatrix(Matrix m);
    static OrthogonalMatrix identity(std::size_t n);

    std::size_t size() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    const Cyc8& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

    OrthogonalMatrix operator*(const OrthogonalMatrix& o) const;
    OrthogonalMatrix inverse() const;  // transpose
    Cyc8 det() const { return m_.det(); }

    friend bool operator==(const OrthogonalMatrix& a, const OrthogonalMatrix& b) {
        return a.m_ == b.m_;
    }
    friend bool operator!=(const OrthogonalMatrix& a, const OrthogonalMatrix& b) {
        return !(a == b);
    }

private:
    Matrix m_;
};

/// Signed permutation: e_i maps to sign[i] * e_{perm[i]} (0-based).
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<int> sign;

    static SignedPermutation identity(std::size_t n);
    std::size_t size() const { return perm.size(); }

    OrthogonalMatrix to_orthogonal() const;
    SignedPermutation compose(const SignedPermutation& o) const;  // this after o
    SignedPermutation inverse() const;
    /// Conjugation by diag(1_p, -1_q).
    SignedPermutation conjugated(const Signature& sig) const;
    int det() const;

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
        return a.perm == b.perm && a.sign == b.sign;
    }
    friend auto operator<=>(const SignedPermutation& a, const SignedPermutation& b) = default;

    std::string str() const;  // cycle-plus-signs notation
};

std::optional<SignedPermutation> as_signed_permutation(const OrthogonalMatrix& m);

struct Membership {
    bool pin_c = true;
    bool pin = false;
    bool spin_c = false;
    bool spin = false;
};

/// Invertible parity-homogeneous Clifford unit whose twisted adjoint
/// preserves the generator span; the orthogonal image is computed and cached
/// at construction.
class PinElement {
public:
    explicit PinElement(CliffordElement value);
    /// Constructor for callers that already know the inverse (products of
    /// reflection factors); the product is still verified.
    PinElement(CliffordElement value, CliffordElement inverse);

    const CliffordElement& value() const { return value_; }
    const CliffordElement& value_inverse() const { return inverse_; }
    int parity() const { return parity_; }
    const Signature& signature() const { return value_.signature(); }

    /// Matrix of x -> (-1)^{|w|} w x w^{-1} restricted to span(e_1..e_n).
    const OrthogonalMatrix& twisted_adjoint() const { return adjoint_; }

    Membership membership() const;

    friend bool operator==(const PinElement& a, const PinElement& b) {
        return a.value_ == b.value_;
    }

private:
    CliffordElement value_;
    CliffordElement inverse_;
    int parity_;
    OrthogonalMatrix adjoint_;
};

/// Canonical Pin lift of a signed permutation: transposition factors
/// (e_i - e_{i+1})/sqrt2 from an adjacent-swap decomposition, then sign-flip
/// factors in ascending index order.  Factors supported on the negated block
/// carry an extra i so that they are fixed by the real involution.
PinElement lift_signed_permutation(const Signature& sig, const OrthogonalMatrix& m);
PinElement lift_signed_permutation(const Signature& sig, const SignedPermutation& sp);

/// Monomial basis of the spinor module S_{p,q} = Cl_{p,q} in ascending
/// bitmask order.
GradedBasis spinor_basis(const Signature& sig);

/// Left multiplication by a on the spinor module.
Operator spinor_rep(const CliffordElement& a);
Operator spinor_rep(const PinElement& w);

enum class RightActionVariant { Plain, Koszul };

/// Right multiplication v -> v e_i (Plain) or v -> (-1)^{|v|} v e_i (Koszul).
Operator right_action(const Signature& sig, int index, RightActionVariant variant);

/// Right multiplication by an arbitrary element.
Operator right_mult(const CliffordElement& a);

/// Parity operator v -> (-1)^{|v|} v on the spinor module.
Operator parity_operator(const Signature& sig);

/// The Real structure r on the spinor module conjugates a matrix entrywise
/// and twists by the monomial signs of the real involution: returns r A r.
Operator spinor_real_conjugate(const Signature& sig, const Operator& a);

} // namespace realclif
