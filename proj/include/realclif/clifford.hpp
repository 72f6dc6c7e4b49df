#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "realclif/cyclotomic.hpp"
#include "realclif/linalg.hpp"

namespace realclif {

/// Generator count guard: basis size is 2^(p+q), so accidental large
/// signatures are rejected rather than silently allocated.
int dimension_cap();
void set_dimension_cap(int cap);

/// (p, q): p generators fixed by the Real involution, q negated by it.
struct Signature {
    int p = 0;
    int q = 0;

    int dim() const { return p + q; }
    friend bool operator==(const Signature& a, const Signature& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

void check_signature(const Signature& sig);

/// Basis monomial as a bitmask: bit i-1 set means generator e_i is present;
/// generators are written in increasing index order.
using Monomial = std::uint32_t;

int monomial_parity(Monomial m);

/// e_a * e_b with all generators squaring to +1: returns (a xor b, sign).
std::pair<Monomial, int> monomial_product(Monomial a, Monomial b);

/// Sparse element of Cl_{p,q}: monomial -> coefficient, no explicit zeros,
/// iterated in ascending bitmask order.
class CliffordElement {
public:
    explicit CliffordElement(Signature sig);

    static CliffordElement scalar(Signature sig, const Cyc8& c);
    static CliffordElement generator(Signature sig, int index);  // 1-based
    static CliffordElement monomial_term(Signature sig, Monomial m, const Cyc8& c);
    /// x_1 e_1 + ... + x_n e_n.
    static CliffordElement from_vector(Signature sig, const std::vector<Cyc8>& coords);

    const Signature& signature() const { return sig_; }
    const std::map<Monomial, Cyc8>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    Cyc8 scalar_part() const;
    Cyc8 coefficient(Monomial m) const;

    /// Parity if all monomials agree (zero counts as even); nullopt otherwise.
    std::optional<int> parity() const;

    CliffordElement operator-() const;
    CliffordElement operator+(const CliffordElement& o) const;
    CliffordElement operator-(const CliffordElement& o) const;
    CliffordElement operator*(const CliffordElement& o) const;
    CliffordElement scaled(const Cyc8& s) const;

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CliffordElement& a, const CliffordElement& b) {
        return !(a == b);
    }

    /// Antilinear algebra involution: conjugates coefficients and negates
    /// each generator with index > p.
    CliffordElement real_involution() const;

    /// Grading involution e_i -> -e_i.
    CliffordElement grading_involution() const;

    /// Reversal antiautomorphism: e_{i1}..e_{id} -> e_{id}..e_{i1}.
    CliffordElement reversed() const;

    /// Inverse in the algebra, via the left-regular representation.
    CliffordElement inverse() const;

    void add_term(Monomial m, const Cyc8& c);

private:
    Signature sig_;
    std::map<Monomial, Cyc8> terms_;
};

/// a .op b = (-1)^{|a||b|} b a; both inputs must be parity-homogeneous.
CliffordElement opposite_multiply(const CliffordElement& a, const CliffordElement& b);

/// The 2^(p+q) monomials in {e_1..e_p, i e_{p+1}..i e_{p+q}}; every element
/// is fixed by the real involution and the j > p squares are -1.
std::vector<CliffordElement> fixed_subalgebra_basis(Signature sig);

/// Functorial algebra automorphism of an orthogonal matrix: e_i maps to the
/// i-th column expanded in generators, extended multiplicatively.
CliffordElement clifford_automorphism(const Matrix& m, const CliffordElement& a);

/// Element of Cl_{p,q}^(x k): k-tuples of monomials -> coefficient, with
/// Koszul-signed multiplication.
class TensorElement {
public:
    TensorElement(Signature factor_sig, int k);

    static TensorElement unit(Signature factor_sig, int k);
    static TensorElement single_term(Signature factor_sig,
                                     const std::vector<Monomial>& tuple, const Cyc8& c);
    /// 1 (x) ... (x) a (x) ... (x) 1 with a in slot `factor` (0-based).
    static TensorElement embed_factor(const CliffordElement& a, int k, int factor);

    const Signature& factor_signature() const { return sig_; }
    int factors() const { return k_; }
    const std::map<std::vector<Monomial>, Cyc8>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::optional<int> parity() const;

    TensorElement operator-() const;
    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    /// Factorwise Clifford product with the Koszul sign of moving each right
    /// factor past the later left factors.
    TensorElement operator*(const TensorElement& o) const;
    TensorElement scaled(const Cyc8& s) const;

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.sig_ == b.sig_ && a.k_ == b.k_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) {
        return !(a == b);
    }

    /// Factorwise real involution; no extra cross-factor sign.
    TensorElement real_involution() const;

    void add_term(const std::vector<Monomial>& tuple, const Cyc8& c);

private:
    Signature sig_;
    int k_;
    std::map<std::vector<Monomial>, Cyc8> terms_;
};

/// Coordinate reindexing of the tensor isomorphism: factor j (0-based),
/// coordinate i (1-based) of (R^{p,q})^k lands at this 1-based index of
/// R^{kp,kq}.  Conjugation-fixed coordinates come first, j-major.
int iso_phi_target_index(Signature factor_sig, int k, int factor_j, int coord_i);

/// Graded algebra isomorphism Cl_{p,q}^(x k) -> Cl_{kp,kq}.
CliffordElement iso_phi(const TensorElement& a);
TensorElement iso_phi_inv(const CliffordElement& a, Signature factor_sig, int k);

/// iso_phi as a linear map between module bases: columns are indexed by
/// monomial tuples in lexicographic order, rows by target monomials in
/// ascending bitmask order.
Matrix iso_phi_matrix(Signature factor_sig, int k);

/// Explicit isomorphism Cl_{p+1,q+1} ~ Cl_{p,q} (x) End(C^{1|1}).  The map
/// matrix has rows indexed by (monomial, matrix unit) pairs of the target and
/// columns by source monomials.
struct MoritaWitness {
    Signature source_sig;   // (p+1, q+1)
    Signature factor_sig;   // (p, q)
    Matrix map;
    std::vector<std::string> target_labels;
};

MoritaWitness morita_one_one(Signature factor_sig);

/// Re-checks multiplicativity, grading, Real compatibility and invertibility
/// of a witness; returns human-readable failures (empty means pass).
std::vector<std::string> verify_morita(const MoritaWitness& w);

} // namespace realclif
