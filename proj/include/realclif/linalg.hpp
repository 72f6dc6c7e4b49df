#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "realclif/cyclotomic.hpp"

namespace realclif {

/// Dense matrix over Q(z8); all arithmetic is exact.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cyc8& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Cyc8& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Cyc8& s) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix conjugate() const;       // entrywise
    Matrix conj_transpose() const;

    std::vector<Cyc8> apply(const std::vector<Cyc8>& v) const;

    /// Exact Gaussian elimination; pivot is the first nonzero entry in
    /// column order.
    std::size_t rank() const;
    Cyc8 det() const;
    std::vector<std::vector<Cyc8>> kernel_basis() const;

    /// Solve A x = b; empty result if the system is inconsistent.
    std::vector<Cyc8> solve(const std::vector<Cyc8>& b) const;
    Matrix inverse() const;  // throws if singular

private:
    std::size_t rows_, cols_;
    std::vector<Cyc8> a_;
};

/// Ordered basis with a parity bit per label.
struct GradedBasis {
    std::vector<std::string> labels;
    std::vector<int> parity;

    std::size_t size() const { return labels.size(); }
    friend bool operator==(const GradedBasis& a, const GradedBasis& b) {
        return a.labels == b.labels && a.parity == b.parity;
    }
};

enum class ParityClass { Even, Odd, Neither };

/// Square matrix acting on a parity-labeled basis.
struct Operator {
    GradedBasis basis;
    Matrix mat;

    std::size_t dim() const { return basis.size(); }
    friend bool operator==(const Operator& a, const Operator& b) {
        return a.basis == b.basis && a.mat == b.mat;
    }
};

Operator identity_operator(const GradedBasis& basis);
Operator zero_operator(const GradedBasis& basis);

/// Conjugate transpose; the basis is declared orthonormal.
Operator adjoint(const Operator& a);

bool is_even(const Operator& a);  // preserves parity blocks (zero qualifies)
bool is_odd(const Operator& a);   // swaps parity blocks (zero qualifies)
ParityClass parity_check(const Operator& a);

bool is_self_adjoint(const Operator& a);
bool is_unitary(const Operator& a);

struct GradedKernel {
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;
    std::vector<std::vector<Cyc8>> basis;
};

/// Exact kernel with per-parity dimensions.  For a parity-homogeneous
/// operator the kernel splits as the direct sum of its even and odd parts;
/// for mixed-parity input only the homogeneous kernel vectors are reported.
GradedKernel kernel(const Operator& a);

/// Koszul-signed tensor product on the lexicographic product basis:
/// (A (x) B)(v (x) w) = (-1)^{|B||v|} Av (x) Bw.  Factors must be
/// parity-homogeneous.
Operator graded_tensor(const Operator& a, const Operator& b);

/// F (x) id + id (x) G for odd self-adjoint F, G (zero allowed).
Operator tensor_sum(const Operator& f, const Operator& g);

} // namespace realclif
