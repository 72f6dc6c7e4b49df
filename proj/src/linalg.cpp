#include "realclif/linalg.hpp"

#include <stdexcept>

namespace realclif {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyc8(1);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Matrix: shape mismatch in +");
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Matrix: shape mismatch in -");
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("Matrix: shape mismatch in *");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Cyc8& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Cyc8& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
}

Matrix Matrix::scaled(const Cyc8& s) const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

bool Matrix::is_zero() const {
    for (const Cyc8& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::conjugate() const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].conjugate();
    return r;
}

Matrix Matrix::conj_transpose() const { return transpose().conjugate(); }

std::vector<Cyc8> Matrix::apply(const std::vector<Cyc8>& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("Matrix: vector length mismatch");
    std::vector<Cyc8> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    return r;
}

namespace {

// Row echelon form in place; returns pivot columns.  First nonzero entry in
// column order is the pivot.
std::vector<std::size_t> echelon(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < m.rows() && m.at(pivot_row, col).is_zero()) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        if (pivot_row != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(row, j), m.at(pivot_row, j));
        Cyc8 inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Cyc8 f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return echelon(m).size();
}

Cyc8 Matrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: det of non-square");
    Matrix m = *this;
    Cyc8 d(1);
    std::size_t n = rows_;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        while (pivot_row < n && m.at(pivot_row, col).is_zero()) ++pivot_row;
        if (pivot_row == n) return Cyc8(0);
        if (pivot_row != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(pivot_row, j));
            d = -d;
        }
        d = d * m.at(col, col);
        Cyc8 inv = m.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Cyc8 f = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return d;
}

std::vector<std::vector<Cyc8>> Matrix::kernel_basis() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots = echelon(m);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Cyc8>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Cyc8> v(cols_);
        v[free] = Cyc8(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Cyc8> Matrix::solve(const std::vector<Cyc8>& b) const {
    if (b.size() != rows_)
        throw std::invalid_argument("Matrix: rhs length mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivots = echelon(aug);
    std::vector<Cyc8> x(cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols_) return {};  // inconsistent
        x[pivots[r]] = aug.at(r, cols_);
    }
    // Rows past the pivots are zero by construction.
    return x;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: inverse of non-square");
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Cyc8(1);
    }
    std::vector<std::size_t> pivots = echelon(aug);
    if (pivots.size() != rows_ || pivots.back() >= cols_)
        throw std::domain_error("Matrix: singular");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
    return r;
}

Operator identity_operator(const GradedBasis& basis) {
    return Operator{basis, Matrix::identity(basis.size())};
}

Operator zero_operator(const GradedBasis& basis) {
    return Operator{basis, Matrix(basis.size(), basis.size())};
}

Operator adjoint(const Operator& a) { return Operator{a.basis, a.mat.conj_transpose()}; }

bool is_even(const Operator& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.basis.parity[i] != a.basis.parity[j] && !a.mat.at(i, j).is_zero())
                return false;
    return true;
}

bool is_odd(const Operator& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.basis.parity[i] == a.basis.parity[j] && !a.mat.at(i, j).is_zero())
                return false;
    return true;
}

ParityClass parity_check(const Operator& a) {
    if (is_even(a)) return ParityClass::Even;
    if (is_odd(a)) return ParityClass::Odd;
    return ParityClass::Neither;
}

bool is_self_adjoint(const Operator& a) { return a.mat == a.mat.conj_transpose(); }

bool is_unitary(const Operator& a) {
    return a.mat.conj_transpose() * a.mat == Matrix::identity(a.dim());
}

GradedKernel kernel(const Operator& a) {
    GradedKernel out;
    std::size_t n = a.dim();
    for (int par = 0; par <= 1; ++par) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if (a.basis.parity[j] == par) cols.push_back(j);
        Matrix sub(n, cols.size());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = a.mat.at(i, cols[j]);
        auto kb = sub.kernel_basis();
        (par == 0 ? out.even_dim : out.odd_dim) = kb.size();
        for (const auto& v : kb) {
            std::vector<Cyc8> full(n);
            for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = v[j];
            out.basis.push_back(std::move(full));
        }
    }
    return out;
}

Operator graded_tensor(const Operator& a, const Operator& b) {
    if (parity_check(a) == ParityClass::Neither || parity_check(b) == ParityClass::Neither)
        throw std::invalid_argument("graded_tensor: factors must be parity-homogeneous");
    int b_parity = is_odd(b) && !b.mat.is_zero() ? 1 : 0;

    std::size_t da = a.dim(), db = b.dim();
    GradedBasis basis;
    basis.labels.reserve(da * db);
    basis.parity.reserve(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            basis.labels.push_back(a.basis.labels[i] + "(x)" + b.basis.labels[j]);
            basis.parity.push_back((a.basis.parity[i] + b.basis.parity[j]) % 2);
        }

    Matrix m(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t ip = 0; ip < da; ++ip) {
            const Cyc8& aii = a.mat.at(i, ip);
            if (aii.is_zero()) continue;
            // Koszul sign depends on the parity of the domain vector of the
            // first factor.
            int sign = (b_parity && a.basis.parity[ip]) ? -1 : 1;
            for (std::size_t j = 0; j < db; ++j)
                for (std::size_t jp = 0; jp < db; ++jp) {
                    const Cyc8& bjj = b.mat.at(j, jp);
                    if (bjj.is_zero()) continue;
                    Cyc8 val = aii * bjj;
                    m.at(i * db + j, ip * db + jp) = sign < 0 ? -val : val;
                }
        }
    return Operator{std::move(basis), std::move(m)};
}

Operator tensor_sum(const Operator& f, const Operator& g) {
    if (!is_odd(f) || !is_odd(g))
        throw std::invalid_argument("tensor_sum: operators must be odd");
    if (!is_self_adjoint(f) || !is_self_adjoint(g))
        throw std::invalid_argument("tensor_sum: operators must be self-adjoint");
    Operator left = graded_tensor(f, identity_operator(g.basis));
    Operator right = graded_tensor(identity_operator(f.basis), g);
    return Operator{left.basis, left.mat + right.mat};
}

} // namespace realclif
