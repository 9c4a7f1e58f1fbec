#include "weightprop/scalar_matrix.hpp"

#include <sstream>

#include "weightprop/errors.hpp"

namespace weightprop {

ScalarMatrix::ScalarMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("ragged scalar matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
    ScalarMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool ScalarMatrix::is_identity() const {
    return rows_ == cols_ && *this == identity(rows_);
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("scalar matrix shape mismatch");
    ScalarMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

std::string ScalarMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << to_string((*this)(i, j));
        os << "]\n";
    }
    return os.str();
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(ScalarMatrix& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t ScalarMatrix::rank() const {
    ScalarMatrix m = *this;
    return rref(m, cols_).size();
}

std::optional<ScalarMatrix> solve_unique(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows() != b.rows()) throw InputError("solve: row count mismatch");
    ScalarMatrix aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
    }
    auto pivots = rref(aug, aug.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] >= a.cols()) return std::nullopt;
    if (pivots.size() != a.cols()) return std::nullopt;
    ScalarMatrix x(a.cols(), b.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[k], j) = aug(k, a.cols() + j);
    return x;
}

ScalarMatrix scalar_inverse(const ScalarMatrix& c) {
    if (c.rows() != c.cols()) throw DomainError("cannot invert a non-square matrix");
    auto x = solve_unique(c, ScalarMatrix::identity(c.rows()));
    if (!x) throw DomainError("singular matrix");
    return *x;
}

ScalarMatrix block_diagonal(const std::vector<ScalarMatrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) r += b.rows(), c += b.cols();
    ScalarMatrix m(r, c);
    std::size_t i0 = 0, j0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(i0 + i, j0 + j) = b(i, j);
        i0 += b.rows();
        j0 += b.cols();
    }
    return m;
}

}  // namespace weightprop
