#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weightprop/rational.hpp"

namespace weightprop {

// Dense exact-rational matrix.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    ScalarMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
    static ScalarMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ScalarMatrix transpose() const;
    bool is_identity() const;
    std::size_t rank() const;

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Throws DomainError when singular or not square.
ScalarMatrix scalar_inverse(const ScalarMatrix& c);

// Unique X with A*X = B; nullopt when inconsistent or A has dependent columns.
std::optional<ScalarMatrix> solve_unique(const ScalarMatrix& a, const ScalarMatrix& b);

ScalarMatrix block_diagonal(const std::vector<ScalarMatrix>& blocks);

}  // namespace weightprop
