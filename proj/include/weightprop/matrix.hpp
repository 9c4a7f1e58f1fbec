#pragma once

#include <string>
#include <vector>

#include "weightprop/free_module.hpp"
#include "weightprop/scalar_matrix.hpp"

namespace weightprop {

// Homogeneous matrix of a map domain -> codomain; column j is the image of basis element j.
class PolyMatrix {
public:
    PolyMatrix() = default;
    // Validates shape and homogeneity.
    PolyMatrix(FreeModule codomain, FreeModule domain, std::vector<ModuleElement> columns);
    static PolyMatrix from_rows(FreeModule codomain, FreeModule domain,
                                const std::vector<std::vector<Polynomial>>& rows);
    // Builds a matrix from polynomial strings, inferring the domain degrees from the column entries.
    static PolyMatrix parse(FreeModule codomain, const std::vector<std::vector<std::string>>& rows);

    const FreeModule& codomain() const { return codomain_; }
    const FreeModule& domain() const { return domain_; }
    const RingSpec& ring() const { return codomain_.ring(); }
    std::size_t rows() const { return codomain_.rank(); }
    std::size_t cols() const { return domain_.rank(); }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return cols_[j][i]; }
    const ModuleElement& column(std::size_t j) const { return cols_[j]; }
    const std::vector<ModuleElement>& columns() const { return cols_; }

    bool is_zero() const;
    bool has_unit_entry() const;
    PolyMatrix select_columns(const std::vector<std::size_t>& idx) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.codomain_ == b.codomain_ && a.domain_ == b.domain_ && a.cols_ == b.cols_;
    }

    std::string str() const;

private:
    FreeModule codomain_, domain_;
    std::vector<ModuleElement> cols_;
};

// Column degree from the first nonzero entry; nullopt for a zero column.
std::optional<Multidegree> column_degree_from_entries(const FreeModule& codomain, const ModuleElement& col);

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
// Row i of the result is a combination of rows of b; its degree is inferred from the rows used.
PolyMatrix mat_mul(const ScalarMatrix& a, const PolyMatrix& b);
PolyMatrix mat_mul(const PolyMatrix& a, const ScalarMatrix& b);

PolyMatrix transpose_entries(const PolyMatrix& m);
PolyMatrix dual_map(const PolyMatrix& m);

ScalarMatrix permutation_matrix(const std::vector<std::size_t>& new_to_old);
PolyMatrix permute_columns(const PolyMatrix& m, const ScalarMatrix& p);

struct ColumnSplit {
    ScalarMatrix permutation;  // M * P = (M_1 | ... | M_l)
    std::vector<PolyMatrix> blocks;
    std::vector<Multidegree> degrees;
};

ColumnSplit split_by_column_degree(const PolyMatrix& m);

}  // namespace weightprop
