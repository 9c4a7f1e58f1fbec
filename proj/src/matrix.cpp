#include "weightprop/matrix.hpp"

#include <map>
#include <sstream>

#include "weightprop/errors.hpp"

namespace weightprop {

namespace {

std::string pos(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

PolyMatrix::PolyMatrix(FreeModule codomain, FreeModule domain, std::vector<ModuleElement> columns)
    : codomain_(std::move(codomain)), domain_(std::move(domain)), cols_(std::move(columns)) {
    if (cols_.size() != domain_.rank()) throw InputError("column count does not match domain rank");
    const RingSpec& r = codomain_.ring();
    for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (cols_[j].rank() != codomain_.rank()) throw InputError("column length does not match codomain rank");
        for (std::size_t i = 0; i < codomain_.rank(); ++i)
            for (const auto& kv : cols_[j][i].terms()) {
                if (kv.first.nvars() != r.nvars()) throw InputError("entry " + pos(i, j) + " has wrong variable count");
                if (r.degree_of(kv.first) + codomain_.degree(i) != domain_.degree(j))
                    throw DomainError("inhomogeneous entry at " + pos(i, j) + ": " + to_string(r, cols_[j][i]));
            }
    }
}

PolyMatrix PolyMatrix::from_rows(FreeModule codomain, FreeModule domain,
                                 const std::vector<std::vector<Polynomial>>& rows) {
    if (rows.size() != codomain.rank()) throw InputError("row count does not match codomain rank");
    std::vector<ModuleElement> cols(domain.rank(), ModuleElement(codomain.rank()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != domain.rank()) throw InputError("ragged matrix row " + std::to_string(i + 1));
        for (std::size_t j = 0; j < rows[i].size(); ++j) cols[j][i] = rows[i][j];
    }
    return PolyMatrix(std::move(codomain), std::move(domain), std::move(cols));
}

std::optional<Multidegree> column_degree_from_entries(const FreeModule& codomain, const ModuleElement& col) {
    for (std::size_t i = 0; i < col.rank(); ++i)
        if (!col[i].is_zero())
            return codomain.ring().degree_of(col[i].terms().begin()->first) + codomain.degree(i);
    return std::nullopt;
}

PolyMatrix PolyMatrix::parse(FreeModule codomain, const std::vector<std::vector<std::string>>& rows) {
    const RingSpec& r = codomain.ring();
    std::vector<std::vector<Polynomial>> p;
    std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (const auto& row : rows) {
        if (row.size() != ncols) throw InputError("ragged matrix rows");
        std::vector<Polynomial> pr;
        for (const auto& s : row) pr.push_back(parse_polynomial(r, s));
        p.push_back(std::move(pr));
    }
    if (p.size() != codomain.rank()) throw InputError("row count does not match codomain rank");
    std::vector<Multidegree> deg;
    for (std::size_t j = 0; j < ncols; ++j) {
        ModuleElement col(codomain.rank());
        for (std::size_t i = 0; i < p.size(); ++i) col[i] = p[i][j];
        auto d = column_degree_from_entries(codomain, col);
        if (!d) throw DomainError("cannot infer the degree of zero column " + std::to_string(j + 1));
        deg.push_back(*d);
    }
    FreeModule domain(codomain.ring_ptr(), std::move(deg));
    return from_rows(std::move(codomain), std::move(domain), p);
}

bool PolyMatrix::is_zero() const {
    for (const auto& c : cols_)
        if (!c.is_zero()) return false;
    return true;
}

bool PolyMatrix::has_unit_entry() const {
    for (const auto& c : cols_)
        for (const auto& p : c.entries())
            if (p.constant_coefficient() != 0) return true;
    return false;
}

PolyMatrix PolyMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    std::vector<Multidegree> deg;
    std::vector<ModuleElement> cols;
    for (auto j : idx) {
        deg.push_back(domain_.degree(j));
        cols.push_back(cols_[j]);
    }
    return PolyMatrix(codomain_, FreeModule(codomain_.ring_ptr(), std::move(deg)), std::move(cols));
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols(); ++j) os << (j ? ", " : "") << to_string(ring(), (*this)(i, j));
        os << "]\n";
    }
    return os.str();
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix shape mismatch");
    if (!(a.domain() == b.codomain())) throw DomainError("matrix product of incompatible modules");
    std::vector<ModuleElement> cols;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        ModuleElement c(a.rows());
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Polynomial& bkj = b(k, j);
            if (bkj.is_zero()) continue;
            for (std::size_t i = 0; i < a.rows(); ++i)
                if (!a(i, k).is_zero()) c[i] += a(i, k) * bkj;
        }
        cols.push_back(std::move(c));
    }
    return PolyMatrix(a.codomain(), b.domain(), std::move(cols));
}

PolyMatrix mat_mul(const ScalarMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix shape mismatch");
    std::vector<Multidegree> deg;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::optional<Multidegree> d;
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            if (d && *d != b.codomain().degree(k))
                throw DomainError("scalar matrix mixes basis elements of different degrees");
            d = b.codomain().degree(k);
        }
        if (!d) throw DomainError("scalar matrix has a zero row");
        deg.push_back(*d);
    }
    std::vector<ModuleElement> cols;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        ModuleElement c(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (a(i, k) != 0 && !b(k, j).is_zero()) c[i] += a(i, k) * b(k, j);
        cols.push_back(std::move(c));
    }
    return PolyMatrix(FreeModule(b.codomain().ring_ptr(), std::move(deg)), b.domain(), std::move(cols));
}

PolyMatrix mat_mul(const PolyMatrix& a, const ScalarMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix shape mismatch");
    std::vector<Multidegree> deg;
    std::vector<ModuleElement> cols;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::optional<Multidegree> d;
        ModuleElement c(a.rows());
        for (std::size_t k = 0; k < b.rows(); ++k) {
            if (b(k, j) == 0) continue;
            if (d && *d != a.domain().degree(k))
                throw DomainError("scalar matrix mixes basis elements of different degrees");
            d = a.domain().degree(k);
            ModuleElement t = a.column(k);
            t *= b(k, j);
            c += t;
        }
        if (!d) throw DomainError("scalar matrix has a zero column");
        deg.push_back(*d);
        cols.push_back(std::move(c));
    }
    return PolyMatrix(a.codomain(), FreeModule(a.codomain().ring_ptr(), std::move(deg)), std::move(cols));
}

PolyMatrix transpose_entries(const PolyMatrix& m) {
    std::vector<ModuleElement> cols;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ModuleElement c(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) c[j] = m(i, j);
        cols.push_back(std::move(c));
    }
    return PolyMatrix(m.domain().negated(), m.codomain().negated(), std::move(cols));
}

PolyMatrix dual_map(const PolyMatrix& m) {
    return transpose_entries(m);
}

ScalarMatrix permutation_matrix(const std::vector<std::size_t>& new_to_old) {
    ScalarMatrix p(new_to_old.size(), new_to_old.size());
    for (std::size_t k = 0; k < new_to_old.size(); ++k) p(new_to_old[k], k) = 1;
    return p;
}

PolyMatrix permute_columns(const PolyMatrix& m, const ScalarMatrix& p) {
    return mat_mul(m, p);
}

ColumnSplit split_by_column_degree(const PolyMatrix& m) {
    std::vector<Multidegree> classes;
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const auto& d = m.domain().degree(j);
        std::size_t c = 0;
        while (c < classes.size() && classes[c] != d) ++c;
        if (c == classes.size()) {
            classes.push_back(d);
            members.emplace_back();
        }
        members[c].push_back(j);
    }
    ColumnSplit out;
    std::vector<std::size_t> order;
    for (const auto& mem : members) {
        order.insert(order.end(), mem.begin(), mem.end());
        out.blocks.push_back(m.select_columns(mem));
    }
    out.permutation = permutation_matrix(order);
    out.degrees = std::move(classes);
    return out;
}

}  // namespace weightprop
