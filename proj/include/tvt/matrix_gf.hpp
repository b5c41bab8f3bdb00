#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tvt/gf.hpp"

namespace tvt {

// Sparse matrix over GF(p). Only non-zero residues are stored.
class MatrixGF {
public:
    MatrixGF() : field_(2), rows_(0), cols_(0) {}
    MatrixGF(PrimeField field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw input_error("matrix dimensions must be non-negative");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    void add_entry(int r, int c, std::int64_t value);
    void set_entry(int r, int c, std::int64_t value);
    std::int64_t entry(int r, int c) const;

    const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    MatrixGF multiply(const MatrixGF& rhs) const;

    // Dense column-major copy: result[c] is column c as residues.
    std::vector<std::vector<std::int64_t>> dense_columns() const;

    // Plain-text dump: "degree rows cols" header is written by the caller;
    // this emits one "row col value" triplet per line.
    std::string dump_triplets() const;

private:
    void check_range(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw input_error("matrix index out of range");
    }

    PrimeField field_;
    int rows_, cols_;
    std::map<std::pair<int, int>, std::int64_t> entries_;  // (row,col) -> non-zero residue
};

// Exact rank over GF(p); sparse elimination, pivots chosen on sparsity.
int rank_gf(const MatrixGF& M);

// Dense helpers used where explicit generators are needed (homology bases,
// connecting maps). Vectors are residue lists of fixed length.
using GfVec = std::vector<std::int64_t>;

// Basis of the null space {x : Mx = 0}; each vector has length cols().
std::vector<GfVec> kernel_basis(const MatrixGF& M);

// Basis of the column space; each vector has length rows().
std::vector<GfVec> column_space_basis(const MatrixGF& M);

// Solves A x = b where A is given by columns. Returns empty optional if
// inconsistent. pivot_reverse flips the row scan order; any strategy yields
// a valid solution (used to probe lift independence).
std::optional<GfVec> solve_columns(const PrimeField& field, const std::vector<GfVec>& columns,
                                   const GfVec& b, bool pivot_reverse = false);

}  // namespace tvt
