#include "tvt/matrix_gf.hpp"

#include <algorithm>

namespace tvt {

void MatrixGF::add_entry(int r, int c, std::int64_t value) {
    check_range(r, c);
    std::int64_t v = field_.reduce(value);
    if (v == 0) return;
    auto key = std::make_pair(r, c);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, v);
    } else {
        it->second = field_.add(it->second, v);
        if (it->second == 0) entries_.erase(it);
    }
}

void MatrixGF::set_entry(int r, int c, std::int64_t value) {
    check_range(r, c);
    std::int64_t v = field_.reduce(value);
    auto key = std::make_pair(r, c);
    if (v == 0)
        entries_.erase(key);
    else
        entries_[key] = v;
}

std::int64_t MatrixGF::entry(int r, int c) const {
    check_range(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? 0 : it->second;
}

MatrixGF MatrixGF::multiply(const MatrixGF& rhs) const {
    if (cols_ != rhs.rows_) throw internal_error("matrix product shape mismatch");
    if (field_.p() != rhs.field_.p()) throw internal_error("matrix product field mismatch");
    // row lists of rhs for sparse accumulation
    std::vector<std::vector<std::pair<int, std::int64_t>>> rhs_rows(rhs.rows_);
    for (const auto& [rc, v] : rhs.entries_) rhs_rows[rc.first].push_back({rc.second, v});
    MatrixGF out(field_, rows_, rhs.cols_);
    std::map<std::pair<int, int>, std::int64_t> acc;
    for (const auto& [rc, v] : entries_) {
        for (const auto& [j, w] : rhs_rows[rc.second]) {
            auto key = std::make_pair(rc.first, j);
            acc[key] = field_.add(acc.count(key) ? acc[key] : 0, field_.mul(v, w));
        }
    }
    for (const auto& [key, v] : acc)
        if (v != 0) out.entries_.emplace(key, v);
    return out;
}

std::vector<std::vector<std::int64_t>> MatrixGF::dense_columns() const {
    std::vector<std::vector<std::int64_t>> cols(cols_, std::vector<std::int64_t>(rows_, 0));
    for (const auto& [rc, v] : entries_) cols[rc.second][rc.first] = v;
    return cols;
}

std::string MatrixGF::dump_triplets() const {
    std::string out;
    for (const auto& [rc, v] : entries_)
        out += std::to_string(rc.first) + " " + std::to_string(rc.second) + " " +
               std::to_string(v) + "\n";
    return out;
}

namespace {

// Working row for sparse elimination: sorted (col, value) pairs.
using SparseRow = std::vector<std::pair<int, std::int64_t>>;

// dst += coef * src over GF(p), merging sorted column lists.
SparseRow axpy(const PrimeField& F, const SparseRow& dst, const SparseRow& src,
               std::int64_t coef) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t a = 0, b = 0;
    while (a < dst.size() || b < src.size()) {
        if (b == src.size() || (a < dst.size() && dst[a].first < src[b].first)) {
            out.push_back(dst[a++]);
        } else if (a == dst.size() || src[b].first < dst[a].first) {
            std::int64_t v = F.mul(coef, src[b].second);
            if (v != 0) out.push_back({src[b].first, v});
            ++b;
        } else {
            std::int64_t v = F.add(dst[a].second, F.mul(coef, src[b].second));
            if (v != 0) out.push_back({dst[a].first, v});
            ++a; ++b;
        }
    }
    return out;
}

}  // namespace

int rank_gf(const MatrixGF& M) {
    const PrimeField& F = M.field();
    std::vector<SparseRow> rows(M.rows());
    for (const auto& [rc, v] : M.entries()) rows[rc.first].push_back({rc.second, v});
    for (auto& r : rows) std::sort(r.begin(), r.end());

    // column -> list of active row indices with a nonzero there
    int rank = 0;
    std::vector<bool> used(rows.size(), false);
    for (int step = 0; step < std::min(M.rows(), M.cols()); ++step) {
        // pick the sparsest unused non-empty row, then eliminate on its first column
        int pivot_row = -1;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (used[i] || rows[i].empty()) continue;
            if (pivot_row < 0 || rows[i].size() < rows[pivot_row].size()) pivot_row = i;
        }
        if (pivot_row < 0) break;
        used[pivot_row] = true;
        ++rank;
        int pc = rows[pivot_row][0].first;
        std::int64_t pv_inv = F.inv(rows[pivot_row][0].second);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (used[i] || rows[i].empty()) continue;
            // locate pc in row i
            auto it = std::lower_bound(rows[i].begin(), rows[i].end(), std::make_pair(pc, std::int64_t(0)),
                                       [](const auto& a, const auto& b) { return a.first < b.first; });
            if (it == rows[i].end() || it->first != pc) continue;
            std::int64_t coef = F.neg(F.mul(it->second, pv_inv));
            rows[i] = axpy(F, rows[i], rows[pivot_row], coef);
        }
        rows[pivot_row].clear();
    }
    return rank;
}

namespace {

// Row-major Gauss-Jordan. Row operations preserve the null space, so the
// reduced rows can be read off directly for kernel and solve. pivot_reverse
// flips the row scan, changing which solution a rank-deficient solve picks.
struct Echelon {
    std::vector<GfVec> rows;                 // fully reduced
    std::vector<std::pair<int, int>> pivots; // (row, col) per pivot
};

Echelon gauss_jordan(const PrimeField& F, std::vector<GfVec> rows, std::size_t ncols,
                     bool pivot_reverse) {
    Echelon e;
    std::size_t nrows = rows.size();
    std::vector<bool> row_used(nrows, false);
    for (std::size_t c = 0; c < ncols; ++c) {
        int pr = -1;
        for (std::size_t k = 0; k < nrows; ++k) {
            std::size_t r = pivot_reverse ? nrows - 1 - k : k;
            if (!row_used[r] && rows[r][c] != 0) { pr = static_cast<int>(r); break; }
        }
        if (pr < 0) continue;
        row_used[pr] = true;
        std::int64_t inv = F.inv(rows[pr][c]);
        for (auto& v : rows[pr]) v = F.mul(v, inv);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == static_cast<std::size_t>(pr) || rows[r][c] == 0) continue;
            std::int64_t coef = F.neg(rows[r][c]);
            for (std::size_t j = 0; j < rows[r].size(); ++j)
                rows[r][j] = F.add(rows[r][j], F.mul(coef, rows[pr][j]));
        }
        e.pivots.push_back({pr, static_cast<int>(c)});
    }
    e.rows = std::move(rows);
    return e;
}

std::vector<GfVec> dense_rows(const MatrixGF& M) {
    std::vector<GfVec> rows(M.rows(), GfVec(M.cols(), 0));
    for (const auto& [rc, v] : M.entries()) rows[rc.first][rc.second] = v;
    return rows;
}

}  // namespace

std::vector<GfVec> kernel_basis(const MatrixGF& M) {
    const PrimeField& F = M.field();
    Echelon e = gauss_jordan(F, dense_rows(M), M.cols(), false);
    std::vector<int> pivot_col_to_row(M.cols(), -1);
    for (auto [r, c] : e.pivots) pivot_col_to_row[c] = r;
    std::vector<GfVec> basis;
    for (int f = 0; f < M.cols(); ++f) {
        if (pivot_col_to_row[f] >= 0) continue;
        GfVec x(M.cols(), 0);
        x[f] = 1;
        for (auto [r, c] : e.pivots) x[c] = F.neg(e.rows[r][f]);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<GfVec> column_space_basis(const MatrixGF& M) {
    Echelon e = gauss_jordan(M.field(), dense_rows(M), M.cols(), false);
    auto original = M.dense_columns();
    std::vector<GfVec> basis;
    for (auto [r, c] : e.pivots) basis.push_back(original[c]);
    return basis;
}

std::optional<GfVec> solve_columns(const PrimeField& field, const std::vector<GfVec>& columns,
                                   const GfVec& b, bool pivot_reverse) {
    std::size_t nrows = b.size();
    std::size_t ncols = columns.size();
    std::vector<GfVec> aug(nrows, GfVec(ncols + 1, 0));
    for (std::size_t c = 0; c < ncols; ++c) {
        if (columns[c].size() != nrows) throw internal_error("solve_columns: ragged input");
        for (std::size_t r = 0; r < nrows; ++r) aug[r][c] = columns[c][r];
    }
    for (std::size_t r = 0; r < nrows; ++r) aug[r][ncols] = b[r];
    Echelon e = gauss_jordan(field, std::move(aug), ncols, pivot_reverse);
    std::vector<bool> row_has_pivot(nrows, false);
    for (auto [r, c] : e.pivots) row_has_pivot[r] = true;
    for (std::size_t r = 0; r < nrows; ++r)
        if (!row_has_pivot[r] && e.rows[r][ncols] != 0) return std::nullopt;
    GfVec x(ncols, 0);
    for (auto [r, c] : e.pivots) x[c] = e.rows[r][ncols];
    return x;
}

}  // namespace tvt
