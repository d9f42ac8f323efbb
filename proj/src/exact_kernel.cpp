#include "ajpoly/vratio.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ajpoly {

namespace {

using SparseRow = std::map<size_t, VLaurent>;

// strip integer content and common v-power from a row; also a full polynomial
// gcd when it is nontrivial (rows are short, this stays cheap)
void strip_row(SparseRow& row) {
    if (row.empty()) return;
    VLaurent g;
    for (auto& [c, v] : row) {
        g = VLaurent::gcd(g, v);
        if (g.is_unit() && g.lo_exp() == 0) break;
    }
    long lo = row.begin()->second.lo_exp();
    for (auto& [c, v] : row) lo = std::min(lo, v.lo_exp());
    bool unit_g = g.is_unit();
    if (unit_g && lo == 0) return;
    for (auto& [c, v] : row) {
        if (!unit_g) v = v.divexact(g);
        if (lo != 0) v = v * VLaurent::mono(-lo);
    }
}

struct Elim {
    std::vector<SparseRow> rows;
    size_t ncols;
    // forward elimination state
    std::vector<std::pair<size_t, size_t>> pivots;  // (row index, col index) in order

    void eliminate() {
        std::vector<char> row_used(rows.size(), 0);
        std::set<size_t> cols_left;
        std::map<size_t, std::set<size_t>> col_rows;  // col -> active rows with nnz there
        for (size_t i = 0; i < rows.size(); ++i) {
            strip_row(rows[i]);
            for (auto& [c, v] : rows[i]) col_rows[c].insert(i);
        }
        for (auto& [c, s] : col_rows) cols_left.insert(c);

        while (true) {
            // Markowitz-style pivot: minimize (nnz(row)-1)*(nnz(col)-1) with a
            // strong preference for monomial pivot entries; deterministic ties.
            size_t best_r = SIZE_MAX, best_c = SIZE_MAX;
            long best_score = -1;
            int best_mono = 0;
            for (size_t c : cols_left) {
                auto it = col_rows.find(c);
                if (it == col_rows.end()) continue;
                for (size_t r : it->second) {
                    if (row_used[r]) continue;
                    const VLaurent& e = rows[r].at(c);
                    int mono = e.terms().size() == 1 ? 1 : 0;
                    long score = (long)(rows[r].size() - 1) * (long)(it->second.size() - 1);
                    bool better;
                    if (best_score < 0) {
                        better = true;
                    } else if (mono != best_mono) {
                        better = mono > best_mono;
                    } else if (score != best_score) {
                        better = score < best_score;
                    } else {
                        better = c < best_c || (c == best_c && r < best_r);
                    }
                    if (better) {
                        best_r = r;
                        best_c = c;
                        best_score = score;
                        best_mono = mono;
                    }
                }
            }
            if (best_score < 0) break;

            size_t pr = best_r, pc = best_c;
            row_used[pr] = 1;
            pivots.emplace_back(pr, pc);
            cols_left.erase(pc);
            const VLaurent piv = rows[pr].at(pc);

            auto victims = col_rows[pc];  // copy; we mutate col_rows below
            for (size_t r : victims) {
                if (r == pr || row_used[r]) continue;
                VLaurent f = rows[r].at(pc);
                // row_r := piv * row_r - f * row_pr  (fraction-free update)
                SparseRow updated;
                for (auto& [c, v] : rows[r]) {
                    if (c == pc) continue;
                    updated[c] = v * piv;
                }
                for (auto& [c, v] : rows[pr]) {
                    if (c == pc) continue;
                    auto it = updated.find(c);
                    if (it == updated.end()) {
                        VLaurent t = -(f * v);
                        if (!t.is_zero()) updated[c] = std::move(t);
                    } else {
                        it->second -= f * v;
                        if (it->second.is_zero()) updated.erase(it);
                    }
                }
                strip_row(updated);
                // refresh column index
                for (auto& [c, v] : rows[r]) col_rows[c].erase(r);
                for (auto& [c, v] : updated) col_rows[c].insert(r);
                rows[r] = std::move(updated);
            }
            // pivot row stays; drop it from col_rows activity except bookkeeping
            for (auto& [c, v] : rows[pr])
                if (c != pc) col_rows[c].erase(pr);
            col_rows.erase(pc);
        }
    }
};

}  // namespace

std::vector<std::vector<VRatio>> exact_kernel_sparse(
    const std::vector<std::vector<std::pair<size_t, VLaurent>>>& in_rows, size_t ncols) {
    Elim el;
    el.ncols = ncols;
    for (auto& r : in_rows) {
        SparseRow row;
        for (auto& [c, v] : r)
            if (!v.is_zero()) {
                auto it = row.find(c);
                if (it == row.end())
                    row[c] = v;
                else {
                    it->second += v;
                    if (it->second.is_zero()) row.erase(it);
                }
            }
        if (!row.empty()) el.rows.push_back(std::move(row));
    }
    el.eliminate();

    std::vector<char> is_pivot_col(ncols, 0);
    for (auto& [r, c] : el.pivots) is_pivot_col[c] = 1;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < ncols; ++c)
        if (!is_pivot_col[c]) free_cols.push_back(c);

    std::vector<std::vector<VRatio>> basis;
    for (size_t fc : free_cols) {
        std::vector<VRatio> x(ncols);
        x[fc] = VRatio(VLaurent::mono(0, 1));
        // pivot rows in reverse order of selection form a triangular system
        for (auto it = el.pivots.rbegin(); it != el.pivots.rend(); ++it) {
            auto [r, c] = *it;
            VRatio acc;
            for (auto& [cc, v] : el.rows[r]) {
                if (cc == c) continue;
                if (!x[cc].is_zero()) acc = acc + VRatio(v) * x[cc];
            }
            if (!acc.is_zero()) x[c] = -(acc / VRatio(el.rows[r].at(c)));
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::vector<VRatio>> exact_kernel(const ExactMatrix& M) {
    std::vector<std::vector<std::pair<size_t, VLaurent>>> rows(M.rows());
    for (size_t r = 0; r < M.rows(); ++r)
        for (size_t c = 0; c < M.cols(); ++c)
            if (!M.at(r, c).is_zero()) rows[r].emplace_back(c, M.at(r, c));
    return exact_kernel_sparse(rows, M.cols());
}

}  // namespace ajpoly
