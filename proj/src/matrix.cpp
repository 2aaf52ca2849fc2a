#include "z4/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace z4 {

QuaternaryMatrix::QuaternaryMatrix(std::size_t cols) : cols_(cols) {
    if (cols == 0)
        throw std::invalid_argument("QuaternaryMatrix: column count must be positive");
}

Z4Word QuaternaryMatrix::row_as_z4(std::size_t r) const {
    if (r < rows4()) return block1_[r];
    return row2_doubled(r - rows4());
}

void QuaternaryMatrix::append_row4(Z4Word w) {
    if (w.size() != cols_)
        throw std::invalid_argument("QuaternaryMatrix: row length mismatch");
    block1_.push_back(std::move(w));
}

void QuaternaryMatrix::append_row2(BinaryWord b) {
    if (b.size() != cols_)
        throw std::invalid_argument("QuaternaryMatrix: row length mismatch");
    block2_.push_back(std::move(b));
}

QuaternaryMatrix build_a(int r1, int r2) {
    if (r1 < 0 || r2 < 0)
        throw std::invalid_argument("build_a: parameters must be nonnegative");
    const int e = 2 * r1 + r2;
    if (e > 20)
        throw std::invalid_argument("build_a: 2*r1+r2 exceeds the size cap (20)");
    const std::size_t n = std::size_t(1) << e;

    QuaternaryMatrix a(n);
    Z4Word ones(n);
    for (std::size_t c = 0; c < n; ++c) ones.set(c, 1);
    a.append_row4(std::move(ones));

    // Column c spells the word (1, v, u); v digits are most significant.
    for (int j = 1; j <= r1; ++j) {
        Z4Word row(n);
        const int shift = 2 * (r1 - j) + r2;
        for (std::size_t c = 0; c < n; ++c)
            row.set(c, static_cast<int>((c >> shift) & 3));
        a.append_row4(std::move(row));
    }
    for (int j = 1; j <= r2; ++j) {
        BinaryWord row(n);
        const int shift = r2 - j;
        for (std::size_t c = 0; c < n; ++c)
            row.set(c, static_cast<int>((c >> shift) & 1));
        a.append_row2(std::move(row));
    }
    return a;
}

RowReduced row_reduce(const QuaternaryMatrix& m) {
    const std::size_t n = m.cols();
    std::vector<Z4Word> work;
    work.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) work.push_back(m.row_as_z4(r));

    std::vector<bool> pivoted(work.size(), false);
    std::vector<std::pair<std::size_t, std::size_t>> unit_pivots;
    RowReduced out;

    // Phase 1: pivot on unit entries (1 or 3 are invertible mod 4).  All
    // further elimination keeps previously swept columns free of units, so a
    // single left-to-right sweep finds every unit pivot.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = work.size();
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (pivoted[r]) continue;
            const int e = work[r].get(col);
            if (e == 1 || e == 3) {
                pivot = r;
                break;
            }
        }
        if (pivot == work.size()) continue;
        if (work[pivot].get(col) == 3) work[pivot] = work[pivot].times(3);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r == pivot) continue;
            const int e = work[r].get(col);
            if (e) work[r] += work[pivot].times(4 - e);
        }
        pivoted[pivot] = true;
        unit_pivots.emplace_back(pivot, col);
    }

    // Phase 2: the remaining rows have entries in {0,2}; eliminate their
    // halved forms over GF(2).
    std::vector<BinaryWord> residual;
    for (std::size_t r = 0; r < work.size(); ++r)
        if (!pivoted[r]) residual.push_back(halved(work[r]));
    std::vector<bool> two_pivoted(residual.size(), false);
    std::vector<std::pair<std::size_t, std::size_t>> two_pivots;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = residual.size();
        for (std::size_t r = 0; r < residual.size(); ++r) {
            if (!two_pivoted[r] && residual[r].get(col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == residual.size()) continue;
        for (std::size_t r = 0; r < residual.size(); ++r) {
            if (r != pivot && residual[r].get(col)) residual[r] ^= residual[pivot];
        }
        two_pivoted[pivot] = true;
        two_pivots.emplace_back(pivot, col);
    }
    for (std::size_t r = 0; r < residual.size(); ++r)
        if (!two_pivoted[r]) {
            assert(residual[r].is_zero());
            ++out.dependent_rows;
        }

    // Normalize unit-row entries at two-pivot columns to {0,1}.
    for (const auto& [tr, tc] : two_pivots) {
        const Z4Word twice = doubled(residual[tr]);
        for (const auto& [ur, uc] : unit_pivots)
            if (work[ur].get(tc) >= 2) work[ur] += twice;
    }

    for (const auto& [r, col] : unit_pivots) {
        out.unit_rows.push_back(work[r]);
        out.unit_cols.push_back(col);
    }
    for (const auto& [r, col] : two_pivots) {
        out.two_rows.push_back(residual[r]);
        out.two_cols.push_back(col);
    }
    return out;
}

CodeType code_type(const QuaternaryMatrix& m) {
    const RowReduced red = row_reduce(m);
    return CodeType{static_cast<int>(red.unit_cols.size()),
                    static_cast<int>(red.two_cols.size())};
}

QuaternaryMatrix null_space(const QuaternaryMatrix& m) {
    const RowReduced red = row_reduce(m);
    if (red.dependent_rows > 0)
        throw std::invalid_argument("null_space: matrix has dependent rows");

    const std::size_t n = m.cols();
    enum : signed char { kFree = 0, kUnit = 1, kTwo = 2 };
    std::vector<signed char> role(n, kFree);
    std::vector<std::size_t> which(n, 0);
    for (std::size_t i = 0; i < red.unit_cols.size(); ++i) {
        role[red.unit_cols[i]] = kUnit;
        which[red.unit_cols[i]] = i;
    }
    for (std::size_t j = 0; j < red.two_cols.size(); ++j) {
        role[red.two_cols[j]] = kTwo;
        which[red.two_cols[j]] = j;
    }

    QuaternaryMatrix out(n);
    // One order-4 generator per free column.
    for (std::size_t f = 0; f < n; ++f) {
        if (role[f] != kFree) continue;
        Z4Word g(n);
        g.set(f, 1);
        for (std::size_t j = 0; j < red.two_cols.size(); ++j)
            if (red.two_rows[j].get(f)) g.set(red.two_cols[j], 1);
        for (std::size_t i = 0; i < red.unit_cols.size(); ++i) {
            int acc = red.unit_rows[i].get(f);
            for (std::size_t j = 0; j < red.two_cols.size(); ++j)
                acc += red.unit_rows[i].get(red.two_cols[j]) *
                       g.get(red.two_cols[j]);
            g.set(red.unit_cols[i], (4 - (acc & 3)) & 3);
        }
        out.append_row4(std::move(g));
    }
    // One order-2 generator per two-pivot column.
    for (std::size_t j = 0; j < red.two_cols.size(); ++j) {
        BinaryWord h(n);
        h.set(red.two_cols[j], 1);
        for (std::size_t i = 0; i < red.unit_cols.size(); ++i)
            if (red.unit_rows[i].get(red.two_cols[j]) & 1)
                h.set(red.unit_cols[i], 1);
        out.append_row2(std::move(h));
    }
    return out;
}

bool is_orthogonal(const QuaternaryMatrix& g, const QuaternaryMatrix& a) {
    if (g.cols() != a.cols())
        throw std::invalid_argument("is_orthogonal: column count mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Z4Word arow = a.row_as_z4(i);
        for (std::size_t r = 0; r < g.rows(); ++r)
            if (dot_mod4(g.row_as_z4(r), arow) != 0) return false;
    }
    return true;
}

std::vector<Z4Word> materialize_span(const QuaternaryMatrix& g, int max_log2) {
    const int log2 = static_cast<int>(2 * g.rows4() + g.rows2());
    if (log2 > max_log2)
        throw std::invalid_argument("materialize_span: span exceeds size cap");
    std::vector<Z4Word> words;
    words.reserve(std::size_t(1) << log2);
    for_each_span_word(g, [&](const Z4Word& w) { words.push_back(w); });
    return words;
}

}  // namespace z4
