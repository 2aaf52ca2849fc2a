// matrix.hpp -- two-block matrices [G1; 2*G2] over Z4, used both as
// generator and as check matrices, together with span enumeration, row
// reduction to the 4^k1 2^k2 type, null spaces, and the lexicographic
// family matrices A(r1,r2).

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "z4/word.hpp"

namespace z4 {

/// Type 4^k1 2^k2 of an additive code: k1 order-4 and k2 order-2 generators.
struct CodeType {
    int k1 = 0;
    int k2 = 0;
    int log2_size() const { return 2 * k1 + k2; }
    friend bool operator==(const CodeType&, const CodeType&) = default;
};

/// Matrix of the form [G1; 2*G2]: block 1 holds rows over Z4, block 2 holds
/// binary rows that stand for their doubled {0,2}-valued form.
class QuaternaryMatrix {
public:
    explicit QuaternaryMatrix(std::size_t cols);

    std::size_t cols() const { return cols_; }
    std::size_t rows4() const { return block1_.size(); }
    std::size_t rows2() const { return block2_.size(); }
    std::size_t rows() const { return block1_.size() + block2_.size(); }

    const Z4Word& row4(std::size_t i) const { return block1_.at(i); }
    const BinaryWord& row2(std::size_t i) const { return block2_.at(i); }
    /// Block-2 row in its doubled form (entries in {0,2}).
    Z4Word row2_doubled(std::size_t i) const { return doubled(block2_.at(i)); }
    /// Any row as a Z4 word, block-2 rows doubled; r indexes block 1 first.
    Z4Word row_as_z4(std::size_t r) const;

    void append_row4(Z4Word w);
    void append_row2(BinaryWord b);

    friend bool operator==(const QuaternaryMatrix&, const QuaternaryMatrix&) =
        default;

private:
    std::size_t cols_;
    std::vector<Z4Word> block1_;
    std::vector<BinaryWord> block2_;
};

/// The matrix A(r1,r2): all columns (1, v, u) with v in Z4^r1 and
/// u in {0,2}^r2, in lexicographic order (the row right below the all-ones
/// row is most significant; digits ordered 0<1<2<3).
QuaternaryMatrix build_a(int r1, int r2);

/// Result of Z4 row reduction: order-4 rows with unit pivots, then order-2
/// rows (stored halved) with their pivots.  Pivot columns are disjoint and
/// each pivot column is clear in every other row; unit-row entries at
/// two-pivot columns are reduced to {0,1}.
struct RowReduced {
    std::vector<Z4Word> unit_rows;
    std::vector<std::size_t> unit_cols;
    std::vector<BinaryWord> two_rows;
    std::vector<std::size_t> two_cols;
    std::size_t dependent_rows = 0;
};

RowReduced row_reduce(const QuaternaryMatrix& m);

/// Type of the group generated by the rows of m.
CodeType code_type(const QuaternaryMatrix& m);

/// Generator matrix of {c : m * c^T = 0 (mod 4)}.  Throws if row reduction
/// finds dependent rows.
QuaternaryMatrix null_space(const QuaternaryMatrix& m);

/// True iff every row of a has zero inner product with every row of g.
bool is_orthogonal(const QuaternaryMatrix& g, const QuaternaryMatrix& a);

/// Visits all 2^(2*rows4 + rows2) span words (v1, v2) * [G1; 2*G2] in
/// lexicographic coefficient order, starting from the zero word.  Words
/// repeat exactly when rows are dependent.
template <typename Fn>
void for_each_span_word(const QuaternaryMatrix& g, Fn&& fn) {
    const std::size_t m1 = g.rows4();
    const std::size_t m2 = g.rows2();
    const std::size_t m = m1 + m2;
    const std::size_t n = g.cols();

    std::vector<std::array<Z4Word, 3>> mult4;
    mult4.reserve(m1);
    for (std::size_t i = 0; i < m1; ++i)
        mult4.push_back({g.row4(i), g.row4(i).times(2), g.row4(i).times(3)});
    std::vector<Z4Word> mult2;
    mult2.reserve(m2);
    for (std::size_t j = 0; j < m2; ++j) mult2.push_back(g.row2_doubled(j));

    std::vector<int> digit(m, 0);
    std::vector<Z4Word> prefix(m + 1, Z4Word(n));
    const auto max_digit = [&](std::size_t i) { return i < m1 ? 3 : 1; };

    fn(static_cast<const Z4Word&>(prefix[m]));
    while (true) {
        std::size_t j = m;
        while (j > 0 && digit[j - 1] == max_digit(j - 1)) --j;
        if (j == 0) break;
        --j;
        ++digit[j];
        prefix[j + 1] = prefix[j];
        prefix[j + 1] += j < m1 ? mult4[j][digit[j] - 1] : mult2[j - m1];
        for (std::size_t i = j + 1; i < m; ++i) {
            digit[i] = 0;
            prefix[i + 1] = prefix[j + 1];
        }
        fn(static_cast<const Z4Word&>(prefix[m]));
    }
}

/// Collects the span; refuses more than 2^max_log2 words.
std::vector<Z4Word> materialize_span(const QuaternaryMatrix& g,
                                     int max_log2 = 26);

}  // namespace z4
