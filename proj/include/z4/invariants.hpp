// invariants.hpp -- the equivalence-separating invariants: kernel, rank over
// GF(2), minimum distance, linearity, even/odd projections and weight
// distributions.

#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "z4/code.hpp"

namespace z4 {

/// Incremental Gaussian elimination over GF(2); rows are adopted as pivots
/// keyed by their highest set bit.
class Gf2Eliminator {
public:
    explicit Gf2Eliminator(std::size_t bits);

    /// Reduces w against the basis; adopts it when independent.
    /// Returns true iff the rank grew.
    bool insert(const BinaryWord& w);
    /// Same, for the Gray image of a Z4 word of length bits/2, computed
    /// without allocating.
    bool insert_gray(const Z4Word& w);

    int rank() const { return rank_; }

private:
    bool reduce_scratch();
    bool insert_small(std::uint64_t w);
    std::size_t bits_;
    std::vector<std::vector<std::uint64_t>> pivots_;  // indexed by top bit
    std::vector<std::uint64_t> scratch_;
    std::vector<std::uint64_t> small_pivots_;  // single-limb fast path
    int rank_ = 0;
};

/// kernel(H) = {x : x ^ H = H}.  Requires an explicit (or materializable)
/// code containing the zero word; the kernel is then a subset of H.
BinaryCode kernel(const BinaryCode& h, int max_log2 = 16);

enum class RankStrategy { enumeration, generator_span };

/// Dimension of the GF(2) span of all codewords, by streaming enumeration.
int rank_via_enumeration(const BinaryCode& c, int max_log2 = 26);

/// Dimension of the GF(2) span of the Gray image, computed from the Gray
/// images of the generators plus the pairwise correction terms
/// (z,z) = gray(2*(odd(g_i) & odd(g_j))) of the Gray addition identity.
/// Refuses to run unless the identity verifies exhaustively.
int rank_via_generators(const QuaternaryCode& c);

int rank(const BinaryCode& c, RankStrategy strategy, int max_log2 = 26);

/// Minimum Lee distance of an additive quaternary code: the minimum nonzero
/// Lee weight.  Empty for codes with fewer than two words.
std::optional<int> min_distance(const QuaternaryCode& c, int max_log2 = 26);

/// Minimum Hamming distance.  Gray-image codes use the minimum nonzero
/// weight (distances are translation-invariant through the Gray map);
/// explicit codes fall back to a pairwise scan of at most max_pairwise
/// words.
std::optional<int> min_distance(const BinaryCode& c, int max_log2 = 26,
                                std::size_t max_pairwise = 4096);

/// Exhaustive pairwise-scan oracles.
std::optional<int> min_distance_pairwise(const BinaryCode& c,
                                         std::size_t max_words = 4096);
std::optional<int> min_distance_pairwise(const QuaternaryCode& c,
                                         std::size_t max_words = 4096);

/// True iff the code is closed under XOR.
bool is_linear(const BinaryCode& c, int max_log2 = 13);

/// even(C) = {(c_0, c_2, ...) : (c_0, 0, c_2, 0, ...) in C} and the odd
/// analogue.  The code length must be even.
BinaryCode even_projection(const BinaryCode& c);
BinaryCode odd_projection(const BinaryCode& c);

/// Histogram of Lee weights over all codewords.
std::map<int, std::uint64_t> weight_distribution(const QuaternaryCode& c,
                                                 int max_log2 = 26);
/// Histogram of Hamming weights over all codewords.
std::map<int, std::uint64_t> weight_distribution(const BinaryCode& c,
                                                 int max_log2 = 26);

/// Summary of the invariants of one code.  For a quaternary code the
/// distance and weights are Lee; kernel, rank and linearity refer to the
/// binary Gray image.
struct InvariantReport {
    std::size_t length = 0;
    int log2_cardinality = 0;
    std::optional<std::uint64_t> cardinality;
    std::optional<int> min_distance;
    std::optional<std::uint64_t> kernel_size;
    std::optional<int> rank;
    std::optional<bool> linear;
    std::optional<std::map<int, std::uint64_t>> weight_distribution;

    friend bool operator==(const InvariantReport&, const InvariantReport&) =
        default;
};

/// Computes every invariant that fits the size caps: rank always (the
/// generator-span path covers codes too large to enumerate), kernel and
/// linearity up to 2^16 and 2^13 words, weights up to 2^20.
InvariantReport standard_report(const QuaternaryCode& c);

}  // namespace z4
