#include "z4/invariants.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace z4 {

namespace {

// Bits at even positions of x, compacted to half length.
BinaryWord extract_even_positions(const BinaryWord& x) {
    const std::size_t half = x.size() / 2;
    std::vector<std::uint64_t> out((half + 63) / 64, 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
        const std::uint64_t lo = detail::gather_even_bits(x.limbs()[2 * j]);
        std::uint64_t hi = 0;
        if (2 * j + 1 < x.limbs().size())
            hi = detail::gather_even_bits(x.limbs()[2 * j + 1]);
        out[j] = lo | (hi << 32);
    }
    return BinaryWord::from_limbs(half, std::move(out));
}

BinaryWord extract_odd_positions(const BinaryWord& x) {
    const std::size_t half = x.size() / 2;
    std::vector<std::uint64_t> out((half + 63) / 64, 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
        const std::uint64_t lo =
            detail::gather_even_bits(x.limbs()[2 * j] >> 1);
        std::uint64_t hi = 0;
        if (2 * j + 1 < x.limbs().size())
            hi = detail::gather_even_bits(x.limbs()[2 * j + 1] >> 1);
        out[j] = lo | (hi << 32);
    }
    return BinaryWord::from_limbs(half, std::move(out));
}

// (y_0, 0, y_1, 0, ...) when at_even, else (0, y_0, 0, y_1, ...).
BinaryWord interleave_zeros(const BinaryWord& y, bool at_even) {
    const std::size_t n = 2 * y.size();
    std::vector<std::uint64_t> out((n + 63) / 64, 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
        const std::uint32_t chunk = static_cast<std::uint32_t>(
            detail::read_bits(y.limbs(), 32 * j,
                              static_cast<unsigned>(
                                  y.size() - 32 * j < 32 ? y.size() - 32 * j : 32)));
        out[j] = detail::scatter_even_bits(chunk) << (at_even ? 0 : 1);
    }
    return BinaryWord::from_limbs(n, std::move(out));
}

bool odd_support_empty(const BinaryWord& x) {
    for (const std::uint64_t limb : x.limbs())
        if (limb & ~detail::kLo) return false;
    return true;
}

bool even_support_empty(const BinaryWord& x) {
    for (const std::uint64_t limb : x.limbs())
        if (limb & detail::kLo) return false;
    return true;
}

BinaryCode project(const BinaryCode& c, bool even) {
    if (c.length() % 2 != 0)
        throw std::invalid_argument("projection: code length must be even");
    const std::size_t half = c.length() / 2;
    std::vector<BinaryWord> out;
    if (c.materialized()) {
        for (const BinaryWord& w : c.words()) {
            if (even ? odd_support_empty(w) : even_support_empty(w))
                out.push_back(even ? extract_even_positions(w)
                                   : extract_odd_positions(w));
        }
    } else {
        if (half > 20)
            throw std::invalid_argument("projection: candidate space exceeds 2^20");
        for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << half); ++bits) {
            const BinaryWord y = BinaryWord::from_limbs(half, {bits});
            if (c.contains(interleave_zeros(y, even))) out.push_back(y);
        }
    }
    return BinaryCode::from_words(half, std::move(out));
}

}  // namespace

// ---------------------------------------------------------------------------
// Gf2Eliminator

Gf2Eliminator::Gf2Eliminator(std::size_t bits)
    : bits_(bits), pivots_(bits), scratch_((bits + 63) / 64, 0),
      small_pivots_(bits <= 64 ? bits : 0, 0) {}

bool Gf2Eliminator::insert_small(std::uint64_t w) {
    while (w) {
        const std::size_t top = 63 - std::countl_zero(w);
        const std::uint64_t row = small_pivots_[top];
        if (!row) {
            small_pivots_[top] = w;
            ++rank_;
            return true;
        }
        w ^= row;
    }
    return false;
}

bool Gf2Eliminator::reduce_scratch() {
    while (true) {
        std::size_t top = bits_;
        for (std::size_t i = scratch_.size(); i-- > 0;) {
            if (scratch_[i]) {
                top = 64 * i + 63 - std::countl_zero(scratch_[i]);
                break;
            }
        }
        if (top == bits_) return false;  // reduced to zero
        if (pivots_[top].empty()) {
            pivots_[top] = scratch_;
            ++rank_;
            return true;
        }
        const std::vector<std::uint64_t>& row = pivots_[top];
        for (std::size_t i = 0; i < scratch_.size(); ++i) scratch_[i] ^= row[i];
    }
}

bool Gf2Eliminator::insert(const BinaryWord& w) {
    if (w.size() != bits_)
        throw std::invalid_argument("Gf2Eliminator: word length mismatch");
    if (bits_ <= 64) return insert_small(w.limbs()[0]);
    scratch_ = w.limbs();
    return reduce_scratch();
}

bool Gf2Eliminator::insert_gray(const Z4Word& w) {
    if (w.size() * 2 != bits_)
        throw std::invalid_argument("Gf2Eliminator: word length mismatch");
    const std::size_t n = w.size();
    if (n <= 32) {
        const std::uint64_t limb = w.limbs()[0];
        const std::uint64_t beta =
            detail::gather_even_bits((limb >> 1) & detail::kLo);
        const std::uint64_t gamma =
            detail::gather_even_bits(((limb >> 1) ^ limb) & detail::kLo);
        return insert_small(beta | (gamma << n));
    }
    std::fill(scratch_.begin(), scratch_.end(), 0);
    for (std::size_t i = 0; i < n; i += 32) {
        const unsigned chunk = static_cast<unsigned>(n - i < 32 ? n - i : 32);
        const std::uint64_t limb = w.limbs()[i / 32];
        detail::write_bits(scratch_, i,
                           detail::gather_even_bits((limb >> 1) & detail::kLo),
                           chunk);
        detail::write_bits(
            scratch_, n + i,
            detail::gather_even_bits(((limb >> 1) ^ limb) & detail::kLo), chunk);
    }
    return reduce_scratch();
}

// ---------------------------------------------------------------------------
// Kernel, rank, linearity

BinaryCode kernel(const BinaryCode& h, int max_log2) {
    const BinaryCode code = h.materialize(max_log2);
    const std::vector<BinaryWord>& words = code.words();
    std::unordered_set<BinaryWord> member(words.begin(), words.end());
    if (member.find(BinaryWord(code.length())) == member.end())
        throw std::invalid_argument("kernel: code must contain the zero word");

    // x ^ H = H and 0 in H force x in H, so only codewords are candidates.
    std::vector<BinaryWord> ker;
    for (const BinaryWord& x : words) {
        bool keep = true;
        for (const BinaryWord& w : words) {
            if (member.find(x ^ w) == member.end()) {
                keep = false;
                break;
            }
        }
        if (keep) ker.push_back(x);
    }
    return BinaryCode::from_words(code.length(), std::move(ker));
}

int rank_via_enumeration(const BinaryCode& c, int max_log2) {
    Gf2Eliminator elim(c.length());
    if (c.materialized()) {
        for (const BinaryWord& w : c.words()) elim.insert(w);
    } else {
        if (c.log2_size() > max_log2)
            throw std::invalid_argument("rank: enumeration exceeds size cap");
        c.source()->for_each_codeword(
            [&](const Z4Word& w) { elim.insert_gray(w); });
    }
    return elim.rank();
}

int rank_via_generators(const QuaternaryCode& c) {
    static const bool identity_ok = verify_gray_addition_identity();
    if (!identity_ok)
        throw std::logic_error(
            "rank_via_generators: Gray addition identity failed its exhaustive check");

    const QuaternaryMatrix& g = c.generator();
    Gf2Eliminator elim(2 * c.length());
    for (std::size_t r = 0; r < g.rows(); ++r) elim.insert_gray(g.row_as_z4(r));
    // Correction terms close the span under Z4 addition: for rows of order
    // two the odd part vanishes, so only block-1 pairs contribute.
    std::vector<BinaryWord> odd;
    odd.reserve(g.rows4());
    for (std::size_t i = 0; i < g.rows4(); ++i)
        odd.push_back(g.row4(i).odd_part());
    for (std::size_t i = 0; i < odd.size(); ++i)
        for (std::size_t j = i; j < odd.size(); ++j) {
            const BinaryWord z = odd[i] & odd[j];
            elim.insert(concat(z, z));
        }
    return elim.rank();
}

int rank(const BinaryCode& c, RankStrategy strategy, int max_log2) {
    if (strategy == RankStrategy::enumeration)
        return rank_via_enumeration(c, max_log2);
    if (!c.source())
        throw std::invalid_argument(
            "rank: generator_span requires a Gray-image code");
    return rank_via_generators(*c.source());
}

bool is_linear(const BinaryCode& c, int max_log2) {
    const BinaryCode code = c.materialize(max_log2);
    const std::vector<BinaryWord>& words = code.words();
    std::unordered_set<BinaryWord> member(words.begin(), words.end());
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (member.find(words[i] ^ words[j]) == member.end()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Distances

std::optional<int> min_distance(const QuaternaryCode& c, int max_log2) {
    if (c.log2_size() > max_log2)
        throw std::invalid_argument("min_distance: enumeration exceeds size cap");
    if (c.log2_size() == 0) return std::nullopt;
    int best = std::numeric_limits<int>::max();
    c.for_each_codeword([&](const Z4Word& w) {
        const int wt = w.lee_weight();
        if (wt > 0 && wt < best) best = wt;
    });
    return best;
}

std::optional<int> min_distance(const BinaryCode& c, int max_log2,
                                std::size_t max_pairwise) {
    if (c.materialized()) return min_distance_pairwise(c, max_pairwise);
    if (c.log2_size() > max_log2)
        throw std::invalid_argument("min_distance: enumeration exceeds size cap");
    if (c.log2_size() == 0) return std::nullopt;
    // wt_H(gray(w)) = wt_L(w), so scan Lee weights of the quaternary source.
    int best = std::numeric_limits<int>::max();
    c.source()->for_each_codeword([&](const Z4Word& w) {
        const int wt = w.lee_weight();
        if (wt > 0 && wt < best) best = wt;
    });
    return best;
}

std::optional<int> min_distance_pairwise(const BinaryCode& c,
                                         std::size_t max_words) {
    const BinaryCode code = c.materialized() ? c : c.materialize();
    const std::vector<BinaryWord>& words = code.words();
    if (words.size() > max_words)
        throw std::invalid_argument("min_distance_pairwise: too many words");
    if (words.size() < 2) return std::nullopt;
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, hamming_distance(words[i], words[j]));
    return best;
}

std::optional<int> min_distance_pairwise(const QuaternaryCode& c,
                                         std::size_t max_words) {
    if (c.log2_size() > 26)
        throw std::invalid_argument("min_distance_pairwise: too many words");
    const std::vector<Z4Word> words = c.materialize();
    if (words.size() > max_words)
        throw std::invalid_argument("min_distance_pairwise: too many words");
    if (words.size() < 2) return std::nullopt;
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, lee_distance(words[i], words[j]));
    return best;
}

// ---------------------------------------------------------------------------
// Projections and weight distributions

BinaryCode even_projection(const BinaryCode& c) { return project(c, true); }
BinaryCode odd_projection(const BinaryCode& c) { return project(c, false); }

std::map<int, std::uint64_t> weight_distribution(const QuaternaryCode& c,
                                                 int max_log2) {
    if (c.log2_size() > max_log2)
        throw std::invalid_argument("weight_distribution: exceeds size cap");
    std::vector<std::uint64_t> hist(2 * c.length() + 1, 0);
    c.for_each_codeword([&](const Z4Word& w) { ++hist[w.lee_weight()]; });
    std::map<int, std::uint64_t> out;
    for (std::size_t w = 0; w < hist.size(); ++w)
        if (hist[w]) out.emplace(static_cast<int>(w), hist[w]);
    return out;
}

std::map<int, std::uint64_t> weight_distribution(const BinaryCode& c,
                                                 int max_log2) {
    std::vector<std::uint64_t> hist(c.length() + 1, 0);
    if (c.materialized()) {
        for (const BinaryWord& w : c.words()) ++hist[w.weight()];
    } else {
        if (c.log2_size() > max_log2)
            throw std::invalid_argument("weight_distribution: exceeds size cap");
        c.source()->for_each_codeword(
            [&](const Z4Word& w) { ++hist[w.lee_weight()]; });
    }
    std::map<int, std::uint64_t> out;
    for (std::size_t w = 0; w < hist.size(); ++w)
        if (hist[w]) out.emplace(static_cast<int>(w), hist[w]);
    return out;
}

// ---------------------------------------------------------------------------
// Reports

InvariantReport standard_report(const QuaternaryCode& c) {
    InvariantReport r;
    r.length = c.length();
    r.log2_cardinality = c.log2_size();
    if (r.log2_cardinality <= 62)
        r.cardinality = std::uint64_t(1) << r.log2_cardinality;
    if (r.log2_cardinality <= 26) r.min_distance = min_distance(c);
    const BinaryCode image = binary_image(c);
    if (r.log2_cardinality <= 16) r.kernel_size = kernel(image).size();
    r.rank = r.log2_cardinality <= 16 ? rank_via_enumeration(image)
                                      : rank_via_generators(c);
    if (r.log2_cardinality <= 13) r.linear = is_linear(image);
    if (r.log2_cardinality <= 20) r.weight_distribution = weight_distribution(c);
    return r;
}

}  // namespace z4
