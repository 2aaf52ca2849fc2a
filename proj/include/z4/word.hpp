// word.hpp -- words over Z4 and Z2: modular arithmetic, the Lee and Hamming
// metrics, and the Gray map between them.
//
// A Z4 word packs one coordinate into two adjacent bits of a 64-bit limb
// (value = lo + 2*hi, lo bit at the even position).  With that layout,
// coordinatewise addition mod 4, negation, the odd part, the Lee weight and
// the Gray map all reduce to a handful of word-parallel bit operations,
// which keeps the exhaustive enumerations (up to 2^26 codewords) cheap.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace z4 {

namespace detail {

inline constexpr std::uint64_t kLo = 0x5555555555555555ULL;

// Compact the 32 bits at even positions of x into the low half.
constexpr std::uint32_t gather_even_bits(std::uint64_t x) {
    x &= kLo;
    x = (x ^ (x >> 1)) & 0x3333333333333333ULL;
    x = (x ^ (x >> 2)) & 0x0f0f0f0f0f0f0f0fULL;
    x = (x ^ (x >> 4)) & 0x00ff00ff00ff00ffULL;
    x = (x ^ (x >> 8)) & 0x0000ffff0000ffffULL;
    x = (x ^ (x >> 16)) & 0x00000000ffffffffULL;
    return static_cast<std::uint32_t>(x);
}

// Inverse of gather_even_bits: spread 32 bits over the even positions.
constexpr std::uint64_t scatter_even_bits(std::uint32_t v) {
    std::uint64_t x = v;
    x = (x ^ (x << 16)) & 0x0000ffff0000ffffULL;
    x = (x ^ (x << 8)) & 0x00ff00ff00ff00ffULL;
    x = (x ^ (x << 4)) & 0x0f0f0f0f0f0f0f0fULL;
    x = (x ^ (x << 2)) & 0x3333333333333333ULL;
    x = (x ^ (x << 1)) & kLo;
    return x;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Write the low `count` bits of value at bit offset pos.  The target bits
// must currently be zero.
void write_bits(std::vector<std::uint64_t>& limbs, std::size_t pos,
                std::uint64_t value, unsigned count);
std::uint64_t read_bits(const std::vector<std::uint64_t>& limbs,
                        std::size_t pos, unsigned count);

}  // namespace detail

/// Fixed-length word over Z2 with XOR addition, one coordinate per bit.
class BinaryWord {
public:
    explicit BinaryWord(std::size_t n);
    static BinaryWord from_bits(std::initializer_list<int> bits);
    static BinaryWord from_string(std::string_view s);
    static BinaryWord from_limbs(std::size_t n, std::vector<std::uint64_t> limbs);

    std::size_t size() const { return n_; }

    int get(std::size_t i) const {
        check_index(i);
        return static_cast<int>((limbs_[i >> 6] >> (i & 63)) & 1);
    }
    void set(std::size_t i, int bit);

    BinaryWord& operator^=(const BinaryWord& o);
    friend BinaryWord operator^(BinaryWord a, const BinaryWord& b) {
        a ^= b;
        return a;
    }
    /// Coordinatewise AND (used for the Gray-map addition identity).
    BinaryWord& operator&=(const BinaryWord& o);
    friend BinaryWord operator&(BinaryWord a, const BinaryWord& b) {
        a &= b;
        return a;
    }

    int weight() const;
    bool is_zero() const;

    std::string to_string() const;
    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

    const std::vector<std::uint64_t>& limbs() const { return limbs_; }

private:
    void check_index(std::size_t i) const {
        if (i >= n_) throw std::out_of_range("BinaryWord: index out of range");
    }
    std::size_t n_;
    std::vector<std::uint64_t> limbs_;
};

/// Fixed-length word over Z4 = {0,1,2,3} with coordinatewise mod-4 addition.
class Z4Word {
public:
    explicit Z4Word(std::size_t n);
    static Z4Word from_coords(std::initializer_list<int> coords);
    static Z4Word from_string(std::string_view s);
    static Z4Word from_limbs(std::size_t n, std::vector<std::uint64_t> limbs);

    std::size_t size() const { return n_; }

    int get(std::size_t i) const {
        check_index(i);
        return static_cast<int>((limbs_[i >> 5] >> ((i & 31) * 2)) & 3);
    }
    void set(std::size_t i, int value);

    Z4Word& operator+=(const Z4Word& o) {
        check_same_size(o);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            const std::uint64_t x = limbs_[i];
            const std::uint64_t y = o.limbs_[i];
            limbs_[i] = x ^ y ^ (((x & y) & detail::kLo) << 1);
        }
        return *this;
    }
    friend Z4Word operator+(Z4Word a, const Z4Word& b) {
        a += b;
        return a;
    }
    friend Z4Word operator-(Z4Word a, const Z4Word& b);

    /// Coordinatewise multiple s*w for a scalar s in {0,1,2,3}.
    Z4Word times(int s) const;

    int lee_weight() const {
        int acc = 0;
        for (const std::uint64_t x : limbs_) {
            const std::uint64_t hi = (x >> 1) & detail::kLo;
            acc += __builtin_popcountll(hi) +
                   __builtin_popcountll(hi ^ (x & detail::kLo));
        }
        return acc;
    }

    bool is_zero() const;

    /// Coordinatewise parity (c mod 2) as a binary word.
    BinaryWord odd_part() const;

    std::string to_string() const;
    friend bool operator==(const Z4Word&, const Z4Word&) = default;

    const std::vector<std::uint64_t>& limbs() const { return limbs_; }

private:
    void check_index(std::size_t i) const {
        if (i >= n_) throw std::out_of_range("Z4Word: index out of range");
    }
    void check_same_size(const Z4Word& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Z4Word: length mismatch");
    }
    std::size_t n_;
    std::vector<std::uint64_t> limbs_;
};

/// Coordinatewise negation: c -> (4 - c) mod 4.
Z4Word negate(const Z4Word& w);

inline int lee_weight(const Z4Word& w) { return w.lee_weight(); }

/// Lee distance d_L(a,b) = wt_L(b - a).  Requires equal lengths.
int lee_distance(const Z4Word& a, const Z4Word& b);

/// Number of positions in which x and y differ.  Requires equal lengths.
int hamming_distance(const BinaryWord& x, const BinaryWord& y);

/// The Gray map phi(c) = (beta(c), gamma(c)): coordinate i of the input maps
/// to coordinates i and i+n of the output (0->00, 1->01, 2->11, 3->10 as
/// (beta,gamma) pairs).
BinaryWord gray_map(const Z4Word& w);

/// Inverse of gray_map; the input length must be even.
Z4Word gray_inverse(const BinaryWord& x);

/// The Z4 word 2*z for a binary word z (entries in {0,2}).
Z4Word doubled(const BinaryWord& z);

/// Halve a word with entries in {0,2}; throws on odd entries.
BinaryWord halved(const Z4Word& w);

/// Inner product sum_i a_i * b_i mod 4.  Requires equal lengths.
int dot_mod4(const Z4Word& a, const Z4Word& b);

Z4Word concat(const Z4Word& a, const Z4Word& b);
BinaryWord concat(const BinaryWord& a, const BinaryWord& b);

/// Exhaustively checks, over all 16 scalar pairs, the identity
///   gray(a+b) = gray(a) ^ gray(b) ^ gray(2*(odd(a) & odd(b))),
/// which the generator-span rank path relies on.
bool verify_gray_addition_identity();

}  // namespace z4

template <>
struct std::hash<z4::BinaryWord> {
    std::size_t operator()(const z4::BinaryWord& w) const {
        std::uint64_t h = z4::detail::splitmix64(w.size());
        for (const std::uint64_t limb : w.limbs())
            h = z4::detail::splitmix64(h ^ limb);
        return static_cast<std::size_t>(h);
    }
};

template <>
struct std::hash<z4::Z4Word> {
    std::size_t operator()(const z4::Z4Word& w) const {
        std::uint64_t h = z4::detail::splitmix64(w.size() ^ 0x9e37ULL);
        for (const std::uint64_t limb : w.limbs())
            h = z4::detail::splitmix64(h ^ limb);
        return static_cast<std::size_t>(h);
    }
};
