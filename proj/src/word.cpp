#include "z4/word.hpp"

namespace z4 {

namespace detail {

void write_bits(std::vector<std::uint64_t>& limbs, std::size_t pos,
                std::uint64_t value, unsigned count) {
    if (count == 0) return;
    if (count < 64) value &= (std::uint64_t(1) << count) - 1;
    const std::size_t idx = pos >> 6;
    const unsigned off = static_cast<unsigned>(pos & 63);
    limbs[idx] |= value << off;
    if (off + count > 64) limbs[idx + 1] |= value >> (64 - off);
}

std::uint64_t read_bits(const std::vector<std::uint64_t>& limbs,
                        std::size_t pos, unsigned count) {
    if (count == 0) return 0;
    const std::size_t idx = pos >> 6;
    const unsigned off = static_cast<unsigned>(pos & 63);
    std::uint64_t v = limbs[idx] >> off;
    if (off + count > 64 && idx + 1 < limbs.size())
        v |= limbs[idx + 1] << (64 - off);
    if (count < 64) v &= (std::uint64_t(1) << count) - 1;
    return v;
}

namespace {

std::size_t checked_length(std::size_t n) {
    if (n == 0) throw std::invalid_argument("word length must be positive");
    return n;
}

}  // namespace

}  // namespace detail

// ---------------------------------------------------------------------------
// BinaryWord

BinaryWord::BinaryWord(std::size_t n)
    : n_(detail::checked_length(n)), limbs_((n + 63) / 64, 0) {}

BinaryWord BinaryWord::from_bits(std::initializer_list<int> bits) {
    BinaryWord w(bits.size());
    std::size_t i = 0;
    for (const int b : bits) w.set(i++, b);
    return w;
}

BinaryWord BinaryWord::from_string(std::string_view s) {
    BinaryWord w(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1')
            throw std::invalid_argument("BinaryWord: invalid digit");
        if (s[i] == '1') w.set(i, 1);
    }
    return w;
}

BinaryWord BinaryWord::from_limbs(std::size_t n, std::vector<std::uint64_t> limbs) {
    BinaryWord w(n);
    if (limbs.size() != w.limbs_.size())
        throw std::invalid_argument("BinaryWord: limb count mismatch");
    if (n & 63) limbs.back() &= (std::uint64_t(1) << (n & 63)) - 1;
    w.limbs_ = std::move(limbs);
    return w;
}

void BinaryWord::set(std::size_t i, int bit) {
    check_index(i);
    if (bit != 0 && bit != 1)
        throw std::invalid_argument("BinaryWord: bit must be 0 or 1");
    const std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (bit)
        limbs_[i >> 6] |= mask;
    else
        limbs_[i >> 6] &= ~mask;
}

BinaryWord& BinaryWord::operator^=(const BinaryWord& o) {
    if (n_ != o.n_) throw std::invalid_argument("BinaryWord: length mismatch");
    for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= o.limbs_[i];
    return *this;
}

BinaryWord& BinaryWord::operator&=(const BinaryWord& o) {
    if (n_ != o.n_) throw std::invalid_argument("BinaryWord: length mismatch");
    for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] &= o.limbs_[i];
    return *this;
}

int BinaryWord::weight() const {
    int acc = 0;
    for (const std::uint64_t x : limbs_) acc += __builtin_popcountll(x);
    return acc;
}

bool BinaryWord::is_zero() const {
    for (const std::uint64_t x : limbs_)
        if (x) return false;
    return true;
}

std::string BinaryWord::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

// ---------------------------------------------------------------------------
// Z4Word

Z4Word::Z4Word(std::size_t n)
    : n_(detail::checked_length(n)), limbs_((n + 31) / 32, 0) {}

Z4Word Z4Word::from_coords(std::initializer_list<int> coords) {
    Z4Word w(coords.size());
    std::size_t i = 0;
    for (const int c : coords) w.set(i++, c);
    return w;
}

Z4Word Z4Word::from_string(std::string_view s) {
    Z4Word w(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '3')
            throw std::invalid_argument("Z4Word: invalid digit");
        w.set(i, s[i] - '0');
    }
    return w;
}

Z4Word Z4Word::from_limbs(std::size_t n, std::vector<std::uint64_t> limbs) {
    Z4Word w(n);
    if (limbs.size() != w.limbs_.size())
        throw std::invalid_argument("Z4Word: limb count mismatch");
    if (n & 31) limbs.back() &= (std::uint64_t(1) << ((n & 31) * 2)) - 1;
    w.limbs_ = std::move(limbs);
    return w;
}

void Z4Word::set(std::size_t i, int value) {
    check_index(i);
    if (value < 0 || value > 3)
        throw std::invalid_argument("Z4Word: coordinate must be in 0..3");
    const unsigned shift = (i & 31) * 2;
    std::uint64_t& limb = limbs_[i >> 5];
    limb = (limb & ~(std::uint64_t(3) << shift)) |
           (std::uint64_t(value) << shift);
}

Z4Word operator-(Z4Word a, const Z4Word& b) {
    a += negate(b);
    return a;
}

Z4Word Z4Word::times(int s) const {
    switch (s & 3) {
        case 0:
            return Z4Word(n_);
        case 1:
            return *this;
        case 2: {
            Z4Word r(n_);
            for (std::size_t i = 0; i < limbs_.size(); ++i)
                r.limbs_[i] = (limbs_[i] & detail::kLo) << 1;
            return r;
        }
        default:
            return negate(*this);
    }
}

bool Z4Word::is_zero() const {
    for (const std::uint64_t x : limbs_)
        if (x) return false;
    return true;
}

BinaryWord Z4Word::odd_part() const {
    std::vector<std::uint64_t> out((n_ + 63) / 64, 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
        const std::uint64_t lo =
            detail::gather_even_bits(limbs_[2 * j] & detail::kLo);
        std::uint64_t hi = 0;
        if (2 * j + 1 < limbs_.size())
            hi = detail::gather_even_bits(limbs_[2 * j + 1] & detail::kLo);
        out[j] = lo | (hi << 32);
    }
    return BinaryWord::from_limbs(n_, std::move(out));
}

std::string Z4Word::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        s[i] = static_cast<char>('0' + get(i));
    return s;
}

// ---------------------------------------------------------------------------
// Free operations

Z4Word negate(const Z4Word& w) {
    std::vector<std::uint64_t> limbs = w.limbs();
    for (std::uint64_t& x : limbs) x ^= (x & detail::kLo) << 1;
    return Z4Word::from_limbs(w.size(), std::move(limbs));
}

int lee_distance(const Z4Word& a, const Z4Word& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("lee_distance: length mismatch");
    return (b - a).lee_weight();
}

int hamming_distance(const BinaryWord& x, const BinaryWord& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    int acc = 0;
    for (std::size_t i = 0; i < x.limbs().size(); ++i)
        acc += __builtin_popcountll(x.limbs()[i] ^ y.limbs()[i]);
    return acc;
}

BinaryWord gray_map(const Z4Word& w) {
    const std::size_t n = w.size();
    std::vector<std::uint64_t> out((2 * n + 63) / 64, 0);
    for (std::size_t i = 0; i < n; i += 32) {
        const unsigned chunk = static_cast<unsigned>(n - i < 32 ? n - i : 32);
        const std::uint64_t limb = w.limbs()[i / 32];
        // beta = high bit, gamma = high xor low, per the 0,1,2,3 table.
        const std::uint32_t beta =
            detail::gather_even_bits((limb >> 1) & detail::kLo);
        const std::uint32_t gamma =
            detail::gather_even_bits(((limb >> 1) ^ limb) & detail::kLo);
        detail::write_bits(out, i, beta, chunk);
        detail::write_bits(out, n + i, gamma, chunk);
    }
    return BinaryWord::from_limbs(2 * n, std::move(out));
}

Z4Word gray_inverse(const BinaryWord& x) {
    if (x.size() % 2 != 0)
        throw std::invalid_argument("gray_inverse: length must be even");
    const std::size_t n = x.size() / 2;
    std::vector<std::uint64_t> out((n + 31) / 32, 0);
    for (std::size_t i = 0; i < n; i += 32) {
        const unsigned chunk = static_cast<unsigned>(n - i < 32 ? n - i : 32);
        const std::uint32_t beta =
            static_cast<std::uint32_t>(detail::read_bits(x.limbs(), i, chunk));
        const std::uint32_t gamma = static_cast<std::uint32_t>(
            detail::read_bits(x.limbs(), n + i, chunk));
        out[i / 32] = detail::scatter_even_bits(beta ^ gamma) |
                      (detail::scatter_even_bits(beta) << 1);
    }
    return Z4Word::from_limbs(n, std::move(out));
}

Z4Word doubled(const BinaryWord& z) {
    const std::size_t n = z.size();
    std::vector<std::uint64_t> out((n + 31) / 32, 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
        const std::uint32_t bits = static_cast<std::uint32_t>(detail::read_bits(
            z.limbs(), 32 * j, static_cast<unsigned>(n - 32 * j < 32 ? n - 32 * j : 32)));
        out[j] = detail::scatter_even_bits(bits) << 1;
    }
    return Z4Word::from_limbs(n, std::move(out));
}

BinaryWord halved(const Z4Word& w) {
    for (const std::uint64_t x : w.limbs())
        if (x & detail::kLo)
            throw std::invalid_argument("halved: word has odd entries");
    const std::size_t n = w.size();
    std::vector<std::uint64_t> out((n + 63) / 64, 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
        const std::uint64_t lo =
            detail::gather_even_bits((w.limbs()[2 * j] >> 1) & detail::kLo);
        std::uint64_t hi = 0;
        if (2 * j + 1 < w.limbs().size())
            hi = detail::gather_even_bits((w.limbs()[2 * j + 1] >> 1) & detail::kLo);
        out[j] = lo | (hi << 32);
    }
    return BinaryWord::from_limbs(n, std::move(out));
}

int dot_mod4(const Z4Word& a, const Z4Word& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot_mod4: length mismatch");
    int ones = 0;
    int twos = 0;
    for (std::size_t i = 0; i < a.limbs().size(); ++i) {
        const std::uint64_t la = a.limbs()[i] & detail::kLo;
        const std::uint64_t ha = (a.limbs()[i] >> 1) & detail::kLo;
        const std::uint64_t lb = b.limbs()[i] & detail::kLo;
        const std::uint64_t hb = (b.limbs()[i] >> 1) & detail::kLo;
        ones += __builtin_popcountll(la & lb);
        twos += __builtin_popcountll((la & hb) ^ (ha & lb));
    }
    return (ones + 2 * twos) & 3;
}

Z4Word concat(const Z4Word& a, const Z4Word& b) {
    const std::size_t n = a.size() + b.size();
    std::vector<std::uint64_t> out((n + 31) / 32, 0);
    for (std::size_t i = 0; i < 2 * a.size(); i += 64) {
        const unsigned chunk =
            static_cast<unsigned>(2 * a.size() - i < 64 ? 2 * a.size() - i : 64);
        detail::write_bits(out, i, detail::read_bits(a.limbs(), i, chunk), chunk);
    }
    for (std::size_t i = 0; i < 2 * b.size(); i += 64) {
        const unsigned chunk =
            static_cast<unsigned>(2 * b.size() - i < 64 ? 2 * b.size() - i : 64);
        detail::write_bits(out, 2 * a.size() + i,
                           detail::read_bits(b.limbs(), i, chunk), chunk);
    }
    return Z4Word::from_limbs(n, std::move(out));
}

BinaryWord concat(const BinaryWord& a, const BinaryWord& b) {
    const std::size_t n = a.size() + b.size();
    std::vector<std::uint64_t> out((n + 63) / 64, 0);
    for (std::size_t i = 0; i < a.size(); i += 64) {
        const unsigned chunk =
            static_cast<unsigned>(a.size() - i < 64 ? a.size() - i : 64);
        detail::write_bits(out, i, detail::read_bits(a.limbs(), i, chunk), chunk);
    }
    for (std::size_t i = 0; i < b.size(); i += 64) {
        const unsigned chunk =
            static_cast<unsigned>(b.size() - i < 64 ? b.size() - i : 64);
        detail::write_bits(out, a.size() + i,
                           detail::read_bits(b.limbs(), i, chunk), chunk);
    }
    return BinaryWord::from_limbs(n, std::move(out));
}

bool verify_gray_addition_identity() {
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const Z4Word wa = Z4Word::from_coords({a});
            const Z4Word wb = Z4Word::from_coords({b});
            const BinaryWord correction =
                gray_map(doubled(wa.odd_part() & wb.odd_part()));
            if (gray_map(wa + wb) !=
                (gray_map(wa) ^ gray_map(wb) ^ correction))
                return false;
        }
    }
    return true;
}

}  // namespace z4
