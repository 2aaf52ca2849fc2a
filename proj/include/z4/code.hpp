// code.hpp -- the Hadamard family H(r1,r2) and the extended perfect family
// C(r1,r2), quaternary codes with their binary Gray images, parameters and
// membership tests.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "z4/matrix.hpp"

namespace z4 {

/// Family parameters (r1, r2) with the derived quantities
/// n = 2^(2*r1+r2), N = 2n = 2^k, k = 2*r1+r2+1, r0 = r1+1.
struct FamilyParams {
    int r1 = 0;
    int r2 = 0;

    FamilyParams(int r1_, int r2_) : r1(r1_), r2(r2_) {
        if (r1 < 0 || r2 < 0)
            throw std::invalid_argument("FamilyParams: parameters must be nonnegative");
        if (2 * r1 + r2 > 20)
            throw std::invalid_argument("FamilyParams: 2*r1+r2 exceeds the size cap (20)");
    }

    int k() const { return 2 * r1 + r2 + 1; }
    int r0() const { return r1 + 1; }
    std::size_t n() const { return std::size_t(1) << (2 * r1 + r2); }
    std::size_t binary_length() const { return n() * 2; }

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// All (r1,r2) with 2*r1+r2+1 = k, ordered by r1 ascending.
std::vector<FamilyParams> family_params_table(int k);

/// An additive subgroup of Z4^n, held as a generator matrix and, when known,
/// a check matrix.  Immutable after construction.
class QuaternaryCode {
public:
    static QuaternaryCode from_generator(QuaternaryMatrix g);
    static QuaternaryCode from_check(QuaternaryMatrix a);
    /// Both matrices; validates that they are orthogonal and that the
    /// cardinalities multiply to 4^n.
    static QuaternaryCode from_pair(QuaternaryMatrix g, QuaternaryMatrix a);

    std::size_t length() const { return gen_.cols(); }
    CodeType type() const { return type_; }
    int log2_size() const { return type_.log2_size(); }

    const QuaternaryMatrix& generator() const { return gen_; }
    const QuaternaryMatrix* check() const {
        return check_ ? &*check_ : nullptr;
    }

    /// Membership: zero syndrome against the check matrix when present,
    /// otherwise solved against the reduced generator.
    bool contains(const Z4Word& w) const;

    template <typename Fn>
    void for_each_codeword(Fn&& fn) const {
        for_each_span_word(gen_, fn);
    }

    std::vector<Z4Word> materialize(int max_log2 = 26) const {
        return materialize_span(gen_, max_log2);
    }

private:
    QuaternaryCode(QuaternaryMatrix g, std::optional<QuaternaryMatrix> a);

    QuaternaryMatrix gen_;
    std::optional<QuaternaryMatrix> check_;
    RowReduced reduced_;
    CodeType type_;
};

/// The quaternary Hadamard code H(r1,r2) with generator matrix A(r1,r2):
/// an (n, 4n, n)_4 code of type 4^(r1+1) 2^r2.
QuaternaryCode hadamard_code(const FamilyParams& p, int max_k = 7);

/// The quaternary extended perfect code C(r1,r2) with check matrix A(r1,r2):
/// an (n, 4^n/4n, 4)_4 code of type 4^(n-r1-1-r2) 2^r2.
QuaternaryCode perfect_code(const FamilyParams& p, int max_k = 7);

/// A binary code: either an explicit word set or the Gray image of a
/// quaternary code, enumerated on demand.
class BinaryCode {
public:
    static BinaryCode from_words(std::size_t length,
                                 std::vector<BinaryWord> words);
    static BinaryCode gray_image(QuaternaryCode source);

    std::size_t length() const { return length_; }
    bool materialized() const { return src_ == nullptr; }

    /// Exact size; throws when the code is an image too large for 64 bits.
    std::uint64_t size() const;
    /// Base-2 logarithm of the size of an image code.
    int log2_size() const;

    const std::vector<BinaryWord>& words() const;
    const QuaternaryCode* source() const { return src_.get(); }

    bool contains(const BinaryWord& x) const;

    template <typename Fn>
    void for_each_word(Fn&& fn) const {
        if (src_) {
            src_->for_each_codeword(
                [&](const Z4Word& w) { fn(gray_map(w)); });
        } else {
            for (const BinaryWord& w : words_) fn(w);
        }
    }

    /// Explicit copy of this code; refuses more than 2^max_log2 words.
    BinaryCode materialize(int max_log2 = 26) const;

private:
    BinaryCode(std::size_t length, std::vector<BinaryWord> words,
               std::shared_ptr<const QuaternaryCode> src)
        : length_(length), words_(std::move(words)), src_(std::move(src)) {}

    std::size_t length_;
    std::vector<BinaryWord> words_;
    std::shared_ptr<const QuaternaryCode> src_;
};

/// The Gray image phi(C) of a quaternary code, as a lazy binary code.
BinaryCode binary_image(const QuaternaryCode& c);

}  // namespace z4
