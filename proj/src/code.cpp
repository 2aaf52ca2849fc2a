#include "z4/code.hpp"

#include <stdexcept>
#include <unordered_set>

namespace z4 {

std::vector<FamilyParams> family_params_table(int k) {
    if (k < 1) throw std::invalid_argument("family_params_table: k must be >= 1");
    std::vector<FamilyParams> out;
    for (int r1 = 0; 2 * r1 <= k - 1; ++r1) out.emplace_back(r1, k - 1 - 2 * r1);
    return out;
}

QuaternaryCode::QuaternaryCode(QuaternaryMatrix g,
                               std::optional<QuaternaryMatrix> a)
    : gen_(std::move(g)), check_(std::move(a)), reduced_(row_reduce(gen_)),
      type_{static_cast<int>(reduced_.unit_cols.size()),
            static_cast<int>(reduced_.two_cols.size())} {}

QuaternaryCode QuaternaryCode::from_generator(QuaternaryMatrix g) {
    return QuaternaryCode(std::move(g), std::nullopt);
}

QuaternaryCode QuaternaryCode::from_check(QuaternaryMatrix a) {
    QuaternaryMatrix g = null_space(a);
    return QuaternaryCode(std::move(g), std::move(a));
}

QuaternaryCode QuaternaryCode::from_pair(QuaternaryMatrix g,
                                         QuaternaryMatrix a) {
    if (!is_orthogonal(g, a))
        throw std::invalid_argument("QuaternaryCode: generator and check are not orthogonal");
    QuaternaryCode c(std::move(g), std::move(a));
    const CodeType dual = code_type(*c.check());
    if (c.type().log2_size() + dual.log2_size() !=
        static_cast<int>(2 * c.length()))
        throw std::invalid_argument(
            "QuaternaryCode: generator and check cardinalities do not multiply to 4^n");
    return c;
}

bool QuaternaryCode::contains(const Z4Word& w) const {
    if (w.size() != length())
        throw std::invalid_argument("contains: length mismatch");
    if (check_) {
        for (std::size_t r = 0; r < check_->rows(); ++r)
            if (dot_mod4(check_->row_as_z4(r), w) != 0) return false;
        return true;
    }
    // Solve against the reduced generator: read off the coefficient at each
    // pivot column and subtract that multiple of the pivot row.
    Z4Word rest = w;
    for (std::size_t i = 0; i < reduced_.unit_cols.size(); ++i) {
        const int c = rest.get(reduced_.unit_cols[i]);
        if (c) rest += reduced_.unit_rows[i].times(4 - c);
    }
    for (std::size_t j = 0; j < reduced_.two_cols.size(); ++j) {
        const int c = rest.get(reduced_.two_cols[j]);
        if (c & 1) return false;
        if (c) rest += doubled(reduced_.two_rows[j]);
    }
    return rest.is_zero();
}

QuaternaryCode hadamard_code(const FamilyParams& p, int max_k) {
    if (p.k() > max_k)
        throw std::invalid_argument("hadamard_code: 2*r1+r2+1 exceeds the cap");
    QuaternaryCode c = QuaternaryCode::from_generator(build_a(p.r1, p.r2));
    if (!(c.type() == CodeType{p.r1 + 1, p.r2}))
        throw std::logic_error("hadamard_code: unexpected code type");
    return c;
}

QuaternaryCode perfect_code(const FamilyParams& p, int max_k) {
    if (p.k() > max_k)
        throw std::invalid_argument("perfect_code: 2*r1+r2+1 exceeds the cap");
    QuaternaryMatrix a = build_a(p.r1, p.r2);
    QuaternaryMatrix g = null_space(a);
    QuaternaryCode c = QuaternaryCode::from_pair(std::move(g), std::move(a));
    const int expected_k1 = static_cast<int>(p.n()) - p.r0() - p.r2;
    if (!(c.type() == CodeType{expected_k1, p.r2}))
        throw std::logic_error("perfect_code: unexpected code type");
    return c;
}

BinaryCode BinaryCode::from_words(std::size_t length,
                                  std::vector<BinaryWord> words) {
    std::unordered_set<BinaryWord> seen;
    seen.reserve(words.size());
    for (const BinaryWord& w : words) {
        if (w.size() != length)
            throw std::invalid_argument("BinaryCode: word length mismatch");
        if (!seen.insert(w).second)
            throw std::invalid_argument("BinaryCode: duplicate word");
    }
    return BinaryCode(length, std::move(words), nullptr);
}

BinaryCode BinaryCode::gray_image(QuaternaryCode source) {
    const std::size_t len = 2 * source.length();
    return BinaryCode(len, {},
                      std::make_shared<const QuaternaryCode>(std::move(source)));
}

std::uint64_t BinaryCode::size() const {
    if (!src_) return words_.size();
    const int log2 = src_->log2_size();
    if (log2 > 62) throw std::overflow_error("BinaryCode: size exceeds 64 bits");
    return std::uint64_t(1) << log2;
}

int BinaryCode::log2_size() const {
    if (!src_)
        throw std::logic_error("BinaryCode: log2_size is defined for image codes");
    return src_->log2_size();
}

const std::vector<BinaryWord>& BinaryCode::words() const {
    if (src_)
        throw std::logic_error("BinaryCode: not materialized; call materialize()");
    return words_;
}

bool BinaryCode::contains(const BinaryWord& x) const {
    if (x.size() != length_)
        throw std::invalid_argument("contains: length mismatch");
    if (src_) return src_->contains(gray_inverse(x));
    for (const BinaryWord& w : words_)
        if (w == x) return true;
    return false;
}

BinaryCode BinaryCode::materialize(int max_log2) const {
    if (!src_) return *this;
    if (src_->log2_size() > max_log2)
        throw std::invalid_argument("BinaryCode: materialization exceeds size cap");
    std::vector<BinaryWord> words;
    words.reserve(std::size_t(1) << src_->log2_size());
    src_->for_each_codeword(
        [&](const Z4Word& w) { words.push_back(gray_map(w)); });
    return BinaryCode(length_, std::move(words), nullptr);
}

BinaryCode binary_image(const QuaternaryCode& c) {
    return BinaryCode::gray_image(c);
}

}  // namespace z4
