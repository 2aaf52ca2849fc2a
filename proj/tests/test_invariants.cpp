#include "z4/invariants.hpp"

#include <unordered_set>

#include "doctest.h"
#include "helpers.hpp"

using namespace z4;
using testutil::pack;
using testutil::pack_bits;

namespace {

BinaryCode singleton_zero(std::size_t n) {
    return BinaryCode::from_words(n, {BinaryWord(n)});
}

std::unordered_set<BinaryWord> as_set(const BinaryCode& c) {
    const BinaryCode m = c.materialize(16);
    return {m.words().begin(), m.words().end()};
}

}  // namespace

TEST_CASE("kernel sizes of the Hadamard family") {
    // Nonlinear case: |kernel(H(2,0))| = 2^(2+0+2) = 16.
    CHECK(kernel(binary_image(hadamard_code(FamilyParams(2, 0)))).size() == 16);
    // Linear case: the kernel is the code itself.
    const BinaryCode linear = binary_image(hadamard_code(FamilyParams(0, 3)));
    CHECK(as_set(kernel(linear)) == as_set(linear));
    // kernel({0}) = {0}.
    CHECK(kernel(singleton_zero(4)).words() ==
          std::vector<BinaryWord>{BinaryWord(4)});
    // Codes without the zero word are rejected.
    CHECK_THROWS_AS(
        kernel(BinaryCode::from_words(2, {BinaryWord::from_string("01")})),
        std::invalid_argument);
}

TEST_CASE("kernel is a linear subcode") {
    for (const auto& [r1, r2] :
         std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {1, 1}}) {
        const BinaryCode image = binary_image(hadamard_code(FamilyParams(r1, r2)));
        const BinaryCode ker = kernel(image);
        CHECK(is_linear(ker));
        const auto image_words = as_set(image);
        for (const BinaryWord& w : ker.words()) CHECK(image_words.count(w) == 1);
        CHECK(image_words.size() % ker.size() == 0);
    }
}

TEST_CASE("known rank values") {
    CHECK(rank_via_enumeration(binary_image(perfect_code(FamilyParams(1, 1)))) ==
          13);
    CHECK(rank_via_enumeration(binary_image(perfect_code(FamilyParams(0, 3)))) ==
          11);
    CHECK(rank_via_enumeration(singleton_zero(8)) == 0);
}

TEST_CASE("rank strategies agree wherever enumeration is feasible") {
    for (int k = 1; k <= 4; ++k) {
        for (const FamilyParams& p : family_params_table(k)) {
            const QuaternaryCode c = perfect_code(p);
            CHECK(rank_via_enumeration(binary_image(c)) ==
                  rank_via_generators(c));
            const QuaternaryCode h = hadamard_code(p);
            CHECK(rank_via_enumeration(binary_image(h)) ==
                  rank_via_generators(h));
        }
    }
    // Dispatch through the strategy enum.
    const QuaternaryCode c = perfect_code(FamilyParams(1, 1));
    CHECK(rank(binary_image(c), RankStrategy::enumeration) == 13);
    CHECK(rank(binary_image(c), RankStrategy::generator_span) == 13);
    CHECK_THROWS_AS(rank(singleton_zero(4), RankStrategy::generator_span),
                    std::invalid_argument);
}

TEST_CASE("minimum distances") {
    CHECK(min_distance(hadamard_code(FamilyParams(1, 1))).value() == 8);
    CHECK(min_distance(perfect_code(FamilyParams(1, 1))).value() == 4);
    CHECK(min_distance(binary_image(hadamard_code(FamilyParams(1, 0)))).value() ==
          4);
    CHECK_FALSE(min_distance(singleton_zero(4)).has_value());
}

TEST_CASE("distance equals weight for additive codes (spot check)") {
    for (int k = 1; k <= 3; ++k) {
        for (const FamilyParams& p : family_params_table(k)) {
            const QuaternaryCode h = hadamard_code(p);
            CHECK(min_distance_pairwise(h) == min_distance(h));
            const BinaryCode image = binary_image(h);
            CHECK(min_distance_pairwise(image) == min_distance(image));
            const QuaternaryCode c = perfect_code(p);
            if (c.log2_size() > 0)
                CHECK(min_distance_pairwise(c) == min_distance(c));
        }
    }
}

TEST_CASE("linearity split of the Hadamard images") {
    CHECK(is_linear(binary_image(hadamard_code(FamilyParams(0, 3)))));
    CHECK(is_linear(binary_image(hadamard_code(FamilyParams(1, 2)))));
    CHECK_FALSE(is_linear(binary_image(hadamard_code(FamilyParams(2, 0)))));
    CHECK_FALSE(is_linear(binary_image(hadamard_code(FamilyParams(2, 1)))));
    CHECK(is_linear(singleton_zero(4)));
}

TEST_CASE("linear iff kernel is everything iff rank is log-cardinality") {
    for (int k = 3; k <= 6; ++k) {
        for (const FamilyParams& p : family_params_table(k)) {
            const QuaternaryCode h = hadamard_code(p);
            const BinaryCode image = binary_image(h);
            const bool lin = is_linear(image);
            CHECK(lin == (kernel(image).size() == image.size()));
            CHECK(lin == (rank_via_enumeration(image) == h.log2_size()));
        }
    }
}

TEST_CASE("even and odd projections") {
    // even(C(1,1)) = odd(C(1,1)) = C(1,0) as sets.
    const BinaryCode c11 = binary_image(perfect_code(FamilyParams(1, 1)));
    const auto c10 = as_set(binary_image(perfect_code(FamilyParams(1, 0))));
    CHECK(as_set(even_projection(c11)) == c10);
    CHECK(as_set(odd_projection(c11)) == c10);

    // even(C(1,0)) = C(0,1).
    const BinaryCode c10_code = binary_image(perfect_code(FamilyParams(1, 0)));
    const auto c01 = as_set(binary_image(perfect_code(FamilyParams(0, 1))));
    CHECK(as_set(even_projection(c10_code)) == c01);
    CHECK(as_set(odd_projection(c10_code)) == c01);

    // Projections of {0} are {0} at half length.
    CHECK(even_projection(singleton_zero(8)).words() ==
          std::vector<BinaryWord>{BinaryWord(4)});
    CHECK(odd_projection(singleton_zero(8)).words() ==
          std::vector<BinaryWord>{BinaryWord(4)});
    CHECK_THROWS_AS(even_projection(singleton_zero(5)), std::invalid_argument);

    // Explicit and membership-driven paths agree.
    const BinaryCode materialized = c11.materialize();
    CHECK(as_set(even_projection(materialized)) ==
          as_set(even_projection(c11)));
    CHECK(as_set(odd_projection(materialized)) == as_set(odd_projection(c11)));
}

TEST_CASE("weight distributions") {
    const auto h00 = weight_distribution(hadamard_code(FamilyParams(0, 0)));
    CHECK(h00 == std::map<int, std::uint64_t>{{0, 1}, {1, 2}, {2, 1}});

    const auto zero = weight_distribution(singleton_zero(6));
    CHECK(zero == std::map<int, std::uint64_t>{{0, 1}});

    // Binary image of H(1,0): weights {0:1, 4:14, 8:1}, recomputed from the
    // naive oracle before freezing.
    std::map<int, std::uint64_t> oracle;
    const std::vector<naive::Word> rows4 = {{1, 1, 1, 1}, {0, 1, 2, 3}};
    for (const naive::Word& w : naive::span(rows4, {}, 4)) {
        int weight = 0;
        for (const int b : naive::gray(w)) weight += b;
        ++oracle[weight];
    }
    CHECK(oracle == std::map<int, std::uint64_t>{{0, 1}, {4, 14}, {8, 1}});
    CHECK(weight_distribution(binary_image(hadamard_code(FamilyParams(1, 0)))) ==
          oracle);
}

TEST_CASE("lee weight distribution equals image hamming distribution") {
    for (int k = 2; k <= 5; ++k) {
        for (const FamilyParams& p : family_params_table(k)) {
            const QuaternaryCode h = hadamard_code(p);
            CHECK(weight_distribution(h) ==
                  weight_distribution(binary_image(h)));
        }
    }
}

TEST_CASE("standard report fields") {
    const InvariantReport r = standard_report(perfect_code(FamilyParams(1, 1)));
    CHECK(r.length == 8);
    CHECK(r.log2_cardinality == 11);
    CHECK(r.cardinality == std::uint64_t(2048));
    CHECK(r.min_distance == 4);
    CHECK(r.kernel_size.has_value());
    CHECK(r.rank == 13);
    CHECK(r.linear == false);
    CHECK(r.weight_distribution.has_value());
}

TEST_CASE("size caps are enforced") {
    // C(0,4) has 2^26 words: too large to materialize into a kernel set,
    // fine for the generator-span rank.
    const QuaternaryCode big = perfect_code(FamilyParams(0, 4));
    CHECK_THROWS_AS(kernel(binary_image(big)), std::invalid_argument);
    CHECK_THROWS_AS(binary_image(big).materialize(16), std::invalid_argument);
    CHECK(rank_via_generators(big) == 27);
    // C(0,6) has 2^120 words: even streaming enumeration is refused.
    const QuaternaryCode huge = perfect_code(FamilyParams(0, 6));
    CHECK_THROWS_AS(rank_via_enumeration(binary_image(huge)),
                    std::invalid_argument);
    CHECK_THROWS_AS(min_distance(huge), std::invalid_argument);
    CHECK_THROWS_AS(weight_distribution(huge), std::invalid_argument);
    CHECK(rank_via_generators(huge) == 121);
}

TEST_CASE("gf2 eliminator basics") {
    Gf2Eliminator elim(4);
    CHECK(elim.insert(BinaryWord::from_string("1000")));
    CHECK_FALSE(elim.insert(BinaryWord::from_string("1000")));
    CHECK(elim.insert(BinaryWord::from_string("1100")));
    CHECK_FALSE(elim.insert(BinaryWord::from_string("0100")));
    CHECK(elim.insert(BinaryWord::from_string("0011")));
    CHECK(elim.rank() == 3);
    CHECK_FALSE(elim.insert(BinaryWord(4)));
    // insert_gray matches insert(gray_map(.)).
    Gf2Eliminator a(8), b(8);
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50; ++t) {
        const Z4Word w = pack(testutil::random_word(rng, 4));
        CHECK(a.insert_gray(w) == b.insert(gray_map(w)));
    }
    CHECK(a.rank() == b.rank());
}
