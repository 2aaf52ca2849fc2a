#include "z4/code.hpp"

#include <unordered_set>

#include "doctest.h"
#include "helpers.hpp"
#include "z4/invariants.hpp"

using namespace z4;
using testutil::pack;

TEST_CASE("family parameter tables") {
    const auto k4 = family_params_table(4);
    REQUIRE(k4.size() == 2);
    CHECK(k4[0] == FamilyParams(0, 3));
    CHECK(k4[1] == FamilyParams(1, 1));
    const auto k5 = family_params_table(5);
    REQUIRE(k5.size() == 3);
    CHECK(k5[0] == FamilyParams(0, 4));
    CHECK(k5[1] == FamilyParams(1, 2));
    CHECK(k5[2] == FamilyParams(2, 0));
    CHECK(family_params_table(1) == std::vector<FamilyParams>{FamilyParams(0, 0)});
    CHECK_THROWS_AS(family_params_table(0), std::invalid_argument);
}

TEST_CASE("derived family quantities") {
    const FamilyParams p(1, 1);
    CHECK(p.k() == 4);
    CHECK(p.n() == 8);
    CHECK(p.binary_length() == 16);
    CHECK(p.r0() == 2);
    CHECK_THROWS_AS(FamilyParams(-1, 0), std::invalid_argument);
}

TEST_CASE("hadamard codes") {
    // H(0,0) is {0,1,2,3}.
    const QuaternaryCode h00 = hadamard_code(FamilyParams(0, 0));
    std::unordered_set<Z4Word> words;
    h00.for_each_codeword([&](const Z4Word& w) { words.insert(w); });
    CHECK(words == std::unordered_set<Z4Word>{
                       Z4Word::from_string("0"), Z4Word::from_string("1"),
                       Z4Word::from_string("2"), Z4Word::from_string("3")});

    // H(1,0) is a (4, 16, 4)_4 code.
    const QuaternaryCode h10 = hadamard_code(FamilyParams(1, 0));
    CHECK(h10.length() == 4);
    CHECK(h10.log2_size() == 4);
    CHECK(min_distance(h10) == 4);

    // H(0,2): cardinality 16, length 4.
    const QuaternaryCode h02 = hadamard_code(FamilyParams(0, 2));
    CHECK(h02.length() == 4);
    CHECK(h02.materialize().size() == 16);

    CHECK_THROWS_AS(hadamard_code(FamilyParams(4, 0)), std::invalid_argument);
    CHECK_NOTHROW(hadamard_code(FamilyParams(4, 0), 9));
}

TEST_CASE("perfect codes") {
    // C(0,2): 16 words of length 4; binary image is an (8, 16, 4) code.
    const QuaternaryCode c02 = perfect_code(FamilyParams(0, 2));
    CHECK(c02.length() == 4);
    CHECK(c02.log2_size() == 4);
    CHECK(min_distance(c02) == 4);
    CHECK(binary_image(c02).size() == 16);
    CHECK(min_distance(binary_image(c02)).value() == 4);

    // C(1,1): 2048 words of length 8.
    const QuaternaryCode c11 = perfect_code(FamilyParams(1, 1));
    CHECK(c11.length() == 8);
    CHECK(c11.log2_size() == 11);

    // C(0,0): the zero code of length 1.
    const QuaternaryCode c00 = perfect_code(FamilyParams(0, 0));
    CHECK(c00.log2_size() == 0);
    CHECK(c00.materialize() == std::vector<Z4Word>{Z4Word(1)});
    CHECK_FALSE(min_distance(c00).has_value());
}

TEST_CASE("membership") {
    const QuaternaryCode c10 = perfect_code(FamilyParams(1, 0));
    CHECK(c10.contains(Z4Word(4)));
    CHECK(hadamard_code(FamilyParams(0, 0)).contains(Z4Word::from_string("2")));
    CHECK_FALSE(perfect_code(FamilyParams(0, 2))
                    .contains(Z4Word::from_string("1000")));
    CHECK_THROWS_AS(c10.contains(Z4Word(3)), std::invalid_argument);

    // Generator-solve path (no check matrix) agrees with brute force.
    const QuaternaryCode h11 = hadamard_code(FamilyParams(1, 1));
    std::unordered_set<Z4Word> words;
    h11.for_each_codeword([&](const Z4Word& w) { words.insert(w); });
    int members = 0;
    for (const naive::Word& w : naive::all_words(4)) {
        // extend to length 8 by doubling the word pattern
        naive::Word ext = w;
        ext.insert(ext.end(), w.begin(), w.end());
        const Z4Word cand = pack(ext);
        const bool expected = words.count(cand) > 0;
        CHECK(h11.contains(cand) == expected);
        members += expected;
    }
    CHECK(members > 0);
}

TEST_CASE("binary images") {
    const BinaryCode img11 = binary_image(hadamard_code(FamilyParams(1, 1)));
    CHECK(img11.length() == 16);
    CHECK(img11.size() == 32);
    std::unordered_set<BinaryWord> words;
    img11.for_each_word([&](const BinaryWord& w) { words.insert(w); });
    CHECK(words.size() == 32);

    // Image of the zero code: just the zero word of doubled length.
    const BinaryCode zero = binary_image(perfect_code(FamilyParams(0, 0)));
    CHECK(zero.materialize().words() == std::vector<BinaryWord>{BinaryWord(2)});

    // C(0,3) has 2^11 words of length 16.
    const BinaryCode img03 = binary_image(perfect_code(FamilyParams(0, 3)));
    CHECK(img03.length() == 16);
    CHECK(img03.size() == 2048);

    // Membership through the Gray map.
    CHECK(img11.contains(BinaryWord(16)));
    CHECK(zero.contains(BinaryWord(2)));
    CHECK_FALSE(zero.contains(BinaryWord::from_string("01")));
}

TEST_CASE("hadamard parameter law (n, 4n, n)") {
    for (int k = 1; k <= 7; ++k) {
        for (const FamilyParams& p : family_params_table(k)) {
            const QuaternaryCode h = hadamard_code(p);
            CHECK(h.length() == p.n());
            CHECK(h.log2_size() == k + 1);  // 4n = 2^(k+1)
            CHECK(min_distance(h).value() == static_cast<int>(p.n()));
        }
    }
}

TEST_CASE("perfect parameter law (n, 4^n/4n, 4)") {
    for (int k = 2; k <= 4; ++k) {
        for (const FamilyParams& p : family_params_table(k)) {
            const QuaternaryCode c = perfect_code(p);
            CHECK(c.log2_size() == static_cast<int>(2 * p.n()) - k - 1);
            CHECK(min_distance(c).value() == 4);
        }
    }
}

TEST_CASE("mutual orthogonality of the family pairs") {
    for (int k = 1; k <= 7; ++k) {
        for (const FamilyParams& p : family_params_table(k)) {
            const QuaternaryCode h = hadamard_code(p);
            const QuaternaryCode c = perfect_code(p);
            CHECK(is_orthogonal(h.generator(), c.generator()));
            CHECK(h.log2_size() + c.log2_size() == static_cast<int>(2 * p.n()));
        }
    }
}

TEST_CASE("explicit binary codes validate their words") {
    std::vector<BinaryWord> words{BinaryWord::from_string("01"),
                                  BinaryWord::from_string("01")};
    CHECK_THROWS_AS(BinaryCode::from_words(2, std::move(words)),
                    std::invalid_argument);
    std::vector<BinaryWord> bad{BinaryWord::from_string("011")};
    CHECK_THROWS_AS(BinaryCode::from_words(2, std::move(bad)),
                    std::invalid_argument);
}
