#include "z4/classify.hpp"

#include <set>

#include "doctest.h"

using namespace z4;

TEST_CASE("hadamard classification") {
    // k=3: one class (all linear).
    CHECK(classify_hadamard(3).class_count == 1);
    CHECK(classify_hadamard(4).class_count == 1);

    // k=5: the linear pair {(0,4),(1,2)} with kernel 64, plus (2,0) with 16.
    const ClassificationRow k5 = classify_hadamard(5);
    CHECK(k5.class_count == 2);
    REQUIRE(k5.reps.size() == 3);
    CHECK(k5.reps[0].params == FamilyParams(0, 4));
    CHECK(k5.reps[0].invariant == 64);
    CHECK(k5.reps[0].linear);
    CHECK(k5.reps[1].params == FamilyParams(1, 2));
    CHECK(k5.reps[1].invariant == 64);
    CHECK(k5.reps[2].params == FamilyParams(2, 0));
    CHECK(k5.reps[2].invariant == 16);
    CHECK_FALSE(k5.reps[2].linear);

    CHECK(classify_hadamard(6).class_count == 2);

    // k=7: kernel sizes {256, 64, 32} for r1 in {<=1, 2, 3}.
    const ClassificationRow k7 = classify_hadamard(7);
    CHECK(k7.class_count == 3);
    std::set<std::uint64_t> kernels;
    for (const auto& rep : k7.reps) kernels.insert(rep.invariant);
    CHECK(kernels == std::set<std::uint64_t>{32, 64, 256});

    CHECK_THROWS_AS(classify_hadamard(2), std::invalid_argument);
    CHECK_THROWS_AS(classify_hadamard(8), std::invalid_argument);
}

TEST_CASE("perfect classification") {
    // k=4: ranks 11 and 13.
    const ClassificationRow k4 = classify_perfect(4);
    CHECK(k4.class_count == 2);
    REQUIRE(k4.reps.size() == 2);
    CHECK(k4.reps[0].params == FamilyParams(0, 3));
    CHECK(k4.reps[0].invariant == 11);
    CHECK(k4.reps[1].params == FamilyParams(1, 1));
    CHECK(k4.reps[1].invariant == 13);

    // k=5: ranks 27, 28, 29 (generator-span path).
    const ClassificationRow k5 = classify_perfect(5);
    CHECK(k5.class_count == 3);
    REQUIRE(k5.reps.size() == 3);
    CHECK(k5.reps[0].invariant == 27);
    CHECK(k5.reps[1].invariant == 28);
    CHECK(k5.reps[2].invariant == 29);

    CHECK(classify_perfect(6).class_count == 3);
    CHECK(classify_perfect(7).class_count == 4);

    // Ranks meet the N - r1 - r2 - 1 bound at k=6 and k=7.
    const ClassificationRow k6 = classify_perfect(6);
    for (const auto& rep : k6.reps)
        CHECK(rep.invariant ==
              std::uint64_t(64 - rep.params.r1 - rep.params.r2 - 1));
    const ClassificationRow k7 = classify_perfect(7);
    for (const auto& rep : k7.reps)
        CHECK(rep.invariant ==
              std::uint64_t(128 - rep.params.r1 - rep.params.r2 - 1));

    CHECK_THROWS_AS(classify_perfect(3), std::invalid_argument);
}

TEST_CASE("classification counts follow the floor formulas") {
    const int hadamard_expected[] = {1, 1, 2, 2, 3};  // k = 3..7
    for (int k = 3; k <= 7; ++k)
        CHECK(classify_hadamard(k).class_count == hadamard_expected[k - 3]);
    const int perfect_expected[] = {2, 3, 3, 4};  // k = 4..7
    for (int k = 4; k <= 7; ++k)
        CHECK(classify_perfect(k).class_count == perfect_expected[k - 4]);
}

TEST_CASE("fixture comparison flags corrupted matrices") {
    for (const MatrixFixture& f : display_matrix_fixtures()) CHECK(matches_fixture(f));
    // Negative control: corrupt one digit of the A(1,0) fixture.
    MatrixFixture corrupted{1, 0, {"1111", "0113"}};
    CHECK_FALSE(matches_fixture(corrupted));
    MatrixFixture wrong_shape{1, 0, {"1111"}};
    CHECK_FALSE(matches_fixture(wrong_shape));
}

TEST_CASE("verify suite at small scale") {
    const VerifyReport report = verify_suite(3, false);
    CHECK(report.all_pass());
    REQUIRE(report.checks.size() == 12);
    // Criterion 6 needs k >= 4 and is skipped at max_k = 3.
    CHECK(report.checks[5].skipped);
    for (const CheckResult& c : report.checks) {
        CHECK((c.pass || c.skipped));
    }
    // Reports are deterministic.
    const VerifyReport again = verify_suite(3, false);
    REQUIRE(again.checks.size() == report.checks.size());
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        CHECK(report.checks[i].detail == again.checks[i].detail);
        CHECK(report.checks[i].pass == again.checks[i].pass);
    }
    CHECK_THROWS_AS(verify_suite(2, false), std::invalid_argument);
    CHECK_THROWS_AS(verify_suite(8, false), std::invalid_argument);
}
