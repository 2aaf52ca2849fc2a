// classify.hpp -- classification of the two families up to equivalence by
// their separating invariants (kernel size for Hadamard, rank for extended
// perfect), and the end-to-end verification suite.

#pragma once

#include <string>

#include "z4/construct.hpp"

namespace z4 {

/// One classified length N = 2^k of one family: every (r1,r2) with its
/// separating-invariant value, and the number of equivalence classes.
struct ClassificationRow {
    int k = 0;
    char family = 'H';

    struct Rep {
        FamilyParams params;
        std::uint64_t invariant;  // kernel size for H, rank for C
        bool linear = false;
    };
    std::vector<Rep> reps;
    int class_count = 0;
};

/// Kernel sizes of all H(r1,r2) at length 2^k; r1 in {0,1} merge into one
/// linear class, each r1 >= 2 is its own class.  Supported for 3 <= k <= 7.
/// Throws if the computed invariants fail to separate the classes.
ClassificationRow classify_hadamard(int k);

/// Ranks of all C(r1,r2) at length 2^k, one class per parameter pair.
/// Supported for 4 <= k <= 7.  Ranks come from streaming enumeration when
/// the code fits (2^13 words, or 2^26 with allow_slow), and from the
/// generator-span path otherwise.  Throws if ranks fail to be distinct.
ClassificationRow classify_perfect(int k, bool allow_slow = false);

/// Result of one verification check.
struct CheckResult {
    std::string id;
    std::string name;
    bool pass = false;
    bool skipped = false;  // gated behind --slow and not requested
    std::string detail;
    double seconds = 0;  // wall time; never part of the printed report
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass && !c.skipped) return false;
        return true;
    }
};

/// Runs the whole acceptance checklist up to length 2^max_k
/// (3 <= max_k <= 7) and reports one result per criterion.  include_slow
/// additionally runs the 2^26-scale enumerations.  The report is
/// deterministic: byte-identical across runs with the same flags.
VerifyReport verify_suite(int max_k, bool include_slow);

/// The seven smallest family matrices, used as byte-exact display fixtures.
struct MatrixFixture {
    int r1;
    int r2;
    std::vector<std::string> rows;
};
const std::vector<MatrixFixture>& display_matrix_fixtures();

/// True iff build_a(f.r1, f.r2) renders exactly to f.rows.
bool matches_fixture(const MatrixFixture& f);

}  // namespace z4
