// verify.cpp -- the end-to-end verification suite: every numeric claim in
// scope, one deterministic pass/fail result per criterion.

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_set>

#include "z4/classify.hpp"
#include "z4/io.hpp"

namespace z4 {

const std::vector<MatrixFixture>& display_matrix_fixtures() {
    static const std::vector<MatrixFixture> fixtures = {
        {0, 0, {"1"}},
        {0, 1, {"11", "02"}},
        {1, 0, {"1111", "0123"}},
        {0, 2, {"1111", "0022", "0202"}},
        {1, 1, {"11111111", "00112233", "02020202"}},
        {0, 3, {"11111111", "00002222", "00220022", "02020202"}},
        {2, 0,
         {"1111111111111111", "0000111122223333", "0123012301230123"}},
    };
    return fixtures;
}

bool matches_fixture(const MatrixFixture& f) {
    return io::matrix_row_strings(build_a(f.r1, f.r2)) == f.rows;
}

namespace {

Z4Word random_word(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint64_t> limbs((n + 31) / 32);
    for (std::uint64_t& limb : limbs) limb = rng();
    return Z4Word::from_limbs(n, std::move(limbs));
}

std::unordered_set<BinaryWord> word_set(const BinaryCode& c, int max_log2 = 16) {
    const BinaryCode m = c.materialize(max_log2);
    return {m.words().begin(), m.words().end()};
}

struct Checker {
    std::ostringstream detail;
    bool pass = true;

    template <typename T, typename U>
    void expect_eq(const T& got, const U& expected, const char* what) {
        if (!(got == static_cast<T>(expected))) {
            pass = false;
            detail << " [" << what << ": got " << got << ", expected "
                   << expected << "]";
        }
    }
    void expect(bool ok, const char* what) {
        if (!ok) {
            pass = false;
            detail << " [" << what << "]";
        }
    }
};

CheckResult run(const std::string& id, const std::string& name,
                const std::function<void(Checker&)>& body) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail << " [exception: " << e.what() << "]";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return CheckResult{id, name, c.pass, false, c.detail.str(), seconds};
}

CheckResult skipped(const std::string& id, const std::string& name,
                    const std::string& why) {
    return CheckResult{id, name, true, true, why, 0.0};
}

// Criterion 1: the seven display matrices, entry for entry.
CheckResult check_matrices() {
    return run("1", "matrix-reproduction", [](Checker& c) {
        int ok = 0;
        for (const MatrixFixture& f : display_matrix_fixtures())
            if (matches_fixture(f)) ++ok;
        c.expect_eq(ok, 7, "matrices reproduced");
        c.detail << " " << ok << "/7 display matrices match";
    });
}

// Criterion 2: the Gray map is an isometry, randomized.
CheckResult check_isometry() {
    return run("2", "gray-isometry", [](Checker& c) {
        std::mt19937_64 rng(0x5eedc0de2024ULL);
        int checked = 0;
        for (const std::size_t len : {1, 2, 4, 8, 16, 32, 64}) {
            for (int t = 0; t < 10000; ++t) {
                const Z4Word a = random_word(rng, len);
                const Z4Word b = random_word(rng, len);
                if (lee_distance(a, b) !=
                    hamming_distance(gray_map(a), gray_map(b))) {
                    c.expect(false, "d_L(a,b) == d(gray(a),gray(b))");
                    return;
                }
                ++checked;
            }
        }
        c.detail << " " << checked << " random pairs at lengths 1..64";
    });
}

// Criterion 3: Hadamard images are (N, 2N, N/2) codes.
CheckResult check_hadamard_parameters(int max_k) {
    return run("3", "hadamard-parameters", [max_k](Checker& c) {
        int codes = 0;
        for (int k = 1; k <= max_k; ++k) {
            for (const FamilyParams& p : family_params_table(k)) {
                const QuaternaryCode h = hadamard_code(p);
                const std::size_t n_bits = p.binary_length();
                const auto words = word_set(binary_image(h));
                c.expect_eq(words.size(), 2 * n_bits, "cardinality 2N");
                for (const BinaryWord& w : words)
                    if (w.size() != n_bits) c.expect(false, "length N");
                const auto by_pairs =
                    min_distance_pairwise(binary_image(h).materialize(16));
                const auto by_weight = min_distance(binary_image(h));
                c.expect(by_pairs == by_weight, "pairwise scan == weight scan");
                c.expect_eq(by_pairs.value_or(-1),
                            static_cast<int>(n_bits / 2), "min distance N/2");
                ++codes;
            }
        }
        c.detail << " " << codes << " codes at k<=" << max_k;
    });
}

// Criterion 4: perfect images are (N, 2^N/2N, 4) codes.
CheckResult check_perfect_parameters(int max_k, bool include_slow) {
    return run("4", "perfect-parameters", [max_k, include_slow](Checker& c) {
        int codes = 0;
        for (int k = 1; k <= std::min(4, max_k); ++k) {
            for (const FamilyParams& p : family_params_table(k)) {
                const QuaternaryCode code = perfect_code(p);
                const std::vector<Z4Word> words = code.materialize();
                const std::unordered_set<Z4Word> distinct(words.begin(),
                                                          words.end());
                c.expect_eq(distinct.size(),
                            std::size_t(1) << (2 * p.n() - p.k() - 1),
                            "cardinality 4^n/4n");
                if (distinct.size() >= 2) {
                    c.expect_eq(min_distance(code).value_or(-1), 4,
                                "min Lee distance 4");
                    if (words.size() <= 4096)
                        c.expect(min_distance_pairwise(code) ==
                                     min_distance(code),
                                 "pairwise scan == weight scan");
                }
                ++codes;
            }
        }
        if (max_k >= 5) {
            if (!include_slow) {
                c.detail << " " << codes
                         << " codes at k<=4; k=5 scan skipped (needs --slow)";
                return;
            }
            for (const FamilyParams& p : family_params_table(5)) {
                const QuaternaryCode code = perfect_code(p);
                std::uint64_t count = 0;
                int best = std::numeric_limits<int>::max();
                code.for_each_codeword([&](const Z4Word& w) {
                    ++count;
                    const int wt = w.lee_weight();
                    if (wt > 0 && wt < best) best = wt;
                });
                // Independent generator rows (checked at construction) make
                // the enumeration duplicate-free.
                c.expect_eq(count, std::uint64_t(1) << (2 * p.n() - p.k() - 1),
                            "cardinality 4^n/4n (k=5)");
                c.expect_eq(best, 4, "min Lee distance 4 (k=5)");
                ++codes;
            }
        }
        c.detail << " " << codes << " codes";
    });
}

// Criterion 5: kernel sizes, linear and nonlinear cases.
CheckResult check_kernels(int max_k) {
    return run("5", "kernel-values", [max_k](Checker& c) {
        int codes = 0;
        for (int k = 1; k <= max_k; ++k) {
            for (const FamilyParams& p : family_params_table(k)) {
                if (p.r1 > 1) continue;
                const std::uint64_t ks =
                    kernel(binary_image(hadamard_code(p))).size();
                c.expect_eq(ks, std::uint64_t(2 * p.binary_length()),
                            "kernel size 2N for r1<=1");
                ++codes;
            }
        }
        // Nonlinear cases of the formula 2^(r1+r2+2); the largest one,
        // (3,1), has k = 8 and rides along with max_k = 7.
        for (const auto& [r1, r2] : std::vector<std::pair<int, int>>{
                 {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}}) {
            const FamilyParams p(r1, r2);
            if (p.k() > max_k && !(p.k() == 8 && max_k >= 7)) continue;
            const QuaternaryCode h = hadamard_code(p, 8);
            const std::uint64_t ks = kernel(binary_image(h)).size();
            c.expect_eq(ks, std::uint64_t(1) << (r1 + r2 + 2),
                        "kernel size 2^(r1+r2+2) for r1>1");
            ++codes;
        }
        c.detail << " " << codes << " kernels computed";
    });
}

// Criterion 6: rank values of the k=4 and (with --slow) k=5 perfect codes.
CheckResult check_rank_values(int max_k, bool include_slow) {
    if (max_k < 4) return skipped("6", "rank-values", "requires max-k >= 4");
    return run("6", "rank-values", [max_k, include_slow](Checker& c) {
        const auto both_ranks = [&c](const FamilyParams& p, int expected) {
            const QuaternaryCode code = perfect_code(p);
            const int by_enum = rank_via_enumeration(binary_image(code));
            const int by_span = rank_via_generators(code);
            c.expect_eq(by_enum, expected, "rank by enumeration");
            c.expect_eq(by_span, expected, "rank by generator span");
        };
        both_ranks(FamilyParams(0, 3), 11);
        both_ranks(FamilyParams(1, 1), 13);
        int codes = 2;
        if (max_k >= 5) {
            if (!include_slow) {
                c.detail << " " << codes
                         << " ranks at k=4; k=5 ranks skipped (needs --slow)";
                return;
            }
            both_ranks(FamilyParams(0, 4), 27);
            both_ranks(FamilyParams(1, 2), 28);
            both_ranks(FamilyParams(2, 0), 29);
            codes += 3;
        }
        c.detail << " " << codes << " ranks, both strategies agree";
    });
}

// Criterion 7: rank(C(r1,r2)) <= N - r1 - r2 - 1 for enumerable members.
CheckResult check_rank_bound(int max_k, bool include_slow) {
    return run("7", "rank-bound", [max_k, include_slow](Checker& c) {
        int codes = 0;
        const int top = std::min(max_k, include_slow ? 5 : 4);
        for (int k = 1; k <= top; ++k) {
            for (const FamilyParams& p : family_params_table(k)) {
                const int r = rank_via_enumeration(binary_image(perfect_code(p)));
                const int bound =
                    static_cast<int>(p.binary_length()) - p.r1 - p.r2 - 1;
                c.expect(r <= bound, "rank <= N-r1-r2-1");
                ++codes;
            }
        }
        c.detail << " " << codes << " codes at k<=" << top;
    });
}

// Criterion 8: even/odd projection recurrences.
CheckResult check_projections(int max_k) {
    return run("8", "projection-recurrences", [max_k](Checker& c) {
        int checked = 0;
        for (int k = 2; k <= std::min(5, max_k); ++k) {
            for (const FamilyParams& p : family_params_table(k)) {
                const FamilyParams target =
                    p.r2 > 0 ? FamilyParams(p.r1, p.r2 - 1)
                             : FamilyParams(p.r1 - 1, 1);
                const auto expected =
                    word_set(binary_image(perfect_code(target)));
                const BinaryCode source = binary_image(perfect_code(p));
                const auto even = word_set(even_projection(source));
                const auto odd = word_set(odd_projection(source));
                c.expect(even == expected, "even projection");
                c.expect(odd == expected, "odd projection");
                ++checked;
            }
        }
        c.detail << " " << checked << " codes at k<=" << std::min(5, max_k);
    });
}

// Criterion 9: recurrent construction.
CheckResult check_recurrent(int max_k) {
    return run("9", "recurrent-construction", [max_k](Checker& c) {
        int doubles = 0;
        for (int r2 = 0; r2 <= std::min(5, max_k - 2); ++r2) {
            const auto lhs = materialize_span(
                plotkin_double(hadamard_code(FamilyParams(0, r2))).generator());
            const auto rhs = materialize_span(
                hadamard_code(FamilyParams(0, r2 + 1)).generator());
            const std::unordered_set<Z4Word> lset(lhs.begin(), lhs.end());
            const std::unordered_set<Z4Word> rset(rhs.begin(), rhs.end());
            c.expect(lset == rset, "plotkin_double(H(0,r2)) == H(0,r2+1)");
            ++doubles;
        }
        int matches = 0;
        for (int k = 1; k <= max_k; ++k) {
            for (const FamilyParams& p : family_params_table(k)) {
                const EquivalenceEvidence e = equivalence_invariant_match(
                    recurrent_build(p), hadamard_code(p));
                c.expect(e.first.cardinality == e.second.cardinality,
                         "recurrent cardinality");
                c.expect(e.first.min_distance == e.second.min_distance,
                         "recurrent min distance");
                c.expect(e.first.kernel_size == e.second.kernel_size,
                         "recurrent kernel size");
                c.expect(e.first.weight_distribution ==
                             e.second.weight_distribution,
                         "recurrent weight distribution");
                ++matches;
            }
        }
        c.detail << " " << doubles << " exact doublings, " << matches
                 << " invariant matches";
    });
}

// Criterion 10: classification counts.
CheckResult check_classification(int max_k, bool include_slow) {
    return run("10", "classification-counts", [max_k, include_slow](Checker& c) {
        for (int k = 3; k <= max_k; ++k) {
            const ClassificationRow row = classify_hadamard(k);
            c.expect_eq(row.class_count, (k - 1) / 2, "hadamard class count");
        }
        for (int k = 4; k <= max_k; ++k) {
            const ClassificationRow row = classify_perfect(k, include_slow);
            c.expect_eq(row.class_count, (k + 1) / 2, "perfect class count");
        }
        c.detail << " hadamard k=3.." << max_k << ", perfect k=4.." << max_k;
    });
}

// Criterion 11: duality of the two families.
CheckResult check_duality(int max_k) {
    return run("11", "duality", [max_k](Checker& c) {
        int pairs = 0;
        for (int k = 1; k <= max_k; ++k) {
            for (const FamilyParams& p : family_params_table(k)) {
                const QuaternaryMatrix a = build_a(p.r1, p.r2);
                const QuaternaryCode code = perfect_code(p);
                c.expect(is_orthogonal(code.generator(), a),
                         "A * c^T == 0 for all generators of C");
                const QuaternaryCode h = hadamard_code(p);
                c.expect_eq(h.log2_size() + code.log2_size(),
                            static_cast<int>(2 * p.n()), "|H| * |C| == 4^n");
                ++pairs;
            }
        }
        c.detail << " " << pairs << " family pairs at k<=" << max_k;
    });
}

// Criterion 12: the Gray addition identity, exhaustively.
CheckResult check_identity_gate() {
    return run("12", "gray-addition-identity", [](Checker& c) {
        c.expect(verify_gray_addition_identity(),
                 "identity over all 16 scalar pairs");
        c.detail << " exhaustive over Z4 x Z4";
    });
}

}  // namespace

VerifyReport verify_suite(int max_k, bool include_slow) {
    if (max_k < 3 || max_k > 7)
        throw std::invalid_argument("verify_suite: max_k must be in 3..7");
    VerifyReport report;
    report.checks.push_back(check_matrices());
    report.checks.push_back(check_isometry());
    report.checks.push_back(check_hadamard_parameters(max_k));
    report.checks.push_back(check_perfect_parameters(max_k, include_slow));
    report.checks.push_back(check_kernels(max_k));
    report.checks.push_back(check_rank_values(max_k, include_slow));
    report.checks.push_back(check_rank_bound(max_k, include_slow));
    report.checks.push_back(check_projections(max_k));
    report.checks.push_back(check_recurrent(max_k));
    report.checks.push_back(check_classification(max_k, include_slow));
    report.checks.push_back(check_duality(max_k));
    report.checks.push_back(check_identity_gate());
    return report;
}

}  // namespace z4
