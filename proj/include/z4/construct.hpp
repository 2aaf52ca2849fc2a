// construct.hpp -- recurrent constructions of the Hadamard family: the
// Plotkin-style doubling {(a, a+b)} and the quadrupling
// {(a, a+b, a+2b, a+3b)}, plus invariant-based equivalence evidence.

#pragma once

#include "z4/invariants.hpp"

namespace z4 {

/// The repetition codes: order 2 is {0...0, 2...2} (an (n,2,2n)_4 code),
/// order 4 is {0...0, 1...1, 2...2, 3...3} (an (n,4,n)_4 code).
struct RepetitionCode {
    std::size_t length;
    int order;  // 2 or 4

    static RepetitionCode order2(std::size_t n) { return {n, 2}; }
    static RepetitionCode order4(std::size_t n) { return {n, 4}; }

    std::vector<Z4Word> words() const;
};

/// H' = {(a, a+b) : a in H, b in {0...0, 2...2}}: length doubles and the
/// cardinality doubles.  Generators are (g, g) over the generators of H plus
/// the order-2 row (0...0, 2...2).
QuaternaryCode plotkin_double(const QuaternaryCode& h);

/// H'' = {(a, a+b, a+2b, a+3b) : a in H, b in {0...0, ..., 3...3}}: length
/// and cardinality quadruple.  Generators are (g, g, g, g) plus the order-4
/// row (0...0, 1...1, 2...2, 3...3).
QuaternaryCode quadruple(const QuaternaryCode& h);

/// Builds H(r1, r2) recurrently from H(0,0) = {0,1,2,3}: quadruple r1 times,
/// then double r2 times.
QuaternaryCode recurrent_build(const FamilyParams& p, int max_k = 7);

/// Side-by-side equivalence-invariant reports of two codes.  A mismatch
/// proves inequivalence; a match is evidence only.
struct EquivalenceEvidence {
    InvariantReport first;
    InvariantReport second;
    bool all_match = false;
};

EquivalenceEvidence equivalence_invariant_match(const QuaternaryCode& a,
                                                const QuaternaryCode& b);

}  // namespace z4
