#include "z4/construct.hpp"

#include <stdexcept>

namespace z4 {

namespace {

Z4Word constant_word(std::size_t n, int value) {
    Z4Word w(n);
    for (std::size_t i = 0; i < n; ++i) w.set(i, value);
    return w;
}

Z4Word repeat(const Z4Word& w, int copies) {
    Z4Word out = w;
    for (int i = 1; i < copies; ++i) out = concat(out, w);
    return out;
}

BinaryWord repeat(const BinaryWord& w, int copies) {
    BinaryWord out = w;
    for (int i = 1; i < copies; ++i) out = concat(out, w);
    return out;
}

}  // namespace

std::vector<Z4Word> RepetitionCode::words() const {
    if (order != 2 && order != 4)
        throw std::invalid_argument("RepetitionCode: order must be 2 or 4");
    std::vector<Z4Word> out;
    out.push_back(Z4Word(length));
    if (order == 4) out.push_back(constant_word(length, 1));
    out.push_back(constant_word(length, 2));
    if (order == 4) out.push_back(constant_word(length, 3));
    return out;
}

QuaternaryCode plotkin_double(const QuaternaryCode& h) {
    const std::size_t n = h.length();
    const QuaternaryMatrix& g = h.generator();
    QuaternaryMatrix out(2 * n);
    for (std::size_t i = 0; i < g.rows4(); ++i)
        out.append_row4(repeat(g.row4(i), 2));
    for (std::size_t j = 0; j < g.rows2(); ++j)
        out.append_row2(repeat(g.row2(j), 2));
    // (0...0, 2...2), stored halved.
    BinaryWord tail(2 * n);
    for (std::size_t i = n; i < 2 * n; ++i) tail.set(i, 1);
    out.append_row2(std::move(tail));
    return QuaternaryCode::from_generator(std::move(out));
}

QuaternaryCode quadruple(const QuaternaryCode& h) {
    const std::size_t n = h.length();
    const QuaternaryMatrix& g = h.generator();
    QuaternaryMatrix out(4 * n);
    // (0...0, 1...1, 2...2, 3...3) first: it plays the role of the row right
    // below the all-ones row in A(r1+1, r2).
    Z4Word steps(4 * n);
    for (std::size_t i = 0; i < 4 * n; ++i)
        steps.set(i, static_cast<int>(i / n));
    if (g.rows4() > 0) {
        out.append_row4(repeat(g.row4(0), 4));
        out.append_row4(std::move(steps));
        for (std::size_t i = 1; i < g.rows4(); ++i)
            out.append_row4(repeat(g.row4(i), 4));
    } else {
        out.append_row4(std::move(steps));
    }
    for (std::size_t j = 0; j < g.rows2(); ++j)
        out.append_row2(repeat(g.row2(j), 4));
    return QuaternaryCode::from_generator(std::move(out));
}

QuaternaryCode recurrent_build(const FamilyParams& p, int max_k) {
    if (p.k() > max_k)
        throw std::invalid_argument("recurrent_build: 2*r1+r2+1 exceeds the cap");
    QuaternaryCode code = hadamard_code(FamilyParams(0, 0), max_k);
    for (int i = 0; i < p.r1; ++i) code = quadruple(code);
    for (int i = 0; i < p.r2; ++i) code = plotkin_double(code);
    return code;
}

EquivalenceEvidence equivalence_invariant_match(const QuaternaryCode& a,
                                                const QuaternaryCode& b) {
    EquivalenceEvidence e;
    e.first = standard_report(a);
    e.second = standard_report(b);
    e.all_match = e.first == e.second;
    return e;
}

}  // namespace z4
