// helpers.hpp -- shared test utilities: conversions between the packed types
// and the naive oracle types, and seeded random word generators.

#pragma once

#include <random>

#include "naive.hpp"
#include "z4/word.hpp"

namespace testutil {

inline z4::Z4Word pack(const naive::Word& w) {
    z4::Z4Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out.set(i, w[i]);
    return out;
}

inline naive::Word unpack(const z4::Z4Word& w) {
    naive::Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w.get(i);
    return out;
}

inline z4::BinaryWord pack_bits(const naive::Bits& b) {
    z4::BinaryWord out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out.set(i, b[i]);
    return out;
}

inline naive::Bits unpack_bits(const z4::BinaryWord& b) {
    naive::Bits out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = b.get(i);
    return out;
}

inline naive::Word random_word(std::mt19937_64& rng, std::size_t n) {
    naive::Word w(n);
    for (int& c : w) c = static_cast<int>(rng() & 3);
    return w;
}

}  // namespace testutil
