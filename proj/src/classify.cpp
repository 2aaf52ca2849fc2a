#include "z4/classify.hpp"

#include <set>
#include <stdexcept>

#include "z4/io.hpp"

namespace z4 {

ClassificationRow classify_hadamard(int k) {
    if (k < 3 || k > 7)
        throw std::invalid_argument("classify_hadamard: k must be in 3..7");
    ClassificationRow row;
    row.k = k;
    row.family = 'H';

    for (const FamilyParams& p : family_params_table(k)) {
        const QuaternaryCode h = hadamard_code(p);
        const BinaryCode image = binary_image(h);
        ClassificationRow::Rep rep{p, kernel(image).size(), is_linear(image)};
        row.reps.push_back(rep);
    }

    // r1 <= 1 forms the single linear class; each r1 >= 2 is its own class.
    std::set<std::uint64_t> linear_kernels;
    std::set<std::uint64_t> nonlinear_kernels;
    int nonlinear = 0;
    for (const auto& rep : row.reps) {
        if (rep.params.r1 <= 1) {
            if (!rep.linear)
                throw std::runtime_error("classify_hadamard: expected linear code");
            linear_kernels.insert(rep.invariant);
        } else {
            if (rep.linear)
                throw std::runtime_error("classify_hadamard: expected nonlinear code");
            nonlinear_kernels.insert(rep.invariant);
            ++nonlinear;
        }
    }
    if (linear_kernels.size() > 1)
        throw std::runtime_error(
            "classify_hadamard: linear representatives disagree on kernel size");
    if (static_cast<int>(nonlinear_kernels.size()) != nonlinear)
        throw std::runtime_error(
            "classify_hadamard: kernel sizes fail to separate the classes");
    for (const std::uint64_t ks : nonlinear_kernels)
        if (linear_kernels.count(ks))
            throw std::runtime_error(
                "classify_hadamard: kernel sizes fail to separate the classes");

    row.class_count = (linear_kernels.empty() ? 0 : 1) + nonlinear;
    return row;
}

ClassificationRow classify_perfect(int k, bool allow_slow) {
    if (k < 4 || k > 7)
        throw std::invalid_argument("classify_perfect: k must be in 4..7");
    ClassificationRow row;
    row.k = k;
    row.family = 'C';

    const int enumeration_cap = allow_slow ? 26 : 13;
    std::set<std::uint64_t> ranks;
    for (const FamilyParams& p : family_params_table(k)) {
        const QuaternaryCode c = perfect_code(p);
        const int fast = rank_via_generators(c);
        int value = fast;
        if (c.log2_size() <= enumeration_cap) {
            value = rank_via_enumeration(binary_image(c));
            if (value != fast)
                throw std::runtime_error(
                    "classify_perfect: enumeration and generator-span ranks disagree");
        }
        row.reps.push_back({p, static_cast<std::uint64_t>(value),
                            value == c.log2_size()});
        ranks.insert(static_cast<std::uint64_t>(value));
    }
    if (ranks.size() != row.reps.size())
        throw std::runtime_error("classify_perfect: ranks fail to be distinct");
    row.class_count = static_cast<int>(row.reps.size());
    return row;
}

}  // namespace z4
