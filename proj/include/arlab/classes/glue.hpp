#pragma once

// Gluing: member f of part i becomes f^(0^{shift_i} x) = f(x), 0 elsewhere.

#include "arlab/core/generation.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace arlab::classes {

struct GluePart {
    GeneratorList cls;
    std::uint64_t shift = 0;
    std::uint64_t max_len = 0;  // longest instance the part's members may label 1
};

inline Generator shifted(const Generator& f, std::uint64_t shift, std::size_t part) {
    return Generator("glue" + std::to_string(part) + ":" + f.id(), [f, shift](const TokenString& x) -> Bit {
        RunReader rd(x);
        if (!rd.take(0, shift)) {
            // Fewer than shift leading zeros.
            return 0;
        }
        return f(x.substr(shift));
    });
}

// Requires shift_{i+1} > shift_i + max_len_i, which keeps the supports disjoint.
inline GeneratorList glue_classes(const std::vector<GluePart>& parts) {
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i + 1].shift <= parts[i].shift + parts[i].max_len)
            throw std::invalid_argument("glue_classes: shift schedule violates disjointness at part " +
                                        std::to_string(i + 1));
    GeneratorList out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const Generator& f : parts[i].cls) out.push_back(shifted(f, parts[i].shift, i));
    return out;
}

}  // namespace arlab::classes
