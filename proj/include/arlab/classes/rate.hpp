#pragma once

// Growth rates r: N+ -> N+ used by the taxonomy construction.

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace arlab::classes {

struct RateFunction {
    std::string name;
    std::function<std::uint64_t(std::uint64_t)> r;
    std::uint64_t M0 = 256;

    std::uint64_t operator()(std::uint64_t M) const {
        if (M == 0) throw std::invalid_argument("RateFunction: argument must be positive");
        return r(M);
    }
};

inline std::uint64_t floor_log2(std::uint64_t M) { return static_cast<std::uint64_t>(std::bit_width(M)) - 1; }

// r(M) = max(1, floor(log2(M) / 4)).
inline RateFunction quarter_log_rate(std::uint64_t M0 = 256) {
    return {"quarter_log", [](std::uint64_t M) { return std::max<std::uint64_t>(1, floor_log2(M) / 4); }, M0};
}

inline RateFunction constant_rate(std::uint64_t c, std::uint64_t M0 = 256) {
    if (c == 0) throw std::invalid_argument("constant_rate: value must be positive");
    return {"constant" + std::to_string(c), [c](std::uint64_t) { return c; }, M0};
}

inline RateFunction rate_by_name(const std::string& name, std::uint64_t M0 = 256) {
    if (name == "quarter_log") return quarter_log_rate(M0);
    if (name.rfind("constant", 0) == 0 && name.size() > 8) return constant_rate(std::stoull(name.substr(8)), M0);
    throw std::invalid_argument("unknown rate function '" + name + "'");
}

struct RateCheck {
    bool sub_logarithmic = true;  // 4 r(M) <= log2 M for M in [M0, hi]
    bool non_decreasing = true;
    bool sub_additive = true;
    std::string failure;
    bool ok() const { return sub_logarithmic && non_decreasing && sub_additive; }
};

// Checks the three regularity conditions on [1, hi] (sub-logarithmic only from M0).
// Sub-additivity is tested on all pairs with a + b <= hi.
inline RateCheck check_rate(const RateFunction& rate, std::uint64_t hi) {
    RateCheck out;
    for (std::uint64_t M = std::max<std::uint64_t>(rate.M0, 1); M <= hi && out.sub_logarithmic; ++M) {
        if (std::pow(2.0, 4.0 * static_cast<double>(rate(M))) > static_cast<double>(M)) {
            out.sub_logarithmic = false;
            out.failure = "sub-logarithmic fails at M=" + std::to_string(M);
        }
    }
    for (std::uint64_t M = 2; M <= hi && out.non_decreasing; ++M) {
        if (rate(M) < rate(M - 1)) {
            out.non_decreasing = false;
            out.failure = "non-decreasing fails at M=" + std::to_string(M);
        }
    }
    for (std::uint64_t a = 1; a < hi && out.sub_additive; ++a)
        for (std::uint64_t b = a; a + b <= hi; ++b)
            if (rate(a + b) > rate(a) + rate(b)) {
                out.sub_additive = false;
                out.failure = "sub-additive fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
                break;
            }
    return out;
}

}  // namespace arlab::classes
