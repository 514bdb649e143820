#pragma once

#include <vector>

#include "lbcolor/instance.hpp"

namespace lbcolor::detail {

/// Weight tuple over (part, color) pairs, flattened as h * k + c.
using Tuple = std::vector<Weight>;

inline Tuple zero_tuple(const Instance& inst) {
    return Tuple(static_cast<std::size_t>(inst.p) * inst.k, 0);
}

inline Tuple bound_tuple(const Instance& inst) {
    Tuple t;
    t.reserve(static_cast<std::size_t>(inst.p) * inst.k);
    for (const auto& row : inst.bounds) t.insert(t.end(), row.begin(), row.end());
    return t;
}

inline std::size_t slot(const Instance& inst, int part, int color) {
    return static_cast<std::size_t>(part) * inst.k + color;
}

/// Componentwise a <= b.
inline bool fits(const Tuple& a, const Tuple& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Component sum, or nullopt-like empty result when it exceeds `cap`.
inline bool add_within(const Tuple& a, const Tuple& b, const Tuple& cap, Tuple& out) {
    out.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
        if (out[i] > cap[i]) return false;
    }
    return true;
}

}  // namespace lbcolor::detail
