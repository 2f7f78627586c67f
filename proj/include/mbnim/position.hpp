#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mbnim/mixed_radix.hpp"

namespace mbnim {

/// Length-m vector of heap sizes (coordinates indexed by 0..m-1).
using Position = std::vector<Natural>;

inline Natural nim_sum(const MixedBase& base, const Position& x) {
    return nim_sum(base, std::span<const Natural>(x));
}

inline OrdValue mord(const MixedBase& base, const Position& x) {
    return mord(base, std::span<const Natural>(x));
}

/// Componentwise x - c, or nullopt if any difference would be negative.
inline std::optional<Position> sub(const Position& x, const Position& c) {
    Position y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < c[i]) return std::nullopt;
        y[i] = x[i] - c[i];
    }
    return y;
}

inline Position add(const Position& x, const Position& c) {
    Position y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = checked_add(x[i], c[i]);
    return y;
}

inline bool is_zero(const Position& x) {
    for (Natural v : x)
        if (v != 0) return false;
    return true;
}

inline Natural coord_sum(const Position& x) {
    Natural s = 0;
    for (Natural v : x) s = checked_add(s, v);
    return s;
}

inline std::string position_to_string(const Position& x) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(x[i]);
    }
    return out;
}

/// Finite box [0,b0) x ... x [0,b_{m-1}): the downward-closed truncation of
/// N^m used by all brute-force operations.
struct Box {
    std::vector<Natural> bounds;  // exclusive upper bounds

    std::size_t dims() const { return bounds.size(); }

    bool contains(const Position& x) const {
        if (x.size() != bounds.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] >= bounds[i]) return false;
        return true;
    }

    Natural size() const {
        Natural n = 1;
        for (Natural b : bounds) n = checked_mul(n, b);
        return n;
    }

    /// Row-major index (last coordinate fastest).
    Natural index_of(const Position& x) const {
        Natural idx = 0;
        for (std::size_t i = 0; i < bounds.size(); ++i) idx = idx * bounds[i] + x[i];
        return idx;
    }

    bool operator==(const Box&) const = default;
};

/// Calls fn for every position in the box in lexicographic order.
void for_each_position(const Box& box, const std::function<void(const Position&)>& fn);

/// All positions of the box sorted by (coordinate sum, lexicographic).
std::vector<Position> positions_by_sum(const Box& box);

}  // namespace mbnim
