#include "mbnim/game_oracle.hpp"

#include <algorithm>

namespace mbnim {

Natural mex(const std::set<Natural>& values) {
    Natural n = 0;
    for (Natural v : values) {
        if (v != n) break;  // set iterates in increasing order
        ++n;
    }
    return n;
}

SGTable sg_table(const MixedBase& base, const Box& box, const MoveSystem& system) {
    SGTable table{box, std::vector<Natural>(box.size(), 0)};
    // Every candidate move within the box; moves from in-box positions stay
    // in-box because the box is downward closed.
    std::vector<Position> moves = enumerate_system(base, system, box);
    for (const Position& x : positions_by_sum(box)) {
        std::set<Natural> option_values;
        for (const Position& c : moves) {
            if (auto y = sub(x, c)) option_values.insert(table.at(*y));
        }
        table.values[box.index_of(x)] = mex(option_values);
    }
    return table;
}

std::optional<Position> covers(const MixedBase& base, const MoveSystem& system,
                               const Position& x, Natural h) {
    std::optional<Position> found;
    Box descendants{x};
    for (Natural& b : descendants.bounds) b = checked_add(b, 1);  // inclusive
    for_each_position(descendants, [&](const Position& c) {
        if (found || is_zero(c)) return;
        if (!is_member(base, system, c)) return;
        Position y = *sub(x, c);
        if (nim_sum(base, y) == h) found = c;
    });
    return found;
}

VerifyReport verify_system(const MixedBase& base, const MoveSystem& system, std::size_t m,
                           const Box& box) {
    if (box.dims() != m) throw PreconditionError("verify_system: box dimension mismatch");
    std::vector<Position> moves = enumerate_system(base, system, box);
    for (const Position& x : positions_by_sum(box)) {
        Natural n = nim_sum(base, x);
        std::set<Natural> reachable;
        for (const Position& c : moves) {
            auto y = sub(x, c);
            if (!y) continue;
            Natural value = nim_sum(base, *y);
            if (value == n)  // (SG1): moves must never preserve the value
                return {VerifyReport::Outcome::SG1Violation, x, c, 0};
            reachable.insert(value);
        }
        for (Natural h = 0; h < n; ++h)  // (SG2): every smaller value reachable
            if (!reachable.count(h))
                return {VerifyReport::Outcome::SG2Violation, x, {}, h};
    }
    return {};
}

}  // namespace mbnim
