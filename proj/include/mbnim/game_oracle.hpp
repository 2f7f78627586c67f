#pragma once

#include <optional>
#include <set>
#include <vector>

#include "mbnim/canonical_systems.hpp"
#include "mbnim/position.hpp"

namespace mbnim {

/// Least natural number not in the set.
Natural mex(const std::set<Natural>& values);

/// Brute-force Sprague-Grundy values over a box, dense row-major.
struct SGTable {
    Box box;
    std::vector<Natural> values;

    Natural at(const Position& x) const { return values[box.index_of(x)]; }
};

/// Ground-truth table: values[X] = mex{values[X - C] : C in system, X - C >= 0},
/// evaluated in nondecreasing coordinate-sum order.
SGTable sg_table(const MixedBase& base, const Box& box, const MoveSystem& system);

/// Some member C with X - C >= 0 and nim_sum(X - C) = h; lexicographically
/// least witness, or nullopt.
std::optional<Position> covers(const MixedBase& base, const MoveSystem& system,
                               const Position& x, Natural h);

struct VerifyReport {
    enum class Outcome { Ok, SG1Violation, SG2Violation } outcome = Outcome::Ok;
    Position x;      // violating position
    Position move;   // SG1: the member covering X at its own value
    Natural h = 0;   // SG2: the uncovered value below nim_sum(X)

    bool ok() const { return outcome == Outcome::Ok; }
};

/// Checks (SG1) and (SG2) for every X in the box and every h < nim_sum(X);
/// positions scanned by (coordinate sum, lexicographic), first violation wins.
VerifyReport verify_system(const MixedBase& base, const MoveSystem& system, std::size_t m,
                           const Box& box);

}  // namespace mbnim
