#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mbnim/game_oracle.hpp"

namespace mbnim {

/// Box-bounded minimality evidence. "necessary" carries a sound certificate
/// (removing the move breaks (SG2) at the witness); "undetermined" makes no
/// claim either way.
struct AuditReport {
    struct Necessary {
        Position move;
        Position witness_x;
        Natural h;
    };
    std::vector<Necessary> necessary;
    std::vector<Position> undetermined;
};

/// Least (X, h) in (|X|_1, X, h) order such that C is the unique system
/// member covering X at h within the box, or nullopt.
std::optional<std::pair<Position, Natural>> necessity_witness(const MixedBase& base,
                                                              const MoveSystem& system,
                                                              const Position& c,
                                                              const Box& box);

AuditReport audit_minimal(const MixedBase& base, const MoveSystem& system, const Box& box);

/// Checks the closed form of C_nmin for bases with all radices 2 beyond
/// index 0: membership iff wt(C) = 1 or 1 <= sum of coordinates <= beta_0 - 1.
/// Throws PreconditionError for other bases.
bool nmin_closed_form_check(const MixedBase& base, std::size_t m, const Box& box);

}  // namespace mbnim
