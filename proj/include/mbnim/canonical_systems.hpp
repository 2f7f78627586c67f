#pragma once

#include <set>
#include <string>
#include <vector>

#include "mbnim/position.hpp"

namespace mbnim {

enum class SystemKind { WeightOne, Ord, Nmin, Max, Explicit };

/// A move system: one of the canonical intensional kinds (or an explicit
/// finite set) adjusted by finite plus/minus sets. The zero vector is never
/// a member.
struct MoveSystem {
    SystemKind kind = SystemKind::Ord;
    std::set<Position> explicit_set;  // used when kind == Explicit
    std::set<Position> plus;
    std::set<Position> minus;

    static MoveSystem weight_one() { return {SystemKind::WeightOne, {}, {}, {}}; }
    static MoveSystem ord() { return {SystemKind::Ord, {}, {}, {}}; }
    static MoveSystem nmin() { return {SystemKind::Nmin, {}, {}, {}}; }
    static MoveSystem max() { return {SystemKind::Max, {}, {}, {}}; }
    static MoveSystem explicit_moves(std::set<Position> moves) {
        return {SystemKind::Explicit, std::move(moves), {}, {}};
    }

    MoveSystem with_plus(std::set<Position> p) const {
        MoveSystem s = *this;
        s.plus = std::move(p);
        return s;
    }
    MoveSystem with_minus(std::set<Position> m) const {
        MoveSystem s = *this;
        s.minus = std::move(m);
        return s;
    }
};

/// Exact normal form of Nj(C): either empty, a tail {L >= level} x {pivot}
/// (weight-one moves), or a single level {level} x pivots.
struct NjInfo {
    enum class Form { Empty, WeightOne, FixedN } form = Form::Empty;
    Natural level = 0;                // N (WeightOne: least valid N)
    std::set<std::size_t> pivots;     // j set (singleton for WeightOne)

    bool empty() const { return form == Form::Empty; }
    bool contains(Natural n, std::size_t j) const {
        switch (form) {
            case Form::Empty: return false;
            case Form::WeightOne: return n >= level && pivots.count(j) != 0;
            case Form::FixedN: return n == level && pivots.count(j) != 0;
        }
        return false;
    }
    bool operator==(const NjInfo&) const = default;
};

/// C in C_ord: C != 0 and ord(sum of coordinates) = mord(C).
bool in_ord(const MixedBase& base, const Position& c);

/// The digit conditions (C1)-(C3) evaluated exactly.
NjInfo nj_info(const MixedBase& base, const Position& c);

/// C in C_nmin: Nj(C) nonempty.
bool in_nmin(const MixedBase& base, const Position& c);

std::size_t hamming_weight(const Position& c);

/// wt(sigma^{beta,m}) = min{m, sup{beta_L - 1}}.
Natural sigma_weight(const MixedBase& base, std::size_t m);

/// Keeps elements vanishing off S, projected to the coordinates in S.
std::set<Position> restrict_set(const std::set<Position>& moves,
                                const std::set<std::size_t>& s, std::size_t m);

/// Inserts zeros off S: |c| = |S|, result has length m.
Position lift(const Position& c, const std::set<std::size_t>& s, std::size_t m);

std::set<Position> orbit(const Position& c);
bool is_symmetric(const std::set<Position>& moves);

/// sigma^{beta,m} has a minimum system iff beta = (beta_0, 2, 2, ...)
/// (true for m <= 1).
bool has_minimum_system(const MixedBase& base, std::size_t m);

/// ... a minimum symmetric system iff beta = (beta_0, 2, 2, ...) or
/// beta = (2, 3, 2, 2, ...) (true for m <= 1).
bool has_minimum_symmetric_system(const MixedBase& base, std::size_t m);

/// Membership with plus/minus adjustments; the zero vector is never a member.
bool is_member(const MixedBase& base, const MoveSystem& system, const Position& c);

/// All members within the box, sorted lexicographically.
std::vector<Position> enumerate_system(const MixedBase& base, const MoveSystem& system,
                                       const Box& box);

/// The constructive winning-move finder: returns C in C_nmin with
/// X - C >= 0 and nim_sum(X - C) = h. Requires h < nim_sum(X), else throws
/// LosingPositionError. Deterministic digit-decrement policy.
Position find_move(const MixedBase& base, const Position& x, Natural h);

}  // namespace mbnim
