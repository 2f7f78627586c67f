#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "mbnim/position.hpp"

namespace mbnim {

/// Carry(F): the possible carry-into-digit-1 vectors when adding any X to F.
/// r is a member iff r^i <= min(1, f^i_0) for every i; sorted lexicographically.
std::vector<Position> carry_set(const MixedBase& base, const Position& f);

/// Memoized evaluator of the level sets F_L approximating the non-move set
/// F^beta. Depth k interprets vectors in the k-times-chopped base.
class LevelQuery {
  public:
    explicit LevelQuery(MixedBase base) : base_(std::move(base)) {}

    /// F in F_L (level -1 is {0}).
    bool in_f_level(const Position& f, std::int64_t level) { return eval(0, f, level); }

    const MixedBase& base() const { return base_; }

  private:
    bool eval(std::size_t depth, const Position& f, std::int64_t level);
    const MixedBase& base_at(std::size_t depth);

    MixedBase base_;
    std::vector<MixedBase> chopped_;  // chopped_[k] = base chopped k+1 times
    std::map<std::tuple<std::size_t, std::int64_t, Position>, bool> memo_;
};

bool in_f_level(const MixedBase& base, const Position& f, std::int64_t level);

/// Least L with max F <= beta^(L+1) - beta^(L); this L makes the level set
/// F_L decide membership in F^beta exactly.
std::int64_t admissible_level(const MixedBase& base, const Position& f);

/// C in C_max = {C != 0 : nim_sum(X + C) != nim_sum(X) for every X}.
bool in_max(const MixedBase& base, const Position& c);

/// For F in F^beta, an X with nim_sum(X + F) = nim_sum(X); the equality is
/// re-verified before returning. Throws NotAFudgeError when F is in C_max.
Position nonmove_witness(const MixedBase& base, const Position& f);

/// C_max = C_ord iff beta = (beta_0, 2, 2, ...); true for m <= 1.
bool max_equals_ord(const MixedBase& base, std::size_t m);

}  // namespace mbnim
