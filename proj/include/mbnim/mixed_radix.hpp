#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mbnim/error.hpp"

namespace mbnim {

/// Nonnegative integer; all arithmetic on Naturals is overflow-checked.
using Natural = std::uint64_t;

inline Natural checked_add(Natural a, Natural b) {
    Natural r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("addition overflow");
    return r;
}

inline Natural checked_mul(Natural a, Natural b) {
    Natural r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("multiplication overflow");
    return r;
}

/// An infinite sequence of radices beta_L >= 2, stored as a finite prefix
/// followed by a constant tail. Text form: "p0,p1,...:t" (pure-constant
/// bases may be written ":t").
class MixedBase {
  public:
    MixedBase(std::vector<Natural> prefix, Natural tail);

    /// beta_L
    Natural radix_at(std::size_t level) const {
        return level < prefix_.size() ? prefix_[level] : tail_;
    }

    /// Drops beta_0; the identity when the prefix is empty.
    MixedBase chop() const;

    const std::vector<Natural>& prefix() const { return prefix_; }
    Natural tail() const { return tail_; }

    /// max{beta_L - 1 : L} computed exactly from the representation.
    Natural sup_radix_minus_one() const;

    /// True iff beta_L == 2 for every L >= 1.
    bool all_two_after_first() const;

    std::string to_string() const;
    static MixedBase parse(const std::string& text);

    bool operator==(const MixedBase&) const = default;

  private:
    std::vector<Natural> prefix_;
    Natural tail_;
};

/// Little-endian digit vector; canonical form has no trailing zeros, the
/// empty vector denotes 0.
using Digits = std::vector<Natural>;

/// ord_beta(n): max L with beta^(L) | n; infinite exactly for n = 0.
struct OrdValue {
    bool infinite = false;
    Natural value = 0;

    static OrdValue finite(Natural v) { return {false, v}; }
    static OrdValue inf() { return {true, 0}; }
    bool operator==(const OrdValue&) const = default;
    bool operator<(const OrdValue& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return value < o.value;
    }
};

/// beta^(L) = beta_0 * beta_1 * ... * beta_{L-1}
Natural place_value(const MixedBase& base, std::size_t level);

Digits to_digits(const MixedBase& base, Natural n);
Natural from_digits(const MixedBase& base, const Digits& digits);

/// Digitwise addition / subtraction mod beta_L (no carries, no borrows).
Natural nim_add(const MixedBase& base, Natural n, Natural h);
Natural nim_sub(const MixedBase& base, Natural n, Natural h);

/// x^0 (+) x^1 (+) ... ; 0 for an empty span.
Natural nim_sum(const MixedBase& base, std::span<const Natural> coords);

OrdValue ord(const MixedBase& base, Natural n);
OrdValue mord(const MixedBase& base, std::span<const Natural> coords);

/// r(n,h) = (n+h) (-) (n(+)h); digit L is 1 iff n+h carries in digit L.
Natural carry_vector(const MixedBase& base, Natural n, Natural h);

/// floor(n / beta_0), to be read in the chopped base.
Natural chop_num(const MixedBase& base, Natural n);

/// Digit L of n in the given base.
Natural digit_at(const MixedBase& base, Natural n, std::size_t level);

std::string digits_to_string(const Digits& digits);

}  // namespace mbnim
