#include "mbnim/canonical_systems.hpp"

#include <algorithm>
#include <stdexcept>

#include "mbnim/maximum_system.hpp"

namespace mbnim {

bool in_ord(const MixedBase& base, const Position& c) {
    if (is_zero(c)) return false;
    Natural total = 0;
    for (Natural v : c) total = checked_add(total, v);
    return ord(base, total) == mord(base, c);
}

namespace {

std::size_t top_digit_index(const MixedBase& base, Natural n) {
    // Index of the most significant nonzero digit; 0 for n = 0.
    std::size_t top = 0;
    for (std::size_t level = 0; n != 0; ++level) {
        if (n % base.radix_at(level) != 0) top = level;
        n /= base.radix_at(level);
    }
    return top;
}

bool nj_conditions_hold(const MixedBase& base, const Position& c, std::size_t n,
                        std::size_t j) {
    const std::size_t m = c.size();
    if (j >= m || c[j] == 0) return false;
    Natural pv_n = place_value(base, n);
    Natural pv_next = checked_mul(pv_n, base.radix_at(n));
    // (C1)
    if (c[j] >= pv_next) return false;
    for (std::size_t i = 0; i < m; ++i) {
        if (i == j) continue;
        if (c[i] != digit_at(base, c[i], n) * pv_n) return false;
    }
    // (C2)
    Natural digit_sum = 0;
    for (std::size_t i = 0; i < m; ++i) digit_sum += digit_at(base, c[i], n);
    Natural dj = digit_at(base, c[j], n);
    if (digit_sum + (dj == 0 ? 1 : 0) > base.radix_at(n) - 1) return false;
    // (C3)
    for (std::size_t i = 0; i < m; ++i)
        if (digit_at(base, c[i], n) > dj + 1) return false;
    return true;
}

}  // namespace

NjInfo nj_info(const MixedBase& base, const Position& c) {
    NjInfo info;
    if (is_zero(c)) return info;
    if (hamming_weight(c) == 1) {
        std::size_t j = 0;
        while (c[j] == 0) ++j;
        info.form = NjInfo::Form::WeightOne;
        info.level = top_digit_index(base, c[j]);
        info.pivots = {j};
        return info;
    }
    std::size_t n_max = 0;
    for (Natural v : c) n_max = std::max(n_max, top_digit_index(base, v));
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (!nj_conditions_hold(base, c, n, j)) continue;
            info.form = NjInfo::Form::FixedN;
            info.level = n;  // all valid pairs share one N when wt(C) >= 2
            info.pivots.insert(j);
        }
        if (!info.empty()) break;
    }
    return info;
}

bool in_nmin(const MixedBase& base, const Position& c) { return !nj_info(base, c).empty(); }

std::size_t hamming_weight(const Position& c) {
    std::size_t w = 0;
    for (Natural v : c)
        if (v != 0) ++w;
    return w;
}

Natural sigma_weight(const MixedBase& base, std::size_t m) {
    return std::min<Natural>(m, base.sup_radix_minus_one());
}

std::set<Position> restrict_set(const std::set<Position>& moves,
                                const std::set<std::size_t>& s, std::size_t m) {
    for (std::size_t i : s)
        if (i >= m) throw IndexOutOfRangeError("restrict: index out of range");
    std::set<Position> out;
    for (const Position& c : moves) {
        if (c.size() != m) throw IndexOutOfRangeError("restrict: element of wrong length");
        bool vanishes_off_s = true;
        for (std::size_t i = 0; i < m && vanishes_off_s; ++i)
            if (!s.count(i) && c[i] != 0) vanishes_off_s = false;
        if (!vanishes_off_s) continue;
        Position projected;
        projected.reserve(s.size());
        for (std::size_t i : s) projected.push_back(c[i]);  // set iterates in order
        out.insert(std::move(projected));
    }
    return out;
}

Position lift(const Position& c, const std::set<std::size_t>& s, std::size_t m) {
    if (c.size() != s.size()) throw IndexOutOfRangeError("lift: |C'| != |S|");
    for (std::size_t i : s)
        if (i >= m) throw IndexOutOfRangeError("lift: index out of range");
    Position out(m, 0);
    std::size_t k = 0;
    for (std::size_t i : s) out[i] = c[k++];
    return out;
}

std::set<Position> orbit(const Position& c) {
    Position sorted = c;
    std::sort(sorted.begin(), sorted.end());
    std::set<Position> out;
    do {
        out.insert(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

bool is_symmetric(const std::set<Position>& moves) {
    for (const Position& c : moves)
        for (const Position& p : orbit(c))
            if (!moves.count(p)) return false;
    return true;
}

bool has_minimum_system(const MixedBase& base, std::size_t m) {
    if (m <= 1) return true;
    return base.all_two_after_first();
}

bool has_minimum_symmetric_system(const MixedBase& base, std::size_t m) {
    if (m <= 1) return true;
    if (base.all_two_after_first()) return true;
    if (base.radix_at(0) != 2 || base.radix_at(1) != 3) return false;
    if (base.tail() != 2) return false;
    for (std::size_t i = 2; i < base.prefix().size(); ++i)
        if (base.prefix()[i] != 2) return false;
    return true;
}

bool is_member(const MixedBase& base, const MoveSystem& system, const Position& c) {
    if (is_zero(c)) return false;
    if (system.minus.count(c)) return false;
    if (system.plus.count(c)) return true;
    switch (system.kind) {
        case SystemKind::WeightOne: return hamming_weight(c) == 1;
        case SystemKind::Ord: return in_ord(base, c);
        case SystemKind::Nmin: return in_nmin(base, c);
        case SystemKind::Max: return in_max(base, c);
        case SystemKind::Explicit: return system.explicit_set.count(c) != 0;
    }
    return false;
}

std::vector<Position> enumerate_system(const MixedBase& base, const MoveSystem& system,
                                       const Box& box) {
    std::vector<Position> out;
    for_each_position(box, [&](const Position& c) {
        if (is_member(base, system, c)) out.push_back(c);
    });
    return out;  // lexicographic by construction
}

Position find_move(const MixedBase& base, const Position& x, Natural h) {
    const std::size_t m = x.size();
    Natural n = nim_sum(base, x);
    if (h >= n) throw LosingPositionError("target value is not below the Nim sum");

    Digits nd = to_digits(base, n);
    Digits hd = to_digits(base, h);
    hd.resize(nd.size(), 0);
    std::size_t top = nd.size() - 1;
    while (nd[top] == hd[top]) --top;  // exists since h != n

    // Pivot: the coordinate with the largest value truncated to digits <= top
    // (ties to the smallest index). Its digit at `top` is then maximal too.
    Natural pv_next = place_value(base, top + 1);
    std::size_t j = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (x[i] % pv_next > x[j] % pv_next) j = i;

    // Digit decrements at `top`: total t, pivot takes the largest feasible
    // share, the rest is spread in increasing index order, capped by the
    // pivot's share.
    Natural t = nd[top] - hd[top];  // top differing digit of h is smaller
    Natural xj_top = digit_at(base, x[j], top);
    Natural dj = std::min(xj_top, t);
    for (;; --dj) {
        Natural capacity = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (i != j) capacity += std::min(digit_at(base, x[i], top), dj);
        if (capacity >= t - dj) break;
        if (dj == 0) throw std::logic_error("find_move: no feasible digit decrement");
    }
    std::vector<Natural> dec(m, 0);
    dec[j] = dj;
    Natural rem = t - dj;
    for (std::size_t i = 0; i < m && rem > 0; ++i) {
        if (i == j) continue;
        dec[i] = std::min({digit_at(base, x[i], top), dj, rem});
        rem -= dec[i];
    }

    // Option Y: pivot's digits below `top` absorb the change n -> h, every
    // coordinate drops dec[i] at digit `top`, digits above are untouched.
    Position y = x;
    for (std::size_t i = 0; i < m; ++i) {
        if (i == j) continue;
        y[i] = x[i] - dec[i] * place_value(base, top);
    }
    Natural low = 0;
    Natural place = 1;
    for (std::size_t l = 0; l < top; ++l) {
        Natural r = base.radix_at(l);
        Natural d = (digit_at(base, x[j], l) + r - nd[l] + hd[l]) % r;
        low = checked_add(low, checked_mul(d, place));
        place = checked_mul(place, r);
    }
    low = checked_add(low, checked_mul(xj_top - dj, place));
    y[j] = x[j] - x[j] % pv_next + low;

    if (nim_sum(base, y) != h)
        throw std::logic_error("find_move: constructed option has wrong value");
    Position c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = x[i] - y[i];
    return c;
}

}  // namespace mbnim
