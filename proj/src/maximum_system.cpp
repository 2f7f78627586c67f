#include "mbnim/maximum_system.hpp"

#include <stdexcept>

namespace mbnim {

namespace {

// Digit 0 of nim_sum(F): the mod-beta_0 sum of the digit-0 entries.
Natural sigma_digit0(const MixedBase& base, const Position& f) {
    Natural r0 = base.radix_at(0);
    Natural s = 0;
    for (Natural v : f) s = (s + v % r0) % r0;
    return s;
}

Position chop_position(const MixedBase& base, const Position& f) {
    Position g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) g[i] = chop_num(base, f[i]);
    return g;
}

}  // namespace

std::vector<Position> carry_set(const MixedBase& base, const Position& f) {
    const std::size_t m = f.size();
    Natural r0 = base.radix_at(0);
    std::vector<Position> out;
    Position r(m, 0);
    while (true) {
        out.push_back(r);
        std::size_t i = m;
        bool done = (m == 0);
        while (i > 0) {
            --i;
            Natural cap = (f[i] % r0 != 0) ? 1 : 0;
            if (r[i] < cap) {
                ++r[i];
                break;
            }
            r[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }
    return out;  // generated in lexicographic order
}

const MixedBase& LevelQuery::base_at(std::size_t depth) {
    if (depth == 0) return base_;
    while (chopped_.size() < depth)
        chopped_.push_back((chopped_.empty() ? base_ : chopped_.back()).chop());
    return chopped_[depth - 1];
}

bool LevelQuery::eval(std::size_t depth, const Position& f, std::int64_t level) {
    if (level < 0) return is_zero(f);
    // Depth beyond the prefix reuses one constant base; fold the key so the
    // memo does not grow with depth for constant tails.
    std::size_t key_depth = std::min<std::size_t>(depth, base_.prefix().size());
    auto key = std::make_tuple(key_depth, level, f);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const MixedBase& b = base_at(depth);
    bool result = false;
    if (sigma_digit0(b, f) == 0) {
        Position chopped = chop_position(b, f);
        for (const Position& r : carry_set(b, f)) {
            if (eval(depth + 1, add(chopped, r), level - 1)) {
                result = true;
                break;
            }
        }
    }
    memo_.emplace(std::move(key), result);
    return result;
}

bool in_f_level(const MixedBase& base, const Position& f, std::int64_t level) {
    LevelQuery q(base);
    return q.in_f_level(f, level);
}

std::int64_t admissible_level(const MixedBase& base, const Position& f) {
    Natural max_f = 0;
    for (Natural v : f) max_f = std::max(max_f, v);
    Natural place = 1;  // beta^(L)
    std::int64_t level = 0;
    while (checked_mul(place, base.radix_at(level) - 1) < max_f) {
        place = checked_mul(place, base.radix_at(level));
        ++level;
    }
    return level;
}

bool in_max(const MixedBase& base, const Position& c) {
    if (is_zero(c)) return false;
    return !in_f_level(base, c, admissible_level(base, c));
}

namespace {

Position witness_impl(const MixedBase& base, const Position& f) {
    const std::size_t m = f.size();
    if (is_zero(f)) return Position(m, 0);
    Natural r0 = base.radix_at(0);
    MixedBase chopped_base = base.chop();
    Position chopped = chop_position(base, f);
    for (const Position& r : carry_set(base, f)) {
        Position g = add(chopped, r);
        if (in_max(chopped_base, g)) continue;  // g not in F^{chopped beta}
        Position x_hat = witness_impl(chopped_base, g);
        Position x(m);
        for (std::size_t i = 0; i < m; ++i) {
            Natural low = (r[i] == 1) ? r0 - f[i] % r0 : 0;
            x[i] = checked_add(low, checked_mul(r0, x_hat[i]));
        }
        return x;
    }
    throw std::logic_error("nonmove_witness: no carry branch leads to F^beta");
}

}  // namespace

Position nonmove_witness(const MixedBase& base, const Position& f) {
    if (!is_zero(f) && in_max(base, f))
        throw NotAFudgeError("vector is a member of the maximum system");
    Position x = witness_impl(base, f);
    if (nim_sum(base, add(x, f)) != nim_sum(base, x))
        throw std::logic_error("nonmove_witness: constructed witness failed verification");
    return x;
}

bool max_equals_ord(const MixedBase& base, std::size_t m) {
    if (m <= 1) return true;
    return base.all_two_after_first();
}

}  // namespace mbnim
