#include "mbnim/mixed_radix.hpp"

#include <algorithm>
#include <sstream>

namespace mbnim {

MixedBase::MixedBase(std::vector<Natural> prefix, Natural tail)
    : prefix_(std::move(prefix)), tail_(tail) {
    if (tail_ < 2) throw PreconditionError("every radix must be >= 2");
    for (Natural r : prefix_)
        if (r < 2) throw PreconditionError("every radix must be >= 2");
    // Normalize: a prefix that only repeats the tail carries no information.
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

MixedBase MixedBase::chop() const {
    if (prefix_.empty()) return *this;
    return MixedBase(std::vector<Natural>(prefix_.begin() + 1, prefix_.end()), tail_);
}

Natural MixedBase::sup_radix_minus_one() const {
    Natural sup = tail_;
    for (Natural r : prefix_) sup = std::max(sup, r);
    return sup - 1;
}

bool MixedBase::all_two_after_first() const {
    if (tail_ != 2) return false;
    for (std::size_t i = 1; i < prefix_.size(); ++i)
        if (prefix_[i] != 2) return false;
    return true;
}

std::string MixedBase::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        if (i) out << ',';
        out << prefix_[i];
    }
    out << ':' << tail_;
    return out.str();
}

MixedBase MixedBase::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("base must be 'p0,p1,...:t' or ':t', got '" + text + "'");
    auto parse_nat = [&](const std::string& tok, std::size_t at) -> Natural {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad radix '" + tok + "' at position " + std::to_string(at) +
                             " in base '" + text + "'");
        return std::stoull(tok);
    };
    std::vector<Natural> prefix;
    std::size_t pos = 0;
    while (pos < colon) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos || comma > colon) comma = colon;
        prefix.push_back(parse_nat(text.substr(pos, comma - pos), pos));
        pos = comma + 1;
    }
    Natural tail = parse_nat(text.substr(colon + 1), colon + 1);
    return MixedBase(std::move(prefix), tail);
}

Natural place_value(const MixedBase& base, std::size_t level) {
    Natural v = 1;
    for (std::size_t l = 0; l < level; ++l) v = checked_mul(v, base.radix_at(l));
    return v;
}

Digits to_digits(const MixedBase& base, Natural n) {
    Digits digits;
    for (std::size_t level = 0; n != 0; ++level) {
        Natural radix = base.radix_at(level);
        digits.push_back(n % radix);
        n /= radix;
    }
    return digits;
}

Natural from_digits(const MixedBase& base, const Digits& digits) {
    Natural n = 0;
    Natural place = 1;
    for (std::size_t level = 0; level < digits.size(); ++level) {
        Natural radix = base.radix_at(level);
        if (digits[level] >= radix)
            throw InvalidDigitError("digit " + std::to_string(digits[level]) +
                                    " at level " + std::to_string(level) +
                                    " exceeds radix " + std::to_string(radix));
        n = checked_add(n, checked_mul(digits[level], place));
        if (level + 1 < digits.size()) place = checked_mul(place, radix);
    }
    return n;
}

namespace {

// Digitwise fold shared by nim_add / nim_sub / carry digits.
template <typename DigitOp>
Natural digitwise(const MixedBase& base, Natural n, Natural h, DigitOp op) {
    Natural result = 0;
    Natural place = 1;
    for (std::size_t level = 0; n != 0 || h != 0; ++level) {
        Natural radix = base.radix_at(level);
        Natural d = op(n % radix, h % radix, radix);
        result = checked_add(result, checked_mul(d, place));
        n /= radix;
        h /= radix;
        if (n != 0 || h != 0) place = checked_mul(place, radix);
    }
    return result;
}

}  // namespace

Natural nim_add(const MixedBase& base, Natural n, Natural h) {
    return digitwise(base, n, h,
                     [](Natural a, Natural b, Natural r) { return (a + b) % r; });
}

Natural nim_sub(const MixedBase& base, Natural n, Natural h) {
    return digitwise(base, n, h,
                     [](Natural a, Natural b, Natural r) { return (a + r - b) % r; });
}

Natural nim_sum(const MixedBase& base, std::span<const Natural> coords) {
    Natural acc = 0;
    for (Natural x : coords) acc = nim_add(base, acc, x);
    return acc;
}

OrdValue ord(const MixedBase& base, Natural n) {
    if (n == 0) return OrdValue::inf();
    Natural level = 0;
    while (n % base.radix_at(level) == 0) {
        n /= base.radix_at(level);
        ++level;
    }
    return OrdValue::finite(level);
}

OrdValue mord(const MixedBase& base, std::span<const Natural> coords) {
    OrdValue least = OrdValue::inf();
    for (Natural x : coords) {
        OrdValue o = ord(base, x);
        if (o < least) least = o;
    }
    return least;
}

Natural carry_vector(const MixedBase& base, Natural n, Natural h) {
    return nim_sub(base, checked_add(n, h), nim_add(base, n, h));
}

Natural chop_num(const MixedBase& base, Natural n) { return n / base.radix_at(0); }

Natural digit_at(const MixedBase& base, Natural n, std::size_t level) {
    for (std::size_t l = 0; l < level; ++l) n /= base.radix_at(l);
    return n % base.radix_at(level);
}

std::string digits_to_string(const Digits& digits) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out << ',';
        out << digits[i];
    }
    out << ']';
    return out.str();
}

}  // namespace mbnim
