#include "mbnim/minimal_audit.hpp"

namespace mbnim {

std::optional<std::pair<Position, Natural>> necessity_witness(const MixedBase& base,
                                                              const MoveSystem& system,
                                                              const Position& c,
                                                              const Box& box) {
    std::vector<Position> moves = enumerate_system(base, system, box);
    for (const Position& x : positions_by_sum(box)) {
        auto y_c = sub(x, c);
        if (!y_c) continue;
        Natural n = nim_sum(base, x);
        Natural h_c = nim_sum(base, *y_c);
        if (h_c >= n) continue;  // only h < nim_sum(X) certify (SG2) breakage
        bool unique = true;
        for (const Position& other : moves) {
            if (other == c) continue;
            auto y = sub(x, other);
            if (y && nim_sum(base, *y) == h_c) {
                unique = false;
                break;
            }
        }
        if (unique) return std::make_pair(x, h_c);
    }
    return std::nullopt;
}

AuditReport audit_minimal(const MixedBase& base, const MoveSystem& system, const Box& box) {
    AuditReport report;
    for (const Position& c : enumerate_system(base, system, box)) {
        if (auto witness = necessity_witness(base, system, c, box))
            report.necessary.push_back({c, witness->first, witness->second});
        else
            report.undetermined.push_back(c);
    }
    return report;
}

bool nmin_closed_form_check(const MixedBase& base, std::size_t m, const Box& box) {
    if (!base.all_two_after_first())
        throw PreconditionError("closed form requires all radices 2 beyond index 0");
    if (box.dims() != m) throw PreconditionError("box dimension mismatch");
    Natural beta0 = base.radix_at(0);
    bool match = true;
    for_each_position(box, [&](const Position& c) {
        if (!match) return;
        Natural total = coord_sum(c);
        bool closed_form = hamming_weight(c) == 1 || (1 <= total && total <= beta0 - 1);
        if (closed_form != in_nmin(base, c)) match = false;
    });
    return match;
}

}  // namespace mbnim
