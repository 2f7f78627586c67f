#include "mbnim/position.hpp"

#include <algorithm>

namespace mbnim {

void for_each_position(const Box& box, const std::function<void(const Position&)>& fn) {
    const std::size_t m = box.dims();
    for (Natural b : box.bounds)
        if (b == 0) return;
    Position x(m, 0);
    while (true) {
        fn(x);
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (++x[i] < box.bounds[i]) break;
            x[i] = 0;
            if (i == 0) return;
        }
        if (m == 0) return;  // single empty position
    }
}

std::vector<Position> positions_by_sum(const Box& box) {
    std::vector<Position> all;
    all.reserve(box.size());
    for_each_position(box, [&](const Position& x) { all.push_back(x); });
    std::stable_sort(all.begin(), all.end(), [](const Position& a, const Position& b) {
        return coord_sum(a) < coord_sum(b);
    });
    return all;
}

}  // namespace mbnim
