#include <doctest.h>

#include <algorithm>
#include <random>

#include "mbnim/canonical_systems.hpp"
#include "mbnim/game_oracle.hpp"
#include "mbnim/maximum_system.hpp"

using namespace mbnim;

namespace {

const MixedBase kBinary({}, 2);
const MixedBase kTernary({}, 3);
const MixedBase kBase5({}, 5);
const MixedBase kMixed23({2, 3}, 2);

// x mod beta^(level+1)
Natural low_part(const MixedBase& base, Natural x, std::size_t level) {
    return x % place_value(base, level + 1);
}

}  // namespace

TEST_CASE("in_ord examples in base :3") {
    CHECK(in_ord(kTernary, {1, 0}));
    CHECK(in_ord(kTernary, {7, 4}));
    CHECK_FALSE(in_ord(kTernary, {2, 1, 0}));
    CHECK_FALSE(in_ord(kTernary, {4, 4, 1}));
    CHECK_FALSE(in_ord(kTernary, {0, 0}));
}

TEST_CASE("nj_info normal forms in base :5") {
    NjInfo a = nj_info(kBase5, {1, 5, 5});
    CHECK(a.form == NjInfo::Form::FixedN);
    CHECK(a.level == 1);
    CHECK(a.pivots == std::set<std::size_t>{0});

    NjInfo b = nj_info(kBase5, {5, 0, 0});
    CHECK(b.form == NjInfo::Form::WeightOne);
    CHECK(b.level == 1);
    CHECK(b.pivots == std::set<std::size_t>{0});

    NjInfo c = nj_info(kBase5, {10, 5, 5});
    CHECK(c.form == NjInfo::Form::FixedN);
    CHECK(c.level == 1);
    CHECK(c.pivots == std::set<std::size_t>{0, 1, 2});

    CHECK(nj_info(kBase5, {6, 6, 5}).empty());
    CHECK(nj_info(kBase5, {16, 10, 0}).empty());
    CHECK(nj_info(kBase5, {0, 0, 0}).empty());

    CHECK(in_nmin(kBase5, {1, 5, 5}));
    CHECK_FALSE(in_nmin(kBase5, {6, 6, 5}));
}

TEST_CASE("weight-one moves always sit in every canonical system") {
    for (const MixedBase& base : {kBinary, kTernary, kBase5, kMixed23}) {
        for (Natural v = 1; v <= 20; ++v) {
            Position c{0, v, 0};
            CHECK(in_nmin(base, c));
            CHECK(in_ord(base, c));
            CHECK(in_max(base, c));
        }
    }
}

TEST_CASE("sigma_weight") {
    CHECK(sigma_weight(kBinary, 3) == 1);
    CHECK(sigma_weight(kTernary, 3) == 2);
    CHECK(sigma_weight(kBase5, 2) == 2);
    CHECK(sigma_weight(MixedBase({7}, 2), 5) == 5);
    CHECK(sigma_weight(kTernary, 1) == 1);
}

TEST_CASE("weight bound for nmin members") {
    for (const MixedBase& base : {kTernary, kMixed23, MixedBase({4}, 2)}) {
        Box box{{6, 6, 6}};
        Natural bound = sigma_weight(base, 3);
        for_each_position(box, [&](const Position& c) {
            if (in_nmin(base, c)) CHECK(hamming_weight(c) <= bound);
        });
    }
}

TEST_CASE("restrict and lift") {
    std::set<std::size_t> s{0, 2};
    CHECK(lift({4, 7}, s, 3) == Position{4, 0, 7});
    std::set<Position> moves{{1, 0, 2}, {1, 1, 2}, {0, 0, 3}};
    CHECK(restrict_set(moves, s, 3) == std::set<Position>{{1, 2}, {0, 3}});
}

TEST_CASE("restriction/lift predicate identities") {
    for (const MixedBase& base : {kTernary, kMixed23}) {
        for (std::set<std::size_t> s : {std::set<std::size_t>{0, 2},
                                        std::set<std::size_t>{1},
                                        std::set<std::size_t>{0, 1}}) {
            Box small{std::vector<Natural>(s.size(), 7)};
            for_each_position(small, [&](const Position& c) {
                Position lifted = lift(c, s, 3);
                CHECK(in_nmin(base, lifted) == in_nmin(base, c));
                CHECK(in_ord(base, lifted) == in_ord(base, c));
            });
        }
    }
}

TEST_CASE("restriction of an enumerated system matches the projected box") {
    std::set<std::size_t> s{0, 2};
    Box box3{{5, 5, 5}};
    Box box2{{5, 5}};
    auto members3 = enumerate_system(kTernary, MoveSystem::nmin(), box3);
    auto members2 = enumerate_system(kTernary, MoveSystem::nmin(), box2);
    std::set<Position> projected = restrict_set(
        std::set<Position>(members3.begin(), members3.end()), s, 3);
    CHECK(projected == std::set<Position>(members2.begin(), members2.end()));
}

TEST_CASE("orbit and symmetry helpers") {
    CHECK(orbit({1, 2}) == std::set<Position>{{1, 2}, {2, 1}});
    CHECK(orbit({1, 1}) == std::set<Position>{{1, 1}});
    CHECK(is_symmetric({{1, 2}, {2, 1}}));
    CHECK_FALSE(is_symmetric({{1, 2}}));
}

TEST_CASE("canonical memberships are orbit-invariant") {
    for (const MixedBase& base : {kTernary, kMixed23}) {
        for_each_position(Box{{5, 5, 5}}, [&](const Position& c) {
            bool o = in_ord(base, c), n = in_nmin(base, c), x = in_max(base, c);
            for (const Position& p : orbit(c)) {
                CHECK(in_ord(base, p) == o);
                CHECK(in_nmin(base, p) == n);
                CHECK(in_max(base, p) == x);
            }
        });
    }
}

TEST_CASE("theorem criteria") {
    CHECK(has_minimum_system(MixedBase({4}, 2), 2));
    CHECK_FALSE(has_minimum_system(kTernary, 2));
    CHECK(has_minimum_system(kTernary, 1));

    CHECK(has_minimum_symmetric_system(kMixed23, 2));
    CHECK(has_minimum_symmetric_system(MixedBase({7}, 2), 2));
    CHECK_FALSE(has_minimum_symmetric_system(MixedBase({2, 4}, 2), 2));
}

TEST_CASE("is_member applies plus/minus and excludes zero") {
    MoveSystem s = MoveSystem::nmin().with_plus({{0, 0}, {4, 4}}).with_minus({{1, 0}});
    CHECK_FALSE(is_member(kTernary, s, {0, 0}));  // zero never a member
    CHECK(is_member(kTernary, s, {4, 4}));
    CHECK_FALSE(is_member(kTernary, s, {1, 0}));
    CHECK(is_member(kTernary, s, {0, 1}));
}

TEST_CASE("enumerate_system golden sets") {
    auto ord1 = enumerate_system(MixedBase({2}, 2), MoveSystem::ord(), Box{{4}});
    CHECK(ord1 == std::vector<Position>{{1}, {2}, {3}});

    auto nmin = enumerate_system(kMixed23, MoveSystem::nmin(), Box{{4, 4}});
    std::vector<Position> expect{{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 2}, {2, 0},
                                 {2, 1}, {2, 2}, {2, 3}, {3, 0}, {3, 2}};
    CHECK(nmin == expect);

    auto max12 = enumerate_system(MixedBase({3}, 3), MoveSystem::max(), Box{{12, 12}});
    CHECK(std::find(max12.begin(), max12.end(), Position{2, 10}) != max12.end());
}

TEST_CASE("find_move reproduces the worked three-heap example") {
    MixedBase base({4}, 4);
    CHECK(find_move(base, {105, 86, 356}, 292) == Position{43, 64, 64});
}

TEST_CASE("find_move basics") {
    MixedBase base22({2}, 2);
    CHECK(find_move(base22, {1, 2}, 0) == Position{0, 1});
    CHECK_THROWS_AS(find_move(kBinary, {1, 1}, 0), LosingPositionError);
    CHECK_THROWS_AS(find_move(kBinary, {1, 2}, 3), LosingPositionError);
    CHECK_THROWS_AS(find_move(kBinary, {1, 2}, 7), LosingPositionError);
}

TEST_CASE("find_move postconditions over exhaustive boxes") {
    for (const MixedBase& base : {kBinary, kTernary, kMixed23}) {
        for_each_position(Box{{8, 8, 8}}, [&](const Position& x) {
            Natural n = nim_sum(base, x);
            for (Natural h = 0; h < n; ++h) {
                Position c = find_move(base, x, h);
                auto y = sub(x, c);
                REQUIRE(y.has_value());
                CHECK(nim_sum(base, *y) == h);  // (A1)
                NjInfo nj = nj_info(base, c);
                REQUIRE_FALSE(nj.empty());  // (A2): member of the small system

                // Recompute the documented (N, j) choice and check it is valid.
                std::size_t top = 0;
                std::size_t levels = std::max(to_digits(base, n).size(),
                                              to_digits(base, h).size());
                for (std::size_t l = 0; l < levels; ++l)
                    if (digit_at(base, n, l) != digit_at(base, h, l)) top = l;
                std::size_t j = 0;
                for (std::size_t i = 1; i < x.size(); ++i)
                    if (low_part(base, x[i], top) > low_part(base, x[j], top)) j = i;
                CHECK(nj.contains(top, j));  // (A2)
                for (std::size_t i = 0; i < x.size(); ++i)
                    CHECK(low_part(base, x[i], top) >= c[i]);  // (A3)
                CHECK(digit_at(base, (*y)[j], top) < digit_at(base, x[j], top));  // (A4)
            }
        });
    }
}

TEST_CASE("nmin is contained in ord is contained in max") {
    for (const MixedBase& base : {kBinary, kTernary, kMixed23, MixedBase({4}, 2)}) {
        for_each_position(Box{{7, 7, 7}}, [&](const Position& c) {
            if (in_nmin(base, c)) CHECK(in_ord(base, c));
            if (in_ord(base, c)) CHECK(in_max(base, c));
        });
    }
}

TEST_CASE("any system sandwiched between nmin and max verifies clean") {
    std::mt19937_64 rng(23);
    for (const MixedBase& base : {kBinary, kTernary, kMixed23}) {
        Box box{{5, 5}};
        std::set<Position> between;
        for_each_position(box, [&](const Position& c) {
            if (in_max(base, c) && !in_nmin(base, c) && rng() % 2) between.insert(c);
        });
        MoveSystem mid = MoveSystem::nmin().with_plus(between);
        CHECK(verify_system(base, mid, 2, Box{{8, 8}}).ok());
    }
}
