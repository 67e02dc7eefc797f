#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hexlat/torus_geom.hpp"

#include <random>

using namespace hexlat;

namespace {
Vec2 V(std::int64_t xn, std::int64_t xd, std::int64_t yn, std::int64_t yd) {
    return {Rat(xn, xd), Rat(yn, yd)};
}
} // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rat(4, 6) == Rat(2, 3));
    CHECK(Rat(-1, -2) == Rat(1, 2));
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(1, 3) * Rat(3, 5)) == Rat(1, 5));
    CHECK(Rat(7, 3).floor() == 2);
    CHECK(Rat(-7, 3).floor() == -3);
    CHECK(Rat(-7, 3).ceil() == -2);
    CHECK(Rat(-1, 3).mod1() == Rat(2, 3));
    CHECK(Rat::parse("-3/9") == Rat(-1, 3));
    CHECK(Rat::parse("5") == Rat(5));
    CHECK(Rat(22, 7).str() == "22/7");
    CHECK_THROWS_AS(Rat(1, 0), OverflowError);
}

TEST_CASE("reduce is idempotent and matches the examples") {
    CHECK(reduce(V(4, 3, -1, 3)) == V(1, 3, 2, 3));
    CHECK(reduce(Vec2{Rat(0), Rat(0)}) == Vec2{Rat(0), Rat(0)});
    CHECK(reduce(V(2, 3, 1, 1)) == V(2, 3, 0, 1));
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::int64_t> num(-50, 50);
    std::uniform_int_distribution<std::int64_t> den(1, 23);
    for (int i = 0; i < 200; ++i) {
        Vec2 p{Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
        CHECK(reduce(reduce(p)) == reduce(p));
    }
}

TEST_CASE("a (0,1) line meets a (1,0) line once") {
    auto hits = segment_intersections(Vec2{Rat(0), Rat(0)}, Vec2{Rat(0), Rat(1)},
                                      V(1, 2, 1, 4), V(3, 2, 1, 4));
    int transverse = 0;
    for (auto& h : hits)
        if (h.interior_a && h.interior_b) ++transverse;
    CHECK(transverse == 1);
    CHECK(reduce(hits.front().point) == V(0, 1, 1, 4));
}

TEST_CASE("line classes meet |pair| times") {
    // class (1,2) against class (-2,-1): |pair| = 3
    Vec2 a0 = V(1, 17, 1, 13), a1 = a0 + Vec2{Rat(1), Rat(2)};
    Vec2 b0 = V(5, 7, 2, 7), b1 = b0 + Vec2{Rat(-2), Rat(-1)};
    auto hits = segment_intersections(a0, a1, b0, b1);
    int transverse = 0;
    for (auto& h : hits)
        if (h.interior_a && h.interior_b) { ++transverse; CHECK(h.sign == 1); }
    CHECK(transverse == 3);
}

TEST_CASE("parallel lines at different heights are disjoint") {
    auto hits = segment_intersections(Vec2{Rat(0), Rat(0)}, Vec2{Rat(1), Rat(0)},
                                      V(0, 1, 1, 3), V(1, 1, 1, 3));
    CHECK(hits.empty());
}

TEST_CASE("overlapping parallel segments raise") {
    CHECK_THROWS_AS(segment_intersections(Vec2{Rat(0), Rat(0)}, Vec2{Rat(1), Rat(0)},
                                          V(5, 4, 0, 1), V(9, 4, 0, 1)),
                    OverlapError);
}

TEST_CASE("cycle classes") {
    Polyline loop{V(1, 8, 1, 8), V(5, 8, 3, 8), V(9, 8, 1, 8)};
    CHECK(cycle_class(loop) == HomClass{1, 0, BasisTag::AB});

    Polyline vd{V(0, 1, 0, 1), V(1, 2, 1, 2), V(1, 1, 3, 1)};
    CHECK(cycle_class(vd) == HomClass{1, 3, BasisTag::AB});

    CHECK_THROWS_AS(cycle_class(Polyline{V(0, 1, 0, 1), V(1, 2, 1, 3)}), NotClosedError);

    // concatenation adds classes; reversal negates
    Polyline rev(loop.rbegin(), loop.rend());
    CHECK(cycle_class(rev) == HomClass{-1, 0, BasisTag::AB});
}

TEST_CASE("minimal-position count equals the pairing") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::int64_t> comp(-6, 6);
    std::uniform_int_distribution<std::int64_t> offn(0, 12);
    int done = 0;
    while (done < 60) {
        HomClass u{comp(rng), comp(rng), BasisTag::AB};
        HomClass v{comp(rng), comp(rng), BasisTag::AB};
        if (component_count(u) != 1 || component_count(v) != 1) continue;
        std::int64_t p = pair(u, v);
        if (p == 0) continue;
        ++done;
        Vec2 a0{Rat(offn(rng), 13), Rat(offn(rng), 17)};
        Vec2 b0{Rat(offn(rng), 19), Rat(offn(rng), 23)};
        Vec2 a1 = a0 + Vec2{Rat(u.p), Rat(u.q)};
        Vec2 b1 = b0 + Vec2{Rat(v.p), Rat(v.q)};
        // count distinct torus points: hits at the loop seams are still
        // honest crossings of the closed geodesics
        std::vector<Vec2> pts;
        for (auto& h : segment_intersections(a0, a1, b0, b1)) {
            if (h.sign == 0) continue;
            Vec2 r = reduce(h.point);
            bool fresh = true;
            for (auto& q : pts)
                if (q == r) fresh = false;
            if (fresh) pts.push_back(r);
        }
        std::int64_t want = p < 0 ? -p : p;
        CHECK((std::int64_t)pts.size() == want);
    }
}

TEST_CASE("angular order is a strict cyclic order") {
    std::vector<Vec2> dirs = {V(1, 1, 0, 1),  V(1, 1, 1, 2), V(0, 1, 1, 1), V(-1, 2, 1, 1),
                              V(-1, 1, 0, 1), V(-1, 1, -1, 1), V(0, 1, -1, 1), V(1, 1, -1, 3)};
    for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = 0; j < dirs.size(); ++j) {
            if (i == j) continue;
            CHECK(angle_less(dirs[i], dirs[j]) == (i < j));
        }
}
