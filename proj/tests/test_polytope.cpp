#include "doctest.h"

#include <algorithm>

#include "gcv/parse.hpp"
#include "gcv/polytope.hpp"
#include "gcv/rng.hpp"

using namespace gcv;

namespace {

Point pt(std::initializer_list<long> xs) {
    Point p;
    for (long x : xs) p.push_back(Int(x));
    return p;
}

// the worked 3-variable triple: F = 1+x+x^2, g1 = -2+x+2y-y^2, g2 = 1+2x-3y+4z
PolytopeTuple example_tuple() {
    std::vector<std::string> vars{"x", "y", "z"};
    PolytopeTuple T;
    T.set(0, newton_polytope(parse_poly("1 + x + x^2", vars), true));
    T.set(1, newton_polytope(parse_poly("0-2 + x + 2*y - y^2", vars)));
    T.set(2, newton_polytope(parse_poly("1 + 2*x - 3*y + 4*z", vars)));
    return T;
}

MPoly random_poly(Rng& rng, int nvars, int deg) {
    MPoly p(nvars);
    for (int t = 0; t < 6; ++t) {
        Expt e(nvars, 0);
        int budget = deg;
        for (int i = 0; i < nvars; ++i) {
            int d = static_cast<int>(rng.below(static_cast<std::uint64_t>(budget + 1)));
            e[i] = static_cast<std::uint32_t>(d);
            budget -= d;
        }
        p.add_term(e, Int(rng.range(-5, 5)));
    }
    if (p.is_zero()) p.add_term(Expt(nvars, 0), Int(1));
    return p;
}

} // namespace

TEST_CASE("newton polytope vertices") {
    std::vector<std::string> v3{"x", "y", "z"};
    auto np = newton_polytope(parse_poly("1 + x + x^2", v3));
    CHECK(np.vertices() == std::vector<Point>{pt({0, 0, 0}), pt({2, 0, 0})});

    auto np2 = newton_polytope(parse_poly("0 - 2 + x + 2*y - y^2", v3));
    CHECK(np2.vertices() == std::vector<Point>{pt({0, 0, 0}), pt({0, 2, 0}), pt({1, 0, 0})});

    auto np3 = newton_polytope(parse_poly("5", {"x"}));
    CHECK(np3.vertices() == std::vector<Point>{pt({0})});

    CHECK_THROWS(newton_polytope(parse_poly("0", {"x"})));
}

TEST_CASE("minkowski sums") {
    auto seg1 = LatticePolytope::from_points(2, {pt({0, 0}), pt({1, 0})});
    auto seg2 = LatticePolytope::from_points(2, {pt({0, 0}), pt({0, 1})});
    auto sq = minkowski_sum(seg1, seg2);
    CHECK(sq.vertex_count() == 4);
    CHECK(sq.affine_dim() == 2);
    // identity element
    auto orig = LatticePolytope::point(2);
    CHECK(minkowski_sum(sq, orig) == sq);
    // commutative
    CHECK(minkowski_sum(seg1, seg2) == minkowski_sum(seg2, seg1));
    // dimension mismatch
    CHECK_THROWS(minkowski_sum(seg1, LatticePolytope::point(3)));
    // the worked triple spans dimension 3
    CHECK(example_tuple().minkowski_total().affine_dim() == 3);
}

TEST_CASE("newton polytope is minkowski-additive under products (property)") {
    Rng rng(31);
    for (int it = 0; it < 40; ++it) {
        MPoly p = random_poly(rng, 3, 3), q = random_poly(rng, 3, 3);
        auto lhs = newton_polytope(p * q);
        auto rhs = minkowski_sum(newton_polytope(p), newton_polytope(q));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("facings of a segment are its two vertices") {
    PolytopeTuple T;
    T.set(0, LatticePolytope::from_points(1, {pt({0}), pt({2})}));
    auto fs = tuple_facings(T);
    REQUIRE(fs.size() == 2);
    for (auto& f : fs) {
        CHECK(f.indices == std::vector<int>{0});
        CHECK(f.faces[0].vertex_count() == 1);
        CHECK(facing_dimension(f) == -1);
    }
}

TEST_CASE("facings of the unit square: 4 vertices + 4 edges") {
    PolytopeTuple T;
    T.set(0, LatticePolytope::from_points(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}));
    auto fs = tuple_facings(T);
    int verts = 0, edges = 0;
    for (auto& f : fs) {
        if (f.faces[0].vertex_count() == 1) ++verts;
        if (f.faces[0].vertex_count() == 2) ++edges;
    }
    CHECK(verts == 4);
    CHECK(edges == 4);
    CHECK(fs.size() == 8);
}

TEST_CASE("worked triple: bottom facing restricts the third polytope") {
    PolytopeTuple T = example_tuple();
    auto fs = tuple_facings(T);
    auto bottom3 = LatticePolytope::from_points(3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0})});
    bool found = false;
    for (auto& f : fs) {
        if (f.indices != std::vector<int>{0, 1, 2}) continue;
        if (f.faces[0] == T.at(0) && f.faces[1] == T.at(1) && f.faces[2] == bottom3) {
            found = true;
            CHECK(f.important);
            CHECK(f.origin);
        }
    }
    CHECK(found);
    // every facing's face-sum equals the face of the total sum exposed by the witness
    auto total = T.minkowski_total();
    for (auto& f : fs) {
        if (f.indices.size() != 3) continue;
        LatticePolytope acc = f.faces[0];
        for (std::size_t i = 1; i < f.faces.size(); ++i) acc = minkowski_sum(acc, f.faces[i]);
        CHECK(acc == total.face(f.normal));
    }
}

TEST_CASE("facing dimensions") {
    PolytopeTuple seg;
    seg.set(0, LatticePolytope::from_points(1, {pt({0}), pt({2})}));
    Facing whole = full_facing(seg);
    CHECK(facing_dimension(whole) == 0); // 1 - 1

    PolytopeTuple T = example_tuple();
    CHECK(facing_dimension(full_facing(T)) == 0); // 3 - 3
}

TEST_CASE("important origin facings of a segment with origin") {
    PolytopeTuple T;
    T.set(0, LatticePolytope::from_points(1, {pt({0}), pt({1})}));
    auto io = important_origin_facings(T);
    REQUIRE(io.size() == 1);
    CHECK(io[0].faces[0].vertices() == std::vector<Point>{pt({0})});
}

TEST_CASE("important origin facings of the broughton triangle") {
    std::vector<std::string> v2{"x", "y"};
    PolytopeTuple T;
    T.set(0, newton_polytope(parse_poly("x + x^2*y", v2), true));
    CHECK(T.at(0).vertices() ==
          std::vector<Point>{pt({0, 0}), pt({1, 0}), pt({2, 1})});
    auto io = important_origin_facings(T);
    // vertex {0} and the two edges incident to it
    REQUIRE(io.size() == 3);
    int vcount = 0, ecount = 0;
    for (auto& f : io) {
        CHECK(f.origin);
        CHECK(f.important);
        if (f.faces[0].vertex_count() == 1) ++vcount;
        if (f.faces[0].vertex_count() == 2) ++ecount;
    }
    CHECK(vcount == 1);
    CHECK(ecount == 2);
    // non-origin tuple rejected
    PolytopeTuple bad;
    bad.set(1, LatticePolytope::point(2));
    CHECK_THROWS(important_origin_facings(bad));
}

TEST_CASE("important origin facings subset of all facings, importance by brute force") {
    PolytopeTuple T = example_tuple();
    auto all = tuple_facings(T);
    auto io = important_origin_facings(T);
    CHECK(io.size() <= all.size());
    for (auto& f : io) {
        bool present = false;
        for (auto& g : all)
            if (g.indices == f.indices && g.faces.size() == f.faces.size()) {
                bool same = true;
                for (std::size_t k = 0; k < f.faces.size(); ++k)
                    if (!(g.faces[k] == f.faces[k])) same = false;
                if (same) present = true;
            }
        CHECK(present);
    }
}

TEST_CASE("restriction of polynomials to faces") {
    std::vector<std::string> v3{"x", "y", "z"};
    MPoly g2 = parse_poly("1 + 2*x - 3*y + 4*z", v3);
    auto zface = LatticePolytope::from_points(3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0})});
    CHECK(restrict_to_face(g2, zface) == parse_poly("1 + 2*x - 3*y", v3));

    MPoly p = parse_poly("x + x^2*y", {"x", "y"});
    CHECK(restrict_to_face(p, newton_polytope(p)) == p);
    CHECK(restrict_to_face(p, LatticePolytope::point(2)).is_zero());
    // idempotent and linear
    MPoly q = parse_poly("7*x - 2*x^2*y", {"x", "y"});
    auto edge = LatticePolytope::from_points(2, {pt({0, 0}), pt({1, 0})});
    CHECK(restrict_to_face(restrict_to_face(q, edge), edge) == restrict_to_face(q, edge));
    CHECK(restrict_to_face(p + q, edge) == restrict_to_face(p, edge) + restrict_to_face(q, edge));
}
