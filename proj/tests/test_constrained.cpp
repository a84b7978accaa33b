#include "doctest.h"

#include "gcv/constrained.hpp"
#include "gcv/parse.hpp"

using namespace gcv;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

bool contains_rational(const std::vector<AlgebraicNumber>& xs, const Rat& r) {
    for (auto& x : xs)
        if (compare_rat(x, r) == 0) return true;
    return false;
}
} // namespace

TEST_CASE("jacobian minor pairs for the line constraint") {
    MPoly F = parse_poly("x^2 + y^2", XY);
    auto mps = jacobian_minors(F, {parse_poly("x + y - 1", XY)});
    REQUIRE(mps.size() == 2); // one column subset, two omitted columns
    CHECK(mps[0].numerator == parse_poly("2*x - 2*y", XY));
    CHECK(mps[0].denominator == parse_poly("1", XY));
    CHECK(mps[1].denominator == parse_poly("1", XY));
}

TEST_CASE("coordinate constraints give unit denominators") {
    MPoly F = parse_poly("x*y*z + x^2", XYZ);
    auto mps = jacobian_minors(F, {parse_poly("y", XYZ), parse_poly("z", XYZ)});
    for (auto& mp : mps) {
        CHECK(mp.denominator.is_constant());
        Int v = mp.denominator.constant_value();
        CHECK((v == 0 || v == 1 || v == -1));
    }
}

TEST_CASE("parallel gradients give an identically zero minor, not an error") {
    MPoly F = parse_poly("x + y", XY);
    auto mps = jacobian_minors(F, {parse_poly("2*x + 2*y - 1", XY)});
    REQUIRE(!mps.empty());
    CHECK(mps[0].numerator.is_zero());
}

TEST_CASE("rejects r >= n") {
    MPoly F = parse_poly("x + y", XY);
    CHECK_THROWS(jacobian_minors(F, {parse_poly("x", XY), parse_poly("y", XY)}));
}

TEST_CASE("system J cardinalities") {
    // n=2, r=1 -> 6
    auto J1 = build_system_J(parse_poly("x^2 + y^2", XY), {parse_poly("x + y - 1", XY)}, {0}, 1);
    CHECK(J1.cardinality == 6);
    CHECK(J1.polys.size() == 6);
    // n=3, r=1 -> 15
    auto J2 = build_system_J(parse_poly("x^2 + y^2 + z^2", XYZ),
                             {parse_poly("x + y + z - 1", XYZ)}, {0, 0, 0}, 1);
    CHECK(J2.cardinality == 15);
    // n=3, r=2 -> 8
    auto J3 = build_system_J(parse_poly("x^2 + y^2 + z^2", XYZ),
                             {parse_poly("x + y - 1", XYZ), parse_poly("z - x", XYZ)}, {0}, 1);
    CHECK(J3.cardinality == 8);
}

TEST_CASE("cardinality formula across small shapes") {
    for (long n = 2; n <= 6; ++n)
        for (long r = 1; r < n; ++r) {
            Int s = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(r + 1));
            Int expect = Int(r) + 1 + Int(n + 1) * s + 1;
            // the builder asserts the count internally; replicate the formula
            CHECK(expect == Int(r) + 1 + Int(n + 1) * s + 1);
        }
    // spec-pinned counts
    CHECK(Int(1) + 1 + 3 * binomial(2, 2) + 1 == 6);
    CHECK(Int(1) + 1 + 4 * binomial(3, 2) + 1 == 15);
    CHECK(Int(2) + 1 + 4 * binomial(3, 3) + 1 == 8);
}

TEST_CASE("toy: x^2+y^2 on the line x+y=1") {
    auto rep = constrained_infimum_toy(parse_poly("x^2 + y^2", XY),
                                       {parse_poly("x + y - 1", XY)}, 5);
    CHECK(!rep.bounds_only);
    CHECK(contains_rational(rep.candidates, make_rat(Int(1), Int(2))));
    REQUIRE(rep.selected.has_value());
    CHECK(compare_rat(*rep.selected, make_rat(Int(1), Int(2))) == 0);
}

TEST_CASE("toy: x on the unit circle") {
    auto rep = constrained_infimum_toy(parse_poly("x", XY),
                                       {parse_poly("x^2 + y^2 - 1", XY)}, 5);
    CHECK(contains_rational(rep.candidates, Rat(1)));
    CHECK(contains_rational(rep.candidates, Rat(-1)));
    REQUIRE(rep.selected.has_value());
    CHECK(compare_rat(*rep.selected, Rat(-1)) == 0);
}

TEST_CASE("toy: x on the hyperbola xy=1 (unattained infimum 0)") {
    auto rep = constrained_infimum_toy(parse_poly("x", XY), {parse_poly("x*y - 1", XY)}, 5);
    CHECK(contains_rational(rep.candidates, Rat(0)));
    REQUIRE(rep.selected.has_value());
    CHECK(compare_rat(*rep.selected, Rat(0)) == 0);
}

TEST_CASE("scale cap yields a bounds-only report") {
    auto rep = constrained_infimum_toy(parse_poly("x^4 + y^4", XY),
                                       {parse_poly("x + y - 1", XY)}, 5);
    CHECK(rep.bounds_only);
    CHECK(rep.candidates.empty());
}
