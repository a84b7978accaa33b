#include "doctest.h"

#include "gcv/acv.hpp"
#include "gcv/k0.hpp"
#include "gcv/parse.hpp"

using namespace gcv;

namespace {

const std::vector<std::string> XY{"x", "y"};

// Rabier path oracle: along the given rational path, |x| * |grad f(x)| must
// decay toward zero while f approaches the claimed value
void check_rabier_path(const MPoly& f, const std::vector<std::vector<Rat>>& path_points,
                       const Rat& limit_value) {
    const int n = f.nvars();
    std::vector<MPoly> grad;
    for (int i = 0; i < n; ++i) grad.push_back(f.derivative(i));
    Rat prev_product;
    bool first = true;
    for (auto& p : path_points) {
        Rat norm_sq = 0;
        for (auto& c : p) norm_sq += c * c;
        Rat grad_sq = 0;
        for (auto& g : grad) {
            Rat v = g.eval(std::span<const Rat>(p));
            grad_sq += v * v;
        }
        Rat prod = norm_sq * grad_sq;
        if (!first) CHECK(prod < prev_product);
        prev_product = prod;
        first = false;
    }
    // final point: the product is small and f is near the limit
    CHECK(prev_product < make_rat(Int(1), Int(10000)));
    Rat fv = f.eval(std::span<const Rat>(path_points.back()));
    Rat err = fv - limit_value;
    if (err < 0) err = -err;
    CHECK(err < make_rat(Int(1), Int(1000)));
}

bool contains_rational(const std::vector<AlgebraicNumber>& xs, const Rat& r) {
    for (auto& x : xs)
        if (compare_rat(x, r) == 0) return true;
    return false;
}

} // namespace

TEST_CASE("super polar combos shapes and reproducibility") {
    MPoly f1 = parse_poly("x^3 - x", {"x"});
    auto c1 = super_polar_combos(f1, 100, 7);
    CHECK(c1.g.empty()); // n = 1

    MPoly f = parse_poly("x + x^2*y", XY); // n=2, d=3
    auto c = super_polar_combos(f, 100, 7);
    CHECK(c.sample_size == 1200); // 2*100*2*3
    REQUIRE(c.g.size() == 1);
    for (auto& ai : c.a[0]) {
        CHECK(ai >= 1);
        CHECK(ai <= c.sample_size);
        CHECK(bit_size(ai) <= 11);
    }
    // symbolic expansion oracle: rebuild g from the reported coefficients
    MPoly fx = f.derivative(0), fy = f.derivative(1);
    MPoly expect = fx * c.a[0][0] + fy * c.a[0][1];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            MPoly part = MPoly::variable(2, i) * (i == 0 ? fx : fx);
            (void)part;
            expect += MPoly::variable(2, i) * (j == 0 ? fx : fy) * c.b[0][i][j];
        }
    CHECK(c.g[0] == expect);
    // identical seed, identical combos
    auto c2 = super_polar_combos(f, 100, 7);
    CHECK(c2.g[0] == c.g[0]);
    auto c3 = super_polar_combos(f, 100, 8);
    CHECK(!(c3.g[0] == c.g[0]));
}

TEST_CASE("variable block for univariate input") {
    MPoly f = parse_poly("x^3", {"x"});
    auto combos = super_polar_combos(f, 100, 1);
    auto blk = eliminate_variable_block(f, combos, 0);
    // hbar = x^3 - z, leading coefficient w.r.t. x is 1
    CHECK(blk.hbar.degree_in(0) == 3);
    CHECK(blk.h == UPoly::constant(1));
}

TEST_CASE("acv: univariate polynomials have no asymptotic critical values") {
    MPoly f = parse_poly("x^3", {"x"});
    auto rep = asymptotic_critical_values(f, 100, 3);
    CHECK(rep.asymptotic.empty());
    CHECK(rep.h.degree() <= 0);
}

TEST_CASE("acv: broughton example has 0 among its values") {
    MPoly f = parse_poly("x + x^2*y", XY);
    // Rabier path oracle: x_l = (-1/(2l) + 1/l^3, l)
    std::vector<std::vector<Rat>> path;
    for (long l = 4; l <= 4096; l *= 4) {
        Rat L(l);
        path.push_back({-1 / (2 * L) + 1 / (L * L * L), L});
    }
    check_rabier_path(f, path, Rat(0));

    auto rep = asymptotic_critical_values(f, 100, 7);
    CHECK(!rep.failed);
    CHECK(contains_rational(rep.asymptotic, Rat(0)));
    // the degree claim: deg_z h_i <= d^{n-1} = 3
    for (long d : rep.h_factor_degrees) CHECK(d <= 3);
}

TEST_CASE("acv: proper map x^2+y^2 has empty asymptotic set") {
    MPoly f = parse_poly("x^2 + y^2", XY);
    auto rep = asymptotic_critical_values(f, 100, 5);
    CHECK(rep.asymptotic.empty());
    for (long d : rep.h_factor_degrees) CHECK(d <= 2);
}

TEST_CASE("acv: (xy-1)^2 + x^2 has 0 among its values") {
    MPoly f = parse_poly("(x*y - 1)^2 + x^2", XY);
    // path x = 1/t, y = t - 1/t: then xy - 1 = -1/t^2 cancels the gradient
    // blow-up and |x| |grad f| ~ 3/t^2 -> 0 while f -> 0
    std::vector<std::vector<Rat>> path;
    for (long t = 4; t <= 4096; t *= 4) {
        Rat T(t);
        path.push_back({1 / T, T - 1 / T});
    }
    check_rabier_path(f, path, Rat(0));

    auto rep = asymptotic_critical_values(f, 100, 11);
    CHECK(contains_rational(rep.asymptotic, Rat(0)));
    for (long d : rep.h_factor_degrees) CHECK(d <= 4); // d^{n-1} = 4
}

TEST_CASE("acv determinism and monte carlo repetition") {
    MPoly f = parse_poly("x + x^2*y", XY);
    auto r1 = asymptotic_critical_values(f, 100, 99);
    auto r2 = asymptotic_critical_values(f, 100, 99);
    CHECK(r1.h == r2.h);
    REQUIRE(r1.h_factors.size() == r2.h_factors.size());
    for (std::size_t i = 0; i < r1.h_factors.size(); ++i) CHECK(r1.h_factors[i] == r2.h_factors[i]);
    // intersecting runs across seeds never loses the oracle-verified value
    for (std::uint64_t s : {1ull, 2ull, 3ull}) {
        auto r = asymptotic_critical_values(f, 100, s);
        CHECK(contains_rational(r.asymptotic, Rat(0)));
    }
}

TEST_CASE("k0: unique critical point of x^2+y^2") {
    auto k = critical_values_k0(parse_poly("x^2 + y^2", XY));
    REQUIRE(k.values.size() == 1);
    CHECK(compare_rat(k.values[0], Rat(0)) == 0);
    CHECK(k.verified);
}

TEST_CASE("k0: broughton has no critical points") {
    auto k = critical_values_k0(parse_poly("x + x^2*y", XY));
    CHECK(k.values.empty());
    CHECK(k.verified);
}

TEST_CASE("k0: univariate x^3-3x") {
    auto k = critical_values_k0(parse_poly("x^3 - 3*x", {"x"}));
    REQUIRE(k.values.size() == 2);
    CHECK(compare_rat(k.values[0], Rat(-2)) == 0);
    CHECK(compare_rat(k.values[1], Rat(2)) == 0);
    CHECK(k.verified);
}

TEST_CASE("k0: (xy-1)^2 + x^2 has exactly the critical value 1") {
    auto k = critical_values_k0(parse_poly("(x*y - 1)^2 + x^2", XY));
    CHECK(k.verified);
    REQUIRE(k.values.size() == 1);
    CHECK(compare_rat(k.values[0], Rat(1)) == 0);
}

TEST_CASE("k0: separable quartic with two critical values") {
    // f = x^4 - 2x^2 + y^2: critical points x in {0, 1, -1}, y = 0
    auto k = critical_values_k0(parse_poly("x^4 - 2*x^2 + y^2", XY));
    CHECK(k.verified);
    CHECK(contains_rational(k.values, Rat(0)));
    CHECK(contains_rational(k.values, Rat(-1)));
    CHECK(k.values.size() == 2);
}
