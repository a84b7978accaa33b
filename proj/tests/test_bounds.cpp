#include "doctest.h"

#include "gcv/bounds.hpp"

using namespace gcv;

TEST_CASE("attained degree bound") {
    CHECK(attained_degree_bound(2, 2, 1, 0) == 4);
    CHECK(attained_degree_cap(2, 2) == 8);
    CHECK(attained_degree_bound(1, 3, 0, 0) == 2); // (d-1)^1
    CHECK(attained_degree_bound(3, 1, 2, 1) == 1); // 0^0 convention at i = n
    // the cap dominates for all n, d <= 10
    for (long n = 1; n <= 10; ++n)
        for (long d = 1; d <= 10; ++d)
            for (long rs : {0l, 1l, 5l, 20l})
                CHECK(attained_degree_bound(n, d, rs, 0) <= attained_degree_cap(n, d));
}

TEST_CASE("attained value magnitude bound") {
    auto b1 = attained_value_log_bound(1, 2, Int(1), 0, 0);
    CHECK(b1.Htilde == 1);
    CHECK(b1.exact);
    CHECK(b1.log2_lower == Rat(-22));
    auto b2 = attained_value_log_bound(2, 1, Int(1), 0, 0);
    CHECK(b2.Htilde == 2);
    CHECK(b2.log2_lower == Rat(-40));
    auto b3 = attained_value_log_bound(1, 2, Int(1000), 0, 0);
    CHECK(b3.Htilde == 1000);
    CHECK(!b3.exact);
    // rational upper approximation of log2(1000) keeps the bound valid:
    // -4*(4.5 + log2(1000) + 1) with log2(1000) in (9.96, 9.97)
    CHECK(b3.log2_lower < Rat(-61));
    CHECK(b3.log2_lower > Rat(-62));
}

TEST_CASE("log2_upper") {
    CHECK(log2_upper(Int(1)) == Rat(0));
    CHECK(log2_upper(Int(8)) == Rat(3));
    Rat l3 = log2_upper(Int(3));
    CHECK(l3 >= rat_from_string("1584962500721156/1000000000000000"));
    CHECK(l3 <= rat_from_string("15850/10000"));
}

TEST_CASE("unconstrained and newton bound reports") {
    auto u = unconstrained_bounds(2, 3, 4);
    CHECK(u.degree_bound == 3);
    CHECK(u.eta == 28);
    CHECK(u.asymptotic);
    CHECK(unconstrained_bounds(1, 7, 3).degree_bound == 1);
    auto u2 = unconstrained_bounds(3, 2, 1);
    CHECK(u2.degree_bound == 4);
    CHECK(u2.eta == 21);

    auto nw = newton_bounds(2, 2, 3);
    CHECK(nw.eta == 40);
}

TEST_CASE("constrained bound report and dispatch") {
    auto c = constrained_bounds(2, 2, 2, 1, 1);
    CHECK(c.degree_bound == 256); // (2*1*2)^4
    CHECK(c.scenario == "constrained");
    auto disp = constrained_bounds(2, 3, 2, 4, 0);
    CHECK(disp.scenario == "unconstrained");
    CHECK(disp.eta == 28);
}

TEST_CASE("hyperplane success probability") {
    CHECK(hyperplane_success_probability(Int(4), Int(8)) == make_rat(Int(1), Int(2)));
    CHECK(hyperplane_success_probability(Int(0), Int(5)) == 1);
    CHECK(hyperplane_success_probability(Int(9), Int(5)) == 0);
    CHECK_THROWS(hyperplane_success_probability(Int(1), Int(0)));
}
