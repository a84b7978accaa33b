#ifndef GCV_BOUNDS_HPP
#define GCV_BOUNDS_HPP

#include <string>
#include <vector>

#include "gcv/integer.hpp"

namespace gcv {

// max over 0 <= i <= min(r+s, n) of C(n,i) d^i (d-1)^{n-i}, with 0^0 = 1
Int attained_degree_bound(long n, long d, long r, long s);

// the cap 2^{n-1} d^n dominating the attained degree bound
Int attained_degree_cap(long n, long d);

struct AttainedValueBound {
    Rat log2_lower;         // rational lower bound on log2 |f*|
    bool exact = false;     // true when the logarithms involved are rational
    std::string expression; // closed form of the exponent
    Int Htilde;
};

// |f*| >= (2^{5-n/2} Htilde d^n)^{-n 2^n d^n}; returns log2 of the bound
AttainedValueBound attained_value_log_bound(long n, long d, const Int& H, long r, long s);

struct BoundReport {
    std::string scenario; // attained | unconstrained | newton | constrained
    Int degree_bound;
    Rat eta;                 // log2-magnitude bound (|log2 f*| <= eta)
    std::string eta_formula; // closed form used
    bool asymptotic = false; // hidden constants set to one, polylog dropped
};

BoundReport unconstrained_bounds(long n, long d, long tau);

// r = 0 dispatches to the unconstrained scenario; scenario "newton" uses the
// Newton non-degenerate magnitude bound
BoundReport constrained_bounds(long n, long d, long d1, long tau, long r);
BoundReport newton_bounds(long n, long d, long tau);

// max(0, 1 - D/|S|)
Rat hyperplane_success_probability(const Int& D, const Int& S_size);

// smallest k/2^prec with log2(x) <= k/2^prec, x >= 1
Rat log2_upper(const Int& x, unsigned prec_bits = 16);

} // namespace gcv

#endif
