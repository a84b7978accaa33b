#ifndef GCV_ALGNUM_HPP
#define GCV_ALGNUM_HPP

#include <vector>

#include "gcv/upoly.hpp"

namespace gcv {

// Real algebraic number in isolating-interval representation: a square-free
// integer polynomial together with a rational interval containing exactly one
// of its real roots. Rational roots collapse to lo == hi.
struct AlgebraicNumber {
    UPoly defining;
    Rat lo, hi;

    bool is_exact() const { return lo == hi; }
    Rat approx() const { return (lo + hi) / 2; }

    static AlgebraicNumber from_rational(const Rat& r) {
        AlgebraicNumber a;
        a.defining = UPoly({-r.get_num(), r.get_den()});
        a.lo = a.hi = r;
        return a;
    }
};

// one disjoint isolating interval per distinct real root, sorted increasingly
std::vector<AlgebraicNumber> isolate_real_roots(const UPoly& u);

// interval width <= 2^-bits, same root
AlgebraicNumber refine(AlgebraicNumber a, unsigned bits);

// shrink the interval by one bisection step (or detect an exact rational root)
void refine_step(AlgebraicNumber& a);

// exact sign of u at the algebraic number
int sign_at(const AlgebraicNumber& a, const UPoly& u);

// total order; 0 means the two represent the same real number
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

inline bool alg_equal(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return compare(a, b) == 0;
}

// compare against an exact rational
int compare_rat(const AlgebraicNumber& a, const Rat& r);

// m+1 rationals strictly interlacing the m roots; empty input yields {0}
std::vector<Rat> interlacing_rationals(std::vector<AlgebraicNumber> roots);

// minimal-denominator rational in the open interval (a, b), a < b
Rat simplest_rational_between(const Rat& a, const Rat& b);

// sorted union with exact algebraic-number deduplication
std::vector<AlgebraicNumber> merge_root_sets(std::vector<AlgebraicNumber> a,
                                             const std::vector<AlgebraicNumber>& b);

} // namespace gcv

#endif
