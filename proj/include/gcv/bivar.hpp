#ifndef GCV_BIVAR_HPP
#define GCV_BIVAR_HPP

#include <vector>

#include "gcv/mpoly.hpp"
#include "gcv/upoly.hpp"

namespace gcv {

// variables that actually occur in p
std::vector<int> used_vars(const MPoly& p);

// conversions for polynomials supported on a single variable
UPoly to_upoly(const MPoly& p, int var);
MPoly from_upoly(const UPoly& u, int nring, int var);

// view of a polynomial supported on {main, coeffv} as coefficients in Z[coeffv]
// indexed by the power of main
std::vector<UPoly> to_bivar(const MPoly& p, int main, int coeffv);
MPoly from_bivar(const std::vector<UPoly>& c, int nring, int main, int coeffv);

// gcd in (Z[coeffv])[main] via the primitive PRS; primitive result
std::vector<UPoly> bivar_gcd(std::vector<UPoly> a, std::vector<UPoly> b);

// product of distinct irreducible factors of a polynomial supported on at
// most two variables; integer content removed
MPoly squarefree_bivar(const MPoly& p, int main, int coeffv);

// square-free reduction dispatching on the number of used variables; for
// three or more variables only the integer content is removed
MPoly squarefree_reduce(const MPoly& p);

// coefficients (low to high in `main`) of the j-th subresultant of P and Q
// w.r.t. `main`; entries are polynomials in the remaining variables
std::vector<MPoly> subresultant_coeffs(const MPoly& P, const MPoly& Q, int main, long j);

// resultant of P and Q w.r.t. var `main` (entries in the remaining variables)
MPoly resultant_wrt(const MPoly& P, const MPoly& Q, int main);

} // namespace gcv

#endif
