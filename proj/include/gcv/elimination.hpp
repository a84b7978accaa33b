#ifndef GCV_ELIMINATION_HPP
#define GCV_ELIMINATION_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gcv/mpoly.hpp"

namespace gcv {

// the determinant vanished at every order of the symbolic perturbation:
// the system is genuinely degenerate and the caller must resample randomness
struct DegenerateElimination : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EliminationResult {
    MPoly eliminant;     // square-free reduced, supported on the kept variables
    long s_valuation = 0;    // perturbation order used
    long matrix_size = 0;    // nu_m of the numerator matrix
    long denom_size = 0;     // size of the denominator minor
    long shift_degree = 0;   // Macaulay degree m
};

// Eliminate `elim_vars` from the system (|elim_vars| = #polys - 1, square
// after homogenization). The last polynomial is left unperturbed; polynomial k
// carries the symbolic perturbation s * elim_vars[k]^{deg_k}. The returned
// polynomial vanishes on the projection of the common zero set.
EliminationResult resultant_gcp(const std::vector<MPoly>& polys,
                                const std::vector<int>& elim_vars);

// n generic power combinations of p >= n polynomials; every common zero of the
// input vanishes on the output, at the price of at most finitely many extra
// points. p == n returns the inputs unchanged.
std::vector<MPoly> make_square(const std::vector<MPoly>& polys, int target_n,
                               std::uint64_t seed);

// effective Nullstellensatz threshold 1 + n(13 d^n - 1)
Int nullstellensatz_degree(long n, long d);

struct ResultantSystemSize {
    Int m;         // Nullstellensatz shift degree
    Int nu_m;      // number of degree-m monomials in n variables
    Int row_bound; // upper bound on the number of shift rows
};
ResultantSystemSize resultant_system_size(long n, long d, long p);

} // namespace gcv

#endif
