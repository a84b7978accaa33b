#ifndef GCV_ACV_HPP
#define GCV_ACV_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcv/algnum.hpp"
#include "gcv/elimination.hpp"
#include "gcv/mpoly.hpp"

namespace gcv {

// the Monte Carlo retry budget was exhausted; never a silent wrong answer
struct MonteCarloFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Random gradient combinations g_k = sum_i a_i df/dx_i + sum_{i,j} b_ij x_i df/dx_j,
// coefficients drawn uniformly from {1, ..., 2 c n d^{n-1}}.
struct SuperPolarCombos {
    std::vector<std::vector<Int>> a;              // a[k][i]
    std::vector<std::vector<std::vector<Int>>> b; // b[k][i][j]
    std::vector<MPoly> g;                         // n-1 combinations
    Int sample_size;                              // |S|
    std::uint64_t seed = 0;
};

SuperPolarCombos super_polar_combos(const MPoly& f, long confidence, std::uint64_t seed);

// One per-variable elimination of Algorithm-style pipelines: hbar lives in
// (x_keep, z), h is its leading coefficient w.r.t. x_keep as a polynomial in z.
struct VariableBlock {
    int keep = 0;
    MPoly hbar;    // square-free reduced eliminant, ring = n+1 vars (z last)
    UPoly h;       // in z
    long s_valuation = 0;
};

VariableBlock eliminate_variable_block(const MPoly& f, const SuperPolarCombos& combos, int keep);

struct CriticalValueReport {
    UPoly h;                                   // product of the h_i
    std::vector<UPoly> h_factors;              // h_i per kept variable
    std::vector<long> h_factor_degrees;        // deg_z h_i
    std::vector<AlgebraicNumber> asymptotic;   // real roots of squarefree(h)
    long complex_candidates = 0;               // nonreal root count of squarefree(h)
    std::vector<AlgebraicNumber> k0;           // filled by callers that also run K0
    bool k0_verified = false;
    bool k0_positive_dimensional = false;
    std::string k0_route;
    std::uint64_t seed = 0;
    long retries_used = 0;
    bool failed = false;
    std::string failure;
};

// Asymptotic critical values: a finite superset of K_inf(f) as isolated real
// algebraic numbers (complex candidates are reported count-only).
CriticalValueReport asymptotic_critical_values(const MPoly& f, long confidence,
                                               std::uint64_t seed);

} // namespace gcv

#endif
