#ifndef GCV_K0_HPP
#define GCV_K0_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gcv/algnum.hpp"
#include "gcv/mpoly.hpp"

namespace gcv {

struct K0Result {
    std::vector<AlgebraicNumber> values;
    bool verified = false;             // no spurious values possible on this route
    bool positive_dimensional = false; // critical locus is not zero-dimensional
    std::string route;
};

// Classical critical values K0(f): real numbers attained by f on its (complex)
// critical locus. Routes, most exact first:
//   - n=1: univariate resultant, always exact
//   - empty-certificate: some coordinate eliminant of the gradient system is a
//     nonzero constant, so there are no critical points at all
//   - classical-resultant: the unperturbed Macaulay ratio works (perturbation
//     order zero), whose roots are exactly the critical values
//   - triangular (n=2): shear to generic coordinates, subresultant ladder
//   - gcp (n>=3 fallback): superset only, flagged unverified
K0Result critical_values_k0(const MPoly& f, std::uint64_t seed = 1);

} // namespace gcv

#endif
