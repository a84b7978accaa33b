#ifndef GCV_CONSTRAINED_HPP
#define GCV_CONSTRAINED_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcv/algnum.hpp"
#include "gcv/integer.hpp"
#include "gcv/mpoly.hpp"

namespace gcv {

// determinant pair of one column choice of the bordered Jacobian [nabla F; Jac g]
struct MinorPair {
    std::vector<int> columns; // subset I of [n], |I| = r+1
    int omitted;              // column j in I omitted for the denominator minor
    MPoly numerator;          // det of the (r+1)x(r+1) submatrix on I
    MPoly denominator;        // det of the r x r submatrix without the first row and column j
};

std::vector<MinorPair> jacobian_minors(const MPoly& F, const std::vector<MPoly>& gs);

// The rational-map graph system for one choice vector: constraints, the value
// equation, one graph equation per map component, and the denominator
// saturation. Ring layout: x_1..x_n, t, y_{1,0..n}, ..., y_{s,0..n}, z.
struct SystemJ {
    std::vector<MPoly> polys;
    long cardinality = 0; // r + 1 + (n+1) C(n, r+1) + 1
    MPoly h;              // product of the generic denominator combinations
    std::vector<int> choice;
    int nring = 0, tvar = 0, zvar = 0;
    std::vector<int> yvars; // all auxiliary map-component variables
};

SystemJ build_system_J(const MPoly& F, const std::vector<MPoly>& gs,
                       const std::vector<int>& choice, std::uint64_t seed);

struct ConstrainedReport {
    std::vector<AlgebraicNumber> candidates; // contains the generalized critical values
    std::optional<AlgebraicNumber> selected; // numeric pick, Monte Carlo
    double numeric_estimate = 0;
    bool partial_choices = false; // random subset of choice vectors used
    bool bounds_only = false;     // scale cap exceeded
    long choices_tried = 0;
    long choices_degenerate = 0;
    std::uint64_t seed = 0;
    std::string note;
};

// Candidate generalized critical values of F on V(g_1..g_r) at toy scale
// (n <= 3, degrees <= 3); beyond the cap only a bounds-only report is made.
ConstrainedReport constrained_infimum_toy(const MPoly& F, std::vector<MPoly> gs,
                                          std::uint64_t seed);

} // namespace gcv

#endif
