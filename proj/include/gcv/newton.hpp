#ifndef GCV_NEWTON_HPP
#define GCV_NEWTON_HPP

#include <cstdint>
#include <vector>

#include "gcv/algnum.hpp"
#include "gcv/mpoly.hpp"
#include "gcv/polytope.hpp"

namespace gcv {

// Objective with equality constraints and their Newton-polytope tuple:
// index 0 holds conv(supp F u {0}), index i holds NP(g_i).
struct PolyTuple {
    MPoly objective;
    std::vector<MPoly> constraints;
    PolytopeTuple tuple;
};

PolyTuple make_poly_tuple(const MPoly& F, const std::vector<MPoly>& gs);

// unconstrained wrapper: tuple support {0} only
PolyTuple unconstrained_tuple(const MPoly& f);

// Critical values of the face-restricted system on the torus. The facing must
// be origin. Degenerate eliminations retry with fresh randomness and throw
// MonteCarloFailure when exhausted.
std::vector<AlgebraicNumber> face_discriminant(const PolyTuple& T, const Facing& G,
                                               std::uint64_t seed);

struct NewtonSuperset {
    std::vector<Facing> facings; // the important origin facings used
    std::vector<std::vector<AlgebraicNumber>> per_facing;
    std::vector<AlgebraicNumber> values; // union plus F(0), deduplicated sorted
};

NewtonSuperset bifurcation_superset_newton(const PolyTuple& T, std::uint64_t seed);

} // namespace gcv

#endif
