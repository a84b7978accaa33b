#ifndef GCV_OPTIMIZE_HPP
#define GCV_OPTIMIZE_HPP

#include <optional>
#include <utility>

#include "gcv/acv.hpp"
#include "gcv/k0.hpp"

namespace gcv {

struct SearchBudget {
    int starts = 64;
    int rounds = 8;
    long box_growth = 4;
    int descent_iters = 160;
    unsigned precision_bits = 48;
};

// Verdict of the fiber test at level r. "nonempty" is certified by the exact
// rational pair low/high with f(low) <= r <= f(high) (intermediate value
// theorem on the connected domain R^n); "probably empty" only reports that the
// search budget found no point on the low side.
struct FiberWitness {
    bool nonempty = false;
    std::vector<Rat> low_point, high_point;
    Rat low_value, high_value;
};

FiberWitness fiber_nonempty_witness(const MPoly& f, const Rat& r, const SearchBudget& budget,
                                    std::uint64_t seed);

enum class InfStatus { finite, unbounded_below, constant };

struct InfimumResult {
    InfStatus status = InfStatus::finite;
    std::optional<AlgebraicNumber> value;
    bool attained = false;
    std::vector<std::pair<std::vector<Rat>, Rat>> witnesses; // points and values
    std::vector<AlgebraicNumber> candidates;                 // sorted real K0 u Kinf
    std::vector<Rat> interlacing;
    std::vector<bool> fiber_nonempty;
    CriticalValueReport acv;
    K0Result k0;
    std::uint64_t seed = 0;
};

InfimumResult infimum(const MPoly& f, long confidence, std::uint64_t seed,
                      const SearchBudget& budget = SearchBudget{});

} // namespace gcv

#endif
