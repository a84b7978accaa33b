#include "gcv/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "gcv/rng.hpp"

namespace gcv {

namespace {

double eval_double(const MPoly& f, const std::vector<double>& x) {
    double acc = 0;
    for (auto& [e, c] : f.terms()) {
        double t = c.get_d();
        for (int i = 0; i < f.nvars(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= x[static_cast<std::size_t>(i)];
        acc += t;
    }
    return acc;
}

std::vector<double> grad_double(const std::vector<MPoly>& grad, const std::vector<double>& x) {
    std::vector<double> g(grad.size());
    for (std::size_t i = 0; i < grad.size(); ++i) g[i] = eval_double(grad[i], x);
    return g;
}

// dyadic rationalizations of a floating point, coarse to fine
std::vector<Rat> dyadic_ladder(double v, unsigned max_bits) {
    std::vector<Rat> out;
    if (!std::isfinite(v)) return out;
    for (unsigned bits = 0; bits <= max_bits; bits += 8) {
        double scaled = std::ldexp(v, static_cast<int>(bits));
        if (std::abs(scaled) > 9e15) break;
        Int num(static_cast<long>(std::llround(scaled)));
        out.push_back(make_rat(num, Int(1) << bits));
    }
    return out;
}

// damped descent on g = f (minimize) from a double start
std::vector<double> descend(const MPoly& f, const std::vector<MPoly>& grad,
                            std::vector<double> x, int iters) {
    double fx = eval_double(f, x);
    for (int it = 0; it < iters; ++it) {
        auto g = grad_double(grad, x);
        double norm = 0;
        for (double v : g) norm += v * v;
        if (norm < 1e-24) break;
        double step = 1.0;
        bool moved = false;
        for (int bt = 0; bt < 40; ++bt) {
            std::vector<double> y(x);
            for (std::size_t i = 0; i < y.size(); ++i) y[i] -= step * g[i];
            double fy = eval_double(f, y);
            if (std::isfinite(fy) && fy < fx) {
                x = std::move(y);
                fx = fy;
                moved = true;
                break;
            }
            step /= 2;
        }
        if (!moved) break;
    }
    return x;
}

struct SideSearch {
    std::vector<Rat> point;
    Rat value;
    bool found = false;
};

// search for a rational point with f(p) <= r (or >= r when maximize)
SideSearch search_side(const MPoly& f, const Rat& r, bool maximize, const SearchBudget& budget,
                       std::uint64_t seed,
                       std::vector<std::pair<std::vector<Rat>, Rat>>* probes = nullptr) {
    const int n = f.nvars();
    MPoly obj = maximize ? -f : f;
    std::vector<MPoly> grad;
    for (int i = 0; i < n; ++i) grad.push_back(obj.derivative(i));
    Rng rng(seed);
    SideSearch best;

    auto consider = [&](const std::vector<Rat>& p) {
        Rat v = f.eval(std::span<const Rat>(p));
        if (probes) probes->push_back({p, v});
        bool ok = maximize ? v >= r : v <= r;
        if (ok && !best.found) {
            best.point = p;
            best.value = v;
            best.found = true;
        }
        return ok;
    };

    // cheap exact probes: origin, signed unit points, coordinate rays
    std::vector<Rat> origin(n, Rat(0));
    if (consider(origin)) return best;
    for (int round = 0; round < budget.rounds; ++round) {
        Int box = ipow(Int(budget.box_growth), static_cast<unsigned long>(round));
        for (int i = 0; i < n && !best.found; ++i) {
            for (int sgn : {1, -1}) {
                std::vector<Rat> p(n, Rat(0));
                p[static_cast<std::size_t>(i)] = Rat(box * sgn);
                if (consider(p)) return best;
            }
        }
        // seeded random rational starts in the box, refined by descent
        int starts = std::max(1, budget.starts / budget.rounds);
        for (int s = 0; s < starts; ++s) {
            std::vector<double> x(n);
            std::vector<Rat> p(n);
            for (int i = 0; i < n; ++i) {
                long num = rng.range(-16, 16);
                p[static_cast<std::size_t>(i)] = make_rat(Int(num) * box, Int(16));
                x[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)].get_d();
            }
            if (consider(p)) return best;
            auto y = descend(obj, grad, x, budget.descent_iters);
            // exact-check dyadic rationalizations coordinate-wise
            std::vector<std::vector<Rat>> lads(static_cast<std::size_t>(n));
            std::size_t depth = SIZE_MAX;
            for (int i = 0; i < n; ++i) {
                lads[static_cast<std::size_t>(i)] = dyadic_ladder(y[static_cast<std::size_t>(i)], 56);
                depth = std::min(depth, lads[static_cast<std::size_t>(i)].size());
            }
            for (std::size_t d = 0; d < depth; ++d) {
                std::vector<Rat> q(n);
                for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i)] = lads[static_cast<std::size_t>(i)][d];
                if (consider(q)) return best;
            }
        }
    }
    return best;
}

} // namespace

FiberWitness fiber_nonempty_witness(const MPoly& f, const Rat& r, const SearchBudget& budget,
                                    std::uint64_t seed) {
    FiberWitness w;
    SideSearch low = search_side(f, r, false, budget, seed);
    if (!low.found) return w;
    SideSearch high = search_side(f, r, true, budget, seed ^ 0x9e3779b97f4a7c15ULL);
    if (!high.found) return w;
    w.nonempty = true;
    w.low_point = low.point;
    w.low_value = low.value;
    w.high_point = high.point;
    w.high_value = high.value;
    return w;
}

InfimumResult infimum(const MPoly& f, long confidence, std::uint64_t seed,
                      const SearchBudget& budget) {
    InfimumResult out;
    out.seed = seed;
    if (f.is_constant()) {
        out.status = InfStatus::constant;
        out.value = AlgebraicNumber::from_rational(Rat(f.constant_value()));
        out.attained = true;
        return out;
    }
    out.acv = asymptotic_critical_values(f, confidence, seed);
    out.k0 = critical_values_k0(f, seed ^ 0xabcdef12345ULL);
    out.candidates = merge_root_sets(out.acv.asymptotic, out.k0.values);

    if (out.candidates.empty()) {
        // nonconstant with no finite candidate: witness arbitrarily small values
        out.status = InfStatus::unbounded_below;
        SideSearch s = search_side(f, Rat(-1024), false, budget, seed ^ 7);
        if (s.found) out.witnesses.push_back({s.point, s.value});
        return out;
    }

    out.interlacing = interlacing_rationals(out.candidates);
    out.fiber_nonempty.assign(out.interlacing.size(), false);

    // below the smallest candidate first: nonempty there means unbounded below
    FiberWitness w0 = fiber_nonempty_witness(f, out.interlacing[0], budget, seed ^ 101);
    out.fiber_nonempty[0] = w0.nonempty;
    if (w0.nonempty) {
        out.status = InfStatus::unbounded_below;
        out.witnesses.push_back({w0.low_point, w0.low_value});
        return out;
    }
    for (std::size_t j = 1; j < out.interlacing.size(); ++j) {
        FiberWitness w = fiber_nonempty_witness(f, out.interlacing[j], budget,
                                                seed ^ (1000 + 31 * j));
        out.fiber_nonempty[j] = w.nonempty;
        if (!w.nonempty) continue;
        // first empty -> nonempty transition: the candidate between them
        out.status = InfStatus::finite;
        out.value = out.candidates[j - 1];
        out.witnesses.push_back({w.low_point, w.low_value});
        out.witnesses.push_back({w.high_point, w.high_value});

        // attainment: the value must be a verified critical value and either an
        // exact witness or a descent bracket with all probes above the value
        bool in_k0 = false;
        for (auto& v : out.k0.values)
            if (alg_equal(v, *out.value)) in_k0 = true;
        out.attained = false;
        if (in_k0) {
            AlgebraicNumber fine = refine(*out.value, budget.precision_bits + 2);
            std::vector<std::pair<std::vector<Rat>, Rat>> probes;
            SideSearch near = search_side(f, fine.hi, false, budget, seed ^ 424242, &probes);
            if (near.found) {
                if (compare_rat(*out.value, near.value) == 0) {
                    out.attained = true; // exact witness f(p) = value
                    out.witnesses.push_back({near.point, near.value});
                } else {
                    Rat gap = near.value - fine.lo;
                    bool bracket = gap >= 0 && gap <= make_rat(Int(1), Int(1) << budget.precision_bits);
                    bool all_above = true;
                    for (auto& [p, v] : probes)
                        if (compare_rat(*out.value, v) > 0) all_above = false;
                    if (bracket && all_above) {
                        out.attained = true;
                        out.witnesses.push_back({near.point, near.value});
                    }
                }
            }
        }
        return out;
    }
    // no nonempty fiber found anywhere: report the largest candidate without a
    // certificate rather than fail silently
    out.status = InfStatus::finite;
    out.value = out.candidates.back();
    out.attained = false;
    return out;
}

} // namespace gcv
