#include "gcv/constrained.hpp"

#include <algorithm>
#include <cmath>

#include "gcv/acv.hpp"
#include "gcv/bivar.hpp"
#include "gcv/elimination.hpp"
#include "gcv/macaulay.hpp"
#include "gcv/rng.hpp"

namespace gcv {

std::vector<MinorPair> jacobian_minors(const MPoly& F, const std::vector<MPoly>& gs) {
    const int n = F.nvars();
    const int r = static_cast<int>(gs.size());
    if (r >= n) throw std::invalid_argument("jacobian_minors: need r < n");
    std::vector<std::vector<MPoly>> C;
    {
        std::vector<MPoly> row;
        for (int j = 0; j < n; ++j) row.push_back(F.derivative(j));
        C.push_back(std::move(row));
    }
    for (auto& g : gs) {
        std::vector<MPoly> row;
        for (int j = 0; j < n; ++j) row.push_back(g.derivative(j));
        C.push_back(std::move(row));
    }
    std::vector<MinorPair> out;
    std::vector<int> cols(static_cast<std::size_t>(r + 1));
    for (int i = 0; i <= r; ++i) cols[static_cast<std::size_t>(i)] = i;
    while (true) {
        // numerator: full (r+1)x(r+1) determinant on these columns
        std::vector<std::vector<MPoly>> sub(static_cast<std::size_t>(r + 1));
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j <= r; ++j)
                sub[static_cast<std::size_t>(i)].push_back(C[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])]);
        MPoly numer = det_cofactor(sub);
        for (int jj = 0; jj <= r; ++jj) {
            MinorPair mp;
            mp.columns = cols;
            mp.omitted = cols[static_cast<std::size_t>(jj)];
            mp.numerator = numer;
            if (r == 0) {
                mp.denominator = MPoly::constant(n, Int(1));
            } else {
                std::vector<std::vector<MPoly>> den(static_cast<std::size_t>(r));
                for (int i = 1; i <= r; ++i)
                    for (int j = 0; j <= r; ++j) {
                        if (j == jj) continue;
                        den[static_cast<std::size_t>(i - 1)].push_back(C[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])]);
                    }
                mp.denominator = det_cofactor(den);
            }
            out.push_back(std::move(mp));
        }
        int i = r;
        while (i >= 0 && cols[static_cast<std::size_t>(i)] == n - (r + 1) + i) --i;
        if (i < 0) break;
        ++cols[static_cast<std::size_t>(i)];
        for (int j = i + 1; j <= r; ++j) cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

namespace {

// the minor pairs grouped per column subset, picking one denominator each
struct ChoiceView {
    std::vector<MPoly> numerators;   // m_i per subset
    std::vector<MPoly> denominators; // m_{i, j_i} per subset
};

ChoiceView choose_minors(const std::vector<MinorPair>& mps, int r, const std::vector<int>& choice) {
    ChoiceView v;
    const int per = r + 1;
    const std::size_t s = mps.size() / static_cast<std::size_t>(per);
    if (choice.size() != s) throw std::invalid_argument("choice vector length mismatch");
    for (std::size_t i = 0; i < s; ++i) {
        int j = choice[i];
        if (j < 0 || j > r) throw std::invalid_argument("choice entry out of range");
        const MinorPair& mp = mps[i * static_cast<std::size_t>(per) + static_cast<std::size_t>(j)];
        v.numerators.push_back(mp.numerator);
        v.denominators.push_back(mp.denominator);
    }
    return v;
}

} // namespace

SystemJ build_system_J(const MPoly& F, const std::vector<MPoly>& gs,
                       const std::vector<int>& choice, std::uint64_t seed) {
    const int n = F.nvars();
    const int r = static_cast<int>(gs.size());
    auto mps = jacobian_minors(F, gs);
    ChoiceView cv = choose_minors(mps, r, choice);
    const long s = static_cast<long>(cv.numerators.size());

    SystemJ J;
    J.choice = choice;
    J.nring = n + 1 + static_cast<int>(s) * (n + 1) + 1;
    J.tvar = n;
    J.zvar = J.nring - 1;
    for (long i = 0; i < s * (n + 1); ++i) J.yvars.push_back(n + 1 + static_cast<int>(i));

    std::vector<int> into(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) into[static_cast<std::size_t>(i)] = i;

    for (auto& g : gs) J.polys.push_back(g.remap(J.nring, into));
    J.polys.push_back(F.remap(J.nring, into) - MPoly::variable(J.nring, J.zvar));
    for (long i = 0; i < s; ++i) {
        MPoly num = cv.numerators[static_cast<std::size_t>(i)].remap(J.nring, into);
        MPoly den = cv.denominators[static_cast<std::size_t>(i)].remap(J.nring, into);
        for (int k = 0; k <= n; ++k) {
            int yv = J.yvars[static_cast<std::size_t>(i * (n + 1) + k)];
            MPoly rhs = k == 0 ? num : MPoly::variable(J.nring, k - 1) * num;
            J.polys.push_back(den * MPoly::variable(J.nring, yv) - rhs);
        }
    }
    // denominator saturation t h - 1 with h a product of generic combinations
    std::vector<MPoly> dens;
    for (auto& d : cv.denominators)
        if (!d.is_zero()) dens.push_back(d.remap(J.nring, into));
    if (dens.empty())
        throw DegenerateElimination("all chosen denominators vanish identically");
    int combos = static_cast<int>(std::min<long>(static_cast<long>(dens.size()),
                                                 std::min<long>(s, n)));
    combos = std::max(combos, 1);
    auto hs = make_square(dens, combos, seed);
    MPoly h = MPoly::constant(J.nring, Int(1));
    for (auto& c : hs) h = h * c;
    J.h = h;
    J.polys.push_back(MPoly::variable(J.nring, J.tvar) * h - MPoly::constant(J.nring, Int(1)));
    J.cardinality = r + 1 + (n + 1) * s + 1;
    if (static_cast<long>(J.polys.size()) != J.cardinality)
        throw std::logic_error("system J cardinality mismatch");
    return J;
}

namespace {

double eval_double_at(const MPoly& f, const std::vector<double>& x) {
    double acc = 0;
    for (auto& [e, c] : f.terms()) {
        double t = c.get_d();
        for (int i = 0; i < f.nvars(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= x[static_cast<std::size_t>(i)];
        acc += t;
    }
    return acc;
}

// multi-start penalty descent estimating inf F on V(g)
double penalty_estimate(const MPoly& F, const std::vector<MPoly>& gs, std::uint64_t seed) {
    const int n = F.nvars();
    Rng rng(seed);
    double best = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 48; ++trial) {
        double M = 1e4;
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& v : x) v = (static_cast<double>(rng.below(2000)) - 1000.0) / 100.0;
        double fx = 0;
        auto value = [&](const std::vector<double>& p) {
            double v = eval_double_at(F, p);
            for (auto& g : gs) {
                double gv = eval_double_at(g, p);
                v += M * gv * gv;
            }
            return v;
        };
        fx = value(x);
        for (int it = 0; it < 400; ++it) {
            // numeric gradient
            std::vector<double> grad(static_cast<std::size_t>(n));
            const double hstep = 1e-6;
            for (int i = 0; i < n; ++i) {
                auto xp = x;
                xp[static_cast<std::size_t>(i)] += hstep;
                grad[static_cast<std::size_t>(i)] = (value(xp) - fx) / hstep;
            }
            double step = 0.5;
            bool moved = false;
            for (int bt = 0; bt < 30; ++bt) {
                auto y = x;
                for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] -= step * grad[static_cast<std::size_t>(i)];
                double fy = value(y);
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
        // report the objective (not the penalty) at a near-feasible point
        double viol = 0;
        for (auto& g : gs) viol += std::abs(eval_double_at(g, x));
        if (viol < 1e-3) best = std::min(best, eval_double_at(F, x));
    }
    return best;
}

} // namespace

ConstrainedReport constrained_infimum_toy(const MPoly& F, std::vector<MPoly> gs,
                                          std::uint64_t seed) {
    ConstrainedReport rep;
    rep.seed = seed;
    const int n = F.nvars();
    long maxdeg = F.total_degree();
    for (auto& g : gs) maxdeg = std::max(maxdeg, g.total_degree());
    if (n > 3 || maxdeg > 3) {
        rep.bounds_only = true;
        rep.note = "instance beyond the toy cap (n <= 3, degrees <= 3): bounds only";
        return rep;
    }
    Rng rng(seed);
    if (static_cast<int>(gs.size()) >= n) gs = make_square(gs, n - 1, rng.next());
    const int r = static_cast<int>(gs.size());
    const long s = static_cast<long>(binomial(static_cast<unsigned long>(n),
                                              static_cast<unsigned long>(r + 1)).get_si());

    // choice vectors: exhaustive when (r+1)^s <= 64, else a seeded sample of 16
    std::vector<std::vector<int>> choices;
    double total = std::pow(static_cast<double>(r + 1), static_cast<double>(s));
    if (total <= 64.0) {
        std::vector<int> cur(static_cast<std::size_t>(s), 0);
        while (true) {
            choices.push_back(cur);
            long i = s - 1;
            while (i >= 0 && cur[static_cast<std::size_t>(i)] == r) {
                cur[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++cur[static_cast<std::size_t>(i)];
        }
    } else {
        rep.partial_choices = true;
        for (int k = 0; k < 16; ++k) {
            std::vector<int> cur(static_cast<std::size_t>(s));
            for (auto& c : cur) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(r + 1)));
            choices.push_back(std::move(cur));
        }
    }

    auto mps = jacobian_minors(F, gs);
    for (auto& choice : choices) {
        ++rep.choices_tried;
        ChoiceView cv;
        try {
            cv = choose_minors(mps, r, choice);
        } catch (const std::exception&) {
            ++rep.choices_degenerate;
            continue;
        }
        // Sliding windows of map components: each window gives a graph system
        // whose (y, z)-projection closure meets {y = 0} in a superset of the
        // generalized critical values; intersect the window candidate sets.
        // Window width makes the system square: r + width + 1 = n + 1.
        const long width = std::max<long>(1, n - r);
        const long ncomp = s * (n + 1);
        std::vector<AlgebraicNumber> per_choice;
        bool have = false;
        std::vector<int> into(static_cast<std::size_t>(n));
        const int nr = n + 1 + static_cast<int>(width) + 1; // x..., t, y-window, z
        const int tv = n, zv = nr - 1;
        for (int i = 0; i < n; ++i) into[static_cast<std::size_t>(i)] = i;
        auto component = [&](long c, int yvar) -> std::optional<MPoly> {
            long i = c / (n + 1);
            int k = static_cast<int>(c % (n + 1));
            MPoly den = cv.denominators[static_cast<std::size_t>(i)];
            if (den.is_zero()) return std::nullopt;
            MPoly num = cv.numerators[static_cast<std::size_t>(i)];
            MPoly rhs = k == 0 ? num : MPoly::variable(n, k - 1) * num;
            return den.remap(nr, into) * MPoly::variable(nr, yvar) - rhs.remap(nr, into);
        };
        for (long w = 0; w < ncomp && !(have && per_choice.empty()); ++w) {
            std::vector<MPoly> sys;
            for (auto& g : gs) sys.push_back(g.remap(nr, into));
            std::vector<int> ys;
            MPoly sat(nr);
            bool valid = true;
            for (long off = 0; off < width; ++off) {
                int yvar = n + 1 + static_cast<int>(off);
                auto eq = component((w + off) % ncomp, yvar);
                if (!eq.has_value()) {
                    valid = false;
                    break;
                }
                sys.push_back(std::move(*eq));
                ys.push_back(yvar);
            }
            if (!valid) continue;
            {
                long i = w / (n + 1);
                MPoly den = cv.denominators[static_cast<std::size_t>(i)].remap(nr, into);
                sat = MPoly::variable(nr, tv) * den - MPoly::constant(nr, Int(1));
            }
            sys.push_back(sat);
            std::vector<int> elim;
            for (int v = 0; v < n; ++v) elim.push_back(v);
            elim.push_back(tv);
            try {
                std::vector<MPoly> sq = make_square(sys, static_cast<int>(elim.size()), rng.next());
                sq.push_back(F.remap(nr, into) - MPoly::variable(nr, zv));
                EliminationResult res = resultant_gcp(sq, elim);
                MPoly at0 = res.eliminant;
                for (int yvar : ys) at0 = at0.eval_partial({yvar}, {Int(0)});
                if (at0.is_zero() || at0.degree_in(zv) < 1) continue;
                auto roots = isolate_real_roots(to_upoly(at0, zv));
                if (!have) {
                    per_choice = roots;
                    have = true;
                } else {
                    std::vector<AlgebraicNumber> keep;
                    for (auto& a : per_choice)
                        for (auto& b : roots)
                            if (alg_equal(a, b)) {
                                keep.push_back(a);
                                break;
                            }
                    per_choice = std::move(keep);
                }
            } catch (const DegenerateElimination&) {
                continue;
            }
        }
        if (!have) {
            ++rep.choices_degenerate;
            continue;
        }
        rep.candidates = merge_root_sets(rep.candidates, per_choice);
    }

    // numeric selection among the exact candidates
    rep.numeric_estimate = penalty_estimate(F, gs, seed ^ 0x5bd1e995u);
    if (!rep.candidates.empty() && std::isfinite(rep.numeric_estimate)) {
        double bestgap = std::numeric_limits<double>::infinity();
        for (auto& c : rep.candidates) {
            AlgebraicNumber fine = refine(c, 40);
            double mid = fine.approx().get_d();
            double gap = std::abs(mid - rep.numeric_estimate);
            if (gap < bestgap) {
                bestgap = gap;
                rep.selected = c;
            }
        }
    }
    return rep;
}

} // namespace gcv
