#include "gcv/acv.hpp"

#include <algorithm>

#include "gcv/bivar.hpp"
#include "gcv/rng.hpp"

namespace gcv {

SuperPolarCombos super_polar_combos(const MPoly& f, long confidence, std::uint64_t seed) {
    if (f.is_constant()) throw std::invalid_argument("super_polar_combos: constant polynomial");
    const int n = f.nvars();
    const long d = f.total_degree();
    SuperPolarCombos out;
    out.seed = seed;
    // |S| = 2 c n d^{n-1}
    out.sample_size = Int(2) * confidence * n * ipow(Int(d), static_cast<unsigned long>(n - 1));
    Rng rng(seed);
    std::vector<MPoly> partials;
    for (int i = 0; i < n; ++i) partials.push_back(f.derivative(i));
    auto draw = [&]() -> Int {
        if (out.sample_size.fits_ulong_p())
            return Int(1 + rng.below(out.sample_size.get_ui()));
        return Int(1 + rng.next());
    };
    for (int k = 0; k + 1 < n; ++k) {
        std::vector<Int> ak(n);
        std::vector<std::vector<Int>> bk(n, std::vector<Int>(n));
        MPoly g(n);
        for (int i = 0; i < n; ++i) {
            ak[i] = draw();
            g += partials[i] * ak[i];
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bk[i][j] = draw();
                g += MPoly::variable(n, i) * partials[j] * bk[i][j];
            }
        out.a.push_back(std::move(ak));
        out.b.push_back(std::move(bk));
        out.g.push_back(std::move(g));
    }
    return out;
}

namespace {

// lift an n-variable polynomial into the (n+1)-variable working ring, z last
MPoly lift_z(const MPoly& p) {
    std::vector<int> map(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) map[i] = i;
    return p.remap(p.nvars() + 1, map);
}

} // namespace

VariableBlock eliminate_variable_block(const MPoly& f, const SuperPolarCombos& combos, int keep) {
    const int n = f.nvars();
    const int zv = n;
    VariableBlock out;
    out.keep = keep;
    MPoly fz = lift_z(f) - MPoly::variable(n + 1, zv);
    if (n == 1) {
        out.hbar = squarefree_reduce(fz);
    } else {
        std::vector<MPoly> sys;
        for (auto& g : combos.g) sys.push_back(lift_z(g));
        sys.push_back(fz);
        std::vector<int> elim;
        for (int i = 0; i < n; ++i)
            if (i != keep) elim.push_back(i);
        EliminationResult r = resultant_gcp(sys, elim);
        if (r.eliminant.is_zero()) throw DegenerateElimination("variable block eliminant is zero");
        out.hbar = r.eliminant;
        out.s_valuation = r.s_valuation;
    }
    // leading coefficient w.r.t. the kept variable, as a polynomial in z;
    // a keep-degree-zero eliminant is its own leading coefficient
    long dk = out.hbar.degree_in(keep);
    MPoly lead(n + 1);
    for (auto& [e, c] : out.hbar.terms()) {
        if (e[keep] != static_cast<std::uint32_t>(dk)) continue;
        Expt e2 = e;
        e2[keep] = 0;
        lead.add_term(e2, c);
    }
    out.h = to_upoly(lead, zv);
    return out;
}

CriticalValueReport asymptotic_critical_values(const MPoly& f, long confidence,
                                               std::uint64_t seed) {
    if (f.is_constant())
        throw std::invalid_argument("asymptotic_critical_values: constant polynomial");
    const int n = f.nvars();
    CriticalValueReport rep;
    rep.seed = seed;
    const int budget = 5;
    Rng seeder(seed);
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::uint64_t s = attempt == 0 ? seed : seeder.next();
        try {
            SuperPolarCombos combos = super_polar_combos(f, confidence, s);
            std::vector<UPoly> hs;
            std::vector<long> degs;
            UPoly h = UPoly::constant(1);
            for (int i = 0; i < n; ++i) {
                VariableBlock blk = eliminate_variable_block(f, combos, i);
                hs.push_back(blk.h);
                degs.push_back(blk.h.degree());
                h = h * blk.h;
            }
            rep.h = h;
            rep.h_factors = std::move(hs);
            rep.h_factor_degrees = std::move(degs);
            rep.retries_used = attempt;
            if (h.is_zero()) throw DegenerateElimination("product of block leads vanished");
            if (h.degree() >= 1) {
                UPoly hsf = squarefree_part(h);
                rep.asymptotic = isolate_real_roots(hsf);
                rep.complex_candidates = hsf.degree() - static_cast<long>(rep.asymptotic.size());
            }
            return rep;
        } catch (const DegenerateElimination&) {
            continue;
        }
    }
    rep.failed = true;
    rep.failure = "degenerate eliminations exhausted the retry budget";
    throw MonteCarloFailure(rep.failure);
}

} // namespace gcv
