#include "gcv/elimination.hpp"

#include <algorithm>
#include <map>

#include "gcv/bivar.hpp"
#include "gcv/macaulay.hpp"
#include "gcv/rng.hpp"

namespace gcv {

namespace {

long valuation_in(const MPoly& p, int var) {
    long v = -1;
    for (auto& [e, c] : p.terms()) v = v < 0 ? e[var] : std::min<long>(v, e[var]);
    return v;
}

MPoly coeff_of_power(const MPoly& p, int var, long k) {
    MPoly r(p.nvars());
    for (auto& [e, c] : p.terms()) {
        if (e[var] != static_cast<std::uint32_t>(k)) continue;
        Expt e2 = e;
        e2[var] = 0;
        r.add_term(e2, c);
    }
    return r;
}

} // namespace

EliminationResult resultant_gcp(const std::vector<MPoly>& polys,
                                const std::vector<int>& elim_vars) {
    if (polys.empty()) throw std::invalid_argument("resultant_gcp: empty system");
    const int nv = polys[0].nvars();
    const std::size_t N = polys.size();
    if (elim_vars.size() + 1 != N)
        throw std::invalid_argument("resultant_gcp: need #polys = #eliminated + 1");

    EliminationResult res;
    if (elim_vars.empty()) {
        res.eliminant = squarefree_reduce(polys[0]);
        return res;
    }
    for (auto& p : polys)
        if (p.is_zero()) throw DegenerateElimination("zero polynomial in the system");

    // extended ring: original variables, then x0 (homogenizer), then s
    const int nr = nv + 2;
    const int x0 = nv, sv = nv + 1;
    std::vector<int> lift(nv);
    for (int i = 0; i < nv; ++i) lift[i] = i;
    std::vector<int> mvars;
    mvars.push_back(x0);
    for (int v : elim_vars) mvars.push_back(v);

    std::vector<MPoly> G;
    std::vector<long> deg;
    for (std::size_t k = 0; k < N; ++k) {
        MPoly p = polys[k].remap(nr, lift);
        long dk = std::max<long>(degree_in_vars(p, elim_vars), 1);
        MPoly g = homogenize_in(p, elim_vars, x0, dk);
        if (k + 1 < N) {
            Expt e(nr, 0);
            e[elim_vars[k]] = static_cast<std::uint32_t>(dk);
            e[sv] = 1;
            g.add_term(e, Int(1));
        }
        G.push_back(std::move(g));
        deg.push_back(dk);
    }
    long m = 1;
    for (long d : deg) m += d - 1;
    res.shift_degree = m;

    // pairing for the classical Macaulay assignment: polynomial k (k < N-1)
    // pairs with its perturbation variable, the last with the homogenizer
    auto paired_var = [&](std::size_t k) { return k + 1 < N ? elim_vars[k] : x0; };

    MacaulayMatrix all = macaulay_matrix(G, deg, mvars, m);
    const std::size_t nu = all.col_count();
    res.matrix_size = static_cast<long>(nu);

    // assignment: column gamma belongs to the least k with gamma[pair(k)] >= deg_k
    std::vector<int> owner(nu, -1);
    std::vector<int> owners_count(nu, 0);
    for (std::size_t j = 0; j < nu; ++j) {
        const Expt& g = all.cols[j];
        for (std::size_t k = 0; k < N; ++k) {
            if (g[paired_var(k)] >= static_cast<std::uint32_t>(deg[k])) {
                ++owners_count[j];
                if (owner[j] < 0) owner[j] = static_cast<int>(k);
            }
        }
    }

    // numerator: one row per column, the owner's shifted polynomial
    std::map<Expt, std::size_t> colix;
    for (std::size_t j = 0; j < nu; ++j) colix.emplace(all.cols[j], j);
    // index rows of `all` by (poly, shift)
    std::map<std::pair<int, Expt>, std::size_t> rowix;
    for (std::size_t r = 0; r < all.row_count(); ++r)
        rowix.emplace(std::make_pair(all.rows[r].poly, all.rows[r].shift), r);

    std::vector<std::vector<MPoly>> D(nu);
    std::vector<int> row_poly(nu);
    for (std::size_t j = 0; j < nu; ++j) {
        int k = owner[j];
        Expt shift = all.cols[j];
        shift[paired_var(static_cast<std::size_t>(k))] -= static_cast<std::uint32_t>(deg[k]);
        D[j] = all.entries[rowix.at({k, shift})];
        row_poly[j] = k;
    }

    // per-variable degree bounds of det(D): sum of row-wise entry degrees
    auto det_bounds = [&](const std::vector<int>& rows_sel) {
        std::vector<long> b(static_cast<std::size_t>(nr), 0);
        for (int j : rows_sel)
            for (int v = 0; v < nr; ++v) {
                long mx = G[static_cast<std::size_t>(row_poly[static_cast<std::size_t>(j)])].degree_in(v);
                if (std::find(mvars.begin(), mvars.end(), v) != mvars.end()) continue;
                b[static_cast<std::size_t>(v)] += std::max<long>(mx, 0);
            }
        return b;
    };

    std::vector<int> all_rows(nu);
    for (std::size_t j = 0; j < nu; ++j) all_rows[j] = static_cast<int>(j);
    MPoly detD = det_interpolated(D, nr, det_bounds(all_rows));
    if (detD.is_zero())
        throw DegenerateElimination("numerator determinant vanishes identically");

    // denominator: minor on the non-reduced columns (two or more owners)
    std::vector<int> nonred;
    for (std::size_t j = 0; j < nu; ++j)
        if (owners_count[j] >= 2) nonred.push_back(static_cast<int>(j));
    MPoly detE(nr);
    res.denom_size = static_cast<long>(nonred.size());
    if (nonred.empty()) {
        detE = MPoly::constant(nr, Int(1));
    } else {
        std::vector<std::vector<MPoly>> E(nonred.size());
        for (std::size_t a = 0; a < nonred.size(); ++a)
            for (std::size_t b = 0; b < nonred.size(); ++b)
                E[a].push_back(D[static_cast<std::size_t>(nonred[a])][static_cast<std::size_t>(nonred[b])]);
        detE = det_interpolated(E, nr, det_bounds(nonred));
        if (detE.is_zero())
            throw DegenerateElimination("denominator minor vanishes identically");
    }

    // trailing coefficients in the perturbation variable
    long vp = valuation_in(detD, sv);
    long vq = valuation_in(detE, sv);
    if (vp < vq) throw DegenerateElimination("perturbation valuation inversion");
    res.s_valuation = vp - vq;

    // with no surviving variables a positive valuation certifies a vanishing
    // resultant: the system has a projective common zero
    bool has_kept = false;
    for (int v = 0; v < nv; ++v)
        if (std::find(elim_vars.begin(), elim_vars.end(), v) == elim_vars.end()) {
            for (auto& g : G)
                if (g.degree_in(v) > 0) has_kept = true;
        }
    if (!has_kept && res.s_valuation > 0) {
        res.eliminant = MPoly::zero(nv);
        return res;
    }

    MPoly Tp = coeff_of_power(detD, sv, vp);
    MPoly Tq = coeff_of_power(detE, sv, vq);
    MPoly elim = mpoly_divexact(Tp, Tq);

    // back to the original ring
    for (int v : elim_vars)
        if (elim.degree_in(v) > 0) throw std::logic_error("eliminant kept an eliminated variable");
    if (elim.degree_in(x0) > 0 || elim.degree_in(sv) > 0)
        throw std::logic_error("eliminant kept an auxiliary variable");
    std::vector<int> drop(nr, -1);
    for (int i = 0; i < nv; ++i) drop[i] = i;
    res.eliminant = squarefree_reduce(elim.remap(nv, drop));
    if (res.eliminant.is_zero())
        throw DegenerateElimination("eliminant reduced to zero");
    return res;
}

std::vector<MPoly> make_square(const std::vector<MPoly>& polys, int target_n,
                               std::uint64_t seed) {
    const int p = static_cast<int>(polys.size());
    if (p < target_n) throw std::invalid_argument("make_square: fewer polynomials than targets");
    if (p == target_n) return polys;
    long d = 1;
    for (auto& f : polys) d = std::max(d, f.total_degree());
    // sample target_n distinct combination points from {0, ..., p d^n}
    Int gamma_card = Int(p) * ipow(Int(d), static_cast<unsigned long>(target_n)) + 1;
    Rng rng(seed);
    std::vector<Int> gammas;
    while (static_cast<int>(gammas.size()) < target_n) {
        // rejection sample below gamma_card (fits in 64 bits at desk scale)
        Int g;
        if (gamma_card.fits_ulong_p()) {
            g = Int(rng.below(gamma_card.get_ui()));
        } else {
            g = Int(rng.next());
        }
        if (std::find(gammas.begin(), gammas.end(), g) == gammas.end()) gammas.push_back(g);
    }
    std::vector<MPoly> out;
    for (int k = 0; k < target_n; ++k) {
        MPoly acc(polys[0].nvars());
        Int pw = 1;
        for (int i = 0; i < p; ++i) {
            acc += polys[static_cast<std::size_t>(i)] * pw;
            pw *= gammas[static_cast<std::size_t>(k)];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

Int nullstellensatz_degree(long n, long d) {
    if (n < 1 || d < 1) throw std::invalid_argument("nullstellensatz_degree: need n, d >= 1");
    return Int(1) + Int(n) * (Int(13) * ipow(Int(d), static_cast<unsigned long>(n)) - 1);
}

ResultantSystemSize resultant_system_size(long n, long d, long p) {
    ResultantSystemSize s;
    s.m = nullstellensatz_degree(n, d);
    // nu_m = binom(m + n - 1, n - 1)
    Int top = s.m + n - 1;
    Int nu = 1;
    for (long i = 1; i <= n - 1; ++i) nu = nu * (top - (n - 1) + i) / i;
    s.nu_m = nu;
    // rows: p polynomials shifted by monomials of degree m - d
    Int topr = s.m - d + n - 1;
    Int rb = 1;
    for (long i = 1; i <= n - 1; ++i) rb = rb * (topr - (n - 1) + i) / i;
    s.row_bound = Int(p) * rb;
    return s;
}

} // namespace gcv
