#include "gcv/k0.hpp"

#include <algorithm>
#include <optional>

#include "gcv/bivar.hpp"
#include "gcv/macaulay.hpp"
#include "gcv/elimination.hpp"
#include "gcv/rng.hpp"

namespace gcv {

namespace {

MPoly lift_z(const MPoly& p) {
    std::vector<int> map(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) map[i] = i;
    return p.remap(p.nvars() + 1, map);
}

std::vector<AlgebraicNumber> roots_in_z(const MPoly& eliminant, int zv) {
    std::vector<AlgebraicNumber> out;
    if (eliminant.is_zero() || eliminant.degree_in(zv) < 1) return out;
    UPoly u = to_upoly(eliminant, zv);
    return isolate_real_roots(u);
}

// substitute x -> m00 x + m01 y, y -> m10 x + m11 y
MPoly compose_linear2(const MPoly& f, long m00, long m01, long m10, long m11) {
    MPoly X = MPoly::variable(2, 0) * Int(m00) + MPoly::variable(2, 1) * Int(m01);
    MPoly Y = MPoly::variable(2, 0) * Int(m10) + MPoly::variable(2, 1) * Int(m11);
    MPoly out(2);
    for (auto& [e, c] : f.terms()) {
        MPoly t = MPoly::constant(2, c);
        if (e[0] > 0) t = t * X.pow(e[0]);
        if (e[1] > 0) t = t * Y.pow(e[1]);
        out += t;
    }
    return out;
}

bool leading_y_coeff_constant(const MPoly& p, int yv) {
    long d = p.degree_in(yv);
    if (d < 0) return false;
    MPoly lead(p.nvars());
    for (auto& [e, c] : p.terms()) {
        if (e[yv] != static_cast<std::uint32_t>(d)) continue;
        Expt e2 = e;
        e2[yv] = 0;
        lead.add_term(e2, c);
    }
    return lead.is_constant();
}

// exact critical values of a bivariate polynomial through generic coordinates
// and the subresultant gcd ladder; empty optional when genericity failed
std::optional<std::vector<AlgebraicNumber>> triangular_k0_bivariate(const MPoly& f,
                                                                    std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 8; ++attempt) {
        long lam = rng.range(1, 6), mu = rng.range(1, 6);
        if (lam * mu == 1) continue; // keep the change of coordinates invertible
        MPoly ft = compose_linear2(f, 1, lam, mu, 1);
        MPoly fx = ft.derivative(0), fy = ft.derivative(1);
        if (fx.is_zero() || fy.is_zero()) {
            // a univariate polynomial in disguise: critical points of u(x)+v(y)
            // style inputs still have nonzero partials after a true shear
            continue;
        }
        const int yv = 1;
        if (!leading_y_coeff_constant(fx, yv) || !leading_y_coeff_constant(fy, yv) ||
            !leading_y_coeff_constant(ft, yv))
            continue;
        MPoly w = resultant_wrt(fx, fy, yv); // in Z[x]
        if (w.is_zero()) return std::nullopt; // positive-dimensional critical locus
        UPoly u = squarefree_part(to_upoly(w, 0));
        if (u.degree() < 1) return std::vector<AlgebraicNumber>{}; // no critical points
        // ring (x, y, z) for the value computations
        std::vector<int> into_xyz{0, 1};
        MPoly ft3 = ft.remap(3, into_xyz);
        MPoly fz = ft3 - MPoly::variable(3, 2);
        long kmax = std::min(fx.degree_in(yv), fy.degree_in(yv));
        std::vector<AlgebraicNumber> values;
        bool ok = true;
        auto add_stratum = [&](const MPoly& gcd_proxy, const UPoly& wk) {
            // roots of gcd_proxy over each root of wk are the critical y-fibre
            MPoly Nk = resultant_wrt(gcd_proxy, fz, 1); // in (x, z)
            MPoly wk3 = from_upoly(wk, 3, 0);
            MPoly Ek = resultant_wrt(wk3, Nk, 0); // in z only
            if (Ek.is_zero()) {
                ok = false;
                return;
            }
            values = merge_root_sets(values, roots_in_z(Ek, 2));
        };
        for (long k = 1; k < kmax && u.degree() >= 1; ++k) {
            auto S = subresultant_coeffs(fx, fy, yv, k); // in Z[x] (vars of 2-ring)
            UPoly skk = S.back().is_zero() ? UPoly() : to_upoly(S.back(), 0);
            UPoly g = skk.is_zero() ? u : upoly_gcd(u, skk);
            UPoly wk = upoly_divexact(u, g);
            if (wk.degree() >= 1) {
                MPoly sk(3);
                for (std::size_t l = 0; l < S.size(); ++l) {
                    MPoly part = S[l].remap(3, into_xyz);
                    if (l > 0) part = part * MPoly::variable(3, 1).pow(static_cast<unsigned>(l));
                    sk += part;
                }
                add_stratum(sk, wk);
                if (!ok) break;
            }
            u = g;
        }
        if (ok && u.degree() >= 1) {
            // remaining x-coordinates carry a gcd of the full minimal degree:
            // the smaller partial itself is the common factor there
            const MPoly& small = fx.degree_in(yv) <= fy.degree_in(yv) ? fx : fy;
            add_stratum(small.remap(3, into_xyz), u);
            if (ok) u = UPoly::constant(1);
        }
        if (ok && u.degree() < 1) return values;
    }
    return std::nullopt;
}

} // namespace

K0Result critical_values_k0(const MPoly& f, std::uint64_t seed) {
    if (f.is_constant()) throw std::invalid_argument("critical_values_k0: constant polynomial");
    const int n = f.nvars();
    K0Result out;

    if (n == 1) {
        MPoly df = f.derivative(0);
        out.verified = true;
        out.route = "univariate-resultant";
        if (df.is_constant()) return out; // nonzero constant derivative
        MPoly fz = lift_z(f) - MPoly::variable(2, 1);
        MPoly E = resultant_wrt(lift_z(df), fz, 0);
        out.values = roots_in_z(squarefree_reduce(E), 1);
        return out;
    }

    std::vector<MPoly> partials;
    for (int i = 0; i < n; ++i) partials.push_back(f.derivative(i));

    // empty certificate: a constant nonzero coordinate eliminant of the
    // gradient system proves there are no critical points at all
    for (int i = 0; i < n; ++i) {
        std::vector<int> elim;
        for (int j = 0; j < n; ++j)
            if (j != i) elim.push_back(j);
        // order the system so the polynomial of largest eliminated degree is last
        std::vector<MPoly> sys = partials;
        std::stable_sort(sys.begin(), sys.end(), [&](const MPoly& a, const MPoly& b) {
            return degree_in_vars(a, elim) < degree_in_vars(b, elim);
        });
        try {
            EliminationResult r = resultant_gcp(sys, elim);
            if (!r.eliminant.is_zero() && r.eliminant.is_constant()) {
                out.verified = true;
                out.route = "empty-certificate";
                return out;
            }
        } catch (const DegenerateElimination&) {
            continue;
        }
    }

    // z-eliminant of the full critical system
    const int zv = n;
    std::vector<MPoly> sys;
    for (auto& p : partials) sys.push_back(lift_z(p));
    sys.push_back(lift_z(f) - MPoly::variable(n + 1, zv));
    std::vector<int> elim;
    for (int i = 0; i < n; ++i) elim.push_back(i);
    bool gcp_ok = false;
    EliminationResult r;
    try {
        r = resultant_gcp(sys, elim);
        gcp_ok = true;
    } catch (const DegenerateElimination&) {
        out.positive_dimensional = true;
    }

    if (gcp_ok && r.s_valuation == 0) {
        // the classical resultant did not vanish: no zeros at infinity, and the
        // eliminant's roots are exactly the critical values
        out.values = roots_in_z(r.eliminant, zv);
        out.verified = true;
        out.route = "classical-resultant";
        return out;
    }
    if (gcp_ok && r.eliminant.is_constant() && !r.eliminant.is_zero()) {
        out.verified = true; // z-free eliminant: empty projection
        out.route = "gcp-empty";
        return out;
    }

    if (n == 2) {
        auto tri = triangular_k0_bivariate(f, seed);
        if (tri.has_value()) {
            out.values = std::move(*tri);
            out.verified = true;
            out.route = "triangular";
            return out;
        }
        out.positive_dimensional = true;
    }

    if (gcp_ok) {
        out.values = roots_in_z(r.eliminant, zv);
        out.verified = false;
        out.route = "gcp";
        return out;
    }
    out.verified = false;
    out.route = "degenerate";
    out.positive_dimensional = true;
    return out;
}

} // namespace gcv
