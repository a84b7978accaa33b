#include "gcv/macaulay.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gcv/kronecker.hpp"
#include "gcv/upoly.hpp"

namespace gcv {

long degree_in_vars(const MPoly& p, const std::vector<int>& vars) {
    long d = -1;
    for (auto& [e, c] : p.terms()) {
        long s = 0;
        for (int v : vars) s += e[v];
        d = std::max(d, s);
    }
    return d;
}

MPoly homogenize_in(const MPoly& p, const std::vector<int>& vars, int homvar, long delta) {
    MPoly r(p.nvars());
    for (auto& [e, c] : p.terms()) {
        long s = 0;
        for (int v : vars) s += e[v];
        if (s > delta) throw std::invalid_argument("homogenize_in: degree exceeds delta");
        Expt e2 = e;
        e2[homvar] += static_cast<std::uint32_t>(delta - s);
        r.add_term(e2, c);
    }
    return r;
}

namespace {

void monomials_of_degree(const std::vector<int>& vars, long m, Expt base, std::size_t pos,
                         int nring, std::vector<Expt>& out) {
    if (pos + 1 == vars.size()) {
        base[vars[pos]] = static_cast<std::uint32_t>(m);
        out.push_back(base);
        return;
    }
    for (long d = m; d >= 0; --d) {
        base[vars[pos]] = static_cast<std::uint32_t>(d);
        monomials_of_degree(vars, m - d, base, pos + 1, nring, out);
    }
}

std::vector<Expt> degree_monomials(int nring, const std::vector<int>& vars, long m) {
    std::vector<Expt> out;
    if (vars.empty()) {
        if (m == 0) out.push_back(Expt(nring, 0));
        return out;
    }
    monomials_of_degree(vars, m, Expt(nring, 0), 0, nring, out);
    return out;
}

// split a polynomial into matrix-monomial -> aux-coefficient map
std::map<Expt, MPoly> split_matrix_part(const MPoly& p, const std::vector<int>& matrix_vars) {
    std::vector<bool> is_matrix(p.nvars(), false);
    for (int v : matrix_vars) is_matrix[v] = true;
    std::map<Expt, MPoly> out;
    for (auto& [e, c] : p.terms()) {
        Expt em(p.nvars(), 0), ea(p.nvars(), 0);
        for (int i = 0; i < p.nvars(); ++i) (is_matrix[i] ? em[i] : ea[i]) = e[i];
        auto it = out.find(em);
        if (it == out.end()) it = out.emplace(em, MPoly(p.nvars())).first;
        it->second.add_term(ea, c);
    }
    return out;
}

} // namespace

MacaulayMatrix macaulay_matrix(const std::vector<MPoly>& homogeneous,
                               const std::vector<long>& degrees,
                               const std::vector<int>& matrix_vars, long m) {
    MacaulayMatrix M;
    if (homogeneous.empty()) throw std::invalid_argument("macaulay_matrix: empty system");
    M.nring = homogeneous[0].nvars();
    M.matrix_vars = matrix_vars;
    M.m = m;
    M.cols = degree_monomials(M.nring, matrix_vars, m);
    if (M.cols.empty()) throw std::invalid_argument("macaulay_matrix: m too small");
    std::map<Expt, std::size_t> col_index;
    for (std::size_t j = 0; j < M.cols.size(); ++j) col_index.emplace(M.cols[j], j);

    bool any_row = false;
    for (std::size_t k = 0; k < homogeneous.size(); ++k) {
        if (m < degrees[k]) continue;
        auto parts = split_matrix_part(homogeneous[k], matrix_vars);
        auto shifts = degree_monomials(M.nring, matrix_vars, m - degrees[k]);
        for (auto& sh : shifts) {
            any_row = true;
            M.rows.push_back({static_cast<int>(k), sh});
            std::vector<MPoly> row(M.cols.size(), MPoly(M.nring));
            for (auto& [mon, coef] : parts) {
                Expt col = sh;
                for (int v : matrix_vars) col[v] += mon[v];
                row[col_index.at(col)] += coef;
            }
            M.entries.push_back(std::move(row));
        }
    }
    if (!any_row) throw std::invalid_argument("macaulay_matrix: m too small for any shift");
    return M;
}

Int det_bareiss(std::vector<std::vector<Int>> a) {
    const std::size_t n = a.size();
    if (n == 0) return Int(1);
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && a[sel][k] == 0) ++sel;
            if (sel == n) return Int(0);
            std::swap(a[k], a[sel]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

namespace {

// exact univariate interpolation at integer points; values must define an
// integer-coefficient polynomial
std::vector<Int> interp_exact(const std::vector<Int>& points, const std::vector<Rat>& values) {
    const std::size_t n = points.size();
    // Newton divided differences over Q
    std::vector<Rat> dd(values);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i] - points[i - level]);
            if (i == level) break;
        }
    // expand Newton form
    std::vector<Rat> coef(n, Rat(0));
    for (std::size_t i = n; i-- > 0;) {
        // coef = coef * (x - points[i]) + dd[i]
        for (std::size_t j = n - 1; j >= 1; --j) coef[j] = coef[j - 1] - Rat(points[i]) * coef[j];
        coef[0] = -Rat(points[i]) * coef[0];
        coef[0] += dd[i];
    }
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coef[i].get_den() != 1) throw std::logic_error("interpolation produced a non-integer");
        out[i] = coef[i].get_num();
    }
    return out;
}

std::vector<Int> grid_points(long count) {
    std::vector<Int> pts;
    pts.reserve(static_cast<std::size_t>(count));
    long v = 0;
    for (long i = 0; i < count; ++i) {
        pts.push_back(Int(v));
        v = v > 0 ? -v : -v + 1; // 0, 1, -1, 2, -2, ...
    }
    return pts;
}

MPoly det_recursive(const std::vector<std::vector<MPoly>>& M, int nring,
                    const std::vector<int>& vars, const std::vector<long>& bounds,
                    std::size_t pos) {
    if (pos == vars.size()) {
        std::vector<std::vector<Int>> a(M.size(), std::vector<Int>(M.size()));
        for (std::size_t i = 0; i < M.size(); ++i)
            for (std::size_t j = 0; j < M.size(); ++j) {
                if (!M[i][j].is_constant())
                    throw std::logic_error("det_interpolated: degree bound too small");
                a[i][j] = M[i][j].constant_value();
            }
        return MPoly::constant(nring, det_bareiss(std::move(a)));
    }
    const int v = vars[pos];
    const long count = bounds[pos] + 1;
    auto pts = grid_points(count);
    std::vector<MPoly> evals;
    evals.reserve(static_cast<std::size_t>(count));
    for (auto& pt : pts) {
        std::vector<std::vector<MPoly>> Mi(M.size());
        for (std::size_t i = 0; i < M.size(); ++i) {
            Mi[i].reserve(M.size());
            for (std::size_t j = 0; j < M.size(); ++j)
                Mi[i].push_back(M[i][j].eval_partial({v}, {pt}));
        }
        evals.push_back(det_recursive(Mi, nring, vars, bounds, pos + 1));
    }
    // interpolate coefficient-wise over the union of supports
    std::map<Expt, std::vector<Rat>, GradedLex> table;
    for (std::size_t t = 0; t < evals.size(); ++t)
        for (auto& [e, c] : evals[t].terms()) {
            auto it = table.find(e);
            if (it == table.end())
                it = table.emplace(e, std::vector<Rat>(evals.size(), Rat(0))).first;
            it->second[t] = Rat(c);
        }
    MPoly out(nring);
    for (auto& [e, vals] : table) {
        auto coefs = interp_exact(pts, vals);
        for (std::size_t d = 0; d < coefs.size(); ++d) {
            if (coefs[d] == 0) continue;
            Expt e2 = e;
            e2[v] += static_cast<std::uint32_t>(d);
            out.add_term(e2, coefs[d]);
        }
    }
    return out;
}

} // namespace

MPoly det_interpolated(const std::vector<std::vector<MPoly>>& M, int nring,
                       std::vector<long> deg_bounds) {
    if (M.empty()) return MPoly::constant(nring, Int(1));
    for (auto& row : M)
        if (row.size() != M.size()) throw std::invalid_argument("det_interpolated: not square");
    std::vector<int> vars;
    std::vector<long> bounds;
    for (int v = 0; v < nring; ++v)
        if (deg_bounds[v] > 0) {
            vars.push_back(v);
            bounds.push_back(deg_bounds[v]);
        }
    return det_recursive(M, nring, vars, bounds, 0);
}

MPoly determinant_poly(const std::vector<std::vector<MPoly>>& M, int nring) {
    if (M.empty()) return MPoly::constant(nring, Int(1));
    for (auto& row : M)
        if (row.size() != M.size()) throw std::invalid_argument("determinant_poly: not square");
    // per-variable output degree bounds: sum over rows of the row's max degree
    std::vector<unsigned long> caps(static_cast<std::size_t>(nring), 0);
    for (auto& row : M) {
        for (int v = 0; v < nring; ++v) {
            long mx = 0;
            for (auto& e : row)
                mx = std::max(mx, e.degree_in(v));
            caps[static_cast<std::size_t>(v)] += static_cast<unsigned long>(std::max<long>(mx, 0));
        }
    }
    KroneckerMap map(std::vector<unsigned long>(caps.begin(), caps.end()));
    const unsigned long K = map.packed_degree_bound();
    // pack each entry, evaluate at K+1 integer points, interpolate, unpack
    std::vector<std::vector<UPoly>> packed(M.size());
    for (std::size_t i = 0; i < M.size(); ++i)
        for (auto& e : M[i]) packed[i].push_back(kronecker_substitute(e, map));
    auto pts = grid_points(static_cast<long>(K) + 1);
    std::vector<Rat> values(pts.size());
    for (std::size_t t = 0; t < pts.size(); ++t) {
        std::vector<std::vector<Int>> a(M.size(), std::vector<Int>(M.size()));
        for (std::size_t i = 0; i < M.size(); ++i)
            for (std::size_t j = 0; j < M.size(); ++j) a[i][j] = packed[i][j].eval(pts[t]);
        values[t] = Rat(det_bareiss(std::move(a)));
    }
    auto coefs = interp_exact(pts, values);
    return kronecker_decode(UPoly(std::move(coefs)), map);
}

MPoly det_cofactor(const std::vector<std::vector<MPoly>>& M) {
    const std::size_t n = M.size();
    if (n == 0) throw std::invalid_argument("det_cofactor: empty");
    const int nring = M[0][0].nvars();
    if (n == 1) return M[0][0];
    MPoly acc(nring);
    for (std::size_t j = 0; j < n; ++j) {
        if (M[0][j].is_zero()) continue;
        std::vector<std::vector<MPoly>> sub(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) sub[i - 1].push_back(M[i][k]);
        MPoly term = M[0][j] * det_cofactor(sub);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

} // namespace gcv
