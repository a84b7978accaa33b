#include "gcv/bivar.hpp"

#include <algorithm>
#include <stdexcept>

#include "gcv/macaulay.hpp"

namespace gcv {

std::vector<int> used_vars(const MPoly& p) {
    std::vector<bool> used(p.nvars(), false);
    for (auto& [e, c] : p.terms())
        for (int i = 0; i < p.nvars(); ++i)
            if (e[i] > 0) used[i] = true;
    std::vector<int> out;
    for (int i = 0; i < p.nvars(); ++i)
        if (used[i]) out.push_back(i);
    return out;
}

UPoly to_upoly(const MPoly& p, int var) {
    std::vector<Int> c(static_cast<std::size_t>(std::max<long>(p.degree_in(var), 0)) + 1, Int(0));
    for (auto& [e, v] : p.terms()) {
        for (int i = 0; i < p.nvars(); ++i)
            if (i != var && e[i] != 0) throw std::invalid_argument("to_upoly: extra variable present");
        c[e[var]] += v;
    }
    return UPoly(std::move(c));
}

MPoly from_upoly(const UPoly& u, int nring, int var) {
    MPoly p(nring);
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
        if (u.coeffs()[i] == 0) continue;
        Expt e(nring, 0);
        e[var] = static_cast<std::uint32_t>(i);
        p.add_term(e, u.coeffs()[i]);
    }
    return p;
}

std::vector<UPoly> to_bivar(const MPoly& p, int main, int coeffv) {
    long dm = std::max<long>(p.degree_in(main), 0);
    long dc = std::max<long>(p.degree_in(coeffv), 0);
    std::vector<std::vector<Int>> c(static_cast<std::size_t>(dm) + 1,
                                    std::vector<Int>(static_cast<std::size_t>(dc) + 1, Int(0)));
    for (auto& [e, v] : p.terms()) {
        for (int i = 0; i < p.nvars(); ++i)
            if (i != main && i != coeffv && e[i] != 0)
                throw std::invalid_argument("to_bivar: extra variable present");
        c[e[main]][e[coeffv]] += v;
    }
    std::vector<UPoly> out;
    out.reserve(c.size());
    for (auto& row : c) out.emplace_back(std::move(row));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

MPoly from_bivar(const std::vector<UPoly>& c, int nring, int main, int coeffv) {
    MPoly p(nring);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c[i].coeffs().size(); ++j) {
            if (c[i].coeffs()[j] == 0) continue;
            Expt e(nring, 0);
            e[main] = static_cast<std::uint32_t>(i);
            e[coeffv] = static_cast<std::uint32_t>(j);
            p.add_term(e, c[i].coeffs()[j]);
        }
    return p;
}

namespace {

using BPoly = std::vector<UPoly>; // coefficients in Z[coeffv], low main-degree first

void btrim(BPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

bool bzero(const BPoly& a) { return a.empty(); }
long bdeg(const BPoly& a) { return static_cast<long>(a.size()) - 1; }

BPoly bmul_coeff(const BPoly& a, const UPoly& k) {
    BPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    btrim(r);
    return r;
}

BPoly bsub(const BPoly& a, const BPoly& b) {
    BPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        UPoly x = i < a.size() ? a[i] : UPoly();
        UPoly y = i < b.size() ? b[i] : UPoly();
        r[i] = x - y;
    }
    btrim(r);
    return r;
}

BPoly bshift(const BPoly& a, std::size_t k) {
    if (bzero(a)) return a;
    BPoly r(a.size() + k);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

// pseudo-remainder in (Z[coeffv])[main]
BPoly bprem(BPoly a, const BPoly& b) {
    long db = bdeg(b);
    while (!bzero(a) && bdeg(a) >= db) {
        long k = bdeg(a) - db;
        UPoly lead = a.back();
        a = bsub(bmul_coeff(a, b.back()), bshift(bmul_coeff(b, lead), static_cast<std::size_t>(k)));
    }
    return a;
}

UPoly bcontent(const BPoly& a) {
    // true gcd in Z[coeffv]: primitive gcd times the integer content
    UPoly g;
    Int ic = 0;
    for (auto& c : a) {
        g = upoly_gcd(g, c);
        ic = gcd(ic, abs(c.content()));
    }
    return g * ic;
}

BPoly bprimitive(const BPoly& a) {
    if (bzero(a)) return a;
    UPoly g = bcontent(a);
    BPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = upoly_divexact(a[i], g);
    // canonical sign: leading integer of the leading coefficient positive
    if (!r.empty() && !r.back().is_zero() && r.back().leading() < 0)
        for (auto& c : r) c = -c;
    return r;
}

BPoly bderivative(const BPoly& a) {
    if (a.size() <= 1) return {};
    BPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Int(static_cast<unsigned long>(i));
    return r;
}

BPoly bdivexact(const BPoly& num, const BPoly& den) {
    BPoly rem = num, q(bzero(num) ? 0 : num.size());
    long dd = bdeg(den);
    while (!bzero(rem) && bdeg(rem) >= dd) {
        long k = bdeg(rem) - dd;
        UPoly qq = upoly_divexact(rem.back(), den.back());
        q[static_cast<std::size_t>(k)] = qq;
        rem = bsub(rem, bshift(bmul_coeff(den, qq), static_cast<std::size_t>(k)));
    }
    if (!bzero(rem)) throw std::domain_error("bivariate division not exact");
    btrim(q);
    return q;
}

} // namespace

std::vector<UPoly> bivar_gcd(BPoly a, BPoly b) {
    btrim(a);
    btrim(b);
    if (bzero(a)) return bprimitive(b);
    if (bzero(b)) return bprimitive(a);
    UPoly ca = bcontent(a), cb = bcontent(b);
    UPoly cg = upoly_gcd(ca, cb);
    a = bprimitive(a);
    b = bprimitive(b);
    if (bdeg(a) < bdeg(b)) std::swap(a, b);
    while (!bzero(b)) {
        BPoly r = bprem(a, b);
        a = std::move(b);
        b = bzero(r) ? BPoly{} : bprimitive(r);
    }
    // reattach the content gcd
    return bmul_coeff(a, cg);
}

MPoly squarefree_bivar(const MPoly& p, int main, int coeffv) {
    if (p.is_zero()) throw std::domain_error("squarefree of zero polynomial");
    BPoly a = to_bivar(p, main, coeffv);
    UPoly cont = bcontent(a);
    BPoly prim = bprimitive(a);
    UPoly cont_sf = cont.degree() >= 1 ? squarefree_part(cont) : UPoly::constant(1);
    BPoly prim_sf;
    if (bdeg(prim) >= 1) {
        BPoly g = bivar_gcd(prim, bderivative(prim));
        prim_sf = bdeg(g) >= 1 || (!bzero(g) && g[0].degree() >= 1) ? bprimitive(bdivexact(prim, g))
                                                                    : prim;
    } else {
        // polynomial is univariate in coeffv after content extraction
        prim_sf = {UPoly::constant(1)};
    }
    MPoly out = from_bivar(bmul_coeff(prim_sf, cont_sf), p.nvars(), main, coeffv);
    // normalize integer content and sign
    Int c = mpoly_content(out);
    if (!out.terms().empty() && out.terms().rbegin()->second < 0) c = -c;
    if (c != 1 && c != 0) {
        MPoly norm(p.nvars());
        for (auto& [e, v] : out.terms()) norm.add_term(e, v / c);
        out = norm;
    }
    return out;
}

MPoly squarefree_reduce(const MPoly& p) {
    if (p.is_zero()) return p;
    auto uv = used_vars(p);
    if (uv.empty()) return MPoly::constant(p.nvars(), Int(1));
    if (uv.size() == 1) {
        UPoly u = squarefree_part(to_upoly(p, uv[0]));
        return from_upoly(u, p.nvars(), uv[0]);
    }
    if (uv.size() == 2) return squarefree_bivar(p, uv[0], uv[1]);
    Int c = mpoly_content(p);
    if (!p.terms().empty() && p.terms().rbegin()->second < 0) c = -c;
    MPoly out(p.nvars());
    for (auto& [e, v] : p.terms()) out.add_term(e, v / c);
    return out;
}

std::vector<MPoly> subresultant_coeffs(const MPoly& P, const MPoly& Q, int main, long j) {
    const int nring = P.nvars();
    long p = P.degree_in(main), q = Q.degree_in(main);
    if (p < 0 || q < 0) throw std::invalid_argument("subresultant of zero polynomial");
    if (j >= std::min(p, q)) throw std::invalid_argument("subresultant index too large");
    // coefficient extraction w.r.t. main
    auto coefs = [&](const MPoly& F, long degF) {
        std::vector<MPoly> c(static_cast<std::size_t>(degF) + 1, MPoly(nring));
        for (auto& [e, v] : F.terms()) {
            Expt e2 = e;
            std::uint32_t d = e2[main];
            e2[main] = 0;
            c[d].add_term(e2, v);
        }
        return c;
    };
    auto a = coefs(P, p), b = coefs(Q, q);
    const long rows = p + q - 2 * j;
    const long colsq = p + q - 2 * j - 1; // leading block columns (powers p+q-j-1 .. j+1)
    auto entry = [&](long r, long power) -> MPoly {
        // row r: for r < q-j, y^{q-j-1-r} * P; else y^{p-j-1-(r-(q-j))} * Q
        if (r < q - j) {
            long t = q - j - 1 - r;
            long idx = power - t;
            if (idx < 0 || idx > p) return MPoly(nring);
            return a[static_cast<std::size_t>(idx)];
        }
        long t = p - j - 1 - (r - (q - j));
        long idx = power - t;
        if (idx < 0 || idx > q) return MPoly(nring);
        return b[static_cast<std::size_t>(idx)];
    };
    std::vector<MPoly> out;
    for (long l = 0; l <= j; ++l) {
        std::vector<std::vector<MPoly>> M(static_cast<std::size_t>(rows));
        for (long r = 0; r < rows; ++r) {
            for (long c = 0; c < colsq; ++c) M[static_cast<std::size_t>(r)].push_back(entry(r, p + q - j - 1 - c));
            M[static_cast<std::size_t>(r)].push_back(entry(r, l));
        }
        std::vector<long> bounds(static_cast<std::size_t>(nring), 0);
        for (long r = 0; r < rows; ++r) {
            for (int v = 0; v < nring; ++v) {
                long mx = 0;
                for (auto& e : M[static_cast<std::size_t>(r)]) mx = std::max(mx, e.degree_in(v));
                bounds[static_cast<std::size_t>(v)] += std::max<long>(mx, 0);
            }
        }
        out.push_back(det_interpolated(M, nring, bounds));
    }
    return out;
}

MPoly resultant_wrt(const MPoly& P, const MPoly& Q, int main) {
    const int nring = P.nvars();
    long p = P.degree_in(main), q = Q.degree_in(main);
    if (p <= 0 && q <= 0) throw std::invalid_argument("resultant_wrt: both constant in main");
    if (p < 0 || q < 0) return MPoly(nring); // resultant with zero polynomial
    // Sylvester matrix
    auto coefs = [&](const MPoly& F, long degF) {
        std::vector<MPoly> c(static_cast<std::size_t>(degF) + 1, MPoly(nring));
        for (auto& [e, v] : F.terms()) {
            Expt e2 = e;
            std::uint32_t d = e2[main];
            e2[main] = 0;
            c[d].add_term(e2, v);
        }
        return c;
    };
    auto a = coefs(P, p), b = coefs(Q, q);
    const long n = p + q;
    if (n == 0) return MPoly::constant(nring, Int(1));
    std::vector<std::vector<MPoly>> M(static_cast<std::size_t>(n),
                                      std::vector<MPoly>(static_cast<std::size_t>(n), MPoly(nring)));
    for (long r = 0; r < q; ++r)
        for (long i = 0; i <= p; ++i) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + p - i)] = a[static_cast<std::size_t>(i)];
    for (long r = 0; r < p; ++r)
        for (long i = 0; i <= q; ++i) M[static_cast<std::size_t>(q + r)][static_cast<std::size_t>(r + q - i)] = b[static_cast<std::size_t>(i)];
    std::vector<long> bounds(static_cast<std::size_t>(nring), 0);
    for (auto& row : M) {
        for (int v = 0; v < nring; ++v) {
            long mx = 0;
            for (auto& e : row) mx = std::max(mx, e.degree_in(v));
            bounds[static_cast<std::size_t>(v)] += std::max<long>(mx, 0);
        }
    }
    return det_interpolated(M, nring, bounds);
}

} // namespace gcv
