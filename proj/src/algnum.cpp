#include "gcv/algnum.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcv {

namespace {

int sign_variations(const std::vector<Int>& c) {
    int v = 0, last = 0;
    for (const auto& x : c) {
        int s = sign_of(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// p(x+1), exact integer Taylor shift
std::vector<Int> taylor_shift_1(std::vector<Int> c) {
    const std::size_t n = c.size();
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = n - 1; j >= i; --j) c[j - 1] += c[j];
    return c;
}

// number of sign variations of (1+x)^d p(1/(1+x)): bound for roots of p in (0,1)
int descartes_01(const std::vector<Int>& c) {
    std::vector<Int> r(c.rbegin(), c.rend());
    return sign_variations(taylor_shift_1(std::move(r)));
}

struct IsolationJob {
    std::vector<Int> poly; // polynomial for the normalized interval (0,1)
    Rat a, b;              // actual interval endpoints
};

// roots of u in the open interval (a, b) where job.poly is u pulled back to (0,1)
void isolate01(const UPoly& u, IsolationJob job, std::vector<AlgebraicNumber>& out) {
    int v = descartes_01(job.poly);
    if (v == 0) return;
    if (v == 1) {
        AlgebraicNumber r;
        r.defining = u;
        r.lo = job.a;
        r.hi = job.b;
        out.push_back(std::move(r));
        return;
    }
    const std::size_t d = job.poly.size() - 1;
    // left child: 2^d p(x/2); right child: left shifted by 1
    std::vector<Int> left(job.poly);
    for (std::size_t i = 0; i <= d; ++i) left[i] <<= (d - i);
    std::vector<Int> right = taylor_shift_1(left);
    Rat mid = (job.a + job.b) / 2;
    if (right[0] == 0) { // exact root at the midpoint
        AlgebraicNumber r;
        r.defining = u;
        r.lo = r.hi = mid;
        out.push_back(std::move(r));
    }
    isolate01(u, IsolationJob{std::move(left), job.a, mid}, out);
    isolate01(u, IsolationJob{std::move(right), mid, job.b}, out);
}

// sign of the squarefree polynomial p just inside the interval at endpoint pt;
// if pt itself is a (necessarily different, simple) root, the derivative decides
int sign_just_inside(const UPoly& p, const Rat& pt, bool from_right) {
    int s = p.sign_at(pt);
    if (s != 0) return s;
    int sd = p.derivative().sign_at(pt);
    return from_right ? sd : -sd;
}

// mediant walk toward the root of a in its interval; returns true when a
// rational root with a short continued fraction was found and snapped
bool try_snap_rational(AlgebraicNumber& a, int max_steps = 160) {
    if (a.is_exact()) return true;
    const UPoly& f = a.defining;
    int slo = sign_just_inside(f, a.lo, true);
    // Stern-Brocot walk on (p1/q1, p2/q2) bracketing the root
    Int p1 = a.lo.get_num(), q1 = a.lo.get_den();
    Int p2 = a.hi.get_num(), q2 = a.hi.get_den();
    for (int i = 0; i < max_steps; ++i) {
        Rat m = make_rat(p1 + p2, q1 + q2);
        int sm = f.sign_at(m);
        if (sm == 0) {
            a.lo = a.hi = m;
            return true;
        }
        if (sm == slo) {
            p1 = m.get_num();
            q1 = m.get_den();
        } else {
            p2 = m.get_num();
            q2 = m.get_den();
        }
    }
    return false;
}

// move interval endpoints off other roots of the defining polynomial, so that
// downstream sign tests can rely on defining(lo) != 0 != defining(hi)
void detach_root_endpoints(AlgebraicNumber& a) {
    if (a.is_exact()) return;
    const UPoly& f = a.defining;
    for (bool low : {true, false}) {
        Rat& end = low ? a.lo : a.hi;
        if (f.sign_at(end) != 0) continue;
        int sigma = sign_just_inside(f, end, low);
        Rat step = (a.hi - a.lo) / 4;
        while (true) {
            Rat t = low ? Rat(a.lo + step) : Rat(a.hi - step);
            int st = f.sign_at(t);
            if (st == 0) { // landed on the isolated root itself
                a.lo = a.hi = t;
                return;
            }
            if (st == sigma) {
                end = t;
                break;
            }
            step /= 2;
        }
    }
}

} // namespace

std::vector<AlgebraicNumber> isolate_real_roots(const UPoly& u0) {
    if (u0.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    UPoly u = squarefree_part(u0);
    std::vector<AlgebraicNumber> out;
    if (u.degree() <= 0) return out;

    // split off a root at the origin
    if (u.coeff(0) == 0) {
        std::vector<Int> c(u.coeffs().begin() + 1, u.coeffs().end());
        u = UPoly(std::move(c));
        AlgebraicNumber z;
        z.defining = UPoly({Int(0), Int(1)});
        z.lo = z.hi = Rat(0);
        out.push_back(std::move(z));
    }
    if (u.degree() >= 1) {
        // Cauchy bound 1 + max|a_i| / |lc|, rounded up to a power of two
        Int mx = 0;
        for (auto& c : u.coeffs())
            if (mpz_cmpabs(c.get_mpz_t(), mx.get_mpz_t()) > 0) mx = abs(c);
        long k = bit_size(mx) - bit_size(abs(u.leading())) + 2;
        if (k < 1) k = 1;
        Int bound = Int(1) << static_cast<unsigned long>(k);

        // positive roots: map (0,1) -> (0,B) via q(x) = u(Bx)
        auto scaled = [&](const UPoly& p, const Int& B) {
            std::vector<Int> c = p.coeffs();
            Int pw = 1;
            for (auto& v : c) {
                v *= pw;
                pw *= B;
            }
            return c;
        };
        isolate01(u, IsolationJob{scaled(u, bound), Rat(0), Rat(bound)}, out);
        // negative roots via u(-x)
        std::vector<Int> neg = u.coeffs();
        for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
        UPoly un(std::move(neg));
        std::vector<AlgebraicNumber> negroots;
        isolate01(u, IsolationJob{scaled(un, bound), Rat(0), Rat(bound)}, negroots);
        for (auto& r : negroots) {
            Rat lo = -r.hi, hi = -r.lo;
            r.lo = lo;
            r.hi = hi;
            out.push_back(std::move(r));
        }
    }
    for (auto& r : out) {
        detach_root_endpoints(r);
        try_snap_rational(r);
    }
    std::sort(out.begin(), out.end(), [](const AlgebraicNumber& x, const AlgebraicNumber& y) {
        return x.lo + x.hi < y.lo + y.hi;
    });
    return out;
}

void refine_step(AlgebraicNumber& a) {
    if (a.is_exact()) return;
    Rat mid = (a.lo + a.hi) / 2;
    int sm = a.defining.sign_at(mid);
    if (sm == 0) {
        a.lo = a.hi = mid;
        return;
    }
    int slo = sign_just_inside(a.defining, a.lo, true);
    if (sm == slo)
        a.lo = mid;
    else
        a.hi = mid;
}

AlgebraicNumber refine(AlgebraicNumber a, unsigned bits) {
    Rat eps = make_rat(Int(1), Int(1) << bits);
    while (!a.is_exact() && a.hi - a.lo > eps) refine_step(a);
    return a;
}

int sign_at(const AlgebraicNumber& a, const UPoly& u) {
    if (u.is_zero()) return 0;
    if (a.is_exact()) return u.sign_at(a.lo);
    UPoly g = upoly_gcd(a.defining, u);
    if (g.degree() >= 1) {
        // the root of a is a root of u iff g changes sign across the open interval
        int s1 = sign_just_inside(g, a.lo, true), s2 = sign_just_inside(g, a.hi, false);
        if (s1 != s2) return 0;
    }
    // separate a from every root of u, then the sign is constant on the interval
    AlgebraicNumber b = a;
    auto uroots = isolate_real_roots(u);
    for (auto& r : uroots) {
        while (!(b.hi < r.lo || r.hi < b.lo)) {
            if (b.is_exact() && r.is_exact()) break; // distinct exact rationals cannot overlap
            refine_step(b);
            refine_step(r);
        }
    }
    return u.sign_at(b.is_exact() ? b.lo : (b.lo + b.hi) / 2);
}

int compare_rat(const AlgebraicNumber& a, const Rat& r) {
    if (a.is_exact()) return a.lo < r ? -1 : (a.lo == r ? 0 : 1);
    if (a.defining.sign_at(r) == 0 && a.lo < r && r < a.hi) return 0;
    AlgebraicNumber b = a;
    while (b.lo < r && r < b.hi) {
        refine_step(b);
        if (b.is_exact()) return b.lo < r ? -1 : (b.lo == r ? 0 : 1);
    }
    if (b.hi <= r) return -1;
    return 1;
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_exact()) {
        int c = compare_rat(b, a.lo);
        return -c;
    }
    if (b.is_exact()) return compare_rat(a, b.lo);
    // equality iff a's root is a root of b.defining lying inside b's interval
    if (sign_at(a, b.defining) == 0) {
        AlgebraicNumber aa = a;
        while (true) {
            if (b.lo < aa.lo && aa.hi < b.hi) return 0;      // inside: same root
            if (aa.hi <= b.lo) return -1;                     // a's root left of b's interval
            if (aa.lo >= b.hi) return 1;
            if (aa.is_exact()) {
                if (b.lo < aa.lo && aa.lo < b.hi) return 0;
                return aa.lo <= b.lo ? -1 : 1;
            }
            refine_step(aa);
        }
    }
    AlgebraicNumber aa = a, bb = b;
    while (!(aa.hi < bb.lo || bb.hi < aa.lo)) {
        refine_step(aa);
        refine_step(bb);
        if (aa.is_exact() && bb.is_exact()) return aa.lo < bb.lo ? -1 : 1;
    }
    return aa.hi < bb.lo ? -1 : 1;
}

Rat simplest_rational_between(const Rat& a, const Rat& b) {
    if (!(a < b)) throw std::invalid_argument("simplest_rational_between: empty interval");
    // integer strictly inside?
    Int fa;
    mpz_fdiv_q(fa.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t()); // floor(a)
    Int n = fa + 1; // smallest integer > a
    if (Rat(n) < b) {
        // pick the integer of smallest absolute value in (a, b)
        if (n <= 0 && b > 0) {
            if (a < 0) return Rat(0);
        }
        if (n > 0) return Rat(n);
        // n <= 0 and b <= 0: largest integer below b
        Int cb;
        mpz_cdiv_q(cb.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t()); // ceil(b)
        Int m = cb - 1; // largest integer < b
        return Rat(m);
    }
    // a, b lie in [fa, fa+1): x = fa + 1/y with y in (1/(b-fa), 1/(a-fa))
    Rat a2 = 1 / (b - Rat(fa));
    if (a == Rat(fa)) {
        // lower bound is the integer itself: y ranges in (a2, infinity)
        Int y;
        mpz_fdiv_q(y.get_mpz_t(), a2.get_num_mpz_t(), a2.get_den_mpz_t());
        y += 1;
        if (Rat(y) == a2) y += 1;
        return Rat(fa) + make_rat(Int(1), y);
    }
    Rat b2 = 1 / (a - Rat(fa));
    Rat y = simplest_rational_between(a2, b2);
    return Rat(fa) + 1 / y;
}

std::vector<Rat> interlacing_rationals(std::vector<AlgebraicNumber> roots) {
    if (roots.empty()) return {Rat(0)};
    // refine until the intervals are pairwise strictly disjoint
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
        while (!(roots[i].hi < roots[i + 1].lo)) {
            bool progressed = false;
            if (!roots[i].is_exact()) { refine_step(roots[i]); progressed = true; }
            if (!roots[i + 1].is_exact()) { refine_step(roots[i + 1]); progressed = true; }
            if (!progressed)
                throw std::logic_error("interlacing_rationals: duplicate roots");
        }
    }
    std::vector<Rat> out;
    Int flo, chi;
    mpz_fdiv_q(flo.get_mpz_t(), roots.front().lo.get_num_mpz_t(), roots.front().lo.get_den_mpz_t());
    out.push_back(Rat(flo - 1));
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        out.push_back(simplest_rational_between(roots[i].hi, roots[i + 1].lo));
    mpz_cdiv_q(chi.get_mpz_t(), roots.back().hi.get_num_mpz_t(), roots.back().hi.get_den_mpz_t());
    out.push_back(Rat(chi + 1));
    return out;
}

std::vector<AlgebraicNumber> merge_root_sets(std::vector<AlgebraicNumber> a,
                                             const std::vector<AlgebraicNumber>& b) {
    for (const auto& x : b) {
        bool dup = false;
        for (const auto& y : a)
            if (alg_equal(x, y)) {
                dup = true;
                break;
            }
        if (!dup) a.push_back(x);
    }
    std::sort(a.begin(), a.end(),
              [](const AlgebraicNumber& x, const AlgebraicNumber& y) { return compare(x, y) < 0; });
    return a;
}

} // namespace gcv
