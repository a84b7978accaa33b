#include "gcv/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gcv {

Int attained_degree_bound(long n, long d, long r, long s) {
    if (n < 0 || d < 1 || r < 0 || s < 0) throw std::invalid_argument("attained_degree_bound");
    long top = std::min(r + s, n);
    Int best = 0;
    for (long i = 0; i <= top; ++i) {
        // 0^0 = 1 convention covers d = 1 at i = n
        Int term = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)) *
                   ipow(Int(d), static_cast<unsigned long>(i)) *
                   ipow(Int(d - 1), static_cast<unsigned long>(n - i));
        best = std::max(best, term);
    }
    return best;
}

Int attained_degree_cap(long n, long d) {
    return ipow(Int(2), static_cast<unsigned long>(std::max<long>(n - 1, 0))) *
           ipow(Int(d), static_cast<unsigned long>(n));
}

Rat log2_upper(const Int& x, unsigned prec_bits) {
    if (x < 1) throw std::invalid_argument("log2_upper: need x >= 1");
    if (x == 1) return Rat(0);
    // exact when x is a power of two
    if (mpz_popcount(x.get_mpz_t()) == 1)
        return Rat(static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)) - 1);
    Int p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), 1ul << prec_bits);
    // ceil(log2 p) for non-power-of-two p is its bit length
    long k = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 2));
    if (mpz_popcount(p.get_mpz_t()) == 1) k -= 1;
    return make_rat(Int(k), Int(1) << prec_bits);
}

AttainedValueBound attained_value_log_bound(long n, long d, const Int& H, long r, long s) {
    if (H < 1 || d < 1 || n < 1) throw std::invalid_argument("attained_value_log_bound");
    AttainedValueBound out;
    out.Htilde = std::max(H, Int(n + r + s));
    // log2 bound = -n 2^n d^n (5 - n/2 + log2 Htilde + n log2 d)
    Int factor = Int(n) * ipow(Int(2), static_cast<unsigned long>(n)) *
                 ipow(Int(d), static_cast<unsigned long>(n));
    bool h_pow2 = mpz_popcount(out.Htilde.get_mpz_t()) == 1;
    bool d_pow2 = mpz_popcount(Int(d).get_mpz_t()) == 1;
    out.exact = h_pow2 && d_pow2;
    Rat bracket = Rat(5) - make_rat(Int(n), Int(2)) + log2_upper(out.Htilde) +
                  Rat(n) * log2_upper(Int(d));
    out.log2_lower = -Rat(factor) * bracket;
    std::ostringstream os;
    os << "-(" << n << " * 2^" << n << " * " << d << "^" << n << ") * (5 - " << n
       << "/2 + log2(" << out.Htilde.get_str() << ") + " << n << "*log2(" << d << "))";
    out.expression = os.str();
    return out;
}

BoundReport unconstrained_bounds(long n, long d, long tau) {
    BoundReport rep;
    rep.scenario = "unconstrained";
    rep.degree_bound = ipow(Int(d), static_cast<unsigned long>(std::max<long>(n - 1, 0)));
    rep.eta = Rat(Int(n) * rep.degree_bound * tau + Int(n) * n);
    rep.eta_formula = "n*d^(n-1)*tau + n^2";
    rep.asymptotic = true;
    return rep;
}

BoundReport newton_bounds(long n, long d, long tau) {
    BoundReport rep;
    rep.scenario = "newton";
    rep.degree_bound = ipow(Int(d), static_cast<unsigned long>(std::max<long>(n - 1, 0)));
    rep.eta = Rat(Int(n) * n * rep.degree_bound * (n + tau));
    rep.eta_formula = "n^2*d^(n-1)*(n + tau)";
    rep.asymptotic = true;
    return rep;
}

BoundReport constrained_bounds(long n, long d, long d1, long tau, long r) {
    if (r == 0) return unconstrained_bounds(n, d, tau);
    BoundReport rep;
    rep.scenario = "constrained";
    Int base = Int(n) * r * d1;
    rep.degree_bound = ipow(base, static_cast<unsigned long>(n * n));
    rep.eta = Rat((Int(r) * (d + n + tau) + d1) * rep.degree_bound);
    rep.eta_formula = "(r*(d + n + tau) + d1) * (n*r*d1)^(n^2)";
    rep.asymptotic = true;
    return rep;
}

Rat hyperplane_success_probability(const Int& D, const Int& S_size) {
    if (S_size <= 0) throw std::invalid_argument("hyperplane_success_probability: |S| > 0");
    Rat p = Rat(1) - make_rat(D, S_size);
    if (p < 0) return Rat(0);
    return p;
}

} // namespace gcv
