#ifndef GCV_INTEGER_HPP
#define GCV_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace gcv {

using Int = mpz_class;
using Rat = mpq_class;

// ceil(lg(1 + |c|)); bit_size(0) == 0, bit_size(±1) == 1.
inline long bit_size(const Int& c) {
    if (c == 0) return 0;
    Int a = abs(c) + 1;
    long bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
    // mpz_sizeinbase(a,2) = floor(lg a)+1; ceil(lg a) equals that unless a is a power of two.
    if (mpz_popcount(a.get_mpz_t()) == 1) bits -= 1;
    return bits;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    if (k > n) return Int(0);
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int ipow(long base, unsigned long e) { return ipow(Int(base), e); }

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_from_string(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

} // namespace gcv

#endif
