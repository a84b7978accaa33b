#ifndef GCV_UPOLY_HPP
#define GCV_UPOLY_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcv/integer.hpp"

namespace gcv {

// Dense univariate polynomial over Z, coefficients low degree first.
// Invariant: leading coefficient nonzero unless the polynomial is zero.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly constant(Int v) { return UPoly({std::move(v)}); }
    static UPoly from_roots(std::span<const Int> roots); // prod (x - r)

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& operator[](std::size_t i) const { return c_[i]; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& leading() const { return c_.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const Int& k);
    UPoly operator-() const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly derivative() const;
    UPoly shifted_up(std::size_t k) const; // multiply by x^k

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const { return sign_of(eval(x)); }

    Int content() const;            // gcd of coefficients, sign of leading coeff
    UPoly primitive_part() const;   // divided by content; leading coeff > 0

    long bitsize() const {
        Int m = 0;
        for (auto& v : c_)
            if (mpz_cmpabs(v.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(v);
        return bit_size(m);
    }

    std::string to_string(const std::string& var = "z") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

// pseudo-remainder based gcd over Z (primitive PRS); result is primitive with
// positive leading coefficient, gcd(0, b) = primitive(b)
UPoly upoly_gcd(UPoly a, UPoly b);

// exact division; throws when not exact
UPoly upoly_divexact(const UPoly& num, const UPoly& den);

// product of distinct irreducible factors: u / gcd(u, u'), content removed
UPoly squarefree_part(const UPoly& u);

// resultant of two univariate polynomials over Z via the subresultant PRS
Int upoly_resultant(UPoly a, UPoly b);

} // namespace gcv

#endif
