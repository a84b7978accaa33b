#include "gcv/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace gcv {

UPoly UPoly::from_roots(std::span<const Int> roots) {
    UPoly p = UPoly::constant(1);
    for (const auto& r : roots) p = p * UPoly({-r, Int(1)});
    return p;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const Int& k) {
    if (k == 0) return UPoly();
    std::vector<Int> c = a.c_;
    for (auto& v : c) v *= k;
    return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
    std::vector<Int> c = c_;
    for (auto& v : c) v = -v;
    return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Int> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(static_cast<unsigned long>(i));
    return UPoly(std::move(c));
}

UPoly UPoly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Int> c(c_.size() + k, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return UPoly(std::move(c));
}

Int UPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat UPoly::eval(const Rat& x) const {
    // Horner with cleared denominators: p(n/d) * d^deg is integral
    if (c_.empty()) return Rat(0);
    const Int n = x.get_num(), d = x.get_den();
    Int acc = 0, dpow = 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * n + (*it) * dpow;
        if (it + 1 != c_.rend()) dpow *= d;
    }
    return make_rat(acc, ipow(d, static_cast<unsigned long>(degree())));
}

Int UPoly::content() const {
    Int g = 0;
    for (auto& v : c_) {
        g = gcd(g, v);
        if (g == 1) break;
    }
    if (!c_.empty() && c_.back() < 0) g = -g;
    return g;
}

UPoly UPoly::primitive_part() const {
    if (is_zero()) return UPoly();
    Int g = content();
    std::vector<Int> c = c_;
    for (auto& v : c) v /= g;
    return UPoly(std::move(c));
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Int& v = c_[i];
        if (v == 0) continue;
        Int a = abs(v);
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) out << a.get_str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

namespace {

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, exact over Z
UPoly pseudo_rem(UPoly a, const UPoly& b) {
    long db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        long k = a.degree() - db;
        UPoly t = (b * a.leading()).shifted_up(static_cast<std::size_t>(k));
        a = a * b.leading() - t;
    }
    return a;
}

} // namespace

UPoly upoly_gcd(UPoly a, UPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        UPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? UPoly() : r.primitive_part();
    }
    return a.leading() < 0 ? -a : a;
}

UPoly upoly_divexact(const UPoly& num, const UPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return UPoly();
    long dq = num.degree() - den.degree();
    if (dq < 0) throw std::domain_error("division is not exact");
    std::vector<Int> q(static_cast<std::size_t>(dq) + 1, Int(0));
    UPoly rem = num;
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        long k = rem.degree() - den.degree();
        Int qq, rr;
        mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), rem.leading().get_mpz_t(), den.leading().get_mpz_t());
        if (rr != 0) throw std::domain_error("division is not exact");
        q[static_cast<std::size_t>(k)] = qq;
        rem = rem - (den * qq).shifted_up(static_cast<std::size_t>(k));
    }
    if (!rem.is_zero()) throw std::domain_error("division is not exact");
    return UPoly(std::move(q));
}

UPoly squarefree_part(const UPoly& u) {
    if (u.is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
    UPoly p = u.primitive_part();
    if (p.degree() == 0) return UPoly::constant(1);
    UPoly g = upoly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return upoly_divexact(p, g).primitive_part();
}

Int upoly_resultant(UPoly a, UPoly b) {
    // subresultant PRS, standard bookkeeping of the deficiency factors
    if (a.is_zero() || b.is_zero()) return Int(0);
    if (a.degree() == 0) return ipow(a.leading(), static_cast<unsigned long>(b.degree()));
    if (b.degree() == 0) return ipow(b.leading(), static_cast<unsigned long>(a.degree()));
    Int sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -1;
        std::swap(a, b);
    }
    Int g = 1, h = 1;
    while (true) {
        long da = a.degree(), db = b.degree();
        long d = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        UPoly r = pseudo_rem(a, b);
        if (r.is_zero()) {
            if (b.degree() > 0) return Int(0);
            // b is a constant: finish with the standard closing rule
            break;
        }
        // divide by g*h^d
        Int divisor = g * ipow(h, static_cast<unsigned long>(d));
        std::vector<Int> rc = r.coeffs();
        for (auto& v : rc) v /= divisor;
        a = std::move(b);
        b = UPoly(std::move(rc));
        g = a.leading();
        // h = h^{1-d} g^d
        Int gd = ipow(g, static_cast<unsigned long>(d));
        if (d == 0) {
            // h unchanged times g^0: h stays but pseudo-division with d=0 is rare
        } else if (d == 1) {
            h = gd;
        } else {
            h = gd / ipow(h, static_cast<unsigned long>(d - 1));
        }
        if (b.degree() == 0) break;
    }
    // closing: res = sign * lc(b)^{deg a} / h^{deg a - 1}, with subresultant scaling
    long da = a.degree();
    Int lb = b.leading();
    Int num = ipow(lb, static_cast<unsigned long>(da));
    Int den = (da >= 1) ? ipow(h, static_cast<unsigned long>(da - 1)) : Int(1);
    return sign * (num / den);
}

} // namespace gcv
