#ifndef GCV_MPOLY_HPP
#define GCV_MPOLY_HPP

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcv/integer.hpp"

namespace gcv {

using Expt = std::vector<std::uint32_t>;

inline std::uint64_t expt_degree(const Expt& e) {
    std::uint64_t s = 0;
    for (auto v : e) s += v;
    return s;
}

// graded lexicographic, the canonical term order for printing and iteration
struct GradedLex {
    bool operator()(const Expt& a, const Expt& b) const {
        std::uint64_t da = expt_degree(a), db = expt_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial over arbitrary-precision integers.
// Invariants: no stored coefficient is zero; all exponent vectors have
// length nvars(); the zero polynomial has an empty term map.
class MPoly {
  public:
    using TermMap = std::map<Expt, Int, GradedLex>;

    explicit MPoly(int nvars = 0) : nvars_(nvars) {}

    static MPoly zero(int nvars) { return MPoly(nvars); }

    static MPoly constant(int nvars, Int c) {
        MPoly p(nvars);
        if (c != 0) p.terms_.emplace(Expt(nvars, 0), std::move(c));
        return p;
    }

    static MPoly monomial(int nvars, Expt e, Int c) {
        MPoly p(nvars);
        if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("monomial: exponent length");
        if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    static MPoly variable(int nvars, int i, std::uint32_t power = 1) {
        Expt e(nvars, 0);
        e[i] = power;
        return monomial(nvars, std::move(e), Int(1));
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && expt_degree(terms_.begin()->first) == 0);
    }

    Int constant_value() const {
        auto it = terms_.find(Expt(nvars_, 0));
        return it == terms_.end() ? Int(0) : it->second;
    }

    // max coordinate-sum over stored exponents; -1 for the zero polynomial
    long total_degree() const {
        if (terms_.empty()) return -1;
        return static_cast<long>(expt_degree(terms_.rbegin()->first));
    }

    long degree_in(int var) const {
        long d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[var]));
        return terms_.empty() ? -1 : d;
    }

    Int coeff(const Expt& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Expt& e, const Int& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(nvars_);
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    MPoly& operator+=(const MPoly& o) {
        check_vars(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MPoly& operator-=(const MPoly& o) {
        check_vars(o);
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_vars(b);
        MPoly r(a.nvars_);
        Expt e(a.nvars_);
        for (auto& [ea, ca] : a.terms_) {
            for (auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend MPoly operator*(const MPoly& a, const Int& k) {
        MPoly r(a.nvars_);
        if (k == 0) return r;
        for (auto& [e, c] : a.terms_) r.terms_.emplace(e, c * k);
        return r;
    }
    friend MPoly operator*(const Int& k, const MPoly& a) { return a * k; }

    MPoly pow(unsigned e) const {
        MPoly r = constant(nvars_, 1);
        MPoly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly derivative(int var) const;

    // exact evaluation at integer points (all variables)
    Int eval(std::span<const Int> point) const;
    Rat eval(std::span<const Rat> point) const;

    // substitute integers for a subset of variables, keeping the others
    MPoly eval_partial(const std::vector<int>& vars, const std::vector<Int>& values) const;

    // ceil(lg(1 + max |coeff|)), 0 for the zero polynomial
    long bitsize() const {
        Int m = 0;
        for (auto& [e, c] : terms_)
            if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
        return bit_size(m);
    }

    Int infinity_norm() const {
        Int m = 0;
        for (auto& [e, c] : terms_)
            if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
        return m;
    }

    std::vector<Expt> support() const {
        std::vector<Expt> s;
        s.reserve(terms_.size());
        for (auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

    // remap variables into a ring with new_nvars variables; var_map[i] gives the
    // new index of old variable i
    MPoly remap(int new_nvars, const std::vector<int>& var_map) const;

    std::string to_string(std::span<const std::string> names) const;

  private:
    void check_vars(const MPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
    }

    int nvars_;
    TermMap terms_;
};

// content of the coefficient list (gcd of all coefficients), 0 for zero poly
Int mpoly_content(const MPoly& p);

// exact division; throws std::domain_error when the division is not exact
MPoly mpoly_divexact(const MPoly& num, const MPoly& den);

} // namespace gcv

#endif
