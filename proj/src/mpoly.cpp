#include "gcv/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace gcv {

MPoly MPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::out_of_range("derivative: variable index");
    MPoly r(nvars_);
    for (auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expt d = e;
        d[var] -= 1;
        r.terms_.emplace(std::move(d), c * Int(e[var]));
    }
    return r;
}

Int MPoly::eval(std::span<const Int> point) const {
    // cache powers per variable up to the degree that actually occurs
    std::vector<std::vector<Int>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) pows[i].push_back(Int(1));
    Int acc = 0, t;
    for (auto& [e, c] : terms_) {
        t = c;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            auto& pw = pows[i];
            while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
            t *= pw[e[i]];
        }
        acc += t;
    }
    return acc;
}

Rat MPoly::eval(std::span<const Rat> point) const {
    std::vector<std::vector<Rat>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) pows[i].push_back(Rat(1));
    Rat acc = 0, t;
    for (auto& [e, c] : terms_) {
        t = Rat(c);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            auto& pw = pows[i];
            while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
            t *= pw[e[i]];
        }
        acc += t;
    }
    return acc;
}

MPoly MPoly::eval_partial(const std::vector<int>& vars, const std::vector<Int>& values) const {
    std::vector<long> which(nvars_, -1);
    for (std::size_t k = 0; k < vars.size(); ++k) which[vars[k]] = static_cast<long>(k);
    MPoly r(nvars_);
    Expt e2(nvars_);
    for (auto& [e, c] : terms_) {
        Int t = c;
        for (int i = 0; i < nvars_; ++i) {
            if (which[i] >= 0) {
                e2[i] = 0;
                if (e[i] > 0) t *= ipow(values[which[i]], e[i]);
            } else {
                e2[i] = e[i];
            }
        }
        r.add_term(e2, t);
    }
    return r;
}

MPoly MPoly::remap(int new_nvars, const std::vector<int>& var_map) const {
    MPoly r(new_nvars);
    Expt e2(new_nvars);
    for (auto& [e, c] : terms_) {
        std::fill(e2.begin(), e2.end(), 0);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (var_map[i] < 0) throw std::invalid_argument("remap drops a used variable");
            e2[var_map[i]] += e[i];
        }
        r.add_term(e2, c);
    }
    return r;
}

std::string MPoly::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // print highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (a != 1 || expt_degree(e) == 0) {
            out << a.get_str();
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) out << "*";
            out << names[i];
            if (e[i] > 1) out << "^" << e[i];
            printed = true;
        }
    }
    return out.str();
}

Int mpoly_content(const MPoly& p) {
    Int g = 0;
    for (auto& [e, c] : p.terms()) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

MPoly mpoly_divexact(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    MPoly rem = num;
    MPoly quot(num.nvars());
    const auto& dlt = *den.terms().rbegin(); // leading term in graded lex
    Expt e(num.nvars());
    while (!rem.is_zero()) {
        const auto& rlt = *rem.terms().rbegin();
        bool ok = true;
        for (int i = 0; i < num.nvars(); ++i) {
            if (rlt.first[i] < dlt.first[i]) { ok = false; break; }
            e[i] = rlt.first[i] - dlt.first[i];
        }
        Int q, r;
        if (ok) {
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rlt.second.get_mpz_t(), dlt.second.get_mpz_t());
            if (r != 0) ok = false;
        }
        if (!ok) throw std::domain_error("polynomial division is not exact");
        MPoly t = MPoly::monomial(num.nvars(), e, q);
        quot += t;
        rem -= t * den;
    }
    return quot;
}

} // namespace gcv
