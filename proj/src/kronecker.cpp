#include "gcv/kronecker.hpp"

#include <stdexcept>

namespace gcv {

UPoly kronecker_substitute(const MPoly& p, const KroneckerMap& map) {
    if (static_cast<std::size_t>(p.nvars()) != map.caps.size())
        throw std::invalid_argument("kronecker_substitute: cap count != variable count");
    std::vector<Int> c(map.packed_degree_bound() + 1, Int(0));
    for (auto& [e, v] : p.terms()) {
        for (std::size_t i = 0; i < map.caps.size(); ++i)
            if (e[i] > map.caps[i]) throw std::domain_error("kronecker_substitute: degree cap violated");
        c[map.pack(e)] += v;
    }
    return UPoly(std::move(c));
}

MPoly kronecker_decode(const UPoly& u, const KroneckerMap& map) {
    MPoly p(static_cast<int>(map.caps.size()));
    for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
        if (u.coeffs()[k] == 0) continue;
        if (k > map.packed_degree_bound())
            throw std::domain_error("kronecker_decode: degree exceeds the packed bound");
        p.add_term(map.unpack(static_cast<unsigned long>(k)), u.coeffs()[k]);
    }
    return p;
}

} // namespace gcv
