#ifndef GCV_KRONECKER_HPP
#define GCV_KRONECKER_HPP

#include <vector>

#include "gcv/mpoly.hpp"
#include "gcv/upoly.hpp"

namespace gcv {

// Injective monomial packing: variable i maps to s^{stride_i} where
// stride_0 = 1 and stride_{i+1} = stride_i * (cap_i + 1). Decoding recovers
// the multivariate polynomial exactly as long as every per-variable degree
// stays within its cap.
struct KroneckerMap {
    std::vector<unsigned long> caps;
    std::vector<unsigned long> strides;

    explicit KroneckerMap(std::vector<unsigned long> degree_caps) : caps(std::move(degree_caps)) {
        strides.resize(caps.size());
        unsigned long st = 1;
        for (std::size_t i = 0; i < caps.size(); ++i) {
            strides[i] = st;
            st *= caps[i] + 1;
        }
        packed_bound_ = st; // exponents land in [0, packed_bound_)
    }

    unsigned long packed_degree_bound() const { return packed_bound_ - 1; }

    unsigned long pack(const Expt& e) const {
        unsigned long k = 0;
        for (std::size_t i = 0; i < caps.size(); ++i) k += strides[i] * e[i];
        return k;
    }

    Expt unpack(unsigned long k) const {
        Expt e(caps.size());
        for (std::size_t i = 0; i < caps.size(); ++i) {
            e[i] = static_cast<std::uint32_t>(k % (caps[i] + 1));
            k /= caps[i] + 1;
        }
        return e;
    }

  private:
    unsigned long packed_bound_ = 1;
};

// encode p under the map; throws when a per-variable degree cap is violated
UPoly kronecker_substitute(const MPoly& p, const KroneckerMap& map);

inline UPoly kronecker_substitute(const MPoly& p, std::vector<unsigned long> degree_caps) {
    return kronecker_substitute(p, KroneckerMap(std::move(degree_caps)));
}

MPoly kronecker_decode(const UPoly& u, const KroneckerMap& map);

} // namespace gcv

#endif
