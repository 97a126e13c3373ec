#pragma once

#include <numeric>
#include <vector>

namespace mindeg {

// Exponent vector of a monomial in the homogeneous coordinates of a fixed
// projective space; length = ambient dimension + 1.
struct Monomial {
    std::vector<int> exponents;

    int total_degree() const {
        return std::accumulate(exponents.begin(), exponents.end(), 0);
    }

    Monomial operator*(const Monomial& o) const {
        Monomial p{exponents};
        for (std::size_t i = 0; i < exponents.size(); ++i) p.exponents[i] += o.exponents[i];
        return p;
    }

    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const { return exponents < o.exponents; }
};

}  // namespace mindeg
