#pragma once

#include "apartition/multiset.hpp"
#include "apartition/polynomial.hpp"
#include "apartition/rational.hpp"

#include <cstdint>
#include <vector>

namespace apartition::testing {

inline Rational rat(long num, long den = 1) { return make_rational(num, den); }

inline Polynomial poly(std::vector<Rational> coefficients) {
    return Polynomial::from_coefficients(std::move(coefficients));
}

inline IntegerMultiset ms(std::string_view spec) { return IntegerMultiset::parse(spec); }

// Independent recurrence for the unsigned Stirling numbers of the first
// kind: c(n, i) = c(n-1, i-1) + (n-1) c(n-1, i).
inline std::vector<std::vector<Integer>> stirling_table(std::size_t n_max) {
    std::vector<std::vector<Integer>> c(n_max + 1);
    c[0] = {Integer(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
        c[n].assign(n + 1, Integer(0));
        for (std::size_t i = 0; i <= n; ++i) {
            if (i > 0) c[n][i] += c[n - 1][i - 1];
            if (i < n) c[n][i] += c[n - 1][i] * static_cast<unsigned long>(n - 1);
        }
    }
    return c;
}

}  // namespace apartition::testing
