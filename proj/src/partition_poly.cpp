#include "apartition/partition_poly.hpp"

#include <stdexcept>

namespace apartition {

PolySequence build_sequence(const IntegerMultiset& a, std::size_t upto) {
    PolySequence s;
    s.multiset = a;
    s.upto = upto;
    s.degenerate = a.multiplicity(1) == 0;
    s.f.resize(upto + 1);
    s.f[0] = Polynomial(Rational(1));
    if (upto == 0) return s;

    // Elements above upto cannot divide any j <= upto, so the truncated
    // multiset has the same sigma table and the same f[0..upto].
    IntegerMultiset finite = a.truncate(upto);
    s.sigma.resize(upto);
    for (std::size_t j = 1; j <= upto; ++j) s.sigma[j - 1] = finite.sigma(j);

    for (std::size_t n = 1; n <= upto; ++n) {
        std::vector<Rational> acc(n, Rational(0));  // sum_j sigma(j) f[n-j], degree < n
        for (std::size_t j = 1; j <= n; ++j) {
            if (s.sigma[j - 1] == 0) continue;
            Rational w(static_cast<unsigned long>(s.sigma[j - 1]));
            const auto& prev = s.f[n - j].coefficients();
            for (std::size_t i = 0; i < prev.size(); ++i) acc[i] += w * prev[i];
        }
        std::vector<Rational> out(n + 1, Rational(0));
        Rational inv_n(1, static_cast<unsigned long>(n));
        for (std::size_t i = 0; i < n; ++i) out[i + 1] = acc[i] * inv_n;
        s.f[n] = Polynomial::from_coefficients(std::move(out));
    }
    return s;
}

std::vector<Polynomial> derivative_sequence(const PolySequence& s) {
    std::vector<Polynomial> g(s.upto + 1);
    for (std::size_t n = 1; n <= s.upto; ++n) {
        std::vector<Rational> acc(n, Rational(0));
        for (std::size_t j = 1; j <= n; ++j) {
            if (s.sigma[j - 1] == 0) continue;
            Rational w(static_cast<unsigned long>(s.sigma[j - 1]), static_cast<unsigned long>(j));
            w.canonicalize();
            const auto& prev = s.f[n - j].coefficients();
            for (std::size_t i = 0; i < prev.size(); ++i) acc[i] += w * prev[i];
        }
        g[n] = Polynomial::from_coefficients(std::move(acc));
    }
    return g;
}

Polynomial delta(const PolySequence& s, std::size_t n) {
    if (n + 1 > s.upto) throw std::out_of_range("delta: n+1 exceeds the built range");
    return s.f[n + 1] - s.f[n];
}

Polynomial closed_form_singleton(std::size_t n) {
    Polynomial p(Rational(1));
    for (std::size_t i = 0; i < n; ++i) p = p * Polynomial::from_coefficients({Rational(static_cast<unsigned long>(i)), Rational(1)});
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    return p.scaled(make_rational(1, fact));
}

std::vector<Integer> stirling_coefficients(std::size_t n) {
    // Rising factorial product, kept in integers.
    std::vector<Integer> c{1};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> next(c.size() + 1);
        for (std::size_t d = 0; d < c.size(); ++d) {
            next[d] += c[d] * static_cast<unsigned long>(i);
            next[d + 1] += c[d];
        }
        c = std::move(next);
    }
    return c;
}

Integer evaluate_colored(const PolySequence& s, std::size_t n, std::uint64_t k) {
    if (n > s.upto) throw std::out_of_range("evaluate_colored: n exceeds the built range");
    Rational v = s.f[n](Rational(static_cast<unsigned long>(k)));
    if (!is_integral(v) || v < 0)
        throw std::logic_error("internal arithmetic fault: colored count " + fraction_string(v) +
                               " is not a non-negative integer");
    return v.get_num();
}

}  // namespace apartition
