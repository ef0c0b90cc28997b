#pragma once

#include "apartition/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace apartition {

// Dense univariate polynomial over the rationals, exact arithmetic only.
// coefficient(i) is the coefficient of x^i. Invariant: the highest stored
// coefficient is nonzero; the zero polynomial stores nothing (degree -1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational constant);
    static Polynomial x();
    static Polynomial from_coefficients(std::vector<Rational> coefficients);

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    const Rational& coefficient(std::size_t i) const;
    const std::vector<Rational>& coefficients() const { return coef_; }

    // Exact Horner evaluation.
    Rational operator()(const Rational& x0) const;

    Polynomial derivative() const;
    Polynomial times_x() const;
    Polynomial scaled(const Rational& c) const;
    // Substitutes x -> m*x by scaling coefficient i with m^i.
    Polynomial with_scaled_argument(const Rational& m) const;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

    bool operator==(const Polynomial& other) const { return coef_ == other.coef_; }

    // "1/2*x^2 + 3/2*x", highest degree first; "0" for the zero polynomial.
    std::string str() const;

private:
    std::vector<Rational> coef_;

    void normalize();
};

}  // namespace apartition
