#include "apartition/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace apartition {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(Rational constant) {
    if (constant != 0) coef_.push_back(std::move(constant));
}

Polynomial Polynomial::x() {
    Polynomial p;
    p.coef_ = {Rational(0), Rational(1)};
    return p;
}

Polynomial Polynomial::from_coefficients(std::vector<Rational> coefficients) {
    Polynomial p;
    p.coef_ = std::move(coefficients);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

const Rational& Polynomial::coefficient(std::size_t i) const {
    return i < coef_.size() ? coef_[i] : kZero;
}

Rational Polynomial::operator()(const Rational& x0) const {
    Rational acc(0);
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
        acc *= x0;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coef_.size() <= 1) return {};
    std::vector<Rational> out(coef_.size() - 1);
    for (std::size_t i = 1; i < coef_.size(); ++i) out[i - 1] = coef_[i] * static_cast<unsigned long>(i);
    return from_coefficients(std::move(out));
}

Polynomial Polynomial::times_x() const {
    if (is_zero()) return {};
    std::vector<Rational> out;
    out.reserve(coef_.size() + 1);
    out.emplace_back(0);
    out.insert(out.end(), coef_.begin(), coef_.end());
    return from_coefficients(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return {};
    std::vector<Rational> out(coef_.size());
    for (std::size_t i = 0; i < coef_.size(); ++i) out[i] = coef_[i] * c;
    return from_coefficients(std::move(out));
}

Polynomial Polynomial::with_scaled_argument(const Rational& m) const {
    std::vector<Rational> out(coef_.size());
    Rational power(1);
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        out[i] = coef_[i] * power;
        power *= m;
    }
    return from_coefficients(std::move(out));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> out(std::max(p.coef_.size(), q.coef_.size()), Rational(0));
    for (std::size_t i = 0; i < p.coef_.size(); ++i) out[i] += p.coef_[i];
    for (std::size_t i = 0; i < q.coef_.size(); ++i) out[i] += q.coef_[i];
    return Polynomial::from_coefficients(std::move(out));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> out(std::max(p.coef_.size(), q.coef_.size()), Rational(0));
    for (std::size_t i = 0; i < p.coef_.size(); ++i) out[i] += p.coef_[i];
    for (std::size_t i = 0; i < q.coef_.size(); ++i) out[i] -= q.coef_[i];
    return Polynomial::from_coefficients(std::move(out));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> out(p.coef_.size() + q.coef_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.coef_.size(); ++i) {
        if (p.coef_[i] == 0) continue;
        for (std::size_t j = 0; j < q.coef_.size(); ++j) out[i + j] += p.coef_[i] * q.coef_[j];
    }
    return Polynomial::from_coefficients(std::move(out));
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = coef_.size(); k-- > 0;) {
        if (coef_[k] == 0) continue;
        Rational c = coef_[k];
        if (s.empty()) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        bool unit = (c == 1) && k > 0;
        if (!unit) s += pretty_string(c);
        if (k > 0) {
            if (!unit) s += "*";
            s += "x";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

}  // namespace apartition
