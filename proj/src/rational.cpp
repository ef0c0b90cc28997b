#include "apartition/rational.hpp"

#include <stdexcept>

namespace apartition {

Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q;
    mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool neg = !s.empty() && s.front() == '-';
    std::string_view digits = neg ? s.substr(1) : s;
    if (!all_digits(digits))
        throw std::invalid_argument("invalid rational '" + std::string(whole) + "'");
    Integer v(std::string(digits), 10);
    return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        Rational q(parse_integer(text, text));
        return q;
    }
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_part = text.substr(slash + 1);
    if (!all_digits(den_part))
        throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
    Integer den(std::string(den_part), 10);
    if (den == 0)
        throw std::invalid_argument("invalid rational '" + std::string(text) + "': zero denominator");
    return make_rational(std::move(num), std::move(den));
}

std::string fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string pretty_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return fraction_string(q);
}

}  // namespace apartition
