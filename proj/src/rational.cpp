#include "bchkit/rational.hpp"

#include <cctype>

#include "bchkit/errors.hpp"

namespace bchkit {

namespace {

bool is_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("not a rational number: \"" + std::string(text) + "\"");

    using Integer = boost::multiprecision::mpz_int;
    const Integer n{std::string(num.front() == '+' ? num.substr(1) : num)};
    const Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    return Rational(n, d);
}

std::string to_string(const Rational& q)
{
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

RationalVector unit_vector(int dim, int index)
{
    RationalVector e = RationalVector::Zero(dim);
    e[index] = 1;
    return e;
}

} // namespace bchkit
