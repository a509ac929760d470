#include <tanvar/rational.hpp>

#include <cctype>

namespace tanvar {

namespace {

bool valid_integer(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s)
{
    std::string digits(s);
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    return Integer(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto s = trim(text);
    auto slash = s.find('/');
    auto num_text = slash == std::string_view::npos ? s : trim(s.substr(0, slash));
    auto den_text = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!valid_integer(num_text) || !valid_integer(den_text) || den_text[0] == '-' || den_text[0] == '+') {
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(parse_integer(num_text), den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str(10);
}

Rational factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(c);
}

} // namespace tanvar
