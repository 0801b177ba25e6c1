#include "m0n/rational.hpp"

#include <cctype>

namespace m0n {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = (s[0] == '-');
        s = s.substr(1);
    }
    if (s.empty()) throw std::invalid_argument("malformed rational: '" + text + "'");

    Rational q;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational: '" + text + "'");
        mpz_class d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
        q = Rational(mpz_class(num), d);
        q.canonicalize();
    } else if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string fracpart = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (fracpart.empty()) fracpart = "0";
        if (!all_digits(whole) || !all_digits(fracpart))
            throw std::invalid_argument("malformed rational: '" + text + "'");
        mpz_class num(whole + fracpart);
        mpz_class den = 1;
        for (size_t i = 0; i < fracpart.size(); ++i) den *= 10;
        q = Rational(num, den);
        q.canonicalize();
    } else {
        if (!all_digits(s))
            throw std::invalid_argument("malformed rational: '" + text + "'");
        q = Rational(mpz_class(s));
    }
    if (negative) q = -q;
    return q;
}

}  // namespace m0n
