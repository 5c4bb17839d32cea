#include "shapeinv/rational.hpp"

#include "shapeinv/errors.hpp"

namespace shapeinv {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw InvalidParams("empty rational literal");
    std::string s(text);
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) throw InvalidParams("zero denominator in '" + s + "'");
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            std::size_t frac_len = s.size() - dot - 1;
            if (frac_len == 0) throw InvalidParams("malformed decimal '" + s + "'");
            BigInt num(digits);
            BigInt den = 1;
            for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
            return Rational(num, den);
        }
        return Rational(BigInt(s));
    } catch (const std::exception&) {
        throw InvalidParams("cannot parse rational literal '" + s + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace shapeinv
