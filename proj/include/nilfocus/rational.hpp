#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace nilfocus {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline int sign(const Rational& r) { return r.sign(); }

inline Rational rational_pow(const Rational& base, int exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rational_pow: 0^negative");
        return Rational(1) / rational_pow(base, -exp);
    }
    Rational result(1), b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

/// Parses "p/q", "p" or a decimal like "0.6" (decimals are exact: 0.6 -> 3/5).
inline std::optional<Rational> parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            Integer num(s.substr(0, slash));
            Integer den(s.substr(slash + 1));
            if (den == 0) return std::nullopt;
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            Integer num(digits);
            Integer den = 1;
            for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
            return Rational(num, den);
        }
        return Rational(Integer(s));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline std::string num_str(const Rational& r) { return numerator(r).str(); }
inline std::string den_str(const Rational& r) { return denominator(r).str(); }

inline std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return num_str(r);
    return num_str(r) + "/" + den_str(r);
}

}  // namespace nilfocus
