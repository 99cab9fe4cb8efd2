#pragma once

// Exact rational scalars for the whole library. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace liegen {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown on invalid user input (bad files, bad preconditions). CLI maps it to exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "-p" or "p/q" with q > 0 after normalization.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw input_error("empty number");
    const auto slash = s.find('/');
    const auto check_int = [&](const std::string& t) {
        if (t.empty()) throw input_error("bad number '" + s + "'");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw input_error("bad number '" + s + "'");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw input_error("bad number '" + s + "'");
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(Integer(s));
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Integer d(den);
    if (d == 0) throw input_error("zero denominator in '" + s + "'");
    return Rational(Integer(num), d);
}

} // namespace liegen
