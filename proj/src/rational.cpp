#include "pal/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace pal {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (text.empty()) throw DomainError("empty rational");
            return Rational(BigInt(text));
        }
        if (slash == 0 || slash + 1 == text.size()) {
            throw DomainError("malformed rational: " + text);
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) {
            throw DomainError("rational with zero denominator: " + text);
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw DomainError("malformed rational: " + text);
    }
}

std::string format_rational(const Rational& value) {
    if (denominator(value) == 1) {
        return numerator(value).str();
    }
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string format_decimal(const Rational& value, int digits) {
    bool negative = value < 0;
    Rational mag = negative ? Rational(-value) : value;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round half up on the magnitude
    BigInt scaled = (numerator(mag) * scale * 2 + denominator(mag)) / (denominator(mag) * 2);
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string fracs = frac.str();
    if ((int)fracs.size() < digits) {
        fracs = std::string(digits - fracs.size(), '0') + fracs;
    }
    std::string out = whole.str();
    if (digits > 0) out += "." + fracs;
    if (negative && (whole != 0 || frac != 0)) out = "-" + out;
    return out;
}

double entropy(const Rational& p) {
    if (p < 0 || p > 1) {
        throw DomainError("entropy argument outside [0, 1]: " + format_rational(p));
    }
    if (p == 0 || p == 1) return 0.0;
    double x = static_cast<double>(p);
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

int ceil_log2(long n) {
    if (n < 1) throw DomainError("ceil_log2 of nonpositive value");
    int k = 0;
    long pow = 1;
    while (pow < n) {
        pow *= 2;
        ++k;
    }
    return k;
}

}  // namespace pal
