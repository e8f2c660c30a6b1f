#include "pal/bounds.hpp"

#include <algorithm>

#include "pal/errors.hpp"

namespace pal {

namespace {

void check_eps(const Rational& eps) {
    if (eps <= 0 || eps >= Rational(1, 2)) {
        throw DomainError("eps must lie in (0, 1/2), got " + format_rational(eps));
    }
}

void check_opts(long opt1, long opt2) {
    if (opt1 < 1 || opt2 < 1) throw DomainError("gadget optimum must be positive");
    if (opt2 < opt1) throw DomainError("expected opt2 >= opt1");
}

}  // namespace

Rational min_ratio_bound(long opt1, long opt2, long bad1, long bad2, const Rational& eps) {
    check_eps(eps);
    check_opts(opt1, opt2);
    if (bad1 < opt1 || bad2 < opt2) {
        throw DomainError("minimization requires bad >= opt per gadget");
    }
    Rational r = std::min(Rational(bad1, opt1), Rational(bad2, opt2));
    return 1 + eps * (r - 1) * opt1 / (eps * opt1 + (1 - eps) * opt2);
}

Rational max_ratio_bound(long opt1, long opt2, long bad1, long bad2, const Rational& eps) {
    check_eps(eps);
    check_opts(opt1, opt2);
    if (bad1 > opt1 || bad2 > opt2 || bad1 < 0 || bad2 < 0) {
        throw DomainError("maximization requires 0 <= bad <= opt per gadget");
    }
    if (bad1 == 0 || bad2 == 0) {
        // r = min(opt/bad) diverges; the bound's limit for r -> infinity.
        return 1 + eps * opt1 / ((1 - eps) * opt2);
    }
    Rational r = std::min(Rational(opt1, bad1), Rational(opt2, bad2));
    return 1 + eps * (r - 1) * opt1 / (eps * opt1 + (1 - eps) * r * opt2);
}

Rational corollary_bound(long opt, const Rational& eps, Sense sense) {
    check_eps(eps);
    if (opt < 1) throw DomainError("gadget optimum must be positive");
    if (sense == Sense::Minimize) {
        return 1 + eps / opt;
    }
    Rational d = opt - eps;
    if (d <= 0) throw DomainError("maximization corollary needs opt > eps");
    return 1 + eps / d;
}

double advice_threshold(long n, long gadget_size, const Rational& eps) {
    if (eps <= 0 || eps > Rational(1, 2)) {
        throw DomainError("eps must lie in (0, 1/2], got " + format_rational(eps));
    }
    if (n < 0) throw DomainError("negative instance size");
    if (gadget_size < 1) throw DomainError("gadget size must be positive");
    return (1.0 - entropy(eps)) * (double)n / (2.0 * (double)gadget_size);
}

}  // namespace pal
