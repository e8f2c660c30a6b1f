#pragma once

#include "pal/rational.hpp"

namespace pal {

enum class Sense { Minimize, Maximize };

// Approximation-ratio floor for minimization gadget pairs, as a function
// of the tolerated wrong-decision fraction eps in (0, 1/2).
// Requires opt >= 1 per gadget, bad >= opt, opt2 >= opt1.
Rational min_ratio_bound(long opt1, long opt2, long bad1, long bad2, const Rational& eps);

// Same for maximization pairs; requires bad <= opt. bad = 0 is allowed and
// evaluated as the closed-form limit of the general expression.
Rational max_ratio_bound(long opt1, long opt2, long bad1, long bad2, const Rational& eps);

// Equal-optima pairs one unit apart: minimization (bad = opt + 1) gives
// 1 + eps/opt, maximization (bad = opt - 1) gives 1 + eps/(opt - eps).
Rational corollary_bound(long opt, const Rational& eps, Sense sense);

// Advice bits below which the eps guarantee is impossible for instances of
// n items built from size-s gadgets: (1 - H(eps)) * n / (2 s).
double advice_threshold(long n, long gadget_size, const Rational& eps);

}  // namespace pal
