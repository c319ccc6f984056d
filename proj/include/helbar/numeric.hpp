#pragma once

#include "helbar/types.hpp"

namespace helbar {

/// Wraps an angle into (-pi, pi].
double wrap_phase(double phi);

/// cos(q L) paired with sin(q L)/q. Both are entire functions of q^2; the
/// second switches to a short series for |q L| < 1e-4 so the q -> 0 limit
/// is exact (-> L) and the oscillatory and evanescent branches share one
/// code path.
struct TrigPair {
  complexd cos_qL;
  complexd sin_qL_over_q;
};

TrigPair trig_pair(complexd q, double L);

/// Principal square root of the real ratio a/b, as a complex value
/// (+i sqrt|a/b| when the ratio is negative).
complexd sqrt_ratio(double a, double b);

}  // namespace helbar
