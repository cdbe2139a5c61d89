#pragma once

#include "sinc_iterint/iterated.hpp"

namespace sinc_iterint {

/// Built-in worked examples.
///   1: smooth, f = 1/(x+y+1/2), q = x^2/2 on (0, sqrt 2)
///   2: derivative singularities, f = sqrt(1-y^2), q = sqrt(1-(1-x)^2) on (0, 1)
///   3: weak singularity, f = 1/sqrt(xy), q = 1-x on (0, 1) (decreasing)
/// Throws ProblemError for any other id.
Problem builtin(int id);

}  // namespace sinc_iterint
