#pragma once

#include "plint/forms.hpp"

namespace plint::detail {

/// gcd in Q[u, v], normalized so the result is monic in its leading term
/// under the lexicographic order (v first, then u). gcd(0, 0) = 0.
BivariatePoly bivariate_gcd(const BivariatePoly& a, const BivariatePoly& b);

}  // namespace plint::detail
