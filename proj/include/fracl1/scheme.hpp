#pragma once

#include <string_view>

namespace fracl1 {

/// Time discretization of the Caputo derivative used by the solvers.
enum class Scheme { L1, ML1, CML1 };

std::string_view to_string(Scheme s);
Scheme parse_scheme(std::string_view name);

}  // namespace fracl1
