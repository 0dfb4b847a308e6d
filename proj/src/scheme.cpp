#include "fracl1/scheme.hpp"

#include <string>

#include "fracl1/errors.hpp"

namespace fracl1 {

std::string_view to_string(Scheme s) {
    switch (s) {
        case Scheme::L1: return "L1";
        case Scheme::ML1: return "ML1";
        case Scheme::CML1: return "CML1";
    }
    return "?";
}

Scheme parse_scheme(std::string_view name) {
    if (name == "l1" || name == "L1") return Scheme::L1;
    if (name == "ml1" || name == "ML1") return Scheme::ML1;
    if (name == "cml1" || name == "CML1") return Scheme::CML1;
    throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

}  // namespace fracl1
