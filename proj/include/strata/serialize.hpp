#pragma once

#include "strata/term_ars.hpp"

#include <json.hpp>

namespace strata {

/// {"source", "position", "rule", "subst", "target"}; the position is an
/// array of 1-based indices (empty for the root), terms are printed text.
nlohmann::json step_to_json(const RewriteStep& step);
/// Array of step objects, empty for the empty derivation.
nlohmann::json derivation_to_json(const Derivation& d);

} // namespace strata
