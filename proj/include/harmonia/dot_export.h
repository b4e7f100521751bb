#pragma once

#include <string>

#include "harmonia/cadence.h"

namespace harmonia {

/// The three linked cadence pairs with region labels; solid edges are the
/// pair morphisms, dashed edges the prism composites.
std::string conglomerate_dot(const Tonality& key);

/// The commuting prism on {I7, IV7, II7} x {III7, II7, IV7}, realized in a
/// key.
std::string prism_dot(const Tonality& key);

/// Seventh-chord graph under the default generators {R42, L13, L42, P42}.
std::string cayley_dot();

}  // namespace harmonia
