#pragma once

#include <string>
#include <string_view>

#include "threeplane/drawing.hpp"

namespace threeplane {

// Parses the JSON drawing format. Throws TdrSyntaxError on malformed JSON and
// TdrSemanticError when the content does not describe a rotation system.
Drawing parse_tdr(std::string_view text);

// Canonical text: sorted keys, sorted vertices and edges, rotations starting
// at their smallest dart, two-space indentation, trailing newline.
std::string serialize_tdr(const Drawing& drawing);

}  // namespace threeplane
