#pragma once

#include <optional>
#include <string>

#include "threeplane/drawing.hpp"

namespace threeplane {

struct FilledWitness {
  int cell = 0;
  std::string u;
  std::string v;
};

// First cell (by id) with two boundary vertices u < v that are not joined by
// an uncrossed edge along that boundary.
std::optional<FilledWitness> filled_witness(const Drawing& drawing);
bool is_filled(const Drawing& drawing);

// Inserts uncrossed edges "s0", "s1", ... until the drawing is filled.
Drawing saturate(const Drawing& drawing);

bool is_3saturated(const Drawing& drawing);

}  // namespace threeplane
