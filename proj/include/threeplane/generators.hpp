#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "threeplane/drawing.hpp"
#include "threeplane/geometry.hpp"

namespace threeplane {

// Cylinder of L+1 stacked hexagons: n = 6(L+1), |E| = 5.5n - 15, |X| = 5.5n - 21.
Drawing gen_fig3(int layers);
// Concentric rings of pentagonal faces with all five diagonals in every pentagon.
Drawing gen_fig2(int rings);
// k2, k3, path3, x1, fig3a-micro, fig4-flower, lens-bad.
Drawing gen_basic(const std::string& name);
const std::vector<std::string>& basic_names();

// Deterministic per (n, budget, seed); randomness from std::mt19937_64.
GeometricScene random_scene(int n, int edge_budget, std::uint64_t seed);
Drawing random_drawing(int n, int edge_budget, std::uint64_t seed);

// Chords drawn inside one face of an uncrossed drawing, laid out as straight
// lines in a convex template so that crossings follow from the cyclic order.
struct FaceChords {
  std::set<std::string> face;  // the vertices of a non-degenerate face
  std::vector<std::pair<std::string, std::string>> chords;
  bool all_diagonals = false;  // add every non-adjacent pair
  std::vector<std::pair<std::string, std::string>> omit;
};

Drawing add_face_chords(const Drawing& plane, const std::vector<FaceChords>& plan);

}  // namespace threeplane
