#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "threeplane/combmap.hpp"

namespace threeplane {

struct EdgeRecord {
  std::string id;
  std::array<std::string, 2> ends;
  std::vector<std::string> crossings;  // ordered from ends[0] to ends[1]

  bool operator==(const EdgeRecord&) const = default;
};

struct Drawing {
  std::vector<std::string> vertices;
  std::vector<EdgeRecord> edges;
  RotationTable rotations;

  // Sorts vertices and edges by id and starts every rotation at its smallest dart.
  void canonicalize();
  const EdgeRecord* find_edge(const std::string& id) const;
  std::vector<std::string> crossing_ids() const;  // sorted

  bool operator==(const Drawing&) const = default;
};

Drawing canonical(Drawing drawing);

struct DrawingStats {
  std::int64_t n = 0;
  std::int64_t edges = 0;
  std::int64_t crossings = 0;
  std::array<std::int64_t, 4> by_crossings{};  // |E_0| .. |E_3|
  std::int64_t crossed_edges = 0;              // |E_x|
};

CombMap planarize(const Drawing& drawing);
DrawingStats stats(const Drawing& drawing);

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool valid() const;
  const CheckResult& check(const std::string& name) const;
};

// Checks, in report order: 3-plane, no-self-cross, no-adjacent-cross,
// crossing-alternation, sphere, connected, non-homotopic, no-loops.
ValidationReport validate(const Drawing& drawing);

}  // namespace threeplane
