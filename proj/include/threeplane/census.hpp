#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "threeplane/combmap.hpp"
#include "threeplane/drawing.hpp"

namespace threeplane {

enum class CellType { xtri, xquad, vtri, vquad, xpent, vvtri, kite, large, other };

std::string_view name(CellType type);
inline bool is_large(CellType t) { return t == CellType::large || t == CellType::kite; }
// Type used for trail endpoints: KITE folds into LARGE.
inline CellType trail_class(CellType t) { return t == CellType::kite ? CellType::large : t; }

struct CellRecord {
  int id = 0;
  std::vector<int> darts;       // boundary walk, face on the right
  std::vector<int> nodes;       // tail of each dart
  std::vector<NodeKind> kinds;  // kind of each node in `nodes`
  int size = 0;
  int vertex_incidences = 0;
  int crossing_incidences = 0;
  int segment_incidences = 0;
  bool degenerate = false;
};

CellType classify_cell(const CellRecord& record);

struct Trail {
  std::vector<int> cells;
  std::vector<int> interior_segments;  // interior_segments[i] separates cells[i] and cells[i + 1]
  std::array<CellType, 2> endpoint_types{};
  std::vector<std::string> bounding_edges;  // sorted multiset

  std::size_t length() const { return cells.size(); }
};

enum class ConfigType { cfg9, cfg10, cfg12, cfg13, cfg14, cfg15, cfg18 };
std::string_view name(ConfigType type);
inline constexpr std::array<ConfigType, 7> kConfigTypes{ConfigType::cfg9,  ConfigType::cfg10, ConfigType::cfg12,
                                                        ConfigType::cfg13, ConfigType::cfg14, ConfigType::cfg15,
                                                        ConfigType::cfg18};

struct Configuration {
  ConfigType type = ConfigType::cfg9;
  std::vector<int> cells;                         // sorted
  std::vector<std::pair<int, int>> vvtri_segments;  // (VVTRI cell, segment), sorted
  std::optional<std::string> twice_crossed_edge;  // CFG15 and CFG18
  std::string source;                             // the object the construction started from
};

struct ConfigCensus {
  std::vector<Configuration> configurations;
  std::vector<std::string> failures;  // constructions without an image
  bool complete = false;              // exact (saturated input, no failures)
  bool vvtri_segments_distinct = true;
  bool edge_loads_ok = true;          // CFG18 + 2 CFG15 designations per edge stay within 2

  std::int64_t count(ConfigType type) const;
};

// Planarization with classified cells and extracted trails.
class Arrangement {
 public:
  explicit Arrangement(const Drawing& drawing);

  const Drawing& drawing() const { return drawing_; }
  const CombMap& map() const { return map_; }
  const std::vector<CellRecord>& cells() const { return cells_; }
  CellType type(int cell) const { return types_[cell]; }
  int cell_of_dart(int dart) const { return faces_.face_of_dart[dart]; }
  const std::string& edge_of_segment(int segment) const { return map_.segment(segment).edge; }
  std::size_t crossings_on_edge(const std::string& edge) const;
  bool is_inner(int segment) const;
  const std::vector<Trail>& trails() const { return trails_; }
  int trail_of_segment(int segment) const { return trail_of_segment_[segment]; }
  // Cell at the other end of the trail through `segment`, seen from endpoint `cell`.
  int trail_far_end(int segment, int cell) const;
  // Walk of `cell` rotated so that it starts at its first vertex incidence.
  std::vector<int> walk_from_vertex(int cell) const;

 private:
  void extract_trails();

  Drawing drawing_;
  CombMap map_;
  FaceSet faces_;
  std::vector<CellRecord> cells_;
  std::vector<CellType> types_;
  std::map<std::string, std::size_t> edge_crossings_;
  std::vector<Trail> trails_;
  std::vector<int> trail_of_segment_;
};

std::vector<CellRecord> cells(const Drawing& drawing);
std::vector<Trail> extract_trails(const Drawing& drawing);

inline constexpr std::array<CellType, 5> kTrailTypes{CellType::xtri, CellType::vtri, CellType::vquad,
                                                     CellType::xpent, CellType::large};
using TrailPair = std::pair<CellType, CellType>;  // ordered as in kTrailTypes
TrailPair trail_pair(CellType a, CellType b);

struct TrailCounts {
  std::map<TrailPair, std::int64_t> pairs;  // all 15 unordered pairs present
  std::int64_t with_other_endpoint = 0;
  std::int64_t get(CellType a, CellType b) const;
};

TrailCounts trail_counts(const std::vector<Trail>& trails);

bool is_saturated_xpent(const Arrangement& arrangement, int cell);

// `saturated` selects strict mode: failures throw LemmaWitnessFailure.
ConfigCensus detect_configurations(const Arrangement& arrangement, bool saturated);

struct CensusCounts {
  DrawingStats stats;
  std::map<CellType, std::int64_t> cell_counts;  // LARGE includes KITE
  std::int64_t large_size_sum = 0;
  std::int64_t cell_count = 0;
  std::int64_t size_sum = 0;
  TrailCounts trails;
  std::int64_t interior_segment_total = 0;
  std::map<ConfigType, std::int64_t> configurations;
  std::int64_t saturated_xpents = 0;
  bool saturated = false;
  bool configurations_exact = false;

  std::int64_t cells_of(CellType t) const;
  // Values keyed by the variable names used in linear forms.
  std::map<std::string, std::int64_t> variables() const;
};

CensusCounts census(const Drawing& drawing);
CensusCounts census(const Arrangement& arrangement, bool saturated);

namespace var {
std::string trail(CellType a, CellType b);
std::string cells(CellType t);
std::string config(ConfigType t);
inline const std::string kV = "|V|";
inline const std::string kVminus2 = "|V|-2";
inline const std::string kE = "|E|";
inline const std::string kX = "|X|";
inline const std::string kE0 = "|E_0|";
inline const std::string kE1 = "|E_1|";
inline const std::string kE2 = "|E_2|";
inline const std::string kE3 = "|E_3|";
inline const std::string kEx = "|E_x|";
inline const std::string kLargeSizeSum = "large_size_sum";
}  // namespace var

}  // namespace threeplane
