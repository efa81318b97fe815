#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace threeplane {

enum class Direction { forward, backward };
enum class NodeKind { vertex, crossing };

// A half-segment leaving one of its two nodes. Ordered by edge id, then
// segment index, then forward before backward.
struct DartKey {
  std::string edge;
  int segment = 0;
  Direction dir = Direction::forward;

  auto operator<=>(const DartKey&) const = default;
  bool operator==(const DartKey&) const = default;
};

std::string to_string(const DartKey& key);

using RotationTable = std::map<std::string, std::vector<DartKey>>;

// Rotation system on the sphere. Dart d belongs to segment d / 2 and is the
// forward dart iff d is even, so dart order coincides with DartKey order.
class CombMap {
 public:
  struct Node {
    std::string id;
    NodeKind kind = NodeKind::vertex;
  };
  // tail is the node at the lower position along the edge.
  struct Segment {
    std::string edge;
    int index = 0;
    int tail = 0;
    int head = 0;
  };
  struct NodeSpec {
    std::string id;
    NodeKind kind = NodeKind::vertex;
  };
  struct SegmentSpec {
    std::string edge;
    int index = 0;
    std::string tail;
    std::string head;
  };

  CombMap(std::vector<NodeSpec> nodes, std::vector<SegmentSpec> segments,
          const RotationTable& rotations);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t segment_count() const { return segments_.size(); }
  std::size_t dart_count() const { return 2 * segments_.size(); }

  const Node& node(int n) const { return nodes_[n]; }
  const Segment& segment(int s) const { return segments_[s]; }
  int node_index(const std::string& id) const;  // -1 if absent

  static int twin(int d) { return d ^ 1; }
  static int segment_of(int d) { return d >> 1; }
  static bool is_forward(int d) { return (d & 1) == 0; }
  int tail(int d) const { return is_forward(d) ? segments_[d >> 1].tail : segments_[d >> 1].head; }
  int head(int d) const { return tail(twin(d)); }
  int rot_next(int d) const;
  int rot_prev(int d) const;
  // Face successor: the face lies to the right of the walk.
  int face_next(int d) const { return rot_next(twin(d)); }

  const std::vector<int>& rotation(int n) const { return rotation_[n]; }
  DartKey key(int d) const;
  int dart(const DartKey& key) const;  // -1 if absent
  RotationTable rotation_table() const;
  std::vector<NodeSpec> node_specs() const;
  std::vector<SegmentSpec> segment_specs() const;

 private:
  std::vector<Node> nodes_;
  std::map<std::string, int> node_index_;
  std::vector<Segment> segments_;
  std::map<std::pair<std::string, int>, int> segment_index_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> rot_pos_;
};

struct FaceWalk {
  std::vector<int> darts;
};

struct FaceSet {
  std::vector<FaceWalk> walks;
  std::vector<int> face_of_dart;
};

FaceSet compute_faces(const CombMap& map);
std::vector<FaceWalk> faces(const CombMap& map);
long euler_characteristic(const CombMap& map);
bool is_connected(const CombMap& map);

// Adds a new single-segment edge from the vertex at walk position occurrence_u
// to the vertex at occurrence_v, drawn inside the face.
CombMap insert_edge_in_face(const CombMap& map, const FaceWalk& face, std::size_t occurrence_u,
                            std::size_t occurrence_v, const std::string& edge_id);

}  // namespace threeplane
