#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grnet/combinat.hpp"
#include "grnet/laurent.hpp"
#include "grnet/quiver.hpp"

namespace grnet {

struct Matching {
  std::vector<int> edges;  // sorted edge indices
  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

enum class Color { Black, White };

struct EdgeEnd {
  bool boundary = false;
  int index = -1;  // node index, or boundary label 1..n
};

struct PlabicNode {
  std::string id;
  Color color = Color::Black;
  std::vector<int> rot;  // incident edge indices, counterclockwise
};

struct PlabicEdge {
  int id = 0;
  std::array<EdgeEnd, 2> end;
};

// An edge traversed from end[from] to end[1-from]; its face lies on the left.
struct Dart {
  int edge = -1;
  int from = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct Face {
  std::vector<Dart> darts;    // traversal order
  std::vector<int> edge_ids;  // cyclic id sequence starting at the smallest id
  bool boundary = false;      // meets the rim of the disc
  std::optional<KSubset> label;
};

// Dual arrow of an edge; it keeps the white end of the edge on its left.
struct DualArrow {
  int edge = -1;
  int tail = -1, head = -1;
};

class PlabicModel {
 public:
  PlabicModel() = default;
  // validates every invariant and derives faces and the dual quiver
  PlabicModel(int k, int n, std::vector<PlabicNode> nodes, std::vector<PlabicEdge> edges);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<PlabicNode>& nodes() const { return nodes_; }
  const std::vector<PlabicEdge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<DualArrow>& arrows() const { return arrows_; }

  int edge_index(int id) const;         // -1 when absent
  int boundary_edge(int label) const;   // edge index of boundary label
  int face_of(const Dart& d) const { return dart_face_[d.edge][d.from]; }
  int white_side(int edge) const;       // slot of the white end (or rim end)
  Color color_at(int edge) const;       // colour of the internal end of a rim edge

  int star() const { return star_; }
  void set_star(int f);
  void set_label(int f, const KSubset& label);
  bool labelled() const;

  std::string face_spec(int f) const;        // "1,5,6,7"
  int find_face(const std::string& spec) const;  // cyclic form, or unique edge set
  int find_face(const KSubset& label) const;     // -1 when absent
  std::string face_name(int f) const;        // label if present, else "f<spec>"

  LatticePtr face_lattice() const;          // all faces
  LatticePtr face_lattice_no_star() const;  // N_star
  LatticePtr edge_lattice() const;          // one coordinate "e<id>" per edge

  Quiver dual_quiver() const;  // vertices in face order; frozen = rim faces

 private:
  void trace_faces();
  void validate_quiver() const;

  int k_ = 0, n_ = 0;
  std::vector<PlabicNode> nodes_;
  std::vector<PlabicEdge> edges_;
  std::vector<int> boundary_edge_;  // by label, index 1..n
  std::vector<std::array<int, 2>> dart_face_;
  std::vector<Face> faces_;
  std::vector<DualArrow> arrows_;
  int star_ = -1;

  struct Cache {
    std::once_flag once;
    Matching base;
  };
  std::shared_ptr<Cache> cache_;
  friend Matching base_matching(const PlabicModel& m);
};

PlabicModel load_model(const std::string& text);
std::string save_model(const PlabicModel& m);

PlabicModel build_rectangles_model(int k, int n);
PlabicModel shark_model();
std::string shark_model_text();

// grid position (i,j) of a rectangle label, (0,0) for [1,k]; nullopt otherwise
std::optional<std::pair<int, int>> rectangle_position(int k, int n, const KSubset& s);
KSubset rectangle_label(int k, int n, int i, int j);

std::vector<Matching> enumerate_matchings(const PlabicModel& m,
                                          const std::optional<KSubset>& filter = std::nullopt);
KSubset boundary_value(const PlabicModel& m, const Matching& mt);
std::set<KSubset> positroid(const PlabicModel& m);
Matching base_matching(const PlabicModel& m);

// w on faces with w(star) = 0 and w(head) - w(tail) = mstar(a) - m(a)
LatticeVector weight_of_matching(const PlabicModel& m, const Matching& mt);

struct Flow {
  std::vector<int> edges;  // sorted edge indices, oriented by the base matching
  friend bool operator==(const Flow&, const Flow&) = default;
  friend auto operator<=>(const Flow&, const Flow&) = default;
};

// dart of the perfect orientation attached to the base matching
Dart oriented_dart(const PlabicModel& m, const Matching& base, int edge);
std::vector<Flow> flows(const PlabicModel& m, const KSubset& target);
// 1 on faces left of each path, counted by crossings from the star face
LatticeVector flow_weight(const PlabicModel& m, const Flow& f);
Flow flow_of_matching(const PlabicModel& m, const Matching& mt);

struct SquareMove {
  PlabicModel model;
  std::vector<int> face_map;  // old face index -> new face index
};

// Urban renewal at a quadrilateral face, then contraction of the bivalent
// vertices it creates next to internal nodes. NotMutable when the face does
// not qualify. With check set, the positroid and the mutated quiver are
// compared against the input.
SquareMove square_move_full(const PlabicModel& m, int face, bool check = true);
PlabicModel square_move(const PlabicModel& m, int face, bool check = true);

}  // namespace grnet
