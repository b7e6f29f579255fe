#ifndef SUPERTEICH_SURFACE_HPP
#define SUPERTEICH_SURFACE_HPP

#include <array>
#include <string>
#include <vector>

namespace superteich {

/// Oriented ideal triangle: edges listed counter-clockwise; corners[k] is the
/// puncture id at the vertex shared by edges[k] and edges[(k+1)%3].
struct Triangle {
  std::array<int, 3> edges;
  std::array<int, 3> corners;
};

struct EdgeIncidence {
  int tri = -1;
  int side = -1;
};

/// Ideal triangulation of a genus-g surface with s punctures.  Edge ids are
/// 0-based and every edge must occur in exactly two (triangle, side) slots.
class Triangulation {
 public:
  Triangulation(int genus, int punctures, std::vector<Triangle> triangles, int num_edges);

  int genus() const { return genus_; }
  int punctures() const { return punctures_; }
  int num_edges() const { return num_edges_; }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const Triangle& triangle(int t) const { return triangles_.at(t); }
  const std::array<EdgeIncidence, 2>& incidences(int edge) const { return incidences_.at(edge); }

 private:
  int genus_;
  int punctures_;
  int num_edges_;
  std::vector<Triangle> triangles_;
  std::vector<std::array<EdgeIncidence, 2>> incidences_;
};

struct ValidationReport {
  bool ok = true;
  int edge_count = 0;
  int triangle_count = 0;
  int expected_edges = 0;
  int expected_triangles = 0;
  std::vector<int> fan_lengths;  // per puncture
  std::vector<std::string> problems;
};

ValidationReport validate(const Triangulation& t);

/// Orientation of the dual trivalent fatgraph: one bit per edge, +1 meaning
/// the fatgraph edge points from incidence 0 toward incidence 1.
using Orientation = std::vector<int>;

/// Flips every edge end incident to the vertex dual to triangle v; an edge
/// with both ends there (a loop) flips twice, i.e. stays.
Orientation vertex_reversal(const Triangulation& t, const Orientation& o, int v);

/// Whether two orientations define the same spin structure, i.e. are related
/// by a sequence of vertex reversals (GF(2) linear solve).
bool same_spin_class(const Triangulation& t, const Orientation& a, const Orientation& b);

struct FanCorner {
  int tri = -1;
  int corner = -1;      // corner index within the triangle
  int enter_edge = -1;  // edges[(corner+1)%3]
  int leave_edge = -1;  // edges[corner]
  int leave_from_incidence = -1;  // which incidence of leave_edge is this triangle's side
};

/// Closed counter-clockwise cycle of corner visits around a puncture,
/// starting at the corner with the smallest entering edge id.
struct PunctureFan {
  int puncture = -1;
  std::vector<FanCorner> corners;
};

PunctureFan puncture_fan(const Triangulation& t, int puncture);

struct FatgraphEdge {
  int id, v0, v1;
};

struct Fatgraph {
  int num_vertices = 0;
  std::vector<FatgraphEdge> edges;
  std::vector<std::array<int, 3>> cyclic;  // edge ids ccw at each vertex
};

Fatgraph dual_fatgraph(const Triangulation& t);

/// Result of a generic flip at one edge.  The flipped edge keeps its id; the
/// triangle the old arrow pointed into keeps its id as the left (mu-side) new
/// triangle, the tail triangle becomes the right (nu-side) one, and the new
/// arrow runs right -> left as in the spin-graph evolution picture, with the
/// head triangle's ccw-after-diagonal outer edge reversed.
struct FlipResult {
  Triangulation triangulation;
  Orientation orientation;
  int edge = -1;       // the flipped edge (id reused for the new diagonal)
  int head_tri = -1;   // theta-side before, mu-side after
  int tail_tri = -1;   // sigma-side before, nu-side after
  int a_edge = -1, b_edge = -1, c_edge = -1, d_edge = -1;
};

bool flip_is_generic(const Triangulation& t, int edge);

/// Throws std::domain_error on a non-generic configuration.
FlipResult flip(const Triangulation& t, const Orientation& o, int edge);

/// Edges whose flip is generic.
std::vector<int> generic_flippable_edges(const Triangulation& t);

}  // namespace superteich

#endif
