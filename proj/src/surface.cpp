#include "superteich/surface.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace superteich {

Triangulation::Triangulation(int genus, int punctures, std::vector<Triangle> triangles,
                             int num_edges)
    : genus_(genus), punctures_(punctures), num_edges_(num_edges), triangles_(std::move(triangles)) {
  if (genus_ < 0 || punctures_ < 1) throw std::invalid_argument("need genus >= 0 and punctures >= 1");
  incidences_.assign(num_edges_, {EdgeIncidence{}, EdgeIncidence{}});
  std::vector<int> count(num_edges_, 0);
  for (int t = 0; t < num_triangles(); ++t) {
    for (int s = 0; s < 3; ++s) {
      int e = triangles_[t].edges[s];
      if (e < 0 || e >= num_edges_) throw std::invalid_argument("edge id out of range");
      if (count[e] >= 2)
        throw std::invalid_argument("edge " + std::to_string(e) + " has more than two incidences");
      incidences_[e][count[e]++] = EdgeIncidence{t, s};
      int p = triangles_[t].corners[s];
      if (p < 0 || p >= punctures_) throw std::invalid_argument("corner puncture id out of range");
    }
  }
  for (int e = 0; e < num_edges_; ++e)
    if (count[e] != 2)
      throw std::invalid_argument("edge " + std::to_string(e) + " has " + std::to_string(count[e]) +
                                  " incidences (needs 2)");
}

namespace {

// Next corner counter-clockwise around the same puncture: cross the leaving
// edge (side k) into the neighbouring triangle.
FanCorner corner_at(const Triangulation& t, int tri, int k) {
  FanCorner c;
  c.tri = tri;
  c.corner = k;
  c.leave_edge = t.triangle(tri).edges[k];
  c.enter_edge = t.triangle(tri).edges[(k + 1) % 3];
  const auto& inc = t.incidences(c.leave_edge);
  c.leave_from_incidence = (inc[0].tri == tri && inc[0].side == k) ? 0 : 1;
  return c;
}

std::pair<int, int> next_corner(const Triangulation& t, const FanCorner& c) {
  const auto& inc = t.incidences(c.leave_edge);
  const EdgeIncidence& other = inc[1 - c.leave_from_incidence];
  return {other.tri, (other.side + 2) % 3};
}

std::vector<FanCorner> walk_fan(const Triangulation& t, int tri0, int k0) {
  std::vector<FanCorner> out;
  int tri = tri0, k = k0;
  do {
    FanCorner c = corner_at(t, tri, k);
    out.push_back(c);
    auto [ntri, nk] = next_corner(t, c);
    tri = ntri;
    k = nk;
    if (out.size() > size_t(3 * t.num_triangles() + 1))
      throw std::runtime_error("fan walk does not close");
  } while (!(tri == tri0 && k == k0));
  return out;
}

}  // namespace

ValidationReport validate(const Triangulation& t) {
  ValidationReport r;
  r.edge_count = t.num_edges();
  r.triangle_count = t.num_triangles();
  int g = t.genus(), s = t.punctures();
  r.expected_edges = 6 * g - 6 + 3 * s;
  r.expected_triangles = 4 * g - 4 + 2 * s;
  if (2 * g + s - 2 <= 0) {
    r.ok = false;
    r.problems.push_back("surface must satisfy 2g+s-2 > 0");
    return r;
  }
  if (r.edge_count != r.expected_edges) {
    r.ok = false;
    r.problems.push_back("edge count " + std::to_string(r.edge_count) + " != 6g-6+3s = " +
                         std::to_string(r.expected_edges));
  }
  if (r.triangle_count != r.expected_triangles) {
    r.ok = false;
    r.problems.push_back("triangle count " + std::to_string(r.triangle_count) +
                         " != 4g-4+2s = " + std::to_string(r.expected_triangles));
  }
  // Euler characteristic with V = s ideal vertices.
  int chi = s - r.edge_count + r.triangle_count;
  if (chi != 2 - 2 * g) {
    r.ok = false;
    r.problems.push_back("Euler characteristic " + std::to_string(chi) + " != 2-2g");
  }
  // Corner labels must be consistent along every fan, fans must close, and
  // every corner must be visited exactly once.
  std::vector<std::vector<bool>> seen(t.num_triangles(), std::vector<bool>(3, false));
  r.fan_lengths.assign(s, 0);
  try {
    for (int tri = 0; tri < t.num_triangles(); ++tri) {
      for (int k = 0; k < 3; ++k) {
        if (seen[tri][k]) continue;
        int p = t.triangle(tri).corners[k];
        auto corners = walk_fan(t, tri, k);
        for (const auto& c : corners) {
          if (seen[c.tri][c.corner]) {
            r.ok = false;
            r.problems.push_back("corner visited twice while walking puncture " + std::to_string(p));
          }
          seen[c.tri][c.corner] = true;
          if (t.triangle(c.tri).corners[c.corner] != p) {
            r.ok = false;
            r.problems.push_back("inconsistent corner label at triangle " + std::to_string(c.tri) +
                                 " corner " + std::to_string(c.corner));
          }
        }
        r.fan_lengths[p] += static_cast<int>(corners.size());
      }
    }
  } catch (const std::exception& e) {
    r.ok = false;
    r.problems.push_back(e.what());
  }
  for (int p = 0; p < s; ++p)
    if (r.fan_lengths[p] == 0) {
      r.ok = false;
      r.problems.push_back("puncture " + std::to_string(p) + " has no corners");
    }
  return r;
}

Orientation vertex_reversal(const Triangulation& t, const Orientation& o, int v) {
  Orientation out = o;
  for (int s = 0; s < 3; ++s) {
    int e = t.triangle(v).edges[s];
    out[e] = -out[e];  // a loop edge at v appears twice and flips back
  }
  return out;
}

bool same_spin_class(const Triangulation& t, const Orientation& a, const Orientation& b) {
  // Solve sum of reversal vectors = diff over GF(2).
  int E = t.num_edges(), V = t.num_triangles();
  std::vector<std::vector<int>> rows(E, std::vector<int>(V + 1, 0));
  for (int e = 0; e < E; ++e) {
    const auto& inc = t.incidences(e);
    if (inc[0].tri != inc[1].tri) {
      rows[e][inc[0].tri] ^= 1;
      rows[e][inc[1].tri] ^= 1;
    }
    rows[e][V] = (a[e] != b[e]) ? 1 : 0;
  }
  int rank = 0;
  for (int col = 0; col < V && rank < E; ++col) {
    int pivot = -1;
    for (int r = rank; r < E; ++r)
      if (rows[r][col]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < E; ++r)
      if (r != rank && rows[r][col])
        for (int cc = col; cc <= V; ++cc) rows[r][cc] ^= rows[rank][cc];
    ++rank;
  }
  for (int r = rank; r < E; ++r)
    if (rows[r][V]) return false;
  return true;
}

PunctureFan puncture_fan(const Triangulation& t, int puncture) {
  if (puncture < 0 || puncture >= t.punctures()) throw std::invalid_argument("no such puncture");
  // Find the canonical start: smallest entering edge id, tie-broken by
  // (triangle, corner).
  int best_tri = -1, best_k = -1, best_enter = -1;
  for (int tri = 0; tri < t.num_triangles(); ++tri)
    for (int k = 0; k < 3; ++k) {
      if (t.triangle(tri).corners[k] != puncture) continue;
      int enter = t.triangle(tri).edges[(k + 1) % 3];
      if (best_tri < 0 || enter < best_enter ||
          (enter == best_enter && (tri < best_tri || (tri == best_tri && k < best_k)))) {
        best_tri = tri;
        best_k = k;
        best_enter = enter;
      }
    }
  if (best_tri < 0) throw std::invalid_argument("puncture has no corners");
  PunctureFan fan;
  fan.puncture = puncture;
  fan.corners = walk_fan(t, best_tri, best_k);
  return fan;
}

Fatgraph dual_fatgraph(const Triangulation& t) {
  Fatgraph g;
  g.num_vertices = t.num_triangles();
  for (int e = 0; e < t.num_edges(); ++e) {
    const auto& inc = t.incidences(e);
    g.edges.push_back(FatgraphEdge{e, inc[0].tri, inc[1].tri});
  }
  for (const auto& tri : t.triangles()) g.cyclic.push_back(tri.edges);
  return g;
}

bool flip_is_generic(const Triangulation& t, int edge) {
  const auto& inc = t.incidences(edge);
  if (inc[0].tri == inc[1].tri) return false;
  const Triangle& t0 = t.triangle(inc[0].tri);
  const Triangle& t1 = t.triangle(inc[1].tri);
  std::set<int> outer;
  for (int s = 0; s < 3; ++s) {
    if (s != inc[0].side) outer.insert(t0.edges[s]);
    if (s != inc[1].side) outer.insert(t1.edges[s]);
  }
  return outer.size() == 4 && outer.count(edge) == 0;
}

FlipResult flip(const Triangulation& t, const Orientation& o, int edge) {
  if (edge < 0 || edge >= t.num_edges()) throw std::domain_error("flip: no such edge");
  if (!flip_is_generic(t, edge))
    throw std::domain_error("flip: edge " + std::to_string(edge) +
                            " is not generic (self-glued triangle or repeated outer edge)");
  const auto& inc = t.incidences(edge);
  // The arrow of the diagonal points tail -> head; head plays the theta role.
  int head_inc = (o[edge] > 0) ? 1 : 0;
  const EdgeIncidence& hi = inc[head_inc];
  const EdgeIncidence& ti = inc[1 - head_inc];
  const Triangle& ht = t.triangle(hi.tri);
  const Triangle& tt = t.triangle(ti.tri);
  // Head triangle ccw with the diagonal first: (e, b, a); tail: (e, d, c).
  int b_edge = ht.edges[(hi.side + 1) % 3];
  int a_edge = ht.edges[(hi.side + 2) % 3];
  int d_edge = tt.edges[(ti.side + 1) % 3];
  int c_edge = tt.edges[(ti.side + 2) % 3];
  // Quadrilateral punctures: head corners rotated e-first = (E, N, W),
  // tail corners rotated e-first = (W, S, E).
  int pE = ht.corners[hi.side];
  int pN = ht.corners[(hi.side + 1) % 3];
  int pW = ht.corners[(hi.side + 2) % 3];
  int pS = tt.corners[(ti.side + 1) % 3];

  std::vector<Triangle> tris = t.triangles();
  // Left triangle (d, f, a), corners (S, N, W) -> keeps the head id.
  tris[hi.tri] = Triangle{{d_edge, edge, a_edge}, {pS, pN, pW}};
  // Right triangle (b, f, c), corners (N, S, E) -> keeps the tail id.
  tris[ti.tri] = Triangle{{b_edge, edge, c_edge}, {pN, pS, pE}};

  FlipResult r{Triangulation(t.genus(), t.punctures(), std::move(tris), t.num_edges()),
               o,
               edge,
               hi.tri,
               ti.tri,
               a_edge,
               b_edge,
               c_edge,
               d_edge};
  // Spin-graph evolution: the b-slot arrow reverses, the new diagonal points
  // from the nu (tail-id) side into the mu (head-id) side.
  r.orientation[b_edge] = -r.orientation[b_edge];
  const auto& new_inc = r.triangulation.incidences(edge);
  int toward_head = (new_inc[1].tri == hi.tri) ? 1 : -1;
  r.orientation[edge] = toward_head;
  return r;
}

std::vector<int> generic_flippable_edges(const Triangulation& t) {
  std::vector<int> out;
  for (int e = 0; e < t.num_edges(); ++e)
    if (flip_is_generic(t, e)) out.push_back(e);
  return out;
}

}  // namespace superteich
