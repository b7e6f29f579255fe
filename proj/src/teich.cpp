#include "superteich/teich.hpp"

#include <stdexcept>

namespace superteich {

DecoratedCoords DecoratedCoords::make(int num_generators, std::vector<GrassmannNumber> lambda,
                                      std::vector<GrassmannNumber> mu) {
  DecoratedCoords c{num_generators, std::move(lambda), std::move(mu)};
  for (const auto& l : c.lambda)
    if (l.num_generators() != num_generators) throw std::invalid_argument("lambda algebra mismatch");
  for (const auto& m : c.mu)
    if (m.num_generators() != num_generators) throw std::invalid_argument("mu algebra mismatch");
  return c;
}

void validate_coords(const Triangulation& t, const DecoratedCoords& c) {
  if (static_cast<int>(c.lambda.size()) != t.num_edges())
    throw std::invalid_argument("need one lambda-length per edge");
  if (static_cast<int>(c.mu.size()) != t.num_triangles())
    throw std::invalid_argument("need one mu-invariant per triangle");
  for (int e = 0; e < t.num_edges(); ++e) {
    if (!c.lambda[e].is_even())
      throw std::domain_error("lambda[" + std::to_string(e) + "] must be even");
    if (c.lambda[e].body() <= 0)
      throw std::domain_error("lambda[" + std::to_string(e) + "] must have positive body");
  }
  for (int tr = 0; tr < t.num_triangles(); ++tr)
    if (!c.mu[tr].is_odd())
      throw std::domain_error("mu[" + std::to_string(tr) + "] must be odd");
}

DecoratedCoords canonicalize_mu_sign(DecoratedCoords c) {
  for (const auto& m : c.mu) {
    if (m.is_zero()) continue;
    if (m.terms().front().second < 0)
      for (auto& mm : c.mu) mm = -mm;
    break;
  }
  return c;
}

GrassmannNumber cross_ratio(const QuadData& q) {
  return q.a * q.c * (q.b * q.d).inverse();
}

PtolemyResult ptolemy_flip(const QuadData& q) {
  if (!q.sigma.is_odd() || !q.theta.is_odd())
    throw std::domain_error("ptolemy_flip: sigma and theta must be odd");
  const int n = q.a.num_generators();
  GrassmannNumber chi = cross_ratio(q);
  GrassmannNumber rchi = chi.sqrt();
  GrassmannNumber one = GrassmannNumber::scalar(n, 1.0);
  GrassmannNumber opc_inv = (one + chi).inverse();
  GrassmannNumber ropc_inv = (one + chi).sqrt().inverse();
  PtolemyResult r;
  r.f = q.e.inverse() * (q.a * q.c + q.b * q.d) * (one + q.sigma * q.theta * rchi * opc_inv);
  r.nu = (q.sigma + q.theta * rchi) * ropc_inv;
  r.mu = (q.sigma * rchi - q.theta) * ropc_inv;
  return r;
}

QuadData read_quad(const Triangulation& t, const Orientation& o, const DecoratedCoords& c,
                   int edge) {
  if (!flip_is_generic(t, edge))
    throw std::domain_error("read_quad: edge " + std::to_string(edge) + " is not generic");
  const auto& inc = t.incidences(edge);
  int head_inc = (o[edge] > 0) ? 1 : 0;
  const EdgeIncidence& hi = inc[head_inc];
  const EdgeIncidence& ti = inc[1 - head_inc];
  const Triangle& ht = t.triangle(hi.tri);
  const Triangle& tt = t.triangle(ti.tri);
  QuadData q;
  q.e = c.lambda[edge];
  q.b = c.lambda[ht.edges[(hi.side + 1) % 3]];
  q.a = c.lambda[ht.edges[(hi.side + 2) % 3]];
  q.d = c.lambda[tt.edges[(ti.side + 1) % 3]];
  q.c = c.lambda[tt.edges[(ti.side + 2) % 3]];
  q.sigma = c.mu[ti.tri];
  q.theta = -c.mu[hi.tri];
  return q;
}

DecoratedFlipResult flip_decorated(const Triangulation& t, const Orientation& o,
                                   const DecoratedCoords& c, int edge) {
  QuadData q = read_quad(t, o, c, edge);
  PtolemyResult delta = ptolemy_flip(q);
  FlipResult fr = flip(t, o, edge);
  DecoratedCoords nc = c;
  nc.lambda[edge] = delta.f;
  nc.mu[fr.head_tri] = delta.mu;  // left triangle {a, d}
  nc.mu[fr.tail_tri] = delta.nu;  // right triangle {b, c}
  return DecoratedFlipResult{std::move(fr.triangulation), std::move(fr.orientation), std::move(nc),
                             std::move(delta), edge};
}

FanData fan_data(const Triangulation& t, const DecoratedCoords& c, const PunctureFan& fan,
                 const Orientation& o) {
  FanData out;
  const int n = static_cast<int>(fan.corners.size());
  for (int k = 0; k < n; ++k) {
    const FanCorner& cur = fan.corners[k];
    const FanCorner& nxt = fan.corners[(k + 1) % n];
    int opp_cur = t.triangle(cur.tri).edges[(cur.corner + 2) % 3];
    int opp_nxt = t.triangle(nxt.tri).edges[(nxt.corner + 2) % 3];
    GrassmannNumber chi = c.lambda[opp_cur] * c.lambda[nxt.leave_edge] *
                          (c.lambda[cur.enter_edge] * c.lambda[opp_nxt]).inverse();
    out.chi.push_back(chi);
    out.theta.push_back(c.mu[cur.tri]);
    // Traversal crosses leave_edge from this corner's incidence; the stored
    // +1 direction is incidence 0 -> incidence 1.
    bool same = (cur.leave_from_incidence == 0) == (o[cur.leave_edge] > 0);
    out.eps.push_back(same ? -1 : 1);
  }
  return out;
}

GrassmannNumber cross_ratio_product(const FanData& f) {
  if (f.chi.empty()) throw std::invalid_argument("empty fan");
  GrassmannNumber p = GrassmannNumber::scalar(f.chi.front().num_generators(), 1.0);
  for (const auto& x : f.chi) p *= x;
  return p;
}

}  // namespace superteich
