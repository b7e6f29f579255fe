#ifndef SUPERTEICH_TEICH_HPP
#define SUPERTEICH_TEICH_HPP

#include "superteich/grassmann.hpp"
#include "superteich/surface.hpp"

namespace superteich {

/// Decorated coordinates: one even lambda-length with positive body per edge,
/// one odd mu-invariant per triangle (defined modulo one overall sign).
struct DecoratedCoords {
  int num_generators = 0;
  std::vector<GrassmannNumber> lambda;  // indexed by edge id
  std::vector<GrassmannNumber> mu;      // indexed by triangle id

  static DecoratedCoords make(int num_generators, std::vector<GrassmannNumber> lambda,
                              std::vector<GrassmannNumber> mu);
};

void validate_coords(const Triangulation& t, const DecoratedCoords& c);

/// Flips the global mu sign so that the first nonzero coefficient (triangles
/// in id order, basis masks ascending) is positive; idempotent.
DecoratedCoords canonicalize_mu_sign(DecoratedCoords c);

/// Quadrilateral data in the flip picture: lambda-lengths a (upper left),
/// b (upper right), c (lower right), d (lower left), diagonal e; theta above,
/// sigma below.
struct QuadData {
  GrassmannNumber a, b, c, d, e;
  GrassmannNumber sigma, theta;
};

/// chi = a c / (b d).
GrassmannNumber cross_ratio(const QuadData& q);

struct PtolemyResult {
  GrassmannNumber f;   // new diagonal: e f = (ac+bd)(1 + sigma theta sqrt(chi)/(1+chi))
  GrassmannNumber mu;  // left triangle {a,d}: (sigma sqrt(chi) - theta)/sqrt(1+chi)
  GrassmannNumber nu;  // right triangle {b,c}: (sigma + theta sqrt(chi))/sqrt(1+chi)
};

PtolemyResult ptolemy_flip(const QuadData& q);

/// Reads the quadrilateral around an edge using the spin-graph arrow to fix
/// the roles: sigma = mu[tail triangle], theta = -mu[head triangle].  The
/// sign makes flipping the same edge twice the exact identity.
QuadData read_quad(const Triangulation& t, const Orientation& o, const DecoratedCoords& c,
                   int edge);

struct DecoratedFlipResult {
  Triangulation triangulation;
  Orientation orientation;
  DecoratedCoords coords;
  PtolemyResult delta;
  int edge = -1;
};

/// Combinatorial flip plus the coordinate update; throws on non-generic input.
DecoratedFlipResult flip_decorated(const Triangulation& t, const Orientation& o,
                                   const DecoratedCoords& c, int edge);

/// Per-corner monodromy data around a puncture: cross ratio chi_k anchored at
/// the fan edge crossed after corner k, the corner triangle's odd parameter
/// theta_k, and epsilon_k = -1 iff the traversal agrees with the stored
/// orientation of the crossed fatgraph edge.
struct FanData {
  std::vector<GrassmannNumber> chi;
  std::vector<GrassmannNumber> theta;
  std::vector<int> eps;
};

FanData fan_data(const Triangulation& t, const DecoratedCoords& c, const PunctureFan& fan,
                 const Orientation& o);

/// Product of all chi_k; telescopes to 1 exactly around every fan.
GrassmannNumber cross_ratio_product(const FanData& f);

}  // namespace superteich

#endif
