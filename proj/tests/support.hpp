#ifndef SUPERTEICH_TESTS_SUPPORT_HPP
#define SUPERTEICH_TESTS_SUPPORT_HPP

#include <cmath>
#include <random>
#include <vector>

#include "superteich/holonomy.hpp"
#include "superteich/minkowski.hpp"
#include "superteich/superlinalg.hpp"
#include "superteich/surface.hpp"
#include "superteich/teich.hpp"

namespace sttest {

using namespace superteich;

using Rng = std::mt19937_64;

// --- surfaces -------------------------------------------------------------

// Once-punctured torus: two triangles glued along all three edges.
inline Triangulation once_punctured_torus() {
  std::vector<Triangle> tris = {
      Triangle{{0, 1, 2}, {0, 0, 0}},
      Triangle{{0, 1, 2}, {0, 0, 0}},
  };
  return Triangulation(1, 1, std::move(tris), 3);
}

// Thrice-punctured sphere: two triangles, opposite orientations.
inline Triangulation thrice_punctured_sphere() {
  std::vector<Triangle> tris = {
      Triangle{{0, 1, 2}, {0, 1, 2}},
      Triangle{{2, 1, 0}, {1, 0, 2}},
  };
  return Triangulation(0, 3, std::move(tris), 3);
}

// Four-punctured sphere: the boundary of a tetrahedron with ideal vertices.
inline Triangulation tetrahedron_sphere() {
  // vertices 0..3; edges 01:0 02:1 03:2 12:3 13:4 23:5
  std::vector<Triangle> tris = {
      Triangle{{0, 3, 1}, {1, 2, 0}},  // (0,1,2)
      Triangle{{1, 5, 2}, {2, 3, 0}},  // (0,2,3)
      Triangle{{2, 4, 0}, {3, 1, 0}},  // (0,3,1)
      Triangle{{4, 5, 3}, {3, 2, 1}},  // (1,3,2)
  };
  return Triangulation(0, 4, std::move(tris), 6);
}

// Splits triangle t of a triangulation by a new ideal vertex joined to its
// three corners; adds one puncture, three edges and two triangles.
inline Triangulation split_triangle(const Triangulation& t, int which) {
  std::vector<Triangle> tris = t.triangles();
  const Triangle old = tris[which];
  int e0 = t.num_edges();
  int newp = t.punctures();
  // Cone edge m_k runs from corner k to the new vertex; side e_k keeps its
  // corner labels, the apex corner gets the new puncture.
  auto m = [&](int k) { return e0 + k; };
  tris[which] = Triangle{{old.edges[0], m(0), m(2)}, {old.corners[0], newp, old.corners[2]}};
  tris.push_back(Triangle{{old.edges[1], m(1), m(0)}, {old.corners[1], newp, old.corners[0]}});
  tris.push_back(Triangle{{old.edges[2], m(2), m(1)}, {old.corners[2], newp, old.corners[1]}});
  return Triangulation(t.genus(), t.punctures() + 1, std::move(tris), t.num_edges() + 3);
}

// Twice-punctured torus from the once-punctured one.
inline Triangulation twice_punctured_torus() { return split_triangle(once_punctured_torus(), 1); }

// Genus-two surface with one puncture: octagon with the aba'b'cdc'd' side
// pairing, fanned from one vertex.
inline Triangulation genus_two_once_punctured() {
  // edges: a=0 b=1 c=2 d=3, diagonals from vertex 0 to 2..6: 4..8
  std::vector<Triangle> tris = {
      Triangle{{0, 1, 4}, {0, 0, 0}},  // (v0,v1,v2): sides s0=a, s1=b, diag d2
      Triangle{{4, 0, 5}, {0, 0, 0}},  // (v0,v2,v3): d2, s2=a, d3
      Triangle{{5, 1, 6}, {0, 0, 0}},  // (v0,v3,v4): d3, s3=b, d4
      Triangle{{6, 2, 7}, {0, 0, 0}},  // (v0,v4,v5): d4, s4=c, d5
      Triangle{{7, 3, 8}, {0, 0, 0}},  // (v0,v5,v6): d5, s5=d, d6
      Triangle{{8, 2, 3}, {0, 0, 0}},  // (v0,v6,v7): d6, s6=c, s7=d
  };
  return Triangulation(2, 1, std::move(tris), 9);
}

struct SuiteSurface {
  const char* name;
  Triangulation tri;
};

inline std::vector<SuiteSurface> suite_surfaces() {
  std::vector<SuiteSurface> out;
  out.push_back({"(0,3)", thrice_punctured_sphere()});
  out.push_back({"(0,4)", tetrahedron_sphere()});
  out.push_back({"(1,1)", once_punctured_torus()});
  out.push_back({"(1,2)", twice_punctured_torus()});
  out.push_back({"(2,1)", genus_two_once_punctured()});
  return out;
}

// --- random data ----------------------------------------------------------

inline GrassmannNumber random_grassmann(Rng& rng, int n, int max_terms = 6,
                                        double lo = -10, double hi = 10) {
  std::uniform_real_distribution<double> coeff(lo, hi);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<uint64_t> mask(0, (n >= 64) ? ~uint64_t(0)
                                                            : ((uint64_t(1) << n) - 1));
  std::vector<GrassmannNumber::Term> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) terms.push_back({mask(rng), coeff(rng)});
  return GrassmannNumber::from_terms(n, std::move(terms));
}

inline GrassmannNumber random_homogeneous(Rng& rng, int n, bool odd, int max_terms = 4,
                                          double lo = -2, double hi = 2) {
  std::uniform_real_distribution<double> coeff(lo, hi);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<uint64_t> mask(0, (n >= 64) ? ~uint64_t(0)
                                                            : ((uint64_t(1) << n) - 1));
  std::vector<GrassmannNumber::Term> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    uint64_t m = mask(rng);
    if ((__builtin_popcountll(m) % 2 == 1) != odd) {
      // adjust parity by toggling the lowest free generator
      for (int b = 0; b < n; ++b) {
        uint64_t bit = uint64_t(1) << b;
        if (!(m & bit)) {
          m |= bit;
          break;
        }
      }
      if ((__builtin_popcountll(m) % 2 == 1) != odd) continue;
    }
    terms.push_back({m, coeff(rng)});
  }
  return GrassmannNumber::from_terms(n, std::move(terms));
}

inline GrassmannNumber random_odd(Rng& rng, int n, double lo = -2, double hi = 2) {
  return random_homogeneous(rng, n, true, 4, lo, hi);
}

inline GrassmannNumber random_even_positive(Rng& rng, int n, double body_lo = 0.3,
                                            double body_hi = 3.0) {
  std::uniform_real_distribution<double> body(body_lo, body_hi);
  GrassmannNumber soul = random_homogeneous(rng, n, false, 3, -0.5, 0.5).soul();
  return GrassmannNumber::scalar(n, body(rng)) + soul;
}

/// Random OSp(1|2) element: a product of special matrices.
inline SuperMatrix random_osp(Rng& rng, int n, int factors = 4) {
  std::uniform_int_distribution<int> kind(0, 4);
  SuperMatrix g = SuperMatrix::identity(n);
  for (int i = 0; i < factors; ++i) {
    switch (kind(rng)) {
      case 0:
        g = matmul(g, make_special(SpecialKind::D, random_even_positive(rng, n)));
        break;
      case 1:
        g = matmul(g, make_special(SpecialKind::PPlus, random_odd(rng, n)));
        break;
      case 2:
        g = matmul(g, make_special(SpecialKind::Upsilon, random_even_positive(rng, n)));
        break;
      case 3:
        g = matmul(g, special_j(n));
        break;
      default: {
        // lower Borel translation
        SuperMatrix b = SuperMatrix::identity(n);
        std::uniform_real_distribution<double> val(-1.5, 1.5);
        b.at(2, 0) = GrassmannNumber::scalar(n, val(rng)) +
                     random_homogeneous(rng, n, false, 2, -0.3, 0.3).soul();
        g = matmul(g, b);
        break;
      }
    }
  }
  return g;
}

inline Orientation random_orientation(Rng& rng, const Triangulation& t) {
  std::uniform_int_distribution<int> bit(0, 1);
  Orientation o(t.num_edges());
  for (auto& v : o) v = bit(rng) ? 1 : -1;
  return o;
}

/// Random decorated coordinates: log-uniform lambda bodies in [0.1, 10] and
/// mu = random linear combination of the generators with coefficients in
/// [-2, 2] (one generator per triangle).
inline DecoratedCoords random_coords(Rng& rng, const Triangulation& t,
                                     double mu_lo = -2.0, double mu_hi = 2.0) {
  const int n = t.num_triangles();
  std::uniform_real_distribution<double> loglam(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> mu(mu_lo, mu_hi);
  std::vector<GrassmannNumber> lambda, mus;
  for (int e = 0; e < t.num_edges(); ++e)
    lambda.push_back(GrassmannNumber::scalar(n, std::exp(loglam(rng))));
  for (int tr = 0; tr < t.num_triangles(); ++tr) {
    std::vector<GrassmannNumber::Term> terms;
    for (int g = 1; g <= n; ++g) terms.push_back({uint64_t(1) << (g - 1), mu(rng)});
    mus.push_back(GrassmannNumber::from_terms(n, std::move(terms)));
  }
  return DecoratedCoords::make(n, std::move(lambda), std::move(mus));
}

}  // namespace sttest

#endif
