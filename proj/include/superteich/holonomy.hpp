#ifndef SUPERTEICH_HOLONOMY_HPP
#define SUPERTEICH_HOLONOMY_HPP

#include <string>
#include <vector>

#include "superteich/superlinalg.hpp"
#include "superteich/teich.hpp"

namespace superteich {

/// One step of a path in the fatgraph: cross an edge with cross ratio chi and
/// triangle parameter theta, turning left (+, P^+) or right (-, P^-), with
/// eps = -1 when the segment runs along the stored orientation.
struct TurnStep {
  int eps = 1;
  GrassmannNumber chi;
  GrassmannNumber theta;
  bool left = true;
};

/// Z_eps . Upsilon^chi . P_theta^{+/-}; for a left turn this is the lower
/// triangular matrix (c^{-1} 0 0 / -theta 1 0 / -c theta c c) with
/// c = -eps sqrt(chi).
SuperMatrix turn_factor(const TurnStep& s);

/// Ordered product of turn factors, read right to left (first step rightmost);
/// the empty path is the identity of the given algebra.
SuperMatrix path_holonomy(const std::vector<TurnStep>& steps, int num_generators);

struct ClosedForm {
  GrassmannNumber star0, star1, star2, star3;
};

/// The closed-form entries of the puncture monodromy
/// (star0 0 0 / -star1 1 0 / -star3 star2 star0) with c_k = -eps_k sqrt(chi_k):
/// star0 = prod c_k, star1 = sum_k theta_k prod_{j<k} c_j^{-1},
/// star2 = sum_k theta_k prod_{j>=k} c_j = star0 star1, and star3 the even
/// entry produced by the same induction.  Requires prod chi_k = 1.
ClosedForm closed_form(const FanData& f, double tol = 1e-9);

enum class PunctureType { NS, Ramond };

std::string to_string(PunctureType t);

struct MonodromyReport {
  int puncture = -1;
  int n = 0;                   // fan length
  int eps_minus_count = 0;     // segments aligned with the orientation
  SuperMatrix matrix;          // brute-force right-to-left product
  ClosedForm stars;            // closed form
  PunctureType type = PunctureType::NS;
  double closed_vs_product_residual = 0.0;
  double triangular_residual = 0.0;  // upper entries + (1,1)-slot deviation
  double osp_residual = 0.0;
  double sdet_residual = 0.0;
  double star2_identity_residual = 0.0;  // |star2 - star0 star1|
  GrassmannNumber constraint_residual;   // = star1
};

/// Monodromy around one puncture: brute-force product and closed form, with
/// the normal-form diagnostics filled in.
MonodromyReport puncture_monodromy(const Triangulation& t, const DecoratedCoords& c,
                                   const Orientation& o, int puncture, double tol = 1e-9);

/// Classification by the sign of star0, cross-checked against the projected
/// SL(2,R) trace (+2 / -2) and the fan-parity criterion (n and the number of
/// orientation-aligned segments must have equal parity for Ramond).  Throws
/// if the three criteria disagree.
PunctureType classify(const MonodromyReport& r, double tol = 1e-9);

/// The Ramond monodromy constraint star1 = 0 for this fan, returned as the
/// odd value star1; also checks that multiplying by star0 reproduces star2.
/// Throws when the puncture is NS (the constraint is vacuous there).
GrassmannNumber ramond_constraint(const FanData& f, double tol = 1e-9);

struct ConstraintReport {
  bool ok = true;
  int n_ramond = 0;
  int n_ns = 0;
  int rank = 0;
  int free_odd_dims = 0;      // (#triangles) - rank
  int expected_odd_dims = 0;  // 4g - 4 + 2 n_NS + n_R
  std::vector<int> ramond_punctures;
  std::vector<int> eliminated_triangles;  // pivot triangle per Ramond puncture
  std::vector<std::string> notes;
};

struct ImposeResult {
  DecoratedCoords coords;
  ConstraintReport report;
};

/// Imposes star1 = 0 at every Ramond puncture as one joint linear system in
/// the mu values, eliminating one designated mu per puncture by Gaussian
/// elimination with body partial pivoting.  Rank deficiency is reported, not
/// silently ignored.
ImposeResult impose_constraints(const Triangulation& t, const DecoratedCoords& c,
                                const Orientation& o, double tol = 1e-9);

/// For g in the lower-triangular normal form (s 0 0 / theta 1 0 / B -s theta s),
/// s = +-1: returns U with U g U^{-1} in standard form (s 0 0 / 0 1 0 / B 0 s).
/// NS case (s = -1) uses U = (1 0 0 / theta/2 1 0 / 0 -theta/2 1); Ramond case
/// (s = +1) returns the identity when theta = 0 and throws otherwise.
SuperMatrix conjugate_to_standard(const SuperMatrix& g, double tol = 1e-9);

}  // namespace superteich

#endif
