#ifndef SUPERTEICH_MINKOWSKI_HPP
#define SUPERTEICH_MINKOWSKI_HPP

#include <optional>

#include "superteich/superlinalg.hpp"

namespace superteich {

/// Point of super Minkowski space R^{2,1|2}: (x1, x2, y | phi, theta) with
/// x1, x2, y even and phi, theta odd.
struct SuperVector {
  GrassmannNumber x1, x2, y, phi, theta;

  static SuperVector make(GrassmannNumber x1, GrassmannNumber x2, GrassmannNumber y,
                          GrassmannNumber phi, GrassmannNumber theta);
  int num_generators() const { return x1.num_generators(); }
};

/// <A,B> = (x1 x2' + x1' x2)/2 - y y' + phi theta' + phi' theta.
GrassmannNumber inner(const SuperVector& a, const SuperVector& b);

/// sqrt of the inner product (requires an even value with positive body).
GrassmannNumber lambda_length(const SuperVector& a, const SuperVector& b);

/// <A,A> = 0 within tol with x1, x2 bodies nonnegative and not both zero.
/// Boundary rays such as (0,1,0|0,0) are accepted.
bool is_light_cone(const SuperVector& a, double tol = 1e-9);

/// Point matrix M_c with the symmetric odd pattern
/// (x1 phi y-c / phi c theta / y+c theta x2); c = 0 on the light cone.
SuperMatrix point_matrix(const SuperVector& a, const GrassmannNumber& c);

struct AdjointResult {
  SuperVector v;
  GrassmannNumber c;
};

/// Adjoint action g . M_c = g M_c g^st, read back into coordinates.  Requires
/// g in OSp(1|2); throws if the image does not match the point pattern.
/// Composition: adjoint_act(g, adjoint_act(h, A)) = adjoint_act(matmul(g,h), A).
AdjointResult adjoint_act(const SuperMatrix& g, const SuperVector& a, const GrassmannNumber& c);

/// Light-cone shortcut (c = 0).
SuperVector apply(const SuperMatrix& g, const SuperVector& a);

double max_abs_diff(const SuperVector& a, const SuperVector& b);

/// Spinor parametrization of the special light cone: the point with
/// coordinates (u^2, v^2, uv | u xi, v xi).
struct LightConeSpinor {
  GrassmannNumber u, xi, v;
};

SuperVector spinor_point(const LightConeSpinor& s);

/// Recovers the spinor of a special-light-cone point (principal branch).
/// Throws if the point is not on the special light cone within tol.
LightConeSpinor light_cone_spinor(const SuperVector& a, double tol = 1e-9);

struct StandardPositionData {
  GrassmannNumber r, t, s, phi;
};

/// Matches A = r(0,1,0|0,0), B = t(1,1,1|phi,phi), C = s(1,0,0|0,0) and
/// extracts (r,t,s,phi); nullopt on mismatch.
std::optional<StandardPositionData> is_standard_position(const SuperVector& a,
                                                         const SuperVector& b,
                                                         const SuperVector& c,
                                                         double tol = 1e-9);

/// Unique (up to the fermionic reflection) OSp element carrying the positive
/// triple (A,B,C) on the special light cone to standard position; returns the
/// representative whose scales come out with positive body.
SuperMatrix standardize_triple(const SuperVector& a, const SuperVector& b, const SuperVector& c,
                               double tol = 1e-9);

}  // namespace superteich

#endif
