#pragma once
#include "capflow/geometry.hpp"

namespace capflow {

// Convexity condition: phi * h >= psi * g with phi = z - cos(theta),
// psi = 1 + nu_z, plus the height bound z >= cos(theta). Axisymmetrically
// the tensor is diagonal, so its eigenvalues are phi*kprof - psi and
// phi*krot - psi exactly.
struct HorocapReport {
    double min_height_slack = 0.0; // min_j z_j - cos(theta)
    double min_rho = 0.0;          // min eigenvalue over nodes and directions
    bool strict = false;           // both minima above the strictness tolerance
};

inline constexpr double kStrictTol = 1e-10;

HorocapReport horocap_residual(const ProfileCurve& c);

// Closed-form eigenvalue on a cap of radius R whose axis is tilted by gamma
// against the reference direction:
//   rho = (sqrt(R^2 + 2 R cos(theta) + 1) cos(gamma) - cos(theta) - R) / R,
// constant over the cap. Zero exactly at cos(gamma) = (cos(theta)+R)/center.
double cap_horocap_residual(double theta, double R, double gamma);

// max_j <x_j - cos(theta) e, nu_j>; <= 0 for convex capillary surfaces.
// Throws invalid_input if the curve is visibly non-convex.
double support_check(const ProfileCurve& c);

} // namespace capflow
