#pragma once
#include <vector>
#include "capflow/geometry.hpp"

namespace capflow {

// The n+2 adjusted quermassintegrals of the enclosed region, together with
// the raw ingredients they are assembled from.
struct QuermassVector {
    std::vector<double> W;       // W_0 .. W_{n+1}
    double volume = 0.0;         // enclosed (n+1)-volume
    std::vector<double> Hint;    // integral of H_k over the surface, k = 0..n
    double alpha = 0.0;          // polar angle of the boundary circle, arccos(z_M)
    std::vector<double> WS;      // quermassintegrals of the geodesic ball B_alpha in S^n, l = 0..n
};

// Quermassintegrals of the geodesic ball of radius alpha in S^n via the
// recursion  W_0 = |S^{n-1}| int_0^alpha sin^{n-1},  W_1 = |S^{n-1}| sin^{n-1}(alpha)/n,
// W_{l+1} = (1/n)|S^{n-1}| sin^{n-1}(alpha) cot^l(alpha) + l/(n-l+1) W_{l-1}.
// The convention is certified by the variation identity (see variation_check).
double spherical_ball_W(int n, double alpha, int l);

// int_0^alpha sin^p(t) dt by Gauss–Legendre quadrature.
double sine_power_integral(int p, double alpha);

// Enclosed volume of the region between the surface and the spherical cap
// of S^n around +e cut off by the boundary circle; contour integral of
// |S^{n-1}| r^n/n dz over profile plus unit-circle arc up to (0,1).
double enclosed_volume(const ProfileCurve& c);

double curvature_integral(const ProfileCurve& c, int k);

QuermassVector quermass_theta(const ProfileCurve& c);

// Exact values on an analytic cap of radius R (all ingredients closed-form
// up to the 1D sine-power integrals). Used to build equality tables without
// discretization error.
QuermassVector quermass_theta_cap(int n, double theta, double R);

// Exact values on the flat disk {z = cos(theta)}.
QuermassVector quermass_theta_flat(int n, double theta);

// First-variation test: displace the curve by delta * f * normal, re-fit the
// capillary constraints, and compare the finite-difference derivative of
// W_k against (n+1-k)/(n+1) * int H_k f dA evaluated with the *realized*
// normal speed of the constrained family. Central differences at delta and
// delta/2 with Richardson extrapolation in both the derivative and the
// realized speed. Returns the relative residual.
double variation_check(const ProfileCurve& c, const std::vector<double>& f, int k, double delta);

} // namespace capflow
