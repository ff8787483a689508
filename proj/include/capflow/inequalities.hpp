#pragma once
#include <vector>
#include "capflow/geometry.hpp"
#include "capflow/spline.hpp"

namespace capflow {

// Equality table for the k-th quermassintegral inequality: rows are
// (R, W_{k-1}(cap R), W_k(cap R)) on a log grid, with a terminal row for
// the flat-disk limit R -> infinity. Both W columns are strictly
// increasing, so W_k = fk(W_{k-1}) inverts through a monotone interpolant.
struct FkTable {
    int n = 2;
    int k = 1;
    double theta = 0.0;
    std::vector<double> R;      // grid radii; last row is the flat-disk limit (R = inf)
    std::vector<double> Wkm1;
    std::vector<double> Wk;
    PchipSpline fk;
};

// Analytic caps evaluated exactly; throws property_violation if either
// column fails strict monotonicity (a convention audit failure).
FkTable tabulate_fk(int n, double theta, int k,
                    int samples = 513, double Rmin = 1e-3, double Rmax = 1e3);

// W_k(curve) - fk(W_{k-1}(curve)); >= 0 expected on horocap-convex input.
// Throws invalid_input if W_{k-1} falls outside the table range.
double check_inequality(const ProfileCurve& c, const FkTable& table);

// int (H_{k-1} <x + cos(theta) nu, e> - H_k <X_e, nu>) dA, zero on every
// capillary hypersurface; returned relative to int H_{k-1} |<x+cos(theta)nu,e>|.
double hsiung_minkowski_residual(const ProfileCurve& c, int k);

// int (<x + cos(theta) nu, e>/H_1 - <X_e, nu>) dA, >= 0 on convex capillary
// surfaces with equality on caps. Throws numeric_error if H_1 <= 0 anywhere.
double heintze_karcher_value(const ProfileCurve& c);

} // namespace capflow
