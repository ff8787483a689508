#pragma once
#include <vector>

namespace capflow {

// Cubic spline with not-a-knot end conditions on arbitrary strictly
// increasing knots. Evaluation clamps to the end polynomials, so moderate
// extrapolation beyond the last knot stays cubic (used when extending a
// profile curve to the unit circle).
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(const std::vector<double>& x, const std::vector<double>& y);

    double operator()(double t) const;
    double deriv(double t) const;
    double deriv2(double t) const;

private:
    std::vector<double> x_, y_, s2_; // knots, values, node second derivatives
    int segment(double t) const;
};

// Monotone piecewise-cubic interpolant (Fritsch–Carlson slope limiting).
// Requires strictly increasing x; preserves monotonicity of y.
class PchipSpline {
public:
    PchipSpline() = default;
    PchipSpline(const std::vector<double>& x, const std::vector<double>& y);

    double operator()(double t) const; // throws outside [x_front, x_back]

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::vector<double> x_, y_, m_;
};

} // namespace capflow
