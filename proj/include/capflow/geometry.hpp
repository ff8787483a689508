#pragma once
#include <string>
#include <utility>
#include <vector>

namespace capflow {

// Axisymmetric hypersurface in the unit ball, stored as its profile
// polyline in the (r, z) half-plane. Node 0 sits on the symmetry axis
// (r = 0), node M on the unit circle. The reference direction e is the
// +z axis throughout.
struct ProfileCurve {
    int n = 2;          // hypersurface dimension (ambient ball is n+1 dimensional)
    double theta = 0.0; // contact angle with the sphere, in (0, pi/2]
    std::vector<double> r, z;

    int M() const { return static_cast<int>(r.size()) - 1; }
};

// Per-node frame data from second-order finite differences on the
// (assumed uniform) arclength grid. ds is the nominal spacing, weight
// the trapezoid quadrature weight |S^{n-1}| r^{n-1} ds.
struct SurfaceFrame {
    std::vector<double> tr, tz;     // unit tangent
    std::vector<double> nr, nz;     // unit normal (z', -r')
    std::vector<double> kprof;      // profile principal curvature
    std::vector<double> krot;       // rotational principal curvature (multiplicity n-1)
    std::vector<double> weight;
    double ds = 0.0;
    double length = 0.0;
};

struct CheckItem {
    std::string name;
    bool pass = false;
    double slack = 0.0; // positive = margin, negative = violation size
};

struct ValidationReport {
    std::vector<CheckItem> items;
    bool ok() const;
};

double sphere_area(int n); // |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2)

// Cumulative polyline arclength, s[0] = 0.
std::vector<double> arclength(const std::vector<double>& r, const std::vector<double>& z);

// Cap of radius R meeting the sphere at angle theta, centered on the axis
// at height sqrt(R^2 + 2 R cos(theta) + 1). Uniform arclength nodes.
ProfileCurve make_cap(int n, double theta, double R, int M);

// The disk {z = cos(theta), 0 <= r <= sin(theta)}: the flat degenerate
// member of the equality family.
ProfileCurve make_flat_ball(int n, double theta, int M);

// Cap displaced by eps * cos(m * pi * s / L) along the normal, then
// re-fitted to the constraints: extended/trimmed to the unit circle,
// contact angle restored by a boundary-layer bend, resampled, boundary
// node slaved. strict_out (optional) reports strict horocap-convexity.
ProfileCurve make_perturbed_cap(int n, double theta, double R, int mode, double eps,
                                int M, bool* strict_out = nullptr);

SurfaceFrame frame(const ProfileCurve& c);

double contact_angle(const ProfileCurve& c);

// Cubic-spline resample to Mp+1 uniform arclength stations; endpoints kept,
// boundary node renormalized onto the unit circle.
ProfileCurve resample(const ProfileCurve& c, int Mp);

// Spline the polyline and move its far endpoint to the exact intersection
// with the unit circle (Newton on |x(s)|^2 - 1; trims or extends as needed),
// then resample to M+1 nodes.
ProfileCurve trim_to_circle(const ProfileCurve& c, int M);

// Bend the last fraction of the curve by c * q^2 (1-q) along the normal
// (q ramps over the layer, vanishing at the boundary node) until the
// measured contact angle equals theta. Newton on the amplitude.
bool smooth_angle_repair(ProfileCurve& c, double layer_frac = 0.3);

// Reposition the boundary node on the unit circle so the measured contact
// angle equals theta (1D Newton on the polar angle).
bool slave_boundary(ProfileCurve& c);

// Best-fit cap radius and the sup deviation | |x - center(R)| - R |.
std::pair<double, double> hausdorff_to_cap(const ProfileCurve& c);

ValidationReport validate(const ProfileCurve& c);

} // namespace capflow
