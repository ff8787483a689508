#include "capflow/convexity.hpp"
#include "capflow/errors.hpp"

#include <algorithm>
#include <cmath>

namespace capflow {

HorocapReport horocap_residual(const ProfileCurve& c) {
    const SurfaceFrame fr = frame(c);
    const double ct = std::cos(c.theta);
    HorocapReport rep;
    rep.min_height_slack = 1e300;
    rep.min_rho = 1e300;
    for (int j = 0; j <= c.M(); ++j) {
        const double phi = c.z[j] - ct;
        const double psi = 1.0 + fr.nz[j];
        rep.min_height_slack = std::min(rep.min_height_slack, phi);
        rep.min_rho = std::min({rep.min_rho, phi * fr.kprof[j] - psi, phi * fr.krot[j] - psi});
    }
    rep.strict = rep.min_height_slack > kStrictTol && rep.min_rho > kStrictTol;
    return rep;
}

double cap_horocap_residual(double theta, double R, double gamma) {
    if (!(R > 0.0)) throw invalid_input("cap radius must be positive");
    if (gamma < 0.0 || gamma >= M_PI / 2.0)
        throw invalid_input("tilt must lie in [0, pi/2)");
    const double d = std::sqrt(R * R + 2.0 * R * std::cos(theta) + 1.0);
    return (d * std::cos(gamma) - std::cos(theta) - R) / R;
}

double support_check(const ProfileCurve& c) {
    const SurfaceFrame fr = frame(c);
    double kmin = 1e300;
    for (int j = 0; j <= c.M(); ++j)
        kmin = std::min({kmin, fr.kprof[j], fr.krot[j]});
    if (kmin < -1e-8)
        throw invalid_input("support_check: curve is not convex");
    const double ct = std::cos(c.theta);
    double worst = -1e300;
    for (int j = 0; j <= c.M(); ++j) {
        const double v = c.r[j] * fr.nr[j] + (c.z[j] - ct) * fr.nz[j];
        worst = std::max(worst, v);
    }
    return worst;
}

} // namespace capflow
