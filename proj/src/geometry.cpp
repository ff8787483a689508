#include "capflow/geometry.hpp"
#include "capflow/convexity.hpp"
#include "capflow/errors.hpp"
#include "capflow/spline.hpp"

#include <algorithm>
#include <cmath>

namespace capflow {

bool ValidationReport::ok() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

double sphere_area(int n) {
    return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

std::vector<double> arclength(const std::vector<double>& r, const std::vector<double>& z) {
    std::vector<double> s(r.size(), 0.0);
    for (size_t j = 1; j < r.size(); ++j)
        s[j] = s[j - 1] + std::hypot(r[j] - r[j - 1], z[j] - z[j - 1]);
    return s;
}

static void check_domain(int n, double theta, int M) {
    if (n < 2) throw invalid_input("dimension n must be >= 2");
    if (!(theta > 0.0) || theta > M_PI / 2.0 + 1e-14)
        throw invalid_input("contact angle must lie in (0, pi/2]");
    if (M < 16) throw invalid_input("need at least 16 intervals");
}

ProfileCurve make_cap(int n, double theta, double R, int M) {
    check_domain(n, theta, M);
    if (!(R > 0.0)) throw invalid_input("cap radius must be positive");
    const double d = std::sqrt(R * R + 2.0 * R * std::cos(theta) + 1.0);
    const double zM = (1.0 + R * std::cos(theta)) / d;
    const double arg = (d - zM) / R;
    if (!(arg > -1.0 && arg < 1.0))
        throw numeric_error("cap arc fails to reach the unit circle");
    const double pmax = std::acos(arg);
    ProfileCurve c{n, theta, {}, {}};
    c.r.resize(M + 1);
    c.z.resize(M + 1);
    for (int j = 0; j <= M; ++j) {
        const double p = pmax * j / M;
        c.r[j] = R * std::sin(p);
        c.z[j] = d - R * std::cos(p);
    }
    c.r[0] = 0.0;
    return c;
}

ProfileCurve make_flat_ball(int n, double theta, int M) {
    check_domain(n, theta, M);
    ProfileCurve c{n, theta, {}, {}};
    c.r.resize(M + 1);
    c.z.assign(M + 1, std::cos(theta));
    const double rmax = std::sin(theta);
    for (int j = 0; j <= M; ++j) c.r[j] = rmax * j / M;
    return c;
}

SurfaceFrame frame(const ProfileCurve& c) {
    const int M = c.M();
    const auto& r = c.r;
    const auto& z = c.z;
    for (int j = 0; j < M; ++j)
        if (r[j] == r[j + 1] && z[j] == z[j + 1])
            throw numeric_error("frame: coincident consecutive nodes");
    const std::vector<double> s = arclength(r, z);
    const double h = s[M] / M;

    SurfaceFrame fr;
    fr.ds = h;
    fr.length = s[M];
    fr.tr.resize(M + 1);
    fr.tz.resize(M + 1);
    fr.nr.resize(M + 1);
    fr.nz.resize(M + 1);
    fr.kprof.resize(M + 1);
    fr.krot.resize(M + 1);
    fr.weight.resize(M + 1);

    std::vector<double> rp(M + 1), zp(M + 1), rpp(M + 1), zpp(M + 1);
    for (int j = 1; j < M; ++j) {
        rp[j] = (r[j + 1] - r[j - 1]) / (2.0 * h);
        zp[j] = (z[j + 1] - z[j - 1]) / (2.0 * h);
        rpp[j] = (r[j + 1] - 2.0 * r[j] + r[j - 1]) / (h * h);
        zpp[j] = (z[j + 1] - 2.0 * z[j] + z[j - 1]) / (h * h);
    }
    // axis: r extends oddly, z evenly across the rotation axis
    rp[0] = r[1] / h;
    zp[0] = 0.0;
    rpp[0] = 0.0;
    zpp[0] = 2.0 * (z[1] - z[0]) / (h * h);
    // boundary: second-order one-sided stencils
    rp[M] = (3.0 * r[M] - 4.0 * r[M - 1] + r[M - 2]) / (2.0 * h);
    zp[M] = (3.0 * z[M] - 4.0 * z[M - 1] + z[M - 2]) / (2.0 * h);
    rpp[M] = (2.0 * r[M] - 5.0 * r[M - 1] + 4.0 * r[M - 2] - r[M - 3]) / (h * h);
    zpp[M] = (2.0 * z[M] - 5.0 * z[M - 1] + 4.0 * z[M - 2] - z[M - 3]) / (h * h);

    const double A = sphere_area(c.n);
    for (int j = 0; j <= M; ++j) {
        const double tn = std::sqrt(rp[j] * rp[j] + zp[j] * zp[j]);
        if (!(tn > 0.0)) throw numeric_error("frame: vanishing tangent");
        fr.tr[j] = rp[j] / tn;
        fr.tz[j] = zp[j] / tn;
        fr.nr[j] = fr.tz[j];
        fr.nz[j] = -fr.tr[j];
        fr.kprof[j] = (zpp[j] * rp[j] - rpp[j] * zp[j]) / (tn * tn * tn);
        fr.krot[j] = (j == 0) ? zpp[0] / rp[0] : fr.tz[j] / r[j];
        // trapezoid weight from the actual segment lengths (the grid is only
        // nominally uniform while a flow step is in flight)
        const double w = (j == 0)   ? 0.5 * (s[1] - s[0])
                         : (j == M) ? 0.5 * (s[M] - s[M - 1])
                                    : 0.5 * (s[j + 1] - s[j - 1]);
        double rpow = 1.0;
        for (int p = 1; p < c.n; ++p) rpow *= r[j];
        fr.weight[j] = A * rpow * w;
    }
    return fr;
}

double contact_angle(const ProfileCurve& c) {
    const SurfaceFrame fr = frame(c);
    const int M = c.M();
    const double xdotnu = c.r[M] * fr.nr[M] + c.z[M] * fr.nz[M];
    return std::acos(std::clamp(-xdotnu, -1.0, 1.0));
}

ProfileCurve resample(const ProfileCurve& c, int Mp) {
    const std::vector<double> s = arclength(c.r, c.z);
    CubicSpline sr(s, c.r), sz(s, c.z);
    ProfileCurve out{c.n, c.theta, {}, {}};
    out.r.resize(Mp + 1);
    out.z.resize(Mp + 1);
    for (int j = 0; j <= Mp; ++j) {
        const double t = s.back() * j / Mp;
        out.r[j] = sr(t);
        out.z[j] = sz(t);
    }
    out.r[0] = 0.0;
    out.r[Mp] = c.r.back();
    out.z[Mp] = c.z.back();
    const double nrm = std::hypot(out.r[Mp], out.z[Mp]);
    out.r[Mp] /= nrm;
    out.z[Mp] /= nrm;
    return out;
}

ProfileCurve trim_to_circle(const ProfileCurve& c, int M) {
    const std::vector<double> s = arclength(c.r, c.z);
    CubicSpline sr(s, c.r), sz(s, c.z);
    double t = s.back();
    bool done = false;
    for (int it = 0; it < 80; ++it) {
        const double rr = sr(t), zz = sz(t);
        const double g = rr * rr + zz * zz - 1.0;
        const double dg = 2.0 * (rr * sr.deriv(t) + zz * sz.deriv(t));
        if (std::abs(dg) < 1e-14) break;
        t -= g / dg;
        if (std::abs(g) < 1e-15) { done = true; break; }
    }
    if (!done && std::abs(sr(t) * sr(t) + sz(t) * sz(t) - 1.0) > 1e-10)
        throw numeric_error("trim_to_circle: no intersection with the unit circle");
    ProfileCurve out{c.n, c.theta, {}, {}};
    out.r.resize(M + 1);
    out.z.resize(M + 1);
    for (int j = 0; j <= M; ++j) {
        const double u = t * j / M;
        out.r[j] = sr(u);
        out.z[j] = sz(u);
    }
    out.r[0] = 0.0;
    const double nrm = std::hypot(out.r[M], out.z[M]);
    out.r[M] /= nrm;
    out.z[M] /= nrm;
    return out;
}

bool smooth_angle_repair(ProfileCurve& c, double layer_frac) {
    const int M = c.M();
    const std::vector<double> s = arclength(c.r, c.z);
    const double L = s[M], s0 = (1.0 - layer_frac) * L;
    const SurfaceFrame fr = frame(c);
    std::vector<double> w(M + 1, 0.0);
    for (int j = 0; j <= M; ++j) {
        const double q = std::max((s[j] - s0) / (L - s0), 0.0);
        w[j] = q * q * (1.0 - q); // zero at the boundary node itself
    }
    auto apply = [&](double amp) {
        ProfileCurve out = c;
        for (int j = 0; j <= M; ++j) {
            out.r[j] += amp * w[j] * fr.nr[j];
            out.z[j] += amp * w[j] * fr.nz[j];
        }
        out.r[0] = 0.0;
        return out;
    };
    double amp = 0.0;
    for (int it = 0; it < 50; ++it) {
        ProfileCurve trial = apply(amp);
        const double d0 = contact_angle(trial) - c.theta;
        if (std::abs(d0) < 1e-10) {
            c = trial;
            return true;
        }
        const double eps = 1e-7;
        const double d1 = contact_angle(apply(amp + eps)) - c.theta;
        if (std::abs(d1 - d0) < 1e-18) return false;
        amp -= d0 / ((d1 - d0) / eps);
    }
    return false;
}

namespace {

// Contact angle from the boundary stencil alone. Identical to going through
// frame(): the one-sided derivative's 1/(2h) prefactor cancels when the
// tangent is normalized, so only the last three nodes matter.
double boundary_angle(const ProfileCurve& c) {
    const int M = c.M();
    const double rp = 3.0 * c.r[M] - 4.0 * c.r[M - 1] + c.r[M - 2];
    const double zp = 3.0 * c.z[M] - 4.0 * c.z[M - 1] + c.z[M - 2];
    const double tn = std::hypot(rp, zp);
    const double xdotnu = (c.r[M] * zp - c.z[M] * rp) / tn;
    return std::acos(std::clamp(-xdotnu, -1.0, 1.0));
}

} // namespace

bool slave_boundary(ProfileCurve& c) {
    const int M = c.M();
    double phi = std::atan2(c.r[M], c.z[M]);
    for (int it = 0; it < 50; ++it) {
        c.r[M] = std::sin(phi);
        c.z[M] = std::cos(phi);
        const double d0 = boundary_angle(c) - c.theta;
        if (std::abs(d0) < 1e-12) return true;
        const double eps = 1e-7;
        c.r[M] = std::sin(phi + eps);
        c.z[M] = std::cos(phi + eps);
        const double d1 = boundary_angle(c) - c.theta;
        c.r[M] = std::sin(phi);
        c.z[M] = std::cos(phi);
        if (std::abs(d1 - d0) < 1e-18) return false;
        phi -= d0 / ((d1 - d0) / eps);
    }
    return std::abs(boundary_angle(c) - c.theta) < 1e-8;
}

ProfileCurve make_perturbed_cap(int n, double theta, double R, int mode, double eps,
                                int M, bool* strict_out) {
    if (mode < 1) throw invalid_input("perturbation mode must be >= 1");
    ProfileCurve c = make_cap(n, theta, R, M);
    const std::vector<double> s = arclength(c.r, c.z);
    const double L = s[M];
    const SurfaceFrame fr = frame(c);
    for (int j = 0; j <= M; ++j) {
        const double bump = eps * std::cos(mode * M_PI * s[j] / L);
        c.r[j] += bump * fr.nr[j];
        c.z[j] += bump * fr.nz[j];
    }
    c.r[0] = 0.0;
    c = trim_to_circle(c, M);
    if (!smooth_angle_repair(c))
        throw numeric_error("make_perturbed_cap: contact-angle repair failed");
    c = resample(c, M);
    if (!slave_boundary(c))
        throw numeric_error("make_perturbed_cap: boundary slaving failed");
    if (strict_out) {
        const HorocapReport rep = horocap_residual(c);
        *strict_out = rep.strict;
    }
    return c;
}

std::pair<double, double> hausdorff_to_cap(const ProfileCurve& c) {
    const double ct = std::cos(c.theta);
    auto dist = [&](double R) {
        const double d = std::sqrt(R * R + 2.0 * R * ct + 1.0);
        double worst = 0.0;
        for (size_t j = 0; j < c.r.size(); ++j)
            worst = std::max(worst, std::abs(std::hypot(c.r[j], c.z[j] - d) - R));
        return worst;
    };
    // golden-section on a generous bracket; objective is piecewise smooth and
    // unimodal for anything remotely cap-like. Refine from a coarse scan.
    double lo = 0.02, hi = 20.0, best = lo, bestv = dist(lo);
    for (int i = 0; i <= 200; ++i) {
        const double R = lo * std::pow(hi / lo, i / 200.0);
        const double v = dist(R);
        if (v < bestv) { bestv = v; best = R; }
    }
    double a = best / 1.05, b = best * 1.05;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = dist(x1), f2 = dist(x2);
    for (int it = 0; it < 120; ++it) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = dist(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = dist(x2);
        }
    }
    const double R = 0.5 * (a + b);
    return {R, dist(R)};
}

ValidationReport validate(const ProfileCurve& c) {
    ValidationReport rep;
    const int M = c.M();
    auto add = [&](const std::string& name, bool pass, double slack) {
        rep.items.push_back({name, pass, slack});
    };
    add("node_count", M >= 16 && c.z.size() == c.r.size(), double(M - 16));
    add("theta_range", c.theta > 0.0 && c.theta <= M_PI / 2.0 + 1e-14,
        std::min(c.theta, M_PI / 2.0 - c.theta));
    add("axis_start", c.r[0] == 0.0, -std::abs(c.r[0]));

    double rmin = 1e300;
    for (int j = 1; j <= M; ++j) rmin = std::min(rmin, c.r[j]);
    add("radial_positive", rmin > 0.0, rmin);

    const double bdry = std::abs(c.r[M] * c.r[M] + c.z[M] * c.z[M] - 1.0);
    add("boundary_on_sphere", bdry <= 1e-12, 1e-12 - bdry);

    double maxnorm = 0.0, zmin = 1e300;
    bool finite = true;
    for (int j = 0; j <= M; ++j) {
        maxnorm = std::max(maxnorm, c.r[j] * c.r[j] + c.z[j] * c.z[j]);
        zmin = std::min(zmin, c.z[j]);
        finite = finite && std::isfinite(c.r[j]) && std::isfinite(c.z[j]);
    }
    add("finite", finite, 0.0);
    add("inside_ball", maxnorm <= 1.0 + 1e-12, 1.0 + 1e-12 - maxnorm);
    add("above_south_pole", zmin > -1.0, zmin + 1.0);

    // simplicity surrogate: arclength strictly increases and the turning
    // angle between consecutive segments stays below pi/2
    bool simple = true;
    double prevdr = 0.0, prevdz = 0.0;
    for (int j = 0; j < M; ++j) {
        const double dr = c.r[j + 1] - c.r[j], dz = c.z[j + 1] - c.z[j];
        const double len = std::hypot(dr, dz);
        if (!(len > 0.0)) { simple = false; break; }
        if (j > 0 && dr * prevdr + dz * prevdz <= 0.0) { simple = false; break; }
        prevdr = dr; prevdz = dz;
    }
    add("simple", simple, 0.0);

    // spacing uniformity (only meaningful after resampling)
    const std::vector<double> s = arclength(c.r, c.z);
    const double h = s[M] / M;
    double worst = 0.0;
    for (int j = 0; j < M; ++j)
        worst = std::max(worst, std::abs((s[j + 1] - s[j]) / h - 1.0));
    add("spacing_uniform", worst <= 0.05, 0.05 - worst);
    return rep;
}

} // namespace capflow
