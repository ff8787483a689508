#include "capflow/quermass.hpp"
#include "capflow/errors.hpp"
#include "capflow/symfunc.hpp"

#include <cmath>
#include <vector>

namespace capflow {

namespace {

// 48-point Gauss–Legendre rule on [-1, 1], nodes by Newton on P_n.
struct GaussRule {
    std::vector<double> x, w;
    GaussRule() {
        const int N = 48;
        x.resize(N);
        w.resize(N);
        for (int i = 0; i < N; ++i) {
            double t = std::cos(M_PI * (i + 0.75) / (N + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int j = 2; j <= N; ++j) {
                    const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = N * (t * p1 - p0) / (t * t - 1.0);
                const double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            double p0 = 1.0, p1 = t;
            for (int j = 2; j <= N; ++j) {
                const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            const double dp = N * (t * p1 - p0) / (t * t - 1.0);
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GaussRule& rule() {
    static const GaussRule g;
    return g;
}

} // namespace

double sine_power_integral(int p, double alpha) {
    const GaussRule& g = rule();
    double acc = 0.0;
    for (size_t i = 0; i < g.x.size(); ++i) {
        const double t = 0.5 * alpha * (g.x[i] + 1.0);
        acc += g.w[i] * std::pow(std::sin(t), p);
    }
    return 0.5 * alpha * acc;
}

double spherical_ball_W(int n, double alpha, int l) {
    if (!(alpha > 0.0) || alpha > M_PI / 2.0 + 1e-14)
        throw invalid_input("spherical_ball_W: alpha outside (0, pi/2]");
    if (l < 0 || l > n) throw invalid_input("spherical_ball_W: l out of range");
    const double A = sphere_area(n);
    if (l == 0) return A * sine_power_integral(n - 1, alpha);
    if (l == 1) return A * std::pow(std::sin(alpha), n - 1) / n;
    const int ll = l - 1;
    return (A / n) * std::pow(std::sin(alpha), n - 1) *
               std::pow(std::cos(alpha) / std::sin(alpha), ll) +
           double(ll) / (n - ll + 1) * spherical_ball_W(n, alpha, ll - 1);
}

double enclosed_volume(const ProfileCurve& c) {
    const int n = c.n, M = c.M();
    double I1 = 0.0;
    for (int j = 0; j < M; ++j) {
        const double rn0 = std::pow(c.r[j], n), rn1 = std::pow(c.r[j + 1], n);
        I1 += 0.5 * (rn0 + rn1) / n * (c.z[j + 1] - c.z[j]);
    }
    const double alpha = std::acos(std::clamp(c.z[M], -1.0, 1.0));
    const double I2 = sine_power_integral(n + 1, alpha) / n;
    return sphere_area(n) * (I1 + I2);
}

double curvature_integral(const ProfileCurve& c, int k) {
    const SurfaceFrame fr = frame(c);
    double acc = 0.0;
    for (int j = 0; j <= c.M(); ++j)
        acc += normalized_symmetric(c.n, k, fr.kprof[j], fr.krot[j]) * fr.weight[j];
    return acc;
}

namespace {

// Shared assembly of W_0..W_{n+1} from volume, curvature integrals and the
// boundary corrections.
QuermassVector assemble(int n, double theta, double vol,
                        std::vector<double> Hint, double alpha) {
    QuermassVector qv;
    qv.volume = vol;
    qv.Hint = std::move(Hint);
    qv.alpha = alpha;
    qv.WS.resize(n + 1);
    for (int l = 0; l <= n; ++l) qv.WS[l] = spherical_ball_W(n, alpha, l);

    const double ct = std::cos(theta), st = std::sin(theta);
    qv.W.assign(n + 2, 0.0);
    qv.W[0] = vol;
    qv.W[1] = (qv.Hint[0] - ct * qv.WS[0]) / (n + 1);
    for (int k = 1; k <= n - 1; ++k) {
        double acc = qv.Hint[k] - ct * std::pow(st, k) * qv.WS[k];
        for (int l = 0; l < k; ++l) {
            const double sgn = ((k + l) % 2 == 0) ? 1.0 : -1.0;
            acc -= sgn / (n - l) * binomial(k, l) * ((n - k) * ct * ct + k - l) *
                   std::pow(ct, k - 1 - l) * std::pow(st, l) * qv.WS[l];
        }
        qv.W[k + 1] = acc / (n + 1);
    }
    {
        double acc = qv.Hint[n];
        for (int l = 0; l < n; ++l) {
            const double sgn = ((n + l) % 2 == 0) ? 1.0 : -1.0;
            acc -= sgn * binomial(n, l) * std::pow(ct, n - 1 - l) * std::pow(st, l) * qv.WS[l];
        }
        qv.W[n + 1] = acc / (n + 1);
    }
    return qv;
}

} // namespace

QuermassVector quermass_theta(const ProfileCurve& c) {
    const int n = c.n;
    std::vector<double> Hint(n + 1);
    const SurfaceFrame fr = frame(c);
    for (int k = 0; k <= n; ++k) {
        double acc = 0.0;
        for (int j = 0; j <= c.M(); ++j)
            acc += normalized_symmetric(n, k, fr.kprof[j], fr.krot[j]) * fr.weight[j];
        Hint[k] = acc;
    }
    const double alpha = std::acos(std::clamp(c.z[c.M()], -1.0, 1.0));
    return assemble(n, c.theta, enclosed_volume(c), std::move(Hint), alpha);
}

QuermassVector quermass_theta_cap(int n, double theta, double R) {
    if (!(R > 0.0)) throw invalid_input("cap radius must be positive");
    const double ct = std::cos(theta);
    const double d = std::sqrt(R * R + 2.0 * R * ct + 1.0);
    const double zM = (1.0 + R * ct) / d;
    const double alpha = std::acos(zM);
    const double pmax = std::acos((d - zM) / R);
    const double A = sphere_area(n);

    const double area = A * std::pow(R, n) * sine_power_integral(n - 1, pmax);
    std::vector<double> Hint(n + 1);
    for (int k = 0; k <= n; ++k) Hint[k] = area / std::pow(R, k);

    const double vol = A * (std::pow(R, n + 1) / n * sine_power_integral(n + 1, pmax) +
                            sine_power_integral(n + 1, alpha) / n);
    return assemble(n, theta, vol, std::move(Hint), alpha);
}

QuermassVector quermass_theta_flat(int n, double theta) {
    const double A = sphere_area(n);
    std::vector<double> Hint(n + 1, 0.0);
    Hint[0] = A * std::pow(std::sin(theta), n) / n; // disk area
    const double vol = A / n * sine_power_integral(n + 1, theta);
    return assemble(n, theta, vol, std::move(Hint), theta);
}

namespace {

ProfileCurve displace_constrained(const ProfileCurve& c, const SurfaceFrame& fr,
                                  const std::vector<double>& f, double delta) {
    const int M = c.M();
    ProfileCurve out = c;
    for (int j = 0; j <= M; ++j) {
        out.r[j] += delta * f[j] * fr.nr[j];
        out.z[j] += delta * f[j] * fr.nz[j];
    }
    out.r[0] = 0.0;
    out = trim_to_circle(out, M);
    smooth_angle_repair(out);
    out = resample(out, M);
    slave_boundary(out);
    return out;
}

} // namespace

double variation_check(const ProfileCurve& c, const std::vector<double>& f, int k,
                       double delta) {
    const int n = c.n, M = c.M();
    if (static_cast<int>(f.size()) != M + 1)
        throw invalid_input("variation_check: speed field size mismatch");
    if (k < 0 || k > n) throw invalid_input("variation_check: k out of range");
    const SurfaceFrame fr = frame(c);

    double D[2];
    std::vector<double> realized[2];
    const double ds[2] = {delta, 0.5 * delta};
    for (int i = 0; i < 2; ++i) {
        const ProfileCurve up = displace_constrained(c, fr, f, ds[i]);
        const ProfileCurve dn = displace_constrained(c, fr, f, -ds[i]);
        D[i] = (quermass_theta(up).W[k] - quermass_theta(dn).W[k]) / (2.0 * ds[i]);
        realized[i].resize(M + 1);
        for (int j = 0; j <= M; ++j)
            realized[i][j] = ((up.r[j] - dn.r[j]) * fr.nr[j] +
                              (up.z[j] - dn.z[j]) * fr.nz[j]) /
                             (2.0 * ds[i]);
    }
    const double Dex = (4.0 * D[1] - D[0]) / 3.0;
    double rhs = 0.0;
    for (int j = 0; j <= M; ++j) {
        const double fre = (4.0 * realized[1][j] - realized[0][j]) / 3.0;
        rhs += normalized_symmetric(n, k, fr.kprof[j], fr.krot[j]) * fre * fr.weight[j];
    }
    rhs *= double(n + 1 - k) / (n + 1);
    // absolute residual when the variation itself vanishes (e.g. f == 0)
    return (Dex - rhs) / std::max(std::abs(rhs), 1e-12);
}

} // namespace capflow
