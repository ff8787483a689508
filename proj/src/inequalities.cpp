#include "capflow/inequalities.hpp"
#include "capflow/errors.hpp"
#include "capflow/flow.hpp"
#include "capflow/quermass.hpp"
#include "capflow/symfunc.hpp"

#include <cmath>
#include <limits>

namespace capflow {

FkTable tabulate_fk(int n, double theta, int k, int samples, double Rmin, double Rmax) {
    if (k < 1 || k > n + 1) throw invalid_input("tabulate_fk: k out of range");
    if (samples < 64 || !(Rmin > 0.0) || !(Rmax > Rmin))
        throw invalid_input("tabulate_fk: bad grid");
    FkTable t;
    t.n = n;
    t.k = k;
    t.theta = theta;
    t.R.reserve(samples + 1);
    t.Wkm1.reserve(samples + 1);
    t.Wk.reserve(samples + 1);
    auto push = [&](double R, const QuermassVector& qv) {
        const double a = qv.W[k - 1], b = qv.W[k];
        if (!t.R.empty()) {
            const double da = a - t.Wkm1.back(), db = b - t.Wk.back();
            if (da < 0.0 || db < 0.0)
                throw property_violation(
                    "tabulate_fk: equality table is not strictly increasing");
            // drop rows whose increment is below rounding resolution (very
            // dense grids saturate near both ends of the R range)
            if (da <= 1e-13 * std::abs(a) || db <= 1e-13 * std::abs(b)) return;
        }
        t.R.push_back(R);
        t.Wkm1.push_back(a);
        t.Wk.push_back(b);
    };
    for (int i = 0; i < samples; ++i) {
        const double R = Rmin * std::pow(Rmax / Rmin, double(i) / (samples - 1));
        push(R, quermass_theta_cap(n, theta, R));
    }
    // flat-disk limit closes the table at the R -> infinity end
    push(std::numeric_limits<double>::infinity(), quermass_theta_flat(n, theta));
    t.fk = PchipSpline(t.Wkm1, t.Wk);
    return t;
}

double check_inequality(const ProfileCurve& c, const FkTable& table) {
    if (c.n != table.n)
        throw invalid_input("check_inequality: dimension mismatch with table");
    const QuermassVector qv = quermass_theta(c);
    return qv.W[table.k] - table.fk(qv.W[table.k - 1]);
}

double hsiung_minkowski_residual(const ProfileCurve& c, int k) {
    if (k < 1 || k > c.n) throw invalid_input("hsiung_minkowski_residual: k out of range");
    const SurfaceFrame fr = frame(c);
    const double ct = std::cos(c.theta);
    double acc = 0.0, scale = 0.0, area = 0.0;
    for (int j = 0; j <= c.M(); ++j) {
        const double hk1 = normalized_symmetric(c.n, k - 1, fr.kprof[j], fr.krot[j]);
        const double hk = normalized_symmetric(c.n, k, fr.kprof[j], fr.krot[j]);
        double Xr, Xz;
        conformal_killing(c.r[j], c.z[j], Xr, Xz);
        const double Xnu = Xr * fr.nr[j] + Xz * fr.nz[j];
        const double support = c.z[j] + ct * fr.nz[j];
        acc += (hk1 * support - hk * Xnu) * fr.weight[j];
        scale += hk1 * std::abs(support) * fr.weight[j];
        area += fr.weight[j];
    }
    // flat disks make the natural scale vanish pointwise; fall back to an
    // area-proportional floor so the residual stays meaningful (and tiny)
    return acc / std::max(scale, 1e-3 * area);
}

double heintze_karcher_value(const ProfileCurve& c) {
    const SurfaceFrame fr = frame(c);
    const double ct = std::cos(c.theta);
    double acc = 0.0;
    for (int j = 0; j <= c.M(); ++j) {
        const double H1 = normalized_symmetric(c.n, 1, fr.kprof[j], fr.krot[j]);
        if (!(H1 > 0.0))
            throw numeric_error("heintze_karcher_value: mean curvature not positive");
        double Xr, Xz;
        conformal_killing(c.r[j], c.z[j], Xr, Xz);
        const double Xnu = Xr * fr.nr[j] + Xz * fr.nz[j];
        acc += ((c.z[j] + ct * fr.nz[j]) / H1 - Xnu) * fr.weight[j];
    }
    return acc;
}

} // namespace capflow
