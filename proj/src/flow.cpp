#include "capflow/flow.hpp"
#include "capflow/convexity.hpp"
#include "capflow/errors.hpp"
#include "capflow/quermass.hpp"
#include "capflow/symfunc.hpp"

#include <algorithm>
#include <cmath>

namespace capflow {

void conformal_killing(double r, double z, double& Xr, double& Xz) {
    Xr = z * r;
    Xz = z * z - 0.5 * (r * r + z * z + 1.0);
}

void speed_locally_constrained(const ProfileCurve& c, const SurfaceFrame& fr, int k,
                               std::vector<double>& f, std::vector<double>& F) {
    const int M = c.M();
    const double ct = std::cos(c.theta);
    f.resize(M + 1);
    F.resize(M + 1);
    for (int j = 0; j <= M; ++j) {
        F[j] = curvature_quotient(c.n, k, fr.kprof[j], fr.krot[j]);
        double Xr, Xz;
        conformal_killing(c.r[j], c.z[j], Xr, Xz);
        const double Xnu = Xr * fr.nr[j] + Xz * fr.nz[j];
        f[j] = (c.z[j] + ct * fr.nz[j]) / F[j] - Xnu;
    }
}

void speed_mcf(const ProfileCurve& c, const SurfaceFrame& fr, std::vector<double>& f) {
    const int M = c.M();
    f.resize(M + 1);
    for (int j = 0; j <= M; ++j)
        f[j] = -(fr.kprof[j] + (c.n - 1) * fr.krot[j]);
}

namespace {

bool light_valid(const ProfileCurve& c) {
    const int M = c.M();
    for (int j = 0; j <= M; ++j) {
        if (!std::isfinite(c.r[j]) || !std::isfinite(c.z[j])) return false;
        if (c.r[j] * c.r[j] + c.z[j] * c.z[j] > 1.0 + 1e-9) return false;
    }
    for (int j = 1; j <= M; ++j)
        if (!(c.r[j] > 0.0)) return false;
    return true;
}

} // namespace

void step(FlowState& st, const FlowConfig& cfg) {
    const ProfileCurve& c = st.curve;
    const int M = c.M();
    const SurfaceFrame fr = frame(c);
    std::vector<double> f, F;
    double dt = cfg.dt_max;
    if (cfg.kind == FlowKind::quotient) {
        speed_locally_constrained(c, fr, cfg.k, f, F);
        const double ct = std::cos(c.theta);
        double lim = 1e300;
        for (int j = 0; j <= M; ++j) {
            const double diff = std::max(c.z[j] + ct * fr.nz[j], 1e-10);
            lim = std::min(lim, F[j] * F[j] / diff);
        }
        dt = std::min(dt, cfg.cfl * fr.ds * fr.ds * lim);
    } else {
        speed_mcf(c, fr, f);
        dt = std::min(dt, cfg.cfl * fr.ds * fr.ds / c.n);
    }
    double sup = 0.0;
    for (int j = 0; j <= M; ++j) sup = std::max(sup, std::abs(f[j]));

    for (int halve = 0;; ++halve) {
        if (halve > 20)
            throw numeric_error("flow step rejected 20 times (blow-up)");
        ProfileCurve trial = c;
        for (int j = 0; j < M; ++j) { // boundary node slaved, not advected
            trial.r[j] += dt * f[j] * fr.nr[j];
            trial.z[j] += dt * f[j] * fr.nz[j];
        }
        trial.r[0] = 0.0;
        if (light_valid(trial) && slave_boundary(trial) && light_valid(trial)) {
            st.curve = std::move(trial);
            st.t += dt;
            st.step_count += 1;
            st.last_speed_sup = sup;
            return;
        }
        dt *= 0.5;
    }
}

TimeSeriesRecord diagnostics(const FlowState& st, const FlowConfig& cfg) {
    const ProfileCurve& c = st.curve;
    TimeSeriesRecord rec;
    rec.t = st.t;
    rec.W = quermass_theta(c).W;
    const HorocapReport hr = horocap_residual(c);
    rec.min_rho = hr.min_rho;
    rec.min_height_slack = hr.min_height_slack;
    const SurfaceFrame fr = frame(c);
    rec.maxKappa = 0.0;
    for (int j = 0; j <= c.M(); ++j)
        rec.maxKappa = std::max({rec.maxKappa, std::abs(fr.kprof[j]), std::abs(fr.krot[j])});
    rec.minF = 0.0;
    std::vector<double> f, F;
    if (cfg.kind == FlowKind::quotient) {
        speed_locally_constrained(c, fr, cfg.k, f, F);
        rec.minF = *std::min_element(F.begin(), F.end());
    } else {
        speed_mcf(c, fr, f);
    }
    rec.speed_sup = 0.0;
    for (double v : f) rec.speed_sup = std::max(rec.speed_sup, std::abs(v));
    rec.angle_defect = contact_angle(c) - c.theta;
    rec.cap_dist = hausdorff_to_cap(c).second;
    return rec;
}

FlowState run(const ProfileCurve& init, const FlowConfig& cfg,
              const RecordSink& sink, const SnapshotSink& snap) {
    {
        const ValidationReport vr = validate(init);
        if (!vr.ok()) throw invalid_input("flow: initial curve fails validation");
    }
    FlowState st;
    st.curve = init;
    const int M = init.M();
    if (sink) sink(diagnostics(st, cfg));
    if (snap) snap(st);
    while (st.t < cfg.t_end) {
        step(st, cfg);
        if (st.step_count % cfg.resample_every == 0) {
            st.curve = resample(st.curve, M);
            slave_boundary(st.curve);
        }
        const bool record = st.step_count % cfg.diagnostics_every == 0;
        if (record) {
            if (sink) sink(diagnostics(st, cfg));
            if (snap) snap(st);
        }
        if (cfg.stop_on_stationary && st.last_speed_sup < cfg.tol_stationary) break;
    }
    if (sink) sink(diagnostics(st, cfg));
    if (snap) snap(st);
    return st;
}

} // namespace capflow
