#include "capflow.h"

#include "capflow/convexity.hpp"
#include "capflow/corpus.hpp"
#include "capflow/errors.hpp"
#include "capflow/flow.hpp"
#include "capflow/geometry.hpp"
#include "capflow/inequalities.hpp"
#include "capflow/quermass.hpp"

#include <cstring>
#include <string>
#include <vector>

using namespace capflow;

struct capflow_curve {
    ProfileCurve c;
};

struct capflow_fk_table {
    FkTable t;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
capflow_status guarded(Fn&& fn) {
    try {
        fn();
        return CAPFLOW_OK;
    } catch (const invalid_input& e) {
        g_last_error = e.what();
        return CAPFLOW_ERR_INVALID;
    } catch (const numeric_error& e) {
        g_last_error = e.what();
        return CAPFLOW_ERR_NUMERIC;
    } catch (const property_violation& e) {
        g_last_error = e.what();
        return CAPFLOW_ERR_PROPERTY;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CAPFLOW_ERR_NUMERIC;
    }
}

} // namespace

extern "C" {

const char* capflow_last_error(void) { return g_last_error.c_str(); }

capflow_status capflow_make_cap(int n, double theta, double R, int M,
                                capflow_curve** out) {
    return guarded([&] { *out = new capflow_curve{make_cap(n, theta, R, M)}; });
}

capflow_status capflow_make_flat_ball(int n, double theta, int M,
                                      capflow_curve** out) {
    return guarded([&] { *out = new capflow_curve{make_flat_ball(n, theta, M)}; });
}

capflow_status capflow_make_perturbed_cap(int n, double theta, double R, int mode,
                                          double eps, int M, int* strict_out,
                                          capflow_curve** out) {
    return guarded([&] {
        bool strict = false;
        ProfileCurve c = make_perturbed_cap(n, theta, R, mode, eps, M, &strict);
        if (strict_out) *strict_out = strict ? 1 : 0;
        *out = new capflow_curve{std::move(c)};
    });
}

capflow_status capflow_curve_from_arrays(int n, double theta, const double* r,
                                         const double* z, int count,
                                         capflow_curve** out) {
    return guarded([&] {
        if (count < 2) throw invalid_input("need at least 2 nodes");
        ProfileCurve c{n, theta,
                       std::vector<double>(r, r + count),
                       std::vector<double>(z, z + count)};
        *out = new capflow_curve{std::move(c)};
    });
}

void capflow_curve_free(capflow_curve* c) { delete c; }

int capflow_curve_nodes(const capflow_curve* c) {
    return static_cast<int>(c->c.r.size());
}

int capflow_curve_dim(const capflow_curve* c) { return c->c.n; }

double capflow_curve_theta(const capflow_curve* c) { return c->c.theta; }

void capflow_curve_data(const capflow_curve* c, double* r, double* z) {
    std::memcpy(r, c->c.r.data(), c->c.r.size() * sizeof(double));
    std::memcpy(z, c->c.z.data(), c->c.z.size() * sizeof(double));
}

capflow_status capflow_validate(const capflow_curve* c, int* ok) {
    return guarded([&] { *ok = validate(c->c).ok() ? 1 : 0; });
}

capflow_status capflow_contact_angle(const capflow_curve* c, double* out) {
    return guarded([&] { *out = contact_angle(c->c); });
}

capflow_status capflow_quermass(const capflow_curve* c, double* W) {
    return guarded([&] {
        const QuermassVector qv = quermass_theta(c->c);
        std::memcpy(W, qv.W.data(), qv.W.size() * sizeof(double));
    });
}

capflow_status capflow_horocap(const capflow_curve* c, double* min_rho,
                               double* min_height_slack, int* strict) {
    return guarded([&] {
        const HorocapReport rep = horocap_residual(c->c);
        if (min_rho) *min_rho = rep.min_rho;
        if (min_height_slack) *min_height_slack = rep.min_height_slack;
        if (strict) *strict = rep.strict ? 1 : 0;
    });
}

capflow_status capflow_support_check(const capflow_curve* c, double* out) {
    return guarded([&] { *out = support_check(c->c); });
}

capflow_status capflow_cap_horocap_residual(double theta, double R, double gamma,
                                            double* out) {
    return guarded([&] { *out = cap_horocap_residual(theta, R, gamma); });
}

capflow_status capflow_hausdorff_to_cap(const capflow_curve* c, double* R_best,
                                        double* dist) {
    return guarded([&] {
        const auto [R, d] = hausdorff_to_cap(c->c);
        if (R_best) *R_best = R;
        if (dist) *dist = d;
    });
}

capflow_status capflow_hsiung_minkowski(const capflow_curve* c, int k, double* out) {
    return guarded([&] { *out = hsiung_minkowski_residual(c->c, k); });
}

capflow_status capflow_heintze_karcher(const capflow_curve* c, double* out) {
    return guarded([&] { *out = heintze_karcher_value(c->c); });
}

capflow_status capflow_variation_check(const capflow_curve* c, const double* f,
                                       int k, double delta, double* out) {
    return guarded([&] {
        std::vector<double> fv(f, f + c->c.r.size());
        *out = variation_check(c->c, fv, k, delta);
    });
}

capflow_status capflow_eps_star(int n, double theta, double R, int mode, int M,
                                double* out) {
    return guarded([&] { *out = eps_star(n, theta, R, mode, M); });
}

void capflow_flow_config_default(capflow_flow_config* cfg) {
    cfg->kind = 0;
    cfg->k = 1;
    cfg->cfl = 0.2;
    cfg->dt_max = 1e-3;
    cfg->t_end = 1.0;
    cfg->resample_every = 200;
    cfg->diagnostics_every = 500;
    cfg->tol_stationary = 1e-8;
    cfg->stop_on_stationary = 1;
}

capflow_status capflow_flow_run(const capflow_curve* init,
                                const capflow_flow_config* cfg,
                                capflow_record_cb rec_cb,
                                capflow_snapshot_cb snap_cb, void* user,
                                capflow_curve** final_out) {
    return guarded([&] {
        FlowConfig fc;
        fc.kind = cfg->kind == 0 ? FlowKind::quotient : FlowKind::mcf;
        fc.k = cfg->k;
        fc.cfl = cfg->cfl;
        fc.dt_max = cfg->dt_max;
        fc.t_end = cfg->t_end;
        fc.resample_every = cfg->resample_every;
        fc.diagnostics_every = cfg->diagnostics_every;
        fc.tol_stationary = cfg->tol_stationary;
        fc.stop_on_stationary = cfg->stop_on_stationary != 0;

        RecordSink sink;
        if (rec_cb) {
            sink = [&](const TimeSeriesRecord& r) {
                capflow_record rec{};
                rec.t = r.t;
                for (size_t i = 0; i < r.W.size() && i < 8; ++i) rec.W[i] = r.W[i];
                rec.min_rho = r.min_rho;
                rec.min_height_slack = r.min_height_slack;
                rec.minF = r.minF;
                rec.maxKappa = r.maxKappa;
                rec.angle_defect = r.angle_defect;
                rec.cap_dist = r.cap_dist;
                rec.speed_sup = r.speed_sup;
                rec_cb(&rec, user);
            };
        }
        SnapshotSink snap;
        if (snap_cb) {
            snap = [&](const FlowState& st) {
                capflow_curve tmp{st.curve};
                snap_cb(&tmp, st.t, user);
            };
        }
        FlowState fs = run(init->c, fc, sink, snap);
        if (final_out) *final_out = new capflow_curve{std::move(fs.curve)};
    });
}

capflow_status capflow_fk_build(int n, double theta, int k, int samples,
                                double Rmin, double Rmax, capflow_fk_table** out) {
    return guarded([&] {
        *out = new capflow_fk_table{tabulate_fk(n, theta, k, samples, Rmin, Rmax)};
    });
}

void capflow_fk_free(capflow_fk_table* t) { delete t; }

int capflow_fk_rows(const capflow_fk_table* t) {
    return static_cast<int>(t->t.R.size());
}

void capflow_fk_row(const capflow_fk_table* t, int i, double* R, double* Wkm1,
                    double* Wk) {
    if (R) *R = t->t.R[i];
    if (Wkm1) *Wkm1 = t->t.Wkm1[i];
    if (Wk) *Wk = t->t.Wk[i];
}

capflow_status capflow_fk_margin(const capflow_fk_table* t, const capflow_curve* c,
                                 double* out) {
    return guarded([&] { *out = check_inequality(c->c, t->t); });
}

} // extern "C"
