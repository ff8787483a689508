// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Desk scale: n in {2,3}, theta in {pi/6, pi/3, pi/2},
// M in {200, 400, 800}.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "capflow/convexity.hpp"
#include "capflow/corpus.hpp"
#include "capflow/errors.hpp"
#include "capflow/flow.hpp"
#include "capflow/geometry.hpp"
#include "capflow/inequalities.hpp"
#include "capflow/quermass.hpp"
#include "capflow/spline.hpp"
#include "capflow/symfunc.hpp"

using namespace capflow;

namespace {

const std::vector<int> kDims = {2, 3};
const std::vector<double> kThetas = {M_PI / 6, M_PI / 3, M_PI / 2};

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %02d %-28s %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// ---- 1: cap stationarity, sup|f| < 5e-6 at M = 800, order ~2 ----
void criterion1() {
    double worst = 0.0, worst_order = 1e9;
    for (int n : kDims)
        for (double theta : kThetas) {
            double sup_prev = 0.0;
            for (int M : {200, 400, 800}) {
                const ProfileCurve c = make_cap(n, theta, 0.8, M);
                const SurfaceFrame fr = frame(c);
                double sup = 0.0;
                std::vector<double> f, F;
                for (int k = 1; k <= n; ++k) {
                    speed_locally_constrained(c, fr, k, f, F);
                    for (double v : f) sup = std::max(sup, std::abs(v));
                }
                if (sup_prev > 0.0)
                    worst_order = std::min(worst_order, std::log2(sup_prev / sup));
                sup_prev = sup;
            }
            worst = std::max(worst, sup_prev);
        }
    report(1, "cap-stationarity", worst < 5e-6 && worst_order > 1.5,
           "sup|f|@800=" + fmt(worst) + " min order=" + fmt(worst_order));
}

// ---- 2: curvature oracle, |kappa - 1/R| < 1e-6 at M = 800 ----
void criterion2() {
    double worst = 0.0;
    for (int n : kDims)
        for (double theta : kThetas)
            for (double R : {0.5, 0.8, 1.3}) {
                const ProfileCurve c = make_cap(n, theta, R, 800);
                const SurfaceFrame fr = frame(c);
                for (int j = 0; j <= c.M(); ++j) {
                    worst = std::max(worst, std::abs(fr.kprof[j] - 1.0 / R));
                    worst = std::max(worst, std::abs(fr.krot[j] - 1.0 / R));
                }
            }
    report(2, "curvature-oracle", worst < 1e-6, "max|kappa-1/R|=" + fmt(worst));
}

// shared corpora (M = 400), built once
std::map<std::pair<int, int>, std::vector<CorpusMember>> g_corpus;

const std::vector<CorpusMember>& corpus(int n, int itheta) {
    auto key = std::make_pair(n, itheta);
    auto it = g_corpus.find(key);
    if (it == g_corpus.end())
        it = g_corpus.emplace(key, make_corpus(n, kThetas[itheta], 400)).first;
    return it->second;
}

// ---- 3: Hsiung-Minkowski, < 1e-5 on caps, < 1e-4 on corpus ----
void criterion3() {
    double worst_cap = 0.0, worst_corpus = 0.0;
    for (int n : kDims)
        for (int it = 0; it < 3; ++it) {
            const double theta = kThetas[it];
            for (double R : {0.5, 1.0}) {
                const ProfileCurve c = make_cap(n, theta, R, 1000);
                for (int k = 1; k <= n; ++k)
                    worst_cap = std::max(worst_cap,
                                         std::abs(hsiung_minkowski_residual(c, k)));
            }
            for (const auto& m : corpus(n, it))
                for (int k = 1; k <= n; ++k)
                    worst_corpus = std::max(
                        worst_corpus, std::abs(hsiung_minkowski_residual(m.curve, k)));
        }
    report(3, "hsiung-minkowski", worst_cap < 1e-5 && worst_corpus < 1e-4,
           "caps=" + fmt(worst_cap) + " corpus=" + fmt(worst_corpus));
}

// ---- 4: general variation formula, rel err < 1e-3 for k = 0..n ----
void criterion4() {
    double worst = 0.0;
    const int Mcoarse = 400, Mfine = 6400;
    for (int n : kDims)
        for (double theta : kThetas) {
            const double R = 0.8, eps = 1e-4;
            // admissible speed field from the constrained perturbation family,
            // sampled at desk scale and transferred to the evaluation grid by
            // spline over normalized arclength
            const ProfileCurve base = make_cap(n, theta, R, Mcoarse);
            const ProfileCurve bumped = make_perturbed_cap(n, theta, R, 2, eps, Mcoarse);
            const SurfaceFrame fr = frame(base);
            std::vector<double> fc(Mcoarse + 1), sc(Mcoarse + 1);
            for (int j = 0; j <= Mcoarse; ++j) {
                fc[j] = ((bumped.r[j] - base.r[j]) * fr.nr[j] +
                         (bumped.z[j] - base.z[j]) * fr.nz[j]) /
                        eps;
                sc[j] = double(j) / Mcoarse;
            }
            const CubicSpline fsp(sc, fc);
            const ProfileCurve fine = make_cap(n, theta, R, Mfine);
            std::vector<double> ff(Mfine + 1);
            for (int j = 0; j <= Mfine; ++j) ff[j] = fsp(double(j) / Mfine);
            for (int k = 0; k <= n; ++k)
                worst = std::max(worst,
                                 std::abs(variation_check(fine, ff, k, 1e-5)));
        }
    report(4, "variation-formula", worst < 1e-3, "max rel err=" + fmt(worst));
}

// ---- 5/6/7/12 share the quotient-flow runs ----
struct RunResult {
    int n;
    double theta;
    int k;
    int M;
    double conserve = 1e9;        // |dW_k| / |W_k(0)|
    double worst_drop = -1e9;     // most negative per-step change of W_{k-1}
    double min_rho = 1e9;         // over all records
    double final_dist = 1e9;      // hausdorff_to_cap at the end
    double limit_match = 1e9;     // |W_k(limit cap) - W_k(0)| / |W_k(0)|
    double decay_sup = 0.0;       // sup t (1/minF)^2 over (0, 1]
    bool ok = false;
    std::string err;
};

// Replicates the library run loop so the monotone quantity W_{k-1} can be
// sampled after every accepted step (and after every resample), which is the
// granularity at which the decrease bound is stated. per_step=false skips the
// per-step sampling for long runs where only the records matter.
RunResult quotient_run(int n, double theta, int k, const ProfileCurve& init,
                       double t_end = 3.0, bool per_step = true) {
    RunResult res;
    res.n = n;
    res.theta = theta;
    res.k = k;
    res.M = init.M();
    FlowConfig cfg;
    cfg.kind = FlowKind::quotient;
    cfg.k = k;
    cfg.cfl = 0.4;
    cfg.t_end = t_end;
    cfg.stop_on_stationary = true;
    std::vector<TimeSeriesRecord> recs;
    try {
        if (!validate(init).ok())
            throw std::runtime_error("initial curve fails validation");
        const QuermassVector qv0 = quermass_theta(init);
        const int M = init.M();
        FlowState st;
        st.curve = init;
        recs.push_back(diagnostics(st, cfg));
        res.worst_drop = 0.0;
        double prevW = qv0.W[k - 1];
        while (st.t < cfg.t_end) {
            step(st, cfg);
            if (per_step) {
                const double w = quermass_theta(st.curve).W[k - 1];
                res.worst_drop = std::min(res.worst_drop, w - prevW);
                prevW = w;
            }
            if (st.step_count % cfg.resample_every == 0) {
                st.curve = resample(st.curve, M);
                slave_boundary(st.curve);
                if (per_step) {
                    const double w = quermass_theta(st.curve).W[k - 1];
                    res.worst_drop = std::min(res.worst_drop, w - prevW);
                    prevW = w;
                }
            }
            if (st.step_count % cfg.diagnostics_every == 0)
                recs.push_back(diagnostics(st, cfg));
            if (cfg.stop_on_stationary && st.last_speed_sup < cfg.tol_stationary)
                break;
        }
        recs.push_back(diagnostics(st, cfg));
        const FlowState& fin = st;
        const QuermassVector qvf = quermass_theta(fin.curve);
        res.conserve = std::abs(qvf.W[k] - qv0.W[k]) / std::abs(qv0.W[k]);
        if (!per_step)
            for (size_t i = 1; i < recs.size(); ++i)
                res.worst_drop = std::min(res.worst_drop,
                                          recs[i].W[k - 1] - recs[i - 1].W[k - 1]);
        for (const auto& r : recs) {
            res.min_rho = std::min(res.min_rho, r.min_rho);
            if (r.t > 0.0 && r.t <= 1.0 && r.minF > 0.0)
                res.decay_sup = std::max(res.decay_sup,
                                         r.t / (r.minF * r.minF));
        }
        const auto [Rb, dist] = hausdorff_to_cap(fin.curve);
        res.final_dist = dist;
        res.limit_match = std::abs(quermass_theta_cap(n, theta, Rb).W[k] - qv0.W[k]) /
                          std::abs(qv0.W[k]);
        res.ok = true;
    } catch (const std::exception& e) {
        res.err = e.what();
    }
    return res;
}

std::vector<RunResult> g_runs;

void do_runs() {
    for (int n : kDims)
        for (double theta : kThetas) {
            // lattice radii with the fundamental mode, k = 1
            for (const auto& m : make_corpus(n, theta, 200, {0.5}))
                if (m.spec.mode == 2)
                    g_runs.push_back(quotient_run(n, theta, 1, m.curve));
            // higher quotient indices on one representative
            // amplitude 0.02 eps* keeps the per-step quadrature noise of the
            // monotone quantity below the 1e-9 decrease bound at M=200
            // (the noise scales linearly with the amplitude)
            for (int k = 2; k <= n; ++k) {
                const double e = 0.02 * eps_star(n, theta, 0.8, 3, 200);
                g_runs.push_back(quotient_run(
                    n, theta, k, make_perturbed_cap(n, theta, 0.8, 3, e, 200)));
            }
        }
}

void criterion5() {
    double worst_cons = 0.0, worst_drop = 0.0;
    bool all_ok = true;
    for (const auto& r : g_runs) {
        if (!r.ok) {
            all_ok = false;
            continue;
        }
        worst_cons = std::max(worst_cons, r.conserve);
        worst_drop = std::min(worst_drop, r.worst_drop);
    }
    report(5, "flow-conservation", all_ok && worst_cons < 1e-4 && worst_drop > -1e-9,
           "max|dWk|rel=" + fmt(worst_cons) + " worst drop=" + fmt(worst_drop));
}

void criterion6() {
    double worst_dist = 0.0, worst_match = 0.0;
    bool all_ok = true;
    for (const auto& r : g_runs) {
        if (!r.ok) {
            all_ok = false;
            std::printf("       run n=%d k=%d failed: %s\n", r.n, r.k, r.err.c_str());
            continue;
        }
        worst_dist = std::max(worst_dist, r.final_dist);
        worst_match = std::max(worst_match, r.limit_match);
    }
    report(6, "flow-convergence", all_ok && worst_dist < 1e-5 && worst_match < 1e-4,
           "max cap dist=" + fmt(worst_dist) + " max Wk mismatch=" + fmt(worst_match));
}

void criterion7() {
    double worst = 1e9;
    bool all_ok = true;
    for (const auto& r : g_runs) {
        if (!r.ok) { all_ok = false; continue; }
        worst = std::min(worst, r.min_rho);
    }
    report(7, "convexity-preservation", all_ok && worst > 0.0,
           "min rho over runs=" + fmt(worst));
}

// ---- 8: quermassintegral inequality ----
void criterion8() {
    double worst_corpus = 0.0, worst_cap = 0.0, worst_flat = 0.0;
    for (int n : kDims)
        for (int it = 0; it < 3; ++it) {
            const double theta = kThetas[it];
            for (int k = 1; k <= n; ++k) {
                const FkTable t = tabulate_fk(n, theta, k);
                for (const auto& m : corpus(n, it))
                    worst_corpus = std::min(worst_corpus, check_inequality(m.curve, t));
                for (double R : {0.41, 0.97, 2.3}) {
                    const QuermassVector qv = quermass_theta_cap(n, theta, R);
                    worst_cap = std::max(worst_cap,
                                         std::abs(qv.W[k] - t.fk(qv.W[k - 1])));
                }
                // flat ball: discrete quermass against the table end (the
                // trapezoid error of the disk-area integral is O(h^2), so
                // "quadrature tolerance" needs the finer grid)
                const QuermassVector fd =
                    quermass_theta(make_flat_ball(n, theta, 1600));
                const double x = std::min(fd.W[k - 1], t.Wkm1.back());
                worst_flat = std::max(worst_flat, std::abs(fd.W[k] - t.fk(x)));
            }
        }
    report(8, "quermass-inequality",
           worst_corpus > -1e-6 && worst_cap < 1e-7 && worst_flat < 1e-6,
           "corpus min=" + fmt(worst_corpus) + " cap=" + fmt(worst_cap) +
               " flat=" + fmt(worst_flat));
}

// ---- 9: tilted-cap equality, 100 sampled (theta, R) ----
void criterion9() {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const double theta = M_PI / 2 * (i + 1) / 10.0;
            const double R = 0.05 * std::pow(400.0, j / 9.0); // 0.05 .. 20
            const double d = std::sqrt(R * R + 2.0 * R * std::cos(theta) + 1.0);
            const double gc = std::acos((std::cos(theta) + R) / d);
            worst = std::max(worst, std::abs(cap_horocap_residual(theta, R, gc)));
        }
    report(9, "tilted-cap-equality", worst < 1e-12, "max residual=" + fmt(worst));
}

// ---- 10: support inequality over the convex corpus ----
void criterion10() {
    double worst = -1e9;
    for (int n : kDims)
        for (int it = 0; it < 3; ++it)
            for (const auto& m : corpus(n, it))
                worst = std::max(worst, support_check(m.curve));
    report(10, "support-inequality", worst <= 1e-8, "max support=" + fmt(worst));
}

// ---- 11: MCF strictification on 20 weak fixtures ----
void criterion11() {
    int used = 0;
    double worst_rho = 1e9, worst_ratio = 0.0;
    bool ok = true;
    const double horizon = 0.002;
    for (int n : kDims) {
        for (double theta : kThetas) {
            for (const auto& m : make_weak_fixtures(n, theta, 200)) {
                if (used >= 20) break;
                ++used;
                FlowConfig cfg;
                cfg.kind = FlowKind::mcf;
                cfg.stop_on_stationary = false;
                double dist[2]; // max-node return distance at t and t/2
                double rho_after = 0.0;
                try {
                    for (int half = 0; half < 2; ++half) {
                        cfg.t_end = horizon / (half + 1);
                        const FlowState fin = run(m.curve, cfg);
                        const ProfileCurve re = resample(fin.curve, m.curve.M());
                        double d = 0.0;
                        for (int j = 0; j <= m.curve.M(); ++j)
                            d = std::max(d, std::hypot(re.r[j] - m.curve.r[j],
                                                       re.z[j] - m.curve.z[j]));
                        dist[half] = d;
                        if (half == 0)
                            rho_after = horocap_residual(fin.curve).min_rho;
                    }
                } catch (const std::exception& e) {
                    ok = false;
                    std::printf("       fixture n=%d theta=%.3f failed: %s\n", n,
                                theta, e.what());
                    continue;
                }
                worst_rho = std::min(worst_rho, rho_after);
                // O(t) return: halving the horizon should (roughly) halve the move
                worst_ratio = std::max(worst_ratio, dist[1] / std::max(dist[0], 1e-15));
            }
        }
    }
    report(11, "mcf-strictification",
           ok && used == 20 && worst_rho > 0.0 && worst_ratio < 0.75,
           "min rho=" + fmt(worst_rho) + " max half-horizon ratio=" + fmt(worst_ratio));
}

// ---- 12: speed-decay estimate, stable across resolutions ----
void criterion12() {
    const int n = 2, k = 1;
    const double theta = M_PI / 3;
    std::vector<double> sups;
    bool ok = true;
    for (int M : {200, 400, 800}) {
        const double e = 0.5 * eps_star(n, theta, 0.8, 2, M);
        RunResult r = quotient_run(n, theta, k,
                                   make_perturbed_cap(n, theta, 0.8, 2, e, M), 1.0,
                                   /*per_step=*/false);
        if (!r.ok) {
            ok = false;
            std::printf("       M=%d failed: %s\n", M, r.err.c_str());
            continue;
        }
        sups.push_back(r.decay_sup);
    }
    double lo = 1e300, hi = 0.0;
    for (double s : sups) {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    const double spread = (hi - lo) / std::max(hi, 1e-300);
    report(12, "speed-decay", ok && sups.size() == 3 && std::isfinite(hi) &&
                                  spread < 0.2,
           "sup t/minF^2 in [" + fmt(lo) + "," + fmt(hi) + "] spread=" + fmt(spread));
}

// ---- 13: Heintze-Karcher ----
void criterion13() {
    double worst_corpus = 1e9, worst_cap = 0.0;
    for (int n : kDims)
        for (int it = 0; it < 3; ++it) {
            const double theta = kThetas[it];
            for (double R : {0.5, 1.0})
                worst_cap = std::max(
                    worst_cap,
                    std::abs(heintze_karcher_value(make_cap(n, theta, R, 1000))));
            for (const auto& m : corpus(n, it))
                worst_corpus = std::min(worst_corpus, heintze_karcher_value(m.curve));
        }
    report(13, "heintze-karcher", worst_corpus > -1e-6 && worst_cap < 1e-6,
           "corpus min=" + fmt(worst_corpus) + " cap max=" + fmt(worst_cap));
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    do_runs();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    criterion13();
    std::printf("%d of 13 criteria passed\n", 13 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
