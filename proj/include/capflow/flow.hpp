#pragma once
#include <functional>
#include <vector>
#include "capflow/geometry.hpp"

namespace capflow {

enum class FlowKind { quotient, mcf };

struct FlowConfig {
    FlowKind kind = FlowKind::quotient;
    int k = 1;                   // quotient index (ignored for mcf)
    double cfl = 0.2;
    double dt_max = 1e-3;
    double t_end = 1.0;
    int resample_every = 200;
    int diagnostics_every = 500;
    double tol_stationary = 1e-8; // stop when sup|speed| drops below
    bool stop_on_stationary = true;
};

struct FlowState {
    double t = 0.0;
    ProfileCurve curve;
    double last_speed_sup = 0.0;
    long step_count = 0;
};

struct TimeSeriesRecord {
    double t = 0.0;
    std::vector<double> W;       // W_0 .. W_{n+1}
    double min_rho = 0.0;
    double min_height_slack = 0.0;
    double minF = 0.0;           // min of the quotient (0 for mcf records)
    double maxKappa = 0.0;
    double angle_defect = 0.0;
    double cap_dist = 0.0;
    double speed_sup = 0.0;
};

// X_e = <x,e> x - (|x|^2+1)/2 e restricted to the profile plane.
void conformal_killing(double r, double z, double& Xr, double& Xz);

// Speed of the constrained flow, f = <x + cos(theta) nu, e>/F - <X_e, nu>
// with F = H_k/H_{k-1}. Also returns per-node F. Throws numeric_error on a
// cone violation.
void speed_locally_constrained(const ProfileCurve& c, const SurfaceFrame& fr, int k,
                               std::vector<double>& f, std::vector<double>& F);

// f = -(kprof + (n-1) krot).
void speed_mcf(const ProfileCurve& c, const SurfaceFrame& fr, std::vector<double>& f);

// One accepted explicit Euler step (with reject-and-halve on failure).
void step(FlowState& st, const FlowConfig& cfg);

using RecordSink = std::function<void(const TimeSeriesRecord&)>;
using SnapshotSink = std::function<void(const FlowState&)>;

// Run until t_end or stationarity. Diagnostics are pushed to `sink` every
// diagnostics_every steps (and at start/end); snapshots likewise if a
// snapshot sink is given. Returns the final state.
FlowState run(const ProfileCurve& init, const FlowConfig& cfg,
              const RecordSink& sink = {}, const SnapshotSink& snap = {});

TimeSeriesRecord diagnostics(const FlowState& st, const FlowConfig& cfg);

} // namespace capflow
