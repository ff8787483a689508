#pragma once
#include <vector>
#include "capflow/geometry.hpp"

namespace capflow {

// Deterministic test corpus: perturbed caps over an (R, mode) lattice with
// amplitudes expressed as fractions of eps*(n, theta, R, mode, M), the
// largest amplitude keeping the surface strictly horocap-convex (found by
// bisection). frac < 1 gives strict members, frac = 1 the weak fixtures.
struct CorpusSpec {
    int n;
    double theta;
    double R;
    int mode;
    double frac;   // fraction of eps*
    int M;
};

struct CorpusMember {
    CorpusSpec spec;
    double eps;    // realized amplitude
    ProfileCurve curve;
};

// Largest strictly horocap-convex amplitude (40 bisection steps on [0, hi]).
double eps_star(int n, double theta, double R, int mode, int M, double hi = 0.05);

// The documented lattice: R in {0.5, 0.8, 1.3}, mode in {2, 3},
// frac in fracs, at resolution M.
std::vector<CorpusMember> make_corpus(int n, double theta, int M,
                                      const std::vector<double>& fracs = {0.25, 0.5, 0.8});

// Weak (eps = eps*) fixtures for the smoothing experiments.
std::vector<CorpusMember> make_weak_fixtures(int n, double theta, int M);

} // namespace capflow
