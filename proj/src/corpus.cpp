#include "capflow/corpus.hpp"
#include "capflow/convexity.hpp"

namespace capflow {

double eps_star(int n, double theta, double R, int mode, int M, double hi) {
    double lo = 0.0;
    for (int it = 0; it < 40; ++it) {
        const double mid = 0.5 * (lo + hi);
        bool strict = false;
        try {
            make_perturbed_cap(n, theta, R, mode, mid, M, &strict);
        } catch (...) {
            strict = false;
        }
        (strict ? lo : hi) = mid;
    }
    return lo;
}

static const double kRadii[] = {0.5, 0.8, 1.3};
static const int kModes[] = {2, 3};

std::vector<CorpusMember> make_corpus(int n, double theta, int M,
                                      const std::vector<double>& fracs) {
    std::vector<CorpusMember> out;
    for (double R : kRadii) {
        for (int mode : kModes) {
            const double es = eps_star(n, theta, R, mode, M);
            for (double frac : fracs) {
                CorpusMember m;
                m.spec = {n, theta, R, mode, frac, M};
                m.eps = frac * es;
                m.curve = make_perturbed_cap(n, theta, R, mode, m.eps, M);
                out.push_back(std::move(m));
            }
        }
    }
    return out;
}

std::vector<CorpusMember> make_weak_fixtures(int n, double theta, int M) {
    std::vector<CorpusMember> out;
    for (double R : kRadii) {
        for (int mode : kModes) {
            CorpusMember m;
            m.spec = {n, theta, R, mode, 1.0, M};
            m.eps = eps_star(n, theta, R, mode, M);
            m.curve = make_perturbed_cap(n, theta, R, mode, m.eps, M);
            out.push_back(std::move(m));
        }
    }
    return out;
}

} // namespace capflow
