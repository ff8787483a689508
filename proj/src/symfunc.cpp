#include "capflow/symfunc.hpp"
#include "capflow/errors.hpp"

#include <cmath>
#include <string>

namespace capflow {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

namespace {

double ipow(double x, int p) {
    double v = 1.0;
    for (int i = 0; i < p; ++i) v *= x;
    return v;
}

} // namespace

double normalized_symmetric(int n, int k, double kprof, double krot) {
    if (k < 0 || k > n) throw invalid_input("normalized_symmetric: k out of range");
    if (k == 0) return 1.0;
    const double rp = ipow(krot, k - 1);
    double sigma = binomial(n - 1, k - 1) * kprof * rp;
    if (k <= n - 1) sigma += binomial(n - 1, k) * rp * krot;
    return sigma / binomial(n, k);
}

double curvature_quotient(int n, int k, double kprof, double krot) {
    if (k < 1 || k > n) throw invalid_input("curvature_quotient: k out of range");
    for (int j = 1; j <= k; ++j) {
        if (!(normalized_symmetric(n, j, kprof, krot) > 0.0))
            throw numeric_error("curvature cone violation: H_" + std::to_string(j) + " <= 0");
    }
    return normalized_symmetric(n, k, kprof, krot) /
           normalized_symmetric(n, k - 1, kprof, krot);
}

double newton_maclaurin_margin(int n, int k, double kprof, double krot) {
    if (k < 2 || k > n) throw invalid_input("newton_maclaurin_margin: k out of range");
    const double a = normalized_symmetric(n, k - 1, kprof, krot);
    const double b = normalized_symmetric(n, k - 2, kprof, krot);
    const double c = normalized_symmetric(n, k, kprof, krot);
    return a * a - b * c;
}

} // namespace capflow
