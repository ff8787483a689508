#include "capflow/spline.hpp"
#include "capflow/errors.hpp"

#include <algorithm>
#include <cmath>

namespace capflow {

CubicSpline::CubicSpline(const std::vector<double>& x, const std::vector<double>& y)
    : x_(x), y_(y) {
    const int N = static_cast<int>(x.size());
    if (N < 2 || y.size() != x.size())
        throw invalid_input("spline: need >= 2 matching knots");
    for (int i = 0; i + 1 < N; ++i)
        if (!(x[i + 1] > x[i]))
            throw invalid_input("spline: knots must be strictly increasing");

    s2_.assign(N, 0.0);
    if (N == 2) return; // linear
    std::vector<double> h(N - 1), d(N - 1);
    for (int i = 0; i < N - 1; ++i) {
        h[i] = x[i + 1] - x[i];
        d[i] = (y[i + 1] - y[i]) / h[i];
    }
    if (N == 3) {
        // single parabola through the three points
        const double s = 2.0 * (d[1] - d[0]) / (h[0] + h[1]);
        s2_[0] = s2_[1] = s2_[2] = s;
        return;
    }

    // Solve for interior second derivatives sig_1..sig_{N-2}; the end values
    // follow from the not-a-knot conditions (third derivative continuous at
    // the first and last interior knots):
    //   sig_0 = sig_1 - h0 (sig_2 - sig_1)/h1,  mirrored on the right.
    const int m = N - 2; // unknowns
    std::vector<double> lo(m, 0.0), di(m, 0.0), up(m, 0.0), rhs(m, 0.0);
    for (int i = 1; i <= N - 2; ++i) {
        const int j = i - 1;
        lo[j] = h[i - 1];
        di[j] = 2.0 * (h[i - 1] + h[i]);
        up[j] = h[i];
        rhs[j] = 6.0 * (d[i] - d[i - 1]);
    }
    // fold the end conditions into the first/last rows
    di[0] += h[0] + h[0] * h[0] / h[1];
    up[0] -= h[0] * h[0] / h[1];
    di[m - 1] += h[N - 2] + h[N - 2] * h[N - 2] / h[N - 3];
    lo[m - 1] -= h[N - 2] * h[N - 2] / h[N - 3];

    // Thomas algorithm
    for (int j = 1; j < m; ++j) {
        const double w = lo[j] / di[j - 1];
        di[j] -= w * up[j - 1];
        rhs[j] -= w * rhs[j - 1];
    }
    std::vector<double> sig(m);
    sig[m - 1] = rhs[m - 1] / di[m - 1];
    for (int j = m - 2; j >= 0; --j)
        sig[j] = (rhs[j] - up[j] * sig[j + 1]) / di[j];

    for (int i = 1; i <= N - 2; ++i) s2_[i] = sig[i - 1];
    s2_[0] = s2_[1] - h[0] * (s2_[2] - s2_[1]) / h[1];
    s2_[N - 1] = s2_[N - 2] + h[N - 2] * (s2_[N - 2] - s2_[N - 3]) / h[N - 3];
}

int CubicSpline::segment(double t) const {
    const int N = static_cast<int>(x_.size());
    int i = static_cast<int>(std::upper_bound(x_.begin(), x_.end(), t) - x_.begin()) - 1;
    return std::clamp(i, 0, N - 2);
}

double CubicSpline::operator()(double t) const {
    const int i = segment(t);
    const double h = x_[i + 1] - x_[i], u = t - x_[i];
    const double d = (y_[i + 1] - y_[i]) / h;
    const double b = d - h * (2.0 * s2_[i] + s2_[i + 1]) / 6.0;
    const double c = (s2_[i + 1] - s2_[i]) / (6.0 * h);
    return y_[i] + u * (b + u * (0.5 * s2_[i] + u * c));
}

double CubicSpline::deriv(double t) const {
    const int i = segment(t);
    const double h = x_[i + 1] - x_[i], u = t - x_[i];
    const double d = (y_[i + 1] - y_[i]) / h;
    const double b = d - h * (2.0 * s2_[i] + s2_[i + 1]) / 6.0;
    const double c = (s2_[i + 1] - s2_[i]) / (6.0 * h);
    return b + u * (s2_[i] + 3.0 * c * u);
}

double CubicSpline::deriv2(double t) const {
    const int i = segment(t);
    const double h = x_[i + 1] - x_[i], u = t - x_[i];
    return s2_[i] + u * (s2_[i + 1] - s2_[i]) / h;
}

namespace {
double pchip_edge(double h0, double h1, double d0, double d1) {
    double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (m * d0 <= 0.0)
        m = 0.0;
    else if (d0 * d1 < 0.0 && std::abs(m) > 3.0 * std::abs(d0))
        m = 3.0 * d0;
    return m;
}
} // namespace

PchipSpline::PchipSpline(const std::vector<double>& x, const std::vector<double>& y)
    : x_(x), y_(y) {
    const int N = static_cast<int>(x.size());
    if (N < 2 || y.size() != x.size())
        throw invalid_input("pchip: need >= 2 matching knots");
    for (int i = 0; i + 1 < N; ++i)
        if (!(x[i + 1] > x[i]))
            throw invalid_input("pchip: knots must be strictly increasing");
    m_.assign(N, 0.0);
    std::vector<double> h(N - 1), d(N - 1);
    for (int i = 0; i < N - 1; ++i) {
        h[i] = x[i + 1] - x[i];
        d[i] = (y[i + 1] - y[i]) / h[i];
    }
    if (N == 2) {
        m_[0] = m_[1] = d[0];
        return;
    }
    for (int i = 1; i < N - 1; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            m_[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            m_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    m_[0] = pchip_edge(h[0], h[1], d[0], d[1]);
    m_[N - 1] = pchip_edge(h[N - 2], h[N - 3], d[N - 2], d[N - 3]);
}

double PchipSpline::operator()(double t) const {
    const int N = static_cast<int>(x_.size());
    if (t < x_.front() || t > x_.back())
        throw invalid_input("pchip: evaluation outside table range");
    int i = static_cast<int>(std::upper_bound(x_.begin(), x_.end(), t) - x_.begin()) - 1;
    i = std::clamp(i, 0, N - 2);
    const double h = x_[i + 1] - x_[i];
    const double u = (t - x_[i]) / h;
    const double h00 = (1.0 + 2.0 * u) * (1.0 - u) * (1.0 - u);
    const double h10 = u * (1.0 - u) * (1.0 - u);
    const double h01 = u * u * (3.0 - 2.0 * u);
    const double h11 = u * u * (u - 1.0);
    return h00 * y_[i] + h * h10 * m_[i] + h01 * y_[i + 1] + h * h11 * m_[i + 1];
}

} // namespace capflow
