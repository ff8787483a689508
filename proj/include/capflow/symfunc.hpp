#pragma once

namespace capflow {

// Normalized elementary symmetric polynomial H_k = sigma_k / C(n,k) of the
// axisymmetric spectrum (kprof, krot, ..., krot) with krot of multiplicity
// n-1. Closed form:
//   sigma_k = C(n-1,k) krot^k + C(n-1,k-1) kprof krot^{k-1}.
// H_0 = 1, and H_k(1,...,1) = 1 for every k.
double normalized_symmetric(int n, int k, double kprof, double krot);

// F = H_k / H_{k-1}. Throws numeric_error if the spectrum leaves the cone
// Gamma_k (first j in 1..k with H_j <= 0 is named in the message).
double curvature_quotient(int n, int k, double kprof, double krot);

// H_{k-1}^2 - H_{k-2} H_k >= 0 on Gamma_k, equality iff all curvatures equal.
double newton_maclaurin_margin(int n, int k, double kprof, double krot);

double binomial(int n, int k);

} // namespace capflow
