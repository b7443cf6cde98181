#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace grafen {

/// Exact rational with 64-bit numerator/denominator, always reduced,
/// denominator > 0. Arithmetic goes through 128-bit intermediates and throws
/// on overflow of the reduced result.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational&) const = default;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Truncated series value with a certified remainder bound.
struct SeriesValue {
    double value = 0.0;
    double truncation_bound = 0.0;
    long long terms_used = 0;
};

/// Limiting degree fraction alpha_d = 4/(d(d+1)(d+2)) of the linear
/// preferential-attachment tree.
Rational degree_fraction_limit(long long d);

/// Tail mass beyond degree m: 2/((m+1)(m+2)).
Rational degree_tail(long long m);

/// 2 * sum_{d>=1} 4*sqrt(d-1)/(d(d+1)(d+2)), the asymptotic per-vertex value
/// of the rooted-star bound; approximately 1.00576755.
SeriesValue series_constant(double tol);

/// series_constant minus the degree-2 pair correction (4-2*sqrt(2))/135;
/// approximately 0.997089 — strictly below 1.
SeriesValue corrected_constant(double tol);

/// Limiting fraction of edges with endpoint degrees (k, l), k <= l.
Rational edge_pair_limit(long long k, long long l);

struct SublinearDegreeLaw {
    double s = 0.0;
    std::vector<double> q;  // q[d-1] for d = 1..d_max
};

/// Stationary degree law q(d) = (s/d^alpha) * prod_{i<=d} i^alpha/(s+i^alpha)
/// for sublinear attachment. Normalization sum_d q(d) = 1 telescopes and so
/// holds for every s; the rate s is fixed by the self-consistency equation
/// s = sum_d d^alpha * q(d;s), solved by bisection (the difference is
/// strictly decreasing in s). At alpha = 1 this recovers s = 2 and
/// q(d) = 4/(d(d+1)(d+2)); as alpha -> 0 it gives s = 1, q(d) = 2^{-d}.
SublinearDegreeLaw sublinear_degree_law(double alpha, int d_max, double tol);

}  // namespace grafen
