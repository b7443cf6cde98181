#include "grafen/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace grafen {

namespace {

using i128 = __int128;

long long checked_narrow(i128 v, const char* ctx) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error(std::string("Rational overflow in ") + ctx);
    return static_cast<long long>(v);
}

long long gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return checked_narrow(a, "gcd");
}

Rational make(i128 num, i128 den, const char* ctx) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = num == 0 ? den : gcd128(num, den);
    Rational r;
    r.num = checked_narrow(num / g, ctx);
    r.den = checked_narrow(den / g, ctx);
    return r;
}

}  // namespace

Rational::Rational(long long n, long long d) { *this = make(n, d, "ctor"); }

Rational Rational::operator+(const Rational& o) const {
    return make(static_cast<i128>(num) * o.den + static_cast<i128>(o.num) * den,
                static_cast<i128>(den) * o.den, "add");
}

Rational Rational::operator-(const Rational& o) const {
    return make(static_cast<i128>(num) * o.den - static_cast<i128>(o.num) * den,
                static_cast<i128>(den) * o.den, "sub");
}

Rational Rational::operator*(const Rational& o) const {
    return make(static_cast<i128>(num) * o.num, static_cast<i128>(den) * o.den, "mul");
}

Rational degree_fraction_limit(long long d) {
    if (d < 1) throw std::domain_error("degree_fraction_limit: d must be >= 1");
    return make(4, static_cast<i128>(d) * (d + 1) * (d + 2), "alpha_d");
}

Rational degree_tail(long long m) {
    if (m < 0) throw std::domain_error("degree_tail: m must be >= 0");
    return make(2, static_cast<i128>(m + 1) * (m + 2), "tail");
}

SeriesValue series_constant(double tol) {
    if (!(tol > 0.0)) throw std::domain_error("series_constant: tol must be > 0");
    // Term t_d = 8*sqrt(d-1)/(d(d+1)(d+2)) <= 8*d^{-5/2}; integral comparison
    // gives sum_{d>M} t_d <= 8 * (2/3) * M^{-3/2} = 16/(3 M^{3/2}).
    double m_real = std::pow(16.0 / (3.0 * tol), 2.0 / 3.0);
    long long M = std::max<long long>(2, static_cast<long long>(std::ceil(m_real)));
    double sum = 0.0;
    for (long long d = M; d >= 1; --d) {  // ascending magnitude for accuracy
        double dd = static_cast<double>(d);
        sum += 8.0 * std::sqrt(dd - 1.0) / (dd * (dd + 1.0) * (dd + 2.0));
    }
    SeriesValue out;
    out.value = sum;
    out.truncation_bound = 16.0 / (3.0 * std::pow(static_cast<double>(M), 1.5));
    out.terms_used = M;
    return out;
}

SeriesValue corrected_constant(double tol) {
    SeriesValue s = series_constant(tol);
    s.value -= (4.0 - 2.0 * std::sqrt(2.0)) / 135.0;
    return s;
}

Rational edge_pair_limit(long long k, long long l) {
    if (k < 1 || k > l) throw std::domain_error("edge_pair_limit: need 1 <= k <= l");
    i128 s = k + l;
    Rational first = make(4 * (l - 1), static_cast<i128>(k) * (k + 1) * s * (s + 1) * (s + 2), "nkl1");
    Rational second = make(12 * (l - 1), static_cast<i128>(k) * (s - 1) * s * (s + 1) * (s + 2), "nkl2");
    return first + second;
}

namespace {

// Evaluates q(d;s) for d = 1..d_max together with the truncated sums
// sum q(d) and sum d^alpha q(d) and geometric majorants of both tails.
// q(d+1)/q(d) = d^alpha / (s + (d+1)^alpha) < 1 and decreasing in d, so the
// mass beyond d_max is at most q(d_max) * r/(1-r) with r that ratio at d_max;
// the weighted tail picks up the extra factor ((d+1)/d)^alpha per step.
//
// Note sum_{d=1}^{M} q(d;s) = 1 - prod_{i<=M} i^alpha/(s+i^alpha) telescopes,
// so normalization holds for every s and cannot pin s down. What determines
// s is self-consistency of the total attachment rate: s = sum_d d^alpha q(d).
// Sanity anchors: alpha -> 1 gives s = 2 and q(d) = 4/(d(d+1)(d+2));
// alpha -> 0 gives s = 1 and the geometric law q(d) = 2^{-d}.
struct LawEval {
    double sum;           // sum q(d), d <= d_max
    double weighted_sum;  // sum d^alpha q(d), d <= d_max
    double tail_bound;    // bound on both neglected tails
    std::vector<double> q;
};

LawEval eval_law(double alpha, double s, int d_max) {
    LawEval ev;
    ev.q.resize(static_cast<size_t>(d_max));
    double prod = 1.0;
    double sum = 0.0, wsum = 0.0;
    for (int d = 1; d <= d_max; ++d) {
        double da = std::pow(static_cast<double>(d), alpha);
        prod *= da / (s + da);
        double qd = s / da * prod;
        ev.q[static_cast<size_t>(d - 1)] = qd;
        sum += qd;
        wsum += da * qd;
    }
    double dm = static_cast<double>(d_max);
    double r = std::pow(dm, alpha) / (s + std::pow(dm + 1.0, alpha));
    double rw = r * std::pow((dm + 1.0) / dm, alpha);  // ratio for d^alpha q(d)
    ev.sum = sum;
    ev.weighted_sum = wsum;
    double q_last = ev.q[static_cast<size_t>(d_max - 1)];
    ev.tail_bound = rw < 1.0 ? std::pow(dm, alpha) * q_last * rw / (1.0 - rw)
                             : std::numeric_limits<double>::infinity();
    return ev;
}

}  // namespace

SublinearDegreeLaw sublinear_degree_law(double alpha, int d_max, double tol) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("sublinear_degree_law: alpha must be in (0,1)");
    if (!(tol > 0.0)) throw std::domain_error("sublinear_degree_law: tol must be > 0");
    if (d_max < 2) throw std::domain_error("sublinear_degree_law: d_max too small");

    // F(s) = sum d^alpha q(d;s) - s, strictly decreasing: F(0+) > 0 and
    // F -> 1 - s as s grows (q concentrates on d = 1).
    auto F = [&](double s) { return eval_law(alpha, s, d_max).weighted_sum - s; };

    double lo = 1e-6, hi = 2.0;
    if (F(lo) <= 0.0)
        throw std::runtime_error("sublinear_degree_law: bracketing failure at lower end");
    int doublings = 0;
    while (F(hi) > 0.0) {
        hi *= 2.0;
        if (++doublings > 60)
            throw std::runtime_error("sublinear_degree_law: bracketing failure at upper end");
    }
    while (hi - lo > 1e-14 * std::max(1.0, hi)) {
        double mid = 0.5 * (lo + hi);
        if (F(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double s = 0.5 * (lo + hi);
    LawEval ev = eval_law(alpha, s, d_max);
    if (ev.tail_bound > tol)
        throw std::runtime_error("sublinear_degree_law: insufficient d_max for requested tol");
    SublinearDegreeLaw out;
    out.s = s;
    out.q = std::move(ev.q);
    return out;
}

}  // namespace grafen
