#include "grafen/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace grafen {

namespace {

inline double hypot2(double a, double b) {
    double aa = std::fabs(a), ab = std::fabs(b);
    if (aa > ab) {
        double r = ab / aa;
        return aa * std::sqrt(1.0 + r * r);
    }
    if (ab == 0.0) return 0.0;
    double r = aa / ab;
    return ab * std::sqrt(1.0 + r * r);
}

// Householder reduction of the symmetric matrix a (row-major, lower triangle
// authoritative) to tridiagonal form; eigenvectors are not accumulated.
// On return d holds the diagonal, e the subdiagonal (e[0] unused).
void householder_tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                                std::vector<double>& e) {
    auto at = [&a, n](int r, int c) -> double& { return a[static_cast<size_t>(r) * n + c]; };
    for (int i = n - 1; i > 0; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
            if (scale == 0.0) {
                e[static_cast<size_t>(i)] = at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[static_cast<size_t>(i)] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                // e[j] <- (A u)_j / h over the leading (l+1)x(l+1) block.
                // Row-parallel: each e[j] is one serial dot product.
#pragma omp parallel for schedule(static, 16)
                for (int j = 0; j <= l; ++j) {
                    double gj = 0.0;
                    for (int k = 0; k <= j; ++k) gj += at(j, k) * at(i, k);
                    for (int k = j + 1; k <= l; ++k) gj += at(k, j) * at(i, k);
                    e[static_cast<size_t>(j)] = gj / h;
                }
                double fsum = 0.0;
                for (int j = 0; j <= l; ++j) fsum += e[static_cast<size_t>(j)] * at(i, j);
                double hh = fsum / (h + h);
                for (int j = 0; j <= l; ++j) e[static_cast<size_t>(j)] -= hh * at(i, j);
                // rank-2 update of the lower triangle, row-parallel
#pragma omp parallel for schedule(static, 16)
                for (int j = 0; j <= l; ++j) {
                    double fj = at(i, j);
                    double gj = e[static_cast<size_t>(j)];
                    for (int k = 0; k <= j; ++k)
                        at(j, k) -= fj * e[static_cast<size_t>(k)] + gj * at(i, k);
                }
            }
        } else {
            e[static_cast<size_t>(i)] = at(i, l);
        }
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = at(i, i);
}

// Implicit-shift QL iteration on a symmetric tridiagonal matrix.
// d = diagonal, e = subdiagonal in e[1..n-1]. Eigenvalues land in d.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, int n) {
    if (n == 1) return;
    for (int i = 1; i < n; ++i) e[static_cast<size_t>(i - 1)] = e[static_cast<size_t>(i)];
    e[static_cast<size_t>(n - 1)] = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    // Absolute deflation floor: the relative test alone stalls on clusters of
    // (near-)zero eigenvalues, which tree spectra have in abundance.
    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        anorm = std::max(anorm, std::fabs(d[static_cast<size_t>(i)]) + std::fabs(e[static_cast<size_t>(i)]));
    const double floor = eps * anorm;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[static_cast<size_t>(m)]) + std::fabs(d[static_cast<size_t>(m + 1)]);
                if (std::fabs(e[static_cast<size_t>(m)]) <= std::max(eps * dd, floor)) break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw std::runtime_error("tridiagonal QL: too many iterations");
                double g = (d[static_cast<size_t>(l + 1)] - d[static_cast<size_t>(l)]) /
                           (2.0 * e[static_cast<size_t>(l)]);
                double r = hypot2(g, 1.0);
                g = d[static_cast<size_t>(m)] - d[static_cast<size_t>(l)] +
                    e[static_cast<size_t>(l)] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[static_cast<size_t>(i)];
                    double b = c * e[static_cast<size_t>(i)];
                    r = hypot2(f, g);
                    e[static_cast<size_t>(i + 1)] = r;
                    if (r == 0.0) {
                        d[static_cast<size_t>(i + 1)] -= p;
                        e[static_cast<size_t>(m)] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[static_cast<size_t>(i + 1)] - p;
                    r = (d[static_cast<size_t>(i)] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[static_cast<size_t>(i + 1)] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[static_cast<size_t>(l)] -= p;
                e[static_cast<size_t>(l)] = g;
                e[static_cast<size_t>(m)] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
    if (n < 1) throw std::invalid_argument("symmetric_eigenvalues: n must be >= 1");
    std::vector<double> d(static_cast<size_t>(n)), e(static_cast<size_t>(n));
    householder_tridiagonalize(a, n, d, e);
    tridiagonal_ql(d, e, n);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

std::vector<double> symmetric_eigenvalues_jacobi(std::vector<double> a, int n) {
    if (n < 1) throw std::invalid_argument("symmetric_eigenvalues_jacobi: n must be >= 1");
    auto at = [&a, n](int r, int c) -> double& { return a[static_cast<size_t>(r) * n + c]; };
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        if (off <= 1e-26 * n * n) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = std::copysign(1.0, theta) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> vals(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = at(i, i);
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

Spectrum adjacency_spectrum(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("adjacency_spectrum: empty graph");
    int n = g.n;
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j : g.adj[static_cast<size_t>(i)]) {
            a[static_cast<size_t>(i) * n + j] = 1.0;
            scale = 1.0;
        }
    }
    Spectrum s;
    s.norm_scale = scale;
    s.values = symmetric_eigenvalues(std::move(a), n);
    return s;
}

double energy(const Graph& g) {
    if (g.n == 0) return 0.0;
    double sum = 0.0;
    for (double v : adjacency_spectrum(g).values) sum += std::fabs(v);
    return sum;
}

double energy_star(int n) {
    if (n < 2) throw std::invalid_argument("energy_star: n must be >= 2");
    return 2.0 * std::sqrt(static_cast<double>(n - 1));
}

double energy_path(int n) {
    if (n < 2) throw std::invalid_argument("energy_path: n must be >= 2");
    const double pi = std::numbers::pi;
    if (n % 2 == 0) {
        int k = n / 2;
        return 2.0 / std::sin(pi / (4.0 * k + 2.0)) - 2.0;
    }
    int k = (n - 1) / 2;
    double x = pi / (4.0 * k + 4.0);
    return 2.0 * std::cos(x) / std::sin(x) - 2.0;
}

double energy_double_star(int p, int q) {
    if (p < 1 || q < 1 || p + q < 3)
        throw std::invalid_argument("energy_double_star: need p,q >= 1 and p+q >= 3");
    double pq = static_cast<double>(p) + q;
    double r = std::sqrt((pq + 1.0) * (pq + 1.0) - 4.0 * (static_cast<double>(p) * q + 1.0));
    double inner = std::max(0.0, pq - 1.0 - r);  // exactly 0 when q == 1
    return std::sqrt(2.0) * (std::sqrt(pq - 1.0 + r) + std::sqrt(inner));
}

}  // namespace grafen
