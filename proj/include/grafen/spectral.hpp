#pragma once

#include <vector>

#include "grafen/graph.hpp"

namespace grafen {

/// Eigenvalues of a real symmetric matrix, sorted descending.
struct Spectrum {
    std::vector<double> values;
    double norm_scale = 0.0;  // largest |entry| of the source matrix
};

/// All eigenvalues of the dense symmetric matrix `a` (row-major, n x n).
/// Householder tridiagonalization (OpenMP-parallel row updates) followed by
/// implicit-shift QL on the tridiagonal form. Returns values sorted descending.
/// Deterministic: identical input gives bit-identical output regardless of
/// thread count (each output element is computed serially by one thread).
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

/// Serial reference eigensolver: cyclic Jacobi rotation sweeps. Slower than
/// the Householder/QL kernel but independent of it; kept for testing and for
/// the benchmark comparison.
std::vector<double> symmetric_eigenvalues_jacobi(std::vector<double> a, int n);

Spectrum adjacency_spectrum(const Graph& g);

double energy(const Graph& g);

/// Closed forms, used as oracles against the eigensolver.
double energy_star(int n);         // 2*sqrt(n-1)
double energy_path(int n);         // trigonometric closed form
double energy_double_star(int p, int q);

}  // namespace grafen
