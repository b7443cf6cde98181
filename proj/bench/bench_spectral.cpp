// Compares the OpenMP Householder/QL kernel against the serial Jacobi
// reference on BA-tree adjacency matrices. Prints one CSV row per size.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "grafen/random_models.hpp"
#include "grafen/spectral.hpp"

namespace {

std::vector<double> dense_adjacency(const grafen::Graph& g) {
    std::vector<double> a(static_cast<size_t>(g.n) * g.n, 0.0);
    for (int i = 0; i < g.n; ++i)
        for (int j : g.adj[static_cast<size_t>(i)]) a[static_cast<size_t>(i) * g.n + j] = 1.0;
    return a;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    std::printf("n,householder_ql_s,jacobi_s,max_abs_diff\n");
    for (int n : {100, 200, 400, 800}) {
        grafen::Graph g = grafen::ba_tree(n, 1.0, grafen::Seed{42, 0});
        auto a = dense_adjacency(g);

        auto t0 = std::chrono::steady_clock::now();
        auto fast = grafen::symmetric_eigenvalues(a, n);
        double fast_s = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        auto ref = grafen::symmetric_eigenvalues_jacobi(a, n);
        double ref_s = seconds_since(t0);

        double max_diff = 0.0;
        for (int i = 0; i < n; ++i)
            max_diff = std::max(max_diff, std::fabs(fast[static_cast<size_t>(i)] -
                                                    ref[static_cast<size_t>(i)]));
        std::printf("%d,%.4f,%.4f,%.3e\n", n, fast_s, ref_s, max_diff);
    }
    return 0;
}
