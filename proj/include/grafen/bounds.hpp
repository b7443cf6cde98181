#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grafen/graph.hpp"

namespace grafen {

/// Closed-form energy upper bounds. All take plain counts/degree lists so
/// tables can be generated without building graphs.

double mcclelland(long long n, long long m);                 // sqrt(2mn)
double koolen_moulton(long long n, long long m);             // general graphs
double koolen_moulton_bipartite(long long n, long long m);   // bipartite graphs
double arizmendi_juarez(const std::vector<int>& degrees);    // sum sqrt(d_i)

/// Rooted-star bound for trees: sum_{i>=2} 2*sqrt(d_i - 1) + 2*sqrt(Delta)
/// over the degree list sorted descending (d_1 = Delta).
double tree_star_bound(std::vector<int> degrees);

/// Weaker closed form: sum_i 2*sqrt(d_i - 1) + 1. Always >= tree_star_bound.
double tree_star_bound_weak(std::vector<int> degrees);

/// Degree-2 pair refinement: tree_star_bound - (e22/3)*(4 - 2*sqrt(2)).
double thm4_bound(std::vector<int> degrees, long long e22);

/// Edge-disjoint, edge-covering decomposition of a tree into stars.
struct StarPartition {
    std::vector<std::vector<int>> parts;  // vertex sets, index 0 = center
    std::vector<int> center;
    std::vector<double> part_energy;  // 2*sqrt(k) for a star with k edges

    double energy_sum() const;
};

/// Rooted star partition from the tree bound's constructive proof. The root
/// is a maximum-degree vertex (lowest index on ties); every non-root part is
/// a vertex with its children; zero-edge (leaf) parts are dropped. The part
/// energies sum to tree_star_bound(degrees).
StarPartition star_partition(const Graph& t);

/// Greedy refinement merging adjacent single-edge parts whose centers both
/// have degree 2 into one 2-edge star, scanning edges in (min,max) order.
/// Each merge saves 4 - 2*sqrt(2); the merge count is parts-in minus
/// parts-out.
StarPartition merge_degree2_pairs(const Graph& t, const StarPartition& sp);

/// Sum of exact part energies of an arbitrary partition of g, validated to be
/// edge-disjoint and edge-covering. By trace-norm subadditivity this always
/// dominates energy(g).
double partition_energy_sum(const Graph& g, const std::vector<std::vector<int>>& parts);

/// One bound, or the reason it is absent.
struct MaybeBound {
    std::optional<double> value;
    std::string reason;  // set when value is absent
};

struct BoundReport {
    long long n = 0;
    long long m = 0;
    int delta = 0;       // maximum degree
    long long e22 = 0;   // edges joining two degree-2 vertices
    double energy_exact = 0.0;
    MaybeBound mcclelland, km1, km2, aj, thm31, thm31_weak, thm4;

    /// CSV row: n,m,delta,e22,energy,mcclelland,km1,km2,aj,thm31,thm31_weak,thm4
    /// with empty cells for absent bounds.
    std::string csv_row() const;
    static std::string csv_header();
};

BoundReport bound_report(const Graph& g);

}  // namespace grafen
