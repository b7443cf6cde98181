#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "grafen/graph.hpp"

namespace grafen {

/// Replication-addressable seed: `master` identifies an experiment, `stream`
/// a replication. Identical (master, stream) pairs give identical graphs on
/// the same build.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;
};

/// 64-bit PRNG: std::mt19937_64 seeded by a splitmix64 mix of the (master,
/// stream) pair, so streams are decorrelated by construction. Uniform doubles
/// are built from the top 53 bits directly (no distribution objects), so the
/// whole stream is determined by the engine specification alone.
class Rng {
public:
    explicit Rng(Seed seed);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [0, bound), bound >= 1, by rejection sampling.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

/// Dynamic discrete distribution over indices 0..size-1 with positive
/// weights, backed by a Fenwick (binary indexed) prefix-sum tree.
/// Draws and single-weight updates are O(log n).
class WeightedIndex {
public:
    WeightedIndex() = default;
    explicit WeightedIndex(const std::vector<double>& weights);

    void push_back(double w);
    void add(int i, double delta);
    double weight(int i) const { return weights_[static_cast<size_t>(i)]; }
    double total() const { return total_; }
    int size() const { return size_; }

    /// Index drawn with probability weight[i]/total. `u` uniform in [0,1).
    int sample(double u) const;

private:
    void maybe_revalidate();

    std::vector<double> tree_;     // Fenwick tree, 1-based
    std::vector<double> weights_;  // raw weights, for periodic revalidation
    double total_ = 0.0;
    int size_ = 0;
    unsigned updates_since_check_ = 0;
};

/// Preferential-attachment tree: vertex 0 alone, vertex 1 attaches to 0
/// deterministically, vertex t >= 2 attaches to an earlier vertex drawn with
/// probability proportional to degree^alpha.
Graph ba_tree(int n, double alpha, Seed seed);

/// Uniform random recursive tree; identical to ba_tree(n, 0, seed) including
/// the consumed random stream.
Graph recursive_tree(int n, Seed seed);

/// G(n, p) with geometric skipping over the C(n,2) pair sequence, O(m)
/// expected time.
Graph erdos_renyi(int n, double p, Seed seed);

}  // namespace grafen
