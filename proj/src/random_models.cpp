#include "grafen/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace grafen {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t mix_seed(Seed seed) {
    std::uint64_t x = seed.master;
    std::uint64_t a = splitmix64(x);
    x ^= seed.stream + 0x9e3779b97f4a7c15ULL;
    std::uint64_t b = splitmix64(x);
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace

Rng::Rng(Seed seed) : engine_(mix_seed(seed)) {}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be >= 1");
    std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

WeightedIndex::WeightedIndex(const std::vector<double>& weights) {
    for (double w : weights) push_back(w);
}

void WeightedIndex::push_back(double w) {
    if (!(w > 0.0)) throw std::invalid_argument("WeightedIndex: weights must be > 0");
    weights_.push_back(w);
    ++size_;
    tree_.push_back(w);
    // fold completed children into the new node (standard Fenwick build step)
    int i = size_;
    int lsb = i & -i;
    for (int j = 1; j < lsb; j <<= 1) tree_[static_cast<size_t>(i - 1)] += tree_[static_cast<size_t>(i - j - 1)];
    total_ += w;
}

void WeightedIndex::add(int i, double delta) {
    double w = weights_[static_cast<size_t>(i)] + delta;
    if (!(w > 0.0)) throw std::invalid_argument("WeightedIndex: update made weight non-positive");
    weights_[static_cast<size_t>(i)] = w;
    for (int j = i + 1; j <= size_; j += j & -j) tree_[static_cast<size_t>(j - 1)] += delta;
    total_ += delta;
    if (++updates_since_check_ >= (1u << 16)) maybe_revalidate();
}

void WeightedIndex::maybe_revalidate() {
    updates_since_check_ = 0;
    double exact = 0.0;
    for (double w : weights_) exact += w;
    if (std::fabs(total_ - exact) > 1e-9 * std::max(1.0, std::fabs(exact))) {
        // rebuild the tree from the raw weights
        tree_.assign(weights_.size(), 0.0);
        for (int i = 1; i <= size_; ++i) {
            tree_[static_cast<size_t>(i - 1)] += weights_[static_cast<size_t>(i - 1)];
            int parent = i + (i & -i);
            if (parent <= size_)
                tree_[static_cast<size_t>(parent - 1)] += tree_[static_cast<size_t>(i - 1)];
        }
    }
    total_ = exact;
}

int WeightedIndex::sample(double u) const {
    double target = u * total_;
    int pos = 0;
    int mask = 1;
    while ((mask << 1) <= size_) mask <<= 1;
    for (; mask > 0; mask >>= 1) {
        int next = pos + mask;
        if (next <= size_ && tree_[static_cast<size_t>(next - 1)] <= target) {
            target -= tree_[static_cast<size_t>(next - 1)];
            pos = next;
        }
    }
    return std::min(pos, size_ - 1);
}

namespace {

// Shared growth loop; pick_parent(t, rng) returns the attachment target for
// vertex t given t existing vertices.
template <typename Pick>
Graph grow_tree(int n, Pick&& pick_parent) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(std::max(0, n - 1)));
    if (n >= 2) edges.emplace_back(0, 1);  // forced first attachment
    for (int t = 2; t < n; ++t) edges.emplace_back(pick_parent(t), t);
    return from_edge_list(n, edges);
}

}  // namespace

Graph ba_tree(int n, double alpha, Seed seed) {
    if (n < 1) throw std::invalid_argument("ba_tree: n must be >= 1");
    if (!std::isfinite(alpha)) throw std::invalid_argument("ba_tree: alpha must be finite");
    Rng rng(seed);
    if (alpha == 0.0) {
        // uniform attachment; shared with recursive_tree
        return grow_tree(n, [&rng](int t, auto&&...) {
            return static_cast<int>(rng.next_below(static_cast<std::uint64_t>(t)));
        });
    }
    WeightedIndex weights;
    std::vector<int> degree;
    if (n >= 2) {
        weights.push_back(1.0);  // d_0 = 1 after the forced edge
        weights.push_back(1.0);  // d_1 = 1
        degree = {1, 1};
    }
    auto dpow = [alpha](int d) { return std::pow(static_cast<double>(d), alpha); };
    return grow_tree(n, [&](int t) {
        (void)t;
        int parent = weights.sample(rng.next_double());
        int d = degree[static_cast<size_t>(parent)];
        weights.add(parent, dpow(d + 1) - dpow(d));
        degree[static_cast<size_t>(parent)] = d + 1;
        weights.push_back(1.0);
        degree.push_back(1);
        return parent;
    });
}

Graph recursive_tree(int n, Seed seed) { return ba_tree(n, 0.0, seed); }

Graph erdos_renyi(int n, double p, Seed seed) {
    if (n < 0) throw std::invalid_argument("erdos_renyi: n must be >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi: p must be in [0,1]");
    std::vector<std::pair<int, int>> edges;
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    auto pair_at = [n](long long idx) {
        // row-major enumeration of pairs (i,j), i < j
        long long i = 0;
        long long remaining = n - 1;
        while (idx >= remaining) {
            idx -= remaining;
            ++i;
            --remaining;
        }
        return std::pair<int, int>(static_cast<int>(i), static_cast<int>(i + 1 + idx));
    };
    if (p >= 1.0) {
        for (long long k = 0; k < pairs; ++k) edges.push_back(pair_at(k));
    } else if (p > 0.0) {
        Rng rng(seed);
        const double log1mp = std::log1p(-p);
        long long idx = -1;
        for (;;) {
            double u = rng.next_double();
            double skip = std::floor(std::log1p(-u) / log1mp);
            if (skip > static_cast<double>(pairs)) break;
            idx += 1 + static_cast<long long>(skip);
            if (idx >= pairs) break;
            edges.push_back(pair_at(idx));
        }
    }
    return from_edge_list(n, edges);
}

}  // namespace grafen
