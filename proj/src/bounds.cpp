#include "grafen/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "grafen/spectral.hpp"

namespace grafen {

double mcclelland(long long n, long long m) {
    if (n < 1 || m < 0) throw std::domain_error("mcclelland: need n >= 1, m >= 0");
    return std::sqrt(2.0 * static_cast<double>(m) * static_cast<double>(n));
}

double koolen_moulton(long long n, long long m) {
    if (n < 2) throw std::domain_error("koolen_moulton: need n >= 2");
    double avg = 2.0 * static_cast<double>(m) / static_cast<double>(n);
    double radicand = 2.0 * static_cast<double>(m) - avg * avg;
    if (radicand < 0.0) throw std::domain_error("koolen_moulton: negative radicand");
    return avg + std::sqrt(static_cast<double>(n - 1) * radicand);
}

double koolen_moulton_bipartite(long long n, long long m) {
    if (n < 2) throw std::domain_error("koolen_moulton_bipartite: need n >= 2");
    double avg = 2.0 * static_cast<double>(m) / static_cast<double>(n);
    double radicand = 2.0 * static_cast<double>(m) - 2.0 * avg * avg;
    if (radicand < 0.0) throw std::domain_error("koolen_moulton_bipartite: negative radicand");
    return 2.0 * avg + std::sqrt(static_cast<double>(n - 2) * radicand);
}

double arizmendi_juarez(const std::vector<int>& degrees) {
    double sum = 0.0;
    for (int d : degrees) {
        if (d < 0) throw std::domain_error("arizmendi_juarez: negative degree");
        sum += std::sqrt(static_cast<double>(d));
    }
    return sum;
}

namespace {

void check_tree_degrees(const std::vector<int>& degrees) {
    size_t n = degrees.size();
    if (n < 3) throw std::domain_error("tree bound: need n >= 3");
    long long sum = std::accumulate(degrees.begin(), degrees.end(), 0LL);
    if (sum != 2 * static_cast<long long>(n) - 2)
        throw std::domain_error("tree bound: degree list inconsistent with a tree");
}

}  // namespace

double tree_star_bound(std::vector<int> degrees) {
    check_tree_degrees(degrees);
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    double sum = 2.0 * std::sqrt(static_cast<double>(degrees[0]));
    for (size_t i = 1; i < degrees.size(); ++i)
        sum += 2.0 * std::sqrt(static_cast<double>(degrees[i] - 1));
    return sum;
}

double tree_star_bound_weak(std::vector<int> degrees) {
    check_tree_degrees(degrees);
    double sum = 1.0;
    for (int d : degrees) sum += 2.0 * std::sqrt(static_cast<double>(d - 1));
    return sum;
}

double thm4_bound(std::vector<int> degrees, long long e22) {
    if (e22 < 0) throw std::domain_error("thm4_bound: e22 must be >= 0");
    return tree_star_bound(std::move(degrees)) -
           static_cast<double>(e22) / 3.0 * (4.0 - 2.0 * std::sqrt(2.0));
}

double StarPartition::energy_sum() const {
    double sum = 0.0;
    for (double e : part_energy) sum += e;
    return sum;
}

StarPartition star_partition(const Graph& t) {
    if (!is_tree(t) || t.n < 2) throw std::domain_error("star_partition: input must be a tree with n >= 2");
    // root = maximum-degree vertex, lowest index on ties
    int root = 0;
    for (int v = 1; v < t.n; ++v)
        if (t.degree(v) > t.degree(root)) root = v;
    // parent links by one traversal from the root
    std::vector<int> parent(static_cast<size_t>(t.n), -1);
    std::vector<int> stack{root};
    std::vector<char> seen(static_cast<size_t>(t.n), 0);
    seen[static_cast<size_t>(root)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : t.adj[static_cast<size_t>(v)]) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                parent[static_cast<size_t>(w)] = v;
                stack.push_back(w);
            }
        }
    }
    StarPartition sp;
    for (int v = 0; v < t.n; ++v) {
        std::vector<int> part{v};
        for (int w : t.adj[static_cast<size_t>(v)])
            if (w != parent[static_cast<size_t>(v)]) part.push_back(w);
        size_t edges = part.size() - 1;
        if (edges == 0) continue;  // leaf part, dropped
        sp.center.push_back(v);
        sp.part_energy.push_back(2.0 * std::sqrt(static_cast<double>(edges)));
        sp.parts.push_back(std::move(part));
    }
    return sp;
}

StarPartition merge_degree2_pairs(const Graph& t, const StarPartition& sp) {
    // part index by center vertex; -1 = no part (leaf)
    std::vector<int> part_of(static_cast<size_t>(t.n), -1);
    for (size_t i = 0; i < sp.center.size(); ++i)
        part_of[static_cast<size_t>(sp.center[i])] = static_cast<int>(i);
    std::vector<char> consumed(sp.parts.size(), 0);

    auto single_edge_part = [&](int v) -> int {
        int i = part_of[static_cast<size_t>(v)];
        if (i < 0 || consumed[static_cast<size_t>(i)]) return -1;
        return sp.parts[static_cast<size_t>(i)].size() == 2 ? i : -1;
    };

    StarPartition out;
    auto edges = t.edge_list();  // already sorted by (min endpoint, max endpoint)
    for (auto [a, b] : edges) {
        if (t.degree(a) != 2 || t.degree(b) != 2) continue;
        // orient so that H(u1) is exactly the single edge {u1,u2}
        for (auto [u1, u2] : {std::pair{a, b}, std::pair{b, a}}) {
            int i1 = single_edge_part(u1);
            if (i1 < 0 || sp.parts[static_cast<size_t>(i1)][1] != u2) continue;
            int i2 = single_edge_part(u2);
            if (i2 < 0) continue;
            int u3 = sp.parts[static_cast<size_t>(i2)][1];
            consumed[static_cast<size_t>(i1)] = 1;
            consumed[static_cast<size_t>(i2)] = 1;
            out.parts.push_back({u2, u1, u3});  // S_3 centered at u2
            out.center.push_back(u2);
            out.part_energy.push_back(2.0 * std::sqrt(2.0));
            break;
        }
    }
    for (size_t i = 0; i < sp.parts.size(); ++i) {
        if (consumed[i]) continue;
        out.parts.push_back(sp.parts[i]);
        out.center.push_back(sp.center[i]);
        out.part_energy.push_back(sp.part_energy[i]);
    }
    return out;
}

double partition_energy_sum(const Graph& g, const std::vector<std::vector<int>>& parts) {
    std::map<std::pair<int, int>, int> cover;
    for (const auto& vs : parts) {
        std::set<int> inset(vs.begin(), vs.end());
        for (int v : vs) {
            if (v < 0 || v >= g.n)
                throw std::domain_error("partition_energy_sum: part vertex out of range");
            for (int w : g.adj[static_cast<size_t>(v)])
                if (v < w && inset.count(w)) ++cover[{v, w}];
        }
    }
    for (auto& [e, c] : cover)
        if (c > 1) throw std::domain_error("partition_energy_sum: parts are not edge-disjoint");
    if (static_cast<long long>(cover.size()) != g.edge_count())
        throw std::domain_error("partition_energy_sum: parts do not cover every edge");

    double sum = 0.0;
    for (const auto& vs : parts) {
        // exact energy of the induced subgraph
        std::map<int, int> local;
        for (size_t i = 0; i < vs.size(); ++i) local[vs[static_cast<size_t>(i)]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> sub_edges;
        for (int v : vs)
            for (int w : g.adj[static_cast<size_t>(v)])
                if (v < w && local.count(w)) sub_edges.emplace_back(local[v], local[w]);
        Graph sub = from_edge_list(static_cast<int>(vs.size()), sub_edges);
        sum += energy(sub);
    }
    return sum;
}

namespace {

MaybeBound absent(std::string reason) { return MaybeBound{std::nullopt, std::move(reason)}; }

MaybeBound present(double v) { return MaybeBound{v, {}}; }

template <typename F>
MaybeBound guard(F&& f) {
    try {
        return present(f());
    } catch (const std::domain_error& e) {
        return absent(e.what());
    }
}

}  // namespace

BoundReport bound_report(const Graph& g) {
    BoundReport r;
    r.n = g.n;
    r.m = g.edge_count();
    auto degs = g.degrees();
    r.delta = degs.empty() ? 0 : *std::max_element(degs.begin(), degs.end());
    r.e22 = edge_pair_stats(g).e22();
    r.energy_exact = energy(g);
    r.mcclelland = guard([&] { return mcclelland(r.n, r.m); });
    r.km1 = guard([&] { return koolen_moulton(r.n, r.m); });
    if (is_bipartite(g))
        r.km2 = guard([&] { return koolen_moulton_bipartite(r.n, r.m); });
    else
        r.km2 = absent("not bipartite");
    r.aj = guard([&] { return arizmendi_juarez(degs); });
    if (is_tree(g)) {
        r.thm31 = guard([&] { return tree_star_bound(degs); });
        r.thm31_weak = guard([&] { return tree_star_bound_weak(degs); });
        r.thm4 = guard([&] { return thm4_bound(degs, r.e22); });
    } else {
        r.thm31 = r.thm31_weak = r.thm4 = absent("not a tree");
    }
    return r;
}

std::string BoundReport::csv_header() {
    return "n,m,delta,e22,energy,mcclelland,km1,km2,aj,thm31,thm31_weak,thm4";
}

std::string BoundReport::csv_row() const {
    auto cell = [](const MaybeBound& b) -> std::string {
        if (!b.value) return "";
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", *b.value);
        return buf;
    };
    char head[160];
    std::snprintf(head, sizeof(head), "%lld,%lld,%d,%lld,%.12g", n, m, delta, e22, energy_exact);
    return std::string(head) + "," + cell(mcclelland) + "," + cell(km1) + "," + cell(km2) + "," +
           cell(aj) + "," + cell(thm31) + "," + cell(thm31_weak) + "," + cell(thm4);
}

}  // namespace grafen
