#include "grafen/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>

namespace grafen {

int Graph::edge_count() const {
    long long sum = 0;
    for (const auto& nb : adj) sum += static_cast<long long>(nb.size());
    return static_cast<int>(sum / 2);
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) d[static_cast<size_t>(v)] = degree(v);
    return d;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j : adj[static_cast<size_t>(i)])
            if (i < j) edges.emplace_back(i, j);
    return edges;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw GraphError(GraphErrorKind::BadParameter, "vertex count must be >= 0");
    Graph g;
    g.n = n;
    g.adj.assign(static_cast<size_t>(n), {});
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw GraphError(GraphErrorKind::IndexOutOfRange,
                             "edge (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") out of range for n=" + std::to_string(n));
        if (i == j)
            throw GraphError(GraphErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(i));
        std::pair<int, int> key = std::minmax(i, j);
        if (!seen.insert(key).second)
            throw GraphError(GraphErrorKind::DuplicateEdge,
                             "duplicate edge (" + std::to_string(key.first) + "," +
                                 std::to_string(key.second) + ")");
        g.adj[static_cast<size_t>(i)].push_back(j);
        g.adj[static_cast<size_t>(j)].push_back(i);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

Graph star(int n) {
    if (n < 2) throw GraphError(GraphErrorKind::BadParameter, "star requires n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return from_edge_list(n, edges);
}

Graph path(int n) {
    if (n < 1) throw GraphError(GraphErrorKind::BadParameter, "path requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return from_edge_list(n, edges);
}

Graph double_star(int p, int q) {
    if (p < 1 || q < 1 || p + q < 3)
        throw GraphError(GraphErrorKind::BadParameter, "double_star requires p,q >= 1 and p+q >= 3");
    // Center A = 0 (degree p), center B = 1 (degree q); leaves follow.
    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(0, 1);
    int next = 2;
    for (int k = 0; k < p - 1; ++k) edges.emplace_back(0, next++);
    for (int k = 0; k < q - 1; ++k) edges.emplace_back(1, next++);
    return from_edge_list(p + q, edges);
}

bool is_tree(const Graph& g) {
    if (g.n == 0) return false;
    if (g.edge_count() != g.n - 1) return false;
    // connectivity by one traversal
    std::vector<char> seen(static_cast<size_t>(g.n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adj[static_cast<size_t>(v)]) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == g.n;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.n), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adj[static_cast<size_t>(v)]) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.n = g.n;
    long long degsum = 0;
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        ++s.counts[d];
        degsum += d;
    }
    s.m = degsum / 2;
    return s;
}

EdgePairStats edge_pair_stats(const Graph& g) {
    EdgePairStats s;
    for (int i = 0; i < g.n; ++i) {
        for (int j : g.adj[static_cast<size_t>(i)]) {
            if (i >= j) continue;
            std::pair<int, int> kl = std::minmax(g.degree(i), g.degree(j));
            ++s.counts[kl];
            ++s.m;
        }
    }
    return s;
}

long long EdgePairStats::e22() const {
    auto it = counts.find({2, 2});
    return it == counts.end() ? 0 : it->second;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto edges = g.edge_list();
    out << g.n << ' ' << edges.size() << '\n';
    for (auto [i, j] : edges) out << i << ' ' << j << '\n';
}

Graph read_edge_list(std::istream& in) {
    int n = 0;
    long long m = 0;
    if (!(in >> n >> m))
        throw GraphError(GraphErrorKind::BadParameter, "edge list: missing 'n m' header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long k = 0; k < m; ++k) {
        int i = 0, j = 0;
        if (!(in >> i >> j))
            throw GraphError(GraphErrorKind::BadParameter,
                             "edge list: expected " + std::to_string(m) + " edges");
        edges.emplace_back(i, j);
    }
    return from_edge_list(n, edges);
}

}  // namespace grafen
