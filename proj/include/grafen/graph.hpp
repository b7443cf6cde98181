#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grafen {

enum class GraphErrorKind {
    SelfLoop,
    IndexOutOfRange,
    DuplicateEdge,
    BadParameter,
};

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    GraphErrorKind kind() const { return kind_; }

private:
    GraphErrorKind kind_;
};

/// Undirected simple graph. Adjacency lists are sorted ascending, so two
/// graphs are equal iff their representations are equal.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int edge_count() const;
    int degree(int v) const { return static_cast<int>(adj[static_cast<size_t>(v)].size()); }
    std::vector<int> degrees() const;
    std::vector<std::pair<int, int>> edge_list() const;  // each edge once, i < j, sorted

    bool operator==(const Graph&) const = default;
};

struct DegreeStats {
    std::map<int, long long> counts;  // degree -> vertex count
    long long n = 0;
    long long m = 0;
};

struct EdgePairStats {
    // unordered endpoint-degree pair (k,l), k <= l -> edge count
    std::map<std::pair<int, int>, long long> counts;
    long long m = 0;

    long long e22() const;
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

Graph star(int n);
Graph path(int n);
Graph double_star(int p, int q);

bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);

DegreeStats degree_stats(const Graph& g);
EdgePairStats edge_pair_stats(const Graph& g);

// Edge-list text format: first line "n m", then m lines "i j" with i < j.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace grafen
