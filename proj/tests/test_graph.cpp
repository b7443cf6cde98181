#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "grafen/graph.hpp"
#include "grafen/random_models.hpp"

using namespace grafen;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
}

// degree-sequence + edge-count isomorphism check used throughout the tests
bool same_shape(const Graph& a, const Graph& b) {
    return a.n == b.n && a.edge_count() == b.edge_count() && sorted_degrees(a) == sorted_degrees(b);
}

void check_invariants(const Graph& g) {
    long long degsum = 0;
    for (int i = 0; i < g.n; ++i) {
        const auto& nb = g.adj[static_cast<size_t>(i)];
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
        for (int j : nb) {
            CHECK(i != j);
            const auto& back = g.adj[static_cast<size_t>(j)];
            CHECK(std::binary_search(back.begin(), back.end(), i));
        }
        degsum += static_cast<long long>(nb.size());
    }
    CHECK(degsum % 2 == 0);
}

}  // namespace

TEST_CASE("from_edge_list basic graphs") {
    Graph p2 = from_edge_list(2, {{0, 1}});
    CHECK(p2.edge_count() == 1);
    CHECK(p2 == path(2));

    Graph s3 = from_edge_list(3, {{0, 1}, {0, 2}});
    CHECK(sorted_degrees(s3) == std::vector<int>{1, 1, 2});
    CHECK(s3 == star(3));
}

TEST_CASE("from_edge_list error kinds") {
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const GraphError& e) {
            return e.kind();
        }
        return GraphErrorKind::BadParameter;
    };
    CHECK(kind_of([] { from_edge_list(3, {{0, 1}, {0, 1}}); }) == GraphErrorKind::DuplicateEdge);
    CHECK(kind_of([] { from_edge_list(3, {{0, 1}, {1, 0}}); }) == GraphErrorKind::DuplicateEdge);
    CHECK(kind_of([] { from_edge_list(3, {{1, 1}}); }) == GraphErrorKind::SelfLoop);
    CHECK(kind_of([] { from_edge_list(3, {{0, 3}}); }) == GraphErrorKind::IndexOutOfRange);
}

TEST_CASE("star builder") {
    Graph s4 = star(4);
    CHECK(sorted_degrees(s4) == std::vector<int>{1, 1, 1, 3});
    CHECK(star(2) == path(2));
    CHECK(same_shape(star(6), double_star(5, 1)));
    CHECK_THROWS_AS(star(1), GraphError);
}

TEST_CASE("path builder") {
    CHECK(path(4).edge_count() == 3);
    CHECK(path(1).edge_count() == 0);
    CHECK(sorted_degrees(path(6)) == std::vector<int>{1, 1, 2, 2, 2, 2});
    CHECK(edge_pair_stats(path(6)).e22() == 3);
    CHECK_THROWS_AS(path(0), GraphError);
}

TEST_CASE("double_star builder") {
    CHECK(same_shape(double_star(2, 2), path(4)));
    Graph d55 = double_star(5, 5);
    CHECK(d55.n == 10);
    CHECK(d55.edge_count() == 9);
    CHECK(sorted_degrees(d55) == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 5, 5});
    // center degrees are exactly p and q
    Graph d52 = double_star(5, 2);
    CHECK(d52.degree(0) == 5);
    CHECK(d52.degree(1) == 2);
    CHECK_THROWS_AS(double_star(1, 1), GraphError);
    CHECK_THROWS_AS(double_star(0, 5), GraphError);
}

TEST_CASE("is_tree") {
    CHECK(is_tree(path(10)));
    CHECK(is_tree(star(7)));
    CHECK(is_tree(double_star(4, 6)));
    CHECK_FALSE(is_tree(from_edge_list(4, {{0, 1}, {2, 3}})));          // disconnected
    CHECK_FALSE(is_tree(from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}})));  // cycle, m != n-1? m = n
    CHECK_FALSE(is_tree(erdos_renyi(50, 0.5, Seed{1, 1})));             // m >> n-1
}

TEST_CASE("degree_stats") {
    auto s = degree_stats(star(6));
    CHECK(s.counts == std::map<int, long long>{{1, 5}, {5, 1}});
    auto p = degree_stats(path(6));
    CHECK(p.counts == std::map<int, long long>{{1, 2}, {2, 4}});
    CHECK(p.n == 6);
    CHECK(p.m == 5);
    // isolated vertices counted under degree 0
    auto iso = degree_stats(from_edge_list(3, {}));
    CHECK(iso.counts.at(0) == 3);
}

TEST_CASE("edge_pair_stats") {
    auto p = edge_pair_stats(path(6));
    CHECK(p.counts == std::map<std::pair<int, int>, long long>{{{1, 2}, 2}, {{2, 2}, 3}});
    auto s = edge_pair_stats(star(6));
    CHECK(s.counts == std::map<std::pair<int, int>, long long>{{{1, 5}, 5}});
    CHECK(s.e22() == 0);
}

TEST_CASE("builder outputs satisfy all graph invariants") {
    for (int n : {2, 3, 5, 17}) check_invariants(star(n));
    for (int n : {1, 2, 6, 17}) check_invariants(path(n));
    check_invariants(double_star(5, 8));
}

TEST_CASE("tree degree identity sum d*n_d = 2n-2") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        Graph t = ba_tree(200, 1.0, Seed{11, s});
        REQUIRE(is_tree(t));
        auto ds = degree_stats(t);
        long long sum = 0;
        for (auto [d, nd] : ds.counts) sum += static_cast<long long>(d) * nd;
        CHECK(sum == 2 * ds.n - 2);
        CHECK(std::accumulate(ds.counts.begin(), ds.counts.end(), 0LL,
                              [](long long a, auto& kv) { return a + kv.second; }) == ds.n);
    }
}

TEST_CASE("edge_pair_stats totals equal m across models") {
    for (std::uint64_t s = 0; s < 1000; ++s) {
        Graph t = ba_tree(40, 1.0, Seed{21, s});
        auto st = edge_pair_stats(t);
        long long total = 0;
        for (auto& [kl, c] : st.counts) total += c;
        CHECK(total == t.edge_count());

        Graph g = erdos_renyi(30, 0.15, Seed{22, s});
        auto sg = edge_pair_stats(g);
        total = 0;
        for (auto& [kl, c] : sg.counts) total += c;
        CHECK(total == g.edge_count());
    }
}

TEST_CASE("edge-list text round trip is identity") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        Graph g = erdos_renyi(40, 0.1, Seed{31, s});
        std::stringstream buf;
        write_edge_list(buf, g);
        CHECK(read_edge_list(buf) == g);
    }
    Graph empty = from_edge_list(5, {});
    std::stringstream buf;
    write_edge_list(buf, empty);
    CHECK(read_edge_list(buf) == empty);
}
