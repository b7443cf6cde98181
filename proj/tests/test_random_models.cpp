#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <sstream>

#include "grafen/graph.hpp"
#include "grafen/random_models.hpp"

using namespace grafen;

namespace {

bool is_star_on_4(const Graph& g) {
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    return d == std::vector<int>{1, 1, 1, 3};
}

std::string edge_bytes(const Graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

}  // namespace

TEST_CASE("tiny trees are forced or exactly distributed") {
    // n = 3 is always P_3 up to labeling, for every alpha
    for (double a : {-5.0, 0.0, 1.0, 5.0})
        for (std::uint64_t s = 0; s < 20; ++s) {
            auto d = ba_tree(3, a, Seed{11, s}).degrees();
            std::sort(d.begin(), d.end());
            CHECK(d == std::vector<int>{1, 1, 2});
        }

    // n = 4, alpha = 1: vertex 3 picks the middle vertex w.p. 2/4
    const int reps = 100000;
    int stars = 0;
    for (std::uint64_t s = 0; s < reps; ++s)
        if (is_star_on_4(ba_tree(4, 1.0, Seed{12, s}))) ++stars;
    CHECK(static_cast<double>(stars) / reps == doctest::Approx(0.5).epsilon(0.02));

    // n = 4 uniform attachment: star w.p. 1/3
    stars = 0;
    for (std::uint64_t s = 0; s < reps; ++s)
        if (is_star_on_4(recursive_tree(4, Seed{13, s}))) ++stars;
    CHECK(static_cast<double>(stars) / reps == doctest::Approx(1.0 / 3.0).epsilon(0.03));
}

TEST_CASE("recursive_tree matches ba_tree(alpha=0) byte for byte") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        Graph a = ba_tree(200, 0.0, Seed{14, s});
        Graph b = recursive_tree(200, Seed{14, s});
        CHECK(a == b);
        CHECK(edge_bytes(a) == edge_bytes(b));
    }
}

TEST_CASE("determinism and stream separation") {
    Graph a = ba_tree(300, 1.0, Seed{15, 7});
    Graph b = ba_tree(300, 1.0, Seed{15, 7});
    CHECK(edge_bytes(a) == edge_bytes(b));
    CHECK_FALSE(ba_tree(300, 1.0, Seed{15, 8}) == a);
    CHECK_FALSE(ba_tree(300, 1.0, Seed{16, 7}) == a);

    Graph e = erdos_renyi(200, 0.05, Seed{17, 1});
    CHECK(edge_bytes(e) == edge_bytes(erdos_renyi(200, 0.05, Seed{17, 1})));
}

TEST_CASE("ba_tree always yields a tree") {
    for (double a : {-5.0, -2.0, 0.0, 0.5, 1.0, 2.0, 5.0})
        for (std::uint64_t s = 0; s < 100; ++s) {
            Graph g = ba_tree(60, a, Seed{18, s});
            CHECK(is_tree(g));
        }
}

TEST_CASE("ba_tree rejects bad parameters") {
    CHECK_THROWS_AS(ba_tree(0, 1.0, Seed{}), std::invalid_argument);
    CHECK_THROWS_AS(ba_tree(5, std::nan(""), Seed{}), std::invalid_argument);
    CHECK_THROWS_AS(erdos_renyi(5, -0.1, Seed{}), std::invalid_argument);
    CHECK_THROWS_AS(erdos_renyi(5, 1.5, Seed{}), std::invalid_argument);
    // a single vertex is a valid (edgeless) tree
    CHECK(ba_tree(1, 1.0, Seed{}).n == 1);
}

TEST_CASE("erdos_renyi edge counts") {
    CHECK(erdos_renyi(50, 0.0, Seed{19, 0}).edge_count() == 0);
    CHECK(erdos_renyi(50, 1.0, Seed{19, 0}).edge_count() == 50 * 49 / 2);

    // n = 3000, p = 2/n: E[m] = (n-1) = 2999, sd ~ 54.7; mean of 50 reps has
    // se ~ 7.7, so a +-60 window is a ~7.8 sigma test
    const int n = 3000;
    double total = 0.0;
    for (std::uint64_t s = 0; s < 50; ++s)
        total += erdos_renyi(n, 2.0 / n, Seed{20, s}).edge_count();
    double mean_m = total / 50.0;
    CHECK(std::fabs(mean_m - 2999.0) < 60.0);
}

TEST_CASE("degree-law of the alpha=1 tree") {
    // n_d / n -> 4 / (d (d+1) (d+2))
    const int n = 2000, reps = 50;
    std::array<double, 6> freq{};
    double e22_sum = 0.0;
    for (std::uint64_t s = 0; s < reps; ++s) {
        Graph g = ba_tree(n, 1.0, Seed{21, s});
        for (int v = 0; v < n; ++v) {
            int d = g.degree(v);
            if (d <= 5) freq[static_cast<size_t>(d)] += 1.0;
        }
        e22_sum += static_cast<double>(edge_pair_stats(g).e22());
    }
    for (int d = 1; d <= 5; ++d) {
        double want = 4.0 / (static_cast<double>(d) * (d + 1) * (d + 2));
        CHECK(std::fabs(freq[static_cast<size_t>(d)] / (n * reps) - want) < 0.02);
    }
    CHECK(std::fabs(e22_sum / (n * reps) - 1.0 / 45.0) < 0.01);
}

TEST_CASE("WeightedIndex sampling is unbiased") {
    std::vector<double> w{3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0, 5.0, 3.0};
    WeightedIndex wi(w);
    CHECK(wi.size() == 10);
    CHECK(wi.total() == doctest::Approx(39.0));

    const int draws = 1000000;
    std::vector<long long> obs(w.size(), 0);
    Rng rng(Seed{22, 0});
    for (int i = 0; i < draws; ++i) ++obs[static_cast<size_t>(wi.sample(rng.next_double()))];

    double chi2 = 0.0;
    for (size_t i = 0; i < w.size(); ++i) {
        double expect = draws * w[i] / wi.total();
        double diff = static_cast<double>(obs[i]) - expect;
        chi2 += diff * diff / expect;
    }
    CHECK(chi2 < 27.877);  // chi-square df=9, p = 0.001
}

TEST_CASE("WeightedIndex updates") {
    WeightedIndex wi;
    for (int i = 0; i < 8; ++i) wi.push_back(1.0);
    wi.add(3, 7.0);
    CHECK(wi.weight(3) == doctest::Approx(8.0));
    CHECK(wi.total() == doctest::Approx(15.0));
    // sample at extremes lands on valid indices
    CHECK(wi.sample(0.0) >= 0);
    CHECK(wi.sample(std::nextafter(1.0, 0.0)) <= 7);
    // mass of index 3 dominates: u = 0.5 corresponds to cumulative 7.5 which
    // falls inside [3, 11) of index 3's interval
    CHECK(wi.sample(0.5) == 3);
}
