#include "grafen/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "grafen/bounds.hpp"
#include "grafen/spectral.hpp"

namespace grafen {

int default_workers() {
    if (const char* env = std::getenv("GRAFEN_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 1) throw std::invalid_argument("linspace: points must be >= 1");
    std::vector<double> g(static_cast<size_t>(points));
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    for (int i = 0; i < points; ++i)
        g[static_cast<size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    return g;
}

std::string format_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

// Replication-level pool: `fn(job)` fills an index-addressed slot, so output
// order is schedule-independent. workers == 1 runs inline.
template <typename Fn>
void parallel_for_jobs(int jobs, int workers, Fn&& fn) {
    if (workers <= 0) workers = default_workers();
    workers = std::min(workers, jobs);
    if (workers <= 1) {
        for (int j = 0; j < jobs; ++j) fn(j);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                int j = next.fetch_add(1);
                if (j >= jobs) return;
                fn(j);
            }
        });
    }
    for (auto& t : pool) t.join();
}

// The double-star table roots the star partition at the degree-p center,
// giving 2*sqrt(p) + 2*sqrt(q-1) even when q > p, where rooting at the
// max-degree center would be tighter. Kept so the table tracks one fixed
// rooting across the whole q range.
double double_star_bound_rooted_at_p(int p, int q) {
    return 2.0 * std::sqrt(static_cast<double>(p)) +
           2.0 * std::sqrt(static_cast<double>(q - 1));
}

}  // namespace

Table run_double_star_table(int p, int q_max) {
    if (p < 1 || q_max < 1) throw std::invalid_argument("double-star table: need p, q_max >= 1");
    Table t;
    t.header = "q,energy,thm31,km1,km2,aj,mcclelland";
    t.notes.push_back(
        "thm31 column is the star-partition sum rooted at the degree-p center; for q > p "
        "the max-degree rooting is tighter");
    for (int q = 1; q <= q_max; ++q) {
        if (p + q < 3) continue;
        long long n = p + q, m = n - 1;
        Graph g = double_star(p, q);
        t.rows.push_back({{static_cast<double>(q), energy_double_star(p, q),
                           double_star_bound_rooted_at_p(p, q), koolen_moulton(n, m),
                           koolen_moulton_bipartite(n, m), arizmendi_juarez(g.degrees()),
                           mcclelland(n, m)}});
    }
    return t;
}

Table run_path_table(int n_max) {
    if (n_max < 2) throw std::invalid_argument("path table: need n_max >= 2");
    Table t;
    t.header = "n,energy,thm31,km1,km2,aj,mcclelland";
    t.notes.push_back("km2 is evaluated by the bipartite formula at every n, including n=4");
    for (int n = 2; n <= n_max; ++n) {
        long long m = n - 1;
        Graph g = path(n);
        double thm31 = n >= 3 ? tree_star_bound(g.degrees())
                              : 2.0;  // single-edge partition of P_2
        t.rows.push_back({{static_cast<double>(n), energy_path(n), thm31,
                           koolen_moulton(n, m), koolen_moulton_bipartite(n, m),
                           arizmendi_juarez(g.degrees()), mcclelland(n, m)}});
    }
    return t;
}

std::vector<RunRecord> run_ba_bound_series(int n, int reps, double alpha,
                                           std::uint64_t master_seed, int workers) {
    if (n < 3 || reps < 1) throw std::invalid_argument("ba-bound-series: need n >= 3, reps >= 1");
    std::vector<RunRecord> records(static_cast<size_t>(reps));
    parallel_for_jobs(reps, workers, [&](int rep) {
        auto t0 = std::chrono::steady_clock::now();
        Seed seed{master_seed, static_cast<std::uint64_t>(rep)};
        Graph g = ba_tree(n, alpha, seed);
        auto degs = g.degrees();
        long long e22 = edge_pair_stats(g).e22();
        RunRecord& r = records[static_cast<size_t>(rep)];
        r.experiment = "fig3";
        r.rep = rep;
        r.n = n;
        r.alpha = alpha;
        r.seed = seed;
        r.energy = energy(g);
        r.energy_over_n = r.energy / n;
        r.thm31_over_n = tree_star_bound(degs) / n;
        r.thm4_over_n = thm4_bound(degs, e22) / n;
        r.e22 = e22;
        r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    });
    return records;
}

std::vector<SweepPoint> run_alpha_sweep(const std::vector<double>& alpha_grid, int n, int reps,
                                        std::uint64_t master_seed, int workers) {
    if (alpha_grid.empty()) throw std::invalid_argument("alpha-sweep: empty grid");
    if (n < 3 || reps < 1) throw std::invalid_argument("alpha-sweep: need n >= 3, reps >= 1");
    int jobs = static_cast<int>(alpha_grid.size()) * reps;
    std::vector<double> ratios(static_cast<size_t>(jobs));
    parallel_for_jobs(jobs, workers, [&](int job) {
        int ai = job / reps;
        int rep = job % reps;
        Seed seed{master_seed, (static_cast<std::uint64_t>(ai) << 32) | static_cast<std::uint64_t>(rep)};
        Graph g = ba_tree(n, alpha_grid[static_cast<size_t>(ai)], seed);
        ratios[static_cast<size_t>(job)] = energy(g) / n;
    });
    std::vector<SweepPoint> sweep(alpha_grid.size());
    for (size_t ai = 0; ai < alpha_grid.size(); ++ai) {
        double mean = 0.0;
        for (int rep = 0; rep < reps; ++rep) mean += ratios[ai * static_cast<size_t>(reps) + static_cast<size_t>(rep)];
        mean /= reps;
        double var = 0.0;
        for (int rep = 0; rep < reps; ++rep) {
            double d = ratios[ai * static_cast<size_t>(reps) + static_cast<size_t>(rep)] - mean;
            var += d * d;
        }
        sweep[ai] = SweepPoint{alpha_grid[ai], mean, reps > 1 ? std::sqrt(var / (reps - 1)) : 0.0,
                               reps};
    }
    return sweep;
}

double estimate_threshold(const std::vector<SweepPoint>& sweep) {
    for (size_t i = 0; i + 1 < sweep.size(); ++i) {
        double f0 = sweep[i].mean - 1.0;
        double f1 = sweep[i + 1].mean - 1.0;
        if (f0 == 0.0) return sweep[i].alpha;
        if (f0 > 0.0 && f1 <= 0.0) {
            double t = f0 / (f0 - f1);
            return sweep[i].alpha + t * (sweep[i + 1].alpha - sweep[i].alpha);
        }
    }
    throw std::runtime_error("estimate_threshold: sweep does not bracket mean = 1");
}

PairedSeries run_er_vs_rrt(int n, int reps, std::uint64_t master_seed, int workers) {
    if (n < 3 || reps < 1) throw std::invalid_argument("er-vs-rrt: need n >= 3, reps >= 1");
    PairedSeries out;
    out.rrt_ratio.resize(static_cast<size_t>(reps));
    out.er_ratio.resize(static_cast<size_t>(reps));
    double p = 2.0 / n;
    parallel_for_jobs(2 * reps, workers, [&](int job) {
        int rep = job % reps;
        if (job < reps) {
            Graph g = recursive_tree(n, Seed{master_seed, static_cast<std::uint64_t>(rep)});
            out.rrt_ratio[static_cast<size_t>(rep)] = energy(g) / n;
        } else {
            Seed seed{master_seed, (1ULL << 32) | static_cast<std::uint64_t>(rep)};
            Graph g = erdos_renyi(n, p, seed);
            out.er_ratio[static_cast<size_t>(rep)] = energy(g) / n;
        }
    });
    return out;
}

std::vector<CumulativeRow> run_alpha_cumulative(const std::vector<double>& alpha_list, int n,
                                                int reps, std::uint64_t master_seed, int workers) {
    if (alpha_list.empty()) throw std::invalid_argument("alpha-cumulative: empty alpha list");
    if (n < 3 || reps < 1) throw std::invalid_argument("alpha-cumulative: need n >= 3, reps >= 1");
    int jobs = static_cast<int>(alpha_list.size()) * reps;
    std::vector<double> ratios(static_cast<size_t>(jobs));
    parallel_for_jobs(jobs, workers, [&](int job) {
        int ai = job / reps;
        int rep = job % reps;
        Seed seed{master_seed, (static_cast<std::uint64_t>(ai) << 32) | static_cast<std::uint64_t>(rep)};
        Graph g = ba_tree(n, alpha_list[static_cast<size_t>(ai)], seed);
        ratios[static_cast<size_t>(job)] = energy(g) / n;
    });
    std::vector<CumulativeRow> rows;
    rows.reserve(static_cast<size_t>(jobs));
    for (size_t ai = 0; ai < alpha_list.size(); ++ai) {
        double running = 0.0;
        for (int rep = 0; rep < reps; ++rep) {
            double r = ratios[ai * static_cast<size_t>(reps) + static_cast<size_t>(rep)];
            running += r;
            rows.push_back({alpha_list[ai], rep, r, running / (rep + 1)});
        }
    }
    return rows;
}

namespace {

constexpr const char* kCsvVersion = "# grafen-csv v1\n";

}

std::string csv_table(const Table& t) {
    std::ostringstream out;
    out << kCsvVersion;
    for (const auto& note : t.notes) out << "# " << note << '\n';
    out << t.header << '\n';
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.cells.size(); ++i) {
            if (i) out << ',';
            out << format_sig12(row.cells[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::string csv_records(const std::vector<RunRecord>& records) {
    std::ostringstream out;
    out << kCsvVersion
        << "experiment,rep,n,alpha,seed_master,seed_stream,energy,energy_over_n,thm31_over_n,"
           "thm4_over_n,e22\n";
    for (const auto& r : records) {
        out << r.experiment << ',' << r.rep << ',' << r.n << ',' << format_sig12(r.alpha) << ','
            << r.seed.master << ',' << r.seed.stream << ',' << format_sig12(r.energy) << ','
            << format_sig12(r.energy_over_n) << ',' << format_sig12(r.thm31_over_n) << ','
            << format_sig12(r.thm4_over_n) << ',' << r.e22 << '\n';
    }
    return out.str();
}

std::string csv_sweep(const std::vector<SweepPoint>& sweep) {
    std::ostringstream out;
    out << kCsvVersion << "alpha,mean_energy_over_n,std,reps\n";
    for (const auto& p : sweep)
        out << format_sig12(p.alpha) << ',' << format_sig12(p.mean) << ','
            << format_sig12(p.stddev) << ',' << p.reps << '\n';
    return out.str();
}

std::string csv_paired(const PairedSeries& series) {
    std::ostringstream out;
    out << kCsvVersion << "rep,rrt_energy_over_n,er_energy_over_n\n";
    for (size_t rep = 0; rep < series.rrt_ratio.size(); ++rep)
        out << rep << ',' << format_sig12(series.rrt_ratio[rep]) << ','
            << format_sig12(series.er_ratio[rep]) << '\n';
    return out.str();
}

std::string csv_cumulative(const std::vector<CumulativeRow>& rows) {
    std::ostringstream out;
    out << kCsvVersion << "alpha,rep,energy_over_n,cumulative_mean\n";
    for (const auto& r : rows)
        out << format_sig12(r.alpha) << ',' << r.rep << ',' << format_sig12(r.ratio) << ','
            << format_sig12(r.cumulative_mean) << '\n';
    return out.str();
}

}  // namespace grafen
