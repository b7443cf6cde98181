#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grafen/graph.hpp"
#include "grafen/random_models.hpp"

namespace grafen {

enum class Experiment {
    DoubleStarTable,
    PathTable,
    BaBoundSeries,    // fig3
    AlphaCumulative,  // fig4
    AlphaSweep,       // fig5
    ErVsRrt,          // fig6
};

struct ExperimentConfig {
    Experiment experiment = Experiment::BaBoundSeries;
    int n = 500;
    int reps = 50;
    std::vector<double> alpha_list;  // sweep grid or cumulative list
    double alpha = 1.0;
    double p = 0.0;  // 0 means "use 2/n"
    std::uint64_t master_seed = 0;
    int workers = 0;  // 0 = hardware default
    std::string output_path;
};

/// One replication's output. wall_time is informational only and is never
/// serialized (CSV output must be byte-deterministic).
struct RunRecord {
    std::string experiment;
    int rep = 0;
    int n = 0;
    double alpha = 0.0;
    Seed seed;
    double energy = 0.0;
    double energy_over_n = 0.0;
    double thm31_over_n = 0.0;
    double thm4_over_n = 0.0;
    long long e22 = 0;
    double wall_time = 0.0;
};

struct TableRow {
    std::vector<double> cells;
};

struct Table {
    std::string header;              // CSV column names
    std::vector<std::string> notes;  // emitted as '#' comment lines
    std::vector<TableRow> rows;
};

struct SweepPoint {
    double alpha = 0.0;
    double mean = 0.0;
    double stddev = 0.0;
    int reps = 0;
};

/// Deterministic closed-form tables (no randomness).
Table run_double_star_table(int p, int q_max);
Table run_path_table(int n_max);

/// Fig. 3: per replication, BA(alpha) tree energy/n and the tree-bound
/// ratios. Records are returned in replication order regardless of how the
/// worker pool schedules them.
std::vector<RunRecord> run_ba_bound_series(int n, int reps, double alpha,
                                           std::uint64_t master_seed, int workers);

/// Fig. 5: mean energy/n per alpha over `reps` independent trees.
std::vector<SweepPoint> run_alpha_sweep(const std::vector<double>& alpha_grid, int n, int reps,
                                        std::uint64_t master_seed, int workers);

/// Linear interpolation of the mean = 1 crossing in a sweep.
double estimate_threshold(const std::vector<SweepPoint>& sweep);

struct PairedSeries {
    std::vector<double> rrt_ratio;  // energy/n per replication
    std::vector<double> er_ratio;
};

/// Fig. 6: recursive tree vs Erdos-Renyi at p = 2/n, paired by replication.
PairedSeries run_er_vs_rrt(int n, int reps, std::uint64_t master_seed, int workers);

struct CumulativeRow {
    double alpha = 0.0;
    int rep = 0;
    double ratio = 0.0;
    double cumulative_mean = 0.0;
};

/// Fig. 4: running cumulative mean of energy/n per alpha.
std::vector<CumulativeRow> run_alpha_cumulative(const std::vector<double>& alpha_list, int n,
                                                int reps, std::uint64_t master_seed, int workers);

/// CSV writers; every file starts with "# grafen-csv v1". All output is
/// UTF-8, LF, '.' decimal separator, 12 significant digits.
std::string csv_table(const Table& t);
std::string csv_records(const std::vector<RunRecord>& records);
std::string csv_sweep(const std::vector<SweepPoint>& sweep);
std::string csv_paired(const PairedSeries& series);
std::string csv_cumulative(const std::vector<CumulativeRow>& rows);

/// Default worker count: GRAFEN_WORKERS env var, else hardware concurrency.
int default_workers();

/// Evenly spaced grid of `points` values over [lo, hi].
std::vector<double> linspace(double lo, double hi, int points);

std::string format_sig12(double v);

}  // namespace grafen
