#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "grafen/asymptotics.hpp"
#include "grafen/bounds.hpp"
#include "grafen/graph.hpp"
#include "grafen/harness.hpp"
#include "grafen/random_models.hpp"
#include "grafen/spectral.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

grafen::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    return grafen::read_edge_list(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph energy laboratory: exact energy, closed-form bounds, "
                 "preferential-attachment simulations"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random graph as an edge list");
    std::string model;
    int gen_n = 100;
    double gen_alpha = 1.0, gen_p = -1.0;
    std::uint64_t gen_seed = 0, gen_stream = 0;
    std::string gen_out;
    gen->add_option("model", model, "ba | rrt | er")->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--alpha", gen_alpha, "attachment exponent (ba)");
    gen->add_option("--p", gen_p, "edge probability (er); default 2/n");
    gen->add_option("--seed", gen_seed, "master seed");
    gen->add_option("--stream", gen_stream, "stream index");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // energy / bounds
    auto* energy_cmd = app.add_subcommand("energy", "exact energy of an edge-list graph");
    std::string energy_path_arg;
    energy_cmd->add_option("edgelist", energy_path_arg, "edge-list file")->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "bound report CSV for an edge-list graph");
    std::string bounds_path_arg;
    bounds_cmd->add_option("edgelist", bounds_path_arg, "edge-list file")->required();

    // table
    auto* table = app.add_subcommand("table", "closed-form comparison tables");
    table->require_subcommand(1);
    auto* tds = table->add_subcommand("double-star", "double-star table");
    int tds_p = 5, tds_qmax = 10;
    std::string tds_out;
    tds->add_option("--p", tds_p, "first center degree");
    tds->add_option("--q-max", tds_qmax, "largest second center degree");
    tds->add_option("--out", tds_out, "output path");
    auto* tpath = table->add_subcommand("path", "path table");
    int tpath_nmax = 10;
    std::string tpath_out;
    tpath->add_option("--n-max", tpath_nmax, "largest path size");
    tpath->add_option("--out", tpath_out, "output path");

    // exp
    auto* exp = app.add_subcommand("exp", "Monte Carlo experiments");
    exp->require_subcommand(1);
    struct ExpOpts {
        int n = 0, reps = 0, workers = 0;
        std::uint64_t seed = 0;
        bool paper_scale = false;
        std::string out;
    };
    ExpOpts fig3o, fig4o, fig5o, fig6o;
    auto add_common = [](CLI::App* cmd, ExpOpts& o) {
        cmd->add_option("--n", o.n, "graph size (0 = experiment default)");
        cmd->add_option("--reps", o.reps, "replications (0 = experiment default)");
        cmd->add_option("--seed", o.seed, "master seed");
        cmd->add_option("--workers", o.workers, "worker threads (0 = GRAFEN_WORKERS or hardware)");
        cmd->add_flag("--paper-scale", o.paper_scale, "use the full published scale");
        cmd->add_option("--out", o.out, "output path");
    };
    auto* fig3 = exp->add_subcommand("fig3", "BA(alpha=1) energy/n vs tree bound per replication");
    auto* fig4 = exp->add_subcommand("fig4", "cumulative mean energy/n for an alpha list");
    auto* fig5 = exp->add_subcommand("fig5", "alpha sweep of mean energy/n");
    auto* fig6 = exp->add_subcommand("fig6", "recursive tree vs Erdos-Renyi at p = 2/n");
    add_common(fig3, fig3o);
    add_common(fig4, fig4o);
    add_common(fig5, fig5o);
    add_common(fig6, fig6o);

    // constants
    auto* constants = app.add_subcommand("constants", "series constants and limit laws as CSV");
    double const_tol = 1e-7;
    int const_dmax = 20;
    std::string const_out;
    constants->add_option("--tol", const_tol, "truncation tolerance");
    constants->add_option("--d-max", const_dmax, "largest degree for law rows");
    constants->add_option("--out", const_out, "output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            grafen::Seed seed{gen_seed, gen_stream};
            grafen::Graph g;
            if (model == "ba")
                g = grafen::ba_tree(gen_n, gen_alpha, seed);
            else if (model == "rrt")
                g = grafen::recursive_tree(gen_n, seed);
            else if (model == "er")
                g = grafen::erdos_renyi(gen_n, gen_p < 0 ? 2.0 / gen_n : gen_p, seed);
            else
                throw std::runtime_error("unknown model: " + model + " (expected ba|rrt|er)");
            std::ostringstream os;
            grafen::write_edge_list(os, g);
            emit(os.str(), gen_out);
        } else if (*energy_cmd) {
            std::cout << grafen::format_sig12(grafen::energy(load_graph(energy_path_arg))) << '\n';
        } else if (*bounds_cmd) {
            auto report = grafen::bound_report(load_graph(bounds_path_arg));
            std::cout << "# grafen-csv v1\n"
                      << grafen::BoundReport::csv_header() << '\n'
                      << report.csv_row() << '\n';
        } else if (*tds) {
            emit(grafen::csv_table(grafen::run_double_star_table(tds_p, tds_qmax)), tds_out);
        } else if (*tpath) {
            emit(grafen::csv_table(grafen::run_path_table(tpath_nmax)), tpath_out);
        } else if (*fig3) {
            int n = fig3o.n ? fig3o.n : (fig3o.paper_scale ? 2000 : 500);
            int reps = fig3o.reps ? fig3o.reps : (fig3o.paper_scale ? 200 : 50);
            auto records = grafen::run_ba_bound_series(n, reps, 1.0, fig3o.seed, fig3o.workers);
            emit(grafen::csv_records(records), fig3o.out);
        } else if (*fig4) {
            int n = fig4o.n ? fig4o.n : (fig4o.paper_scale ? 1000 : 300);
            int reps = fig4o.reps ? fig4o.reps : (fig4o.paper_scale ? 100 : 20);
            std::vector<double> alphas{-5, -2, 0, 0.5, 0.7, 1, 1.2, 1.5, 1.7, 2};
            auto rows = grafen::run_alpha_cumulative(alphas, n, reps, fig4o.seed, fig4o.workers);
            emit(grafen::csv_cumulative(rows), fig4o.out);
        } else if (*fig5) {
            int n = fig5o.n ? fig5o.n : (fig5o.paper_scale ? 1000 : 500);
            int reps = fig5o.reps ? fig5o.reps : (fig5o.paper_scale ? 50 : 20);
            int points = fig5o.paper_scale ? 80 : 20;
            auto grid = grafen::linspace(-2.0, 5.0, points);
            auto sweep = grafen::run_alpha_sweep(grid, n, reps, fig5o.seed, fig5o.workers);
            std::string csv = grafen::csv_sweep(sweep);
            try {
                csv += "# threshold alpha: " +
                       grafen::format_sig12(grafen::estimate_threshold(sweep)) + "\n";
            } catch (const std::exception&) {
                csv += "# threshold alpha: no crossing in sweep\n";
            }
            emit(csv, fig5o.out);
        } else if (*fig6) {
            int n = fig6o.n ? fig6o.n : (fig6o.paper_scale ? 3000 : 1000);
            int reps = fig6o.reps ? fig6o.reps : (fig6o.paper_scale ? 200 : 30);
            auto series = grafen::run_er_vs_rrt(n, reps, fig6o.seed, fig6o.workers);
            emit(grafen::csv_paired(series), fig6o.out);
        } else if (*constants) {
            std::ostringstream os;
            os << "# grafen-csv v1\nquantity,arg,value\n";
            auto sc = grafen::series_constant(const_tol);
            auto cc = grafen::corrected_constant(const_tol);
            os << "series_constant,," << grafen::format_sig12(sc.value) << '\n';
            os << "corrected_constant,," << grafen::format_sig12(cc.value) << '\n';
            os << "truncation_bound,," << grafen::format_sig12(sc.truncation_bound) << '\n';
            for (int d = 1; d <= const_dmax; ++d)
                os << "alpha_d," << d << ','
                   << grafen::format_sig12(grafen::degree_fraction_limit(d).to_double()) << '\n';
            for (int k = 1; k <= 4; ++k)
                for (int l = k; l <= 4; ++l)
                    os << "n_kl," << k << ':' << l << ','
                       << grafen::format_sig12(grafen::edge_pair_limit(k, l).to_double()) << '\n';
            emit(os.str(), const_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
