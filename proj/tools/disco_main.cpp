// Command-line front end: score a labeling, sweep clusterer parameters, or
// run ablation ramps. Summary output is key=value lines on stdout; tables
// are CSV with a fixed column order.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "disco/clusterers.hpp"
#include "disco/clustering.hpp"
#include "disco/datasets.hpp"
#include "disco/errors.hpp"
#include "disco/external_eval.hpp"
#include "disco/numeric.hpp"
#include "disco/parallel.hpp"
#include "disco/point_set.hpp"
#include "disco/score.hpp"

namespace {

using namespace disco;

std::string fmt_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_table(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (...) {
            throw parameter_error("cannot parse '" + item + "' in " + flag);
        }
    }
    if (out.empty()) {
        throw parameter_error(flag + " has no values");
    }
    return out;
}

struct InputOptions {
    std::string data_path;
    std::string generate_spec;
    std::string labels_path;
    int label_column = -1;  // unset
    std::string standardize = "per-feature";
    bool sample_sigma = false;
    std::uint64_t seed = 1;
    std::size_t mu = kDefaultMu;
};

void add_input_flags(CLI::App* cmd, InputOptions& opts, const char* standardize_default) {
    opts.standardize = standardize_default;
    cmd->add_option("--data", opts.data_path, "CSV dataset (header auto-detected)");
    cmd->add_option("--generate", opts.generate_spec,
                    "synthetic dataset spec, e.g. rings:points=100,noise=30,seed=1");
    cmd->add_option("--labels", opts.labels_path, "single-column label file, -1 = noise");
    cmd->add_option("--label-column", opts.label_column,
                    "0-based column of --data holding integer labels");
    cmd->add_option("--mu", opts.mu, "neighbor count for core-distances")
        ->default_val(kDefaultMu);
    cmd->add_option("--standardize", opts.standardize,
                    "z-standardization: per-feature, global, or none")
        ->default_val(standardize_default)
        ->check(CLI::IsMember({"per-feature", "global", "none"}));
    cmd->add_flag("--sample-sigma", opts.sample_sigma,
                  "use the n-1 standard deviation convention when standardizing");
    cmd->add_option("--seed", opts.seed, "seed for generators and k-means")
        ->default_val(1);
}

struct ResolvedInput {
    PointSet points;
    std::optional<Clustering> clustering;
};

PointSet standardized(const PointSet& ps, const InputOptions& opts) {
    if (opts.standardize == "none") return ps;
    const StandardizeMode mode = opts.standardize == "global"
                                     ? StandardizeMode::global
                                     : StandardizeMode::per_feature;
    StandardizeResult res = z_standardize(ps, mode, opts.sample_sigma);
    for (const std::string& w : res.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    return std::move(res.points);
}

ResolvedInput resolve_input(const InputOptions& opts) {
    const bool have_data = !opts.data_path.empty();
    const bool have_gen = !opts.generate_spec.empty();
    if (have_data == have_gen) {
        throw parameter_error("exactly one of --data or --generate is required");
    }
    if (!opts.labels_path.empty() && opts.label_column >= 0) {
        throw parameter_error("--labels and --label-column are mutually exclusive");
    }

    std::optional<Clustering> clustering;
    std::optional<PointSet> points;
    if (have_data) {
        std::optional<std::size_t> label_col;
        if (opts.label_column >= 0) {
            label_col = static_cast<std::size_t>(opts.label_column);
        }
        LoadedData loaded =
            load_csv(opts.data_path, sniff_header(opts.data_path), label_col);
        points = std::move(loaded.points);
        clustering = std::move(loaded.clustering);
    } else {
        if (opts.label_column >= 0) {
            throw parameter_error("--label-column needs --data, not --generate");
        }
        GeneratorSpec spec = parse_generator_spec(opts.generate_spec);
        if (!spec.params.count("seed")) {
            spec.params["seed"] = static_cast<double>(opts.seed);
        }
        Dataset ds = generate(spec);
        points = std::move(ds.points);
        clustering = std::move(ds.clustering);
    }
    if (!opts.labels_path.empty()) {
        clustering = Clustering::from_labels(load_labels(opts.labels_path));
    }
    return ResolvedInput{standardized(*points, opts), std::move(clustering)};
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw input_error("cannot open file for writing: " + path);
    }
    return out;
}

// ---- score -----------------------------------------------------------------

struct ScoreOptions {
    InputOptions input;
    std::string pointwise_path;
};

int run_score(const ScoreOptions& opts) {
    ResolvedInput in = resolve_input(opts.input);
    if (!in.clustering) {
        throw parameter_error(
            "score needs a labeling: --labels, --label-column, or a generator's "
            "ground truth");
    }
    const ScoreReport report = score(in.points, *in.clustering, opts.input.mu);

    std::cout << "disco=" << fmt_full(report.disco) << "\n"
              << "n=" << in.points.size() << "\n"
              << "m=" << in.points.dims() << "\n"
              << "mu=" << report.mu << "\n"
              << "clusters=" << report.num_clusters << "\n"
              << "noise=" << report.num_noise << "\n";

    if (!opts.pointwise_path.empty()) {
        std::ofstream out = open_out(opts.pointwise_path);
        write_pointwise_csv(out, report, *in.clustering);
        std::cout << "pointwise=" << opts.pointwise_path << "\n";
    }
    return 0;
}

// ---- sweep -----------------------------------------------------------------

struct SweepOptions {
    InputOptions input;
    std::string eps_list;
    std::string k_list;
    std::size_t min_pts = 5;
    std::string reference_path;
    std::string out_path;
};

struct SweepRow {
    double param = 0.0;
    std::size_t clusters = 0;
    std::size_t noise = 0;
    double disco = 0.0;
    std::optional<double> ari;
};

int run_sweep(const SweepOptions& opts) {
    const bool have_eps = !opts.eps_list.empty();
    const bool have_k = !opts.k_list.empty();
    if (have_eps == have_k) {
        throw parameter_error("exactly one of --eps-list or --k-list is required");
    }

    ResolvedInput in = resolve_input(opts.input);
    const PointSet& ps = in.points;

    std::optional<std::vector<int>> reference;
    if (!opts.reference_path.empty()) {
        reference = load_labels(opts.reference_path);
    } else if (in.clustering) {
        // Embedded or generated ground truth doubles as the ARI reference.
        reference = in.clustering->labels();
    }
    if (reference && reference->size() != ps.size()) {
        throw label_error("reference label count " + std::to_string(reference->size()) +
                          " does not match point count " + std::to_string(ps.size()));
    }

    std::vector<double> settings =
        parse_list(have_eps ? opts.eps_list : opts.k_list,
                   have_eps ? "--eps-list" : "--k-list");
    std::sort(settings.begin(), settings.end());
    if (settings.size() < 2) {
        throw parameter_error("a sweep needs at least two settings");
    }
    for (double v : settings) {
        if (have_eps) {
            if (v <= 0.0) throw parameter_error("eps values must be positive");
        } else if (v < 1.0 || v != std::floor(v) ||
                   v > static_cast<double>(ps.size())) {
            throw parameter_error("k values must be integers in [1, n]");
        }
    }

    std::vector<SweepRow> rows(settings.size());
    parallel_for(settings.size(), [&](std::size_t idx) {
        Clustering c = have_eps
                           ? dbscan(ps, DbscanParams{settings[idx], opts.min_pts})
                           : kmeans(ps, KMeansParams{static_cast<std::size_t>(settings[idx]),
                                                     100, opts.input.seed, 1e-9});
        const ScoreReport rep = score(ps, c, opts.input.mu);
        SweepRow row;
        row.param = settings[idx];
        row.clusters = rep.num_clusters;
        row.noise = rep.num_noise;
        row.disco = rep.disco;
        if (reference) {
            row.ari = adjusted_rand_index(*reference, c.labels());
        }
        rows[idx] = row;
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].disco > rows[best].disco) best = i;
    }

    const std::string param_name = have_eps ? "eps" : "k";
    std::cout << "settings=" << rows.size() << "\n"
              << "best_" << param_name << "=" << fmt_full(rows[best].param) << "\n"
              << "best_disco=" << fmt_full(rows[best].disco) << "\n"
              << "best_clusters=" << rows[best].clusters << "\n"
              << "best_noise=" << rows[best].noise << "\n";
    if (reference) {
        std::cout << "best_ari=" << fmt_full(*rows[best].ari) << "\n";
        std::vector<double> discos, aris;
        for (const SweepRow& r : rows) {
            discos.push_back(r.disco);
            aris.push_back(*r.ari);
        }
        std::string pcc_text;
        try {
            pcc_text = fmt_full(pearson(discos, aris));
        } catch (const parameter_error&) {
            // A constant column across the sweep has no defined correlation.
            pcc_text = "nan";
        }
        std::cout << "pcc=" << pcc_text << "\n";
    }

    auto write_table = [&](std::ostream& out) {
        out << param_name << ",clusters,noise,disco";
        if (reference) out << ",ari";
        out << ",best\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out << fmt_table(rows[i].param) << ',' << rows[i].clusters << ','
                << rows[i].noise << ',' << fmt_table(rows[i].disco);
            if (reference) out << ',' << fmt_table(*rows[i].ari);
            out << ',' << (i == best ? 1 : 0) << '\n';
        }
    };
    if (opts.out_path.empty()) {
        std::cout << "\n";
        write_table(std::cout);
    } else {
        std::ofstream out = open_out(opts.out_path);
        write_table(out);
        std::cout << "table=" << opts.out_path << "\n";
    }
    return 0;
}

// ---- ablate ----------------------------------------------------------------

struct AblateOptions {
    InputOptions input;
    std::string ramp;
    double from = std::nan("");
    double to = std::nan("");
    int steps = -1;
    std::string out_path;
};

struct RampRow {
    double value = 0.0;
    double disco = 0.0;
    std::optional<double> mean_rho_sparse;
    std::optional<double> mean_rho_far;
};

std::vector<double> linspace(double from, double to, int steps) {
    if (steps < 2 || to < from) {
        throw parameter_error("ramp needs --ramp-steps >= 2 and --ramp-to >= --ramp-from");
    }
    std::vector<double> vals(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        vals[static_cast<std::size_t>(i)] =
            from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    return vals;
}

std::vector<double> int_ramp(double from, double to, int steps) {
    std::vector<double> vals = linspace(from, to, steps);
    for (double& v : vals) v = std::round(v);
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

RampRow summarize(double value, const ScoreReport& rep) {
    RampRow row;
    row.value = value;
    row.disco = rep.disco;
    std::vector<double> sparse, far;
    for (const PointScore& s : rep.point_scores) {
        if (s.rho_sparse) sparse.push_back(*s.rho_sparse);
        if (s.rho_far) far.push_back(*s.rho_far);
    }
    if (!sparse.empty()) row.mean_rho_sparse = stable_mean_inplace(sparse);
    if (!far.empty()) row.mean_rho_far = stable_mean_inplace(far);
    return row;
}

// Generator spec from --generate, or a default; the ramp overrides one key.
GeneratorSpec ramp_spec(const AblateOptions& opts, const std::string& fallback,
                        const std::string& long_kind, const std::string& alias) {
    if (!opts.input.data_path.empty()) {
        throw parameter_error("this ramp generates its own data; use --generate, not --data");
    }
    GeneratorSpec spec = parse_generator_spec(
        opts.input.generate_spec.empty() ? fallback : opts.input.generate_spec);
    if (spec.kind != long_kind && spec.kind != alias) {
        throw parameter_error("this ramp needs a " + long_kind + " generator spec");
    }
    if (!spec.params.count("seed")) {
        spec.params["seed"] = static_cast<double>(opts.input.seed);
    }
    return spec;
}

int run_ablate(const AblateOptions& opts) {
    const std::string& ramp = opts.ramp;
    const double from = opts.from;
    const double to = opts.to;
    const int steps = opts.steps;
    auto pick = [&](double dflt_from, double dflt_to, int dflt_steps) {
        return std::tuple<double, double, int>(std::isnan(from) ? dflt_from : from,
                                               std::isnan(to) ? dflt_to : to,
                                               steps < 0 ? dflt_steps : steps);
    };

    std::vector<double> values;
    std::vector<RampRow> rows;
    std::string value_name;

    if (ramp == "mu") {
        value_name = "mu";
        auto [f, t, s] = pick(1, 10, 10);
        values = int_ramp(f, t, s);
        ResolvedInput in = resolve_input(opts.input);
        if (!in.clustering) {
            throw parameter_error("mu ramp needs a labeling");
        }
        for (double v : values) {
            if (v < 1 || v >= static_cast<double>(in.points.size())) {
                throw parameter_error("mu ramp leaves 1 <= mu <= n-1");
            }
        }
        rows.resize(values.size());
        parallel_for(values.size(), [&](std::size_t i) {
            const auto rep =
                score(in.points, *in.clustering, static_cast<std::size_t>(values[i]));
            rows[i] = summarize(values[i], rep);
        });
    } else if (ramp == "swap") {
        value_name = "swap_fraction";
        auto [f, t, s] = pick(0.0, 0.3, 16);
        if (f < 0.0 || t >= 1.0) {
            throw parameter_error("swap fractions must lie in [0, 1)");
        }
        values = linspace(f, t, s);
        ResolvedInput in = resolve_input(opts.input);
        if (!in.clustering) {
            throw parameter_error("swap ramp needs a labeling");
        }
        rows.resize(values.size());
        parallel_for(values.size(), [&](std::size_t i) {
            // One seed for every step: the swapped sets grow by inclusion,
            // so the ramp measures the fraction, not sampling noise.
            PerturbResult pr = perturb_labels(in.points, *in.clustering,
                                              PerturbOp::swap_random, values[i],
                                              opts.input.seed);
            rows[i] = summarize(values[i],
                                score(pr.points, pr.clustering, opts.input.mu));
        });
    } else if (ramp == "jitter") {
        value_name = "jitter";
        auto [f, t, s] = pick(0.0, 0.2, 11);
        if (f < 0.0) throw parameter_error("jitter must be non-negative");
        values = linspace(f, t, s);
        const GeneratorSpec base = ramp_spec(opts, "two_moons:points=150", "two_moons", "moons");
        rows.resize(values.size());
        parallel_for(values.size(), [&](std::size_t i) {
            GeneratorSpec spec = base;
            spec.params["jitter"] = values[i];
            Dataset ds = generate(spec);
            rows[i] = summarize(values[i],
                                score(ds.points, ds.clustering, opts.input.mu));
        });
    } else if (ramp == "separation") {
        value_name = "center_distance";
        auto [f, t, s] = pick(0.0, 20.0, 11);
        if (f < 0.0) throw parameter_error("center distance must be non-negative");
        values = linspace(f, t, s);
        const GeneratorSpec base =
            ramp_spec(opts, "uniform_balls:balls=2,points=150", "uniform_balls", "balls");
        rows.resize(values.size());
        parallel_for(values.size(), [&](std::size_t i) {
            GeneratorSpec spec = base;
            spec.params["distance"] = values[i];
            Dataset ds = generate(spec);
            rows[i] = summarize(values[i],
                                score(ds.points, ds.clustering, opts.input.mu));
        });
    } else if (ramp == "noise_density") {
        value_name = "blob_points";
        auto [f, t, s] = pick(5, 100, 20);
        if (f < 1) throw parameter_error("blob_points must be >= 1");
        values = int_ramp(f, t, s);
        rows.resize(values.size());
        parallel_for(values.size(), [&](std::size_t i) {
            // Uniform ball of radius 2 plus a noise-labeled blob whose
            // density grows with its point count.
            Dataset ds = gen_ball_with_noise_blob(
                200, 2, 2.0, static_cast<std::size_t>(values[i]), 0.25, 8.0,
                opts.input.seed);
            rows[i] = summarize(values[i],
                                score(ds.points, ds.clustering, opts.input.mu));
        });
    } else if (ramp == "noise_distance") {
        value_name = "probe_distance";
        auto [f, t, s] = pick(0.0, 8.0, 17);
        if (f < 0.0) throw parameter_error("probe distance must be non-negative");
        values = linspace(f, t, s);
        rows.resize(values.size());
        parallel_for(values.size(), [&](std::size_t i) {
            // Uniform ball of radius 2 plus one noise probe at the ramp distance.
            Dataset ds = gen_ball_with_probe(200, 2, 2.0, values[i], opts.input.seed);
            rows[i] = summarize(values[i],
                                score(ds.points, ds.clustering, opts.input.mu));
        });
    } else {
        throw parameter_error(
            "unknown ramp '" + ramp +
            "'; expected mu, swap, jitter, separation, noise_density, or noise_distance");
    }

    std::cout << "ramp=" << ramp << "\n"
              << "steps=" << rows.size() << "\n";

    auto write_table = [&](std::ostream& out) {
        out << value_name << ",disco,mean_rho_sparse,mean_rho_far\n";
        for (const RampRow& r : rows) {
            out << fmt_table(r.value) << ',' << fmt_table(r.disco) << ',';
            if (r.mean_rho_sparse) out << fmt_table(*r.mean_rho_sparse);
            out << ',';
            if (r.mean_rho_far) out << fmt_table(*r.mean_rho_far);
            out << '\n';
        }
    };
    if (opts.out_path.empty()) {
        std::cout << "\n";
        write_table(std::cout);
    } else {
        std::ofstream out = open_out(opts.out_path);
        write_table(out);
        std::cout << "table=" << opts.out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "disco: density-based internal validation of clusterings with noise"};
    app.require_subcommand(1);

    ScoreOptions score_opts;
    CLI::App* score_cmd =
        app.add_subcommand("score", "score one labeling of one dataset");
    add_input_flags(score_cmd, score_opts.input, "per-feature");
    score_cmd->add_option("--pointwise", score_opts.pointwise_path,
                          "write the per-point score table to this CSV file");

    SweepOptions sweep_opts;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "score DBSCAN (eps) or k-means (k) across a parameter list");
    add_input_flags(sweep_cmd, sweep_opts.input, "per-feature");
    sweep_cmd->add_option("--eps-list", sweep_opts.eps_list,
                          "comma-separated DBSCAN eps values");
    sweep_cmd->add_option("--k-list", sweep_opts.k_list,
                          "comma-separated k-means cluster counts");
    sweep_cmd->add_option("--min-pts", sweep_opts.min_pts,
                          "DBSCAN min_pts (self-inclusive)")
        ->default_val(5);
    sweep_cmd->add_option("--reference-labels", sweep_opts.reference_path,
                          "label file for the ARI column");
    sweep_cmd->add_option("--out", sweep_opts.out_path, "sweep table CSV path");

    AblateOptions ablate_opts;
    CLI::App* ablate_cmd = app.add_subcommand(
        "ablate", "ramp one stress factor and track the score components");
    add_input_flags(ablate_cmd, ablate_opts.input, "none");
    ablate_cmd
        ->add_option("--ramp", ablate_opts.ramp,
                     "mu | swap | jitter | separation | noise_density | noise_distance")
        ->required();
    ablate_cmd->add_option("--ramp-from", ablate_opts.from, "first ramp value");
    ablate_cmd->add_option("--ramp-to", ablate_opts.to, "last ramp value");
    ablate_cmd->add_option("--ramp-steps", ablate_opts.steps, "number of ramp steps");
    ablate_cmd->add_option("--out", ablate_opts.out_path, "ramp table CSV path");

    try {
        app.parse(argc, argv);
        if (score_cmd->parsed()) return run_score(score_opts);
        if (sweep_cmd->parsed()) return run_sweep(sweep_opts);
        return run_ablate(ablate_opts);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const label_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
