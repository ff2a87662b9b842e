#include "disco/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <string_view>

#include "disco/errors.hpp"
#include "disco/rng.hpp"

namespace disco {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool parse_double(std::string_view cell, double& out) {
    cell = trim(cell);
    if (cell.empty()) return false;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::vector<std::string> split_line(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            cells.emplace_back(line.substr(start));
            break;
        }
        cells.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return cells;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open file: " + path);
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        lines.push_back(line);
    }
    return lines;
}

int parse_label_cell(const std::string& cell, std::size_t row, std::size_t col) {
    double v = 0.0;
    if (!parse_double(cell, v) || v != std::floor(v) || v < -1.0 ||
        v > static_cast<double>(std::numeric_limits<int>::max())) {
        throw input_error("row " + std::to_string(row) + ", column " +
                          std::to_string(col) + ": label cell '" + cell +
                          "' is not an integer >= -1");
    }
    return static_cast<int>(v);
}

}  // namespace

LoadedData load_csv(const std::string& path, bool has_header,
                    std::optional<std::size_t> label_column) {
    const std::vector<std::string> lines = read_lines(path);
    std::size_t first_row = has_header ? 1 : 0;
    if (lines.size() <= first_row) {
        throw input_error("no data rows in " + path);
    }

    const std::size_t width = split_line(lines[first_row]).size();
    if (label_column) {
        if (*label_column >= width) {
            throw input_error("label column " + std::to_string(*label_column) +
                              " out of range; file has " + std::to_string(width) +
                              " columns");
        }
        if (width < 2) {
            throw input_error("file has only the label column, no features");
        }
    }

    const std::size_t n = lines.size() - first_row;
    const std::size_t m = width - (label_column ? 1 : 0);
    std::vector<double> data;
    data.reserve(n * m);
    std::vector<int> labels;
    if (label_column) labels.reserve(n);

    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t file_row = first_row + r + 1;  // 1-based for messages
        const auto cells = split_line(lines[first_row + r]);
        if (cells.size() != width) {
            throw input_error("row " + std::to_string(file_row) + " has " +
                              std::to_string(cells.size()) + " cells, expected " +
                              std::to_string(width));
        }
        for (std::size_t cidx = 0; cidx < width; ++cidx) {
            if (label_column && cidx == *label_column) {
                labels.push_back(parse_label_cell(cells[cidx], file_row, cidx + 1));
                continue;
            }
            double v = 0.0;
            if (!parse_double(cells[cidx], v)) {
                throw input_error("row " + std::to_string(file_row) + ", column " +
                                  std::to_string(cidx + 1) + ": cannot parse '" +
                                  cells[cidx] + "' as a number");
            }
            data.push_back(v);
        }
    }

    LoadedData out{PointSet(n, m, std::move(data)), std::nullopt};
    if (label_column) {
        out.clustering = Clustering::from_labels(std::move(labels));
    }
    return out;
}

bool sniff_header(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open file: " + path);
    }
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        for (const auto& cell : split_line(line)) {
            double v = 0.0;
            if (!parse_double(cell, v)) return true;
        }
        return false;
    }
    throw input_error("no data rows in " + path);
}

std::vector<int> load_labels(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) {
        throw input_error("no data rows in " + path);
    }
    std::vector<int> labels;
    labels.reserve(lines.size());
    for (std::size_t r = 0; r < lines.size(); ++r) {
        const auto cells = split_line(lines[r]);
        if (cells.size() != 1) {
            throw input_error("row " + std::to_string(r + 1) + " in " + path +
                              " has " + std::to_string(cells.size()) +
                              " cells; label files have one column");
        }
        double v = 0.0;
        if (!parse_double(cells[0], v)) {
            if (r == 0) continue;  // header line
            throw input_error("row " + std::to_string(r + 1) + ": cannot parse '" +
                              cells[0] + "' as a label");
        }
        labels.push_back(parse_label_cell(cells[0], r + 1, 1));
    }
    if (labels.empty()) {
        throw input_error("no labels in " + path);
    }
    return labels;
}

void save_csv(std::ostream& out, const PointSet& ps, const std::vector<int>* labels,
              bool header) {
    if (labels && labels->size() != ps.size()) {
        throw label_error("label count " + std::to_string(labels->size()) +
                          " does not match point count " + std::to_string(ps.size()));
    }
    if (header) {
        for (std::size_t d = 0; d < ps.dims(); ++d) {
            if (d) out << ',';
            out << 'f' << d;
        }
        if (labels) out << ",label";
        out << '\n';
    }
    char buf[32];
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t d = 0; d < ps.dims(); ++d) {
            if (d) out << ',';
            std::snprintf(buf, sizeof(buf), "%.17g", ps(i, d));
            out << buf;
        }
        if (labels) out << ',' << (*labels)[i];
        out << '\n';
    }
}

void save_csv(const std::string& path, const PointSet& ps, const std::vector<int>* labels,
              bool header) {
    std::ofstream out(path);
    if (!out) {
        throw input_error("cannot open file for writing: " + path);
    }
    save_csv(out, ps, labels, header);
}

StandardizeResult z_standardize(const PointSet& ps, StandardizeMode mode,
                                bool sample_sigma) {
    const std::size_t n = ps.size();
    const std::size_t m = ps.dims();
    std::vector<double> data(n * m);
    std::vector<std::string> warnings;

    const double denom =
        sample_sigma ? static_cast<double>(n > 1 ? n - 1 : 1) : static_cast<double>(n);

    if (mode == StandardizeMode::per_feature) {
        for (std::size_t d = 0; d < m; ++d) {
            double mean = 0.0;
            for (std::size_t i = 0; i < n; ++i) mean += ps(i, d);
            mean /= static_cast<double>(n);
            double var = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double dv = ps(i, d) - mean;
                var += dv * dv;
            }
            var /= denom;
            const double sd = std::sqrt(var);
            if (sd == 0.0) {
                warnings.push_back("column " + std::to_string(d) +
                                   " has zero variance; centered only");
                for (std::size_t i = 0; i < n; ++i) data[i * m + d] = ps(i, d) - mean;
            } else {
                for (std::size_t i = 0; i < n; ++i)
                    data[i * m + d] = (ps(i, d) - mean) / sd;
            }
        }
    } else {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t d = 0; d < m; ++d) mean += ps(i, d);
        mean /= static_cast<double>(n * m);
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t d = 0; d < m; ++d) {
                const double dv = ps(i, d) - mean;
                var += dv * dv;
            }
        var /= sample_sigma ? static_cast<double>(n * m > 1 ? n * m - 1 : 1)
                            : static_cast<double>(n * m);
        const double sd = std::sqrt(var);
        if (sd == 0.0) {
            warnings.push_back("matrix has zero variance; centered only");
            for (std::size_t i = 0; i < n * m; ++i)
                data[i] = ps(i / m, i % m) - mean;
        } else {
            for (std::size_t i = 0; i < n * m; ++i)
                data[i] = (ps(i / m, i % m) - mean) / sd;
        }
    }
    return StandardizeResult{PointSet(n, m, std::move(data)), std::move(warnings)};
}

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& message) {
    if (!ok) throw parameter_error(message);
}

// Uniform point in the m-ball: random direction times radius * u^(1/m).
void sample_in_ball(Rng& rng, std::size_t dims, double radius,
                    const std::vector<double>& center, std::vector<double>& out) {
    out.resize(dims);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (std::size_t d = 0; d < dims; ++d) {
            out[d] = rng.normal();
            norm += out[d] * out[d];
        }
        norm = std::sqrt(norm);
    } while (norm == 0.0);
    const double r =
        radius * std::pow(rng.uniform01(), 1.0 / static_cast<double>(dims));
    for (std::size_t d = 0; d < dims; ++d) out[d] = center[d] + out[d] / norm * r;
}

}  // namespace

Dataset gen_rings_with_noise(const RingsSpec& spec) {
    require(spec.rings >= 1, "rings must be >= 1");
    require(spec.points_per_ring >= 1, "points_per_ring must be >= 1");
    require(spec.base_radius > 0.0, "base_radius must be positive");
    require(spec.band > 0.0, "band must be positive");
    require(spec.band < spec.base_radius, "band must be smaller than base_radius");
    require(spec.noise_gap >= 0.0 && spec.margin >= 0.0,
            "noise_gap and margin must be non-negative");
    require(spec.angle_jitter >= 0.0, "angle_jitter must be non-negative");
    if (spec.rings > 1) {
        require(spec.spacing > 2.0 * spec.band,
                "ring bands overlap: spacing must exceed 2*band");
    }

    Rng rng(spec.seed);
    std::vector<double> data;
    std::vector<int> labels;
    const std::size_t n = spec.rings * spec.points_per_ring + spec.noise;
    data.reserve(n * 2);
    labels.reserve(n);

    std::vector<double> radii(spec.rings);
    for (std::size_t j = 0; j < spec.rings; ++j)
        radii[j] = spec.base_radius + static_cast<double>(j) * spec.spacing;

    // Even angular steps with a jittered offset: purely random angles leave
    // long empty arcs whose members look as sparse as background noise.
    for (std::size_t j = 0; j < spec.rings; ++j) {
        const double step = 2.0 * kPi / static_cast<double>(spec.points_per_ring);
        for (std::size_t i = 0; i < spec.points_per_ring; ++i) {
            const double theta =
                step * (static_cast<double>(i) +
                        spec.angle_jitter * rng.uniform(-0.5, 0.5));
            const double rad = rng.uniform(radii[j] - spec.band, radii[j] + spec.band);
            data.push_back(rad * std::cos(theta));
            data.push_back(rad * std::sin(theta));
            labels.push_back(static_cast<int>(j));
        }
    }

    const double box = radii.back() + spec.band + spec.noise_gap + spec.margin;
    for (std::size_t i = 0; i < spec.noise; ++i) {
        bool placed = false;
        for (int tries = 0; tries < 100000 && !placed; ++tries) {
            const double x = rng.uniform(-box, box);
            const double y = rng.uniform(-box, box);
            const double r = std::hypot(x, y);
            bool clear = true;
            for (double rj : radii) {
                if (std::abs(r - rj) <= spec.band + spec.noise_gap) {
                    clear = false;
                    break;
                }
            }
            if (clear) {
                data.push_back(x);
                data.push_back(y);
                labels.push_back(kNoiseLabel);
                placed = true;
            }
        }
        require(placed, "could not place noise off the rings; loosen noise_gap");
    }

    return Dataset{PointSet(n, 2, std::move(data)),
                   Clustering::from_labels(std::move(labels))};
}

Dataset gen_two_moons(const MoonsSpec& spec) {
    require(spec.points_per_moon >= 1, "points_per_moon must be >= 1");
    require(spec.jitter >= 0.0, "jitter must be non-negative");

    Rng rng(spec.seed);
    const std::size_t p = spec.points_per_moon;
    std::vector<double> data;
    std::vector<int> labels;
    data.reserve(p * 4);
    labels.reserve(p * 2);

    auto angle = [p](std::size_t i) {
        if (p == 1) return 0.0;
        return kPi * static_cast<double>(i) / static_cast<double>(p - 1);
    };
    for (std::size_t i = 0; i < p; ++i) {
        const double t = angle(i);
        data.push_back(std::cos(t));
        data.push_back(std::sin(t));
        labels.push_back(0);
    }
    for (std::size_t i = 0; i < p; ++i) {
        const double t = angle(i);
        data.push_back(1.0 - std::cos(t));
        data.push_back(0.5 - std::sin(t));
        labels.push_back(1);
    }
    if (spec.jitter > 0.0) {
        for (double& v : data) v += rng.normal(0.0, spec.jitter);
    }

    return Dataset{PointSet(p * 2, 2, std::move(data)),
                   Clustering::from_labels(std::move(labels))};
}

Dataset gen_uniform_balls(const BallsSpec& spec) {
    require(spec.balls >= 1, "balls must be >= 1");
    require(spec.points_per_ball >= 1, "points_per_ball must be >= 1");
    require(spec.dims >= 1, "dims must be >= 1");
    require(spec.radius > 0.0, "radius must be positive");
    require(spec.center_distance >= 0.0, "center_distance must be non-negative");
    require(spec.noise_gap >= 0.0 && spec.margin >= 0.0,
            "noise_gap and margin must be non-negative");

    Rng rng(spec.seed);
    const std::size_t n = spec.balls * spec.points_per_ball + spec.noise;
    std::vector<double> data;
    std::vector<int> labels;
    data.reserve(n * spec.dims);
    labels.reserve(n);

    std::vector<std::vector<double>> centers(spec.balls,
                                             std::vector<double>(spec.dims, 0.0));
    for (std::size_t b = 0; b < spec.balls; ++b)
        centers[b][0] = static_cast<double>(b) * spec.center_distance;

    std::vector<double> pt;
    for (std::size_t b = 0; b < spec.balls; ++b) {
        for (std::size_t i = 0; i < spec.points_per_ball; ++i) {
            sample_in_ball(rng, spec.dims, spec.radius, centers[b], pt);
            data.insert(data.end(), pt.begin(), pt.end());
            labels.push_back(static_cast<int>(b));
        }
    }

    const double pad = spec.radius + spec.noise_gap + spec.margin;
    for (std::size_t i = 0; i < spec.noise; ++i) {
        bool placed = false;
        for (int tries = 0; tries < 100000 && !placed; ++tries) {
            pt.resize(spec.dims);
            pt[0] = rng.uniform(-pad, centers.back()[0] + pad);
            for (std::size_t d = 1; d < spec.dims; ++d) pt[d] = rng.uniform(-pad, pad);
            bool clear = true;
            for (const auto& c : centers) {
                double dist2 = 0.0;
                for (std::size_t d = 0; d < spec.dims; ++d) {
                    const double dv = pt[d] - c[d];
                    dist2 += dv * dv;
                }
                const double lim = spec.radius + spec.noise_gap;
                if (dist2 <= lim * lim) {
                    clear = false;
                    break;
                }
            }
            if (clear) {
                data.insert(data.end(), pt.begin(), pt.end());
                labels.push_back(kNoiseLabel);
                placed = true;
            }
        }
        require(placed, "could not place noise outside the balls; loosen noise_gap");
    }

    return Dataset{PointSet(n, spec.dims, std::move(data)),
                   Clustering::from_labels(std::move(labels))};
}

Dataset gen_chain_ramp(const ChainSpec& spec) {
    require(spec.points >= 1, "points must be >= 1");
    require(spec.dims >= 1, "dims must be >= 1");
    require(spec.start_gap > 0.0, "start_gap must be positive");
    require(spec.growth > 0.0, "growth must be positive");
    require(spec.jitter >= 0.0, "jitter must be non-negative");

    Rng rng(spec.seed);
    std::vector<double> data(spec.points * spec.dims, 0.0);
    double x = 0.0;
    double gap = spec.start_gap;
    for (std::size_t i = 0; i < spec.points; ++i) {
        double v = x;
        if (spec.jitter > 0.0) v += rng.uniform(-spec.jitter * gap, spec.jitter * gap);
        data[i * spec.dims] = v;
        x += gap;
        gap *= spec.growth;
    }
    return Dataset{PointSet(spec.points, spec.dims, std::move(data)),
                   Clustering::from_labels(std::vector<int>(spec.points, 0))};
}

Dataset gen_ball_with_probe(std::size_t ball_points, std::size_t dims, double radius,
                            double probe_distance, std::uint64_t seed) {
    require(ball_points >= 1, "ball_points must be >= 1");
    require(dims >= 1, "dims must be >= 1");
    require(radius > 0.0, "radius must be positive");
    require(probe_distance >= 0.0, "probe_distance must be non-negative");

    Rng rng(seed);
    std::vector<double> data;
    data.reserve((ball_points + 1) * dims);
    std::vector<int> labels(ball_points, 0);
    const std::vector<double> origin(dims, 0.0);
    std::vector<double> pt;
    for (std::size_t i = 0; i < ball_points; ++i) {
        sample_in_ball(rng, dims, radius, origin, pt);
        data.insert(data.end(), pt.begin(), pt.end());
    }
    data.push_back(probe_distance);
    for (std::size_t d = 1; d < dims; ++d) data.push_back(0.0);
    labels.push_back(kNoiseLabel);

    return Dataset{PointSet(ball_points + 1, dims, std::move(data)),
                   Clustering::from_labels(std::move(labels))};
}

Dataset gen_ball_with_noise_blob(std::size_t ball_points, std::size_t dims,
                                 double radius, std::size_t blob_points,
                                 double blob_sigma, double blob_distance,
                                 std::uint64_t seed) {
    require(ball_points >= 1, "ball_points must be >= 1");
    require(blob_points >= 1, "blob_points must be >= 1");
    require(dims >= 1, "dims must be >= 1");
    require(radius > 0.0, "radius must be positive");
    require(blob_sigma > 0.0, "blob_sigma must be positive");

    Rng rng(seed);
    std::vector<double> data;
    data.reserve((ball_points + blob_points) * dims);
    std::vector<int> labels;
    labels.reserve(ball_points + blob_points);
    const std::vector<double> origin(dims, 0.0);
    std::vector<double> pt;
    for (std::size_t i = 0; i < ball_points; ++i) {
        sample_in_ball(rng, dims, radius, origin, pt);
        data.insert(data.end(), pt.begin(), pt.end());
        labels.push_back(0);
    }
    for (std::size_t i = 0; i < blob_points; ++i) {
        data.push_back(blob_distance + rng.normal(0.0, blob_sigma));
        for (std::size_t d = 1; d < dims; ++d) data.push_back(rng.normal(0.0, blob_sigma));
        labels.push_back(kNoiseLabel);
    }
    return Dataset{PointSet(ball_points + blob_points, dims, std::move(data)),
                   Clustering::from_labels(std::move(labels))};
}

namespace {

std::size_t resolve_amount(double amount, std::size_t eligible,
                           const std::string& what) {
    if (amount < 0.0 || !std::isfinite(amount)) {
        throw parameter_error("amount must be non-negative and finite");
    }
    std::size_t count = 0;
    if (amount < 1.0) {
        count = static_cast<std::size_t>(
            std::llround(amount * static_cast<double>(eligible)));
    } else {
        if (amount != std::floor(amount)) {
            throw parameter_error("amount >= 1 must be an integral count");
        }
        count = static_cast<std::size_t>(amount);
    }
    if (count > eligible) {
        throw parameter_error("amount " + std::to_string(count) + " exceeds the " +
                              std::to_string(eligible) + " " + what);
    }
    return count;
}

// Deterministic distinct selection: random permutation prefix over the
// eligible indices.
std::vector<std::size_t> pick(Rng& rng, const std::vector<std::size_t>& eligible,
                              std::size_t count) {
    std::vector<std::size_t> order = rng.permutation(eligible.size());
    std::vector<std::size_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(eligible[order[i]]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PerturbResult perturb_labels(const PointSet& ps, const Clustering& c, PerturbOp op,
                             double amount, std::uint64_t seed) {
    if (c.size() != ps.size()) {
        throw label_error("label count " + std::to_string(c.size()) +
                          " does not match point count " + std::to_string(ps.size()));
    }
    Rng rng(seed);
    std::vector<int> labels = c.labels();
    const std::size_t k = c.num_clusters();

    if (op == PerturbOp::swap_random) {
        if (k < 2) {
            throw parameter_error("swap_random needs at least two clusters");
        }
        std::vector<std::size_t> eligible(ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i) eligible[i] = i;
        const std::size_t count = resolve_amount(amount, eligible.size(), "points");
        for (std::size_t i : pick(rng, eligible, count)) {
            const int own = c.cluster_of(i);
            // Draw among the other clusters (all of them for noise points).
            const std::size_t choices = c.is_noise(i) ? k : k - 1;
            std::size_t id = rng.index(choices);
            if (!c.is_noise(i) && id >= static_cast<std::size_t>(own)) ++id;
            labels[i] = c.original_label(static_cast<int>(id));
        }
        return PerturbResult{ps, Clustering::from_labels(std::move(labels))};
    }

    if (op == PerturbOp::relabel_noise) {
        std::vector<std::size_t> eligible;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (!c.is_noise(i)) eligible.push_back(i);
        }
        const std::size_t count = resolve_amount(amount, eligible.size(), "cluster points");
        for (std::size_t i : pick(rng, eligible, count)) labels[i] = kNoiseLabel;
        return PerturbResult{ps, Clustering::from_labels(std::move(labels))};
    }

    // densify_noise: labels alone cannot change density, so append points
    // around the noise set's center of mass, labeled noise.
    if (c.num_noise() == 0) {
        throw parameter_error("densify_noise needs existing noise points");
    }
    if (amount < 1.0) {
        throw parameter_error("densify_noise amount is a count of points to add");
    }
    const std::size_t count = static_cast<std::size_t>(amount);
    const std::size_t m = ps.dims();
    std::vector<double> center(m, 0.0);
    for (std::size_t i : c.noise()) {
        for (std::size_t d = 0; d < m; ++d) center[d] += ps(i, d);
    }
    for (double& v : center) v /= static_cast<double>(c.num_noise());

    double diag2 = 0.0;
    for (std::size_t d = 0; d < m; ++d) {
        double lo = ps(0, d), hi = ps(0, d);
        for (std::size_t i = 1; i < ps.size(); ++i) {
            lo = std::min(lo, ps(i, d));
            hi = std::max(hi, ps(i, d));
        }
        diag2 += (hi - lo) * (hi - lo);
    }
    const double sigma = std::max(0.05 * std::sqrt(diag2), 1e-12);

    std::vector<double> data;
    data.reserve((ps.size() + count) * m);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t d = 0; d < m; ++d) data.push_back(ps(i, d));
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t d = 0; d < m; ++d)
            data.push_back(center[d] + rng.normal(0.0, sigma));
        labels.push_back(kNoiseLabel);
    }
    return PerturbResult{PointSet(ps.size() + count, m, std::move(data)),
                         Clustering::from_labels(std::move(labels))};
}

namespace {

struct ParamReader {
    std::map<std::string, double> params;
    std::string kind;

    double take(const std::string& name, double fallback) {
        auto it = params.find(name);
        if (it == params.end()) return fallback;
        const double v = it->second;
        params.erase(it);
        return v;
    }

    std::size_t take_count(const std::string& name, std::size_t fallback) {
        auto it = params.find(name);
        if (it == params.end()) return fallback;
        const double v = it->second;
        params.erase(it);
        if (v < 0.0 || v != std::floor(v)) {
            throw parameter_error("parameter '" + name +
                                  "' must be a non-negative integer");
        }
        return static_cast<std::size_t>(v);
    }

    std::uint64_t take_seed() {
        auto it = params.find("seed");
        if (it == params.end()) {
            throw parameter_error("generator spec needs a seed parameter");
        }
        const double v = it->second;
        params.erase(it);
        if (v < 0.0 || v != std::floor(v)) {
            throw parameter_error("seed must be a non-negative integer");
        }
        return static_cast<std::uint64_t>(v);
    }

    void done() const {
        if (!params.empty()) {
            throw parameter_error("unknown parameter '" + params.begin()->first +
                                  "' for generator '" + kind + "'");
        }
    }
};

}  // namespace

GeneratorSpec parse_generator_spec(const std::string& text) {
    GeneratorSpec spec;
    const std::size_t colon = text.find(':');
    spec.kind = text.substr(0, colon);
    if (spec.kind.empty()) {
        throw parameter_error("generator spec needs a kind, e.g. rings:seed=1");
    }
    if (colon != std::string::npos) {
        std::string_view rest(text);
        rest.remove_prefix(colon + 1);
        while (!rest.empty()) {
            const std::size_t comma = rest.find(',');
            const std::string_view item = rest.substr(0, comma);
            rest = comma == std::string_view::npos ? std::string_view()
                                                   : rest.substr(comma + 1);
            if (trim(item).empty()) continue;
            const std::size_t eq = item.find('=');
            if (eq == std::string_view::npos) {
                throw parameter_error("generator parameter '" + std::string(item) +
                                      "' is not key=value");
            }
            const std::string key(trim(item.substr(0, eq)));
            double v = 0.0;
            if (key.empty() || !parse_double(item.substr(eq + 1), v)) {
                throw parameter_error("cannot parse generator parameter '" +
                                      std::string(item) + "'");
            }
            spec.params[key] = v;
        }
    }
    return spec;
}

Dataset generate(const GeneratorSpec& spec) {
    ParamReader p{spec.params, spec.kind};
    const std::string& kind = spec.kind;

    if (kind == "rings_with_noise" || kind == "rings") {
        RingsSpec s;
        s.rings = p.take_count("rings", s.rings);
        s.points_per_ring = p.take_count("points", s.points_per_ring);
        s.noise = p.take_count("noise", s.noise);
        s.base_radius = p.take("base_radius", s.base_radius);
        s.spacing = p.take("spacing", s.spacing);
        s.band = p.take("band", s.band);
        s.angle_jitter = p.take("angle_jitter", s.angle_jitter);
        s.noise_gap = p.take("noise_gap", s.noise_gap);
        s.margin = p.take("margin", s.margin);
        s.seed = p.take_seed();
        p.done();
        return gen_rings_with_noise(s);
    }
    if (kind == "two_moons" || kind == "moons") {
        MoonsSpec s;
        s.points_per_moon = p.take_count("points", s.points_per_moon);
        s.jitter = p.take("jitter", s.jitter);
        s.seed = p.take_seed();
        p.done();
        return gen_two_moons(s);
    }
    if (kind == "uniform_balls" || kind == "balls") {
        BallsSpec s;
        s.balls = p.take_count("balls", s.balls);
        s.points_per_ball = p.take_count("points", s.points_per_ball);
        s.dims = p.take_count("dims", s.dims);
        s.radius = p.take("radius", s.radius);
        s.center_distance = p.take("distance", s.center_distance);
        s.noise = p.take_count("noise", s.noise);
        s.noise_gap = p.take("noise_gap", s.noise_gap);
        s.margin = p.take("margin", s.margin);
        s.seed = p.take_seed();
        p.done();
        return gen_uniform_balls(s);
    }
    if (kind == "chain_ramp" || kind == "chain") {
        ChainSpec s;
        s.points = p.take_count("points", s.points);
        s.dims = p.take_count("dims", s.dims);
        s.start_gap = p.take("start_gap", s.start_gap);
        s.growth = p.take("growth", s.growth);
        s.jitter = p.take("jitter", s.jitter);
        s.seed = p.take_seed();
        p.done();
        return gen_chain_ramp(s);
    }
    throw parameter_error("unknown generator kind '" + kind +
                          "'; expected rings_with_noise, two_moons, uniform_balls, "
                          "or chain_ramp");
}

}  // namespace disco
