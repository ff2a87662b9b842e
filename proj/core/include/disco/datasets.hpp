#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "disco/clustering.hpp"
#include "disco/point_set.hpp"

namespace disco {

struct Dataset {
    PointSet points;
    Clustering clustering;
};

struct LoadedData {
    PointSet points;
    std::optional<Clustering> clustering;
};

/// Comma-separated numeric file, '.' decimal point, optional single header
/// row, LF or CRLF endings. label_column (0-based) pulls one column out as
/// integer labels, -1 meaning noise. Errors carry row/column diagnostics.
LoadedData load_csv(const std::string& path, bool has_header,
                    std::optional<std::size_t> label_column = std::nullopt);

/// True when the first row of the file does not parse as numbers, i.e. it
/// looks like a header.
bool sniff_header(const std::string& path);

/// Single-column integer label file; a leading non-numeric line is skipped
/// as a header.
std::vector<int> load_labels(const std::string& path);

/// Full-precision output; feeds back through load_csv unchanged. Labels (if
/// given) are appended as a final "label" column.
void save_csv(std::ostream& out, const PointSet& ps,
              const std::vector<int>* labels = nullptr, bool header = true);
void save_csv(const std::string& path, const PointSet& ps,
              const std::vector<int>* labels = nullptr, bool header = true);

enum class StandardizeMode { per_feature, global };

struct StandardizeResult {
    PointSet points;
    std::vector<std::string> warnings;  // one entry per constant column
};

/// Shift to mean 0 and scale to standard deviation 1, per feature or with
/// one mean/deviation over all entries. Population standard deviation by
/// default; sample_sigma switches to the n-1 convention for comparison.
/// Zero-variance columns are centered but not scaled, with a warning.
StandardizeResult z_standardize(const PointSet& ps, StandardizeMode mode,
                                bool sample_sigma = false);

// ---- Synthetic generators. Pure functions of their spec: same spec, same
// bytes, on any platform. All sampling goes through the pinned Rng stream.

struct RingsSpec {
    std::size_t rings = 3;
    std::size_t points_per_ring = 100;
    std::size_t noise = 30;
    double base_radius = 1.0;   // radius of the innermost ring
    double spacing = 1.0;       // radial distance between rings
    double band = 0.08;         // half-width of each ring band
    double angle_jitter = 0.3;  // angular offset, fraction of the even step
    double noise_gap = 0.5;     // keep noise this far off every band
    double margin = 0.7;        // noise box padding beyond the outer ring
    std::uint64_t seed = 1;
};

/// Concentric annuli labeled 0..rings-1 plus uniform background noise
/// labeled -1, rejection-sampled to stay off the rings.
Dataset gen_rings_with_noise(const RingsSpec& spec);

struct MoonsSpec {
    std::size_t points_per_moon = 150;
    double jitter = 0.0;  // Gaussian sd as a fraction of the moon radius (1)
    std::uint64_t seed = 1;
};

/// Two interleaved half-circles of radius 1, labels 0 and 1, no noise.
/// Angles are evenly spaced; jitter adds seeded Gaussian displacement.
Dataset gen_two_moons(const MoonsSpec& spec);

struct BallsSpec {
    std::size_t balls = 2;
    std::size_t points_per_ball = 150;
    std::size_t dims = 2;
    double radius = 2.0;
    double center_distance = 20.0;  // centers sit on the first axis, this far apart
    std::size_t noise = 0;
    double noise_gap = 1.0;  // keep noise this far outside every ball
    double margin = 2.0;     // noise box padding around the balls
    std::uint64_t seed = 1;
};

/// Uniform-density m-balls, labels 0..balls-1, optional off-ball uniform
/// noise labeled -1. center_distance 0 stacks all balls on the origin.
Dataset gen_uniform_balls(const BallsSpec& spec);

struct ChainSpec {
    std::size_t points = 50;
    std::size_t dims = 1;
    double start_gap = 1.0;
    double growth = 1.05;  // gap ratio between consecutive steps
    double jitter = 0.0;   // uniform displacement, fraction of the local gap
    std::uint64_t seed = 1;
};

/// One-dimensional chain with geometrically growing gaps (embedded in dims
/// axes, extra coordinates 0), all points one cluster. A density ramp for
/// probing core-distance behavior.
Dataset gen_chain_ramp(const ChainSpec& spec);

/// One uniform ball of the given radius at the origin, labeled 0, plus a
/// single probe point at probe_distance along the first axis, labeled -1.
Dataset gen_ball_with_probe(std::size_t ball_points, std::size_t dims, double radius,
                            double probe_distance, std::uint64_t seed);

/// One uniform ball at the origin (label 0) plus a Gaussian blob of
/// blob_points with sd blob_sigma, centered blob_distance along the first
/// axis, labeled -1. Growing the blob or shrinking its sigma raises the
/// local density of the noise group.
Dataset gen_ball_with_noise_blob(std::size_t ball_points, std::size_t dims,
                                 double radius, std::size_t blob_points,
                                 double blob_sigma, double blob_distance,
                                 std::uint64_t seed);

// ---- Label perturbations for ablation ramps.

enum class PerturbOp { swap_random, relabel_noise, densify_noise };

struct PerturbResult {
    PointSet points;
    Clustering clustering;
};

/// amount < 1 reads as a fraction of the eligible points, amount >= 1 as an
/// integral count. swap_random moves points to a random other cluster;
/// relabel_noise turns cluster points into noise; densify_noise appends new
/// points around the noise set's center of mass (it must change the data,
/// density is not a property of labels).
PerturbResult perturb_labels(const PointSet& ps, const Clustering& c, PerturbOp op,
                             double amount, std::uint64_t seed);

// ---- Generator specs as parsed from the command line.

struct GeneratorSpec {
    std::string kind;
    std::map<std::string, double> params;
};

/// "kind:key=value,key=value". Kinds: rings_with_noise, two_moons,
/// uniform_balls, chain_ramp (short aliases rings, moons, balls, chain).
/// A seed parameter is mandatory; unknown keys are rejected.
GeneratorSpec parse_generator_spec(const std::string& text);

Dataset generate(const GeneratorSpec& spec);

}  // namespace disco
