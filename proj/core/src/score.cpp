#include "disco/score.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "disco/errors.hpp"
#include "disco/numeric.hpp"
#include "disco/parallel.hpp"

namespace disco {

const char* to_string(ScoreKind kind) {
    switch (kind) {
        case ScoreKind::cluster: return "cluster";
        case ScoreKind::noise: return "noise";
        case ScoreKind::singleton_zero: return "singleton_zero";
        case ScoreKind::one_cluster_zero: return "one_cluster_zero";
        case ScoreKind::all_noise_minus_one: return "all_noise_minus_one";
        case ScoreKind::one_cluster_vs_noise: return "one_cluster_vs_noise";
    }
    return "unknown";
}

ScoreContext ScoreContext::build(const PointSet& ps, const Clustering& c,
                                 std::size_t mu) {
    if (c.size() != ps.size()) {
        throw label_error("label count " + std::to_string(c.size()) +
                          " does not match point count " + std::to_string(ps.size()));
    }
    CoreDistances cd = core_distances(ps, mu);
    MrdMst mst = build_mst(ps, cd);
    DcDistIndex index(mst);
    ClusterStats stats = cluster_stats(c, cd);
    return ScoreContext{ps, c, std::move(cd), std::move(mst), std::move(index),
                        std::move(stats)};
}

double mean_dc_to_cluster(std::span<const double> row,
                          const std::vector<std::size_t>& members) {
    if (members.empty()) {
        throw std::logic_error("mean_dc_to_cluster: empty cluster");
    }
    std::vector<double> vals;
    vals.reserve(members.size());
    for (std::size_t m : members) vals.push_back(row[m]);
    return stable_mean_inplace(vals);
}

namespace {

void require_cluster_point(const ScoreContext& ctx, std::size_t x) {
    if (x >= ctx.clustering.size() || ctx.clustering.is_noise(x)) {
        throw std::logic_error("point " + std::to_string(x) +
                               " is not a cluster point");
    }
}

void require_noise_point(const ScoreContext& ctx, std::size_t x) {
    if (x >= ctx.clustering.size() || !ctx.clustering.is_noise(x)) {
        throw std::logic_error("point " + std::to_string(x) +
                               " is not a noise point");
    }
}

// Scratch buffers reused across the per-point helpers so the hot loop does
// not reallocate per cluster.
struct Workspace {
    std::vector<double> row;
    std::vector<double> vals;

    double cluster_mean(std::span<const double> r,
                        const std::vector<std::size_t>& members) {
        vals.clear();
        for (std::size_t m : members) vals.push_back(r[m]);
        return stable_mean_inplace(vals);
    }
};

// Silhouette-style ratio over cluster means of dc-dist; ties between
// clusters resolve to the lowest normalized id.
PointScore cluster_score(const ScoreContext& ctx, std::size_t x, Workspace& ws) {
    const int own = ctx.clustering.cluster_of(x);
    ctx.index.row_from(x, ws.row);
    const double own_mean =
        ws.cluster_mean(ws.row, ctx.clustering.members(own));

    double best = std::numeric_limits<double>::infinity();
    double best_mean = 0.0;
    int best_id = -1;
    const int k = static_cast<int>(ctx.clustering.num_clusters());
    for (int id = 0; id < k; ++id) {
        if (id == own) continue;
        const double other = ws.cluster_mean(ws.row, ctx.clustering.members(id));
        const double r = bounded_ratio(other, own_mean);
        if (r < best) {
            best = r;
            best_mean = other;
            best_id = id;
        }
    }

    PointScore s;
    s.index = x;
    s.value = best;
    s.kind = ScoreKind::cluster;
    s.own_mean = own_mean;
    s.other_mean = best_mean;
    s.closest_cluster = best_id;
    return s;
}

// rho_sparse and rho_far share the dc-dist row, so the noise score computes
// both in one pass.
PointScore noise_score(const ScoreContext& ctx, std::size_t x, Workspace& ws) {
    ctx.index.row_from(x, ws.row);
    const double kx = ctx.core.kappa[x];

    double sparse = std::numeric_limits<double>::infinity();
    double far = std::numeric_limits<double>::infinity();
    int sparse_id = -1;
    int far_id = -1;
    const int k = static_cast<int>(ctx.clustering.num_clusters());
    for (int id = 0; id < k; ++id) {
        const double kc = ctx.stats.kappa_max[static_cast<std::size_t>(id)];
        const double rs = bounded_ratio(kx, kc);
        if (rs < sparse) {
            sparse = rs;
            sparse_id = id;
        }
        double min_dc = std::numeric_limits<double>::infinity();
        for (std::size_t m : ctx.clustering.members(id)) {
            min_dc = std::min(min_dc, ws.row[m]);
        }
        const double rf = bounded_ratio(min_dc, kc);
        if (rf < far) {
            far = rf;
            far_id = id;
        }
    }

    PointScore s;
    s.index = x;
    s.value = std::min(sparse, far);
    s.kind = ScoreKind::noise;
    s.rho_sparse = sparse;
    s.rho_far = far;
    s.sparse_cluster = sparse_id;
    s.far_cluster = far_id;
    return s;
}

// Single cluster plus noise: the noise set plays the opposing cluster, with
// the minimum dc-dist into it replacing the opposing mean.
PointScore one_cluster_score(const ScoreContext& ctx, std::size_t x,
                             Workspace& ws) {
    const int own = ctx.clustering.cluster_of(x);
    ctx.index.row_from(x, ws.row);
    const double own_mean =
        ws.cluster_mean(ws.row, ctx.clustering.members(own));
    double min_noise = std::numeric_limits<double>::infinity();
    for (std::size_t m : ctx.clustering.noise()) {
        min_noise = std::min(min_noise, ws.row[m]);
    }

    PointScore s;
    s.index = x;
    s.value = bounded_ratio(min_noise, own_mean);
    s.kind = ScoreKind::one_cluster_vs_noise;
    s.own_mean = own_mean;
    s.other_mean = min_noise;
    return s;
}

PointScore constant_score(std::size_t x, double value, ScoreKind kind) {
    PointScore s;
    s.index = x;
    s.value = value;
    s.kind = kind;
    return s;
}

}  // namespace

double rho_cluster(const ScoreContext& ctx, std::size_t x) {
    require_cluster_point(ctx, x);
    if (ctx.clustering.num_clusters() < 2) {
        throw std::logic_error("rho_cluster needs at least two clusters");
    }
    Workspace ws;
    return cluster_score(ctx, x, ws).value;
}

double rho_sparse(const ScoreContext& ctx, std::size_t x) {
    require_noise_point(ctx, x);
    if (ctx.clustering.num_clusters() == 0) {
        throw std::logic_error("rho_sparse needs at least one cluster");
    }
    Workspace ws;
    return *noise_score(ctx, x, ws).rho_sparse;
}

double rho_far(const ScoreContext& ctx, std::size_t x) {
    require_noise_point(ctx, x);
    if (ctx.clustering.num_clusters() == 0) {
        throw std::logic_error("rho_far needs at least one cluster");
    }
    Workspace ws;
    return *noise_score(ctx, x, ws).rho_far;
}

double rho_noise(const ScoreContext& ctx, std::size_t x) {
    require_noise_point(ctx, x);
    if (ctx.clustering.num_clusters() == 0) {
        throw std::logic_error("rho_noise needs at least one cluster");
    }
    Workspace ws;
    return noise_score(ctx, x, ws).value;
}

double rho_cluster_vs_noise(const ScoreContext& ctx, std::size_t x) {
    require_cluster_point(ctx, x);
    if (ctx.clustering.num_clusters() != 1 || ctx.clustering.num_noise() == 0) {
        throw std::logic_error(
            "rho_cluster_vs_noise needs exactly one cluster and some noise");
    }
    Workspace ws;
    return one_cluster_score(ctx, x, ws).value;
}

ScoreReport score(const PointSet& ps, const Clustering& c, std::size_t mu) {
    if (c.size() != ps.size()) {
        throw label_error("label count " + std::to_string(c.size()) +
                          " does not match point count " + std::to_string(ps.size()));
    }
    const std::size_t n = ps.size();
    const std::size_t k = c.num_clusters();

    ScoreReport report;
    report.mu = mu;
    report.num_clusters = k;
    report.num_noise = c.num_noise();
    report.point_scores.resize(n);

    // A clustering without clusters needs no density graph: every point is
    // noise and scores -1 by definition.
    if (k == 0) {
        if (mu < 1 || mu >= n) {
            throw parameter_error("mu must satisfy 1 <= mu <= n-1, got mu=" +
                                  std::to_string(mu) + " with n=" + std::to_string(n));
        }
        for (std::size_t i = 0; i < n; ++i) {
            report.point_scores[i] =
                constant_score(i, -1.0, ScoreKind::all_noise_minus_one);
        }
        report.disco = -1.0;
        return report;
    }

    const ScoreContext ctx = ScoreContext::build(ps, c, mu);
    const bool has_noise = c.num_noise() > 0;

    parallel_for(n, [&](std::size_t i) {
        Workspace ws;
        PointScore s;
        if (ctx.clustering.is_noise(i)) {
            s = noise_score(ctx, i, ws);
        } else if (ctx.clustering.members(ctx.clustering.cluster_of(i)).size() == 1) {
            s = constant_score(i, 0.0, ScoreKind::singleton_zero);
        } else if (k == 1) {
            s = has_noise ? one_cluster_score(ctx, i, ws)
                          : constant_score(i, 0.0, ScoreKind::one_cluster_zero);
        } else {
            s = cluster_score(ctx, i, ws);
        }
        report.point_scores[i] = s;
    });

    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = report.point_scores[i].value;
    report.disco = stable_mean_inplace(vals);
    return report;
}

namespace {

void write_full(std::ostream& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
}

void write_opt(std::ostream& out, const std::optional<double>& v) {
    out << ',';
    if (v) write_full(out, *v);
}

void write_opt(std::ostream& out, const std::optional<int>& v) {
    out << ',';
    if (v) out << *v;
}

}  // namespace

void write_pointwise_csv(std::ostream& out, const ScoreReport& report,
                         const Clustering& c) {
    out << "index,label,kind,score,own_mean_dc,other_mean_dc,closest_cluster,"
           "rho_sparse,rho_far,sparse_cluster,far_cluster\n";
    for (const PointScore& s : report.point_scores) {
        out << s.index << ',' << c.labels()[s.index] << ',' << to_string(s.kind)
            << ',';
        write_full(out, s.value);
        write_opt(out, s.own_mean);
        write_opt(out, s.other_mean);
        write_opt(out, s.closest_cluster);
        write_opt(out, s.rho_sparse);
        write_opt(out, s.rho_far);
        write_opt(out, s.sparse_cluster);
        write_opt(out, s.far_cluster);
        out << '\n';
    }
}

}  // namespace disco
