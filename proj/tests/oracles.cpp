#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace disco::oracle {

Matrix euclidean_matrix(const PointSet& ps) {
    const std::size_t n = ps.size();
    Matrix out(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t d = 0; d < ps.dims(); ++d) {
                const double dv = ps(i, d) - ps(j, d);
                s += dv * dv;
            }
            out[i][j] = std::sqrt(s);
        }
    }
    return out;
}

std::vector<double> brute_kappa(const PointSet& ps, std::size_t mu) {
    const std::size_t n = ps.size();
    if (mu < 1 || mu >= n) {
        throw std::invalid_argument("oracle mu out of range");
    }
    const Matrix d = euclidean_matrix(ps);
    std::vector<double> kappa(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> dists;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) dists.push_back(d[i][j]);
        }
        std::sort(dists.begin(), dists.end());
        kappa[i] = dists[mu - 1];
    }
    return kappa;
}

Matrix mrd_matrix(const PointSet& ps, std::size_t mu) {
    const std::size_t n = ps.size();
    const Matrix d = euclidean_matrix(ps);
    const std::vector<double> kappa = brute_kappa(ps, mu);
    Matrix out(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            out[i][j] = std::max(std::max(kappa[i], kappa[j]), d[i][j]);
        }
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

std::vector<MstEdge> kruskal_mst(const PointSet& ps, const CoreDistances& cd,
                                 bool reverse_ties) {
    const std::size_t n = ps.size();
    const Matrix d = euclidean_matrix(ps);
    std::vector<MstEdge> all;
    all.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double w =
                std::max(std::max(cd.kappa[i], cd.kappa[j]), d[i][j]);
            all.push_back(MstEdge{i, j, w});
        }
    }
    std::sort(all.begin(), all.end(), [reverse_ties](const MstEdge& a, const MstEdge& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (reverse_ties) {
            if (a.a != b.a) return a.a > b.a;
            return a.b > b.b;
        }
        if (a.a != b.a) return a.a < b.a;
        return a.b < b.b;
    });

    UnionFind uf(n);
    std::vector<MstEdge> tree;
    for (const MstEdge& e : all) {
        if (uf.unite(e.a, e.b)) {
            tree.push_back(e);
            if (tree.size() == n - 1) break;
        }
    }
    return tree;
}

Matrix minimax_closure(Matrix d) {
    const std::size_t n = d.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t l = 0; l < n; ++l) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    const double via = std::max(d[i][l], d[l][j]);
                    if (via < d[i][j]) {
                        d[i][j] = via;
                        changed = true;
                    }
                }
            }
        }
    }
    return d;
}

double max_edge_on_tree_path(const std::vector<MstEdge>& edges, std::size_t n,
                             std::size_t a, std::size_t b) {
    if (a == b) return 0.0;
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (const MstEdge& e : edges) {
        adj[e.a].push_back({e.b, e.weight});
        adj[e.b].push_back({e.a, e.weight});
    }
    // DFS from a, tracking the running max edge weight.
    std::vector<double> best(n, -1.0);
    std::vector<std::size_t> stack{a};
    best[a] = 0.0;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (const auto& [v, w] : adj[u]) {
            if (best[v] >= 0.0) continue;
            best[v] = std::max(best[u], w);
            stack.push_back(v);
        }
    }
    if (best[b] < 0.0) throw std::logic_error("tree is not spanning");
    return best[b];
}

namespace {

double ratio_or_zero(double a, double b) {
    const double denom = a > b ? a : b;
    if (denom == 0.0) return 0.0;
    return (a - b) / denom;
}

}  // namespace

NaiveScore naive_disco(const PointSet& ps, const Clustering& c, std::size_t mu) {
    const std::size_t n = ps.size();
    const std::size_t k = c.num_clusters();
    NaiveScore out;
    out.values.assign(n, 0.0);

    if (k == 0) {
        for (std::size_t i = 0; i < n; ++i) out.values[i] = -1.0;
        out.disco = -1.0;
        return out;
    }

    const Matrix closure = minimax_closure(mrd_matrix(ps, mu));
    const std::vector<double> kappa = brute_kappa(ps, mu);

    std::vector<double> kappa_c(k, 0.0);
    for (std::size_t id = 0; id < k; ++id) {
        for (std::size_t m : c.members(id)) kappa_c[id] = std::max(kappa_c[id], kappa[m]);
    }

    auto dtilde = [&](std::size_t x, std::size_t id) {
        double s = 0.0;
        for (std::size_t y : c.members(id)) s += closure[x][y];
        return s / static_cast<double>(c.members(id).size());
    };

    const bool has_noise = c.num_noise() > 0;
    for (std::size_t x = 0; x < n; ++x) {
        if (c.is_noise(x)) {
            double sparse = std::numeric_limits<double>::infinity();
            double far = std::numeric_limits<double>::infinity();
            for (std::size_t id = 0; id < k; ++id) {
                sparse = std::min(sparse, ratio_or_zero(kappa[x], kappa_c[id]));
                double mind = std::numeric_limits<double>::infinity();
                for (std::size_t y : c.members(id)) mind = std::min(mind, closure[x][y]);
                far = std::min(far, ratio_or_zero(mind, kappa_c[id]));
            }
            out.values[x] = std::min(sparse, far);
            continue;
        }
        const auto own = static_cast<std::size_t>(c.cluster_of(x));
        if (c.members(own).size() == 1) {
            out.values[x] = 0.0;
            continue;
        }
        if (k == 1 && !has_noise) {
            out.values[x] = 0.0;
            continue;
        }
        const double own_mean = dtilde(x, own);
        if (k == 1) {
            double mind = std::numeric_limits<double>::infinity();
            for (std::size_t y : c.noise()) mind = std::min(mind, closure[x][y]);
            out.values[x] = ratio_or_zero(mind, own_mean);
            continue;
        }
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t id = 0; id < k; ++id) {
            if (id == own) continue;
            best = std::min(best, ratio_or_zero(dtilde(x, id), own_mean));
        }
        out.values[x] = best;
    }

    double sum = 0.0;
    for (double v : out.values) sum += v;
    out.disco = sum / static_cast<double>(n);
    return out;
}

double brute_ari(std::span<const int> a, std::span<const int> b) {
    const std::size_t n = a.size();
    if (n < 2) return 1.0;

    // Noise as singletons: tag each -1 with a distinct id.
    std::vector<long> la(n), lb(n);
    long next = 1000000;
    for (std::size_t i = 0; i < n; ++i) la[i] = a[i] == -1 ? next++ : a[i];
    for (std::size_t i = 0; i < n; ++i) lb[i] = b[i] == -1 ? next++ : b[i];

    double n11 = 0, n00 = 0, n10 = 0, n01 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool sa = la[i] == la[j];
            const bool sb = lb[i] == lb[j];
            if (sa && sb) ++n11;
            else if (!sa && !sb) ++n00;
            else if (sa) ++n10;
            else ++n01;
        }
    }
    const double denom = (n11 + n10) * (n10 + n00) + (n11 + n01) * (n01 + n00);
    if (denom == 0.0) {
        return (n10 == 0 && n01 == 0) ? 1.0 : 0.0;
    }
    return 2.0 * (n11 * n00 - n10 * n01) / denom;
}

PointSet random_points(Rng& rng, std::size_t n, std::size_t m, double scale) {
    std::vector<double> data(n * m);
    for (double& v : data) v = rng.uniform(-scale, scale);
    return PointSet(n, m, std::move(data));
}

std::vector<int> random_labels(Rng& rng, std::size_t n, int max_label,
                               double noise_prob) {
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (max_label < 0 || rng.uniform01() < noise_prob) {
            labels[i] = -1;
        } else {
            labels[i] = static_cast<int>(rng.index(static_cast<std::size_t>(max_label) + 1));
        }
    }
    return labels;
}

}  // namespace disco::oracle
