#include "disco/clustering.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "disco/errors.hpp"

namespace disco {

Clustering Clustering::from_labels(std::vector<int> labels) {
    if (labels.empty()) {
        throw label_error("label vector is empty");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < kNoiseLabel) {
            throw label_error("label at index " + std::to_string(i) + " is " +
                              std::to_string(labels[i]) +
                              "; labels must be -1 (noise) or >= 0");
        }
    }

    // Normalized ids follow ascending label value, so they do not depend on
    // the order points appear in.
    std::map<int, int> id_of;
    for (int lab : labels) {
        if (lab != kNoiseLabel) id_of.emplace(lab, 0);
    }
    int next = 0;
    for (auto& [lab, id] : id_of) id = next++;

    Clustering c;
    c.labels_ = std::move(labels);
    c.cluster_of_.resize(c.labels_.size(), kNoiseLabel);
    c.clusters_.resize(id_of.size());
    c.original_labels_.resize(id_of.size());
    for (const auto& [lab, id] : id_of) {
        c.original_labels_[static_cast<std::size_t>(id)] = lab;
    }
    for (std::size_t i = 0; i < c.labels_.size(); ++i) {
        const int lab = c.labels_[i];
        if (lab == kNoiseLabel) {
            c.noise_.push_back(i);
        } else {
            const int id = id_of[lab];
            c.cluster_of_[i] = id;
            c.clusters_[static_cast<std::size_t>(id)].push_back(i);
        }
    }
    return c;
}

ClusterStats cluster_stats(const Clustering& c, const CoreDistances& cd) {
    ClusterStats st;
    st.kappa_max.resize(c.num_clusters(), 0.0);
    st.size.resize(c.num_clusters(), 0);
    for (std::size_t id = 0; id < c.num_clusters(); ++id) {
        const auto& members = c.members(static_cast<int>(id));
        st.size[id] = members.size();
        double best = 0.0;
        for (std::size_t m : members) {
            best = std::max(best, cd.kappa[m]);
        }
        st.kappa_max[id] = best;
    }
    return st;
}

}  // namespace disco
