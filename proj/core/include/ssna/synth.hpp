#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssna/corpus.hpp"
#include "ssna/dyad.hpp"

namespace ssna {

// Ground-truth generator: actors get vocabulary clusters, posts sample cluster
// words, and tie probability follows a logistic model in text similarity and
// latent-activity similarity. The generative link is deliberately different
// from the linear analysis model, so pipeline recovery is a real test.
struct SynthConfig {
    int n_actors = 50;
    int n_vocab_clusters = 4;
    int words_per_cluster = 40;
    int posts_per_actor = 5;
    int words_per_post = 30;
    double beta_text = 2.0;        // planted effect of cosine similarity on ties
    double beta_centrality = 0.0;  // planted effect of latent-activity similarity
    double intercept = -2.0;
    double noise_scale = 0.5;
    std::uint64_t seed = 0;

    void validate() const;  // throws on degenerate counts
};

struct SynthResult {
    Corpus corpus;
    DyadMatrix interaction;      // realized ties (symmetric, hollow, 0/1)
    DyadMatrix text_similarity;  // cosine of the true generated word counts
    DyadMatrix activity_absdiff; // |a_i - a_j| of the latent activity
    std::vector<int> cluster_of; // per-actor cluster assignment
    // Non-fatal warnings (e.g. unidentifiable text effect with 1 cluster).
    std::vector<std::string> warnings;
};

SynthResult generate(const SynthConfig& cfg);

}  // namespace ssna
