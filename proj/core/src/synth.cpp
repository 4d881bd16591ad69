#include "ssna/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <unordered_map>

#include "ssna/rng.hpp"

namespace ssna {

void SynthConfig::validate() const {
    if (n_actors < 2) throw Error(errc::config_error, "n_actors must be >= 2");
    if (n_vocab_clusters < 1) throw Error(errc::config_error, "n_vocab_clusters must be >= 1");
    if (words_per_cluster < 1) throw Error(errc::config_error, "words_per_cluster must be >= 1");
    if (posts_per_actor < 1) throw Error(errc::config_error, "posts_per_actor must be >= 1");
    if (words_per_post < 1) throw Error(errc::config_error, "words_per_post must be >= 1");
    if (noise_scale < 0.0) throw Error(errc::config_error, "noise_scale must be >= 0");
}

namespace {

std::string actor_id(int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "a%04d", i);
    return buf;
}

// Cluster vocabularies are disjoint by construction; tokens end in a digit so
// neither stemming nor stop-word removal touches them.
std::string vocab_word(int cluster, int k) {
    return "v" + std::to_string(cluster) + "w" + std::to_string(k);
}

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

SynthResult generate(const SynthConfig& cfg) {
    cfg.validate();
    const int n = cfg.n_actors;

    std::vector<std::string> actors(n);
    for (int i = 0; i < n; ++i) actors[i] = actor_id(i);

    SynthResult result{Corpus{}, DyadMatrix(actors, DyadKind::interaction),
                       DyadMatrix(actors, DyadKind::similarity),
                       DyadMatrix(actors, DyadKind::abs_difference),
                       {}, {}};
    if (cfg.n_vocab_clusters == 1 && cfg.beta_text != 0.0)
        result.warnings.push_back(
            "single vocabulary cluster: text effect is unidentifiable");

    Rng assign_rng = Rng::for_index(cfg.seed, 1);
    result.cluster_of.resize(n);
    for (int i = 0; i < n; ++i)
        result.cluster_of[i] = static_cast<int>(
            assign_rng.below(static_cast<std::uint32_t>(cfg.n_vocab_clusters)));

    std::vector<double> activity(n);
    Rng act_rng = Rng::for_index(cfg.seed, 2);
    for (int i = 0; i < n; ++i) activity[i] = act_rng.normal();

    CorpusBuilder builder;
    Rng attr_rng = Rng::for_index(cfg.seed, 3);
    for (int i = 0; i < n; ++i) {
        AuthorAttributes a;
        a.author_id = actors[i];
        a.gender = attr_rng.below(2) ? Gender::male : Gender::female;
        a.is_content_manager = attr_rng.below(10) == 0;
        builder.add_author(a);
    }

    // Per-actor word counts over everything that actor writes.
    std::vector<std::unordered_map<std::string, long long>> counts(n);
    int post_serial = 0;
    auto sample_words = [&](int author, Rng& rng, int n_words) {
        std::string text;
        for (int w = 0; w < n_words; ++w) {
            int cluster = result.cluster_of[author];
            // 20% background draws from a random cluster, so between-cluster
            // similarity is positive but strictly below within-cluster.
            if (cfg.n_vocab_clusters > 1 && rng.below(5) == 0)
                cluster = static_cast<int>(
                    rng.below(static_cast<std::uint32_t>(cfg.n_vocab_clusters)));
            const std::string word =
                vocab_word(cluster, static_cast<int>(rng.below(
                                        static_cast<std::uint32_t>(cfg.words_per_cluster))));
            ++counts[author][word];
            if (!text.empty()) text += ' ';
            text += word;
        }
        return text;
    };
    auto add_post = [&](int author, const std::string& thread, int week,
                        const std::string& text) {
        Post p;
        p.post_id = "p" + std::to_string(post_serial++);
        p.author_id = actors[author];
        p.thread_id = thread;
        p.week = week;
        p.text = text;
        builder.add_post(std::move(p));
    };

    // Base posts in singleton threads.
    for (int i = 0; i < n; ++i) {
        Rng rng = Rng::for_index(cfg.seed, 100 + static_cast<std::uint64_t>(i));
        for (int k = 0; k < cfg.posts_per_actor; ++k) {
            const int week = (i + k) % 8;
            add_post(i, "t_base_" + actors[i] + "_" + std::to_string(k), week,
                     sample_words(i, rng, cfg.words_per_post));
        }
    }

    // Cosine over current (base) counts drives tie probabilities.
    auto cosine = [&](int i, int j) {
        double dot = 0.0, ni = 0.0, nj = 0.0;
        for (const auto& [w, c] : counts[i]) {
            ni += static_cast<double>(c) * static_cast<double>(c);
            const auto it = counts[j].find(w);
            if (it != counts[j].end())
                dot += static_cast<double>(c) * static_cast<double>(it->second);
        }
        for (const auto& [w, c] : counts[j])
            nj += static_cast<double>(c) * static_cast<double>(c);
        if (ni <= 0.0 || nj <= 0.0) return 0.0;
        return dot / std::sqrt(ni * nj);
    };

    Rng tie_rng = Rng::for_index(cfg.seed, 4);
    std::vector<std::pair<int, int>> ties;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double cos_ij = cosine(i, j);
            const double eta = cfg.intercept + cfg.beta_text * cos_ij -
                               cfg.beta_centrality * std::fabs(activity[i] - activity[j]) +
                               cfg.noise_scale * tie_rng.normal();
            const double prob = std::clamp(logistic(eta), 0.01, 0.99);
            const bool tie = tie_rng.uniform01() < prob;
            result.interaction.set(i, j, tie ? 1.0 : 0.0);
            result.activity_absdiff.set(i, j, std::fabs(activity[i] - activity[j]));
            if (tie) ties.emplace_back(i, j);
        }
    }

    // Each realized tie becomes a two-post thread (i opens, j replies), which
    // is exactly one interaction under the default graph rule.
    int tie_serial = 0;
    for (const auto& [i, j] : ties) {
        Rng rng = Rng::for_index(cfg.seed, 5000 + static_cast<std::uint64_t>(tie_serial));
        const std::string thread = "t_tie_" + std::to_string(tie_serial++);
        const int week = static_cast<int>(rng.below(8));
        add_post(i, thread, week, sample_words(i, rng, cfg.words_per_post));
        add_post(j, thread, week, sample_words(j, rng, cfg.words_per_post));
    }

    // Ground truth records the realized similarity (all posts included).
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) result.text_similarity.set(i, j, cosine(i, j));

    result.corpus = builder.build();
    return result;
}

}  // namespace ssna
