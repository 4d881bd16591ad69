#include "ssna/semantics.hpp"

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "ssna/csv.hpp"
#include "ssna/tokenize.hpp"

namespace ssna {

void SentimentProvider::validate() const {
    if (oov_default < 0.0 || oov_default > 1.0)
        throw Error(errc::range_error, "oov_default outside [0,1]");
    for (const auto& [w, s] : lexicon)
        if (s < 0.0 || s > 1.0)
            throw Error(errc::range_error, "lexicon score for '" + w + "' outside [0,1]");
    for (const auto& [id, s] : external)
        if (s < 0.0 || s > 1.0)
            throw Error(errc::range_error,
                        "external sentiment for post '" + id + "' outside [0,1]");
}

std::map<std::string, double> load_lexicon(std::istream& in) {
    std::map<std::string, double> out;
    for (const auto& row : csv::parse(in)) {
        if (row.size() < 2 || row[0] == "word") continue;
        out[lowercase_utf8(row[0])] = std::stod(row[1]);
    }
    return out;
}

std::map<std::string, double> load_external_scores(std::istream& in) {
    std::map<std::string, double> out;
    for (const auto& row : csv::parse(in)) {
        if (row.size() < 2 || row[0] == "post_id") continue;
        out[row[0]] = std::stod(row[1]);
    }
    return out;
}

double log_with_base(double x, LogBase base) {
    switch (base) {
        case LogBase::natural: return std::log(x);
        case LogBase::base10: return std::log10(x);
        case LogBase::base2: return std::log2(x);
    }
    return std::log(x);
}

PostFrequencyIndex build_post_frequency_index(const Corpus& corpus,
                                              const PreprocessConfig& cfg,
                                              MetricStage stage) {
    PostFrequencyIndex index;
    index.n_posts = static_cast<long long>(corpus.posts().size());
    for (const auto& post : corpus.posts()) {
        const auto tokens = stage == MetricStage::pre_stem
                                ? preprocess_tokens(post.text, cfg)
                                : preprocess(post.text, cfg);
        std::set<std::string> distinct(tokens.begin(), tokens.end());
        for (const auto& w : distinct) ++index.post_df[w];
    }
    return index;
}

double post_sentiment(const std::vector<std::string>& tokens,
                      const SentimentProvider& provider) {
    if (tokens.empty()) return provider.oov_default;
    double sum = 0.0;
    for (const auto& w : tokens) sum += provider.word_score(w);
    return sum / static_cast<double>(tokens.size());
}

std::optional<double> emotionality(const std::vector<std::string>& tokens,
                                   const SentimentProvider& provider) {
    if (tokens.empty()) return std::nullopt;
    double sum_sq = 0.0;
    for (const auto& w : tokens) {
        const double d = 0.5 - provider.word_score(w);
        sum_sq += d * d;
    }
    return 2.0 * std::sqrt(sum_sq / static_cast<double>(tokens.size()));
}

std::optional<double> complexity(const std::vector<std::string>& tokens,
                                 const PostFrequencyIndex& index, LogBase base) {
    if (tokens.empty()) return std::nullopt;
    std::map<std::string, long long> freq;  // sorted: fixed accumulation order
    for (const auto& w : tokens) ++freq[w];
    // Sum (f(w)/n)·log(N/n_w) over the post's own words; f(w) = 0 elsewhere in V.
    // Forming the ratio f/n per term keeps the result exactly invariant under
    // duplication of the token multiset (k·f / k·n is the same double).
    const double n = static_cast<double>(tokens.size());
    double sum = 0.0;
    for (const auto& [w, f] : freq) {
        const auto it = index.post_df.find(w);
        if (it == index.post_df.end())
            throw Error(errc::internal, "token '" + w + "' missing from post index");
        sum += (static_cast<double>(f) / n) *
               log_with_base(static_cast<double>(index.n_posts) /
                                 static_cast<double>(it->second),
                             base);
    }
    return sum;
}

std::size_t post_length(std::string_view text, const PreprocessConfig& cfg) {
    const auto tokens = preprocess_tokens(text, cfg);
    if (tokens.empty()) return 0;
    std::size_t len = tokens.size() - 1;  // single joining spaces
    for (const auto& t : tokens) len += utf8_length(t);
    return len;
}

std::vector<PostMetrics> post_metrics(const Corpus& corpus,
                                      const SentimentProvider& provider,
                                      const PostFrequencyIndex& index,
                                      const PreprocessConfig& cfg,
                                      const SemanticsConfig& scfg) {
    provider.validate();
    std::vector<PostMetrics> out;
    out.reserve(corpus.posts().size());
    for (const auto& post : corpus.posts()) {
        const auto tokens = scfg.stage == MetricStage::pre_stem
                                ? preprocess_tokens(post.text, cfg)
                                : preprocess(post.text, cfg);
        PostMetrics pm;
        pm.post_id = post.post_id;
        pm.n_words = tokens.size();
        pm.length = post_length(post.text, cfg);
        if (provider.mode == SentimentProvider::Mode::external_scores) {
            const auto it = provider.external.find(post.post_id);
            pm.sentiment = it == provider.external.end() ? provider.oov_default
                                                         : it->second;
        } else {
            pm.sentiment = post_sentiment(tokens, provider);
        }
        pm.emotionality = emotionality(tokens, provider);
        pm.complexity = complexity(tokens, index, scfg.log_base);
        out.push_back(std::move(pm));
    }
    return out;
}

std::vector<ActorMetrics> actor_metrics(const Corpus& corpus,
                                        const SentimentProvider& provider,
                                        const PostFrequencyIndex& index,
                                        const PreprocessConfig& cfg,
                                        const SemanticsConfig& scfg) {
    const auto per_post = post_metrics(corpus, provider, index, cfg, scfg);
    struct Acc {
        double sum = 0.0;
        long long n = 0;
        void add(double v) { sum += v; ++n; }
        std::optional<double> mean() const {
            if (n == 0) return std::nullopt;
            return sum / static_cast<double>(n);
        }
    };
    std::map<std::string, std::array<Acc, 4>> acc;  // sent, emo, cplx, len
    std::map<std::string, long long> counts;
    for (std::size_t i = 0; i < per_post.size(); ++i) {
        const auto& post = corpus.posts()[i];
        const auto& pm = per_post[i];
        auto& a = acc[post.author_id];
        ++counts[post.author_id];
        a[0].add(pm.sentiment);
        if (pm.emotionality) a[1].add(*pm.emotionality);
        if (pm.complexity) a[2].add(*pm.complexity);
        a[3].add(static_cast<double>(pm.length));
    }
    std::vector<ActorMetrics> out;
    out.reserve(corpus.actors().size());
    for (const auto& id : corpus.actors()) {
        ActorMetrics am;
        am.author_id = id;
        const auto it = acc.find(id);
        if (it != acc.end()) {
            am.sentiment = it->second[0].mean();
            am.emotionality = it->second[1].mean();
            am.complexity = it->second[2].mean();
            am.length = it->second[3].mean();
            am.n_posts = counts[id];
        }
        out.push_back(std::move(am));
    }
    return out;
}

}  // namespace ssna
