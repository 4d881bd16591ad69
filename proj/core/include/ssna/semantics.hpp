#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssna/corpus.hpp"
#include "ssna/textprep.hpp"

namespace ssna {

// Word-level sentiment source. In lexicon mode the post score is the mean of
// word scores; in external-scores mode pre-computed post scores override the
// mean while word-level lookups (needed by emotionality) still come from the
// lexicon / OOV default.
struct SentimentProvider {
    enum class Mode { lexicon, external_scores };
    Mode mode = Mode::lexicon;
    std::map<std::string, double> lexicon;       // word -> [0,1]
    double oov_default = 0.5;
    std::map<std::string, double> external;      // post_id -> [0,1]

    double word_score(const std::string& word) const {
        auto it = lexicon.find(word);
        return it == lexicon.end() ? oov_default : it->second;
    }

    void validate() const;  // throws RangeError on out-of-range scores
};

// Lexicon file: CSV word,score with score in [0,1].
std::map<std::string, double> load_lexicon(std::istream& in);
// External-scores file: CSV post_id,sentiment.
std::map<std::string, double> load_external_scores(std::istream& in);

// Word frequencies indexed over POSTS (the complexity metric's home); distinct
// from CorpusIndex, which is indexed over author documents for tf-idf.
struct PostFrequencyIndex {
    long long n_posts = 0;
    std::map<std::string, long long> post_df;  // word -> posts containing it
};

enum class LogBase { natural, base10, base2 };
double log_with_base(double x, LogBase base);

// Which token stage the semantic metrics see. Sentiment lexicons and post df
// are word-level, so pre-stem is the default.
enum class MetricStage { pre_stem, post_stem };

struct SemanticsConfig {
    LogBase log_base = LogBase::natural;
    MetricStage stage = MetricStage::pre_stem;
};

PostFrequencyIndex build_post_frequency_index(const Corpus& corpus,
                                              const PreprocessConfig& cfg,
                                              MetricStage stage = MetricStage::pre_stem);

double post_sentiment(const std::vector<std::string>& tokens,
                      const SentimentProvider& provider);

// 2 * sqrt(mean((0.5 - s_i)^2)); nullopt for an empty token list.
std::optional<double> emotionality(const std::vector<std::string>& tokens,
                                   const SentimentProvider& provider);

// (1/n) * sum_w f(w) * log(N / n_w); nullopt for an empty token list.
std::optional<double> complexity(const std::vector<std::string>& tokens,
                                 const PostFrequencyIndex& index, LogBase base);

// Codepoint count of the space-joined surviving tokens, before stemming.
std::size_t post_length(std::string_view text, const PreprocessConfig& cfg);

struct PostMetrics {
    std::string post_id;
    double sentiment = 0.5;
    std::optional<double> emotionality;
    std::optional<double> complexity;
    std::size_t length = 0;
    std::size_t n_words = 0;
};

struct ActorMetrics {
    std::string author_id;
    std::optional<double> sentiment;
    std::optional<double> emotionality;
    std::optional<double> complexity;
    std::optional<double> length;
    long long n_posts = 0;
};

std::vector<PostMetrics> post_metrics(const Corpus& corpus,
                                      const SentimentProvider& provider,
                                      const PostFrequencyIndex& index,
                                      const PreprocessConfig& cfg,
                                      const SemanticsConfig& scfg = {});

// Unweighted means over each author's posts; posts with undefined values are
// excluded from that metric's mean only. Ordered by corpus actor order.
std::vector<ActorMetrics> actor_metrics(const Corpus& corpus,
                                        const SentimentProvider& provider,
                                        const PostFrequencyIndex& index,
                                        const PreprocessConfig& cfg,
                                        const SemanticsConfig& scfg = {});

}  // namespace ssna
