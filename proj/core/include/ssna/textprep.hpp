#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ssna/corpus.hpp"
#include "ssna/dyad.hpp"

namespace ssna {

enum class Language { italian, english };
enum class StemmerKind { snowball, none };

struct PreprocessConfig {
    Language language = Language::italian;
    std::set<std::string> stopwords;  // lowercase entries
    StemmerKind stemmer = StemmerKind::snowball;
    bool lowercase = true;
};

// One word per line, UTF-8; '#' lines and blanks ignored.
std::set<std::string> load_stopwords(std::istream& in);
std::set<std::string> load_stopwords_file(const std::string& path);

// The bundled list for a language (compiled in from core/data).
std::set<std::string> builtin_stopwords(Language lang);

// Lowercase + strip punctuation + drop stop-words; no stemming.
std::vector<std::string> preprocess_tokens(std::string_view text,
                                           const PreprocessConfig& cfg);

// Full pipeline: the above, then stemming.
std::vector<std::string> preprocess(std::string_view text, const PreprocessConfig& cfg);

std::string apply_stemmer(std::string_view token, const PreprocessConfig& cfg);

struct AuthorDocument {
    std::string author_id;
    std::map<std::string, long long> term_counts;  // stem -> count, all >= 1
    bool empty() const { return term_counts.empty(); }
};

// Document-frequency index over author documents (tf-idf home). Not to be
// confused with the per-post index used by the complexity metric.
struct CorpusIndex {
    long long n_docs = 0;
    std::map<std::string, long long> df;
};

std::pair<std::vector<AuthorDocument>, CorpusIndex> build_author_documents(
    const Corpus& corpus, const PreprocessConfig& cfg);

enum class IdfScheme {
    smoothed,  // ln((1 + N) / (1 + df)) + 1
    raw,       // ln(N / df)
};

struct TfIdfVector {
    std::string author_id;
    // Sorted by term so dot products accumulate in a fixed order.
    std::vector<std::pair<std::string, double>> weights;
    bool empty() const { return weights.empty(); }
};

struct TfIdfResult {
    std::vector<TfIdfVector> vectors;
    std::vector<std::string> empty_authors;  // warning list for the run report
};

TfIdfResult tfidf_vectors(const std::vector<AuthorDocument>& docs,
                          const CorpusIndex& index, IdfScheme scheme);

// Cosine similarity between all pairs of non-empty vectors; pairs involving an
// empty vector are marked missing. Needs at least 2 non-empty vectors.
DyadMatrix text_similarity_matrix(const std::vector<TfIdfVector>& vectors);

}  // namespace ssna
