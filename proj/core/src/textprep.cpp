#include "ssna/textprep.hpp"

#include <cmath>
#include <fstream>
#include <istream>

#include "ssna/stemmer.hpp"
#include "ssna/tokenize.hpp"

namespace ssna {

std::set<std::string> load_stopwords(std::istream& in) {
    std::set<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.insert(lowercase_utf8(line));
    }
    return out;
}

std::set<std::string> load_stopwords_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io_error, "cannot open stopword file '" + path + "'");
    return load_stopwords(in);
}

std::vector<std::string> preprocess_tokens(std::string_view text,
                                           const PreprocessConfig& cfg) {
    std::vector<std::string> out;
    for (auto& tok : tokenize(text, cfg.lowercase))
        if (!cfg.stopwords.count(tok)) out.push_back(std::move(tok));
    return out;
}

std::string apply_stemmer(std::string_view token, const PreprocessConfig& cfg) {
    if (cfg.stemmer == StemmerKind::none) return std::string(token);
    return cfg.language == Language::italian ? stem_italian(token) : stem_english(token);
}

std::vector<std::string> preprocess(std::string_view text, const PreprocessConfig& cfg) {
    std::vector<std::string> out = preprocess_tokens(text, cfg);
    if (cfg.stemmer != StemmerKind::none)
        for (auto& tok : out) tok = apply_stemmer(tok, cfg);
    return out;
}

std::pair<std::vector<AuthorDocument>, CorpusIndex> build_author_documents(
    const Corpus& corpus, const PreprocessConfig& cfg) {
    std::map<std::string, AuthorDocument> docs;
    for (const auto& id : corpus.actors()) docs[id].author_id = id;
    for (const auto& post : corpus.posts()) {
        auto& doc = docs[post.author_id];
        for (auto& stem : preprocess(post.text, cfg)) ++doc.term_counts[stem];
    }
    std::vector<AuthorDocument> out;
    out.reserve(docs.size());
    CorpusIndex index;
    for (auto& [id, doc] : docs) {
        for (const auto& [term, count] : doc.term_counts) ++index.df[term];
        out.push_back(std::move(doc));
    }
    index.n_docs = static_cast<long long>(out.size());
    return {std::move(out), std::move(index)};
}

TfIdfResult tfidf_vectors(const std::vector<AuthorDocument>& docs,
                          const CorpusIndex& index, IdfScheme scheme) {
    TfIdfResult result;
    result.vectors.reserve(docs.size());
    for (const auto& doc : docs) {
        TfIdfVector vec;
        vec.author_id = doc.author_id;
        if (doc.empty()) {
            result.empty_authors.push_back(doc.author_id);
            result.vectors.push_back(std::move(vec));
            continue;
        }
        double norm_sq = 0.0;
        for (const auto& [term, count] : doc.term_counts) {
            const auto df_it = index.df.find(term);
            const double df = df_it == index.df.end()
                                  ? 0.0
                                  : static_cast<double>(df_it->second);
            const double idf =
                scheme == IdfScheme::smoothed
                    ? std::log((1.0 + static_cast<double>(index.n_docs)) / (1.0 + df)) + 1.0
                    : std::log(static_cast<double>(index.n_docs) / df);
            const double wgt = static_cast<double>(count) * idf;
            vec.weights.emplace_back(term, wgt);
            norm_sq += wgt * wgt;
        }
        if (norm_sq > 0.0) {
            const double inv = 1.0 / std::sqrt(norm_sq);
            for (auto& [term, wgt] : vec.weights) wgt *= inv;
        }
        result.vectors.push_back(std::move(vec));
    }
    return result;
}

DyadMatrix text_similarity_matrix(const std::vector<TfIdfVector>& vectors) {
    std::size_t non_empty = 0;
    for (const auto& v : vectors)
        if (!v.empty()) ++non_empty;
    if (non_empty < 2)
        throw Error(errc::not_enough_actors,
                    "text similarity needs at least 2 non-empty documents");
    std::vector<std::string> actors;
    actors.reserve(vectors.size());
    for (const auto& v : vectors) actors.push_back(v.author_id);
    DyadMatrix m(std::move(actors), DyadKind::similarity);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
            if (vectors[i].empty() || vectors[j].empty()) {
                m.set_missing(i, j);
                continue;
            }
            // Merge-join over term-sorted weights; accumulation order is fixed.
            double dot = 0.0;
            const auto& a = vectors[i].weights;
            const auto& b = vectors[j].weights;
            std::size_t ia = 0, ib = 0;
            while (ia < a.size() && ib < b.size()) {
                const int cmp = a[ia].first.compare(b[ib].first);
                if (cmp < 0) ++ia;
                else if (cmp > 0) ++ib;
                else dot += a[ia++].second * b[ib++].second;
            }
            m.set(i, j, std::min(1.0, std::max(0.0, dot)));
        }
    }
    return m;
}

}  // namespace ssna
