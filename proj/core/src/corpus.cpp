#include "ssna/corpus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "ssna/csv.hpp"
#include "ssna/tokenize.hpp"

namespace ssna {

using nlohmann::json;

std::string gender_to_string(Gender g) {
    switch (g) {
        case Gender::male: return "M";
        case Gender::female: return "F";
        case Gender::unknown: return "unknown";
    }
    return "unknown";
}

Gender gender_from_string(const std::string& s) {
    if (s == "M" || s == "m") return Gender::male;
    if (s == "F" || s == "f") return Gender::female;
    if (s == "unknown" || s.empty()) return Gender::unknown;
    throw Error(errc::schema_error, "invalid gender value '" + s + "'");
}

const AuthorAttributes& Corpus::attributes(const std::string& author_id) const {
    auto it = attributes_.find(author_id);
    if (it == attributes_.end())
        throw Error(errc::schema_error, "unknown author '" + author_id + "'");
    return it->second;
}

bool Corpus::has_author(const std::string& author_id) const {
    return attributes_.count(author_id) != 0;
}

std::vector<const Post*> Corpus::posts_by_author(const std::string& author_id) const {
    std::vector<const Post*> out;
    for (const auto& p : posts_)
        if (p.author_id == author_id) out.push_back(&p);
    return out;
}

int Corpus::min_week() const {
    int w = posts_.empty() ? 0 : posts_.front().week;
    for (const auto& p : posts_) w = std::min(w, p.week);
    return w;
}

int Corpus::max_week() const {
    int w = posts_.empty() ? 0 : posts_.front().week;
    for (const auto& p : posts_) w = std::max(w, p.week);
    return w;
}

void CorpusBuilder::add_post(Post p) {
    if (p.post_id.empty())
        throw Error(errc::schema_error, "post with empty post_id");
    if (p.author_id.empty())
        throw Error(errc::schema_error, "post '" + p.post_id + "' has empty author_id");
    if (p.week < 0)
        throw Error(errc::schema_error, "post '" + p.post_id + "' has negative week");
    if (p.text.empty() && !policy_.allow_empty)
        throw Error(errc::schema_error,
                    "post '" + p.post_id + "' has empty text (allow_empty not set)");
    if (!seen_post_ids_.emplace(p.post_id, corpus_.posts_.size()).second)
        throw Error(errc::duplicate_id, "duplicate post_id '" + p.post_id + "'");
    corpus_.threads_[p.thread_id].push_back(corpus_.posts_.size());
    corpus_.posts_.push_back(std::move(p));
}

void CorpusBuilder::add_author(AuthorAttributes a) {
    if (a.author_id.empty())
        throw Error(errc::schema_error, "author record with empty author_id");
    auto [it, inserted] = corpus_.attributes_.emplace(a.author_id, a);
    if (!inserted) {
        if (!it->second.synthesized)
            throw Error(errc::duplicate_id, "duplicate author record '" + a.author_id + "'");
        it->second = a;
    }
}

Corpus CorpusBuilder::build() {
    if (corpus_.posts_.empty())
        throw Error(errc::empty_corpus, "no posts ingested");
    std::set<std::string> ids;
    for (const auto& p : corpus_.posts_) ids.insert(p.author_id);
    for (const auto& id : ids) {
        if (!corpus_.attributes_.count(id)) {
            if (!policy_.synthesize_unknown_authors)
                throw Error(errc::schema_error,
                            "post author '" + id + "' has no attribute record");
            AuthorAttributes a;
            a.author_id = id;
            a.synthesized = true;
            corpus_.attributes_.emplace(id, a);
        }
    }
    corpus_.actors_.assign(ids.begin(), ids.end());
    return std::move(corpus_);
}

namespace {

Post parse_post_line(const std::string& line, std::size_t row) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw Error(errc::schema_error,
                    "row " + std::to_string(row) + ": invalid JSON (" + e.what() + ")");
    }
    Post p;
    for (const char* field : {"post_id", "author_id", "thread_id", "week", "text"}) {
        if (!j.contains(field))
            throw Error(errc::schema_error,
                        "row " + std::to_string(row) + ": missing field '" + field + "'");
    }
    try {
        p.post_id = j.at("post_id").get<std::string>();
        p.author_id = j.at("author_id").get<std::string>();
        p.thread_id = j.at("thread_id").get<std::string>();
        p.week = j.at("week").get<int>();
        p.text = j.at("text").get<std::string>();
    } catch (const json::exception& e) {
        throw Error(errc::schema_error,
                    "row " + std::to_string(row) + ": bad field type (" + e.what() + ")");
    }
    return p;
}

}  // namespace

Corpus ingest_posts(std::istream& posts_jsonl, const IngestPolicy& policy) {
    CorpusBuilder builder(policy);
    std::string line;
    std::size_t row = 0;
    while (std::getline(posts_jsonl, line)) {
        ++row;
        if (line.empty()) continue;
        builder.add_post(parse_post_line(line, row));
    }
    return builder.build();
}

Corpus ingest_posts(std::istream& posts_jsonl, std::istream& authors_csv,
                    const IngestPolicy& policy) {
    CorpusBuilder builder(policy);
    for (auto& a : parse_authors_csv(authors_csv)) builder.add_author(std::move(a));
    std::string line;
    std::size_t row = 0;
    while (std::getline(posts_jsonl, line)) {
        ++row;
        if (line.empty()) continue;
        builder.add_post(parse_post_line(line, row));
    }
    return builder.build();
}

void write_posts_jsonl(std::ostream& out, const Corpus& corpus) {
    for (const auto& p : corpus.posts()) {
        json j{{"post_id", p.post_id},
               {"author_id", p.author_id},
               {"thread_id", p.thread_id},
               {"week", p.week},
               {"text", p.text}};
        out << j.dump() << '\n';
    }
}

void write_authors_csv(std::ostream& out, const Corpus& corpus) {
    csv::write_row(out, {"author_id", "gender", "is_content_manager"});
    for (const auto& id : corpus.actors()) {
        const auto& a = corpus.attributes(id);
        csv::write_row(out, {a.author_id, gender_to_string(a.gender),
                             a.is_content_manager ? "true" : "false"});
    }
}

std::vector<AuthorAttributes> parse_authors_csv(std::istream& in) {
    const auto rows = csv::parse(in);
    if (rows.empty())
        throw Error(errc::schema_error, "authors table is empty");
    const auto& header = rows.front();
    if (header.size() < 3 || header[0] != "author_id" || header[1] != "gender" ||
        header[2] != "is_content_manager")
        throw Error(errc::schema_error,
                    "authors table must have header author_id,gender,is_content_manager");
    std::vector<AuthorAttributes> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() < 3)
            throw Error(errc::schema_error,
                        "authors row " + std::to_string(i + 1) + ": expected 3 fields");
        AuthorAttributes a;
        a.author_id = r[0];
        a.gender = gender_from_string(r[1]);
        if (r[2] == "true") a.is_content_manager = true;
        else if (r[2] == "false") a.is_content_manager = false;
        else
            throw Error(errc::schema_error, "authors row " + std::to_string(i + 1) +
                                                ": is_content_manager must be true/false");
        out.push_back(std::move(a));
    }
    return out;
}

CorpusStats corpus_stats(const Corpus& corpus) {
    if (corpus.posts().empty())
        throw Error(errc::empty_corpus, "corpus_stats on empty corpus");
    CorpusStats s;
    s.n_posts = static_cast<long long>(corpus.posts().size());
    std::unordered_map<std::string, long long> freq;
    for (const auto& p : corpus.posts()) {
        for (auto& tok : tokenize(p.text)) {
            ++s.tokens;
            ++freq[tok];
        }
    }
    s.types = static_cast<long long>(freq.size());
    for (const auto& [w, c] : freq)
        if (c == 1) ++s.hapax;
    s.type_token_ratio = s.tokens ? static_cast<double>(s.types) / static_cast<double>(s.tokens) : 0.0;
    s.hapax_type_ratio = s.types ? static_cast<double>(s.hapax) / static_cast<double>(s.types) : 0.0;
    return s;
}

}  // namespace ssna
