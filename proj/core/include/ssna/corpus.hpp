#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssna/error.hpp"

namespace ssna {

struct Post {
    std::string post_id;
    std::string author_id;
    std::string thread_id;
    int week = 0;  // timestamps are reliable only to week granularity
    std::string text;
};

enum class Gender { male, female, unknown };

std::string gender_to_string(Gender g);
Gender gender_from_string(const std::string& s);

struct AuthorAttributes {
    std::string author_id;
    Gender gender = Gender::unknown;
    bool is_content_manager = false;
    bool synthesized = false;  // registry record created for an author seen only in posts
};

struct IngestPolicy {
    bool allow_empty = false;             // accept posts with empty text
    bool synthesize_unknown_authors = true;  // else unresolved author_id is an error
};

// Immutable after ingest; safe to share across threads.
class Corpus {
public:
    const std::vector<Post>& posts() const { return posts_; }

    // Sorted distinct author ids; the canonical actor order for every matrix.
    const std::vector<std::string>& actors() const { return actors_; }

    const AuthorAttributes& attributes(const std::string& author_id) const;
    bool has_author(const std::string& author_id) const;

    std::vector<const Post*> posts_by_author(const std::string& author_id) const;

    // Post indices per thread, in ingest order.
    const std::map<std::string, std::vector<std::size_t>>& threads() const { return threads_; }

    int min_week() const;
    int max_week() const;

    friend class CorpusBuilder;

private:
    std::vector<Post> posts_;
    std::vector<std::string> actors_;
    std::map<std::string, AuthorAttributes> attributes_;
    std::map<std::string, std::vector<std::size_t>> threads_;
};

class CorpusBuilder {
public:
    explicit CorpusBuilder(IngestPolicy policy = {}) : policy_(policy) {}

    void add_post(Post p);                       // throws on policy violations
    void add_author(AuthorAttributes a);         // throws on duplicate author record
    Corpus build();                              // throws EmptyCorpus if no posts

private:
    IngestPolicy policy_;
    Corpus corpus_;
    std::map<std::string, std::size_t> seen_post_ids_;
};

// Posts are stored as line-delimited JSON records with fields
// post_id, author_id, thread_id, week, text.
Corpus ingest_posts(std::istream& posts_jsonl, const IngestPolicy& policy = {});
Corpus ingest_posts(std::istream& posts_jsonl, std::istream& authors_csv,
                    const IngestPolicy& policy = {});

void write_posts_jsonl(std::ostream& out, const Corpus& corpus);
void write_authors_csv(std::ostream& out, const Corpus& corpus);

// Author table: CSV with header author_id,gender,is_content_manager.
std::vector<AuthorAttributes> parse_authors_csv(std::istream& in);

struct CorpusStats {
    long long n_posts = 0;
    long long tokens = 0;
    long long types = 0;
    long long hapax = 0;
    double type_token_ratio = 0.0;   // types / tokens
    double hapax_type_ratio = 0.0;   // hapax / types
};

// Counts over raw tokens (lowercased, split on non-alphanumeric), before
// stop-word removal and stemming.
CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace ssna
