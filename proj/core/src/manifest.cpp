#include "ssna/manifest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ssna/error.hpp"

namespace ssna {

using ordered_json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::io_error, "cannot open '" + path + "' for digest");
    std::ostringstream buf;
    buf << in.rdbuf();
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(buf.str())));
    return std::string("fnv1a64:") + hex;
}

namespace {

ordered_json config_to_json(const RunConfig& c) {
    ordered_json j;
    j["posts_path"] = c.posts_path;
    j["authors_path"] = c.authors_path;
    j["stopwords_path"] = c.stopwords_path;
    j["lexicon_path"] = c.lexicon_path;
    j["external_scores_path"] = c.external_scores_path;
    j["language"] = c.language;
    j["stemmer"] = c.stemmer;
    j["lowercase"] = c.lowercase;
    j["allow_empty"] = c.allow_empty;
    j["idf_scheme"] = c.idf_scheme;
    j["log_base"] = c.log_base;
    j["metric_stage"] = c.metric_stage;
    j["oov_default"] = c.oov_default;
    j["interaction_rule"] = c.interaction_rule;
    j["cumulative_weeks"] = c.cumulative_weeks;
    j["rotation_threshold"] = c.rotation_threshold;
    j["rotation_variant"] = c.rotation_variant;
    j["distance_transform"] = c.distance_transform;
    j["binarize_interaction"] = c.binarize_interaction;
    j["permutations"] = c.permutations;
    j["seed"] = c.seed;
    j["tail"] = c.tail;
    j["triangle"] = c.triangle;
    j["threads"] = c.threads;
    j["synth_actors"] = c.synth_actors;
    j["synth_clusters"] = c.synth_clusters;
    j["synth_words_per_cluster"] = c.synth_words_per_cluster;
    j["synth_posts_per_actor"] = c.synth_posts_per_actor;
    j["synth_words_per_post"] = c.synth_words_per_post;
    j["synth_beta_text"] = c.synth_beta_text;
    j["synth_beta_centrality"] = c.synth_beta_centrality;
    j["synth_intercept"] = c.synth_intercept;
    j["synth_noise"] = c.synth_noise;
    j["output_dir"] = c.output_dir;
    return j;
}

}  // namespace

std::string RunConfig::to_json() const { return config_to_json(*this).dump(2); }

RunConfig RunConfig::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(errc::config_error, std::string("invalid config JSON: ") + e.what());
    }
    if (j.contains("config")) j = j["config"];  // accept a manifest as config
    RunConfig c;
    auto get = [&j](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::remove_reference_t<decltype(field)>>();
    };
    get("posts_path", c.posts_path);
    get("authors_path", c.authors_path);
    get("stopwords_path", c.stopwords_path);
    get("lexicon_path", c.lexicon_path);
    get("external_scores_path", c.external_scores_path);
    get("language", c.language);
    get("stemmer", c.stemmer);
    get("lowercase", c.lowercase);
    get("allow_empty", c.allow_empty);
    get("idf_scheme", c.idf_scheme);
    get("log_base", c.log_base);
    get("metric_stage", c.metric_stage);
    get("oov_default", c.oov_default);
    get("interaction_rule", c.interaction_rule);
    get("cumulative_weeks", c.cumulative_weeks);
    get("rotation_threshold", c.rotation_threshold);
    get("rotation_variant", c.rotation_variant);
    get("distance_transform", c.distance_transform);
    get("binarize_interaction", c.binarize_interaction);
    get("permutations", c.permutations);
    get("seed", c.seed);
    get("tail", c.tail);
    get("triangle", c.triangle);
    get("threads", c.threads);
    get("synth_actors", c.synth_actors);
    get("synth_clusters", c.synth_clusters);
    get("synth_words_per_cluster", c.synth_words_per_cluster);
    get("synth_posts_per_actor", c.synth_posts_per_actor);
    get("synth_words_per_post", c.synth_words_per_post);
    get("synth_beta_text", c.synth_beta_text);
    get("synth_beta_centrality", c.synth_beta_centrality);
    get("synth_intercept", c.synth_intercept);
    get("synth_noise", c.synth_noise);
    get("output_dir", c.output_dir);
    return c;
}

RunConfig RunConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io_error, "cannot open config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

void write_manifest(std::ostream& out, const std::string& subcommand,
                    const RunConfig& config,
                    const std::map<std::string, std::string>& input_digests) {
    ordered_json j;
    j["tool"] = "ssna";
    j["version"] = kVersion;
    j["subcommand"] = subcommand;
    j["seed"] = config.seed;
    // Thread count is an execution detail, not an analytical choice; results
    // are identical at any parallelism level, so the manifest omits it.
    ordered_json cj = config_to_json(config);
    cj.erase("threads");
    j["config"] = cj;
    ordered_json digests;
    for (const auto& [path, digest] : input_digests) digests[path] = digest;
    j["input_digests"] = digests;
    out << j.dump(2) << '\n';
}

}  // namespace ssna
