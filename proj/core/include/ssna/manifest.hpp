#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

namespace ssna {

inline constexpr const char* kVersion = "0.1.0";

// FNV-1a 64-bit digest, hex-encoded; used to fingerprint input files in run
// manifests.
std::uint64_t fnv1a64(std::string_view data);
std::string file_digest(const std::string& path);  // "fnv1a64:...."

// Every analytical choice in one serializable record; the CLI emits it as the
// run manifest and can re-run from it bit-exactly.
struct RunConfig {
    // Inputs
    std::string posts_path;
    std::string authors_path;
    std::string stopwords_path;   // empty = bundled list for `language`
    std::string lexicon_path;     // empty = neutral lexicon (all OOV)
    std::string external_scores_path;

    // Preprocessing
    std::string language = "italian";      // italian | english
    std::string stemmer = "snowball";      // snowball | none
    bool lowercase = true;
    bool allow_empty = false;

    // Semantics
    std::string idf_scheme = "smoothed";   // smoothed | raw
    std::string log_base = "natural";      // natural | base10 | base2
    std::string metric_stage = "pre-stem"; // pre-stem | post-stem
    double oov_default = 0.5;

    // Network
    std::string interaction_rule = "opener-and-previous";
    bool cumulative_weeks = false;
    double rotation_threshold = 0.30;
    std::string rotation_variant = "all-significant";  // | strict-alternation

    // Dyadic inference
    std::string distance_transform = "raw";  // raw | negate | max-minus
    bool binarize_interaction = true;
    int permutations = 2000;
    std::uint64_t seed = 0;
    std::string tail = "two-tailed";       // | one-tailed
    std::string triangle = "upper";        // | both
    int threads = 0;                       // 0 = hardware

    // Synthetic-data generation (the synth subcommand re-runs from its
    // manifest, so its knobs live here too).
    int synth_actors = 50;
    int synth_clusters = 4;
    int synth_words_per_cluster = 40;
    int synth_posts_per_actor = 5;
    int synth_words_per_post = 30;
    double synth_beta_text = 2.0;
    double synth_beta_centrality = 0.0;
    double synth_intercept = -2.0;
    double synth_noise = 0.5;

    std::string output_dir = "out";

    std::string to_json() const;           // stable key order
    static RunConfig from_json(const std::string& text);
    static RunConfig from_json_file(const std::string& path);
};

// Manifest = subcommand + config + tool version + seed + input digests.
void write_manifest(std::ostream& out, const std::string& subcommand,
                    const RunConfig& config,
                    const std::map<std::string, std::string>& input_digests);

}  // namespace ssna
