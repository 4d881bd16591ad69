// ssna: socio-semantic network analytics pipeline.
//
// Subcommands cover the full pipeline from raw forum posts to dyadic
// regression tables; every run writes a manifest that reproduces it bit-exactly.
#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssna/corpus.hpp"
#include "ssna/dyad.hpp"
#include "ssna/error.hpp"
#include "ssna/manifest.hpp"
#include "ssna/network.hpp"
#include "ssna/qap.hpp"
#include "ssna/report.hpp"
#include "ssna/semantics.hpp"
#include "ssna/synth.hpp"
#include "ssna/textprep.hpp"

namespace fs = std::filesystem;
using namespace ssna;

namespace {

// ---------------------------------------------------------------------------
// Config plumbing
// ---------------------------------------------------------------------------

Language parse_language(const std::string& s) {
    if (s == "italian") return Language::italian;
    if (s == "english") return Language::english;
    throw Error(errc::config_error, "unknown language '" + s + "'");
}

StemmerKind parse_stemmer(const std::string& s) {
    if (s == "snowball") return StemmerKind::snowball;
    if (s == "none") return StemmerKind::none;
    throw Error(errc::config_error, "unknown stemmer '" + s + "'");
}

IdfScheme parse_idf(const std::string& s) {
    if (s == "smoothed") return IdfScheme::smoothed;
    if (s == "raw") return IdfScheme::raw;
    throw Error(errc::config_error, "unknown idf_scheme '" + s + "'");
}

LogBase parse_log_base(const std::string& s) {
    if (s == "natural") return LogBase::natural;
    if (s == "base10") return LogBase::base10;
    if (s == "base2") return LogBase::base2;
    throw Error(errc::config_error, "unknown log_base '" + s + "'");
}

MetricStage parse_stage(const std::string& s) {
    if (s == "pre-stem") return MetricStage::pre_stem;
    if (s == "post-stem") return MetricStage::post_stem;
    throw Error(errc::config_error, "unknown metric_stage '" + s + "'");
}

InteractionRule parse_rule(const std::string& s) {
    if (s == "opener-and-previous") return InteractionRule::opener_and_previous;
    if (s == "opener-only") return InteractionRule::opener_only;
    if (s == "all-prior-authors") return InteractionRule::all_prior_authors;
    throw Error(errc::config_error, "unknown interaction_rule '" + s + "'");
}

RotationVariant parse_rotation_variant(const std::string& s) {
    if (s == "all-significant") return RotationVariant::all_significant;
    if (s == "strict-alternation") return RotationVariant::strict_alternation;
    throw Error(errc::config_error, "unknown rotation_variant '" + s + "'");
}

SimilarityTransform parse_transform(const std::string& s) {
    if (s == "raw") return SimilarityTransform::raw;
    if (s == "negate") return SimilarityTransform::negate;
    if (s == "max-minus") return SimilarityTransform::max_minus;
    throw Error(errc::config_error, "unknown distance_transform '" + s + "'");
}

TailMode parse_tail(const std::string& s) {
    if (s == "two-tailed") return TailMode::two_tailed;
    if (s == "one-tailed") return TailMode::one_tailed;
    throw Error(errc::config_error, "unknown tail '" + s + "'");
}

Triangle parse_triangle(const std::string& s) {
    if (s == "upper") return Triangle::upper;
    if (s == "both") return Triangle::both;
    throw Error(errc::config_error, "unknown triangle '" + s + "'");
}

PreprocessConfig make_preprocess(const RunConfig& cfg) {
    PreprocessConfig pp;
    pp.language = parse_language(cfg.language);
    pp.stemmer = parse_stemmer(cfg.stemmer);
    pp.lowercase = cfg.lowercase;
    pp.stopwords = cfg.stopwords_path.empty()
                       ? builtin_stopwords(pp.language)
                       : load_stopwords_file(cfg.stopwords_path);
    return pp;
}

SentimentProvider make_provider(const RunConfig& cfg) {
    SentimentProvider p;
    p.oov_default = cfg.oov_default;
    if (!cfg.lexicon_path.empty()) {
        std::ifstream in(cfg.lexicon_path);
        if (!in) throw Error(errc::io_error, "cannot open lexicon '" + cfg.lexicon_path + "'");
        p.lexicon = load_lexicon(in);
    }
    if (!cfg.external_scores_path.empty()) {
        std::ifstream in(cfg.external_scores_path);
        if (!in)
            throw Error(errc::io_error,
                        "cannot open external scores '" + cfg.external_scores_path + "'");
        p.external = load_external_scores(in);
        p.mode = SentimentProvider::Mode::external_scores;
    }
    p.validate();
    return p;
}

SemanticsConfig make_semantics(const RunConfig& cfg) {
    return {parse_log_base(cfg.log_base), parse_stage(cfg.metric_stage)};
}

MrqapOptions make_mrqap_options(const RunConfig& cfg) {
    MrqapOptions o;
    o.permutations = cfg.permutations;
    o.seed = cfg.seed;
    o.tail = parse_tail(cfg.tail);
    o.triangle = parse_triangle(cfg.triangle);
    o.threads = cfg.threads;
    return o;
}

QapOptions make_qap_options(const RunConfig& cfg) {
    QapOptions o;
    o.permutations = cfg.permutations;
    o.seed = cfg.seed;
    o.tail = parse_tail(cfg.tail);
    o.triangle = parse_triangle(cfg.triangle);
    o.threads = cfg.threads;
    return o;
}

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary: no platform newline games
    if (!out) throw Error(errc::io_error, "cannot write '" + path.string() + "'");
    return out;
}

void write_table(const fs::path& dir, const std::string& stem, const Table& t) {
    auto csv = open_out(dir / (stem + ".csv"));
    render_csv(csv, t);
    auto md = open_out(dir / (stem + ".md"));
    render_markdown(md, t);
}

std::string format_grouped(long long v) {
    std::string digits = std::to_string(v);
    std::string out;
    int count = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (count && count % 3 == 0 && *it != '-') out.push_back(',');
        out.push_back(*it);
        ++count;
    }
    return std::string(out.rbegin(), out.rend());
}

std::string opt_full(const std::optional<double>& v) {
    return v ? format_full(*v) : "";
}

// ---------------------------------------------------------------------------
// Shared pipeline state
// ---------------------------------------------------------------------------

struct Inputs {
    Corpus corpus;
    std::map<std::string, std::string> digests;
};

Inputs load_inputs(const RunConfig& cfg) {
    if (cfg.posts_path.empty())
        throw Error(errc::config_error, "posts_path is required");
    std::ifstream posts(cfg.posts_path);
    if (!posts) throw Error(errc::io_error, "cannot open posts '" + cfg.posts_path + "'");
    IngestPolicy policy;
    policy.allow_empty = cfg.allow_empty;
    Inputs in;
    if (!cfg.authors_path.empty()) {
        std::ifstream authors(cfg.authors_path);
        if (!authors)
            throw Error(errc::io_error, "cannot open authors '" + cfg.authors_path + "'");
        in.corpus = ingest_posts(posts, authors, policy);
        in.digests[cfg.authors_path] = file_digest(cfg.authors_path);
    } else {
        in.corpus = ingest_posts(posts, policy);
    }
    in.digests[cfg.posts_path] = file_digest(cfg.posts_path);
    for (const auto& p : {cfg.stopwords_path, cfg.lexicon_path, cfg.external_scores_path})
        if (!p.empty()) in.digests[p] = file_digest(p);
    return in;
}

// Every actor-level variable the tables draw on, in corpus actor order.
struct ActorVars {
    std::vector<std::string> actors;
    std::vector<ActorMetrics> metrics;
    std::vector<long long> deg;
    std::vector<double> btw;
    std::vector<std::optional<int>> rotation;
    CentralityFactor factor;
    std::vector<std::optional<std::string>> gender;   // "f"/"m", unknown missing
    std::vector<std::optional<std::string>> role;     // "1"/"0" content manager
};

ActorVars build_actor_vars(const Corpus& corpus, const InteractionGraph& graph,
                           const RunConfig& cfg, const PreprocessConfig& pp,
                           const SentimentProvider& provider) {
    ActorVars v;
    v.actors = corpus.actors();
    const auto index = build_post_frequency_index(corpus, pp, make_semantics(cfg).stage);
    v.metrics = actor_metrics(corpus, provider, index, pp, make_semantics(cfg));
    v.deg = degree(graph);
    v.btw = betweenness(graph, cfg.threads);
    const auto series = weekly_snapshots(corpus, parse_rule(cfg.interaction_rule),
                                         cfg.cumulative_weeks, cfg.threads);
    const auto variant = parse_rotation_variant(cfg.rotation_variant);
    v.rotation.resize(v.actors.size());
    for (std::size_t i = 0; i < v.actors.size(); ++i)
        v.rotation[i] = rotating_leadership(series.series[i], cfg.rotation_threshold, variant);
    std::vector<double> degd(v.deg.begin(), v.deg.end());
    v.factor = centrality_factor(degd, v.btw);
    for (const auto& a : v.actors) {
        const auto& attr = corpus.attributes(a);
        if (attr.gender == Gender::unknown)
            v.gender.emplace_back(std::nullopt);
        else
            v.gender.emplace_back(gender_to_string(attr.gender));
        v.role.emplace_back(attr.is_content_manager ? "1" : "0");
    }
    return v;
}

// The dyadic variable set behind the QAP / MRQAP tables.
struct MatrixSet {
    DyadMatrix interaction;
    std::vector<std::pair<std::string, DyadMatrix>> vars;  // name -> similarity matrix
};

DyadMatrix interaction_matrix(const InteractionGraph& graph, bool binarize) {
    DyadMatrix m(graph.nodes(), DyadKind::interaction);
    const std::size_t n = graph.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, 0.0);
    for (const auto& [a, b, w] : graph.edges())
        m.set(a, b, binarize ? 1.0 : static_cast<double>(w));
    return m;
}

MatrixSet build_matrices(const Corpus& corpus, const InteractionGraph& graph,
                         const ActorVars& v, const RunConfig& cfg,
                         const PreprocessConfig& pp,
                         std::vector<std::string>* warnings) {
    const auto transform = parse_transform(cfg.distance_transform);
    auto similarity_of = [&](const std::vector<std::optional<double>>& score) {
        return to_similarity(absdiff_matrix(v.actors, score), transform);
    };
    auto pick = [&](auto getter) {
        std::vector<std::optional<double>> out;
        out.reserve(v.actors.size());
        for (std::size_t i = 0; i < v.actors.size(); ++i) out.push_back(getter(i));
        return out;
    };

    const auto [docs, index] = build_author_documents(corpus, pp);
    auto tfidf = tfidf_vectors(docs, index, parse_idf(cfg.idf_scheme));
    if (warnings)
        for (const auto& a : tfidf.empty_authors)
            warnings->push_back("author '" + a + "' has an empty document; excluded from text similarity");

    MatrixSet m{interaction_matrix(graph, cfg.binarize_interaction), {}};
    m.vars.emplace_back("Text", text_similarity_matrix(tfidf.vectors));
    m.vars.emplace_back("Sentiment", similarity_of(pick([&](std::size_t i) { return v.metrics[i].sentiment; })));
    m.vars.emplace_back("Emotionality", similarity_of(pick([&](std::size_t i) { return v.metrics[i].emotionality; })));
    m.vars.emplace_back("Complexity", similarity_of(pick([&](std::size_t i) { return v.metrics[i].complexity; })));
    m.vars.emplace_back("Length", similarity_of(pick([&](std::size_t i) { return v.metrics[i].length; })));
    m.vars.emplace_back("Centrality", similarity_of(pick([&](std::size_t i) {
                            return std::optional<double>(v.factor.scores[i]);
                        })));
    m.vars.emplace_back("Rotating leadership", similarity_of(pick([&](std::size_t i) {
                            return v.rotation[i] ? std::optional<double>(*v.rotation[i])
                                                 : std::nullopt;
                        })));
    m.vars.emplace_back("Gender", match_matrix(v.actors, v.gender));
    m.vars.emplace_back("Role", match_matrix(v.actors, v.role));
    return m;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

bool has_dyad_variance(const DyadMatrix& m) {
    std::optional<double> first;
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m.is_missing(i, j)) continue;
            if (!first)
                first = m.at(i, j);
            else if (m.at(i, j) != *first)
                return true;
        }
    }
    return false;
}

void cmd_ingest(const RunConfig& cfg, const Inputs& in, const fs::path& dir) {
    auto posts = open_out(dir / "posts.jsonl");
    write_posts_jsonl(posts, in.corpus);
    auto authors = open_out(dir / "authors.csv");
    write_authors_csv(authors, in.corpus);
    (void)cfg;
}

void cmd_corpus_stats(const RunConfig&, const Inputs& in, const fs::path& dir) {
    const CorpusStats s = corpus_stats(in.corpus);
    Table t;
    t.title = "Corpus statistics";
    t.header = {"Statistic", "Value"};
    t.rows = {
        {"Posts", format_grouped(s.n_posts)},
        {"Tokens", format_grouped(s.tokens)},
        {"Word types", format_grouped(s.types)},
        {"Hapax legomena", format_grouped(s.hapax)},
        {"Type-Token Ratio", format_percent2(s.type_token_ratio)},
        {"Hapax share of types", format_percent2(s.hapax_type_ratio)},
    };
    write_table(dir, "table1", t);

    Table full;
    full.header = {"statistic", "value"};
    full.rows = {
        {"n_posts", std::to_string(s.n_posts)},
        {"tokens", std::to_string(s.tokens)},
        {"types", std::to_string(s.types)},
        {"hapax", std::to_string(s.hapax)},
        {"type_token_ratio", format_full(s.type_token_ratio)},
        {"hapax_type_ratio", format_full(s.hapax_type_ratio)},
    };
    auto out = open_out(dir / "corpus_stats_full.csv");
    render_csv(out, full);
}

// Actor-level variable columns shared by the metric/correlation tables.
struct NamedColumn {
    std::string name;
    std::vector<std::optional<double>> values;
};

std::vector<NamedColumn> actor_columns(const ActorVars& v) {
    std::vector<NamedColumn> cols;
    auto add = [&](const std::string& name, auto getter) {
        NamedColumn c{name, {}};
        c.values.reserve(v.actors.size());
        for (std::size_t i = 0; i < v.actors.size(); ++i) c.values.push_back(getter(i));
        cols.push_back(std::move(c));
    };
    add("Sentiment", [&](std::size_t i) { return v.metrics[i].sentiment; });
    add("Emotionality", [&](std::size_t i) { return v.metrics[i].emotionality; });
    add("Complexity", [&](std::size_t i) { return v.metrics[i].complexity; });
    add("Length", [&](std::size_t i) { return v.metrics[i].length; });
    add("Degree", [&](std::size_t i) {
        return std::optional<double>(static_cast<double>(v.deg[i]));
    });
    add("Betweenness", [&](std::size_t i) { return std::optional<double>(v.btw[i]); });
    add("Rotating leadership", [&](std::size_t i) {
        return v.rotation[i] ? std::optional<double>(*v.rotation[i]) : std::nullopt;
    });
    add("Centrality factor", [&](std::size_t i) {
        return std::optional<double>(v.factor.scores[i]);
    });
    add("Gender (F=1)", [&](std::size_t i) {
        if (!v.gender[i]) return std::optional<double>();
        return std::optional<double>(*v.gender[i] == "F" ? 1.0 : 0.0);
    });
    add("Content manager", [&](std::size_t i) {
        return std::optional<double>(*v.role[i] == "1" ? 1.0 : 0.0);
    });
    return cols;
}

void cmd_actor_metrics(const RunConfig&, const ActorVars& v, const fs::path& dir) {
    const auto cols = actor_columns(v);

    Table t;
    t.title = "Actor-level descriptive statistics";
    t.header = {"Variable", "Mean", "S.D.", "Min", "Max", "N"};
    for (const auto& c : cols) {
        std::vector<double> x;
        for (const auto& val : c.values)
            if (val) x.push_back(*val);
        if (x.empty()) {
            t.rows.push_back({c.name, "", "", "", "", "0"});
            continue;
        }
        double mean = 0.0;
        for (double xi : x) mean += xi;
        mean /= static_cast<double>(x.size());
        double ss = 0.0;
        for (double xi : x) ss += (xi - mean) * (xi - mean);
        const double sd = x.size() > 1 ? std::sqrt(ss / static_cast<double>(x.size() - 1)) : 0.0;
        const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
        t.rows.push_back({c.name, format_fixed(mean, 3), format_fixed(sd, 3),
                          format_fixed(*mn, 3), format_fixed(*mx, 3),
                          std::to_string(x.size())});
    }
    write_table(dir, "table2", t);

    Table full;
    full.header = {"author_id", "n_posts", "sentiment", "emotionality", "complexity",
                   "length", "degree", "betweenness", "rotating_weeks",
                   "factor_score", "gender", "content_manager"};
    for (std::size_t i = 0; i < v.actors.size(); ++i) {
        const auto& m = v.metrics[i];
        full.rows.push_back({v.actors[i], std::to_string(m.n_posts), opt_full(m.sentiment),
                             opt_full(m.emotionality), opt_full(m.complexity),
                             opt_full(m.length), std::to_string(v.deg[i]),
                             format_full(v.btw[i]),
                             v.rotation[i] ? std::to_string(*v.rotation[i]) : "",
                             format_full(v.factor.scores[i]),
                             v.gender[i] ? *v.gender[i] : "", *v.role[i] == "1" ? "1" : "0"});
    }
    auto out = open_out(dir / "actor_metrics.csv");
    render_csv(out, full);
}

void cmd_actor_correlations(const RunConfig&, const ActorVars& v, const fs::path& dir) {
    const auto cols = actor_columns(v);
    const std::size_t k = cols.size();

    Table t;
    t.title = "Actor-level correlations";
    t.header = {"Variable"};
    for (const auto& c : cols) t.header.push_back(c.name);
    Table full;
    full.header = {"var_row", "var_col", "r", "p", "n"};

    for (std::size_t a = 0; a < k; ++a) {
        std::vector<std::string> row{cols[a].name};
        for (std::size_t b = 0; b < k; ++b) {
            if (a == b) {
                row.push_back("1");
                continue;
            }
            // Pairwise deletion; constant columns leave the cell blank.
            std::vector<double> x, y;
            for (std::size_t i = 0; i < v.actors.size(); ++i) {
                if (cols[a].values[i] && cols[b].values[i]) {
                    x.push_back(*cols[a].values[i]);
                    y.push_back(*cols[b].values[i]);
                }
            }
            std::string cell;
            if (x.size() >= 3) {
                try {
                    const double r = pearson(x, y);
                    const double p = correlation_p_value(r, x.size());
                    cell = format_fixed(r, 3) + significance_stars(p);
                    if (b > a)
                        full.rows.push_back({cols[a].name, cols[b].name, format_full(r),
                                             format_full(p), std::to_string(x.size())});
                } catch (const Error& e) {
                    if (e.code() != errc::undefined_correlation) throw;
                }
            }
            row.push_back(cell);
        }
        t.rows.push_back(row);
    }
    write_table(dir, "table3", t);
    auto out = open_out(dir / "actor_correlations_full.csv");
    render_csv(out, full);
}

void cmd_network(const RunConfig& cfg, const Corpus& corpus, const InteractionGraph& graph,
                 const ActorVars& v, const fs::path& dir) {
    {
        Table t;
        t.header = {"source", "target", "weight"};
        for (const auto& [a, b, w] : graph.edges())
            t.rows.push_back({graph.nodes()[a], graph.nodes()[b], std::to_string(w)});
        auto out = open_out(dir / "edges.csv");
        render_csv(out, t);
    }
    {
        Table t;
        t.header = {"author_id", "degree", "betweenness", "rotating_weeks", "factor_score"};
        for (std::size_t i = 0; i < v.actors.size(); ++i)
            t.rows.push_back({v.actors[i], std::to_string(v.deg[i]), format_full(v.btw[i]),
                              v.rotation[i] ? std::to_string(*v.rotation[i]) : "",
                              format_full(v.factor.scores[i])});
        auto out = open_out(dir / "centrality.csv");
        render_csv(out, t);
    }
    {
        const GraphStats s = graph_stats(graph);
        Table t;
        t.title = "Network summary";
        t.header = {"Statistic", "Value"};
        t.rows = {
            {"Nodes", format_grouped(static_cast<long long>(s.n_nodes))},
            {"Edges", format_grouped(static_cast<long long>(s.n_edges))},
            {"Isolates", format_grouped(static_cast<long long>(s.n_isolates))},
            {"Average degree (all nodes)", format_fixed(s.avg_degree_all, 2)},
            {"Average degree (non-isolates)", format_fixed(s.avg_degree_non_isolates, 2)},
            {"Average distance (reachable pairs)",
             s.avg_distance ? format_fixed(*s.avg_distance, 2) : ""},
        };
        write_table(dir, "graph_stats", t);
    }
    {
        // Plot-ready degree distribution.
        std::map<long long, long long> hist;
        for (long long d : v.deg) ++hist[d];
        Table t;
        t.header = {"degree", "count"};
        for (const auto& [d, c] : hist)
            t.rows.push_back({std::to_string(d), std::to_string(c)});
        auto out = open_out(dir / "degree_distribution.csv");
        render_csv(out, t);
    }
    {
        const auto series = weekly_snapshots(corpus, parse_rule(cfg.interaction_rule),
                                             cfg.cumulative_weeks, cfg.threads);
        Table t;
        t.header = {"author_id"};
        for (std::size_t w = 0; w < series.n_weeks(); ++w)
            t.header.push_back("week_" + std::to_string(series.week_min + static_cast<int>(w)));
        for (std::size_t i = 0; i < series.actors.size(); ++i) {
            std::vector<std::string> row{series.actors[i]};
            for (double b : series.series[i]) row.push_back(format_full(b));
            t.rows.push_back(row);
        }
        auto out = open_out(dir / "weekly_betweenness.csv");
        render_csv(out, t);
    }
}

void cmd_similarity(const MatrixSet& m, const fs::path& dir) {
    for (const auto& [name, matrix] : m.vars) {
        std::string stem = name;
        for (auto& c : stem) c = c == ' ' ? '_' : static_cast<char>(std::tolower(c));
        auto out = open_out(dir / (stem + "_similarity.csv"));
        matrix.to_csv(out);
    }
    auto out = open_out(dir / "interaction.csv");
    m.interaction.to_csv(out);
}

void qap_table(const RunConfig& cfg, const MatrixSet& m, const std::string& table_stem,
               const fs::path& dir) {
    const auto opt = make_qap_options(cfg);
    Table t;
    t.title = "QAP correlations with the interaction network";
    t.header = {"Variable", "r"};
    Table full;
    full.header = {"variable", "r", "p", "permutations", "n_dyads", "seed"};
    for (const auto& [name, matrix] : m.vars) {
        // A constant variable has no defined correlation; report it missing.
        if (!has_dyad_variance(matrix) || !has_dyad_variance(m.interaction)) {
            t.rows.push_back({name, ""});
            continue;
        }
        const QapResult r = qap_correlation(m.interaction, matrix, opt);
        t.rows.push_back({name, format_fixed(r.r, 3) + significance_stars(r.p_value)});
        full.rows.push_back({name, format_full(r.r), format_full(r.p_value),
                             std::to_string(r.permutations), std::to_string(r.n_dyads),
                             std::to_string(r.seed)});
    }
    write_table(dir, table_stem, t);
    auto out = open_out(dir / (table_stem + "_full.csv"));
    render_csv(out, full);
}

void cmd_qap_groups(const RunConfig& cfg, const ActorVars& v, const MatrixSet& m,
                    const fs::path& dir) {
    const auto opt = make_qap_options(cfg);
    std::map<std::string, bool> is_manager;
    for (std::size_t i = 0; i < v.actors.size(); ++i)
        is_manager[v.actors[i]] = *v.role[i] == "1";

    std::vector<DyadMatrix> all{m.interaction};
    for (const auto& [name, matrix] : m.vars) all.push_back(matrix);

    struct Group {
        std::string label;
        std::vector<DyadMatrix> matrices;
    };
    std::vector<Group> groups;
    groups.push_back({"All", all});
    groups.push_back({"Content managers",
                      filter_group(all, [&](const std::string& a) { return is_manager[a]; })});
    groups.push_back({"Other employees",
                      filter_group(all, [&](const std::string& a) { return !is_manager[a]; })});

    Table t;
    t.title = "QAP correlations by group";
    t.header = {"Variable"};
    for (const auto& g : groups) t.header.push_back(g.label);
    Table full;
    full.header = {"group", "variable", "r", "p", "permutations", "n_dyads"};

    std::vector<std::vector<std::string>> cells(m.vars.size());
    for (const auto& g : groups) {
        for (std::size_t k = 0; k < m.vars.size(); ++k) {
            if (!has_dyad_variance(g.matrices[k + 1]) || !has_dyad_variance(g.matrices[0])) {
                cells[k].push_back("");
                continue;
            }
            const QapResult r = qap_correlation(g.matrices[0], g.matrices[k + 1], opt);
            cells[k].push_back(format_fixed(r.r, 3) + significance_stars(r.p_value));
            full.rows.push_back({g.label, m.vars[k].first, format_full(r.r),
                                 format_full(r.p_value), std::to_string(r.permutations),
                                 std::to_string(r.n_dyads)});
        }
    }
    for (std::size_t k = 0; k < m.vars.size(); ++k) {
        std::vector<std::string> row{m.vars[k].first};
        row.insert(row.end(), cells[k].begin(), cells[k].end());
        t.rows.push_back(row);
    }
    std::vector<std::string> nrow{"N (actors)"};
    for (const auto& g : groups)
        nrow.push_back(std::to_string(g.matrices[0].size()));
    t.rows.push_back(nrow);
    write_table(dir, "table5", t);
    auto out = open_out(dir / "table5_full.csv");
    render_csv(out, full);
}

void cmd_mrqap(const RunConfig& cfg, const MatrixSet& m, const fs::path& dir,
               std::vector<std::string>* warnings) {
    const auto opt = make_mrqap_options(cfg);
    auto var = [&](const std::string& name) -> const DyadMatrix& {
        for (const auto& [n, matrix] : m.vars)
            if (n == name) return matrix;
        throw Error(errc::internal, "unknown dyadic variable '" + name + "'");
    };
    // Constant predictors are dropped up front (they would make the design
    // singular); the fit is still reported over whatever remains.
    auto usable = [&](const std::string& name) {
        if (has_dyad_variance(var(name))) return true;
        if (warnings)
            warnings->push_back("predictor '" + name + "' is constant; dropped from MRQAP");
        return false;
    };
    auto block_of = [&](std::initializer_list<const char*> names) {
        std::vector<std::pair<std::string, DyadMatrix>> block;
        for (const char* n : names)
            if (usable(n)) block.emplace_back(n, var(n));
        return block;
    };

    // Hierarchical blocks: language, attributes, network position, style.
    std::vector<std::vector<std::pair<std::string, DyadMatrix>>> blocks;
    for (auto& block : {block_of({"Text", "Length"}), block_of({"Gender", "Role"}),
                        block_of({"Centrality", "Rotating leadership"}),
                        block_of({"Sentiment", "Emotionality", "Complexity"})})
        if (!block.empty()) blocks.push_back(block);
    if (blocks.empty())
        throw Error(errc::degenerate_input, "every MRQAP predictor is constant");
    auto models = hierarchical_models(m.interaction, blocks, opt);
    {
        // Parsimonious final model: the two dominant predictors only.
        std::vector<DyadMatrix> preds;
        std::vector<std::string> names;
        for (const char* n : {"Text", "Centrality"}) {
            if (!has_dyad_variance(var(n))) continue;
            preds.push_back(var(n));
            names.emplace_back(n);
        }
        if (!preds.empty())
            models.push_back(mrqap_dsp(m.interaction, preds, names, opt));
    }

    std::vector<std::string> predictor_order = {
        "Text", "Length", "Gender", "Role", "Centrality", "Rotating leadership",
        "Sentiment", "Emotionality", "Complexity"};

    Table t;
    t.title = "MRQAP models of the interaction network";
    t.header = {"Predictor"};
    for (std::size_t i = 0; i < models.size(); ++i)
        t.header.push_back("Model " + std::to_string(i + 1));
    Table full;
    full.header = {"model", "predictor", "beta", "p", "vif"};

    for (const auto& name : predictor_order) {
        std::vector<std::string> row{name};
        for (std::size_t mi = 0; mi < models.size(); ++mi) {
            const auto& fit = models[mi];
            std::string cell;
            for (std::size_t k = 0; k < fit.predictor_names.size(); ++k) {
                if (fit.predictor_names[k] != name) continue;
                cell = format_fixed(fit.beta[k], 6) + significance_stars(fit.p_values[k]);
                full.rows.push_back({std::to_string(mi + 1), name, format_full(fit.beta[k]),
                                     format_full(fit.p_values[k]), format_full(fit.vif[k])});
            }
            row.push_back(cell);
        }
        t.rows.push_back(row);
    }
    auto stat_row = [&](const std::string& label, auto getter) {
        std::vector<std::string> row{label};
        for (const auto& fit : models) row.push_back(getter(fit));
        t.rows.push_back(row);
    };
    stat_row("Intercept", [](const MrqapResult& f) { return format_fixed(f.intercept, 6); });
    stat_row("R²", [](const MrqapResult& f) { return format_fixed(f.r_squared, 4); });
    stat_row("Adjusted R²", [](const MrqapResult& f) { return format_fixed(f.adj_r_squared, 4); });
    stat_row("Dyads", [](const MrqapResult& f) { return std::to_string(f.n_dyads); });
    stat_row("Permutations", [](const MrqapResult& f) { return std::to_string(f.permutations); });
    write_table(dir, "table6", t);
    {
        auto out = open_out(dir / "table6_full.csv");
        render_csv(out, full);
        Table fit_full;
        fit_full.header = {"model", "intercept", "r_squared", "adj_r_squared", "n_dyads",
                           "permutations", "seed"};
        for (std::size_t mi = 0; mi < models.size(); ++mi) {
            const auto& f = models[mi];
            fit_full.rows.push_back({std::to_string(mi + 1), format_full(f.intercept),
                                     format_full(f.r_squared), format_full(f.adj_r_squared),
                                     std::to_string(f.n_dyads), std::to_string(f.permutations),
                                     std::to_string(f.seed)});
        }
        auto out2 = open_out(dir / "table6_models.csv");
        render_csv(out2, fit_full);
    }
}

void cmd_synth(const RunConfig& cfg, const fs::path& dir,
               std::vector<std::string>* warnings) {
    SynthConfig sc;
    sc.n_actors = cfg.synth_actors;
    sc.n_vocab_clusters = cfg.synth_clusters;
    sc.words_per_cluster = cfg.synth_words_per_cluster;
    sc.posts_per_actor = cfg.synth_posts_per_actor;
    sc.words_per_post = cfg.synth_words_per_post;
    sc.beta_text = cfg.synth_beta_text;
    sc.beta_centrality = cfg.synth_beta_centrality;
    sc.intercept = cfg.synth_intercept;
    sc.noise_scale = cfg.synth_noise;
    sc.seed = cfg.seed;
    sc.validate();
    const SynthResult r = generate(sc);
    if (warnings)
        warnings->insert(warnings->end(), r.warnings.begin(), r.warnings.end());

    auto posts = open_out(dir / "posts.jsonl");
    write_posts_jsonl(posts, r.corpus);
    auto authors = open_out(dir / "authors.csv");
    write_authors_csv(authors, r.corpus);
    auto inter = open_out(dir / "interaction_true.csv");
    r.interaction.to_csv(inter);
    auto text = open_out(dir / "text_similarity_true.csv");
    r.text_similarity.to_csv(text);
    auto act = open_out(dir / "activity_absdiff_true.csv");
    r.activity_absdiff.to_csv(act);
    Table clusters;
    clusters.header = {"author_id", "cluster"};
    for (std::size_t i = 0; i < r.corpus.actors().size(); ++i)
        clusters.rows.push_back({r.corpus.actors()[i], std::to_string(r.cluster_of[i])});
    auto cl = open_out(dir / "clusters.csv");
    render_csv(cl, clusters);
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

int run_subcommand(const std::string& name, RunConfig cfg) {
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);

    std::map<std::string, std::string> digests;
    std::vector<std::string> warnings;

    if (name == "synth") {
        cmd_synth(cfg, dir, &warnings);
    } else {
        Inputs in = load_inputs(cfg);
        digests = in.digests;
        if (name == "ingest") {
            cmd_ingest(cfg, in, dir);
        } else if (name == "corpus-stats") {
            cmd_corpus_stats(cfg, in, dir);
        } else {
            const PreprocessConfig pp = make_preprocess(cfg);
            const SentimentProvider provider = make_provider(cfg);
            const InteractionGraph graph =
                build_graph(in.corpus, parse_rule(cfg.interaction_rule));
            const ActorVars vars = build_actor_vars(in.corpus, graph, cfg, pp, provider);
            if (name == "actor-metrics") {
                cmd_actor_metrics(cfg, vars, dir);
            } else if (name == "actor-correlations") {
                cmd_actor_correlations(cfg, vars, dir);
            } else if (name == "network") {
                cmd_network(cfg, in.corpus, graph, vars, dir);
            } else {
                const MatrixSet m =
                    build_matrices(in.corpus, graph, vars, cfg, pp, &warnings);
                if (name == "similarity") {
                    cmd_similarity(m, dir);
                } else if (name == "qap") {
                    qap_table(cfg, m, "table4", dir);
                } else if (name == "qap-groups") {
                    cmd_qap_groups(cfg, vars, m, dir);
                } else if (name == "mrqap") {
                    cmd_mrqap(cfg, m, dir, &warnings);
                } else if (name == "report") {
                    cmd_ingest(cfg, in, dir);
                    cmd_corpus_stats(cfg, in, dir);
                    cmd_actor_metrics(cfg, vars, dir);
                    cmd_actor_correlations(cfg, vars, dir);
                    cmd_network(cfg, in.corpus, graph, vars, dir);
                    cmd_similarity(m, dir);
                    qap_table(cfg, m, "table4", dir);
                    cmd_qap_groups(cfg, vars, m, dir);
                    cmd_mrqap(cfg, m, dir, &warnings);
                } else {
                    throw Error(errc::internal, "unknown subcommand '" + name + "'");
                }
            }
        }
    }

    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    auto manifest = open_out(dir / "manifest.json");
    write_manifest(manifest, name, cfg, digests);
    return 0;
}

void emit_error_record(const std::string& code, int exit_code, const std::string& message) {
    // Machine-readable error record on stderr; message via csv-style escaping
    // is overkill, JSON-escape the essentials.
    std::string escaped;
    for (char c : message) {
        if (c == '"' || c == '\\') escaped += '\\';
        if (c == '\n') {
            escaped += "\\n";
            continue;
        }
        escaped += c;
    }
    std::cerr << "{\"error\":{\"code\":\"" << code << "\",\"exit_code\":" << exit_code
              << ",\"message\":\"" << escaped << "\"}}\n";
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    try {
        // The config file loads first so that explicit flags override it.
        for (int i = 1; i < argc; ++i) {
            const std::string arg = argv[i];
            if (arg == "--config" && i + 1 < argc)
                cfg = RunConfig::from_json_file(argv[i + 1]);
            else if (arg.rfind("--config=", 0) == 0)
                cfg = RunConfig::from_json_file(arg.substr(9));
        }
    } catch (const Error& e) {
        emit_error_record(errc_name(e.code()), e.exit_code(), e.what());
        return e.exit_code();
    }

    CLI::App app{"Socio-semantic network analytics pipeline"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override its keys)");
    app.add_option("--posts_path", cfg.posts_path, "Posts JSONL file");
    app.add_option("--authors_path", cfg.authors_path, "Author attributes CSV");
    app.add_option("--stopwords_path", cfg.stopwords_path, "Stop-word list (default: bundled)");
    app.add_option("--lexicon_path", cfg.lexicon_path, "Sentiment lexicon CSV");
    app.add_option("--external_scores_path", cfg.external_scores_path,
                   "Pre-computed post sentiment CSV");
    app.add_option("--language", cfg.language, "italian | english");
    app.add_option("--stemmer", cfg.stemmer, "snowball | none");
    app.add_option("--lowercase", cfg.lowercase, "Lowercase before tokenizing");
    app.add_option("--allow_empty", cfg.allow_empty, "Accept posts with empty text");
    app.add_option("--idf_scheme", cfg.idf_scheme, "smoothed | raw");
    app.add_option("--log_base", cfg.log_base, "natural | base10 | base2");
    app.add_option("--metric_stage", cfg.metric_stage, "pre-stem | post-stem");
    app.add_option("--oov_default", cfg.oov_default, "Sentiment for unknown words");
    app.add_option("--interaction_rule", cfg.interaction_rule,
                   "opener-and-previous | opener-only | all-prior-authors");
    app.add_option("--cumulative_weeks", cfg.cumulative_weeks, "Cumulative weekly snapshots");
    app.add_option("--rotation_threshold", cfg.rotation_threshold,
                   "Relative change counted as significant");
    app.add_option("--rotation_variant", cfg.rotation_variant,
                   "all-significant | strict-alternation");
    app.add_option("--distance_transform", cfg.distance_transform,
                   "raw | negate | max-minus");
    app.add_option("--binarize_interaction", cfg.binarize_interaction,
                   "Reduce tie weights to 0/1");
    app.add_option("--permutations", cfg.permutations, "Permutation count for QAP/MRQAP");
    app.add_option("--seed", cfg.seed, "Master RNG seed");
    app.add_option("--tail", cfg.tail, "two-tailed | one-tailed");
    app.add_option("--triangle", cfg.triangle, "upper | both");
    app.add_option("--threads", cfg.threads, "Worker threads (0 = hardware)");
    app.add_option("--synth_actors", cfg.synth_actors, "Synthetic actors");
    app.add_option("--synth_clusters", cfg.synth_clusters, "Vocabulary clusters");
    app.add_option("--synth_words_per_cluster", cfg.synth_words_per_cluster,
                   "Words per vocabulary cluster");
    app.add_option("--synth_posts_per_actor", cfg.synth_posts_per_actor, "Base posts per actor");
    app.add_option("--synth_words_per_post", cfg.synth_words_per_post, "Words per post");
    app.add_option("--synth_beta_text", cfg.synth_beta_text, "Planted text-similarity effect");
    app.add_option("--synth_beta_centrality", cfg.synth_beta_centrality,
                   "Planted activity-similarity effect");
    app.add_option("--synth_intercept", cfg.synth_intercept, "Tie-model intercept");
    app.add_option("--synth_noise", cfg.synth_noise, "Tie-model noise scale");
    app.add_option("--output_dir", cfg.output_dir, "Artifact directory");

    for (const char* name : {"ingest", "corpus-stats", "actor-metrics", "actor-correlations",
                             "network", "similarity", "qap", "qap-groups", "mrqap", "synth",
                             "report"})
        app.add_subcommand(name)->fallthrough();  // global flags after the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    try {
        return run_subcommand(sub, cfg);
    } catch (const Error& e) {
        emit_error_record(errc_name(e.code()), e.exit_code(), e.what());
        return e.exit_code();
    } catch (const std::exception& e) {
        emit_error_record("InternalError", 4, e.what());
        return 4;
    }
}
