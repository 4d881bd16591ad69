#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssna/corpus.hpp"

namespace ssna {

// Which earlier posts in a thread a new post interacts with.
enum class InteractionRule {
    opener_and_previous,  // thread opener + author of the immediately preceding post
    opener_only,
    all_prior_authors,
};

// Simple undirected graph: no self-loops, no multi-edges; weight counts
// interactions. Nodes cover every forum user, isolates included.
class InteractionGraph {
public:
    explicit InteractionGraph(std::vector<std::string> nodes);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<std::string>& nodes() const { return nodes_; }

    void add_interaction(std::size_t a, std::size_t b);  // self-interactions ignored

    const std::vector<std::vector<std::size_t>>& adjacency() const { return adj_; }
    long long edge_weight(std::size_t a, std::size_t b) const;
    std::size_t n_edges() const { return n_edges_; }

    // source,target,weight triples with source < target by node index.
    std::vector<std::tuple<std::size_t, std::size_t, long long>> edges() const;

private:
    std::vector<std::string> nodes_;
    std::vector<std::vector<std::size_t>> adj_;  // sorted neighbor lists
    std::map<std::pair<std::size_t, std::size_t>, long long> weights_;
    std::size_t n_edges_ = 0;
};

InteractionGraph build_graph(const Corpus& corpus,
                             InteractionRule rule = InteractionRule::opener_and_previous);

std::vector<long long> degree(const InteractionGraph& graph);

// Brandes, unnormalized, over unordered pairs, on the unweighted skeleton.
// Parallel over sources with a deterministic fixed-order reduction.
std::vector<double> betweenness(const InteractionGraph& graph, int threads = 0);

struct GraphStats {
    std::size_t n_nodes = 0;
    std::size_t n_edges = 0;
    std::size_t n_isolates = 0;
    double avg_degree_all = 0.0;           // includes isolates
    double avg_degree_non_isolates = 0.0;  // excludes isolates
    std::optional<double> avg_distance;    // geodesics over reachable pairs
};

GraphStats graph_stats(const InteractionGraph& graph);

// Per-actor weekly betweenness trajectories; actors inactive in a week get 0.
struct CentralitySeries {
    std::vector<std::string> actors;
    int week_min = 0;
    int week_max = 0;
    // series[a][t] = betweenness of actor a in week week_min + t.
    std::vector<std::vector<double>> series;

    std::size_t n_weeks() const { return series.empty() ? 0 : series.front().size(); }
};

CentralitySeries weekly_snapshots(const Corpus& corpus,
                                  InteractionRule rule = InteractionRule::opener_and_previous,
                                  bool cumulative = false, int threads = 0);

enum class RotationVariant {
    all_significant,     // every significant week-to-week change counts
    strict_alternation,  // only significant changes alternating in direction
};

// Counts weeks with a relative change of at least theta; a move off a zero
// baseline counts as significant. nullopt for series shorter than 2.
std::optional<int> rotating_leadership(const std::vector<double>& series,
                                       double theta = 0.30,
                                       RotationVariant variant = RotationVariant::all_significant);

}  // namespace ssna
