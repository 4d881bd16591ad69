#include "ssna/network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <tuple>

#include "ssna/parallel.hpp"

namespace ssna {

InteractionGraph::InteractionGraph(std::vector<std::string> nodes)
    : nodes_(std::move(nodes)), adj_(nodes_.size()) {}

void InteractionGraph::add_interaction(std::size_t a, std::size_t b) {
    if (a == b) return;
    const auto key = std::minmax(a, b);
    auto [it, inserted] = weights_.emplace(std::make_pair(key.first, key.second), 1LL);
    if (!inserted) {
        ++it->second;
        return;
    }
    ++n_edges_;
    adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
}

long long InteractionGraph::edge_weight(std::size_t a, std::size_t b) const {
    const auto key = std::minmax(a, b);
    const auto it = weights_.find(std::make_pair(key.first, key.second));
    return it == weights_.end() ? 0 : it->second;
}

std::vector<std::tuple<std::size_t, std::size_t, long long>> InteractionGraph::edges() const {
    std::vector<std::tuple<std::size_t, std::size_t, long long>> out;
    out.reserve(weights_.size());
    for (const auto& [key, w] : weights_) out.emplace_back(key.first, key.second, w);
    return out;
}

namespace {

// Interactions generated by one post, given the earlier posts in its thread.
void apply_rule(InteractionRule rule, const Corpus& corpus,
                const std::vector<std::size_t>& thread_posts, std::size_t pos,
                const std::map<std::string, std::size_t>& actor_index,
                InteractionGraph& graph) {
    if (pos == 0) return;  // thread opener interacts with nobody yet
    const auto& posts = corpus.posts();
    const std::string& commenter = posts[thread_posts[pos]].author_id;
    const std::size_t c = actor_index.at(commenter);
    switch (rule) {
        case InteractionRule::opener_only: {
            graph.add_interaction(c, actor_index.at(posts[thread_posts[0]].author_id));
            break;
        }
        case InteractionRule::opener_and_previous: {
            const std::size_t opener = actor_index.at(posts[thread_posts[0]].author_id);
            const std::size_t prev =
                actor_index.at(posts[thread_posts[pos - 1]].author_id);
            graph.add_interaction(c, opener);
            if (prev != opener) graph.add_interaction(c, prev);
            break;
        }
        case InteractionRule::all_prior_authors: {
            std::set<std::size_t> prior;
            for (std::size_t k = 0; k < pos; ++k)
                prior.insert(actor_index.at(posts[thread_posts[k]].author_id));
            for (auto p : prior) graph.add_interaction(c, p);
            break;
        }
    }
}

std::map<std::string, std::size_t> make_actor_index(const Corpus& corpus) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < corpus.actors().size(); ++i)
        index.emplace(corpus.actors()[i], i);
    return index;
}

}  // namespace

InteractionGraph build_graph(const Corpus& corpus, InteractionRule rule) {
    InteractionGraph graph(corpus.actors());
    const auto actor_index = make_actor_index(corpus);
    for (const auto& [thread_id, post_ids] : corpus.threads())
        for (std::size_t pos = 1; pos < post_ids.size(); ++pos)
            apply_rule(rule, corpus, post_ids, pos, actor_index, graph);
    return graph;
}

std::vector<long long> degree(const InteractionGraph& graph) {
    std::vector<long long> out(graph.size());
    for (std::size_t i = 0; i < graph.size(); ++i)
        out[i] = static_cast<long long>(graph.adjacency()[i].size());
    return out;
}

std::vector<double> betweenness(const InteractionGraph& graph, int threads) {
    const std::size_t n = graph.size();
    const auto& adj = graph.adjacency();
    // Per-source dependency accumulation (Brandes); per-source partials are
    // reduced in fixed source order.
    std::vector<std::vector<double>> partial(n);
    parallel_for(n, threads, [&](std::size_t s) {
        if (adj[s].empty()) return;
        std::vector<double> delta(n, 0.0);
        std::vector<double> sigma(n, 0.0);
        std::vector<int> dist(n, -1);
        std::vector<std::vector<std::size_t>> pred(n);
        std::vector<std::size_t> order;
        order.reserve(n);
        std::deque<std::size_t> queue;
        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (const std::size_t w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    pred[w].push_back(v);
                }
            }
        }
        std::vector<double> bc(n, 0.0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const std::size_t w = *it;
            for (const std::size_t v : pred[w])
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) bc[w] = delta[w];
        }
        partial[s] = std::move(bc);
    });
    std::vector<double> out(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        if (partial[s].empty()) continue;
        for (std::size_t v = 0; v < n; ++v) out[v] += partial[s][v];
    }
    // Each unordered pair was counted from both endpoints.
    for (auto& v : out) v /= 2.0;
    return out;
}

GraphStats graph_stats(const InteractionGraph& graph) {
    GraphStats stats;
    stats.n_nodes = graph.size();
    stats.n_edges = graph.n_edges();
    const auto deg = degree(graph);
    long long deg_sum = 0;
    std::size_t non_isolates = 0;
    for (const auto d : deg) {
        deg_sum += d;
        if (d > 0) ++non_isolates;
    }
    stats.n_isolates = graph.size() - non_isolates;
    stats.avg_degree_all =
        graph.size() ? static_cast<double>(deg_sum) / static_cast<double>(graph.size()) : 0.0;
    stats.avg_degree_non_isolates =
        non_isolates ? static_cast<double>(deg_sum) / static_cast<double>(non_isolates) : 0.0;
    if (stats.n_edges == 0) return stats;  // distances undefined
    // BFS all-pairs over reachable pairs.
    const auto& adj = graph.adjacency();
    long long pair_count = 0;
    long long dist_sum = 0;
    std::vector<int> dist(graph.size());
    for (std::size_t s = 0; s < graph.size(); ++s) {
        if (adj[s].empty()) continue;
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            for (const std::size_t w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (std::size_t t = s + 1; t < graph.size(); ++t) {
            if (dist[t] > 0) {
                ++pair_count;
                dist_sum += dist[t];
            }
        }
    }
    if (pair_count > 0)
        stats.avg_distance = static_cast<double>(dist_sum) / static_cast<double>(pair_count);
    return stats;
}

CentralitySeries weekly_snapshots(const Corpus& corpus, InteractionRule rule,
                                  bool cumulative, int threads) {
    CentralitySeries cs;
    cs.actors = corpus.actors();
    cs.week_min = corpus.min_week();
    cs.week_max = corpus.max_week();
    const std::size_t n_weeks = static_cast<std::size_t>(cs.week_max - cs.week_min) + 1;
    const auto actor_index = make_actor_index(corpus);
    cs.series.assign(cs.actors.size(), std::vector<double>(n_weeks, 0.0));

    std::vector<std::vector<double>> weekly(n_weeks);
    parallel_for(n_weeks, threads, [&](std::size_t t) {
        const int week = cs.week_min + static_cast<int>(t);
        InteractionGraph graph(corpus.actors());
        // The edge belongs to the week of the commenting post; the opener /
        // preceding post may be older.
        for (const auto& [thread_id, post_ids] : corpus.threads()) {
            for (std::size_t pos = 1; pos < post_ids.size(); ++pos) {
                const int w = corpus.posts()[post_ids[pos]].week;
                const bool in_window = cumulative ? (w <= week) : (w == week);
                if (in_window) apply_rule(rule, corpus, post_ids, pos, actor_index, graph);
            }
        }
        weekly[t] = betweenness(graph, 1);
    });
    for (std::size_t t = 0; t < n_weeks; ++t)
        for (std::size_t a = 0; a < cs.actors.size(); ++a)
            cs.series[a][t] = weekly[t][a];
    return cs;
}

std::optional<int> rotating_leadership(const std::vector<double>& series, double theta,
                                       RotationVariant variant) {
    if (series.size() < 2) return std::nullopt;
    int count = 0;
    int last_direction = 0;  // strict-alternation state
    for (std::size_t t = 1; t < series.size(); ++t) {
        const double prev = series[t - 1];
        const double cur = series[t];
        bool significant;
        if (prev > 0.0)
            significant = std::fabs(cur - prev) / prev >= theta;
        else
            significant = cur > 0.0;
        if (!significant) continue;
        const int direction = cur > prev ? 1 : -1;
        if (variant == RotationVariant::strict_alternation) {
            if (direction == last_direction) continue;
            last_direction = direction;
        }
        ++count;
    }
    return count;
}

}  // namespace ssna
