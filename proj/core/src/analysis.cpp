#include "apollonet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace apollonet::analysis {

namespace {

// 16-bit hop counts keep the randomly-indexed distance array cache-resident
using Distance = std::uint16_t;
constexpr Distance kUnreached = std::numeric_limits<Distance>::max();

// flat compressed adjacency; repeated BFS over the per-vertex vectors of
// Graph wastes most of its time on pointer chasing
struct FlatAdjacency {
    explicit FlatAdjacency(const Graph& g) {
        const VertexId n = g.vertex_count();
        offsets.reserve(static_cast<std::size_t>(n) + 1);
        offsets.push_back(0);
        targets.reserve(2 * g.edge_count());
        for (VertexId v = 0; v < n; ++v) {
            const auto adj = g.neighbors(v);
            targets.insert(targets.end(), adj.begin(), adj.end());
            offsets.push_back(static_cast<std::uint64_t>(targets.size()));
        }
    }

    VertexId vertex_count() const { return static_cast<VertexId>(offsets.size() - 1); }

    std::vector<std::uint64_t> offsets;
    std::vector<VertexId> targets;
};

// hop counts from source; vertices above cap (if any) are not traversed
template <bool Capped>
void bfs_impl(const FlatAdjacency& g, VertexId source, VertexId cap,
              std::vector<Distance>& dist, std::vector<VertexId>& queue) {
    dist.assign(g.vertex_count(), kUnreached);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId u = queue[head];
        const Distance next = static_cast<Distance>(dist[u] + 1);
        if (next == kUnreached) throw std::length_error("path length exceeds 16-bit hop counter");
        for (std::uint64_t i = g.offsets[u]; i < g.offsets[u + 1]; ++i) {
            const VertexId w = g.targets[i];
            if constexpr (Capped) {
                if (w > cap) continue;
            }
            if (dist[w] != kUnreached) continue;
            dist[w] = next;
            queue.push_back(w);
        }
    }
}

void bfs(const FlatAdjacency& g, VertexId source, std::vector<Distance>& dist,
         std::vector<VertexId>& queue) {
    bfs_impl<false>(g, source, 0, dist, queue);
}

void bfs_capped(const FlatAdjacency& g, VertexId source, VertexId cap,
                std::vector<Distance>& dist, std::vector<VertexId>& queue) {
    bfs_impl<true>(g, source, cap, dist, queue);
}

std::uint64_t intersection_size(std::span<const VertexId> a, std::span<const VertexId> b) {
    std::uint64_t n = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else { ++n; ++i; ++j; }
    }
    return n;
}

}  // namespace

Histogram degree_histogram(const Graph& g) {
    Histogram h;
    for (VertexId v = 0; v < g.vertex_count(); ++v) h.add(g.degree(v));
    return h;
}

Histogram parallel_degree_histogram(const Graph& g) {
    if (!g.has_clique_registry())
        throw std::logic_error("parallel-degree histogram needs the clique registry");
    Histogram h;
    for (CliqueId c = 0; c < g.clique_count(); ++c) h.add(g.clique_parallel_degree(c));
    return h;
}

double empirical_avg_parallel_degree(const Graph& g) {
    return parallel_degree_histogram(g).mean();
}

double empirical_parallel_coefficient(const Graph& g) {
    const Histogram h = parallel_degree_histogram(g);
    return h.mean() - h.pmf(1);
}

Rational local_clustering(const Graph& g, VertexId v) {
    const std::int64_t k = g.degree(v);
    if (k < 2)
        throw std::invalid_argument("clustering undefined for degree < 2 (vertex " +
                                    std::to_string(v) + ")");
    const auto nv = g.neighbors(v);
    std::uint64_t twice_edges = 0;  // each neighborhood edge counted from both endpoints
    for (const VertexId u : nv) twice_edges += intersection_size(g.neighbors(u), nv);
    return Rational(static_cast<std::int64_t>(twice_edges), k * (k - 1));
}

double average_clustering(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    double sum = 0.0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) sum += local_clustering(g, v).to_double();
    return sum / g.vertex_count();
}

double gamma_mle(std::span<const std::uint32_t> degrees, std::uint32_t k_min) {
    if (k_min < 1) throw std::invalid_argument("k_min must be >= 1");
    const double pivot = k_min - 0.5;
    std::uint64_t n = 0;
    double log_sum = 0.0;
    for (const std::uint32_t k : degrees) {
        if (k < k_min) continue;
        ++n;
        log_sum += std::log(k / pivot);
    }
    if (n == 0)
        throw std::invalid_argument("no degree samples >= k_min=" + std::to_string(k_min));
    return 1.0 + static_cast<double>(n) / log_sum;
}

double gamma_mle(const Histogram& degrees, std::uint32_t k_min) {
    if (k_min < 1) throw std::invalid_argument("k_min must be >= 1");
    const double pivot = k_min - 0.5;
    std::uint64_t n = 0;
    double log_sum = 0.0;
    for (const auto& [k, count] : degrees.counts()) {
        if (k < k_min) continue;
        n += count;
        log_sum += static_cast<double>(count) * std::log(static_cast<double>(k) / pivot);
    }
    if (n == 0)
        throw std::invalid_argument("no degree samples >= k_min=" + std::to_string(k_min));
    return 1.0 + static_cast<double>(n) / log_sum;
}

AplEstimate apl_exact(const Graph& g, std::uint32_t max_vertices) {
    const std::uint64_t n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("path length needs at least two vertices");
    if (n > max_vertices)
        throw std::invalid_argument("graph too large for exact path lengths (" + std::to_string(n) +
                                    " > " + std::to_string(max_vertices) + ")");

    const FlatAdjacency flat(g);
    std::vector<Distance> dist;
    std::vector<VertexId> queue;
    std::uint64_t distance_sum = 0;
    for (VertexId s = 0; s < n; ++s) {
        bfs(flat, s, dist, queue);
        if (queue.size() != n) throw std::runtime_error("internal error: graph is disconnected");
        for (const Distance d : dist) distance_sum += d;
    }

    AplEstimate est;
    est.method = AplEstimate::Method::exact;
    est.pairs_evaluated = n * (n - 1) / 2;
    est.mean_distance = static_cast<double>(distance_sum) / static_cast<double>(n * (n - 1));
    est.std_error = 0.0;
    return est;
}

AplEstimate apl_sampled(const Graph& g, std::uint64_t num_pairs, RngStream& rng) {
    const std::uint64_t n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("path length needs at least two vertices");
    if (num_pairs < 1) throw std::invalid_argument("need at least one sampled pair");

    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(num_pairs);
    for (std::uint64_t i = 0; i < num_pairs; ++i) {
        VertexId u, v;
        do {
            u = static_cast<VertexId>(rng.bounded(n));
            v = static_cast<VertexId>(rng.bounded(n));
        } while (u == v);
        pairs.emplace_back(u, v);
    }

    // group by source so each distinct source costs one BFS
    std::sort(pairs.begin(), pairs.end());

    const FlatAdjacency flat(g);
    std::vector<Distance> dist;
    std::vector<VertexId> queue;
    std::uint64_t sum = 0, sum_sq = 0;
    VertexId current = g.vertex_count();  // no valid source yet
    for (const auto& [u, v] : pairs) {
        if (u != current) {
            bfs(flat, u, dist, queue);
            current = u;
        }
        const std::uint64_t d = dist[v];
        if (d == kUnreached) throw std::runtime_error("internal error: graph is disconnected");
        sum += d;
        sum_sq += d * d;
    }

    const double count = static_cast<double>(num_pairs);
    const double mean = static_cast<double>(sum) / count;
    double std_error = 0.0;
    if (num_pairs > 1) {
        const double variance =
            (static_cast<double>(sum_sq) - count * mean * mean) / (count - 1.0);
        std_error = std::sqrt(std::max(0.0, variance) / count);
    }

    AplEstimate est;
    est.method = AplEstimate::Method::sampled;
    est.pairs_evaluated = num_pairs;
    est.mean_distance = mean;
    est.std_error = std_error;
    return est;
}

std::vector<ComparisonRow> compare_to_theory(std::span<const Histogram> runs,
                                             const std::function<double(std::uint64_t)>& law) {
    if (runs.empty()) throw std::invalid_argument("comparison needs at least one run");

    std::set<std::uint64_t> values;
    for (const Histogram& h : runs)
        for (const auto& [value, count] : h.counts()) values.insert(value);

    std::vector<ComparisonRow> rows;
    rows.reserve(values.size());
    for (const std::uint64_t value : values) {
        double mean = 0.0;
        for (const Histogram& h : runs) mean += h.pmf(value);
        mean /= static_cast<double>(runs.size());

        double std_dev = 0.0;
        if (runs.size() > 1) {
            double ss = 0.0;
            for (const Histogram& h : runs) {
                const double delta = h.pmf(value) - mean;
                ss += delta * delta;
            }
            std_dev = std::sqrt(ss / static_cast<double>(runs.size() - 1));
        }

        ComparisonRow row;
        row.value = value;
        row.empirical_prob = mean;
        row.theoretical_prob = law(value);
        row.abs_error = std::abs(mean - row.theoretical_prob);
        row.std_dev_across_runs = std_dev;
        rows.push_back(row);
    }
    return rows;
}

bool ordering_shortest_path_check(const Graph& g, std::uint32_t max_vertices) {
    const std::uint64_t n = g.vertex_count();
    if (n > max_vertices)
        throw std::invalid_argument("graph too large for the brute-force ordering check");

    const FlatAdjacency flat(g);
    std::vector<Distance> unrestricted, restricted;
    std::vector<VertexId> queue;
    for (VertexId j = 1; j < n; ++j) {
        bfs(flat, j, unrestricted, queue);
        bfs_capped(flat, j, j, restricted, queue);
        for (VertexId i = 0; i < j; ++i)
            if (restricted[i] != unrestricted[i]) return false;
    }
    return true;
}

}  // namespace apollonet::analysis
