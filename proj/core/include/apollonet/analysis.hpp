#ifndef APOLLONET_ANALYSIS_HPP
#define APOLLONET_ANALYSIS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "apollonet/graph.hpp"
#include "apollonet/histogram.hpp"
#include "apollonet/rational.hpp"
#include "apollonet/rng.hpp"

namespace apollonet::analysis {

Histogram degree_histogram(const Graph& g);

/// Counts of clique parallel degrees; requires the clique registry.
Histogram parallel_degree_histogram(const Graph& g);

/// Mean parallel degree over all registry cliques, = t/Nc.
double empirical_avg_parallel_degree(const Graph& g);

/// rho-hat = mean parallel degree - fraction of cliques with degree 1.
double empirical_parallel_coefficient(const Graph& g);

/// Fraction of realized edges among v's neighbors, counted explicitly on
/// the adjacency structure (never via the closed-form law). Exact rational.
Rational local_clustering(const Graph& g, VertexId v);

/// Arithmetic mean of local clustering over all vertices.
double average_clustering(const Graph& g);

/// Power-law exponent estimate 1 + n / sum(log(k_i / (k_min - 1/2))) over
/// the samples with k_i >= k_min.
double gamma_mle(std::span<const std::uint32_t> degrees, std::uint32_t k_min);
double gamma_mle(const Histogram& degrees, std::uint32_t k_min);

struct AplEstimate {
    enum class Method { exact, sampled };
    double mean_distance = 0.0;
    std::uint64_t pairs_evaluated = 0;
    Method method = Method::exact;
    double std_error = 0.0;  // sampled only
};

/// Mean shortest-path distance over all unordered pairs (BFS from every
/// vertex). Throws if the graph exceeds max_vertices or is disconnected.
AplEstimate apl_exact(const Graph& g, std::uint32_t max_vertices = 5000);

/// Mean BFS distance over num_pairs independent uniform distinct pairs,
/// with the standard error of the mean.
AplEstimate apl_sampled(const Graph& g, std::uint64_t num_pairs, RngStream& rng);

struct ComparisonRow {
    std::uint64_t value = 0;
    double empirical_prob = 0.0;       // mean pmf across runs
    double theoretical_prob = 0.0;
    double abs_error = 0.0;            // |mean empirical - theoretical|
    double std_dev_across_runs = 0.0;  // sample std-dev, 0 for a single run
};

/// Per-value comparison of empirical pmfs against a theoretical law,
/// averaged across runs. Rows cover the union of all observed values.
std::vector<ComparisonRow> compare_to_theory(
    std::span<const Histogram> runs, const std::function<double(std::uint64_t)>& law);

/// True iff, for every pair (i, j), the shortest path restricted to
/// vertices <= max(i, j) is as short as the unrestricted one.
bool ordering_shortest_path_check(const Graph& g, std::uint32_t max_vertices = 2000);

}  // namespace apollonet::analysis

#endif
