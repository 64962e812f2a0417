#ifndef APOLLONET_GRAPH_HPP
#define APOLLONET_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace apollonet {

/// Vertex ordinal, dense 0..N-1 in insertion order.
using VertexId = std::uint32_t;
/// Clique ordinal, dense 0..Nc-1 in creation order.
using CliqueId = std::uint32_t;

/// Growable undirected simple graph with an explicit (d+1)-clique registry.
///
/// All Apollonian constructions share one primitive: insert a vertex into a
/// registered (d+1)-clique, fully connected to its members. Each insertion
/// appends d+1 child cliques (the selected clique with one member swapped
/// for the new vertex) and bumps the selected clique's parallel degree.
///
/// The registry is append-only and member lists are kept sorted, so the
/// adjacency lists stay sorted without ever re-sorting: a new vertex has the
/// largest ordinal and is always appended at the tail.
///
/// Single writer during construction; safe for any number of concurrent
/// readers afterwards.
class Graph {
public:
    /// Empty graph; placeholder until assigned from a factory.
    Graph() = default;

    /// Complete graph on d+2 vertices with all d+2 facet cliques registered
    /// (facet c omits vertex c), every parallel degree 0.
    static Graph seed(int dimension);

    /// Complete graph on d+1 vertices with a single registered clique.
    static Graph simplex(int dimension);

    /// Build from an explicit edge set (no clique registry). Rejects
    /// self-loops, duplicate edges and endpoints >= vertex_count.
    static Graph from_edge_list(int dimension, VertexId vertex_count,
                                std::span<const std::pair<VertexId, VertexId>> edges);

    /// The shared insertion primitive. Returns the new vertex's id.
    VertexId insert_vertex(CliqueId clique);

    /// Pre-size internal storage for `steps` further insertions.
    void reserve_insertions(std::uint64_t steps);

    int dimension() const { return dimension_; }
    VertexId vertex_count() const { return static_cast<VertexId>(adjacency_.size()); }
    std::uint64_t edge_count() const { return edge_count_; }
    /// Number of insertions performed since seeding.
    std::uint64_t step_count() const { return step_count_; }
    VertexId seed_vertex_count() const { return seed_vertex_count_; }
    CliqueId seed_clique_count() const { return seed_clique_count_; }

    std::uint32_t degree(VertexId v) const;
    std::span<const VertexId> neighbors(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;

    /// Number of registry cliques containing v. For any seeded-and-grown
    /// graph this equals d*degree(v) - d^2 + 1.
    std::uint32_t clique_membership_count(VertexId v) const;

    /// False for graphs loaded from a bare edge list; clique accessors and
    /// parallel-degree statistics are unavailable then.
    bool has_clique_registry() const { return has_registry_; }
    CliqueId clique_count() const { return static_cast<CliqueId>(clique_parallel_degree_.size()); }
    std::span<const VertexId> clique_members(CliqueId c) const;
    std::uint32_t clique_parallel_degree(CliqueId c) const;

    /// Restore a registry onto a graph built by from_edge_list (sidecar
    /// loading). `members` is flat, dimension+1 ids per clique. Validates
    /// that every record is a genuine clique of this graph.
    void attach_clique_registry(const std::vector<VertexId>& members,
                                const std::vector<std::uint32_t>& parallel_degrees);

private:
    void require_vertex(VertexId v) const;
    void require_clique(CliqueId c) const;

    int dimension_ = 0;
    std::vector<std::vector<VertexId>> adjacency_;  // sorted, symmetric, simple
    std::vector<VertexId> clique_members_;          // flat, stride dimension_+1
    std::vector<std::uint32_t> clique_parallel_degree_;
    std::vector<std::uint32_t> membership_count_;   // registry cliques containing v
    std::uint64_t edge_count_ = 0;
    std::uint64_t step_count_ = 0;
    VertexId seed_vertex_count_ = 0;
    CliqueId seed_clique_count_ = 0;
    bool has_registry_ = false;
};

/// Check every structural identity of a seeded-and-grown graph:
///   N  = seed vertices + t
///   Nc = seed cliques + t*(d+1)
///   sum of parallel degrees = t
///   per vertex: registry membership = d*degree - d^2 + 1
///   adjacency sorted / symmetric / simple
///   clique members pairwise adjacent (exhaustive while the pair count fits
///   adjacency_check_budget, deterministic stride sampling beyond)
/// Throws std::logic_error naming the first violated identity.
void verify_structure(const Graph& g, std::uint64_t adjacency_check_budget = 10'000'000);

}  // namespace apollonet

#endif
