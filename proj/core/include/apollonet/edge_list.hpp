#ifndef APOLLONET_EDGE_LIST_HPP
#define APOLLONET_EDGE_LIST_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include "apollonet/graph.hpp"

namespace apollonet::io {

/// Metadata carried in the '#' header line of an edge-list file.
struct EdgeListHeader {
    std::string model;
    int dimension = 0;
    std::uint64_t seed = 0;
    std::uint64_t vertex_count = 0;
    std::uint64_t clique_count = 0;
};

/// Plain-text edge list: one header line
///   # model=<m> d=<d> seed=<s> n=<N> nc=<Nc>
/// then one "u<TAB>v" line per edge with u < v, sorted by (u, v).
void write_edge_list(const std::filesystem::path& path, const Graph& g,
                     const std::string& model, std::uint64_t seed);

/// Clique registry sidecar: one line per clique, the d+1 member ids then
/// the parallel degree, space-separated.
void write_clique_sidecar(const std::filesystem::path& path, const Graph& g);

/// Conventional sidecar name: the edge-list path with extension ".cliques".
std::filesystem::path sidecar_path(const std::filesystem::path& edge_list_path);

struct LoadedGraph {
    Graph graph;
    EdgeListHeader header;
    bool has_cliques = false;  // false when no sidecar was found
};

/// Parse an edge-list file; when load_sidecar is set and the conventional
/// sidecar exists, restore the clique registry from it. Malformed input
/// (bad header, self-loops, duplicate edges, out-of-range ids) raises
/// std::runtime_error naming the file and line.
LoadedGraph read_edge_list(const std::filesystem::path& path, bool load_sidecar = true);

}  // namespace apollonet::io

#endif
