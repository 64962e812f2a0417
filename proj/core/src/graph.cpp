#include "apollonet/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace apollonet {

namespace {

void require_dimension(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1, got " + std::to_string(d));
}

}  // namespace

Graph Graph::seed(int dimension) {
    require_dimension(dimension);
    const VertexId n = static_cast<VertexId>(dimension + 2);

    Graph g;
    g.dimension_ = dimension;
    g.adjacency_.resize(n);
    for (VertexId i = 0; i < n; ++i) {
        g.adjacency_[i].reserve(n - 1);
        for (VertexId j = 0; j < n; ++j)
            if (j != i) g.adjacency_[i].push_back(j);
    }
    g.edge_count_ = static_cast<std::uint64_t>(n) * (n - 1) / 2;

    // facet c omits vertex c
    g.clique_members_.reserve(static_cast<std::size_t>(n) * (n - 1));
    g.membership_count_.assign(n, 0);
    for (VertexId omit = 0; omit < n; ++omit) {
        for (VertexId j = 0; j < n; ++j) {
            if (j == omit) continue;
            g.clique_members_.push_back(j);
            ++g.membership_count_[j];
        }
        g.clique_parallel_degree_.push_back(0);
    }
    g.seed_vertex_count_ = n;
    g.seed_clique_count_ = n;
    g.has_registry_ = true;
    return g;
}

Graph Graph::simplex(int dimension) {
    require_dimension(dimension);
    const VertexId n = static_cast<VertexId>(dimension + 1);

    Graph g;
    g.dimension_ = dimension;
    g.adjacency_.resize(n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 0; j < n; ++j)
            if (j != i) g.adjacency_[i].push_back(j);
    g.edge_count_ = static_cast<std::uint64_t>(n) * (n - 1) / 2;

    for (VertexId j = 0; j < n; ++j) g.clique_members_.push_back(j);
    g.clique_parallel_degree_.push_back(0);
    g.membership_count_.assign(n, 1);
    g.seed_vertex_count_ = n;
    g.seed_clique_count_ = 1;
    g.has_registry_ = true;
    return g;
}

Graph Graph::from_edge_list(int dimension, VertexId vertex_count,
                            std::span<const std::pair<VertexId, VertexId>> edges) {
    require_dimension(dimension);

    Graph g;
    g.dimension_ = dimension;
    g.adjacency_.resize(vertex_count);
    for (const auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("edge list contains self-loop at vertex " + std::to_string(u));
        if (u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                        std::to_string(v));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (VertexId v = 0; v < vertex_count; ++v) {
        auto& adj = g.adjacency_[v];
        std::sort(adj.begin(), adj.end());
        const auto dup = std::adjacent_find(adj.begin(), adj.end());
        if (dup != adj.end())
            throw std::invalid_argument("duplicate edge " + std::to_string(v) + "-" +
                                        std::to_string(*dup));
    }
    g.edge_count_ = edges.size();
    g.membership_count_.assign(vertex_count, 0);
    g.seed_vertex_count_ = vertex_count;
    g.seed_clique_count_ = 0;
    g.has_registry_ = false;
    return g;
}

void Graph::reserve_insertions(std::uint64_t steps) {
    const std::size_t stride = static_cast<std::size_t>(dimension_) + 1;
    adjacency_.reserve(adjacency_.size() + steps);
    clique_members_.reserve(clique_members_.size() + steps * stride * stride);
    clique_parallel_degree_.reserve(clique_parallel_degree_.size() + steps * stride);
    membership_count_.reserve(membership_count_.size() + steps);
}

VertexId Graph::insert_vertex(CliqueId clique) {
    require_clique(clique);
    const std::size_t stride = static_cast<std::size_t>(dimension_) + 1;
    const VertexId v = vertex_count();

    // copy: clique_members_ reallocates below
    const std::vector<VertexId> members(clique_members_.begin() + clique * stride,
                                        clique_members_.begin() + (clique + 1) * stride);

    adjacency_.emplace_back(members.begin(), members.end());
    for (const VertexId u : members) adjacency_[u].push_back(v);
    edge_count_ += stride;

    // one child clique per replaced member; members are sorted and v is the
    // largest ordinal, so child member lists stay sorted
    membership_count_.push_back(0);
    for (std::size_t replaced = 0; replaced < stride; ++replaced) {
        for (std::size_t j = 0; j < stride; ++j) {
            if (j == replaced) continue;
            clique_members_.push_back(members[j]);
            ++membership_count_[members[j]];
        }
        clique_members_.push_back(v);
        ++membership_count_[v];
        clique_parallel_degree_.push_back(0);
    }

    ++clique_parallel_degree_[clique];
    ++step_count_;
    return v;
}

std::uint32_t Graph::degree(VertexId v) const {
    require_vertex(v);
    return static_cast<std::uint32_t>(adjacency_[v].size());
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    require_vertex(v);
    return adjacency_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    require_vertex(u);
    require_vertex(v);
    const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    const VertexId needle = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), needle);
}

std::uint32_t Graph::clique_membership_count(VertexId v) const {
    require_vertex(v);
    return membership_count_[v];
}

std::span<const VertexId> Graph::clique_members(CliqueId c) const {
    require_clique(c);
    const std::size_t stride = static_cast<std::size_t>(dimension_) + 1;
    return {clique_members_.data() + c * stride, stride};
}

std::uint32_t Graph::clique_parallel_degree(CliqueId c) const {
    require_clique(c);
    return clique_parallel_degree_[c];
}

void Graph::attach_clique_registry(const std::vector<VertexId>& members,
                                   const std::vector<std::uint32_t>& parallel_degrees) {
    if (has_registry_) throw std::logic_error("graph already has a clique registry");
    const std::size_t stride = static_cast<std::size_t>(dimension_) + 1;
    if (members.size() != parallel_degrees.size() * stride)
        throw std::invalid_argument("clique registry size mismatch");

    std::uint64_t total_parallel = 0;
    for (std::size_t c = 0; c < parallel_degrees.size(); ++c) {
        const VertexId* m = members.data() + c * stride;
        for (std::size_t i = 0; i < stride; ++i) {
            if (m[i] >= vertex_count())
                throw std::invalid_argument("clique " + std::to_string(c) +
                                            " references vertex out of range");
            for (std::size_t j = i + 1; j < stride; ++j)
                if (!has_edge(m[i], m[j]))
                    throw std::invalid_argument("clique " + std::to_string(c) +
                                                " members are not pairwise adjacent");
        }
        total_parallel += parallel_degrees[c];
    }

    if (total_parallel + dimension_ + 1 > vertex_count())
        throw std::invalid_argument("clique registry implies more insertions than vertices");
    if (total_parallel * stride > parallel_degrees.size())
        throw std::invalid_argument("clique registry implies more insertions than cliques");

    clique_members_ = members;
    clique_parallel_degree_ = parallel_degrees;
    membership_count_.assign(vertex_count(), 0);
    for (const VertexId v : clique_members_) ++membership_count_[v];

    step_count_ = total_parallel;
    seed_vertex_count_ = static_cast<VertexId>(vertex_count() - total_parallel);
    seed_clique_count_ = static_cast<CliqueId>(clique_parallel_degree_.size() -
                                               total_parallel * stride);
    has_registry_ = true;
}

void Graph::require_vertex(VertexId v) const {
    if (v >= adjacency_.size())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range (N=" +
                                std::to_string(adjacency_.size()) + ")");
}

void Graph::require_clique(CliqueId c) const {
    if (!has_registry_) throw std::logic_error("graph has no clique registry");
    if (c >= clique_parallel_degree_.size())
        throw std::out_of_range("clique " + std::to_string(c) + " out of range (Nc=" +
                                std::to_string(clique_parallel_degree_.size()) + ")");
}

void verify_structure(const Graph& g, std::uint64_t adjacency_check_budget) {
    const auto fail = [](const std::string& what) { throw std::logic_error("structure: " + what); };

    const std::uint64_t d = static_cast<std::uint64_t>(g.dimension());
    const std::uint64_t n = g.vertex_count();
    const std::uint64_t t = g.step_count();

    if (n != g.seed_vertex_count() + t) fail("vertex count != seed vertices + steps");

    std::uint64_t degree_sum = 0;
    for (VertexId v = 0; v < n; ++v) {
        const auto adj = g.neighbors(v);
        degree_sum += adj.size();
        for (std::size_t i = 0; i + 1 < adj.size(); ++i)
            if (adj[i] >= adj[i + 1]) fail("adjacency list not strictly sorted at vertex " +
                                           std::to_string(v));
        for (const VertexId u : adj) {
            if (u == v) fail("self-loop at vertex " + std::to_string(v));
            if (!g.has_edge(u, v)) fail("asymmetric edge " + std::to_string(v) + "-" +
                                        std::to_string(u));
        }
    }
    if (degree_sum != 2 * g.edge_count()) fail("edge count inconsistent with degree sum");

    if (!g.has_clique_registry()) return;

    const std::uint64_t nc = g.clique_count();
    if (nc != g.seed_clique_count() + t * (d + 1)) fail("clique count != seed cliques + t*(d+1)");

    std::uint64_t parallel_sum = 0;
    for (CliqueId c = 0; c < nc; ++c) parallel_sum += g.clique_parallel_degree(c);
    if (parallel_sum != t) fail("sum of parallel degrees != step count");

    // membership identity: d*k - d^2 + 1 per vertex, (d+1)*Nc in total
    std::uint64_t membership_sum = 0;
    for (VertexId v = 0; v < n; ++v) {
        const std::int64_t want = static_cast<std::int64_t>(d) * g.degree(v) -
                                  static_cast<std::int64_t>(d) * static_cast<std::int64_t>(d) + 1;
        if (static_cast<std::int64_t>(g.clique_membership_count(v)) != want)
            fail("membership identity violated at vertex " + std::to_string(v));
        membership_sum += g.clique_membership_count(v);
    }
    if (membership_sum != nc * (d + 1)) fail("total membership != (d+1)*Nc");

    // pairwise adjacency of clique members, sampled if over budget
    const std::uint64_t pairs_per_clique = (d + 1) * d / 2;
    std::uint64_t stride = 1;
    if (nc * pairs_per_clique > adjacency_check_budget) {
        stride = (nc * pairs_per_clique + adjacency_check_budget - 1) / adjacency_check_budget;
    }
    for (CliqueId c = 0; c < nc; c += static_cast<CliqueId>(stride)) {
        const auto members = g.clique_members(c);
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (members[i] == members[j])
                    fail("repeated member in clique " + std::to_string(c));
                if (!g.has_edge(members[i], members[j]))
                    fail("non-adjacent members in clique " + std::to_string(c));
            }
        }
    }
}

}  // namespace apollonet
