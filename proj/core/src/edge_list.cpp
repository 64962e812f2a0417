#include "apollonet/edge_list.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace apollonet::io {

namespace {

[[noreturn]] void fail_at(const std::filesystem::path& path, std::size_t line_no,
                          const std::string& what) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

// key=value tokens from a '#' header line
void parse_header_tokens(const std::string& line,
                         std::map<std::string, std::string>& out) {
    std::istringstream in(line);
    std::string token;
    in >> token;  // leading '#'
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        out[token.substr(0, eq)] = token.substr(eq + 1);
    }
}

std::uint64_t parse_u64(const std::filesystem::path& path, std::size_t line_no,
                        const std::string& token, const std::string& what) {
    try {
        std::size_t consumed = 0;
        const std::uint64_t value = std::stoull(token, &consumed);
        if (consumed != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        fail_at(path, line_no, "malformed " + what + " '" + token + "'");
    }
}

}  // namespace

std::filesystem::path sidecar_path(const std::filesystem::path& edge_list_path) {
    std::filesystem::path p = edge_list_path;
    p.replace_extension(".cliques");
    return p;
}

void write_edge_list(const std::filesystem::path& path, const Graph& g,
                     const std::string& model, std::uint64_t seed) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");

    out << "# model=" << model << " d=" << g.dimension() << " seed=" << seed
        << " n=" << g.vertex_count() << " nc=" << g.clique_count() << "\n";
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (const VertexId v : g.neighbors(u))
            if (u < v) out << u << '\t' << v << '\n';

    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_clique_sidecar(const std::filesystem::path& path, const Graph& g) {
    if (!g.has_clique_registry())
        throw std::logic_error("graph has no clique registry to serialize");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");

    out << "# cliques d=" << g.dimension() << " n=" << g.vertex_count()
        << " nc=" << g.clique_count() << "\n";
    for (CliqueId c = 0; c < g.clique_count(); ++c) {
        for (const VertexId v : g.clique_members(c)) out << v << ' ';
        out << g.clique_parallel_degree(c) << '\n';
    }

    if (!out) throw std::runtime_error("write failed for " + path.string());
}

namespace {

void load_sidecar_into(const std::filesystem::path& path, Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    const std::size_t stride = static_cast<std::size_t>(g.dimension()) + 1;
    std::vector<VertexId> members;
    std::vector<std::uint32_t> degrees;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream tokens(line);
        std::string token;
        std::vector<std::uint64_t> numbers;
        while (tokens >> token)
            numbers.push_back(parse_u64(path, line_no, token, "clique field"));
        if (numbers.size() != stride + 1)
            fail_at(path, line_no,
                    "expected " + std::to_string(stride) + " members and a parallel degree");
        for (std::size_t i = 0; i < stride; ++i) {
            if (numbers[i] >= g.vertex_count())
                fail_at(path, line_no, "member " + std::to_string(numbers[i]) + " out of range");
            members.push_back(static_cast<VertexId>(numbers[i]));
        }
        degrees.push_back(static_cast<std::uint32_t>(numbers[stride]));
    }

    try {
        g.attach_clique_registry(members, degrees);
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

}  // namespace

LoadedGraph read_edge_list(const std::filesystem::path& path, bool load_sidecar) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    std::map<std::string, std::string> header;
    std::vector<std::pair<VertexId, VertexId>> edges;
    bool have_header = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            parse_header_tokens(line, header);
            have_header = true;
            continue;
        }
        std::istringstream tokens(line);
        std::string a, b, extra;
        if (!(tokens >> a >> b) || (tokens >> extra))
            fail_at(path, line_no, "expected exactly two vertex ids");
        const std::uint64_t u = parse_u64(path, line_no, a, "vertex id");
        const std::uint64_t v = parse_u64(path, line_no, b, "vertex id");
        if (u == v) fail_at(path, line_no, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }

    if (!have_header || !header.count("n") || !header.count("d"))
        fail_at(path, 1, "missing '# model=... d=... seed=... n=... nc=...' header");

    LoadedGraph loaded;
    loaded.header.model = header.count("model") ? header["model"] : "unknown";
    loaded.header.dimension =
        static_cast<int>(parse_u64(path, 1, header["d"], "header field d"));
    loaded.header.vertex_count = parse_u64(path, 1, header["n"], "header field n");
    loaded.header.seed = header.count("seed") ? parse_u64(path, 1, header["seed"], "header seed") : 0;
    loaded.header.clique_count =
        header.count("nc") ? parse_u64(path, 1, header["nc"], "header field nc") : 0;

    for (const auto& [u, v] : edges)
        if (u >= loaded.header.vertex_count || v >= loaded.header.vertex_count)
            throw std::runtime_error(path.string() + ": edge endpoint beyond declared n=" +
                                     std::to_string(loaded.header.vertex_count));

    try {
        loaded.graph = Graph::from_edge_list(loaded.header.dimension,
                                             static_cast<VertexId>(loaded.header.vertex_count),
                                             edges);
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }

    if (load_sidecar) {
        const auto sidecar = sidecar_path(path);
        if (std::filesystem::exists(sidecar)) {
            load_sidecar_into(sidecar, loaded.graph);
            loaded.has_cliques = true;
        }
    }
    return loaded;
}

}  // namespace apollonet::io
