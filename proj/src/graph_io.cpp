#include "graph_io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace prg {

namespace {

constexpr char kMagic[4] = {'P', 'R', 'G', 'B'};
constexpr uint8_t kVersion = 1;

void put_u64_le(std::ostream& out, uint64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(buf), 8);
}

uint64_t get_u64_le(std::istream& in) {
    unsigned char buf[8];
    in.read(reinterpret_cast<char*>(buf), 8);
    if (!in) fail(Errc::io_error, "truncated PRGB header");
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(buf[i]) << (8 * i);
    return v;
}

void write_prgb(const Graph& g, std::ostream& out) {
    out.write(kMagic, 4);
    out.put(static_cast<char>(kVersion));
    put_u64_le(out, g.vertex_count());
    const size_t words = g.row_words();
    for (uint64_t v = 0; v < g.vertex_count(); ++v) {
        const uint64_t* r = g.row(static_cast<Vertex>(v));
        for (size_t w = 0; w < words; ++w) put_u64_le(out, r[w]);
    }
    if (!out) fail(Errc::io_error, "write failed");
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "# n " << g.vertex_count() << "\n";
    for (uint64_t v = 0; v < g.vertex_count(); ++v) {
        const uint64_t* r = g.row(static_cast<Vertex>(v));
        for (size_t w = v >> 6; w < g.row_words(); ++w) {
            uint64_t bits = r[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                uint64_t u = w * 64 + static_cast<uint64_t>(b);
                if (u > v) out << v << " " << u << "\n";
            }
        }
    }
    if (!out) fail(Errc::io_error, "write failed");
}

Graph read_prgb(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0) fail(Errc::io_error, "bad PRGB magic");
    int version = in.get();
    if (version != kVersion) fail(Errc::io_error, "unsupported PRGB version");
    uint64_t n = get_u64_le(in);
    if (n == 0 || n > Graph::max_vertices) fail(Errc::io_error, "PRGB vertex count out of range");
    const size_t words = (n + 63) / 64;
    std::vector<uint64_t> rows(words * n);
    for (size_t i = 0; i < rows.size(); ++i) rows[i] = get_u64_le(in);
    // from_adjacency validates symmetry / diagonal / padding
    try {
        return Graph::from_adjacency(n, std::move(rows));
    } catch (const Error& e) {
        fail(Errc::io_error, std::string("corrupt PRGB payload: ") + e.what());
    }
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    uint64_t n = 0;
    bool n_given = false;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        std::string body = hash == std::string::npos ? line : line.substr(0, hash);
        if (hash != std::string::npos) {
            // "# n <count>" fixes the vertex count for graphs with isolated tails
            std::istringstream cs(line.substr(hash + 1));
            std::string key;
            uint64_t val;
            if (cs >> key >> val && key == "n") {
                n = val;
                n_given = true;
            }
        }
        std::istringstream ls(body);
        uint64_t u, v;
        if (ls >> u >> v) {
            if (u >= Graph::max_vertices || v >= Graph::max_vertices)
                fail(Errc::io_error, "edge endpoint out of range");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            if (!n_given) n = std::max({n, u + 1, v + 1});
        }
    }
    if (n == 0) fail(Errc::io_error, "empty edge list and no vertex count");
    try {
        return Graph::from_edges(n, edges);
    } catch (const Error& e) {
        fail(Errc::io_error, std::string("bad edge list: ") + e.what());
    }
}

} // namespace

void write_graph(const Graph& g, std::ostream& out, GraphFormat format) {
    if (format == GraphFormat::prgb)
        write_prgb(g, out);
    else
        write_edge_list(g, out);
}

Graph read_graph(std::istream& in) {
    int c = in.peek();
    if (c == 'P') return read_prgb(in);
    return read_edge_list(in);
}

void write_graph(const Graph& g, const std::string& path, GraphFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::io_error, "cannot open " + path + " for writing");
    write_graph(g, out, format);
}

Graph read_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io_error, "cannot open " + path);
    return read_graph(in);
}

} // namespace prg
