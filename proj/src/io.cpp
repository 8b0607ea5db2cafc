#include "wienerlab/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace wienerlab {

namespace {

void append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        throw TooLargeError("graph6 encoder supports n <= 258047");
    }
}

int parse_size(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw FormatError("empty graph6 line");
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c == 126) {
        if (pos + 3 >= s.size()) throw FormatError("truncated graph6 size");
        if (static_cast<unsigned char>(s[pos + 1]) == 126)
            throw FormatError("graph6 sizes beyond 258047 unsupported");
        int n = 0;
        for (int i = 1; i <= 3; ++i) {
            int d = static_cast<unsigned char>(s[pos + i]) - 63;
            if (d < 0 || d > 63) throw FormatError("bad graph6 size byte");
            n = (n << 6) | d;
        }
        pos += 4;
        return n;
    }
    if (c < 63 || c > 126) throw FormatError("bad graph6 size byte");
    pos += 1;
    return c - 63;
}

} // namespace

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    append_size(out, n);
    int bit = 5;
    char cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v)) cur |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

Graph from_graph6(const std::string& line) {
    size_t pos = 0;
    int n = parse_size(line, pos);
    std::vector<Edge> edges;
    int bit = 5;
    size_t idx = pos;
    auto next_bit = [&]() -> int {
        if (idx >= line.size()) throw FormatError("truncated graph6 body");
        int d = static_cast<unsigned char>(line[idx]) - 63;
        if (d < 0 || d > 63) throw FormatError("bad graph6 body byte");
        int b = (d >> bit) & 1;
        if (--bit < 0) {
            bit = 5;
            ++idx;
        }
        return b;
    };
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (next_bit()) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw FormatError("edge list must start with 'n m'");
    if (n < 0 || m < 0) throw FormatError("negative counts in edge list header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw FormatError("edge list shorter than its header claims");
        edges.push_back({u, v});
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string to_arc_list(const Digraph& d) {
    std::ostringstream out;
    out << d.order() << ' ' << d.size() << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

Digraph from_arc_list(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw FormatError("arc list must start with 'n m'");
    std::vector<Edge> arcs;
    arcs.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw FormatError("arc list shorter than its header claims");
        arcs.push_back({u, v});
    }
    return Digraph::from_arcs(static_cast<int>(n), std::move(arcs));
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_edge_list(const std::string& text) {
    // graph6 bytes are all >= 63 ('?'); an edge list starts with a digit.
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }
    return false;
}

} // namespace

std::vector<Graph> read_graph_file(const std::string& path) {
    std::string text = slurp(path);
    if (looks_like_edge_list(text)) return {from_edge_list(text)};
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

Digraph read_digraph_file(const std::string& path) {
    return from_arc_list(slurp(path));
}

void write_graph6_file(const std::string& path, std::span<const Graph> graphs,
                       const std::string& header_comment) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    if (!header_comment.empty()) out << '#' << header_comment << '\n';
    for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

} // namespace wienerlab
