#include "dc/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace dc {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view s, long long& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

} // namespace

Graph parse_dimacs(std::string_view text) {
    long long n = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    int line_no = 0;
    size_t pos = 0;
    bool have_header = false;

    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "c") continue;
        if (tok[0] == "p") {
            long long m_declared = 0;
            if (have_header || tok.size() != 4 || tok[1] != "edge" || !parse_int(tok[2], n) ||
                !parse_int(tok[3], m_declared) || n < 0)
                raise(errc::parse, "bad header at line " + std::to_string(line_no));
            have_header = true;
            continue;
        }
        if (tok[0] == "e") {
            if (!have_header) raise(errc::parse, "edge before header at line " + std::to_string(line_no));
            long long u = 0, v = 0;
            if (tok.size() != 3 || !parse_int(tok[1], u) || !parse_int(tok[2], v))
                raise(errc::parse, "bad edge line " + std::to_string(line_no));
            if (u < 1 || u > n || v < 1 || v > n)
                raise(errc::vertex_range, "vertex out of range at line " + std::to_string(line_no));
            if (u == v) raise(errc::loop_edge, "loop edge at line " + std::to_string(line_no));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            continue;
        }
        raise(errc::parse, "unrecognised line " + std::to_string(line_no));
    }
    if (!have_header) raise(errc::parse, "missing 'p edge' header");
    return from_edges(static_cast<int>(n), edges);
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::io, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dimacs(buf.str());
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n << ' ' << g.m << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

void write_dimacs_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(errc::io, "cannot open " + path + " for writing");
    out << write_dimacs(g);
    if (!out) raise(errc::io, "write failed: " + path);
}

} // namespace dc
