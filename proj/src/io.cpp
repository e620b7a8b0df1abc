#include "aqn/io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "aqn/errors.hpp"

namespace aqn {

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "edgelist") return GraphFormat::edgelist;
    if (name == "dimacs") return GraphFormat::dimacs;
    throw std::invalid_argument("unknown graph format: " + std::string(name));
}

std::string export_graph(const AugCube& g, GraphFormat format) {
    std::ostringstream out;
    const auto edges = g.edges();
    if (format == GraphFormat::edgelist) {
        out << g.num_vertices() << ' ' << g.num_edges() << '\n';
        for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    } else {
        out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
        for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
    return out.str();
}

namespace {

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    // Returns the next non-empty line, or empty optional at end of input.
    std::optional<std::string_view> next() {
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (!line.empty()) return line;
        }
        return std::nullopt;
    }
};

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_u64(std::string_view tok, int line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("expected a nonnegative integer, got '" + std::string(tok) + "'", line);
    return value;
}

}  // namespace

ImportedGraph import_graph(std::string_view text, GraphFormat format) {
    LineReader reader{text};
    ImportedGraph g;

    auto header = reader.next();
    if (!header) throw ParseError("missing header line", 1);
    auto toks = split_ws(*header);

    std::uint64_t nv = 0, ne = 0;
    bool one_based = false;
    if (format == GraphFormat::edgelist) {
        if (toks.size() != 2)
            throw ParseError("edgelist header must be '<|V|> <|E|>'", reader.line_no);
        nv = parse_u64(toks[0], reader.line_no);
        ne = parse_u64(toks[1], reader.line_no);
    } else {
        // Skip DIMACS comment lines before the problem line.
        while (!toks.empty() && toks[0] == "c") {
            header = reader.next();
            if (!header) throw ParseError("missing 'p edge' line", reader.line_no);
            toks = split_ws(*header);
        }
        if (toks.size() != 4 || toks[0] != "p" || toks[1] != "edge")
            throw ParseError("expected 'p edge <|V|> <|E|>'", reader.line_no);
        nv = parse_u64(toks[2], reader.line_no);
        ne = parse_u64(toks[3], reader.line_no);
        one_based = true;
    }

    g.num_vertices = static_cast<std::uint32_t>(nv);
    g.edges.reserve(ne);

    for (std::uint64_t k = 0; k < ne; ++k) {
        auto line = reader.next();
        if (!line) throw ParseError("expected " + std::to_string(ne) + " edges, got " +
                                        std::to_string(k), reader.line_no + 1);
        auto parts = split_ws(*line);
        if (one_based) {
            while (!parts.empty() && parts[0] == "c") {
                line = reader.next();
                if (!line) throw ParseError("unexpected end of input", reader.line_no + 1);
                parts = split_ws(*line);
            }
            if (parts.size() != 3 || parts[0] != "e")
                throw ParseError("expected 'e <u> <v>'", reader.line_no);
            parts.erase(parts.begin());
        } else if (parts.size() != 2) {
            throw ParseError("expected '<u> <v>'", reader.line_no);
        }
        std::uint64_t u = parse_u64(parts[0], reader.line_no);
        std::uint64_t v = parse_u64(parts[1], reader.line_no);
        if (one_based) {
            if (u == 0 || v == 0) throw ParseError("DIMACS vertex ids are 1-based", reader.line_no);
            --u;
            --v;
        }
        if (u >= nv || v >= nv) throw ParseError("vertex id out of range", reader.line_no);
        if (u == v) throw ParseError("self-loop not allowed", reader.line_no);
        if (u > v) std::swap(u, v);
        g.edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (reader.next()) throw ParseError("trailing content after edge list", reader.line_no);

    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

}  // namespace aqn
