#include "ktdom/io.hpp"

#include "ktdom/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ktdom::io {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

void append_size(std::string& out, std::size_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

} // namespace

std::string write_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    std::string out;
    append_size(out, n);
    // Bits x(i,j) for i < j, ordered by j then i, packed six per byte.
    int value = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

Graph parse_graph6(std::string_view text)
{
    const std::size_t lead = text.find_first_not_of(" \t\r\n");
    text = trim(text);
    std::size_t base = lead == std::string_view::npos ? 0 : lead;
    if (text.starts_with(kGraph6Header)) {
        text.remove_prefix(kGraph6Header.size());
        base += kGraph6Header.size();
    }
    if (text.empty())
        throw ParseError("empty graph6 string", base);

    for (std::size_t i = 0; i < text.size(); ++i)
        if (text[i] < 63 || text[i] > 126)
            throw ParseError("byte outside the graph6 alphabet at offset " + std::to_string(base + i),
                             base + i);

    auto sextet = [&](std::size_t i) { return static_cast<std::size_t>(text[i] - 63); };
    std::size_t n = 0, pos = 0;
    if (text[0] != '~') {
        n = sextet(0);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4)
            throw ParseError("truncated graph6 length header", base + text.size());
        n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
        pos = 4;
        if (n <= 62)
            throw ParseError("non-canonical graph6 length header", base);
    } else {
        if (text.size() < 8)
            throw ParseError("truncated graph6 length header", base + text.size());
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | sextet(i);
        pos = 8;
        if (n <= 258047)
            throw ParseError("non-canonical graph6 length header", base);
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos)
                             + " bytes, expected " + std::to_string(bytes),
                         base + std::min(text.size(), pos + bytes));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            const std::size_t byte = pos + k / 6;
            if ((sextet(byte) >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    if (bits % 6 != 0) {
        const std::size_t last = text.size() - 1;
        const std::size_t padding = 6 - bits % 6;
        if (sextet(last) & ((std::size_t{1} << padding) - 1))
            throw ParseError("non-zero padding bits in final graph6 byte", base + last);
    }
    return Graph::from_edges(n, edges);
}

std::string write_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph parse_dimacs(std::string_view text)
{
    std::size_t line_no = 0;
    std::optional<std::size_t> n, m;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> seen;

    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError("line " + std::to_string(line_no) + ": " + what, line_no);
    };
    auto read_count = [&](std::istringstream& in, const char* what) {
        long long value = -1;
        if (!(in >> value) || value < 0)
            throw fail(std::string("expected ") + what);
        return static_cast<std::size_t>(value);
    };

    std::istringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
        ++line_no;
        std::string_view body = trim(line);
        if (body.empty() || body[0] == 'c')
            continue;
        std::istringstream in{std::string(body)};
        std::string tag;
        in >> tag;
        if (tag == "p") {
            std::string kind;
            in >> kind;
            if (n)
                throw fail("second problem line");
            if (kind != "edge" && kind != "col")
                throw fail("expected 'p edge <n> <m>'");
            n = read_count(in, "vertex count");
            m = read_count(in, "edge count");
            seen.assign(*n, {});
        } else if (tag == "e") {
            if (!n)
                throw fail("edge before problem line");
            std::size_t u = read_count(in, "edge endpoint");
            std::size_t v = read_count(in, "edge endpoint");
            if (u < 1 || v < 1 || u > *n || v > *n)
                throw fail("vertex out of range 1.." + std::to_string(*n));
            if (u == v)
                throw fail("self-loop at vertex " + std::to_string(u));
            auto a = static_cast<Vertex>(std::min(u, v) - 1);
            auto b = static_cast<Vertex>(std::max(u, v) - 1);
            if (std::find(seen[a].begin(), seen[a].end(), b) != seen[a].end())
                throw fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            seen[a].push_back(b);
            edges.emplace_back(a, b);
        } else {
            throw fail("unrecognised line '" + std::string(body) + "'");
        }
        std::string extra;
        if (in >> extra)
            throw fail("trailing tokens");
    }
    if (!n)
        throw ParseError("missing problem line", line_no);
    if (edges.size() != *m)
        throw ParseError("header declares " + std::to_string(*m) + " edges, found "
                             + std::to_string(edges.size()),
                         line_no);
    return Graph::from_edges(*n, edges);
}

std::vector<std::string> graph6_records(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = trim(text.substr(start, end - start));
        if (line.starts_with(kGraph6Header))
            line.remove_prefix(kGraph6Header.size());
        if (!line.empty() && line[0] != '#')
            out.emplace_back(line);
        start = end + 1;
    }
    return out;
}

} // namespace ktdom::io
