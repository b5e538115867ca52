#include "bei/graph6.hpp"

#include <charconv>

#include "bei/errors.hpp"

namespace bei {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string offset_msg(const char* what, std::size_t at)
{
    return std::string("graph6: ") + what + " at byte " + std::to_string(at);
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

bool is_blank(std::string_view s)
{
    return s.find_first_not_of(" \t") == std::string_view::npos;
}

} // namespace

Graph parse_graph6(std::string_view rec)
{
    std::size_t pos = 0;
    if (rec.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    if (!rec.empty() && rec.back() == '\n') rec.remove_suffix(1);
    if (!rec.empty() && rec.back() == '\r') rec.remove_suffix(1);

    for (std::size_t i = pos; i < rec.size(); ++i) {
        const auto c = static_cast<unsigned char>(rec[i]);
        if (c < 63 || c > 126) throw ParseError(offset_msg("byte outside 63..126", i), i);
    }
    auto value = [&](std::size_t i) { return static_cast<unsigned>(static_cast<unsigned char>(rec[i])) - 63u; };

    if (pos >= rec.size()) throw ParseError(offset_msg("missing size field", pos), pos);
    std::uint64_t n = 0;
    if (value(pos) < 63) {
        n = value(pos);
        pos += 1;
    } else {
        std::size_t width = 3;
        std::size_t start = pos + 1;
        if (start < rec.size() && value(start) == 63) {
            width = 6;
            start += 1;
        }
        if (start + width > rec.size()) throw ParseError(offset_msg("truncated size field", rec.size()), rec.size());
        for (std::size_t i = 0; i < width; ++i) n = (n << 6) | value(start + i);
        pos = start + width;
    }
    if (n > static_cast<std::uint64_t>(kMaxVertices))
        throw ParseError(offset_msg(("graph order " + std::to_string(n) + " exceeds the supported maximum").c_str(), 0), 0);

    const int order = static_cast<int>(n);
    const std::size_t bits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order - (order > 0)) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (rec.size() - pos < need) throw ParseError(offset_msg("truncated adjacency data", rec.size()), rec.size());
    if (rec.size() - pos > need) throw ParseError(offset_msg("trailing bytes", pos + need), pos + need);

    GraphBuilder b(order);
    std::size_t k = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const unsigned word = value(pos + k / 6);
            if ((word >> (5 - k % 6)) & 1u) b.add_edge(i + 1, j + 1);
        }
    }
    if (bits % 6 != 0) {
        const unsigned last = value(pos + need - 1);
        const unsigned pad_mask = (1u << (6 - bits % 6)) - 1u;
        if ((last & pad_mask) != 0) throw ParseError(offset_msg("nonzero padding bits", pos + need - 1), pos + need - 1);
    }
    return b.build();
}

std::string to_graph6(const Graph& g)
{
    std::string out;
    const int n = g.order();
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    unsigned word = 0;
    int filled = 0;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i) {
            word = (word << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + 63));
                word = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
    return out;
}

std::vector<Graph> parse_graph6_stream(std::string_view text)
{
    std::vector<Graph> out;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (is_blank(lines[i])) continue;
        try {
            out.push_back(parse_graph6(lines[i]));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(i + 1) + ": " + e.what(), i + 1);
        }
    }
    return out;
}

namespace {

bool parse_two_ints(std::string_view line, long& a, long& b)
{
    const char* p = line.data();
    const char* end = p + line.size();
    auto skip = [&] { while (p < end && (*p == ' ' || *p == '\t')) ++p; };
    skip();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{} || r1.ptr == p) return false;
    p = r1.ptr;
    if (p == end || (*p != ' ' && *p != '\t')) return false;
    skip();
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{} || r2.ptr == p) return false;
    p = r2.ptr;
    skip();
    return p == end;
}

} // namespace

std::vector<Graph> parse_edge_lists(std::string_view text)
{
    std::vector<Graph> out;
    const auto lines = split_lines(text);
    std::size_t i = 0;
    auto fail = [&](const std::string& what, std::size_t line) -> ParseError {
        return ParseError("edge list line " + std::to_string(line) + ": " + what, line);
    };
    while (i < lines.size()) {
        if (is_blank(lines[i])) { ++i; continue; }
        long n = 0, m = 0;
        if (!parse_two_ints(lines[i], n, m)) throw fail("expected header \"n m\"", i + 1);
        if (n < 0 || n > kMaxVertices) throw fail("vertex count out of range", i + 1);
        if (m < 0 || m > n * (n - 1) / 2) throw fail("edge count out of range", i + 1);
        ++i;
        GraphBuilder b(static_cast<int>(n));
        std::vector<bool> seen(static_cast<std::size_t>(n * n + 1), false);
        for (long e = 0; e < m; ++e, ++i) {
            if (i >= lines.size()) throw fail("missing edge lines", i + 1);
            long u = 0, v = 0;
            if (!parse_two_ints(lines[i], u, v)) throw fail("expected \"u v\"", i + 1);
            if (!(1 <= u && u < v && v <= n)) throw fail("edge must satisfy 1 <= u < v <= n", i + 1);
            const auto key = static_cast<std::size_t>((u - 1) * n + (v - 1));
            if (seen[key]) throw fail("repeated edge", i + 1);
            seen[key] = true;
            b.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
        out.push_back(b.build());
    }
    return out;
}

InputFormat detect_format(std::string_view text)
{
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string_view line = lines[i];
        if (is_blank(line)) continue;
        if (line.front() == '>') return InputFormat::Graph6;
        bool g6 = true;
        for (char ch : line) {
            const auto c = static_cast<unsigned char>(ch);
            if (c < 63 || c > 126) g6 = false;
        }
        if (g6) return InputFormat::Graph6;
        long a = 0, b = 0;
        if (parse_two_ints(line, a, b)) return InputFormat::EdgeList;
        throw ParseError("line " + std::to_string(i + 1) + ": input is neither graph6 nor an edge list", i + 1);
    }
    return InputFormat::Empty;
}

std::vector<Graph> parse_graphs(std::string_view text)
{
    switch (detect_format(text)) {
    case InputFormat::Graph6: return parse_graph6_stream(text);
    case InputFormat::EdgeList: return parse_edge_lists(text);
    case InputFormat::Empty: break;
    }
    return {};
}

} // namespace bei
