#include <burn/edge_list.hpp>
#include <burn/error.hpp>
#include <burn/generators.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace burn {
namespace {

    // Whitespace-separated tokens with '#' comments stripped, tagged by line.
    struct Token {
        std::string text;
        std::size_t line;
    };

    std::vector<Token> tokenize(std::istream & in)
    {
        std::vector<Token> tokens;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.resize(hash);
            std::istringstream words(line);
            std::string w;
            while (words >> w)
                tokens.push_back({w, line_no});
        }
        return tokens;
    }

    std::uint64_t parse_count(const Token & t)
    {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
            throw BurnError(ErrorCode::parse_error,
                            "line " + std::to_string(t.line) + ": expected a non-negative integer, got '" + t.text + "'");
        return value;
    }

    template <typename T>
    T parse_number(std::string_view text, std::string_view what)
    {
        T value{};
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw BurnError(ErrorCode::parse_error, "bad " + std::string(what) + " '" + std::string(text) + "'");
        return value;
    }

    std::vector<std::string_view> split(std::string_view s, char sep)
    {
        std::vector<std::string_view> parts;
        std::size_t start = 0;
        while (true) {
            auto pos = s.find(sep, start);
            parts.push_back(s.substr(start, pos - start));
            if (pos == std::string_view::npos)
                break;
            start = pos + 1;
        }
        return parts;
    }

} // namespace

Graph read_edge_list(std::istream & in)
{
    auto tokens = tokenize(in);
    if (tokens.size() < 2)
        throw BurnError(ErrorCode::parse_error, "missing 'n m' header");
    auto n = parse_count(tokens[0]);
    auto m = parse_count(tokens[1]);
    if (tokens.size() != 2 + 2 * m)
        throw BurnError(ErrorCode::parse_error,
                        "header declares " + std::to_string(m) + " edges but " +
                            std::to_string((tokens.size() - 2) / 2) + " edge lines follow" +
                            (tokens.size() % 2 != 0 ? " (dangling endpoint)" : ""));
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto u = parse_count(tokens[2 + 2 * i]);
        auto v = parse_count(tokens[3 + 2 * i]);
        if (u >= n || v >= n)
            throw BurnError(ErrorCode::invalid_node, "line " + std::to_string(tokens[2 + 2 * i].line) +
                                                         ": endpoint outside [0," + std::to_string(n) + ")");
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw BurnError(ErrorCode::parse_error, "cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream & out, const Graph & g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph & g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

Graph parse_generator_spec(std::string_view spec)
{
    auto parts = split(spec, ':');
    auto kind = parts.front();
    auto expect_args = [&](std::size_t count) {
        if (parts.size() != count + 1)
            throw BurnError(ErrorCode::parse_error, "generator '" + std::string(kind) + "' takes " +
                                                        std::to_string(count) + " argument(s): '" + std::string(spec) + "'");
    };
    auto size_arg = [&](std::size_t i) { return parse_number<std::size_t>(parts[i], "size"); };

    if (kind == "path" || kind == "cycle" || kind == "complete" || kind == "empty" || kind == "star" || kind == "wheel") {
        expect_args(1);
        auto n = size_arg(1);
        if (kind == "path")
            return gen::path(n);
        if (kind == "cycle")
            return gen::cycle(n);
        if (kind == "complete")
            return gen::complete(n);
        if (kind == "empty")
            return gen::empty(n);
        if (kind == "star")
            return gen::star(n);
        return gen::wheel(n);
    }
    if (kind == "spider") {
        expect_args(1);
        auto sr = split(parts[1], 'x');
        if (sr.size() != 2)
            throw BurnError(ErrorCode::parse_error, "spider expects SxR, got '" + std::string(parts[1]) + "'");
        return gen::spider(parse_number<std::size_t>(sr[0], "arm count"), parse_number<std::size_t>(sr[1], "arm length"));
    }
    if (kind == "gnp") {
        expect_args(3);
        double p = 0.0;
        try {
            std::size_t used = 0;
            p = std::stod(std::string(parts[2]), &used);
            if (used != parts[2].size())
                throw std::invalid_argument("trailing");
        }
        catch (const std::exception &) {
            throw BurnError(ErrorCode::parse_error, "bad probability '" + std::string(parts[2]) + "'");
        }
        return gen::gnp_random(size_arg(1), p, parse_number<std::uint64_t>(parts[3], "seed"));
    }
    throw BurnError(ErrorCode::parse_error, "unknown generator kind '" + std::string(kind) + "'");
}

} // namespace burn
