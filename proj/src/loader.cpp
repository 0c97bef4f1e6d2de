#include "lpbench/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <string_view>
#include <unordered_map>

namespace lpbench {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line, const std::string& separator) {
    std::vector<std::string_view> tokens;
    if (separator.empty()) {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && is_space(line[i])) ++i;
            const std::size_t start = i;
            while (i < line.size() && !is_space(line[i])) ++i;
            if (i > start) tokens.push_back(line.substr(start, i - start));
        }
    } else {
        std::size_t start = 0;
        while (true) {
            const std::size_t pos = line.find(separator, start);
            tokens.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
            if (pos == std::string_view::npos) break;
            start = pos + separator.size();
        }
    }
    return tokens;
}

bool parse_integer(std::string_view token, long long& value) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, const LoadOptions& options) {
    LoadedGraph out;
    std::unordered_map<std::string, NodeId> index;
    std::vector<std::string> labels;
    std::vector<std::pair<NodeId, NodeId>> raw;
    bool all_numeric = true;

    auto intern = [&](std::string_view token) {
        auto [it, inserted] = index.try_emplace(std::string(token), static_cast<NodeId>(labels.size()));
        if (inserted) {
            labels.emplace_back(token);
            long long ignored = 0;
            all_numeric = all_numeric && parse_integer(token, ignored);
        }
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        ++out.diagnostics.lines_read;
        const std::string_view text = trim(line);
        if (text.empty()) continue;
        const bool comment = std::any_of(options.comment_prefixes.begin(), options.comment_prefixes.end(),
                                         [&](const std::string& p) { return !p.empty() && text.starts_with(p); });
        if (comment) {
            ++out.diagnostics.comment_lines;
            continue;
        }
        const auto tokens = split(text, options.separator);
        if (tokens.size() < 2 || tokens[0].empty() || tokens[1].empty()) {
            throw ParseError(line_no, "expected two node tokens, got '" + std::string(text) + "'");
        }
        const NodeId a = intern(tokens[0]);
        const NodeId b = intern(tokens[1]);
        if (a == b) {
            ++out.diagnostics.self_loops_dropped;
            continue;
        }
        raw.emplace_back(a, b);
    }

    // Relabel so ids follow numeric order when every label is an integer.
    std::vector<NodeId> order(labels.size());
    for (NodeId i = 0; i < order.size(); ++i) order[i] = i;
    if (all_numeric) {
        std::vector<long long> numeric(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) parse_integer(labels[i], numeric[i]);
        std::sort(order.begin(), order.end(), [&](NodeId x, NodeId y) { return numeric[x] < numeric[y]; });
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (options.one_indexed) labels[i] = std::to_string(numeric[i] - 1);
        }
    }
    // Only nodes that appear in some non-loop edge are kept.
    std::vector<char> used(labels.size(), 0);
    for (auto [a, b] : raw) used[a] = used[b] = 1;
    std::vector<NodeId> compact(labels.size(), 0);
    NodeId next = 0;
    for (NodeId r = 0; r < order.size(); ++r) {
        if (used[order[r]]) {
            compact[order[r]] = next++;
            out.labels.push_back(std::move(labels[order[r]]));
        }
    }
    if (next == 0) throw EmptyGraphError("edge list contains no edges");

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw) edges.emplace_back(compact[a], compact[b]);
    out.graph = Graph(next, edges);
    out.diagnostics.duplicates_merged = raw.size() - out.graph.edge_count();
    return out;
}

LoadedGraph load_edge_list_file(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open edge list '" + path + "'");
    try {
        return load_edge_list(in, options);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.detail(), path);
    }
}

}  // namespace lpbench
