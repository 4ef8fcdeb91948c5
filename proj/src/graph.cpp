#include "kgrip/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace kgrip {

NodePair::NodePair(int a, int b) {
    if (a == b)
        throw std::invalid_argument("self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
    u = std::min(a, b);
    v = std::max(a, b);
}

Graph::Graph(int n, std::vector<NodePair> links) : n_(n), links_(std::move(links)) {
    if (n_ < 0)
        throw std::invalid_argument("negative node count");
    for (const auto& e : links_) {
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("link (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") out of range for n=" + std::to_string(n_));
    }
    std::sort(links_.begin(), links_.end());
    links_.erase(std::unique(links_.begin(), links_.end()), links_.end());
}

bool Graph::has_link(int u, int v) const {
    if (u == v)
        return false;
    return std::binary_search(links_.begin(), links_.end(), NodePair(u, v));
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& e : links_) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

int parse_int_token(std::string_view tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line_no) + ": non-integer token '" + std::string(tok) + "'");
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text, std::optional<int> node_count) {
    std::optional<int> declared = node_count;
    std::vector<NodePair> links;
    int max_index = -1;
    bool saw_content = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        if (!saw_content && line.starts_with("n=")) {
            int n = parse_int_token(trim(line.substr(2)), line_no);
            if (n < 0)
                throw ParseError("line " + std::to_string(line_no) + ": negative node count");
            if (!declared)
                declared = n;
            saw_content = true;
            continue;
        }
        saw_content = true;

        std::size_t split = line.find_first_of(" \t");
        if (split == std::string_view::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
        std::string_view a_tok = trim(line.substr(0, split));
        std::string_view b_tok = trim(line.substr(split));
        if (b_tok.find_first_of(" \t") != std::string_view::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected exactly two indices");

        int a = parse_int_token(a_tok, line_no);
        int b = parse_int_token(b_tok, line_no);
        if (a == b)
            throw ParseError("line " + std::to_string(line_no) + ": self-loop " + std::to_string(a));
        if (a < 0 || b < 0)
            throw ParseError("line " + std::to_string(line_no) + ": negative node index");
        if (declared && (a >= *declared || b >= *declared))
            throw ParseError("line " + std::to_string(line_no) + ": index >= n=" + std::to_string(*declared));
        links.emplace_back(a, b);
        max_index = std::max({max_index, a, b});
    }

    int n = declared.value_or(max_index + 1);
    return Graph(n, std::move(links));
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.node_count() << "\n";
    for (const auto& e : g.links())
        out << e.u << " " << e.v << "\n";
    return out.str();
}

Graph parse_graph6(std::string_view line) {
    line = trim(line);
    if (line.empty())
        throw ParseError("empty graph6 line");
    for (char c : line) {
        unsigned char b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126)
            throw ParseError("graph6 byte out of range [63,126]");
    }
    if (line[0] == 126)
        throw ParseError("unsupported length: extended graph6 header (n > 62)");

    int n = line[0] - 63;
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t payload = (bits + 5) / 6;
    if (line.size() != 1 + payload) {
        if (line.size() < 1 + payload)
            throw ParseError("truncated graph6 payload");
        throw ParseError("trailing bytes after graph6 payload");
    }

    std::vector<NodePair> links;
    std::size_t t = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++t) {
            int group = line[1 + t / 6] - 63;
            if ((group >> (5 - t % 6)) & 1)
                links.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(links));
}

std::string encode_graph6(const Graph& g) {
    int n = g.node_count();
    if (n > 62)
        throw InfeasibleError("graph6 single-byte header requires n <= 62, got n=" + std::to_string(n));

    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
    out[0] = static_cast<char>(63 + n);
    std::size_t t = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++t) {
            if (g.has_link(u, v))
                out[1 + t / 6] = static_cast<char>(out[1 + t / 6] + (1 << (5 - t % 6)));
        }
    }
    return out;
}

std::vector<NodePair> complement_links(const Graph& g) {
    std::vector<NodePair> result;
    int n = g.node_count();
    result.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.links().size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_link(u, v))
                result.emplace_back(u, v);
    return result;
}

Graph add_links(const Graph& g, std::span<const NodePair> pairs) {
    std::vector<NodePair> links = g.links();
    std::vector<NodePair> sorted(pairs.begin(), pairs.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InfeasibleError("duplicate pair in link additions");
    for (const auto& e : sorted) {
        if (g.has_link(e.u, e.v))
            throw InfeasibleError("link (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") already present");
        links.push_back(e);
    }
    return Graph(g.node_count(), std::move(links));
}

bool is_connected(const Graph& g) {
    int n = g.node_count();
    if (n <= 1)
        return true;

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& e : g.links()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

Eigen::MatrixXd laplacian(const Graph& g) {
    int n = g.node_count();
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.links()) {
        q(e.u, e.u) += 1.0;
        q(e.v, e.v) += 1.0;
        q(e.u, e.v) -= 1.0;
        q(e.v, e.u) -= 1.0;
    }
    return q;
}

Graph random_connected_graph(int n, std::mt19937_64& rng, double edge_prob) {
    if (n < 1)
        throw std::invalid_argument("random graph needs n >= 1");
    // Threshold against raw 64-bit draws; distributions are not portable.
    std::uint64_t threshold = 0;
    if (edge_prob >= 1.0)
        threshold = UINT64_MAX;
    else if (edge_prob > 0.0)
        threshold = static_cast<std::uint64_t>(edge_prob * 18446744073709551616.0);
    while (true) {
        std::vector<NodePair> links;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() <= threshold)
                    links.emplace_back(u, v);
        Graph g(n, std::move(links));
        if (is_connected(g))
            return g;
    }
}

} // namespace kgrip
