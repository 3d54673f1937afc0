#include "lexspec/graph.hpp"

#include <algorithm>
#include <sstream>

namespace lexspec {

Graph::Graph(int order, std::string label) : n_(order), label_(std::move(label)) {
    if (order < 1) throw ParseError("graph order must be >= 1, got " + std::to_string(order));
    a_.assign(static_cast<size_t>(n_) * n_, 0);
}

int Graph::degree(int i) const {
    int d = 0;
    for (int j = 0; j < n_; ++j) d += a_[static_cast<size_t>(i) * n_ + j];
    return d;
}

void Graph::add_edge(int i, int j) {
    if (i == j) throw ParseError("self-loop at vertex " + std::to_string(i + 1));
    a_[static_cast<size_t>(i) * n_ + j] = 1;
    a_[static_cast<size_t>(j) * n_ + i] = 1;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::optional<Graph> g;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1)
                throw ParseError("line " + std::to_string(lineno) + ": expected positive order");
            std::string rest;
            if (ls >> rest)
                throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after order");
            g.emplace(n);
            continue;
        }
        int u = 0, v = 0;
        if (!(ls >> u >> v))
            throw ParseError("line " + std::to_string(lineno) + ": expected edge \"u v\"");
        std::string rest;
        if (ls >> rest)
            throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after edge");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("line " + std::to_string(lineno) + ": vertex out of range 1.." +
                             std::to_string(n));
        if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
        g->add_edge(u - 1, v - 1);
    }
    if (!g) throw ParseError("empty input: no order line");
    return *g;
}

Graph parse_graph6(const std::string& text) {
    // strip whitespace and optional ">>graph6<<" header
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (s.empty()) throw ParseError("graph6: empty string");
    const int c0 = static_cast<unsigned char>(s[0]);
    if (c0 == 126) throw ParseError("graph6: long format (n >= 63) not supported");
    if (c0 < 63 || c0 > 125) throw ParseError("graph6: invalid order character");
    const int n = c0 - 63;
    if (n < 1) throw ParseError("graph6: order must be >= 1");
    Graph g(n);
    const std::int64_t nbits = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const std::int64_t nbytes = (nbits + 5) / 6;
    if (static_cast<std::int64_t>(s.size()) - 1 != nbytes)
        throw ParseError("graph6: expected " + std::to_string(nbytes) + " data characters, got " +
                         std::to_string(s.size() - 1));
    std::int64_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int ch = static_cast<unsigned char>(s[1 + bit / 6]);
            if (ch < 63 || ch > 126) throw ParseError("graph6: invalid data character");
            const int b = (ch - 63) >> (5 - bit % 6) & 1;
            if (b) g.add_edge(i, j);
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n >= 63) throw SizeError("graph6 short format requires order < 63");
    std::string out;
    out += static_cast<char>(n + 63);
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
            if (++nb == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out += static_cast<char>((acc << (6 - nb)) + 63);
    return out;
}

std::optional<GraphFamily> family_from_name(const std::string& name) {
    if (name == "complete") return GraphFamily::Complete;
    if (name == "path") return GraphFamily::Path;
    if (name == "cycle") return GraphFamily::Cycle;
    if (name == "star") return GraphFamily::Star;
    if (name == "complete_bipartite") return GraphFamily::CompleteBipartite;
    if (name == "empty") return GraphFamily::Empty;
    return std::nullopt;
}

Graph generate(GraphFamily family, const std::vector<int>& params) {
    auto need = [&](size_t count) {
        if (params.size() != count)
            throw ParseError("generator expects " + std::to_string(count) + " parameter(s)");
        for (int p : params)
            if (p < 1) throw ParseError("generator parameters must be positive");
    };
    switch (family) {
    case GraphFamily::Complete: {
        need(1);
        Graph g(params[0], "K" + std::to_string(params[0]));
        for (int i = 0; i < params[0]; ++i)
            for (int j = i + 1; j < params[0]; ++j) g.add_edge(i, j);
        return g;
    }
    case GraphFamily::Path: {
        need(1);
        Graph g(params[0], "P" + std::to_string(params[0]));
        for (int i = 0; i + 1 < params[0]; ++i) g.add_edge(i, i + 1);
        return g;
    }
    case GraphFamily::Cycle: {
        need(1);
        if (params[0] < 3) throw ParseError("cycle requires at least 3 vertices");
        Graph g(params[0], "C" + std::to_string(params[0]));
        for (int i = 0; i < params[0]; ++i) g.add_edge(i, (i + 1) % params[0]);
        return g;
    }
    case GraphFamily::Star: {
        need(1);
        Graph g(params[0] + 1, "K1," + std::to_string(params[0]));
        for (int i = 1; i <= params[0]; ++i) g.add_edge(0, i);
        return g;
    }
    case GraphFamily::CompleteBipartite: {
        need(2);
        Graph g(params[0] + params[1],
                "K" + std::to_string(params[0]) + "," + std::to_string(params[1]));
        for (int i = 0; i < params[0]; ++i)
            for (int j = params[0]; j < params[0] + params[1]; ++j) g.add_edge(i, j);
        return g;
    }
    case GraphFamily::Empty: {
        need(1);
        return Graph(params[0], "E" + std::to_string(params[0]));
    }
    }
    throw ParseError("unknown graph family");
}

Graph lex_product_explicit(const Graph& h, const Graph& g, std::int64_t cap) {
    const std::int64_t p = h.order(), n = g.order();
    if (p * n > cap)
        throw SizeError("oracle too large: |H[G]| = " + std::to_string(p * n) + " exceeds cap " +
                        std::to_string(cap));
    Graph out(static_cast<int>(p * n));
    for (int h1 = 0; h1 < p; ++h1) {
        for (int h2 = 0; h2 < p; ++h2) {
            if (h.adjacent(h1, h2)) {
                for (int g1 = 0; g1 < n; ++g1)
                    for (int g2 = 0; g2 < n; ++g2)
                        out.add_edge(h1 * static_cast<int>(n) + g1, h2 * static_cast<int>(n) + g2);
            }
        }
        for (int g1 = 0; g1 < n; ++g1)
            for (int g2 = g1 + 1; g2 < n; ++g2)
                if (g.adjacent(g1, g2))
                    out.add_edge(h1 * static_cast<int>(n) + g1, h1 * static_cast<int>(n) + g2);
    }
    return out;
}

std::int64_t edge_count(const Graph& g) {
    std::int64_t total = 0;
    for (int i = 0; i < g.order(); ++i) total += g.degree(i);
    return total / 2;
}

std::optional<int> is_regular(const Graph& g) {
    const int k = g.degree(0);
    for (int i = 1; i < g.order(); ++i)
        if (g.degree(i) != k) return std::nullopt;
    return k;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
            if (g.adjacent(v, w) && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

} // namespace lexspec
