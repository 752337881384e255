#include "rainbow/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "rainbow/rdf.hpp"

namespace rainbow {

namespace {

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n())
        throw InvalidParameter("vertex " + std::to_string(v) + " out of range [0, " +
                               std::to_string(g.n()) + ")");
}

} // namespace

const std::vector<int>& Graph::open_neighborhood(int v) const {
    check_vertex(*this, v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<int> Graph::closed_neighborhood(int v) const {
    std::vector<int> nv = open_neighborhood(v);
    nv.insert(std::lower_bound(nv.begin(), nv.end(), v), v);
    return nv;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nu = open_neighborhood(u);
    check_vertex(*this, v);
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::optional<int> Graph::regular_degree() const {
    if (n() == 0) return std::nullopt;
    int d = degree(0);
    for (int v = 1; v < n(); ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adj_) twice += nbrs.size();
    return twice / 2;
}

std::string Graph::spec_string() const {
    std::ostringstream out;
    switch (family_) {
        case GraphFamily::Circulant: {
            out << "circulant:" << n() << ":";
            for (std::size_t i = 0; i < jumps_.size(); ++i) {
                if (i) out << ",";
                out << jumps_[i];
            }
            break;
        }
        case GraphFamily::GeneralizedPetersen:
            out << "petersen:" << n() / 2 << ":" << skip_;
            break;
        case GraphFamily::Custom:
            out << "custom:" << n();
            break;
    }
    return out.str();
}

Graph Graph::circulant(int n, const std::vector<int>& jumps) {
    if (n < 3) throw InvalidParameter("circulant needs n >= 3, got " + std::to_string(n));
    if (jumps.empty()) throw InvalidParameter("circulant needs a non-empty jump set");
    std::set<int> seen;
    for (int s : jumps) {
        if (s < 1 || s > n / 2)
            throw InvalidParameter("jump " + std::to_string(s) + " out of range [1, " +
                                   std::to_string(n / 2) + "] for n = " + std::to_string(n));
        if (!seen.insert(s).second)
            throw InvalidParameter("duplicate jump " + std::to_string(s));
    }
    Graph g;
    g.family_ = GraphFamily::Circulant;
    g.jumps_.assign(seen.begin(), seen.end());
    g.adj_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto& nbrs = g.adj_[static_cast<std::size_t>(v)];
        for (int s : g.jumps_) {
            nbrs.push_back((v + s) % n);
            if (2 * s != n)  // the antipodal jump contributes a single edge
                nbrs.push_back(((v - s) % n + n) % n);
        }
        std::sort(nbrs.begin(), nbrs.end());
    }
    return g;
}

Graph Graph::generalized_petersen(int n, int k) {
    if (n < 3) throw InvalidParameter("petersen needs n >= 3, got " + std::to_string(n));
    if (k < 1 || 2 * k >= n)
        throw InvalidParameter("petersen skip k = " + std::to_string(k) +
                               " out of range [1, n/2) for n = " + std::to_string(n));
    Graph g;
    g.family_ = GraphFamily::GeneralizedPetersen;
    g.skip_ = k;
    g.adj_.resize(static_cast<std::size_t>(2 * n));
    auto outer = [](int i) { return i; };
    auto inner = [n](int i) { return n + i; };
    for (int i = 0; i < n; ++i) {
        int ip = (i + 1) % n;
        g.adj_[outer(i)].push_back(outer(ip));
        g.adj_[outer(ip)].push_back(outer(i));
        g.adj_[outer(i)].push_back(inner(i));
        g.adj_[inner(i)].push_back(outer(i));
        int ik = (i + k) % n;
        g.adj_[inner(i)].push_back(inner(ik));
        g.adj_[inner(ik)].push_back(inner(i));
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

Graph Graph::custom(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw InvalidParameter("custom graph needs n >= 1");
    Graph g;
    g.family_ = GraphFamily::Custom;
    g.adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidParameter("edge endpoint out of range");
        if (u == v) throw InvalidParameter("self-loops are not allowed");
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

Graph make_circulant(int n, const std::vector<int>& jumps) {
    return Graph::circulant(n, jumps);
}

Graph make_generalized_petersen(int n, int k) {
    return Graph::generalized_petersen(n, k);
}

namespace {

// Parses a nonnegative decimal integer at `pos`, advancing it.
int parse_int(const std::string& text, std::size_t& pos, const char* what) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError(std::string("expected ") + what, pos);
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 100000000L) throw ParseError(std::string(what) + " too large", pos);
        ++pos;
    }
    return static_cast<int>(value);
}

void expect(const std::string& text, std::size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c)
        throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
}

} // namespace

Graph parse_graph_spec(const std::string& text) {
    std::size_t pos = 0;
    std::size_t colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'circulant:' or 'petersen:'", 0);
    std::string head = text.substr(0, colon);
    pos = colon + 1;
    if (head == "circulant") {
        int n = parse_int(text, pos, "vertex count");
        expect(text, pos, ':');
        std::vector<int> jumps;
        int prev = 0;
        while (true) {
            std::size_t jump_pos = pos;
            int j = parse_int(text, pos, "jump");
            if (j <= prev) throw ParseError("jumps must be strictly increasing and positive", jump_pos);
            jumps.push_back(j);
            prev = j;
            if (pos == text.size()) break;
            expect(text, pos, ',');
        }
        return make_circulant(n, jumps);
    }
    if (head == "petersen") {
        int n = parse_int(text, pos, "outer cycle length");
        expect(text, pos, ':');
        int k = parse_int(text, pos, "inner skip");
        if (pos != text.size()) throw ParseError("trailing characters", pos);
        return make_generalized_petersen(n, k);
    }
    throw ParseError("unknown graph family '" + head + "'", 0);
}

std::string to_dot(const Graph& g, const RainbowAssignment* f) {
    if (f && f->size() != g.n())
        throw InvalidParameter("assignment covers " + std::to_string(f->size()) +
                               " vertices, graph has " + std::to_string(g.n()));
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "  v" << v;
        if (f) {
            Label l = f->labels[static_cast<std::size_t>(v)];
            std::string set = "{";
            for (int c = 1; c <= f->k; ++c)
                if (l & (1u << (c - 1))) set += (set.size() > 1 ? "," : "") + std::to_string(c);
            set += "}";
            out << " [label=\"" << set << "\"";
            if (l == 0)
                out << " style=filled fillcolor=gray";
            else if (label_size(l) == 1)
                out << " style=filled fillcolor=black fontcolor=white";
            else
                out << " shape=doublecircle";
            out << "]";
        }
        out << ";\n";
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.open_neighborhood(u))
            if (u < v) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace rainbow
