#include "gammakit/chromatic.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "gammakit/error.hpp"
#include "gammakit/linalg.hpp"

namespace gammakit {

SimpleGraph::SimpleGraph(int vertices, std::vector<Edge> edges) : n_(vertices), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("simple graphs have no loops");
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("simple graphs have no multi-edges");
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

namespace {

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto& p = parent[static_cast<std::size_t>(x)];
            p = parent[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
    }
    std::vector<int> parent;
    std::vector<int> size;
};

}  // namespace

std::vector<std::vector<int>> SimpleGraph::components() const {
    UnionFind uf(n_);
    for (const auto& [u, v] : edges_) uf.unite(u, v);
    std::vector<std::vector<int>> out;
    std::vector<int> index(static_cast<std::size_t>(n_), -1);
    for (int v = 0; v < n_; ++v) {
        const int root = uf.find(v);
        if (index[static_cast<std::size_t>(root)] < 0) {
            index[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(index[static_cast<std::size_t>(root)])].push_back(v);
    }
    return out;
}

long SimpleGraph::disjoint_edge_pairs() const {
    long count = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (std::size_t j = i + 1; j < edges_.size(); ++j) {
            const auto [a, b] = edges_[i];
            const auto [c, d] = edges_[j];
            if (a != c && a != d && b != c && b != d) ++count;
        }
    return count;
}

SimpleGraph SimpleGraph::from_mask(int n, std::uint32_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star graphs need n >= 1");
    std::vector<SimpleGraph::Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph triangle_graph() { return SimpleGraph(3, {{0, 1}, {0, 2}, {1, 2}}); }

SimpleGraph null_graph(int n) {
    if (n < 1) throw std::invalid_argument("null graphs need n >= 1");
    return SimpleGraph(n);
}

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
    auto edges = g.edges();
    const int shift = g.vertex_count();
    for (const auto& [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
    return SimpleGraph(g.vertex_count() + h.vertex_count(), std::move(edges));
}

namespace {

int parse_count(std::string_view text, std::string_view context) {
    if (text.empty() || text.size() > 6 ||
        !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("expected a vertex count in '" + std::string(context) + "'");
    return std::stoi(std::string(text));
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? text.npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

SimpleGraph parse_atom(std::string_view text) {
    try {
        if (text == "triangle") return triangle_graph();
        if (text.starts_with("star:")) return star_graph(parse_count(text.substr(5), text));
        if (text.starts_with("null:")) return null_graph(parse_count(text.substr(5), text));
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError("'" + std::string(text) + "': " + e.what());
    }
    throw ParseError("unknown graph '" + std::string(text) + "'");
}

}  // namespace

SimpleGraph parse_graph(std::string_view text) {
    if (text.starts_with("union:")) {
        const auto parts = split(text.substr(6), ',');
        SimpleGraph g(0);
        for (auto part : parts) g = disjoint_union(g, parse_atom(part));
        if (g.vertex_count() == 0) throw ParseError("empty union");
        return g;
    }
    if (text.starts_with("n=")) {
        const auto fields = split(text, ';');
        const int n = parse_count(fields[0].substr(2), text);
        std::vector<SimpleGraph::Edge> edges;
        if (fields.size() > 2) throw ParseError("unexpected fields in '" + std::string(text) + "'");
        if (fields.size() == 2) {
            auto edge_text = fields[1];
            if (!edge_text.starts_with("edges=")) throw ParseError("expected edges= in '" + std::string(text) + "'");
            edge_text.remove_prefix(6);
            if (!edge_text.empty()) {
                for (auto e : split(edge_text, ',')) {
                    const auto ends = split(e, '-');
                    if (ends.size() != 2) throw ParseError("malformed edge '" + std::string(e) + "'");
                    edges.emplace_back(parse_count(ends[0], e), parse_count(ends[1], e));
                }
            }
        }
        try {
            return SimpleGraph(n, std::move(edges));
        } catch (const std::invalid_argument& err) {
            throw ParseError("'" + std::string(text) + "': " + err.what());
        }
    }
    return parse_atom(text);
}

std::string to_text(const SimpleGraph& g) {
    std::string out = "n=" + std::to_string(g.vertex_count()) + ";edges=";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(g.edges()[i].first) + "-" + std::to_string(g.edges()[i].second);
    }
    return out;
}

PExpansion chromatic_sym(const SimpleGraph& g, int max_edges) {
    check_guard("edge count for subset enumeration", g.edge_count(), std::min(max_edges, 40));
    const int n = g.vertex_count();
    const auto& edges = g.edges();
    const std::uint64_t subsets = std::uint64_t{1} << edges.size();

    // Key: sorted component sizes packed 5 bits each (n <= 12 in practice,
    // larger graphs fall back to a vector key).
    std::map<Partition, long long, CanonicalOrder> acc;
    std::unordered_map<std::uint64_t, long long> packed;
    const bool pack = n <= 12;
    std::vector<int> sizes;
    for (std::uint64_t s = 0; s < subsets; ++s) {
        UnionFind uf(n);
        int picked = 0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (s >> e & 1) {
                uf.unite(edges[e].first, edges[e].second);
                ++picked;
            }
        }
        sizes.clear();
        for (int v = 0; v < n; ++v)
            if (uf.find(v) == v) sizes.push_back(uf.size[static_cast<std::size_t>(v)]);
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        const long long sign = picked % 2 == 0 ? 1 : -1;
        if (pack) {
            std::uint64_t key = 0;
            for (int sz : sizes) key = key << 5 | static_cast<std::uint64_t>(sz);
            packed[key] += sign;
        } else {
            acc[Partition(sizes)] += sign;
        }
    }
    for (const auto& [packed_key, c] : packed) {
        std::vector<int> parts;
        for (std::uint64_t key = packed_key; key; key >>= 5) parts.push_back(static_cast<int>(key & 31));
        acc[Partition::from_parts(std::move(parts))] += c;
    }
    PExpansion out(n);
    for (const auto& [lambda, c] : acc) out.add_term(lambda, Rational(static_cast<long>(c)));
    return out;
}

PExpansion near_chromatic_from(const PExpansion& x) { return (x + omega(x)) * Rational(1, 2); }

PExpansion near_chromatic(const SimpleGraph& g, int max_edges) {
    return near_chromatic_from(chromatic_sym(g, max_edges));
}

PExpansion star_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("star graphs need n >= 1");
    PExpansion out(n);
    for (int r = 0; r <= n - 1; ++r) {
        std::vector<int> parts{r + 1};
        parts.insert(parts.end(), static_cast<std::size_t>(n - r - 1), 1);
        const Integer c = binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(r));
        out.add_term(Partition::from_parts(std::move(parts)), Rational(r % 2 == 0 ? c : Integer(-c)));
    }
    return out;
}

PExpansion near_star_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("star graphs need n >= 1");
    PExpansion out(n);
    // binom(n-1, r) p_{r+1} p_1^{n-r-1} over even r; the even-n sum stops at
    // r = n-2, the odd-n sum at r = n-1, both are simply r <= n-1.
    for (int r = 0; r <= n - 1; r += 2) {
        std::vector<int> parts{r + 1};
        parts.insert(parts.end(), static_cast<std::size_t>(n - r - 1), 1);
        out.add_term(Partition::from_parts(std::move(parts)),
                     Rational(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(r))));
    }
    return out;
}

GammaMembership gamma_membership_classify(const SimpleGraph& g, int max_edges) {
    const PExpansion x = chromatic_sym(g, max_edges);
    const PExpansion y = near_chromatic_from(x);
    GammaMembership out;
    out.x_witness = gamma_witness(x);
    out.y_witness = gamma_witness(y);
    out.x_in_gamma = !out.x_witness;
    out.y_in_gamma = !out.y_witness;
    return out;
}

bool is_star_or_triangle_plus_isolated(const SimpleGraph& g) {
    const auto& edges = g.edges();
    if (edges.empty()) return true;
    // Star: some vertex lies on every edge.
    for (int hub : {edges[0].first, edges[0].second}) {
        if (std::all_of(edges.begin(), edges.end(),
                        [hub](const auto& e) { return e.first == hub || e.second == hub; }))
            return true;
    }
    if (edges.size() == 3) {
        std::vector<int> ends;
        for (const auto& [u, v] : edges) {
            ends.push_back(u);
            ends.push_back(v);
        }
        std::sort(ends.begin(), ends.end());
        ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
        return ends.size() == 3;
    }
    return false;
}

SimpleGraph family_graph(BasisFamily family, int k) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("basis families are indexed by odd k");
    if (k == 3 && family == BasisFamily::B1) return triangle_graph();
    return star_graph(k);
}

std::vector<PExpansion> y_basis_elements(BasisFamily family, int n) {
    std::map<int, PExpansion> y;
    std::vector<PExpansion> out;
    for (const Partition& lambda : odd_partitions(n)) {
        PExpansion product = PExpansion::one();
        for (int k : lambda.parts()) {
            auto it = y.find(k);
            if (it == y.end()) it = y.emplace(k, near_chromatic(family_graph(family, k))).first;
            product = product * it->second;
        }
        out.push_back(std::move(product));
    }
    return out;
}

BasisCheck y_basis_check(BasisFamily family, int n, int max_n) {
    if (n < 1) throw std::invalid_argument("basis check needs n >= 1");
    check_guard("basis check degree", n, max_n);
    const auto columns = odd_partitions(n);
    RationalMatrix m;
    for (const PExpansion& f : y_basis_elements(family, n)) {
        std::vector<Rational> row;
        row.reserve(columns.size());
        for (const Partition& lambda : columns) row.push_back(f.coefficient(lambda));
        // Elements outside Gamma would carry support outside these columns.
        if (!is_in_gamma(f)) throw std::logic_error("near-chromatic basis element outside Gamma");
        m.push_back(std::move(row));
    }
    BasisCheck out{family, n, exact_rank(m), static_cast<int>(columns.size()), false};
    out.is_basis = out.rank == out.dimension && static_cast<int>(m.size()) == out.dimension;
    return out;
}

}  // namespace gammakit
