#include "gammakit/chromatic.hpp"
#include "gammakit/error.hpp"
#include "support.hpp"

using namespace gammakit;
using gammakit::testing::expansion;

namespace {

bool connected(const SimpleGraph& g) { return g.components().size() == 1; }

// Proper colourings counted directly: the coefficient of x_1 x_2 ... x_n in
// X_G is the number of proper colourings with n distinct colours, i.e. n!.
// With colours restricted to {1, 2} the coefficient of x1^a x2^b counts
// proper 2-colourings with a vertices of colour 1.
long two_colourings(const SimpleGraph& g, int ones) {
    const int n = g.vertex_count();
    long count = 0;
    for (std::uint32_t c = 0; c < (1u << n); ++c) {
        if (__builtin_popcount(c) != ones) continue;
        bool proper = true;
        for (const auto& [u, v] : g.edges()) proper = proper && ((c >> u & 1) != (c >> v & 1));
        count += proper;
    }
    return count;
}

}  // namespace

TEST_CASE("named graphs") {
    CHECK(star_graph(1).vertex_count() == 1);
    CHECK(star_graph(1).edge_count() == 0);
    const SimpleGraph s4 = star_graph(4);
    CHECK(s4.vertex_count() == 4);
    CHECK(s4.edges() == std::vector<SimpleGraph::Edge>{{0, 1}, {0, 2}, {0, 3}});
    const SimpleGraph u = disjoint_union(triangle_graph(), null_graph(2));
    CHECK(u.vertex_count() == 5);
    CHECK(u.edge_count() == 3);
    CHECK(u.components().size() == 3);
}

TEST_CASE("graph validation and text") {
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK(parse_graph("star:5") == star_graph(5));
    CHECK(parse_graph("triangle") == triangle_graph());
    CHECK(parse_graph("null:4") == null_graph(4));
    CHECK(parse_graph("union:triangle,null:2") == disjoint_union(triangle_graph(), null_graph(2)));
    const SimpleGraph path = parse_graph("n=4;edges=0-1,1-2,2-3");
    CHECK(path.edge_count() == 3);
    CHECK(parse_graph(to_text(path)) == path);
    CHECK_THROWS_AS(parse_graph("star:"), ParseError);
    CHECK_THROWS_AS(parse_graph("wheel:5"), ParseError);
    CHECK_THROWS_AS(parse_graph("n=3;edges=0-5"), ParseError);
}

TEST_CASE("chromatic symmetric functions") {
    CHECK(chromatic_sym(triangle_graph()) == expansion(3, {{{1, 1, 1}, 1}, {{2, 1}, -3}, {{3}, 2}}));
    CHECK(chromatic_sym(star_graph(2)) == expansion(2, {{{1, 1}, 1}, {{2}, -1}}));
    for (int n = 1; n <= 6; ++n) CHECK(chromatic_sym(null_graph(n)) == PExpansion::basis(Partition(std::vector<int>(n, 1))));
}

TEST_CASE("chromatic functions count proper colourings") {
    for (int n = 2; n <= 5; ++n)
        for (std::uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); mask += 3) {
            const SimpleGraph g = SimpleGraph::from_mask(n, mask);
            const MonomialPolynomial two = specialize(chromatic_sym(g), 2);
            for (int a = 0; a <= n; ++a) CHECK(two.coefficient({a, n - a}) == two_colourings(g, a));
        }
}

TEST_CASE("near chromatic functions") {
    CHECK(near_chromatic(triangle_graph()) == expansion(3, {{{1, 1, 1}, 1}, {{3}, 2}}));
    CHECK(near_chromatic(star_graph(3)) == expansion(3, {{{1, 1, 1}, 1}, {{3}, 1}}));
    CHECK(near_chromatic(null_graph(4)) == PExpansion::basis(Partition{1, 1, 1, 1}));
}

TEST_CASE("near chromatic keeps exactly the omega-even terms") {
    for (int n = 1; n <= 5; ++n)
        for (std::uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) {
            const PExpansion x = chromatic_sym(SimpleGraph::from_mask(n, mask));
            PExpansion kept(n);
            for (const auto& [lambda, c] : x.terms())
                if (lambda.even_part_count() % 2 == 0) kept.add_term(lambda, c);
            CHECK(near_chromatic_from(x) == kept);
        }
}

TEST_CASE("star closed forms") {
    CHECK(star_closed_form(2) == expansion(2, {{{1, 1}, 1}, {{2}, -1}}));
    CHECK(near_star_closed_form(3) == expansion(3, {{{1, 1, 1}, 1}, {{3}, 1}}));
    CHECK(near_star_closed_form(4) == expansion(4, {{{1, 1, 1, 1}, 1}, {{3, 1}, 3}}));
    for (int n = 1; n <= 10; ++n) {
        CHECK(chromatic_sym(star_graph(n)) == star_closed_form(n));
        CHECK(near_chromatic(star_graph(n)) == near_star_closed_form(n));
    }
}

TEST_CASE("disjoint unions multiply X but not Y") {
    const SimpleGraph t = triangle_graph();
    const SimpleGraph s = star_graph(4);
    CHECK(chromatic_sym(disjoint_union(t, s)) == chromatic_sym(t) * chromatic_sym(s));
    CHECK(chromatic_sym(disjoint_union(t, t)) == chromatic_sym(t) * chromatic_sym(t));
    CHECK(near_chromatic(disjoint_union(t, t)) != near_chromatic(t) * near_chromatic(t));
}

TEST_CASE("omega of X is p-positive for connected graphs on at most 6 vertices") {
    long checked = 0;
    for (int n = 1; n <= 6; ++n)
        for (std::uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) {
            const SimpleGraph g = SimpleGraph::from_mask(n, mask);
            if (!connected(g)) continue;
            CHECK(omega(chromatic_sym(g)).is_p_positive());
            ++checked;
        }
    CHECK(checked == 1 + 1 + 4 + 38 + 728 + 26704);
}

TEST_CASE("Gamma membership classification on all graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        for (std::uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) {
            const SimpleGraph g = SimpleGraph::from_mask(n, mask);
            const GammaMembership m = gamma_membership_classify(g);
            CHECK(m.x_in_gamma == (g.edge_count() == 0));
            CHECK(m.y_in_gamma == is_star_or_triangle_plus_isolated(g));
            CHECK(m.x_witness.has_value() == !m.x_in_gamma);
            if (m.x_witness) CHECK(m.x_witness->even_part_count() > 0);
            if (m.y_witness) CHECK(m.y_witness->even_part_count() > 0);
        }
}

TEST_CASE("classification examples") {
    const GammaMembership path = gamma_membership_classify(parse_graph("n=4;edges=0-1,1-2,2-3"));
    CHECK_FALSE(path.y_in_gamma);
    CHECK(path.y_witness == Partition{2, 2});
    CHECK(gamma_membership_classify(disjoint_union(triangle_graph(), null_graph(3))).y_in_gamma);
    const GammaMembership star = gamma_membership_classify(star_graph(5));
    CHECK_FALSE(star.x_in_gamma);
    CHECK(star.y_in_gamma);
}

TEST_CASE("disjoint edge pairs give the p_2^2 coefficient of Y") {
    for (int n = 4; n <= 6; ++n)
        for (std::uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) {
            const SimpleGraph g = SimpleGraph::from_mask(n, mask);
            std::vector<int> parts{2, 2};
            parts.resize(static_cast<std::size_t>(n - 2), 1);
            CHECK(near_chromatic(g).coefficient(Partition(parts)) == g.disjoint_edge_pairs());
        }
}

TEST_CASE("near chromatic bases") {
    const BasisCheck b2_1 = y_basis_check(BasisFamily::B2, 1);
    CHECK(b2_1.rank == 1);
    CHECK(b2_1.is_basis);
    const BasisCheck b2_4 = y_basis_check(BasisFamily::B2, 4);
    CHECK(b2_4.rank == 2);
    CHECK(b2_4.is_basis);
    const BasisCheck b1_9 = y_basis_check(BasisFamily::B1, 9);
    CHECK(b1_9.rank == 8);
    CHECK(b1_9.is_basis);
    for (int n = 1; n <= 10; ++n)
        for (BasisFamily f : {BasisFamily::B1, BasisFamily::B2}) {
            const BasisCheck c = y_basis_check(f, n);
            CHECK(c.dimension == static_cast<int>(odd_partitions(n).size()));
            CHECK(c.rank == c.dimension);
        }
    CHECK(family_graph(BasisFamily::B1, 3) == triangle_graph());
    CHECK(family_graph(BasisFamily::B2, 3) == star_graph(3));
    CHECK_THROWS_AS(y_basis_check(BasisFamily::B1, 15), GuardError);
}

TEST_CASE("edge guard") {
    std::vector<SimpleGraph::Edge> edges;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) edges.emplace_back(u, v);
    const SimpleGraph k8(8, edges);
    CHECK_THROWS_AS(chromatic_sym(k8), GuardError);
    CHECK_THROWS_AS(chromatic_sym(star_graph(6), 4), GuardError);
}
