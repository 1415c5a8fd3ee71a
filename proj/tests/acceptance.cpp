// Acceptance criteria runner: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "gammakit/chromatic.hpp"
#include "gammakit/identities.hpp"
#include "gammakit/positivity.hpp"
#include "gammakit/tableaux.hpp"

using namespace gammakit;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

PExpansion from_terms(int degree, std::initializer_list<std::pair<Partition, int>> terms) {
    PExpansion f(degree);
    for (const auto& [lambda, c] : terms) f.add_term(lambda, c);
    return f;
}

Partition hook_partition(int top, int ones) {
    std::vector<int> parts{top};
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return Partition::from_parts(parts);
}

// Star graph expansions written out from the binomial formulas.
PExpansion star_x(int n) {
    PExpansion f(n);
    for (int r = 0; r < n; ++r) {
        const Integer c = binomial(n - 1, r);
        f.add_term(hook_partition(r + 1, n - r - 1), r % 2 ? Rational(-c) : Rational(c));
    }
    return f;
}

PExpansion star_y(int n) {
    PExpansion f(n);
    for (int r = 0; r < n; r += 2) f.add_term(hook_partition(r + 1, n - r - 1), Rational(binomial(n - 1, r)));
    return f;
}

Outcome merge(const std::vector<IdentityResult>& results) {
    Outcome o;
    std::ostringstream note;
    long checked = 0;
    for (const IdentityResult& r : results) {
        checked += r.checked;
        if (!r.passed) {
            o.ok = false;
            note << r.name << " failed at " << r.detail << "; ";
        }
    }
    note << checked << " instances";
    o.note = note.str();
    return o;
}

Outcome reference_constants() {
    Outcome o;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            o.ok = false;
            o.note += what + " differs; ";
        }
    };
    expect(chromatic_sym(triangle_graph()) == from_terms(3, {{{1, 1, 1}, 1}, {{2, 1}, -3}, {{3}, 2}}), "X_C3");
    expect(near_chromatic(triangle_graph()) == from_terms(3, {{{1, 1, 1}, 1}, {{3}, 2}}), "Y_C3");
    expect(q_p_expansion(1) == from_terms(1, {{{1}, 2}}), "q_1");
    expect(q_p_expansion(2) == from_terms(2, {{{1, 1}, 2}}), "q_2");
    for (int n = 1; n <= 10; ++n) {
        const std::string tag = std::to_string(n);
        expect(chromatic_sym(star_graph(n)) == star_x(n), "X_S" + tag);
        expect(near_chromatic(star_graph(n)) == star_y(n), "Y_S" + tag);
        expect(star_closed_form(n) == star_x(n), "closed X_S" + tag);
        expect(near_star_closed_form(n) == star_y(n), "closed Y_S" + tag);
    }
    if (o.ok) o.note = "X_C3, Y_C3, q_1, q_2, X_Sn and Y_Sn for n <= 10";
    return o;
}

Outcome triangle_classification() {
    Outcome o;
    int pairs = 0;
    for (int n = 1; n <= 14; ++n)
        for (int k = 1; k <= n; ++k, ++pairs) {
            const TriangleClassification t = classify_triangle(n, k);
            if (!t.agrees()) {
                o.ok = false;
                o.note += "n=" + std::to_string(n) + " k=" + std::to_string(k) + " disagrees; ";
            }
        }
    o.note += std::to_string(pairs) + " pairs";
    return o;
}

Outcome conjecture_sweep(int threads) {
    Outcome o;
    std::ostringstream note;
    for (int n = 1; n <= 12; ++n) {
        const ConjectureReport r = verify_conjecture(n, threads);
        if (!r.match) {
            o.ok = false;
            note << "n=" << n << " mismatch (" << r.missing.size() << " missing, " << r.extra.size() << " extra); ";
        }
    }
    note << "n = 1..12, " << threads << " threads";
    o.note = note.str();
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    long ribbons = 0;
    for (int n = 1; n <= 8; ++n)
        for (const Composition& a : compositions_of(n)) {
            ++ribbons;
            if (skew_Q(SkewShape::from_ribbon(Ribbon(a))) != ribbon_p_expansion(a)) {
                o.ok = false;
                o.note += "ribbon " + to_text(a) + " differs; ";
            }
        }
    int shapes = 0;
    for (int big = 1; big <= 12; ++big)
        for (const Partition& lambda : strict_partitions(big))
            for (int small = std::max(0, big - 8); small < big; ++small)
                for (const Partition& mu : strict_partitions(small)) {
                    if (mu.length() > lambda.length()) continue;
                    bool inside = true;
                    for (int i = 0; i < mu.length(); ++i) inside = inside && mu[i] <= lambda[i];
                    if (!inside) continue;
                    const SkewShape s(lambda, mu);
                    if (!analyze(s).witness) continue;
                    ++shapes;
                    const PExpansion f = skew_Q(s);
                    if (f.coefficient_sum() != 0 || f.is_p_positive()) {
                        o.ok = false;
                        o.note += "shape " + to_text(s) + " violates the non-ribbon criterion; ";
                    }
                }
    if (shapes < 20) {
        o.ok = false;
        o.note += "only " + std::to_string(shapes) + " non-ribbon shapes; ";
    }
    o.note += std::to_string(ribbons) + " ribbons, " + std::to_string(shapes) + " non-ribbon shapes";
    return o;
}

Outcome chromatic_classification() {
    Outcome o;
    long graphs = 0;
    for (int n = 1; n <= 6; ++n)
        for (std::uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask, ++graphs) {
            const SimpleGraph g = SimpleGraph::from_mask(n, mask);
            const PExpansion x = chromatic_sym(g);
            const PExpansion y = near_chromatic_from(x);
            const bool x_ok = is_in_gamma(x) == (g.edge_count() == 0);
            const bool y_ok = is_in_gamma(y) == is_star_or_triangle_plus_isolated(g);
            const bool omega_ok = g.components().size() != 1 || omega(x).is_p_positive();
            if (!(x_ok && y_ok && omega_ok)) {
                o.ok = false;
                o.note += to_text(g) + " fails; ";
            }
        }
    for (int n = 1; n <= 10; ++n)
        for (BasisFamily f : {BasisFamily::B1, BasisFamily::B2}) {
            const BasisCheck c = y_basis_check(f, n);
            if (c.rank != static_cast<int>(odd_partitions(n).size())) {
                o.ok = false;
                o.note += "rank deficit at n=" + std::to_string(n) + "; ";
            }
        }
    o.note += std::to_string(graphs) + " labelled graphs, bases for n <= 10";
    return o;
}

Outcome disconnected() {
    const DisconnectedReport r = verify_disconnected_conjecture(10);
    Outcome o;
    o.ok = r.holds();
    std::ostringstream note;
    note << r.multisets_checked << " products, " << r.counterexamples.size() << " counterexamples";
    for (const DisconnectedCase& c : r.counterexamples) {
        note << "; ";
        for (std::size_t i = 0; i < c.factors.size(); ++i) note << (i ? " * " : "") << "(" << to_text(c.factors[i]) << ")";
    }
    o.note = note.str();
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    int threads = 4;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--threads") threads = std::max(1, std::atoi(argv[i + 1]));

    const std::vector<Criterion> criteria{
        {1, "chromatic and q-function constants", 1, reference_constants},
        {2, "ribbon identity suite", 60,
         [] {
             return merge({check_orbit_invariance(10), check_determinant(9), check_products(5), check_squares(5)});
         }},
        {3, "triangle expansions and closed forms", 30,
         [] { return merge({check_triangle_expansion(20), check_triangle_closed_forms(20)}); }},
        {4, "triangle classification", 120, triangle_classification},
        {5, "positive ribbons match the constructible prediction", 600, [threads] { return conjecture_sweep(threads); }},
        {6, "tableau oracle equivalence", 300, oracle_equivalence},
        {7, "corner identities and corner bound", 60, [] { return merge({check_corner_identities(10)}); }},
        {8, "chromatic classification and bases", 300, chromatic_classification},
        {9, "disconnected ribbons", 600, disconnected},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds <= c.limit_seconds;
        const bool pass = o.ok && in_time;
        failures += !pass;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", seconds, c.limit_seconds);
        std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << timing << ")"
                  << (in_time ? "" : " over time limit") << ": " << o.note << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
