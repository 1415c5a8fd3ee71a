#include "gammakit/positivity.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <thread>

#include "gammakit/error.hpp"
#include "json.hpp"

namespace gammakit {

std::vector<Ribbon> ribbon_orbit(const Ribbon& r) {
    const Ribbon t = transpose(r);
    return {r, t, rotate(r), rotate(t)};
}

Ribbon canonical_ribbon(const Ribbon& r) {
    const auto orbit = ribbon_orbit(r);
    return *std::min_element(orbit.begin(), orbit.end());
}

std::string to_string(Verdict v) { return v == Verdict::Positive ? "positive" : "negative"; }

PositivityReport is_p_positive(const Ribbon& r, const Limits& limits) {
    check_guard("ribbon size for positivity check", r.size(), limits.positivity_size);
    PositivityReport out;
    out.ribbon = r;
    out.canonical_form = canonical_ribbon(r);
    out.expansion = ribbon_p_expansion(r);
    out.witness = out.expansion.first_negative();
    out.verdict = out.witness ? Verdict::Negative : Verdict::Positive;
    return out;
}

bool triangle_predicted_positive(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("triangle ribbon requires 1 <= k <= n");
    if (n <= 2) return true;
    if (k == 1 || k == 3 || k == n - 2 || k == n) return true;
    return n % 2 == 0 && (k == n / 2 || k == n / 2 + 1);
}

TriangleClassification classify_triangle(int n, int k, const Limits& limits) {
    check_guard("triangle size", n, limits.triangle_size);
    TriangleClassification out{n, k, triangle_predicted_positive(n, k), false};
    out.computed = ribbon_p_expansion(triangle(n, k)).is_p_positive();
    return out;
}

std::set<Ribbon> canonical_basic_blocks(int n) {
    std::set<Ribbon> out;
    for (const Ribbon& b : basic_blocks(n)) out.insert(canonical_ribbon(b));
    return out;
}

std::set<Ribbon> constructible_set(int n, const Limits& limits) {
    if (n < 1) throw std::invalid_argument("constructible set needs n >= 1");
    check_guard("constructible set size", n, limits.constructible_size);
    const Composition row{2};
    const Composition column{1, 1};
    std::set<Ribbon> out;
    for (int depth = 1; n % (1 << depth) == 0; ++depth) {
        const int block_size = n >> depth;
        for (const Ribbon& block : basic_blocks(block_size)) {
            for (unsigned choice = 0; choice < (1u << depth); ++choice) {
                Ribbon d = block;
                for (int i = 0; i < depth; ++i) d = comp_transpose(choice >> i & 1 ? column : row, d);
                out.insert(canonical_ribbon(d));
            }
        }
    }
    return out;
}

std::set<Ribbon> predicted_positive_set(int n, const Limits& limits) {
    auto out = canonical_basic_blocks(n);
    out.merge(constructible_set(n, limits));
    return out;
}

std::vector<Ribbon> canonical_ribbons(int n) {
    std::vector<Ribbon> out;
    for (const Composition& alpha : compositions_of(n)) {
        Ribbon r(alpha);
        if (canonical_ribbon(r) == r) out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ConjectureReport verify_conjecture(int n, int threads, const Limits& limits) {
    if (n < 1) throw std::invalid_argument("conjecture verification needs n >= 1");
    check_guard("conjecture verification size", n, limits.conjecture_size);
    const auto start = std::chrono::steady_clock::now();

    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    const auto workers = static_cast<std::uint64_t>(std::clamp(threads, 1, 256));
    const std::uint64_t chunk = (total + workers - 1) / workers;

    std::mutex merge_mutex;
    std::set<Ribbon> positive;
    {
        std::vector<std::jthread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t first = std::min(total, w * chunk);
            const std::uint64_t last = std::min(total, first + chunk);
            if (first == last) continue;
            pool.emplace_back([&, first, last] {
                std::set<Ribbon> local;
                for (const Composition& alpha : CompositionRange(n, first, last)) {
                    Ribbon r(alpha);
                    if (canonical_ribbon(r) != r) continue;
                    if (ribbon_p_expansion(r).is_p_positive()) local.insert(std::move(r));
                }
                std::lock_guard lock(merge_mutex);
                positive.merge(local);
            });
        }
    }

    ConjectureReport report;
    report.n = n;
    report.p_positive = std::move(positive);
    report.predicted = predicted_positive_set(n, limits);
    std::set_difference(report.predicted.begin(), report.predicted.end(), report.p_positive.begin(),
                        report.p_positive.end(), std::back_inserter(report.missing));
    std::set_difference(report.p_positive.begin(), report.p_positive.end(), report.predicted.begin(),
                        report.predicted.end(), std::back_inserter(report.extra));
    report.match = report.missing.empty() && report.extra.empty();
    report.compositions_checked = static_cast<long>(total);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string to_json(const ConjectureReport& report, bool include_timing) {
    auto list = [](const auto& ribbons) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Ribbon& r : ribbons) arr.push_back(to_text(r));
        return arr;
    };
    nlohmann::ordered_json doc;
    doc["n"] = report.n;
    doc["match"] = report.match;
    doc["p_positive"] = list(report.p_positive);
    doc["predicted"] = list(report.predicted);
    doc["missing"] = list(report.missing);
    doc["extra"] = list(report.extra);
    if (include_timing) doc["elapsed_ms"] = static_cast<long long>(report.elapsed_ms);
    return doc.dump();
}

bool CornerIdentityReport::all_hold() const noexcept {
    return sum_holds && top_holds.value_or(true) && m1_holds.value_or(true);
}

CornerIdentityReport corner_identity_check(const Ribbon& r) {
    CornerIdentityReport out;
    out.ribbon = r;
    out.n = r.size();
    out.length = r.length();
    out.corner_count = corners(r);
    const PExpansion f = ribbon_p_expansion(r);

    out.coefficient_sum = f.coefficient_sum();
    out.sum_holds = out.coefficient_sum == 2;

    if (out.n % 2 == 1) {
        out.top_coefficient = f.coefficient(Partition{out.n});
        const Rational expected = Rational(out.length % 2 == 1 ? 2 : -2) / out.n;
        out.top_holds = *out.top_coefficient == expected;
    }

    out.m1_weighted_sum = 0;
    for (const auto& [lambda, c] : f.terms()) out.m1_weighted_sum += c * lambda.multiplicity(1);
    if (r.first_row() == 1) {
        if (r.last_row() > 1)
            out.m1_expected = Rational(8 * out.corner_count);
        else if (out.n >= 2)
            out.m1_expected = Rational(8 * out.corner_count - 4);
        if (out.m1_expected) out.m1_holds = out.m1_weighted_sum == *out.m1_expected;
    }
    return out;
}

ManyCornersCheck many_corners_check(const Ribbon& r, const Limits& limits) {
    check_guard("ribbon size for corner check", r.size(), limits.corner_sweep_size);
    ManyCornersCheck out;
    // c > 1/2 + n/4  <=>  4c > 2 + n
    out.hypothesis = 4 * corners(r) > 2 + r.size();
    if (out.hypothesis) {
        out.negative = !ribbon_p_expansion(r).is_p_positive();
        out.consistent = out.negative;
    }
    return out;
}

std::string to_string(OddSizeCase c) {
    switch (c) {
        case OddSizeCase::NotApplicable: return "not-applicable";
        case OddSizeCase::InBasicBlocks: return "basic-block";
        case OddSizeCase::EvenLength: return "even-length";
        case OddSizeCase::HeadEven: return "head-even";
        case OddSizeCase::HeadOddTailEven: return "head-odd-tail-even";
        case OddSizeCase::HeadEqualsTail: return "head-equals-tail";
        case OddSizeCase::Uncovered: return "uncovered";
    }
    return "unknown";
}

OddSizeReport odd_size_theorems_check(const Ribbon& r) {
    OddSizeReport out;
    out.ribbon = r;
    out.head = head_length(r);
    out.tail = tail_length(r);
    if (r.size() % 2 == 0 || r.first_row() != 1) return out;

    const auto blocks = basic_blocks(r.size());
    if (std::find(blocks.begin(), blocks.end(), r) != blocks.end()) {
        out.applied = OddSizeCase::InBasicBlocks;
    } else if (r.length() % 2 == 0) {
        out.applied = OddSizeCase::EvenLength;
    } else {
        // Outside the basic blocks with a one-box first row, r is not a
        // single column, so both lengths exist.
        const int k = *out.head;
        const int m = *out.tail;
        if (r.last_row() > 1 && k % 2 == 0)
            out.applied = OddSizeCase::HeadEven;
        else if (r.last_row() > 1 && m % 2 == 0)
            out.applied = OddSizeCase::HeadOddTailEven;
        else if (r.last_row() == 1 && k == m)
            out.applied = OddSizeCase::HeadEqualsTail;
        else
            out.applied = OddSizeCase::Uncovered;
    }
    out.negative = !ribbon_p_expansion(r).is_p_positive();
    const bool covered = out.applied != OddSizeCase::InBasicBlocks && out.applied != OddSizeCase::Uncovered;
    out.consistent = !covered || out.negative;
    return out;
}

namespace {

struct Factor {
    Ribbon ribbon;
    PExpansion expansion;
    bool positive;
};

class DisconnectedSearch {
public:
    DisconnectedSearch(int max_n, DisconnectedReport& report) : max_n_(max_n), report_(report) {
        for (int n = 1; n < max_n; ++n)
            for (Ribbon& r : canonical_ribbons(n)) {
                PExpansion f = ribbon_p_expansion(r);
                const bool positive = f.is_p_positive();
                factors_.push_back({std::move(r), std::move(f), positive});
            }
    }

    void run() { extend(0, 0, PExpansion::one(), true); }

private:
    void extend(std::size_t from, int used, const PExpansion& product, bool all_positive) {
        for (std::size_t i = from; i < factors_.size(); ++i) {
            const Factor& f = factors_[i];
            if (used + f.ribbon.size() > max_n_) continue;
            chosen_.push_back(i);
            const PExpansion next = product * f.expansion;
            const bool next_all = all_positive && f.positive;
            if (chosen_.size() >= 2) record(next, next_all);
            extend(i, used + f.ribbon.size(), next, next_all);
            chosen_.pop_back();
        }
    }

    void record(const PExpansion& product, bool factors_positive) {
        ++report_.multisets_checked;
        const bool positive = product.is_p_positive();
        if (positive) ++report_.positive_products;
        if (positive != factors_positive) {
            DisconnectedCase c;
            for (std::size_t i : chosen_) c.factors.push_back(factors_[i].ribbon);
            c.product_positive = positive;
            c.factors_positive = factors_positive;
            report_.counterexamples.push_back(std::move(c));
        }
    }

    int max_n_;
    DisconnectedReport& report_;
    std::vector<Factor> factors_;
    std::vector<std::size_t> chosen_;
};

}  // namespace

DisconnectedReport verify_disconnected_conjecture(int max_n, const Limits& limits) {
    check_guard("disconnected conjecture total size", max_n, limits.disconnected_size);
    DisconnectedReport report;
    report.max_n = max_n;
    if (max_n >= 2) DisconnectedSearch(max_n, report).run();
    return report;
}

}  // namespace gammakit
