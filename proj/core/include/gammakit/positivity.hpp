#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gammakit/algebra.hpp"
#include "gammakit/diagram.hpp"

namespace gammakit {

/// Size and time guards. Every sweep checks its request against these; the
/// CLI can raise them per invocation.
struct Limits {
    int positivity_size = 16;
    int triangle_size = 16;
    int constructible_size = 16;
    int conjecture_size = 14;
    int corner_sweep_size = 14;
    int disconnected_size = 10;
};

/// Lexicographic minimum of {r, r^t, r°, (r^t)°}; these four ribbons share
/// one ribbon Schur Q-function.
Ribbon canonical_ribbon(const Ribbon& r);
std::vector<Ribbon> ribbon_orbit(const Ribbon& r);

enum class Verdict { Positive, Negative };
std::string to_string(Verdict v);

struct PositivityReport {
    Ribbon ribbon;
    Verdict verdict = Verdict::Positive;
    /// First negative coefficient in canonical key order; set iff Negative.
    std::optional<std::pair<Partition, Rational>> witness;
    Ribbon canonical_form;
    PExpansion expansion;
};

PositivityReport is_p_positive(const Ribbon& r, const Limits& limits = {});

struct TriangleClassification {
    int n = 0;
    int k = 0;
    bool predicted = false;
    bool computed = false;
    bool agrees() const noexcept { return predicted == computed; }
};

/// Positivity of the triangle ribbon predicted by the k-membership rule:
/// always for n <= 2; k in {1, 3, n-2, n} for odd n; additionally n/2 and
/// n/2 + 1 for even n.
bool triangle_predicted_positive(int n, int k);
TriangleClassification classify_triangle(int n, int k, const Limits& limits = {});

/// Ribbons alpha^(j) . ... . alpha^(1) . B with B a basic block of size
/// n / 2^j, j >= 1, each alpha^(i) in {(2), (1,1)}; canonical forms.
std::set<Ribbon> constructible_set(int n, const Limits& limits = {});
std::set<Ribbon> canonical_basic_blocks(int n);
/// Basic blocks together with the constructible closure.
std::set<Ribbon> predicted_positive_set(int n, const Limits& limits = {});

struct ConjectureReport {
    int n = 0;
    std::set<Ribbon> p_positive;
    std::set<Ribbon> predicted;
    /// Predicted but not positive.
    std::vector<Ribbon> missing;
    /// Positive but not predicted.
    std::vector<Ribbon> extra;
    bool match = false;
    long compositions_checked = 0;
    double elapsed_ms = 0;
};

/// Checks every ribbon of size n: the positive ribbons must be exactly the
/// basic blocks and their constructible closure. Work is split over
/// composition-mask ranges across `threads` workers.
ConjectureReport verify_conjecture(int n, int threads = 1, const Limits& limits = {});
std::string to_json(const ConjectureReport& report, bool include_timing = true);

struct CornerIdentityReport {
    Ribbon ribbon;
    int n = 0;
    int length = 0;
    int corner_count = 0;
    Rational coefficient_sum;
    bool sum_holds = false;
    /// Only for odd n.
    std::optional<Rational> top_coefficient;
    std::optional<bool> top_holds;
    Rational m1_weighted_sum;
    /// Set when the first row has one box (and n >= 2 for the (1)-tail case).
    std::optional<Rational> m1_expected;
    std::optional<bool> m1_holds;
    bool all_hold() const noexcept;
};

CornerIdentityReport corner_identity_check(const Ribbon& r);

struct ManyCornersCheck {
    bool hypothesis = false;
    bool negative = false;
    /// Vacuously true when the hypothesis fails.
    bool consistent = true;
};

/// If c(D) > 1/2 + n/4 the ribbon must not be p-positive.
ManyCornersCheck many_corners_check(const Ribbon& r, const Limits& limits = {});

enum class OddSizeCase { NotApplicable, InBasicBlocks, EvenLength, HeadEven, HeadOddTailEven, HeadEqualsTail, Uncovered };
std::string to_string(OddSizeCase c);

struct OddSizeReport {
    Ribbon ribbon;
    OddSizeCase applied = OddSizeCase::NotApplicable;
    std::optional<int> head;
    std::optional<int> tail;
    bool negative = false;
    /// False only when a covered case applies and the ribbon is positive.
    bool consistent = true;
};

/// Non-positivity criteria for odd-size ribbons outside the basic blocks with
/// a single-box first row. Uncovered cases are reported, never asserted.
OddSizeReport odd_size_theorems_check(const Ribbon& r);

struct DisconnectedCase {
    std::vector<Ribbon> factors;
    bool product_positive = false;
    bool factors_positive = false;
};

struct DisconnectedReport {
    int max_n = 0;
    long multisets_checked = 0;
    long positive_products = 0;
    std::vector<DisconnectedCase> counterexamples;
    bool holds() const noexcept { return counterexamples.empty(); }
};

/// Every multiset of at least two connected ribbons with total size <=
/// max_n: the product is p-positive exactly when every factor is.
DisconnectedReport verify_disconnected_conjecture(int max_n, const Limits& limits = {});

/// Connected ribbons of size n up to the four-element symmetry, sorted.
std::vector<Ribbon> canonical_ribbons(int n);

}  // namespace gammakit
