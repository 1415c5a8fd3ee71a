#pragma once

#include <functional>
#include <vector>

#include "gammakit/algebra.hpp"
#include "gammakit/diagram.hpp"
#include "gammakit/polynomial.hpp"

namespace gammakit {

/// A letter of the alphabet 1' < 1 < 2' < 2 < ...
struct Letter {
    int value = 1;
    bool marked = false;

    /// Position in the total order: 1' -> 1, 1 -> 2, 2' -> 3, ...
    int code() const noexcept { return 2 * value - (marked ? 1 : 0); }
    static Letter from_code(int code) noexcept { return {(code + 1) / 2, code % 2 == 1}; }
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A filling of a shifted skew shape; letters are listed in the order of
/// SkewShape::boxes().
struct MarkedShiftedTableau {
    std::vector<Box> boxes;
    std::vector<Letter> letters;

    /// Multiplicity of each unmarked value 1..k, ignoring the marking.
    std::vector<int> content(int max_value) const;
    /// Rows and columns weakly increasing, at most one unmarked k per column
    /// and at most one marked k per row.
    bool is_valid() const;
};

/// Visits every marked shifted tableau of the shape with values <= max_value.
void for_each_tableau(const SkewShape& shape, int max_value,
                      const std::function<void(const MarkedShiftedTableau&)>& visit);
std::vector<MarkedShiftedTableau> enumerate_tableaux(const SkewShape& shape, int max_value);

/// Number of tableaux whose content is exactly `content` (content[i] copies
/// of value i+1).
Integer count_with_content(const SkewShape& shape, const std::vector<int>& content);

/// Generating polynomial sum_T x^{c(T)} in `variables` variables.
MonomialPolynomial q_function_monomial(const SkewShape& shape, int variables);

/// Coefficient of x^mu (mu a partition used as an exponent vector) in p_lambda.
Integer monomial_coefficient_of_p(const Partition& lambda, const Partition& mu);

/// Recovers the power-sum coefficients over the odd partitions of n from a
/// symmetric homogeneous polynomial in at least n variables. Only the
/// coefficients at partition-shaped exponents are read; the remaining terms
/// must agree with them by symmetry. Throws InconsistentSystem if the
/// polynomial is not in the span.
PExpansion p_expansion_from_monomial(const MonomialPolynomial& poly, int n);

/// Skew Schur Q-function of a shifted skew shape by tableau counting and
/// exact basis change (n = |shape| variables).
PExpansion skew_Q(const SkewShape& shape);

}  // namespace gammakit
