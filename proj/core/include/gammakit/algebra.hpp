#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gammakit/combinat.hpp"
#include "gammakit/diagram.hpp"
#include "gammakit/polynomial.hpp"
#include "gammakit/rational.hpp"

namespace gammakit {

/// Homogeneous symmetric function of degree n written in the power-sum
/// basis: a sparse map partition -> nonzero rational.
class PExpansion {
public:
    using TermMap = std::map<Partition, Rational, CanonicalOrder>;

    explicit PExpansion(int degree = 0) : degree_(degree) {}

    static PExpansion one() { return basis(Partition{}); }
    static PExpansion basis(const Partition& lambda, const Rational& c = 1);

    int degree() const noexcept { return degree_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    Rational coefficient(const Partition& lambda) const;
    void add_term(const Partition& lambda, const Rational& c);
    /// this += c * other.
    void add_scaled(const PExpansion& other, const Rational& c);

    PExpansion operator+(const PExpansion& o) const;
    PExpansion operator-(const PExpansion& o) const;
    PExpansion operator-() const;
    PExpansion operator*(const PExpansion& o) const;
    PExpansion operator*(const Rational& c) const;
    PExpansion& operator+=(const PExpansion& o);
    PExpansion& operator-=(const PExpansion& o);
    bool operator==(const PExpansion& o) const = default;

    /// All coefficients nonnegative.
    bool is_p_positive() const;
    /// First negative term in canonical (descending) key order.
    std::optional<std::pair<Partition, Rational>> first_negative() const;
    Rational coefficient_sum() const;

    /// "8/3·p[1,1,1] − 2/3·p[3]": ascending key order, unit coefficients
    /// omitted, "0" for the zero function.
    std::string to_text() const;

private:
    int degree_;
    TermMap terms_;
};

/// Formal combination of products q_lambda = q_{lambda_1} q_{lambda_2} ...
class QPolynomial {
public:
    using TermMap = std::map<Partition, Integer, CanonicalOrder>;

    explicit QPolynomial(int degree = 0) : degree_(degree) {}

    int degree() const noexcept { return degree_; }
    const TermMap& terms() const noexcept { return terms_; }
    Integer coefficient(const Partition& lambda) const;
    void add_term(const Partition& lambda, const Integer& c);
    bool operator==(const QPolynomial& o) const = default;

    PExpansion to_p() const;
    /// "q[2,1] − q[3]", same conventions as PExpansion::to_text.
    std::string to_text() const;

private:
    int degree_;
    TermMap terms_;
};

/// q_n in the power-sum basis, computed directly (no memo).
PExpansion compute_q_expansion(int n);
/// Memoized q_n; safe to call concurrently.
const PExpansion& q_p_expansion(int n);
/// Memoized product q_{lambda_1} ... q_{lambda_l}.
const PExpansion& q_product_expansion(const Partition& lambda);

inline PExpansion p_multiply(const PExpansion& f, const PExpansion& g) { return f * g; }

/// The involution p_r -> (-1)^{r-1} p_r.
PExpansion omega(const PExpansion& f);

/// Hall inner product <p_lambda, p_mu> = delta z_lambda; 0 across degrees.
Rational scalar_product(const PExpansion& f, const PExpansion& g);

/// Signed coarsening sum for the ribbon Schur Q-function.
QPolynomial ribbon_q_polynomial(const Composition& alpha);
PExpansion ribbon_p_expansion(const Composition& alpha);
inline PExpansion ribbon_p_expansion(const Ribbon& r) { return ribbon_p_expansion(r.rows()); }

/// Determinant of the l x l matrix with q_{alpha_i+...+alpha_j} on and above
/// the diagonal and q_0 = 1 just below it; independent of the coarsening sum.
PExpansion ribbon_det(const Composition& alpha);

/// s_(n) and s_(n-1,1) over all partitions of n.
PExpansion schur_onerow_p(int n);
PExpansion schur_hook_p(int n);

/// Image under p_r -> x_1^r + ... + x_k^r.
MonomialPolynomial specialize(const PExpansion& f, int variables);

/// Support contained in the odd partitions.
bool is_in_gamma(const PExpansion& f);
/// A support partition with an even part, if any.
std::optional<Partition> gamma_witness(const PExpansion& f);

}  // namespace gammakit
