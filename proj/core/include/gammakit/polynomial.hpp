#pragma once

#include <map>
#include <string>
#include <vector>

#include "gammakit/rational.hpp"

namespace gammakit {

/// Exponent vector of a monomial in a fixed number of variables.
using Exponent = std::vector<int>;

/// Sparse rational polynomial in variables x_1..x_k.
class MonomialPolynomial {
public:
    explicit MonomialPolynomial(int variables) : variables_(variables) {}

    static MonomialPolynomial constant(int variables, const Rational& c);
    /// x_1^r + ... + x_k^r.
    static MonomialPolynomial power_sum(int variables, int r);

    int variables() const noexcept { return variables_; }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);

    MonomialPolynomial operator+(const MonomialPolynomial& o) const;
    MonomialPolynomial operator-(const MonomialPolynomial& o) const;
    MonomialPolynomial operator*(const MonomialPolynomial& o) const;
    MonomialPolynomial operator*(const Rational& c) const;
    bool operator==(const MonomialPolynomial& o) const = default;

    /// Every term has total degree d (vacuously true for zero).
    bool is_homogeneous(int d) const;
    /// Coefficients invariant under swapping x_a and x_b.
    bool symmetric_under_swap(int a, int b) const;

    std::string to_string() const;

private:
    int variables_;
    std::map<Exponent, Rational> terms_;
};

}  // namespace gammakit
