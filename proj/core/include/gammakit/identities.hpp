#pragma once

#include <string>
#include <vector>

namespace gammakit {

struct IdentityResult {
    std::string name;
    bool passed = true;
    long checked = 0;
    /// First failing instance, empty on success.
    std::string detail;
};

/// Upper size bounds for each sweep.
struct IdentityBounds {
    int q_relation = 30;
    int orbit = 10;
    int determinant = 9;
    int product = 5;
    int triangle = 20;
    int scalar = 9;
    int corner = 10;
    int constructible = 12;

    /// Every bound capped at n.
    static IdentityBounds capped(int n);
};

/// sum_{r=0}^n (-1)^r q_r q_{n-r} = 0 for 1 <= n <= max_n.
IdentityResult check_q_relation(int max_n);
/// r_a = r_{a^t} = r_{a°}.
IdentityResult check_orbit_invariance(int max_n);
/// Determinant and coarsening sum agree.
IdentityResult check_determinant(int max_n);
/// r_a r_b = r_{a.b} + r_{a⊙b}.
IdentityResult check_products(int max_n);
/// r_a^2 = 2 r_{a.a^t} = 2 r_{a⊙a^t}.
IdentityResult check_squares(int max_n);
/// Triangle q-expansion and the k <-> n-k+1 symmetry.
IdentityResult check_triangle_expansion(int max_n);
/// Closed-form coefficients of the one-row and (1,1,n-2) ribbons.
IdentityResult check_triangle_closed_forms(int max_n);
/// <p_lambda, q_mu> = 0 for odd lambda not refining mu.
IdentityResult check_scalar_vanishing(int max_n);
/// Corner identities and the many-corners bound, first row of length one.
IdentityResult check_corner_identities(int max_n);
/// Odd-size non-positivity criteria; uncovered cases only counted.
IdentityResult check_odd_size_theorems(int max_n);
/// For D built from B by j transposition steps each step halves the square,
/// so r_D = 2^{1-2^j} r_B^{2^j}.
IdentityResult check_constructible_powers(int max_n);

std::vector<IdentityResult> run_identity_suite(const IdentityBounds& bounds = {});

}  // namespace gammakit
