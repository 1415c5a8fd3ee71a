#include "gammakit/rational.hpp"

#include <string>

#include "gammakit/error.hpp"

namespace gammakit {

std::string to_string(const Rational& q) {
    // mpq_class::get_str already omits a unit denominator.
    return q.get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto valid = !s.empty();
    for (std::size_t i = 0; i < s.size() && valid; ++i) {
        const char c = s[i];
        valid = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    }
    if (!valid) throw ParseError("malformed rational '" + s + "'");
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw ParseError("malformed rational '" + s + "'");
    q.canonicalize();
    return q;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace gammakit
