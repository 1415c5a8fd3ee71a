#include "gammakit/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace gammakit {

MonomialPolynomial MonomialPolynomial::constant(int variables, const Rational& c) {
    MonomialPolynomial p(variables);
    p.add_term(Exponent(static_cast<std::size_t>(variables), 0), c);
    return p;
}

MonomialPolynomial MonomialPolynomial::power_sum(int variables, int r) {
    MonomialPolynomial p(variables);
    for (int i = 0; i < variables; ++i) {
        Exponent e(static_cast<std::size_t>(variables), 0);
        e[static_cast<std::size_t>(i)] = r;
        p.add_term(e, 1);
    }
    return p;
}

Rational MonomialPolynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MonomialPolynomial::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != variables_)
        throw std::invalid_argument("exponent vector has the wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MonomialPolynomial MonomialPolynomial::operator+(const MonomialPolynomial& o) const {
    if (o.variables_ != variables_) throw std::invalid_argument("variable count mismatch");
    MonomialPolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MonomialPolynomial MonomialPolynomial::operator-(const MonomialPolynomial& o) const {
    return *this + o * Rational(-1);
}

MonomialPolynomial MonomialPolynomial::operator*(const MonomialPolynomial& o) const {
    if (o.variables_ != variables_) throw std::invalid_argument("variable count mismatch");
    MonomialPolynomial out(variables_);
    Exponent e(static_cast<std::size_t>(variables_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MonomialPolynomial MonomialPolynomial::operator*(const Rational& c) const {
    MonomialPolynomial out(variables_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

bool MonomialPolynomial::is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
}

bool MonomialPolynomial::symmetric_under_swap(int a, int b) const {
    for (const auto& [e, c] : terms_) {
        Exponent s = e;
        std::swap(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
        if (coefficient(s) != c) return false;
    }
    return true;
}

std::string MonomialPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Highest exponents first (reverse lexicographic on exponent vectors).
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        first = false;
        const Rational mag = abs(c);
        bool constant = true;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            constant = false;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (constant)
            out += gammakit::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += gammakit::to_string(mag) + "*" + mono;
    }
    return out;
}

}  // namespace gammakit
