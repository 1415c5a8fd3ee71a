#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "doctest.h"
#include "gammakit/algebra.hpp"
#include "gammakit/diagram.hpp"

namespace doctest {

template <>
struct StringMaker<gammakit::PExpansion> {
    static String convert(const gammakit::PExpansion& f) { return f.to_text().c_str(); }
};

template <>
struct StringMaker<gammakit::Ribbon> {
    static String convert(const gammakit::Ribbon& r) { return ("(" + to_text(r) + ")").c_str(); }
};

template <>
struct StringMaker<gammakit::Partition> {
    static String convert(const gammakit::Partition& p) { return ("(" + to_text(p) + ")").c_str(); }
};

template <>
struct StringMaker<gammakit::Composition> {
    static String convert(const gammakit::Composition& c) { return ("(" + to_text(c) + ")").c_str(); }
};

template <>
struct StringMaker<gammakit::Rational> {
    static String convert(const gammakit::Rational& q) { return gammakit::to_string(q).c_str(); }
};

}  // namespace doctest

namespace gammakit::testing {

using Term = std::pair<Partition, Rational>;

inline PExpansion expansion(int degree, std::initializer_list<Term> terms) {
    PExpansion f(degree);
    for (const auto& [lambda, c] : terms) f.add_term(lambda, c);
    return f;
}

inline Rational frac(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace gammakit::testing
