#include "gammakit/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "gammakit/qcache.hpp"

namespace gammakit {

namespace {

constexpr const char* kMinus = "−";
constexpr const char* kDot = "·";

std::string bracketed(const char* symbol, const Partition& lambda) {
    return std::string(symbol) + "[" + gammakit::to_text(lambda) + "]";
}

// Shared renderer: ascending key order, signs pulled out of the coefficients.
template <typename Map, typename ToRational>
std::string render(const Map& terms, const char* symbol, ToRational to_rational) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Rational c = to_rational(it->second);
        if (first)
            out += c < 0 ? kMinus : "";
        else
            out += c < 0 ? std::string(" ") + kMinus + " " : std::string(" + ");
        first = false;
        const Rational mag = abs(c);
        if (it->first.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += bracketed(symbol, it->first);
        else
            out += to_string(mag) + kDot + bracketed(symbol, it->first);
    }
    return out;
}

}  // namespace

PExpansion PExpansion::basis(const Partition& lambda, const Rational& c) {
    PExpansion f(lambda.size());
    f.add_term(lambda, c);
    return f;
}

Rational PExpansion::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PExpansion::add_term(const Partition& lambda, const Rational& c) {
    if (lambda.size() != degree_)
        throw std::invalid_argument("term of degree " + std::to_string(lambda.size()) +
                                    " added to an expansion of degree " + std::to_string(degree_));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void PExpansion::add_scaled(const PExpansion& other, const Rational& c) {
    if (c == 0 || other.is_zero()) return;
    if (other.degree_ != degree_) throw std::invalid_argument("degree mismatch in PExpansion sum");
    for (const auto& [lambda, v] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(lambda, v * c);
        if (!inserted) {
            it->second += v * c;
            if (it->second == 0) terms_.erase(it);
        }
    }
}

PExpansion& PExpansion::operator+=(const PExpansion& o) {
    add_scaled(o, 1);
    return *this;
}

PExpansion& PExpansion::operator-=(const PExpansion& o) {
    add_scaled(o, -1);
    return *this;
}

PExpansion PExpansion::operator+(const PExpansion& o) const {
    PExpansion out = *this;
    out += o;
    return out;
}

PExpansion PExpansion::operator-(const PExpansion& o) const {
    PExpansion out = *this;
    out -= o;
    return out;
}

PExpansion PExpansion::operator-() const { return *this * Rational(-1); }

PExpansion PExpansion::operator*(const PExpansion& o) const {
    PExpansion out(degree_ + o.degree_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) out.add_term(a.merged(b), ca * cb);
    return out;
}

PExpansion PExpansion::operator*(const Rational& c) const {
    PExpansion out(degree_);
    if (c == 0) return out;
    for (const auto& [lambda, v] : terms_) out.terms_.emplace(lambda, v * c);
    return out;
}

bool PExpansion::is_p_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::optional<std::pair<Partition, Rational>> PExpansion::first_negative() const {
    for (const auto& [lambda, c] : terms_)
        if (c < 0) return std::pair{lambda, c};
    return std::nullopt;
}

Rational PExpansion::coefficient_sum() const {
    Rational s = 0;
    for (const auto& [lambda, c] : terms_) s += c;
    return s;
}

std::string PExpansion::to_text() const {
    return render(terms_, "p", [](const Rational& c) { return c; });
}

Integer QPolynomial::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Integer(0) : it->second;
}

void QPolynomial::add_term(const Partition& lambda, const Integer& c) {
    if (lambda.size() != degree_) throw std::invalid_argument("degree mismatch in QPolynomial");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PExpansion QPolynomial::to_p() const {
    PExpansion out(degree_);
    for (const auto& [lambda, c] : terms_) out.add_scaled(q_product_expansion(lambda), Rational(c));
    return out;
}

std::string QPolynomial::to_text() const {
    return render(terms_, "q", [](const Integer& c) { return Rational(c); });
}

PExpansion compute_q_expansion(int n) {
    if (n < 0) throw std::invalid_argument("q_n needs n >= 0");
    PExpansion out(n);
    for (const Partition& lambda : odd_partitions(n)) {
        Integer two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(lambda.length()));
        out.add_term(lambda, Rational(two_pow) / z_of(lambda));
    }
    return out;
}

const PExpansion& q_p_expansion(int n) { return QMemo::instance().q(n); }

const PExpansion& q_product_expansion(const Partition& lambda) {
    return QMemo::instance().q_product(lambda);
}

PExpansion omega(const PExpansion& f) {
    PExpansion out(f.degree());
    for (const auto& [lambda, c] : f.terms())
        out.add_term(lambda, (lambda.size() - lambda.length()) % 2 == 0 ? c : Rational(-c));
    return out;
}

Rational scalar_product(const PExpansion& f, const PExpansion& g) {
    if (f.degree() != g.degree()) return 0;
    Rational s = 0;
    for (const auto& [lambda, c] : f.terms()) {
        const Rational d = g.coefficient(lambda);
        if (d != 0) s += c * d * z_of(lambda);
    }
    return s;
}

QPolynomial ribbon_q_polynomial(const Composition& alpha) {
    if (alpha.empty()) throw std::invalid_argument("ribbon of an empty composition");
    const int gaps = alpha.length() - 1;
    if (gaps > 40) throw std::invalid_argument("ribbon too long for coarsening enumeration");
    // Accumulate on small integers first; at most 2^(l-1) terms per key.
    std::map<Partition, long long, CanonicalOrder> acc;
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(alpha.length()));
    const std::uint64_t limit = std::uint64_t{1} << gaps;
    for (std::uint64_t keep = 0; keep < limit; ++keep) {
        parts.clear();
        int run = alpha[0];
        for (int g = 0; g < gaps; ++g) {
            if (keep >> g & 1) {
                parts.push_back(run);
                run = 0;
            }
            run += alpha[static_cast<std::size_t>(g) + 1];
        }
        parts.push_back(run);
        const int gamma_length = static_cast<int>(parts.size());
        const long long sign = (alpha.length() + gamma_length) % 2 == 0 ? 1 : -1;
        acc[Partition::from_parts(parts)] += sign;
    }
    QPolynomial out(alpha.size());
    for (const auto& [lambda, c] : acc) out.add_term(lambda, Integer(static_cast<long>(c)));
    return out;
}

PExpansion ribbon_p_expansion(const Composition& alpha) { return ribbon_q_polynomial(alpha).to_p(); }

namespace {

class RibbonDeterminant {
public:
    explicit RibbonDeterminant(const Composition& alpha) : alpha_(alpha), l_(alpha.length()) {
        prefix_.push_back(0);
        for (int p : alpha.parts()) prefix_.push_back(prefix_.back() + p);
    }

    PExpansion det() { return minor(full_mask(), 0); }

private:
    std::uint32_t full_mask() const { return (std::uint32_t{1} << l_) - 1; }

    // Entry (i, j): q_{alpha_i + ... + alpha_j} for i <= j, q_0 for i = j+1.
    std::optional<PExpansion> entry(int i, int j) const {
        if (i <= j) return q_p_expansion(prefix_[j + 1] - prefix_[i]);
        if (i == j + 1) return PExpansion::one();
        return std::nullopt;
    }

    // Determinant of the submatrix with the given rows and columns col..l-1,
    // expanded along its first column.
    PExpansion minor(std::uint32_t rows, int col) {
        if (col == l_) return PExpansion::one();
        if (auto it = memo_.find(rows); it != memo_.end()) return it->second;
        int degree = 0;
        for (int c = col; c < l_; ++c) degree += prefix_[c + 1];
        for (int r = 0; r < l_; ++r)
            if (rows >> r & 1) degree -= prefix_[r];
        PExpansion total(degree);
        int position = 0;
        for (int r = 0; r < l_; ++r) {
            if (!(rows >> r & 1)) continue;
            if (auto a = entry(r, col)) {
                PExpansion term = *a * minor(rows & ~(std::uint32_t{1} << r), col + 1);
                total.add_scaled(term, position % 2 == 0 ? 1 : -1);
            }
            ++position;
        }
        memo_.emplace(rows, total);
        return total;
    }

    const Composition& alpha_;
    int l_;
    std::vector<int> prefix_;
    std::unordered_map<std::uint32_t, PExpansion> memo_;
};

}  // namespace

PExpansion ribbon_det(const Composition& alpha) {
    if (alpha.empty()) throw std::invalid_argument("ribbon of an empty composition");
    if (alpha.length() > 30) throw std::invalid_argument("ribbon too long for the determinant");
    return RibbonDeterminant(alpha).det();
}

PExpansion schur_onerow_p(int n) {
    if (n < 1) throw std::invalid_argument("s_(n) needs n >= 1");
    PExpansion out(n);
    for (const Partition& lambda : partitions(n)) out.add_term(lambda, 1 / z_of(lambda));
    return out;
}

PExpansion schur_hook_p(int n) {
    if (n < 2) throw std::invalid_argument("s_(n-1,1) needs n >= 2");
    PExpansion out(n);
    for (const Partition& lambda : partitions(n))
        out.add_term(lambda, Rational(lambda.multiplicity(1) - 1) / z_of(lambda));
    return out;
}

MonomialPolynomial specialize(const PExpansion& f, int variables) {
    if (variables < 1) throw std::invalid_argument("specialization needs at least one variable");
    MonomialPolynomial out(variables);
    std::map<int, MonomialPolynomial> power_sums;
    for (const auto& [lambda, c] : f.terms()) {
        MonomialPolynomial term = MonomialPolynomial::constant(variables, c);
        for (int part : lambda.parts()) {
            auto it = power_sums.find(part);
            if (it == power_sums.end())
                it = power_sums.emplace(part, MonomialPolynomial::power_sum(variables, part)).first;
            term = term * it->second;
        }
        out = out + term;
    }
    return out;
}

bool is_in_gamma(const PExpansion& f) { return !gamma_witness(f).has_value(); }

std::optional<Partition> gamma_witness(const PExpansion& f) {
    for (const auto& [lambda, c] : f.terms())
        if (!lambda.all_odd()) return lambda;
    return std::nullopt;
}

}  // namespace gammakit
