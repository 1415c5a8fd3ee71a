#include "gammakit/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gammakit/linalg.hpp"

namespace gammakit {

std::vector<int> MarkedShiftedTableau::content(int max_value) const {
    std::vector<int> c(static_cast<std::size_t>(max_value), 0);
    for (const Letter& l : letters) ++c.at(static_cast<std::size_t>(l.value - 1));
    return c;
}

bool MarkedShiftedTableau::is_valid() const {
    std::map<Box, Letter> at;
    for (std::size_t i = 0; i < boxes.size(); ++i) at.emplace(boxes[i], letters[i]);
    for (const auto& [b, l] : at) {
        if (auto it = at.find({b.row, b.col + 1}); it != at.end()) {
            if (it->second.code() < l.code()) return false;
            if (it->second == l && l.marked) return false;
        }
        if (auto it = at.find({b.row + 1, b.col}); it != at.end()) {
            if (it->second.code() < l.code()) return false;
            if (it->second == l && !l.marked) return false;
        }
    }
    return true;
}

namespace {

constexpr int kNone = -1;

/// Backtracking filler over boxes in row-major order. Each box is compared
/// with its nearest predecessor in the same row and in the same column.
class Filler {
public:
    Filler(const SkewShape& shape, int max_value) : boxes_(shape.boxes()), max_code_(2 * max_value) {
        left_.assign(boxes_.size(), kNone);
        up_.assign(boxes_.size(), kNone);
        for (std::size_t i = 0; i < boxes_.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (boxes_[j].row == boxes_[i].row && boxes_[j].col < boxes_[i].col)
                    left_[i] = static_cast<int>(j);
                if (boxes_[j].col == boxes_[i].col && boxes_[j].row < boxes_[i].row)
                    up_[i] = static_cast<int>(j);
            }
        }
        codes_.assign(boxes_.size(), 0);
    }

    template <typename Visit>
    void run(std::vector<int>* remaining, Visit&& visit) {
        remaining_ = remaining;
        fill(0, visit);
    }

    const std::vector<int>& codes() const { return codes_; }
    const std::vector<Box>& boxes() const { return boxes_; }

private:
    template <typename Visit>
    void fill(std::size_t i, Visit& visit) {
        if (i == boxes_.size()) {
            visit();
            return;
        }
        const int left = left_[i] == kNone ? 0 : codes_[static_cast<std::size_t>(left_[i])];
        const int up = up_[i] == kNone ? 0 : codes_[static_cast<std::size_t>(up_[i])];
        for (int code = std::max({1, left, up}); code <= max_code_; ++code) {
            const bool marked = code % 2 == 1;
            if (code == left && marked) continue;   // one k' per row
            if (code == up && !marked) continue;    // one k per column
            const int value = (code + 1) / 2;
            if (remaining_) {
                int& left_over = (*remaining_)[static_cast<std::size_t>(value - 1)];
                if (left_over == 0) continue;
                --left_over;
                codes_[i] = code;
                fill(i + 1, visit);
                ++left_over;
            } else {
                codes_[i] = code;
                fill(i + 1, visit);
            }
        }
    }

    std::vector<Box> boxes_;
    int max_code_;
    std::vector<int> left_;
    std::vector<int> up_;
    std::vector<int> codes_;
    std::vector<int>* remaining_ = nullptr;
};

}  // namespace

void for_each_tableau(const SkewShape& shape, int max_value,
                      const std::function<void(const MarkedShiftedTableau&)>& visit) {
    if (max_value < 0) throw std::invalid_argument("max_value must be non-negative");
    Filler filler(shape, max_value);
    MarkedShiftedTableau t;
    t.boxes = filler.boxes();
    t.letters.resize(t.boxes.size());
    filler.run(nullptr, [&] {
        for (std::size_t i = 0; i < t.letters.size(); ++i) t.letters[i] = Letter::from_code(filler.codes()[i]);
        visit(t);
    });
}

std::vector<MarkedShiftedTableau> enumerate_tableaux(const SkewShape& shape, int max_value) {
    std::vector<MarkedShiftedTableau> out;
    for_each_tableau(shape, max_value, [&](const MarkedShiftedTableau& t) { out.push_back(t); });
    return out;
}

Integer count_with_content(const SkewShape& shape, const std::vector<int>& content) {
    if (std::accumulate(content.begin(), content.end(), 0) != shape.size()) return 0;
    if (std::any_of(content.begin(), content.end(), [](int c) { return c < 0; }))
        throw std::invalid_argument("content entries must be non-negative");
    Filler filler(shape, static_cast<int>(content.size()));
    std::vector<int> remaining = content;
    unsigned long long count = 0;
    filler.run(&remaining, [&] { ++count; });
    return Integer(static_cast<unsigned long>(count));
}

MonomialPolynomial q_function_monomial(const SkewShape& shape, int variables) {
    if (variables < 1) throw std::invalid_argument("need at least one variable");
    Filler filler(shape, variables);
    std::map<Exponent, unsigned long long> counts;
    Exponent e(static_cast<std::size_t>(variables));
    filler.run(nullptr, [&] {
        std::fill(e.begin(), e.end(), 0);
        for (int code : filler.codes()) ++e[static_cast<std::size_t>((code + 1) / 2 - 1)];
        ++counts[e];
    });
    MonomialPolynomial out(variables);
    if (shape.size() == 0) return MonomialPolynomial::constant(variables, 1);
    for (const auto& [exp, c] : counts) out.add_term(exp, Rational(static_cast<unsigned long>(c)));
    return out;
}

namespace {

Integer assign_parts(std::span<const int> parts, std::size_t idx, std::vector<int>& room) {
    if (idx == parts.size())
        return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; }) ? 1 : 0;
    Integer total = 0;
    for (int& r : room) {
        if (r < parts[idx]) continue;
        r -= parts[idx];
        total += assign_parts(parts, idx + 1, room);
        r += parts[idx];
    }
    return total;
}

Exponent padded(const Partition& mu, int variables) {
    Exponent e(static_cast<std::size_t>(variables), 0);
    for (int i = 0; i < mu.length(); ++i) e[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)];
    return e;
}

}  // namespace

Integer monomial_coefficient_of_p(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return 0;
    std::vector<int> room(mu.parts().begin(), mu.parts().end());
    return assign_parts(lambda.parts(), 0, room);
}

PExpansion p_expansion_from_monomial(const MonomialPolynomial& poly, int n) {
    if (n < 0) throw std::invalid_argument("degree must be non-negative");
    if (poly.variables() < n)
        throw std::invalid_argument("basis change needs at least n variables");
    if (!poly.is_homogeneous(n)) throw InconsistentSystem("polynomial is not homogeneous of degree n");

    for (const auto& [e, c] : poly.terms()) {
        Exponent sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (poly.coefficient(sorted) != c) throw InconsistentSystem("polynomial is not symmetric");
    }

    const auto unknowns = odd_partitions(n);
    const auto equations = partitions(n);
    RationalMatrix a;
    std::vector<Rational> b;
    for (const Partition& mu : equations) {
        std::vector<Rational> row;
        row.reserve(unknowns.size());
        for (const Partition& lambda : unknowns) row.emplace_back(monomial_coefficient_of_p(lambda, mu));
        a.push_back(std::move(row));
        b.push_back(poly.coefficient(padded(mu, poly.variables())));
    }
    const auto x = solve_unique(std::move(a), std::move(b));
    PExpansion out(n);
    for (std::size_t i = 0; i < unknowns.size(); ++i) out.add_term(unknowns[i], x[i]);
    return out;
}

PExpansion skew_Q(const SkewShape& shape) {
    if (!shape.shifted()) throw std::invalid_argument("Schur Q-functions are defined on shifted shapes");
    const int n = shape.size();
    if (n == 0) return PExpansion::one();
    // Only partition-shaped exponents are needed; count those directly.
    MonomialPolynomial dominant(n);
    for (const Partition& mu : partitions(n)) {
        const std::vector<int> content(mu.parts().begin(), mu.parts().end());
        dominant.add_term(padded(mu, n), Rational(count_with_content(shape, content)));
    }
    return p_expansion_from_monomial(dominant, n);
}

}  // namespace gammakit
