#include "gammakit/diagram.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "gammakit/error.hpp"

namespace gammakit {

Ribbon::Ribbon(Composition rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("a ribbon needs at least one row");
}

std::vector<Box> Ribbon::boxes() const {
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(size()));
    const int l = length();
    std::vector<int> left(static_cast<std::size_t>(l));
    int next_left = 1;
    for (int i = l - 1; i >= 0; --i) {
        left[static_cast<std::size_t>(i)] = next_left;
        next_left += row(i) - 1;
    }
    for (int i = 0; i < l; ++i)
        for (int c = 0; c < row(i); ++c) out.push_back({i + 1, left[static_cast<std::size_t>(i)] + c});
    return out;
}

std::vector<bool> star_word(const Ribbon& r) {
    std::vector<bool> word;
    word.reserve(static_cast<std::size_t>(r.size()));
    for (int i = 0; i < r.length(); ++i) {
        if (i > 0) word.push_back(false);
        for (int c = 1; c < r.row(i); ++c) word.push_back(true);
    }
    return word;
}

Ribbon from_star_word(const std::vector<bool>& joins_row) {
    std::vector<int> rows{1};
    for (bool join : joins_row) {
        if (join)
            ++rows.back();
        else
            rows.push_back(1);
    }
    return Ribbon(Composition(std::move(rows)));
}

Ribbon transpose(const Ribbon& r) {
    auto word = star_word(r);
    std::reverse(word.begin(), word.end());
    word.flip();
    return from_star_word(word);
}

Ribbon rotate(const Ribbon& r) {
    auto rows = r.rows().vec();
    std::reverse(rows.begin(), rows.end());
    return Ribbon(Composition(std::move(rows)));
}

Ribbon concat(const Ribbon& a, const Ribbon& b) {
    auto rows = a.rows().vec();
    rows.insert(rows.end(), b.rows().parts().begin(), b.rows().parts().end());
    return Ribbon(Composition(std::move(rows)));
}

Ribbon near_concat(const Ribbon& a, const Ribbon& b) {
    auto rows = a.rows().vec();
    rows.back() += b.first_row();
    rows.insert(rows.end(), b.rows().parts().begin() + 1, b.rows().parts().end());
    return Ribbon(Composition(std::move(rows)));
}

Ribbon comp_transpose(const Composition& alpha, const Ribbon& d) {
    if (alpha.empty()) throw std::invalid_argument("composition of transposition needs a nonempty alpha");
    const Ribbon dt = transpose(d);
    const auto word = star_word(Ribbon(alpha));
    Ribbon out = d;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const Ribbon& piece = (i % 2 == 0) ? dt : d;
        out = word[i] ? near_concat(out, piece) : concat(out, piece);
    }
    return out;
}

Ribbon triangle(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("triangle ribbon requires 1 <= k <= n");
    std::vector<int> rows(static_cast<std::size_t>(k - 1), 1);
    rows.push_back(n - k + 1);
    return Ribbon(Composition(std::move(rows)));
}

std::vector<Ribbon> basic_blocks(int n) {
    if (n < 1) throw std::invalid_argument("basic blocks need n >= 1");
    std::set<Ribbon> blocks;
    const Ribbon row = triangle(n, 1);
    blocks.insert(row);
    blocks.insert(transpose(row));
    if (n >= 3) {
        const Ribbon t3 = triangle(n, 3);
        blocks.insert(t3);
        blocks.insert(transpose(t3));
        blocks.insert(rotate(t3));
        blocks.insert(rotate(transpose(t3)));
    }
    return {blocks.begin(), blocks.end()};
}

int corners(const Ribbon& r) {
    const auto boxes = r.boxes();
    const std::set<Box> cells(boxes.begin(), boxes.end());
    int count = 0;
    for (const Box& b : boxes)
        if (cells.contains({b.row - 1, b.col}) && !cells.contains({b.row + 1, b.col})) ++count;
    return count;
}

std::optional<int> head_length(const Ribbon& r) {
    for (int i = 0; i < r.length(); ++i)
        if (r.row(i) >= 2) return i + 1;
    return std::nullopt;
}

std::optional<int> tail_length(const Ribbon& r) {
    if (r.last_row() > 1) return r.last_row();
    for (int j = 1; j <= r.length(); ++j)
        if (r.row(r.length() - j) >= 2) return j;
    return std::nullopt;
}

std::vector<Box> reflect_diagonal(const std::vector<Box>& boxes) {
    std::vector<Box> out;
    out.reserve(boxes.size());
    for (const Box& b : boxes) out.push_back({b.col, b.row});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Box> rotate_half_turn(const std::vector<Box>& boxes) {
    std::vector<Box> out;
    out.reserve(boxes.size());
    for (const Box& b : boxes) out.push_back({-b.row, -b.col});
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Ribbon> ribbon_from_boxes(const std::vector<Box>& boxes) {
    if (boxes.empty()) return std::nullopt;
    std::map<int, std::vector<int>> rows;
    for (const Box& b : boxes) rows[b.row].push_back(b.col);
    std::vector<int> lengths;
    int prev_row = 0;
    int prev_left = 0;
    bool first = true;
    for (auto& [r, cols] : rows) {
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) return std::nullopt;
        if (cols.back() - cols.front() + 1 != static_cast<int>(cols.size())) return std::nullopt;
        if (!first && (r != prev_row + 1 || cols.back() != prev_left)) return std::nullopt;
        lengths.push_back(static_cast<int>(cols.size()));
        prev_row = r;
        prev_left = cols.front();
        first = false;
    }
    return Ribbon(Composition(std::move(lengths)));
}

SkewShape::SkewShape(Partition outer, Partition inner, bool shifted)
    : outer_(std::move(outer)), inner_(std::move(inner)), shifted_(shifted) {
    if (shifted_ && (!outer_.is_strict() || !inner_.is_strict()))
        throw std::invalid_argument("shifted skew shapes need strict partitions");
    if (inner_.length() > outer_.length())
        throw std::invalid_argument("inner partition is not contained in the outer one");
    for (int i = 0; i < inner_.length(); ++i)
        if (inner_[static_cast<std::size_t>(i)] > outer_[static_cast<std::size_t>(i)])
            throw std::invalid_argument("inner partition is not contained in the outer one");
    for (int i = 0; i < outer_.length(); ++i) {
        const int lam = outer_[static_cast<std::size_t>(i)];
        const int mu = i < inner_.length() ? inner_[static_cast<std::size_t>(i)] : 0;
        const int offset = shifted_ ? i : 0;
        for (int c = mu; c < lam; ++c) boxes_.push_back({i + 1, offset + c + 1});
    }
}

SkewShape SkewShape::from_ribbon(const Ribbon& r) {
    const int l = r.length();
    std::vector<int> outer(static_cast<std::size_t>(l));
    int suffix = 0;
    for (int i = l - 1; i >= 0; --i) {
        suffix += r.row(i);
        outer[static_cast<std::size_t>(i)] = suffix;
    }
    std::vector<int> inner(outer.begin() + 1, outer.end());
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)), true);
}

ShapeAnalysis analyze_boxes(const std::vector<Box>& boxes) {
    ShapeAnalysis out;
    const std::set<Box> cells(boxes.begin(), boxes.end());

    std::set<Box> seen;
    for (const Box& start : cells) {
        if (seen.contains(start)) continue;
        std::vector<Box> component;
        std::queue<Box> frontier;
        frontier.push(start);
        seen.insert(start);
        while (!frontier.empty()) {
            const Box b = frontier.front();
            frontier.pop();
            component.push_back(b);
            for (const Box nb : {Box{b.row - 1, b.col}, Box{b.row + 1, b.col},
                                 Box{b.row, b.col - 1}, Box{b.row, b.col + 1}}) {
                if (cells.contains(nb) && !seen.contains(nb)) {
                    seen.insert(nb);
                    frontier.push(nb);
                }
            }
        }
        std::sort(component.begin(), component.end());
        out.components.push_back(std::move(component));
    }
    out.connected = out.components.size() == 1;

    out.border_strip = std::none_of(cells.begin(), cells.end(), [&](const Box& b) {
        return cells.contains({b.row - 1, b.col - 1});
    });
    for (const Box& b : cells) {
        if (cells.contains({b.row, b.col + 1}) && cells.contains({b.row + 1, b.col + 1})) {
            out.witness = std::array<Box, 3>{b, Box{b.row, b.col + 1}, Box{b.row + 1, b.col + 1}};
            break;
        }
    }
    if (out.connected && out.border_strip) out.ribbon = ribbon_from_boxes(boxes);
    return out;
}

ShapeAnalysis analyze(const SkewShape& shape) { return analyze_boxes(shape.boxes()); }

SkewShape parse_shape(std::string_view text) {
    bool shifted = true;
    if (text.starts_with("u:")) {
        shifted = false;
        text.remove_prefix(2);
    }
    const auto slash = text.find('/');
    const auto outer_text = text.substr(0, slash);
    const auto inner_text = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    try {
        return SkewShape(parse_partition(outer_text), parse_partition(inner_text), shifted);
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError("'" + std::string(text) + "' is not a valid skew shape: " + e.what());
    }
}

std::string to_text(const SkewShape& shape) {
    return (shape.shifted() ? "" : "u:") + to_text(shape.outer()) + "/" + to_text(shape.inner());
}

std::string to_text(const Ribbon& r) { return to_text(r.rows()); }

Ribbon parse_ribbon(std::string_view text) { return Ribbon(parse_composition(text)); }

}  // namespace gammakit
