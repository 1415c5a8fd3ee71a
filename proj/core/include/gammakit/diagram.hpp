#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammakit/combinat.hpp"

namespace gammakit {

/// A cell of a diagram; rows grow downwards, columns to the right (English).
struct Box {
    int row;
    int col;
    friend auto operator<=>(const Box&, const Box&) = default;
};

/// A connected border strip, identified with its row-length composition read
/// top row first. Consecutive rows overlap in exactly one column: the last
/// box of row i+1 sits directly below the first box of row i.
class Ribbon {
public:
    Ribbon() = default;
    explicit Ribbon(Composition rows);
    Ribbon(std::initializer_list<int> rows) : Ribbon(Composition(rows)) {}

    const Composition& rows() const noexcept { return rows_; }
    int size() const noexcept { return rows_.size(); }
    int length() const noexcept { return rows_.length(); }
    int row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    int first_row() const { return rows_.front(); }
    int last_row() const { return rows_.back(); }

    /// Box set with the bottom row starting in column 1 and the top row in row 1.
    std::vector<Box> boxes() const;

    friend bool operator==(const Ribbon&, const Ribbon&) = default;
    friend std::strong_ordering operator<=>(const Ribbon& a, const Ribbon& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    Composition rows_;
};

/// The cell-joining word of a ribbon: entry i is true when cells i and i+1
/// (read top-right to bottom-left) share a row (near concatenation), false
/// when the second starts a new row (concatenation).
std::vector<bool> star_word(const Ribbon& r);
Ribbon from_star_word(const std::vector<bool>& joins_row);

Ribbon transpose(const Ribbon& r);
Ribbon rotate(const Ribbon& r);
Ribbon concat(const Ribbon& a, const Ribbon& b);
Ribbon near_concat(const Ribbon& a, const Ribbon& b);

/// alpha . D: copies of D and its transpose, alternating and starting with D,
/// joined by the concatenation pattern of alpha.
Ribbon comp_transpose(const Composition& alpha, const Ribbon& d);

/// The hook-like ribbon (1^{k-1}, n-k+1) cut from the shifted staircase.
Ribbon triangle(int n, int k);

/// Basic blocks of size n, deduplicated and sorted.
std::vector<Ribbon> basic_blocks(int n);

/// Boxes with a box directly above and none directly below.
int corners(const Ribbon& r);

/// Index (1-based) of the first row with at least two boxes; empty for a
/// single-column ribbon.
std::optional<int> head_length(const Ribbon& r);

/// The last row length when it exceeds one, otherwise the 1-based distance of
/// the first multi-box row counted from the bottom; empty for a single column.
std::optional<int> tail_length(const Ribbon& r);

// Box-set utilities, shared by the skew-shape analysis and the geometric
// cross-checks of transpose and rotation.
std::vector<Box> reflect_diagonal(const std::vector<Box>& boxes);
std::vector<Box> rotate_half_turn(const std::vector<Box>& boxes);
/// Reads a connected border strip back as a ribbon; empty if the box set is
/// not one.
std::optional<Ribbon> ribbon_from_boxes(const std::vector<Box>& boxes);

/// A skew diagram outer/inner. Shifted shapes need strict partitions; the
/// unshifted flavour exists for ordinary Young skew diagrams.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner, bool shifted = true);

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    bool shifted() const noexcept { return shifted_; }
    int size() const noexcept { return outer_.size() - inner_.size(); }

    /// Boxes in row-major order (1-based coordinates).
    const std::vector<Box>& boxes() const noexcept { return boxes_; }

    /// Shifted realization of a ribbon: outer parts are suffix sums of the
    /// rows, inner parts the suffix sums starting one row lower.
    static SkewShape from_ribbon(const Ribbon& r);

private:
    Partition outer_;
    Partition inner_;
    bool shifted_;
    std::vector<Box> boxes_;
};

struct ShapeAnalysis {
    bool connected = false;
    std::vector<std::vector<Box>> components;
    /// No box has its north-west diagonal neighbour in the shape.
    bool border_strip = false;
    std::optional<Ribbon> ribbon;
    /// Boxes (i,j), (i,j+1), (i+1,j+1) when present.
    std::optional<std::array<Box, 3>> witness;
};

ShapeAnalysis analyze(const SkewShape& shape);
ShapeAnalysis analyze_boxes(const std::vector<Box>& boxes);

/// "4,3,2/3,2" (shifted) or "u:4,2,2/1,1" (unshifted); "5" means "5/".
SkewShape parse_shape(std::string_view text);
std::string to_text(const SkewShape& shape);
std::string to_text(const Ribbon& r);
Ribbon parse_ribbon(std::string_view text);

}  // namespace gammakit
