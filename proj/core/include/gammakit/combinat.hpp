#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gammakit/rational.hpp"

namespace gammakit {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Parts must already be weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts arbitrary positive parts into a partition.
    static Partition from_parts(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// m_i: number of parts equal to i.
    int multiplicity(int part) const noexcept;
    bool all_odd() const noexcept;
    bool is_strict() const noexcept;
    int even_part_count() const noexcept;

    /// Multiset union of parts (the index of p_lambda * p_mu).
    Partition merged(const Partition& other) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on the part sequence.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Descending lexicographic order; the key order of every partition-keyed map.
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// Arbitrary sequence of positive integers.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    int front() const { return parts_.front(); }
    int back() const { return parts_.back(); }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Rational z_of(const Partition& lambda);

/// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions(int n);
std::vector<Partition> odd_partitions(int n);
std::vector<Partition> strict_partitions(int n);

/// Every gamma with gamma coarsening alpha, i.e. obtained by merging runs of
/// consecutive parts. Enumerated by subsets of the l-1 gaps; alpha first.
std::vector<Composition> coarsenings(const Composition& alpha);
bool is_coarsening(const Composition& gamma, const Composition& alpha);

Partition sort_to_partition(const Composition& alpha);

/// True if the parts of fine can be grouped into blocks summing to the parts
/// of coarse (both partitions of the same n).
bool is_refinement(const Partition& fine, const Partition& coarse);

/// Composition of n whose cut positions are the set bits of mask: bit i set
/// means a part boundary after the (i+1)-th unit, for i < n-1.
Composition composition_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_from_composition(const Composition& alpha);

/// Range over all 2^(n-1) compositions of n, in mask order. Sub-ranges are
/// independent and can be handed to separate threads.
class CompositionRange {
public:
    explicit CompositionRange(int n);
    CompositionRange(int n, std::uint64_t first_mask, std::uint64_t last_mask);

    class iterator {
    public:
        using value_type = Composition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}
        Composition operator*() const { return composition_from_mask(n_, mask_); }
        iterator& operator++() { ++mask_; return *this; }
        iterator operator++(int) { auto t = *this; ++mask_; return t; }
        bool operator==(const iterator& o) const { return mask_ == o.mask_; }
        std::uint64_t mask() const noexcept { return mask_; }

    private:
        int n_ = 0;
        std::uint64_t mask_ = 0;
    };

    iterator begin() const { return {n_, first_}; }
    iterator end() const { return {n_, last_}; }
    std::uint64_t count() const noexcept { return last_ - first_; }

private:
    int n_;
    std::uint64_t first_;
    std::uint64_t last_;
};

inline CompositionRange compositions_of(int n) { return CompositionRange(n); }

// Text encoding: comma-separated parts, "" for the empty sequence.
std::string to_text(const Partition& lambda);
std::string to_text(const Composition& alpha);
Partition parse_partition(std::string_view text);
Composition parse_composition(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Partition& lambda);
std::ostream& operator<<(std::ostream& os, const Composition& alpha);

}  // namespace gammakit
