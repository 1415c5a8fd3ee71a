#include "gammakit/combinat.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "gammakit/error.hpp"

namespace gammakit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::from_parts(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

bool Partition::all_odd() const noexcept {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

bool Partition::is_strict() const noexcept {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

int Partition::even_part_count() const noexcept {
    return static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; }));
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> out;
    out.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(out), std::greater<>());
    Partition p;
    p.parts_ = std::move(out);
    p.size_ = size_ + other.size_;
    return p;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("composition parts must be positive");
        size_ += p;
    }
}

Rational z_of(const Partition& lambda) {
    Integer z = 1;
    auto parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const auto m = static_cast<unsigned>(j - i);
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
        z *= power * factorial(m);
        i = j;
    }
    return Rational(z);
}

namespace {

// Descending parts, each at most max_part.
void generate(int remaining, int max_part, bool distinct, bool odd_only,
              std::vector<int>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        if (odd_only && p % 2 == 0) continue;
        current.push_back(p);
        generate(remaining - p, distinct ? p - 1 : p, distinct, odd_only, current, out);
        current.pop_back();
    }
}

std::vector<Partition> generate_all(int n, bool distinct, bool odd_only) {
    if (n < 0) throw std::invalid_argument("partition size must be non-negative");
    std::vector<Partition> out;
    std::vector<int> current;
    generate(n, n, distinct, odd_only, current, out);
    return out;
}

}  // namespace

std::vector<Partition> partitions(int n) { return generate_all(n, false, false); }
std::vector<Partition> odd_partitions(int n) { return generate_all(n, false, true); }
std::vector<Partition> strict_partitions(int n) { return generate_all(n, true, false); }

std::vector<Composition> coarsenings(const Composition& alpha) {
    if (alpha.empty()) throw std::invalid_argument("coarsenings of an empty composition");
    const int gaps = alpha.length() - 1;
    const std::uint64_t full = (std::uint64_t{1} << gaps) - 1;
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << gaps);
    // keep = set of gaps that stay as part boundaries; start from all kept.
    for (std::uint64_t merged = 0; merged <= full; ++merged) {
        const std::uint64_t keep = full & ~merged;
        std::vector<int> parts;
        int run = alpha[0];
        for (int g = 0; g < gaps; ++g) {
            if (keep >> g & 1) {
                parts.push_back(run);
                run = 0;
            }
            run += alpha[g + 1];
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    return out;
}

bool is_coarsening(const Composition& gamma, const Composition& alpha) {
    if (gamma.size() != alpha.size()) return false;
    std::size_t j = 0;
    for (int part : gamma.parts()) {
        int acc = 0;
        while (acc < part && j < static_cast<std::size_t>(alpha.length())) acc += alpha[j++];
        if (acc != part) return false;
    }
    return j == static_cast<std::size_t>(alpha.length());
}

Partition sort_to_partition(const Composition& alpha) {
    return Partition::from_parts(alpha.vec());
}

namespace {

bool assign_parts(std::span<const int> fine, std::size_t idx, std::vector<int>& room) {
    if (idx == fine.size())
        return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; });
    for (std::size_t b = 0; b < room.size(); ++b) {
        if (room[b] < fine[idx]) continue;
        // Blocks with equal remaining room are interchangeable.
        bool seen = false;
        for (std::size_t c = 0; c < b; ++c) seen = seen || room[c] == room[b];
        if (seen) continue;
        room[b] -= fine[idx];
        const bool ok = assign_parts(fine, idx + 1, room);
        room[b] += fine[idx];
        if (ok) return true;
    }
    return false;
}

}  // namespace

bool is_refinement(const Partition& fine, const Partition& coarse) {
    if (fine.size() != coarse.size()) return false;
    std::vector<int> room(coarse.parts().begin(), coarse.parts().end());
    return assign_parts(fine.parts(), 0, room);
}

Composition composition_from_mask(int n, std::uint64_t mask) {
    if (n < 1) throw std::invalid_argument("compositions require n >= 1");
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(std::popcount(mask)) + 1);
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
        if (mask >> i & 1) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
    return Composition(std::move(parts));
}

std::uint64_t mask_from_composition(const Composition& alpha) {
    std::uint64_t mask = 0;
    int pos = 0;
    for (int i = 0; i + 1 < alpha.length(); ++i) {
        pos += alpha[i];
        mask |= std::uint64_t{1} << (pos - 1);
    }
    return mask;
}

CompositionRange::CompositionRange(int n)
    : CompositionRange(n, 0, n >= 1 ? std::uint64_t{1} << (n - 1) : 0) {}

CompositionRange::CompositionRange(int n, std::uint64_t first_mask, std::uint64_t last_mask)
    : n_(n), first_(first_mask), last_(last_mask) {
    if (n < 1) throw std::invalid_argument("compositions require n >= 1");
    if (n > 63) throw std::invalid_argument("composition masks support n <= 63");
    if (first_ > last_ || last_ > (std::uint64_t{1} << (n - 1)))
        throw std::invalid_argument("composition mask range out of bounds");
}

namespace {

std::string join(std::span<const int> parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

std::vector<int> split_parts(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos ? text.npos
                                                                              : comma - start);
        if (token.empty() || token.size() > 6 ||
            !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("malformed part list '" + std::string(text) + "'");
        parts.push_back(std::stoi(std::string(token)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

}  // namespace

std::string to_text(const Partition& lambda) { return join(lambda.parts()); }
std::string to_text(const Composition& alpha) { return join(alpha.parts()); }

Partition parse_partition(std::string_view text) {
    try {
        return Partition(split_parts(text));
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError("'" + std::string(text) + "' is not a partition: " + e.what());
    }
}

Composition parse_composition(std::string_view text) {
    try {
        auto parts = split_parts(text);
        if (parts.empty()) throw ParseError("empty composition");
        return Composition(std::move(parts));
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError("'" + std::string(text) + "' is not a composition: " + e.what());
    }
}

std::ostream& operator<<(std::ostream& os, const Partition& lambda) {
    return os << '(' << to_text(lambda) << ')';
}

std::ostream& operator<<(std::ostream& os, const Composition& alpha) {
    return os << '(' << to_text(alpha) << ')';
}

}  // namespace gammakit
