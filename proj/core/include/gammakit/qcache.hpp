#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <shared_mutex>

#include "gammakit/algebra.hpp"

namespace gammakit {

/// Process-wide memo of q_n and q_lambda expansions. Entries are filled once
/// and never modified; references handed out stay valid for the lifetime of
/// the process.
class QMemo {
public:
    static QMemo& instance();

    const PExpansion& q(int n);
    const PExpansion& q_product(const Partition& lambda);

    /// Seeds q_n entries from a JSON cache file:
    /// {"3": {"3": "2/3", "1,1,1": "4/3"}, ...}. Returns the entry count.
    /// Keys must be odd partitions of n; malformed files throw ParseError.
    std::size_t load(const std::filesystem::path& file);
    /// Writes q_0..q_max_n in the same format.
    void save(const std::filesystem::path& file, int max_n);

    std::size_t cached_q_count() const;
    /// Largest n with q_n in the memo, -1 when empty.
    int max_cached_degree() const;

private:
    QMemo() = default;

    mutable std::shared_mutex mutex_;
    std::map<int, std::unique_ptr<const PExpansion>> q_;
    std::map<Partition, std::unique_ptr<const PExpansion>> products_;
};

}  // namespace gammakit
