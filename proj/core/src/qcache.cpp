#include "gammakit/qcache.hpp"

#include <fstream>
#include <mutex>
#include <stdexcept>

#include "gammakit/error.hpp"
#include "json.hpp"

namespace gammakit {

QMemo& QMemo::instance() {
    static QMemo memo;
    return memo;
}

const PExpansion& QMemo::q(int n) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = q_.find(n); it != q_.end()) return *it->second;
    }
    auto fresh = std::make_unique<const PExpansion>(compute_q_expansion(n));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = q_.try_emplace(n, std::move(fresh));
    return *it->second;
}

const PExpansion& QMemo::q_product(const Partition& lambda) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = products_.find(lambda); it != products_.end()) return *it->second;
    }
    PExpansion value = PExpansion::one();
    if (!lambda.empty()) {
        const auto parts = lambda.parts();
        const Partition rest(std::vector<int>(parts.begin() + 1, parts.end()));
        value = q(parts[0]) * q_product(rest);
    }
    auto fresh = std::make_unique<const PExpansion>(std::move(value));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = products_.try_emplace(lambda, std::move(fresh));
    return *it->second;
}

std::size_t QMemo::cached_q_count() const {
    std::shared_lock lock(mutex_);
    return q_.size();
}

int QMemo::max_cached_degree() const {
    std::shared_lock lock(mutex_);
    return q_.empty() ? -1 : q_.rbegin()->first;
}

std::size_t QMemo::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open q-expansion cache " + file.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("q-expansion cache " + file.string() + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw ParseError("q-expansion cache must be a JSON object");

    std::map<int, std::unique_ptr<const PExpansion>> parsed;
    for (const auto& [key, terms] : doc.items()) {
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(key, &used);
            if (used != key.size() || n < 0) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ParseError("q-expansion cache key '" + key + "' is not a degree");
        }
        if (!terms.is_object()) throw ParseError("q-expansion cache entry " + key + " must be an object");
        PExpansion f(n);
        for (const auto& [lambda_text, value] : terms.items()) {
            const Partition lambda = parse_partition(lambda_text);
            if (lambda.size() != n || !lambda.all_odd())
                throw ParseError("cache entry " + key + " has key '" + lambda_text +
                                 "' that is not an odd partition of " + key);
            if (!value.is_string()) throw ParseError("cache coefficients must be \"num/den\" strings");
            f.add_term(lambda, parse_rational(value.get<std::string>()));
        }
        parsed.emplace(n, std::make_unique<const PExpansion>(std::move(f)));
    }

    std::unique_lock lock(mutex_);
    std::size_t added = 0;
    for (auto& [n, f] : parsed)
        if (q_.try_emplace(n, std::move(f)).second) ++added;
    return added;
}

void QMemo::save(const std::filesystem::path& file, int max_n) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (int n = 0; n <= max_n; ++n) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::object();
        for (const auto& [lambda, c] : q(n).terms()) terms[to_text(lambda)] = to_string(c);
        doc[std::to_string(n)] = std::move(terms);
    }
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write q-expansion cache " + file.string());
    out << doc.dump(2) << '\n';
}

}  // namespace gammakit
