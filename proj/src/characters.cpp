#include "haarcomm/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace haarcomm {

namespace {

struct CharacterTableCache {
    std::shared_mutex mutex;
    std::map<std::pair<Partition, Partition>, std::int64_t> values;
};

CharacterTableCache& cache() {
    static CharacterTableCache instance;
    return instance;
}

// Rim hooks of length r correspond to moves beta -> beta - r on the beta-set.
std::int64_t murnaghan_nakayama(const Partition& lambda, const std::vector<int>& mu_parts,
                                std::size_t first);

std::int64_t cached_character(const Partition& lambda, const std::vector<int>& mu_parts,
                              std::size_t first) {
    if (first == mu_parts.size()) return lambda.empty() ? 1 : 0;
    Partition mu(std::vector<int>(mu_parts.begin() + static_cast<long>(first), mu_parts.end()));
    auto key = std::make_pair(lambda, mu);
    auto& c = cache();
    {
        std::shared_lock lock(c.mutex);
        if (auto it = c.values.find(key); it != c.values.end()) return it->second;
    }
    const std::int64_t value = murnaghan_nakayama(lambda, mu_parts, first);
    std::unique_lock lock(c.mutex);
    c.values.emplace(std::move(key), value);
    return value;
}

std::int64_t murnaghan_nakayama(const Partition& lambda, const std::vector<int>& mu_parts,
                                std::size_t first) {
    const int r = mu_parts[first];
    const int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);  // strictly decreasing

    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
        const int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        // height of the rim hook = number of beads jumped over
        int jumped = 0;
        for (int b : beta) {
            if (b > target && b < beta[i]) ++jumped;
        }
        std::vector<int> moved(beta);
        moved[i] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts;
        for (int j = 0; j < len; ++j) {
            const int part = moved[j] - (len - 1 - j);
            if (part > 0) parts.push_back(part);
        }
        const std::int64_t sub = cached_character(Partition(std::move(parts)), mu_parts, first + 1);
        total += (jumped % 2 ? -sub : sub);
    }
    return total;
}

}  // namespace

std::int64_t character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) {
        throw std::invalid_argument("character: weight mismatch " + lambda.to_string() + " vs " +
                                    mu.to_string());
    }
    return cached_character(lambda, mu.parts(), 0);
}

BigInt hook_length_dimension(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    }
    return factorial(lambda.weight()) / hooks;
}

std::int64_t dimension(const Partition& lambda) {
    const std::int64_t by_character = character(lambda, Partition::ones(lambda.weight()));
    if (BigInt(static_cast<long>(by_character)) != hook_length_dimension(lambda)) {
        throw std::logic_error("dimension: hook-length formula disagrees with chi(1^n) for " +
                               lambda.to_string());
    }
    return by_character;
}

int hook_character(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1) throw std::invalid_argument("hook_character: need 0 <= k < n");
    return k % 2 ? -1 : 1;
}

BigInt hook_dimension(int n, int k) { return binomial(n - 1, k); }

std::size_t character_cache_size() {
    std::shared_lock lock(cache().mutex);
    return cache().values.size();
}

}  // namespace haarcomm
