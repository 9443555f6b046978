#include "haarcomm/brauer.hpp"

#include <mutex>
#include <stdexcept>

#include "haarcomm/characters.hpp"

namespace haarcomm {

namespace {

struct LrFiller {
    const Partition& nu;
    const Partition& lambda;
    const Partition& rho;
    std::vector<std::vector<int>> grid;  // 0 where the cell belongs to lambda
    std::vector<int> used;               // content placed so far, 1-based values
    std::int64_t count = 0;

    LrFiller(const Partition& outer, const Partition& inner, const Partition& content)
        : nu(outer), lambda(inner), rho(content), used(content.length() + 2, 0) {
        for (int i = 0; i < nu.length(); ++i) grid.emplace_back(nu[i], 0);
    }

    // Cells are visited in reverse reading order: rows top to bottom, each row right to left.
    void fill(int row, int col) {
        if (row == nu.length()) {
            ++count;
            return;
        }
        if (col < lambda[row]) {
            fill(row + 1, row + 1 < nu.length() ? nu[row + 1] - 1 : 0);
            return;
        }
        // row weakly increases left to right, so moving left values may not grow
        int upper = rho.length();
        if (col + 1 < nu[row]) upper = std::min(upper, grid[row][col + 1]);
        upper = std::min(upper, row + 1);
        int lower = 1;
        if (row > 0 && col < nu[row - 1] && col >= lambda[row - 1]) lower = grid[row - 1][col] + 1;
        for (int v = lower; v <= upper; ++v) {
            if (used[v] >= rho[v - 1]) continue;
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice word condition
            ++used[v];
            grid[row][col] = v;
            fill(row, col - 1);
            grid[row][col] = 0;
            --used[v];
        }
    }
};

}  // namespace

std::int64_t lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& rho) {
    if (nu.weight() != lambda.weight() + rho.weight()) return 0;
    if (!nu.contains(lambda) || !nu.contains(rho)) return 0;
    if (nu.empty()) return 1;
    LrFiller filler(nu, lambda, rho);
    filler.fill(0, nu[0] - 1);
    return filler.count;
}

Partition doubled(const Partition& beta) {
    std::vector<int> parts(beta.parts());
    for (int& p : parts) p *= 2;
    return Partition(std::move(parts));
}

namespace {

int strip_count(const Partition& lambda, int n) {
    const int diff = n - lambda.weight();
    if (diff < 0 || diff % 2) {
        throw std::invalid_argument("Brauer character needs |lambda| = n - 2h, got " +
                                    lambda.to_string() + " for n = " + std::to_string(n));
    }
    return diff / 2;
}

// sum_{beta |- h} c^nu_{lambda, 2 beta}
std::int64_t even_strip_sum(const Partition& nu, const Partition& lambda, int h) {
    std::int64_t total = 0;
    for (const auto& beta : partitions_of(h)) total += lr_coefficient(nu, lambda, doubled(beta));
    return total;
}

}  // namespace

std::int64_t brauer_character(const Partition& lambda, const Partition& mu) {
    const int n = mu.weight();
    const int h = strip_count(lambda, n);
    std::int64_t total = 0;
    for (const auto& nu : partitions_of(n)) {
        const std::int64_t strips = even_strip_sum(nu, lambda, h);
        if (strips) total += character(nu, mu) * strips;
    }
    return total;
}

BigInt brauer_dimension(const Partition& lambda, int n) {
    const int h = strip_count(lambda, n);
    BigInt denom = factorial(n - 2 * h) * factorial(h);
    denom <<= h;
    return factorial(n) / denom * BigInt(static_cast<long>(dimension(lambda)));
}

std::map<std::pair<int, Partition>, std::int64_t> p_to_o_expansion(const Partition& mu) {
    const int n = mu.weight();
    std::map<std::pair<int, Partition>, std::int64_t> out;
    for (int h = 0; 2 * h <= n; ++h) {
        for (const auto& lambda : partitions_of(n - 2 * h)) {
            out[{h, lambda}] = brauer_character(lambda, mu);
        }
    }
    return out;
}

std::map<Partition, ExactScalar> s_in_power_sums(const Partition& lambda) {
    std::map<Partition, ExactScalar> out;
    for (const auto& mu : partitions_of(lambda.weight())) {
        const std::int64_t chi = character(lambda, mu);
        if (chi) out[mu] = ExactScalar(BigInt(static_cast<long>(chi)), centralizer_size(mu));
    }
    for (auto& [mu, c] : out) c.canonicalize();
    return out;
}

std::map<Partition, ExactScalar> o_in_power_sums(const Partition& lambda) {
    static std::mutex mutex;
    static std::map<Partition, std::map<Partition, ExactScalar>> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    }
    const int m = lambda.weight();
    std::map<Partition, ExactScalar> out = s_in_power_sums(lambda);
    for (int h = 1; 2 * h <= m; ++h) {
        for (const auto& kappa : partitions_of(m - 2 * h)) {
            const std::int64_t coupling = even_strip_sum(lambda, kappa, h);
            if (!coupling) continue;
            for (const auto& [mu, c] : o_in_power_sums(kappa)) out[mu] -= ExactScalar(coupling) * c;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    std::lock_guard lock(mutex);
    memo.emplace(lambda, out);
    return out;
}

}  // namespace haarcomm
