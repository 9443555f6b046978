#include "haarcomm/word_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

#include "haarcomm/combinatorics.hpp"
#include "haarcomm/matchings.hpp"
#include "haarcomm/weingarten.hpp"

namespace haarcomm {

namespace {

struct Entry {
    int row;
    int col;
};

// Indices of an expanded word. Slots flagged external are pinned to pairwise
// distinct values; all others are summed over 1..N.
struct Word {
    std::vector<bool> external;
    std::vector<Entry> u_plain, u_conj, v_plain, v_conj;

    int add_slot(bool pinned) {
        external.push_back(pinned);
        return static_cast<int>(external.size()) - 1;
    }

    // C_{rc} = sum_{k,l,m} u_{rk} v_{kl} conj(u_{ml}) conj(v_{cm})
    void add_factor(int r, int c, bool conjugate) {
        const int k = add_slot(false), l = add_slot(false), m = add_slot(false);
        if (!conjugate) {
            u_plain.push_back({r, k});
            u_conj.push_back({m, l});
            v_plain.push_back({k, l});
            v_conj.push_back({c, m});
        } else {
            u_conj.push_back({r, k});
            u_plain.push_back({m, l});
            v_conj.push_back({k, l});
            v_plain.push_back({c, m});
        }
    }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

using Labels = std::vector<int>;

// Relabels components in first-occurrence order. Returns false when two
// pinned slots (distinct fixed values) fall into one component.
bool canonical_labels(UnionFind& uf, const std::vector<bool>& external, Labels& out, int* free_count = nullptr) {
    const int n = static_cast<int>(external.size());
    std::vector<int> label_of_root(n, -1);
    std::vector<char> pinned;
    out.assign(n, 0);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        const int root = uf.find(s);
        if (label_of_root[root] < 0) {
            label_of_root[root] = next++;
            pinned.push_back(0);
        }
        const int label = label_of_root[root];
        out[s] = label;
        if (external[s]) {
            if (pinned[label]) return false;
            pinned[label] = 1;
        }
    }
    if (free_count) *free_count = static_cast<int>(std::count(pinned.begin(), pinned.end(), 0));
    return true;
}

// Weingarten pairings of one Haar matrix grouped by the slot identification
// they force; the value is the summed Weingarten weight.
std::map<Labels, ExactScalar> unitary_partitions(const std::vector<Entry>& plain, const std::vector<Entry>& conj,
                                                 const std::vector<bool>& external, int N) {
    const int n = static_cast<int>(plain.size());
    const auto& table = wg_table_u(n, N);
    const auto perms = all_permutations(n);
    std::map<Labels, std::vector<std::int64_t>> counts;
    Labels labels;
    for (const auto& sigma : perms) {
        for (const auto& tau : perms) {
            UnionFind uf(static_cast<int>(external.size()));
            for (int k = 0; k < n; ++k) {
                uf.unite(conj[k].row, plain[tau(k)].row);
                uf.unite(conj[k].col, plain[sigma(k)].col);
            }
            if (!canonical_labels(uf, external, labels)) continue;
            auto& c = counts[labels];
            if (c.empty()) c.assign(table.types.size(), 0);
            ++c[table.index_of(cycle_type(sigma.inverse() * tau))];
        }
    }
    std::map<Labels, ExactScalar> out;
    for (const auto& [key, c] : counts) {
        ExactScalar w = 0;
        for (std::size_t t = 0; t < c.size(); ++t) {
            if (c[t]) w += ExactScalar(static_cast<long>(c[t])) * table.values[t];
        }
        if (w != 0) out.emplace(key, w);
    }
    return out;
}

std::map<Labels, ExactScalar> orthogonal_partitions(std::vector<Entry> entries, const std::vector<Entry>& more,
                                                    const std::vector<bool>& external, int N) {
    entries.insert(entries.end(), more.begin(), more.end());
    const int n = static_cast<int>(entries.size()) / 2;
    const auto& table = wg_table_o(n, N);
    const auto matchings = all_matchings(n);
    std::map<Labels, std::vector<std::int64_t>> counts;
    Labels labels;
    for (const auto& p : matchings) {
        for (const auto& q : matchings) {
            UnionFind uf(static_cast<int>(external.size()));
            for (int x = 0; x < 2 * n; ++x) {
                uf.unite(entries[x].row, entries[p.partner(x)].row);
                uf.unite(entries[x].col, entries[q.partner(x)].col);
            }
            if (!canonical_labels(uf, external, labels)) continue;
            auto& c = counts[labels];
            if (c.empty()) c.assign(table.types.size(), 0);
            ++c[table.index_of(pair_type(p, q))];
        }
    }
    std::map<Labels, ExactScalar> out;
    for (const auto& [key, c] : counts) {
        ExactScalar w = 0;
        for (std::size_t t = 0; t < c.size(); ++t) {
            if (c[t]) w += ExactScalar(static_cast<long>(c[t])) * table.values[t];
        }
        if (w != 0) out.emplace(key, w);
    }
    return out;
}

// For every slot, the bitmask of its block.
std::vector<std::uint32_t> block_masks(const Labels& labels) {
    std::vector<std::uint32_t> by_label(labels.size(), 0), out(labels.size());
    for (std::size_t s = 0; s < labels.size(); ++s) by_label[labels[s]] |= 1u << s;
    for (std::size_t s = 0; s < labels.size(); ++s) out[s] = by_label[labels[s]];
    return out;
}

struct Side {
    std::vector<std::vector<std::uint32_t>> masks;
    std::vector<int> weight_index;
    std::vector<ExactScalar> weights;  // distinct values only
};

Side make_side(const std::map<Labels, ExactScalar>& parts) {
    Side side;
    std::map<ExactScalar, int> seen;
    for (const auto& [labels, w] : parts) {
        side.masks.push_back(block_masks(labels));
        auto [it, inserted] = seen.try_emplace(w, static_cast<int>(side.weights.size()));
        if (inserted) side.weights.push_back(w);
        side.weight_index.push_back(it->second);
    }
    return side;
}

ExactScalar integrate(GroupKind group, const Word& word, int N) {
    if (word.u_plain.empty() && word.u_conj.empty()) return 1;
    const int slots = static_cast<int>(word.external.size());
    if (slots > 32) throw std::logic_error("word engine: too many index slots");
    std::map<Labels, ExactScalar> pu, pv;
    if (group == GroupKind::unitary) {
        pu = unitary_partitions(word.u_plain, word.u_conj, word.external, N);
        pv = unitary_partitions(word.v_plain, word.v_conj, word.external, N);
    } else {
        pu = orthogonal_partitions(word.u_plain, word.u_conj, word.external, N);
        pv = orthogonal_partitions(word.v_plain, word.v_conj, word.external, N);
    }
    const Side su = make_side(pu), sv = make_side(pv);
    std::uint32_t pinned = 0;
    for (int s = 0; s < slots; ++s) {
        if (word.external[s]) pinned |= 1u << s;
    }
    const std::uint32_t all = slots == 32 ? ~0u : (1u << slots) - 1;
    const std::size_t nu = su.weights.size(), nv = sv.weights.size();
    // counts[(free * nu + wu) * nv + wv]
    std::vector<std::int64_t> counts((slots + 1) * nu * nv, 0);
    for (std::size_t i = 0; i < su.masks.size(); ++i) {
        const auto& um = su.masks[i];
        const std::size_t wu = su.weight_index[i];
        for (std::size_t j = 0; j < sv.masks.size(); ++j) {
            const auto& vm = sv.masks[j];
            std::uint32_t remaining = all;
            int free = 0;
            bool consistent = true;
            while (remaining && consistent) {
                std::uint32_t comp = remaining & (~remaining + 1);
                std::uint32_t frontier = comp;
                while (frontier) {
                    const int s = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    const std::uint32_t grow = (um[s] | vm[s]) & ~comp;
                    comp |= grow;
                    frontier |= grow;
                }
                remaining &= ~comp;
                const int hits = std::popcount(comp & pinned);
                if (hits == 0) ++free;
                consistent = hits <= 1;
            }
            if (consistent) ++counts[(free * nu + wu) * nv + sv.weight_index[j]];
        }
    }
    ExactScalar total = 0;
    for (int free = 0; free <= slots; ++free) {
        ExactScalar level = 0;
        for (std::size_t a = 0; a < nu; ++a) {
            for (std::size_t b = 0; b < nv; ++b) {
                const std::int64_t c = counts[(free * nu + a) * nv + b];
                if (c) level += ExactScalar(static_cast<long>(c)) * su.weights[a] * sv.weights[b];
            }
        }
        if (level != 0) total += power(ExactScalar(N), free) * level;
    }
    total.canonicalize();
    return total;
}

void check_degree(std::size_t degree) {
    if (degree > static_cast<std::size_t>(kMaxWordDegree)) {
        throw std::invalid_argument("word engine supports at most " + std::to_string(kMaxWordDegree) +
                                    " commutator factors, got " + std::to_string(degree));
    }
}

void check_group_size(GroupKind group, int degree, int N) {
    if (N < 1) throw std::invalid_argument("dimension N must be positive");
    if (group == GroupKind::orthogonal && N < degree) {
        throw SingularGramError("orthogonal word moments need N >= number of factors (N=" + std::to_string(N) +
                                ", factors=" + std::to_string(degree) + ")");
    }
}

}  // namespace

ExactScalar commutator_moment(const MomentRequest& request) {
    check_degree(request.factors.size());
    if (request.group == GroupKind::orthogonal) {
        for (const auto& f : request.factors) {
            if (f.conjugate) throw std::invalid_argument("CO commutators are real; conjugate flags are not accepted");
        }
    }
    check_group_size(request.group, static_cast<int>(request.factors.size()), request.N);
    Word word;
    std::map<int, int> slot_of_value;
    auto pinned = [&](int value) {
        if (value < 1 || value > request.N) {
            throw std::invalid_argument("index " + std::to_string(value) + " outside 1.." + std::to_string(request.N));
        }
        auto [it, inserted] = slot_of_value.try_emplace(value, -1);
        if (inserted) it->second = word.add_slot(true);
        return it->second;
    };
    for (const auto& f : request.factors) {
        const int r = pinned(f.row);
        const int c = pinned(f.col);
        word.add_factor(r, c, f.conjugate);
    }
    return integrate(request.group, word, request.N);
}

namespace {

ExactScalar trace_by_contraction(GroupKind group, int a, int b, int N) {
    Word word;
    for (int r = 0; r < a + b; ++r) {
        const int s = word.add_slot(false);
        word.add_factor(s, s, r >= a);
    }
    return integrate(group, word, N);
}

ExactScalar trace_by_patterns(GroupKind group, int a, int b, int N) {
    const int n = a + b;
    ExactScalar total = 0;
    for (const auto& blocks : set_partitions(n)) {
        const int used = n ? *std::max_element(blocks.begin(), blocks.end()) + 1 : 0;
        const BigInt count = falling_factorial(N, used);
        if (count == 0) continue;
        MomentRequest request{group, {}, N};
        for (int r = 0; r < n; ++r) request.factors.push_back({blocks[r] + 1, blocks[r] + 1, r >= a});
        total += ExactScalar(count) * commutator_moment(request);
    }
    total.canonicalize();
    return total;
}

}  // namespace

ExactScalar trace_mixed_moment(GroupKind group, int a, int b, int N, TraceRoute route) {
    if (a < 0 || b < 0) throw std::invalid_argument("trace_mixed_moment: exponents must be non-negative");
    if (group == GroupKind::orthogonal && b > 0) {
        throw std::invalid_argument("CO traces are real; use a conjugate-free request");
    }
    check_degree(static_cast<std::size_t>(a + b));
    check_group_size(group, a + b, N);
    return route == TraceRoute::patterns ? trace_by_patterns(group, a, b, N) : trace_by_contraction(group, a, b, N);
}

ExactScalar power_sum_moment(GroupKind group, const Partition& mu, int N) {
    check_degree(static_cast<std::size_t>(mu.weight()));
    check_group_size(group, mu.weight(), N);
    Word word;
    for (int part : mu.parts()) {
        std::vector<int> ring;
        for (int t = 0; t < part; ++t) ring.push_back(word.add_slot(false));
        for (int t = 0; t < part; ++t) word.add_factor(ring[t], ring[(t + 1) % part], false);
    }
    return integrate(group, word, N);
}

}  // namespace haarcomm
