#include "haarcomm/matchings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace haarcomm {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace

Matching Matching::from_partners(std::vector<int> partner) {
    const int size = static_cast<int>(partner.size());
    if (size % 2) throw std::invalid_argument("matching needs an even number of points");
    for (int x = 0; x < size; ++x) {
        const int y = partner[x];
        if (y < 0 || y >= size || y == x || partner[y] != x) {
            throw std::invalid_argument("not a perfect matching");
        }
    }
    Matching m;
    m.partner_ = std::move(partner);
    return m;
}

Matching Matching::from_blocks(const std::vector<std::pair<int, int>>& blocks) {
    const int size = static_cast<int>(blocks.size()) * 2;
    std::vector<int> partner(size, -1);
    for (auto [a, b] : blocks) {
        if (a < 1 || b < 1 || a > size || b > size || a == b || partner[a - 1] != -1 ||
            partner[b - 1] != -1) {
            throw std::invalid_argument("blocks do not form a matching of {1..2n}");
        }
        partner[a - 1] = b - 1;
        partner[b - 1] = a - 1;
    }
    return from_partners(std::move(partner));
}

Matching Matching::trivial(int n) {
    std::vector<int> partner(2 * n);
    for (int i = 0; i < n; ++i) {
        partner[2 * i] = 2 * i + 1;
        partner[2 * i + 1] = 2 * i;
    }
    return from_partners(std::move(partner));
}

std::vector<std::pair<int, int>> Matching::blocks() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < points(); ++x) {
        if (x < partner_[x]) out.emplace_back(x + 1, partner_[x] + 1);
    }
    return out;
}

std::string Matching::to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto [a, b] : blocks()) {
        out += (first ? "{" : ",{") + std::to_string(a) + "," + std::to_string(b) + "}";
        first = false;
    }
    return out + "}";
}

namespace {

void grow_matchings(std::vector<int>& partner, std::vector<Matching>& out) {
    const auto free = std::find(partner.begin(), partner.end(), -1);
    if (free == partner.end()) {
        out.push_back(Matching::from_partners(partner));
        return;
    }
    const int x = static_cast<int>(free - partner.begin());
    for (int y = x + 1; y < static_cast<int>(partner.size()); ++y) {
        if (partner[y] != -1) continue;
        partner[x] = y;
        partner[y] = x;
        grow_matchings(partner, out);
        partner[x] = partner[y] = -1;
    }
}

}  // namespace

std::vector<Matching> all_matchings(int n) {
    std::vector<int> partner(2 * n, -1);
    std::vector<Matching> out;
    grow_matchings(partner, out);
    return out;
}

Partition pair_type(const Matching& a, const Matching& b) {
    if (a.points() != b.points()) throw std::invalid_argument("matchings of different order");
    UnionFind uf(a.points());
    for (int x = 0; x < a.points(); ++x) {
        uf.unite(x, a.partner(x));
        uf.unite(x, b.partner(x));
    }
    std::vector<int> sizes(a.points(), 0);
    for (int x = 0; x < a.points(); ++x) ++sizes[uf.find(x)];
    std::vector<int> halves;
    for (int s : sizes) {
        if (s) halves.push_back(s / 2);
    }
    return Partition::from_unsorted(std::move(halves));
}

int pair_loops(const Matching& a, const Matching& b) { return pair_type(a, b).length(); }

Partition coset_type(const Matching& m) { return pair_type(Matching::trivial(m.order()), m); }

BrauerProductResult brauer_product(const Matching& a, const Matching& b) {
    if (a.points() != b.points()) throw std::invalid_argument("matchings of different order");
    const int n = a.order();
    // Vertices: top row of a (0..n-1), middle row (n..2n-1), bottom row of b (2n..3n-1).
    auto a_vertex = [n](int point) { return point % 2 == 0 ? point / 2 : n + point / 2; };
    auto b_vertex = [n](int point) { return point % 2 == 0 ? n + point / 2 : 2 * n + point / 2; };
    std::vector<std::vector<int>> adjacent(3 * n);
    for (int x = 0; x < 2 * n; ++x) {
        const int ya = a.partner(x);
        if (x < ya) {
            adjacent[a_vertex(x)].push_back(a_vertex(ya));
            adjacent[a_vertex(ya)].push_back(a_vertex(x));
        }
        const int yb = b.partner(x);
        if (x < yb) {
            adjacent[b_vertex(x)].push_back(b_vertex(yb));
            adjacent[b_vertex(yb)].push_back(b_vertex(x));
        }
    }
    // Outer vertices have degree 1, middle vertices degree 2: walk paths from
    // each outer vertex; whatever middle vertices remain unvisited form loops.
    std::vector<char> visited(3 * n, 0);
    std::vector<int> partner(2 * n, -1);
    auto point_of = [n](int vertex) { return vertex < n ? 2 * vertex : 2 * (vertex - 2 * n) + 1; };
    for (int start = 0; start < 3 * n; ++start) {
        if (start >= n && start < 2 * n) continue;
        if (visited[start]) continue;
        int prev = -1, cur = start;
        visited[cur] = 1;
        while (true) {
            int next = -1;
            for (int y : adjacent[cur]) {
                if (y != prev && !visited[y]) { next = y; break; }
            }
            if (next < 0) break;
            prev = cur;
            cur = next;
            visited[cur] = 1;
            if (cur < n || cur >= 2 * n) break;
        }
        partner[point_of(start)] = point_of(cur);
        partner[point_of(cur)] = point_of(start);
    }
    int loops = 0;
    for (int v = n; v < 2 * n; ++v) {
        if (visited[v]) continue;
        ++loops;
        int prev = -1, cur = v;
        while (!visited[cur]) {
            visited[cur] = 1;
            int next = adjacent[cur][0] != prev ? adjacent[cur][0] : adjacent[cur][1];
            prev = cur;
            cur = next;
        }
    }
    return {Matching::from_partners(std::move(partner)), loops};
}

bool is_permutational(const Matching& m) {
    for (int x = 0; x < m.points(); x += 2) {
        if (m.partner(x) % 2 == 0) return false;
    }
    return true;
}

Permutation perm_from_matching(const Matching& m) {
    if (!is_permutational(m)) throw std::invalid_argument("matching is not permutational");
    std::vector<int> images(m.order());
    for (int i = 0; i < m.order(); ++i) images[i] = m.partner(2 * i) / 2;
    return Permutation(std::move(images));
}

Matching matching_from_perm(const Permutation& p) {
    std::vector<int> partner(2 * p.size());
    for (int i = 0; i < p.size(); ++i) {
        partner[2 * i] = 2 * p(i) + 1;
        partner[2 * p(i) + 1] = 2 * i;
    }
    return Matching::from_partners(std::move(partner));
}

bool delta_eval(const Matching& m, std::span<const int> indices) {
    if (static_cast<int>(indices.size()) != m.points()) {
        throw std::invalid_argument("delta_eval: index list length must be 2n");
    }
    for (int x = 0; x < m.points(); ++x) {
        if (indices[x] != indices[m.partner(x)]) return false;
    }
    return true;
}

std::vector<int> coset_representative(const Matching& m) {
    std::vector<int> sigma;
    for (auto [a, b] : m.blocks()) {  // blocks are sorted by their smaller element
        sigma.push_back(a);
        sigma.push_back(b);
    }
    return sigma;
}

}  // namespace haarcomm
