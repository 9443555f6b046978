#pragma once

#include <span>
#include <utility>
#include <vector>

#include "haarcomm/combinatorics.hpp"

namespace haarcomm {

/// Perfect matching of {1..2n}, stored as a partner table on 0-based points.
///
/// In diagram form, point 2i-1 sits on the top row at column i and point 2i
/// on the bottom row at column i, so the trivial matching {1,2},{3,4},... is
/// the identity diagram of vertical lines.
class Matching {
public:
    Matching() = default;

    /// 1-based blocks; throws std::invalid_argument unless they cover {1..2n} exactly.
    static Matching from_blocks(const std::vector<std::pair<int, int>>& blocks);
    /// 0-based partner table.
    static Matching from_partners(std::vector<int> partner);
    static Matching trivial(int n);

    int order() const { return static_cast<int>(partner_.size()) / 2; }
    int points() const { return static_cast<int>(partner_.size()); }
    int partner(int point) const { return partner_[point]; }

    /// Canonical 1-based blocks: each pair sorted, pairs sorted by first element.
    std::vector<std::pair<int, int>> blocks() const;
    std::string to_string() const;

    friend auto operator<=>(const Matching&, const Matching&) = default;

private:
    std::vector<int> partner_;
};

/// M_n, (2n-1)!! matchings in lexicographic order of their canonical blocks.
std::vector<Matching> all_matchings(int n);

/// Half the component sizes of the union of `a` and `b` on the same 2n points.
Partition pair_type(const Matching& a, const Matching& b);

/// Components of the union of `a` and `b` (the length of pair_type).
int pair_loops(const Matching& a, const Matching& b);

/// Coset type: pair_type with the trivial matching.
Partition coset_type(const Matching& m);

struct BrauerProductResult {
    Matching product;
    int loops = 0;
};

/// Diagram product: the bottom row of `a` is glued to the top row of `b`;
/// closed loops formed in the middle row are counted and discarded.
/// For permutational arguments the product corresponds to
/// perm_from_matching(b) * perm_from_matching(a) (apply a first).
BrauerProductResult brauer_product(const Matching& a, const Matching& b);

/// Every block joins an odd point to an even point.
bool is_permutational(const Matching& m);

/// Block {2i-1, 2j} maps i to j; throws std::invalid_argument if not permutational.
Permutation perm_from_matching(const Matching& m);
Matching matching_from_perm(const Permutation& p);

/// Delta_m(indices): 1 iff indices agree on every block.
bool delta_eval(const Matching& m, std::span<const int> indices);

/// The coset representative sigma in S_2n with sigma(t) = m and
/// sigma(2i-1) < sigma(2i), sigma(1) < sigma(3) < ... (1-based images).
std::vector<int> coset_representative(const Matching& m);

}  // namespace haarcomm
