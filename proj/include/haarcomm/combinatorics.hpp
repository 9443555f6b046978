#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "haarcomm/exact.hpp"

namespace haarcomm {

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// Integer partition: weakly decreasing positive parts.
///
/// Labels irreducible representations and conjugacy classes of S_n, cycle
/// types of permutations and coset types of matchings. Ordering is
/// lexicographic on the parts, so the canonical enumeration order (largest
/// first) is simply descending order.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts and drops zero entries.
    static Partition from_unsorted(std::vector<int> parts);

    /// (1^n)
    static Partition ones(int n);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i-th part (0-based), zero beyond the length.
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }

    int multiplicity(int part) const;

    /// Contains every cell of `inner`.
    bool contains(const Partition& inner) const;

    /// "(3,1,1)"; the empty partition prints as "()".
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Parses "3,1,1", "(3,1,1)", "3 1 1" or "1^3"-free plain lists; empty text or "()" is ∅.
Partition parse_partition(const std::string& text);

/// All partitions of n with at most `max_parts` parts, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n, int max_parts = kUnbounded);

/// Number of partitions of n with at most `max_parts` parts (dynamic programming).
std::int64_t partition_count(int n, int max_parts = kUnbounded);

Partition conjugate(const Partition& lambda);

/// Side of the Durfee square: largest i with lambda_i >= i.
int durfee(const Partition& lambda);

/// z_lambda = prod_i i^{m_i} m_i!
BigInt centralizer_size(const Partition& lambda);

/// |C_lambda| = n!/z_lambda
BigInt class_size(const Partition& lambda);

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt double_factorial(int n);

/// S(a, b), Stirling numbers of the second kind.
BigInt stirling2(int a, int b);

/// A_{n,m} = sum_{k=0}^{n-1} (-1)^k k! (n-k-1)! k^m with 0^0 = 1.
BigInt a_coeff(int n, int m);

/// N (N-1) ... (N-k+1)
BigInt falling_factorial(std::int64_t N, int k);

/// Permutation of {0..n-1}; I/O helpers speak 1-based images.
class Permutation {
public:
    Permutation() = default;

    /// 0-based images; throws std::invalid_argument if not a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation from_one_based(const std::vector<int>& images);
    /// Cycles given with 1-based points, e.g. {{1,2,8,9,3},{5,6}}.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }
    std::vector<int> one_based() const;

    Permutation inverse() const;

    /// Function composition: (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    std::vector<std::vector<int>> cycles() const;  // 0-based points
    std::string to_string() const;                 // cycle notation, 1-based

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

Partition cycle_type(const Permutation& p);
int cycle_count(const Permutation& p);

/// S_n in lexicographic order of the image lists.
std::vector<Permutation> all_permutations(int n);

/// A permutation whose cycle type is `lambda` (cycles on consecutive points).
Permutation representative(const Partition& lambda);

/// Set partitions of {0..n-1} as restricted-growth strings (block labels in
/// first-occurrence order).
std::vector<std::vector<int>> set_partitions(int n);

}  // namespace haarcomm
