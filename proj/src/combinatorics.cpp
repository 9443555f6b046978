#include "haarcomm/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace haarcomm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(n, 1)); }

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i) {
        if (inner.parts_[i] > parts_[i]) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument("bad partition part '" + token + "'");
        parts.push_back(v);
        token.clear();
    };
    for (char c : text) {
        if (c == '(' || c == ')' || c == '[' || c == ']') continue;
        if (c == ',' || c == ' ') {
            flush();
        } else if (c >= '0' && c <= '9') {
            token += c;
        } else {
            throw std::invalid_argument("bad character in partition '" + text + "'");
        }
    }
    flush();
    return Partition(std::move(parts));
}

namespace {

void enumerate_partitions(int remaining, int max_part, int parts_left, std::vector<int>& current,
                          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (parts_left == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // the remaining parts_left-1 parts are at most `part` each
        if (static_cast<long>(part) * parts_left < remaining) break;
        current.push_back(part);
        enumerate_partitions(remaining - part, part, parts_left - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_parts) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
    if (max_parts < 1 && n > 0) return {};
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate_partitions(n, n, std::min(max_parts, std::max(n, 1)), current, out);
    return out;
}

std::int64_t partition_count(int n, int max_parts) {
    if (n < 0) throw std::invalid_argument("partition_count: n must be non-negative");
    // partitions of n into parts of size <= k equal partitions into at most k parts
    const int k = std::min(max_parts, std::max(n, 1));
    std::vector<std::int64_t> ways(n + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= k; ++part) {
        for (int total = part; total <= n; ++total) ways[total] += ways[total - part];
    }
    return ways[n];
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    for (int j = 1; j <= lambda[0]; ++j) {
        int count = 0;
        while (count < lambda.length() && lambda[count] >= j) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

int durfee(const Partition& lambda) {
    int r = 0;
    while (r < lambda.length() && lambda[r] >= r + 1) ++r;
    return r;
}

BigInt factorial(int n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt double_factorial(int n) {
    BigInt out = 1;
    for (int k = n; k > 1; k -= 2) out *= k;
    return out;
}

BigInt centralizer_size(const Partition& lambda) {
    BigInt z = 1;
    for (int part = 1; part <= lambda[0]; ++part) {
        const int m = lambda.multiplicity(part);
        for (int i = 0; i < m; ++i) z *= part;
        z *= factorial(m);
    }
    return z;
}

BigInt class_size(const Partition& lambda) {
    return factorial(lambda.weight()) / centralizer_size(lambda);
}

BigInt stirling2(int a, int b) {
    if (a < 0 || b < 0) return 0;
    // row-by-row recurrence S(a,b) = b S(a-1,b) + S(a-1,b-1)
    std::vector<BigInt> row(b + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= a; ++i) {
        for (int j = std::min(i, b); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[b];
}

BigInt a_coeff(int n, int m) {
    BigInt sum = 0;
    for (int k = 0; k <= n - 1; ++k) {
        BigInt kpow;
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
        BigInt term = factorial(k) * factorial(n - k - 1) * kpow;
        if (k % 2) sum -= term; else sum += term;
    }
    return sum;
}

BigInt falling_factorial(std::int64_t N, int k) {
    BigInt out = 1;
    for (int i = 0; i < k; ++i) out *= BigInt(static_cast<long>(N - i));
    return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
        if (x < 0 || x >= size() || seen[x]) throw std::invalid_argument("not a permutation");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
    std::vector<int> im(images.size());
    std::transform(images.begin(), images.end(), im.begin(), [](int x) { return x - 1; });
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    for (const auto& cycle : cycles) {
        for (std::size_t t = 0; t < cycle.size(); ++t) {
            im[cycle[t] - 1] = cycle[(t + 1) % cycle.size()] - 1;
        }
    }
    return Permutation(std::move(im));
}

std::vector<int> Permutation::one_based() const {
    std::vector<int> out(images_);
    for (int& x : out) ++x;
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation sizes differ");
    std::vector<int> im(a.size());
    for (int i = 0; i < a.size(); ++i) im[i] = a.images_[b.images_[i]];
    return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        for (int x = start; !seen[x]; x = images_[x]) {
            seen[x] = 1;
            cycle.push_back(x);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    for (const auto& cycle : cycles()) {
        out << '(';
        for (std::size_t t = 0; t < cycle.size(); ++t) out << (t ? " " : "") << cycle[t] + 1;
        out << ')';
    }
    return out.str();
}

Partition cycle_type(const Permutation& p) {
    std::vector<int> lengths;
    for (const auto& c : p.cycles()) lengths.push_back(static_cast<int>(c.size()));
    return Partition::from_unsorted(std::move(lengths));
}

int cycle_count(const Permutation& p) {
    int count = 0;
    std::vector<char> seen(p.size(), 0);
    for (int start = 0; start < p.size(); ++start) {
        if (seen[start]) continue;
        ++count;
        for (int x = start; !seen[x]; x = p(x)) seen[x] = 1;
    }
    return count;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

Permutation representative(const Partition& lambda) {
    std::vector<int> im(lambda.weight());
    int start = 0;
    for (int part : lambda.parts()) {
        for (int t = 0; t < part; ++t) im[start + t] = start + (t + 1) % part;
        start += part;
    }
    return Permutation(std::move(im));
}

namespace {

void grow_set_partitions(int n, std::vector<int>& labels, int blocks,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<int>(labels.size()) == n) {
        out.push_back(labels);
        return;
    }
    for (int b = 0; b <= blocks; ++b) {
        labels.push_back(b);
        grow_set_partitions(n, labels, std::max(blocks, b + 1), out);
        labels.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> set_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> labels;
    grow_set_partitions(n, labels, 0, out);
    return out;
}

}  // namespace haarcomm
