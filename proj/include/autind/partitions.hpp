#ifndef AUTIND_PARTITIONS_HPP
#define AUTIND_PARTITIONS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "errors.hpp"

namespace autind {

/// Weakly decreasing list of positive parts. The empty partition is the
/// exponent vector of the constant monomial.
using Partition = std::vector<int>;

inline int weight(const Partition& p)
{
    int s = 0;
    for (int x : p)
        s += x;
    return s;
}

inline Partition canonical_partition(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (int x : parts)
        require(x > 0, ErrorKind::InvalidArgument, "exponents of a dominant vector must be nonnegative");
    return parts;
}

inline std::vector<int> padded(const Partition& p, int n)
{
    require(static_cast<int>(p.size()) <= n, ErrorKind::RankMismatch, "partition longer than the number of variables");
    std::vector<int> v(p);
    v.resize(static_cast<std::size_t>(n), 0);
    return v;
}

/// All partitions of k, parts in decreasing order.
inline std::vector<Partition> partitions_of(int k)
{
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

inline std::vector<Partition> partitions_of(int k, int max_length)
{
    std::vector<Partition> out;
    for (auto& p : partitions_of(k))
        if (static_cast<int>(p.size()) <= max_length)
            out.push_back(std::move(p));
    return out;
}

inline std::int64_t factorial(int n)
{
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

/// Product of mult! over the multiplicities of the entries of v.
inline std::int64_t multiplicity_factorials(const std::vector<int>& v)
{
    std::map<int, int> mult;
    for (int x : v)
        ++mult[x];
    std::int64_t f = 1;
    for (const auto& [x, k] : mult)
        f *= factorial(k);
    return f;
}

/// Number of distinct permutations of p padded with zeros to length n.
inline std::int64_t orbit_size(const Partition& p, int n)
{
    return factorial(n) / multiplicity_factorials(padded(p, n));
}

/// Distinct permutations of a vector, in lexicographic order.
inline std::vector<std::vector<int>> distinct_permutations(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do
        out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Ordered splittings of a multiset of integers into `parts` sub-multisets of
/// `size` entries each. Each block is returned sorted decreasingly.
inline std::vector<std::vector<std::vector<int>>> block_splittings(const std::vector<int>& items, int parts, int size)
{
    require(static_cast<int>(items.size()) == parts * size, ErrorKind::RankMismatch, "block sizes do not add up");
    std::map<int, int, std::greater<>> mult;
    for (int x : items)
        ++mult[x];
    std::vector<int> values;
    std::vector<int> remaining;
    for (const auto& [x, k] : mult) {
        values.push_back(x);
        remaining.push_back(k);
    }
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> acc;
    std::function<void(int)> next_block = [&](int left_blocks) {
        if (left_blocks == 0) {
            out.push_back(acc);
            return;
        }
        std::vector<int> take(values.size(), 0);
        std::function<void(std::size_t, int)> choose = [&](std::size_t idx, int left) {
            if (left == 0) {
                std::vector<int> block;
                for (std::size_t i = 0; i < values.size(); ++i) {
                    block.insert(block.end(), static_cast<std::size_t>(take[i]), values[i]);
                    remaining[i] -= take[i];
                }
                acc.push_back(std::move(block));
                next_block(left_blocks - 1);
                acc.pop_back();
                for (std::size_t i = 0; i < values.size(); ++i)
                    remaining[i] += take[i];
                return;
            }
            if (idx == values.size())
                return;
            for (int k = std::min(left, remaining[idx]); k >= 0; --k) {
                take[idx] = k;
                choose(idx + 1, left - k);
            }
            take[idx] = 0;
        };
        choose(0, size);
    };
    next_block(parts);
    return out;
}

} // namespace autind

#endif // AUTIND_PARTITIONS_HPP
