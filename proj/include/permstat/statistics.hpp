#pragma once

#include <map>
#include <utility>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

struct StatRecord {
    int inv = 0;
    int des = 0;
    int maj = 0;
    int exc = 0;
    int rlmin = 0;
    int cyc = 0;

    friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

StatRecord basic_statistics(const Permutation& p);

// Single statistics. Each is a plain scan of the word.
int inv(std::span<const int> w);
int inv(const Permutation& p);
int des(const Permutation& p);
int maj(std::span<const int> w);
int maj(const Permutation& p);
int exc(const Permutation& p);
int rlmin(const Permutation& p);
int cyc(const Permutation& p);

/// Positions j with sigma_j > sigma_{j+1}.
std::vector<int> descent_positions(const Permutation& p);
/// Values sigma_j at descents.
std::vector<int> descent_tops(const Permutation& p);
/// Values sigma_{j+1} at descents.
std::vector<int> descent_bottoms(const Permutation& p);
/// Positions j with sigma_j > j.
std::vector<int> excedance_positions(const Permutation& p);
/// Values sigma_j with sigma_j > j, in word order.
std::vector<int> excedance_tops(const Permutation& p);
/// Right-to-left minima in word order.
std::vector<int> rlmin_values(const Permutation& p);

/// Disjoint cycles, each listed from its minimum and following sigma; cycles sorted by minimum.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& p);

/// sigma^(j): the subword of values 1..j in their original order. Requires 1 <= j <= n.
Word restrict_to(const Permutation& p, int j);

struct DescentBlock {
    Word values;  // strictly decreasing

    int closer() const { return values.front(); }
    int opener() const { return values.back(); }
    bool is_outsider() const { return values.size() == 1; }
    /// Opener < v < closer.
    bool embraces(int v) const { return opener() < v && v < closer(); }
};

/// Maximal decreasing runs, left to right.
struct DescentBlockStructure {
    std::vector<DescentBlock> blocks;

    Word concatenated() const;
};

DescentBlockStructure descent_blocks(const Permutation& p);

/// rem(v) for v = 1..n, indexed by value (index 0 unused).
std::vector<int> rem_values(const Permutation& p);

int mak(const Permutation& p);

/// (sigma_E, sigma_N): excedance tops and non-excedance tops in word order.
std::pair<Word, Word> excedance_split(const Permutation& p);

/// Denert's statistic via the three pair-counting sets.
int den_by_pair_sets(const Permutation& p);
/// Denert's statistic via inv(sigma_E) + inv(sigma_N) + sum of excedance positions.
int den_by_excedance_subwords(const Permutation& p);
/// Computes both forms; throws InternalInconsistency if they differ.
int den(const Permutation& p);

/// c_1..c_n (index 0 unused): c_j = j if j is minimal in its cycle, else the first value
/// smaller than j in the forward orbit sigma(j), sigma^2(j), ...
std::vector<int> sor_c_values(const Permutation& p);
int sor(const Permutation& p);

struct InversionNumbers {
    std::map<int, int> bottom;  // # larger entries to the left
    std::map<int, int> top;     // # smaller entries to the right
};

/// Throws ValidationError on duplicate entries.
InversionNumbers inversion_numbers(std::span<const int> w);

}  // namespace permstat
