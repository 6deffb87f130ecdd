#include "permstat/statistics.hpp"

#include <set>

#include "permstat/errors.hpp"

namespace permstat {

int inv(std::span<const int> w) {
    int count = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        for (std::size_t k = j + 1; k < w.size(); ++k) {
            if (w[j] > w[k]) ++count;
        }
    }
    return count;
}

int inv(const Permutation& p) { return inv(p.word()); }

int des(const Permutation& p) { return static_cast<int>(descent_positions(p).size()); }

int maj(std::span<const int> w) {
    int total = 0;
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
        if (w[j] > w[j + 1]) total += static_cast<int>(j) + 1;
    }
    return total;
}

int maj(const Permutation& p) { return maj(p.word()); }

int exc(const Permutation& p) { return static_cast<int>(excedance_positions(p).size()); }

int rlmin(const Permutation& p) { return static_cast<int>(rlmin_values(p).size()); }

int cyc(const Permutation& p) { return static_cast<int>(cycle_decomposition(p).size()); }

StatRecord basic_statistics(const Permutation& p) {
    return StatRecord{inv(p), des(p), maj(p), exc(p), rlmin(p), cyc(p)};
}

std::vector<int> descent_positions(const Permutation& p) {
    std::vector<int> out;
    for (int j = 1; j < p.size(); ++j) {
        if (p(j) > p(j + 1)) out.push_back(j);
    }
    return out;
}

std::vector<int> descent_tops(const Permutation& p) {
    std::vector<int> out;
    for (int j : descent_positions(p)) out.push_back(p(j));
    return out;
}

std::vector<int> descent_bottoms(const Permutation& p) {
    std::vector<int> out;
    for (int j : descent_positions(p)) out.push_back(p(j + 1));
    return out;
}

std::vector<int> excedance_positions(const Permutation& p) {
    std::vector<int> out;
    for (int j = 1; j <= p.size(); ++j) {
        if (p(j) > j) out.push_back(j);
    }
    return out;
}

std::vector<int> excedance_tops(const Permutation& p) {
    std::vector<int> out;
    for (int j : excedance_positions(p)) out.push_back(p(j));
    return out;
}

std::vector<int> rlmin_values(const Permutation& p) {
    std::vector<int> reversed;
    int running_min = p.size() + 1;
    for (int j = p.size(); j >= 1; --j) {
        if (p(j) < running_min) {
            running_min = p(j);
            reversed.push_back(p(j));
        }
    }
    return {reversed.rbegin(), reversed.rend()};
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation& p) {
    const int n = p.size();
    std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::vector<int>> cycles;
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        for (int v = start; !visited[static_cast<std::size_t>(v)]; v = p(v)) {
            visited[static_cast<std::size_t>(v)] = true;
            cycle.push_back(v);
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

Word restrict_to(const Permutation& p, int j) {
    if (j < 1 || j > p.size()) {
        throw ValidationError("restriction bound " + std::to_string(j) + " out of range 1.." +
                              std::to_string(p.size()));
    }
    Word out;
    for (int v : p.word()) {
        if (v <= j) out.push_back(v);
    }
    return out;
}

Word DescentBlockStructure::concatenated() const {
    Word out;
    for (const auto& b : blocks) out.insert(out.end(), b.values.begin(), b.values.end());
    return out;
}

DescentBlockStructure descent_blocks(const Permutation& p) {
    DescentBlockStructure s;
    for (int v : p.word()) {
        if (s.blocks.empty() || v > s.blocks.back().values.back()) {
            s.blocks.push_back(DescentBlock{{v}});
        } else {
            s.blocks.back().values.push_back(v);
        }
    }
    return s;
}

std::vector<int> rem_values(const Permutation& p) {
    const auto blocks = descent_blocks(p).blocks;
    std::vector<int> rem(static_cast<std::size_t>(p.size()) + 1, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (int v : blocks[b].values) {
            int count = 0;
            for (std::size_t r = b + 1; r < blocks.size(); ++r) {
                if (blocks[r].embraces(v)) ++count;
            }
            rem[static_cast<std::size_t>(v)] = count;
        }
    }
    return rem;
}

int mak(const Permutation& p) {
    int total = 0;
    for (int v : descent_bottoms(p)) total += v;
    for (int r : rem_values(p)) total += r;
    return total;
}

std::pair<Word, Word> excedance_split(const Permutation& p) {
    Word tops, rest;
    for (int j = 1; j <= p.size(); ++j) {
        (p(j) > j ? tops : rest).push_back(p(j));
    }
    return {std::move(tops), std::move(rest)};
}

int den_by_pair_sets(const Permutation& p) {
    const int n = p.size();
    int count = 0;
    for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
            const int a = p(j);
            const int b = p(k);
            if ((b < a && a <= k) || (a <= k && k < b) || (k < b && b < a)) ++count;
        }
    }
    return count;
}

int den_by_excedance_subwords(const Permutation& p) {
    const auto [tops, rest] = excedance_split(p);
    int total = inv(tops) + inv(rest);
    for (int j : excedance_positions(p)) total += j;
    return total;
}

int den(const Permutation& p) {
    const int by_sets = den_by_pair_sets(p);
    const int by_subwords = den_by_excedance_subwords(p);
    if (by_sets != by_subwords) {
        throw InternalInconsistency("den(" + p.to_string() + "): pair-set form gives " +
                                    std::to_string(by_sets) + ", excedance form gives " +
                                    std::to_string(by_subwords));
    }
    return by_sets;
}

std::vector<int> sor_c_values(const Permutation& p) {
    const int n = p.size();
    std::vector<int> c(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j) {
        // The orbit returns to j, so this terminates at j at the latest.
        int k = p(j);
        while (k > j) k = p(k);
        c[static_cast<std::size_t>(j)] = k;
    }
    return c;
}

int sor(const Permutation& p) {
    const auto c = sor_c_values(p);
    int total = 0;
    for (int j = 1; j <= p.size(); ++j) total += j - c[static_cast<std::size_t>(j)];
    return total;
}

InversionNumbers inversion_numbers(std::span<const int> w) {
    std::set<int> distinct(w.begin(), w.end());
    if (distinct.size() != w.size()) throw ValidationError("word has duplicate entries");
    InversionNumbers out;
    for (std::size_t j = 0; j < w.size(); ++j) {
        int larger_left = 0;
        int smaller_right = 0;
        for (std::size_t k = 0; k < j; ++k) {
            if (w[k] > w[j]) ++larger_left;
        }
        for (std::size_t k = j + 1; k < w.size(); ++k) {
            if (w[k] < w[j]) ++smaller_right;
        }
        out.bottom[w[j]] = larger_left;
        out.top[w[j]] = smaller_right;
    }
    return out;
}

}  // namespace permstat
