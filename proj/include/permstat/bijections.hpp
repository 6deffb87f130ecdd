#pragma once

#include "permstat/codes.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

/// Two-line array; column i sends top[i] to bottom[i].
struct Biword {
    Word top;
    Word bottom;

    /// Sorts the columns by the top row and returns the bottom row as a permutation.
    /// Throws ValidationError if either row is not a rearrangement of 1..n.
    Permutation to_permutation() const;
};

/// The pieces of the descent-block biword built from sigma.
struct PhiConstruction {
    Word f;        // descent bottoms, increasing
    Word g;        // non-descent bottoms, increasing
    Word f_prime;  // descent tops; inversion bottom number of k equals rem(k)
    Word g_prime;  // non-descent tops; inversion top number of l equals rem(l)

    Biword biword() const { return {concat(f, g), concat(f_prime, g_prime)}; }

private:
    static Word concat(const Word& a, const Word& b);
};

/// Throws InternalInconsistency if f' or g' miss their inversion-number targets.
PhiConstruction phi_construction(const Permutation& p);

/// Sends (rlmin, des, mak) to (rlmin, exc, den).
Permutation phi(const Permutation& p);

/// Table-backed inverse; throws CapExceededError when n > table_cap().
Permutation phi_inverse(const Permutation& p);

/// decode(encode(p, MAJ), codec). Carries (rlmin, des, maj) of p onto (zer, st, add) of the
/// codec's code of the result.
Permutation codemap(const Permutation& p, CodecId codec);

}  // namespace permstat
