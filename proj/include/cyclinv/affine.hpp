#pragma once

// Extended affine permutations: periodic bijections of Z with period n,
// sigma(i+n) = sigma(i)+n.  The window sigma(1..n) determines everything.

#include <cstdint>
#include <string>
#include <vector>

namespace cyclinv {

class ExtendedAffinePermutation {
public:
    // images = window sigma(1..n); residues mod n must be pairwise distinct.
    ExtendedAffinePermutation(int n, std::vector<std::int64_t> images);

    static ExtendedAffinePermutation identity(int n);

    int period() const { return n_; }
    const std::vector<std::int64_t>& images() const { return images_; }

    // sigma(i) for any integer i, via periodicity.
    std::int64_t eval(std::int64_t i) const;

    std::string to_string() const;

    bool operator==(const ExtendedAffinePermutation&) const = default;

private:
    int n_;
    std::vector<std::int64_t> images_;
};

// Positions 1 <= i < j <= n.
struct AscendingPair {
    int i = 0;
    int j = 0;
    bool operator==(const AscendingPair&) const = default;
};

bool is_balanced(const ExtendedAffinePermutation& sigma);

// (sum of images - n(n+1)/2) / n; always an exact integer.
std::int64_t winding_number(const ExtendedAffinePermutation& sigma);

// floor((sigma(j) - sigma(i)) / n) for an ascending pair.
std::int64_t crossing_number(const ExtendedAffinePermutation& sigma, const AscendingPair& p);

// All ascending pairs with crossing number exactly k, in row-major scan order.
std::vector<AscendingPair> crossing_set(const ExtendedAffinePermutation& sigma, std::int64_t k);

// Sum of |crossing_number| over all ascending pairs: the minimum number of
// adjacent transpositions representing sigma.
std::int64_t shi_length(const ExtendedAffinePermutation& sigma);

// Nett crossing number nu_i: signed crossings of strand i against all other
// strands.  For winding-k sigma this equals i - sigma(i) + k.
std::int64_t nett_crossing(const ExtendedAffinePermutation& sigma, int i);

// sigma^S: add n to the image of every position in S (subset of 1..n).
// Same circular permutation, different representative.
ExtendedAffinePermutation shift_images(const ExtendedAffinePermutation& sigma,
                                       const std::vector<int>& s);

// Repeatedly apply the extremal-crossing shifts (empty I_alpha first, then
// I_{-alpha}) until every crossing number lies in {-1,0,+1}.  Throws
// std::logic_error if the termination guard trips (implementation bug).
ExtendedAffinePermutation reduce_extremal_crossings(const ExtendedAffinePermutation& sigma);

// Group operations.  compose(a, b)(i) = a(b(i)); periods must match.
ExtendedAffinePermutation compose(const ExtendedAffinePermutation& a,
                                  const ExtendedAffinePermutation& b);
ExtendedAffinePermutation invert(const ExtendedAffinePermutation& sigma);

// sigma * s_i: swap the images at positions i and i+1 (i = n wraps to
// positions n and n+1, so both window entries change by +-n).
ExtendedAffinePermutation right_multiply_generator(const ExtendedAffinePermutation& sigma, int i);

} // namespace cyclinv
