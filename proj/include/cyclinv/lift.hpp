#pragma once

// Minimal lifting of circular arrangements into the extended affine group,
// the circular two-region inversion length, and geodesic sorting words.

#include <cstdint>
#include <vector>

#include "cyclinv/affine.hpp"
#include "cyclinv/circular.hpp"

namespace cyclinv {

struct LiftResult {
    DihedralElement frame;              // argmin frame of reference
    ExtendedAffinePermutation lifted;   // minimized lift of the reframed window
    std::int64_t length = 0;            // shi_length(lifted)
};

// Nearest periodic representative of `image` to position i: image+-n if that
// is strictly closer, otherwise image unchanged (ties keep the original).
std::int64_t minimize_path(int n, int i, std::int64_t image);

// Position-wise minimize_path over the window.
ExtendedAffinePermutation minimal_lift(const CircularArrangement& a);

// Minimum shi_length of the minimal lift over all 2n frames of reference.
// Zero exactly on the dihedral class of the identity.
std::int64_t circular_length(const CircularArrangement& a);

// Same minimum plus the first argmin frame in scan order (rotations
// 0..n-1 unflipped, then flipped) and its lift.
LiftResult circular_length_witness(const CircularArrangement& a);

// Inversion distance between two arrangements: circular_length of the
// relative element invert(a) * b.
std::int64_t pair_distance(const CircularArrangement& a, const CircularArrangement& b);

// Deterministic geodesic: word of length circular_length(a) whose
// application takes a into the dihedral class of the identity.
SortingWord sort_by_uncrossings(const CircularArrangement& a);

// Up to `limit` geodesic words in lexicographic order.
std::vector<SortingWord> enumerate_geodesics(const CircularArrangement& a, int limit);

} // namespace cyclinv
