#pragma once

// Brute-force ground truth: BFS over the Cayley graph of the circular
// adjacent-swap generators, measuring distance to the dihedral identity class.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclinv/circular.hpp"

namespace cyclinv {

// Window packed base n+1 into 64 bits (valid for n <= 9).
std::uint64_t encode_window(const CircularArrangement& a);

struct DistanceTable {
    int n = 0;
    std::unordered_map<std::uint64_t, int> entries; // all n! windows

    int distance(const CircularArrangement& a) const;
    std::map<int, std::int64_t> histogram() const;
};

// Shortest generator word taking a into the dihedral class of the identity.
// Forward BFS; n <= 9.
int bfs_distance(const CircularArrangement& a);

// Multi-source BFS from the 2n sorted windows over all of S_n; n <= 8.
DistanceTable exhaustive_table(int n);

struct EquivalenceReport {
    int n = 0;
    std::int64_t checked = 0;
    std::vector<std::string> mismatches;          // "window: algo=x oracle=y"
    std::map<int, std::int64_t> histogram;        // oracle distance -> count
};

// Compare circular_length against the oracle: exhaustively for n <= 8, or on
// sample_size random windows (fixed seed) otherwise (n <= 9).
EquivalenceReport check_equivalence(int n, std::optional<int> sample_size = std::nullopt);

} // namespace cyclinv
