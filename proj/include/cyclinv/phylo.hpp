#pragma once

// Distance matrices over genome collections, neighbor-joining, and
// PHYLIP / Newick interchange.

#include <string>
#include <utility>
#include <vector>

#include "cyclinv/circular.hpp"

namespace cyclinv {

struct DistanceMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> values; // symmetric, zero diagonal

    int size() const { return static_cast<int>(labels.size()); }
    void validate() const; // throws std::invalid_argument on any violation
};

// Unrooted tree stored as a node arena; the root is the basal trifurcation
// left by the final NJ step (or the 3-taxon star center).
struct PhyloTree {
    struct Node {
        std::string label;                             // empty for internal
        std::vector<std::pair<int, double>> children;  // (node id, branch length)
    };
    std::vector<Node> nodes;
    int root = -1;
    int clamped_branches = 0; // negative branch lengths clamped to zero

    bool is_leaf(int id) const { return nodes[static_cast<size_t>(id)].children.empty(); }
};

DistanceMatrix build_matrix(const std::vector<std::pair<std::string, CircularArrangement>>& genomes);

// Saitou-Nei neighbor joining; lowest-index tie break, negative branches
// clamped to zero (counted in clamped_branches).
PhyloTree neighbor_joining(const DistanceMatrix& m);

// Newick with branch lengths (6 significant digits), children in join order,
// semicolon-terminated.
std::string write_newick(const PhyloTree& t);

// PHYLIP square format: taxon count line, then "name d1 d2 ... dn" rows.
DistanceMatrix read_phylip(const std::string& text);
std::string write_phylip(const DistanceMatrix& m);

// True iff `first` and `second` are leaves sharing an internal neighbor.
bool has_cherry(const PhyloTree& t, const std::string& first, const std::string& second);

// The embedded 8-taxon Yersinia inversion-distance matrix.
DistanceMatrix yersinia_fixture();

} // namespace cyclinv
