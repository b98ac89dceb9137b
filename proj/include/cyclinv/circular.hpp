#pragma once

// Circular genome arrangements: a window of n distinct region labels on a
// circle, the n adjacent-swap generators (index n swaps positions n and 1),
// and the dihedral group of viewpoint changes.

#include <optional>
#include <string>
#include <vector>

namespace cyclinv {

/// A permutation of {1..n} read around a circle. Position p (1-based) holds
/// window()[p-1]; position arithmetic wraps mod n. Requires n >= 3: for
/// smaller n the circular generators degenerate.
class CircularArrangement {
public:
    explicit CircularArrangement(std::vector<int> window);

    static CircularArrangement identity(int n);

    int size() const { return static_cast<int>(window_.size()); }
    const std::vector<int>& window() const { return window_; }

    /// Label at 1-based circular position p (p taken mod n).
    int label_at(int p) const;

    /// 1-based position of a label.
    int position_of(int label) const;

    std::string to_string() const;

    bool operator==(const CircularArrangement&) const = default;

private:
    std::vector<int> window_;
};

/// A viewpoint change of the circle: rotate the window by `rotation`
/// positions (the label at position 1 moves to position 1+rotation), then,
/// if `flipped`, reverse the reading direction keeping position 1 fixed.
/// The 2n values (rotation in 0..n-1, flipped in {false,true}) enumerate
/// the dihedral group D_n.
struct DihedralElement {
    int rotation = 0;
    bool flipped = false;

    bool operator==(const DihedralElement&) const = default;
};

/// Generator indices in {1..n}, applied left to right; letter i swaps the
/// labels at circular positions i and i+1.
using SortingWord = std::vector<int>;

/// Parses "1,6,3,8,5,2,7,4". Throws std::invalid_argument on duplicate or
/// out-of-range labels, n < 3, non-numeric text, or a count mismatch with
/// expected_n.
CircularArrangement parse_window(const std::string& text,
                                 std::optional<int> expected_n = std::nullopt);

/// Swap of circular positions i and i+1 (i = n wraps to position 1).
CircularArrangement apply_generator(const CircularArrangement& a, int i);

CircularArrangement apply_word(const CircularArrangement& a, const SortingWord& w);

CircularArrangement apply_dihedral(const CircularArrangement& a, const DihedralElement& d);

/// Composition law: apply_dihedral(a, compose(d1, d2, n)) equals
/// apply_dihedral(apply_dihedral(a, d1), d2).
DihedralElement dihedral_compose(const DihedralElement& d1, const DihedralElement& d2, int n);

/// All 2n frames in scan order: rotations 0..n-1 unflipped, then flipped.
std::vector<DihedralElement> all_frames(int n);

/// The orbit of a under the dihedral group, deduplicated, in frame scan
/// order. Size divides 2n and equals 2n unless a has dihedral symmetry.
std::vector<CircularArrangement> dihedral_class(const CircularArrangement& a);

/// True iff a is a rotation or reflection of the identity arrangement,
/// i.e. already sorted on the circle.
bool is_sorted_circular(const CircularArrangement& a);

/// Best adjacent-transposition sorting cost when the circle is first cut to
/// a line: the minimum, over all 2n frames, of the inversion count of the
/// linearized window.
int cut_linear_length(const CircularArrangement& a);

} // namespace cyclinv
