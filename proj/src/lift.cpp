#include "cyclinv/lift.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>

namespace cyclinv {

namespace {

int mod_n(int x, int n) {
    int r = x % n;
    return r < 0 ? r + n : r;
}

// A generator letter acting on the reframed window corresponds to a different
// letter on the original arrangement; frames are position relabelings.
int conjugate_letter(int i, const DihedralElement& frame, int n) {
    int j = frame.flipped ? mod_n(1 - frame.rotation - i, n) : mod_n(i - frame.rotation, n);
    return j == 0 ? n : j;
}

} // namespace

std::int64_t minimize_path(int n, int i, std::int64_t image) {
    const std::int64_t here = std::llabs(i - image);
    if (std::llabs(i - (image + n)) < here) return image + n;
    if (std::llabs(i - (image - n)) < here) return image - n;
    return image;
}

ExtendedAffinePermutation minimal_lift(const CircularArrangement& a) {
    const int n = a.size();
    std::vector<std::int64_t> images(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        images[static_cast<size_t>(i - 1)] =
            minimize_path(n, i, a.window()[static_cast<size_t>(i - 1)]);
    return ExtendedAffinePermutation(n, std::move(images));
}

LiftResult circular_length_witness(const CircularArrangement& a) {
    std::optional<LiftResult> best;
    for (const DihedralElement& frame : all_frames(a.size())) {
        ExtendedAffinePermutation lifted = minimal_lift(apply_dihedral(a, frame));
        const std::int64_t length = shi_length(lifted);
        if (!best || length < best->length)
            best = LiftResult{frame, std::move(lifted), length};
    }
    return *best;
}

std::int64_t circular_length(const CircularArrangement& a) {
    return circular_length_witness(a).length;
}

std::int64_t pair_distance(const CircularArrangement& a, const CircularArrangement& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
    const int n = a.size();
    // relative element a^-1 b: where genome a keeps the label that b puts at p
    std::vector<int> rel(static_cast<size_t>(n));
    for (int p = 1; p <= n; ++p)
        rel[static_cast<size_t>(p - 1)] = a.position_of(b.label_at(p));
    return circular_length(CircularArrangement(std::move(rel)));
}

SortingWord sort_by_uncrossings(const CircularArrangement& a) {
    const int n = a.size();
    const LiftResult witness = circular_length_witness(a);
    std::vector<std::int64_t> m = witness.lifted.images();

    auto displacement = [&](int i) { return m[static_cast<size_t>(i - 1)] - i; };

    SortingWord word;
    const size_t cap = static_cast<size_t>(n) * static_cast<size_t>(n - 1);
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (int i = 1; i <= n; ++i) {
            const int j = i % n + 1; // circular successor
            if (displacement(i) <= displacement(j)) continue;
            if (i < n) {
                std::swap(m[static_cast<size_t>(i - 1)], m[static_cast<size_t>(j - 1)]);
            } else {
                // the seam swap trades the window ends across the period
                const std::int64_t first = m[0];
                m[0] = m[static_cast<size_t>(n - 1)] - n;
                m[static_cast<size_t>(n - 1)] = first + n;
            }
            m[static_cast<size_t>(i - 1)] = minimize_path(n, i, m[static_cast<size_t>(i - 1)]);
            m[static_cast<size_t>(j - 1)] = minimize_path(n, j, m[static_cast<size_t>(j - 1)]);
            word.push_back(conjugate_letter(i, witness.frame, n));
            if (word.size() > cap)
                throw std::logic_error("sort_by_uncrossings: iteration guard exceeded");
            swapped = true;
            break; // restart the scan from position 1
        }
    }
    return word;
}

std::vector<SortingWord> enumerate_geodesics(const CircularArrangement& a, int limit) {
    if (limit < 1) throw std::invalid_argument("limit must be >= 1");
    std::vector<SortingWord> out;
    SortingWord current;

    std::function<void(const CircularArrangement&, std::int64_t)> descend =
        [&](const CircularArrangement& b, std::int64_t remaining) {
            if (static_cast<int>(out.size()) >= limit) return;
            if (remaining == 0) {
                out.push_back(current);
                return;
            }
            for (int i = 1; i <= b.size(); ++i) {
                CircularArrangement next = apply_generator(b, i);
                if (circular_length(next) != remaining - 1) continue;
                current.push_back(i);
                descend(next, remaining - 1);
                current.pop_back();
                if (static_cast<int>(out.size()) >= limit) return;
            }
        };

    descend(a, circular_length(a));
    return out;
}

} // namespace cyclinv
