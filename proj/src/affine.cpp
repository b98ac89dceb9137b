#include "cyclinv/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace cyclinv {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

} // namespace

ExtendedAffinePermutation::ExtendedAffinePermutation(int n, std::vector<std::int64_t> images)
    : n_(n), images_(std::move(images)) {
    if (n_ < 3) throw std::invalid_argument("period must be >= 3");
    if (static_cast<int>(images_.size()) != n_)
        throw std::invalid_argument("expected " + std::to_string(n_) + " images, got " +
                                    std::to_string(images_.size()));
    std::unordered_set<std::int64_t> residues;
    for (std::int64_t v : images_)
        if (!residues.insert(mod_floor(v, n_)).second)
            throw std::invalid_argument("images are not a bijection of Z: residue " +
                                        std::to_string(mod_floor(v, n_)) + " repeats");
}

ExtendedAffinePermutation ExtendedAffinePermutation::identity(int n) {
    std::vector<std::int64_t> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    return ExtendedAffinePermutation(n, std::move(w));
}

std::int64_t ExtendedAffinePermutation::eval(std::int64_t i) const {
    const std::int64_t t = floor_div(i - 1, n_);
    return images_[static_cast<size_t>(i - 1 - t * n_)] + t * n_;
}

std::string ExtendedAffinePermutation::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < images_.size(); ++i) {
        if (i) os << ',';
        os << images_[i];
    }
    return os.str();
}

bool is_balanced(const ExtendedAffinePermutation& sigma) {
    return winding_number(sigma) == 0;
}

std::int64_t winding_number(const ExtendedAffinePermutation& sigma) {
    const std::int64_t n = sigma.period();
    std::int64_t sum = 0;
    for (std::int64_t v : sigma.images()) sum += v;
    return (sum - n * (n + 1) / 2) / n; // exact: residues mod n are a full system
}

std::int64_t crossing_number(const ExtendedAffinePermutation& sigma, const AscendingPair& p) {
    if (!(1 <= p.i && p.i < p.j && p.j <= sigma.period()))
        throw std::invalid_argument("pair must satisfy 1 <= i < j <= n");
    return floor_div(sigma.eval(p.j) - sigma.eval(p.i), sigma.period());
}

std::vector<AscendingPair> crossing_set(const ExtendedAffinePermutation& sigma, std::int64_t k) {
    std::vector<AscendingPair> out;
    const int n = sigma.period();
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (crossing_number(sigma, {i, j}) == k) out.push_back({i, j});
    return out;
}

std::int64_t shi_length(const ExtendedAffinePermutation& sigma) {
    const int n = sigma.period();
    std::int64_t total = 0;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            total += std::llabs(crossing_number(sigma, {i, j}));
    return total;
}

std::int64_t nett_crossing(const ExtendedAffinePermutation& sigma, int i) {
    const int n = sigma.period();
    if (i < 1 || i > n) throw std::invalid_argument("position out of range");
    // Signed crossings of strand i against every other strand.  For j > i this
    // is the plain crossing number; for j < i the diagram reads the same pair
    // from the other side, which flips the sign and shifts by the floor of the
    // position difference.  Both cases collapse to one expression.
    std::int64_t total = 0;
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        total += floor_div(sigma.eval(j) - sigma.eval(i), n) - floor_div(j - i, n);
    }
    return total;
}

ExtendedAffinePermutation shift_images(const ExtendedAffinePermutation& sigma,
                                       const std::vector<int>& s) {
    std::vector<std::int64_t> images = sigma.images();
    for (int i : s) {
        if (i < 1 || i > sigma.period())
            throw std::invalid_argument("shift position out of range");
        images[static_cast<size_t>(i - 1)] += sigma.period();
    }
    return ExtendedAffinePermutation(sigma.period(), std::move(images));
}

ExtendedAffinePermutation reduce_extremal_crossings(const ExtendedAffinePermutation& sigma) {
    ExtendedAffinePermutation current = sigma;

    auto max_abs_crossing = [](const ExtendedAffinePermutation& s) {
        std::int64_t alpha = 0;
        const int n = s.period();
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                alpha = std::max(alpha, std::llabs(crossing_number(s, {i, j})));
        return alpha;
    };

    const std::int64_t alpha0 = max_abs_crossing(current);
    // Each kill-max empties I_alpha and each kill-min then empties I_{-alpha},
    // so alpha drops at least once per two steps; anything past the guard is a bug.
    const std::int64_t guard = 4 * (alpha0 + 2);

    for (std::int64_t step = 0; step < guard; ++step) {
        const std::int64_t alpha = max_abs_crossing(current);
        if (alpha <= 1) return current;

        std::vector<int> s;
        const std::vector<AscendingPair> high = crossing_set(current, alpha);
        if (!high.empty()) {
            // kill-max: shift the left members of the extremal pairs
            for (const AscendingPair& p : high)
                if (std::find(s.begin(), s.end(), p.i) == s.end()) s.push_back(p.i);
        } else {
            // kill-min (requires I_alpha empty): shift the right members
            for (const AscendingPair& p : crossing_set(current, -alpha))
                if (std::find(s.begin(), s.end(), p.j) == s.end()) s.push_back(p.j);
        }
        current = shift_images(current, s);
    }
    throw std::logic_error("reduce_extremal_crossings: termination guard exceeded");
}

ExtendedAffinePermutation compose(const ExtendedAffinePermutation& a,
                                  const ExtendedAffinePermutation& b) {
    if (a.period() != b.period()) throw std::invalid_argument("period mismatch");
    const int n = a.period();
    std::vector<std::int64_t> images(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) images[static_cast<size_t>(i - 1)] = a.eval(b.eval(i));
    return ExtendedAffinePermutation(n, std::move(images));
}

ExtendedAffinePermutation invert(const ExtendedAffinePermutation& sigma) {
    const int n = sigma.period();
    std::vector<std::int64_t> images(static_cast<size_t>(n));
    for (int p = 1; p <= n; ++p) {
        const std::int64_t v = sigma.eval(p);
        // sigma(p) = v, so sigma^-1(v + kn) = p + kn; land v + kn in 1..n.
        const std::int64_t k = floor_div(v - 1, n);
        images[static_cast<size_t>(v - 1 - k * n)] = p - k * n;
    }
    return ExtendedAffinePermutation(n, std::move(images));
}

ExtendedAffinePermutation right_multiply_generator(const ExtendedAffinePermutation& sigma, int i) {
    const int n = sigma.period();
    if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
    std::vector<std::int64_t> images = sigma.images();
    if (i < n) {
        std::swap(images[static_cast<size_t>(i - 1)], images[static_cast<size_t>(i)]);
    } else {
        // swap positions n and n+1: window entries trade places across the seam
        const std::int64_t first = images[0];
        images[0] = images[static_cast<size_t>(n - 1)] - n;
        images[static_cast<size_t>(n - 1)] = first + n;
    }
    return ExtendedAffinePermutation(n, std::move(images));
}

} // namespace cyclinv
