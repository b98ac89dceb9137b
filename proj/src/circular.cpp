#include "cyclinv/circular.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cyclinv {

namespace {

int mod_n(int x, int n) {
    int r = x % n;
    return r < 0 ? r + n : r;
}

void validate_window(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    if (n < 3)
        throw std::invalid_argument("arrangement needs at least 3 regions, got " +
                                    std::to_string(n));
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int x : w) {
        if (x < 1 || x > n)
            throw std::invalid_argument("label " + std::to_string(x) +
                                        " out of range 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(x)])
            throw std::invalid_argument("duplicate label " + std::to_string(x));
        seen[static_cast<size_t>(x)] = 1;
    }
}

} // namespace

CircularArrangement::CircularArrangement(std::vector<int> window)
    : window_(std::move(window)) {
    validate_window(window_);
}

CircularArrangement CircularArrangement::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    return CircularArrangement(std::move(w));
}

int CircularArrangement::label_at(int p) const {
    return window_[static_cast<size_t>(mod_n(p - 1, size()))];
}

int CircularArrangement::position_of(int label) const {
    for (int p = 0; p < size(); ++p)
        if (window_[static_cast<size_t>(p)] == label) return p + 1;
    throw std::invalid_argument("label " + std::to_string(label) + " not present");
}

std::string CircularArrangement::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < window_.size(); ++i) {
        if (i) os << ',';
        os << window_[i];
    }
    return os.str();
}

CircularArrangement parse_window(const std::string& text, std::optional<int> expected_n) {
    std::vector<int> values;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        // strip surrounding whitespace
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("empty entry in window text");
        tok = tok.substr(b, e - b + 1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad integer '" + tok + "' in window text");
        values.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (expected_n && static_cast<int>(values.size()) != *expected_n)
        throw std::invalid_argument("expected " + std::to_string(*expected_n) +
                                    " labels, got " + std::to_string(values.size()));
    return CircularArrangement(std::move(values));
}

CircularArrangement apply_generator(const CircularArrangement& a, int i) {
    const int n = a.size();
    if (i < 1 || i > n)
        throw std::invalid_argument("generator index " + std::to_string(i) +
                                    " out of range 1.." + std::to_string(n));
    std::vector<int> w = a.window();
    std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i % n)]);
    return CircularArrangement(std::move(w));
}

CircularArrangement apply_word(const CircularArrangement& a, const SortingWord& word) {
    CircularArrangement out = a;
    for (int i : word) out = apply_generator(out, i);
    return out;
}

CircularArrangement apply_dihedral(const CircularArrangement& a, const DihedralElement& d) {
    const int n = a.size();
    const int k = mod_n(d.rotation, n);
    std::vector<int> w(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p)
        w[static_cast<size_t>(p)] = a.window()[static_cast<size_t>(mod_n(p - k, n))];
    if (d.flipped) {
        std::vector<int> f(static_cast<size_t>(n));
        for (int p = 0; p < n; ++p)
            f[static_cast<size_t>(p)] = w[static_cast<size_t>(mod_n(-p, n))];
        w = std::move(f);
    }
    return CircularArrangement(std::move(w));
}

DihedralElement dihedral_compose(const DihedralElement& d1, const DihedralElement& d2, int n) {
    const int s1 = d1.flipped ? -1 : 1;
    return DihedralElement{mod_n(d1.rotation + s1 * d2.rotation, n),
                           d1.flipped != d2.flipped};
}

std::vector<DihedralElement> all_frames(int n) {
    std::vector<DihedralElement> out;
    out.reserve(static_cast<size_t>(2 * n));
    for (int flip = 0; flip < 2; ++flip)
        for (int k = 0; k < n; ++k)
            out.push_back(DihedralElement{k, flip != 0});
    return out;
}

std::vector<CircularArrangement> dihedral_class(const CircularArrangement& a) {
    std::vector<CircularArrangement> orbit;
    for (const DihedralElement& d : all_frames(a.size())) {
        CircularArrangement b = apply_dihedral(a, d);
        if (std::find(orbit.begin(), orbit.end(), b) == orbit.end())
            orbit.push_back(std::move(b));
    }
    return orbit;
}

bool is_sorted_circular(const CircularArrangement& a) {
    const int n = a.size();
    bool ascending = true, descending = true;
    for (int p = 0; p < n; ++p) {
        const int step = mod_n(a.window()[static_cast<size_t>((p + 1) % n)] -
                                   a.window()[static_cast<size_t>(p)],
                               n);
        ascending = ascending && step == 1;
        descending = descending && step == n - 1;
    }
    return ascending || descending;
}

namespace {

int inversion_count(const std::vector<int>& w) {
    int count = 0;
    for (size_t p = 0; p < w.size(); ++p)
        for (size_t q = p + 1; q < w.size(); ++q)
            if (w[p] > w[q]) ++count;
    return count;
}

} // namespace

int cut_linear_length(const CircularArrangement& a) {
    int best = -1;
    for (const DihedralElement& d : all_frames(a.size())) {
        const int inv = inversion_count(apply_dihedral(a, d).window());
        if (best < 0 || inv < best) best = inv;
    }
    return best;
}

} // namespace cyclinv
