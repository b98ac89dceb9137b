#include "cyclinv/oracle.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

#include "cyclinv/lift.hpp"

namespace cyclinv {

namespace {

constexpr int kBfsMaxN = 9;
constexpr int kTableMaxN = 8;

std::uint64_t encode(const std::vector<int>& w, int n) {
    std::uint64_t key = 0;
    for (int x : w) key = key * static_cast<std::uint64_t>(n + 1) + static_cast<std::uint64_t>(x);
    return key;
}

std::vector<int> decode(std::uint64_t key, int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int p = n - 1; p >= 0; --p) {
        w[static_cast<size_t>(p)] = static_cast<int>(key % static_cast<std::uint64_t>(n + 1));
        key /= static_cast<std::uint64_t>(n + 1);
    }
    return w;
}

// apply_generator on the raw window, in place
void swap_adjacent(std::vector<int>& w, int i, int n) {
    std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i % n)]);
}

std::vector<std::uint64_t> identity_class_keys(int n) {
    std::vector<std::uint64_t> keys;
    for (const CircularArrangement& b : dihedral_class(CircularArrangement::identity(n)))
        keys.push_back(encode(b.window(), n));
    return keys;
}

} // namespace

std::uint64_t encode_window(const CircularArrangement& a) {
    if (a.size() > kBfsMaxN) throw std::invalid_argument("window too large to encode");
    return encode(a.window(), a.size());
}

int DistanceTable::distance(const CircularArrangement& a) const {
    if (a.size() != n) throw std::invalid_argument("table size mismatch");
    return entries.at(encode_window(a));
}

std::map<int, std::int64_t> DistanceTable::histogram() const {
    std::map<int, std::int64_t> h;
    for (const auto& [key, d] : entries) ++h[d];
    return h;
}

int bfs_distance(const CircularArrangement& a) {
    const int n = a.size();
    if (n > kBfsMaxN) throw std::invalid_argument("bfs_distance supports n <= 9");

    std::vector<std::uint64_t> targets = identity_class_keys(n);
    auto is_target = [&](std::uint64_t key) {
        return std::find(targets.begin(), targets.end(), key) != targets.end();
    };

    const std::uint64_t start = encode(a.window(), n);
    if (is_target(start)) return 0;

    std::unordered_map<std::uint64_t, int> dist;
    dist[start] = 0;
    std::deque<std::uint64_t> frontier{start};
    while (!frontier.empty()) {
        const std::uint64_t key = frontier.front();
        frontier.pop_front();
        const int d = dist[key];
        std::vector<int> w = decode(key, n);
        for (int i = 1; i <= n; ++i) {
            swap_adjacent(w, i, n);
            const std::uint64_t next = encode(w, n);
            swap_adjacent(w, i, n); // undo
            if (dist.count(next)) continue;
            if (is_target(next)) return d + 1;
            dist[next] = d + 1;
            frontier.push_back(next);
        }
    }
    throw std::logic_error("bfs_distance: identity class unreachable"); // cannot happen
}

DistanceTable exhaustive_table(int n) {
    if (n < 3 || n > kTableMaxN) throw std::invalid_argument("exhaustive_table supports 3 <= n <= 8");

    DistanceTable table;
    table.n = n;
    std::deque<std::uint64_t> frontier;
    for (std::uint64_t key : identity_class_keys(n)) {
        if (table.entries.emplace(key, 0).second) frontier.push_back(key);
    }
    while (!frontier.empty()) {
        const std::uint64_t key = frontier.front();
        frontier.pop_front();
        const int d = table.entries[key];
        std::vector<int> w = decode(key, n);
        for (int i = 1; i <= n; ++i) {
            swap_adjacent(w, i, n);
            const std::uint64_t next = encode(w, n);
            swap_adjacent(w, i, n);
            if (table.entries.emplace(next, d + 1).second) frontier.push_back(next);
        }
    }
    return table;
}

EquivalenceReport check_equivalence(int n, std::optional<int> sample_size) {
    if (n < 3 || n > kBfsMaxN)
        throw std::invalid_argument("check_equivalence supports 3 <= n <= 9");
    if (n > kTableMaxN && !sample_size)
        throw std::invalid_argument("n = 9 requires a sample size");

    EquivalenceReport report;
    report.n = n;

    auto record = [&](const CircularArrangement& a, int oracle) {
        ++report.checked;
        ++report.histogram[oracle];
        const std::int64_t algo = circular_length(a);
        if (algo != oracle)
            report.mismatches.push_back(a.to_string() + ": algo=" + std::to_string(algo) +
                                        " oracle=" + std::to_string(oracle));
    };

    if (!sample_size) {
        const DistanceTable table = exhaustive_table(n);
        std::vector<int> w(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
        do {
            CircularArrangement a(w);
            record(a, table.distance(a));
        } while (std::next_permutation(w.begin(), w.end()));
    } else {
        std::mt19937 rng(2718281);
        std::vector<int> w(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
        for (int trial = 0; trial < *sample_size; ++trial) {
            std::shuffle(w.begin(), w.end(), rng);
            CircularArrangement a(w);
            record(a, bfs_distance(a));
        }
    }
    return report;
}

} // namespace cyclinv
