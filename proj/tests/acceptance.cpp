// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit 0 iff all pass.
// Seeds and tolerances are fixed here so every run checks the same instances.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cyclinv/lift.hpp"
#include "cyclinv/oracle.hpp"
#include "cyclinv/phylo.hpp"

using namespace cyclinv;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s%s%s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    if (!pass) ++failures;
}

void guarded(int index, const std::string& name,
             const std::function<std::pair<bool, std::string>()>& body) {
    try {
        const auto [pass, detail] = body();
        report(index, name, pass, detail);
    } catch (const std::exception& e) {
        report(index, name, false, std::string("exception: ") + e.what());
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CircularArrangement random_arrangement(int n, std::mt19937& rng) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    return CircularArrangement(w);
}

ExtendedAffinePermutation random_affine(int n, std::mt19937& rng, int max_offset) {
    std::vector<std::int64_t> images(static_cast<size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    std::uniform_int_distribution<int> offset(-max_offset, max_offset);
    for (auto& v : images) v += static_cast<std::int64_t>(n) * offset(rng);
    return ExtendedAffinePermutation(n, std::move(images));
}

const char* kFig1 = "1,6,3,8,5,2,7,4";

std::pair<bool, std::string> criterion1() {
    const auto start = std::chrono::steady_clock::now();
    const std::int64_t length = circular_length(parse_window(kFig1));
    const double elapsed = seconds_since(start);
    char detail[128];
    std::snprintf(detail, sizeof detail, "length=%lld in %.4fs (limit 1s)",
                  static_cast<long long>(length), elapsed);
    return {length == 8 && elapsed < 1.0, detail};
}

std::pair<bool, std::string> criterion2() {
    const int length = cut_linear_length(parse_window(kFig1));
    return {length == 9, "cut-linear length=" + std::to_string(length)};
}

std::pair<bool, std::string> criterion3() {
    const CircularArrangement a = parse_window("8,2,3,4,5,6,7,1");
    const std::int64_t circ = circular_length(a);
    const int linear = cut_linear_length(a);
    return {circ == 1 && linear > 1,
            "circular=" + std::to_string(circ) + " cut-linear=" + std::to_string(linear)};
}

std::pair<bool, std::string> criterion4() {
    const auto start = std::chrono::steady_clock::now();
    std::int64_t mismatches = 0, checked = 0;
    for (int n : {5, 6}) {
        const EquivalenceReport r = check_equivalence(n);
        mismatches += static_cast<std::int64_t>(r.mismatches.size());
        checked += r.checked;
    }
    const EquivalenceReport r7 = check_equivalence(7, 1000);
    mismatches += static_cast<std::int64_t>(r7.mismatches.size());
    checked += r7.checked;
    const double elapsed = seconds_since(start);
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "%lld windows checked, %lld mismatches, %.2fs (limit 60s)",
                  static_cast<long long>(checked), static_cast<long long>(mismatches),
                  elapsed);
    return {mismatches == 0 && checked == 120 + 720 + 1000 && elapsed < 60.0, detail};
}

std::pair<bool, std::string> criterion5() {
    std::mt19937 rng(98765);
    std::uniform_int_distribution<int> pick_n(5, 10);
    int bad = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const CircularArrangement a = random_arrangement(pick_n(rng), rng);
        const SortingWord word = sort_by_uncrossings(a);
        if (static_cast<std::int64_t>(word.size()) != circular_length(a) ||
            !is_sorted_circular(apply_word(a, word)))
            ++bad;
    }
    return {bad == 0, "500 random sorts, " + std::to_string(bad) + " failures"};
}

std::pair<bool, std::string> criterion6() {
    auto witness_ok = [](const CircularArrangement& a) {
        const LiftResult w = circular_length_witness(a);
        const int n = a.size();
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (std::llabs(crossing_number(w.lifted, {i, j})) > 1) return false;
        const auto [lo, hi] =
            std::minmax_element(w.lifted.images().begin(), w.lifted.images().end());
        return *hi - *lo < 2 * n;
    };

    std::int64_t checked = 0;
    int violations = 0;
    for (int n = 3; n <= 6; ++n) { // exhaustive over S_n
        std::vector<int> w(static_cast<size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        do {
            ++checked;
            if (!witness_ok(CircularArrangement(w))) ++violations;
        } while (std::next_permutation(w.begin(), w.end()));
    }

    std::mt19937 rng(55555);
    std::uniform_int_distribution<int> pick_n(3, 12);
    for (int trial = 0; trial < 500; ++trial) {
        ++checked;
        if (!witness_ok(random_arrangement(pick_n(rng), rng))) ++violations;
    }
    return {violations == 0, std::to_string(checked) + " lifts checked, " +
                                 std::to_string(violations) + " violations"};
}

std::pair<bool, std::string> criterion7() {
    std::mt19937 rng(77777);
    int asym = 0, triangle = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const CircularArrangement a = random_arrangement(8, rng);
        const CircularArrangement b = random_arrangement(8, rng);
        if (pair_distance(a, b) != pair_distance(b, a)) ++asym;
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const CircularArrangement a = random_arrangement(8, rng);
        const CircularArrangement b = random_arrangement(8, rng);
        const CircularArrangement c = random_arrangement(8, rng);
        if (pair_distance(a, b) > pair_distance(a, c) + pair_distance(c, b)) ++triangle;
    }
    return {asym == 0 && triangle == 0, "asymmetry violations=" + std::to_string(asym) +
                                            " triangle violations=" +
                                            std::to_string(triangle)};
}

std::pair<bool, std::string> criterion8() {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick_n(3, 10);
    std::uniform_int_distribution<int> coin(0, 1);

    int rewrite = 0, transitivity = 0, shift = 0, nett = 0, reduce_range = 0,
        reduce_monotone = 0;

    for (int trial = 0; trial < 1000; ++trial) {
        const int n = pick_n(rng);
        const ExtendedAffinePermutation s = random_affine(n, rng, 3);

        // length formula vs the crossing-set rewrite
        std::int64_t by_sets = 0;
        for (int k = 1; k <= 5 * n; ++k)
            by_sets += k * static_cast<std::int64_t>(crossing_set(s, k).size() +
                                                     crossing_set(s, -k).size());
        if (shi_length(s) != by_sets) ++rewrite;

        // transitivity constraints on all triples
        for (int i = 1; i <= n - 2 && transitivity == 0; ++i)
            for (int j = i + 1; j <= n - 1; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    const std::int64_t r = crossing_number(s, {i, j});
                    const std::int64_t t = crossing_number(s, {j, k});
                    const std::int64_t u = crossing_number(s, {i, k});
                    if (!(u == r + t || u == r + t + 1) || !(t == u - r - 1 || t == u - r) ||
                        !(r == u - t - 1 || r == u - t)) {
                        ++transitivity;
                        break;
                    }
                }

        // image-shift crossing deltas, one random subset per draw
        std::vector<int> subset;
        for (int i = 1; i <= n; ++i)
            if (coin(rng)) subset.push_back(i);
        const ExtendedAffinePermutation shifted = shift_images(s, subset);
        auto in_subset = [&](int x) {
            return std::find(subset.begin(), subset.end(), x) != subset.end();
        };
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const std::int64_t delta =
                    crossing_number(shifted, {i, j}) - crossing_number(s, {i, j});
                const std::int64_t expected =
                    !in_subset(i) && in_subset(j) ? 1 : in_subset(i) && !in_subset(j) ? -1 : 0;
                if (delta != expected) {
                    ++shift;
                    break;
                }
            }

        // nett crossing closed form
        const std::int64_t winding = winding_number(s);
        for (int i = 1; i <= n; ++i)
            if (nett_crossing(s, i) != i - s.eval(i) + winding) {
                ++nett;
                break;
            }

        // extremal reduction: all small crossings, and never longer
        const ExtendedAffinePermutation reduced = reduce_extremal_crossings(s);
        bool in_range = true;
        for (int i = 1; i < n && in_range; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (std::llabs(crossing_number(reduced, {i, j})) > 1) {
                    in_range = false;
                    break;
                }
        if (!in_range) ++reduce_range;
        if (shi_length(reduced) > shi_length(s)) ++reduce_monotone;
    }

    char detail[256];
    std::snprintf(detail, sizeof detail,
                  "1000 draws: rewrite=%d transitivity=%d shift=%d nett=%d "
                  "reduce_range=%d reduce_monotone=%d",
                  rewrite, transitivity, shift, nett, reduce_range, reduce_monotone);
    const bool pass = rewrite == 0 && transitivity == 0 && shift == 0 && nett == 0 &&
                      reduce_range == 0 && reduce_monotone == 0;
    return {pass, detail};
}

std::pair<bool, std::string> criterion9() {
    const PhyloTree yersinia = neighbor_joining(yersinia_fixture());
    const bool cherry = has_cherry(yersinia, "Yp_IP31758", "Yp_IP32953");

    // additive matrices generated from known trees must come back exactly
    DistanceMatrix four;
    four.labels = {"A", "B", "C", "D"};
    four.values = {{0, 5, 6, 9}, {5, 0, 9, 12}, {6, 9, 0, 9}, {9, 12, 9, 0}};
    const bool four_ok = write_newick(neighbor_joining(four)) == "(C:3,D:6,(A:1,B:4):2);";

    // distances generated from ((A:2,B:3):2,(C:1,D:4):3,E:5)
    DistanceMatrix five;
    five.labels = {"A", "B", "C", "D", "E"};
    five.values = {{0, 5, 8, 11, 9},
                   {5, 0, 9, 12, 10},
                   {8, 9, 0, 5, 9},
                   {11, 12, 5, 0, 12},
                   {9, 10, 9, 12, 0}};
    const bool five_ok =
        write_newick(neighbor_joining(five)) == "(E:5,(C:1,D:4):3,(A:2,B:3):2);";

    std::string detail = std::string("cherry=") + (cherry ? "yes" : "no") +
                         " additive4=" + (four_ok ? "exact" : "WRONG") +
                         " additive5=" + (five_ok ? "exact" : "WRONG");
    return {cherry && four_ok && five_ok, detail};
}

} // namespace

int main() {
    guarded(1, "motivating arrangement has circular length 8", criterion1);
    guarded(2, "cutting-linearizing the same arrangement costs 9", criterion2);
    guarded(3, "boundary swap: circular 1, cut-linear > 1", criterion3);
    guarded(4, "algorithm matches BFS oracle (S5, S6, 1000 x n=7)", criterion4);
    guarded(5, "sorting words are geodesics (500 random, n 5..10)", criterion5);
    guarded(6, "argmin lifts: crossings in {-1,0,1}, spread < 2n", criterion6);
    guarded(7, "pairwise distance is symmetric and triangular (n=8)", criterion7);
    guarded(8, "affine lemma suite (1000 draws, n <= 10)", criterion8);
    guarded(9, "neighbor joining: Yersinia cherry, additive recovery", criterion9);

    if (failures == 0)
        std::printf("all 9 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
