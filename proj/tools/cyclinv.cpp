// cyclinv: circular two-region inversion distances, geodesic sorting words,
// distance matrices, and neighbor-joining trees.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cyclinv/genome_file.hpp"
#include "cyclinv/lift.hpp"
#include "cyclinv/oracle.hpp"
#include "cyclinv/phylo.hpp"

namespace {

using namespace cyclinv;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << content;
}

std::string word_to_line(const SortingWord& word) {
    std::ostringstream os;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) os << ' ';
        os << word[i];
    }
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_dist(const std::string& perm, const std::string& a_text, const std::string& b_text,
             bool witness) {
    if (perm.empty() == (a_text.empty() && b_text.empty()))
        throw std::invalid_argument("give either --perm or both --a and --b");

    std::optional<CircularArrangement> target;
    if (!perm.empty()) {
        target = parse_window(perm);
    } else {
        if (a_text.empty() || b_text.empty())
            throw std::invalid_argument("--a and --b must be given together");
        const CircularArrangement a = parse_window(a_text);
        const CircularArrangement b = parse_window(b_text);
        if (a.size() != b.size()) throw std::invalid_argument("--a and --b sizes differ");
        // relative arrangement; its circular length is the pair distance
        std::vector<int> rel(static_cast<size_t>(a.size()));
        for (int p = 1; p <= a.size(); ++p)
            rel[static_cast<size_t>(p - 1)] = a.position_of(b.label_at(p));
        target = CircularArrangement(std::move(rel));
    }

    const LiftResult result = circular_length_witness(*target);
    std::cout << result.length << '\n';
    if (witness) {
        std::cout << "frame rotation=" << result.frame.rotation
                  << " flipped=" << (result.frame.flipped ? 1 : 0) << '\n'
                  << "lift " << result.lifted.to_string() << '\n';
    }
    return 0;
}

int run_sort(const std::string& perm, bool all, int limit) {
    const CircularArrangement a = parse_window(perm);
    const std::int64_t distance = circular_length(a);

    std::vector<SortingWord> words;
    if (all)
        words = enumerate_geodesics(a, limit);
    else
        words.push_back(sort_by_uncrossings(a));

    for (const SortingWord& word : words) {
        if (static_cast<std::int64_t>(word.size()) != distance ||
            !is_sorted_circular(apply_word(a, word))) {
            std::cerr << "internal error: produced word '" << word_to_line(word)
                      << "' is not a geodesic of " << a.to_string() << '\n';
            return 2;
        }
        std::cout << word_to_line(word) << '\n';
    }
    return 0;
}

int run_matrix(const std::string& genomes_path, const std::string& out_path) {
    const GenomeList genomes = read_genome_file_path(genomes_path);
    write_output(out_path, write_phylip(build_matrix(genomes)));
    return 0;
}

int run_nj(const std::string& matrix_path, const std::string& fixture,
           const std::string& out_path) {
    if (matrix_path.empty() == fixture.empty())
        throw std::invalid_argument("give either a matrix file or --fixture");

    DistanceMatrix m = [&] {
        if (!fixture.empty()) {
            if (fixture != "yersinia")
                throw std::invalid_argument("unknown fixture '" + fixture + "'");
            return yersinia_fixture();
        }
        return read_phylip(read_text_file(matrix_path));
    }();

    const PhyloTree tree = neighbor_joining(m);
    if (tree.clamped_branches > 0)
        std::cerr << "warning: " << tree.clamped_branches
                  << " negative branch length(s) clamped to zero\n";
    write_output(out_path, write_newick(tree) + "\n");
    return 0;
}

int run_oracle(int n, std::optional<int> samples) {
    if (n < 3 || n > 9) throw std::invalid_argument("oracle supports 3 <= n <= 9");
    if (n == 9 && !samples) throw std::invalid_argument("n = 9 requires --samples");
    if (samples && *samples < 1) throw std::invalid_argument("--samples must be >= 1");

    const EquivalenceReport report = check_equivalence(n, samples);
    std::cout << "mismatches: " << report.mismatches.size() << '\n';
    for (const auto& [d, count] : report.histogram) std::cout << d << ' ' << count << '\n';
    for (const std::string& line : report.mismatches) std::cerr << "mismatch " << line << '\n';
    return report.mismatches.empty() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circular two-region inversion distances and phylogenies"};
    app.require_subcommand(1);
    int exit_code = 0;

    // dist
    std::string dist_perm, dist_a, dist_b;
    bool dist_witness = false;
    CLI::App* dist = app.add_subcommand("dist", "Inversion length of one arrangement or a pair");
    dist->add_option("--perm", dist_perm, "window, e.g. 1,6,3,8,5,2,7,4");
    dist->add_option("--a", dist_a, "first window");
    dist->add_option("--b", dist_b, "second window");
    dist->add_flag("--witness", dist_witness, "also print the argmin frame and lift");
    dist->callback([&] { exit_code = run_dist(dist_perm, dist_a, dist_b, dist_witness); });

    // sort
    std::string sort_perm;
    bool sort_all = false;
    int sort_limit = 10;
    CLI::App* sort_cmd = app.add_subcommand("sort", "Geodesic sorting word(s)");
    sort_cmd->add_option("--perm", sort_perm, "window to sort")->required();
    sort_cmd->add_flag("--all", sort_all, "enumerate geodesics lexicographically");
    sort_cmd->add_option("--limit", sort_limit, "max geodesics with --all (default 10)");
    sort_cmd->callback([&] { exit_code = run_sort(sort_perm, sort_all, sort_limit); });

    // matrix
    std::string matrix_file, matrix_out;
    CLI::App* matrix = app.add_subcommand("matrix", "Pairwise distance matrix from a genome file");
    matrix->add_option("file", matrix_file, "genome list: NAME<TAB>p1,p2,...")->required();
    matrix->add_option("--out", matrix_out, "output path (default stdout)");
    matrix->callback([&] { exit_code = run_matrix(matrix_file, matrix_out); });

    // nj
    std::string nj_file, nj_fixture, nj_out;
    CLI::App* nj = app.add_subcommand("nj", "Neighbor-joining tree from a distance matrix");
    nj->add_option("file", nj_file, "square matrix file");
    nj->add_option("--fixture", nj_fixture, "embedded matrix name (yersinia)");
    nj->add_option("--out", nj_out, "output path (default stdout)");
    nj->callback([&] { exit_code = run_nj(nj_file, nj_fixture, nj_out); });

    // oracle
    int oracle_n = 0;
    std::optional<int> oracle_samples;
    CLI::App* oracle = app.add_subcommand("oracle", "Check the algorithm against BFS ground truth");
    oracle->add_option("--n", oracle_n, "region count (3..9)")->required();
    oracle->add_option("--samples", oracle_samples, "random sample count (required for n=9)");
    oracle->callback([&] { exit_code = run_oracle(oracle_n, oracle_samples); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
