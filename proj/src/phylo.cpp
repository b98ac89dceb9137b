#include "cyclinv/phylo.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "cyclinv/lift.hpp"

namespace cyclinv {

namespace {

constexpr double kSymmetryTol = 1e-9;

std::string format_branch(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string format_distance(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

} // namespace

void DistanceMatrix::validate() const {
    const int r = size();
    if (r < 3) throw std::invalid_argument("need at least 3 taxa");
    std::unordered_set<std::string> seen;
    for (const std::string& name : labels) {
        if (name.empty()) throw std::invalid_argument("empty taxon name");
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate taxon name '" + name + "'");
    }
    if (static_cast<int>(values.size()) != r)
        throw std::invalid_argument("matrix row count does not match label count");
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(values[static_cast<size_t>(i)].size()) != r)
            throw std::invalid_argument("matrix is not square");
        if (std::abs(values[static_cast<size_t>(i)][static_cast<size_t>(i)]) > kSymmetryTol)
            throw std::invalid_argument("nonzero diagonal at " + labels[static_cast<size_t>(i)]);
        for (int j = 0; j < r; ++j) {
            const double d = values[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (d < 0) throw std::invalid_argument("negative distance");
            if (std::abs(d - values[static_cast<size_t>(j)][static_cast<size_t>(i)]) > kSymmetryTol)
                throw std::invalid_argument("asymmetric matrix at (" +
                                            labels[static_cast<size_t>(i)] + ", " +
                                            labels[static_cast<size_t>(j)] + ")");
        }
    }
}

DistanceMatrix build_matrix(const std::vector<std::pair<std::string, CircularArrangement>>& genomes) {
    const int r = static_cast<int>(genomes.size());
    if (r < 3) throw std::invalid_argument("need at least 3 genomes");
    for (const auto& [name, a] : genomes)
        if (a.size() != genomes.front().second.size())
            throw std::invalid_argument("genome '" + name + "' has a different region count");

    DistanceMatrix m;
    for (const auto& [name, a] : genomes) m.labels.push_back(name);
    m.values.assign(static_cast<size_t>(r), std::vector<double>(static_cast<size_t>(r), 0.0));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            const double d = static_cast<double>(
                pair_distance(genomes[static_cast<size_t>(i)].second,
                              genomes[static_cast<size_t>(j)].second));
            m.values[static_cast<size_t>(i)][static_cast<size_t>(j)] = d;
            m.values[static_cast<size_t>(j)][static_cast<size_t>(i)] = d;
        }
    m.validate();
    return m;
}

PhyloTree neighbor_joining(const DistanceMatrix& m) {
    m.validate();
    const int r0 = m.size();

    PhyloTree tree;
    for (const std::string& name : m.labels) tree.nodes.push_back({name, {}});

    // distances indexed by node id; new internal nodes are appended
    const size_t max_nodes = static_cast<size_t>(2 * r0);
    std::vector<std::vector<double>> d(max_nodes, std::vector<double>(max_nodes, 0.0));
    for (int i = 0; i < r0; ++i)
        for (int j = 0; j < r0; ++j)
            d[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                m.values[static_cast<size_t>(i)][static_cast<size_t>(j)];

    std::vector<int> active(static_cast<size_t>(r0));
    for (int i = 0; i < r0; ++i) active[static_cast<size_t>(i)] = i;

    auto clamp = [&tree](double b) {
        if (b < 0) {
            ++tree.clamped_branches;
            return 0.0;
        }
        return b;
    };

    while (active.size() > 3) {
        const int r = static_cast<int>(active.size());
        std::vector<double> row_sum(active.size(), 0.0);
        for (size_t ai = 0; ai < active.size(); ++ai)
            for (size_t aj = 0; aj < active.size(); ++aj)
                row_sum[ai] += d[static_cast<size_t>(active[ai])][static_cast<size_t>(active[aj])];

        double best_q = std::numeric_limits<double>::infinity();
        size_t bi = 0, bj = 1;
        for (size_t ai = 0; ai + 1 < active.size(); ++ai)
            for (size_t aj = ai + 1; aj < active.size(); ++aj) {
                const double q =
                    (r - 2) * d[static_cast<size_t>(active[ai])][static_cast<size_t>(active[aj])] -
                    row_sum[ai] - row_sum[aj];
                if (q < best_q) { // strict: lowest (row, column) pair wins ties
                    best_q = q;
                    bi = ai;
                    bj = aj;
                }
            }

        const int x = active[bi], y = active[bj];
        const double dxy = d[static_cast<size_t>(x)][static_cast<size_t>(y)];
        const double bx = clamp(0.5 * dxy + (row_sum[bi] - row_sum[bj]) / (2.0 * (r - 2)));
        const double by = clamp(dxy - (0.5 * dxy + (row_sum[bi] - row_sum[bj]) / (2.0 * (r - 2))));

        const int u = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({"", {{x, bx}, {y, by}}});
        for (int z : active) {
            if (z == x || z == y) continue;
            const double duz = 0.5 * (d[static_cast<size_t>(x)][static_cast<size_t>(z)] +
                                      d[static_cast<size_t>(y)][static_cast<size_t>(z)] - dxy);
            d[static_cast<size_t>(u)][static_cast<size_t>(z)] = duz;
            d[static_cast<size_t>(z)][static_cast<size_t>(u)] = duz;
        }

        std::vector<int> next;
        for (int z : active)
            if (z != x && z != y) next.push_back(z);
        next.push_back(u);
        active = std::move(next);
    }

    const int x = active[0], y = active[1], z = active[2];
    const double dxy = d[static_cast<size_t>(x)][static_cast<size_t>(y)];
    const double dxz = d[static_cast<size_t>(x)][static_cast<size_t>(z)];
    const double dyz = d[static_cast<size_t>(y)][static_cast<size_t>(z)];
    const double bx = clamp(0.5 * (dxy + dxz - dyz));
    const double by = clamp(0.5 * (dxy + dyz - dxz));
    const double bz = clamp(0.5 * (dxz + dyz - dxy));

    tree.root = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({"", {{x, bx}, {y, by}, {z, bz}}});
    return tree;
}

std::string write_newick(const PhyloTree& t) {
    if (t.root < 0) throw std::invalid_argument("tree has no root");
    std::function<std::string(int)> render = [&](int id) -> std::string {
        const PhyloTree::Node& node = t.nodes[static_cast<size_t>(id)];
        if (node.children.empty()) return node.label;
        std::string s = "(";
        for (size_t c = 0; c < node.children.size(); ++c) {
            if (c) s += ',';
            s += render(node.children[c].first);
            s += ':';
            s += format_branch(node.children[c].second);
        }
        s += ')';
        return s;
    };
    return render(t.root) + ";";
}

DistanceMatrix read_phylip(const std::string& text) {
    std::istringstream in(text);
    int r = 0;
    if (!(in >> r) || r < 3)
        throw std::invalid_argument("bad taxon count in matrix text");

    DistanceMatrix m;
    m.values.assign(static_cast<size_t>(r), std::vector<double>(static_cast<size_t>(r), 0.0));
    for (int i = 0; i < r; ++i) {
        std::string name;
        if (!(in >> name)) throw std::invalid_argument("truncated matrix: missing taxon name");
        m.labels.push_back(name);
        for (int j = 0; j < r; ++j)
            if (!(in >> m.values[static_cast<size_t>(i)][static_cast<size_t>(j)]))
                throw std::invalid_argument("truncated matrix row for '" + name + "'");
    }
    std::string extra;
    if (in >> extra) throw std::invalid_argument("trailing content after matrix rows");
    m.validate();
    return m;
}

std::string write_phylip(const DistanceMatrix& m) {
    m.validate();
    std::ostringstream os;
    os << m.size() << '\n';
    for (int i = 0; i < m.size(); ++i) {
        os << m.labels[static_cast<size_t>(i)];
        for (int j = 0; j < m.size(); ++j)
            os << ' ' << format_distance(m.values[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        os << '\n';
    }
    return os.str();
}

bool has_cherry(const PhyloTree& t, const std::string& first, const std::string& second) {
    std::vector<int> parent(t.nodes.size(), -1);
    for (size_t id = 0; id < t.nodes.size(); ++id)
        for (const auto& [child, len] : t.nodes[id].children)
            parent[static_cast<size_t>(child)] = static_cast<int>(id);

    int a = -1, b = -1;
    for (size_t id = 0; id < t.nodes.size(); ++id) {
        if (!t.is_leaf(static_cast<int>(id))) continue;
        if (t.nodes[id].label == first) a = static_cast<int>(id);
        if (t.nodes[id].label == second) b = static_cast<int>(id);
    }
    if (a < 0 || b < 0) return false;
    return parent[static_cast<size_t>(a)] >= 0 &&
           parent[static_cast<size_t>(a)] == parent[static_cast<size_t>(b)];
}

DistanceMatrix yersinia_fixture() {
    DistanceMatrix m;
    m.labels = {"KIM",       "ANTIQUA",   "MICROTUS",   "CO92",
                "NEPAL516",  "PESTOIDES", "Yp_IP31758", "Yp_IP32953"};
    m.values = {
        {0, 233, 738, 188, 334, 515, 758, 738},
        {233, 0, 750, 319, 449, 664, 719, 712},
        {738, 750, 0, 745, 659, 809, 695, 706},
        {188, 319, 745, 0, 366, 595, 697, 760},
        {334, 449, 659, 366, 0, 659, 641, 759},
        {515, 664, 809, 595, 659, 0, 753, 695},
        {758, 719, 695, 697, 641, 753, 0, 589},
        {738, 712, 706, 760, 759, 695, 589, 0},
    };
    m.validate();
    return m;
}

} // namespace cyclinv
