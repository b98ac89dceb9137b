#include "cyclinv/genome_file.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>
#include <unordered_set>

namespace cyclinv {

GenomeList read_genome_file(std::istream& in) {
    GenomeList genomes;
    std::unordered_set<std::string> names;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        const size_t tab = line.find('\t', first);
        if (tab == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected NAME<TAB>window");
        const std::string name = line.substr(first, tab - first);
        if (name.empty())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": empty name");
        if (!names.insert(name).second)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": duplicate name '" + name + "'");
        try {
            genomes.emplace_back(name, parse_window(line.substr(tab + 1), std::nullopt));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + " ('" + name +
                                        "'): " + e.what());
        }
    }
    if (genomes.empty()) throw std::invalid_argument("no genome records found");
    for (const auto& [name, a] : genomes)
        if (a.size() != genomes.front().second.size())
            throw std::invalid_argument("genome '" + name + "' has " +
                                        std::to_string(a.size()) + " regions, expected " +
                                        std::to_string(genomes.front().second.size()));
    return genomes;
}

GenomeList read_genome_file_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open genome file '" + path + "'");
    return read_genome_file(in);
}

} // namespace cyclinv
