#include "dsg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dsg {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return in;
}

} // namespace

GraphPtr load_edge_list(std::istream& in, const std::string& origin) {
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first[0] == '#') continue;
        long long u, v;
        try {
            u = std::stoll(first);
        } catch (const std::exception&) {
            throw std::invalid_argument(origin + ":" + std::to_string(line_no) + ": expected integer, got '" + first + "'");
        }
        if (!(ls >> v))
            throw std::invalid_argument(origin + ":" + std::to_string(line_no) + ": missing second endpoint");
        std::string trailing;
        if (ls >> trailing)
            throw std::invalid_argument(origin + ":" + std::to_string(line_no) + ": trailing token '" + trailing + "'");
        if (u < 0 || v < 0)
            throw std::invalid_argument(origin + ":" + std::to_string(line_no) + ": negative vertex id");
        if (u == v)
            throw std::invalid_argument(origin + ":" + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_vertex = std::max(max_vertex, static_cast<int>(std::max(u, v)));
    }
    if (edges.empty()) throw std::invalid_argument(origin + ": no edges");
    // duplicate detection with line-free message is fine; Graph::from_edges also catches it
    auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    std::vector<std::pair<int, int>> sorted;
    sorted.reserve(edges.size());
    for (auto& e : edges) sorted.push_back(key(e.first, e.second));
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
        throw std::invalid_argument(origin + ": duplicate edge (" + std::to_string(dup->first) + "," +
                                    std::to_string(dup->second) + ")");
    try {
        return std::make_shared<Graph>(Graph::from_edges(max_vertex + 1, edges));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(origin + ": " + e.what());
    }
}

GraphPtr load_edge_list_file(const std::string& path) {
    auto in = open_or_throw(path);
    return load_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    write_edge_list(out, g);
}

Assignment load_assignment(std::istream& in, GraphPtr g, int t, const std::string& origin) {
    std::vector<int> labels;
    long long value;
    while (in >> value) {
        if (value < 1)
            throw std::invalid_argument(origin + ": label " + std::to_string(value) + " below 1");
        labels.push_back(static_cast<int>(value));
    }
    if (!in.eof() && in.fail())
        throw std::invalid_argument(origin + ": non-integer token in assignment");
    if (static_cast<int>(labels.size()) != g->n())
        throw std::invalid_argument(origin + ": got " + std::to_string(labels.size()) + " labels for " +
                                    std::to_string(g->n()) + " vertices");
    int max_label = *std::max_element(labels.begin(), labels.end());
    if (t == 0) t = max_label;
    if (max_label > t)
        throw std::invalid_argument(origin + ": label " + std::to_string(max_label) + " exceeds t=" + std::to_string(t));
    return assignment_from_labels(std::move(g), std::move(labels), t);
}

Assignment load_assignment_file(const std::string& path, GraphPtr g, int t) {
    auto in = open_or_throw(path);
    return load_assignment(in, std::move(g), t, path);
}

void write_assignment(std::ostream& out, const Assignment& a) {
    for (size_t v = 0; v < a.labels.size(); ++v) {
        if (v) out << ' ';
        out << a.labels[v];
    }
    out << '\n';
}

void write_assignment_file(const std::string& path, const Assignment& a) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    write_assignment(out, a);
}

} // namespace dsg
