#include "flowpoly/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flowpoly {

MultiGraph parse_graph_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int n = -1;
    std::vector<std::array<int, 3>> rows;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n)) continue;  // skip leading blank lines
            continue;
        }
        int t, h, m = 1;
        if (!(ls >> t >> h)) continue;
        ls >> m;
        rows.push_back({t, h, m});
    }
    if (n < 0) throw std::invalid_argument("graph text: missing vertex count line");
    return MultiGraph::from_rows(n, rows);
}

std::string graph_to_text(const MultiGraph& g) {
    std::ostringstream os;
    os << g.n() << "\n";
    // Collapse parallel copies back into multiplicity rows.
    const auto& edges = g.edges();
    for (size_t i = 0; i < edges.size();) {
        size_t j = i;
        while (j < edges.size() && edges[j].tail == edges[i].tail && edges[j].head == edges[i].head) ++j;
        os << edges[i].tail << " " << edges[i].head;
        if (j - i > 1) os << " " << (j - i);
        os << "\n";
        i = j;
    }
    return os.str();
}

MultiGraph graph_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::array<int, 3>> rows;
    for (const auto& e : j.at("edges")) {
        if (e.size() < 2 || e.size() > 3) throw std::invalid_argument("graph json: edge rows are [t,h,(mult)]");
        rows.push_back({e[0].get<int>(), e[1].get<int>(), e.size() == 3 ? e[2].get<int>() : 1});
    }
    return MultiGraph::from_rows(n, rows);
}

Json graph_to_json(const MultiGraph& g) {
    Json j;
    j["n"] = g.n();
    Json edges = Json::array();
    const auto& es = g.edges();
    for (size_t i = 0; i < es.size();) {
        size_t k = i;
        while (k < es.size() && es[k].tail == es[i].tail && es[k].head == es[i].head) ++k;
        edges.push_back({es[i].tail, es[i].head, k - i});
        i = k;
    }
    j["edges"] = edges;
    return j;
}

MultiGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return graph_from_json(Json::parse(text));
    return parse_graph_text(text);
}

EdgeSubset parse_edge_subset(const MultiGraph& g, const std::string& text) {
    EdgeSubset f;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ';')) {
        if (item.empty()) continue;
        std::istringstream ls(item);
        std::vector<int> nums;
        std::string field;
        while (std::getline(ls, field, ',')) nums.push_back(std::stoi(field));
        if (nums.size() < 2 || nums.size() > 3)
            throw std::invalid_argument("edge subset items are tail,head[,copy]");
        Edge e{nums[0], nums[1], nums.size() == 3 ? nums[2] : 1};
        if (!g.has_edge(e)) throw std::invalid_argument("edge subset: edge not in the graph");
        if (f.count(e)) throw std::invalid_argument("edge subset: duplicate edge");
        f.insert(e);
    }
    return f;
}

Netflow parse_netflow(const std::string& text) {
    Netflow a;
    std::istringstream is(text);
    std::string field;
    while (std::getline(is, field, ',')) a.push_back(std::stoll(field));
    return a;
}

Json polynomial_to_json(const SparsePolynomial& p) {
    Json j;
    j["n"] = p.nvars();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["coeff"] = c;
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

SparsePolynomial polynomial_from_json(const Json& j) {
    SparsePolynomial p(j.at("n").get<int>());
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exp").get<std::vector<int>>(), t.at("coeff").get<long long>());
    return p;
}

Json genperm_to_json(const GenPermSpec& spec) {
    Json j;
    j["n"] = spec.n;
    Json z = Json::object();
    for (uint32_t mask = 1; mask < (1u << spec.n); ++mask) {
        std::string key;
        for (int i = 0; i < spec.n; ++i)
            if (mask >> i & 1) key += (key.empty() ? "" : ",") + std::to_string(i + 1);
        z[key] = spec.z[mask];
    }
    j["z"] = z;
    return j;
}

namespace {

Json label_to_json(const EdgeLabel& label) {
    if (label.original()) return Json::array({label.edge.tail, label.edge.head, label.edge.copy});
    Json j;
    j["new_edge"] = {label.edge.tail, label.edge.head, label.edge.copy};
    j["id"] = label.derived_id;
    return j;
}

}  // namespace

Json ld_to_json(const MultiGraph& g, const LDMultiset& ld) {
    Json out = Json::array();
    for (const auto& [key, mult] : ld) {
        Json item;
        item["seq"] = key.first;
        Json labels = Json::array();
        for (const EdgeLabel& l : key.second) labels.push_back(label_to_json(l));
        item["F"] = labels;
        item["codim"] = codim(g, key.first);
        item["mult"] = mult;
        out.push_back(item);
    }
    return out;
}

Json tree_to_json(const ReductionTree& tree) {
    Json nodes = Json::array();
    for (const auto& node : tree.nodes) {
        Json j;
        j["graph_hash"] = node.graph.hash();
        j["edges"] = graph_to_json(node.graph)["edges"];
        if (node.reduction) {
            j["reduce_e1"] = {node.reduction->e1.tail, node.reduction->e1.head, node.reduction->e1.copy};
            j["reduce_e2"] = {node.reduction->e2.tail, node.reduction->e2.head, node.reduction->e2.copy};
            j["g3_label"] = label_to_json(node.e2_label);
            j["children"] = {node.children[0], node.children[1], node.children[2]};
        }
        nodes.push_back(j);
    }
    Json out;
    out["nodes"] = nodes;
    Json origins = Json::array();
    for (const auto& [id, origin] : tree.origins) {
        Json j;
        j["id"] = id;
        j["edge"] = {origin.edge.tail, origin.edge.head, origin.edge.copy};
        j["from_e1"] = label_to_json(origin.from_e1);
        j["from_e2"] = label_to_json(origin.from_e2);
        origins.push_back(j);
    }
    out["new_edges"] = origins;
    return out;
}

Json ehrhart_to_json(const std::vector<Rational>& coeffs) {
    Json arr = Json::array();
    for (const Rational& c : coeffs)
        arr.push_back(boost::multiprecision::numerator(c).str() + "/" +
                      boost::multiprecision::denominator(c).str());
    return arr;
}

}  // namespace flowpoly
