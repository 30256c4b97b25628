#include "hyperforman/hypernet.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>
#include <utility>

#include <json.hpp>

namespace hyperforman {

using Kind = HypernetError::Kind;

Hypernetwork Hypernetwork::build(std::vector<std::string> nodes,
                                 std::vector<Hypervertex> hypervertices,
                                 std::vector<Hyperedge> hyperedges, bool directed)
{
    Hypernetwork h;

    std::sort(nodes.begin(), nodes.end());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].empty())
            throw HypernetError(Kind::syntax, "empty node label");
        if (i > 0 && nodes[i] == nodes[i - 1])
            throw HypernetError(Kind::duplicate_id, "duplicate node '" + nodes[i] + "'");
    }
    h.nodes_ = std::move(nodes);

    std::unordered_set<std::string> hv_ids;
    for (Hypervertex& hv : hypervertices) {
        if (hv.id.empty())
            throw HypernetError(Kind::syntax, "hypervertex with empty id");
        if (!hv_ids.insert(hv.id).second)
            throw HypernetError(Kind::duplicate_id, "duplicate hypervertex id '" + hv.id + "'");
        if (hv.nodes.empty())
            throw HypernetError(Kind::empty_hypervertex, "hypervertex '" + hv.id + "' has no nodes");
        std::sort(hv.nodes.begin(), hv.nodes.end());
        hv.nodes.erase(std::unique(hv.nodes.begin(), hv.nodes.end()), hv.nodes.end());
        for (const std::string& node : hv.nodes)
            if (!std::binary_search(h.nodes_.begin(), h.nodes_.end(), node))
                throw HypernetError(Kind::unknown_node,
                                    "hypervertex '" + hv.id + "' names unknown node '" + node + "'");
    }
    h.hypervertices_ = std::move(hypervertices);

    std::unordered_set<std::string> edge_ids;
    // A directed pair clashes with the same arc or with an undirected edge on
    // the same two hypervertices; an undirected pair clashes with anything.
    std::set<std::pair<std::string, std::string>> directed_pairs;
    std::set<std::pair<std::string, std::string>> unordered_pairs;
    std::set<std::pair<std::string, std::string>> undirected_pairs;
    for (Hyperedge& e : hyperedges) {
        if (e.id.empty())
            throw HypernetError(Kind::syntax, "hyperedge with empty id");
        if (!edge_ids.insert(e.id).second)
            throw HypernetError(Kind::duplicate_id, "duplicate hyperedge id '" + e.id + "'");
        for (const std::string* end : {&e.tail, &e.head})
            if (!hv_ids.contains(*end))
                throw HypernetError(Kind::unknown_hypervertex,
                                    "hyperedge '" + e.id + "' references unknown hypervertex '" + *end + "'");
        if (e.tail == e.head)
            throw HypernetError(Kind::hyper_loop, "hyperedge '" + e.id + "' is a hyper-loop on '" + e.tail + "'");
        if (directed && !e.directed)
            throw HypernetError(Kind::direction_conflict,
                                "hyperedge '" + e.id + "' is undirected in a directed hypernetwork");
        if (!e.directed && e.head < e.tail)
            std::swap(e.tail, e.head);

        const auto unordered = std::minmax(e.tail, e.head);
        const std::pair<std::string, std::string> key{unordered.first, unordered.second};
        const bool clash = e.directed ? directed_pairs.contains({e.tail, e.head}) || undirected_pairs.contains(key)
                                      : unordered_pairs.contains(key);
        if (clash)
            throw HypernetError(Kind::duplicate_edge, "hyperedge '" + e.id + "' repeats the pair (" + e.tail +
                                                          ", " + e.head + ")");
        unordered_pairs.insert(key);
        if (e.directed)
            directed_pairs.insert({e.tail, e.head});
        else
            undirected_pairs.insert(key);
    }
    h.hyperedges_ = std::move(hyperedges);
    h.directed_ = directed;
    return h;
}

std::optional<std::uint32_t> Hypernetwork::node_index(std::string_view label) const
{
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), label);
    if (it == nodes_.end() || *it != label)
        return std::nullopt;
    return static_cast<std::uint32_t>(it - nodes_.begin());
}

std::optional<std::size_t> Hypernetwork::hypervertex_index(std::string_view id) const
{
    for (std::size_t i = 0; i < hypervertices_.size(); ++i)
        if (hypervertices_[i].id == id)
            return i;
    return std::nullopt;
}

std::vector<std::uint32_t> Hypernetwork::node_set(std::size_t hypervertex) const
{
    std::vector<std::uint32_t> out;
    for (const std::string& node : hypervertices_.at(hypervertex).nodes)
        out.push_back(*node_index(node));
    return out;
}

// --- parsing ------------------------------------------------------------------

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void syntax_error(std::size_t line, std::size_t column, const std::string& what)
{
    throw HypernetError(Kind::syntax,
                        "syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
}

bool infer_directed(const std::vector<Hyperedge>& edges)
{
    return !edges.empty() && std::all_of(edges.begin(), edges.end(), [](const Hyperedge& e) { return e.directed; });
}

std::vector<std::string> nodes_of(const std::vector<Hypervertex>& hvs)
{
    std::set<std::string> all;
    for (const auto& hv : hvs)
        all.insert(hv.nodes.begin(), hv.nodes.end());
    return {all.begin(), all.end()};
}

std::string edge_id(std::size_t position) { return "E" + std::to_string(position + 1); }

Hypernetwork parse_text(std::string_view input)
{
    std::vector<Hypervertex> hvs;
    std::vector<Hyperedge> edges;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= input.size()) {
        const std::size_t end = std::min(input.find('\n', pos), input.size());
        std::string_view line = input.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#')
            continue;

        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            syntax_error(line_no, first + 1, "expected '<id>: ...' or 'E: <id> <id>'");

        std::string_view head = line.substr(first, colon - first);
        while (!head.empty() && (head.back() == ' ' || head.back() == '\t'))
            head.remove_suffix(1);
        if (head.empty())
            syntax_error(line_no, colon + 1, "missing identifier before ':'");
        if (head.find_first_of(" \t") != std::string_view::npos)
            syntax_error(line_no, first + 1, "identifier contains whitespace");

        std::vector<std::string> tokens;
        std::istringstream rest{std::string(line.substr(colon + 1))};
        for (std::string tok; rest >> tok;)
            tokens.push_back(tok);

        if (head == "E" || head == "E>") {
            if (tokens.size() != 2)
                throw HypernetError(Kind::arity, "line " + std::to_string(line_no) + ": hyperedges join exactly two "
                                                     "hypervertices, got " + std::to_string(tokens.size()));
            edges.push_back({edge_id(edges.size()), tokens[0], tokens[1], head == "E>"});
        } else {
            hvs.push_back({std::string(head), std::move(tokens)});
        }
    }

    const bool directed = infer_directed(edges);
    auto nodes = nodes_of(hvs);
    return Hypernetwork::build(std::move(nodes), std::move(hvs), std::move(edges), directed);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view input, std::size_t byte)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < std::min(byte, input.size()); ++i) {
        if (input[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

const json& require(const json& obj, const char* key, const std::string& where)
{
    if (!obj.contains(key))
        throw HypernetError(Kind::syntax, where + ": missing key '" + key + "'");
    return obj.at(key);
}

std::string require_string(const json& value, const std::string& where)
{
    if (!value.is_string())
        throw HypernetError(Kind::syntax, where + ": expected a string");
    return value.get<std::string>();
}

std::vector<std::string> require_strings(const json& value, const std::string& where)
{
    if (!value.is_array())
        throw HypernetError(Kind::syntax, where + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& item : value)
        out.push_back(require_string(item, where));
    return out;
}

Hypernetwork parse_json(std::string_view input)
{
    json doc;
    try {
        doc = json::parse(input);
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(input, e.byte == 0 ? 0 : e.byte - 1);
        syntax_error(line, column, e.what());
    }
    if (!doc.is_object())
        throw HypernetError(Kind::syntax, "top level: expected an object");

    std::vector<Hypervertex> hvs;
    for (const auto& item : require(doc, "hypervertices", "top level")) {
        if (!item.is_object())
            throw HypernetError(Kind::syntax, "hypervertices: expected objects");
        const std::string id = require_string(require(item, "id", "hypervertex"), "hypervertex id");
        hvs.push_back({id, require_strings(require(item, "nodes", "hypervertex '" + id + "'"),
                                           "hypervertex '" + id + "' nodes")});
    }

    std::optional<bool> top_directed;
    if (doc.contains("directed")) {
        if (!doc["directed"].is_boolean())
            throw HypernetError(Kind::syntax, "top level: 'directed' must be a boolean");
        top_directed = doc["directed"].get<bool>();
    }

    std::vector<Hyperedge> edges;
    if (doc.contains("hyperedges")) {
        const auto& list = doc["hyperedges"];
        if (!list.is_array())
            throw HypernetError(Kind::syntax, "hyperedges: expected an array");
        for (const auto& item : list) {
            if (!item.is_object())
                throw HypernetError(Kind::syntax, "hyperedges: expected objects");
            const std::string id = require_string(require(item, "id", "hyperedge"), "hyperedge id");
            const std::string where = "hyperedge '" + id + "'";
            const json& tail = require(item, "tail", where);
            const json& head = require(item, "head", where);
            if (tail.is_array() || head.is_array())
                throw HypernetError(Kind::arity, where + ": hyperedges join exactly two hypervertices");
            bool directed = top_directed.value_or(false);
            if (item.contains("directed")) {
                if (!item["directed"].is_boolean())
                    throw HypernetError(Kind::syntax, where + ": 'directed' must be a boolean");
                directed = item["directed"].get<bool>();
            }
            edges.push_back({id, require_string(tail, where + " tail"), require_string(head, where + " head"),
                             directed});
        }
    }

    std::vector<std::string> nodes;
    if (doc.contains("nodes")) {
        nodes = require_strings(doc["nodes"], "nodes");
    } else {
        nodes = nodes_of(hvs);
    }

    const bool directed = top_directed.value_or(infer_directed(edges));
    return Hypernetwork::build(std::move(nodes), std::move(hvs), std::move(edges), directed);
}

bool plain_token(const std::string& s)
{
    return !s.empty() && s.find_first_of(" \t\r\n:") == std::string::npos && s.front() != '#';
}

std::string serialize_text(const Hypernetwork& h)
{
    auto unrepresentable = [](const std::string& why) {
        throw HypernetError(Kind::unrepresentable, "not expressible in the text format: " + why);
    };

    std::vector<Hypervertex> hvs(h.hypervertices().begin(), h.hypervertices().end());
    if (nodes_of(hvs) != h.nodes())
        unrepresentable("some nodes belong to no hypervertex");
    std::vector<Hyperedge> edges(h.hyperedges().begin(), h.hyperedges().end());
    if (infer_directed(edges) != h.directed())
        unrepresentable("the directed flag does not follow from the edge lines");

    std::ostringstream out;
    for (const Hypervertex& hv : hvs) {
        if (!plain_token(hv.id) || hv.id == "E" || hv.id == "E>")
            unrepresentable("hypervertex id '" + hv.id + "'");
        out << hv.id << ':';
        for (const auto& node : hv.nodes) {
            if (!plain_token(node))
                unrepresentable("node label '" + node + "'");
            out << ' ' << node;
        }
        out << '\n';
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].id != edge_id(i))
            unrepresentable("hyperedge id '" + edges[i].id + "' (text edges are numbered E1, E2, ...)");
        out << (edges[i].directed ? "E>: " : "E: ") << edges[i].tail << ' ' << edges[i].head << '\n';
    }
    return out.str();
}

std::string serialize_json(const Hypernetwork& h)
{
    ordered_json doc;
    doc["directed"] = h.directed();
    doc["nodes"] = h.nodes();
    doc["hypervertices"] = ordered_json::array();
    for (const Hypervertex& hv : h.hypervertices())
        doc["hypervertices"].push_back({{"id", hv.id}, {"nodes", hv.nodes}});
    doc["hyperedges"] = ordered_json::array();
    for (const Hyperedge& e : h.hyperedges())
        doc["hyperedges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"directed", e.directed}});
    return doc.dump(2) + "\n";
}

} // namespace

Hypernetwork parse(std::string_view input, InputFormat format)
{
    return format == InputFormat::json ? parse_json(input) : parse_text(input);
}

std::string serialize(const Hypernetwork& h, InputFormat format)
{
    return format == InputFormat::json ? serialize_json(h) : serialize_text(h);
}

// --- geometric views ------------------------------------------------------------

SimplicialComplex clique_expansion(const Hypernetwork& h)
{
    std::set<Simplex> edges;
    auto add = [&](std::uint32_t u, std::uint32_t w) {
        if (u != w)
            edges.insert(u < w ? Simplex{u, w} : Simplex{w, u});
    };
    for (std::size_t i = 0; i < h.hypervertices().size(); ++i) {
        const auto nodes = h.node_set(i);
        for (std::size_t a = 0; a < nodes.size(); ++a)
            for (std::size_t b = a + 1; b < nodes.size(); ++b)
                add(nodes[a], nodes[b]);
    }
    for (const Hyperedge& e : h.hyperedges()) {
        const auto left = h.node_set(*h.hypervertex_index(e.tail));
        const auto right = h.node_set(*h.hypervertex_index(e.head));
        std::vector<std::uint32_t> only_left, only_right;
        std::set_difference(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(only_left));
        std::set_difference(right.begin(), right.end(), left.begin(), left.end(), std::back_inserter(only_right));
        for (const auto u : only_left)
            for (const auto w : only_right)
                add(u, w);
    }
    return SimplicialComplex::from_faces(h.nodes(), {edges.begin(), edges.end()});
}

std::vector<Simplex> geometric_simplices(const Hypernetwork& h)
{
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < h.hypervertices().size(); ++i)
        out.push_back(h.node_set(i));
    for (const Hyperedge& e : h.hyperedges()) {
        auto joined = h.node_set(*h.hypervertex_index(e.tail));
        const auto other = h.node_set(*h.hypervertex_index(e.head));
        joined.insert(joined.end(), other.begin(), other.end());
        std::sort(joined.begin(), joined.end());
        joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
        out.push_back(std::move(joined));
    }
    return out;
}

SimplicialComplex geometric_complex(const Hypernetwork& h)
{
    return SimplicialComplex::closure_of(h.nodes(), geometric_simplices(h), 2);
}

std::int64_t geometric_euler_characteristic(const Hypernetwork& h, std::uint64_t cap)
{
    const auto simplices = geometric_simplices(h);
    std::vector<bool> covered(h.nodes().size(), false);
    for (const auto& s : simplices)
        for (const auto v : s)
            covered[v] = true;
    const auto isolated = std::count(covered.begin(), covered.end(), false);
    return union_of_simplices_euler_characteristic(simplices, cap) + isolated;
}

} // namespace hyperforman
