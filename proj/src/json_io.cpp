#include "impalg/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace impalg {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(errc::parse_error, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object()) bad("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) bad("unknown field \"" + it.key() + "\"");
    }
}

int int_value(const json& j, const std::string& where) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) bad(where + " must be an integer");
    const auto v = j.get<std::int64_t>();
    if (v < INT32_MIN || v > INT32_MAX) bad(where + " is out of range");
    return static_cast<int>(v);
}

// Shared shape of the profile and polymatroid formats: "m" plus a dense
// "values" table keyed by decimal subset masks from lo to 2^m - 1.
template <class Table>
Table table_from_json(const json& j, std::uint32_t lo) {
    reject_unknown_keys(j, {"m", "values"});
    const int m = int_value(field(j, "m"), "\"m\"");
    if (m < 1 || m > kMaxProfileIndices) bad("\"m\" must be between 1 and 20");
    const json& values = field(j, "values");
    if (!values.is_object()) bad("\"values\" must be an object");

    Table out(m);
    const std::uint32_t limit = 1u << m;
    if (values.size() != limit - lo) bad("\"values\" must have exactly one key per subset");
    for (std::uint32_t mask = lo; mask < limit; ++mask) {
        const std::string key = std::to_string(mask);
        auto it = values.find(key);
        if (it == values.end()) bad("missing subset key \"" + key + "\"");
        out.set(IndexSet{mask}, int_value(*it, "value at \"" + key + "\""));
    }
    return out;
}

template <class Table>
json table_to_json(const Table& t, std::uint32_t lo) {
    json values = json::object();
    for (std::uint32_t mask = lo; mask < t.mask_limit(); ++mask)
        values[std::to_string(mask)] = t.at(IndexSet{mask});
    return json{{"m", t.index_count()}, {"values", std::move(values)}};
}

json edges_to_json(const std::vector<std::string>& names, std::span<const VertexSet> edges) {
    json out = json::array();
    for (VertexSet e : edges) {
        json members = json::array();
        for (int v : e) members.push_back(names[v]);
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
    if (!j.is_object()) bad("expected a JSON object");
    reject_unknown_keys(j, {"vertices", "edges", "as"});
    if (auto it = j.find("as"); it != j.end() && *it != "algebra")
        bad("\"as\" may only be \"algebra\"");

    const json& vertices = field(j, "vertices");
    const json& edges = field(j, "edges");
    if (!vertices.is_array()) bad("\"vertices\" must be an array");
    if (!edges.is_array()) bad("\"edges\" must be an array");

    std::vector<std::string> names;
    for (const json& v : vertices) {
        if (!v.is_string()) bad("vertex labels must be strings");
        names.push_back(v.get<std::string>());
    }
    std::vector<std::vector<std::string>> edge_labels;
    for (const json& e : edges) {
        if (!e.is_array()) bad("each edge must be an array of vertex labels");
        auto& labels = edge_labels.emplace_back();
        for (const json& v : e) {
            if (!v.is_string()) bad("edge members must be strings");
            labels.push_back(v.get<std::string>());
        }
    }
    return Hypergraph::create(std::move(names), edge_labels);
}

nlohmann::json hypergraph_to_json(const Hypergraph& h) {
    return json{{"edges", edges_to_json(h.vertex_names(), h.edges())},
                {"vertices", h.vertex_names()}};
}

nlohmann::json algebra_to_json(const ImplicationAlgebra& alg) {
    return json{{"as", "algebra"},
                {"edges", edges_to_json(alg.ground(), alg.min_edges())},
                {"vertices", alg.ground()}};
}

Profile profile_from_json(const nlohmann::json& j) { return table_from_json<Profile>(j, 1); }

nlohmann::json profile_to_json(const Profile& p) { return table_to_json(p, 1); }

PolymatroidFn polymatroid_from_json(const nlohmann::json& j) {
    return table_from_json<PolymatroidFn>(j, 0);
}

nlohmann::json polymatroid_to_json(const PolymatroidFn& r) { return table_to_json(r, 0); }

nlohmann::json degeneracy_to_json(const DegeneracyReport& report) {
    json nested = json::array();
    for (auto [i, j] : report.nested) nested.push_back(json::array({i, j}));
    return json{{"coinciding", report.coinciding},
                {"distinct_maximal", report.distinct_maximal},
                {"empty_edges", report.empty_edges},
                {"nested", std::move(nested)}};
}

nlohmann::json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(errc::parse_error, e.what());
    }
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::parse_error, "cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

namespace {

std::string quoted_label(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string dot_incidence(const std::vector<std::string>& vertex_names,
                          std::span<const VertexSet> edges) {
    std::ostringstream out;
    out << "graph incidence {\n";
    for (size_t v = 0; v < vertex_names.size(); ++v)
        out << "  v" << v << " [shape=circle, label=" << quoted_label(vertex_names[v]) << "];\n";
    for (size_t i = 0; i < edges.size(); ++i)
        out << "  e" << i << " [shape=box, label=\"e" << i << "\"];\n";
    for (size_t i = 0; i < edges.size(); ++i)
        for (int v : edges[i]) out << "  v" << v << " -- e" << i << ";\n";
    out << "}\n";
    return out.str();
}

std::string dot_incidence(const Hypergraph& h) {
    return dot_incidence(h.vertex_names(), h.edges());
}

}  // namespace impalg
