#include "muig/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "muig/error.hpp"

namespace muig {

namespace {

constexpr const char* kQuadrantKeys[4] = {"pp", "pm", "mp", "mm"};

VertexId parse_vertex_id(std::string_view token, std::size_t line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || v > std::numeric_limits<VertexId>::max())
        throw ParseError("bad vertex id '" + std::string(token) + "'", line);
    return static_cast<VertexId>(v);
}

} // namespace

Representation parse_muir(std::string_view text) {
    Representation rep;
    std::set<VertexId> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream fields(raw);
        std::string id, kind, left, extra;
        if (!(fields >> id)) continue;
        if (!(fields >> kind >> left)) throw ParseError("expected '<vertex-id> <kind> <left>'", line_no);
        if (fields >> extra) throw ParseError("trailing token '" + extra + "'", line_no);

        UnitInterval iv;
        iv.vertex = parse_vertex_id(id, line_no);
        try {
            iv.kind = IntervalKind::parse(kind);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
        try {
            iv.left = Rational::parse(left);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), line_no);
        }
        if (!seen.insert(iv.vertex).second)
            throw ParseError("duplicate vertex id " + std::to_string(iv.vertex), line_no);
        rep.intervals.push_back(iv);
    }
    if (rep.intervals.empty()) throw ParseError("no intervals in input");
    return rep;
}

std::string write_muir(const Representation& rep) {
    std::string out;
    for (const auto& iv : rep.intervals)
        out += std::to_string(iv.vertex) + " " + iv.kind.to_string() + " " + iv.left.to_string() + "\n";
    return out;
}

nlohmann::json model_to_json(const UBubbleModel& model) {
    nlohmann::json columns = nlohmann::json::array();
    for (const auto& col : model.columns) {
        nlohmann::json c = nlohmann::json::array();
        for (const auto& b : col) {
            nlohmann::json jb = nlohmann::json::object();
            for (int q = 0; q < 4; ++q) jb[kQuadrantKeys[q]] = b.quadrants[q];
            c.push_back(std::move(jb));
        }
        columns.push_back(std::move(c));
    }
    return nlohmann::json{{"columns", std::move(columns)}};
}

UBubbleModel model_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("columns") || !doc["columns"].is_array())
        throw ParseError("model JSON must be an object with a 'columns' array");
    UBubbleModel model;
    for (const auto& c : doc["columns"]) {
        if (!c.is_array()) throw ParseError("each column must be an array of bubbles");
        Column col;
        for (const auto& jb : c) {
            if (!jb.is_object()) throw ParseError("each bubble must be an object");
            Bubble b;
            for (const auto& [key, value] : jb.items()) {
                int q = 0;
                while (q < 4 && key != kQuadrantKeys[q]) ++q;
                if (q == 4) throw ParseError("unknown quadrant key '" + key + "'");
                if (!value.is_array()) throw ParseError("quadrant '" + key + "' must be an array");
                for (const auto& id : value) {
                    if (!id.is_number_unsigned() || id.get<std::uint64_t>() > std::numeric_limits<VertexId>::max())
                        throw ParseError("vertex ids must be nonnegative integers");
                    b.quadrants[q].push_back(id.get<VertexId>());
                }
            }
            col.push_back(std::move(b));
        }
        model.columns.push_back(std::move(col));
    }
    return model;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return nlohmann::json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
}

} // namespace muig
