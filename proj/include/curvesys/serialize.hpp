#pragma once

// Canonical JSON serialization of curve systems and DOT export of
// intersection graphs. The writer is byte-stable: curves sorted by id,
// intersection pairs sorted lexicographically, fixed indentation.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvesys/curve_system.hpp"

namespace curvesys {

namespace detail {
using Json = nlohmann::ordered_json;

inline std::string jpath(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) out += "/" + p;
    return out;
}
}  // namespace detail

// Hand-composed so that curve objects and intersection triples each take
// one line; nlohmann handles the string escaping.
inline std::string write_system_string(const CurveSystem& sys) {
    sys.validate_structure();
    auto str = [](const std::string& s) { return detail::Json(s).dump(); };

    std::vector<std::size_t> order(sys.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return sys.curves[a].id < sys.curves[b].id; });

    std::ostringstream os;
    os << "{\n";
    os << "  \"genus\": " << sys.genus << ",\n";
    os << "  \"boundary\": " << sys.boundary << ",\n";
    os << "  \"k\": " << sys.k << ",\n";
    os << "  \"curves\": [";
    for (std::size_t t = 0; t < order.size(); ++t) {
        const Curve& c = sys.curves[order[t]];
        os << (t == 0 ? "\n" : ",\n") << "    {\"id\": " << str(c.id);
        if (c.homology) os << ", \"class\": " << str(c.homology->to_string());
        os << ", \"provenance\": " << str(c.provenance) << "}";
    }
    os << (order.empty() ? "],\n" : "\n  ],\n");

    std::vector<std::tuple<std::string, std::string, unsigned>> pairs;
    for (const auto& e : sys.intersections()) {
        std::string a = sys.curves[e.i].id, b = sys.curves[e.j].id;
        if (b < a) std::swap(a, b);
        pairs.emplace_back(a, b, e.count);
    }
    std::sort(pairs.begin(), pairs.end());
    os << "  \"intersections\": [";
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        const auto& [a, b, cnt] = pairs[t];
        os << (t == 0 ? "\n" : ",\n") << "    [" << str(a) << ", " << str(b) << ", " << cnt << "]";
    }
    os << (pairs.empty() ? "]\n" : "\n  ]\n");
    os << "}\n";
    return os.str();
}

// Atomic write: temp file in the same directory, then rename.
inline void write_system(const std::filesystem::path& path, const CurveSystem& sys) {
    std::string payload = write_system_string(sys);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        os << payload;
    }
    std::filesystem::rename(tmp, path);
}

inline CurveSystem read_system_json(const detail::Json& doc) {
    using detail::jpath;
    if (!doc.is_object()) throw FormatError("document must be an object", "");
    auto require = [&](const char* key) -> const detail::Json& {
        if (!doc.contains(key)) throw FormatError("missing required key", jpath({key}));
        return doc.at(key);
    };

    CurveSystem sys;
    const auto& jg = require("genus");
    if (!jg.is_number_integer() || jg.get<long long>() < 1 ||
        jg.get<long long>() > gf2::kMaxGenus)
        throw FormatError("genus must be an integer in [1, 256]", jpath({"genus"}));
    sys.genus = jg.get<int>();
    const auto& jb = require("boundary");
    if (!jb.is_number_integer() || jb.get<long long>() < 0 || jb.get<long long>() > 1000000)
        throw FormatError("boundary must be an integer >= 0", jpath({"boundary"}));
    sys.boundary = jb.get<int>();
    const auto& jk = require("k");
    if (!jk.is_number_integer() || jk.get<long long>() < 0 || jk.get<long long>() > 1000000)
        throw FormatError("k must be an integer >= 0", jpath({"k"}));
    sys.k = jk.get<unsigned>();

    const auto& jcurves = require("curves");
    if (!jcurves.is_array()) throw FormatError("curves must be an array", jpath({"curves"}));
    for (std::size_t t = 0; t < jcurves.size(); ++t) {
        const auto& jc = jcurves.at(t);
        std::string loc = jpath({"curves", std::to_string(t)});
        if (!jc.is_object()) throw FormatError("curve must be an object", loc);
        if (!jc.contains("id") || !jc.at("id").is_string() || jc.at("id").get<std::string>().empty())
            throw FormatError("curve id must be a nonempty string", loc + "/id");
        Curve c;
        c.id = jc.at("id").get<std::string>();
        if (sys.index_of(c.id)) throw FormatError("duplicate curve id '" + c.id + "'", loc + "/id");
        if (jc.contains("class")) {
            if (sys.boundary > 0)
                throw FormatError("class not allowed when boundary > 0", loc + "/class");
            if (!jc.at("class").is_string())
                throw FormatError("class must be a bitstring", loc + "/class");
            std::string bits = jc.at("class").get<std::string>();
            if (bits.size() != static_cast<std::size_t>(2 * sys.genus))
                throw FormatError("class must have length 2g", loc + "/class");
            try {
                c.homology = gf2::Vector::from_string(bits);
            } catch (const std::invalid_argument& e) {
                throw FormatError(e.what(), loc + "/class");
            }
        } else if (sys.boundary == 0) {
            throw FormatError("closed system requires a class on every curve", loc);
        }
        if (jc.contains("provenance")) {
            if (!jc.at("provenance").is_string())
                throw FormatError("provenance must be a string", loc + "/provenance");
            c.provenance = jc.at("provenance").get<std::string>();
        }
        sys.add_curve(std::move(c));
    }

    const auto& jinter = require("intersections");
    if (!jinter.is_array())
        throw FormatError("intersections must be an array", jpath({"intersections"}));
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (std::size_t t = 0; t < jinter.size(); ++t) {
        const auto& je = jinter.at(t);
        std::string loc = jpath({"intersections", std::to_string(t)});
        if (!je.is_array() || je.size() != 3)
            throw FormatError("intersection entry must be [id_i, id_j, count]", loc);
        if (!je.at(0).is_string() || !je.at(1).is_string())
            throw FormatError("intersection ids must be strings", loc);
        auto ia = sys.index_of(je.at(0).get<std::string>());
        auto ib = sys.index_of(je.at(1).get<std::string>());
        if (!ia) throw FormatError("unknown curve id '" + je.at(0).get<std::string>() + "'",
                                   loc + "/0");
        if (!ib) throw FormatError("unknown curve id '" + je.at(1).get<std::string>() + "'",
                                   loc + "/1");
        if (*ia == *ib) throw FormatError("intersection pair must name two distinct curves", loc);
        if (!je.at(2).is_number_integer())
            throw FormatError("count must be an integer", loc + "/2");
        long long cnt = je.at(2).get<long long>();
        if (cnt < 0) throw FormatError("count must be nonnegative", loc + "/2");
        if (cnt > 0x7fffffff) throw FormatError("count out of range", loc + "/2");
        std::uint32_t lo = static_cast<std::uint32_t>(std::min(*ia, *ib));
        std::uint32_t hi = static_cast<std::uint32_t>(std::max(*ia, *ib));
        // normalize() would also catch duplicates, but here we can name the spot
        if (!seen.insert({lo, hi}).second) throw FormatError("duplicate intersection pair", loc);
        sys.add_intersection(*ia, *ib, static_cast<unsigned>(cnt));
    }
    sys.normalize();
    sys.validate_structure();
    return sys;
}

inline CurveSystem read_system_string(const std::string& text) {
    detail::Json doc = detail::Json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw FormatError("invalid JSON", "");
    return read_system_json(doc);
}

inline CurveSystem read_system(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << is.rdbuf();
    return read_system_string(buf.str());
}

// Undirected DOT with curve ids as node labels; nodes and edges sorted.
inline std::string to_dot(const IntersectionGraph& graph) {
    std::ostringstream os;
    os << "graph " << (graph.flavor == IntersectionGraph::Flavor::Odd ? "odd" : "all") << " {\n";
    std::vector<std::string> nodes = graph.vertices;
    std::sort(nodes.begin(), nodes.end());
    for (const auto& v : nodes) os << "  \"" << v << "\";\n";
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [i, j] : graph.edges) {
        std::string a = graph.vertices[i], b = graph.vertices[j];
        if (b < a) std::swap(a, b);
        edges.emplace_back(std::move(a), std::move(b));
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) os << "  \"" << a << "\" -- \"" << b << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace curvesys
