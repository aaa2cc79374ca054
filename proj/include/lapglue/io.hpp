#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lapglue/graph.hpp"
#include "lapglue/matrix.hpp"
#include "lapglue/polynomial.hpp"
#include "lapglue/spectra.hpp"
#include "lapglue/evolution.hpp"

namespace lapglue {

enum class Format { json, plain };

// Documents come in two renderings of the same fields: JSON and a
// line-oriented plain form ("<type>" header line, then "key values" lines).
// Parsers accept both; a leading '{' selects JSON. Arbitrary-precision
// integers are rendered as decimal strings so round-trips are bit-exact.

namespace iodetail {

inline std::string fmt_double(double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

inline nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
}

inline bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

// Lines of a plain document, split into whitespace tokens; empty lines dropped.
inline std::vector<std::vector<std::string>> plain_lines(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

inline int parse_int(const std::string& s) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        require(pos == s.size(), errc::parse_error, "trailing characters in integer: " + s);
        return v;
    } catch (const Error&) {
        throw;
    } catch (...) {
        fail(errc::parse_error, "not an integer: " + s);
    }
}

inline Int parse_bigint(const std::string& s) {
    try {
        return Int(s);
    } catch (...) {
        fail(errc::parse_error, "not an integer: " + s);
    }
}

inline double parse_double(const std::string& s) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        require(pos == s.size(), errc::parse_error, "trailing characters in number: " + s);
        return v;
    } catch (const Error&) {
        throw;
    } catch (...) {
        fail(errc::parse_error, "not a number: " + s);
    }
}

// A JSON value that may be a native integer or a decimal string.
inline Int json_bigint(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    fail(errc::parse_error, "expected an integer or decimal string");
}

inline std::vector<int> json_int_array(const nlohmann::json& j, const char* what) {
    require(j.is_array(), errc::parse_error, std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        require(v.is_number_integer(), errc::parse_error,
                std::string(what) + " must contain integers");
        out.push_back(v.get<int>());
    }
    return out;
}

} // namespace iodetail

struct GraphDocument {
    std::string name; // optional, may be empty
    OrientedGraph graph;
};

inline GraphDocument parse_graph_document(const std::string& text) {
    using namespace iodetail;
    GraphDocument doc;
    std::vector<std::pair<int, int>> edges;
    int vertices = -1;
    if (looks_like_json(text)) {
        nlohmann::json j = parse_json(text);
        require(j.contains("vertices") && j["vertices"].is_number_integer(), errc::parse_error,
                "graph document needs an integer 'vertices' field");
        const long long v = j["vertices"].get<long long>();
        require(v >= 0 && v <= 10'000'000, errc::parse_error,
                "vertex count out of the supported range");
        vertices = static_cast<int>(v);
        require(j.contains("edges") && j["edges"].is_array(), errc::parse_error,
                "graph document needs an 'edges' array");
        for (const auto& e : j["edges"]) {
            require(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                        e[1].is_number_integer(),
                    errc::parse_error, "each edge must be a [tail, head] integer pair");
            const long long t = e[0].get<long long>(), h = e[1].get<long long>();
            require(t >= 0 && t <= 10'000'000 && h >= 0 && h <= 10'000'000, errc::parse_error,
                    "edge endpoint out of the supported range");
            edges.emplace_back(static_cast<int>(t), static_cast<int>(h));
        }
        if (j.contains("name")) {
            require(j["name"].is_string(), errc::parse_error, "graph name must be a string");
            doc.name = j["name"].get<std::string>();
        }
    } else {
        auto lines = plain_lines(text);
        require(!lines.empty() && lines[0].size() == 1 && lines[0][0] == "graph",
                errc::parse_error, "plain graph document must start with 'graph'");
        for (size_t i = 1; i < lines.size(); ++i) {
            const auto& l = lines[i];
            if (l[0] == "vertices" && l.size() == 2) {
                vertices = parse_int(l[1]);
            } else if (l[0] == "edge" && l.size() == 3) {
                edges.emplace_back(parse_int(l[1]), parse_int(l[2]));
            } else if (l[0] == "name" && l.size() >= 2) {
                doc.name = l[1];
            } else {
                fail(errc::parse_error, "unrecognized graph line: " + l[0]);
            }
        }
        require(vertices >= 0, errc::parse_error, "plain graph document missing 'vertices'");
    }
    doc.graph = new_graph(vertices, edges);
    return doc;
}

inline std::string write_graph_document(const OrientedGraph& g, Format f,
                                        const std::string& name = "") {
    std::ostringstream out;
    if (f == Format::json) {
        out << "{";
        if (!name.empty()) out << "\"name\": \"" << iodetail::json_escape(name) << "\", ";
        out << "\"vertices\": " << g.vertex_count() << ", \"edges\": [";
        for (int i = 0; i < g.edge_count(); ++i) {
            if (i) out << ", ";
            out << "[" << g.edge(i).tail << ", " << g.edge(i).head << "]";
        }
        out << "]}\n";
    } else {
        out << "graph\n";
        if (!name.empty()) out << "name " << name << "\n";
        out << "vertices " << g.vertex_count() << "\n";
        for (const Edge& e : g.edges()) out << "edge " << e.tail << " " << e.head << "\n";
    }
    return out.str();
}

using GlueDocument = std::variant<InterfaceSpec, BridgeSpec>;

inline GlueDocument parse_glue_document(const std::string& text) {
    using namespace iodetail;
    if (looks_like_json(text)) {
        nlohmann::json j = parse_json(text);
        require(j.contains("mode") && j["mode"].is_string(), errc::parse_error,
                "glue document needs a 'mode' field");
        const std::string mode = j["mode"].get<std::string>();
        if (mode == "interface") {
            InterfaceSpec s;
            s.vertices_1 = json_int_array(j.value("vertices_1", nlohmann::json::array()),
                                          "vertices_1");
            s.vertices_2 = json_int_array(j.value("vertices_2", nlohmann::json::array()),
                                          "vertices_2");
            s.edges_1 = json_int_array(j.value("edges_1", nlohmann::json::array()), "edges_1");
            s.edges_2 = json_int_array(j.value("edges_2", nlohmann::json::array()), "edges_2");
            return s;
        }
        if (mode == "bridge") {
            require(j.contains("pairs") && j["pairs"].is_array(), errc::parse_error,
                    "bridge glue document needs a 'pairs' array");
            BridgeSpec s;
            for (const auto& p : j["pairs"]) {
                require(p.is_array() && p.size() == 2 && p[0].is_number_integer() &&
                            p[1].is_number_integer(),
                        errc::parse_error, "each pair must be a [v1, v2] integer pair");
                s.pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
            }
            return s;
        }
        fail(errc::parse_error, "glue mode must be 'interface' or 'bridge'");
    }
    auto lines = plain_lines(text);
    require(!lines.empty() && lines[0].size() == 1 && lines[0][0] == "glue", errc::parse_error,
            "plain glue document must start with 'glue'");
    std::string mode;
    InterfaceSpec iface;
    BridgeSpec bridge;
    auto ints_after = [&](const std::vector<std::string>& l) {
        std::vector<int> out;
        for (size_t k = 1; k < l.size(); ++k) out.push_back(parse_int(l[k]));
        return out;
    };
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l[0] == "mode" && l.size() == 2)
            mode = l[1];
        else if (l[0] == "vertices_1")
            iface.vertices_1 = ints_after(l);
        else if (l[0] == "vertices_2")
            iface.vertices_2 = ints_after(l);
        else if (l[0] == "edges_1")
            iface.edges_1 = ints_after(l);
        else if (l[0] == "edges_2")
            iface.edges_2 = ints_after(l);
        else if (l[0] == "pair" && l.size() == 3)
            bridge.pairs.emplace_back(parse_int(l[1]), parse_int(l[2]));
        else
            fail(errc::parse_error, "unrecognized glue line: " + l[0]);
    }
    if (mode == "interface") return iface;
    if (mode == "bridge") return bridge;
    fail(errc::parse_error, "glue mode must be 'interface' or 'bridge'");
}

inline std::string write_glue_document(const GlueDocument& doc, Format f) {
    std::ostringstream out;
    auto join = [](const std::vector<int>& v) {
        std::ostringstream s;
        for (size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
        return s.str();
    };
    if (const auto* s = std::get_if<InterfaceSpec>(&doc)) {
        if (f == Format::json) {
            out << "{\"mode\": \"interface\", \"vertices_1\": [" << join(s->vertices_1)
                << "], \"vertices_2\": [" << join(s->vertices_2) << "], \"edges_1\": ["
                << join(s->edges_1) << "], \"edges_2\": [" << join(s->edges_2) << "]}\n";
        } else {
            out << "glue\nmode interface\n";
            auto line = [&](const char* key, const std::vector<int>& v) {
                out << key;
                for (int x : v) out << " " << x;
                out << "\n";
            };
            line("vertices_1", s->vertices_1);
            line("vertices_2", s->vertices_2);
            line("edges_1", s->edges_1);
            line("edges_2", s->edges_2);
        }
    } else {
        const auto& b = std::get<BridgeSpec>(doc);
        if (f == Format::json) {
            out << "{\"mode\": \"bridge\", \"pairs\": [";
            for (size_t i = 0; i < b.pairs.size(); ++i)
                out << (i ? ", " : "") << "[" << b.pairs[i].first << ", " << b.pairs[i].second
                    << "]";
            out << "]}\n";
        } else {
            out << "glue\nmode bridge\n";
            for (auto [a, c] : b.pairs) out << "pair " << a << " " << c << "\n";
        }
    }
    return out.str();
}

inline IntMatrix parse_matrix_document(const std::string& text) {
    using namespace iodetail;
    if (looks_like_json(text)) {
        nlohmann::json j = parse_json(text);
        require(j.contains("rows") && j.contains("cols") && j.contains("entries"),
                errc::parse_error, "matrix document needs rows, cols and entries");
        require(j["rows"].is_number_integer() && j["cols"].is_number_integer(),
                errc::parse_error, "matrix rows/cols must be integers");
        const int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
        require(rows >= 0 && cols >= 0, errc::parse_error, "matrix dimensions must be >= 0");
        require(j["entries"].is_array() && static_cast<int>(j["entries"].size()) == rows,
                errc::parse_error, "entries must hold one array per row");
        IntMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            const auto& row = j["entries"][i];
            require(row.is_array() && static_cast<int>(row.size()) == cols, errc::parse_error,
                    "matrix row has the wrong length");
            for (int k = 0; k < cols; ++k) m(i, k) = json_bigint(row[k]);
        }
        return m;
    }
    auto lines = plain_lines(text);
    require(!lines.empty() && lines[0].size() == 1 && lines[0][0] == "matrix", errc::parse_error,
            "plain matrix document must start with 'matrix'");
    int rows = -1, cols = -1;
    std::vector<std::vector<Int>> data;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l[0] == "rows" && l.size() == 2)
            rows = parse_int(l[1]);
        else if (l[0] == "cols" && l.size() == 2)
            cols = parse_int(l[1]);
        else if (l[0] == "row") {
            std::vector<Int> row;
            for (size_t k = 1; k < l.size(); ++k) row.push_back(parse_bigint(l[k]));
            data.push_back(std::move(row));
        } else {
            fail(errc::parse_error, "unrecognized matrix line: " + l[0]);
        }
    }
    require(rows >= 0 && cols >= 0, errc::parse_error, "plain matrix document missing rows/cols");
    require(static_cast<int>(data.size()) == rows, errc::parse_error,
            "matrix row count disagrees with 'rows'");
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        require(static_cast<int>(data[i].size()) == cols, errc::parse_error,
                "matrix row has the wrong length");
        for (int k = 0; k < cols; ++k) m(i, k) = data[i][k];
    }
    return m;
}

inline std::string write_matrix_document(const IntMatrix& m, Format f) {
    std::ostringstream out;
    if (f == Format::json) {
        out << "{\"rows\": " << m.rows() << ", \"cols\": " << m.cols() << ", \"entries\": [";
        for (int i = 0; i < m.rows(); ++i) {
            if (i) out << ", ";
            out << "[";
            for (int j = 0; j < m.cols(); ++j)
                out << (j ? ", " : "") << "\"" << m(i, j).str() << "\"";
            out << "]";
        }
        out << "]}\n";
    } else {
        out << "matrix\nrows " << m.rows() << "\ncols " << m.cols() << "\n";
        for (int i = 0; i < m.rows(); ++i) {
            out << "row";
            for (int j = 0; j < m.cols(); ++j) out << " " << m(i, j).str();
            out << "\n";
        }
    }
    return out.str();
}

inline IntPoly parse_poly_document(const std::string& text) {
    using namespace iodetail;
    std::vector<Int> coeffs;
    if (looks_like_json(text)) {
        nlohmann::json j = parse_json(text);
        require(j.contains("coefficients") && j["coefficients"].is_array(), errc::parse_error,
                "polynomial document needs a 'coefficients' array");
        for (const auto& c : j["coefficients"]) coeffs.push_back(json_bigint(c));
    } else {
        auto lines = plain_lines(text);
        require(!lines.empty() && lines[0].size() == 1 && lines[0][0] == "polynomial",
                errc::parse_error, "plain polynomial document must start with 'polynomial'");
        bool seen = false;
        for (size_t i = 1; i < lines.size(); ++i) {
            const auto& l = lines[i];
            require(l[0] == "coefficients", errc::parse_error,
                    "unrecognized polynomial line: " + l[0]);
            for (size_t k = 1; k < l.size(); ++k) coeffs.push_back(parse_bigint(l[k]));
            seen = true;
        }
        require(seen, errc::parse_error, "plain polynomial document missing coefficients");
    }
    return IntPoly(std::move(coeffs));
}

// Coefficients ascending by power, exact decimal rendering.
inline std::string write_poly_document(const IntPoly& p, Format f) {
    std::ostringstream out;
    if (f == Format::json) {
        out << "{\"coefficients\": [";
        for (size_t i = 0; i < p.coefficients().size(); ++i)
            out << (i ? ", " : "") << "\"" << p.coefficients()[i].str() << "\"";
        out << "]}\n";
    } else {
        out << "polynomial\ncoefficients";
        for (const Int& c : p.coefficients()) out << " " << c.str();
        out << "\n";
    }
    return out.str();
}

// Eigenvalues at 12 significant digits plus the exact zero count.
inline std::string write_spectrum_document(const Spectrum& s, Format f) {
    using iodetail::fmt_double;
    std::ostringstream out;
    if (f == Format::json) {
        out << "{\"zero_count\": " << s.zero_count << ", \"eigenvalues\": [";
        for (size_t i = 0; i < s.eigenvalues.size(); ++i)
            out << (i ? ", " : "") << fmt_double(s.eigenvalues[i], "%.12g");
        out << "]}\n";
    } else {
        out << "spectrum\nzero_count " << s.zero_count << "\neigenvalues";
        for (double v : s.eigenvalues) out << " " << fmt_double(v, "%.12g");
        out << "\n";
    }
    return out.str();
}

inline WaveFunction parse_wave_document(const std::string& text) {
    using namespace iodetail;
    WaveFunction psi;
    if (looks_like_json(text)) {
        nlohmann::json j = parse_json(text);
        require(j.contains("amplitudes") && j["amplitudes"].is_array(), errc::parse_error,
                "wave document needs an 'amplitudes' array");
        for (const auto& a : j["amplitudes"]) {
            require(a.is_array() && a.size() == 2 && a[0].is_number() && a[1].is_number(),
                    errc::parse_error, "each amplitude must be a [re, im] pair");
            psi.amplitudes.emplace_back(a[0].get<double>(), a[1].get<double>());
        }
        return psi;
    }
    auto lines = plain_lines(text);
    require(!lines.empty() && lines[0].size() == 1 && lines[0][0] == "wavefunction",
            errc::parse_error, "plain wave document must start with 'wavefunction'");
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l[0] == "amplitude" && l.size() == 3)
            psi.amplitudes.emplace_back(parse_double(l[1]), parse_double(l[2]));
        else if (l[0] == "norm" && l.size() == 2)
            ; // informational on output, ignored on input
        else
            fail(errc::parse_error, "unrecognized wave line: " + l[0]);
    }
    return psi;
}

inline std::string write_wave_document(const WaveFunction& psi, Format f,
                                       std::optional<double> norm = std::nullopt) {
    using iodetail::fmt_double;
    std::ostringstream out;
    if (f == Format::json) {
        out << "{\"amplitudes\": [";
        for (size_t i = 0; i < psi.amplitudes.size(); ++i) {
            out << (i ? ", " : "") << "[" << fmt_double(psi.amplitudes[i].real(), "%.17g")
                << ", " << fmt_double(psi.amplitudes[i].imag(), "%.17g") << "]";
        }
        out << "]";
        if (norm) out << ", \"norm\": " << fmt_double(*norm, "%.17g");
        out << "}\n";
    } else {
        out << "wavefunction\n";
        for (const auto& a : psi.amplitudes)
            out << "amplitude " << fmt_double(a.real(), "%.17g") << " "
                << fmt_double(a.imag(), "%.17g") << "\n";
        if (norm) out << "norm " << fmt_double(*norm, "%.17g") << "\n";
    }
    return out.str();
}

} // namespace lapglue
