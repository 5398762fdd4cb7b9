#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "daglca/exact.hpp"
#include "daglca/fourpartite.hpp"
#include "daglca/graph.hpp"
#include "daglca/hypergraph.hpp"
#include "daglca/max_witness.hpp"
#include "daglca/oracle.hpp"

namespace daglca {

using nlohmann::json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("write failed for " + path);
}

// FNV-1a over the raw bytes; used as the replayability handle in report
// provenance headers.
inline std::string content_hash(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---- DAG: text "n m" + edge lines, or JSON {"n":..., "edges":[[u,v],...]} ----

inline std::string dag_to_text(const Dag& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

inline json dag_to_json(const Dag& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n()}, {"edges", edges}};
}

inline Dag dag_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return Dag(n, std::move(edges));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad DAG json: ") + e.what());
    }
}

namespace detail {
// Leading '#' lines are provenance comments, except the #partition header
// the hypergraph and 4-partite formats consume themselves.
inline std::string strip_comment_lines(const std::string& text) {
    size_t pos = 0;
    while (pos < text.size() && text[pos] == '#') {
        const size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) return "";
        pos = eol + 1;
    }
    return text.substr(pos);
}
}  // namespace detail

inline Dag dag_from_text(const std::string& raw) {
    const std::string text = detail::strip_comment_lines(raw);
    std::istringstream in(text);
    int n, m;
    if (!(in >> n >> m)) throw ParseError("DAG header must be 'n m'");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw ParseError("truncated DAG edge list");
        edges.emplace_back(u, v);
    }
    return Dag(n, std::move(edges));
}

inline Dag parse_dag(const std::string& content) {
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') {
            try {
                return dag_from_json(json::parse(content));
            } catch (const json::exception& e) {
                throw ParseError(std::string("bad DAG json: ") + e.what());
            }
        }
        break;
    }
    return dag_from_text(content);
}

inline Dag load_dag(const std::string& path) { return parse_dag(read_file(path)); }

// ---- Boolean matrix: "rows cols" then rows of 0/1 characters ----

inline std::string bool_matrix_to_text(const BoolMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) out << (m.get(i, j) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

inline BoolMatrix bool_matrix_from_text(const std::string& raw) {
    const std::string text = detail::strip_comment_lines(raw);
    std::istringstream in(text);
    int rows, cols;
    if (!(in >> rows >> cols)) throw ParseError("matrix header must be 'rows cols'");
    BoolMatrix m(rows, cols);
    std::string line;
    for (int i = 0; i < rows; ++i) {
        if (!(in >> line) || static_cast<int>(line.size()) != cols)
            throw ParseError("matrix row " + std::to_string(i) + " malformed");
        for (int j = 0; j < cols; ++j) {
            if (line[j] == '1')
                m.set(i, j, true);
            else if (line[j] != '0')
                throw ParseError("matrix entries must be 0 or 1");
        }
    }
    return m;
}

inline BoolMatrix load_bool_matrix(const std::string& path) {
    return bool_matrix_from_text(read_file(path));
}

// ---- Hypergraph: optional "#partition A=4 B=4 ..." header, "n m", triples ----

inline std::string hypergraph_to_text(const Hypergraph3& h) {
    std::ostringstream out;
    if (h.partition()) {
        out << "#partition";
        for (const auto& [name, size] : h.partition()->groups) out << ' ' << name << '=' << size;
        out << '\n';
    }
    out << h.n() << ' ' << h.edges().size() << '\n';
    for (const auto& e : h.edges()) out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
    return out.str();
}

inline Hypergraph3 hypergraph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::optional<VertexPartition> partition;
    std::string first;
    std::getline(in, first);
    if (first.rfind("#partition", 0) == 0) {
        VertexPartition p;
        std::istringstream head(first.substr(10));
        std::string item;
        while (head >> item) {
            const auto eq = item.find('=');
            if (eq != 1 || item.size() < 3) throw ParseError("bad partition item: " + item);
            p.groups.emplace_back(item[0], std::stoi(item.substr(2)));
        }
        partition = std::move(p);
    } else {
        in.clear();
        in.seekg(0);
    }
    int n, m;
    if (!(in >> n >> m)) throw ParseError("hypergraph header must be 'n m'");
    std::vector<std::array<int, 3>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int a, b, c;
        if (!(in >> a >> b >> c)) throw ParseError("truncated hyperedge list");
        edges.push_back({a, b, c});
    }
    return Hypergraph3(n, std::move(edges), std::move(partition));
}

inline Hypergraph3 load_hypergraph(const std::string& path) {
    return hypergraph_from_text(read_file(path));
}

// ---- 4-partite graph: "#partition A=.. B=.. C=.. D=..", "n m", edges ----

inline std::string fourpartite_to_text(const FourPartiteGraph& g) {
    std::ostringstream out;
    const auto& s = g.part_sizes();
    out << "#partition A=" << s[0] << " B=" << s[1] << " C=" << s[2] << " D=" << s[3] << '\n';
    out << g.n() << ' ' << g.edges().size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

inline FourPartiteGraph fourpartite_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string first;
    std::getline(in, first);
    if (first.rfind("#partition", 0) != 0)
        throw NotFourPartite("4-partite file needs a #partition header");
    std::array<int, 4> sizes{};
    std::istringstream head(first.substr(10));
    std::string item;
    int idx = 0;
    while (head >> item) {
        if (idx >= 4 || item.size() < 3 || item[1] != '=')
            throw ParseError("bad partition item: " + item);
        sizes[idx++] = std::stoi(item.substr(2));
    }
    if (idx != 4) throw NotFourPartite("expected exactly four parts");
    int n, m;
    if (!(in >> n >> m)) throw ParseError("graph header must be 'n m'");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw ParseError("truncated edge list");
        edges.emplace_back(u, v);
    }
    return FourPartiteGraph(sizes, std::move(edges));
}

inline FourPartiteGraph load_fourpartite(const std::string& path) {
    return fourpartite_from_text(read_file(path));
}

// ---- Candidate matrix: {"n":..., "w":[[id|null,...],...]} ----

inline json candidates_to_json(const CandidateMatrix& c) {
    json rows = json::array();
    for (int u = 0; u < c.n; ++u) {
        json row = json::array();
        for (int v = 0; v < c.n; ++v) {
            const int w = c.get(u, v);
            if (w == CandidateMatrix::kNone)
                row.push_back(nullptr);
            else
                row.push_back(w);
        }
        rows.push_back(std::move(row));
    }
    return {{"n", c.n}, {"w", rows}};
}

inline CandidateMatrix candidates_from_json(const json& j) {
    try {
        CandidateMatrix c(j.at("n").get<int>());
        const auto& rows = j.at("w");
        for (int u = 0; u < c.n; ++u)
            for (int v = 0; v < c.n; ++v) {
                const auto& cell = rows.at(u).at(v);
                c.set(u, v, cell.is_null() ? CandidateMatrix::kNone : cell.get<int>());
            }
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad candidate json: ") + e.what());
    }
}

inline CandidateMatrix load_candidates(const std::string& path) {
    try {
        return candidates_from_json(json::parse(read_file(path)));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad candidate json: ") + e.what());
    }
}

// ---- Reports ----

inline json report_to_json(const LcaReport& r) {
    json data = json::array();
    switch (r.kind) {
        case LcaReport::Kind::Counts:
            for (int u = 0; u < r.n; ++u) {
                json row = json::array();
                for (int v = 0; v < r.n; ++v) row.push_back(r.counts.at(u, v));
                data.push_back(std::move(row));
            }
            return {{"kind", "counts"}, {"n", r.n}, {"data", data}};
        case LcaReport::Kind::Lists:
            for (int u = 0; u < r.n; ++u) {
                json row = json::array();
                for (int v = 0; v < r.n; ++v) row.push_back(r.lists[u][v]);
                data.push_back(std::move(row));
            }
            return {{"kind", "lists"}, {"n", r.n}, {"data", data}};
        case LcaReport::Kind::Decision:
        default:
            for (int u = 0; u < r.n; ++u) {
                json row = json::array();
                for (int v = 0; v < r.n; ++v) row.push_back(r.decision.get(u, v) ? 1 : 0);
                data.push_back(std::move(row));
            }
            return {{"kind", "decision"}, {"n", r.n}, {"data", data}};
    }
}

inline std::string counts_to_csv(const IntMatrix& counts) {
    std::ostringstream out;
    for (int u = 0; u < counts.rows(); ++u) {
        for (int v = 0; v < counts.cols(); ++v) {
            if (v) out << ',';
            out << counts.at(u, v);
        }
        out << '\n';
    }
    return out.str();
}

inline json exact_report_to_json(const ExactReport& r) {
    json data = json::array();
    for (int u = 0; u < r.n; ++u) {
        json row = json::array();
        for (int v = 0; v < r.n; ++v) {
            if (!r.found(u, v)) {
                row.push_back(nullptr);
            } else if (r.arity == 1) {
                row.push_back(json::array({r.lca1(u, v)}));
            } else {
                row.push_back(json::array({r.lca1(u, v), r.lca2(u, v)}));
            }
        }
        data.push_back(std::move(row));
    }
    return {{"kind", r.arity == 1 ? "exact1" : "exact2"}, {"n", r.n}, {"data", data}};
}

inline json witness_to_json(const WitnessMatrix& w) {
    json data = json::array();
    for (int i = 0; i < w.n; ++i) {
        json row = json::array();
        for (int j = 0; j < w.n; ++j) {
            const int k = w.get(i, j);
            if (k == WitnessMatrix::kNone)
                row.push_back(nullptr);
            else
                row.push_back(k);
        }
        data.push_back(std::move(row));
    }
    return {{"kind", "witness"}, {"n", w.n}, {"data", data}};
}

// CSV witness/latest exports use -1 where JSON uses null.
inline std::string witness_to_csv(const WitnessMatrix& w) {
    std::ostringstream out;
    for (int i = 0; i < w.n; ++i) {
        for (int j = 0; j < w.n; ++j) {
            if (j) out << ',';
            out << w.get(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace daglca
