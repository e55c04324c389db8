#include "matpaint/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace matpaint {

namespace {

// non-comment, non-blank lines with trailing '#' comments stripped
std::vector<std::string> meaningful_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        out.push_back(line.substr(start));
    }
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool take_prefix(const std::string& line, const std::string& prefix, std::string& rest) {
    if (line.rfind(prefix, 0) != 0) return false;
    rest = line.substr(prefix.size());
    return true;
}

}  // namespace

Matroid parse_matroid(const std::string& text) {
    auto lines = meaningful_lines(text);
    if (lines.empty() || lines[0] != "matroid v1")
        fail(Errc::ParseError, "matroid file must start with 'matroid v1'");
    std::vector<std::string> elements;
    std::vector<std::vector<std::string>> circuits;
    bool saw_elements = false;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::string rest;
        if (take_prefix(lines[i], "elements:", rest)) {
            if (saw_elements) fail(Errc::ParseError, "duplicate elements line");
            elements = split_ws(rest);
            saw_elements = true;
        } else if (take_prefix(lines[i], "circuit:", rest)) {
            circuits.push_back(split_ws(rest));
        } else {
            fail(Errc::ParseError, "unexpected line '" + lines[i] + "'");
        }
    }
    if (!saw_elements) fail(Errc::ParseError, "missing elements line");
    return Matroid::from_circuit_labels(elements, circuits);
}

std::string serialize_matroid(const Matroid& m) {
    std::string out = "matroid v1\nelements:";
    for (const auto& l : m.ground().labels()) out += " " + l;
    out += "\n";
    for (Mask c : m.circuits()) {
        out += "circuit:";
        for (const auto& l : m.ground().labels_of(c)) out += " " + l;
        out += "\n";
    }
    return out;
}

Representation parse_matrix(const std::string& text) {
    auto lines = meaningful_lines(text);
    if (lines.empty()) fail(Errc::ParseError, "empty matrix file");
    std::string rest;
    if (!take_prefix(lines[0], "field:", rest))
        fail(Errc::ParseError, "matrix file must start with 'field:'");
    auto field_toks = split_ws(rest);
    if (field_toks.size() != 1) fail(Errc::ParseError, "field line needs one tag");
    Domain field = domain_from_name(field_toks[0]);
    if (!is_field(field)) fail(Errc::PartialFieldTag, "matrix files need a field tag");

    if (lines.size() < 2 || !take_prefix(lines[1], "cols:", rest))
        fail(Errc::ParseError, "matrix file needs a 'cols:' line");
    std::vector<std::string> col_labels = split_ws(rest);

    std::vector<std::vector<Value>> rows;
    for (size_t i = 2; i < lines.size(); ++i) {
        auto toks = split_ws(lines[i]);
        if (toks.size() != col_labels.size())
            fail(Errc::ParseError, "row " + std::to_string(i) + " has " +
                                       std::to_string(toks.size()) + " entries, expected " +
                                       std::to_string(col_labels.size()));
        std::vector<Value> row;
        for (const auto& t : toks) row.push_back(parse_value(field, t));
        rows.push_back(std::move(row));
    }
    std::vector<std::string> row_labels;
    for (size_t r = 0; r < rows.size(); ++r) row_labels.push_back("r" + std::to_string(r));
    std::vector<std::vector<Value>> cols(col_labels.size(),
                                         std::vector<Value>(rows.size(), zero(field)));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < col_labels.size(); ++c) cols[c][r] = rows[r][c];
    return make_representation(field, row_labels, col_labels, cols);
}

std::string serialize_matrix(const Representation& rep) {
    std::string out = std::string("field: ") + domain_name(rep.field) + "\ncols:";
    for (const auto& l : rep.ground.labels()) out += " " + l;
    out += "\n";
    for (int r = 0; r < rep.rows(); ++r) {
        for (int c = 0; c < rep.ground.size(); ++c) {
            if (c) out += " ";
            out += render(rep.entry(r, c));
        }
        out += "\n";
    }
    return out;
}

DirectedGraph parse_graph(const std::string& text) {
    auto lines = meaningful_lines(text);
    if (lines.empty() || lines[0] != "graph v1")
        fail(Errc::ParseError, "graph file must start with 'graph v1'");
    std::vector<std::string> vertices;
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::string rest;
        if (take_prefix(lines[i], "edge:", rest)) {
            auto toks = split_ws(rest);
            if (toks.size() != 3)
                fail(Errc::ParseError, "edge line needs 'edge: <label> <source> <target>'");
            edges.emplace_back(toks[0], toks[1], toks[2]);
            vertices.push_back(toks[1]);
            vertices.push_back(toks[2]);
        } else if (take_prefix(lines[i], "vertex:", rest)) {
            for (const auto& v : split_ws(rest)) vertices.push_back(v);
        } else {
            fail(Errc::ParseError, "unexpected line '" + lines[i] + "'");
        }
    }
    return DirectedGraph(vertices, edges);
}

std::string serialize_graph(const DirectedGraph& g) {
    std::string out = "graph v1\n";
    for (const auto& e : g.edges())
        out += "edge: " + e.label + " " + g.vertex(e.source) + " " + g.vertex(e.target) + "\n";
    return out;
}

Painting parse_painting(const Matroid& m, const std::string& text) {
    auto lines = meaningful_lines(text);
    if (lines.empty() || lines[0] != "painting v1")
        fail(Errc::ParseError, "painting file must start with 'painting v1'");
    std::string rest;
    if (lines.size() < 2 || !take_prefix(lines[1], "field:", rest))
        fail(Errc::ParseError, "painting file needs a 'field:' line");
    auto field_toks = split_ws(rest);
    if (field_toks.size() != 1) fail(Errc::ParseError, "field line needs one tag");
    Domain dom = domain_from_name(field_toks[0]);

    Painting p;
    p.dom = dom;
    p.circuit_values.assign(m.circuits().size(), {});
    p.cocircuit_values.assign(m.cocircuits().size(), {});

    for (size_t i = 2; i < lines.size(); ++i) {
        bool is_circuit = take_prefix(lines[i], "circuit ", rest);
        if (!is_circuit && !take_prefix(lines[i], "cocircuit ", rest))
            fail(Errc::ParseError, "unexpected line '" + lines[i] + "'");
        auto colon = rest.find(':');
        if (colon == std::string::npos) fail(Errc::ParseError, "missing ':' in '" + lines[i] + "'");
        std::vector<std::string> set_labels = split_ws(rest.substr(0, colon));
        Mask set = m.ground().mask_of(set_labels);

        const std::vector<Mask>& family = is_circuit ? m.circuits() : m.cocircuits();
        auto it = std::find(family.begin(), family.end(), set);
        if (it == family.end())
            fail(Errc::DomainMismatch, m.ground().render_set(set) + " is not a " +
                                           (is_circuit ? "circuit" : "cocircuit") +
                                           " of the matroid");
        size_t idx = size_t(it - family.begin());

        std::vector<Value> vals(size_t(popcount(set)), zero(dom));
        std::vector<char> seen(size_t(popcount(set)), 0);
        for (const auto& tok : split_ws(rest.substr(colon + 1))) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) fail(Errc::ParseError, "expected <element>=<value>, got '" + tok + "'");
            int e = m.ground().index_of(tok.substr(0, eq));
            if (!has_bit(set, e)) fail(Errc::ParseError, "element '" + tok.substr(0, eq) + "' outside the set");
            int pos = pos_in_mask(set, e);
            if (seen[size_t(pos)]) fail(Errc::ParseError, "duplicate value for '" + tok.substr(0, eq) + "'");
            seen[size_t(pos)] = 1;
            vals[size_t(pos)] = parse_value(dom, tok.substr(eq + 1));
        }
        for (char c : seen)
            if (!c) fail(Errc::ParseError, "missing value in '" + lines[i] + "'");
        auto& slot = is_circuit ? p.circuit_values[idx] : p.cocircuit_values[idx];
        if (!slot.empty()) fail(Errc::ParseError, "duplicate line for " + m.ground().render_set(set));
        slot = std::move(vals);
    }
    for (size_t i = 0; i < p.circuit_values.size(); ++i)
        if (p.circuit_values[i].empty())
            fail(Errc::DomainMismatch,
                 "painting misses circuit " + m.ground().render_set(m.circuits()[i]));
    for (size_t j = 0; j < p.cocircuit_values.size(); ++j)
        if (p.cocircuit_values[j].empty())
            fail(Errc::DomainMismatch,
                 "painting misses cocircuit " + m.ground().render_set(m.cocircuits()[j]));
    return p;
}

std::string serialize_painting(const Matroid& m, const Painting& p) {
    std::string out = "painting v1\nfield: ";
    out += domain_name(p.dom);
    out += "\n";
    auto emit = [&](const char* kind, const std::vector<Mask>& family,
                    const std::vector<std::vector<Value>>& values) {
        for (size_t i = 0; i < family.size(); ++i) {
            out += kind;
            for (const auto& l : m.ground().labels_of(family[i])) out += " " + l;
            out += ":";
            auto elems = mask_elements(family[i]);
            for (size_t k = 0; k < elems.size(); ++k)
                out += " " + m.ground().label(elems[k]) + "=" + render(values[i][k]);
            out += "\n";
        }
    };
    emit("circuit", m.circuits(), p.circuit_values);
    emit("cocircuit", m.cocircuits(), p.cocircuit_values);
    return out;
}

bool looks_like_matrix(const std::string& text) {
    auto lines = meaningful_lines(text);
    return !lines.empty() && lines[0].rfind("field:", 0) == 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::ParseError, "cannot write '" + path + "'");
    out << content;
}

}  // namespace matpaint
