// matpaint: exact matroid representability toolkit around circuit-cocircuit
// paintings. Exit codes: 0 success/verified, 1 property fails (witness
// printed), 2 budget exceeded, 3 internal consistency failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "matpaint/binary_suite.hpp"
#include "matpaint/corpus.hpp"
#include "matpaint/io.hpp"
#include "matpaint/minor_search.hpp"
#include "matpaint/painting.hpp"

using namespace matpaint;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInternal = 3;

long long env_budget(long long fallback) {
    const char* v = std::getenv("MATPAINT_BUDGET");
    if (!v) return fallback;
    try {
        return std::stoll(v);
    } catch (const std::exception&) {
        return fallback;
    }
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_axioms(const std::string& path, long long budget, bool as_json) {
    std::string text = read_file(path);
    Matroid m = parse_matroid(text);  // throws with witness on axiom violations
    ScrawlAxiomReport rep = m.check_scrawl_axioms(budget);
    json j{{"valid", true},
           {"elements", m.n()},
           {"rank", m.rank()},
           {"circuits", m.circuits().size()},
           {"cocircuits", m.cocircuits().size()},
           {"scrawl_axioms_pass", rep.pass},
           {"scrawl_count", rep.scrawl_count}};
    std::ostringstream out;
    out << "matroid ok: " << m.n() << " elements, rank " << m.rank() << ", "
        << m.circuits().size() << " circuits, " << m.cocircuits().size() << " cocircuits\n"
        << "scrawl axioms: " << (rep.pass ? "pass" : "FAIL " + rep.failure) << " ("
        << rep.scrawl_count << " scrawls)\n";
    if (!rep.pass) j["scrawl_failure"] = rep.failure;
    emit(as_json, j, out.str());
    return rep.pass ? kExitOk : kExitFail;
}

int cmd_check_binary(const std::string& path, std::vector<std::string> predicates, bool sweep,
                     bool as_json) {
    Matroid m = parse_matroid(read_file(path));
    BinaryReport rep = run_binary_suite(m, {}, m.bases().empty() ? std::optional<Mask>{}
                                                                 : std::optional<Mask>{m.bases().front()});
    json j;
    std::ostringstream out;
    bool any_selected = false;
    for (const auto& [name, r] : rep.results) {
        if (!predicates.empty() &&
            std::find(predicates.begin(), predicates.end(), name) == predicates.end())
            continue;
        any_selected = true;
        j[name] = {{"holds", r.holds}};
        if (!r.holds) j[name]["witness"] = r.witness;
        out << name << ": " << (r.holds ? "true" : "false");
        if (!r.holds) out << "  [" << r.witness << "]";
        out << "\n";
    }
    if (!any_selected) fail(Errc::BadParameters, "no known predicate selected");
    if (sweep) {
        bool agree = rep.all_agree();
        j["sweep_agree"] = agree;
        out << "sweep: " << (agree ? "all predicates agree" : "DISAGREEMENT (bug signal)") << "\n";
        emit(as_json, j, out.str());
        return agree ? kExitOk : kExitInternal;
    }
    emit(as_json, j, out.str());
    return kExitOk;
}

int cmd_paint(const std::string& path, std::string field_name, const std::string& out_path,
              bool as_json) {
    std::string text = read_file(path);
    std::optional<Representation> rep;
    if (looks_like_matrix(text)) {
        rep = parse_matrix(text);
        if (!field_name.empty() && domain_from_name(field_name) != rep->field)
            fail(Errc::BadParameters, "--field disagrees with the matrix file header");
    } else {
        Matroid m = parse_matroid(text);
        if (field_name.empty()) fail(Errc::BadParameters, "--field is required for matroid input");
        rep = brute_force_representable(m, domain_from_name(field_name));
        if (!rep) {
            emit(as_json, json{{"representable", false}},
                 "not representable over " + field_name + "\n");
            return kExitFail;
        }
    }
    PaintingResult pr = paint_from_representation(*rep);
    std::string doc = serialize_painting(pr.matroid, pr.painting);
    if (!out_path.empty()) write_file(out_path, doc);
    json j{{"representable", true},
           {"field", domain_name(pr.painting.dom)},
           {"circuits", pr.matroid.circuits().size()},
           {"cocircuits", pr.matroid.cocircuits().size()},
           {"verified", true}};
    emit(as_json, j, out_path.empty() ? doc : "painting written to " + out_path + "\n");
    return kExitOk;
}

int cmd_verify_painting(const std::string& matroid_path, const std::string& painting_path,
                        bool as_json) {
    Matroid m = parse_matroid(read_file(matroid_path));
    Painting p = parse_painting(m, read_file(painting_path));
    PaintingReport rep = verify_painting(m, p);
    json j{{"verified", rep.verified()}, {"pairs_checked", rep.pairs_checked}};
    std::ostringstream out;
    if (rep.verified()) {
        out << "verified: all " << rep.pairs_checked << " circuit-cocircuit pairs sum to zero\n";
    } else {
        out << "FAILED on " << rep.failures.size() << " pairs:\n";
        json fails = json::array();
        for (const auto& f : rep.failures) {
            out << "  circuit " << m.ground().render_set(m.circuits()[size_t(f.circuit_idx)])
                << " x cocircuit " << m.ground().render_set(m.cocircuits()[size_t(f.cocircuit_idx)])
                << " -> " << render(f.sum) << "\n";
            fails.push_back({{"circuit", m.ground().render_set(m.circuits()[size_t(f.circuit_idx)])},
                             {"cocircuit", m.ground().render_set(m.cocircuits()[size_t(f.cocircuit_idx)])},
                             {"sum", render(f.sum)}});
        }
        j["failures"] = fails;
    }
    emit(as_json, j, out.str());
    return rep.verified() ? kExitOk : kExitFail;
}

int cmd_find_minor(const std::string& path, const std::string& target, bool as_json) {
    Matroid m = parse_matroid(read_file(path));
    Matroid n = catalog_matroid(target);
    auto w = has_minor_isomorphic(m, n);
    if (!w) {
        emit(as_json, json{{"found", false}}, "none\n");
        return kExitFail;
    }
    std::ostringstream out;
    out << "contract: " << m.ground().render_set(w->spec.contract) << "\n"
        << "delete: " << m.ground().render_set(w->spec.remove) << "\n";
    json bij = json::object();
    out << "bijection:";
    for (const auto& [from, to] : w->bijection) {
        out << " " << from << "->" << to;
        bij[from] = to;
    }
    out << "\n";
    json j{{"found", true},
           {"contract", m.ground().render_set(w->spec.contract)},
           {"delete", m.ground().render_set(w->spec.remove)},
           {"bijection", bij}};
    emit(as_json, j, out.str());
    return kExitOk;
}

int cmd_sign_graph(const std::string& path, const std::string& out_path, bool as_json) {
    DirectedGraph g = parse_graph(read_file(path));
    GraphSigning s = graph_signing(g);  // verification built in
    std::string doc = serialize_painting(s.matroid, s.signing);
    if (!out_path.empty()) write_file(out_path, doc);
    json j{{"verified", true},
           {"circuits", s.matroid.circuits().size()},
           {"bonds", s.matroid.cocircuits().size()}};
    std::ostringstream out;
    out << "signing verified over Z: " << s.matroid.circuits().size() << " circuits x "
        << s.matroid.cocircuits().size() << " bonds\n";
    emit(as_json, j, (out_path.empty() ? doc : out.str()));
    return kExitOk;
}

int cmd_equiv(const std::string& matroid_path, const std::string& p1_path,
              const std::string& p2_path, bool as_json) {
    Matroid m = parse_matroid(read_file(matroid_path));
    Painting p1 = parse_painting(m, read_file(p1_path));
    Painting p2 = parse_painting(m, read_file(p2_path));
    EquivalenceWitness w = equivalence_witness_f3(m, p1, p2);
    std::ostringstream out;
    json jx = json::object(), jo = json::object(), jb = json::object();
    out << "equivalent; witness (phi = identity):\n";
    for (int e = 0; e < m.n(); ++e) {
        out << "  x(" << m.ground().label(e) << ") = " << render(w.x_element[size_t(e)]) << "\n";
        jx[m.ground().label(e)] = render(w.x_element[size_t(e)]);
    }
    for (size_t i = 0; i < m.circuits().size(); ++i) {
        out << "  x(circuit " << m.ground().render_set(m.circuits()[i])
            << ") = " << render(w.x_circuit[i]) << "\n";
        jo[m.ground().render_set(m.circuits()[i])] = render(w.x_circuit[i]);
    }
    for (size_t j = 0; j < m.cocircuits().size(); ++j) {
        out << "  x(cocircuit " << m.ground().render_set(m.cocircuits()[j])
            << ") = " << render(w.x_cocircuit[j]) << "\n";
        jb[m.ground().render_set(m.cocircuits()[j])] = render(w.x_cocircuit[j]);
    }
    emit(as_json, json{{"equivalent", true}, {"x_element", jx}, {"x_circuit", jo}, {"x_cocircuit", jb}},
         out.str());
    return kExitOk;
}

int cmd_corpus(const std::string& dir, unsigned long long seed, long long budget, bool as_json) {
    CorpusOptions opts;
    opts.seed = seed;
    std::vector<CorpusEntry> entries = standard_corpus(opts);
    if (!dir.empty()) {
        // extra fixtures from a directory of .matroid files, sorted by name
        std::vector<std::string> files;
        for (const auto& entry : std::filesystem::directory_iterator(dir))
            if (entry.path().extension() == ".matroid") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        for (const auto& f : files)
            entries.push_back({std::filesystem::path(f).stem().string(),
                               parse_matroid(read_file(f)), std::nullopt});
    }
    (void)budget;

    json rows = json::array();
    std::ostringstream out;
    out << "name              n  rank  circ  agree  binary  oracle  ternary  signing  paint\n";
    int bad = 0;
    for (const auto& entry : entries) {
        CorpusRow row = evaluate_corpus_entry(entry);
        if (!row.ok()) ++bad;
        char line[160];
        std::snprintf(line, sizeof line, "%-16s %2d  %4d  %4d  %5s  %6s  %6s  %7s  %7s  %5s\n",
                      row.name.c_str(), row.n, row.rank, row.circuits,
                      row.predicates_agree ? "yes" : "NO", row.binary ? "yes" : "no",
                      row.binary_oracle_match ? "yes" : "NO", row.ternary_match ? "yes" : "NO",
                      row.signing_matches_oracles ? "yes" : "NO", row.paint_roundtrip ? "yes" : "NO");
        out << line;
        rows.push_back({{"name", row.name},
                        {"n", row.n},
                        {"rank", row.rank},
                        {"circuits", row.circuits},
                        {"predicates_agree", row.predicates_agree},
                        {"binary", row.binary},
                        {"binary_oracle_match", row.binary_oracle_match},
                        {"ternary_match", row.ternary_match},
                        {"signing_matches_oracles", row.signing_matches_oracles},
                        {"paint_roundtrip", row.paint_roundtrip}});
    }
    out << (bad == 0 ? "all " + std::to_string(entries.size()) + " entries consistent\n"
                     : std::to_string(bad) + " of " + std::to_string(entries.size()) +
                           " entries INCONSISTENT\n");
    emit(as_json, json{{"entries", rows}, {"inconsistent", bad}}, out.str());
    return bad == 0 ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matroid representability toolkit (circuit-cocircuit paintings)"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string file, out_path, field, target, dir = "", p1, p2, matroid_file;
    long long budget = env_budget(1 << 12);
    std::vector<std::string> predicates;
    bool sweep = false;
    unsigned long long seed = 42;

    auto* axioms = app.add_subcommand("axioms", "validate circuit axioms and scrawl axioms");
    axioms->add_option("file", file)->required();
    axioms->add_option("--budget", budget, "scrawl enumeration budget (subsets)");

    auto* checkb = app.add_subcommand("check-binary", "run the nine binary characterizations");
    checkb->add_option("file", file)->required();
    checkb->add_option("--predicates", predicates, "subset to run (p1..p10)")->delimiter(',');
    checkb->add_flag("--sweep", sweep, "assert mutual agreement (exit 3 on disagreement)");

    auto* paint = app.add_subcommand("paint", "construct a verified painting");
    paint->add_option("file", file)->required();
    paint->add_option("--field", field, "gf2|gf3|gf4 (required for matroid input)");
    paint->add_option("--out", out_path, "write the painting file here");

    auto* verify = app.add_subcommand("verify-painting", "check eq. sums for every pair");
    verify->add_option("matroid", matroid_file)->required();
    verify->add_option("painting", file)->required();

    auto* findm = app.add_subcommand("find-minor", "search for a catalog minor");
    findm->add_option("file", file)->required();
    findm->add_option("--target", target, "u{k}_{n} | fano | fano_dual")->required();

    auto* sign = app.add_subcommand("sign-graph", "orientation signing of a graph's cycle matroid");
    sign->add_option("file", file)->required();
    sign->add_option("--out", out_path, "write the signing here");

    auto* equiv = app.add_subcommand("equiv", "gf3 painting equivalence witness");
    equiv->add_option("matroid", matroid_file)->required();
    equiv->add_option("p1", p1)->required();
    equiv->add_option("p2", p2)->required();

    auto* corpus = app.add_subcommand("corpus", "cross-validation sweep over the corpus");
    corpus->add_option("--dir", dir, "directory of extra .matroid fixtures");
    corpus->add_option("--seed", seed, "random corpus seed");
    corpus->add_option("--budget", budget, "oracle budget override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*axioms) return cmd_axioms(file, budget, as_json);
        if (*checkb) return cmd_check_binary(file, predicates, sweep, as_json);
        if (*paint) return cmd_paint(file, field, out_path, as_json);
        if (*verify) return cmd_verify_painting(matroid_file, file, as_json);
        if (*findm) return cmd_find_minor(file, target, as_json);
        if (*sign) return cmd_sign_graph(file, out_path, as_json);
        if (*equiv) return cmd_equiv(matroid_file, p1, p2, as_json);
        if (*corpus) return cmd_corpus(dir, seed, budget, as_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == Errc::TooLarge) return kExitBudget;
        return e.internal_consistency() ? kExitInternal : kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
