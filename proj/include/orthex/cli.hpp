#pragma once

// Command-line surface: subcommand dispatch, JSON output, the bundled table
// export, and a plain-text rendering with the three-level diagram.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthex/classifier.hpp"
#include "orthex/parser.hpp"

namespace orthex::cli {

using nlohmann::json;

struct Args {
    std::string subcommand;
    std::string file;
    bool verify = false;
    bool text = false;
    bool assume_maximal = false;
    bool list = false;
    std::optional<std::string> show;
    std::optional<std::string> export_path;
    std::uint64_t seed = 1;
    int samples = 3;
    int dim_cap = 256;
};

inline std::optional<Args> parse_args(const std::vector<std::string>& argv, std::ostream& err) {
    Args a;
    if (const char* env = std::getenv("ORTHEX_DIM_CAP")) a.dim_cap = std::atoi(env);
    if (argv.empty()) {
        err << "usage: orthex <classify|oracle|castle|factorize|tree-check|tables> ...\n";
        return std::nullopt;
    }
    a.subcommand = argv[0];
    for (std::size_t i = 1; i < argv.size(); ++i) {
        const std::string& s = argv[i];
        auto next = [&](const char* what) -> std::optional<std::string> {
            if (i + 1 >= argv.size()) {
                err << "missing value after " << what << "\n";
                return std::nullopt;
            }
            return argv[++i];
        };
        if (s == "--verify") {
            a.verify = true;
        } else if (s == "--text") {
            a.text = true;
        } else if (s == "--assume-maximal") {
            a.assume_maximal = true;
        } else if (s == "--list") {
            a.list = true;
        } else if (s == "--seed") {
            auto v = next("--seed");
            if (!v) return std::nullopt;
            a.seed = std::strtoull(v->c_str(), nullptr, 10);
        } else if (s == "--samples") {
            auto v = next("--samples");
            if (!v) return std::nullopt;
            a.samples = std::atoi(v->c_str());
        } else if (s == "--dim-cap") {
            auto v = next("--dim-cap");
            if (!v) return std::nullopt;
            a.dim_cap = std::atoi(v->c_str());
        } else if (s == "--show") {
            auto v = next("--show");
            if (!v) return std::nullopt;
            a.show = *v;
        } else if (s == "--export") {
            auto v = next("--export");
            if (!v) return std::nullopt;
            a.export_path = *v;
        } else if (!s.empty() && s[0] == '-') {
            err << "unknown flag " << s << "\n";
            return std::nullopt;
        } else if (a.file.empty()) {
            a.file = s;
        } else {
            err << "unexpected argument " << s << "\n";
            return std::nullopt;
        }
    }
    return a;
}

inline ClassifyOptions options_of(const Args& a) {
    ClassifyOptions o;
    o.verify = a.verify;
    o.seed = a.seed;
    o.samples = a.samples;
    o.limits.dim_cap = a.dim_cap;
    o.assume_maximal = a.assume_maximal;
    return o;
}

inline json oracle_json(const OracleVerdict& v) {
    return json{{"g_orbit_dim", v.g_orbit_dim},
                {"h_orbit_dim", v.h_orbit_dim},
                {"codim", v.codim},
                {"exceptional", v.exceptional},
                {"seed", v.seed},
                {"samples", v.samples}};
}

inline json verdict_json(const Verdict& v) {
    json j;
    j["verdict"] = v.exceptional == Ternary::yes
                       ? "exceptional"
                       : (v.exceptional == Ternary::no ? "not_exceptional" : "unknown");
    j["nu"] = v.nu ? json(*v.nu) : json(nullptr);
    j["matched"] = v.matched.empty() ? json(nullptr) : json(v.matched);
    j["route"] = v.route;
    j["oracle"] = v.oracle ? oracle_json(*v.oracle) : json(nullptr);
    j["warnings"] = v.warnings;
    return j;
}

// Plain-text rendering with the three-level diagram: H factors over their
// targets, the G factors, then one row per summand marking the factors it
// touches.
inline std::string render_text(const TripleSpec& t, const Verdict& v) {
    std::ostringstream out;
    const std::size_t nf = t.G.factors.size();
    std::vector<std::string> gcol(nf);
    for (std::size_t i = 0; i < nf; ++i) gcol[i] = to_string(t.G.factors[i]);
    std::vector<std::string> hcol(nf);
    for (std::size_t hi = 0; hi < t.H.factors.size(); ++hi) {
        for (const auto& e : t.emb.entries) {
            bool mine = false;
            for (int x : e.h) mine = mine || x == static_cast<int>(hi);
            if (!mine) continue;
            std::string label;
            switch (e.kind) {
                case EmbedKind::Id: label = ""; break;
                case EmbedKind::Diag: label = "diag"; break;
                case EmbedKind::Spin: label = "spin"; break;
                case EmbedKind::SplitSum: label = "split"; break;
                case EmbedKind::TensorPair: label = "tensor"; break;
                case EmbedKind::Lambda2: label = "phi2"; break;
                default: label = "phi1"; break;
            }
            std::string name = to_string(t.H.factors[hi]);
            if (!label.empty()) name += "/" + label;
            for (int g : e.g) {
                if (!hcol[g].empty()) hcol[g] += "&";
                hcol[g] += name;
            }
            break;
        }
    }
    std::vector<std::size_t> width(nf);
    for (std::size_t i = 0; i < nf; ++i)
        width[i] = std::max(hcol[i].size(), gcol[i].size()) + 3;
    auto row = [&](const std::string& head, const std::vector<std::string>& cells) {
        out << head;
        for (std::size_t i = 0; i < nf; ++i) {
            out << cells[i];
            out << std::string(width[i] - cells[i].size(), ' ');
        }
        out << "\n";
    };
    row("H:  ", hcol);
    std::vector<std::string> bars(nf);
    for (std::size_t i = 0; i < nf; ++i) bars[i] = hcol[i].empty() ? "" : "|";
    row("    ", bars);
    row("G:  ", gcol);
    for (const auto& s : t.V.summands) {
        std::vector<std::string> cells(nf);
        for (std::size_t i = 0; i < nf; ++i)
            if (s.acts(i)) cells[i] = print_weight_term(t.G.factors[i], s.slots[i], 1);
        for (auto& c : cells) {
            auto at = c.find('@');
            if (at != std::string::npos) c = c.substr(0, at);
        }
        std::string head = s.mult > 1 ? std::to_string(s.mult) + "x  " : "V:  ";
        row(head.size() == 4 ? head : head + " ", cells);
    }
    out << "verdict: "
        << (v.exceptional == Ternary::yes
                ? "exceptional"
                : (v.exceptional == Ternary::no ? "not exceptional" : "unknown"));
    if (v.nu) out << ", nu = " << *v.nu;
    if (!v.matched.empty()) out << ", diagram " << v.matched;
    out << " (route " << v.route << ")\n";
    if (v.oracle)
        out << "oracle: orbit dims " << v.oracle->h_orbit_dim << " (H) vs "
            << v.oracle->g_orbit_dim << " (G), codim " << v.oracle->codim << "\n";
    for (const auto& w : v.warnings) out << "note: " << w << "\n";
    return out.str();
}

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    auto parsed = parse_args(argv, err);
    if (!parsed) return 1;
    const Args& a = *parsed;

    auto read_doc = [&](SpecDocument& doc) -> bool {
        if (a.file.empty()) {
            err << "error: this subcommand needs an input file\n";
            return false;
        }
        std::ifstream in(a.file);
        if (!in) {
            err << "error: cannot open " << a.file << "\n";
            return false;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        doc = parse_spec(buf.str());
        return true;
    };

    try {
        if (a.subcommand == "classify") {
            SpecDocument doc;
            if (!read_doc(doc)) return 1;
            TripleSpec t = assemble_triple(doc);
            Verdict v = classify(t, options_of(a));
            if (a.text)
                out << render_text(t, v);
            else
                out << verdict_json(v).dump(2) << "\n";
            return v.exceptional == Ternary::unknown ? 2 : 0;
        }
        if (a.subcommand == "oracle") {
            SpecDocument doc;
            if (!read_doc(doc)) return 1;
            TripleSpec t = assemble_triple(doc);
            OracleVerdict v =
                is_exceptional_oracle(t, a.seed, a.samples, OracleLimits{a.dim_cap});
            json j = oracle_json(v);
            j["warnings"] = json::array();
            if (!is_orthogonal_module(t.G, t.V))
                j["warnings"].push_back(
                    "orbit equality certifies exceptionality of rational invariants "
                    "(Rosenlicht); the action is not orthogonal, hence possibly unstable");
            out << j.dump(2) << "\n";
            return 0;
        }
        if (a.subcommand == "castle") {
            SpecDocument doc;
            if (!read_doc(doc)) return 1;
            json j;
            std::string reduced_text;
            if (doc.H) {
                TripleSpec t = assemble_triple(doc);
                Big before = module_dim(t.G, t.V);
                TripleSpec r = castle_reduce(t);
                reduced_text = print_triple(r);
                j["module_dim_before"] = before.get_si();
                j["module_dim_after"] = module_dim(r.G, r.V).get_si();
            } else {
                TripleSpec t = assemble_triple(doc);  // H defaulted to G
                Big before = module_dim(t.G, t.V);
                auto [rg, rv] = castle_reduce(t.G, t.V);
                TripleSpec r;
                r.G = rg;
                r.H = rg;
                for (std::size_t gi = 0; gi < rg.factors.size(); ++gi)
                    r.emb.entries.push_back({EmbedKind::Id,
                                             {static_cast<int>(gi)},
                                             {static_cast<int>(gi)},
                                             {}});
                r.V = rv;
                reduced_text = print_triple(r);
                j["module_dim_before"] = before.get_si();
                j["module_dim_after"] = module_dim(rg, rv).get_si();
            }
            j["reduced"] = reduced_text;
            if (a.text)
                out << reduced_text;
            else
                out << j.dump(2) << "\n";
            return 0;
        }
        if (a.subcommand == "factorize") {
            SpecDocument doc;
            if (!read_doc(doc)) return 1;
            if (!doc.G || !doc.H || !doc.S) {
                err << "error: factorize needs G, H and S clauses\n";
                return 1;
            }
            GroupSpec g = detail::plain_group(*doc.G);
            if (g.factors.size() != 1) {
                err << "error: factorize expects a simple G\n";
                return 1;
            }
            Subalgebra h = assemble_subalgebra(*doc.H, g);
            Subalgebra s = assemble_subalgebra(*doc.S, g);
            json j;
            j["g"] = to_string(g.factors[0]);
            j["dim_precheck"] = h.dim() + s.dim() >= g.factors[0].dim();
            try {
                bool ok = is_factorization_simple(g.factors[0], h, s);
                j["factorization"] = ok;
                out << j.dump(2) << "\n";
                return 0;
            } catch (const StructurallyUndecidable& e) {
                // Fall back to the numeric rank checker when realizable.
                try {
                    TableORow row{g.factors[0], h, s};
                    bool ok = numeric_table_o_row_check(row, a.seed);
                    j["factorization"] = ok;
                    j["decided_by"] = "numeric";
                    out << j.dump(2) << "\n";
                    return 0;
                } catch (const std::exception&) {
                    j["factorization"] = nullptr;
                    j["warnings"] = {e.what()};
                    out << j.dump(2) << "\n";
                    return 2;
                }
            }
        }
        if (a.subcommand == "tree-check") {
            SpecDocument doc;
            if (!read_doc(doc)) return 1;
            if (!doc.tree) {
                err << "error: tree-check needs a TREE clause\n";
                return 1;
            }
            bool pred = yak_predicate(*doc.tree);
            bool oracle = sgp_projection_full(*doc.tree, a.seed, a.samples,
                                              OracleLimits{a.dim_cap});
            json j{{"predicate", pred}, {"projection_full", oracle}, {"agree", pred == oracle}};
            out << j.dump(2) << "\n";
            return 0;
        }
        if (a.subcommand == "tables") {
            auto entry_json = [](const DiagramEntry& e) {
                json j;
                j["id"] = e.id;
                j["summary"] = e.summary;
                j["nu"] = e.nu ? json(*e.nu) : json(nullptr);
                if (!e.nu_note.empty()) j["nu_note"] = e.nu_note;
                j["degrees"] = e.degrees;
                if (!e.side_conditions.empty()) j["side_conditions"] = e.side_conditions;
                if (e.min_param) j["min_param"] = e.min_param;
                return j;
            };
            if (a.show) {
                const DiagramEntry* e = find_diagram(*a.show);
                if (!e) {
                    err << "error: unknown diagram " << *a.show << "\n";
                    return 1;
                }
                out << entry_json(*e).dump(2) << "\n";
                return 0;
            }
            json all;
            all["version"] = 1;
            all["entries"] = json::array();
            for (const auto& e : diagram_table()) all["entries"].push_back(entry_json(e));
            if (a.export_path) {
                std::ofstream f(*a.export_path);
                if (!f) {
                    err << "error: cannot write " << *a.export_path << "\n";
                    return 1;
                }
                f << all.dump(2) << "\n";
                out << "wrote " << *a.export_path << "\n";
                return 0;
            }
            out << all.dump(2) << "\n";
            return 0;
        }
        err << "error: unknown subcommand '" << a.subcommand << "'\n";
        return 1;
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const SemanticError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const OracleError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace orthex::cli
