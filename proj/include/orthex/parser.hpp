#pragma once

// The triple-spec input language: a line-oriented format with group,
// embedding, module, subalgebra and tree clauses, plus the printer the
// round-trip guarantee is stated against.
//
//   # comment
//   G = so(8) * so(3) * torus(1)
//   H = so(7)[spin -> 1] * so(3)[id -> 2]
//   V = phi(1)@1 (x) phi(1)@2 + 2 * phi(3)@1 + triv charge(1,-1)
//   S = so(7)[phi1 -> 1]
//   TREE: 0:1 1:2 2:inf ; edges 0-1 1-2

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthex/factorization.hpp"
#include "orthex/group.hpp"
#include "orthex/tree.hpp"

namespace orthex {

struct SyntaxError : std::runtime_error {
    int line, column;
    SyntaxError(int l, int c, const std::string& what)
        : std::runtime_error("syntax error at " + std::to_string(l) + ":" + std::to_string(c) +
                             ": " + what),
          line(l),
          column(c) {}
};

struct SemanticError : std::runtime_error {
    explicit SemanticError(const std::string& what)
        : std::runtime_error("semantic error: " + what) {}
};

// One parsed H-side factor with its embedding clause.
struct FactorDecl {
    GroupFactor factor;
    std::string label;         // id, phi1, spin, phi2, split, tensor, diag (empty for G side)
    bool dual = false;         // label carried a trailing '*'
    std::vector<int> targets;  // 1-based target indices
};

struct TorusDecl {
    int rank = 0;
    std::vector<std::vector<long>> map_columns;  // for H-side tori
};

struct GroupDecl {
    std::vector<FactorDecl> factors;
    TorusDecl torus;
};

struct SpecDocument {
    std::optional<GroupDecl> G, H, S;
    std::optional<ModuleSpec> V_raw;  // slots resolved against G during assembly
    std::vector<std::vector<std::pair<int, Weight>>> summand_parts;  // (factor idx, weight)
    std::vector<std::vector<long>> summand_charges;
    std::vector<long> summand_mults;
    std::optional<WeightedTree> tree;
};

namespace detail {

class LineScanner {
public:
    LineScanner(const std::string& text, int line) : s_(text), line_(line) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size() || s_[pos_] == '#';
    }
    int column() const { return static_cast<int>(pos_) + 1; }

    [[noreturn]] void fail(const std::string& what) { throw SyntaxError(line_, column(), what); }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    // The tensor sign (x) needs lookahead past a parenthesis.
    bool try_consume_tensor() {
        skip_ws();
        if (pos_ + 2 < s_.size() && s_[pos_] == '(' && s_[pos_ + 1] == 'x' &&
            s_[pos_ + 2] == ')') {
            pos_ += 3;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "'");
    }
    bool try_keyword(const std::string& kw) {
        skip_ws();
        if (s_.compare(pos_, kw.size(), kw) == 0) {
            std::size_t after = pos_ + kw.size();
            if (after >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[after]))) {
                pos_ = after;
                return true;
            }
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("expected an identifier");
        return s_.substr(start, pos_ - start);
    }
    long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_ || (pos_ - start == 1 && !std::isdigit(static_cast<unsigned char>(
                                                       s_[start]))))
            fail("expected an integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

private:
    std::string s_;
    std::size_t pos_ = 0;
    int line_;
};

inline GroupFactor parse_factor_name(LineScanner& sc) {
    std::string name = sc.ident();
    sc.expect('(');
    long n = sc.integer();
    sc.expect(')');
    GroupFactor f;
    if (name == "so")
        f = {Pres::SO, static_cast<int>(n)};
    else if (name == "sl")
        f = {Pres::SL, static_cast<int>(n)};
    else if (name == "sp")
        f = {Pres::SP, static_cast<int>(n)};
    else if (name == "g" && n == 2)
        f = {Pres::G2, 7};
    else
        sc.fail("unknown group name '" + name + "'");
    if (!valid(f)) throw SemanticError("invalid factor " + name + "(" + std::to_string(n) + ")");
    return f;
}

inline GroupDecl parse_group_line(LineScanner& sc) {
    GroupDecl g;
    sc.expect('=');
    bool first = true;
    while (true) {
        if (!first && !sc.try_consume('*')) break;
        first = false;
        if (sc.try_keyword("torus")) {
            sc.expect('(');
            long r = sc.integer();
            sc.expect(')');
            if (r < 1) throw SemanticError("torus rank must be positive");
            int base = g.torus.rank;
            g.torus.rank += static_cast<int>(r);
            if (sc.try_consume('[')) {
                std::string kw = sc.ident();
                if (kw != "map") sc.fail("expected 'map' in a torus clause");
                sc.expect('-');
                sc.expect('>');
                for (long k = 0; k < r; ++k) {
                    if (k > 0) sc.expect(',');
                    sc.expect('(');
                    std::vector<long> col;
                    col.push_back(sc.integer());
                    while (sc.try_consume(',')) col.push_back(sc.integer());
                    sc.expect(')');
                    g.torus.map_columns.push_back(std::move(col));
                }
                sc.expect(']');
            } else {
                for (long k = 0; k < r; ++k) g.torus.map_columns.push_back({});
            }
            (void)base;
            continue;
        }
        FactorDecl d;
        d.factor = parse_factor_name(sc);
        if (sc.try_consume('[')) {
            std::string label = sc.ident();
            // phi1 / phi2 arrive as "phi" followed by the digit.
            if (label == "phi") {
                long k = sc.integer();
                label += std::to_string(k);
            }
            if (sc.try_consume('*')) d.dual = true;
            d.label = label;
            sc.expect('-');
            sc.expect('>');
            d.targets.push_back(static_cast<int>(sc.integer()));
            while (sc.try_consume(',')) d.targets.push_back(static_cast<int>(sc.integer()));
            sc.expect(']');
        }
        g.factors.push_back(std::move(d));
        if (sc.at_end()) break;
    }
    return g;
}

inline void parse_module_line(LineScanner& sc, SpecDocument& doc) {
    sc.expect('=');
    while (true) {
        std::vector<std::pair<int, Weight>> parts;
        std::vector<long> charges;
        long mult = 1;
        // optional multiplicity prefix
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            mult = sc.integer();
            sc.expect('*');
            if (mult < 1) throw SemanticError("multiplicity must be positive");
        }
        bool trivial = false;
        if (sc.try_keyword("triv")) {
            trivial = true;
        } else {
            while (true) {
                std::string kind = sc.ident();
                Weight w;
                bool raw = false;
                long k = 0;
                if (kind == "phi") {
                    sc.expect('(');
                    k = sc.integer();
                    sc.expect(')');
                } else if (kind == "w") {
                    sc.expect('(');
                    w.push_back(sc.integer());
                    while (sc.try_consume(',')) w.push_back(sc.integer());
                    sc.expect(')');
                    raw = true;
                } else {
                    sc.fail("expected 'phi', 'w' or 'triv'");
                }
                sc.expect('@');
                long at = sc.integer();
                if (raw)
                    parts.push_back({static_cast<int>(at), w});
                else
                    parts.push_back({static_cast<int>(at), Weight{-(k + 1)}});  // resolved later
                if (!sc.try_consume_tensor()) break;
            }
        }
        if (sc.try_keyword("charge")) {
            sc.expect('(');
            charges.push_back(sc.integer());
            while (sc.try_consume(',')) charges.push_back(sc.integer());
            sc.expect(')');
        }
        (void)trivial;
        doc.summand_parts.push_back(std::move(parts));
        doc.summand_charges.push_back(std::move(charges));
        doc.summand_mults.push_back(mult);
        if (!sc.try_consume('+')) break;
    }
    if (!sc.at_end()) sc.fail("trailing input after module clause");
}

inline WeightedTree parse_tree_line(LineScanner& sc) {
    WeightedTree t;
    sc.expect(':');
    std::map<long, long> weights;
    while (!sc.at_end() && sc.peek() != ';') {
        long idx = sc.integer();
        sc.expect(':');
        long w;
        if (sc.try_keyword("inf"))
            w = WeightedTree::infinite;
        else
            w = sc.integer();
        weights[idx] = w;
    }
    if (weights.empty()) sc.fail("tree needs at least one vertex");
    long max_idx = weights.rbegin()->first;
    t.weights.assign(max_idx + 1, 0);
    for (auto [i, w] : weights) t.weights[i] = w;
    for (long i = 0; i <= max_idx; ++i)
        if (!weights.count(i)) throw SemanticError("tree vertex " + std::to_string(i) + " missing");
    sc.expect(';');
    if (!sc.try_keyword("edges")) sc.fail("expected 'edges'");
    while (!sc.at_end()) {
        long a = sc.integer();
        sc.expect('-');
        long b = sc.integer();
        t.edges.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
    return t;
}

}  // namespace detail

inline SpecDocument parse_spec(const std::string& text) {
    SpecDocument doc;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        detail::LineScanner sc(raw, lineno);
        if (sc.at_end()) continue;
        if (sc.try_keyword("TREE")) {
            doc.tree = detail::parse_tree_line(sc);
            continue;
        }
        std::string head = sc.ident();
        if (head == "G")
            doc.G = detail::parse_group_line(sc);
        else if (head == "H")
            doc.H = detail::parse_group_line(sc);
        else if (head == "S")
            doc.S = detail::parse_group_line(sc);
        else if (head == "V")
            detail::parse_module_line(sc, doc);
        else
            sc.fail("unknown clause '" + head + "'");
    }
    return doc;
}

namespace detail {

inline GroupSpec plain_group(const GroupDecl& d) {
    GroupSpec g;
    for (const auto& f : d.factors) g.factors.push_back(f.factor);
    g.torus_rank = d.torus.rank;
    return g;
}

inline EmbedKind kind_of_label(const std::string& label, const GroupFactor& h,
                               const GroupFactor& g) {
    if (label == "id") return EmbedKind::Id;
    if (label == "diag") return EmbedKind::Diag;
    if (label == "spin") return EmbedKind::Spin;
    if (label == "split") return EmbedKind::SplitSum;
    if (label == "tensor") return EmbedKind::TensorPair;
    if (label == "phi2") return EmbedKind::Lambda2;
    if (label == "phi1") return h.n == g.n ? EmbedKind::DefiningSub : EmbedKind::VectorPad;
    throw SemanticError("unknown embedding label '" + label + "'");
}

}  // namespace detail

// Assembles the classify/oracle input from a parsed document; H defaults to
// a copy of G when absent.
inline TripleSpec assemble_triple(const SpecDocument& doc) {
    if (!doc.G) throw SemanticError("document has no G clause");
    TripleSpec t;
    t.G = detail::plain_group(*doc.G);

    if (doc.H) {
        t.H = detail::plain_group(*doc.H);
        // Group tensor-labeled factors by target; everything else is one
        // entry per factor.
        std::map<int, EmbedEntry> tensor_entries;
        for (std::size_t hi = 0; hi < doc.H->factors.size(); ++hi) {
            const FactorDecl& d = doc.H->factors[hi];
            if (d.label.empty())
                throw SemanticError("H factor " + std::to_string(hi + 1) +
                                    " needs an embedding clause");
            for (int tgt : d.targets)
                if (tgt < 1 || tgt > static_cast<int>(t.G.factors.size()))
                    throw SemanticError("embedding target " + std::to_string(tgt) +
                                        " out of range");
            EmbedKind kind = detail::kind_of_label(
                d.label, d.factor, t.G.factors[d.targets.empty() ? 0 : d.targets[0] - 1]);
            if (kind == EmbedKind::TensorPair) {
                if (d.targets.size() != 1)
                    throw SemanticError("tensor clauses name exactly one target");
                EmbedEntry& e = tensor_entries
                                    .try_emplace(d.targets[0], EmbedEntry{kind, {}, {d.targets[0] - 1},
                                                                          {}})
                                    .first->second;
                e.h.push_back(static_cast<int>(hi));
                e.dual.push_back(d.dual);
            } else {
                EmbedEntry e;
                e.kind = kind;
                e.h = {static_cast<int>(hi)};
                for (int tgt : d.targets) e.g.push_back(tgt - 1);
                if (d.dual) e.dual = {true};
                if (kind == EmbedKind::Diag && e.g.size() != 2)
                    throw SemanticError("diag clauses name two targets");
                if (kind != EmbedKind::Diag && e.g.size() != 1)
                    throw SemanticError("embedding clauses name one target");
                t.emb.entries.push_back(std::move(e));
            }
        }
        for (auto& [tgt, e] : tensor_entries) {
            normalize_dual(e);
            t.emb.entries.push_back(e);
        }
        for (const auto& col : doc.H->torus.map_columns) {
            if (static_cast<int>(col.size()) != t.G.torus_rank)
                throw SemanticError("torus map column does not match G's torus rank");
            t.emb.torus_map.push_back(col);
        }
    } else {
        t.H = t.G;
        for (std::size_t gi = 0; gi < t.G.factors.size(); ++gi)
            t.emb.entries.push_back({EmbedKind::Id,
                                     {static_cast<int>(gi)},
                                     {static_cast<int>(gi)},
                                     {}});
        for (int k = 0; k < t.G.torus_rank; ++k) {
            std::vector<long> col(t.G.torus_rank, 0);
            col[k] = 1;
            t.emb.torus_map.push_back(std::move(col));
        }
    }

    if (doc.summand_parts.empty()) throw SemanticError("document has no module clause");
    for (std::size_t si = 0; si < doc.summand_parts.size(); ++si) {
        ModuleSummand s;
        for (const auto& f : t.G.factors) s.slots.push_back(Weight(f.rank(), 0));
        for (const auto& [at, w] : doc.summand_parts[si]) {
            if (at < 1 || at > static_cast<int>(t.G.factors.size()))
                throw SemanticError("factor reference @" + std::to_string(at) + " out of range");
            const GroupFactor& f = t.G.factors[at - 1];
            Weight resolved;
            if (w.size() == 1 && w[0] < 0) {
                long k = -w[0] - 1;
                if (k < 1 || k > f.rank())
                    throw SemanticError("phi(" + std::to_string(k) + ") out of range for " +
                                        to_string(f));
                resolved = f.phi(static_cast<int>(k));
            } else {
                resolved = w;
                if (static_cast<int>(resolved.size()) != f.rank())
                    throw SemanticError("weight length does not match the rank of " +
                                        to_string(f));
            }
            if (!is_trivial_weight(s.slots[at - 1]))
                throw SemanticError("factor @" + std::to_string(at) +
                                    " appears twice in one summand");
            s.slots[at - 1] = resolved;
        }
        s.charges = doc.summand_charges[si];
        s.charges.resize(t.G.torus_rank, 0);
        if (static_cast<int>(doc.summand_charges[si].size()) > t.G.torus_rank)
            throw SemanticError("more charges than torus coordinates");
        s.mult = doc.summand_mults[si];
        t.V.summands.push_back(std::move(s));
    }
    try {
        validate(t);
    } catch (const std::invalid_argument& e) {
        throw SemanticError(e.what());
    }
    return t;
}

// Subalgebra view of the H or S clause against a one-factor G (factorize).
inline Subalgebra assemble_subalgebra(const GroupDecl& decl, const GroupSpec& g) {
    if (g.factors.size() != 1) throw SemanticError("factorization queries need a simple G");
    Subalgebra sub;
    sub.center_dim = decl.torus.rank;
    if (decl.factors.empty()) return sub;
    EmbedKind kind =
        detail::kind_of_label(decl.factors[0].label.empty() ? "id" : decl.factors[0].label,
                              decl.factors[0].factor, g.factors[0]);
    for (const auto& f : decl.factors) sub.factors.push_back(f.factor);
    sub.kind = kind;
    return sub;
}

// --- Printer -----------------------------------------------------------------

inline std::string print_factor(const GroupFactor& f) { return to_string(f); }

inline std::string print_weight_term(const GroupFactor& f, const Weight& w, int at) {
    for (int k = 1; k <= f.rank(); ++k)
        if (w == f.phi(k)) return "phi(" + std::to_string(k) + ")@" + std::to_string(at);
    std::string s = "w(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")@" + std::to_string(at);
}

inline std::string print_triple(const TripleSpec& t) {
    std::ostringstream out;
    out << "G =";
    bool first = true;
    for (const auto& f : t.G.factors) {
        out << (first ? " " : " * ") << print_factor(f);
        first = false;
    }
    if (t.G.torus_rank > 0) out << (first ? " " : " * ") << "torus(" << t.G.torus_rank << ")";
    out << "\n";

    out << "H =";
    first = true;
    for (std::size_t hi = 0; hi < t.H.factors.size(); ++hi) {
        const EmbedEntry* entry = nullptr;
        std::size_t slot = 0;
        for (const auto& e : t.emb.entries)
            for (std::size_t k = 0; k < e.h.size(); ++k)
                if (e.h[k] == static_cast<int>(hi)) {
                    entry = &e;
                    slot = k;
                }
        out << (first ? " " : " * ") << print_factor(t.H.factors[hi]);
        first = false;
        if (!entry) continue;
        std::string label;
        switch (entry->kind) {
            case EmbedKind::Id: label = "id"; break;
            case EmbedKind::Diag: label = "diag"; break;
            case EmbedKind::Spin: label = "spin"; break;
            case EmbedKind::SplitSum: label = "split"; break;
            case EmbedKind::TensorPair: label = "tensor"; break;
            case EmbedKind::Lambda2: label = "phi2"; break;
            case EmbedKind::DefiningSub:
            case EmbedKind::VectorPad: label = "phi1"; break;
        }
        if (!entry->dual.empty() && entry->dual[slot]) label += "*";
        out << "[" << label << " -> ";
        for (std::size_t k = 0; k < entry->g.size(); ++k) {
            if (k) out << ",";
            out << entry->g[k] + 1;
        }
        out << "]";
    }
    if (t.H.torus_rank > 0) {
        out << (first ? " " : " * ") << "torus(" << t.H.torus_rank << ")[map -> ";
        for (int k = 0; k < t.H.torus_rank; ++k) {
            if (k) out << ",";
            out << "(";
            for (std::size_t c = 0; c < t.emb.torus_map[k].size(); ++c) {
                if (c) out << ",";
                out << t.emb.torus_map[k][c];
            }
            out << ")";
        }
        out << "]";
    }
    out << "\n";

    out << "V =";
    first = true;
    for (const auto& s : t.V.summands) {
        out << (first ? " " : " + ");
        first = false;
        if (s.mult > 1) out << s.mult << " * ";
        bool any = false;
        for (std::size_t fi = 0; fi < s.slots.size(); ++fi) {
            if (!s.acts(fi)) continue;
            if (any) out << " (x) ";
            out << print_weight_term(t.G.factors[fi], s.slots[fi], static_cast<int>(fi) + 1);
            any = true;
        }
        if (!any) out << "triv";
        bool charged = false;
        for (long c : s.charges) charged = charged || c != 0;
        if (charged) {
            out << " charge(";
            for (std::size_t c = 0; c < s.charges.size(); ++c) {
                if (c) out << ",";
                out << s.charges[c];
            }
            out << ")";
        }
    }
    out << "\n";
    return out.str();
}

inline std::string print_tree(const WeightedTree& t) {
    std::ostringstream out;
    out << "TREE:";
    for (std::size_t v = 0; v < t.weights.size(); ++v) {
        out << " " << v << ":";
        if (t.weights[v] == WeightedTree::infinite)
            out << "inf";
        else
            out << t.weights[v];
    }
    out << " ; edges";
    for (auto [a, b] : t.edges) out << " " << a << "-" << b;
    out << "\n";
    return out.str();
}

}  // namespace orthex
