#include "sncstab/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace sncstab {

namespace {

void reject_unknown(const Json& j, const std::set<std::string>& known, const std::string& where) {
    if (!j.is_object()) throw std::invalid_argument(where + " must be an object");
    for (const auto& [k, v] : j.items())
        if (!known.count(k)) throw std::invalid_argument("unknown field '" + k + "' in " + where);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw std::invalid_argument("missing field '" + key + "' in " + where);
    return *it;
}

Json mono_json(const SymbolTable& syms, const Mono& m) {
    Json a = Json::array();
    for (Sym s : m) a.push_back(syms.name(s));
    return a;
}

Mono mono_from_json(const SymbolTable& syms, const Json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument("monomial must be an array in " + where);
    Mono m;
    for (const auto& e : j) {
        if (!e.is_string()) throw std::invalid_argument("monomial entries are names in " + where);
        m.push_back(syms.lookup(e.get<std::string>()));
    }
    return mono_sorted(m);
}

Rational value_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
    throw std::invalid_argument("value must be an integer or \"p/q\" string in " + where);
}

Json chi_terms_json(const SymbolTable& syms, const ChiFunctional& chi) {
    Json terms = Json::array();
    for (const auto& part : chi.parts)
        for (const auto& [m, v] : part.vals)
            terms.push_back(Json{{"monomial", mono_json(syms, m)}, {"value", rat_to_string(v)}});
    return terms;
}

ChiFunctional chi_from_terms(const SymbolTable& syms, const Json& terms,
                             const std::string& where) {
    ChiFunctional chi;
    if (!terms.is_array()) throw std::invalid_argument("terms must be an array in " + where);
    for (const auto& t : terms) {
        reject_unknown(t, {"monomial", "value"}, where);
        Mono m = mono_from_json(syms, field(t, "monomial", where), where);
        chi.add(static_cast<int>(m.size()), m, value_from_json(field(t, "value", where), where));
    }
    return chi;
}

}  // namespace

Json config_to_json(const Configuration& cfg) {
    Json j;
    j["dimension"] = cfg.dim;
    j["components"] = cfg.syms.components;
    Json edges = Json::array();
    for (const auto& e : cfg.edges) edges.push_back(Json{{"i", e.i}, {"j", e.j}});
    j["edges"] = edges;
    j["bundles"] = cfg.syms.bundles;
    if (cfg.canonical) j["canonical"] = cfg.syms.name(*cfg.canonical);
    Json inter = Json::array();
    for (const auto& [m, v] : cfg.table)
        inter.push_back(
            Json{{"monomial", mono_json(cfg.syms, m)}, {"value", rat_to_string(v)}});
    j["intersection"] = inter;
    Json chic = Json::array();
    for (int i = 0; i < cfg.n(); ++i)
        chic.push_back(Json{{"component", cfg.syms.components[static_cast<size_t>(i)]},
                            {"terms", chi_terms_json(cfg.syms,
                                                     cfg.chi_components[static_cast<size_t>(i)])}});
    Json chie = Json::array();
    for (size_t e = 0; e < cfg.edges.size(); ++e)
        chie.push_back(Json{{"edge", Json{{"i", cfg.edges[e].i}, {"j", cfg.edges[e].j}}},
                            {"terms", chi_terms_json(cfg.syms, cfg.chi_edges[e])}});
    j["chi"] = Json{{"components", chic}, {"edges", chie}};
    return j;
}

Configuration config_from_json(const Json& j) {
    reject_unknown(j, {"dimension", "components", "edges", "bundles", "canonical",
                       "intersection", "chi"},
                   "configuration");
    Configuration cfg;
    const Json& dim = field(j, "dimension", "configuration");
    if (!dim.is_number_integer()) throw std::invalid_argument("dimension must be an integer");
    cfg.dim = dim.get<int>();
    for (const auto& c : field(j, "components", "configuration")) {
        if (!c.is_string()) throw std::invalid_argument("component names must be strings");
        cfg.syms.components.push_back(c.get<std::string>());
    }
    if (j.contains("bundles"))
        for (const auto& b : j["bundles"]) {
            if (!b.is_string()) throw std::invalid_argument("bundle names must be strings");
            cfg.syms.bundles.push_back(b.get<std::string>());
        }
    for (const auto& e : field(j, "edges", "configuration")) {
        reject_unknown(e, {"i", "j"}, "edges");
        int a = field(e, "i", "edge").get<int>(), b = field(e, "j", "edge").get<int>();
        cfg.edges.push_back({a, b});
    }
    if (j.contains("canonical")) {
        if (!j["canonical"].is_string())
            throw std::invalid_argument("canonical must be a symbol name");
        cfg.canonical = cfg.syms.lookup(j["canonical"].get<std::string>());
    }
    for (const auto& t : field(j, "intersection", "configuration")) {
        reject_unknown(t, {"monomial", "value"}, "intersection");
        Mono m = mono_from_json(cfg.syms, field(t, "monomial", "intersection"), "intersection");
        Rational v = value_from_json(field(t, "value", "intersection"), "intersection");
        if (v.is_zero()) throw std::invalid_argument("explicit zero in intersection table");
        if (cfg.table.count(m))
            throw std::invalid_argument("duplicate intersection monomial");
        cfg.table[m] = v;
    }
    const Json& chi = field(j, "chi", "configuration");
    reject_unknown(chi, {"components", "edges"}, "chi");
    cfg.chi_components.resize(cfg.syms.components.size());
    std::set<std::string> seen_comp;
    for (const auto& c : field(chi, "components", "chi")) {
        reject_unknown(c, {"component", "terms"}, "chi components");
        std::string name = field(c, "component", "chi components").get<std::string>();
        if (!seen_comp.insert(name).second)
            throw std::invalid_argument("duplicate chi entry for component '" + name + "'");
        Sym s = cfg.syms.lookup(name);
        if (!cfg.syms.is_component(s))
            throw std::invalid_argument("'" + name + "' is not a component");
        cfg.chi_components[static_cast<size_t>(s)] =
            chi_from_terms(cfg.syms, field(c, "terms", "chi components"), "chi components");
    }
    cfg.chi_edges.resize(cfg.edges.size());
    std::set<size_t> seen_edge;
    for (const auto& c : field(chi, "edges", "chi")) {
        reject_unknown(c, {"edge", "terms"}, "chi edges");
        const Json& ej = field(c, "edge", "chi edges");
        reject_unknown(ej, {"i", "j"}, "chi edge ref");
        int a = field(ej, "i", "chi edge").get<int>(), b = field(ej, "j", "chi edge").get<int>();
        size_t idx = cfg.edges.size();
        for (size_t e = 0; e < cfg.edges.size(); ++e)
            if (cfg.edges[e].i == a && cfg.edges[e].j == b) idx = e;
        if (idx == cfg.edges.size())
            throw std::invalid_argument("chi entry for unknown edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        if (!seen_edge.insert(idx).second) throw std::invalid_argument("duplicate chi edge entry");
        cfg.chi_edges[idx] =
            chi_from_terms(cfg.syms, field(c, "terms", "chi edges"), "chi edges");
    }
    cfg.check_structure();
    return cfg;
}

std::string config_to_string(const Configuration& cfg) { return config_to_json(cfg).dump(2) + "\n"; }

Configuration config_from_string(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    return config_from_json(j);
}

Configuration load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_string(ss.str());
}

void save_config(const Configuration& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << config_to_string(cfg);
}

ClassExpr parse_class(const Configuration& cfg, const std::string& text) {
    ClassExpr e;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty class expression");
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        long long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in class expression");
        }
        skip_ws();
        long long coeff = 1;
        if (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
            size_t start = i;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
            coeff = std::stoll(text.substr(start, i - start));
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        size_t start = i;
        while (i < text.size() && (isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
            ++i;
        if (start == i) throw std::invalid_argument("expected symbol name in class expression");
        e.add(cfg.syms.lookup(text.substr(start, i - start)), sign * coeff);
        skip_ws();
        first = false;
    }
    return e;
}

std::string class_to_text(const Configuration& cfg, const ClassExpr& e) {
    if (e.coeffs.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [sym, c] : e.coeffs) {
        if (c < 0) s += "-";
        else if (!first) s += "+";
        if (c != 1 && c != -1) s += std::to_string(c < 0 ? -c : c) + "*";
        s += cfg.syms.name(sym);
        first = false;
    }
    return s;
}

uint32_t parse_subset(const Configuration& cfg, const std::string& text) {
    uint32_t mask = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string name = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        if (!name.empty()) {
            Sym s = cfg.syms.lookup(name);
            if (!cfg.syms.is_component(s))
                throw std::invalid_argument("'" + name + "' is not a component");
            mask |= 1u << s;
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (mask == 0) throw std::invalid_argument("empty component subset");
    return mask;
}

Json rational_json(const Rational& r) { return rat_to_string(r); }

Json poly_to_json(const Poly& p) {
    Json a = Json::array();
    for (const auto& [key, c] : p.terms())
        a.push_back(Json{{"m", key.first}, {"b", key.second}, {"coeff", rat_to_string(c)}});
    return a;
}

Json interval_report_to_json(const IntervalReport& rep) {
    Json j;
    if (rep.kind == IntervalReport::Kind::UnitInterval) {
        j["kind"] = "UnitInterval";
        j["s"] = rep.s.to_string();
        j["s_approx"] = rep.s.approx();
        j["left_closed"] = rep.left_closed;
        j["right_closed"] = rep.right_closed;
        j["case"] = case_name(rep.label);
        Json cands = Json::array();
        for (const auto& c : rep.candidates) cands.push_back(c.str());
        j["candidates"] = cands;
    } else {
        j["kind"] = "Degenerate";
        j["reason"] = rep.reason;
        Json pieces = Json::array();
        for (const auto& p : rep.region) pieces.push_back(p.to_string());
        j["region"] = pieces;
    }
    return j;
}

Json twist_to_json(const Twist& t) {
    Json a = Json::array();
    for (long long v : t.a) a.push_back(v);
    return a;
}

namespace {

Json trace_node_json(const TraceNode& n) {
    Json j;
    if (n.vertex >= 0) {
        j["vertex"] = n.vertex;
        j["chosen"] = n.chosen;
    }
    if (n.report) j["interval"] = interval_report_to_json(*n.report);
    if (n.leaf_twist) {
        j["twist"] = twist_to_json(*n.leaf_twist);
        j["accepted"] = n.accepted;
    }
    if (!n.children.empty()) {
        Json kids = Json::array();
        for (const auto& c : n.children) kids.push_back(trace_node_json(c));
        j["children"] = kids;
    }
    return j;
}

}  // namespace

Json trace_to_json(const EnumerationTrace& tr) {
    Json j;
    j["order"] = tr.order;
    j["tree"] = trace_node_json(tr.root);
    return j;
}

Json oracle_report_to_json(const OracleReport& rep) {
    Json j;
    j["instance"] = rep.instance;
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json cj{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["all_pass"] = rep.all_pass();
    return j;
}

Json check_results_to_json(const std::vector<CheckResult>& checks) {
    Json a = Json::array();
    for (const auto& c : checks) {
        Json cj{{"name", c.name}, {"pass", c.pass}};
        if (!c.witness.empty()) cj["witness"] = c.witness;
        a.push_back(cj);
    }
    return a;
}

}  // namespace sncstab
