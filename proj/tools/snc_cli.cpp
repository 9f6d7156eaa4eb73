#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sncstab/builders.hpp"
#include "sncstab/io.hpp"

using namespace sncstab;

namespace {

struct MathNegative {
    int code = 1;
};

Mode parse_mode(const std::string& s) {
    if (s == "minus") return Mode::Minus;
    if (s == "plus") return Mode::Plus;
    throw std::invalid_argument("mode must be 'minus' or 'plus'");
}

Scope parse_scope(const std::string& s) {
    if (s == "pairs") return Scope::ConnectedPairs;
    if (s == "all") return Scope::AllUnions;
    throw std::invalid_argument("scope must be 'pairs' or 'all'");
}

ClassExpr polarization_of(const Configuration& cfg, const std::string& flag) {
    if (!flag.empty()) return parse_class(cfg, flag);
    if (cfg.canonical) return ClassExpr::basis(*cfg.canonical);
    throw PreconditionError("no polarization given and no canonical class designated");
}

Twist parse_twist(const Configuration& cfg, const std::string& text) {
    std::vector<long long> a;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) a.push_back(std::stoll(tok));
    if (a.size() != static_cast<size_t>(cfg.n()))
        throw std::invalid_argument("twist must list one integer per component");
    return Twist::normalized(std::move(a));
}

std::string piece_list(const std::vector<RegionPiece>& region) {
    std::string s;
    for (const auto& p : region) {
        if (!s.empty()) s += "  ";
        s += p.to_string();
    }
    return s;
}

void print_interval(const IntervalReport& rep, bool machine) {
    if (machine) {
        std::cout << interval_report_to_json(rep).dump(2) << "\n";
        return;
    }
    if (rep.kind == IntervalReport::Kind::UnitInterval) {
        std::cout << "unit interval " << (rep.left_closed ? "[" : "(") << rep.s.to_string()
                  << " - 1, " << rep.s.to_string() << (rep.right_closed ? "]" : ")")
                  << "  case=" << case_name(rep.label) << "  candidates=";
        for (size_t i = 0; i < rep.candidates.size(); ++i)
            std::cout << (i ? "," : "") << rep.candidates[i].str();
        std::cout << "\n";
    } else {
        std::cout << "degenerate: " << rep.reason << "\n";
        std::cout << "region: " << piece_list(rep.region) << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"semistability of line bundles on SNC degeneration fibers"};
    app.require_subcommand(1);

    std::string file, bundle, polar, mode_s = "minus", scope_s = "pairs", format = "text";
    std::string subset_s, twist_s, op = "identities", out_path;
    long long window = 10;
    uint64_t seed = 0;
    int samples = 100;
    bool with_trace = false;

    auto add_common = [&](CLI::App* c, bool needs_file = true) {
        if (needs_file) c->add_option("file", file, "configuration file")->required();
        c->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "machine"}));
    };

    auto* c_validate = app.add_subcommand("validate", "run all validation checks");
    add_common(c_validate);

    auto* c_e = app.add_subcommand("e", "evaluate the defect of a union");
    add_common(c_e);
    c_e->add_option("--subset", subset_s, "component subset, comma separated")->required();
    c_e->add_option("--bundle", bundle, "line bundle class")->required();
    c_e->add_option("--twist", twist_s, "integer twist, comma separated");

    auto* c_check = app.add_subcommand("check", "decide semistability");
    add_common(c_check);
    c_check->add_option("--bundle", bundle)->required();
    c_check->add_option("--polarization", polar);
    c_check->add_option("--mode", mode_s)->check(CLI::IsMember({"minus", "plus"}));
    c_check->add_option("--scope", scope_s)->check(CLI::IsMember({"pairs", "all"}));
    c_check->add_option("--twist", twist_s);

    auto* c_interval = app.add_subcommand("interval", "twistable interval of a pair");
    add_common(c_interval);
    c_interval->add_option("--subset", subset_s)->required();
    c_interval->add_option("--bundle", bundle)->required();
    c_interval->add_option("--polarization", polar);
    c_interval->add_option("--mode", mode_s)->check(CLI::IsMember({"minus", "plus"}));

    auto* c_enum = app.add_subcommand("enumerate", "all semistable twists (tree graphs)");
    add_common(c_enum);
    c_enum->add_option("--bundle", bundle)->required();
    c_enum->add_option("--polarization", polar);
    c_enum->add_option("--mode", mode_s)->check(CLI::IsMember({"minus", "plus"}));
    c_enum->add_flag("--trace", with_trace, "emit the branch trace");

    auto* c_oracle = app.add_subcommand("oracle", "independent cross-checks");
    add_common(c_oracle);
    c_oracle->add_option("--op", op)
        ->check(CLI::IsMember({"brute", "identities", "degrees", "balanced", "threshold"}));
    c_oracle->add_option("--bundle", bundle);
    c_oracle->add_option("--polarization", polar);
    c_oracle->add_option("--mode", mode_s)->check(CLI::IsMember({"minus", "plus"}));
    c_oracle->add_option("--subset", subset_s);
    c_oracle->add_option("--window", window);
    c_oracle->add_option("--seed", seed);
    c_oracle->add_option("--samples", samples);

    auto* c_gen = app.add_subcommand("gen", "generate a configuration file");
    std::string kind, genera_s, edges_s, deg_s;
    int dim = 2, ncomp = 2;
    c_gen->add_option("kind", kind, "curve or synth")
        ->required()
        ->check(CLI::IsMember({"curve", "synth"}));
    c_gen->add_option("--genera", genera_s, "comma separated genera (curve)");
    c_gen->add_option("--edges", edges_s, "edges as i-j:nodes (curve) or i-j (synth)");
    c_gen->add_option("--deg", deg_s, "bundle degrees as NAME=d1,d2,...");
    c_gen->add_option("--dim", dim, "dimension (synth)");
    c_gen->add_option("--components", ncomp, "component count (synth)");
    c_gen->add_option("--seed", seed);
    c_gen->add_option("--out", out_path, "output path (stdout when absent)");
    c_gen->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }

    bool machine = format == "machine";

    if (c_gen->parsed()) {
        Configuration cfg;
        if (kind == "curve") {
            std::vector<int> genera;
            {
                std::stringstream ss(genera_s);
                std::string tok;
                while (std::getline(ss, tok, ',')) genera.push_back(std::stoi(tok));
            }
            std::vector<CurveEdgeSpec> edges;
            {
                std::stringstream ss(edges_s);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    auto dash = tok.find('-');
                    auto colon = tok.find(':');
                    if (dash == std::string::npos)
                        throw std::invalid_argument("edge format is i-j:nodes");
                    int i = std::stoi(tok.substr(0, dash));
                    int j = std::stoi(tok.substr(dash + 1));
                    int nodes = 1;
                    if (colon != std::string::npos) nodes = std::stoi(tok.substr(colon + 1));
                    edges.push_back({i, j, nodes});
                }
            }
            std::map<std::string, std::vector<long long>> degs;
            if (!deg_s.empty()) {
                std::stringstream ss(deg_s);
                std::string item;
                // NAME=d1,d2,... ; multiple bundles separated by ';'
                while (std::getline(ss, item, ';')) {
                    auto eq = item.find('=');
                    if (eq == std::string::npos)
                        throw std::invalid_argument("degree format is NAME=d1,d2,...");
                    std::vector<long long> v;
                    std::stringstream vs(item.substr(eq + 1));
                    std::string tok;
                    while (std::getline(vs, tok, ',')) v.push_back(std::stoll(tok));
                    degs[item.substr(0, eq)] = v;
                }
            }
            cfg = curve_builder(genera, edges, degs);
        } else {
            std::vector<Edge> edges;
            std::stringstream ss(edges_s);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                auto dash = tok.find('-');
                if (dash == std::string::npos) throw std::invalid_argument("edge format is i-j");
                edges.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
            }
            cfg = synth_generator(dim, ncomp, edges, seed);
        }
        if (out_path.empty()) std::cout << config_to_string(cfg);
        else save_config(cfg, out_path);
        return 0;
    }

    Configuration cfg = load_config(file);

    if (c_validate->parsed()) {
        auto checks = validate(cfg);
        bool all = true;
        for (const auto& c : checks) all = all && c.pass;
        if (machine) {
            std::cout << check_results_to_json(checks).dump(2) << "\n";
        } else {
            for (const auto& c : checks)
                std::cout << c.name << ": " << (c.pass ? "pass" : "FAIL " + c.witness) << "\n";
        }
        return all ? 0 : 1;
    }

    if (c_e->parsed()) {
        uint32_t mask = parse_subset(cfg, subset_s);
        ClassExpr M = parse_class(cfg, bundle);
        if (!twist_s.empty()) M = apply_twist(cfg, M, parse_twist(cfg, twist_s));
        Rational v = e_value(cfg, mask, M);
        if (machine)
            std::cout << Json{{"e", rat_to_string(v)}}.dump(2) << "\n";
        else
            std::cout << "e" << mask_name(cfg, mask) << " = " << rat_to_string(v) << "\n";
        return 0;
    }

    if (c_check->parsed()) {
        ClassExpr L = parse_class(cfg, bundle);
        if (!twist_s.empty()) L = apply_twist(cfg, L, parse_twist(cfg, twist_s));
        ClassExpr H = polarization_of(cfg, polar);
        uint32_t bad = 0;
        Poly badp;
        bool ok = is_semistable(cfg, L, H, parse_mode(mode_s), parse_scope(scope_s), &bad, &badp);
        if (machine) {
            Json j{{"semistable", ok}};
            if (!ok) {
                j["failing_union"] = mask_name(cfg, bad);
                j["defect"] = poly_to_json(badp);
            }
            std::cout << j.dump(2) << "\n";
        } else if (ok) {
            std::cout << "semistable\n";
        } else {
            std::cout << "not semistable: union " << mask_name(cfg, bad)
                      << " has defect " << badp.to_string() << "\n";
        }
        return ok ? 0 : 1;
    }

    if (c_interval->parsed()) {
        uint32_t mask = parse_subset(cfg, subset_s);
        ClassExpr L = parse_class(cfg, bundle);
        ClassExpr H = polarization_of(cfg, polar);
        IntervalReport rep = twistable_interval(cfg, mask, L, H, parse_mode(mode_s));
        print_interval(rep, machine);
        return rep.kind == IntervalReport::Kind::UnitInterval ? 0 : 1;
    }

    if (c_enum->parsed()) {
        ClassExpr L = parse_class(cfg, bundle);
        ClassExpr H = polarization_of(cfg, polar);
        EnumerationTrace trace;
        auto twists =
            enumerate_semistable_twists(cfg, L, H, parse_mode(mode_s),
                                        with_trace ? &trace : nullptr);
        if (machine) {
            Json arr = Json::array();
            for (const auto& t : twists) arr.push_back(twist_to_json(t));
            Json j{{"twists", arr}};
            if (with_trace) j["trace"] = trace_to_json(trace);
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& t : twists) {
                std::cout << "[";
                for (size_t i = 0; i < t.a.size(); ++i) std::cout << (i ? "," : "") << t.a[i];
                std::cout << "]\n";
            }
        }
        return 0;
    }

    if (c_oracle->parsed()) {
        Mode mode = parse_mode(mode_s);
        if (op == "brute") {
            ClassExpr L = parse_class(cfg, bundle);
            ClassExpr H = polarization_of(cfg, polar);
            auto twists = brute_force_twists(cfg, L, H, mode, window);
            Json arr = Json::array();
            for (const auto& t : twists) arr.push_back(twist_to_json(t));
            std::cout << arr.dump(machine ? 2 : -1) << "\n";
            return 0;
        }
        if (op == "identities") {
            OracleReport rep = identity_battery(cfg, samples, seed);
            std::cout << oracle_report_to_json(rep).dump(2) << "\n";
            return rep.all_pass() ? 0 : 1;
        }
        if (op == "degrees") {
            uint32_t mask = parse_subset(cfg, subset_s);
            OracleReport rep = degree_bound_battery(cfg, mask, parse_class(cfg, bundle));
            std::cout << oracle_report_to_json(rep).dump(2) << "\n";
            return rep.all_pass() ? 0 : 1;
        }
        if (op == "balanced") {
            auto recs = balanced_check(cfg, parse_class(cfg, bundle));
            bool all = true;
            Json arr = Json::array();
            for (const auto& r : recs) {
                all = all && r.agree;
                arr.push_back(Json{{"union", mask_name(cfg, r.mask)},
                                   {"balanced", r.balanced},
                                   {"e_sign", r.e_sign},
                                   {"agree", r.agree}});
            }
            std::cout << arr.dump(2) << "\n";
            return all ? 0 : 1;
        }
        // threshold
        uint32_t mask = parse_subset(cfg, subset_s);
        ClassExpr L = parse_class(cfg, bundle);
        ClassExpr H = polarization_of(cfg, polar);
        ThresholdReport rep = m_threshold(cfg, mask, L, H);
        Json j{{"m0", rep.m0.str()},
               {"analytic_bound", rat_to_string(rep.analytic)},
               {"eventual_sign", rep.eventual}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
