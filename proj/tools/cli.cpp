#include "cli.hpp"

#include "weylbranch/admissibility.hpp"
#include "weylbranch/text.hpp"
#include "weylbranch/verify.hpp"
#include "weylbranch/weyl_module.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace weylbranch::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string g;
    std::string levi;
    std::string roots;
    std::string weight;
    std::string current;
    std::string format = "text";
    std::string out_path;
    int max_rank = 4;
    int max_parts = 3;
    int oracle_parts = 2;
    int oracle_bound = 16;
};

bool is_index(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); });
}

LeviSubalgebra resolve_levi(const RootSystem& rs, const std::string& spec) {
    if (is_index(spec)) {
        const auto levis = enumerate_simple_levis(rs);
        const std::size_t idx = std::stoul(spec);
        if (idx >= levis.size())
            throw std::invalid_argument("Levi index " + spec + " out of range (" +
                                        std::to_string(levis.size()) + " enumerated)");
        return levis[idx];
    }
    return LeviSubalgebra::from_simple_roots(rs, parse_root_list(rs, spec));
}

std::string component_type_string(const LeviSubalgebra& levi) {
    std::string s;
    for (const SimpleComponent& comp : levi.components()) {
        if (!s.empty()) s += " x ";
        s += family_char(comp.family) + std::to_string(comp.rank);
    }
    return s;
}

// fundamental coordinates of an a-weight, components separated by '|'
std::string levi_weight_string(const LeviSubalgebra& levi, const std::vector<Int>& coords) {
    std::string s;
    std::size_t at = 0;
    for (const SimpleComponent& comp : levi.components()) {
        if (!s.empty()) s += "|";
        s += render_fund_coords(std::span<const Int>(coords).subspan(at, comp.rank));
        at += comp.rank;
    }
    return s;
}

json verdict_to_json(const LeviSubalgebra& levi, const AdmissibilityVerdict& v) {
    json reasons = json::array();
    for (const AdmissibilityReason& r : v.reasons) {
        reasons.push_back({{"component", r.component},
                           {"fundamental", r.fundamental},
                           {"case", r.label},
                           {"projection", render_fund_coords(r.projection)}});
    }
    (void)levi;
    return json{{"globally", v.globally}, {"locally", v.locally}, {"reasons", reasons}};
}

json report_to_json(const VerificationReport& r) {
    return json{{"check", r.check},     {"g", r.g},
                {"levi", r.levi},       {"lambda", r.lambda},
                {"expected", r.expected}, {"computed", r.computed},
                {"status", to_string(r.status)}, {"provenance", r.provenance},
                {"reason", r.reason}};
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
    out << text;
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) throw std::invalid_argument("cannot open output file '" + opt.out_path + "'");
        f << text;
    }
}

std::vector<Int> weight_of(const Options& opt, const RootSystem& rs) {
    if (!opt.current.empty()) {
        const CurrentWeight psi(rs.rank(), parse_current_weight_entries(opt.current));
        return psi.weight();
    }
    if (opt.weight.empty())
        throw std::invalid_argument("--weight or --current is required");
    std::vector<Int> coords = parse_fund_coords(opt.weight);
    if (static_cast<int>(coords.size()) != rs.rank())
        throw std::invalid_argument("weight has " + std::to_string(coords.size()) +
                                    " coordinates, expected " + std::to_string(rs.rank()));
    return coords;
}

int cmd_rootsys_show(const Options& opt, std::ostream& out) {
    const RootSystem& rs = parse_system(opt.g);
    if (opt.format == "json") {
        json j;
        j["system"] = rs.name();
        j["rank"] = rs.rank();
        json simple = json::array(), positive = json::array(), fundamental = json::array();
        for (const Weight& a : rs.simple_roots()) simple.push_back(render_root_eps(rs, a));
        for (const Weight& a : rs.positive_roots()) positive.push_back(render_root_eps(rs, a));
        for (int i = 0; i < rs.rank(); ++i)
            fundamental.push_back(render_weight_eps(rs, rs.fundamental_weight(i)));
        j["simple_roots"] = simple;
        j["positive_roots"] = positive;
        j["fundamental_weights"] = fundamental;
        j["rho"] = render_weight_eps(rs, rs.rho());
        emit(opt, out, j.dump(2) + "\n");
        return 0;
    }
    std::string text = rs.name() + " (rank " + std::to_string(rs.rank()) + ")\n";
    text += "simple roots:";
    for (const Weight& a : rs.simple_roots()) text += " " + render_root_eps(rs, a);
    text += "\npositive roots (" + std::to_string(rs.positive_roots().size()) + "):";
    for (const Weight& a : rs.positive_roots()) text += " " + render_root_eps(rs, a);
    text += "\nfundamental weights:";
    for (int i = 0; i < rs.rank(); ++i)
        text += " w" + std::to_string(i + 1) + "=" + render_weight_eps(rs, rs.fundamental_weight(i));
    text += "\nrho = " + render_weight_eps(rs, rs.rho()) + "\n";
    emit(opt, out, text);
    return 0;
}

int cmd_levi_enumerate(const Options& opt, std::ostream& out) {
    const RootSystem& rs = parse_system(opt.g);
    const auto levis = enumerate_simple_levis(rs);
    if (opt.format == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < levis.size(); ++i)
            arr.push_back({{"index", i},
                           {"roots", levis[i].canonical_string()},
                           {"type", component_type_string(levis[i])},
                           {"simple_root_generated", levis[i].is_simple_root_generated()}});
        emit(opt, out, arr.dump(2) + "\n");
        return 0;
    }
    std::string text;
    for (std::size_t i = 0; i < levis.size(); ++i)
        text += std::to_string(i) + ": " + levis[i].canonical_string() + " : " +
                component_type_string(levis[i]) + "\n";
    emit(opt, out, text);
    return 0;
}

int cmd_levi_classify(const Options& opt, std::ostream& out) {
    const RootSystem& rs = parse_system(opt.g);
    const std::string spec = !opt.roots.empty() ? opt.roots : opt.levi;
    if (spec.empty()) throw std::invalid_argument("--roots is required");
    const LeviSubalgebra levi = resolve_levi(rs, spec);
    if (opt.format == "json") {
        json comps = json::array();
        for (const SimpleComponent& comp : levi.components()) {
            json roots = json::array();
            for (const Weight& r : comp.simple_roots) roots.push_back(render_root_eps(rs, r));
            comps.push_back({{"type", family_char(comp.family) + std::to_string(comp.rank)},
                             {"simple_roots", roots}});
        }
        json j{{"type", component_type_string(levi)},
               {"roots", levi.canonical_string()},
               {"simple_root_generated", levi.is_simple_root_generated()},
               {"components", comps}};
        emit(opt, out, j.dump(2) + "\n");
        return 0;
    }
    emit(opt, out, "type " + component_type_string(levi) + "\n");
    return 0;
}

int cmd_project(const Options& opt, std::ostream& out) {
    const RootSystem& rs = parse_system(opt.g);
    if (opt.levi.empty()) throw std::invalid_argument("--levi is required");
    const LeviSubalgebra levi = resolve_levi(rs, opt.levi);
    if (!opt.current.empty()) {
        const CurrentWeight psi(rs.rank(), parse_current_weight_entries(opt.current));
        const CurrentWeight projected = project_current_weight(levi, psi);
        if (opt.format == "json") {
            json entries = json::object();
            for (const auto& [label, coords] : projected.entries())
                entries[label] = levi_weight_string(levi, coords);
            emit(opt, out, json{{"projection", entries}}.dump(2) + "\n");
            return 0;
        }
        std::string text;
        for (const auto& [label, coords] : projected.entries())
            text += label + ":" + levi_weight_string(levi, coords) + "\n";
        emit(opt, out, text.empty() ? "0\n" : text);
        return 0;
    }
    const std::vector<Int> lambda = weight_of(opt, rs);
    const std::vector<Int> projected = levi.project(rs.from_fundamental(lambda));
    if (opt.format == "json") {
        emit(opt, out, json{{"projection", levi_weight_string(levi, projected)}}.dump(2) + "\n");
        return 0;
    }
    emit(opt, out, levi_weight_string(levi, projected) + "\n");
    return 0;
}

int cmd_admissible(const Options& opt, std::ostream& out) {
    const RootSystem& rs = parse_system(opt.g);
    if (opt.levi.empty()) throw std::invalid_argument("--levi is required");
    const LeviSubalgebra levi = resolve_levi(rs, opt.levi);
    const std::vector<Int> lambda = weight_of(opt, rs);
    const AdmissibilityVerdict v = classify_pair(levi, lambda);
    emit(opt, out, verdict_to_json(levi, v).dump(2) + "\n");
    return 0;
}

int cmd_weyl_char(const Options& opt, std::ostream& out) {
    const RootSystem& rs = parse_system(opt.g);
    const std::vector<Int> lambda = weight_of(opt, rs);
    const Character& c = local_weyl_character(rs, lambda);
    const auto parts = decompose(c);
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& [w, m] : parts)
            arr.push_back({{"weight", render_fund_coords(rs.to_fundamental(w))}, {"multiplicity", m}});
        json j{{"g", rs.name()},
               {"lambda", render_fund_coords(lambda)},
               {"dimension", local_weyl_dim(rs, lambda).str()},
               {"constituents", arr}};
        emit(opt, out, j.dump(2) + "\n");
        return 0;
    }
    std::string text;
    for (const auto& [w, m] : parts)
        text += "V(" + render_fund_coords(rs.to_fundamental(w)) + ") x " + std::to_string(m) + "\n";
    emit(opt, out, text);
    return 0;
}

int cmd_weyl_dim(const Options& opt, std::ostream& out) {
    const RootSystem& rs = parse_system(opt.g);
    const std::vector<Int> lambda = weight_of(opt, rs);
    const BigInt dim = local_weyl_dim(rs, lambda);
    if (opt.format == "json") {
        emit(opt, out,
             json{{"g", rs.name()}, {"lambda", render_fund_coords(lambda)}, {"dimension", dim.str()}}
                     .dump(2) +
                 "\n");
        return 0;
    }
    emit(opt, out, dim.str() + "\n");
    return 0;
}

int cmd_branch(const Options& opt, std::ostream& out) {
    const RootSystem& rs = parse_system(opt.g);
    if (opt.levi.empty()) throw std::invalid_argument("--levi is required");
    const LeviSubalgebra levi = resolve_levi(rs, opt.levi);
    const std::vector<Int> lambda = weight_of(opt, rs);
    const auto branching = branching_multiplicities(rs, rs.from_fundamental(lambda), levi);
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& [tau, m] : branching)
            arr.push_back({{"weight", levi_weight_string(levi, tau)}, {"multiplicity", m}});
        json j{{"g", rs.name()},
               {"levi", levi.canonical_string()},
               {"lambda", render_fund_coords(lambda)},
               {"constituents", arr}};
        emit(opt, out, j.dump(2) + "\n");
        return 0;
    }
    std::string text;
    for (const auto& [tau, m] : branching)
        text += "V(" + levi_weight_string(levi, tau) + ") x " + std::to_string(m) + "\n";
    emit(opt, out, text);
    return 0;
}

int cmd_verify(const Options& opt, const std::string& which, std::ostream& out) {
    static const std::vector<std::string> known{
        "thm2i",       "thm2ii",      "lemmas",           "surjectivity",
        "global-local", "simple-restriction", "support-independence", "quotient-bound", "all"};
    if (std::find(known.begin(), known.end(), which) == known.end())
        throw std::invalid_argument("unknown verify group '" + which + "'");

    SweepConfig cfg;
    cfg.max_rank = opt.max_rank;
    cfg.max_parts = opt.max_parts;
    cfg.oracle_parts = opt.oracle_parts;
    cfg.oracle_bound = opt.oracle_bound;
    if (which != "all") cfg.checks = {which};
    if (!opt.g.empty()) {
        const RootSystem& rs = parse_system(opt.g);
        cfg.only_system = std::make_pair(rs.family(), rs.rank());
    }

    const auto reports = run_sweep(cfg);
    int pass = 0, fail = 0, skipped = 0;
    for (const VerificationReport& r : reports) {
        if (r.status == CheckStatus::Pass) ++pass;
        else if (r.status == CheckStatus::Fail) ++fail;
        else ++skipped;
    }

    if (opt.format == "json") {
        json arr = json::array();
        for (const VerificationReport& r : reports) arr.push_back(report_to_json(r));
        json j{{"reports", arr}, {"pass", pass}, {"fail", fail}, {"skipped", skipped}};
        emit(opt, out, j.dump(2) + "\n");
    } else {
        std::string text;
        for (const VerificationReport& r : reports) {
            text += std::string("[") + to_string(r.status) + "] " + r.check + " g=" + r.g;
            if (!r.levi.empty()) text += " levi=" + r.levi;
            if (!r.lambda.empty()) text += " lambda=" + r.lambda;
            if (r.status == CheckStatus::Skipped) text += " (" + r.reason + ")";
            else text += " expected=" + r.expected + " computed=" + r.computed;
            text += "\n";
        }
        text += "pass " + std::to_string(pass) + ", fail " + std::to_string(fail) + ", skipped " +
                std::to_string(skipped) + "\n";
        emit(opt, out, text);
    }
    return fail == 0 ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    if (const char* env = std::getenv("WEYLBRANCH_FORMAT")) opt.format = env;

    CLI::App app{"exact computations for root systems, Levi subalgebras and Weyl modules of current algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string verify_which;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", opt.out_path, "also write the rendered output to this file");
    };

    CLI::App* rootsys = app.add_subcommand("rootsys", "root system queries");
    CLI::App* rootsys_show = rootsys->add_subcommand("show", "print the root system data");
    rootsys_show->add_option("--g", opt.g, "root system, e.g. B3")->required();
    add_common(rootsys_show);

    CLI::App* levi = app.add_subcommand("levi", "Levi subalgebra queries");
    CLI::App* levi_enum = levi->add_subcommand("enumerate", "list all simple Levi subalgebras");
    levi_enum->add_option("--g", opt.g)->required();
    add_common(levi_enum);
    CLI::App* levi_classify = levi->add_subcommand("classify", "classify the Levi of a root set");
    levi_classify->add_option("--g", opt.g)->required();
    levi_classify->add_option("--roots", opt.roots, "generating roots, e.g. e1-e2,e2-e4");
    levi_classify->add_option("--levi", opt.levi, "root set or enumeration index");
    add_common(levi_classify);

    CLI::App* project = app.add_subcommand("project", "project a weight or current weight onto a Levi");
    project->add_option("--g", opt.g)->required();
    project->add_option("--levi", opt.levi, "root set or enumeration index")->required();
    project->add_option("--weight", opt.weight, "fundamental coordinates, e.g. 0,1,0");
    project->add_option("--current", opt.current, "current weight, e.g. p1:0,1,0;p2:1,0,0");
    add_common(project);

    CLI::App* admissible = app.add_subcommand("admissible", "classify the admissibility of a pair");
    admissible->add_option("--g", opt.g)->required();
    admissible->add_option("--levi", opt.levi)->required();
    admissible->add_option("--weight", opt.weight);
    admissible->add_option("--current", opt.current);
    add_common(admissible);

    CLI::App* weyl_char = app.add_subcommand("weyl-char", "classical character of a local Weyl module");
    weyl_char->add_option("--g", opt.g)->required();
    weyl_char->add_option("--weight", opt.weight);
    weyl_char->add_option("--current", opt.current);
    add_common(weyl_char);

    CLI::App* weyl_dim = app.add_subcommand("weyl-dim", "dimension of a local Weyl module");
    weyl_dim->add_option("--g", opt.g)->required();
    weyl_dim->add_option("--weight", opt.weight);
    weyl_dim->add_option("--current", opt.current);
    add_common(weyl_dim);

    CLI::App* branch = app.add_subcommand("branch", "branching multiplicities of an irreducible");
    branch->add_option("--g", opt.g)->required();
    branch->add_option("--levi", opt.levi)->required();
    branch->add_option("--weight", opt.weight);
    branch->add_option("--current", opt.current);
    add_common(branch);

    CLI::App* verify = app.add_subcommand("verify", "run verification sweeps");
    verify->add_option("group", verify_which,
                       "thm2i|thm2ii|lemmas|surjectivity|global-local|simple-restriction|all")
        ->required();
    verify->add_option("--g", opt.g, "restrict the sweep to one root system");
    verify->add_option("--max-rank", opt.max_rank, "rank bound for the sweep grids");
    verify->add_option("--max-parts", opt.max_parts, "cap on the sum of fundamental multiplicities");
    verify->add_option("--oracle-parts", opt.oracle_parts, "weight cap for the surjectivity grid");
    verify->add_option("--oracle-bound", opt.oracle_bound, "part-count guard of the oracle");
    add_common(verify);

    std::vector<const char*> argv;
    argv.push_back("weylbranch");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (rootsys_show->parsed()) return cmd_rootsys_show(opt, out);
        if (levi_enum->parsed()) return cmd_levi_enumerate(opt, out);
        if (levi_classify->parsed()) return cmd_levi_classify(opt, out);
        if (project->parsed()) return cmd_project(opt, out);
        if (admissible->parsed()) return cmd_admissible(opt, out);
        if (weyl_char->parsed()) return cmd_weyl_char(opt, out);
        if (weyl_dim->parsed()) return cmd_weyl_dim(opt, out);
        if (branch->parsed()) return cmd_branch(opt, out);
        if (verify->parsed()) return cmd_verify(opt, verify_which, out);
        err << "no command given\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace weylbranch::cli
