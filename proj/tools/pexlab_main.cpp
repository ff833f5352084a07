// pexlab command-line front end. All decision answers go to stdout as one
// JSON record with stable key order; exit 0 means "ran to completion",
// 2 means input/format error, 3 means a resource cap was exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pexlab/pexlab.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

pexlab::ArgumentSystem load_af(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pexlab::ParseError("cannot open AF file '" + path + "'");
    return pexlab::parse_af(in);
}

pexlab::CnfFormula load_cnf(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pexlab::ParseError("cannot open CNF file '" + path + "'");
    return pexlab::parse_dimacs(in);
}

pexlab::ExtensionFamily load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pexlab::ParseError("cannot open family file '" + path + "'");
    return pexlab::parse_family_file(in);
}

std::ofstream open_out(const std::string& path, bool binary = false) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw pexlab::ParseError("cannot open output file '" + path + "'");
    return out;
}

// --set "a,b"; the empty string is the empty set.
pexlab::ArgSet parse_set(const pexlab::ArgumentSystem& h, const std::string& text) {
    std::vector<std::string> names;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        std::size_t b = item.find_last_not_of(" \t");
        names.push_back(item.substr(a, b - a + 1));
    }
    return h.set_of_names(names);
}

ordered_json names_json(const pexlab::ArgumentSystem& h, const pexlab::ArgSet& s) {
    return ordered_json(h.names_of(s));
}

pexlab::Semantics parse_semantics(const std::string& text) {
    auto s = pexlab::semantics_from_string(text);
    if (!s) throw pexlab::ParseError("unknown semantics '" + text + "'");
    return *s;
}

// enumerate/encode/minlen/bench operate on extension families, which exist
// for preferred and stable semantics only.
pexlab::Semantics parse_family_semantics(const std::string& text) {
    auto s = parse_semantics(text);
    if (s == pexlab::Semantics::admissible)
        throw pexlab::ParseError("this subcommand takes --semantics preferred|stable");
    return s;
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

struct CorpusSpec {
    int count = 0;
    int max_vars = 0;
    int max_clauses = 0;
    std::uint64_t seed = 0;
};

CorpusSpec parse_corpus(const std::string& text) {
    CorpusSpec spec;
    char c1, c2, c3;
    std::istringstream in(text);
    if (!(in >> spec.count >> c1 >> spec.max_vars >> c2 >> spec.max_clauses >> c3 >> spec.seed) ||
        c1 != ',' || c2 != ',' || c3 != ',' || spec.count < 1 || spec.max_vars < 1 ||
        spec.max_clauses < 1)
        throw pexlab::ParseError("corpus spec must be 'count,vars,clauses,seed'");
    return spec;
}

int run(int argc, char** argv) {
    CLI::App app{"laboratory for preferred/stable extension problems"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for corpus/survey runs")
        ->capture_default_str();

    // ---- check ----
    auto* check = app.add_subcommand("check", "membership predicates on one set");
    std::string check_af, check_set, check_sem = "preferred";
    check->add_option("--af", check_af, "AF file")->required();
    check->add_option("--set", check_set, "comma-separated argument names; empty = {}");
    check->add_option("--semantics", check_sem,
                      "preferred|stable|admissible|conflict-free");
    check->callback([&] {
        auto h = load_af(check_af);
        auto s = parse_set(h, check_set);
        bool answer;
        if (check_sem == "conflict-free")
            answer = pexlab::is_conflict_free(h, s);
        else if (check_sem == "admissible")
            answer = pexlab::is_admissible(h, s);
        else if (check_sem == "stable")
            answer = pexlab::is_stable(h, s);
        else if (check_sem == "preferred")
            answer = pexlab::is_preferred(h, s);
        else
            throw pexlab::ParseError("unknown semantics '" + check_sem + "'");
        emit({{"answer", answer}, {"semantics", check_sem}, {"set", names_json(h, s)}});
    });

    // ---- enumerate ----
    auto* enumerate = app.add_subcommand("enumerate", "list an extension family");
    std::string enum_af, enum_sem = "preferred", enum_method = "search";
    enumerate->add_option("--af", enum_af)->required();
    enumerate->add_option("--semantics", enum_sem, "preferred|stable");
    enumerate->add_option("--method", enum_method, "search|oracle");
    enumerate->callback([&] {
        auto h = load_af(enum_af);
        auto sem = parse_family_semantics(enum_sem);
        pexlab::ExtensionFamily family;
        if (enum_method == "oracle")
            family = pexlab::oracle_extensions(h, sem);
        else if (enum_method == "search")
            family = sem == pexlab::Semantics::stable ? pexlab::enumerate_stable(h)
                                                      : pexlab::enumerate_preferred(h);
        else
            throw pexlab::ParseError("unknown method '" + enum_method + "'");
        ordered_json exts = ordered_json::array();
        for (const auto& m : family.members) exts.push_back(names_json(h, m));
        emit({{"semantics", enum_sem},
              {"method", enum_method},
              {"count", family.size()},
              {"extensions", exts}});
    });

    // ---- accept ----
    auto* accept = app.add_subcommand("accept", "credulous/sceptical acceptance");
    std::string acc_af, acc_arg, acc_mode = "credulous";
    accept->add_option("--af", acc_af)->required();
    accept->add_option("--arg", acc_arg)->required();
    accept->add_option("--mode", acc_mode, "credulous|sceptical");
    accept->callback([&] {
        auto h = load_af(acc_af);
        int ix = h.require_index(acc_arg);
        bool answer;
        if (acc_mode == "credulous")
            answer = pexlab::credulous(h, ix);
        else if (acc_mode == "sceptical")
            answer = pexlab::sceptical(h, ix);
        else
            throw pexlab::ParseError("unknown mode '" + acc_mode + "'");
        emit({{"answer", answer}, {"mode", acc_mode}, {"arg", acc_arg}});
    });

    // ---- coherent ----
    auto* coherent = app.add_subcommand("coherent", "is every preferred extension stable?");
    std::string coh_af;
    coherent->add_option("--af", coh_af)->required();
    coherent->callback([&] {
        auto h = load_af(coh_af);
        emit({{"answer", pexlab::is_coherent(h)}});
    });

    // ---- alpha ----
    auto* alpha = app.add_subcommand("alpha", "compute the credulous-acceptance map");
    std::string alpha_af, alpha_out;
    alpha->add_option("--af", alpha_af)->required();
    alpha->add_option("--out", alpha_out, "write to file instead of stdout");
    alpha->callback([&] {
        auto h = load_af(alpha_af);
        auto a = pexlab::compute_alpha(h);
        if (alpha_out.empty()) {
            pexlab::write_alpha(h, a, std::cout);
        } else {
            auto out = open_out(alpha_out);
            pexlab::write_alpha(h, a, out);
        }
    });

    // ---- decide ----
    auto* decide = app.add_subcommand("decide", "PREF-EXT / STAB-EXT");
    std::string dec_af, dec_set, dec_problem;
    decide->add_option("--af", dec_af)->required();
    decide->add_option("--set", dec_set);
    decide->add_option("--problem", dec_problem, "pref-ext|stab-ext")->required();
    decide->callback([&] {
        auto h = load_af(dec_af);
        auto s = parse_set(h, dec_set);
        bool answer;
        if (dec_problem == "pref-ext")
            answer = pexlab::decide_pref_ext(h, s);
        else if (dec_problem == "stab-ext")
            answer = pexlab::decide_stab_ext(h, s);
        else
            throw pexlab::ParseError("unknown problem '" + dec_problem + "'");
        emit({{"answer", answer}, {"problem", dec_problem}, {"set", names_json(h, s)}});
    });

    // ---- decide-inf ----
    auto* decide_inf = app.add_subcommand("decide-inf", "PREF-EXT-INF / STAB-EXT-INF");
    std::string inf_af, inf_set, inf_problem = "pref-ext-inf", inf_alpha;
    bool inf_trust = false;
    decide_inf->add_option("--af", inf_af)->required();
    decide_inf->add_option("--set", inf_set);
    decide_inf->add_option("--problem", inf_problem, "pref-ext-inf|stab-ext-inf");
    decide_inf->add_option("--alpha", inf_alpha, "alpha file")->required();
    decide_inf->add_flag("--trust", inf_trust, "skip validating the alpha promise");
    decide_inf->callback([&] {
        auto h = load_af(inf_af);
        auto s = parse_set(h, inf_set);
        std::ifstream ain(inf_alpha);
        if (!ain) throw pexlab::ParseError("cannot open alpha file '" + inf_alpha + "'");
        auto a = pexlab::read_alpha(h, ain);
        pexlab::InfResult r;
        if (inf_problem == "pref-ext-inf")
            r = pexlab::decide_pref_ext_inf(h, s, a, inf_trust);
        else if (inf_problem == "stab-ext-inf")
            r = pexlab::decide_stab_ext_inf(h, s, a, inf_trust);
        else
            throw pexlab::ParseError("unknown problem '" + inf_problem + "'");
        emit({{"answer", r.answer}, {"path", pexlab::to_string(r.path)}, {"problem", inf_problem}});
    });

    // ---- reduce ----
    auto* reduce = app.add_subcommand("reduce", "3-CNF -> argument system instance");
    std::string red_cnf, red_out_af, red_out_alpha, red_out_query;
    bool red_reversed = false, red_naive_gadget = false;
    reduce->add_option("--cnf", red_cnf, "DIMACS file")->required();
    reduce->add_option("--out-af", red_out_af)->required();
    reduce->add_option("--out-alpha", red_out_alpha)->required();
    reduce->add_option("--out-query", red_out_query)->required();
    reduce->add_flag("--reversed", red_reversed, "reverse every attack pair");
    reduce->add_flag("--naive-gadget", red_naive_gadget,
                     "omit the chi->clause attacks (known-broken variant)");
    reduce->callback([&] {
        auto phi = load_cnf(red_cnf);
        pexlab::GadgetOptions opts{red_reversed, red_naive_gadget};
        auto inst = pexlab::build_h_psi(phi, opts);
        {
            auto out = open_out(red_out_af);
            pexlab::serialize_af(inst.system, out);
        }
        {
            auto out = open_out(red_out_alpha);
            pexlab::write_alpha(inst.system, inst.alpha, out);
        }
        std::string query;
        for (const auto& name : inst.system.names_of(inst.query)) {
            if (!query.empty()) query += ",";
            query += name;
        }
        {
            auto out = open_out(red_out_query);
            out << query << "\n";
        }
        emit({{"args", inst.system.n()},
              {"attacks", inst.system.attack_count()},
              {"query", query},
              {"af", red_out_af},
              {"alpha", red_out_alpha},
              {"query_file", red_out_query}});
    });

    // ---- verify-reduction ----
    auto* verify = app.add_subcommand("verify-reduction", "check the construction's biconditionals");
    std::string ver_cnf, ver_corpus, ver_report;
    bool ver_reversed = false, ver_naive_gadget = false;
    verify->add_option("--cnf", ver_cnf, "single DIMACS instance");
    verify->add_option("--corpus", ver_corpus, "count,vars,clauses,seed");
    verify->add_option("--report", ver_report, "write per-instance records to a file");
    verify->add_flag("--reversed", ver_reversed);
    verify->add_flag("--naive-gadget", ver_naive_gadget);
    verify->callback([&] {
        pexlab::GadgetOptions opts{ver_reversed, ver_naive_gadget};
        if (ver_cnf.empty() == ver_corpus.empty())
            throw pexlab::ParseError("give exactly one of --cnf or --corpus");
        if (!ver_cnf.empty()) {
            auto r = pexlab::verify_reduction(load_cnf(ver_cnf), opts);
            if (!ver_report.empty()) {
                auto out = open_out(ver_report);
                out << pexlab::report_line("cnf", r) << "\n";
            }
            emit({{"answer", r.pass},
                  {"sat", r.sat},
                  {"pref", r.pref},
                  {"stab", r.stab},
                  {"alpha_ok", r.alpha_ok},
                  {"induced_pref", r.induced_preferred},
                  {"args", r.args},
                  {"attacks", r.attacks}});
            return;
        }
        auto spec = parse_corpus(ver_corpus);
        auto reports =
            pexlab::verify_corpus(spec.count, spec.max_vars, spec.max_clauses, spec.seed, opts, threads);
        int pass = 0, fail = 0;
        for (const auto& r : reports) (r.pass ? pass : fail) += 1;
        if (!ver_report.empty()) {
            auto out = open_out(ver_report);
            for (std::size_t i = 0; i < reports.size(); ++i)
                out << pexlab::report_line("corpus[" + std::to_string(i) + "]", reports[i]) << "\n";
        }
        emit({{"pass", pass}, {"fail", fail}});
    });

    // ---- encode ----
    auto* encode = app.add_subcommand("encode", "write a PEENC container");
    std::string enc_af, enc_scheme = "tab", enc_sem = "preferred", enc_out;
    encode->add_option("--af", enc_af)->required();
    encode->add_option("--scheme", enc_scheme, "tab|truthtable|adjacency");
    encode->add_option("--semantics", enc_sem, "preferred|stable");
    encode->add_option("--out", enc_out)->required();
    encode->callback([&] {
        auto h = load_af(enc_af);
        auto sem = parse_family_semantics(enc_sem);
        auto scheme = pexlab::scheme_from_string(enc_scheme);
        if (!scheme || *scheme == pexlab::Scheme::dnf)
            throw pexlab::ParseError("scheme must be tab, truthtable or adjacency");
        pexlab::Encoding e;
        switch (*scheme) {
            case pexlab::Scheme::tab: e = pexlab::encode_tab(h, sem); break;
            case pexlab::Scheme::truthtable: e = pexlab::truth_table(h, sem); break;
            case pexlab::Scheme::adjacency: e = pexlab::encode_adjacency(h); break;
            case pexlab::Scheme::dnf: break;
        }
        {
            auto out = open_out(enc_out, /*binary=*/true);
            pexlab::write_encoding(e, out);
        }
        emit({{"scheme", pexlab::to_string(e.scheme)},
              {"semantics", pexlab::to_string(e.semantics)},
              {"n", e.n},
              {"rows", e.row_count},
              {"bits", e.payload.size()},
              {"out", enc_out}});
    });

    // ---- encode-query ----
    auto* equery = app.add_subcommand("encode-query", "decide membership from a container");
    std::string eq_enc, eq_set, eq_af;
    equery->add_option("--enc", eq_enc)->required();
    equery->add_option("--set", eq_set);
    equery->add_option("--af", eq_af,
                       "optional AF file naming the arguments; otherwise names must be x1..xn");
    equery->callback([&] {
        std::ifstream in(eq_enc, std::ios::binary);
        if (!in) throw pexlab::ParseError("cannot open encoding file '" + eq_enc + "'");
        auto e = pexlab::read_encoding(in);
        pexlab::ArgSet s;
        if (!eq_af.empty()) {
            auto h = load_af(eq_af);
            if (h.n() != e.n)
                throw pexlab::WidthMismatch("AF width does not match encoding width");
            s = parse_set(h, eq_set);
        } else {
            // canonical x<i> names against the encoding's width
            std::vector<std::string> names;
            for (int i = 1; i <= e.n; ++i) names.push_back("x" + std::to_string(i));
            pexlab::ArgumentSystem h(std::move(names), {});
            s = parse_set(h, eq_set);
        }
        bool answer = false;
        std::uint64_t steps = 0;
        switch (e.scheme) {
            case pexlab::Scheme::tab: answer = pexlab::decide_tab(e, s, &steps); break;
            case pexlab::Scheme::truthtable: answer = pexlab::decide_truth_table(e, s, &steps); break;
            case pexlab::Scheme::adjacency: answer = pexlab::decide_stable_member(e, s, &steps); break;
            case pexlab::Scheme::dnf: break;
        }
        emit({{"answer", answer}, {"scheme", pexlab::to_string(e.scheme)}, {"steps", steps}});
    });

    // ---- minlen ----
    auto* minlen = app.add_subcommand("minlen", "exact minimal formula length");
    std::string ml_af, ml_table, ml_sem = "preferred";
    int ml_vars = 0, ml_cap = pexlab::kDefaultLiteralCap;
    minlen->add_option("--af", ml_af, "take f_H of this system");
    minlen->add_option("--table", ml_table, "hex truth table (MSB = highest index)");
    minlen->add_option("--vars", ml_vars, "variable count for --table");
    minlen->add_option("--semantics", ml_sem, "preferred|stable (with --af)");
    minlen->add_option("--cap", ml_cap, "literal budget")->capture_default_str();
    minlen->callback([&] {
        std::uint32_t table = 0;
        int n = 0;
        if (ml_af.empty() == ml_table.empty())
            throw pexlab::ParseError("give exactly one of --af or --table");
        if (!ml_af.empty()) {
            auto h = load_af(ml_af);
            n = h.n();
            if (n < 1 || n > pexlab::kMinFormulaVarCap)
                throw pexlab::CapExceeded("minlen --af needs 1 <= n <= 4");
            auto sem = parse_family_semantics(ml_sem);
            auto family = pexlab::oracle_extensions(h, sem);
            for (const auto& m : family.members) table |= std::uint32_t{1} << m.bits;
        } else {
            if (ml_vars < 1 || ml_vars > pexlab::kMinFormulaVarCap)
                throw pexlab::ParseError("--table needs --vars in 1..4");
            n = ml_vars;
            table = static_cast<std::uint32_t>(std::stoul(ml_table, nullptr, 16));
        }
        auto r = pexlab::min_formula_length(table, n, ml_cap);
        ordered_json j;
        j["length"] = r.length ? ordered_json(*r.length) : ordered_json(nullptr);
        j["reason"] = r.length ? "exact" : (r.cap_hit ? "cap-exceeded" : "not-representable");
        j["cap"] = ml_cap;
        emit(j);
    });

    // ---- realisable ----
    auto* realisable = app.add_subcommand("realisable", "is a family some system's PE?");
    std::string rl_sets, rl_method = "brute";
    bool rl_allow5 = false;
    realisable->add_option("--sets", rl_sets, "family file")->required();
    realisable->add_option("--method", rl_method, "brute|literal|existential|prefilter");
    realisable->add_flag("--allow-n5", rl_allow5, "permit the ~1M-relation scan at n=5");
    realisable->callback([&] {
        auto family = load_family(rl_sets);
        if (rl_method == "brute") {
            if (family.n == 5 && rl_allow5)
                std::cerr << "note: scanning all 2^20 attack relations with 32-subset "
                             "enumeration each; this can take a while\n";
            auto h = pexlab::realise_bruteforce(family, rl_allow5);
            ordered_json j;
            j["answer"] = h.has_value();
            j["method"] = rl_method;
            if (h) j["witness_af"] = pexlab::serialize_af(*h);
            emit(j);
        } else if (rl_method == "literal" || rl_method == "existential") {
            auto r = rl_method == "literal" ? pexlab::condition_literal(family)
                                            : pexlab::condition_existential(family);
            ordered_json j;
            j["answer"] = r.holds;
            j["method"] = rl_method;
            if (r.witness) {
                ordered_json w;
                w["T"] = pexlab::format_set(r.witness->t_set, family.n);
                if (r.witness->x >= 0) {
                    w["pair"] = {"x" + std::to_string(r.witness->x + 1),
                                 "x" + std::to_string(r.witness->y + 1)};
                    w["member"] = pexlab::format_set(
                        family.members[static_cast<std::size_t>(r.witness->member_index)].bits,
                        family.n);
                }
                j["witness"] = w;
            }
            emit(j);
        } else if (rl_method == "prefilter") {
            auto r = pexlab::prefilter(family);
            emit({{"answer", r.pass}, {"method", rl_method}, {"reasons", r.reasons}});
        } else {
            throw pexlab::ParseError("unknown method '" + rl_method + "'");
        }
    });

    // ---- survey ----
    auto* survey_cmd = app.add_subcommand("survey", "exhaustive realisability survey");
    int survey_n = 3;
    survey_cmd->add_option("--n", survey_n, "universe size (<= 4)")->required();
    survey_cmd->callback([&] { std::cout << pexlab::format_survey(pexlab::survey(survey_n, threads)); });

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "deterministic system generators");
    std::string gen_family, gen_out;
    int gen_n = 0, gen_t = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 0;
    gen->add_option("--family", gen_family, "k3|isolated|cycle|random")->required();
    gen->add_option("--n", gen_n, "argument count (isolated/cycle/random)");
    gen->add_option("--t", gen_t, "triangle count (k3)");
    gen->add_option("--p", gen_p, "attack probability (random)");
    gen->add_option("--seed", gen_seed, "splitmix64 seed (random)");
    gen->add_option("--out", gen_out, "write to file instead of stdout");
    gen->callback([&] {
        pexlab::ArgumentSystem h;
        if (gen_family == "k3")
            h = pexlab::gen_k3(gen_t);
        else if (gen_family == "isolated")
            h = pexlab::gen_isolated(gen_n);
        else if (gen_family == "cycle")
            h = pexlab::gen_cycle(gen_n);
        else if (gen_family == "random")
            h = pexlab::gen_random(gen_n, gen_p, gen_seed);
        else
            throw pexlab::ParseError("unknown family '" + gen_family + "'");
        if (gen_out.empty()) {
            pexlab::serialize_af(h, std::cout);
        } else {
            auto out = open_out(gen_out);
            pexlab::serialize_af(h, out);
        }
    });

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "encoding size/decision-cost report");
    std::string bn_family = "k3", bn_sem = "preferred";
    int bn_max = 3;
    double bn_p = 0.5;
    std::uint64_t bn_seed = 0;
    bench->add_option("--family", bn_family, "k3|isolated|cycle|random");
    bench->add_option("--max", bn_max, "largest size parameter")->capture_default_str();
    bench->add_option("--semantics", bn_sem, "preferred|stable");
    bench->add_option("--p", bn_p);
    bench->add_option("--seed", bn_seed);
    bench->callback([&] {
        std::vector<std::pair<std::string, pexlab::ArgumentSystem>> systems;
        auto label = [&](int k) { return bn_family + "(" + std::to_string(k) + ")"; };
        if (bn_family == "k3")
            for (int t = 1; t <= bn_max; ++t) systems.emplace_back(label(t), pexlab::gen_k3(t));
        else if (bn_family == "isolated")
            for (int k = 1; k <= bn_max; ++k) systems.emplace_back(label(k), pexlab::gen_isolated(k));
        else if (bn_family == "cycle")
            for (int k = 2; k <= bn_max; ++k) systems.emplace_back(label(k), pexlab::gen_cycle(k));
        else if (bn_family == "random")
            for (int k = 2; k <= bn_max; ++k)
                systems.emplace_back(label(k), pexlab::gen_random(k, bn_p, bn_seed));
        else
            throw pexlab::ParseError("unknown family '" + bn_family + "'");
        auto rows = pexlab::size_report(systems, parse_family_semantics(bn_sem));
        ordered_json out = ordered_json::array();
        for (const auto& r : rows)
            out.push_back({{"system", r.label},
                           {"n", r.n},
                           {"scheme", pexlab::to_string(r.scheme)},
                           {"semantics", pexlab::to_string(r.semantics)},
                           {"bits", r.bits},
                           {"rows", r.rows},
                           {"steps", r.steps}});
        emit({{"rows", out}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pexlab::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const pexlab::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const pexlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
