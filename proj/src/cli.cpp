#include "finring/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "finring/classes.hpp"
#include "finring/harness.hpp"

namespace finring {

namespace {

using nlohmann::json;

struct Config {
    bool json = false;
    bool dump_tables = false;
    std::size_t max_order = Limits{}.max_order;
    std::size_t materialize = Limits{}.materialize_threshold;
    std::string seed = "0x52314E47";

    Limits limits() const {
        Limits l;
        l.max_order = max_order;
        l.materialize_threshold = materialize;
        return l;
    }
};

std::uint64_t parse_seed(const std::string& s) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(s, &used, 0);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ArgumentError("invalid seed '" + s + "'");
}

FiniteRing load_ring(const std::string& text, const Config& cfg) {
    if (!text.empty() && text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw ArgumentError("cannot open table file '" + text.substr(1) + "'");
        FiniteRing r = read_tables(in, text.substr(1));
        check_order(r.order(), cfg.limits(), "table file");
        AxiomPolicy policy;
        policy.seed = parse_seed(cfg.seed);
        if (const auto* f = verify_axioms(r, policy).first_failure())
            throw ArgumentError("table file is not a ring: " + f->name + " fails");
        return r;
    }
    return build_ring(text, cfg.limits());
}

void print_set(std::ostream& out, const ElementSet& s) {
    bool first = true;
    for (Elem x : s.members()) {
        out << (first ? "" : " ") << x;
        first = false;
    }
    out << '\n';
}

json verdict_witness(const Verdict& v) {
    if (v.holds || !v.witness) return nullptr;
    if (v.witness2) return json::array({*v.witness, *v.witness2});
    return *v.witness;
}

int cmd_analyze(const std::string& expr, const Config& cfg, std::ostream& out) {
    FiniteRing r = load_ring(expr, cfg);
    Analysis a(r);
    ClassReport rep = classify(a);
    const std::pair<const char*, const ElementSet*> counts[] = {
        {"units", &a.units()},           {"jacobson", &a.jacobson()},       {"sqrtJacobson", &a.sqrt_jacobson()},
        {"nilpotents", &a.nilpotents()}, {"idempotents", &a.idempotents()}, {"center", &a.center()},
    };
    if (cfg.json) {
        json j;
        j["expr"] = r.label();
        j["order"] = r.order();
        j["characteristic"] = r.characteristic();
        for (const auto& [k, s] : counts) j["counts"][k] = s->size();
        for (RingClass c : kAllClasses) {
            j["predicates"][std::string(class_key(c))] = rep[c].holds;
            j["witnesses"][std::string(class_key(c))] = verdict_witness(rep[c]);
        }
        out << j.dump(2) << '\n';
    } else {
        out << "ring: " << r.label() << "\norder: " << r.order() << "\ncharacteristic: " << r.characteristic() << '\n';
        for (const auto& [k, s] : counts) out << "|" << k << "|: " << s->size() << '\n';
        for (RingClass c : kAllClasses) {
            const Verdict& v = rep[c];
            out << std::left << std::setw(16) << class_name(c) << (v.holds ? "yes" : "no");
            if (!v.holds && v.witness) {
                out << "  witness " << *v.witness;
                if (v.witness2) out << ", " << *v.witness2;
            }
            out << '\n';
        }
    }
    if (cfg.dump_tables) write_tables(out, r);
    return kExitOk;
}

int cmd_table(const std::string& expr, const std::string& what, const Config& cfg, std::ostream& out) {
    FiniteRing r = load_ring(expr, cfg);
    if (what == "add" || what == "mul") {
        // The dump carries both tables; `what` selects which one follows the header.
        const Elem n = Elem(r.order());
        out << "order " << n << "\none " << r.one() << '\n';
        for (Elem x = 0; x < n; ++x) {
            for (Elem y = 0; y < n; ++y) out << (y ? " " : "") << (what == "add" ? r.add(x, y) : r.mul(x, y));
            out << '\n';
        }
        return kExitOk;
    }
    Analysis a(r);
    const ElementSet* s = nullptr;
    if (what == "units") s = &a.units();
    else if (what == "jacobson") s = &a.jacobson();
    else if (what == "sqrtj") s = &a.sqrt_jacobson();
    else if (what == "nilpotents") s = &a.nilpotents();
    else if (what == "idempotents") s = &a.idempotents();
    else if (what == "center") s = &a.center();
    else throw ArgumentError("unknown table '" + what + "'");
    if (cfg.json)
        out << json(s->members()).dump() << '\n';
    else
        print_set(out, *s);
    return kExitOk;
}

json report_json(const Report& rep) {
    json j;
    j["corpus"] = rep.corpus;
    j["corpusSize"] = rep.corpus_size;
    j["seed"] = rep.seed;
    j["axiomFailures"] = json::array();
    for (const auto& f : rep.axiom_failures)
        j["axiomFailures"].push_back({{"ring", f.ring}, {"axiom", f.axiom}, {"witness", f.witness}});
    j["claims"] = json::array();
    for (const auto& c : rep.claims) {
        json cj{{"id", c.id},           {"name", c.name},       {"statement", c.statement},
                {"domain", c.domain},   {"passed", c.passed()}, {"instances", c.instances.size()},
                {"vacuous", c.vacuous}, {"notes", c.notes},     {"seconds", c.seconds}};
        cj["counterexamples"] = json::array();
        for (const auto& i : c.instances)
            if (!i.passed) cj["counterexamples"].push_back({{"rings", i.rings}, {"detail", i.detail}});
        j["claims"].push_back(std::move(cj));
    }
    j["skipped"] = json::array();
    for (const auto& s : rep.skipped) j["skipped"].push_back({{"id", s.id}, {"reason", s.reason}});
    j["notes"] = rep.notes;
    j["passed"] = rep.passed_count();
    j["failed"] = rep.failed_count();
    j["seconds"] = rep.seconds;
    return j;
}

int cmd_verify(const std::vector<std::string>& claims, const std::string& corpus_path, unsigned threads,
               const Config& cfg, std::ostream& out) {
    HarnessOptions opt;
    opt.limits = cfg.limits();
    opt.axioms.seed = parse_seed(cfg.seed);
    opt.threads = threads;
    Corpus corpus;
    if (corpus_path.empty()) {
        corpus = default_corpus(opt.limits);
    } else {
        std::ifstream in(corpus_path);
        if (!in) throw ArgumentError("cannot open corpus '" + corpus_path + "'");
        corpus = Corpus::parse(in, corpus_path, opt.limits);
    }
    Report rep = run_suite(corpus, claims, opt);
    if (cfg.json)
        out << report_json(rep).dump(2) << '\n';
    else
        print_report(out, rep);
    return rep.passed() ? kExitOk : kExitCounterexample;
}

bool is_2a3b(std::uint64_t n) {
    while (n % 2 == 0) n /= 2;
    while (n % 3 == 0) n /= 3;
    return n == 1;
}

int cmd_enumerate(const std::string& family, std::uint64_t max, const Config& cfg, std::ostream& out) {
    if (family != "zmod") throw ArgumentError("unknown family '" + family + "' (expected zmod)");
    if (max < 2) throw ArgumentError("enumerate bound must be at least 2");
    constexpr RingClass cols[] = {RingClass::UU,     RingClass::UJ,        RingClass::TwoUU,
                                  RingClass::TwoUJ,  RingClass::SqrtJU,    RingClass::TwoSqrtJU,
                                  RingClass::Local};
    bool deviation = false;
    json rows = json::array();
    if (!cfg.json) {
        out << std::left << std::setw(6) << "n" << std::setw(8) << "|U|" << std::setw(8) << "|J|";
        for (RingClass c : cols) out << std::setw(10) << class_name(c);
        out << "law\n";
    }
    for (std::uint64_t n = 2; n <= max; ++n) {
        Analysis a(zmod(n, cfg.limits()));
        const bool law = is_2a3b(n);
        const bool got = is_two_sqrt_ju(a);
        deviation = deviation || law != got;
        if (cfg.json) {
            json row{{"n", n}, {"units", a.units().size()}, {"jacobson", a.jacobson().size()}, {"law", law},
                     {"status", law == got ? "ok" : "FAIL"}};
            for (RingClass c : cols) row["predicates"][std::string(class_key(c))] = check_class(a, c).holds;
            rows.push_back(std::move(row));
        } else {
            out << std::setw(6) << n << std::setw(8) << a.units().size() << std::setw(8) << a.jacobson().size();
            for (RingClass c : cols) out << std::setw(10) << (check_class(a, c).holds ? "true" : "false");
            out << (law == got ? "ok" : "FAIL") << '\n';
        }
    }
    if (cfg.json) out << json{{"family", family}, {"max", max}, {"rows", rows}, {"deviations", deviation}}.dump(2) << '\n';
    return deviation ? kExitCounterexample : kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite ring analysis and theorem checking"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Config cfg;
    app.add_flag("--json", cfg.json, "Emit JSON");
    app.add_flag("--dump-tables", cfg.dump_tables, "Append the add/mul tables to analyze output");
    app.add_option("--max-order", cfg.max_order, "Largest ring order to construct")->check(CLI::PositiveNumber);
    app.add_option("--materialize", cfg.materialize, "Largest order stored as full tables");
    app.add_option("--seed", cfg.seed, "Seed for sampled axiom checks");

    std::string expr, what, corpus_path, family;
    std::vector<std::string> claims;
    unsigned threads = 0;
    std::uint64_t max = 0;

    auto* analyze = app.add_subcommand("analyze", "Structural counts and ring classes");
    analyze->add_option("expr", expr, "Ring expression or @table-file")->required();
    auto* table = app.add_subcommand("table", "List a structural set or a table");
    table->add_option("expr", expr, "Ring expression or @table-file")->required();
    table->add_option("what", what, "units|jacobson|sqrtj|nilpotents|idempotents|center|add|mul")
        ->required()
        ->check(CLI::IsMember({"units", "jacobson", "sqrtj", "nilpotents", "idempotents", "center", "add", "mul"}));
    auto* verify = app.add_subcommand("verify", "Run the theorem suite");
    verify->add_option("--claims", claims, "Comma-separated claim ids")->delimiter(',');
    verify->add_option("--corpus", corpus_path, "Corpus file, one expression per line");
    verify->add_option("--threads", threads, "Worker threads (0 = all cores)");
    auto* enumerate = app.add_subcommand("enumerate", "Sweep a ring family");
    enumerate->add_option("family", family, "zmod")->required();
    enumerate->add_option("max", max, "Largest parameter")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        parse_seed(cfg.seed);
        if (*analyze) return cmd_analyze(expr, cfg, out);
        if (*table) return cmd_table(expr, what, cfg, out);
        if (*verify) return cmd_verify(claims, corpus_path, threads, cfg, out);
        if (*enumerate) return cmd_enumerate(family, max, cfg, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace finring
