#include "specalg/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "specalg/audit.hpp"
#include "specalg/errors.hpp"
#include "specalg/textio.hpp"

namespace specalg {

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kParse = 3;
constexpr int kUndefined = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SpecFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

const Spec& pick(const SpecFile& file, const std::string& name) {
    const Spec* s = file.find(name);
    if (!s) throw UsageError("no spec named '" + name + "' in file");
    return *s;
}

mts::Rule parse_rule(const std::string& r) {
    if (r == "meet") return mts::Rule::Meet;
    if (r == "join") return mts::Rule::Join;
    throw UsageError("unknown mts rule " + r);
}

void emit(std::ostream& out, const std::string& rendered, const std::string& out_path) {
    if (out_path.empty()) {
        out << rendered;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot write " + out_path);
    f << rendered;
}

int run_refine(const SpecFile& file, const std::string& l, const std::string& r,
               std::ostream& out) {
    const Spec& a = pick(file, l);
    const Spec& b = pick(file, r);
    if (a.index() != b.index()) throw SignatureMismatch();
    bool holds = std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            return
                [&] {
                    if constexpr (std::is_same_v<T, fa::Nfa>)
                        return fa::refines(x, std::get<fa::Nfa>(b));
                    else if constexpr (std::is_same_v<T, mts::Mts>)
                        return mts::refines(x, std::get<mts::Mts>(b));
                    else
                        return ia::refines(x, std::get<ia::InterfaceAutomaton>(b));
                }();
        },
        a);
    out << (holds ? "refines" : "does not refine") << "\n";
    return holds ? kOk : kFalse;
}

int run_binop(const std::string& op, const SpecFile& file, const std::string& l,
              const std::string& r, mts::Rule rule, const std::string& out_path,
              std::ostream& out) {
    const Spec& a = pick(file, l);
    const Spec& b = pick(file, r);
    if (a.index() != b.index()) throw SignatureMismatch();
    if (const auto* x = std::get_if<fa::Nfa>(&a)) {
        const auto& y = std::get<fa::Nfa>(b);
        fa::Nfa res = op == "conjoin"   ? fa::conjoin(*x, y)
                      : op == "compose" ? fa::compose(*x, y)
                                        : fa::disjoin(*x, y);
        emit(out, render_spec(res, "result"), out_path);
        return kOk;
    }
    if (const auto* x = std::get_if<mts::Mts>(&a)) {
        const auto& y = std::get<mts::Mts>(b);
        mts::Mts res = op == "conjoin"   ? mts::conjoin(*x, y)
                       : op == "compose" ? mts::compose(*x, y, rule)
                                         : mts::disjoin(*x, y);
        emit(out, render_spec(res, "result"), out_path);
        return kOk;
    }
    const auto& x = std::get<ia::InterfaceAutomaton>(a);
    const auto& y = std::get<ia::InterfaceAutomaton>(b);
    if (op != "compose") throw ControlConflict();  // no ia conjunction/disjunction operator
    auto res = ia::optimistic(x, y);
    if (!res) {
        out << "incompatible\n";
        return kFalse;
    }
    emit(out, render_spec(*res, "result"), out_path);
    return kOk;
}

int run_quotient(const SpecFile& file, const std::string& l, const std::string& r,
                 const std::string& kind, const std::string& out_path, std::ostream& out) {
    const auto* b = std::get_if<fa::Nfa>(&pick(file, l));
    const auto* a = std::get_if<fa::Nfa>(&pick(file, r));
    if (!b || !a) throw ControlConflict();  // quotients exist in the fa theory only
    fa::Nfa res = kind == "conj" ? fa::conj_quotient(*b, *a) : fa::par_quotient(*b, *a);
    emit(out, render_spec(res, "result"), out_path);
    return kOk;
}

int run_compat(const SpecFile& file, const std::string& l, const std::string& r,
               const std::string& mode, std::ostream& out) {
    const auto* a = std::get_if<ia::InterfaceAutomaton>(&pick(file, l));
    const auto* b = std::get_if<ia::InterfaceAutomaton>(&pick(file, r));
    if (!a || !b) throw UsageError("compat requires two interface automata");
    std::optional<ia::InterfaceAutomaton> res;
    if (mode == "pessimistic") {
        res = ia::pessimistic(*a, *b);
    } else {
        auto prod = ia::product(*a, *b);
        res = mode == "optimistic" ? ia::env_prune(prod) : ia::comp_prune(prod);
    }
    if (!res) {
        out << "incompatible\n";
        return kFalse;
    }
    out << "compatible\n" << render_spec(*res, "result");
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"specification-algebra workbench"};
    app.require_subcommand(1);

    std::string file, left, right, out_path;
    std::string rule_name = "meet", kind = "conj", mode = "optimistic";
    GenConfig cfg;
    std::string gen_mode = "random", format = "text";
    int actions = 2;

    auto add_pair = [&](CLI::App* sub, bool with_output) {
        sub->add_option("file", file, "spec file")->required();
        sub->add_option("--left", left)->required();
        sub->add_option("--right", right)->required();
        if (with_output) sub->add_option("-o,--output", out_path);
    };

    auto* c_refine = app.add_subcommand("refine", "does left refine right?");
    add_pair(c_refine, false);
    auto* c_conjoin = app.add_subcommand("conjoin", "greatest lower bound");
    add_pair(c_conjoin, true);
    auto* c_compose = app.add_subcommand("compose", "parallel composition");
    add_pair(c_compose, true);
    c_compose->add_option("--mts-rule", rule_name)->check(CLI::IsMember({"meet", "join"}));
    auto* c_disjoin = app.add_subcommand("disjoin", "least upper bound");
    add_pair(c_disjoin, true);
    auto* c_quotient = app.add_subcommand("quotient", "greatest x with right op x <= left");
    add_pair(c_quotient, true);
    c_quotient->add_option("--kind", kind)->check(CLI::IsMember({"conj", "par"}));
    auto* c_compat = app.add_subcommand("compat", "interface-automata compatibility");
    add_pair(c_compat, false);
    c_compat->add_option("--mode", mode)
        ->check(CLI::IsMember({"optimistic", "pessimistic", "component"}));

    auto* c_audit = app.add_subcommand("audit", "law audit");
    c_audit->add_option("--theory", cfg.theory)->required()->check(CLI::IsMember({"fa", "mts", "ia"}));
    c_audit->add_option("--mts-rule", rule_name)->check(CLI::IsMember({"meet", "join"}));
    c_audit->add_option("--samples", cfg.sample_count);
    c_audit->add_option("--seed", cfg.seed);
    c_audit->add_option("--max-states", cfg.max_states);
    c_audit->add_option("--alphabet-size", cfg.alphabet_size);
    c_audit->add_option("--mode", gen_mode)->check(CLI::IsMember({"random", "exhaustive"}));
    c_audit->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* c_enum = app.add_subcommand("enumerate", "list every spec within bounds");
    c_enum->add_option("--theory", cfg.theory)->required()->check(CLI::IsMember({"fa", "mts", "ia"}));
    c_enum->add_option("--max-states", cfg.max_states)->required();
    c_enum->add_option("--alphabet-size", cfg.alphabet_size);

    auto* c_nouni = app.add_subcommand("no-universal",
                                       "bounded search defeating every universal-ia candidate");
    int nu_states = 2;
    c_nouni->add_option("--max-states", nu_states);
    c_nouni->add_option("--actions", actions);
    c_nouni->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> argv = args;
    try {
        argv.insert(argv.begin(), "specalg");
        std::vector<char*> cargv;
        for (auto& s : argv) cargv.push_back(s.data());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        mts::Rule rule = parse_rule(rule_name);
        if (app.got_subcommand(c_refine)) return run_refine(load(file), left, right, out);
        if (app.got_subcommand(c_conjoin))
            return run_binop("conjoin", load(file), left, right, rule, out_path, out);
        if (app.got_subcommand(c_compose))
            return run_binop("compose", load(file), left, right, rule, out_path, out);
        if (app.got_subcommand(c_disjoin))
            return run_binop("disjoin", load(file), left, right, rule, out_path, out);
        if (app.got_subcommand(c_quotient))
            return run_quotient(load(file), left, right, kind, out_path, out);
        if (app.got_subcommand(c_compat)) return run_compat(load(file), left, right, mode, out);
        if (app.got_subcommand(c_audit)) {
            cfg.mts_rule = rule;
            cfg.mode = gen_mode == "random" ? GenMode::Random : GenMode::Exhaustive;
            AuditReport report = audit(make_handle(cfg), cfg);
            out << (format == "json" ? report_to_json(report) : report_to_text(report));
            return report.any_failure() ? kFalse : kOk;
        }
        if (app.got_subcommand(c_enum)) {
            int i = 0;
            for (const auto& s : enumerate_all(cfg)) out << render_spec(s, "e" + std::to_string(i++));
            return kOk;
        }
        if (app.got_subcommand(c_nouni)) {
            auto table = ia::no_universal_witness({nu_states, actions});
            bool all_defeated = true;
            if (format == "json") {
                out << "[\n";
                for (std::size_t i = 0; i < table.size(); ++i) {
                    const auto& e = table[i];
                    out << "  {\"candidate\": " << nlohmann::json(render_spec(e.candidate, "c"))
                        << ", \"reason\": " << nlohmann::json(e.reason)
                        << ", \"witness\": " << nlohmann::json(render_spec(e.witness, "w")) << "}"
                        << (i + 1 < table.size() ? ",\n" : "\n");
                    if (e.reason == "not defeated") all_defeated = false;
                }
                out << "]\n";
            } else {
                for (const auto& e : table) {
                    out << "candidate defeated by " << e.reason << ":\n"
                        << render_spec(e.candidate, "candidate") << render_spec(e.witness, "witness")
                        << "\n";
                    if (e.reason == "not defeated") all_defeated = false;
                }
                out << table.size() << " candidates, all defeated: " << (all_defeated ? "yes" : "no")
                    << "\n";
            }
            return all_defeated ? kOk : kFalse;
        }
        return kUsage;
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kParse;
    } catch (const EnumerationBound& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const AlphabetMismatch& e) {
        err << e.what() << "\n";
        return kUndefined;
    } catch (const SignatureMismatch& e) {
        err << e.what() << "\n";
        return kUndefined;
    } catch (const ControlConflict& e) {
        err << e.what() << "\n";
        return kUndefined;
    } catch (const NondeterministicMts& e) {
        err << e.what() << "\n";
        return kUndefined;
    } catch (const StateBlowup& e) {
        err << e.what() << "\n";
        return kUndefined;
    }
}

}  // namespace specalg
