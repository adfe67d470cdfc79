// Command-line front end. Exit codes: 0 positive verdict or success,
// 1 negative verdict, 2 usage, input or internal error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nfaeq/bisim.hh"
#include "nfaeq/equivalence.hh"
#include "nfaeq/nerode.hh"
#include "nfaeq/selftest.hh"
#include "nfaeq/text_format.hh"

using namespace nfaeq;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

Nfa load_nfa(const std::string& path) { return parse_nfa(read_file(path), path); }

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::string map_to_string(const std::vector<std::size_t>& f) {
    std::string out;
    for (std::size_t s = 0; s < f.size(); ++s) out += (s ? " " : "") + std::to_string(s) + "->" + std::to_string(f[s]);
    return out;
}

BisimReport greatest(BisimKind kind, const Nfa& a, const Nfa& b) {
    switch (kind) {
        case BisimKind::ForwardBisim: return greatest_forward_bisim(a, b);
        case BisimKind::BackwardBisim: return greatest_backward_bisim(a, b);
        case BisimKind::BackwardForwardBisim: return greatest_backward_forward_bisim(a, b);
        case BisimKind::ForwardBackwardBisim: return greatest_forward_backward_bisim(a, b);
        case BisimKind::WeakForwardSim: return greatest_weak_forward_sim(a, b);
        case BisimKind::WeakForwardBisim: return greatest_weak_forward_bisim(a, b);
        case BisimKind::WeakBackwardSim: return greatest_weak_backward_sim(a, b);
        case BisimKind::WeakBackwardBisim: return greatest_weak_backward_bisim(a, b);
        default: break;
    }
    throw std::invalid_argument("no greatest-relation algorithm for kind '" + kind_name(kind) + "'");
}

int run_bisim(const std::string& kind, const std::string& pa, const std::string& pb) {
    const auto rep = greatest(*parse_kind(kind), load_nfa(pa), load_nfa(pb));
    if (!rep.exists()) {
        std::cout << "NONE\nviolated: " << join(*rep.failure, ", ") << '\n';
        return kNo;
    }
    if (rep.relation_is_empty) std::cout << "# empty relation; both automata have no initial states\n";
    std::cout << print_rel(*rep.relation);
    return kYes;
}

int run_check(const std::string& kind, const std::string& rel, const std::string& pa, const std::string& pb) {
    const auto phi = parse_rel(read_file(rel), rel);
    const auto rep = check(*parse_kind(kind), load_nfa(pa), load_nfa(pb), phi);
    for (const auto& c : rep.conditions) std::cout << c.name << ": " << (c.holds ? "ok" : "FAILED") << '\n';
    std::cout << (rep.holds() ? "HOLDS" : "DOES-NOT-HOLD") << '\n';
    return rep.holds() ? kYes : kNo;
}

int run_equiv(const std::string& mode, std::size_t maxlen, const std::string& pa, const std::string& pb) {
    const Nfa a = load_nfa(pa), b = load_nfa(pb);
    EquivVerdict v;
    if (mode == "fb") {
        v = fb_equivalent(a, b);
    } else if (mode == "wfb") {
        v = wfb_equivalent(a, b);
    } else {
        v = lang_equivalent(a, b, maxlen);
    }
    std::cout << (v.equivalent ? "EQUIVALENT" : "NOT-EQUIVALENT") << '\n';
    if (v.relation) std::cout << "relation:\n" << print_rel(*v.relation);
    if (v.factor_map) std::cout << "factor-map: " << map_to_string(*v.factor_map) << '\n';
    if (v.counterexample) std::cout << "counterexample: " << word_to_string(*v.counterexample) << '\n';
    if (mode == "lang" && v.equivalent) std::cout << "checked words up to length " << maxlen << '\n';
    return v.equivalent ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bisimulations and state reduction for nondeterministic automata"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    const std::vector<std::string> greatest_kinds{"fb", "bb", "bfb", "fbb", "wfs", "wfb", "wbs", "wbb"};
    const std::vector<std::string> all_kinds{"fs", "bs", "fb", "bb", "bfb", "fbb", "wfs", "wbs", "wfb", "wbb"};
    std::string kind, rel, mode, pa, pb;
    std::size_t maxlen = 6;

    auto* bisim = app.add_subcommand("bisim", "Greatest relation of a kind between two automata");
    bisim->add_option("--kind", kind, "Relation kind")->required()->check(CLI::IsMember(greatest_kinds));
    bisim->add_option("A", pa, "First automaton")->required();
    bisim->add_option("B", pb, "Second automaton")->required();

    auto* chk = app.add_subcommand("check", "Test every defining condition of a kind on a given relation");
    chk->add_option("--kind", kind, "Relation kind")->required()->check(CLI::IsMember(all_kinds));
    chk->add_option("--relation", rel, "Relation file (.rel)")->required();
    chk->add_option("A", pa, "First automaton")->required();
    chk->add_option("B", pb, "Second automaton")->required();

    auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two automata");
    equiv->add_option("--mode", mode, "fb, wfb or lang")->required()->check(CLI::IsMember({"fb", "wfb", "lang"}));
    equiv->add_option("--maxlen", maxlen, "Word length bound for lang mode")->capture_default_str();
    equiv->add_option("A", pa, "First automaton")->required();
    equiv->add_option("B", pb, "Second automaton")->required();

    auto* red = app.add_subcommand("reduce", "Factor by the greatest equivalence of a kind");
    red->add_option("--mode", mode, "fb, bb, wfb, wbb or alternate")
        ->required()
        ->check(CLI::IsMember({"fb", "bb", "wfb", "wbb", "alternate"}));
    red->add_option("A", pa, "Automaton")->required();

    bool reversed = false;
    auto* det = app.add_subcommand("determinize", "Nerode (or reverse Nerode) subset construction");
    det->add_flag("--reverse", reversed, "Build the reverse Nerode automaton");
    det->add_option("A", pa, "Automaton")->required();

    std::size_t states = 0;
    std::vector<std::string> alphabet;
    double density = 0.3;
    std::uint64_t seed = 1;
    auto* gen = app.add_subcommand("gen", "Random automaton");
    gen->add_option("--states", states, "Number of states")->required()->check(CLI::Range(1, 4096));
    gen->add_option("--alphabet", alphabet, "Comma separated symbols")->required()->delimiter(',');
    gen->add_option("--density", density, "Probability of each bit")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", seed, "Seed")->capture_default_str();

    SelftestOptions st;
    auto* self = app.add_subcommand("selftest", "Property checks on random automata");
    self->add_option("--states", st.max_states, "Largest automaton size")->capture_default_str()->check(CLI::Range(1, 12));
    self->add_option("--seed", st.seed, "Seed")->capture_default_str();
    self->add_option("--trials", st.trials, "Number of random pairs")->capture_default_str();
    self->add_option("--maxlen", st.maxlen, "Word length bound for language checks")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kYes : kError;
    }

    try {
        if (*bisim) return run_bisim(kind, pa, pb);
        if (*chk) return run_check(kind, rel, pa, pb);
        if (*equiv) return run_equiv(mode, maxlen, pa, pb);
        if (*red) {
            std::cout << print_nfa(reduce(load_nfa(pa), *parse_reduce_mode(mode)));
            return kYes;
        }
        if (*det) {
            const Nfa a = load_nfa(pa);
            std::cout << print_dfa(reversed ? reverse_nerode(a) : nerode(a));
            return kYes;
        }
        if (*gen) {
            std::cout << print_nfa(random_nfa(states, alphabet, density, seed));
            return kYes;
        }
        if (*self) {
            std::ostringstream log;
            const std::size_t failures = run_selftest(st, log);
            std::cout << log.str() << "selftest: " << st.trials << " trials, " << failures << " failures\n";
            return failures == 0 ? kYes : kNo;
        }
    } catch (const CrossCheckError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
