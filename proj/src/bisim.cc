#include "nfaeq/bisim.hh"

#include <array>
#include <stdexcept>

#include "bisim_internal.hh"

namespace nfaeq {

namespace {

constexpr std::array<std::pair<BisimKind, const char*>, 10> kKindNames{{
    {BisimKind::ForwardSim, "fs"},
    {BisimKind::BackwardSim, "bs"},
    {BisimKind::ForwardBisim, "fb"},
    {BisimKind::BackwardBisim, "bb"},
    {BisimKind::BackwardForwardBisim, "bfb"},
    {BisimKind::ForwardBackwardBisim, "fbb"},
    {BisimKind::WeakForwardSim, "wfs"},
    {BisimKind::WeakBackwardSim, "wbs"},
    {BisimKind::WeakForwardBisim, "wfb"},
    {BisimKind::WeakBackwardBisim, "wbb"},
}};

// Forward simulation conditions for phi from a to b.
void forward_sim(std::vector<Condition>& out, const Nfa& a, const Nfa& b, const BoolRel& phi,
                 const std::string& dir) {
    const BoolRel inv = inverse(phi);
    out.push_back({"initial-" + dir, a.sigma().subset_of(vec_rel(b.sigma(), inv))});
    for (std::size_t x = 0; x < a.num_symbols(); ++x) {
        out.push_back({"transition-" + dir + ":" + a.alphabet()[x],
                       subset_of(compose(inv, a.delta(x)), compose(b.delta(x), inv))});
    }
    out.push_back({"terminal-" + dir, rel_vec(inv, a.tau()).subset_of(b.tau())});
}

// Backward simulation conditions for phi from a to b.
void backward_sim(std::vector<Condition>& out, const Nfa& a, const Nfa& b, const BoolRel& phi,
                  const std::string& dir) {
    out.push_back({"initial-" + dir, vec_rel(a.sigma(), phi).subset_of(b.sigma())});
    for (std::size_t x = 0; x < a.num_symbols(); ++x) {
        out.push_back({"transition-" + dir + ":" + a.alphabet()[x],
                       subset_of(compose(a.delta(x), phi), compose(phi, b.delta(x)))});
    }
    out.push_back({"terminal-" + dir, a.tau().subset_of(rel_vec(phi, b.tau()))});
}

void weak_forward_sim(std::vector<Condition>& out, const Nfa& a, const Nfa& b, const BoolRel& phi,
                      const std::vector<VecPair>& pairs, bool swapped, const std::string& dir) {
    const BoolRel inv = inverse(phi);
    bool right = true;
    for (const auto& [ta, tb] : pairs) {
        const BoolVec& from = swapped ? tb : ta;
        const BoolVec& to = swapped ? ta : tb;
        if (!rel_vec(inv, from).subset_of(to)) {
            right = false;
            break;
        }
    }
    out.push_back({"right-languages-" + dir, right});
    out.push_back({"initial-" + dir, a.sigma().subset_of(vec_rel(b.sigma(), inv))});
}

void weak_backward_sim(std::vector<Condition>& out, const Nfa& a, const Nfa& b, const BoolRel& phi,
                       const std::vector<VecPair>& pairs, bool swapped, const std::string& dir) {
    bool left = true;
    for (const auto& [sa, sb] : pairs) {
        const BoolVec& from = swapped ? sb : sa;
        const BoolVec& to = swapped ? sa : sb;
        if (!vec_rel(from, phi).subset_of(to)) {
            left = false;
            break;
        }
    }
    out.push_back({"left-languages-" + dir, left});
    out.push_back({"terminal-" + dir, a.tau().subset_of(rel_vec(phi, b.tau()))});
}

}  // namespace

std::string kind_name(BisimKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    throw std::invalid_argument("kind_name: unknown kind");
}

std::optional<BisimKind> parse_kind(const std::string& name) {
    for (const auto& [k, n] : kKindNames) {
        if (name == n) return k;
    }
    return std::nullopt;
}

bool CheckReport::holds() const {
    for (const auto& c : conditions) {
        if (!c.holds) return false;
    }
    return true;
}

std::vector<std::string> CheckReport::violated() const {
    std::vector<std::string> out;
    for (const auto& c : conditions) {
        if (!c.holds) out.push_back(c.name);
    }
    return out;
}

CheckReport check(BisimKind kind, const Nfa& a, const Nfa& b, const BoolRel& phi) {
    require_same_alphabet(a, b, "check");
    if (phi.rows() != a.size() || phi.cols() != b.size()) {
        throw DimensionError("check: relation is " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()) +
                             ", automata have " + std::to_string(a.size()) + " and " + std::to_string(b.size()) +
                             " states");
    }
    if (phi.empty()) throw std::invalid_argument("check: relation is empty");

    CheckReport rep{kind, {}};
    auto& c = rep.conditions;
    const BoolRel inv = inverse(phi);
    switch (kind) {
        case BisimKind::ForwardSim:
            forward_sim(c, a, b, phi, "forward");
            break;
        case BisimKind::BackwardSim:
            backward_sim(c, a, b, phi, "forward");
            break;
        case BisimKind::ForwardBisim:
            forward_sim(c, a, b, phi, "forward");
            forward_sim(c, b, a, inv, "backward");
            break;
        case BisimKind::BackwardBisim:
            backward_sim(c, a, b, phi, "forward");
            backward_sim(c, b, a, inv, "backward");
            break;
        case BisimKind::BackwardForwardBisim:
            backward_sim(c, a, b, phi, "forward");
            forward_sim(c, b, a, inv, "backward");
            break;
        case BisimKind::ForwardBackwardBisim:
            forward_sim(c, a, b, phi, "forward");
            backward_sim(c, b, a, inv, "backward");
            break;
        case BisimKind::WeakForwardSim:
        case BisimKind::WeakForwardBisim: {
            const auto pairs = reachable_terminal_pairs(a, b);
            weak_forward_sim(c, a, b, phi, pairs, false, "forward");
            if (kind == BisimKind::WeakForwardBisim) weak_forward_sim(c, b, a, inv, pairs, true, "backward");
            break;
        }
        case BisimKind::WeakBackwardSim:
        case BisimKind::WeakBackwardBisim: {
            const auto pairs = reachable_initial_pairs(a, b);
            weak_backward_sim(c, a, b, phi, pairs, false, "forward");
            if (kind == BisimKind::WeakBackwardBisim) weak_backward_sim(c, b, a, inv, pairs, true, "backward");
            break;
        }
    }
    return rep;
}

namespace detail {

std::string mirror_condition(const std::string& name) {
    if (name.starts_with("initial-")) return "terminal-" + name.substr(8);
    if (name.starts_with("terminal-")) return "initial-" + name.substr(9);
    if (name.starts_with("right-languages-")) return "left-languages-" + name.substr(16);
    if (name.starts_with("left-languages-")) return "right-languages-" + name.substr(15);
    return name;
}

BisimReport mirror(BisimReport rep, BisimKind kind) {
    rep.kind = kind;
    if (rep.failure) {
        for (auto& f : *rep.failure) f = mirror_condition(f);
    }
    return rep;
}

// Shared tail of the fixpoint algorithms: fixpoint has been reached, now test
// the two remaining conditions.
BisimReport finish(BisimKind kind, BoolRel phi, std::size_t k, std::vector<BoolRel> seq,
                   std::vector<Condition> acceptance) {
    BisimReport rep{kind, std::nullopt, k, std::move(seq), std::nullopt, false};
    std::vector<std::string> failed;
    for (const auto& c : acceptance) {
        if (!c.holds) failed.push_back(c.name);
    }
    if (failed.empty()) {
        rep.relation_is_empty = phi.empty();
        rep.relation = std::move(phi);
    } else {
        rep.failure = std::move(failed);
    }
    return rep;
}

}  // namespace detail

namespace {

template <typename Step>
std::pair<std::vector<BoolRel>, std::size_t> iterate(BoolRel phi1, Step step) {
    std::vector<BoolRel> seq{std::move(phi1)};
    while (!seq.back().empty()) {
        BoolRel next = step(seq.back());
        if (next == seq.back()) break;
        seq.push_back(std::move(next));
    }
    return {seq, seq.size()};
}

}  // namespace

BisimReport greatest_forward_bisim(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b, "greatest_forward_bisim");
    auto [seq, k] = iterate(biarrow(a.tau(), b.tau()), [&](const BoolRel& phi) {
        const BoolRel inv = inverse(phi);
        BoolRel next = phi;
        for (std::size_t x = 0; x < a.num_symbols(); ++x) {
            const BoolRel& da = a.delta(x);
            const BoolRel& db = b.delta(x);
            next = intersect(next, inverse(residual_left(compose(db, inv), da)));
            next = intersect(next, residual_left(compose(da, phi), db));
        }
        return next;
    });
    const BoolRel phi = seq.back();
    const BoolRel inv = inverse(phi);
    std::vector<Condition> acc{
        {"initial-forward", a.sigma().subset_of(vec_rel(b.sigma(), inv))},
        {"initial-backward", b.sigma().subset_of(vec_rel(a.sigma(), phi))},
    };
    return detail::finish(BisimKind::ForwardBisim, phi, k, std::move(seq), std::move(acc));
}

BisimReport greatest_backward_forward_bisim(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b, "greatest_backward_forward_bisim");
    const BoolRel phi1 = intersect(arrow_right(a.sigma(), b.sigma()), arrow_left(a.tau(), b.tau()));
    auto [seq, k] = iterate(phi1, [&](const BoolRel& phi) {
        BoolRel next = phi;
        for (std::size_t x = 0; x < a.num_symbols(); ++x) {
            const BoolRel& da = a.delta(x);
            const BoolRel& db = b.delta(x);
            next = intersect(next, residual_left(compose(da, phi), db));
            next = intersect(next, residual_right(compose(phi, db), da));
        }
        return next;
    });
    const BoolRel phi = seq.back();
    std::vector<Condition> acc{
        {"terminal-forward", a.tau().subset_of(rel_vec(phi, b.tau()))},
        {"initial-backward", b.sigma().subset_of(vec_rel(a.sigma(), phi))},
    };
    return detail::finish(BisimKind::BackwardForwardBisim, phi, k, std::move(seq), std::move(acc));
}

BisimReport greatest_backward_bisim(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b, "greatest_backward_bisim");
    return detail::mirror(greatest_forward_bisim(reverse(a), reverse(b)), BisimKind::BackwardBisim);
}

BisimReport greatest_forward_backward_bisim(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b, "greatest_forward_backward_bisim");
    return detail::mirror(greatest_backward_forward_bisim(reverse(a), reverse(b)),
                          BisimKind::ForwardBackwardBisim);
}

namespace {

Partition as_equivalence(const BisimReport& rep, const char* op) {
    if (!rep.relation || !is_equivalence(*rep.relation)) {
        throw std::logic_error(std::string(op) + ": greatest bisimulation on an automaton is not an equivalence");
    }
    return Partition::from_relation(*rep.relation);
}

}  // namespace

Partition greatest_fb_equivalence(const Nfa& a) {
    return as_equivalence(greatest_forward_bisim(a, a), "greatest_fb_equivalence");
}

Partition greatest_bb_equivalence(const Nfa& a) {
    return as_equivalence(greatest_backward_bisim(a, a), "greatest_bb_equivalence");
}

}  // namespace nfaeq
