// Weak forward and backward (bi)simulations.

#include <set>

#include "bisim_internal.hh"
#include "nfaeq/bisim.hh"

namespace nfaeq {

namespace {

// Synchronised breadth-first closure of (va, vb) under one step per symbol.
template <typename Step>
std::vector<VecPair> explore(const Nfa& a, const Nfa& b, VecPair start, Step step) {
    std::vector<VecPair> order{start};
    std::set<VecPair> seen{std::move(start)};
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t x = 0; x < a.num_symbols(); ++x) {
            VecPair next{step(a, x, order[i].first), step(b, x, order[i].second)};
            if (seen.insert(next).second) order.push_back(std::move(next));
        }
    }
    return order;
}

BoolRel meet_of_arrows(const std::vector<VecPair>& pairs, bool both_ways) {
    const auto& [ta, tb] = pairs.front();
    BoolRel out = BoolRel::full(ta.size(), tb.size());
    for (const auto& [u, v] : pairs) out = intersect(out, both_ways ? biarrow(u, v) : arrow_right(u, v));
    return out;
}

}  // namespace

std::vector<VecPair> reachable_terminal_pairs(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b, "reachable_terminal_pairs");
    return explore(a, b, {a.tau(), b.tau()},
                   [](const Nfa& m, std::size_t x, const BoolVec& t) { return rel_vec(m.delta(x), t); });
}

std::vector<VecPair> reachable_initial_pairs(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b, "reachable_initial_pairs");
    return explore(a, b, {a.sigma(), b.sigma()},
                   [](const Nfa& m, std::size_t x, const BoolVec& s) { return vec_rel(s, m.delta(x)); });
}

BisimReport greatest_weak_forward_sim(const Nfa& a, const Nfa& b) {
    const auto pairs = reachable_terminal_pairs(a, b);
    BoolRel lambda = meet_of_arrows(pairs, false);
    std::vector<Condition> acc{{"initial-forward", a.sigma().subset_of(vec_rel(b.sigma(), inverse(lambda)))}};
    return detail::finish(BisimKind::WeakForwardSim, std::move(lambda), pairs.size(), {}, std::move(acc));
}

BisimReport greatest_weak_forward_bisim(const Nfa& a, const Nfa& b) {
    const auto pairs = reachable_terminal_pairs(a, b);
    BoolRel mu = meet_of_arrows(pairs, true);
    std::vector<Condition> acc{
        {"initial-forward", a.sigma().subset_of(vec_rel(b.sigma(), inverse(mu)))},
        {"initial-backward", b.sigma().subset_of(vec_rel(a.sigma(), mu))},
    };
    return detail::finish(BisimKind::WeakForwardBisim, std::move(mu), pairs.size(), {}, std::move(acc));
}

BisimReport greatest_weak_backward_sim(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b, "greatest_weak_backward_sim");
    return detail::mirror(greatest_weak_forward_sim(reverse(a), reverse(b)), BisimKind::WeakBackwardSim);
}

BisimReport greatest_weak_backward_bisim(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b, "greatest_weak_backward_bisim");
    return detail::mirror(greatest_weak_forward_bisim(reverse(a), reverse(b)), BisimKind::WeakBackwardBisim);
}

Partition wfb_equivalence_bound(const Nfa& a) {
    const auto pairs = reachable_terminal_pairs(a, a);
    return Partition::from_relation(meet_of_arrows(pairs, true));
}

Partition wbb_equivalence_bound(const Nfa& a) { return wfb_equivalence_bound(reverse(a)); }

}  // namespace nfaeq
