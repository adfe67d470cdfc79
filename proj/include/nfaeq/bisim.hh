// Simulation and bisimulation checkers, and the greatest-fixpoint algorithms
// that compute the greatest relation of each kind between two automata.
//
// Condition names carry a suffix telling which relation they constrain:
// "-forward" is a condition on phi (from A to B), "-backward" the matching
// condition on phi^-1 (from B to A). Transition conditions are reported per
// symbol as "transition-forward:x".

#ifndef NFAEQ_BISIM_HH
#define NFAEQ_BISIM_HH

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nfaeq/automaton.hh"
#include "nfaeq/relcalc.hh"

namespace nfaeq {

enum class BisimKind {
    ForwardSim,
    BackwardSim,
    ForwardBisim,
    BackwardBisim,
    BackwardForwardBisim,
    ForwardBackwardBisim,
    WeakForwardSim,
    WeakBackwardSim,
    WeakForwardBisim,
    WeakBackwardBisim,
};

/// Short names used on the command line: fs bs fb bb bfb fbb wfs wbs wfb wbb.
std::string kind_name(BisimKind kind);
std::optional<BisimKind> parse_kind(const std::string& name);

struct Condition {
    std::string name;
    bool holds;
};

struct CheckReport {
    BisimKind kind;
    std::vector<Condition> conditions;

    bool holds() const;
    std::vector<std::string> violated() const;
};

/// Evaluates every defining inclusion of the kind. Weak kinds quantify over the
/// synchronised reachable (tau_u, tau_u) pairs (sigma_u pairs for weak backward
/// kinds), which covers every word. Throws on shape or alphabet mismatch and
/// on an empty phi.
CheckReport check(BisimKind kind, const Nfa& a, const Nfa& b, const BoolRel& phi);

struct BisimReport {
    BisimKind kind;
    std::optional<BoolRel> relation;   // the greatest relation, when one exists
    std::size_t iterations = 0;        // index k of the stable phi_k; pairs explored for weak kinds
    std::vector<BoolRel> sequence;     // phi_1 .. phi_k for the fixpoint kinds
    std::optional<std::vector<std::string>> failure;   // violated acceptance conditions
    // Accepted although the relation is empty; only possible with empty sigma vectors.
    bool relation_is_empty = false;

    bool exists() const { return relation.has_value(); }
};

BisimReport greatest_forward_bisim(const Nfa& a, const Nfa& b);
BisimReport greatest_backward_forward_bisim(const Nfa& a, const Nfa& b);
/// Both computed on the reverse automata; the relation still goes from A to B.
BisimReport greatest_backward_bisim(const Nfa& a, const Nfa& b);
BisimReport greatest_forward_backward_bisim(const Nfa& a, const Nfa& b);

/// The greatest forward (backward) bisimulation on a, as a partition.
Partition greatest_fb_equivalence(const Nfa& a);
Partition greatest_bb_equivalence(const Nfa& a);

using VecPair = std::pair<BoolVec, BoolVec>;

/// All (tau_u^A, tau_u^B) over words u, in breadth-first discovery order
/// starting with (tau^A, tau^B).
std::vector<VecPair> reachable_terminal_pairs(const Nfa& a, const Nfa& b);
/// All (sigma_u^A, sigma_u^B), starting with (sigma^A, sigma^B).
std::vector<VecPair> reachable_initial_pairs(const Nfa& a, const Nfa& b);

BisimReport greatest_weak_forward_sim(const Nfa& a, const Nfa& b);
BisimReport greatest_weak_forward_bisim(const Nfa& a, const Nfa& b);
BisimReport greatest_weak_backward_sim(const Nfa& a, const Nfa& b);
BisimReport greatest_weak_backward_bisim(const Nfa& a, const Nfa& b);

/// Greatest weak forward (backward) bisimulation equivalence on a: states are
/// related iff they lie in the same tau_u (sigma_u) sets for every word u.
Partition wfb_equivalence_bound(const Nfa& a);
Partition wbb_equivalence_bound(const Nfa& a);

}  // namespace nfaeq

#endif  // NFAEQ_BISIM_HH
