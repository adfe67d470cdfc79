// Structural equivalence of automata, state reduction, and executable forms of
// the uniform-bisimulation characterisations.

#ifndef NFAEQ_EQUIVALENCE_HH
#define NFAEQ_EQUIVALENCE_HH

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nfaeq/automaton.hh"
#include "nfaeq/bisim.hh"
#include "nfaeq/relcalc.hh"

namespace nfaeq {

/// Two independent decision procedures disagreed. Always a bug.
class CrossCheckError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct EquivVerdict {
    bool equivalent = false;
    std::string method;                             // "fb", "wfb" or "lang"
    std::optional<BoolRel> relation;                // complete and surjective (weak) forward bisimulation
    std::optional<std::vector<std::size_t>> factor_map;   // isomorphism (fb) or weak forward isomorphism (wfb)
                                                          // between the reduced automata
    std::optional<Word> counterexample;             // lang: shortest word in exactly one language
};

/// Decides existence of a complete and surjective forward bisimulation, both
/// directly and through isomorphism of the factor automata by the greatest
/// FB-equivalences. Throws CrossCheckError when the two disagree.
EquivVerdict fb_equivalent(const Nfa& a, const Nfa& b);

/// Weak counterpart of fb_equivalent; the second path looks for a weak
/// forward isomorphism between the factors by the greatest WFB-equivalences.
EquivVerdict wfb_equivalent(const Nfa& a, const Nfa& b);

/// Compares accepted words up to length maxlen.
EquivVerdict lang_equivalent(const Nfa& a, const Nfa& b, std::size_t maxlen);

/// A bijection f with a in sigma^A iff f(a) in sigma^B and, for every word u,
/// a in tau_u^A iff f(a) in tau_u^B. The least one in lexicographic order.
std::optional<std::vector<std::size_t>> weak_forward_isomorphism(const Nfa& a, const Nfa& b);
bool is_weak_forward_isomorphism(const Nfa& a, const Nfa& b, const std::vector<std::size_t>& f);

enum class ReduceMode { Fb, Bb, Wfb, Wbb, Alternate };

std::optional<ReduceMode> parse_reduce_mode(const std::string& name);
std::string reduce_mode_name(ReduceMode mode);

/// Greatest equivalence of the mode's kind on a, as used by reduce.
Partition reduction_partition(const Nfa& a, ReduceMode mode);

/// Factor automaton by the greatest equivalence of the given kind. Alternate
/// applies fb then bb until a round no longer removes states.
Nfa reduce(const Nfa& a, ReduceMode mode);

/// phi as a relation from a to the states of factor(a, e).
BoolRel natural_function(const Partition& e);

struct UniformCrossCheck {
    bool kernel_is_equivalence = false;     // kernel is an FB-equivalence on A
    bool cokernel_is_equivalence = false;   // cokernel is an FB- (BB- for bfb) equivalence on B
    bool bijection_is_isomorphism = false;  // induced bijection is an isomorphism of the factors
    std::optional<bool> equalities;         // fb only: the six composition equalities
    bool is_bisimulation = false;           // the relation itself passes the definition checker

    bool structural() const { return kernel_is_equivalence && cokernel_is_equivalence && bijection_is_isomorphism; }
    bool consistent() const {
        return structural() == is_bisimulation && (!equalities || *equalities == is_bisimulation);
    }
};

/// Requires phi uniform (NotUniformError otherwise). Throws CrossCheckError if
/// the formulations disagree; otherwise returns every individual result.
UniformCrossCheck uniform_fb_crosscheck(const Nfa& a, const Nfa& b, const BoolRel& phi);
UniformCrossCheck uniform_bfb_crosscheck(const Nfa& a, const Nfa& b, const BoolRel& phi);

/// For a function f (exactly one pair per row): whether f is a forward
/// bisimulation, which must coincide with being a backward-forward one.
bool function_fb_iff_bfb(const Nfa& a, const Nfa& b, const BoolRel& f);

}  // namespace nfaeq

#endif  // NFAEQ_EQUIVALENCE_HH
