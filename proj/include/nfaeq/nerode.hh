// Accessible subset constructions over sigma_u and tau_u.

#ifndef NFAEQ_NERODE_HH
#define NFAEQ_NERODE_HH

#include <optional>
#include <vector>

#include "nfaeq/automaton.hh"

namespace nfaeq {

/// States are the distinct sigma_u, numbered in breadth-first order from
/// sigma (state 0); final iff the subset meets tau. The empty subset is kept
/// when reached.
Dfa nerode(const Nfa& a);

/// States are the distinct tau_u; reading x moves tau_u to tau_xu. Final iff
/// the subset meets sigma.
Dfa reverse_nerode(const Nfa& a);

/// The isomorphism is forced by the start states, so this propagates it along
/// transitions and fails on the first conflict.
std::optional<std::vector<std::size_t>> dfa_isomorphic(const Dfa& d1, const Dfa& d2);
bool is_dfa_isomorphism(const Dfa& d1, const Dfa& d2, const std::vector<std::size_t>& f);

struct ReverseNerodeMaps {
    std::vector<std::size_t> forward;    // tau_u^A -> phi^-1 o tau_u^A, as state indices
    std::vector<std::size_t> backward;   // tau_u^B -> phi o tau_u^B
};

/// Builds both maps between the reverse Nerode automata of a and b and returns
/// them if they are mutually inverse isomorphisms; none otherwise (including
/// when an image is not a state of the other automaton).
std::optional<ReverseNerodeMaps> reverse_nerode_maps(const Nfa& a, const Nfa& b, const BoolRel& phi);

}  // namespace nfaeq

#endif  // NFAEQ_NERODE_HH
