// Nondeterministic automata as Boolean matrices and vectors.

#ifndef NFAEQ_AUTOMATON_HH
#define NFAEQ_AUTOMATON_HH

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfaeq/relcalc.hh"

namespace nfaeq {

using Symbol = std::string;
using Word = std::vector<Symbol>;

/// Renders a word as its symbols separated by '.', or "ε" when empty.
std::string word_to_string(const Word& u);

class Nfa {
public:
    /// Validates shapes: one n-by-n relation per symbol, sigma and tau of length n.
    Nfa(std::vector<Symbol> alphabet, std::vector<BoolRel> delta, BoolVec sigma, BoolVec tau);
    /// An automaton with no transitions.
    Nfa(std::size_t n, std::vector<Symbol> alphabet, BoolVec sigma, BoolVec tau);

    std::size_t size() const { return sigma_.size(); }
    const std::vector<Symbol>& alphabet() const { return alphabet_; }
    std::size_t num_symbols() const { return alphabet_.size(); }

    /// Throws std::invalid_argument naming the symbol when it is unknown.
    std::size_t symbol_index(const Symbol& x) const;
    std::optional<std::size_t> find_symbol(const Symbol& x) const;

    const BoolRel& delta(std::size_t x) const { return delta_[x]; }
    const BoolRel& delta(const Symbol& x) const { return delta_[symbol_index(x)]; }
    const std::vector<BoolRel>& deltas() const { return delta_; }
    const BoolVec& sigma() const { return sigma_; }
    const BoolVec& tau() const { return tau_; }

    void set_transition(std::size_t x, std::size_t from, std::size_t to, bool value = true);
    void set_initial(std::size_t a, bool value = true) { sigma_.set(a, value); }
    void set_terminal(std::size_t a, bool value = true) { tau_.set(a, value); }

    bool operator==(const Nfa& other) const = default;

private:
    std::vector<Symbol> alphabet_;
    std::vector<BoolRel> delta_;
    BoolVec sigma_;
    BoolVec tau_;
};

/// Deterministic automaton whose states remember the subset they came from.
struct Dfa {
    std::vector<Symbol> alphabet;
    std::vector<std::vector<std::size_t>> next;   // next[state][symbol]
    std::size_t start = 0;
    std::vector<bool> final;
    std::vector<BoolVec> subset_of;

    std::size_t size() const { return next.size(); }
    bool accepts(const Word& u) const;
};

/// Throws std::invalid_argument when the alphabets differ.
void require_same_alphabet(const Nfa& a, const Nfa& b, const char* op);

BoolRel delta_word(const Nfa& a, const Word& u);
BoolVec sigma_u(const Nfa& a, const Word& u);
BoolVec tau_u(const Nfa& a, const Word& u);
bool accepts(const Nfa& a, const Word& u);

/// Accepted words of length at most maxlen, ordered by length, then
/// lexicographically by symbol position in the alphabet.
std::vector<Word> bounded_language(const Nfa& a, std::size_t maxlen);

Nfa reverse(const Nfa& a);

/// Factor automaton over the classes of e: transitions E o delta_x o E,
/// initial sigma o E, terminal E o tau.
Nfa factor(const Nfa& a, const Partition& e);

/// Restriction to the states in keep, renumbered in increasing order.
Nfa subautomaton(const Nfa& a, const BoolVec& keep);

/// True iff f is a bijection preserving transitions, initial and terminal
/// states in both directions.
bool is_isomorphism(const Nfa& a, const Nfa& b, const std::vector<std::size_t>& f);

/// Lexicographically least isomorphism from a to b, if any.
std::optional<std::vector<std::size_t>> find_isomorphism(const Nfa& a, const Nfa& b);

/// Seeded random automaton. Every transition, initial and terminal bit is set
/// independently with probability density; sigma and tau are forced nonempty.
Nfa random_nfa(std::size_t n, const std::vector<Symbol>& alphabet, double density, std::uint64_t seed);

/// Applies a state permutation: state a of the input becomes perm[a].
Nfa relabel(const Nfa& a, const std::vector<std::size_t>& perm);

}  // namespace nfaeq

#endif  // NFAEQ_AUTOMATON_HH
