// Line-oriented text formats for automata (.nfa) and relations (.rel).
//
//   # comment
//   states 5
//   alphabet x y
//   initial 0 1
//   terminal 2 4
//   x: 0->0 0->1 1->3
//   y: 2->4
//
// Symbol lines are optional; a missing one means no transitions. DFA output
// adds one "subset: <state> <bits>" line per state, which the parser skips.

#ifndef NFAEQ_TEXT_FORMAT_HH
#define NFAEQ_TEXT_FORMAT_HH

#include <stdexcept>
#include <string>

#include "nfaeq/automaton.hh"
#include "nfaeq/relcalc.hh"

namespace nfaeq {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, std::size_t col, const std::string& msg);

    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

private:
    std::size_t line_;
    std::size_t col_;
};

Nfa parse_nfa(const std::string& text, const std::string& source = "<input>");
std::string print_nfa(const Nfa& a);
std::string print_dfa(const Dfa& d);

BoolRel parse_rel(const std::string& text, const std::string& source = "<input>");
std::string print_rel(const BoolRel& r);

/// Reads a whole file; throws std::runtime_error naming the path on failure.
std::string read_file(const std::string& path);

}  // namespace nfaeq

#endif  // NFAEQ_TEXT_FORMAT_HH
