#ifndef NFAEQ_BISIM_INTERNAL_HH
#define NFAEQ_BISIM_INTERNAL_HH

#include <string>
#include <vector>

#include "nfaeq/bisim.hh"

namespace nfaeq::detail {

/// Renames a condition of the reverse automata to the original ones:
/// initial and terminal swap, as do right and left languages.
std::string mirror_condition(const std::string& name);
BisimReport mirror(BisimReport rep, BisimKind kind);

BisimReport finish(BisimKind kind, BoolRel phi, std::size_t k, std::vector<BoolRel> seq,
                   std::vector<Condition> acceptance);

}  // namespace nfaeq::detail

#endif  // NFAEQ_BISIM_INTERNAL_HH
