#include "nfaeq/selftest.hh"

#include <functional>
#include <random>
#include <sstream>

#include "nfaeq/automaton.hh"
#include "nfaeq/bisim.hh"
#include "nfaeq/equivalence.hh"
#include "nfaeq/nerode.hh"

namespace nfaeq {

namespace {

bool partial_uniform_eq(const BoolRel& phi) { return compose(compose(phi, inverse(phi)), phi) == phi; }

struct Trial {
    Nfa a;
    Nfa b;
    std::size_t maxlen;
};

using Property = std::pair<const char*, std::function<bool(const Trial&)>>;

const std::vector<Property>& properties() {
    static const std::vector<Property> props{
        {"fb-accepted-is-fb-and-uniform",
         [](const Trial& t) {
             const auto r = greatest_forward_bisim(t.a, t.b);
             if (!r.relation || r.relation_is_empty) return true;
             return check(BisimKind::ForwardBisim, t.a, t.b, *r.relation).holds() && partial_uniform_eq(*r.relation);
         }},
        {"bfb-accepted-is-bfb",
         [](const Trial& t) {
             const auto r = greatest_backward_forward_bisim(t.a, t.b);
             if (!r.relation || r.relation_is_empty) return true;
             return check(BisimKind::BackwardForwardBisim, t.a, t.b, *r.relation).holds();
         }},
        {"wfb-accepted-is-wfb-and-uniform",
         [](const Trial& t) {
             const auto r = greatest_weak_forward_bisim(t.a, t.b);
             if (!r.relation || r.relation_is_empty) return true;
             return check(BisimKind::WeakForwardBisim, t.a, t.b, *r.relation).holds() &&
                    partial_uniform_eq(*r.relation);
         }},
        {"fixpoint-non-increasing",
         [](const Trial& t) {
             for (const auto& r : {greatest_forward_bisim(t.a, t.b), greatest_backward_forward_bisim(t.a, t.b)}) {
                 for (std::size_t k = 1; k < r.sequence.size(); ++k) {
                     if (!subset_of(r.sequence[k], r.sequence[k - 1])) return false;
                 }
                 if (r.iterations > t.a.size() * t.b.size() + 1) return false;
             }
             return true;
         }},
        {"bb-is-fb-of-reverse",
         [](const Trial& t) {
             return greatest_backward_bisim(t.a, t.b).relation ==
                    greatest_forward_bisim(reverse(t.a), reverse(t.b)).relation;
         }},
        {"reduce-preserves-language",
         [](const Trial& t) {
             const auto lang = bounded_language(t.a, t.maxlen);
             for (auto m : {ReduceMode::Fb, ReduceMode::Bb, ReduceMode::Wfb, ReduceMode::Wbb, ReduceMode::Alternate}) {
                 if (bounded_language(reduce(t.a, m), t.maxlen) != lang) return false;
             }
             return true;
         }},
        {"fb-equivalence-implies-wfb-and-language",
         [](const Trial& t) {
             if (!fb_equivalent(t.a, t.b).equivalent) return true;
             return wfb_equivalent(t.a, t.b).equivalent && lang_equivalent(t.a, t.b, t.maxlen).equivalent;
         }},
        {"wfb-equivalence-implies-language",
         [](const Trial& t) {
             if (!wfb_equivalent(t.a, t.b).equivalent) return true;
             return lang_equivalent(t.a, t.b, t.maxlen).equivalent;
         }},
        {"reverse-nerode-is-nerode-of-reverse",
         [](const Trial& t) { return dfa_isomorphic(reverse_nerode(t.a), nerode(reverse(t.a))).has_value(); }},
        {"nerode-preserves-language",
         [](const Trial& t) {
             const Dfa d = nerode(t.a);
             for (const auto& u : bounded_language(t.a, t.maxlen)) {
                 if (!d.accepts(u)) return false;
             }
             std::size_t accepted = 0;
             std::vector<Word> layer{Word{}};
             for (std::size_t len = 0; len <= t.maxlen; ++len) {
                 std::vector<Word> next;
                 for (const auto& u : layer) {
                     accepted += d.accepts(u);
                     for (const auto& x : t.a.alphabet()) {
                         next.push_back(u);
                         next.back().push_back(x);
                     }
                 }
                 layer = std::move(next);
             }
             return accepted == bounded_language(t.a, t.maxlen).size();
         }},
        {"self-fb-equivalent",
         [](const Trial& t) { return fb_equivalent(t.a, t.a).equivalent && wfb_equivalent(t.a, t.a).equivalent; }},
    };
    return props;
}

}  // namespace

std::size_t run_selftest(const SelftestOptions& opts, std::ostream& log) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(1, opts.max_states));
    std::uniform_real_distribution<double> density(0.1, 0.6);
    const std::vector<Symbol> alphabet{"x", "y"};
    std::size_t failures = 0;
    for (std::size_t k = 0; k < opts.trials; ++k) {
        const std::size_t na = size(rng), nb = size(rng);
        const double da = density(rng), db = density(rng);
        const std::uint64_t sa = rng(), sb = rng();
        const Trial t{random_nfa(na, alphabet, da, sa), random_nfa(nb, alphabet, db, sb), opts.maxlen};
        std::ostringstream out;
        for (const auto& [name, prop] : properties()) {
            bool ok = false;
            std::string why;
            try {
                ok = prop(t);
            } catch (const std::exception& e) {
                why = std::string(" (") + e.what() + ")";
            }
            if (!ok) {
                ++failures;
                out << "trial " << k << ": " << name << " failed" << why << '\n';
            }
        }
        log << out.str();
    }
    return failures;
}

}  // namespace nfaeq
