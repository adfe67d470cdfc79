#include "nfaeq/equivalence.hh"

namespace nfaeq {

namespace {

bool complete_and_surjective(const BisimReport& rep) {
    return rep.relation && !rep.relation_is_empty && is_complete(*rep.relation) && is_surjective(*rep.relation);
}

[[noreturn]] void disagree(const std::string& what, bool direct, bool factored) {
    throw CrossCheckError(what + ": direct path says " + (direct ? "yes" : "no") + ", factor path says " +
                          (factored ? "yes" : "no"));
}

}  // namespace

EquivVerdict fb_equivalent(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b, "fb_equivalent");
    const BisimReport rep = greatest_forward_bisim(a, b);
    const bool direct = complete_and_surjective(rep);

    const Nfa fa = factor(a, greatest_fb_equivalence(a));
    const Nfa fb = factor(b, greatest_fb_equivalence(b));
    const auto iso = find_isomorphism(fa, fb);
    if (direct != iso.has_value()) disagree("fb_equivalent", direct, iso.has_value());

    EquivVerdict v{direct, "fb", std::nullopt, std::nullopt, std::nullopt};
    if (direct) {
        if (!check(BisimKind::ForwardBisim, a, b, *rep.relation).holds() || !is_isomorphism(fa, fb, *iso)) {
            throw CrossCheckError("fb_equivalent: witness fails its definition checker");
        }
        v.relation = rep.relation;
        v.factor_map = iso;
    }
    return v;
}

EquivVerdict wfb_equivalent(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b, "wfb_equivalent");
    const BisimReport rep = greatest_weak_forward_bisim(a, b);
    const bool direct = complete_and_surjective(rep);

    const Nfa fa = factor(a, wfb_equivalence_bound(a));
    const Nfa fb = factor(b, wfb_equivalence_bound(b));
    const auto iso = weak_forward_isomorphism(fa, fb);
    if (direct != iso.has_value()) disagree("wfb_equivalent", direct, iso.has_value());

    EquivVerdict v{direct, "wfb", std::nullopt, std::nullopt, std::nullopt};
    if (direct) {
        if (!check(BisimKind::WeakForwardBisim, a, b, *rep.relation).holds() ||
            !is_weak_forward_isomorphism(fa, fb, *iso)) {
            throw CrossCheckError("wfb_equivalent: witness fails its definition checker");
        }
        v.relation = rep.relation;
        v.factor_map = iso;
    }
    return v;
}

EquivVerdict lang_equivalent(const Nfa& a, const Nfa& b, std::size_t maxlen) {
    require_same_alphabet(a, b, "lang_equivalent");
    EquivVerdict v{true, "lang", std::nullopt, std::nullopt, std::nullopt};
    struct Item {
        Word u;
        BoolVec sa, sb;
    };
    std::vector<Item> frontier{{Word{}, a.sigma(), b.sigma()}};
    for (std::size_t len = 0; !frontier.empty(); ++len) {
        for (const auto& it : frontier) {
            if (scalar(it.sa, a.tau()) != scalar(it.sb, b.tau())) {
                v.equivalent = false;
                v.counterexample = it.u;
                return v;
            }
        }
        if (len == maxlen) break;
        std::vector<Item> next;
        for (const auto& it : frontier) {
            if (it.sa.none() && it.sb.none()) continue;
            for (std::size_t x = 0; x < a.num_symbols(); ++x) {
                Word u = it.u;
                u.push_back(a.alphabet()[x]);
                next.push_back({std::move(u), vec_rel(it.sa, a.delta(x)), vec_rel(it.sb, b.delta(x))});
            }
        }
        frontier = std::move(next);
    }
    return v;
}

namespace {

// Per-state key: initial bit followed by membership in each reachable tau_u.
std::vector<std::vector<bool>> wfi_keys(const std::vector<VecPair>& pairs, const BoolVec& sigma, bool second) {
    std::vector<std::vector<bool>> keys(sigma.size());
    for (std::size_t s = 0; s < sigma.size(); ++s) {
        keys[s].push_back(sigma.get(s));
        for (const auto& p : pairs) keys[s].push_back((second ? p.second : p.first).get(s));
    }
    return keys;
}

}  // namespace

std::optional<std::vector<std::size_t>> weak_forward_isomorphism(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b, "weak_forward_isomorphism");
    if (a.size() != b.size()) return std::nullopt;
    const auto pairs = reachable_terminal_pairs(a, b);
    const auto ka = wfi_keys(pairs, a.sigma(), false);
    const auto kb = wfi_keys(pairs, b.sigma(), true);

    // Every constraint concerns a single state and its image, so any matching
    // of equal keys works; taking the smallest free image gives the least map.
    std::vector<std::size_t> f(a.size());
    std::vector<bool> used(b.size(), false);
    for (std::size_t s = 0; s < a.size(); ++s) {
        std::size_t t = 0;
        while (t < b.size() && (used[t] || kb[t] != ka[s])) ++t;
        if (t == b.size()) return std::nullopt;
        f[s] = t;
        used[t] = true;
    }
    return f;
}

bool is_weak_forward_isomorphism(const Nfa& a, const Nfa& b, const std::vector<std::size_t>& f) {
    if (a.alphabet() != b.alphabet() || a.size() != b.size() || f.size() != a.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (std::size_t t : f) {
        if (t >= b.size() || used[t]) return false;
        used[t] = true;
    }
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (a.sigma().get(s) != b.sigma().get(f[s])) return false;
    }
    for (const auto& [ta, tb] : reachable_terminal_pairs(a, b)) {
        for (std::size_t s = 0; s < a.size(); ++s) {
            if (ta.get(s) != tb.get(f[s])) return false;
        }
    }
    return true;
}

namespace {

constexpr std::pair<ReduceMode, const char*> kModes[] = {
    {ReduceMode::Fb, "fb"}, {ReduceMode::Bb, "bb"}, {ReduceMode::Wfb, "wfb"},
    {ReduceMode::Wbb, "wbb"}, {ReduceMode::Alternate, "alternate"},
};

}  // namespace

std::optional<ReduceMode> parse_reduce_mode(const std::string& name) {
    for (const auto& [m, n] : kModes) {
        if (name == n) return m;
    }
    return std::nullopt;
}

std::string reduce_mode_name(ReduceMode mode) {
    for (const auto& [m, n] : kModes) {
        if (m == mode) return n;
    }
    throw std::invalid_argument("reduce_mode_name: unknown mode");
}

Partition reduction_partition(const Nfa& a, ReduceMode mode) {
    switch (mode) {
        case ReduceMode::Fb:
            return greatest_fb_equivalence(a);
        case ReduceMode::Bb:
            return greatest_bb_equivalence(a);
        case ReduceMode::Wfb:
            return wfb_equivalence_bound(a);
        case ReduceMode::Wbb:
            return wbb_equivalence_bound(a);
        case ReduceMode::Alternate:
            break;
    }
    throw std::invalid_argument("reduction_partition: alternate mode has no single partition");
}

Nfa reduce(const Nfa& a, ReduceMode mode) {
    if (mode != ReduceMode::Alternate) return factor(a, reduction_partition(a, mode));
    Nfa cur = a;
    std::size_t before = 0;
    do {
        before = cur.size();
        cur = factor(cur, greatest_fb_equivalence(cur));
        cur = factor(cur, greatest_bb_equivalence(cur));
    } while (cur.size() < before);
    return cur;
}

BoolRel natural_function(const Partition& e) {
    BoolRel r(e.size(), e.num_classes());
    for (std::size_t s = 0; s < e.size(); ++s) r.set(s, e.class_of(s));
    return r;
}

namespace {

bool is_fb_equivalence(const Nfa& a, const Partition& e) {
    return check(BisimKind::ForwardBisim, a, a, e.to_relation()).holds();
}

bool is_bb_equivalence(const Nfa& a, const Partition& e) {
    return check(BisimKind::BackwardBisim, a, a, e.to_relation()).holds();
}

bool ufb_equalities(const Nfa& a, const Nfa& b, const BoolRel& phi) {
    const BoolRel inv = inverse(phi);
    const BoolRel e = compose(phi, inv);
    const BoolRel f = compose(inv, phi);
    if (vec_rel(a.sigma(), e) != vec_rel(b.sigma(), inv)) return false;
    if (vec_rel(a.sigma(), phi) != vec_rel(b.sigma(), f)) return false;
    for (std::size_t x = 0; x < a.num_symbols(); ++x) {
        if (compose(a.delta(x), e) != compose(compose(phi, b.delta(x)), inv)) return false;
        if (compose(compose(inv, a.delta(x)), phi) != compose(b.delta(x), f)) return false;
    }
    return a.tau() == rel_vec(phi, b.tau()) && rel_vec(inv, a.tau()) == b.tau();
}

UniformCrossCheck uniform_common(const Nfa& a, const Nfa& b, const BoolRel& phi, const char* op) {
    require_same_alphabet(a, b, op);
    if (phi.rows() != a.size() || phi.cols() != b.size()) throw DimensionError(std::string(op) + ": relation shape");
    const InducedBijection ib = induced_bijection(phi);   // throws when not uniform
    UniformCrossCheck r;
    r.kernel_is_equivalence = is_fb_equivalence(a, ib.kernel);
    r.bijection_is_isomorphism = is_isomorphism(factor(a, ib.kernel), factor(b, ib.cokernel), ib.map);
    return r;
}

}  // namespace

UniformCrossCheck uniform_fb_crosscheck(const Nfa& a, const Nfa& b, const BoolRel& phi) {
    UniformCrossCheck r = uniform_common(a, b, phi, "uniform_fb_crosscheck");
    r.cokernel_is_equivalence = is_fb_equivalence(b, cokernel(phi));
    r.equalities = ufb_equalities(a, b, phi);
    r.is_bisimulation = check(BisimKind::ForwardBisim, a, b, phi).holds();
    if (!r.consistent()) throw CrossCheckError("uniform_fb_crosscheck: formulations disagree");
    return r;
}

UniformCrossCheck uniform_bfb_crosscheck(const Nfa& a, const Nfa& b, const BoolRel& phi) {
    UniformCrossCheck r = uniform_common(a, b, phi, "uniform_bfb_crosscheck");
    r.cokernel_is_equivalence = is_bb_equivalence(b, cokernel(phi));
    r.is_bisimulation = check(BisimKind::BackwardForwardBisim, a, b, phi).holds();
    if (!r.consistent()) throw CrossCheckError("uniform_bfb_crosscheck: formulations disagree");
    return r;
}

bool function_fb_iff_bfb(const Nfa& a, const Nfa& b, const BoolRel& f) {
    require_same_alphabet(a, b, "function_fb_iff_bfb");
    if (f.rows() != a.size() || f.cols() != b.size()) throw DimensionError("function_fb_iff_bfb: relation shape");
    for (std::size_t s = 0; s < f.rows(); ++s) {
        if (f.row(s).count() != 1) {
            throw std::invalid_argument("function_fb_iff_bfb: row " + std::to_string(s) + " has " +
                                        std::to_string(f.row(s).count()) + " entries, expected exactly one");
        }
    }
    const bool fb = check(BisimKind::ForwardBisim, a, b, f).holds();
    const bool bfb = check(BisimKind::BackwardForwardBisim, a, b, f).holds();
    if (fb != bfb) throw CrossCheckError("function_fb_iff_bfb: forward and backward-forward checks disagree");
    return fb;
}

}  // namespace nfaeq
