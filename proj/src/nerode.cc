#include "nfaeq/nerode.hh"

#include <map>

namespace nfaeq {

namespace {

template <typename Step, typename Final>
Dfa subset_bfs(const Nfa& a, const BoolVec& start, Step step, Final is_final) {
    Dfa d;
    d.alphabet = a.alphabet();
    d.start = 0;
    std::map<BoolVec, std::size_t> index{{start, 0}};
    d.subset_of.push_back(start);
    for (std::size_t q = 0; q < d.subset_of.size(); ++q) {
        std::vector<std::size_t> row(a.num_symbols());
        for (std::size_t x = 0; x < a.num_symbols(); ++x) {
            BoolVec s = step(d.subset_of[q], x);
            auto [it, inserted] = index.try_emplace(s, d.subset_of.size());
            if (inserted) d.subset_of.push_back(std::move(s));
            row[x] = it->second;
        }
        d.next.push_back(std::move(row));
        d.final.push_back(is_final(d.subset_of[q]));
    }
    return d;
}

}  // namespace

Dfa nerode(const Nfa& a) {
    return subset_bfs(
        a, a.sigma(), [&](const BoolVec& s, std::size_t x) { return vec_rel(s, a.delta(x)); },
        [&](const BoolVec& s) { return scalar(s, a.tau()); });
}

Dfa reverse_nerode(const Nfa& a) {
    return subset_bfs(
        a, a.tau(), [&](const BoolVec& t, std::size_t x) { return rel_vec(a.delta(x), t); },
        [&](const BoolVec& t) { return scalar(a.sigma(), t); });
}

bool is_dfa_isomorphism(const Dfa& d1, const Dfa& d2, const std::vector<std::size_t>& f) {
    if (d1.alphabet != d2.alphabet || d1.size() != d2.size() || f.size() != d1.size()) return false;
    std::vector<bool> used(d2.size(), false);
    for (std::size_t t : f) {
        if (t >= d2.size() || used[t]) return false;
        used[t] = true;
    }
    if (f[d1.start] != d2.start) return false;
    for (std::size_t q = 0; q < d1.size(); ++q) {
        if (d1.final[q] != d2.final[f[q]]) return false;
        for (std::size_t x = 0; x < d1.alphabet.size(); ++x) {
            if (f[d1.next[q][x]] != d2.next[f[q]][x]) return false;
        }
    }
    return true;
}

std::optional<std::vector<std::size_t>> dfa_isomorphic(const Dfa& d1, const Dfa& d2) {
    if (d1.alphabet != d2.alphabet) throw std::invalid_argument("dfa_isomorphic: alphabets differ");
    if (d1.size() != d2.size()) return std::nullopt;
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> f(d1.size(), unset), g(d2.size(), unset);
    std::vector<std::size_t> stack{d1.start};
    f[d1.start] = d2.start;
    g[d2.start] = d1.start;
    while (!stack.empty()) {
        const std::size_t q = stack.back();
        stack.pop_back();
        if (d1.final[q] != d2.final[f[q]]) return std::nullopt;
        for (std::size_t x = 0; x < d1.alphabet.size(); ++x) {
            const std::size_t p = d1.next[q][x];
            const std::size_t r = d2.next[f[q]][x];
            if (f[p] == unset && g[r] == unset) {
                f[p] = r;
                g[r] = p;
                stack.push_back(p);
            } else if (f[p] != r || g[r] != p) {
                return std::nullopt;
            }
        }
    }
    // States unreachable from the start cannot be matched by propagation.
    for (std::size_t v : f) {
        if (v == unset) return std::nullopt;
    }
    return f;
}

std::optional<ReverseNerodeMaps> reverse_nerode_maps(const Nfa& a, const Nfa& b, const BoolRel& phi) {
    require_same_alphabet(a, b, "reverse_nerode_maps");
    if (phi.rows() != a.size() || phi.cols() != b.size()) throw DimensionError("reverse_nerode_maps: relation shape");
    const Dfa da = reverse_nerode(a);
    const Dfa db = reverse_nerode(b);
    if (da.size() != db.size()) return std::nullopt;
    const BoolRel inv = inverse(phi);

    auto build = [](const Dfa& from, const Dfa& to, const BoolRel& r) -> std::optional<std::vector<std::size_t>> {
        std::map<BoolVec, std::size_t> where;
        for (std::size_t q = 0; q < to.size(); ++q) where.emplace(to.subset_of[q], q);
        std::vector<std::size_t> m(from.size());
        for (std::size_t q = 0; q < from.size(); ++q) {
            auto it = where.find(rel_vec(r, from.subset_of[q]));
            if (it == where.end()) return std::nullopt;
            m[q] = it->second;
        }
        return m;
    };
    auto fwd = build(da, db, inv);
    auto bwd = build(db, da, phi);
    if (!fwd || !bwd) return std::nullopt;
    for (std::size_t q = 0; q < da.size(); ++q) {
        if ((*bwd)[(*fwd)[q]] != q) return std::nullopt;
    }
    for (std::size_t q = 0; q < db.size(); ++q) {
        if ((*fwd)[(*bwd)[q]] != q) return std::nullopt;
    }
    if (!is_dfa_isomorphism(da, db, *fwd) || !is_dfa_isomorphism(db, da, *bwd)) return std::nullopt;
    return ReverseNerodeMaps{std::move(*fwd), std::move(*bwd)};
}

}  // namespace nfaeq
