#include "nfaeq/automaton.hh"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace nfaeq {

std::string word_to_string(const Word& u) {
    if (u.empty()) return "ε";
    std::string s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) s += '.';
        s += u[i];
    }
    return s;
}

Nfa::Nfa(std::vector<Symbol> alphabet, std::vector<BoolRel> delta, BoolVec sigma, BoolVec tau)
    : alphabet_(std::move(alphabet)), delta_(std::move(delta)), sigma_(std::move(sigma)), tau_(std::move(tau)) {
    const std::size_t n = sigma_.size();
    if (alphabet_.empty()) throw std::invalid_argument("Nfa: alphabet is empty");
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        if (alphabet_[i].empty()) throw std::invalid_argument("Nfa: empty symbol name");
        for (std::size_t j = 0; j < i; ++j) {
            if (alphabet_[i] == alphabet_[j]) throw std::invalid_argument("Nfa: duplicate symbol '" + alphabet_[i] + "'");
        }
    }
    if (delta_.size() != alphabet_.size()) {
        throw DimensionError("Nfa: " + std::to_string(delta_.size()) + " transition relations for " +
                             std::to_string(alphabet_.size()) + " symbols");
    }
    if (tau_.size() != n) throw DimensionError("Nfa: sigma and tau lengths differ");
    for (std::size_t x = 0; x < delta_.size(); ++x) {
        if (delta_[x].rows() != n || delta_[x].cols() != n) {
            throw DimensionError("Nfa: transition relation for '" + alphabet_[x] + "' is not " + std::to_string(n) +
                                 "x" + std::to_string(n));
        }
    }
}

Nfa::Nfa(std::size_t n, std::vector<Symbol> alphabet, BoolVec sigma, BoolVec tau)
    : Nfa(alphabet, std::vector<BoolRel>(alphabet.size(), BoolRel(n, n)), std::move(sigma), std::move(tau)) {}

std::optional<std::size_t> Nfa::find_symbol(const Symbol& x) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), x);
    if (it == alphabet_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - alphabet_.begin());
}

std::size_t Nfa::symbol_index(const Symbol& x) const {
    if (auto i = find_symbol(x)) return *i;
    throw std::invalid_argument("unknown symbol '" + x + "'");
}

void Nfa::set_transition(std::size_t x, std::size_t from, std::size_t to, bool value) {
    delta_.at(x).set(from, to, value);
}

bool Dfa::accepts(const Word& u) const {
    std::size_t q = start;
    for (const auto& s : u) {
        auto it = std::find(alphabet.begin(), alphabet.end(), s);
        if (it == alphabet.end()) throw std::invalid_argument("unknown symbol '" + s + "'");
        q = next[q][static_cast<std::size_t>(it - alphabet.begin())];
    }
    return final[q];
}

void require_same_alphabet(const Nfa& a, const Nfa& b, const char* op) {
    if (a.alphabet() != b.alphabet()) throw std::invalid_argument(std::string(op) + ": alphabets differ");
}

BoolRel delta_word(const Nfa& a, const Word& u) {
    BoolRel r = BoolRel::identity(a.size());
    for (const auto& x : u) r = compose(r, a.delta(x));
    return r;
}

BoolVec sigma_u(const Nfa& a, const Word& u) {
    BoolVec v = a.sigma();
    for (const auto& x : u) v = vec_rel(v, a.delta(x));
    return v;
}

BoolVec tau_u(const Nfa& a, const Word& u) {
    BoolVec v = a.tau();
    for (auto it = u.rbegin(); it != u.rend(); ++it) v = rel_vec(a.delta(*it), v);
    return v;
}

bool accepts(const Nfa& a, const Word& u) { return scalar(sigma_u(a, u), a.tau()); }

std::vector<Word> bounded_language(const Nfa& a, std::size_t maxlen) {
    std::vector<Word> out;
    std::vector<std::pair<Word, BoolVec>> frontier{{Word{}, a.sigma()}};
    for (std::size_t len = 0;; ++len) {
        for (const auto& [u, s] : frontier) {
            if (scalar(s, a.tau())) out.push_back(u);
        }
        if (len == maxlen) break;
        std::vector<std::pair<Word, BoolVec>> next;
        next.reserve(frontier.size() * a.num_symbols());
        for (const auto& [u, s] : frontier) {
            // Prefixes with an empty state set cannot extend to accepted words.
            if (s.none()) continue;
            for (std::size_t x = 0; x < a.num_symbols(); ++x) {
                Word v = u;
                v.push_back(a.alphabet()[x]);
                next.emplace_back(std::move(v), vec_rel(s, a.delta(x)));
            }
        }
        if (next.empty()) break;
        frontier = std::move(next);
    }
    return out;
}

Nfa reverse(const Nfa& a) {
    std::vector<BoolRel> d;
    d.reserve(a.num_symbols());
    for (const auto& r : a.deltas()) d.push_back(inverse(r));
    return Nfa(a.alphabet(), std::move(d), a.tau(), a.sigma());
}

Nfa factor(const Nfa& a, const Partition& e) {
    if (e.size() != a.size()) {
        throw std::invalid_argument("factor: partition over " + std::to_string(e.size()) + " elements, automaton has " +
                                    std::to_string(a.size()) + " states");
    }
    const BoolRel er = e.to_relation();
    const std::size_t m = e.num_classes();
    auto rep = [&](std::size_t c) { return e.members(c).front(); };

    std::vector<BoolRel> d;
    for (const auto& dx : a.deltas()) {
        const BoolRel full = compose(compose(er, dx), er);
        BoolRel q(m, m);
        for (std::size_t c1 = 0; c1 < m; ++c1) {
            for (std::size_t c2 = 0; c2 < m; ++c2) q.set(c1, c2, full.get(rep(c1), rep(c2)));
        }
        d.push_back(std::move(q));
    }
    const BoolVec s = vec_rel(a.sigma(), er);
    const BoolVec t = rel_vec(er, a.tau());
    BoolVec sigma(m), tau(m);
    for (std::size_t c = 0; c < m; ++c) {
        sigma.set(c, s.get(rep(c)));
        tau.set(c, t.get(rep(c)));
    }
    return Nfa(a.alphabet(), std::move(d), std::move(sigma), std::move(tau));
}

Nfa subautomaton(const Nfa& a, const BoolVec& keep) {
    if (keep.size() != a.size()) throw DimensionError("subautomaton: keep vector has wrong length");
    const auto idx = keep.ones();
    if (idx.empty()) throw std::invalid_argument("subautomaton: empty state set");
    const std::size_t m = idx.size();
    std::vector<BoolRel> d;
    for (const auto& dx : a.deltas()) {
        BoolRel q(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) q.set(i, j, dx.get(idx[i], idx[j]));
        }
        d.push_back(std::move(q));
    }
    BoolVec sigma(m), tau(m);
    for (std::size_t i = 0; i < m; ++i) {
        sigma.set(i, a.sigma().get(idx[i]));
        tau.set(i, a.tau().get(idx[i]));
    }
    return Nfa(a.alphabet(), std::move(d), std::move(sigma), std::move(tau));
}

Nfa relabel(const Nfa& a, const std::vector<std::size_t>& perm) {
    const std::size_t n = a.size();
    if (perm.size() != n) throw std::invalid_argument("relabel: permutation has wrong length");
    std::vector<BoolRel> d;
    for (const auto& dx : a.deltas()) {
        BoolRel q(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j : dx.row(i).ones()) q.set(perm[i], perm[j]);
        }
        d.push_back(std::move(q));
    }
    BoolVec sigma(n), tau(n);
    for (std::size_t i = 0; i < n; ++i) {
        sigma.set(perm[i], a.sigma().get(i));
        tau.set(perm[i], a.tau().get(i));
    }
    return Nfa(a.alphabet(), std::move(d), std::move(sigma), std::move(tau));
}

bool is_isomorphism(const Nfa& a, const Nfa& b, const std::vector<std::size_t>& f) {
    if (a.alphabet() != b.alphabet() || a.size() != b.size() || f.size() != a.size()) return false;
    const std::size_t n = a.size();
    std::vector<bool> used(n, false);
    for (std::size_t v : f) {
        if (v >= n || used[v]) return false;
        used[v] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a.sigma().get(i) != b.sigma().get(f[i]) || a.tau().get(i) != b.tau().get(f[i])) return false;
    }
    for (std::size_t x = 0; x < a.num_symbols(); ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (a.delta(x).get(i, j) != b.delta(x).get(f[i], f[j])) return false;
            }
        }
    }
    return true;
}

namespace {

// Stable colouring of the states of a and b together. Colours are shared, so a
// state of a can only map to a state of b with the same colour.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(const Nfa& a, const Nfa& b) {
    const std::size_t n = a.size();
    const std::size_t k = a.num_symbols();
    std::vector<BoolRel> inv_a, inv_b;
    for (std::size_t x = 0; x < k; ++x) {
        inv_a.push_back(inverse(a.delta(x)));
        inv_b.push_back(inverse(b.delta(x)));
    }

    std::vector<std::size_t> ca(n, 0), cb(n, 0);
    std::size_t num_colours = 0;
    bool first = true;
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        auto signature = [&](const Nfa& m, const std::vector<BoolRel>& inv, const std::vector<std::size_t>& col,
                             std::size_t s) {
            std::vector<std::size_t> sig;
            if (first) {
                sig = {m.sigma().get(s), m.tau().get(s)};
                for (std::size_t x = 0; x < k; ++x) {
                    sig.push_back(m.delta(x).row(s).count());
                    sig.push_back(inv[x].row(s).count());
                }
                return sig;
            }
            sig.push_back(col[s]);
            for (std::size_t x = 0; x < k; ++x) {
                for (const BoolRel* r : {&m.delta(x), &inv[x]}) {
                    std::vector<std::size_t> nb;
                    for (std::size_t t : r->row(s).ones()) nb.push_back(col[t]);
                    std::sort(nb.begin(), nb.end());
                    sig.push_back(nb.size());
                    sig.insert(sig.end(), nb.begin(), nb.end());
                }
            }
            return sig;
        };
        std::vector<std::vector<std::size_t>> sa(n), sb(n);
        for (std::size_t s = 0; s < n; ++s) {
            sa[s] = signature(a, inv_a, ca, s);
            sb[s] = signature(b, inv_b, cb, s);
            ids.emplace(sa[s], 0);
            ids.emplace(sb[s], 0);
        }
        std::size_t next_id = 0;
        for (auto& [sig, id] : ids) id = next_id++;
        for (std::size_t s = 0; s < n; ++s) {
            ca[s] = ids[sa[s]];
            cb[s] = ids[sb[s]];
        }
        if (!first && ids.size() == num_colours) break;
        num_colours = ids.size();
        first = false;
    }
    return {ca, cb};
}

struct IsoSearch {
    const Nfa& a;
    const Nfa& b;
    std::vector<std::size_t> ca, cb;
    std::vector<std::size_t> f;
    std::vector<bool> used;

    // Checks the pair (i -> j) against every already assigned state, including i itself.
    bool consistent(std::size_t i, std::size_t j) const {
        for (std::size_t x = 0; x < a.num_symbols(); ++x) {
            const BoolRel& da = a.delta(x);
            const BoolRel& db = b.delta(x);
            if (da.get(i, i) != db.get(j, j)) return false;
            for (std::size_t p = 0; p < i; ++p) {
                if (da.get(i, p) != db.get(j, f[p]) || da.get(p, i) != db.get(f[p], j)) return false;
            }
        }
        return true;
    }

    bool run(std::size_t i) {
        if (i == a.size()) return true;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j] || ca[i] != cb[j] || !consistent(i, j)) continue;
            f[i] = j;
            used[j] = true;
            if (run(i + 1)) return true;
            used[j] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b, "find_isomorphism");
    if (a.size() != b.size()) return std::nullopt;
    auto [ca, cb] = refine_colours(a, b);
    {
        auto ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return std::nullopt;
    }
    IsoSearch search{a, b, std::move(ca), std::move(cb), std::vector<std::size_t>(a.size()),
                     std::vector<bool>(b.size(), false)};
    if (!search.run(0)) return std::nullopt;
    if (!is_isomorphism(a, b, search.f)) throw std::logic_error("find_isomorphism: search produced an invalid map");
    return search.f;
}

Nfa random_nfa(std::size_t n, const std::vector<Symbol>& alphabet, double density, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_nfa: state count must be positive");
    if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("random_nfa: density must lie in [0,1]");
    std::mt19937_64 rng(seed);
    auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < density; };

    Nfa a(n, alphabet, BoolVec(n), BoolVec(n));
    for (std::size_t x = 0; x < alphabet.size(); ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (coin()) a.set_transition(x, i, j);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) a.set_initial(i, coin());
    for (std::size_t i = 0; i < n; ++i) a.set_terminal(i, coin());
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    if (a.sigma().none()) a.set_initial(pick(rng));
    if (a.tau().none()) a.set_terminal(pick(rng));
    return a;
}

}  // namespace nfaeq
