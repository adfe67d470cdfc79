#include "golden.hh"

namespace golden {

using nfaeq::BoolVec;

Pair forward_pair() {
    Nfa a({"x", "y"},
          {BoolRel{{1, 1, 0}, {0, 1, 1}, {1, 0, 0}}, BoolRel{{1, 1, 0}, {0, 0, 1}, {0, 0, 1}}},
          BoolVec{1, 0, 0}, BoolVec{0, 0, 1});
    Nfa b({"x", "y"},
          {BoolRel{{1, 1, 0, 1, 0}, {1, 1, 0, 1, 0}, {1, 1, 0, 0, 0}, {0, 0, 1, 1, 1}, {1, 1, 0, 0, 0}},
           BoolRel{{1, 1, 0, 1, 0}, {1, 1, 0, 1, 0}, {0, 0, 1, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 1, 0, 1}}},
          BoolVec{1, 1, 0, 0, 0}, BoolVec{0, 0, 1, 0, 1});
    return {"forward", a, b};
}

BoolRel forward_phi1() { return {{1, 1, 0, 1, 0}, {1, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}; }
BoolRel forward_phi2() { return {{1, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 1}}; }

Pair bfb_pair() {
    Nfa a({"x", "y"}, {BoolRel{{1, 0}, {1, 1}}, BoolRel{{1, 0}, {1, 0}}}, BoolVec{1, 0}, BoolVec{0, 1});
    Nfa b({"x", "y"},
          {BoolRel{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}, BoolRel{{1, 0, 1}, {1, 0, 0}, {0, 0, 0}}},
          BoolVec{1, 0, 1}, BoolVec{0, 1, 0});
    return {"bfb", a, b};
}

BoolRel bfb_phi() { return {{1, 0, 1}, {1, 1, 0}}; }
// The first iterate already satisfies every condition, so it is the greatest.
BoolRel bfb_greatest() { return {{1, 0, 1}, {1, 1, 1}}; }

Pair lang_pair() {
    Nfa a({"x"}, {BoolRel{{1, 0, 0}, {0, 0, 1}, {0, 0, 0}}}, BoolVec{0, 1, 0}, BoolVec{0, 0, 1});
    Nfa b({"x"}, {BoolRel{{0, 1}, {0, 0}}}, BoolVec{1, 0}, BoolVec{0, 1});
    return {"lang", a, b};
}

Pair weak_pair() {
    Nfa a({"x"}, {BoolRel{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}}}, BoolVec{0, 1, 0, 0},
          BoolVec{0, 0, 1, 0});
    Nfa b({"x"}, {BoolRel{{1, 0}, {1, 0}}}, BoolVec{1, 0}, BoolVec{0, 1});
    return {"weak", a, b};
}

BoolRel weak_mu() { return {{1, 0}, {1, 0}, {0, 1}, {1, 0}}; }
BoolRel weak_fb_fixpoint() { return {{1, 0}, {0, 0}, {0, 0}, {0, 0}}; }

Pair weak_shifted_pair() {
    Pair p = weak_pair();
    p.name = "weak-shifted";
    p.a.set_initial(1, false);
    p.a.set_initial(2);
    p.b.set_initial(1);
    return p;
}

std::vector<Pair> all_pairs() { return {forward_pair(), bfb_pair(), lang_pair(), weak_pair(), weak_shifted_pair()}; }

std::vector<Nfa> small_automata(std::size_t max_states) {
    std::vector<Nfa> out;
    for (const auto& p : all_pairs()) {
        for (const Nfa* m : {&p.a, &p.b}) {
            if (m->size() <= max_states) out.push_back(*m);
        }
    }
    return out;
}

std::string data_path(const std::string& file) { return std::string(NFAEQ_TEST_DATA) + "/" + file; }

}  // namespace golden
