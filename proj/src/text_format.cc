#include "nfaeq/text_format.hh"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace nfaeq {

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t col, const std::string& msg)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
      line_(line),
      col_(col) {}

namespace {

struct Token {
    std::string text;
    std::size_t col;   // 1-based
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    for (std::size_t no = 1; std::getline(in, raw); ++no) {
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        Line line{no, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            const std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

std::optional<std::size_t> to_index(std::string_view s) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
    return v;
}

class NfaParser {
public:
    NfaParser(const std::string& text, std::string source) : source_(std::move(source)), lines_(tokenize(text)) {}

    Nfa run() {
        // Header sections first, so later lines can be checked against them.
        for (const auto& line : lines_) {
            const auto& head = line.tokens.front();
            if (head.text == "states") {
                once(line, "states");
                if (line.tokens.size() != 2) fail(line, head, "'states' takes exactly one count");
                auto n = to_index(line.tokens[1].text);
                if (!n || *n == 0) fail(line, line.tokens[1], "state count must be a positive integer");
                n_ = *n;
            } else if (head.text == "alphabet") {
                once(line, "alphabet");
                if (line.tokens.size() < 2) fail(line, head, "alphabet is empty");
                for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                    const auto& t = line.tokens[i];
                    if (t.text.find(':') != std::string::npos) fail(line, t, "symbol may not contain ':'");
                    for (const auto& s : alphabet_) {
                        if (s == t.text) fail(line, t, "duplicate symbol '" + t.text + "'");
                    }
                    alphabet_.push_back(t.text);
                }
            }
        }
        if (n_ == 0) missing("states");
        if (alphabet_.empty()) missing("alphabet");

        Nfa a(n_, alphabet_, BoolVec(n_), BoolVec(n_));
        for (const auto& line : lines_) {
            const auto& head = line.tokens.front();
            if (head.text == "states" || head.text == "alphabet") continue;
            if (head.text == "initial" || head.text == "terminal") {
                once(line, head.text);
                for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                    const std::size_t s = state(line, line.tokens[i]);
                    if (head.text == "initial") {
                        a.set_initial(s);
                    } else {
                        a.set_terminal(s);
                    }
                }
            } else if (head.text.size() > 1 && head.text.back() == ':') {
                const std::string sym = head.text.substr(0, head.text.size() - 1);
                auto x = a.find_symbol(sym);
                if (!x) {
                    if (sym == "subset") continue;
                    fail(line, head, "unknown symbol '" + sym + "'");
                }
                once(line, head.text);
                for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                    const auto& t = line.tokens[i];
                    const auto arrow = t.text.find("->");
                    if (arrow == std::string::npos) fail(line, t, "expected a transition 'src->dst'");
                    const Token src{t.text.substr(0, arrow), t.col};
                    const Token dst{t.text.substr(arrow + 2), t.col + arrow + 2};
                    a.set_transition(*x, state(line, src), state(line, dst));
                }
            } else {
                fail(line, head, "unknown section '" + head.text + "'");
            }
        }
        if (!seen_.contains("initial")) missing("initial");
        if (!seen_.contains("terminal")) missing("terminal");
        return a;
    }

private:
    [[noreturn]] void fail(const Line& line, const Token& tok, const std::string& msg) const {
        throw ParseError(source_, line.number, tok.col, msg);
    }

    [[noreturn]] void missing(const std::string& section) const {
        const std::size_t end = lines_.empty() ? 1 : lines_.back().number + 1;
        throw ParseError(source_, end, 1, "missing section '" + section + "'");
    }

    void once(const Line& line, const std::string& key) {
        auto [it, inserted] = seen_.emplace(key, line.number);
        if (!inserted) {
            fail(line, line.tokens.front(),
                 "duplicate section '" + key + "' (first on line " + std::to_string(it->second) + ")");
        }
    }

    std::size_t state(const Line& line, const Token& tok) const {
        auto s = to_index(tok.text);
        if (!s) fail(line, tok, "expected a state index, got '" + tok.text + "'");
        if (*s >= n_) fail(line, tok, "state index " + tok.text + " out of range (states " + std::to_string(n_) + ")");
        return *s;
    }

    std::string source_;
    std::vector<Line> lines_;
    std::size_t n_ = 0;
    std::vector<Symbol> alphabet_;
    std::map<std::string, std::size_t> seen_;
};

void print_header(std::ostringstream& os, std::size_t n, const std::vector<Symbol>& alphabet) {
    os << "states " << n << "\nalphabet";
    for (const auto& s : alphabet) os << ' ' << s;
    os << '\n';
}

void print_states(std::ostringstream& os, const char* key, const std::vector<std::size_t>& states) {
    os << key;
    for (std::size_t s : states) os << ' ' << s;
    os << '\n';
}

}  // namespace

Nfa parse_nfa(const std::string& text, const std::string& source) { return NfaParser(text, source).run(); }

std::string print_nfa(const Nfa& a) {
    std::ostringstream os;
    print_header(os, a.size(), a.alphabet());
    print_states(os, "initial", a.sigma().ones());
    print_states(os, "terminal", a.tau().ones());
    for (std::size_t x = 0; x < a.num_symbols(); ++x) {
        os << a.alphabet()[x] << ':';
        for (std::size_t s = 0; s < a.size(); ++s) {
            for (std::size_t t : a.delta(x).row(s).ones()) os << ' ' << s << "->" << t;
        }
        os << '\n';
    }
    return os.str();
}

std::string print_dfa(const Dfa& d) {
    std::ostringstream os;
    print_header(os, d.size(), d.alphabet);
    print_states(os, "initial", {d.start});
    std::vector<std::size_t> fin;
    for (std::size_t q = 0; q < d.size(); ++q) {
        if (d.final[q]) fin.push_back(q);
    }
    print_states(os, "terminal", fin);
    for (std::size_t x = 0; x < d.alphabet.size(); ++x) {
        os << d.alphabet[x] << ':';
        for (std::size_t q = 0; q < d.size(); ++q) os << ' ' << q << "->" << d.next[q][x];
        os << '\n';
    }
    for (std::size_t q = 0; q < d.size(); ++q) {
        os << "subset: " << q << ' ';
        for (std::size_t i = 0; i < d.subset_of[q].size(); ++i) os << (d.subset_of[q].get(i) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

BoolRel parse_rel(const std::string& text, const std::string& source) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(source, 1, 1, "missing 'rows cols' header");
    const auto& head = lines.front();
    if (head.tokens.size() != 2) throw ParseError(source, head.number, 1, "expected 'rows cols'");
    auto rows = to_index(head.tokens[0].text);
    auto cols = to_index(head.tokens[1].text);
    if (!rows || *rows == 0) throw ParseError(source, head.number, head.tokens[0].col, "bad row count");
    if (!cols || *cols == 0) throw ParseError(source, head.number, head.tokens[1].col, "bad column count");

    BoolRel r(*rows, *cols);
    if (lines.size() - 1 != *rows) {
        throw ParseError(source, lines.back().number + 1, 1,
                         "expected " + std::to_string(*rows) + " rows, found " + std::to_string(lines.size() - 1));
    }
    for (std::size_t i = 0; i < *rows; ++i) {
        const auto& line = lines[i + 1];
        std::size_t c = 0;
        for (const auto& t : line.tokens) {
            for (std::size_t k = 0; k < t.text.size(); ++k) {
                const char ch = t.text[k];
                if (ch != '0' && ch != '1') throw ParseError(source, line.number, t.col + k, "expected 0 or 1");
                if (c >= *cols) throw ParseError(source, line.number, t.col + k, "too many entries in row");
                r.set(i, c++, ch == '1');
            }
        }
        if (c != *cols) {
            throw ParseError(source, line.number, 1,
                             "row has " + std::to_string(c) + " entries, expected " + std::to_string(*cols));
        }
    }
    return r;
}

std::string print_rel(const BoolRel& r) {
    return std::to_string(r.rows()) + " " + std::to_string(r.cols()) + "\n" + r.to_string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace nfaeq
