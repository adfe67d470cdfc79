#include "nfaeq/relcalc.hh"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace nfaeq {

namespace {

std::string shape(const BoolRel& r) {
    return std::to_string(r.rows()) + "x" + std::to_string(r.cols());
}

[[noreturn]] void shape_error(const char* op, const BoolRel& r, const BoolRel& s) {
    throw DimensionError(std::string(op) + ": incompatible shapes " + shape(r) + " and " + shape(s));
}

[[noreturn]] void length_error(const char* op, std::size_t a, std::size_t b) {
    throw DimensionError(std::string(op) + ": incompatible lengths " + std::to_string(a) + " and " +
                         std::to_string(b));
}

Word64 tail_mask(std::size_t bits) {
    const std::size_t rem = bits % 64;
    return rem == 0 ? ~Word64{0} : (Word64{1} << rem) - 1;
}

struct WordsHash {
    std::size_t operator()(const std::vector<Word64>& v) const noexcept {
        std::size_t h = v.size();
        for (Word64 w : v) {
            h ^= std::hash<Word64>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// Groups the rows of r by bit pattern, labelling in order of first occurrence.
Partition group_rows(const BoolRel& r) {
    std::unordered_map<std::vector<Word64>, std::size_t, WordsHash> seen;
    std::vector<std::size_t> labels(r.rows());
    for (std::size_t i = 0; i < r.rows(); ++i) {
        auto w = r.row_words(i);
        auto [it, inserted] = seen.try_emplace(std::vector<Word64>(w.begin(), w.end()), seen.size());
        labels[i] = it->second;
    }
    return Partition::from_labels(labels);
}

}  // namespace

// BoolVec

BoolVec::BoolVec(std::size_t len) : len_(len), words_(words_for(len), 0) {
    if (len == 0) throw DimensionError("BoolVec: length must be positive");
}

BoolVec::BoolVec(std::initializer_list<int> bits) : BoolVec(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
}

BoolVec BoolVec::from_string(const std::string& bits) {
    std::vector<bool> v;
    for (char c : bits) {
        if (c == '0' || c == '1') {
            v.push_back(c == '1');
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument(std::string("BoolVec: unexpected character '") + c + "'");
        }
    }
    BoolVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.set(i, v[i]);
    return out;
}

BoolVec BoolVec::full(std::size_t len) {
    BoolVec v(len);
    std::fill(v.words_.begin(), v.words_.end(), ~Word64{0});
    v.clear_tail();
    return v;
}

BoolVec BoolVec::singleton(std::size_t len, std::size_t pos) {
    BoolVec v(len);
    v.set(pos);
    return v;
}

void BoolVec::set(std::size_t i, bool value) {
    if (i >= len_) throw std::out_of_range("BoolVec: index " + std::to_string(i) + " >= " + std::to_string(len_));
    const Word64 bit = Word64{1} << (i % 64);
    if (value) {
        words_[i / 64] |= bit;
    } else {
        words_[i / 64] &= ~bit;
    }
}

std::size_t BoolVec::count() const {
    std::size_t c = 0;
    for (Word64 w : words_) c += std::popcount(w);
    return c;
}

bool BoolVec::any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word64 w) { return w != 0; });
}

std::vector<std::size_t> BoolVec::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        Word64 w = words_[k];
        while (w) {
            out.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

BoolVec BoolVec::operator|(const BoolVec& other) const {
    if (len_ != other.len_) length_error("union", len_, other.len_);
    BoolVec out(*this);
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] |= other.words_[k];
    return out;
}

BoolVec BoolVec::operator&(const BoolVec& other) const {
    if (len_ != other.len_) length_error("intersect", len_, other.len_);
    BoolVec out(*this);
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= other.words_[k];
    return out;
}

BoolVec BoolVec::operator~() const {
    BoolVec out(*this);
    for (auto& w : out.words_) w = ~w;
    out.clear_tail();
    return out;
}

bool BoolVec::subset_of(const BoolVec& other) const {
    if (len_ != other.len_) length_error("subset_of", len_, other.len_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k] & ~other.words_[k]) return false;
    }
    return true;
}

std::string BoolVec::to_string() const {
    std::string s;
    s.reserve(2 * len_);
    for (std::size_t i = 0; i < len_; ++i) {
        if (i) s += ' ';
        s += get(i) ? '1' : '0';
    }
    return s;
}

void BoolVec::clear_tail() { words_.back() &= tail_mask(len_); }

// BoolRel

BoolRel::BoolRel(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), bits_(rows * wpr_, 0) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("BoolRel: shape must be positive, got " + std::to_string(rows) + "x" +
                             std::to_string(cols));
    }
}

BoolRel::BoolRel(std::initializer_list<std::initializer_list<int>> rows)
    : BoolRel(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("BoolRel: ragged row literal");
        std::size_t c = 0;
        for (int b : row) set(r, c++, b != 0);
        ++r;
    }
}

BoolRel BoolRel::identity(std::size_t n) {
    BoolRel r(n, n);
    for (std::size_t i = 0; i < n; ++i) r.set(i, i);
    return r;
}

BoolRel BoolRel::full(std::size_t rows, std::size_t cols) {
    BoolRel r(rows, cols);
    const Word64 last = tail_mask(cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto w = r.row_words(i);
        std::fill(w.begin(), w.end(), ~Word64{0});
        w.back() = last;
    }
    return r;
}

BoolRel BoolRel::from_rows(const std::vector<BoolVec>& rows) {
    if (rows.empty()) throw DimensionError("BoolRel: no rows");
    BoolRel r(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != r.cols_) length_error("from_rows", r.cols_, rows[i].size());
        std::copy(rows[i].words().begin(), rows[i].words().end(), r.row_words(i).begin());
    }
    return r;
}

void BoolRel::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_) {
        throw std::out_of_range("BoolRel: (" + std::to_string(r) + "," + std::to_string(c) +
                                ") outside " + shape(*this));
    }
    const Word64 bit = Word64{1} << (c % 64);
    Word64& w = bits_[r * wpr_ + c / 64];
    if (value) {
        w |= bit;
    } else {
        w &= ~bit;
    }
}

BoolVec BoolRel::row(std::size_t r) const {
    BoolVec v(cols_);
    auto src = row_words(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
}

BoolVec BoolRel::column(std::size_t c) const {
    BoolVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (get(r, c)) v.set(r);
    }
    return v;
}

std::size_t BoolRel::count() const {
    std::size_t c = 0;
    for (Word64 w : bits_) c += std::popcount(w);
    return c;
}

std::string BoolRel::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += row(r).to_string();
        s += '\n';
    }
    return s;
}

// Composition

BoolRel compose(const BoolRel& r, const BoolRel& s) {
    if (r.cols() != s.rows()) shape_error("compose", r, s);
    BoolRel out(r.rows(), s.cols());
    for (std::size_t a = 0; a < r.rows(); ++a) {
        auto dst = out.row_words(a);
        auto ra = r.row_words(a);
        for (std::size_t k = 0; k < ra.size(); ++k) {
            Word64 w = ra[k];
            while (w) {
                const std::size_t b = k * 64 + std::countr_zero(w);
                w &= w - 1;
                auto sb = s.row_words(b);
                for (std::size_t j = 0; j < dst.size(); ++j) dst[j] |= sb[j];
            }
        }
    }
    return out;
}

BoolVec vec_rel(const BoolVec& alpha, const BoolRel& r) {
    if (alpha.size() != r.rows()) length_error("vec_rel", alpha.size(), r.rows());
    BoolVec out(r.cols());
    auto dst = out.words();
    for (std::size_t a : alpha.ones()) {
        auto ra = r.row_words(a);
        for (std::size_t j = 0; j < dst.size(); ++j) dst[j] |= ra[j];
    }
    return out;
}

BoolVec rel_vec(const BoolRel& r, const BoolVec& beta) {
    if (r.cols() != beta.size()) length_error("rel_vec", r.cols(), beta.size());
    BoolVec out(r.rows());
    auto bw = beta.words();
    for (std::size_t a = 0; a < r.rows(); ++a) {
        auto ra = r.row_words(a);
        for (std::size_t j = 0; j < ra.size(); ++j) {
            if (ra[j] & bw[j]) {
                out.set(a);
                break;
            }
        }
    }
    return out;
}

bool scalar(const BoolVec& alpha, const BoolVec& beta) {
    if (alpha.size() != beta.size()) length_error("scalar", alpha.size(), beta.size());
    auto aw = alpha.words();
    auto bw = beta.words();
    for (std::size_t j = 0; j < aw.size(); ++j) {
        if (aw[j] & bw[j]) return true;
    }
    return false;
}

BoolRel inverse(const BoolRel& r) {
    BoolRel out(r.cols(), r.rows());
    for (std::size_t a = 0; a < r.rows(); ++a) {
        auto ra = r.row_words(a);
        for (std::size_t k = 0; k < ra.size(); ++k) {
            Word64 w = ra[k];
            while (w) {
                out.set(k * 64 + std::countr_zero(w), a);
                w &= w - 1;
            }
        }
    }
    return out;
}

BoolRel unite(const BoolRel& r, const BoolRel& s) {
    if (r.rows() != s.rows() || r.cols() != s.cols()) shape_error("union", r, s);
    BoolRel out(r);
    for (std::size_t a = 0; a < r.rows(); ++a) {
        auto dst = out.row_words(a);
        auto src = s.row_words(a);
        for (std::size_t j = 0; j < dst.size(); ++j) dst[j] |= src[j];
    }
    return out;
}

BoolRel intersect(const BoolRel& r, const BoolRel& s) {
    if (r.rows() != s.rows() || r.cols() != s.cols()) shape_error("intersect", r, s);
    BoolRel out(r);
    for (std::size_t a = 0; a < r.rows(); ++a) {
        auto dst = out.row_words(a);
        auto src = s.row_words(a);
        for (std::size_t j = 0; j < dst.size(); ++j) dst[j] &= src[j];
    }
    return out;
}

bool subset_of(const BoolRel& r, const BoolRel& s) {
    if (r.rows() != s.rows() || r.cols() != s.cols()) shape_error("subset_of", r, s);
    for (std::size_t a = 0; a < r.rows(); ++a) {
        auto ra = r.row_words(a);
        auto sa = s.row_words(a);
        for (std::size_t j = 0; j < ra.size(); ++j) {
            if (ra[j] & ~sa[j]) return false;
        }
    }
    return true;
}

// Arrows

BoolRel arrow_right(const BoolVec& eta, const BoolVec& xi) {
    BoolRel out(eta.size(), xi.size());
    const BoolVec all = BoolVec::full(xi.size());
    for (std::size_t a = 0; a < eta.size(); ++a) {
        const BoolVec& row = eta.get(a) ? xi : all;
        std::copy(row.words().begin(), row.words().end(), out.row_words(a).begin());
    }
    return out;
}

BoolRel arrow_left(const BoolVec& eta, const BoolVec& xi) {
    BoolRel out(eta.size(), xi.size());
    const BoolVec outside = ~xi;
    const BoolVec all = BoolVec::full(xi.size());
    for (std::size_t a = 0; a < eta.size(); ++a) {
        const BoolVec& row = eta.get(a) ? all : outside;
        std::copy(row.words().begin(), row.words().end(), out.row_words(a).begin());
    }
    return out;
}

BoolRel biarrow(const BoolVec& eta, const BoolVec& xi) {
    BoolRel out(eta.size(), xi.size());
    const BoolVec outside = ~xi;
    for (std::size_t a = 0; a < eta.size(); ++a) {
        const BoolVec& row = eta.get(a) ? xi : outside;
        std::copy(row.words().begin(), row.words().end(), out.row_words(a).begin());
    }
    return out;
}

// Residuals

BoolRel residual_right(const BoolRel& phi, const BoolRel& alpha) {
    if (!alpha.is_square() || alpha.rows() != phi.rows()) shape_error("residual_right", phi, alpha);
    // Row a of phi/alpha is the meet of the rows a' of phi with (a',a) in alpha.
    BoolRel out = BoolRel::full(phi.rows(), phi.cols());
    for (std::size_t ap = 0; ap < alpha.rows(); ++ap) {
        auto src = phi.row_words(ap);
        for (std::size_t a : alpha.row(ap).ones()) {
            auto dst = out.row_words(a);
            for (std::size_t j = 0; j < dst.size(); ++j) dst[j] &= src[j];
        }
    }
    return out;
}

BoolRel residual_left(const BoolRel& phi, const BoolRel& beta) {
    if (!beta.is_square() || beta.rows() != phi.cols()) shape_error("residual_left", phi, beta);
    // (a,b) holds iff row b of beta is contained in row a of phi.
    BoolRel out(phi.rows(), phi.cols());
    for (std::size_t a = 0; a < phi.rows(); ++a) {
        auto pa = phi.row_words(a);
        for (std::size_t b = 0; b < beta.rows(); ++b) {
            auto bb = beta.row_words(b);
            bool inside = true;
            for (std::size_t j = 0; j < bb.size() && inside; ++j) inside = (bb[j] & ~pa[j]) == 0;
            if (inside) out.set(a, b);
        }
    }
    return out;
}

// Relation properties

bool is_reflexive(const BoolRel& r) {
    if (!r.is_square()) return false;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        if (!r.get(i, i)) return false;
    }
    return true;
}

bool is_symmetric(const BoolRel& r) { return r.is_square() && r == inverse(r); }

bool is_transitive(const BoolRel& r) { return r.is_square() && subset_of(compose(r, r), r); }

bool is_equivalence(const BoolRel& r) { return is_reflexive(r) && is_symmetric(r) && is_transitive(r); }

BoolRel transitive_closure(const BoolRel& r) {
    if (!r.is_square()) throw DimensionError("transitive_closure: relation is " + shape(r));
    BoolRel cur = r;
    while (true) {
        BoolRel next = unite(cur, compose(cur, cur));
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

// Partition

Partition Partition::from_labels(std::span<const std::size_t> labels) {
    if (labels.empty()) throw std::invalid_argument("Partition: empty carrier");
    Partition p;
    std::unordered_map<std::size_t, std::size_t> renumber;
    p.class_of_.resize(labels.size());
    for (std::size_t e = 0; e < labels.size(); ++e) {
        auto [it, inserted] = renumber.try_emplace(labels[e], p.classes_.size());
        if (inserted) p.classes_.emplace_back();
        p.class_of_[e] = it->second;
        p.classes_[it->second].push_back(e);
    }
    return p;
}

Partition Partition::from_relation(const BoolRel& e) {
    if (!is_equivalence(e)) throw std::invalid_argument("Partition: relation is not an equivalence");
    return group_rows(e);
}

Partition Partition::identity(std::size_t n) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
}

Partition Partition::single(std::size_t n) {
    std::vector<std::size_t> labels(n, 0);
    return from_labels(labels);
}

BoolRel Partition::to_relation() const {
    BoolRel r(size(), size());
    for (const auto& cls : classes_) {
        for (std::size_t a : cls) {
            for (std::size_t b : cls) r.set(a, b);
        }
    }
    return r;
}

bool Partition::refines(const Partition& coarser) const {
    if (coarser.size() != size()) return false;
    for (const auto& cls : classes_) {
        for (std::size_t e : cls) {
            if (!coarser.same_class(e, cls.front())) return false;
        }
    }
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        if (c) os << ' ';
        os << '{';
        for (std::size_t i = 0; i < classes_[c].size(); ++i) {
            if (i) os << ',';
            os << classes_[c][i];
        }
        os << '}';
    }
    return os.str();
}

Partition kernel(const BoolRel& phi) { return group_rows(phi); }

Partition cokernel(const BoolRel& phi) { return group_rows(inverse(phi)); }

// Uniformity

bool is_complete(const BoolRel& phi) {
    for (std::size_t a = 0; a < phi.rows(); ++a) {
        auto w = phi.row_words(a);
        if (std::all_of(w.begin(), w.end(), [](Word64 x) { return x == 0; })) return false;
    }
    return true;
}

bool is_surjective(const BoolRel& phi) { return is_complete(inverse(phi)); }

bool is_partial_uniform(const BoolRel& phi) {
    return subset_of(compose(compose(phi, inverse(phi)), phi), phi);
}

bool is_uniform(const BoolRel& phi) { return !uniformity_violation(phi).has_value(); }

std::optional<std::string> uniformity_violation(const BoolRel& phi) {
    if (!is_complete(phi)) return "incomplete";
    if (!is_surjective(phi)) return "non-surjective";
    if (!is_partial_uniform(phi)) return "not partial-uniform";
    return std::nullopt;
}

FunctionalDescriptions::FunctionalDescriptions(const BoolRel& phi)
    : choices_(phi.rows()), pos_(phi.rows(), 0), current_(phi.rows()), done_(false) {
    for (std::size_t a = 0; a < phi.rows(); ++a) {
        choices_[a] = phi.row(a).ones();
        if (choices_[a].empty()) {
            done_ = true;
            return;
        }
        current_[a] = choices_[a].front();
    }
}

void FunctionalDescriptions::advance() {
    if (done_) return;
    // Odometer with the last row turning fastest gives lexicographic order.
    for (std::size_t k = choices_.size(); k-- > 0;) {
        if (++pos_[k] < choices_[k].size()) {
            current_[k] = choices_[k][pos_[k]];
            return;
        }
        pos_[k] = 0;
        current_[k] = choices_[k].front();
    }
    done_ = true;
}

BoolRel InducedBijection::as_relation() const {
    BoolRel r(kernel.num_classes(), cokernel.num_classes());
    for (std::size_t c = 0; c < map.size(); ++c) r.set(c, map[c]);
    return r;
}

InducedBijection induced_bijection(const BoolRel& phi) {
    if (auto why = uniformity_violation(phi)) throw NotUniformError("induced_bijection: relation is " + *why);

    InducedBijection ib{kernel(phi), cokernel(phi), {}};
    auto map_for = [&](const std::vector<std::size_t>& f) {
        std::vector<std::size_t> m(ib.kernel.num_classes());
        for (std::size_t c = 0; c < m.size(); ++c) m[c] = ib.cokernel.class_of(f[ib.kernel.members(c).front()]);
        return m;
    };

    FunctionalDescriptions fd(phi);
    ib.map = map_for(fd.current());
    fd.advance();
    if (!fd.done() && map_for(fd.current()) != ib.map) {
        throw std::logic_error("induced_bijection: map depends on the functional description");
    }

    std::vector<bool> hit(ib.cokernel.num_classes(), false);
    for (std::size_t t : ib.map) {
        if (hit[t]) throw std::logic_error("induced_bijection: map is not injective");
        hit[t] = true;
    }
    if (ib.map.size() != ib.cokernel.num_classes()) {
        throw std::logic_error("induced_bijection: class counts differ");
    }
    return ib;
}

Partition quotient_partition(const Partition& f, const Partition& e) {
    if (f.size() != e.size()) {
        throw std::invalid_argument("quotient_partition: carriers differ (" + std::to_string(f.size()) + " vs " +
                                    std::to_string(e.size()) + ")");
    }
    std::vector<std::size_t> labels(e.num_classes());
    for (std::size_t c = 0; c < e.num_classes(); ++c) {
        const auto& cls = e.members(c);
        for (std::size_t x : cls) {
            if (!f.same_class(cls.front(), x)) {
                throw std::invalid_argument("quotient_partition: pair (" + std::to_string(cls.front()) + "," +
                                            std::to_string(x) + ") is in E but not in F");
            }
        }
        labels[c] = f.class_of(cls.front());
    }
    return Partition::from_labels(labels);
}

Partition join(const Partition& e, const Partition& f) {
    if (e.size() != f.size()) throw std::invalid_argument("join: carriers differ");
    std::vector<std::size_t> parent(e.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto link = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (const Partition* p : {&e, &f}) {
        for (const auto& cls : p->classes()) {
            for (std::size_t x : cls) link(cls.front(), x);
        }
    }
    std::vector<std::size_t> labels(e.size());
    for (std::size_t x = 0; x < labels.size(); ++x) labels[x] = find(x);
    return Partition::from_labels(labels);
}

}  // namespace nfaeq
