// Boolean relational calculus on finite index sets.
//
// A BoolRel is a relation between {0..rows-1} and {0..cols-1}, stored as a
// dense bit matrix with each row packed into 64-bit words. A BoolVec is a
// subset of {0..len-1}. Every operation here is a pure function.

#ifndef NFAEQ_RELCALC_HH
#define NFAEQ_RELCALC_HH

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nfaeq {

/// Thrown when operands have incompatible shapes.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by operations that require a uniform relation.
class NotUniformError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Word64 = std::uint64_t;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

class BoolVec {
public:
    explicit BoolVec(std::size_t len);
    BoolVec(std::initializer_list<int> bits);
    static BoolVec from_string(const std::string& bits);     // "0101", whitespace ignored
    static BoolVec full(std::size_t len);
    static BoolVec singleton(std::size_t len, std::size_t pos);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool value = true);
    bool operator[](std::size_t i) const { return get(i); }

    std::size_t count() const;
    bool any() const;
    bool none() const { return !any(); }
    /// Positions of set bits in increasing order.
    std::vector<std::size_t> ones() const;

    std::span<const Word64> words() const { return words_; }
    std::span<Word64> words() { return words_; }

    BoolVec operator|(const BoolVec& other) const;
    BoolVec operator&(const BoolVec& other) const;
    BoolVec operator~() const;
    bool subset_of(const BoolVec& other) const;

    bool operator==(const BoolVec& other) const = default;
    auto operator<=>(const BoolVec& other) const = default;

    /// Space separated 0/1 digits, e.g. "1 0 0".
    std::string to_string() const;

private:
    void clear_tail();

    std::size_t len_;
    std::vector<Word64> words_;
};

class BoolRel {
public:
    BoolRel(std::size_t rows, std::size_t cols);
    /// Row-major literal, e.g. {{1,0},{0,1}}.
    BoolRel(std::initializer_list<std::initializer_list<int>> rows);
    static BoolRel identity(std::size_t n);
    static BoolRel full(std::size_t rows, std::size_t cols);
    static BoolRel from_rows(const std::vector<BoolVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * wpr_ + c / 64] >> (c % 64)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value = true);

    std::span<const Word64> row_words(std::size_t r) const {
        return {bits_.data() + r * wpr_, wpr_};
    }
    std::span<Word64> row_words(std::size_t r) { return {bits_.data() + r * wpr_, wpr_}; }
    BoolVec row(std::size_t r) const;
    BoolVec column(std::size_t c) const;

    std::size_t count() const;
    bool empty() const { return count() == 0; }
    bool is_square() const { return rows_ == cols_; }

    bool operator==(const BoolRel& other) const = default;

    /// One line per row, each row space separated 0/1 digits.
    std::string to_string() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t wpr_;
    std::vector<Word64> bits_;
};

// Composition and set operations.

BoolRel compose(const BoolRel& r, const BoolRel& s);
BoolVec vec_rel(const BoolVec& alpha, const BoolRel& r);
BoolVec rel_vec(const BoolRel& r, const BoolVec& beta);
bool scalar(const BoolVec& alpha, const BoolVec& beta);

BoolRel inverse(const BoolRel& r);
BoolRel unite(const BoolRel& r, const BoolRel& s);
BoolRel intersect(const BoolRel& r, const BoolRel& s);
bool subset_of(const BoolRel& r, const BoolRel& s);

// Arrow relations between subsets eta of A and xi of B.

/// (a,b) iff a in eta implies b in xi. Greatest chi with eta o chi <= xi.
BoolRel arrow_right(const BoolVec& eta, const BoolVec& xi);
/// (a,b) iff b in xi implies a in eta. Greatest chi with chi o xi <= eta.
BoolRel arrow_left(const BoolVec& eta, const BoolVec& xi);
/// (a,b) iff (a in eta) == (b in xi).
BoolRel biarrow(const BoolVec& eta, const BoolVec& xi);

/// Right residual phi/alpha: the greatest psi with alpha o psi <= phi.
/// alpha must be square of order rows(phi).
BoolRel residual_right(const BoolRel& phi, const BoolRel& alpha);
/// Left residual phi\beta: the greatest psi with psi o beta <= phi.
/// beta must be square of order cols(phi).
BoolRel residual_left(const BoolRel& phi, const BoolRel& beta);

bool is_reflexive(const BoolRel& r);
bool is_symmetric(const BoolRel& r);
bool is_transitive(const BoolRel& r);
bool is_equivalence(const BoolRel& r);

/// Least transitive relation containing r (r must be square).
BoolRel transitive_closure(const BoolRel& r);

// Partitions.

/// An equivalence on {0..n-1} as a class list. Classes are numbered in order
/// of first occurrence of their smallest element, so two equal equivalences
/// always produce identical Partition values.
class Partition {
public:
    /// Builds from an arbitrary labelling; labels are renumbered.
    static Partition from_labels(std::span<const std::size_t> labels);
    static Partition from_relation(const BoolRel& e);
    static Partition identity(std::size_t n);
    static Partition single(std::size_t n);

    std::size_t size() const { return class_of_.size(); }
    std::size_t num_classes() const { return classes_.size(); }
    std::size_t class_of(std::size_t e) const { return class_of_[e]; }
    const std::vector<std::size_t>& class_of() const { return class_of_; }
    const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
    const std::vector<std::size_t>& members(std::size_t c) const { return classes_[c]; }
    bool same_class(std::size_t a, std::size_t b) const { return class_of_[a] == class_of_[b]; }

    BoolRel to_relation() const;
    /// True iff every class of *this lies inside a class of coarser.
    bool refines(const Partition& coarser) const;

    bool operator==(const Partition& other) const = default;

    /// Classes as "{0,1} {2}".
    std::string to_string() const;

private:
    std::vector<std::size_t> class_of_;
    std::vector<std::vector<std::size_t>> classes_;
};

/// Groups rows with identical patterns.
Partition kernel(const BoolRel& phi);
/// Groups columns with identical patterns.
Partition cokernel(const BoolRel& phi);

bool is_complete(const BoolRel& phi);
bool is_surjective(const BoolRel& phi);
/// phi o phi^-1 o phi <= phi.
bool is_partial_uniform(const BoolRel& phi);
bool is_uniform(const BoolRel& phi);

/// Empty when phi is uniform, otherwise names the first violated condition:
/// "incomplete", "non-surjective" or "not partial-uniform".
std::optional<std::string> uniformity_violation(const BoolRel& phi);

/// Enumerates the functions f with (a, f(a)) in phi, lexicographically by
/// (f(0), f(1), ...). The first one picks the lowest set column of each row.
class FunctionalDescriptions {
public:
    explicit FunctionalDescriptions(const BoolRel& phi);

    bool done() const { return done_; }
    const std::vector<std::size_t>& current() const { return current_; }
    void advance();

private:
    std::vector<std::vector<std::size_t>> choices_;
    std::vector<std::size_t> pos_;
    std::vector<std::size_t> current_;
    bool done_;
};

/// The bijection from kernel classes onto cokernel classes induced by a
/// uniform relation: class of a maps to the cokernel class of f(a).
struct InducedBijection {
    Partition kernel;
    Partition cokernel;
    std::vector<std::size_t> map;   // kernel class index -> cokernel class index

    /// The same bijection as a relation between the two class sets.
    BoolRel as_relation() const;
};

/// Throws NotUniformError when phi is not uniform.
InducedBijection induced_bijection(const BoolRel& phi);

/// F/E on the classes of e. Requires e to refine f; otherwise throws
/// std::invalid_argument citing a pair related by e but not by f.
Partition quotient_partition(const Partition& f, const Partition& e);
/// Least equivalence containing both.
Partition join(const Partition& e, const Partition& f);

}  // namespace nfaeq

#endif  // NFAEQ_RELCALC_HH
