#pragma once

// Rewriting systems for the presented algebras: orientation, reduction,
// truncated Knuth-Bendix completion and bigraded Hilbert functions.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathalg/ncalg.hpp"
#include "pathalg/report.hpp"

namespace pathalg {

class OrderRejected : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ReductionLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CompletionFailure : public std::runtime_error {
public:
    CompletionFailure(const std::string& what, Polynomial pair)
        : std::runtime_error(what), pair_(std::move(pair))
    {
    }
    const Polynomial& pair() const { return pair_; }

private:
    Polynomial pair_;
};

class InsufficientBound : public std::runtime_error {
public:
    InsufficientBound(const std::string& what, int required)
        : std::runtime_error(what), required_(required)
    {
    }
    int required() const { return required_; }

private:
    int required_;
};

// Weight-lexicographic order: total weight first, then left-to-right
// comparison with H < T < S < Y.
class MonomialOrder {
public:
    explicit MonomialOrder(std::array<int, 4> weights);
    static MonomialOrder default_for(const AlgebraSignature& sig);

    int weight(Gen g) const { return weights_[static_cast<std::size_t>(g)]; }
    int weight(const Word& w) const;
    bool less(const Word& a, const Word& b) const;
    std::strong_ordering compare(const Word& a, const Word& b) const;
    Word max_word(const Polynomial& p) const;  // p must be nonzero
    const std::array<int, 4>& weights() const { return weights_; }

    // Comparator that sorts greatest first.
    struct Descending {
        const MonomialOrder* order;
        bool operator()(const Word& a, const Word& b) const { return order->less(b, a); }
    };

private:
    std::array<int, 4> weights_;
};

struct RewriteRule {
    Word lhs;
    Polynomial rhs;
    std::string origin;  // relation name, "completion" or "augmentation"

    Polynomial polynomial() const { return rhs + Polynomial(lhs); }
    std::string str() const { return lhs.str() + " -> " + rhs.str(); }
};

enum class CompletionStatus { Incomplete, CompleteUpToBound };

struct Redex {
    std::size_t rule;
    std::size_t position;
};

class RewriteSystem {
public:
    RewriteSystem(AlgebraSignature sig, MonomialOrder order, std::vector<RewriteRule> rules, int weight_bound,
                  CompletionStatus status);

    const AlgebraSignature& signature() const { return sig_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    int weight_bound() const { return weight_bound_; }
    CompletionStatus status() const { return status_; }
    bool complete() const { return status_ == CompletionStatus::CompleteUpToBound; }

    // Leftmost occurrence of any rule lhs in w.
    std::optional<Redex> find_redex(const Word& w) const;
    bool reducible(const Word& w) const { return find_redex(w).has_value(); }
    const RewriteRule* rule_for(const Word& lhs) const;

private:
    AlgebraSignature sig_;
    MonomialOrder order_;
    std::vector<RewriteRule> rules_;
    int weight_bound_;
    CompletionStatus status_;
};

RewriteSystem orient(const AlgebraSignature& sig, const MonomialOrder& order);
inline RewriteSystem orient(const AlgebraSignature& sig) { return orient(sig, MonomialOrder::default_for(sig)); }

// Adds rules to an oriented system; the result is marked incomplete.
RewriteSystem augment(const RewriteSystem& rs, const std::vector<RewriteRule>& extra);

inline constexpr std::int64_t kMaxReductionSteps = 1'000'000;

struct ReductionStats {
    std::int64_t steps = 0;
};

Polynomial normal_form(const Polynomial& p, const RewriteSystem& rs, ReductionStats* stats = nullptr);

// Resolves every overlap whose superposition has weight <= weight_bound.
RewriteSystem complete(const RewriteSystem& rs, int weight_bound);

struct CriticalPair {
    std::size_t left;   // rule index whose lhs is a prefix of the superposition
    std::size_t right;  // rule index whose lhs is a suffix
    Word superposition;
    Polynomial s_polynomial;
};

// All proper overlaps (suffix of one lhs = prefix of another) up to the bound.
std::vector<CriticalPair> critical_pairs(const RewriteSystem& rs, int weight_bound);

struct Cell {
    int degree;  // unshifted homological degree
    int level;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct BigradedDimTable {
    int degree_bound = 0;
    std::map<Cell, std::int64_t> entries;

    std::int64_t at(int degree, int level) const;
    std::int64_t total(int degree) const;
    void add(int degree, int level, std::int64_t dim);
};

// Weight bound certifying normal forms H^a X^e Y^k up to the given unshifted degree.
int required_weight_bound(const AlgebraSignature& sig, int degree_bound);
int standard_weight_bound(const AlgebraSignature& sig, int degree_bound);  // including the safety margin

BigradedDimTable hilbert(const RewriteSystem& rs, int degree_bound);

// Irreducible words of unshifted degree in [0, degree_bound], per cell, sorted
// greatest first under the system's order.
std::map<Cell, std::vector<Word>> irreducible_basis(const RewriteSystem& rs, int degree_bound);

struct CellDiscrepancy {
    Cell cell;
    std::int64_t algebra;
    std::int64_t homology;
    std::vector<Word> surplus;  // filled by annotate_surplus
};

struct TotalDiscrepancy {
    int degree;
    std::int64_t algebra;
    std::int64_t homology;
};

struct DiscrepancyReport {
    std::vector<CellDiscrepancy> cells;
    std::vector<TotalDiscrepancy> totals;
    bool empty() const { return cells.empty() && totals.empty(); }
};

DiscrepancyReport compare(const BigradedDimTable& algebra, const BigradedDimTable& homology);

// Names the surplus words of each cell where the algebra is too large: the
// largest (algebra - homology) irreducible words under the order.
void annotate_surplus(DiscrepancyReport& report, const RewriteSystem& rs);

CheckReport filtration_check(const RewriteSystem& rs);
CheckReport anti_automorphism_check(const AlgebraSignature& sig, const RewriteSystem& rs);

// Identities transported by the inclusion P_n -> P_{n+1}; source is the
// completed system for n, target for n+1.
CheckReport heredity_check(const RewriteSystem& source, const RewriteSystem& target);
CheckReport heredity_check(int n);

// Oriented and completed with the default order and a bound that certifies
// Hilbert queries up to degree_bound.
RewriteSystem standard_system(int n, int degree_bound);

struct Augmentation {
    std::vector<RewriteRule> added;
    std::vector<RewriteRule> derived;  // new rules completion found beyond `added`
    RewriteSystem completed;

    // added + derived: the relations the augmentation imposes in effect.
    std::vector<RewriteRule> effective() const;
};

struct RepairResult {
    std::vector<Augmentation> survivors;
    std::vector<std::string> rejected;  // one line per discarded candidate
    std::optional<int> unrepairable_degree;
};

RepairResult repair_search(const AlgebraSignature& sig, const BigradedDimTable& homology, int degree_bound);

struct AugmentationVerdict {
    bool survives = false;
    std::string reason;  // empty for survivors
    std::optional<Augmentation> augmentation;
};

// Runs one fixed augmentation through the same three checks as repair_search.
AugmentationVerdict evaluate_augmentation(const AlgebraSignature& sig, const BigradedDimTable& homology,
                                          int degree_bound, const std::vector<RewriteRule>& added);

}  // namespace pathalg
