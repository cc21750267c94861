#include "pathalg/rewrite.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace pathalg {

MonomialOrder::MonomialOrder(std::array<int, 4> weights)
    : weights_(weights)
{
    for (Gen g : kAllGens)
        if (weight(g) <= 0)
            throw OrderRejected(fmt::format("weight of {} must be positive, got {}", gen_char(g), weight(g)));
}

MonomialOrder MonomialOrder::default_for(const AlgebraSignature& sig)
{
    // [S,Y] = H^{n-1}Y^2 needs YS heavier than H^{n-1}Y^2.
    int s_weight = sig.parity() == ParityClass::Odd1 ? sig.n() + 1 : 1;
    return MonomialOrder({1, 1, s_weight, 1});
}

int MonomialOrder::weight(const Word& w) const
{
    int total = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        total += weight(w[i]);
    return total;
}

std::strong_ordering MonomialOrder::compare(const Word& a, const Word& b) const
{
    if (auto c = weight(a) <=> weight(b); c != 0)
        return c;
    return a.codes() <=> b.codes();
}

bool MonomialOrder::less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

Word MonomialOrder::max_word(const Polynomial& p) const
{
    if (p.is_zero())
        throw std::invalid_argument("max_word of the zero polynomial");
    return *std::max_element(p.terms().begin(), p.terms().end(),
                             [this](const Word& a, const Word& b) { return less(a, b); });
}

RewriteSystem::RewriteSystem(AlgebraSignature sig, MonomialOrder order, std::vector<RewriteRule> rules,
                             int weight_bound, CompletionStatus status)
    : sig_(std::move(sig))
    , order_(order)
    , rules_(std::move(rules))
    , weight_bound_(weight_bound)
    , status_(status)
{
    std::sort(rules_.begin(), rules_.end(),
              [this](const RewriteRule& a, const RewriteRule& b) { return order_.less(a.lhs, b.lhs); });
}

std::optional<Redex> RewriteSystem::find_redex(const Word& w) const
{
    std::optional<Redex> best;
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        std::size_t pos = w.find(rules_[r].lhs);
        if (pos == std::string::npos)
            continue;
        if (!best || pos < best->position ||
            (pos == best->position && rules_[r].lhs.size() < rules_[best->rule].lhs.size()))
            best = Redex{r, pos};
    }
    return best;
}

const RewriteRule* RewriteSystem::rule_for(const Word& lhs) const
{
    for (const RewriteRule& r : rules_)
        if (r.lhs == lhs)
            return &r;
    return nullptr;
}

RewriteSystem orient(const AlgebraSignature& sig, const MonomialOrder& order)
{
    std::vector<RewriteRule> rules;
    for (const Relation& rel : sig.relations()) {
        for (const Word& w : rel.tail.terms()) {
            if (!order.less(w, rel.head))
                throw OrderRejected(fmt::format("relation {}: word {} is not below {} in the order", rel.name,
                                                w.str(), rel.head.str()));
        }
        rules.push_back({rel.head, rel.tail, rel.name});
    }
    return RewriteSystem(sig, order, std::move(rules), 0, CompletionStatus::Incomplete);
}

RewriteSystem augment(const RewriteSystem& rs, const std::vector<RewriteRule>& extra)
{
    std::vector<RewriteRule> rules = rs.rules();
    for (const RewriteRule& r : extra) {
        check_alphabet(r.lhs, rs.signature());
        check_alphabet(r.rhs, rs.signature());
        for (const Word& w : r.rhs.terms())
            if (!rs.order().less(w, r.lhs))
                throw OrderRejected(fmt::format("rule {}: {} is not below the lhs", r.str(), w.str()));
        rules.push_back(r);
    }
    return RewriteSystem(rs.signature(), rs.order(), std::move(rules), rs.weight_bound(), CompletionStatus::Incomplete);
}

Polynomial normal_form(const Polynomial& p, const RewriteSystem& rs, ReductionStats* stats)
{
    check_alphabet(p, rs.signature());
    const MonomialOrder& order = rs.order();
    if (rs.complete()) {
        for (const Word& w : p.terms())
            if (order.weight(w) > rs.weight_bound())
                throw TruncationError(fmt::format("word {} has weight {} beyond the completion bound {}", w.str(),
                                                  order.weight(w), rs.weight_bound()));
    }

    // Largest word first: every rewrite only produces smaller words, so a word
    // that is irreducible when it reaches the front is final.
    std::set<Word, MonomialOrder::Descending> pending(p.terms().begin(), p.terms().end(),
                                                      MonomialOrder::Descending{&order});
    std::vector<Word> result;
    std::int64_t steps = 0;
    while (!pending.empty()) {
        Word w = *pending.begin();
        pending.erase(pending.begin());
        auto redex = rs.find_redex(w);
        if (!redex) {
            result.push_back(std::move(w));
            continue;
        }
        if (++steps > kMaxReductionSteps)
            throw ReductionLimitExceeded(fmt::format("more than {} reduction steps", kMaxReductionSteps));
        const RewriteRule& rule = rs.rules()[redex->rule];
        Word prefix = w.substr(0, redex->position);
        Word suffix = w.substr(redex->position + rule.lhs.size());
        for (const Word& r : rule.rhs.terms()) {
            Word next = prefix + r + suffix;
            auto [it, inserted] = pending.insert(next);
            if (!inserted)
                pending.erase(it);
        }
    }
    if (stats)
        stats->steps += steps;
    return Polynomial::from_terms(std::move(result));
}

}  // namespace pathalg
