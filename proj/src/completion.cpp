#include <algorithm>
#include <deque>

#include <fmt/format.h>

#include "pathalg/rewrite.hpp"

namespace pathalg {

namespace {

RewriteSystem make_system(const RewriteSystem& like, std::vector<RewriteRule> rules, int bound,
                          CompletionStatus status)
{
    return RewriteSystem(like.signature(), like.order(), std::move(rules), bound, status);
}

// Working basis for completion. Rules are kept with lhs pairwise
// non-divisible; rhs are reduced lazily at the end.
class Basis {
public:
    Basis(const RewriteSystem& like, int bound)
        : like_(like)
        , bound_(bound)
    {
    }

    RewriteSystem system() const
    {
        return make_system(like_, rules_, bound_, CompletionStatus::Incomplete);
    }

    // Reduces p and, when nonzero, orients it into a new rule. Rules whose lhs
    // becomes reducible are pulled out and re-inserted.
    bool insert(const Polynomial& p, const std::string& origin)
    {
        std::deque<std::pair<Polynomial, std::string>> work{{p, origin}};
        bool changed = false;
        while (!work.empty()) {
            auto [poly, tag] = std::move(work.front());
            work.pop_front();
            Polynomial reduced = normal_form(poly, system());
            if (reduced.is_zero())
                continue;
            Word lead = like_.order().max_word(reduced);
            if (lead.empty())
                throw CompletionFailure("critical pair reduces to a nonzero constant; the presentation collapses",
                                        reduced);
            reduced += lead;
            std::vector<RewriteRule> kept;
            for (RewriteRule& r : rules_) {
                if (r.lhs.find(lead) != std::string::npos)
                    work.emplace_back(r.polynomial(), r.origin);
                else
                    kept.push_back(std::move(r));
            }
            kept.push_back({lead, reduced, tag});
            rules_ = std::move(kept);
            changed = true;
        }
        return changed;
    }

    void reduce_right_hand_sides()
    {
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            std::vector<RewriteRule> others;
            for (std::size_t j = 0; j < rules_.size(); ++j)
                if (j != i)
                    others.push_back(rules_[j]);
            RewriteSystem rest = make_system(like_, std::move(others), bound_, CompletionStatus::Incomplete);
            rules_[i].rhs = normal_form(rules_[i].rhs, rest);
        }
    }

    const std::vector<RewriteRule>& rules() const { return rules_; }

private:
    const RewriteSystem& like_;
    int bound_;
    std::vector<RewriteRule> rules_;
};

}  // namespace

std::vector<CriticalPair> critical_pairs(const RewriteSystem& rs, int weight_bound)
{
    const auto& rules = rs.rules();
    std::vector<CriticalPair> pairs;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& left = rules[i].lhs;
            const Word& right = rules[j].lhs;
            std::size_t max_overlap = std::min(left.size(), right.size());
            for (std::size_t k = 1; k < max_overlap + 1; ++k) {
                // proper overlap: neither word contains the other
                if (k == left.size() || k == right.size())
                    continue;
                Word shared = right.substr(0, k);
                if (!left.ends_with(shared))
                    continue;
                Word head = left.substr(0, left.size() - k);
                Word tail = right.substr(k);
                Word super = left + tail;
                if (rs.order().weight(super) > weight_bound)
                    continue;
                Polynomial s = rules[i].rhs * Polynomial(tail);
                s += Polynomial(head) * rules[j].rhs;
                pairs.push_back({i, j, std::move(super), std::move(s)});
            }
        }
    }
    std::sort(pairs.begin(), pairs.end(), [&](const CriticalPair& a, const CriticalPair& b) {
        if (a.superposition != b.superposition)
            return rs.order().less(a.superposition, b.superposition);
        return std::tie(a.left, a.right) < std::tie(b.left, b.right);
    });
    return pairs;
}

RewriteSystem complete(const RewriteSystem& rs, int weight_bound)
{
    if (weight_bound < 0)
        throw std::invalid_argument("weight bound must be nonnegative");
    Basis basis(rs, weight_bound);
    for (const RewriteRule& r : rs.rules()) {
        if (rs.order().weight(r.lhs) > weight_bound)
            throw TruncationError(fmt::format("rule {} is heavier than the completion bound {}", r.str(), weight_bound));
        basis.insert(r.polynomial(), r.origin);
    }

    // Sweep until a full pass over the current overlaps adds nothing.
    bool changed = true;
    while (changed) {
        changed = false;
        RewriteSystem current = basis.system();
        for (const CriticalPair& cp : critical_pairs(current, weight_bound)) {
            if (normal_form(cp.s_polynomial, basis.system()).is_zero())
                continue;
            basis.insert(cp.s_polynomial, "completion");
            changed = true;
        }
    }
    basis.reduce_right_hand_sides();
    return make_system(rs, basis.rules(), weight_bound, CompletionStatus::CompleteUpToBound);
}

}  // namespace pathalg
