#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "pathalg/rewrite.hpp"

namespace pathalg {

namespace {

constexpr std::size_t kMaxRhsCandidates = 12;  // 2^12 right-hand sides per lhs
constexpr int kMaxAddedRules = 6;

std::string describe(const std::vector<RewriteRule>& rules)
{
    std::string out;
    for (const auto& r : rules)
        out += (out.empty() ? "" : ", ") + r.str();
    return "{" + out + "}";
}

std::string rule_key(const RewriteSystem& rs)
{
    std::string key;
    for (const auto& r : rs.rules())
        key += r.str() + ";";
    return key;
}

std::vector<RewriteRule> derived_rules(const RewriteSystem& reference, const std::vector<RewriteRule>& added,
                                       const RewriteSystem& completed)
{
    std::set<Word> known;
    for (const auto& r : reference.rules())
        known.insert(r.lhs);
    for (const auto& r : added)
        known.insert(r.lhs);
    std::vector<RewriteRule> out;
    for (const auto& r : completed.rules())
        if (!known.count(r.lhs))
            out.push_back(r);
    return out;
}

struct Assessment {
    AugmentationVerdict verdict;
    std::optional<DiscrepancyReport> surplus_only;  // set when only surpluses remain
};

Assessment assess(const RewriteSystem& base, const RewriteSystem& reference, const BigradedDimTable& homology,
                  int degree_bound, int weight_bound, const std::vector<RewriteRule>& added)
{
    Assessment out;
    auto reject = [&](std::string why) {
        out.verdict.reason = fmt::format("{}: {}", describe(added), why);
        return out;
    };
    std::optional<RewriteSystem> completed;
    try {
        completed = complete(augment(base, added), weight_bound);
    } catch (const CompletionFailure& e) {
        return reject(fmt::format("completion failed ({})", e.what()));
    }
    Augmentation aug{added, derived_rules(reference, added, *completed), *completed};
    std::string derived_note;
    if (!aug.derived.empty())
        derived_note = fmt::format(" after completion derived {}", describe(aug.derived));
    if (!added.empty() && !filtration_check(*completed).passed())
        return reject("completed system violates the level filtration" + derived_note);

    DiscrepancyReport report = compare(hilbert(*completed, degree_bound), homology);
    auto deficit = std::find_if(report.cells.begin(), report.cells.end(),
                                [](const CellDiscrepancy& c) { return c.algebra < c.homology; });
    if (deficit != report.cells.end())
        return reject(fmt::format("algebra too small at degree {} level {} ({} < {}){}", deficit->cell.degree,
                                  deficit->cell.level, deficit->algebra, deficit->homology, derived_note));
    out.verdict.augmentation = std::move(aug);
    if (report.empty()) {
        out.verdict.survives = true;
        return out;
    }
    out.verdict.reason = fmt::format("{}: surplus remains at degree {}", describe(added), report.cells.front().cell.degree);
    out.surplus_only = std::move(report);
    return out;
}

struct Search {
    const AlgebraSignature& sig;
    const BigradedDimTable& homology;
    int degree_bound;
    int weight_bound;
    RewriteSystem base;
    RewriteSystem reference;
    RepairResult result;
    std::set<std::string> seen;

    void run(std::vector<RewriteRule> added)
    {
        Assessment a = assess(base, reference, homology, degree_bound, weight_bound, added);
        if (a.verdict.survives) {
            if (seen.insert(rule_key(a.verdict.augmentation->completed)).second)
                result.survivors.push_back(std::move(*a.verdict.augmentation));
            return;
        }
        if (!a.surplus_only) {
            if (!added.empty())
                result.rejected.push_back(a.verdict.reason);
            return;
        }
        if (static_cast<int>(added.size()) >= kMaxAddedRules) {
            result.rejected.push_back(fmt::format("{}: too many added rules", describe(added)));
            return;
        }

        // Lowest-degree surplus cell; its candidate rules kill one word each.
        const RewriteSystem& completed = a.verdict.augmentation->completed;
        const CellDiscrepancy& target = a.surplus_only->cells.front();
        auto basis = irreducible_basis(completed, degree_bound);
        const auto& cell_words = basis[target.cell];
        bool any_candidate = false;
        for (const Word& lhs : cell_words) {
            int degree = word_degree(lhs, sig);
            std::vector<Word> pool;
            for (const auto& [cell, words] : basis) {
                if (cell.level > target.cell.level || cell.degree != target.cell.degree)
                    continue;
                for (const Word& w : words)
                    if (w != lhs && completed.order().less(w, lhs) && word_degree(w, sig) == degree)
                        pool.push_back(w);
            }
            if (pool.size() > kMaxRhsCandidates)
                throw std::runtime_error(fmt::format("repair candidate space for {} too large ({} words)", lhs.str(), pool.size()));
            std::sort(pool.begin(), pool.end(), MonomialOrder::Descending{&completed.order()});
            for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
                std::vector<Word> rhs;
                for (std::size_t b = 0; b < pool.size(); ++b)
                    if (mask & (std::size_t{1} << b))
                        rhs.push_back(pool[b]);
                auto next = added;
                next.push_back({lhs, Polynomial::from_terms(rhs), "augmentation"});
                any_candidate = true;
                run(std::move(next));
            }
        }
        if (!any_candidate && !result.unrepairable_degree)
            result.unrepairable_degree = target.cell.degree;
    }
};

}  // namespace

std::vector<RewriteRule> Augmentation::effective() const
{
    std::vector<RewriteRule> out = added;
    out.insert(out.end(), derived.begin(), derived.end());
    return out;
}

RepairResult repair_search(const AlgebraSignature& sig, const BigradedDimTable& homology, int degree_bound)
{
    if (homology.degree_bound != degree_bound)
        throw std::invalid_argument("homology table bound differs from the search bound");
    const int w = standard_weight_bound(sig, degree_bound);
    RewriteSystem base = orient(sig);
    Search search{sig, homology, degree_bound, w, base, complete(base, w), {}, {}};
    search.run({});
    return std::move(search.result);
}

AugmentationVerdict evaluate_augmentation(const AlgebraSignature& sig, const BigradedDimTable& homology,
                                          int degree_bound, const std::vector<RewriteRule>& added)
{
    if (homology.degree_bound != degree_bound)
        throw std::invalid_argument("homology table bound differs from the search bound");
    const int w = standard_weight_bound(sig, degree_bound);
    RewriteSystem base = orient(sig);
    for (const auto& r : added)
        for (const Word& t : r.rhs.terms())
            if (!base.order().less(t, r.lhs))
                throw OrderRejected(fmt::format("augmentation {} is not oriented", r.str()));
    return assess(base, complete(base, w), homology, degree_bound, w, added).verdict;
}

}  // namespace pathalg
