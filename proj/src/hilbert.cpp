#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "pathalg/rewrite.hpp"

namespace pathalg {

std::int64_t BigradedDimTable::at(int degree, int level) const
{
    auto it = entries.find({degree, level});
    return it == entries.end() ? 0 : it->second;
}

std::int64_t BigradedDimTable::total(int degree) const
{
    std::int64_t sum = 0;
    for (auto it = entries.lower_bound({degree, std::numeric_limits<int>::min()});
         it != entries.end() && it->first.degree == degree; ++it)
        sum += it->second;
    return sum;
}

void BigradedDimTable::add(int degree, int level, std::int64_t dim)
{
    if (degree < 0 || degree > degree_bound || dim == 0)
        return;
    entries[{degree, level}] += dim;
}

int required_weight_bound(const AlgebraSignature& sig, int degree_bound)
{
    const int n = sig.n();
    // H^a X^e Y^k: a <= n contributes at most n+1, X at most n+1, and
    // k <= ceil((D + n) / n).
    return (n + 1) + (n + 1) + (degree_bound + n + n - 1) / n;
}

int standard_weight_bound(const AlgebraSignature& sig, int degree_bound)
{
    return required_weight_bound(sig, degree_bound) + 4;
}

namespace {

// Aho-Corasick automaton over the rule left-hand sides; a word is irreducible
// iff its run never visits a terminal state.
class FactorAutomaton {
public:
    explicit FactorAutomaton(const std::vector<RewriteRule>& rules)
    {
        next_.push_back({-1, -1, -1, -1});
        fail_.push_back(0);
        terminal_.push_back(false);
        for (const RewriteRule& r : rules) {
            int s = 0;
            for (std::size_t i = 0; i < r.lhs.size(); ++i) {
                auto c = static_cast<std::size_t>(r.lhs[i]);
                if (next_[s][c] < 0) {
                    next_[s][c] = static_cast<int>(next_.size());
                    next_.push_back({-1, -1, -1, -1});
                    fail_.push_back(0);
                    terminal_.push_back(false);
                }
                s = next_[s][c];
            }
            terminal_[s] = true;
        }
        std::queue<int> q;
        for (std::size_t c = 0; c < 4; ++c) {
            int t = next_[0][c];
            if (t < 0)
                next_[0][c] = 0;
            else {
                fail_[t] = 0;
                q.push(t);
            }
        }
        while (!q.empty()) {
            int s = q.front();
            q.pop();
            terminal_[s] = terminal_[s] || terminal_[fail_[s]];
            for (std::size_t c = 0; c < 4; ++c) {
                int t = next_[s][c];
                if (t < 0)
                    next_[s][c] = next_[fail_[s]][c];
                else {
                    fail_[t] = next_[fail_[s]][c];
                    q.push(t);
                }
            }
        }
    }

    int step(int state, Gen g) const { return next_[state][static_cast<std::size_t>(g)]; }
    bool terminal(int state) const { return terminal_[state]; }
    bool root_terminal() const { return terminal_[0]; }

private:
    std::vector<std::array<int, 4>> next_;
    std::vector<int> fail_;
    std::vector<bool> terminal_;
};

void require_certified(const RewriteSystem& rs, int degree_bound)
{
    if (degree_bound < 0)
        throw std::invalid_argument("degree bound must be nonnegative");
    if (!rs.complete())
        throw InsufficientBound("Hilbert function requires a system completed up to a weight bound",
                                standard_weight_bound(rs.signature(), degree_bound));
    int needed = standard_weight_bound(rs.signature(), degree_bound);
    if (rs.weight_bound() < needed)
        throw InsufficientBound(fmt::format("degree bound {} needs completion up to weight {}, system has {}",
                                            degree_bound, needed, rs.weight_bound()),
                                needed);
}

// Irreducible words heavier than the unpadded bound but inside the degree
// range mean the normal-form shape assumption is wrong for this system.
void check_tail(const RewriteSystem& rs, int degree_bound, int heaviest_in_range)
{
    int limit = required_weight_bound(rs.signature(), degree_bound);
    if (heaviest_in_range > limit)
        throw InsufficientBound(
            fmt::format("irreducible word of weight {} lies in degree range [0, {}]; bound not certified",
                        heaviest_in_range, degree_bound),
            heaviest_in_range + 4);
}

}  // namespace

BigradedDimTable hilbert(const RewriteSystem& rs, int degree_bound)
{
    require_certified(rs, degree_bound);
    const AlgebraSignature& sig = rs.signature();
    const MonomialOrder& order = rs.order();
    const int bound = rs.weight_bound();
    const int n = sig.n();

    FactorAutomaton automaton(rs.rules());
    BigradedDimTable table;
    table.degree_bound = degree_bound;
    if (automaton.root_terminal())
        return table;

    // layers[w] : (state, H-degree, level) -> number of irreducible words of weight w
    using Key = std::tuple<int, int, int>;
    std::vector<std::map<Key, std::int64_t>> layers(static_cast<std::size_t>(bound) + 1);
    layers[0][{0, 0, 0}] = 1;
    int heaviest = 0;
    for (int w = 0; w <= bound; ++w) {
        for (const auto& [key, count] : layers[static_cast<std::size_t>(w)]) {
            auto [state, degree, level] = key;
            if (degree + n >= 0 && degree + n <= degree_bound) {
                table.add(degree + n, level, count);
                heaviest = std::max(heaviest, w);
            }
            for (Gen g : sig.alphabet()) {
                int w2 = w + order.weight(g);
                if (w2 > bound)
                    continue;
                int s2 = automaton.step(state, g);
                if (automaton.terminal(s2))
                    continue;
                layers[static_cast<std::size_t>(w2)][{s2, degree + sig.degree(g), level + sig.level(g)}] += count;
            }
        }
    }
    check_tail(rs, degree_bound, heaviest);
    return table;
}

std::map<Cell, std::vector<Word>> irreducible_basis(const RewriteSystem& rs, int degree_bound)
{
    require_certified(rs, degree_bound);
    const AlgebraSignature& sig = rs.signature();
    const MonomialOrder& order = rs.order();
    const int bound = rs.weight_bound();

    FactorAutomaton automaton(rs.rules());
    std::map<Cell, std::vector<Word>> basis;
    if (automaton.root_terminal())
        return basis;

    int heaviest = 0;
    struct Frame {
        Word word;
        int state;
        int weight;
        int degree;
    };
    std::vector<Frame> stack{{Word{}, 0, 0, 0}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        int unshifted = f.degree + sig.n();
        if (unshifted >= 0 && unshifted <= degree_bound) {
            basis[{unshifted, word_level(f.word)}].push_back(f.word);
            heaviest = std::max(heaviest, f.weight);
        }
        for (Gen g : sig.alphabet()) {
            int w2 = f.weight + order.weight(g);
            if (w2 > bound)
                continue;
            int s2 = automaton.step(f.state, g);
            if (automaton.terminal(s2))
                continue;
            Word next = f.word;
            next += g;
            stack.push_back({std::move(next), s2, w2, f.degree + sig.degree(g)});
        }
    }
    check_tail(rs, degree_bound, heaviest);
    for (auto& [cell, words] : basis)
        std::sort(words.begin(), words.end(), MonomialOrder::Descending{&order});
    return basis;
}

DiscrepancyReport compare(const BigradedDimTable& algebra, const BigradedDimTable& homology)
{
    if (algebra.degree_bound != homology.degree_bound)
        throw std::invalid_argument(fmt::format("degree bounds differ: {} vs {}", algebra.degree_bound,
                                                homology.degree_bound));
    DiscrepancyReport report;
    std::set<Cell> cells;
    for (const auto& [cell, dim] : algebra.entries)
        cells.insert(cell);
    for (const auto& [cell, dim] : homology.entries)
        cells.insert(cell);
    for (const Cell& c : cells) {
        auto a = algebra.at(c.degree, c.level);
        auto h = homology.at(c.degree, c.level);
        if (a != h)
            report.cells.push_back({c, a, h, {}});
    }
    for (int d = 0; d <= algebra.degree_bound; ++d) {
        auto a = algebra.total(d);
        auto h = homology.total(d);
        if (a != h)
            report.totals.push_back({d, a, h});
    }
    return report;
}

void annotate_surplus(DiscrepancyReport& report, const RewriteSystem& rs)
{
    int bound = 0;
    for (const auto& c : report.cells)
        bound = std::max(bound, c.cell.degree);
    if (report.cells.empty())
        return;
    auto basis = irreducible_basis(rs, bound);
    for (auto& c : report.cells) {
        if (c.algebra <= c.homology)
            continue;
        const auto& words = basis[c.cell];
        auto count = static_cast<std::size_t>(c.algebra - c.homology);
        c.surplus.assign(words.begin(), words.begin() + static_cast<std::ptrdiff_t>(std::min(count, words.size())));
    }
}

}  // namespace pathalg
