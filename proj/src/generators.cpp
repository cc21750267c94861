#include <algorithm>

#include <fmt/format.h>

#include "pathalg/homology.hpp"

namespace pathalg {

namespace {

// S Sbar S ... (k factors) or Sbar S Sbar ...
std::string alternating(bool start_with_s, int k)
{
    std::string out;
    bool s = start_with_s;
    for (int i = 0; i < k; ++i, s = !s)
        out += s ? "S" : "Sbar";
    return out;
}

std::string monomial(int a, std::optional<Gen> middle, int k)
{
    Word w = Word::power(Gen::H, a);
    if (middle)
        w += *middle;
    w += Word::power(Gen::Y, k);
    return w.str();
}

}  // namespace

std::vector<GeneratorCell> generator_table(int n, int max_level)
{
    if (n < 1)
        throw std::invalid_argument(fmt::format("n must be >= 1, got {}", n));
    if (max_level < 0)
        throw std::invalid_argument("max_level must be nonnegative");

    std::map<Cell, std::vector<std::string>> cells;
    cells[{n, 0}].push_back(fmt::format("U_{}", n));
    for (int a = 1; a <= n; ++a)
        cells[{n - a, 0}].push_back(Word::power(Gen::H, a).str());

    for (int k = 1; k <= max_level; ++k) {
        if (n == 1) {
            cells[{k + 1, k}] = {alternating(true, k), alternating(false, k)};
            cells[{k, k}] = {"H" + alternating(true, k), "H" + alternating(false, k)};
            continue;
        }
        // X-family first so a shared cell reads "S, H^2Y" as in the table.
        const bool even = n % 2 == 0;
        const int top = even ? n - 1 : n;
        for (int a = 0; a <= top; ++a) {
            int degree = even ? k * n - a : 1 + k * n - a;
            cells[{degree, k}].push_back(monomial(a, even ? Gen::T : Gen::S, k - 1));
        }
        for (int a = 0; a <= top; ++a)
            cells[{(k + 1) * n - a, k}].push_back(monomial(a, std::nullopt, k));
    }

    std::vector<GeneratorCell> out;
    for (auto& [cell, names] : cells)
        out.push_back({cell.degree, cell.level, std::move(names)});
    std::stable_sort(out.begin(), out.end(), [](const GeneratorCell& a, const GeneratorCell& b) {
        return a.level != b.level ? a.level < b.level : a.degree > b.degree;
    });
    return out;
}

int stable_ranks(int degree)
{
    if (degree < 0)
        throw std::invalid_argument("degree must be nonnegative");
    return degree == 0 ? 1 : 2;
}

std::vector<int> first_two_columns(int n, int max_degree)
{
    GradedGroupTable table = assemble_pn_homology(n, Coefficients::F2, max_degree);
    std::vector<int> out(static_cast<std::size_t>(max_degree) + 1, 0);
    for (const auto& [cell, g] : table.by_level)
        if (cell.level <= 1)
            out[static_cast<std::size_t>(cell.degree)] += g.rank;
    return out;
}

}  // namespace pathalg
