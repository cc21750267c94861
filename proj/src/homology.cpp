#include "pathalg/homology.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace pathalg {

AbelianGroup AbelianGroup::cyclic(int order)
{
    if (order < 2)
        throw std::invalid_argument(fmt::format("cyclic group order must be >= 2, got {}", order));
    return {0, {order}};
}

int AbelianGroup::two_torsion_count() const
{
    return static_cast<int>(std::count_if(torsion.begin(), torsion.end(), [](int t) { return (t & (t - 1)) == 0; }));
}

void AbelianGroup::canonicalize() { std::sort(torsion.begin(), torsion.end()); }

std::string AbelianGroup::str() const
{
    if (is_zero())
        return "0";
    std::vector<std::string> parts;
    if (rank == 1)
        parts.push_back("Z");
    else if (rank > 1)
        parts.push_back(fmt::format("Z^{}", rank));
    for (int t : torsion)
        parts.push_back(fmt::format("Z/{}", t));
    return fmt::format("{}", fmt::join(parts, "+"));
}

AbelianGroup operator+(AbelianGroup a, const AbelianGroup& b)
{
    a.rank += b.rank;
    a.torsion.insert(a.torsion.end(), b.torsion.begin(), b.torsion.end());
    a.canonicalize();
    return a;
}

std::string to_string(Coefficients c)
{
    switch (c) {
    case Coefficients::ZTrivial: return "Z";
    case Coefficients::ZTwistedO: return "Z-twisted-o";
    case Coefficients::ZPullbackO: return "Z-pullback-o";
    case Coefficients::F2: return "F2";
    }
    return "?";
}

Coefficients parse_coefficients(const std::string& text)
{
    if (text == "Z" || text == "Z-trivial")
        return Coefficients::ZTrivial;
    if (text == "Z-twisted-o" || text == "o")
        return Coefficients::ZTwistedO;
    if (text == "Z-pullback-o" || text == "pi*o")
        return Coefficients::ZPullbackO;
    if (text == "F2" || text == "Z/2")
        return Coefficients::F2;
    throw UnsupportedCoefficients(fmt::format("unknown coefficient system '{}'", text));
}

AbelianGroup GradedGroupTable::at(int degree) const
{
    auto it = groups.find(degree);
    return it == groups.end() ? AbelianGroup::zero() : it->second;
}

int GradedGroupTable::f2_dim(int degree) const
{
    if (coeff != Coefficients::F2)
        throw std::logic_error("f2_dim on an integral table");
    return at(degree).rank;
}

void GradedGroupTable::set(int degree, AbelianGroup g)
{
    g.canonicalize();
    if (g.is_zero())
        groups.erase(degree);
    else
        groups[degree] = std::move(g);
}

namespace {

void require_dimension(int n)
{
    if (n < 1)
        throw std::invalid_argument(fmt::format("n must be >= 1, got {}", n));
}

}  // namespace

GradedGroupTable rpn_homology(int n, Coefficients coeff)
{
    require_dimension(n);
    GradedGroupTable t{fmt::format("RP^{}", n), coeff, n, {}, {}};
    if (coeff == Coefficients::ZPullbackO)
        throw UnsupportedCoefficients("the pullback system lives on ST RP^n, not RP^n");
    if (coeff == Coefficients::F2) {
        for (int d = 0; d <= n; ++d)
            t.set(d, AbelianGroup::free(1));
        return t;
    }
    // o is trivial when n is odd.
    bool twisted = coeff == Coefficients::ZTwistedO && n % 2 == 0;
    for (int d = 0; d <= n; ++d) {
        if (!twisted) {
            if (d == 0 || (d == n && n % 2 == 1))
                t.set(d, AbelianGroup::free(1));
            else if (d % 2 == 1 && d < n)
                t.set(d, AbelianGroup::cyclic(2));
        } else {
            if (d == n)
                t.set(d, AbelianGroup::free(1));
            else if (d % 2 == 0)
                t.set(d, AbelianGroup::cyclic(2));
        }
    }
    return t;
}

GradedGroupTable st_rpn_homology(int n, Coefficients coeff)
{
    require_dimension(n);
    if (coeff == Coefficients::ZTwistedO)
        throw UnsupportedCoefficients("Z-twisted-o is a system on RP^n; use Z-pullback-o on ST RP^n");
    GradedGroupTable t{fmt::format("ST RP^{}", n), coeff, 2 * n - 1, {}, {}};
    if (n == 1) {
        // ST RP^1 is two circles; every local system in play is trivial.
        t.set(0, AbelianGroup::free(2));
        t.set(1, AbelianGroup::free(2));
        return t;
    }

    // Rows in fiber degree 0 and n-1. The fiber orientation system is o.
    Coefficients base = coeff;
    Coefficients fiber = coeff;
    if (coeff == Coefficients::ZTrivial)
        fiber = Coefficients::ZTwistedO;
    else if (coeff == Coefficients::ZPullbackO) {
        base = Coefficients::ZTwistedO;
        fiber = Coefficients::ZTrivial;  // o (x) o
    }
    GradedGroupTable row0 = rpn_homology(n, base);
    GradedGroupTable row1 = rpn_homology(n, fiber);

    // d^n : E_{n,0} -> E_{0,n-1} is multiplication by the Euler number
    // chi(RP^n), which is 1 for n even and 0 for n odd.
    const int euler = n % 2 == 0 ? 1 : 0;
    AbelianGroup source = row0.at(n);
    AbelianGroup target = row1.at(0);
    if (euler != 0 && !source.is_zero() && !target.is_zero()) {
        bool unit_map = source.rank == 1 && target.rank == 1 && !source.has_torsion() && !target.has_torsion();
        if (!unit_map)
            throw UnsupportedCoefficients(fmt::format("differential {} -> {} not handled", source.str(), target.str()));
        row0.set(n, AbelianGroup::zero());
        row1.set(0, AbelianGroup::zero());
    }

    for (int d = 0; d <= 2 * n - 1; ++d) {
        AbelianGroup low = row0.at(d);
        AbelianGroup high = d - (n - 1) >= 0 ? row1.at(d - (n - 1)) : AbelianGroup::zero();
        if (low.has_torsion() && high.has_torsion() && low.rank == 0 && high.rank == 0) {
            // The one nonsplit extension: Z/2 by Z/2 in degree n-1, n even.
            bool known = coeff == Coefficients::ZTrivial && n % 2 == 0 && d == n - 1 &&
                         low == AbelianGroup::cyclic(2) && high == AbelianGroup::cyclic(2);
            if (!known)
                throw UnsupportedCoefficients(
                    fmt::format("extension of {} by {} in degree {} not resolved", low.str(), high.str(), d));
            t.set(d, AbelianGroup::cyclic(4));
            continue;
        }
        t.set(d, low + high);
    }
    return t;
}

Coefficients block_local_system(int n, int k)
{
    require_dimension(n);
    if (k < 1)
        throw std::invalid_argument(fmt::format("block index must be >= 1, got {}", k));
    return n % 2 == 0 && k % 2 == 0 ? Coefficients::ZPullbackO : Coefficients::ZTrivial;
}

GradedGroupTable assemble_pn_homology(int n, Coefficients coeff, int degree_bound)
{
    require_dimension(n);
    if (degree_bound < 0)
        throw std::invalid_argument("degree bound must be nonnegative");
    if (coeff != Coefficients::ZTrivial && coeff != Coefficients::F2)
        throw UnsupportedCoefficients("path-space homology is assembled over Z (with block systems) or F2");

    GradedGroupTable t{fmt::format("P_{}", n), coeff, degree_bound, {}, {}};
    auto place = [&](int degree, int level, const AbelianGroup& g) {
        if (degree > degree_bound || g.is_zero())
            return;
        t.set(degree, t.at(degree) + g);
        t.by_level[{degree, level}] = g;
    };
    for (const auto& [d, g] : rpn_homology(n, coeff).groups)
        place(d, 0, g);
    for (int k = 1;; ++k) {
        int shift = 1 + (k - 1) * n;
        if (shift > degree_bound)
            break;
        Coefficients block = coeff == Coefficients::F2 ? Coefficients::F2 : block_local_system(n, k);
        for (const auto& [d, g] : st_rpn_homology(n, block).groups)
            place(d + shift, k, g);
    }
    return t;
}

GradedGroupTable uct_f2(const GradedGroupTable& integral)
{
    if (!is_integral(integral.coeff))
        throw std::invalid_argument("uct_f2 expects an integral table");
    GradedGroupTable t{integral.space, Coefficients::F2, integral.degree_bound, {}, {}};
    for (int d = 0; d <= integral.degree_bound; ++d) {
        AbelianGroup here = integral.at(d);
        AbelianGroup below = integral.at(d - 1);
        t.set(d, AbelianGroup::free(here.rank + here.two_torsion_count() + below.two_torsion_count()));
    }
    for (const auto& [cell, g] : integral.by_level)
        t.by_level[cell].rank += g.rank + g.two_torsion_count();
    // Tor terms shift torsion of a block up one degree within the same level.
    for (const auto& [cell, g] : integral.by_level) {
        if (g.two_torsion_count() == 0 || cell.degree + 1 > integral.degree_bound)
            continue;
        t.by_level[{cell.degree + 1, cell.level}].rank += g.two_torsion_count();
    }
    for (auto it = t.by_level.begin(); it != t.by_level.end();) {
        if (it->second.is_zero())
            it = t.by_level.erase(it);
        else
            ++it;
    }
    return t;
}

BigradedDimTable to_bigraded(const GradedGroupTable& f2_table)
{
    if (f2_table.coeff != Coefficients::F2)
        throw std::invalid_argument("to_bigraded expects an F2 table");
    BigradedDimTable out;
    out.degree_bound = f2_table.degree_bound;
    for (const auto& [cell, g] : f2_table.by_level)
        out.add(cell.degree, cell.level, g.rank);
    return out;
}

BigradedDimTable homology_dims(int n, int degree_bound)
{
    return to_bigraded(assemble_pn_homology(n, Coefficients::F2, degree_bound));
}

CheckReport table_consistency(int n, const GradedGroupTable& integral, const GradedGroupTable& f2)
{
    CheckReport report{fmt::format("ST RP^{} consistency ({})", n, to_string(integral.coeff)), {}};
    const int top = 2 * n - 1;
    int euler = 0;
    for (int d = 0; d <= top; ++d)
        euler += (d % 2 == 0 ? 1 : -1) * f2.f2_dim(d);
    report.add("Euler characteristic 0", euler == 0, fmt::format("chi = {}", euler));

    bool dual = true;
    std::string mismatch;
    for (int d = 0; d <= top; ++d)
        if (f2.f2_dim(d) != f2.f2_dim(top - d)) {
            dual = false;
            mismatch += fmt::format(" b_{}={} vs b_{}={}", d, f2.f2_dim(d), top - d, f2.f2_dim(top - d));
        }
    report.add("F2 Poincare duality", dual, mismatch);

    GradedGroupTable via_uct = uct_f2(integral);
    std::string uct_detail;
    bool uct_ok = true;
    for (int d = 0; d <= top; ++d)
        if (via_uct.f2_dim(d) != f2.f2_dim(d)) {
            uct_ok = false;
            uct_detail += fmt::format(" degree {}: uct {} vs direct {}", d, via_uct.f2_dim(d), f2.f2_dim(d));
        }
    report.add(fmt::format("UCT({}) = direct F2", to_string(integral.coeff)), uct_ok, uct_detail);
    return report;
}

CheckReport consistency_checks(int n)
{
    if (n < 2)
        throw std::invalid_argument("consistency checks need n >= 2 (ST RP^1 is two circles)");
    GradedGroupTable f2 = st_rpn_homology(n, Coefficients::F2);
    GradedGroupTable trivial = st_rpn_homology(n, Coefficients::ZTrivial);
    CheckReport report = table_consistency(n, trivial, f2);
    report.name = fmt::format("ST RP^{} consistency", n);

    CheckReport twisted = table_consistency(n, st_rpn_homology(n, Coefficients::ZPullbackO), f2);
    report.items.push_back(twisted.items.back());

    AbelianGroup h1 = trivial.at(1);
    AbelianGroup expected = AbelianGroup::cyclic(n == 2 ? 4 : 2);
    report.add(fmt::format("H_1 = {}", expected.str()), h1 == expected, fmt::format("H_1 = {}", h1.str()));
    return report;
}

}  // namespace pathalg
