#include <doctest.h>

#include <algorithm>
#include <random>

#include "pathalg/homology.hpp"
#include "pathalg/rewrite.hpp"

using namespace pathalg;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }
Word W(const char* text) { return parse_word(text); }

bool has_rule(const std::vector<RewriteRule>& rules, const char* lhs, const char* rhs)
{
    return std::any_of(rules.begin(), rules.end(),
                       [&](const RewriteRule& r) { return r.lhs == W(lhs) && r.rhs == P(rhs); });
}

// Words heavier than `max_weight` are dropped so products stay inside the completion bound.
Polynomial random_poly(std::mt19937_64& rng, const RewriteSystem& rs, int max_len, int max_weight)
{
    const AlgebraSignature& sig = rs.signature();
    std::uniform_int_distribution<int> len(0, max_len), count(1, 5);
    std::uniform_int_distribution<std::size_t> pick(0, sig.alphabet().size() - 1);
    std::vector<Word> words;
    for (int i = count(rng); i > 0; --i) {
        Word w;
        for (int j = len(rng); j > 0; --j)
            w += sig.alphabet()[pick(rng)];
        if (rs.order().weight(w) <= max_weight)
            words.push_back(w);
    }
    return Polynomial::from_terms(words);
}

}  // namespace

TEST_CASE("orientation under the default order")
{
    auto r3 = orient(AlgebraSignature(3));
    REQUIRE(r3.rule_for(W("YS")));
    CHECK(r3.rule_for(W("YS"))->rhs == P("SY"));
    CHECK(r3.rule_for(W("SH"))->rhs == P("HS + 1"));
    CHECK(r3.rule_for(W("SS"))->rhs.is_zero());
    CHECK(r3.rule_for(W("H^4"))->rhs.is_zero());

    auto r5 = orient(AlgebraSignature(5));
    REQUIRE(r5.rule_for(W("YS")));
    CHECK(r5.rule_for(W("YS"))->rhs == P("SY + H^4Y^2"));

    auto r2 = orient(AlgebraSignature(2));
    CHECK(r2.rule_for(W("T^2"))->rhs == P("T"));
    CHECK(r2.rule_for(W("TH"))->rhs == P("HT + H"));
    CHECK(r2.rule_for(W("YT"))->rhs == P("TY + Y"));
    CHECK(!r2.complete());
}

TEST_CASE("an order that cannot orient a relation is rejected")
{
    // YS and H^4Y^2 under unit weights: the long word wins and YS cannot be the head.
    CHECK_THROWS_AS(orient(AlgebraSignature(5), MonomialOrder({1, 1, 1, 1})), OrderRejected);
    CHECK_THROWS_AS(MonomialOrder({1, 0, 1, 1}), OrderRejected);
}

TEST_CASE("monomial order basics")
{
    auto ord = MonomialOrder::default_for(AlgebraSignature(5));
    CHECK(ord.weight(Gen::S) == 6);
    CHECK(ord.less(W("SY"), W("YS")));
    CHECK(ord.less(W("H^4Y^2"), W("YS")));
    CHECK(ord.less(W("HS"), W("SH")));
    CHECK(ord.max_word(P("HS + SH + 1")) == W("SH"));
    auto unit = MonomialOrder::default_for(AlgebraSignature(3));
    CHECK(unit.weight(Gen::S) == 1);
    CHECK(unit.less(W("Y"), W("HH")));
}

TEST_CASE("normal forms in the odd presentation")
{
    auto rs = standard_system(3, 12);
    CHECK(normal_form(P("SH"), rs) == P("HS + 1"));
    CHECK(normal_form(P("SS"), rs).is_zero());
    CHECK(normal_form(P("SH^4"), rs).is_zero());
    CHECK(normal_form(P("H^4"), rs).is_zero());
    CHECK(normal_form(P("YS"), rs) == P("SY"));
    CHECK(normal_form(P("YH^2"), rs) == P("H^2Y"));
    // S H^m = H^m S + m H^{m-1}
    for (int m = 1; m <= 3; ++m) {
        Polynomial expect(Word::power(Gen::H, m) + W("S"));
        if (m % 2 == 1)
            expect += Word::power(Gen::H, m - 1);
        CHECK(normal_form(Polynomial(W("S") + Word::power(Gen::H, m)), rs) == expect);
    }
}

TEST_CASE("derived relations")
{
    auto r1 = standard_system(1, 12);
    CHECK(normal_form(P("SS + SY + YS + YY"), r1).is_zero());  // (S+Y)^2
    CHECK(normal_form(P("HS + SH"), r1) == Polynomial::one());

    auto r2 = standard_system(2, 12);
    CHECK(normal_form(P("THT"), r2).is_zero());
    CHECK(normal_form(P("H + HT + TH + THT"), r2).is_zero());  // (1+T)H(1+T)
}

TEST_CASE("completion")
{
    for (int n : {1, 2, 3}) {
        AlgebraSignature sig(n);
        auto oriented = orient(sig);
        auto done = complete(oriented, standard_weight_bound(sig, 20));
        INFO("n=" << n);
        CHECK(done.complete());
        CHECK(done.rules().size() == oriented.rules().size());
        for (const auto& cp : critical_pairs(done, done.weight_bound()))
            CHECK(normal_form(cp.s_polynomial, done).is_zero());
    }
    for (int n : {5, 7}) {
        auto rs = standard_system(n, 20);
        for (const auto& cp : critical_pairs(rs, rs.weight_bound()))
            CHECK(normal_form(cp.s_polynomial, rs).is_zero());
    }
}

TEST_CASE("truncated completion refuses heavier rules")
{
    CHECK_THROWS_AS(complete(orient(AlgebraSignature(3)), 2), TruncationError);
}

TEST_CASE("normal form is idempotent and reduced")
{
    std::mt19937_64 rng(3);
    for (int n : {1, 2, 3, 5}) {
        auto rs = standard_system(n, 16);
        const int cap = rs.weight_bound() / 2;
        for (int t = 0; t < 300; ++t) {
            Polynomial p = random_poly(rng, rs, 7, cap);
            ReductionStats stats;
            Polynomial nf = normal_form(p, rs, &stats);
            CHECK(stats.steps < kMaxReductionSteps);
            CHECK(normal_form(nf, rs) == nf);
            for (const Word& w : nf.terms())
                CHECK(!rs.reducible(w));
            // p - nf lies in the ideal: equal normal forms after adding any product.
            Polynomial q = random_poly(rng, rs, 3, cap);
            CHECK(normal_form(p * q, rs) == normal_form(nf * q, rs));
            CHECK(normal_form(q * p, rs) == normal_form(q * nf, rs));
        }
    }
}

TEST_CASE("Hilbert function requires a sufficient bound")
{
    auto rs = standard_system(3, 10);
    CHECK_NOTHROW(hilbert(rs, 10));
    CHECK_THROWS_AS(hilbert(rs, 40), InsufficientBound);
    CHECK_THROWS_AS(hilbert(orient(AlgebraSignature(3)), 4), InsufficientBound);
    CHECK(required_weight_bound(AlgebraSignature(3), 40) == 4 + 4 + 15);
    CHECK(standard_weight_bound(AlgebraSignature(3), 40) == required_weight_bound(AlgebraSignature(3), 40) + 4);
}

TEST_CASE("Hilbert function: small cases")
{
    auto h3 = hilbert(standard_system(3, 10), 10);
    // RP^3 at level 0, then H^aSY^0 and H^aY at level 1.
    for (int d = 0; d <= 3; ++d)
        CHECK(h3.at(d, 0) == 1);
    CHECK(h3.at(4, 0) == 0);
    CHECK(h3.at(1, 1) == 1);  // H^3S
    CHECK(h3.at(4, 1) == 2);  // S, H^2Y
    CHECK(h3.at(6, 1) == 1);  // Y
    CHECK(h3.at(7, 2) == 2);  // SY, H^2Y^2 (unshifted 3 + 4, 3 + 4)
    CHECK(h3.at(4, 2) == 1);  // H^3SY
    CHECK(h3.total(4) == 3);

    auto h1 = hilbert(standard_system(1, 8), 8);
    CHECK(h1.at(0, 0) == 1);
    CHECK(h1.at(1, 0) == 1);
    for (int k = 1; k <= 6; ++k) {
        CHECK(h1.at(k, k) == 2);
        CHECK(h1.at(k + 1, k) == 2);
    }
}

TEST_CASE("Hilbert DP agrees with basis enumeration")
{
    for (int n : {1, 2, 3, 4, 5}) {
        auto rs = standard_system(n, 18);
        auto h = hilbert(rs, 18);
        auto basis = irreducible_basis(rs, 18);
        std::int64_t total = 0;
        for (const auto& [cell, words] : basis) {
            CHECK(h.at(cell.degree, cell.level) == static_cast<std::int64_t>(words.size()));
            total += static_cast<std::int64_t>(words.size());
            for (const Word& w : words) {
                CHECK(!rs.reducible(w));
                CHECK(unshifted_degree(w, rs.signature()) == cell.degree);
                CHECK(word_level(w) == cell.level);
            }
            for (std::size_t i = 1; i < words.size(); ++i)
                CHECK(rs.order().less(words[i], words[i - 1]));
        }
        std::int64_t sum = 0;
        for (const auto& [cell, dim] : h.entries)
            sum += dim;
        CHECK(sum == total);
    }
}

TEST_CASE("odd n: algebra matches homology")
{
    for (int n : {1, 3, 5, 7}) {
        INFO("n=" << n);
        auto rep = compare(hilbert(standard_system(n, 40), 40), homology_dims(n, 40));
        CHECK(rep.empty());
    }
}

TEST_CASE("even n: discrepancy at degrees 0 and n")
{
    for (int n : {2, 4}) {
        INFO("n=" << n);
        auto rs = standard_system(n, 40);
        auto rep = compare(hilbert(rs, 40), homology_dims(n, 40));
        annotate_surplus(rep, rs);
        REQUIRE(!rep.totals.empty());
        CHECK(rep.totals[0].degree == 0);
        CHECK(rep.totals[0].algebra == rep.totals[0].homology + 1);
        REQUIRE(rep.totals.size() >= 2);
        CHECK(rep.totals[1].degree == n);

        auto surplus_at = [&](int degree) {
            std::vector<Word> out;
            for (const auto& c : rep.cells)
                if (c.cell.degree == degree)
                    out.insert(out.end(), c.surplus.begin(), c.surplus.end());
            return out;
        };
        CHECK(surplus_at(0) == std::vector<Word>{Word::power(Gen::H, n) + W("T")});
        // H^nTY rides along one level up; H^nY is the new one.
        auto at_n = surplus_at(n);
        CHECK(std::count(at_n.begin(), at_n.end(), Word::power(Gen::H, n) + W("Y")) == 1);
    }
}

TEST_CASE("even n: repair search")
{
    for (int n : {2, 4}) {
        INFO("n=" << n);
        AlgebraSignature sig(n);
        auto homology = homology_dims(n, 40);
        auto result = repair_search(sig, homology, 40);
        REQUIRE(!result.survivors.empty());
        CHECK(!result.unrepairable_degree);
        std::string hnt = "H^" + std::to_string(n) + "T", hny = "H^" + std::to_string(n) + "Y";
        bool found = false;
        for (const auto& aug : result.survivors) {
            CHECK(aug.completed.complete());
            CHECK(filtration_check(aug.completed).passed());
            CHECK(compare(hilbert(aug.completed, 40), homology).empty());
            auto eff = aug.effective();
            if (has_rule(eff, hnt.c_str(), "0") && has_rule(eff, hny.c_str(), "0"))
                found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("fixed augmentations")
{
    AlgebraSignature sig(2);
    auto homology = homology_dims(2, 40);
    auto kill_t = evaluate_augmentation(sig, homology, 40, {{W("H^2T"), {}, "augmentation"}});
    CHECK(kill_t.survives);
    REQUIRE(kill_t.augmentation);
    CHECK(has_rule(kill_t.augmentation->derived, "H^2Y", "0"));

    auto idem = evaluate_augmentation(sig, homology, 40, {{W("H^2T"), P("H^2"), "augmentation"}});
    CHECK(idem.survives);

    auto only_y = evaluate_augmentation(sig, homology, 40, {{W("H^2Y"), {}, "augmentation"}});
    CHECK(!only_y.survives);
    CHECK(!only_y.reason.empty());

    // Killing H^2 itself collapses RP^2's top class: a deficit.
    auto deficit = evaluate_augmentation(sig, homology, 40, {{W("H^2"), {}, "augmentation"}});
    CHECK(!deficit.survives);

    CHECK_THROWS_AS(evaluate_augmentation(sig, homology, 40, {{W("H"), P("T"), "augmentation"}}), OrderRejected);
}

TEST_CASE("filtration, anti-automorphism and heredity")
{
    for (int n = 1; n <= 7; ++n) {
        INFO("n=" << n);
        auto rs = standard_system(n, 20);
        CHECK(filtration_check(rs).passed());
        CHECK(anti_automorphism_check(rs.signature(), rs).passed());
    }
    for (int n = 1; n <= 5; ++n) {
        INFO("n=" << n);
        CHECK(heredity_check(n).passed());
    }
    CHECK_THROWS_AS(heredity_check(standard_system(2, 10), standard_system(4, 10)), std::invalid_argument);
}

TEST_CASE("transported identities in the odd systems")
{
    for (int n : {3, 5}) {
        auto rs = standard_system(n, 20);
        CHECK(normal_form(P("H^2SYH + H^3SY + H^2Y"), rs).is_zero());
        CHECK(normal_form(P("HYH^2S + H^3SY"), rs).is_zero());
    }
}
