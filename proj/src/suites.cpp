#include <fmt/format.h>

#include "pathalg/rewrite.hpp"

namespace pathalg {

RewriteSystem standard_system(int n, int degree_bound)
{
    AlgebraSignature sig(n);
    return complete(orient(sig), standard_weight_bound(sig, degree_bound));
}

CheckReport filtration_check(const RewriteSystem& rs)
{
    CheckReport report{fmt::format("filtration n={}", rs.signature().n()), {}};
    for (const RewriteRule& rule : rs.rules()) {
        int lhs_level = word_level(rule.lhs);
        std::string worst;
        for (const Word& w : rule.rhs.terms())
            if (word_level(w) > lhs_level)
                worst += fmt::format(" {}(level {})", w.str(), word_level(w));
        report.add(rule.str(), worst.empty(),
                   worst.empty() ? fmt::format("lhs level {}", lhs_level)
                                 : fmt::format("lhs level {}, higher rhs terms:{}", lhs_level, worst));
    }
    return report;
}

CheckReport anti_automorphism_check(const AlgebraSignature& sig, const RewriteSystem& rs)
{
    CheckReport report{fmt::format("anti-automorphism n={}", sig.n()), {}};
    for (const Relation& rel : sig.relations()) {
        Polynomial reversed = reverse(rel.polynomial());
        Polynomial nf = normal_form(reversed, rs);
        report.add(rel.name, nf.is_zero(), fmt::format("reverse = {} -> {}", reversed.str(), nf.str()));
    }
    return report;
}

namespace {

void expect_identity(CheckReport& report, const RewriteSystem& rs, const std::string& label, const Polynomial& lhs,
                     const Polynomial& rhs)
{
    Polynomial nf_lhs = normal_form(lhs, rs);
    Polynomial nf_rhs = normal_form(rhs, rs);
    report.add(label, nf_lhs == nf_rhs, fmt::format("{} -> {}; {} -> {}", lhs.str(), nf_lhs.str(), rhs.str(), nf_rhs.str()));
}

// S -> T letterwise, the unit to H.
Polynomial transport_odd_to_even(const Polynomial& p)
{
    std::vector<Word> words;
    for (const Word& w : p.terms()) {
        if (w.empty()) {
            words.push_back(Word{Gen::H});
            continue;
        }
        Word out;
        for (std::size_t i = 0; i < w.size(); ++i)
            out += w[i] == Gen::S ? Gen::T : w[i];
        words.push_back(out);
    }
    return Polynomial::from_terms(std::move(words));
}

}  // namespace

CheckReport heredity_check(const RewriteSystem& source, const RewriteSystem& target)
{
    const int n = source.signature().n();
    if (target.signature().n() != n + 1)
        throw std::invalid_argument(
            fmt::format("heredity needs presentations for n={} and n={}, got n={}", n, n + 1, target.signature().n()));
    if (!source.complete() || !target.complete())
        throw std::invalid_argument("heredity check needs completed presentations");

    CheckReport report{fmt::format("heredity {} -> {}", n, n + 1), {}};
    const auto w = parse_word;
    if (n % 2 == 0) {
        // Images f(T) = H^2 S, f(Y) = H^2 Y, f(TY) = H^2 S Y H, f(YT) = H Y H^2 S.
        expect_identity(report, target, "f(TY) = H^2SYH = H^3SY + H^2Y", Polynomial(w("H^2SYH")),
                        Polynomial{w("H^3SY"), w("H^2Y")});
        expect_identity(report, target, "f(YT) = HYH^2S = H^3SY", Polynomial(w("HYH^2S")), Polynomial(w("H^3SY")));
        expect_identity(report, target, "f(Y) = HYH = H^2Y", Polynomial(w("HYH")), Polynomial(w("H^2Y")));
        // TY + YT + Y = 0 in the source maps to a vanishing combination.
        Polynomial image{w("H^2SYH"), w("HYH^2S"), w("H^2Y")};
        expect_identity(report, target, "f(TY + YT + Y) = 0", image, Polynomial{});
        report.add("source relation TY + YT + Y = 0",
                   normal_form(Polynomial{w("TY"), w("YT"), w("Y")}, source).is_zero());
    } else {
        Polynomial relation{w("SH"), w("HS"), Word{}};
        report.add("source relation SH + HS + 1 = 0", normal_form(relation, source).is_zero());
        Polynomial image = transport_odd_to_even(relation);
        Polynomial nf = normal_form(image, target);
        report.add("f(SH + HS + U) = TH + HT + H = 0", nf.is_zero(), fmt::format("{} -> {}", image.str(), nf.str()));
    }
    return report;
}

CheckReport heredity_check(int n)
{
    if (n < 1)
        throw std::invalid_argument(fmt::format("no presentation for n={}", n));
    constexpr int kDegreeBound = 12;
    return heredity_check(standard_system(n, kDegreeBound), standard_system(n + 1, kDegreeBound));
}

}  // namespace pathalg
