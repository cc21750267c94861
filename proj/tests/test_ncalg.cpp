#include <doctest.h>

#include <random>

#include "pathalg/ncalg.hpp"

using namespace pathalg;

namespace {

Polynomial random_poly(std::mt19937_64& rng, const AlgebraSignature& sig)
{
    std::uniform_int_distribution<int> len(0, 4), count(0, 4);
    std::uniform_int_distribution<std::size_t> pick(0, sig.alphabet().size() - 1);
    std::vector<Word> words;
    for (int i = count(rng); i > 0; --i) {
        Word w;
        for (int j = len(rng); j > 0; --j)
            w += sig.alphabet()[pick(rng)];
        words.push_back(w);
    }
    return Polynomial::from_terms(words);
}

}  // namespace

TEST_CASE("signature: parity classes and alphabets")
{
    CHECK(AlgebraSignature(1).parity() == ParityClass::Odd1);
    CHECK(AlgebraSignature(5).parity() == ParityClass::Odd1);
    CHECK(AlgebraSignature(3).parity() == ParityClass::Odd3);
    CHECK(AlgebraSignature(7).parity() == ParityClass::Odd3);
    CHECK(AlgebraSignature(2).parity() == ParityClass::Even);
    CHECK(AlgebraSignature(3).alphabet() == std::vector<Gen>{Gen::H, Gen::S, Gen::Y});
    CHECK(AlgebraSignature(4).alphabet() == std::vector<Gen>{Gen::H, Gen::T, Gen::Y});
    CHECK_THROWS_AS(AlgebraSignature(0), std::invalid_argument);
}

TEST_CASE("word degree and level")
{
    AlgebraSignature s3(3);
    CHECK(word_degree(Word{}, s3) == 0);
    CHECK(word_degree(parse_word("SY"), s3) == 4);
    CHECK(unshifted_degree(parse_word("SY"), s3) == 7);
    CHECK(word_degree(parse_word("H^2Y"), s3) == 1);
    CHECK(unshifted_degree(parse_word("H^2Y"), s3) == 4);
    CHECK(word_level(parse_word("H^3")) == 0);
    CHECK(word_level(parse_word("SY")) == 2);
    CHECK(word_level(Word{}) == 0);
    CHECK_THROWS_AS(word_degree(parse_word("T"), s3), AlphabetMismatch);
    CHECK_THROWS_AS(word_degree(parse_word("S"), AlgebraSignature(2)), AlphabetMismatch);
    CHECK_THROWS_AS(parse_word("HX"), AlphabetMismatch);
}

TEST_CASE("word notation round trips")
{
    for (const char* text : {"H^2SY", "1", "HTY^3", "Y", "SHSH", "H^12T"})
        CHECK(parse_word(text).str() == text);
    CHECK(parse_word("H^{3}S") == parse_word("HHHS"));
}

TEST_CASE("polynomial product in the free algebra")
{
    Polynomial hs = parse_polynomial("H + S");
    CHECK(hs * hs == parse_polynomial("HH + HS + SH + SS"));
    CHECK(hs * Polynomial::one() == hs);
    CHECK(Polynomial::one() * hs == hs);
    CHECK(Polynomial(parse_word("S")) * Polynomial(parse_word("S")) == Polynomial(parse_word("S^2")));
    CHECK((hs + hs).is_zero());
    CHECK(parse_polynomial("0").is_zero());
}

TEST_CASE("reverse is an involutive anti-automorphism")
{
    CHECK(reverse(Polynomial(parse_word("HS"))) == Polynomial(parse_word("SH")));
    CHECK(reverse(Polynomial(parse_word("H^2T"))) == Polynomial(parse_word("TH^2")));
    std::mt19937_64 rng(11);
    for (int n : {1, 2, 3}) {
        AlgebraSignature sig(n);
        for (int t = 0; t < 200; ++t) {
            Polynomial p = random_poly(rng, sig), q = random_poly(rng, sig), r = random_poly(rng, sig);
            CHECK(reverse(reverse(p)) == p);
            CHECK(reverse(p * q) == reverse(q) * reverse(p));
            CHECK((p * q) * r == p * (q * r));
            CHECK(p * (q + r) == p * q + p * r);
        }
    }
}

TEST_CASE("defining relations are homogeneous")
{
    for (int n = 1; n <= 9; ++n) {
        AlgebraSignature sig(n);
        for (const auto& rel : sig.relations()) {
            INFO("n=" << n << " " << rel.name);
            CHECK(is_homogeneous(rel.polynomial(), sig));
        }
    }
}

TEST_CASE("relation list per parity class")
{
    auto names = [](int n) {
        std::vector<std::string> out;
        for (const auto& r : AlgebraSignature(n).relations())
            out.push_back(r.polynomial().str());
        return out;
    };
    auto has = [&](int n, const char* poly) {
        auto v = names(n);
        return std::find(v.begin(), v.end(), parse_polynomial(poly).str()) != v.end();
    };
    CHECK(has(3, "SY + YS"));
    CHECK(has(5, "SY + YS + H^4Y^2"));
    CHECK(has(1, "SY + YS + Y^2"));
    CHECK(has(2, "T^2 + T"));
    CHECK(has(2, "TY + YT + Y"));
    CHECK(has(4, "HT + TH + H"));
    CHECK(has(3, "H^4"));
}
