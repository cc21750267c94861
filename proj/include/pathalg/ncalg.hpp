#pragma once

// Graded noncommutative polynomials over F2 in the generators H, T, S, Y.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pathalg {

// Declaration order is the tie-break order of the monomial order: H < T < S < Y.
enum class Gen : std::uint8_t { H = 0, T = 1, S = 2, Y = 3 };

inline constexpr std::array<Gen, 4> kAllGens = {Gen::H, Gen::T, Gen::S, Gen::Y};

char gen_char(Gen g);

enum class ParityClass { Odd1, Odd3, Even };

class AlphabetMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A word is a finite sequence of generators. Letters are stored as their
// numeric codes so that std::string comparison and hashing are canonical.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Gen> letters);
    static Word power(Gen g, int exponent);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Gen operator[](std::size_t i) const { return static_cast<Gen>(letters_[i]); }
    int count(Gen g) const;

    Word reversed() const;
    Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
    // Position of the leftmost occurrence of `factor`, or npos.
    std::size_t find(const Word& factor, std::size_t from = 0) const;
    bool starts_with(const Word& prefix) const;
    bool ends_with(const Word& suffix) const;

    Word& operator+=(const Word& other);
    Word& operator+=(Gen g);
    friend Word operator+(Word a, const Word& b) { return a += b; }

    // Condensed notation: "H^2SY", "1" for the empty word.
    std::string str() const;
    const std::string& codes() const { return letters_; }

    friend bool operator==(const Word&, const Word&) = default;
    // Canonical storage order (lexicographic on codes); not the monomial order.
    friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

private:
    std::string letters_;
};

// Parses "H^2SY", "SY^3", "1". Letters outside {H,T,S,Y} throw AlphabetMismatch.
Word parse_word(std::string_view text);

struct WordHash {
    std::size_t operator()(const Word& w) const { return std::hash<std::string>{}(w.codes()); }
};

// F2 polynomial: a set of words, kept sorted in canonical order.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Word w);
    Polynomial(std::initializer_list<Word> words);
    static Polynomial one() { return Polynomial(Word{}); }
    static Polynomial from_terms(std::vector<Word> words);  // repeated words cancel in pairs

    const std::vector<Word>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool contains(const Word& w) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator+=(const Word& w);  // toggles w
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Word& u, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Word& v);

    std::string str() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Word> terms_;
};

Polynomial parse_polynomial(std::string_view text);  // "HS + SH + 1", "0"

// Anti-automorphism fixing the generators.
Polynomial reverse(const Polynomial& p);

// One of the defining relations, written as relation = 0 over F2. `head` is
// the word that an admissible order must make the unique maximum.
struct Relation {
    std::string name;
    Word head;
    Polynomial tail;
    Polynomial polynomial() const { return tail + Polynomial(head); }
};

class AlgebraSignature {
public:
    explicit AlgebraSignature(int n);

    int n() const { return n_; }
    ParityClass parity() const { return parity_; }
    const std::vector<Gen>& alphabet() const { return alphabet_; }
    bool in_alphabet(Gen g) const;
    // H-degree (homology shifted down by n): H -> -1, S -> 1, T -> 0, Y -> n.
    int degree(Gen g) const;
    // Number of pi/2 units of critical value: H -> 0, S, T, Y -> 1.
    int level(Gen g) const;

    std::vector<Relation> relations() const;

    friend bool operator==(const AlgebraSignature& a, const AlgebraSignature& b) { return a.n_ == b.n_; }

private:
    int n_;
    ParityClass parity_;
    std::vector<Gen> alphabet_;
};

ParityClass parity_class_of(int n);
std::string to_string(ParityClass c);

void check_alphabet(const Word& w, const AlgebraSignature& sig);
void check_alphabet(const Polynomial& p, const AlgebraSignature& sig);

int word_degree(const Word& w, const AlgebraSignature& sig);
inline int unshifted_degree(const Word& w, const AlgebraSignature& sig) { return word_degree(w, sig) + sig.n(); }
int word_level(const Word& w);

// True when all words of p share one H-degree (the zero polynomial counts as homogeneous).
bool is_homogeneous(const Polynomial& p, const AlgebraSignature& sig);

}  // namespace pathalg
