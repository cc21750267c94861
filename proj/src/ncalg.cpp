#include "pathalg/ncalg.hpp"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

namespace pathalg {

char gen_char(Gen g)
{
    switch (g) {
    case Gen::H: return 'H';
    case Gen::T: return 'T';
    case Gen::S: return 'S';
    case Gen::Y: return 'Y';
    }
    return '?';
}

namespace {

char code(Gen g) { return static_cast<char>(g); }

bool gen_from_char(char c, Gen& out)
{
    switch (c) {
    case 'H': out = Gen::H; return true;
    case 'T': out = Gen::T; return true;
    case 'S': out = Gen::S; return true;
    case 'Y': out = Gen::Y; return true;
    default: return false;
    }
}

}  // namespace

Word::Word(std::initializer_list<Gen> letters)
{
    letters_.reserve(letters.size());
    for (Gen g : letters)
        letters_.push_back(code(g));
}

Word Word::power(Gen g, int exponent)
{
    Word w;
    w.letters_.assign(static_cast<std::size_t>(std::max(exponent, 0)), code(g));
    return w;
}

int Word::count(Gen g) const
{
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), code(g)));
}

Word Word::reversed() const
{
    Word w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    return w;
}

Word Word::substr(std::size_t pos, std::size_t len) const
{
    Word w;
    w.letters_ = letters_.substr(pos, len);
    return w;
}

std::size_t Word::find(const Word& factor, std::size_t from) const
{
    return letters_.find(factor.letters_, from);
}

bool Word::starts_with(const Word& prefix) const
{
    return letters_.size() >= prefix.letters_.size() &&
           letters_.compare(0, prefix.letters_.size(), prefix.letters_) == 0;
}

bool Word::ends_with(const Word& suffix) const
{
    return letters_.size() >= suffix.letters_.size() &&
           letters_.compare(letters_.size() - suffix.letters_.size(), suffix.letters_.size(),
                            suffix.letters_) == 0;
}

Word& Word::operator+=(const Word& other)
{
    letters_ += other.letters_;
    return *this;
}

Word& Word::operator+=(Gen g)
{
    letters_.push_back(code(g));
    return *this;
}

std::string Word::str() const
{
    if (letters_.empty())
        return "1";
    std::string out;
    std::size_t i = 0;
    while (i < letters_.size()) {
        std::size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i])
            ++j;
        out += gen_char(static_cast<Gen>(letters_[i]));
        if (j - i > 1)
            out += fmt::format("^{}", j - i);
        i = j;
    }
    return out;
}

Word parse_word(std::string_view text)
{
    Word w;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_space();
    if (i < text.size() && text[i] == '1' && text.find_first_not_of(" \t", i + 1) == std::string_view::npos)
        return w;
    while (i < text.size()) {
        skip_space();
        if (i >= text.size())
            break;
        Gen g;
        if (!gen_from_char(text[i], g))
            throw AlphabetMismatch(fmt::format("unknown generator '{}' in \"{}\"", text[i], text));
        ++i;
        int exponent = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool braced = i < text.size() && text[i] == '{';
            if (braced)
                ++i;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (start == i)
                throw std::invalid_argument(fmt::format("missing exponent in \"{}\"", text));
            exponent = std::stoi(std::string(text.substr(start, i - start)));
            if (braced) {
                if (i >= text.size() || text[i] != '}')
                    throw std::invalid_argument(fmt::format("unbalanced brace in \"{}\"", text));
                ++i;
            }
        }
        w += Word::power(g, exponent);
    }
    return w;
}

Polynomial::Polynomial(Word w) { terms_.push_back(std::move(w)); }

Polynomial::Polynomial(std::initializer_list<Word> words)
    : Polynomial(from_terms(std::vector<Word>(words)))
{
}

Polynomial Polynomial::from_terms(std::vector<Word> words)
{
    std::sort(words.begin(), words.end());
    Polynomial p;
    for (std::size_t i = 0; i < words.size();) {
        std::size_t j = i;
        while (j < words.size() && words[j] == words[i])
            ++j;
        if ((j - i) % 2 == 1)
            p.terms_.push_back(words[i]);
        i = j;
    }
    return p;
}

bool Polynomial::contains(const Word& w) const
{
    return std::binary_search(terms_.begin(), terms_.end(), w);
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    std::vector<Word> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator+=(const Word& w)
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w);
    if (it != terms_.end() && *it == w)
        terms_.erase(it);
    else
        terms_.insert(it, w);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    std::vector<Word> words;
    words.reserve(a.terms_.size() * b.terms_.size());
    for (const Word& u : a.terms_)
        for (const Word& v : b.terms_)
            words.push_back(u + v);
    return Polynomial::from_terms(std::move(words));
}

Polynomial operator*(const Word& u, const Polynomial& p) { return Polynomial(u) * p; }
Polynomial operator*(const Polynomial& p, const Word& v) { return p * Polynomial(v); }

std::string Polynomial::str() const
{
    if (terms_.empty())
        return "0";
    // Longer words first reads closer to the usual notation.
    std::vector<Word> sorted = terms_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Word& a, const Word& b) { return a.size() > b.size(); });
    std::string out;
    for (const Word& w : sorted) {
        if (!out.empty())
            out += " + ";
        out += w.str();
    }
    return out;
}

Polynomial parse_polynomial(std::string_view text)
{
    std::vector<Word> words;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t plus = text.find('+', start);
        std::string_view piece = text.substr(start, plus == std::string_view::npos ? text.npos : plus - start);
        auto first = piece.find_first_not_of(" \t");
        if (first == std::string_view::npos)
            throw std::invalid_argument(fmt::format("empty term in \"{}\"", text));
        piece = piece.substr(first, piece.find_last_not_of(" \t") - first + 1);
        if (piece != "0")
            words.push_back(parse_word(piece));
        if (plus == std::string_view::npos)
            break;
        start = plus + 1;
    }
    return Polynomial::from_terms(std::move(words));
}

Polynomial reverse(const Polynomial& p)
{
    std::vector<Word> words;
    words.reserve(p.size());
    for (const Word& w : p.terms())
        words.push_back(w.reversed());
    return Polynomial::from_terms(std::move(words));
}

ParityClass parity_class_of(int n)
{
    if (n % 2 == 0)
        return ParityClass::Even;
    return n % 4 == 1 ? ParityClass::Odd1 : ParityClass::Odd3;
}

std::string to_string(ParityClass c)
{
    switch (c) {
    case ParityClass::Odd1: return "odd1";
    case ParityClass::Odd3: return "odd3";
    case ParityClass::Even: return "even";
    }
    return "?";
}

AlgebraSignature::AlgebraSignature(int n)
    : n_(n)
{
    if (n < 1)
        throw std::invalid_argument(fmt::format("ambient dimension must be positive, got {}", n));
    parity_ = parity_class_of(n);
    if (parity_ == ParityClass::Even)
        alphabet_ = {Gen::H, Gen::T, Gen::Y};
    else
        alphabet_ = {Gen::H, Gen::S, Gen::Y};
}

bool AlgebraSignature::in_alphabet(Gen g) const
{
    return std::find(alphabet_.begin(), alphabet_.end(), g) != alphabet_.end();
}

int AlgebraSignature::degree(Gen g) const
{
    switch (g) {
    case Gen::H: return -1;
    case Gen::T: return 0;
    case Gen::S: return 1;
    case Gen::Y: return n_;
    }
    return 0;
}

int AlgebraSignature::level(Gen g) const { return g == Gen::H ? 0 : 1; }

std::vector<Relation> AlgebraSignature::relations() const
{
    const Word h{Gen::H};
    const Word y{Gen::Y};
    const Word hn1 = Word::power(Gen::H, n_ + 1);
    std::vector<Relation> out;
    if (parity_ == ParityClass::Even) {
        const Word t{Gen::T};
        out.push_back({"[H,T]=H", Word{Gen::T, Gen::H}, Polynomial{Word{Gen::H, Gen::T}, h}});
        out.push_back({"[H,Y]=0", Word{Gen::Y, Gen::H}, Polynomial{Word{Gen::H, Gen::Y}}});
        out.push_back({"[T,Y]=Y", Word{Gen::Y, Gen::T}, Polynomial{Word{Gen::T, Gen::Y}, y}});
        out.push_back({"T^2=T", Word{Gen::T, Gen::T}, Polynomial{t}});
    } else {
        out.push_back({"[H,S]=1", Word{Gen::S, Gen::H}, Polynomial{Word{Gen::H, Gen::S}, Word{}}});
        out.push_back({"[H,Y]=0", Word{Gen::Y, Gen::H}, Polynomial{Word{Gen::H, Gen::Y}}});
        if (parity_ == ParityClass::Odd1) {
            Word correction = Word::power(Gen::H, n_ - 1) + Word{Gen::Y, Gen::Y};
            out.push_back({fmt::format("[S,Y]={}", correction.str()), Word{Gen::Y, Gen::S},
                           Polynomial{Word{Gen::S, Gen::Y}, correction}});
        } else {
            out.push_back({"[S,Y]=0", Word{Gen::Y, Gen::S}, Polynomial{Word{Gen::S, Gen::Y}}});
        }
        out.push_back({"S^2=0", Word{Gen::S, Gen::S}, Polynomial{}});
    }
    out.push_back({fmt::format("H^{}=0", n_ + 1), hn1, Polynomial{}});
    return out;
}

void check_alphabet(const Word& w, const AlgebraSignature& sig)
{
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!sig.in_alphabet(w[i]))
            throw AlphabetMismatch(fmt::format("generator {} is not in the alphabet for n={} ({})",
                                               gen_char(w[i]), sig.n(), to_string(sig.parity())));
}

void check_alphabet(const Polynomial& p, const AlgebraSignature& sig)
{
    for (const Word& w : p.terms())
        check_alphabet(w, sig);
}

int word_degree(const Word& w, const AlgebraSignature& sig)
{
    check_alphabet(w, sig);
    int d = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        d += sig.degree(w[i]);
    return d;
}

int word_level(const Word& w) { return static_cast<int>(w.size()) - w.count(Gen::H); }

bool is_homogeneous(const Polynomial& p, const AlgebraSignature& sig)
{
    if (p.is_zero())
        return true;
    int d = word_degree(p.terms().front(), sig);
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [&](const Word& w) { return word_degree(w, sig) == d; });
}

}  // namespace pathalg
