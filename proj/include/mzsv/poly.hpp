#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "mzsv/rational.hpp"

namespace mzsv {

// A word is a finite sequence of letters. The empty word is the unit.
template <class L>
using Word = std::vector<L>;

// Canonical term order: shorter words first, then lexicographic.
template <class L>
struct WordOrder {
    bool operator()(const Word<L>& u, const Word<L>& v) const
    {
        if (u.size() != v.size()) {
            return u.size() < v.size();
        }
        return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
    }
};

// Alphabets whose letters can be merged. The structure maps star and d
// need nothing else from the letter type.
template <class L>
concept AdditiveLetter = std::totally_ordered<L> && requires(const L& a, const L& b) {
    { a + b } -> std::convertible_to<L>;
};

// Finite Q-linear combination of words. Zero coefficients are never
// stored, so two polys are equal iff their term maps are equal.
template <class L>
class Poly {
public:
    using letter_type = L;
    using word_type = Word<L>;
    using map_type = std::map<word_type, Rational, WordOrder<L>>;
    using const_iterator = typename map_type::const_iterator;

    Poly() = default;
    explicit Poly(word_type w, const Rational& c = Rational(1))
    {
        if (!c.is_zero()) {
            terms_.emplace(std::move(w), c);
        }
    }

    static Poly unit() { return Poly(word_type{}); }
    static Poly letter(const L& l) { return Poly(word_type{l}); }

    const map_type& terms() const { return terms_; }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const word_type& w) const
    {
        const auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const word_type& w, const Rational& c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    void add_term(word_type&& w, const Rational& c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    // Adds c * p.
    void add_scaled(const Poly& p, const Rational& c)
    {
        if (c.is_zero()) {
            return;
        }
        for (const auto& [w, k] : p.terms_) {
            add_term(w, k * c);
        }
    }

    Poly& operator+=(const Poly& o)
    {
        add_scaled(o, Rational(1));
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        add_scaled(o, Rational(-1));
        return *this;
    }
    Poly& operator*=(const Rational& c)
    {
        if (c.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [w, k] : terms_) {
                k *= c;
            }
        }
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    // Keeps only terms satisfying pred(word).
    template <class Pred>
    Poly filtered(Pred&& pred) const
    {
        Poly r;
        for (const auto& [w, k] : terms_) {
            if (pred(w)) {
                r.terms_.emplace_hint(r.terms_.end(), w, k);
            }
        }
        return r;
    }

private:
    map_type terms_;
};

template <class L>
Word<L> concat(const Word<L>& u, const Word<L>& v)
{
    Word<L> r;
    r.reserve(u.size() + v.size());
    r.insert(r.end(), u.begin(), u.end());
    r.insert(r.end(), v.begin(), v.end());
    return r;
}

template <class L>
Word<L> power(const Word<L>& w, std::size_t k)
{
    Word<L> r;
    r.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
        r.insert(r.end(), w.begin(), w.end());
    }
    return r;
}

// Concatenation product, the algebra multiplication of Q<alphabet>.
template <class L>
Poly<L> concat(const Poly<L>& p, const Poly<L>& q)
{
    Poly<L> r;
    for (const auto& [u, a] : p) {
        for (const auto& [v, b] : q) {
            r.add_term(concat(u, v), a * b);
        }
    }
    return r;
}

// l * p, i.e. the letter l prepended to every word of p.
template <class L>
Poly<L> prepend(const L& l, const Poly<L>& p)
{
    Poly<L> r;
    for (const auto& [w, k] : p) {
        Word<L> nw;
        nw.reserve(w.size() + 1);
        nw.push_back(l);
        nw.insert(nw.end(), w.begin(), w.end());
        r.add_term(std::move(nw), k);
    }
    return r;
}

template <class L, class F>
auto map_letters(const Poly<L>& p, F&& f) -> Poly<std::invoke_result_t<F&, const L&>>
{
    using M = std::invoke_result_t<F&, const L&>;
    Poly<M> r;
    for (const auto& [w, k] : p) {
        Word<M> nw;
        nw.reserve(w.size());
        for (const auto& l : w) {
            nw.push_back(f(l));
        }
        r.add_term(std::move(nw), k);
    }
    return r;
}

namespace detail {

// Table of products of suffixes u[i:] and v[j:], filled from the back.
// merge == true gives the harmonic product, merge == false gives sha.
template <class L>
Poly<L> merge_product(std::span<const L> u, std::span<const L> v, bool merge)
{
    const std::size_t m = u.size();
    const std::size_t n = v.size();
    std::vector<Poly<L>> table((m + 1) * (n + 1));
    auto at = [n1 = n + 1, &table](std::size_t i, std::size_t j) -> Poly<L>& { return table[i * n1 + j]; };

    for (std::size_t i = 0; i <= m; ++i) {
        at(i, n) = Poly<L>(Word<L>(u.begin() + static_cast<std::ptrdiff_t>(i), u.end()));
    }
    for (std::size_t j = 0; j <= n; ++j) {
        at(m, j) = Poly<L>(Word<L>(v.begin() + static_cast<std::ptrdiff_t>(j), v.end()));
    }
    for (std::size_t i = m; i-- > 0;) {
        for (std::size_t j = n; j-- > 0;) {
            Poly<L> cell = prepend(u[i], at(i + 1, j));
            cell += prepend(v[j], at(i, j + 1));
            if (merge) {
                if constexpr (AdditiveLetter<L>) {
                    cell += prepend(static_cast<L>(u[i] + v[j]), at(i + 1, j + 1));
                }
            }
            at(i, j) = std::move(cell);
        }
    }
    return std::move(at(0, 0));
}

// d applied to the word (lead, rest...): either lead stands alone and d
// continues on rest, or lead absorbs the next letter.
template <class L>
void dmap_rec(const L& lead, std::span<const L> rest, Word<L>& prefix, Poly<L>& out)
{
    if (rest.empty()) {
        prefix.push_back(lead);
        out.add_term(prefix, Rational(1));
        prefix.pop_back();
        return;
    }
    prefix.push_back(lead);
    dmap_rec(rest.front(), rest.subspan(1), prefix, out);
    prefix.pop_back();
    dmap_rec(static_cast<L>(lead + rest.front()), rest.subspan(1), prefix, out);
}

} // namespace detail

// Harmonic product on words:
//   a u * b v = a (u * b v) + b (a u * v) + (a+b) (u * v).
template <AdditiveLetter L>
Poly<L> star(const Word<L>& u, const Word<L>& v)
{
    return detail::merge_product<L>(u, v, true);
}

// sha product on words: a u sha b v = a (u sha b v) + b (a u sha v).
template <class L>
Poly<L> sha(const Word<L>& u, const Word<L>& v)
{
    return detail::merge_product<L>(u, v, false);
}

// d on a single word: sum over all ways of merging consecutive blocks.
template <AdditiveLetter L>
Poly<L> dmap(const Word<L>& w)
{
    if (w.empty()) {
        return Poly<L>::unit();
    }
    Poly<L> out;
    Word<L> prefix;
    prefix.reserve(w.size());
    detail::dmap_rec<L>(w.front(), std::span<const L>(w).subspan(1), prefix, out);
    return out;
}

template <class L, class WordOp>
Poly<L> bilinear(const Poly<L>& p, const Poly<L>& q, WordOp&& op)
{
    Poly<L> r;
    for (const auto& [u, a] : p) {
        for (const auto& [v, b] : q) {
            r.add_scaled(op(u, v), a * b);
        }
    }
    return r;
}

template <AdditiveLetter L>
Poly<L> star(const Poly<L>& p, const Poly<L>& q)
{
    return bilinear(p, q, [](const Word<L>& u, const Word<L>& v) { return star(u, v); });
}

template <class L>
Poly<L> sha(const Poly<L>& p, const Poly<L>& q)
{
    return bilinear(p, q, [](const Word<L>& u, const Word<L>& v) { return sha(u, v); });
}

template <AdditiveLetter L>
Poly<L> dmap(const Poly<L>& p)
{
    Poly<L> r;
    for (const auto& [w, k] : p) {
        r.add_scaled(dmap(w), k);
    }
    return r;
}

// Left folds; the empty list gives 1.
template <class L>
Poly<L> bigsha(std::span<const Poly<L>> ps)
{
    Poly<L> acc = Poly<L>::unit();
    for (const auto& p : ps) {
        acc = sha(acc, p);
    }
    return acc;
}

template <AdditiveLetter L>
Poly<L> bigstar(std::span<const Poly<L>> ps)
{
    Poly<L> acc = Poly<L>::unit();
    for (const auto& p : ps) {
        acc = star(acc, p);
    }
    return acc;
}

template <class L>
Poly<L> bigsha(const std::vector<Poly<L>>& ps)
{
    return bigsha(std::span<const Poly<L>>(ps));
}

template <AdditiveLetter L>
Poly<L> bigstar(const std::vector<Poly<L>>& ps)
{
    return bigstar(std::span<const Poly<L>>(ps));
}

// Sum of letters of a word; the additive content preserved by star and d.
template <AdditiveLetter L>
L letter_sum(const Word<L>& w, L zero)
{
    for (const auto& l : w) {
        zero = static_cast<L>(zero + l);
    }
    return zero;
}

} // namespace mzsv
