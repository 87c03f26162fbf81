#include "mzsv/theorems.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "mzsv/enumeration.hpp"

namespace mzsv {

namespace {

template <class L>
struct Alphabet {
    L a;
    L b;
    L c;
    L ab;
    std::function<L(int)> u_letter;
    std::function<L(int)> v_letter;
};

void check_mn(int m, int n)
{
    if (m < 0 || n < 0) {
        throw std::invalid_argument("m and n must be >= 0");
    }
}

template <class L>
Word<L> repeat(const L& l, int k)
{
    return Word<L>(static_cast<std::size_t>(k), l);
}

template <class L>
Poly<L> lhs_generic(const Alphabet<L>& g, int m, int n)
{
    check_mn(m, n);
    const Word<L> ab_word{g.a, g.b};
    std::map<std::pair<int, int>, Poly<L>> d_cache;
    auto d_part = [&](int i, int j) -> const Poly<L>& {
        auto it = d_cache.find({i, j});
        if (it == d_cache.end()) {
            it = d_cache.emplace(std::pair{i, j}, dmap(sha(repeat(g.c, i), power(ab_word, static_cast<std::size_t>(j))))).first;
        }
        return it->second;
    };

    Poly<L> result;
    for (int q = 0; 2 * q <= m; ++q) {
        for (int p = 0; p + 2 * q <= m; ++p) {
            const int i = m - p - 2 * q;
            const Rational sign = pow(Rational(-2), static_cast<unsigned>(p));
            for (int j = 0; j <= n; ++j) {
                // sum over compositions of n - j into the u's and v's
                Poly<L> tail;
                for (const auto& comp : weak_compositions(n - j, p + q)) {
                    Word<L> us;
                    Word<L> vs;
                    for (int s = 0; s < p; ++s) {
                        us.push_back(g.u_letter(comp[static_cast<std::size_t>(s)]));
                    }
                    for (int t = 0; t < q; ++t) {
                        vs.push_back(g.v_letter(comp[static_cast<std::size_t>(p + t)]));
                    }
                    tail += sha(us, vs);
                }
                if (tail.is_zero()) {
                    continue;
                }
                result.add_scaled(star(d_part(i, j), tail), sign);
            }
        }
    }
    return result;
}

template <class L>
Poly<L> rhs_generic(const Alphabet<L>& g, int m, int n)
{
    check_mn(m, n);
    const Word<L> ab_word{g.a, g.b};
    Poly<L> result;
    for (int j = 0; j <= n; ++j) {
        const int k = n - j;
        Poly<L> left = sha(repeat(g.c, m), power(ab_word, static_cast<std::size_t>(j)));
        result += star(left, dmap(repeat(g.ab, k)));
    }
    return result * ((m % 2 == 0) ? Rational(1) : Rational(-1));
}

Alphabet<int> h_alphabet(int a, int b, int c)
{
    if (a < 1 || b < 1 || c < 1) {
        throw std::invalid_argument("a, b, c must be >= 1");
    }
    return Alphabet<int>{
        a, b, c, a + b,
        [a, b, c](int u) { return (a + b) * u + c; },
        [a, b, c](int v) { return (a + b) * v + 2 * c; },
    };
}

Alphabet<MLetter> m_alphabet()
{
    return Alphabet<MLetter>{
        e1, e2, e3, MLetter{1, 1, 0},
        [](int u) { return MLetter{u, u, 1}; },
        [](int v) { return MLetter{v, v, 2}; },
    };
}

} // namespace

HPoly lhs_mthm(int a, int b, int c, int m, int n)
{
    return lhs_generic(h_alphabet(a, b, c), m, n);
}

HPoly rhs_mthm(int a, int b, int c, int m, int n)
{
    return rhs_generic(h_alphabet(a, b, c), m, n);
}

MPoly lhs_thm_inA(int m, int n)
{
    return lhs_generic(m_alphabet(), m, n);
}

MPoly rhs_thm_inA(int m, int n)
{
    return rhs_generic(m_alphabet(), m, n);
}

} // namespace mzsv
