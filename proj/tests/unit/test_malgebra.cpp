#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "mzsv/malgebra.hpp"
#include "mzsv/series.hpp"
#include "support/oracles.hpp"

using namespace mzsv;

namespace {

std::vector<MLetter> small_letters()
{
    std::vector<MLetter> ls;
    for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 2; ++b) {
            for (int c = 0; c <= 2; ++c) {
                if (a + b + c > 0) {
                    ls.push_back({a, b, c});
                }
            }
        }
    }
    return ls;
}

std::vector<MWord> good_words(int max_depth)
{
    const auto ls = small_letters();
    std::vector<MWord> out{MWord{}};
    std::vector<MWord> layer{MWord{}};
    for (int d = 1; d <= max_depth; ++d) {
        std::vector<MWord> next;
        for (const auto& w : layer) {
            for (const auto& l : ls) {
                MWord x = w;
                x.push_back(l);
                next.push_back(std::move(x));
            }
        }
        for (const auto& w : next) {
            if (is_good(w)) {
                out.push_back(w);
            }
        }
        layer = std::move(next);
    }
    return out;
}

MWord random_mword(testing::WordGen& gen, int max_depth)
{
    MWord w(static_cast<std::size_t>(gen.uniform(0, max_depth)));
    for (auto& l : w) {
        do {
            l = {gen.uniform(0, 2), gen.uniform(0, 2), gen.uniform(0, 2)};
        } while (l.is_zero());
    }
    return w;
}

bool all_good(const MPoly& p)
{
    return std::all_of(p.begin(), p.end(), [](const auto& t) { return is_good(t.first); });
}

bool all_weight(const MPoly& p, const Triple& wt)
{
    return std::all_of(p.begin(), p.end(), [&](const auto& t) { return weight(t.first) == wt; });
}

} // namespace

TEST_SUITE("malgebra") {

TEST_CASE("letter predicates")
{
    CHECK(in_M({0, 0, 1}));
    CHECK_FALSE(in_M({0, 0, 0}));
    CHECK(is_great({2, 1, 7}));
    CHECK_FALSE(is_great({3, 1, 0}));
    CHECK(in_M_k({2, 2, 1}, 1));
    CHECK(in_M_k({0, 0, 2}, 2));
    CHECK_FALSE(in_M_k({0, 0, 0}, 0));
    CHECK(in_N({1, 1, 0}));
    CHECK(in_N({1, 0, 0}));
    CHECK(in_N({2, 3, 0}));
    CHECK(in_N({0, 0, 1}));
    CHECK(in_N({4, 4, 1}));
    CHECK_FALSE(in_N({0, 0, 2}));
    CHECK_FALSE(in_N({2, 1, 1}));
    CHECK_FALSE(in_N({3, 1, 0}));
}

TEST_CASE("word statistics")
{
    const MWord w{{1, 1, 0}, {0, 0, 1}};
    CHECK(weight(w) == Triple{1, 1, 1});
    CHECK(depth(w) == 2);
    CHECK(total_weight(w) == 3);
    CHECK(weight(MWord{}) == Triple{0, 0, 0});
    CHECK(is_good(MWord{e1, e2}));
    CHECK_FALSE(is_good(MWord{e2, e1}));
    CHECK_FALSE(is_good(MWord{e1}));
    CHECK(is_good(MWord{}));
    CHECK(bracket(Triple{1, 1, 2}) == 6);
    CHECK(bracket(MWord{{1, 1, 2}, {0, 0, 1}}) == 6);
    CHECK(char_count(MWord{{0, 0, 1}, {2, 2, 2}, {1, 1, 1}}) == 2);
    CHECK_THROWS_AS(char_count(MWord{{1, 0, 1}}), std::domain_error);
    CHECK_THROWS_AS(char_count(MWord{{1, 1, 0}}), std::domain_error);
}

TEST_CASE("hom to H^1")
{
    CHECK(hom_abc(MWord{{1, 1, 0}}, 3, 1, 2) == Index{4});
    CHECK(hom_abc(MWord{e3}, 3, 1, 2) == Index{2});
    CHECK(hom_abc(MWord{{1, 1, 2}}, 1, 1, 1) == Index{4});
    CHECK_THROWS_AS(hom_abc(MWord{e1}, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("hom commutes with d, star and sha")
{
    testing::WordGen gen(99);
    for (int trial = 0; trial < 40; ++trial) {
        const MWord u = random_mword(gen, 3);
        const MWord v = random_mword(gen, 3);
        const int a = gen.uniform(1, 3);
        const int b = gen.uniform(1, 3);
        const int c = gen.uniform(1, 3);
        const Index hu = hom_abc(u, a, b, c);
        const Index hv = hom_abc(v, a, b, c);
        CHECK(hom_abc(dmap(u), a, b, c) == dmap(hu));
        CHECK(hom_abc(star(u, v), a, b, c) == star(hu, hv));
        CHECK(hom_abc(sha(u, v), a, b, c) == sha(hu, hv));
    }
}

TEST_CASE("grading")
{
    testing::WordGen gen(5);
    for (int trial = 0; trial < 60; ++trial) {
        const MWord u = random_mword(gen, 3);
        const MWord v = random_mword(gen, 3);
        CHECK(all_weight(dmap(u), weight(u)));
        CHECK(all_weight(star(u, v), weight(u) + weight(v)));
        CHECK(all_weight(sha(u, v), weight(u) + weight(v)));
    }
}

TEST_CASE("good words are letterwise great and closed under d")
{
    const auto good = good_words(3);
    CHECK(good.size() > 100);
    for (const auto& w : good) {
        for (const auto& l : w) {
            CHECK(is_great(l));
        }
        CHECK(all_good(dmap(w)));
    }
}

TEST_CASE("products of two good words need not be good")
{
    const MWord w{e1, e2};
    const MPoly s = sha(w, w);
    CHECK(s.coeff(MWord{e1, e1, e2, e2}) == Rational(4));
    CHECK_FALSE(all_good(s));
    CHECK_FALSE(all_good(star(w, w)));
}

TEST_CASE("good times balanced stays good")
{
    // Balanced words: every letter has a = b.
    const auto good = good_words(3);
    std::vector<MWord> balanced;
    for (const auto& w : good) {
        if (std::all_of(w.begin(), w.end(), [](const MLetter& l) { return l.a == l.b; })) {
            balanced.push_back(w);
        }
    }
    CHECK(balanced.size() > 10);
    for (const auto& u : good) {
        for (const auto& v : balanced) {
            if (depth(u) + depth(v) > 4) {
                continue;
            }
            CHECK(all_good(star(u, v)));
            CHECK(all_good(sha(u, v)));
            CHECK(all_good(star(v, u)));
        }
    }
}

TEST_CASE("text form")
{
    CHECK(to_string(Triple{1, 0, 2}) == "(1,0,2)");
}

}
