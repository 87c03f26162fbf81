#include <doctest.h>

#include <algorithm>
#include <set>

#include "mzsv/enumeration.hpp"
#include "mzsv/harmonic.hpp"
#include "support/oracles.hpp"

using namespace mzsv;
using namespace mzsv::oracle;

namespace {

// Bell numbers from B_{n+1} = sum_k C(n,k) B_k.
std::vector<BigInt> bell(int n)
{
    std::vector<BigInt> b{1};
    for (int i = 0; i < n; ++i) {
        BigInt next = 0;
        for (int k = 0; k <= i; ++k) {
            next += binomial(static_cast<unsigned>(i), static_cast<unsigned>(k)) * b[static_cast<std::size_t>(k)];
        }
        b.push_back(next);
    }
    return b;
}

} // namespace

TEST_SUITE("enumeration") {

TEST_CASE("nondecreasing surjections")
{
    CHECK(enumerate_Sd(0).size() == 1);
    CHECK(enumerate_Sd(0)[0] == SurjectionND{0, 0, {}});
    CHECK(enumerate_Sd(2).size() == 2);
    CHECK(enumerate_Sd(3).size() == 4);
    for (int n = 1; n <= 7; ++n) {
        const auto all = enumerate_Sd(n);
        CHECK(all.size() == (std::size_t{1} << (n - 1)));
        for (const auto& s : all) {
            CHECK(s.l <= n);
            CHECK(std::is_sorted(s.values.begin(), s.values.end()));
            CHECK(s.values.front() == 1);
            CHECK(s.values.back() == s.l);
        }
    }
}

TEST_CASE("merge pairs")
{
    CHECK(enumerate_Sstar(1, 1).size() == 3);
    CHECK(enumerate_Ssha(1, 1).size() == 2);
    CHECK(enumerate_Sstar(2, 1).size() == 5);
    CHECK(enumerate_Ssha(2, 1).size() == 3);
    for (int m = 0; m <= 4; ++m) {
        CHECK(enumerate_Sstar(m, 0).size() == 1);
        CHECK(enumerate_Ssha(m, 0).size() == 1);
    }
    for (int m = 0; m <= 6; ++m) {
        for (int n = 0; m + n <= 6; ++n) {
            const auto st = enumerate_Sstar(m, n);
            const auto sh = enumerate_Ssha(m, n);
            CHECK(BigInt(sh.size()) == binomial(static_cast<unsigned>(m + n), static_cast<unsigned>(m)));
            for (const auto& p : sh) {
                CHECK(p.l == m + n);
                CHECK(std::find(st.begin(), st.end(), p) != st.end());
            }
            for (const auto& p : st) {
                CHECK(std::max(m, n) <= p.l);
                CHECK(p.l <= m + n);
            }
        }
    }
}

TEST_CASE("set partitions")
{
    CHECK(enumerate_partitions(1).size() == 1);
    CHECK(enumerate_partitions(3).size() == 5);
    CHECK(enumerate_partitions(4).size() == 15);
    const auto b = bell(8);
    for (int n = 1; n <= 8; ++n) {
        const auto parts = enumerate_partitions(n);
        CHECK(BigInt(parts.size()) == b[static_cast<std::size_t>(n)]);
        for (const auto& p : parts) {
            std::set<int> seen;
            for (const auto& block : p.blocks) {
                CHECK_FALSE(block.empty());
                for (int i : block) {
                    CHECK(seen.insert(i).second);
                }
            }
            CHECK(static_cast<int>(seen.size()) == n);
        }
    }
}

TEST_CASE("enumerative products")
{
    CHECK(star_enum(Index{2}, Index{3}) == z(5) + z(Index{2, 3}) + z(Index{3, 2}));
    CHECK(d_enum(Index{2, 2}) == z(4) + z(Index{2, 2}));
    CHECK(sha_enum(Index{2, 1}, Index{3}).size() == 3);
}

TEST_CASE("recursive products agree with enumeration")
{
    const auto ws = testing::all_indices(3, 3);
    for (const auto& u : ws) {
        CHECK(dmap(u) == d_enum(u));
        for (const auto& v : ws) {
            CHECK(star(u, v) == star_enum(u, v));
            CHECK(sha(u, v) == sha_enum(u, v));
        }
    }
    testing::WordGen gen(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Index u = gen.index(4, 5);
        const Index v = gen.index(4, 5);
        CHECK(star(u, v) == star_enum(u, v));
        CHECK(sha(u, v) == sha_enum(u, v));
        CHECK(dmap(u) == d_enum(u));
    }
}

TEST_CASE("weak compositions")
{
    CHECK(weak_compositions(0, 0).size() == 1);
    CHECK(weak_compositions(2, 0).empty());
    CHECK(weak_compositions(3, 2).size() == 4);
    CHECK(BigInt(weak_compositions(4, 3).size()) == binomial(6, 2));
}

}
