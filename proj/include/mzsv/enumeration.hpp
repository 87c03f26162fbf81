#pragma once

#include <optional>
#include <vector>

#include "mzsv/poly.hpp"

namespace mzsv {

// All (x_1, ..., x_parts) in Z>=0 with sum total. One empty tuple when
// parts == 0 and total == 0, none when parts == 0 < total.
std::vector<std::vector<int>> weak_compositions(int total, int parts);

} // namespace mzsv

// Direct implementations of the enumerative definitions of d, star and
// sha. These are slow and exist to cross-check the recursive versions in
// poly.hpp. All maps use 1-based values: sigma(s) lies in [1, l].
namespace mzsv::oracle {

// (l, sigma) with sigma: [n] -> [l] nondecreasing and surjective.
struct SurjectionND {
    int n = 0;
    int l = 0;
    std::vector<int> values;

    friend bool operator==(const SurjectionND&, const SurjectionND&) = default;
};

// (l, sigma, tau) with sigma: [m] -> [l], tau: [n] -> [l] strictly
// increasing and Im sigma u Im tau = [l].
struct MergePair {
    int l = 0;
    std::vector<int> sigma;
    std::vector<int> tau;

    friend bool operator==(const MergePair&, const MergePair&) = default;
};

struct SetPartition {
    // Blocks sorted by smallest element, each block ascending.
    std::vector<std::vector<int>> blocks;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

// Ordered lexicographically in (l, values).
std::vector<SurjectionND> enumerate_Sd(int n);
// Ordered lexicographically in (l, sigma, tau).
std::vector<MergePair> enumerate_Sstar(int m, int n);
std::vector<MergePair> enumerate_Ssha(int m, int n);
// Requires n >= 1.
std::vector<SetPartition> enumerate_partitions(int n);

namespace detail {

template <class L>
Word<L> merged_word(const MergePair& mp, const Word<L>& u, const Word<L>& v)
{
    std::vector<std::optional<L>> c(static_cast<std::size_t>(mp.l));
    auto absorb = [](std::optional<L>& slot, const L& x) { slot = slot ? static_cast<L>(*slot + x) : x; };
    for (std::size_t s = 0; s < mp.sigma.size(); ++s) {
        absorb(c[static_cast<std::size_t>(mp.sigma[s] - 1)], u[s]);
    }
    for (std::size_t t = 0; t < mp.tau.size(); ++t) {
        absorb(c[static_cast<std::size_t>(mp.tau[t] - 1)], v[t]);
    }
    Word<L> w;
    w.reserve(c.size());
    for (auto& slot : c) {
        w.push_back(*slot);
    }
    return w;
}

} // namespace detail

template <AdditiveLetter L>
Poly<L> star_enum(const Word<L>& u, const Word<L>& v)
{
    Poly<L> r;
    for (const auto& mp : enumerate_Sstar(static_cast<int>(u.size()), static_cast<int>(v.size()))) {
        r.add_term(detail::merged_word(mp, u, v), Rational(1));
    }
    return r;
}

template <AdditiveLetter L>
Poly<L> sha_enum(const Word<L>& u, const Word<L>& v)
{
    Poly<L> r;
    for (const auto& mp : enumerate_Ssha(static_cast<int>(u.size()), static_cast<int>(v.size()))) {
        r.add_term(detail::merged_word(mp, u, v), Rational(1));
    }
    return r;
}

template <AdditiveLetter L>
Poly<L> d_enum(const Word<L>& w)
{
    Poly<L> r;
    for (const auto& sd : enumerate_Sd(static_cast<int>(w.size()))) {
        std::vector<std::optional<L>> c(static_cast<std::size_t>(sd.l));
        for (std::size_t s = 0; s < w.size(); ++s) {
            auto& slot = c[static_cast<std::size_t>(sd.values[s] - 1)];
            slot = slot ? static_cast<L>(*slot + w[s]) : w[s];
        }
        Word<L> out;
        for (auto& slot : c) {
            out.push_back(*slot);
        }
        r.add_term(std::move(out), Rational(1));
    }
    return r;
}

template <AdditiveLetter L>
Poly<L> star_enum(const Poly<L>& p, const Poly<L>& q)
{
    return bilinear(p, q, [](const Word<L>& u, const Word<L>& v) { return star_enum(u, v); });
}

template <AdditiveLetter L>
Poly<L> sha_enum(const Poly<L>& p, const Poly<L>& q)
{
    return bilinear(p, q, [](const Word<L>& u, const Word<L>& v) { return sha_enum(u, v); });
}

template <AdditiveLetter L>
Poly<L> d_enum(const Poly<L>& p)
{
    Poly<L> r;
    for (const auto& [w, k] : p) {
        r.add_scaled(d_enum(w), k);
    }
    return r;
}

} // namespace mzsv::oracle
