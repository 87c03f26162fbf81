#include "mzsv/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace mzsv::oracle {

namespace {

void nondecreasing(int n, int l, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    const int lo = cur.empty() ? 1 : cur.back();
    for (int v = lo; v <= l; ++v) {
        cur.push_back(v);
        nondecreasing(n, l, cur, out);
        cur.pop_back();
    }
}

// Strictly increasing maps [k] -> [l], i.e. k-subsets of [l], in
// lexicographic order of their value lists.
std::vector<std::vector<int>> strictly_increasing(int k, int l)
{
    std::vector<std::vector<int>> out;
    if (k > l) {
        return out;
    }
    for (unsigned mask = 0; mask < (1U << static_cast<unsigned>(l)); ++mask) {
        if (std::popcount(mask) != k) {
            continue;
        }
        std::vector<int> vals;
        for (int i = 0; i < l; ++i) {
            if ((mask >> static_cast<unsigned>(i)) & 1U) {
                vals.push_back(i + 1);
            }
        }
        out.push_back(std::move(vals));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_size(int n, const char* what)
{
    if (n < 0 || n > 16) {
        throw std::invalid_argument(std::string(what) + ": size out of range [0, 16]");
    }
}

} // namespace

std::vector<SurjectionND> enumerate_Sd(int n)
{
    check_size(n, "enumerate_Sd");
    std::vector<SurjectionND> out;
    for (int l = 0; l <= n; ++l) {
        std::vector<std::vector<int>> seqs;
        std::vector<int> cur;
        nondecreasing(n, l, cur, seqs);
        for (auto& s : seqs) {
            std::vector<bool> hit(static_cast<std::size_t>(l), false);
            for (int v : s) {
                hit[static_cast<std::size_t>(v - 1)] = true;
            }
            if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
                out.push_back(SurjectionND{n, l, std::move(s)});
            }
        }
    }
    return out;
}

std::vector<MergePair> enumerate_Sstar(int m, int n)
{
    check_size(m, "enumerate_Sstar");
    check_size(n, "enumerate_Sstar");
    if (m + n > 20) {
        throw std::invalid_argument("enumerate_Sstar: m + n exceeds 20");
    }
    std::vector<MergePair> out;
    for (int l = 0; l <= m + n; ++l) {
        const auto sigmas = strictly_increasing(m, l);
        const auto taus = strictly_increasing(n, l);
        for (const auto& s : sigmas) {
            for (const auto& t : taus) {
                std::vector<bool> hit(static_cast<std::size_t>(l), false);
                for (int v : s) {
                    hit[static_cast<std::size_t>(v - 1)] = true;
                }
                for (int v : t) {
                    hit[static_cast<std::size_t>(v - 1)] = true;
                }
                if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
                    out.push_back(MergePair{l, s, t});
                }
            }
        }
    }
    return out;
}

std::vector<MergePair> enumerate_Ssha(int m, int n)
{
    std::vector<MergePair> out;
    for (auto& mp : enumerate_Sstar(m, n)) {
        bool disjoint = true;
        for (int s : mp.sigma) {
            if (std::find(mp.tau.begin(), mp.tau.end(), s) != mp.tau.end()) {
                disjoint = false;
                break;
            }
        }
        if (disjoint) {
            out.push_back(std::move(mp));
        }
    }
    return out;
}

std::vector<SetPartition> enumerate_partitions(int n)
{
    if (n < 1 || n > 12) {
        throw std::invalid_argument("enumerate_partitions: n out of range [1, 12]");
    }
    // Restricted growth strings: rg[0] = 0, rg[i] <= 1 + max(rg[0..i-1]).
    std::vector<SetPartition> out;
    std::vector<int> rg(static_cast<std::size_t>(n), 0);
    auto emit = [&]() {
        int blocks = 0;
        for (int v : rg) {
            blocks = std::max(blocks, v + 1);
        }
        SetPartition p;
        p.blocks.resize(static_cast<std::size_t>(blocks));
        for (int i = 0; i < n; ++i) {
            p.blocks[static_cast<std::size_t>(rg[static_cast<std::size_t>(i)])].push_back(i + 1);
        }
        out.push_back(std::move(p));
    };
    auto rec = [&](auto&& self, int i, int mx) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int v = 0; v <= mx + 1; ++v) {
            rg[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, std::max(mx, v));
        }
    };
    rec(rec, 1, 0);
    return out;
}

} // namespace mzsv::oracle

namespace mzsv {

std::vector<std::vector<int>> weak_compositions(int total, int parts)
{
    std::vector<std::vector<int>> out;
    if (total < 0 || parts < 0) {
        return out;
    }
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int left) -> void {
        if (left == 0) {
            if (remaining == 0) {
                out.push_back(cur);
            }
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur.push_back(v);
            self(self, remaining - v, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, total, parts);
    return out;
}

} // namespace mzsv
