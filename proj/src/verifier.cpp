#include "mzsv/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "mzsv/enumeration.hpp"
#include "mzsv/series.hpp"
#include "mzsv/text.hpp"
#include "mzsv/theorems.hpp"

namespace mzsv {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
public:
    std::chrono::duration<double> elapsed() const { return Clock::now() - start_; }

private:
    Clock::time_point start_ = Clock::now();
};

bool all_weights(const MPoly& p, const Triple& expected)
{
    return std::all_of(p.begin(), p.end(), [&](const auto& term) { return weight(term.first) == expected; });
}

// All indices of depth <= max_depth with entries in [1, max_entry].
std::vector<Index> all_indices(int max_depth, int max_entry)
{
    std::vector<Index> out{Index{}};
    std::vector<Index> layer{Index{}};
    for (int d = 1; d <= max_depth; ++d) {
        std::vector<Index> next;
        for (const auto& w : layer) {
            for (int a = 1; a <= max_entry; ++a) {
                Index x = w;
                x.push_back(a);
                next.push_back(x);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

} // namespace

bool VerifyReport::Diff::is_zero() const
{
    return std::visit([](const auto& p) { return p.is_zero(); }, poly);
}

bool VerifyReport::pass() const
{
    return std::all_of(diffs.begin(), diffs.end(), [](const Diff& d) { return d.is_zero(); }) &&
           std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

nlohmann::json VerifyReport::to_json(bool with_timing) const
{
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : parameters) {
        params[k] = v;
    }
    nlohmann::json d = nlohmann::json::object();
    for (const auto& diff : diffs) {
        d[diff.label] = std::visit([](const auto& p) { return to_string(p); }, diff.poly);
    }
    nlohmann::json c = nlohmann::json::object();
    for (const auto& [k, v] : checks) {
        c[k] = v;
    }
    nlohmann::json j = {{"identity", identity}, {"parameters", params}, {"pass", pass()}, {"diff", d}};
    if (!checks.empty()) {
        j["checks"] = c;
    }
    if (with_timing) {
        j["elapsed_s"] = elapsed.count();
    }
    return j;
}

VerifyReport verify_mthm(int a, int b, int c, int m, int n)
{
    Timer timer;
    VerifyReport r;
    r.identity = "mthm";
    r.parameters = {{"a", a}, {"b", b}, {"c", c}, {"m", m}, {"n", n}};
    r.diffs.push_back({"lhs-rhs", lhs_mthm(a, b, c, m, n) - rhs_mthm(a, b, c, m, n)});
    r.elapsed = timer.elapsed();
    return r;
}

VerifyReport verify_thm_inA(int m, int n)
{
    Timer timer;
    VerifyReport r;
    r.identity = "inA";
    r.parameters = {{"m", m}, {"n", n}};
    const MPoly lhs = lhs_thm_inA(m, n);
    const MPoly rhs = rhs_thm_inA(m, n);
    const Triple expected{n, n, m};
    r.diffs.push_back({"lhs-rhs", lhs - rhs});
    r.checks.emplace_back("weight", all_weights(lhs, expected) && all_weights(rhs, expected));
    r.elapsed = timer.elapsed();
    return r;
}

VerifyReport verify_informal(int bound)
{
    Timer timer;
    VerifyReport r;
    r.identity = "informal";
    r.parameters = {{"W", bound}};
    const TruncatedSeries lhs = lhs_series(bound);
    const TruncatedSeries rhs = rhs_series(bound);
    const TruncatedSeries target = target_series(bound);
    r.diffs.push_back({"lhs-rhs", lhs.terms - rhs.terms});
    r.diffs.push_back({"lhs-target", lhs.terms - target.terms});
    r.diffs.push_back({"rhs-target", rhs.terms - target.terms});
    r.elapsed = timer.elapsed();
    return r;
}

VerifyReport verify_reduction_consistency(int a, int b, int c, const std::vector<std::pair<int, int>>& samples)
{
    Timer timer;
    VerifyReport r;
    r.identity = "reduction";
    r.parameters = {{"a", a}, {"b", b}, {"c", c}};
    for (const auto& [m, n] : samples) {
        const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
        r.diffs.push_back({"lhs" + tag, hom_abc(lhs_thm_inA(m, n), a, b, c) - lhs_mthm(a, b, c, m, n)});
        r.diffs.push_back({"rhs" + tag, hom_abc(rhs_thm_inA(m, n), a, b, c) - rhs_mthm(a, b, c, m, n)});
    }
    r.elapsed = timer.elapsed();
    return r;
}

VerifyReport verify_oracles(int max_depth, int max_entry)
{
    Timer timer;
    VerifyReport r;
    r.identity = "oracles";
    r.parameters = {{"depth", max_depth}, {"entries", max_entry}};
    HPoly star_diff;
    HPoly sha_diff;
    HPoly d_diff;
    const auto indices = all_indices(max_depth, max_entry);
    for (const auto& u : indices) {
        d_diff += dmap(u) - oracle::d_enum(u);
        for (const auto& v : indices) {
            star_diff += star(u, v) - oracle::star_enum(u, v);
            sha_diff += sha(u, v) - oracle::sha_enum(u, v);
        }
    }
    r.diffs.push_back({"star", star_diff});
    r.diffs.push_back({"sha", sha_diff});
    r.diffs.push_back({"d", d_diff});
    r.elapsed = timer.elapsed();
    return r;
}

std::vector<VerifyReport> run_all(const std::vector<std::function<VerifyReport()>>& tasks, unsigned jobs)
{
    std::vector<VerifyReport> out(tasks.size());
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            out[i] = tasks[i]();
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < jobs; ++t) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) {
                    out[i] = tasks[i]();
                }
            });
        }
    }
    return out;
}

} // namespace mzsv
