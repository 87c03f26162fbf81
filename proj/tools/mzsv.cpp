#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzsv/numeric.hpp"
#include "mzsv/text.hpp"
#include "mzsv/verifier.hpp"

namespace {

using namespace mzsv;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Range {
    int lo = 0;
    int hi = 0;
};

// "k" or "lo..hi", both ends inclusive and non-negative.
Range parse_range(const std::string& text, const std::string& name)
{
    auto number = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6) {
            throw CLI::ValidationError(name, "expected a non-negative integer or range lo..hi, got '" + text + "'");
        }
        return std::stoi(s);
    };
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = number(text);
    } else {
        r.lo = number(text.substr(0, dots));
        r.hi = number(text.substr(dots + 2));
    }
    if (r.lo > r.hi) {
        throw CLI::ValidationError(name, "empty range '" + text + "'");
    }
    return r;
}

Range positive_range(const std::string& text, const std::string& name)
{
    Range r = parse_range(text, name);
    if (r.lo < 1) {
        throw CLI::ValidationError(name, "must be >= 1");
    }
    return r;
}

// A bare index "[a,b,..]" or a poly "[..]:q, [..]:q".
HPoly parse_input(const std::string& text)
{
    if (text.find(':') != std::string::npos || text.find_first_not_of(" \t\r\n") == std::string::npos ||
        text.find('[') == std::string::npos) {
        return parse_hpoly(text);
    }
    return z(parse_index(text));
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json value_record(const numeric::BigReal& v, std::optional<int> pi_power, const BigInt& denom_bound)
{
    nlohmann::json j = {{"value", v.value_string()}, {"err", v.err_string()}};
    if (pi_power) {
        j["pi_power"] = *pi_power;
        const auto q = numeric::reconstruct_rational(v, *pi_power, denom_bound);
        j["reconstructed"] = q ? nlohmann::json(q->to_string()) : nlohmann::json(nullptr);
    } else {
        j["reconstructed"] = nullptr;
    }
    return j;
}

int emit_reports(const std::vector<std::function<VerifyReport()>>& tasks, unsigned jobs, bool timing)
{
    bool all = true;
    for (const auto& r : run_all(tasks, jobs)) {
        std::cout << r.to_json(timing).dump() << '\n';
        all = all && r.pass();
    }
    return all ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Harmonic algebra, multiple zeta-star values and the Bowman-Bradley sums"};
    app.require_subcommand(1);

    // expand
    auto* expand = app.add_subcommand("expand", "Expand star, sha or d of index/poly inputs");
    std::string op;
    bool expand_json = false;
    expand->add_option("op", op, "star | sha | d")->required()->check(CLI::IsMember({"star", "sha", "d"}));
    // Inputs are taken raw: CLI11 would otherwise split "[3,1]" as a list.
    expand->allow_extras();
    expand->footer("Inputs: indices like [3,1] or polys like \"[2]:1, [3,1]:-1/2\"");
    expand->add_flag("--json", expand_json, "Emit a JSON term list");

    // verify
    auto* verify = app.add_subcommand("verify", "Check identities exactly over a parameter grid");
    verify->require_subcommand(1);
    unsigned jobs = 1;
    bool timing = false;
    verify->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::Range(1U, 256U));
    verify->add_flag("--timing", timing, "Include elapsed seconds in each record");

    std::string ra = "1..3", rb = "1..3", rc = "1..3", rm = "0..3", rn = "0..2", rw = "0..6";
    int depth = 3;
    int entries = 3;
    auto* v_mthm = verify->add_subcommand("mthm", "Both sides of the identity in H^1");
    v_mthm->add_option("--a", ra)->capture_default_str();
    v_mthm->add_option("--b", rb)->capture_default_str();
    v_mthm->add_option("--c", rc)->capture_default_str();
    v_mthm->add_option("--m", rm)->capture_default_str();
    v_mthm->add_option("--n", rn)->capture_default_str();
    auto* v_inA = verify->add_subcommand("inA", "Both sides of the identity in A, with the weight check");
    v_inA->add_option("--m", rm)->capture_default_str();
    v_inA->add_option("--n", rn)->capture_default_str();
    auto* v_informal = verify->add_subcommand("informal", "Truncated formal series identity");
    v_informal->add_option("--W", rw, "Weight bound or range")->capture_default_str();
    auto* v_oracles = verify->add_subcommand("oracles", "Recursive products against enumeration");
    for (auto* sub : {v_mthm, v_inA, v_informal, v_oracles}) {
        sub->fallthrough();
    }
    v_oracles->add_option("--depth", depth)->capture_default_str()->check(CLI::Range(0, 4));
    v_oracles->add_option("--entries", entries)->capture_default_str()->check(CLI::Range(1, 6));

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate Z (or Zbar with --star) of an index or poly");
    std::string index_text, poly_text, file_path;
    bool star_mode = false;
    double err = 1e-20;
    std::optional<int> pi_power;
    std::string denom_text = "100000";
    auto* o_index = eval->add_option("--index", index_text, "Index, e.g. [3,1]");
    auto* o_poly = eval->add_option("--poly", poly_text, "Poly, e.g. \"[4]:1, [3,1]:1\"");
    auto* o_file = eval->add_option("--file", file_path, "File holding an index or poly")->check(CLI::ExistingFile);
    o_index->excludes(o_poly, o_file);
    o_poly->excludes(o_file);
    eval->add_flag("--star", star_mode, "Evaluate multiple zeta-star values");
    eval->add_option("--err", err, "Target absolute error")->capture_default_str();
    eval->add_option("--pi-power", pi_power, "Reconstruct q with value = q pi^w")->check(CLI::NonNegativeNumber);
    eval->add_option("--denom-bound", denom_text, "Largest denominator tried")->capture_default_str();

    // bb
    auto* bb = app.add_subcommand("bb", "Zbar(z_2^m sha (z_3 z_1)^n)");
    int bb_m = 0;
    int bb_n = 0;
    double bb_err = 1e-20;
    std::optional<int> bb_pi;
    bb->add_option("--m", bb_m)->required()->check(CLI::NonNegativeNumber);
    bb->add_option("--n", bb_n)->required()->check(CLI::NonNegativeNumber);
    bb->add_option("--err", bb_err, "Target absolute error")->capture_default_str();
    bb->add_option("--pi-power", bb_pi, "Defaults to 2m + 4n")->check(CLI::NonNegativeNumber);
    bb->add_option("--denom-bound", denom_text, "Largest denominator tried")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*expand) {
            const auto inputs = expand->remaining();
            if (inputs.empty()) {
                throw CLI::ValidationError("inputs", "at least one input is required");
            }
            std::vector<HPoly> polys;
            for (const auto& s : inputs) {
                if (s.starts_with("-")) {
                    throw CLI::ValidationError(s, "unknown option");
                }
                polys.push_back(parse_input(s));
            }
            HPoly out;
            if (op == "d") {
                if (polys.size() != 1) {
                    throw CLI::ValidationError("inputs", "d takes exactly one input");
                }
                out = dmap(polys[0]);
            } else if (op == "star") {
                out = bigstar(polys);
            } else {
                out = bigsha(polys);
            }
            std::cout << (expand_json ? to_json(out).dump() : to_string(out)) << '\n';
            return exit_ok;
        }

        if (*verify) {
            std::vector<std::function<VerifyReport()>> tasks;
            if (*v_mthm) {
                const Range a = positive_range(ra, "--a"), b = positive_range(rb, "--b"),
                            c = positive_range(rc, "--c"), m = parse_range(rm, "--m"), n = parse_range(rn, "--n");
                for (int ia = a.lo; ia <= a.hi; ++ia)
                    for (int ib = b.lo; ib <= b.hi; ++ib)
                        for (int ic = c.lo; ic <= c.hi; ++ic)
                            for (int im = m.lo; im <= m.hi; ++im)
                                for (int in = n.lo; in <= n.hi; ++in)
                                    tasks.emplace_back([=] { return verify_mthm(ia, ib, ic, im, in); });
            } else if (*v_inA) {
                const Range m = parse_range(rm, "--m"), n = parse_range(rn, "--n");
                for (int im = m.lo; im <= m.hi; ++im)
                    for (int in = n.lo; in <= n.hi; ++in)
                        tasks.emplace_back([=] { return verify_thm_inA(im, in); });
            } else if (*v_informal) {
                const Range w = parse_range(rw, "--W");
                for (int iw = w.lo; iw <= w.hi; ++iw) {
                    tasks.emplace_back([=] { return verify_informal(iw); });
                }
            } else {
                tasks.emplace_back([=] { return verify_oracles(depth, entries); });
            }
            return emit_reports(tasks, jobs, timing);
        }

        BigInt denom_bound;
        if (denom_bound.set_str(denom_text, 10) != 0 || denom_bound < 1) {
            throw CLI::ValidationError("--denom-bound", "expected a positive integer");
        }

        if (*eval) {
            HPoly p;
            if (!index_text.empty()) {
                p = z(parse_index(index_text));
            } else if (!poly_text.empty()) {
                p = parse_hpoly(poly_text);
            } else if (!file_path.empty()) {
                p = parse_input(read_file(file_path));
            } else {
                throw CLI::ValidationError("eval", "one of --index, --poly, --file is required");
            }
            const auto v = star_mode ? numeric::eval_Zbar(p, err) : numeric::eval_Z(p, err);
            std::cout << value_record(v, pi_power, denom_bound).dump() << '\n';
            return exit_ok;
        }

        const auto v = numeric::bb_star_sum(bb_m, bb_n, bb_err);
        const int w = bb_pi.value_or(2 * bb_m + 4 * bb_n);
        nlohmann::json j = value_record(v, w, denom_bound);
        j["m"] = bb_m;
        j["n"] = bb_n;
        std::cout << j.dump() << '\n';
        return exit_ok;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
