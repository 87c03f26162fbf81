#include "mzsv/malgebra.hpp"

#include <cstdlib>
#include <stdexcept>

namespace mzsv {

bool in_M(const Triple& t)
{
    return t.a >= 0 && t.b >= 0 && t.c >= 0 && !t.is_zero();
}

bool is_great(const Triple& t)
{
    return std::abs(t.a - t.b) <= 1;
}

bool in_M_k(const Triple& t, int k)
{
    return in_M(t) && t.a == t.b && t.c == k;
}

bool in_N(const Triple& t)
{
    if (!in_M(t)) {
        return false;
    }
    if (t.c == 0) {
        return std::abs(t.a - t.b) <= 1;
    }
    return t.c == 1 && t.a == t.b;
}

Triple weight(const MWord& w)
{
    Triple s;
    for (const auto& l : w) {
        s = s + l;
    }
    return s;
}

int total_weight(const MWord& w)
{
    return weight(w).total();
}

bool is_good(const MWord& w)
{
    int prefix = 0;
    for (const auto& l : w) {
        prefix += l.a - l.b;
        if (prefix != 0 && prefix != 1) {
            return false;
        }
    }
    return prefix == 0;
}

int char_count(const MWord& w)
{
    int n = 0;
    for (const auto& l : w) {
        if (!in_M_k(l, 1) && !in_M_k(l, 2)) {
            throw std::domain_error("char_count: letter " + to_string(l) + " is not in M_1 u M_2");
        }
        if (l.c == 1) {
            ++n;
        }
    }
    return n;
}

BigInt bracket(const Triple& t)
{
    if (t.a < 0 || t.b < 0 || t.c < 0) {
        throw std::domain_error("bracket: negative component in " + to_string(t));
    }
    return binomial(static_cast<unsigned>(t.total()), static_cast<unsigned>(t.c));
}

BigInt bracket(const MWord& w)
{
    BigInt r = 1;
    for (const auto& l : w) {
        r *= bracket(l);
    }
    return r;
}

Index hom_abc(const MWord& w, int a, int b, int c)
{
    if (a < 1 || b < 1 || c < 1) {
        throw std::invalid_argument("hom_abc: a, b, c must be >= 1");
    }
    Index out;
    out.reserve(w.size());
    for (const auto& l : w) {
        out.push_back(a * l.a + b * l.b + c * l.c);
    }
    return out;
}

HPoly hom_abc(const MPoly& p, int a, int b, int c)
{
    HPoly r;
    for (const auto& [w, k] : p) {
        r.add_term(hom_abc(w, a, b, c), k);
    }
    return r;
}

std::string to_string(const Triple& t)
{
    return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + ")";
}

} // namespace mzsv
