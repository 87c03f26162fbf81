#include "mzsv/harmonic.hpp"

#include <algorithm>
#include <stdexcept>

namespace mzsv {

bool is_index(const Index& idx)
{
    return std::all_of(idx.begin(), idx.end(), [](int a) { return a >= 1; });
}

bool is_admissible(const Index& idx)
{
    return is_index(idx) && (idx.empty() || idx.front() >= 2);
}

int index_weight(const Index& idx)
{
    int w = 0;
    for (int a : idx) {
        w += a;
    }
    return w;
}

void require_index(const Index& idx)
{
    if (!is_index(idx)) {
        throw std::invalid_argument("index entries must be positive integers");
    }
}

HPoly z(int a)
{
    return HPoly(Index{a});
}

HPoly z(const Index& idx)
{
    return HPoly(idx);
}

XYWord zword_to_xy(const Index& idx)
{
    require_index(idx);
    XYWord w;
    for (int a : idx) {
        w.insert(w.end(), static_cast<std::size_t>(a - 1), XY::x);
        w.push_back(XY::y);
    }
    return w;
}

Index xy_to_zword(const XYWord& w)
{
    if (!w.empty() && w.back() != XY::y) {
        throw std::domain_error("xy word " + to_string(w) + " does not end in y, not in H^1");
    }
    Index idx;
    int run = 1;
    for (XY l : w) {
        if (l == XY::x) {
            ++run;
        } else {
            idx.push_back(run);
            run = 1;
        }
    }
    return idx;
}

HPoly xy_to_zpoly(const XYPoly& p)
{
    HPoly r;
    for (const auto& [w, k] : p) {
        r.add_term(xy_to_zword(w), k);
    }
    return r;
}

XYPoly phi(const XYWord& w)
{
    XYPoly acc = XYPoly::unit();
    XYPoly x_plus_y = XYPoly::letter(XY::x) + XYPoly::letter(XY::y);
    for (XY l : w) {
        acc = concat(acc, l == XY::x ? XYPoly::letter(XY::x) : x_plus_y);
    }
    return acc;
}

XYPoly phi(const XYPoly& p)
{
    XYPoly r;
    for (const auto& [w, k] : p) {
        r.add_scaled(phi(w), k);
    }
    return r;
}

HPoly d_via_phi(const Index& idx)
{
    if (idx.empty()) {
        return HPoly::unit();
    }
    XYWord w = zword_to_xy(idx);
    w.pop_back();
    return xy_to_zpoly(concat(phi(w), XYPoly::letter(XY::y)));
}

std::string to_string(const XYWord& w)
{
    std::string s;
    for (XY l : w) {
        s.push_back(l == XY::x ? 'x' : 'y');
    }
    return s.empty() ? "1" : s;
}

} // namespace mzsv
