#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mzsv/harmonic.hpp"
#include "mzsv/malgebra.hpp"
#include "mzsv/series.hpp"

// Text forms:
//   index   [3,1,2]        empty index []
//   letter  (p,q,r)        for A
//   mword   [(1,0,0),(0,1,0)]
//   poly    [5]:1, [2,3]:-1/2     zero poly 0
// Poly terms are written in canonical order (depth, then lexicographic).
namespace mzsv {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

std::string to_string(const Index& idx);
std::string to_string(const MWord& w);
std::string to_string(const HPoly& p);
std::string to_string(const MPoly& p);

Index parse_index(std::string_view text);
MWord parse_mword(std::string_view text);
HPoly parse_hpoly(std::string_view text);
MPoly parse_mpoly(std::string_view text);

// [{"word": "[2,3]", "coeff": "1"}, ...]
nlohmann::json to_json(const HPoly& p);
nlohmann::json to_json(const MPoly& p);
// {"bound": W, "terms": [...]}
nlohmann::json to_json(const TruncatedSeries& s);

} // namespace mzsv
