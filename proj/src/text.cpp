#include "mzsv/text.hpp"

#include <cctype>
#include <limits>

namespace mzsv {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }
    bool at_end()
    {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }
    int integer()
    {
        skip_ws();
        const std::size_t start = pos_;
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > std::numeric_limits<int>::max()) {
                pos_ = start;
                fail("integer too large");
            }
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected a non-negative integer");
        }
        return static_cast<int>(v);
    }
    Rational rational()
    {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            ++pos_;
        }
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) {
            ++pos_;
        }
        try {
            return Rational::parse(s_.substr(start, pos_ - start));
        } catch (const std::invalid_argument&) {
            pos_ = start;
            fail("malformed coefficient");
        }
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
    std::size_t position() const { return pos_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

int read_letter(Cursor& c, int*)
{
    const std::size_t at = c.position();
    const int v = c.integer();
    if (v < 1) {
        throw ParseError("index entries must be >= 1", at);
    }
    return v;
}

MLetter read_letter(Cursor& c, MLetter*)
{
    c.expect('(');
    const std::size_t at = c.position();
    MLetter l;
    l.a = c.integer();
    c.expect(',');
    l.b = c.integer();
    c.expect(',');
    l.c = c.integer();
    c.expect(')');
    if (l.is_zero()) {
        throw ParseError("letter (0,0,0) is not in M", at);
    }
    return l;
}

template <class L>
Word<L> read_word(Cursor& c)
{
    Word<L> w;
    c.expect('[');
    if (c.accept(']')) {
        return w;
    }
    do {
        w.push_back(read_letter(c, static_cast<L*>(nullptr)));
    } while (c.accept(','));
    c.expect(']');
    return w;
}

template <class L>
Word<L> parse_word_text(std::string_view text)
{
    Cursor c(text);
    Word<L> w = read_word<L>(c);
    if (!c.at_end()) {
        c.fail("trailing characters");
    }
    return w;
}

template <class L>
Poly<L> parse_poly_text(std::string_view text)
{
    Cursor c(text);
    Poly<L> p;
    if (c.peek() == '0') {
        c.integer();
        if (!c.at_end()) {
            c.fail("trailing characters after zero poly");
        }
        return p;
    }
    do {
        Word<L> w = read_word<L>(c);
        c.expect(':');
        p.add_term(std::move(w), c.rational());
    } while (c.accept(','));
    if (!c.at_end()) {
        c.fail("trailing characters");
    }
    return p;
}

std::string letter_text(int a)
{
    return std::to_string(a);
}

std::string letter_text(const MLetter& l)
{
    return to_string(l);
}

template <class L>
std::string word_text(const Word<L>& w)
{
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
            s += ',';
        }
        s += letter_text(w[i]);
    }
    return s + "]";
}

template <class L>
std::string poly_text(const Poly<L>& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string s;
    for (const auto& [w, k] : p) {
        if (!s.empty()) {
            s += ", ";
        }
        s += word_text(w) + ":" + k.to_string();
    }
    return s;
}

template <class L>
nlohmann::json poly_json(const Poly<L>& p)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, k] : p) {
        arr.push_back({{"word", word_text(w)}, {"coeff", k.to_string()}});
    }
    return arr;
}

} // namespace

std::string to_string(const Index& idx)
{
    return word_text(idx);
}

std::string to_string(const MWord& w)
{
    return word_text(w);
}

std::string to_string(const HPoly& p)
{
    return poly_text(p);
}

std::string to_string(const MPoly& p)
{
    return poly_text(p);
}

Index parse_index(std::string_view text)
{
    return parse_word_text<int>(text);
}

MWord parse_mword(std::string_view text)
{
    return parse_word_text<MLetter>(text);
}

HPoly parse_hpoly(std::string_view text)
{
    return parse_poly_text<int>(text);
}

MPoly parse_mpoly(std::string_view text)
{
    return parse_poly_text<MLetter>(text);
}

nlohmann::json to_json(const HPoly& p)
{
    return poly_json(p);
}

nlohmann::json to_json(const MPoly& p)
{
    return poly_json(p);
}

nlohmann::json to_json(const TruncatedSeries& s)
{
    return {{"bound", s.bound}, {"terms", poly_json(s.terms)}};
}

} // namespace mzsv
