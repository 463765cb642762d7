#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "monomial_ideal.hpp"
#include "newton_polytope.hpp"

namespace mideal {

/// x, y, z, w for up to four variables, x1..xn beyond that.
inline std::vector<std::string> default_variable_names(std::size_t n)
{
    std::vector<std::string> names;
    static const char *letters[] = {"x", "y", "z", "w"};
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(n <= 4 ? std::string(letters[i]) : "x" + std::to_string(i + 1));
    }
    return names;
}

inline std::string format_monomial(const ExponentVector &v, const std::vector<std::string> &names)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += names.at(i);
        if (v[i] != 1) {
            out += "^" + std::to_string(v[i]);
        }
    }
    return out.empty() ? "1" : out;
}

inline std::string format_monomial(const ExponentVector &v) { return format_monomial(v, default_variable_names(v.size())); }

inline std::string format_ideal(const MonomialIdeal &I)
{
    if (I.is_zero()) {
        return "(0)";
    }
    const auto names = I.variable_names().value_or(default_variable_names(I.ambient_dim()));
    std::string out = "(";
    for (std::size_t i = 0; i < I.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += format_monomial(I.generators()[i], names);
    }
    return out + ")";
}

/// "3*x + 2*y >= 6"
inline std::string format_facet(const Facet &f, std::size_t n)
{
    const auto names = default_variable_names(n);
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        if (f.normal[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        if (f.normal[i] != 1) {
            out += std::to_string(f.normal[i]) + "*";
        }
        out += names[i];
    }
    return out + " >= " + std::to_string(f.offset);
}

namespace detail {

/// Recursive-descent parser for
///   IDEAL  := '(' MONO (',' MONO)* ')' | '{' VEC (',' VEC)* '}'
///   MONO   := '1' | '0' | factor ('*' factor)*
///   factor := var ('^' uint)?
///   VEC    := '[' uint (',' uint)* ']'
/// Variables are x, y, z, w or x1, x2, ...; the two styles cannot be mixed.
class IdealParser {
public:
    explicit IdealParser(std::string_view text) : text_(text) {}

    MonomialIdeal parse_ideal(std::optional<std::size_t> forced)
    {
        skip();
        if (peek() == '{') {
            auto vecs = parse_vectors();
            finish();
            std::size_t n = vecs.front().size();
            if (forced && *forced != n) {
                fail("vectors have length " + std::to_string(n) + " but n = " + std::to_string(*forced));
            }
            return build(n, vecs);
        }
        expect('(');
        std::vector<std::map<std::size_t, std::int64_t>> monos;
        bool zero = false;
        do {
            skip();
            if (peek() == '0') {
                ++pos_;
                zero = true;
            } else {
                monos.push_back(parse_monomial_factors());
            }
            skip();
        } while (accept(','));
        expect(')');
        finish();
        if (zero && !monos.empty()) {
            fail("'0' cannot be combined with other generators");
        }
        return build(resolve_dim(forced), to_vectors(monos, resolve_dim(forced)));
    }

    ExponentVector parse_monomial(std::optional<std::size_t> forced)
    {
        skip();
        if (peek() == '[') {
            auto v = parse_vector();
            finish();
            if (forced && *forced != v.size()) {
                fail("vector has length " + std::to_string(v.size()) + " but n = " + std::to_string(*forced));
            }
            check_dim(v.size());
            return v;
        }
        auto factors = parse_monomial_factors();
        finish();
        std::size_t n = resolve_dim(forced);
        return to_vectors({factors}, n).front();
    }

private:
    enum class Style { none, letters, indexed };

    [[noreturn]] void fail(const std::string &msg) const
    {
        throw InputError("syntax error at position " + std::to_string(pos_) + ": " + msg);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip();
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

    void finish()
    {
        skip();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
    }

    std::int64_t parse_uint()
    {
        skip();
        std::size_t start = pos_;
        std::int64_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            ++pos_;
            if (value > kMaxInputExponent) {
                pos_ = start;
                fail("exponent exceeds the supported maximum " + std::to_string(kMaxInputExponent));
            }
        }
        if (pos_ == start) {
            fail("expected a nonnegative integer");
        }
        return value;
    }

    std::size_t parse_variable()
    {
        skip();
        std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek()))) {
            fail("expected a variable");
        }
        char letter = peek();
        ++pos_;
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            ++pos_;
        }
        if (digits.empty()) {
            static const std::string_view letters = "xyzw";
            auto idx = letters.find(letter);
            if (idx == std::string_view::npos) {
                pos_ = start;
                fail(std::string("unknown variable '") + letter + "' (use x, y, z, w or x1..xN)");
            }
            use_style(Style::letters, start);
            return idx;
        }
        if (letter != 'x' || digits.size() > 3 || std::stoi(digits) < 1) {
            pos_ = start;
            fail("unknown variable '" + std::string(1, letter) + digits + "' (use x, y, z, w or x1..xN)");
        }
        use_style(Style::indexed, start);
        return static_cast<std::size_t>(std::stoi(digits) - 1);
    }

    void use_style(Style s, std::size_t at)
    {
        if (style_ != Style::none && style_ != s) {
            pos_ = at;
            throw InputError("inconsistent variable set at position " + std::to_string(at) +
                             ": cannot mix x, y, z, w with x1..xN");
        }
        style_ = s;
    }

    std::map<std::size_t, std::int64_t> parse_monomial_factors()
    {
        std::map<std::size_t, std::int64_t> factors;
        skip();
        if (peek() == '1') {
            ++pos_;
            return factors;
        }
        do {
            std::size_t var = parse_variable();
            std::int64_t e = 1;
            if (accept('^')) {
                e = parse_uint();
            }
            factors[var] += e;
            if (factors[var] > kMaxInputExponent) {
                fail("exponent exceeds the supported maximum " + std::to_string(kMaxInputExponent));
            }
            max_index_ = std::max(max_index_, var + 1);
        } while (accept('*'));
        return factors;
    }

    ExponentVector parse_vector()
    {
        expect('[');
        std::vector<std::int64_t> v;
        do {
            v.push_back(parse_uint());
        } while (accept(','));
        expect(']');
        return ExponentVector(std::move(v));
    }

    std::vector<ExponentVector> parse_vectors()
    {
        expect('{');
        std::vector<ExponentVector> vecs;
        do {
            vecs.push_back(parse_vector());
            if (vecs.back().size() != vecs.front().size()) {
                fail("all vectors must have the same length");
            }
        } while (accept(','));
        expect('}');
        return vecs;
    }

    std::size_t resolve_dim(std::optional<std::size_t> forced) const
    {
        std::size_t inferred = std::max<std::size_t>(max_index_, 1);
        if (forced) {
            if (*forced < max_index_) {
                throw InputError("inconsistent variable set: expression uses " + std::to_string(max_index_) +
                                 " variables but n = " + std::to_string(*forced));
            }
            inferred = *forced;
        }
        check_dim(inferred);
        return inferred;
    }

    static void check_dim(std::size_t n)
    {
        if (n == 0 || n > kMaxAmbientDim) {
            throw InputError("number of variables must be in [1, " + std::to_string(kMaxAmbientDim) + "]");
        }
    }

    static std::vector<ExponentVector> to_vectors(const std::vector<std::map<std::size_t, std::int64_t>> &monos,
                                                  std::size_t n)
    {
        std::vector<ExponentVector> out;
        for (const auto &m : monos) {
            std::vector<std::int64_t> v(n, 0);
            for (auto [i, e] : m) {
                v[i] = e;
            }
            out.emplace_back(std::move(v));
        }
        return out;
    }

    static MonomialIdeal build(std::size_t n, std::vector<ExponentVector> gens)
    {
        check_dim(n);
        MonomialIdeal I(n, std::move(gens));
        validate_desk_scale(I);
        return I;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Style style_ = Style::none;
    std::size_t max_index_ = 0;
};

} // namespace detail

/// Parses an ideal expression such as "(x^2, x*y, y^3)" or "{[2,0],[1,1]}".
/// `n` forces the number of variables; otherwise it is inferred.
inline MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> n = std::nullopt)
{
    return detail::IdealParser(text).parse_ideal(n);
}

/// Parses a single monomial "x^2*y" or exponent vector "[2,1]".
inline ExponentVector parse_monomial(std::string_view text, std::optional<std::size_t> n = std::nullopt)
{
    return detail::IdealParser(text).parse_monomial(n);
}

} // namespace mideal
