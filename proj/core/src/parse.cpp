#include "curvess/parse.hpp"

#include "curvess/error.hpp"

#include <algorithm>
#include <cctype>

namespace curvess {
namespace {

constexpr std::uint32_t kMaxExponent = 100000;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Parser {
public:
    Parser(std::string_view src, const VarList& vars) : src_(src), vars_(vars) {}

    Poly run()
    {
        Poly p = expr();
        skip_ws();
        if (pos_ != src_.size())
            fail(ErrorKind::Syntax, std::string("unexpected '") + src_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(ErrorKind kind, const std::string& msg) const
    {
        throw SyntaxError(kind, pos_, msg);
    }

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c)
    {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    std::string_view digits()
    {
        const std::size_t begin = pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_]))
            ++pos_;
        return src_.substr(begin, pos_ - begin);
    }

    Poly expr()
    {
        Poly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term()
    {
        const bool negate = accept('-');
        Poly acc = factor();
        while (accept('*'))
            acc = acc * factor();
        return negate ? -acc : acc;
    }

    Poly factor()
    {
        Poly b = base();
        if (!accept('^'))
            return b;
        skip_ws();
        const std::size_t exp_pos = pos_;
        const std::string_view d = digits();
        if (d.empty())
            fail(ErrorKind::BadExponent, "exponent must be a natural number");
        skip_ws();
        if (pos_ < src_.size() && (src_[pos_] == '/' || src_[pos_] == '.'))
            fail(ErrorKind::BadExponent, "exponent must be a natural number");
        if (d.size() > 6 || std::stoul(std::string(d)) > kMaxExponent) {
            pos_ = exp_pos;
            fail(ErrorKind::BadExponent, "exponent too large");
        }
        return b.pow(static_cast<std::uint32_t>(std::stoul(std::string(d))));
    }

    Poly base()
    {
        skip_ws();
        if (pos_ >= src_.size())
            fail(ErrorKind::Syntax, "unexpected end of input");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')'))
                fail(ErrorKind::Syntax, "expected ')'");
            return inner;
        }
        if (is_digit(c))
            return Poly::constant(vars_, rational());
        if (is_ident_start(c)) {
            const std::size_t begin = pos_;
            while (pos_ < src_.size() && is_ident_char(src_[pos_]))
                ++pos_;
            const std::string name(src_.substr(begin, pos_ - begin));
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) {
                pos_ = begin;
                fail(ErrorKind::UndeclaredVariable, "undeclared variable '" + name + "'");
            }
            return Poly::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
        }
        fail(ErrorKind::Syntax, std::string("unexpected '") + c + "'");
    }

    Rational rational()
    {
        const std::string num(digits());
        const std::size_t save = pos_;
        if (accept('/')) {
            skip_ws();
            const std::string den(digits());
            if (den.empty())
                fail(ErrorKind::Syntax, "expected a positive denominator");
            Integer d(den, 10);
            if (d == 0)
                fail(ErrorKind::Syntax, "denominator must be positive");
            Rational q(Integer(num, 10), d);
            q.canonicalize();
            return q;
        }
        pos_ = save;
        return Rational(Integer(num, 10));
    }

    std::string_view src_;
    const VarList& vars_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view source, const VarList& ambient)
{
    return Parser(source, ambient).run();
}

VarList parse_var_list(std::string_view text)
{
    VarList out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view name = text.substr(start, comma - start);
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front())))
            name.remove_prefix(1);
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
            name.remove_suffix(1);
        if (name.empty() || !is_ident_start(name.front())
            || !std::all_of(name.begin(), name.end(), is_ident_char))
            throw Error(ErrorKind::Syntax, "malformed variable list '" + std::string(text) + "'");
        if (std::find(out.begin(), out.end(), name) != out.end())
            throw Error(ErrorKind::Syntax, "duplicate variable '" + std::string(name) + "'");
        out.emplace_back(name);
        start = comma + 1;
    }
    return out;
}

} // namespace curvess
