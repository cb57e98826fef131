#include "wittstack/parse.hpp"

#include <cctype>

#include "wittstack/errors.hpp"

namespace wittstack {

namespace {

class ExprParser {
public:
    ExprParser(const std::string& s, std::uint32_t p, char var) : s_(s), p_(p), var_(var) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "' in \"" + s_ + "\"");
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_factor(char c) const {
        return c == '(' || c == var_ || std::isdigit(static_cast<unsigned char>(c));
    }

    RatFunc expr() {
        bool neg = false;
        char c = peek();
        while (c == '+' || c == '-') {
            if (c == '-') neg = !neg;
            ++pos_;
            c = peek();
        }
        RatFunc acc = term();
        if (neg) acc = -acc;
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                RatFunc t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    RatFunc term() {
        RatFunc acc = factor();
        while (true) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos_;
                RatFunc f = factor();
                acc = (c == '*') ? acc * f : acc / f;
            } else if (starts_factor(c)) {
                acc = acc * factor();  // implicit multiplication
            } else {
                return acc;
            }
        }
    }

    RatFunc factor() {
        RatFunc base = atom();
        if (peek() == '^') {
            ++pos_;
            base = base.pow(integer());
        }
        return base;
    }

    RatFunc atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc inner = expr();
            if (peek() != ')') throw ParseError("missing ')' in \"" + s_ + "\"");
            ++pos_;
            return inner;
        }
        if (c == var_) {
            ++pos_;
            return RatFunc::var(p_);
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RatFunc::from_poly(Poly::constant(Fp(integer(), p_)));
        throw ParseError("expected a value at \"" + s_.substr(pos_) + "\"");
    }

    long long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected an integer in \"" + s_ + "\"");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1LL << 40)) throw ParseError("integer literal too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    const std::string& s_;
    std::uint32_t p_;
    char var_;
    std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

RatFunc parse_ratfunc(const std::string& text, std::uint32_t p, char var) {
    require_prime(p);
    return ExprParser(text, p, var).parse();
}

std::vector<std::string> split_components(const std::string& text) {
    std::string s = trim(text);
    // Strip one outer pair of parentheses when it wraps the whole list.
    if (!s.empty() && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0) {
                wraps = false;
                break;
            }
        }
        if (wraps) s = s.substr(1, s.size() - 2);
    }
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    if (parts.size() == 1 && parts[0].empty()) parts.clear();
    return parts;
}

std::vector<RatFunc> parse_components(const std::string& text, std::uint32_t p, char var) {
    std::vector<RatFunc> out;
    for (const auto& part : split_components(text)) out.push_back(parse_ratfunc(part, p, var));
    if (out.empty()) throw ParseError("empty component list");
    return out;
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    for (const auto& part : split_components(text)) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(part, &used);
            if (used != part.size()) throw ParseError("bad integer: " + part);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad integer: " + part);
        }
    }
    return out;
}

}  // namespace wittstack
