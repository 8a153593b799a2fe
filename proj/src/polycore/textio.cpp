#include "polycore/textio.hpp"

#include <cctype>

namespace polycore {

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}

namespace {

constexpr unsigned long kMaxExponent = 10000000;

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    IntPoly run() {
        skip();
        if (at_end()) throw ParseError("empty input", pos_);
        IntPoly r = peek() == '[' ? list() : expr();
        skip();
        if (!at_end()) throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
        return r;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    mpz_class integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", start);
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    IntPoly list() {
        ++pos_;  // '['
        std::vector<mpz_class> desc;
        skip();
        if (peek() == ']') {
            ++pos_;
            return {};
        }
        for (;;) {
            skip();
            bool neg = false;
            if (peek() == '-' || peek() == '+') {
                neg = peek() == '-';
                ++pos_;
                skip();
            }
            mpz_class v = integer();
            desc.push_back(neg ? mpz_class(-v) : v);
            skip();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ']') {
                ++pos_;
                break;
            }
            if (at_end()) throw ParseError("unterminated coefficient list", pos_);
            throw ParseError("expected ',' or ']'", pos_);
        }
        return IntPoly::from_descending(desc);
    }

    IntPoly expr() {
        skip();
        IntPoly acc;
        bool first = true;
        for (;;) {
            skip();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            IntPoly t = term();
            acc = sign < 0 ? acc - t : acc + t;
            first = false;
        }
        return acc;
    }

    bool starts_factor() {
        skip();
        char c = peek();
        return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    IntPoly term() {
        IntPoly acc = power();
        for (;;) {
            skip();
            if (peek() == '*') {
                ++pos_;
                acc = acc * power();
            } else if (peek() == 'x' || peek() == '(') {
                acc = acc * power();  // implicit product: 2x, (x+1)(x-1)
            } else {
                break;
            }
        }
        return acc;
    }

    IntPoly power() {
        IntPoly base = atom();
        skip();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t at = pos_;
            mpz_class e = integer();
            if (e > kMaxExponent) throw ParseError("exponent too large", at);
            base = pow(base, static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    IntPoly atom() {
        skip();
        char c = peek();
        if (c == '-' || c == '+') {
            ++pos_;
            IntPoly a = power();
            return c == '-' ? -a : a;
        }
        if (c == 'x') {
            ++pos_;
            return IntPoly::monomial(1, 1);
        }
        if (c == '(') {
            std::size_t open = pos_++;
            IntPoly inner = expr();
            skip();
            if (peek() != ')') throw ParseError("missing ')' for '(' opened at " + std::to_string(open), pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return IntPoly::constant(integer());
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }
};

}  // namespace

IntPoly parse(std::string_view text) { return Parser(text).run(); }

std::string to_decimal(const mpz_class& z) { return z.get_str(10); }

std::string format_expr(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        const mpz_class& c = p.coeffs()[i];
        if (sgn(c) == 0) continue;
        bool neg = sgn(c) < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        mpz_class a = abs(c);
        if (a != 1 || i == 0) out += a.get_str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::string format_list(const IntPoly& p) {
    if (p.is_zero()) return "[0]";
    std::string out = "[";
    for (std::size_t i = p.size(); i-- > 0;) {
        out += p.coeffs()[i].get_str();
        if (i) out += ", ";
    }
    return out + "]";
}

nlohmann::json to_json(const IntPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    if (p.is_zero()) arr.push_back("0");
    for (std::size_t i = p.size(); i-- > 0;) arr.push_back(p.coeffs()[i].get_str());
    return nlohmann::json{{"coeffs_desc", arr}};
}

IntPoly from_desc_strings(const nlohmann::json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("coefficient list must be a JSON array");
    std::vector<mpz_class> desc;
    desc.reserve(arr.size());
    for (const auto& v : arr) {
        if (v.is_string()) {
            mpz_class z;
            if (z.set_str(v.get<std::string>(), 10) != 0)
                throw std::invalid_argument("bad integer string: " + v.get<std::string>());
            desc.push_back(z);
        } else if (v.is_number_integer()) {
            desc.emplace_back(static_cast<long>(v.get<long long>()));
        } else {
            throw std::invalid_argument("coefficient must be a string or an integer");
        }
    }
    return IntPoly::from_descending(desc);
}

IntPoly from_json(const nlohmann::json& j) {
    if (j.is_object() && j.contains("coeffs_desc")) return from_desc_strings(j.at("coeffs_desc"));
    if (j.is_array()) return from_desc_strings(j);
    if (j.is_string()) return parse(j.get<std::string>());
    throw std::invalid_argument("unrecognised polynomial JSON");
}

}  // namespace polycore
