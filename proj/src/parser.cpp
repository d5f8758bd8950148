#include "motivic/parser.hpp"

#include <cctype>
#include <string>

namespace motivic {

namespace {

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    // Peek without skipping whitespace first; used for exponent lookahead.
    char raw_peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    char take() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        return text_[pos_++];
    }

    void expect(char c) {
        std::size_t at = position();
        char got = take();
        if (got != c)
            throw ParseError(std::string("expected '") + c + "', found '" + got + "'", at);
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::size_t position() {
        skip_ws();
        return pos_;
    }

    std::string name() {
        std::size_t at = position();
        std::string out;
        while (pos_ < text_.size() && name_char(text_[pos_])) out += text_[pos_++];
        if (out.empty()) throw ParseError("expected a name", at);
        return out;
    }

    Int integer() {
        std::size_t at = position();
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
        if (digits.empty()) throw ParseError("expected an integer", at);
        return Int(digits);
    }

    long long signed_integer() {
        bool neg = consume('-');
        if (!neg) consume('+');
        Int v = integer();
        if (v > 1000000) throw ParseError("exponent out of range", position());
        return neg ? -static_cast<long long>(v.convert_to<long long>())
                   : v.convert_to<long long>();
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class ExprParser {
public:
    ExprParser(std::string_view text, const AtomTable& table) : cur_(text), table_(table) {}

    MotivicClass run() {
        MotivicClass x = expr();
        if (!cur_.at_end()) {
            if (cur_.peek() == '^')
                throw ParseError("'^' is only supported on L", cur_.position());
            throw ParseError(std::string("unexpected '") + cur_.peek() + "'", cur_.position());
        }
        return x;
    }

private:
    Cursor cur_;
    const AtomTable& table_;

    MotivicClass expr() {
        MotivicClass x = term();
        while (true) {
            if (cur_.consume('+'))
                x += term();
            else if (cur_.consume('-'))
                x -= term();
            else
                return x;
        }
    }

    MotivicClass term() {
        MotivicClass x = factor();
        while (cur_.consume('*')) x = x.smash(factor());
        return x;
    }

    MotivicClass factor() {
        if (cur_.consume('-')) return -factor();
        return primary();
    }

    MotivicClass primary() {
        std::size_t at = cur_.position();
        char c = cur_.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return MotivicClass::integer(cur_.integer());
        if (c == '(') {
            cur_.take();
            MotivicClass x = expr();
            cur_.expect(')');
            return x;
        }
        if (c == '[') {
            cur_.take();
            std::string name = cur_.name();
            cur_.expect(']');
            const Atom* a = table_.find_atom(name);
            if (!a) throw ParseError("unknown atom '" + name + "'", at);
            if (a->name == "GM") // sugar: GM = L - 1
                return MotivicClass::lefschetz(HalfInt::whole(1)) - MotivicClass::one();
            return MotivicClass::atom_class(*a);
        }
        if (c == 'U' || c == 'L') {
            cur_.take();
            // A name continuing after the keyword is not a keyword at all.
            if (name_char(cur_.raw_peek()))
                throw ParseError("unexpected name", at);
            if (c == 'U') {
                cur_.expect('(');
                std::string name = cur_.name();
                cur_.expect(')');
                if (!table_.find_bundle(name)) throw ParseError("unknown unit '" + name + "'", at);
                return MotivicClass::unit_class(name);
            }
            return MotivicClass::lefschetz(exponent());
        }
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    // Optional ^p, ^{p}, ^{p/1}, ^{p/2} after L; defaults to L^1.
    HalfInt exponent() {
        if (!cur_.consume('^')) return HalfInt::whole(1);
        bool braced = cur_.consume('{');
        long long num = cur_.signed_integer();
        long long den = 1;
        if (cur_.consume('/')) {
            std::size_t at = cur_.position();
            den = cur_.signed_integer();
            if (den != 1 && den != 2)
                throw ParseError("exponent denominator must be 1 or 2", at);
        }
        if (braced) cur_.expect('}');
        return den == 2 ? HalfInt::halves(num) : HalfInt::whole(num);
    }
};

class LaurentParser {
public:
    explicit LaurentParser(std::string_view text) : cur_(text) {}

    LaurentQ run() {
        LaurentQ p = expr();
        if (!cur_.at_end())
            throw ParseError(std::string("unexpected '") + cur_.peek() + "'", cur_.position());
        return p;
    }

private:
    Cursor cur_;

    LaurentQ expr() {
        LaurentQ p = term();
        while (true) {
            if (cur_.consume('+'))
                p += term();
            else if (cur_.consume('-'))
                p += -term();
            else
                return p;
        }
    }

    LaurentQ term() {
        LaurentQ p = factor();
        while (cur_.consume('*')) p = p * factor();
        return p;
    }

    LaurentQ factor() {
        if (cur_.consume('-')) return -factor();
        std::size_t at = cur_.position();
        char c = cur_.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return LaurentQ::constant(cur_.integer());
        if (c == '(') {
            cur_.take();
            LaurentQ p = expr();
            cur_.expect(')');
            return p;
        }
        if (c == 'q') {
            cur_.take();
            if (name_char(cur_.raw_peek())) throw ParseError("unexpected name", at);
            if (!cur_.consume('^')) return LaurentQ::q_power(2);
            bool braced = cur_.consume('{');
            long long num = cur_.signed_integer();
            long long den = 1;
            if (cur_.consume('/')) {
                std::size_t dat = cur_.position();
                den = cur_.signed_integer();
                if (den != 1 && den != 2)
                    throw ParseError("exponent denominator must be 1 or 2", dat);
            }
            if (braced) cur_.expect('}');
            return LaurentQ::q_power(den == 2 ? num : 2 * num);
        }
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }
};

} // namespace

MotivicClass parse(std::string_view text, const AtomTable& table) {
    return ExprParser(text, table).run();
}

LaurentQ parse_laurent(std::string_view text) {
    return LaurentParser(text).run();
}

} // namespace motivic
