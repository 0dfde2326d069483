#include "thickness/rational.hpp"

#include <cctype>

#include "thickness/errors.hpp"

namespace thickness {

std::string format_rational(const Rat& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += "/";
        out += denominator(value).str();
    }
    return out;
}

namespace {

bool valid_integer_token(const std::string& text) {
    if (text.empty()) return false;
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!valid_integer_token(num) || !valid_integer_token(den))
            fail(Errc::parse_error, "bad rational '" + text + "'");
        BigInt d(den);
        if (d == 0) fail(Errc::parse_error, "zero denominator in '" + text + "'");
        return Rat(BigInt(num), d);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        std::string tail = text.substr(dot + 1);
        if (head.empty() || head == "-" || head == "+") head += "0";
        if (!valid_integer_token(head) || tail.empty()) fail(Errc::parse_error, "bad rational '" + text + "'");
        for (char c : tail) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail(Errc::parse_error, "bad rational '" + text + "'");
        }
        BigInt scale = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
        BigInt whole(head);
        BigInt frac(tail);
        BigInt num = whole * scale + (head[0] == '-' ? -frac : frac);
        return Rat(num, scale);
    }
    if (!valid_integer_token(text)) fail(Errc::parse_error, "bad rational '" + text + "'");
    return Rat(BigInt(text));
}

} // namespace thickness
