#include "tpkit/rational.hpp"

#include <cctype>

namespace tpkit {

namespace {

bool isIntegerToken(const std::string& s) {
    if (s.empty()) return false;
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational parseRational(const std::string& text) {
    std::string s = text;
    // trim surrounding whitespace
    size_t b = s.find_first_not_of(" \t\r\n");
    size_t e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw ParseError("empty rational token");
    s = s.substr(b, e - b + 1);

    size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!isIntegerToken(s)) throw ParseError("malformed rational: '" + text + "'");
        return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!isIntegerToken(num) || !isIntegerToken(den)) {
        throw ParseError("malformed rational: '" + text + "'");
    }
    Integer q(den);
    if (q == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational r(Integer(num), q);
    r.canonicalize();
    return r;
}

std::string toString(const Rational& value) {
    Rational v = value;
    v.canonicalize(); // brace-constructed values may arrive non-canonical
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

} // namespace tpkit
