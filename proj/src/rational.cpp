#include "rigidity/rational.hpp"

#include <cctype>
#include <sstream>

namespace rigidity {

Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

std::optional<Rat> parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(text)) return std::nullopt;
        return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den)) return std::nullopt;
    Int d(den);
    if (d == 0) return std::nullopt;
    Rat r(Int(num), d);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string rat_decimal(const Rat& value, int digits) {
    std::ostringstream out;
    out.precision(digits);
    out << value.get_d();
    return out.str();
}

std::string vec_str(const Vec& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += rat_str(values[i]);
    }
    out += ")";
    return out;
}

}  // namespace rigidity
