#include "hyparr/rational.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace hyparr {

Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite value");
    if (x == 0.0) return Rat(0);
    int exp = 0;
    // mant in [0.5, 1); mant * 2^53 is an integer.
    double mant = std::frexp(x, &exp);
    auto mant_int = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rat r(mant_int);
    if (exp >= 0) {
        r *= Rat(Int(1) << exp);
    } else {
        r /= Rat(Int(1) << -exp);
    }
    return r;
}

std::optional<Rat> rat_parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            std::string num = s.substr(0, slash), den = s.substr(slash + 1);
            if (!is_int(num) || !is_int(den)) return std::nullopt;
            Int d(den);
            if (d == 0) return std::nullopt;
            return Rat(Int(num), d);
        }
        auto dotpos = s.find('.');
        if (dotpos == std::string::npos) {
            if (!is_int(s)) return std::nullopt;
            return Rat(Int(s));
        }
        // Decimal literal: sign, integer part, fractional part.
        std::string head = s.substr(0, dotpos), tail = s.substr(dotpos + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
        if (head.empty()) head = "0";
        if (!is_int(head) || tail.empty() || !is_int(tail)) return std::nullopt;
        Int scale = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Rat r = Rat(Int(head)) + Rat(Int(tail), scale);
        return neg ? Rat(-r) : r;
    } catch (...) {
        return std::nullopt;
    }
}

std::string rat_to_string(const Rat& x) {
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double rat_to_double(const Rat& x) { return static_cast<double>(x); }

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace hyparr
