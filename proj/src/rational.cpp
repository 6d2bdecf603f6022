#include "casconn/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace casconn {

std::optional<Rat> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) return std::nullopt;
            return Rat(num, den);
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
            if (tail.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
            bool neg = !head.empty() && head[0] == '-';
            BigInt ip = head.empty() || head == "-" || head == "+" ? BigInt(0) : BigInt(head);
            BigInt den = 1;
            for (size_t i = 0; i < tail.size(); ++i) den *= 10;
            BigInt frac = tail.empty() ? BigInt(0) : BigInt(tail);
            Rat r = Rat(boost::multiprecision::abs(ip) * den + frac, den);
            return neg ? -r : r;
        }
        return Rat(BigInt(s));
    } catch (...) {
        return std::nullopt;
    }
}

std::optional<Rat> rational_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    BigInt rn = boost::multiprecision::sqrt(num);
    BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rat(rn, rd);
}

} // namespace casconn
