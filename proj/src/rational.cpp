#include "hexlat/rational.hpp"

#include <ostream>
#include <limits>

namespace hexlat {

namespace {

using Int = Rat::Int;

Int gcd128(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { Int t = a % b; a = b; b = t; }
    return a;
}

Int mul_checked(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("rational multiply overflow");
    return r;
}

Int add_checked(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("rational add overflow");
    return r;
}

std::string i128_str(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    char buf[48];
    int pos = 48;
    while (u) { buf[--pos] = char('0' + int(u % 10)); u /= 10; }
    std::string s(buf + pos, buf + 48);
    return neg ? "-" + s : s;
}

} // namespace

Rat Rat::make(Int n, Int d) {
    if (d == 0) throw OverflowError("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    Int g = gcd128(n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r;
    r.num_ = n;
    r.den_ = d;
    return r;
}

Rat::Rat(std::int64_t n, std::int64_t d) {
    Rat r = make(n, d);
    num_ = r.num_;
    den_ = r.den_;
}

std::int64_t Rat::num64() const {
    if (num_ > std::numeric_limits<std::int64_t>::max() ||
        num_ < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("numerator does not fit 64 bits");
    return (std::int64_t)num_;
}

std::int64_t Rat::den64() const {
    if (den_ > std::numeric_limits<std::int64_t>::max())
        throw OverflowError("denominator does not fit 64 bits");
    return (std::int64_t)den_;
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat Rat::operator+(const Rat& o) const {
    // reduce by gcd of denominators first to keep intermediates small
    Int g = gcd128(den_, o.den_);
    Int da = den_ / g, db = o.den_ / g;
    Int n = add_checked(mul_checked(num_, db), mul_checked(o.num_, da));
    Int d = mul_checked(mul_checked(da, db), g);
    return make(n, d);
}

Rat Rat::operator-(const Rat& o) const { return *this + (-o); }

Rat Rat::operator*(const Rat& o) const {
    Int g1 = gcd128(num_, o.den_), g2 = gcd128(o.num_, den_);
    return make(mul_checked(num_ / g1, o.num_ / g2),
                mul_checked(den_ / g2, o.den_ / g1));
}

Rat Rat::operator/(const Rat& o) const {
    if (o.num_ == 0) throw OverflowError("division by zero");
    Int g1 = gcd128(num_, o.num_), g2 = gcd128(o.den_, den_);
    return make(mul_checked(num_ / g1, o.den_ / g2),
                mul_checked(den_ / g2, o.num_ / g1));
}

bool Rat::operator<(const Rat& o) const {
    // denominators positive; compare via checked cross-multiplication with a
    // gcd pre-reduction so the products stay inside 128 bits
    Int g = gcd128(den_, o.den_);
    return mul_checked(num_, o.den_ / g) < mul_checked(o.num_, den_ / g);
}

std::int64_t Rat::floor() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    if (q > std::numeric_limits<std::int64_t>::max() ||
        q < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("floor does not fit 64 bits");
    return (std::int64_t)q;
}

std::int64_t Rat::ceil() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    if (q > std::numeric_limits<std::int64_t>::max() ||
        q < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("ceil does not fit 64 bits");
    return (std::int64_t)q;
}

Rat Rat::mod1() const { return *this - Rat(floor()); }

double Rat::to_double() const { return (double)num_ / (double)den_; }

std::string Rat::str() const {
    if (den_ == 1) return i128_str(num_);
    return i128_str(num_) + "/" + i128_str(den_);
}

Rat Rat::parse(const std::string& s) {
    auto to_int = [](const std::string& t) -> Int {
        if (t.empty()) throw std::invalid_argument("empty rational component");
        size_t i = 0;
        bool neg = false;
        if (t[0] == '-' || t[0] == '+') { neg = t[0] == '-'; i = 1; }
        if (i == t.size()) throw std::invalid_argument("bad rational: " + t);
        Int v = 0;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("bad rational digit in: " + t);
            v = mul_checked(v, 10);
            v = add_checked(v, t[i] - '0');
        }
        return neg ? -v : v;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return make(to_int(s), 1);
    return make(to_int(s.substr(0, slash)), to_int(s.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace hexlat
