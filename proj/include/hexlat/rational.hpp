#pragma once

// Exact rational arithmetic on 128-bit components.  All torus coordinates in
// this project are "turn" units (1 turn = full circle), so every quantity
// that matters is an exact rational and no pi is ever stored.  Values are
// kept in lowest terms with positive denominator; any operation that would
// overflow the 128-bit components throws OverflowError instead of degrading.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <iosfwd>

namespace hexlat {

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& m) : std::runtime_error(m) {}
};

class Rat {
public:
    using Int = __int128;

    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d);
    static Rat make(Int n, Int d); // reduces

    Int num() const { return num_; }
    Int den() const { return den_; }
    std::int64_t num64() const;
    std::int64_t den64() const;

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rat operator-() const;
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const;
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>=(const Rat& o) const { return !(*this < o); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    std::int64_t floor() const;
    std::int64_t ceil() const;
    Rat mod1() const; // representative in [0,1)

    double to_double() const;
    std::string str() const;                // "p/q", or "p" when q == 1
    static Rat parse(const std::string& s); // accepts "p" and "p/q"

private:
    Int num_;
    Int den_; // > 0
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat operator+(std::int64_t a, const Rat& b) { return Rat(a) + b; }
inline Rat operator-(std::int64_t a, const Rat& b) { return Rat(a) - b; }
inline Rat operator*(std::int64_t a, const Rat& b) { return Rat(a) * b; }

} // namespace hexlat
