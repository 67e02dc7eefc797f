#include "hexlat/homology.hpp"

namespace hexlat {

std::int64_t gcd_nonneg(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { std::int64_t t = a % b; a = b; b = t; }
    return a;
}

HomClass to_ab(const HomClass& c) {
    switch (c.basis) {
    case BasisTag::AB:
        return c;
    case BasisTag::BG:
        // p*beta + q*gamma = -q*alpha + (p-q)*beta
        return {-c.q, c.p - c.q, BasisTag::AB};
    case BasisTag::GA:
        // p*gamma + q*alpha = (q-p)*alpha - p*beta
        return {c.q - c.p, -c.p, BasisTag::AB};
    }
    return c;
}

HomClass from_ab(const HomClass& ab, BasisTag target) {
    HomClass c = to_ab(ab);
    switch (target) {
    case BasisTag::AB:
        return c;
    case BasisTag::BG:
        // x*alpha + y*beta = (y-x)*beta + (-x)*gamma
        return {c.q - c.p, -c.p, BasisTag::BG};
    case BasisTag::GA:
        // x*alpha + y*beta = (-y)*gamma + (x-y)*alpha
        return {-c.q, c.p - c.q, BasisTag::GA};
    }
    return c;
}

std::int64_t pair(const HomClass& u, const HomClass& v) {
    HomClass a = to_ab(u), b = to_ab(v);
    return a.p * b.q - a.q * b.p;
}

HomClass add(const HomClass& u, const HomClass& v) {
    HomClass a = to_ab(u), b = to_ab(v);
    return {a.p + b.p, a.q + b.q, BasisTag::AB};
}

HomClass neg(const HomClass& u) { return {-u.p, -u.q, u.basis}; }

std::int64_t component_count(const HomClass& c) { return gcd_nonneg(c.p, c.q); }

bool is_unlink(const HomClass& c) {
    return c.p == 0 || c.q == 0 || c.p == 1 || c.p == -1 || c.q == 1 || c.q == -1;
}

std::string to_string(const HomClass& c) {
    const char* names[3][2] = {{"a", "b"}, {"b", "g"}, {"g", "a"}};
    int bi = static_cast<int>(c.basis);
    return "(" + std::to_string(c.p) + names[bi][0] + "+" + std::to_string(c.q) +
           names[bi][1] + ")";
}

} // namespace hexlat
