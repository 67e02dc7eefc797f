#pragma once

// Integer first homology of the central torus.  The three core curves
// alpha, beta, gamma satisfy gamma = -alpha - beta and
// <alpha,beta> = <beta,gamma> = <gamma,alpha> = 1.  Classes are carried in
// one of three bases, (alpha,beta), (beta,gamma) or (gamma,alpha); the
// canonical internal basis is (alpha,beta) and the other two are views:
// the appendix and the family table are all expressible there.

#include <cstdint>
#include <string>

namespace hexlat {

enum class BasisTag { AB, BG, GA };

struct HomClass {
    std::int64_t p = 0;
    std::int64_t q = 0;
    BasisTag basis = BasisTag::AB;

    bool operator==(const HomClass& o) const = default;
};

// Same class rewritten as a*alpha + b*beta (substituting gamma = -alpha-beta).
HomClass to_ab(const HomClass& c);

// Rewrite an AB-coordinate class in the requested basis.
HomClass from_ab(const HomClass& ab, BasisTag target);

// Antisymmetric intersection pairing; in AB coordinates <(a,b),(c,d)> = ad - bc.
std::int64_t pair(const HomClass& u, const HomClass& v);

HomClass add(const HomClass& u, const HomClass& v);
HomClass neg(const HomClass& u);

// Components of a (p,q) multi-curve: gcd(|p|,|q|), with gcd(0,k) = |k| and
// gcd(0,0) = 0 encoding the empty curve.
std::int64_t component_count(const HomClass& c);

// True iff the (p,q) torus link in the 3-sphere whose Heegaard basis the class
// is expressed in is an unlink: p = 0, q = 0, |p| = 1 or |q| = 1.
bool is_unlink(const HomClass& c);

std::int64_t gcd_nonneg(std::int64_t a, std::int64_t b);

std::string to_string(const HomClass& c);

} // namespace hexlat
