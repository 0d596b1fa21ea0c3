#ifndef SLMOMENT_FIELD_HPP
#define SLMOMENT_FIELD_HPP

// Arithmetic in GF(2^r) in the polynomial basis, the absolute trace to GF(2)
// and the canonical additive character lambda(x) = (-1)^tr(x).

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace slmoment {

/// Element of GF(2^r): bit i is the coefficient of x^i. Carries no reference
/// to its field; every operation takes the FieldSpec explicitly.
using FieldElement = std::uint32_t;

inline constexpr unsigned kMaxDegree = 20;

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when an identity that must hold exactly does not (inexact division,
/// violated structural invariant). Indicates a bug, never bad input.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

// Remainder of carry-less division a mod b over GF(2)[x].
inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    const int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) a ^= b << (da - db);
    return a;
}

}  // namespace detail

/// True when `poly` (bit i = coefficient of x^i) is irreducible over GF(2).
/// Trial division by every polynomial of degree 1..deg/2.
inline bool is_irreducible(std::uint64_t poly) {
    const int d = detail::poly_degree(poly);
    if (d < 1) return false;
    for (std::uint64_t divisor = 2; detail::poly_degree(divisor) <= d / 2; ++divisor) {
        if (detail::poly_mod(poly, divisor) == 0) return false;
    }
    return true;
}

/// Default reduction polynomial for GF(2^r), r in [1, 8]; lexicographically
/// small tabulated choices that fix the golden outputs. Larger r picks the
/// smallest irreducible polynomial of that degree.
inline std::uint64_t default_reduction_poly(unsigned r) {
    switch (r) {
        case 1: return 0b11;
        case 2: return 0b111;
        case 3: return 0b1011;
        case 4: return 0b10011;
        case 5: return 0b100101;
        case 6: return 0b1000011;
        case 7: return 0b10000011;
        case 8: return 0b100011101;
        default: break;
    }
    if (r == 0 || r > kMaxDegree) throw usage_error("field degree must be in [1, 20], got " + std::to_string(r));
    for (std::uint64_t p = (std::uint64_t{1} << r) | 1; p < (std::uint64_t{1} << (r + 1)); p += 2) {
        if (is_irreducible(p)) return p;
    }
    throw invariant_violation("no irreducible polynomial found");
}

/// GF(2^r) defined by a degree-r irreducible reduction polynomial.
class FieldSpec {
public:
    explicit FieldSpec(unsigned r) : FieldSpec(r, default_reduction_poly(r)) {}

    FieldSpec(unsigned r, std::uint64_t reduction_poly) : r_(r), poly_(reduction_poly) {
        if (r == 0 || r > kMaxDegree) throw usage_error("field degree must be in [1, 20], got " + std::to_string(r));
        if (detail::poly_degree(reduction_poly) != static_cast<int>(r))
            throw usage_error("reduction polynomial " + std::to_string(reduction_poly) + " does not have degree " +
                              std::to_string(r));
        if (!is_irreducible(reduction_poly))
            throw usage_error("reduction polynomial " + std::to_string(reduction_poly) + " is reducible over GF(2)");
    }

    unsigned r() const { return r_; }
    std::uint64_t reduction_poly() const { return poly_; }
    std::uint32_t q() const { return std::uint32_t{1} << r_; }

    bool contains(FieldElement a) const { return a < q(); }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    unsigned r_;
    std::uint64_t poly_;
};

inline void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (a != b) throw usage_error("operands belong to different fields");
}

inline FieldElement add(FieldElement a, FieldElement b) { return a ^ b; }

inline FieldElement mul(const FieldSpec& f, FieldElement a, FieldElement b) {
    const unsigned r = f.r();
    const FieldElement top = FieldElement{1} << r;
    const auto low = static_cast<FieldElement>(f.reduction_poly()) & (top - 1);
    FieldElement acc = 0;
    while (b != 0) {
        if (b & 1u) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a = (a ^ top) ^ low;
    }
    return acc;
}

inline FieldElement square(const FieldSpec& f, FieldElement a) { return mul(f, a, a); }

inline FieldElement power(const FieldSpec& f, FieldElement a, std::uint64_t e) {
    FieldElement result = 1;
    while (e != 0) {
        if (e & 1u) result = mul(f, result, a);
        a = square(f, a);
        e >>= 1;
    }
    return result;
}

/// a^(q-2) by square-and-multiply.
inline FieldElement inv(const FieldSpec& f, FieldElement a) {
    if (a == 0) throw domain_error("zero has no multiplicative inverse");
    return power(f, a, f.q() - 2);
}

/// tr(a) = a + a^2 + ... + a^(2^(r-1)), always 0 or 1.
inline int trace(const FieldSpec& f, FieldElement a) {
    FieldElement acc = 0;
    FieldElement x = a;
    for (unsigned i = 0; i < f.r(); ++i) {
        acc ^= x;
        x = square(f, x);
    }
    if (acc > 1) throw invariant_violation("trace left the prime field");
    return static_cast<int>(acc);
}

inline int lambda(const FieldSpec& f, FieldElement a) { return trace(f, a) == 0 ? 1 : -1; }

/// Caches the inverse and lambda for every element of a small field. Used by
/// the enumeration loops; the free functions remain the reference path.
class FieldTables {
public:
    explicit FieldTables(const FieldSpec& f) : spec_(f), inverse_(f.q(), 0), character_(f.q(), 1) {
        for (FieldElement a = 0; a < f.q(); ++a) {
            if (a != 0) inverse_[a] = inv(f, a);
            character_[a] = static_cast<signed char>(lambda(f, a));
        }
    }

    const FieldSpec& spec() const { return spec_; }
    FieldElement inverse(FieldElement a) const { return inverse_[a]; }
    int character(FieldElement a) const { return character_[a]; }
    FieldElement mul(FieldElement a, FieldElement b) const { return slmoment::mul(spec_, a, b); }

private:
    FieldSpec spec_;
    std::vector<FieldElement> inverse_;
    std::vector<signed char> character_;
};

}  // namespace slmoment

#endif  // SLMOMENT_FIELD_HPP
