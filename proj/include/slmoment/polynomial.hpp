#ifndef SLMOMENT_POLYNOMIAL_HPP
#define SLMOMENT_POLYNOMIAL_HPP

// Dense univariate polynomials with big-integer coefficients, truncated at a
// caller-chosen degree. Products of two nonnegative polynomials go through
// Kronecker substitution (one GMP multiplication); anything else is schoolbook.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "slmoment/bigint.hpp"

namespace slmoment {

/// Coefficient i is the coefficient of x^i.
using Poly = std::vector<BigInt>;

inline void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline void truncate(Poly& p, std::size_t max_degree) {
    if (p.size() > max_degree + 1) p.resize(max_degree + 1);
}

inline const BigInt& coeff(const Poly& p, std::size_t i) {
    static const BigInt zero = 0;
    return i < p.size() ? p[i] : zero;
}

inline void add_into(Poly& acc, const Poly& p) {
    if (acc.size() < p.size()) acc.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] += p[i];
}

inline bool nonnegative(const Poly& p) {
    return std::all_of(p.begin(), p.end(), [](const BigInt& c) { return sgn(c) >= 0; });
}

/// (1 + x)^n up to degree max_degree.
inline Poly binomial_row(std::uint64_t n, std::size_t max_degree) {
    const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(n, max_degree)) + 1;
    Poly row(len);
    row[0] = 1;
    for (std::size_t k = 1; k < len; ++k) {
        row[k] = row[k - 1] * big_u(n - k + 1);
        mpz_divexact_ui(row[k].get_mpz_t(), row[k].get_mpz_t(), k);
    }
    return row;
}

namespace detail {

inline Poly multiply_schoolbook(const Poly& a, const Poly& b, std::size_t max_degree) {
    if (a.empty() || b.empty()) return {};
    const std::size_t len = std::min(a.size() + b.size() - 1, max_degree + 1);
    Poly out(len);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (sgn(a[i]) == 0) continue;
        const std::size_t jmax = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

inline std::size_t max_bits(const Poly& p) {
    std::size_t bits = 0;
    for (const auto& c : p) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return bits;
}

// Packs coefficients into `limbs_per_slot` 64-bit limbs each, little-endian.
inline BigInt kronecker_pack(const Poly& p, std::size_t limbs_per_slot) {
    std::vector<std::uint64_t> buffer(p.size() * limbs_per_slot, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        mpz_export(buffer.data() + i * limbs_per_slot, nullptr, -1, sizeof(std::uint64_t), 0, 0, p[i].get_mpz_t());
    BigInt out;
    mpz_import(out.get_mpz_t(), buffer.size(), -1, sizeof(std::uint64_t), 0, 0, buffer.data());
    return out;
}

inline Poly kronecker_unpack(const BigInt& product, std::size_t limbs_per_slot, std::size_t len) {
    std::vector<std::uint64_t> buffer(
        std::max(len * limbs_per_slot, (mpz_sizeinbase(product.get_mpz_t(), 2) + 63) / 64), 0);
    std::size_t written = 0;
    mpz_export(buffer.data(), &written, -1, sizeof(std::uint64_t), 0, 0, product.get_mpz_t());
    Poly out(len);
    for (std::size_t i = 0; i < len; ++i)
        mpz_import(out[i].get_mpz_t(), limbs_per_slot, -1, sizeof(std::uint64_t), 0, 0,
                   buffer.data() + i * limbs_per_slot);
    return out;
}

inline std::size_t bit_length(std::size_t v) { return static_cast<std::size_t>(std::bit_width(v)); }

inline Poly multiply_kronecker(const Poly& a, const Poly& b, std::size_t max_degree) {
    const std::size_t shorter = std::min(a.size(), b.size());
    const std::size_t slot_bits = max_bits(a) + max_bits(b) + bit_length(shorter) + 1;
    const std::size_t limbs_per_slot = (slot_bits + 63) / 64;
    const BigInt product = kronecker_pack(a, limbs_per_slot) * kronecker_pack(b, limbs_per_slot);
    return kronecker_unpack(product, limbs_per_slot, std::min(a.size() + b.size() - 1, max_degree + 1));
}

}  // namespace detail

/// a * f and a * g truncated at degree max_degree, packing `a` once. All
/// three polynomials must have nonnegative coefficients.
inline std::pair<Poly, Poly> multiply_pair_nonnegative(Poly a, Poly f, Poly g, std::size_t max_degree) {
    for (Poly* p : {&a, &f, &g}) {
        truncate(*p, max_degree);
        trim(*p);
    }
    if (a.empty()) return {};
    const std::size_t a_bits = detail::max_bits(a);
    const std::size_t limbs_per_slot =
        (a_bits + std::max(detail::max_bits(f), detail::max_bits(g)) + detail::bit_length(a.size()) + 1 + 63) / 64;
    const BigInt packed = detail::kronecker_pack(a, limbs_per_slot);
    const auto one = [&](const Poly& other) -> Poly {
        if (other.empty()) return {};
        const BigInt product = packed * detail::kronecker_pack(other, limbs_per_slot);
        return detail::kronecker_unpack(product, limbs_per_slot, std::min(a.size() + other.size() - 1, max_degree + 1));
    };
    return {one(f), one(g)};
}

/// a * b truncated at degree max_degree.
inline Poly multiply(Poly a, Poly b, std::size_t max_degree) {
    truncate(a, max_degree);
    truncate(b, max_degree);
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) >= 24 && nonnegative(a) && nonnegative(b))
        return detail::multiply_kronecker(a, b, max_degree);
    return detail::multiply_schoolbook(a, b, max_degree);
}

}  // namespace slmoment

#endif  // SLMOMENT_POLYNOMIAL_HPP
