#ifndef SLMOMENT_SL_GROUP_HPP
#define SLMOMENT_SL_GROUP_HPP

// SL(n, q) for n a power of two and q = 2^r: group order, the distribution of
// matrix traces (closed form and matrix-enumeration oracle), the counts
// delta(n-1, q; beta), the Gauss sum over the group, and the SL(4, q) binomial
// bases m_0, m_t.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slmoment/bigint.hpp"
#include "slmoment/field.hpp"
#include "slmoment/kloosterman.hpp"

namespace slmoment {

/// q^{n^2} limit for the matrix sweep.
inline constexpr std::uint64_t kMatrixEnumerationGate = std::uint64_t{1} << 26;

inline BigInt group_order(unsigned n, const FieldSpec& spec);

class GroupParams {
public:
    GroupParams(unsigned n, FieldSpec spec) : n_(n), spec_(spec) {
        if (n < 2 || !std::has_single_bit(n))
            throw usage_error("n must be a power of two >= 2, got " + std::to_string(n));
        order_ = group_order(n, spec);
    }

    unsigned n() const { return n_; }
    const FieldSpec& spec() const { return spec_; }
    std::uint32_t q() const { return spec_.q(); }
    /// binom(n, 2), the exponent of q in the Gauss sum.
    unsigned pair_count() const { return n_ * (n_ - 1) / 2; }
    /// N = |SL(n, q)|, also the length of the code.
    const BigInt& order() const { return order_; }
    /// q^{binom(n,2)}.
    BigInt gauss_factor() const { return pow(big_u(q()), pair_count()); }

private:
    unsigned n_;
    FieldSpec spec_;
    BigInt order_;
};

/// prod_{j=2}^{n} (q^j - 1).
inline BigInt cyclotomic_product(unsigned n, const FieldSpec& spec) {
    BigInt prod = 1;
    const BigInt q = big_u(spec.q());
    for (unsigned j = 2; j <= n; ++j) prod *= pow(q, j) - 1;
    return prod;
}

inline BigInt group_order(unsigned n, const FieldSpec& spec) {
    if (n < 2 || !std::has_single_bit(n)) throw usage_error("n must be a power of two >= 2, got " + std::to_string(n));
    return pow(big_u(spec.q()), n * (n - 1) / 2) * cyclotomic_product(n, spec);
}

/// beta -> n_beta = |{ g in SL(n,q) : Tr(g) = beta }|, indexed by beta.
struct TraceDistribution {
    GroupParams params;
    std::vector<BigInt> counts;

    const BigInt& operator[](FieldElement beta) const { return counts.at(beta); }

    BigInt total() const {
        BigInt s = 0;
        for (const auto& c : counts) s += c;
        return s;
    }

    /// sum_beta n_beta * beta in F_q (only the parity of n_beta matters).
    FieldElement weighted_sum() const {
        FieldElement acc = 0;
        for (FieldElement b = 0; b < counts.size(); ++b)
            if (mpz_odd_p(counts[b].get_mpz_t())) acc ^= b;
        return acc;
    }

    bool all_positive() const {
        for (const auto& c : counts)
            if (sgn(c) <= 0) return false;
        return true;
    }

    friend bool operator==(const TraceDistribution& a, const TraceDistribution& b) { return a.counts == b.counts; }
};

/// theta(beta) = K_{n-2}(lambda; 1/beta) for beta != 0, and 0 at beta = 0.
inline std::vector<std::int64_t> theta_values(const GroupParams& g) {
    const FieldSpec& f = g.spec();
    const auto table = kloosterman_table(f, static_cast<int>(g.n()) - 2);
    std::vector<std::int64_t> theta(f.q(), 0);
    for (FieldElement b = 1; b < f.q(); ++b) theta[b] = table.at(inv(f, b));
    return theta;
}

/// n_beta = q^{binom(n,2)-1} (prod_{j=2}^{n}(q^j - 1) + 1 + q theta(beta)).
inline TraceDistribution trace_distribution_closed(unsigned n, const FieldSpec& spec) {
    GroupParams g(n, spec);
    const BigInt q = big_u(spec.q());
    const BigInt scale = pow(q, g.pair_count() - 1);
    const BigInt base = cyclotomic_product(n, spec) + 1;
    const auto theta = theta_values(g);
    std::vector<BigInt> counts(spec.q());
    for (FieldElement b = 0; b < spec.q(); ++b) counts[b] = scale * (base + q * big(theta[b]));
    return TraceDistribution{std::move(g), std::move(counts)};
}

namespace detail {

// Determinant over GF(2^r) by Gaussian elimination; `m` is row-major n x n
// and is clobbered.
inline FieldElement determinant(const FieldTables& t, std::vector<FieldElement>& m, unsigned n) {
    FieldElement det = 1;
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && m[pivot * n + col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col)
            for (unsigned k = 0; k < n; ++k) std::swap(m[pivot * n + k], m[col * n + k]);
        const FieldElement p = m[col * n + col];
        det = t.mul(det, p);
        const FieldElement p_inv = t.inverse(p);
        for (unsigned row = col + 1; row < n; ++row) {
            const FieldElement factor = t.mul(m[row * n + col], p_inv);
            if (factor == 0) continue;
            for (unsigned k = col; k < n; ++k) m[row * n + k] ^= t.mul(factor, m[col * n + k]);
        }
    }
    return det;  // row swaps do not change sign in characteristic 2
}

inline std::uint64_t matrix_sweep_size(unsigned n, const FieldSpec& spec) {
    const unsigned bits = n * n * spec.r();
    if (bits >= 63) return ~std::uint64_t{0};
    return std::uint64_t{1} << bits;
}

}  // namespace detail

/// Calls `visit` with every determinant-1 matrix, in lexicographic order of
/// the row-major entries. Refuses sweeps above kMatrixEnumerationGate.
template <typename Visitor>
void for_each_sl_element(unsigned n, const FieldSpec& spec, Visitor&& visit) {
    const std::uint64_t sweep = detail::matrix_sweep_size(n, spec);
    if (sweep > kMatrixEnumerationGate)
        throw usage_error("matrix enumeration of " + std::to_string(n) + "x" + std::to_string(n) + " over GF(" +
                          std::to_string(spec.q()) + ") exceeds gate q^(n^2) <= " +
                          std::to_string(kMatrixEnumerationGate));
    const FieldTables t(spec);
    const unsigned cells = n * n;
    std::vector<FieldElement> entries(cells, 0);
    std::vector<FieldElement> scratch(cells);
    for (std::uint64_t index = 0; index < sweep; ++index) {
        std::copy(entries.begin(), entries.end(), scratch.begin());
        if (detail::determinant(t, scratch, n) == 1) visit(static_cast<const std::vector<FieldElement>&>(entries));
        // odometer, last entry fastest
        for (unsigned k = cells; k-- > 0;) {
            if (++entries[k] < spec.q()) break;
            entries[k] = 0;
        }
    }
}

inline FieldElement matrix_trace(const std::vector<FieldElement>& entries, unsigned n) {
    FieldElement tr = 0;
    for (unsigned i = 0; i < n; ++i) tr ^= entries[i * n + i];
    return tr;
}

inline TraceDistribution trace_distribution_oracle(unsigned n, const FieldSpec& spec) {
    GroupParams g(n, spec);
    std::vector<std::uint64_t> tally(spec.q(), 0);
    for_each_sl_element(n, spec, [&](const std::vector<FieldElement>& m) { ++tally[matrix_trace(m, n)]; });
    std::vector<BigInt> counts(spec.q());
    for (FieldElement b = 0; b < spec.q(); ++b) counts[b] = big_u(tally[b]);
    return TraceDistribution{std::move(g), std::move(counts)};
}

/// delta(m, q; beta) = #{ x in (F_q^*)^m : x_1 + ... + x_m + 1/(x_1...x_m) = beta }
/// in closed form; m + 1 must be a power of two.
inline BigInt delta_count(unsigned m, const FieldSpec& spec, FieldElement beta) {
    if (!std::has_single_bit(m + 1) || m == 0) throw usage_error("delta_count needs m + 1 a power of two >= 2");
    const BigInt q = big_u(spec.q());
    const BigInt common = exact_div(pow(q - 1, m) + 1, q, "((q-1)^m + 1) / q");
    if (beta == 0) return common;
    return common + big(kloosterman(spec, static_cast<int>(m) - 1, inv(spec, beta)));
}

inline BigInt delta_count_oracle(unsigned m, const FieldSpec& spec, FieldElement beta) {
    if (m == 0) throw usage_error("delta_count needs m >= 1");
    std::uint64_t work = 1;
    for (unsigned i = 0; i < m; ++i) {
        work *= spec.q() - 1;
        if (work > kDirectEnumerationGate) throw usage_error("delta enumeration exceeds gate");
    }
    const FieldTables t(spec);
    std::vector<FieldElement> xs(m, 1);
    std::uint64_t hits = 0;
    for (;;) {
        FieldElement sum = 0;
        FieldElement prod = 1;
        for (FieldElement x : xs) {
            sum ^= x;
            prod = t.mul(prod, x);
        }
        if ((sum ^ t.inverse(prod)) == beta) ++hits;
        std::size_t i = 0;
        while (i < xs.size() && ++xs[i] == spec.q()) xs[i++] = 1;
        if (i == xs.size()) break;
    }
    return big_u(hits);
}

/// n_beta = q^{binom(n,2)-1} (prod_{j=2}^{n}(q^j-1) - (q-1)^{n-1} + q delta(n-1, q; beta)),
/// with delta taken from the enumeration oracle.
inline TraceDistribution trace_distribution_via_delta(unsigned n, const FieldSpec& spec) {
    GroupParams g(n, spec);
    const BigInt q = big_u(spec.q());
    const BigInt scale = pow(q, g.pair_count() - 1);
    const BigInt base = cyclotomic_product(n, spec) - pow(q - 1, n - 1);
    std::vector<BigInt> counts(spec.q());
    for (FieldElement b = 0; b < spec.q(); ++b) counts[b] = scale * (base + q * delta_count_oracle(n - 1, spec, b));
    return TraceDistribution{std::move(g), std::move(counts)};
}

struct GaussSumCheck {
    BigInt lhs;  // sum over g in SL(n,q) of psi(Tr g), by enumeration
    BigInt rhs;  // q^{binom(n,2)} K_{n-1}(psi; 1)
    bool ok() const { return lhs == rhs; }
};

/// Checks the SL(n,q) Gauss sum for psi(x) = lambda(c x), c != 0.
inline GaussSumCheck gauss_sum_check(unsigned n, const FieldSpec& spec, FieldElement c = 1) {
    if (c == 0 || !spec.contains(c)) throw domain_error("the character must be nontrivial");
    const auto dist = trace_distribution_oracle(n, spec);
    GaussSumCheck out;
    for (FieldElement b = 0; b < spec.q(); ++b) out.lhs += dist[b] * lambda(spec, mul(spec, c, b));
    // K_{n-1}(psi; 1) = K_{n-1}(lambda; c^n) after rescaling each variable by c.
    out.rhs = dist.params.gauss_factor() *
              big(kloosterman(spec, static_cast<int>(n) - 1, power(spec, c, n)));
    return out;
}

/// Binomial bases for SL(4, q): m_0 = n_0 and m_t, the common value of n_beta
/// over all beta != 0 with K(lambda; 1/beta) = t.
struct Sl4WeightParams {
    BigInt m0;
    std::map<std::int64_t, BigInt> mt;
    /// multiplicity of each admissible t among K(lambda; 1/beta), beta != 0
    std::map<std::int64_t, std::uint64_t> multiplicity;

    BigInt total_mass() const {
        BigInt s = m0;
        for (const auto& [t, m] : mt) {
            auto it = multiplicity.find(t);
            if (it != multiplicity.end()) s += m * big_u(it->second);
        }
        return s;
    }
};

inline Sl4WeightParams sl4_weight_params(const FieldSpec& spec) {
    if (spec.r() < 2) throw usage_error("SL(4,q) weight parameters need r >= 2");
    const BigInt q = big_u(spec.q());
    Sl4WeightParams out;
    out.m0 = pow(q, 5) * (cyclotomic_product(4, spec) + 1);
    const BigInt core = q * q * (q * q - 1) * (pow(q, 4) - q - 1);
    for (std::int64_t t : admissible_kloosterman_values(spec)) out.mt[t] = pow(q, 6) * (core + big(t * t));
    const auto k = kloosterman_table(spec, 1);
    for (FieldElement b = 1; b < spec.q(); ++b) ++out.multiplicity[k.at(inv(spec, b))];
    return out;
}

}  // namespace slmoment

#endif  // SLMOMENT_SL_GROUP_HPP
