#ifndef SLMOMENT_MOMENTS_HPP
#define SLMOMENT_MOMENTS_HPP

// Power moments MK_{n-1}^h = sum_{a != 0} K_{n-1}(lambda; a)^h, by four routes:
//
//  * the recursion obtained from the Pless power moment identity applied to
//    the dual of C(SL(n,q)), driven by the weight distribution C_0..C_h;
//  * brute force over the Kloosterman table (kloosterman.hpp);
//  * MK^h = q^2 M_{h-1} - (q-1)^{h-1} + 2(-1)^{h-1}, with M_h counted by a DP
//    over (sum x_j, sum 1/x_j) in F_q^2 (n = 2 only);
//  * closed forms for h <= 10 in terms of the power sums u_1..u_4 (n = 2 only).

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "slmoment/bigint.hpp"
#include "slmoment/field.hpp"
#include "slmoment/sl_group.hpp"
#include "slmoment/weight_dist.hpp"

namespace slmoment {

/// S(h, t) = (1/t!) sum_{j=0}^{t} (-1)^{t-j} binom(t, j) j^h; zero for t > h.
inline BigInt stirling2(unsigned h, unsigned t) {
    if (t > h) return 0;
    BigInt acc = 0;
    for (unsigned j = 0; j <= t; ++j) {
        BigInt term = binomial(t, j) * pow(big_u(j), h);
        if ((t - j) % 2 == 1) term = -term;
        acc += term;
    }
    return exact_div(acc, factorial(t), "Stirling sum by t!");
}

/// S(h, t) for 0 <= t <= h <= H.
inline std::vector<std::vector<BigInt>> stirling2_table(unsigned H) {
    std::vector<std::vector<BigInt>> s(H + 1);
    for (unsigned h = 0; h <= H; ++h) {
        s[h].resize(h + 1);
        for (unsigned t = 0; t <= h; ++t) s[h][t] = stirling2(h, t);
    }
    return s;
}

struct MomentTable {
    GroupParams params;
    unsigned H = 0;
    std::vector<BigInt> values;  // MK_{n-1}^0..MK_{n-1}^H

    const BigInt& operator[](unsigned h) const { return values.at(h); }
};

namespace detail {

// sum_{i=0}^{min(N,h)} (-1)^i C_i sum_{t=i}^{h} t! S(h,t) 2^{h-t} binom(N-i, N-t)
inline BigInt pless_weight_side(const WeightDistribution& wd, unsigned h,
                                const std::vector<std::vector<BigInt>>& stirling) {
    const BigInt& N = wd.params.order();
    const unsigned top = big_u(h) < N ? h : static_cast<unsigned>(to_u64(N));
    BigInt acc = 0;
    for (unsigned i = 0; i <= top; ++i) {
        BigInt inner = 0;
        for (unsigned t = i; t <= h; ++t) {
            const BigInt b = binomial(N - i, N - t);
            if (sgn(b) == 0) continue;
            inner += factorial(t) * stirling[h][t] * pow(BigInt(2), h - t) * b;
        }
        if (i % 2 == 1) inner = -inner;
        acc += wd[i] * inner;
    }
    return acc;
}

}  // namespace detail

/// MK_{n-1}^0..MK_{n-1}^H from the weight distribution of C(SL(n,q)):
///
///   q^{ch} MK^h = sum_{i<h} (-1)^{h+i+1} binom(h,i) N^{h-i} q^{ci} MK^i
///               + q sum_{i<=min(N,h)} (-1)^{h+i} C_i sum_{t=i}^{h} t! S(h,t) 2^{h-t} binom(N-i, N-t)
///
/// with c = binom(n,2) and MK^0 = q - 1. The division by q^{ch} is checked.
inline MomentTable recursive_moments(const WeightDistribution& wd, unsigned H) {
    const GroupParams& g = wd.params;
    if (big_u(wd.W) < g.order() && wd.W < H)
        throw usage_error("weight distribution truncated at " + std::to_string(wd.W) + " < requested order " +
                          std::to_string(H));
    const BigInt q = big_u(g.q());
    const BigInt& N = g.order();
    const BigInt qc = g.gauss_factor();
    const auto stirling = stirling2_table(H);

    std::vector<BigInt> mk(H + 1);
    mk[0] = q - 1;
    for (unsigned h = 1; h <= H; ++h) {
        BigInt rhs = 0;
        for (unsigned i = 0; i < h; ++i) {
            BigInt term = binomial(h, i) * pow(N, h - i) * pow(qc, i) * mk[i];
            if ((h + i + 1) % 2 == 1) term = -term;
            rhs += term;
        }
        BigInt weight_side = q * detail::pless_weight_side(wd, h, stirling);
        if (h % 2 == 1) weight_side = -weight_side;
        rhs += weight_side;
        mk[h] = exact_div(rhs, pow(qc, h), "moment recursion by q^{binom(n,2) h}");
    }
    return MomentTable{g, H, std::move(mk)};
}

/// Convenience: closed trace distribution -> direct DP -> recursion.
inline MomentTable recursive_moments(unsigned n, const FieldSpec& spec, unsigned H) {
    const auto dist = trace_distribution_closed(n, spec);
    const std::size_t W = big_u(H) < dist.params.order() ? H : static_cast<std::size_t>(to_u64(dist.params.order()));
    return recursive_moments(weight_distribution_direct(dist, W), H);
}

inline MomentTable brute_moments(unsigned n, const FieldSpec& spec, unsigned H) {
    GroupParams g(n, spec);
    const auto table = kloosterman_table(spec, static_cast<int>(n) - 1);
    std::vector<BigInt> mk(H + 1);
    for (unsigned h = 0; h <= H; ++h) mk[h] = moment_of(table, h);
    return MomentTable{std::move(g), H, std::move(mk)};
}

/// One row of the Pless identity for the dual code B = C^perp (dimension r):
/// sum_{a in F_q} w(c(a))^h against the weight-side sum. Both sides are
/// scaled by 2^h so that 2^{r-t} stays integral.
struct PlessRow {
    unsigned h = 0;
    BigInt lhs;
    BigInt rhs;
    bool ok() const { return lhs == rhs; }
};

inline std::vector<PlessRow> pless_lhs_check(unsigned n, const FieldSpec& spec, unsigned H) {
    const auto dist = trace_distribution_closed(n, spec);
    const auto dual = dual_weights_from_distribution(dist);
    const BigInt& N = dist.params.order();
    const std::size_t W = big_u(H) < N ? H : static_cast<std::size_t>(to_u64(N));
    const auto wd = weight_distribution_direct(dist, W);
    const auto stirling = stirling2_table(H);
    const BigInt q = big_u(spec.q());
    std::vector<PlessRow> rows;
    for (unsigned h = 0; h <= H; ++h) {
        PlessRow row{h, 0, 0};
        for (const auto& w : dual.weights) row.lhs += pow(w, h);  // 0^0 = 1 for a = 0
        row.lhs *= pow(BigInt(2), h);
        row.rhs = q * detail::pless_weight_side(wd, h, stirling);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Tuple counts over (F_q^*)^h:
///   A_h = #{ sum x_j = 0 = sum 1/x_j },  M_h = #{ sum x_j = 1 = sum 1/x_j } (M_0 = 0).
struct SalieCounts {
    FieldSpec spec;
    std::vector<BigInt> A;
    std::vector<BigInt> M;

    /// (q - 1) M_{h-1} = A_h for every h >= 1.
    bool consistent() const {
        const BigInt q1 = big_u(spec.q() - 1);
        for (std::size_t h = 1; h < A.size(); ++h)
            if (q1 * M[h - 1] != A[h]) return false;
        return true;
    }
};

inline SalieCounts salie_counts(const FieldSpec& spec, unsigned H) {
    const FieldTables t(spec);
    const FieldElement q = spec.q();
    // state index s * q + s' for (sum x_j, sum 1/x_j)
    std::vector<BigInt> state(std::size_t{q} * q);
    state[0] = 1;
    SalieCounts out{spec, {}, {}};
    out.A.push_back(1);
    out.M.push_back(0);
    for (unsigned h = 1; h <= H; ++h) {
        std::vector<BigInt> next(state.size());
        for (FieldElement s = 0; s < q; ++s) {
            for (FieldElement s2 = 0; s2 < q; ++s2) {
                const BigInt& c = state[std::size_t{s} * q + s2];
                if (sgn(c) == 0) continue;
                for (FieldElement x = 1; x < q; ++x) next[std::size_t{s ^ x} * q + (s2 ^ t.inverse(x))] += c;
            }
        }
        state = std::move(next);
        out.A.push_back(state[0]);
        out.M.push_back(q > 1 ? state[std::size_t{1} * q + 1] : BigInt(0));
    }
    return out;
}

/// MK^0..MK^H from MK^h = q^2 M_{h-1} - (q-1)^{h-1} + 2(-1)^{h-1}.
inline std::vector<BigInt> salie_moments(const SalieCounts& counts) {
    const BigInt q = big_u(counts.spec.q());
    std::vector<BigInt> mk(counts.M.size());
    mk[0] = q - 1;
    for (std::size_t h = 1; h < mk.size(); ++h) {
        const BigInt sign = (h - 1) % 2 == 0 ? 2 : -2;
        mk[h] = q * q * counts.M[h - 1] - pow(q - 1, static_cast<unsigned long>(h - 1)) + sign;
    }
    return mk;
}

// ---------------------------------------------------------------------------
// Closed forms for h <= 10.

/// Power-sum sequences u_1..u_4. Each u_k(r) is the r-th power sum of the
/// roots of a monic rational polynomial:
///   u_1: x^2 - x/2 + 1            roots (1 +- sqrt(-15))/4
///   u_2: x^2 + 5x/4 + 1           roots (-5 +- sqrt(-39))/8
///   u_3: x^4 + 3x^3/8 + x^2/16 + 3x/8 + 1
///                                 roots (-3 +- sqrt(505) +- sqrt(-510 -+ 6 sqrt(505)))/32
///   u_4: x^2 + 24x + 2048         roots -12 +- 4 sqrt(-119)
/// The coefficients were derived by expanding the elementary symmetric
/// functions of the listed roots; moisio_float_check re-validates them.
enum class USequence { u1, u2, u3, u4 };

/// Monic polynomial coefficients c_1..c_d of x^d + c_1 x^{d-1} + ... + c_d.
inline std::vector<Rational> u_sequence_polynomial(USequence which) {
    switch (which) {
        case USequence::u1: return {Rational(-1, 2), Rational(1)};
        case USequence::u2: return {Rational(5, 4), Rational(1)};
        case USequence::u3: return {Rational(3, 8), Rational(1, 16), Rational(3, 8), Rational(1)};
        case USequence::u4: return {Rational(24), Rational(2048)};
    }
    throw usage_error("unknown u-sequence");
}

/// p_1..p_count via Newton's identities:
///   p_k = -(c_1 p_{k-1} + ... + c_{k-1} p_1 + k c_k)   for k <= d,
///   p_k = -(c_1 p_{k-1} + ... + c_d p_{k-d})           for k > d.
inline std::vector<Rational> power_sums(const std::vector<Rational>& c, unsigned count) {
    const std::size_t d = c.size();
    std::vector<Rational> p(count + 1);
    p[0] = Rational(static_cast<long>(d));
    for (unsigned k = 1; k <= count; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= d && j < k; ++j) acc += c[j - 1] * p[k - j];
        if (k <= d) acc += Rational(static_cast<long>(k)) * c[k - 1];
        p[k] = -acc;
        p[k].canonicalize();
    }
    return p;
}

inline Rational u_value(USequence which, unsigned r) { return power_sums(u_sequence_polynomial(which), r)[r]; }

/// MK^h for q = 2^r and 1 <= h <= 10 from the closed forms.
inline BigInt moisio_closed_form(const FieldSpec& spec, unsigned h) {
    if (h < 1 || h > 10) throw usage_error("closed forms exist for 1 <= h <= 10, got h = " + std::to_string(h));
    const unsigned r = spec.r();
    const Rational q(big_u(spec.q()));
    const Rational s(r % 2 == 0 ? 1 : -1);
    const auto qp = [&](unsigned e) {
        Rational out = 1;
        for (unsigned i = 0; i < e; ++i) out *= q;
        return out;
    };
    Rational v;
    switch (h) {
        case 1: v = 1; break;
        case 2: v = q * q - q - 1; break;
        case 3: v = s * q * q + 2 * q + 1; break;
        case 4: v = 2 * qp(3) - 2 * q * q - 3 * q - 1; break;
        case 5: {
            const Rational u1 = u_value(USequence::u1, r);
            v = (u1 + 4 * s) * qp(3) + 5 * q * q + 4 * q + 1;
            break;
        }
        case 6: v = 5 * qp(4) - (5 + s) * qp(3) - 9 * q * q - 5 * q - 1; break;
        case 7: {
            const Rational u1 = u_value(USequence::u1, r), u2 = u_value(USequence::u2, r);
            v = (u2 + 6 * u1 + 14 * s + 1) * qp(4) + 14 * qp(3) + 14 * q * q + 6 * q + 1;
            break;
        }
        case 8: v = 14 * qp(5) - (15 + 7 * s) * qp(4) - 28 * qp(3) - 20 * q * q - 7 * q - 1; break;
        case 9: {
            const Rational u1 = u_value(USequence::u1, r), u2 = u_value(USequence::u2, r),
                           u3 = u_value(USequence::u3, r);
            v = (u3 + 8 * u2 + 27 * u1 + 8 + 48 * s) * qp(5) + 42 * qp(4) + 48 * qp(3) + 27 * q * q + 8 * q + 1;
            break;
        }
        case 10: {
            const Rational u4 = u_value(USequence::u4, r);
            v = 42 * qp(6) - (51 + 35 * s) * qp(5) - 90 * qp(4) - 75 * qp(3) - 35 * q * q - 9 * q - 1 - u4;
            break;
        }
        default: break;
    }
    v.canonicalize();
    if (v.get_den() != 1) throw invariant_violation("closed form for MK^" + std::to_string(h) + " is not an integer");
    return v.get_num();
}

/// Floating-point comparison of the exact u-sequences against the radical
/// expressions of their roots, for r = 1..max_r. For u_3 the inner radicands
/// -510 + sigma_1 6 sqrt(505) (paired with +sqrt(505)) and
/// -510 + sigma_2 6 sqrt(505) (paired with -sqrt(505)) are tried with every
/// sign choice; matches are reported per choice.
struct UFloatCheck {
    bool u1 = false, u2 = false, u4 = false;
    std::array<bool, 4> u3_choice{};  // index: (sigma_1 < 0) * 2 + (sigma_2 < 0)
    bool ok() const { return u1 && u2 && u4 && (u3_choice[0] || u3_choice[1] || u3_choice[2] || u3_choice[3]); }
};

inline UFloatCheck moisio_float_check(unsigned max_r = 12, long double tolerance = 1e-12L) {
    using C = std::complex<long double>;
    const auto close = [&](const C& z, const Rational& exact) {
        const long double e = exact.get_d();
        return std::abs(z.imag()) <= tolerance * std::max(1.0L, std::abs(e)) &&
               std::abs(z.real() - e) <= tolerance * std::max(1.0L, std::abs(e));
    };
    const auto sums = [&](const std::vector<C>& roots, unsigned r) {
        C acc = 0;
        for (const auto& z : roots) acc += std::pow(z, static_cast<int>(r));
        return acc;
    };
    const C i15 = std::sqrt(C(-15)), i39 = std::sqrt(C(-39)), i119 = std::sqrt(C(-119));
    const long double s505 = std::sqrt(505.0L);
    const std::vector<C> r1{(C(1) + i15) / C(4), (C(1) - i15) / C(4)};
    const std::vector<C> r2{(C(-5) + i39) / C(8), (C(-5) - i39) / C(8)};
    const std::vector<C> r4{C(-12) + C(4) * i119, C(-12) - C(4) * i119};

    UFloatCheck out{true, true, true, {true, true, true, true}};
    const auto p1 = power_sums(u_sequence_polynomial(USequence::u1), max_r);
    const auto p2 = power_sums(u_sequence_polynomial(USequence::u2), max_r);
    const auto p3 = power_sums(u_sequence_polynomial(USequence::u3), max_r);
    const auto p4 = power_sums(u_sequence_polynomial(USequence::u4), max_r);
    for (unsigned r = 1; r <= max_r; ++r) {
        out.u1 = out.u1 && close(sums(r1, r), p1[r]);
        out.u2 = out.u2 && close(sums(r2, r), p2[r]);
        // u_4 grows like 2048^{r/2}; compare relative to magnitude
        out.u4 = out.u4 && close(sums(r4, r), p4[r]);
        for (int choice = 0; choice < 4; ++choice) {
            const long double sigma1 = (choice & 2) ? -1 : 1, sigma2 = (choice & 1) ? -1 : 1;
            const C a = std::sqrt(C(-510 + sigma1 * 6 * s505)), b = std::sqrt(C(-510 + sigma2 * 6 * s505));
            const std::vector<C> roots{(C(-3 + s505) + a) / C(32), (C(-3 + s505) - a) / C(32),
                                       (C(-3 - s505) + b) / C(32), (C(-3 - s505) - b) / C(32)};
            out.u3_choice[choice] = out.u3_choice[choice] && close(sums(roots, r), p3[r]);
        }
    }
    return out;
}

}  // namespace slmoment

#endif  // SLMOMENT_MOMENTS_HPP
