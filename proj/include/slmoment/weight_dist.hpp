#ifndef SLMOMENT_WEIGHT_DIST_HPP
#define SLMOMENT_WEIGHT_DIST_HPP

// Weight distribution of the binary code C(SL(n,q)) = { u in F_2^N : sum u_j Tr(g_j) = 0 }
// and of its dual { c(a) = (tr(a Tr(g_j)))_j : a in F_q }.
//
// Three independent routes to C_0..C_W:
//   direct        sum over {nu_beta} of prod binom(n_beta, nu_beta) subject to
//                 sum nu_beta = i and sum nu_beta * beta = 0. In characteristic 2
//                 the second constraint only sees nu_beta mod 2, so the sum is a
//                 DP over q slots (the additive group of F_q) where each beta
//                 contributes the even part of (1+x)^{n_beta} in place and the
//                 odd part XOR-shifted by beta.
//   macwilliams   (1/q) sum_a (1+x)^{N - w(c(a))} (1-x)^{w(c(a))} from the dual weights.
//   sl2 form      n = 2 only; class sizes q^2, q^2+q, q^2-q read off tr(1/beta),
//                 folded with a sum/difference butterfly instead of the slot shift.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "slmoment/bigint.hpp"
#include "slmoment/field.hpp"
#include "slmoment/kloosterman.hpp"
#include "slmoment/polynomial.hpp"
#include "slmoment/sl_group.hpp"

namespace slmoment {

/// Hamming weights w(c(a)) of the q dual codewords, indexed by a.
struct DualWeights {
    GroupParams params;
    std::vector<BigInt> weights;

    const BigInt& operator[](FieldElement a) const { return weights.at(a); }

    /// weight -> number of a in F_q with that weight (a = 0 included).
    std::map<BigInt, std::uint64_t> histogram() const {
        std::map<BigInt, std::uint64_t> h;
        for (const auto& w : weights) ++h[w];
        return h;
    }
};

/// w(c(a)) = (N - q^{binom(n,2)} K_{n-1}(lambda; a)) / 2, and w(c(0)) = 0.
inline DualWeights dual_weights(unsigned n, const FieldSpec& spec) {
    GroupParams g(n, spec);
    const auto k = kloosterman_table(spec, static_cast<int>(n) - 1);
    const BigInt factor = g.gauss_factor();
    std::vector<BigInt> w(spec.q());
    w[0] = 0;
    for (FieldElement a = 1; a < spec.q(); ++a)
        w[a] = exact_div(g.order() - factor * big(k.at(a)), 2, "dual weight (N - q^c K) / 2");
    return DualWeights{std::move(g), std::move(w)};
}

/// w(c(a)) counted from the trace distribution: sum of n_beta over tr(a beta) = 1.
inline DualWeights dual_weights_from_distribution(const TraceDistribution& dist) {
    const FieldSpec& f = dist.params.spec();
    std::vector<BigInt> w(f.q());
    for (FieldElement a = 0; a < f.q(); ++a)
        for (FieldElement b = 0; b < f.q(); ++b)
            if (trace(f, mul(f, a, b)) == 1) w[a] += dist[b];
    return DualWeights{dist.params, std::move(w)};
}

struct WeightDistribution {
    GroupParams params;
    std::size_t W = 0;          // highest weight present in counts
    std::vector<BigInt> counts;  // C_0..C_W
    bool full = false;           // W == N

    const BigInt& operator[](std::size_t i) const { return counts.at(i); }

    friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) {
        return a.W == b.W && a.counts == b.counts;
    }
};

namespace detail {

inline std::size_t checked_bound(const GroupParams& g, std::size_t W) {
    if (big_u(W) > g.order())
        throw usage_error("weight bound " + std::to_string(W) + " exceeds code length " + to_decimal(g.order()));
    return W;
}

inline WeightDistribution finish(const GroupParams& g, std::size_t W, Poly poly) {
    poly.resize(W + 1);
    WeightDistribution out{g, W, std::move(poly), big_u(W) == g.order()};
    return out;
}

// Even and odd parts of (1+x)^n: E = ((1+x)^n + (1-x)^n)/2, O = ((1+x)^n - (1-x)^n)/2.
inline std::pair<Poly, Poly> parity_split(std::uint64_t n, std::size_t W) {
    const Poly plus = binomial_row(n, W);
    Poly even(plus.size()), odd(plus.size());
    for (std::size_t k = 0; k < plus.size(); ++k) {
        const BigInt minus = (k % 2 == 0) ? plus[k] : BigInt(-plus[k]);
        even[k] = exact_div(plus[k] + minus, 2, "even part of (1+x)^n");
        odd[k] = exact_div(plus[k] - minus, 2, "odd part of (1+x)^n");
    }
    trim(even);
    trim(odd);
    return {std::move(even), std::move(odd)};
}

}  // namespace detail

/// C_0..C_W via the parity-tracking XOR dynamic program.
inline WeightDistribution weight_distribution_direct(const TraceDistribution& dist, std::size_t W) {
    const GroupParams& g = dist.params;
    detail::checked_bound(g, W);
    const FieldElement q = g.q();
    std::vector<Poly> slots(q);
    slots[0] = Poly{1};
    for (FieldElement beta = 0; beta < q; ++beta) {
        const auto [even, odd] = detail::parity_split(to_u64(dist[beta]), W);
        std::vector<Poly> next(q);
        for (FieldElement s = 0; s < q; ++s) {
            if (slots[s].empty()) continue;
            auto [stay, move] = multiply_pair_nonnegative(slots[s], even, odd, W);
            add_into(next[s], stay);
            add_into(next[s ^ beta], move);
        }
        slots = std::move(next);
    }
    return detail::finish(g, W, std::move(slots[0]));
}

/// (1+x)^{N-w} (1-x)^w up to degree W, via the Krawtchouk three-term recurrence
/// (i+1) p_{i+1} = (N - 2w) p_i - (N - i + 1) p_{i-1}.
inline Poly krawtchouk_row(const BigInt& N, const BigInt& w, std::size_t W) {
    Poly p(W + 1);
    p[0] = 1;
    if (W >= 1) p[1] = N - 2 * w;
    for (std::size_t i = 1; i < W; ++i) {
        const BigInt num = (N - 2 * w) * p[i] - (N - big_u(i) + 1) * p[i - 1];
        p[i + 1] = exact_div(num, big_u(i + 1), "Krawtchouk recurrence");
    }
    return p;
}

/// C_0..C_W = (1/q) sum_a [x^i] (1+x)^{N-w_a} (1-x)^{w_a}.
inline WeightDistribution weight_distribution_macwilliams(const DualWeights& dw, std::size_t W) {
    const GroupParams& g = dw.params;
    detail::checked_bound(g, W);
    Poly acc(W + 1);
    for (const auto& [w, mult] : dw.histogram()) {
        const Poly row = krawtchouk_row(g.order(), w, W);
        const BigInt m = big_u(mult);
        for (std::size_t i = 0; i <= W; ++i) acc[i] += m * row[i];
    }
    const BigInt q = big_u(g.q());
    for (auto& c : acc) c = exact_div(c, q, "MacWilliams transform by q");
    return detail::finish(g, W, std::move(acc));
}

/// C_0..C_W for SL(2,q) with class sizes q^2 (beta = 0), q^2+q (tr(1/beta) = 0)
/// and q^2-q (tr(1/beta) = 1).
inline WeightDistribution weight_distribution_sl2_form(const FieldSpec& spec, std::size_t W) {
    GroupParams g(2, spec);
    detail::checked_bound(g, W);
    const FieldElement q = spec.q();
    const std::uint64_t qq = std::uint64_t{q} * q;

    std::vector<Poly> slots(q);
    slots[0] = binomial_row(qq, W);  // beta = 0 never moves the slot
    for (FieldElement beta = 1; beta < q; ++beta) {
        const std::uint64_t size = trace(spec, inv(spec, beta)) == 0 ? qq + q : qq - q;
        const Poly plus = binomial_row(size, W);
        Poly minus = plus;
        for (std::size_t k = 1; k < minus.size(); k += 2) minus[k] = -minus[k];
        std::vector<Poly> next(q);
        for (FieldElement s = 0; s < q; ++s) {
            const FieldElement t = s ^ beta;
            if (t < s) continue;
            Poly sum = slots[s], diff = slots[s];
            add_into(sum, slots[t]);
            Poly neg = slots[t];
            for (auto& c : neg) c = -c;
            add_into(diff, neg);
            const Poly a = multiply(sum, plus, W);
            const Poly b = multiply(diff, minus, W);
            const std::size_t len = std::max(a.size(), b.size());
            next[s].resize(len);
            next[t].resize(len);
            for (std::size_t i = 0; i < len; ++i) {
                next[s][i] = exact_div(coeff(a, i) + coeff(b, i), 2, "butterfly sum");
                next[t][i] = exact_div(coeff(a, i) - coeff(b, i), 2, "butterfly difference");
            }
            trim(next[s]);
            trim(next[t]);
        }
        slots = std::move(next);
    }
    return detail::finish(g, W, std::move(slots[0]));
}

/// Literal enumeration of the compositions {nu_beta}; q <= 4 and W <= 6 only.
inline WeightDistribution weight_distribution_compositions(const TraceDistribution& dist, std::size_t W) {
    const GroupParams& g = dist.params;
    detail::checked_bound(g, W);
    if (g.q() > 4 || W > 6) throw usage_error("composition enumeration is limited to q <= 4 and W <= 6");
    const FieldElement q = g.q();
    std::vector<BigInt> counts(W + 1);
    std::vector<std::size_t> nu(q, 0);
    // Recursive walk over nu_0..nu_{q-1} with running total and F_q sum.
    auto walk = [&](auto&& self, FieldElement beta, std::size_t used, FieldElement sum, const BigInt& ways) -> void {
        if (beta == q) {
            if (sum == 0) counts[used] += ways;
            return;
        }
        for (std::size_t k = 0; used + k <= W; ++k) {
            const BigInt b = binomial(dist[beta], big_u(k));
            if (sgn(b) == 0) break;
            self(self, beta + 1, used + k, (k % 2 == 1) ? (sum ^ beta) : sum, ways * b);
        }
    };
    walk(walk, 0, 0, 0, BigInt(1));
    return detail::finish(g, W, std::move(counts));
}

/// Brute force over all 2^N binary words for tiny codes (N <= 24). The
/// coordinates are the group elements in the given order.
inline std::vector<std::uint64_t> weight_distribution_codewords(const FieldSpec& spec,
                                                                const std::vector<FieldElement>& coordinate_traces) {
    const std::size_t N = coordinate_traces.size();
    if (N > 24) throw usage_error("codeword enumeration is limited to N <= 24");
    (void)spec;
    std::vector<std::uint64_t> counts(N + 1, 0);
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << N); ++u) {
        FieldElement dot = 0;
        for (std::size_t j = 0; j < N; ++j)
            if ((u >> j) & 1u) dot ^= coordinate_traces[j];
        if (dot == 0) ++counts[static_cast<std::size_t>(std::popcount(u))];
    }
    return counts;
}

/// Traces Tr(g_1), ..., Tr(g_N) in lexicographic matrix order.
inline std::vector<FieldElement> coordinate_traces(unsigned n, const FieldSpec& spec) {
    std::vector<FieldElement> out;
    for_each_sl_element(n, spec, [&](const std::vector<FieldElement>& m) { out.push_back(matrix_trace(m, n)); });
    return out;
}

/// Structural checks on a full distribution: C_0 = 1, C_1 = n_0, symmetry and
/// total 2^{N - r}.
struct FullDistributionReport {
    bool c0_is_one = false;
    bool c1_is_n0 = false;
    bool symmetric = false;
    bool total_matches = false;
    bool ok() const { return c0_is_one && c1_is_n0 && symmetric && total_matches; }
};

inline FullDistributionReport check_full_distribution(const WeightDistribution& wd, const BigInt& n0) {
    if (!wd.full) throw usage_error("structural checks need the full distribution");
    FullDistributionReport rep;
    const std::size_t N = wd.W;
    rep.c0_is_one = wd[0] == 1;
    rep.c1_is_n0 = N >= 1 && wd[1] == n0;
    rep.symmetric = true;
    for (std::size_t i = 0; i <= N; ++i)
        if (wd[i] != wd[N - i]) rep.symmetric = false;
    BigInt total = 0;
    for (const auto& c : wd.counts) total += c;
    BigInt expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), 2, N - wd.params.spec().r());
    rep.total_matches = total == expect;
    return rep;
}

}  // namespace slmoment

#endif  // SLMOMENT_WEIGHT_DIST_HPP
