#ifndef SLMOMENT_KLOOSTERMAN_HPP
#define SLMOMENT_KLOOSTERMAN_HPP

// m-dimensional Kloosterman sums over GF(2^r) with the canonical character:
//
//   K_m(a) = sum over (x_1..x_m) in (F_q^*)^m of lambda(x_1 + ... + x_m + a/(x_1...x_m))
//
// with K_0(a) = lambda(a). Two evaluation paths are kept: the memoized
// recursion K_m(a) = sum_x lambda(x) K_{m-1}(a/x), used everywhere, and the
// direct enumeration, used as an oracle.

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slmoment/bigint.hpp"
#include "slmoment/field.hpp"

namespace slmoment {

/// Work limit for the (q-1)^m direct enumeration.
inline constexpr std::uint64_t kDirectEnumerationGate = std::uint64_t{1} << 24;

/// K_m(lambda; a) for every a in F_q^*. Index 0 is unused and holds 0.
class KloostermanTable {
public:
    KloostermanTable(FieldSpec spec, int m, std::vector<std::int64_t> values)
        : spec_(spec), m_(m), values_(std::move(values)) {}

    const FieldSpec& spec() const { return spec_; }
    int m() const { return m_; }
    std::int64_t at(FieldElement a) const {
        if (a == 0 || !spec_.contains(a)) throw domain_error("Kloosterman sums are defined for a in F_q^*");
        return values_[a];
    }
    const std::vector<std::int64_t>& raw() const { return values_; }

    /// Multiset of values as value -> multiplicity.
    std::map<std::int64_t, std::uint64_t> histogram() const {
        std::map<std::int64_t, std::uint64_t> h;
        for (FieldElement a = 1; a < spec_.q(); ++a) ++h[values_[a]];
        return h;
    }

private:
    FieldSpec spec_;
    int m_;
    std::vector<std::int64_t> values_;
};

/// Full table of K_m over F_q^* via the memoized recursion, O(m q^2).
inline KloostermanTable kloosterman_table(const FieldSpec& spec, int m) {
    if (m < 0) throw usage_error("Kloosterman dimension must be nonnegative");
    const FieldTables t(spec);
    const FieldElement q = spec.q();
    std::vector<std::int64_t> cur(q, 0);
    for (FieldElement a = 1; a < q; ++a) cur[a] = t.character(a);
    std::vector<std::int64_t> next(q, 0);
    for (int level = 1; level <= m; ++level) {
        for (FieldElement a = 1; a < q; ++a) {
            std::int64_t acc = 0;
            for (FieldElement x = 1; x < q; ++x) acc += t.character(x) * cur[t.mul(a, t.inverse(x))];
            next[a] = acc;
        }
        std::swap(cur, next);
    }
    return KloostermanTable(spec, m, std::move(cur));
}

inline std::int64_t kloosterman(const FieldSpec& spec, int m, FieldElement a) {
    if (m < 0) throw usage_error("Kloosterman dimension must be nonnegative");
    if (a == 0 || !spec.contains(a)) throw domain_error("Kloosterman sums are defined for a in F_q^*");
    return kloosterman_table(spec, m).at(a);
}

/// Oracle: literal sum over (F_q^*)^m. Refuses when (q-1)^m exceeds the gate.
inline std::int64_t kloosterman_direct(const FieldSpec& spec, int m, FieldElement a) {
    if (m < 0) throw usage_error("Kloosterman dimension must be nonnegative");
    if (a == 0 || !spec.contains(a)) throw domain_error("Kloosterman sums are defined for a in F_q^*");
    const FieldTables t(spec);
    if (m == 0) return t.character(a);
    const std::uint64_t base = spec.q() - 1;
    std::uint64_t work = 1;
    for (int i = 0; i < m; ++i) {
        work *= base;
        if (work > kDirectEnumerationGate)
            throw usage_error("direct Kloosterman enumeration exceeds gate " + std::to_string(kDirectEnumerationGate));
    }
    std::vector<FieldElement> xs(static_cast<std::size_t>(m), 1);
    std::int64_t acc = 0;
    for (;;) {
        FieldElement sum = 0;
        FieldElement prod = 1;
        for (FieldElement x : xs) {
            sum ^= x;
            prod = t.mul(prod, x);
        }
        acc += t.character(sum ^ t.mul(a, t.inverse(prod)));
        std::size_t i = 0;
        while (i < xs.size() && ++xs[i] == spec.q()) xs[i++] = 1;
        if (i == xs.size()) break;
    }
    return acc;
}

/// K_2(a) through the square identity K_2(a) = K(a)^2 - q.
inline std::int64_t k2_via_square(const FieldSpec& spec, FieldElement a) {
    const std::int64_t k = kloosterman(spec, 1, a);
    return k * k - static_cast<std::int64_t>(spec.q());
}

/// sum over a in F_q^* of K_m(a)^h, exact.
inline BigInt moment_of(const KloostermanTable& table, unsigned h) {
    BigInt acc = 0;
    for (FieldElement a = 1; a < table.spec().q(); ++a) acc += pow(big(table.raw()[a]), h);
    return acc;
}

inline BigInt brute_moment(const FieldSpec& spec, int m, unsigned h) {
    return moment_of(kloosterman_table(spec, m), h);
}

/// Attained values of K(lambda; a) with multiplicities, and whether every
/// value lies in { t : |t| < 2 sqrt(q), t = -1 mod 4 }.
struct RangeReport {
    bool applicable = false;
    std::map<std::int64_t, std::uint64_t> histogram;
    bool within_bound = true;
    bool congruent = true;
    std::uint64_t total = 0;

    bool ok() const { return applicable && within_bound && congruent; }
};

/// Admissible value set for r >= 2: integers t with t^2 < 4q and t = -1 mod 4.
inline std::vector<std::int64_t> admissible_kloosterman_values(const FieldSpec& spec) {
    const auto q = static_cast<std::int64_t>(spec.q());
    std::vector<std::int64_t> out;
    for (std::int64_t t = -2 * q; t <= 2 * q; ++t) {
        if (t * t < 4 * q && ((t % 4) + 4) % 4 == 3) out.push_back(t);
    }
    return out;
}

inline RangeReport range_report(const FieldSpec& spec) {
    RangeReport rep;
    if (spec.r() < 2) return rep;
    rep.applicable = true;
    rep.histogram = kloosterman_table(spec, 1).histogram();
    const auto q = static_cast<std::int64_t>(spec.q());
    for (const auto& [t, count] : rep.histogram) {
        rep.total += count;
        if (t * t >= 4 * q) rep.within_bound = false;
        if (((t % 4) + 4) % 4 != 3) rep.congruent = false;
    }
    return rep;
}

}  // namespace slmoment

#endif  // SLMOMENT_KLOOSTERMAN_HPP
