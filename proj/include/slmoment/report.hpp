#ifndef SLMOMENT_REPORT_HPP
#define SLMOMENT_REPORT_HPP

// Serialization of results (JSON with fixed key order, CSV mirrors) and the
// verification suite behind `slmoment verify-all`. Big integers are always
// written as decimal strings.

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "slmoment/bigint.hpp"
#include "slmoment/field.hpp"
#include "slmoment/kloosterman.hpp"
#include "slmoment/moments.hpp"
#include "slmoment/sl_group.hpp"
#include "slmoment/tables.hpp"
#include "slmoment/weight_dist.hpp"

namespace slmoment::report {

using Json = nlohmann::ordered_json;

/// Parses "0b1011", "0x13" or decimal.
inline std::uint64_t parse_poly(const std::string& text) {
    std::size_t pos = 0;
    std::uint64_t value = 0;
    try {
        if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B'))
            value = std::stoull(text.substr(2), &pos, 2), pos += 2;
        else
            value = std::stoull(text, &pos, 0);
    } catch (const std::exception&) {
        throw usage_error("cannot parse polynomial '" + text + "'");
    }
    if (pos != text.size()) throw usage_error("cannot parse polynomial '" + text + "'");
    return value;
}

inline std::string poly_string(std::uint64_t poly) {
    std::string bits;
    for (int i = detail::poly_degree(poly); i >= 0; --i) bits.push_back((poly >> i) & 1u ? '1' : '0');
    return "0b" + bits;
}

inline FieldSpec make_field(unsigned r, std::optional<std::uint64_t> poly) {
    return poly ? FieldSpec(r, *poly) : FieldSpec(r);
}

inline Json decimal_array(const std::vector<BigInt>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_decimal(v));
    return out;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Two-column CSV "<index_name>,value" with one row per entry.
inline std::string indexed_csv(const std::string& index_name, const std::vector<BigInt>& values) {
    std::ostringstream out;
    out << index_name << ",value\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << to_decimal(values[i]) << '\n';
    return out.str();
}

// --- field -----------------------------------------------------------------

inline std::string field_csv(const FieldSpec& spec) {
    if (spec.r() > 4) throw usage_error("field tables are printed for r <= 4 only");
    std::ostringstream out;
    out << "# GF(" << spec.q() << ") reduction polynomial " << poly_string(spec.reduction_poly()) << "\n";
    out << "mul";
    for (FieldElement b = 0; b < spec.q(); ++b) out << ',' << b;
    out << '\n';
    for (FieldElement a = 0; a < spec.q(); ++a) {
        out << a;
        for (FieldElement b = 0; b < spec.q(); ++b) out << ',' << mul(spec, a, b);
        out << '\n';
    }
    out << "\na,trace,lambda\n";
    for (FieldElement a = 0; a < spec.q(); ++a) out << a << ',' << trace(spec, a) << ',' << lambda(spec, a) << '\n';
    return out.str();
}

// --- ksum ------------------------------------------------------------------

inline Json ksum_json(const FieldSpec& spec, int m) {
    const auto table = kloosterman_table(spec, m);
    Json values = Json::array();
    for (FieldElement a = 1; a < spec.q(); ++a) values.push_back(Json{{"a", a}, {"k", table.at(a)}});
    Json histogram = Json::array();
    for (const auto& [t, count] : table.histogram()) histogram.push_back(Json{{"value", t}, {"count", count}});
    return Json{{"q", spec.q()},
                {"r", spec.r()},
                {"poly", poly_string(spec.reduction_poly())},
                {"m", m},
                {"values", values},
                {"histogram", histogram}};
}

// --- tracedist -------------------------------------------------------------

inline Json tracedist_json(const TraceDistribution& dist) {
    Json counts = Json::array();
    for (FieldElement b = 0; b < dist.counts.size(); ++b)
        counts.push_back(Json{{"beta", b}, {"n_beta", to_decimal(dist[b])}});
    return Json{{"n", dist.params.n()}, {"q", dist.params.q()}, {"N", to_decimal(dist.params.order())}, {"counts", counts}};
}

inline std::string tracedist_csv(const TraceDistribution& dist) {
    std::ostringstream out;
    out << "beta,n_beta\n";
    for (FieldElement b = 0; b < dist.counts.size(); ++b) out << b << ',' << to_decimal(dist[b]) << '\n';
    return out.str();
}

// --- weights ---------------------------------------------------------------

enum class WeightAlgorithm { direct, macwilliams, both };

struct WeightsResult {
    WeightDistribution distribution;
    bool agreed = true;  // only meaningful for `both`
};

inline std::size_t default_weight_bound(const GroupParams& g, unsigned max_h = 0) {
    const std::size_t want = std::max<std::size_t>(max_h, 32);
    return big_u(want) < g.order() ? want : static_cast<std::size_t>(to_u64(g.order()));
}

inline WeightsResult compute_weights(unsigned n, const FieldSpec& spec, std::size_t W, WeightAlgorithm algorithm) {
    const auto direct = [&] { return weight_distribution_direct(trace_distribution_closed(n, spec), W); };
    const auto macwilliams = [&] { return weight_distribution_macwilliams(dual_weights(n, spec), W); };
    switch (algorithm) {
        case WeightAlgorithm::direct: return {direct(), true};
        case WeightAlgorithm::macwilliams: return {macwilliams(), true};
        case WeightAlgorithm::both: {
            auto a = direct();
            const bool same = a == macwilliams();
            return {std::move(a), same};
        }
    }
    throw usage_error("unknown algorithm");
}

inline Json weights_json(const WeightDistribution& wd) {
    return Json{{"n", wd.params.n()},
                {"q", wd.params.q()},
                {"N", to_decimal(wd.params.order())},
                {"W", wd.W},
                {"counts", decimal_array(wd.counts)}};
}

inline std::string weights_csv(const WeightDistribution& wd) {
    std::ostringstream out;
    out << "w,frequency\n";
    for (std::size_t i = 0; i <= wd.W; ++i) out << i << ',' << to_decimal(wd[i]) << '\n';
    return out.str();
}

// --- moments ---------------------------------------------------------------

enum class MomentMethod { recursion, brute, salie, moisio, all };

struct MomentsResult {
    unsigned n = 2;
    std::uint32_t q = 0;
    unsigned H = 0;
    std::vector<BigInt> values;
    std::vector<std::pair<std::string, std::string>> cross_checks;  // name -> pass | fail | n/a

    bool ok() const {
        for (const auto& [name, status] : cross_checks)
            if (status == "fail") return false;
        return true;
    }
};

inline std::vector<BigInt> salie_route(const FieldSpec& spec, unsigned H) {
    const auto counts = salie_counts(spec, H);
    if (!counts.consistent()) throw invariant_violation("(q-1) M_{h-1} != A_h");
    return salie_moments(counts);
}

inline std::vector<BigInt> moisio_route(const FieldSpec& spec, unsigned H) {
    if (H > 10) throw usage_error("closed forms exist only up to h = 10");
    std::vector<BigInt> mk{big_u(spec.q() - 1)};
    for (unsigned h = 1; h <= H; ++h) mk.push_back(moisio_closed_form(spec, h));
    return mk;
}

inline MomentsResult compute_moments(unsigned n, const FieldSpec& spec, unsigned H, MomentMethod method) {
    MomentsResult out{n, spec.q(), H, {}, {}};
    const auto recursion = [&] {
        const auto dist = trace_distribution_closed(n, spec);
        const auto wd = weight_distribution_direct(dist, default_weight_bound(dist.params, H));
        return recursive_moments(wd, H).values;
    };
    const auto needs_sl2 = [&](const char* what) {
        if (n != 2) throw usage_error(std::string(what) + " route exists only for n = 2");
    };
    switch (method) {
        case MomentMethod::recursion: out.values = recursion(); break;
        case MomentMethod::brute: out.values = brute_moments(n, spec, H).values; break;
        case MomentMethod::salie:
            needs_sl2("salie");
            out.values = salie_route(spec, H);
            break;
        case MomentMethod::moisio:
            needs_sl2("moisio");
            out.values = moisio_route(spec, H);
            break;
        case MomentMethod::all: {
            out.values = recursion();
            const auto status = [](bool pass) { return std::string(pass ? "pass" : "fail"); };
            out.cross_checks.emplace_back("brute", status(brute_moments(n, spec, H).values == out.values));
            if (n == 2) {
                out.cross_checks.emplace_back("salie", status(salie_route(spec, H) == out.values));
                const unsigned top = std::min(H, 10u);
                const auto closed = moisio_route(spec, top);
                out.cross_checks.emplace_back(
                    "moisio", status(std::equal(closed.begin(), closed.end(), out.values.begin())));
            } else {
                out.cross_checks.emplace_back("salie", "n/a");
                out.cross_checks.emplace_back("moisio", "n/a");
            }
            break;
        }
    }
    return out;
}

inline Json moments_json(const MomentsResult& m) {
    Json checks = Json::object();
    for (const auto& [name, status] : m.cross_checks) checks[name] = status;
    return Json{{"n", m.n}, {"q", m.q}, {"H", m.H}, {"values", decimal_array(m.values)}, {"cross_checks", checks}};
}

// --- table -----------------------------------------------------------------

inline Json table_json(TableId id, const std::vector<BigInt>& rows) {
    return Json{{"table", std::string(table_name(id))},
                {"n", 2},
                {"q", 1u << table_degree(id)},
                {"kind", is_weight_table(id) ? "weight_distribution" : "power_moments"},
                {"values", decimal_array(rows)}};
}

inline std::string table_csv(TableId id, const std::vector<BigInt>& rows) {
    return indexed_csv(is_weight_table(id) ? "w" : "h", rows);
}

// --- verify-all ------------------------------------------------------------

using Outcome = std::pair<bool, std::string>;

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyConfig {
    unsigned n = 2;
    unsigned r = 3;
    std::optional<std::uint64_t> poly;
    unsigned max_h = 12;
};

namespace detail {

inline std::vector<BigInt> decimal_values(const std::vector<std::string_view>& rows) {
    std::vector<BigInt> out;
    for (auto s : rows) out.emplace_back(std::string(s));
    return out;
}

inline Check run_check(std::string name, const std::function<Outcome()>& body) {
    try {
        auto [pass, detail] = body();
        return {std::move(name), pass, std::move(detail)};
    } catch (const std::exception& e) {
        return {std::move(name), false, std::string("exception: ") + e.what()};
    }
}

inline Outcome compare_rows(const std::vector<BigInt>& got, const std::vector<BigInt>& want) {
    std::size_t equal = 0;
    for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) equal += got[i] == want[i];
    const bool pass = got.size() == want.size() && equal == want.size();
    return {pass, std::to_string(equal) + "/" + std::to_string(want.size()) + " rows equal"};
}

}  // namespace detail

/// The fixed suite (reference tables and every cross-check on the standard
/// instances) followed by checks for the configured instance.
inline std::vector<Check> verify_all(const VerifyConfig& config) {
    // Config errors surface before any check runs.
    const FieldSpec spec = make_field(config.r, config.poly);
    const GroupParams params(config.n, spec);

    std::vector<Check> checks;
    const auto add = [&](std::string name, const std::function<Outcome()>& body) {
        checks.push_back(detail::run_check(std::move(name), body));
    };

    for (TableId id : {TableId::I, TableId::II, TableId::III, TableId::IV}) {
        add("table-" + std::string(table_name(id)), [id] {
            return detail::compare_rows(compute_table(id), detail::decimal_values(reference_table(id)));
        });
    }
    add("recursion-vs-brute-n2", [] {
        for (unsigned r = 1; r <= 4; ++r)
            if (recursive_moments(2, FieldSpec(r), 12).values != brute_moments(2, FieldSpec(r), 12).values)
                return Outcome{false, "mismatch at q=" + std::to_string(1u << r)};
        return Outcome{true, std::string("q in {2,4,8,16}, h <= 12")};
    });
    add("recursion-vs-brute-n4-q2", [] {
        const bool pass = recursive_moments(4, FieldSpec(1), 8).values == brute_moments(4, FieldSpec(1), 8).values;
        return Outcome{pass, std::string("h <= 8")};
    });
    add("weight-algorithms-agree", [] {
        for (unsigned r : {2u, 3u, 4u}) {
            const FieldSpec f(r);
            const auto dist = trace_distribution_closed(2, f);
            const std::size_t W = r == 4 ? 32 : static_cast<std::size_t>(to_u64(dist.params.order()));
            const auto direct = weight_distribution_direct(dist, W);
            if (weight_distribution_macwilliams(dual_weights(2, f), W) != direct ||
                weight_distribution_sl2_form(f, W) != direct)
                return Outcome{false, "disagreement at q=" + std::to_string(f.q())};
        }
        return Outcome{true, std::string("full for q in {4,8}, W=32 for q=16")};
    });
    add("full-distribution-structure", [] {
        for (unsigned r : {2u, 3u, 4u}) {
            const auto dist = trace_distribution_closed(2, FieldSpec(r));
            const auto wd = weight_distribution_direct(dist, static_cast<std::size_t>(to_u64(dist.params.order())));
            if (!check_full_distribution(wd, dist[0]).ok())
                return Outcome{false, "structure violated at q=" + std::to_string(1u << r)};
        }
        return Outcome{true, std::string("C_0=1, C_1=n_0, C_i=C_{N-i}, sum=2^{N-r}")};
    });
    const std::vector<std::pair<unsigned, unsigned>> small_groups{{2, 2}, {2, 3}, {2, 4}, {4, 1}};
    add("trace-distribution-oracle", [&] {
        for (auto [n, r] : small_groups)
            if (trace_distribution_oracle(n, FieldSpec(r)) != trace_distribution_closed(n, FieldSpec(r)))
                return Outcome{false, "SL(" + std::to_string(n) + "," + std::to_string(1u << r) + ")"};
        return Outcome{true, std::string("SL(2,4), SL(2,8), SL(2,16), SL(4,2)")};
    });
    add("gauss-sum", [&] {
        for (auto [n, r] : small_groups)
            if (!gauss_sum_check(n, FieldSpec(r)).ok())
                return Outcome{false, "SL(" + std::to_string(n) + "," + std::to_string(1u << r) + ")"};
        return Outcome{true, std::string("SL(2,4), SL(2,8), SL(2,16), SL(4,2)")};
    });
    add("salie-and-closed-forms", [] {
        for (unsigned r : {2u, 3u, 4u}) {
            const FieldSpec f(r);
            const auto rec = recursive_moments(2, f, 12).values;
            const auto closed = moisio_route(f, 10);
            if (salie_route(f, 12) != rec || !std::equal(closed.begin(), closed.end(), rec.begin()))
                return Outcome{false, "mismatch at q=" + std::to_string(f.q())};
        }
        return Outcome{moisio_float_check().ok(), std::string("q in {4,8,16}; u-sequences checked in floating point")};
    });
    add("square-identity-and-range", [] {
        for (unsigned r : {2u, 3u, 4u}) {
            const FieldSpec f(r);
            const auto k2 = kloosterman_table(f, 2);
            for (FieldElement a = 1; a < f.q(); ++a)
                if (k2_via_square(f, a) != k2.at(a)) return Outcome{false, "K_2 != K^2 - q"};
            if (!range_report(f).ok()) return Outcome{false, "range violated at q=" + std::to_string(f.q())};
        }
        return Outcome{true, std::string("q in {4,8,16}")};
    });
    add("polynomial-independence", [] {
        const FieldSpec a(4, 0b10011), b(4, 0b11001);
        const bool weights = compute_table(TableId::III, a) == compute_table(TableId::III, b);
        const bool moments = compute_table(TableId::IV, a) == compute_table(TableId::IV, b);
        return Outcome{weights && moments, std::string("x^4+x+1 vs x^4+x^3+1")};
    });

    // Configured instance.
    const std::string tag = "[n=" + std::to_string(config.n) + ",q=" + std::to_string(spec.q()) + "]";
    add("instance-trace-distribution" + tag, [&] {
        const auto d = trace_distribution_closed(config.n, spec);
        const bool pass = d.total() == d.params.order() && d.weighted_sum() == 0 && d.all_positive();
        return Outcome{pass, std::string("sum = N, sum n_beta beta = 0, all positive")};
    });
    add("instance-dual-weights" + tag, [&] {
        const bool pass = dual_weights(config.n, spec).weights ==
                          dual_weights_from_distribution(trace_distribution_closed(config.n, spec)).weights;
        return Outcome{pass, std::string("closed form vs coordinate count")};
    });
    add("instance-pless" + tag, [&] {
        for (const auto& row : pless_lhs_check(config.n, spec, config.max_h))
            if (!row.ok()) return Outcome{false, "h=" + std::to_string(row.h)};
        return Outcome{true, "h <= " + std::to_string(config.max_h)};
    });
    add("instance-recursion-vs-brute" + tag, [&] {
        return detail::compare_rows(compute_moments(config.n, spec, config.max_h, MomentMethod::recursion).values,
                                    brute_moments(config.n, spec, config.max_h).values);
    });
    if (config.n == 2 && !config.poly && (config.r == 3 || config.r == 4)) {
        const TableId id = config.r == 3 ? TableId::II : TableId::IV;
        const auto reference = detail::decimal_values(reference_table(id));
        const unsigned H = std::min<unsigned>(config.max_h, static_cast<unsigned>(reference.size() - 1));
        add("instance-table-" + std::string(table_name(id)) + tag, [&, H] {
            const auto got = compute_moments(2, spec, H, MomentMethod::recursion).values;
            return detail::compare_rows(got, std::vector<BigInt>(reference.begin(), reference.begin() + H + 1));
        });
    }
    return checks;
}

inline Json verify_json(const VerifyConfig& config, const std::vector<Check>& checks) {
    Json list = Json::array();
    std::size_t passed = 0;
    for (const auto& c : checks) {
        passed += c.pass;
        list.push_back(Json{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
    }
    Json cfg{{"n", config.n}, {"r", config.r}, {"max_h", config.max_h}};
    cfg["poly"] = config.poly ? Json(poly_string(*config.poly)) : Json(nullptr);
    return Json{{"config", cfg},
                {"checks", list},
                {"passed", passed},
                {"failed", checks.size() - passed},
                {"ok", passed == checks.size()}};
}

}  // namespace slmoment::report

#endif  // SLMOMENT_REPORT_HPP
