// slmoment: command-line front end.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "slmoment/report.hpp"

namespace {

using namespace slmoment;
namespace rep = slmoment::report;

struct Common {
    unsigned n = 2;
    unsigned r = 3;
    std::string poly;
    std::string format = "json";
    std::string output;

    std::optional<std::uint64_t> poly_value() const {
        if (poly.empty()) return std::nullopt;
        return rep::parse_poly(poly);
    }
    FieldSpec field() const { return rep::make_field(r, poly_value()); }
};

void add_field_options(CLI::App* cmd, Common& c) {
    cmd->add_option("--r", c.r, "Field degree, q = 2^r")->check(CLI::Range(1u, static_cast<unsigned>(kMaxDegree)));
    cmd->add_option("--poly", c.poly, "Reduction polynomial (0b..., 0x... or decimal)");
}

void add_output_options(CLI::App* cmd, Common& c, bool csv) {
    if (csv) cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", c.output, "Write to this file instead of stdout");
}

void emit(const Common& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out) throw usage_error("cannot open '" + c.output + "' for writing");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weight distributions of SL(n,2^r) codes and Kloosterman power moments"};
    app.require_subcommand(1);

    Common c;
    int m = 1;
    bool oracle = false;
    std::size_t max_weight = 0;
    unsigned max_h = 12;
    std::string algorithm = "direct";
    std::string method = "recursion";
    std::string table;

    auto* field = app.add_subcommand("field", "Multiplication and trace tables (r <= 4) as CSV");
    add_field_options(field, c);
    add_output_options(field, c, false);

    auto* ksum = app.add_subcommand("ksum", "Kloosterman sums K_m(a) for every a != 0");
    add_field_options(ksum, c);
    ksum->add_option("--m", m, "Number of variables")->check(CLI::Range(1, 64));
    add_output_options(ksum, c, false);

    auto* tracedist = app.add_subcommand("tracedist", "Trace distribution of SL(n,q)");
    tracedist->add_option("--n", c.n, "Matrix size (power of two)");
    add_field_options(tracedist, c);
    tracedist->add_flag("--oracle", oracle, "Count by matrix enumeration instead of the closed form");
    add_output_options(tracedist, c, true);

    auto* weights = app.add_subcommand("weights", "Weight distribution C_0..C_W of C(SL(n,q))");
    weights->add_option("--n", c.n, "Matrix size (power of two)");
    add_field_options(weights, c);
    weights->add_option("--max-weight", max_weight, "Highest weight W (default min(32, N))");
    weights->add_option("--algorithm", algorithm, "direct, macwilliams or both")
        ->check(CLI::IsMember({"direct", "macwilliams", "both"}));
    add_output_options(weights, c, true);

    auto* moments = app.add_subcommand("moments", "Power moments MK^0..MK^H of K_{n-1}");
    moments->add_option("--n", c.n, "Matrix size (power of two)");
    add_field_options(moments, c);
    moments->add_option("--max-h", max_h, "Highest moment H");
    moments->add_option("--method", method, "recursion, brute, salie, moisio or all")
        ->check(CLI::IsMember({"recursion", "brute", "salie", "moisio", "all"}));
    add_output_options(moments, c, true);

    auto* tablecmd = app.add_subcommand("table", "Recompute a reference table");
    tablecmd->add_option("id", table, "I, II, III or IV")->required()->check(CLI::IsMember({"I", "II", "III", "IV"}));
    add_output_options(tablecmd, c, true);

    auto* verify = app.add_subcommand("verify-all", "Run every cross-check and report pass/fail");
    verify->add_option("--n", c.n, "Matrix size (power of two)");
    add_field_options(verify, c);
    verify->add_option("--max-h", max_h, "Highest moment checked for the configured instance");
    add_output_options(verify, c, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const bool csv = c.format == "csv";
        if (*field) {
            emit(c, rep::field_csv(c.field()));
        } else if (*ksum) {
            emit(c, rep::dump(rep::ksum_json(c.field(), m)));
        } else if (*tracedist) {
            const FieldSpec spec = c.field();
            const auto dist = oracle ? trace_distribution_oracle(c.n, spec) : trace_distribution_closed(c.n, spec);
            emit(c, csv ? rep::tracedist_csv(dist) : rep::dump(rep::tracedist_json(dist)));
        } else if (*weights) {
            const FieldSpec spec = c.field();
            const GroupParams g(c.n, spec);
            const std::size_t W = max_weight ? max_weight : rep::default_weight_bound(g);
            const auto alg = algorithm == "direct"        ? rep::WeightAlgorithm::direct
                             : algorithm == "macwilliams" ? rep::WeightAlgorithm::macwilliams
                                                          : rep::WeightAlgorithm::both;
            const auto result = rep::compute_weights(c.n, spec, W, alg);
            if (!result.agreed) {
                std::cerr << "direct and MacWilliams distributions disagree\n";
                return 1;
            }
            const auto& wd = result.distribution;
            emit(c, csv ? rep::weights_csv(wd) : rep::dump(rep::weights_json(wd)));
        } else if (*moments) {
            const auto meth = method == "recursion" ? rep::MomentMethod::recursion
                              : method == "brute"   ? rep::MomentMethod::brute
                              : method == "salie"   ? rep::MomentMethod::salie
                              : method == "moisio"  ? rep::MomentMethod::moisio
                                                    : rep::MomentMethod::all;
            const auto result = rep::compute_moments(c.n, c.field(), max_h, meth);
            emit(c, csv ? rep::indexed_csv("h", result.values) : rep::dump(rep::moments_json(result)));
            if (!result.ok()) {
                std::cerr << "moment cross-check failed\n";
                return 1;
            }
        } else if (*tablecmd) {
            const TableId id = *parse_table_id(table);
            const auto rows = compute_table(id);
            emit(c, csv ? rep::table_csv(id, rows) : rep::dump(rep::table_json(id, rows)));
        } else if (*verify) {
            const rep::VerifyConfig config{c.n, c.r, c.poly_value(), max_h};
            const auto checks = rep::verify_all(config);
            const auto j = rep::verify_json(config, checks);
            emit(c, rep::dump(j));
            if (!j["ok"].get<bool>()) return 1;
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
