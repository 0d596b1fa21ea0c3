#ifndef SLMOMENT_TABLES_HPP
#define SLMOMENT_TABLES_HPP

// Published reference tables for SL(2,8) and SL(2,16), and the computations
// that regenerate them.
//   I   weight distribution C_0..C_21 of C(SL(2,2^3))
//   II  Kloosterman moments MK^0..MK^29 over GF(2^3)
//   III weight distribution C_0..C_11 of C(SL(2,2^4))
//   IV  Kloosterman moments MK^0..MK^11 over GF(2^4)

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slmoment/bigint.hpp"
#include "slmoment/moments.hpp"
#include "slmoment/weight_dist.hpp"

namespace slmoment {

enum class TableId { I, II, III, IV };

inline constexpr std::array<std::string_view, 22> kTableI = {
    "1",
    "64",
    "15844",
    "2650560",
    "332067914",
    "33207770816",
    "2761774095732",
    "196480443747136",
    "12206347634256355",
    "672705382226871680",
    "33298916433035363704",
    "1495424065262442956416",
    "61437005346735099526740",
    "2325154356197975713774208",
    "81546484920999191101202360",
    "2663851840752718923500482944",
    "81413971883002952517354367429",
    "2337059898759141068388769445824",
    "63230453927539041393172170525052",
    "1617368453093893435845237341156928",
    "39221184987526914436447793737809822",
    "903954930188715550538753640492641088",
};

inline constexpr std::array<std::string_view, 30> kTableII = {
    "7",
    "1",
    "55",
    "-47",
    "871",
    "-2399",
    "17815",
    "-71567",
    "410311",
    "-1894079",
    "9942775",
    "-48296687",
    "245734951",
    "-1215920159",
    "6117864535",
    "-30474531407",
    "152717030791",
    "-762552032639",
    "3815859527095",
    "-19069999543727",
    "95377891993831",
    "-476805777143519",
    "2384279934194455",
    "-11920646525541647",
    "59605492064000071",
    "-298020682011124799",
    "1490123744982250615",
    "-7450557720131373167",
    "37252971614996505511",
    "-186264309031963608479",
};

inline constexpr std::array<std::string_view, 12> kTableIII = {
    "1",
    "256",
    "520072",
    "706962176",
    "720560061732",
    "587401078798592",
    "398943240589827320",
    "232184965775802188544",
    "118211170698394115200330",
    "53483987453818691622983424",
    "21773331292449548118228026776",
    "8056132578206330016084726166784",
};

inline constexpr std::array<std::string_view, 12> kTableIV = {
    "15", "1", "239", "289", "7631", "22081", "300719", "1343329", "13118351", "72973441", "604249199", "3760049569",
};

inline std::optional<TableId> parse_table_id(std::string_view s) {
    if (s == "I") return TableId::I;
    if (s == "II") return TableId::II;
    if (s == "III") return TableId::III;
    if (s == "IV") return TableId::IV;
    return std::nullopt;
}

inline std::string_view table_name(TableId id) {
    switch (id) {
        case TableId::I: return "I";
        case TableId::II: return "II";
        case TableId::III: return "III";
        case TableId::IV: return "IV";
    }
    return "?";
}

inline std::vector<std::string_view> reference_table(TableId id) {
    switch (id) {
        case TableId::I: return {kTableI.begin(), kTableI.end()};
        case TableId::II: return {kTableII.begin(), kTableII.end()};
        case TableId::III: return {kTableIII.begin(), kTableIII.end()};
        case TableId::IV: return {kTableIV.begin(), kTableIV.end()};
    }
    return {};
}

/// Degree r of the field a table refers to (n = 2 throughout).
inline unsigned table_degree(TableId id) { return (id == TableId::I || id == TableId::II) ? 3 : 4; }

inline bool is_weight_table(TableId id) { return id == TableId::I || id == TableId::III; }

/// Recomputes the rows of a table. Weight tables use the direct DP; moment
/// tables use the recursion fed by a W = max(H, 32) weight distribution.
inline std::vector<BigInt> compute_table(TableId id, const FieldSpec& spec) {
    const auto rows = reference_table(id).size();
    const auto dist = trace_distribution_closed(2, spec);
    if (is_weight_table(id)) return weight_distribution_direct(dist, rows - 1).counts;
    const unsigned H = static_cast<unsigned>(rows - 1);
    const auto wd = weight_distribution_direct(dist, std::max<std::size_t>(H, 32));
    return recursive_moments(wd, H).values;
}

inline std::vector<BigInt> compute_table(TableId id) { return compute_table(id, FieldSpec(table_degree(id))); }

}  // namespace slmoment

#endif  // SLMOMENT_TABLES_HPP
