#pragma once

#include <optional>
#include <string>
#include <vector>

// Published values the reproduce command and the acceptance run compare against.
// Stored as the printed decimal strings.
namespace resum::ref {

struct SaddleRow {
    const char* alpha;
    const char* mu;
    const char* minus_lambda;
};
const std::vector<SaddleRow>& saddle_table();

// d = 0 exact rate constants
inline constexpr const char* kD0R = "4.526638689";
inline constexpr const char* kD0Rate = "0.5154353381";
inline constexpr const char* kD0ROverA = "3.017759126";

struct OdmRow {
    int k;
    const char* inv_rho;
    const char* abs_delta;  // printed with two digits
    const char* ln_abs_delta;
};
const std::vector<OdmRow>& d0_strong_table();  // g = inf, alpha = 2
const std::vector<OdmRow>& d0_g5_table();      // g = 5, alpha = 4

inline constexpr const char* kD0G5AverageR = "9.75";
inline constexpr const char* kD0G5PredictedR = "9.2039";
inline constexpr const char* kAnharmonicR = "32.25";
inline constexpr const char* kAnharmonicErrorSlope = "-9.6";

struct FixedPointRow {
    int k;
    const char* g_star;
    const char* omega;
};
const std::vector<FixedPointRow>& phi4_fixed_point_table();

struct ExponentRow {
    int k;
    const char* gamma;
    const char* nu;
    const char* eta;  // nullptr where the table has no entry
};
const std::vector<ExponentRow>& phi4_exponents_table();
inline constexpr const char* kExponentsGStar = "1.411";

struct BorelRow {
    int k;
    const char* g_star;
    const char* nu;
    const char* gamma;
};
const std::vector<BorelRow>& borel_map_table();
inline constexpr const char* kBorelA = "0.147774232";

}  // namespace resum::ref
