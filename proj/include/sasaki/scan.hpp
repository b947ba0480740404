#ifndef SASAKI_SCAN_HPP
#define SASAKI_SCAN_HPP

#include <string>
#include <vector>

#include "sasaki/admissible.hpp"
#include "sasaki/solver.hpp"

namespace sasaki {

// One row of a slope sweep at fixed b.
struct ScanRow {
    Rational a, b;
    bool exists = false;
    Rational A, B;
    double min_theta = 0.0; // sampled minimum of Theta over (-1, 1)
    bool csc = false;       // A b - B a = 0 exactly
    Rational defect0, defect1;
};

/* Sweeps a over the interior grid a_i = b(-1 + 2i/(N+1)), i = 1..N, solving
 * each row exactly. Rows are evaluated concurrently and returned in
 * ascending a regardless of scheduling.
 */
std::vector<ScanRow> run_scan(const AdmissibleData& data, const Rational& b, unsigned grid_n,
                              unsigned threads = 0);

// CSV with header "a,b,exists,A,B,min_theta,csc". Throws on empty rows / IO.
void emit_scan_csv(const std::vector<ScanRow>& rows, std::ostream& os);
void emit_scan_csv(const std::vector<ScanRow>& rows, const std::string& path);

// Static SVG: min_theta curve over a with the existence region shaded.
void emit_scan_svg(const std::vector<ScanRow>& rows, const std::string& path);

} // namespace sasaki

#endif
