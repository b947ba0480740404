#include "sasaki/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <thread>

#include "sasaki/errors.hpp"
#include "sasaki/futaki.hpp"

namespace sasaki {

namespace {

double sampled_min_theta(const ExtremalSolution& sol) {
    const Polynomial p_c = fiber_polynomial(sol.data);
    double mn = 0.0;
    const int samples = 401;
    for (int i = 1; i <= samples; ++i) {
        const double z = -1.0 + 2.0 * i / (samples + 1);
        const double th = sol.F.eval_double(z) / p_c.eval_double(z);
        if (i == 1 || th < mn) mn = th;
    }
    return mn;
}

ScanRow scan_one(const AdmissibleData& data, const Rational& a, const Rational& b) {
    ScanRow row;
    row.a = a;
    row.b = b;
    const ExtremalSolution sol = solve_extremal(data, {a, b});
    row.A = sol.A;
    row.B = sol.B;
    row.exists = existence_verdict(sol).exists;
    row.min_theta = sampled_min_theta(sol);
    row.csc = (sol.A * b - sol.B * a).is_zero();
    const auto defect = double_root_defect(sol);
    row.defect0 = defect.first;
    row.defect1 = defect.second;
    return row;
}

} // namespace

std::vector<ScanRow> run_scan(const AdmissibleData& data, const Rational& b, unsigned grid_n,
                              unsigned threads) {
    if (grid_n == 0) throw ValidationError("run_scan: grid must be >= 1");
    if (!(b > Rational(0))) throw ValidationError("run_scan: b must be positive");
    std::vector<Rational> slopes;
    slopes.reserve(grid_n);
    for (unsigned i = 1; i <= grid_n; ++i)
        slopes.push_back(b * (Rational(-1) + Rational(2 * static_cast<long>(i)) /
                                                 Rational(static_cast<long>(grid_n) + 1)));

    std::vector<ScanRow> rows(grid_n);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, grid_n);

    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            try {
                rows[i] = scan_one(data, slopes[i], b);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

void emit_scan_csv(const std::vector<ScanRow>& rows, std::ostream& os) {
    if (rows.empty()) throw Error("emit_scan: no rows");
    os << "a,b,exists,A,B,min_theta,csc\n";
    for (const auto& r : rows) {
        os << r.a.to_string() << ',' << r.b.to_string() << ','
           << (r.exists ? "true" : "false") << ',' << r.A.to_string() << ','
           << r.B.to_string() << ',' << std::setprecision(17) << r.min_theta << ','
           << (r.csc ? "true" : "false") << '\n';
    }
}

void emit_scan_csv(const std::vector<ScanRow>& rows, const std::string& path) {
    if (rows.empty()) throw Error("emit_scan: no rows");
    std::ofstream out(path);
    if (!out) throw Error("emit_scan: cannot open '" + path + "'");
    emit_scan_csv(rows, out);
    if (!out) throw Error("emit_scan: write failed for '" + path + "'");
}

void emit_scan_svg(const std::vector<ScanRow>& rows, const std::string& path) {
    if (rows.empty()) throw Error("emit_scan: no rows");

    const double width = 880, height = 480;
    const double ml = 70, mr = 20, mt = 30, mb = 50;
    const double pw = width - ml - mr, ph = height - mt - mb;

    const double a_lo = rows.front().a.to_double();
    const double a_hi = rows.back().a.to_double();
    double y_lo = 0.0, y_hi = 0.0;
    for (const auto& r : rows) {
        y_lo = std::min(y_lo, r.min_theta);
        y_hi = std::max(y_hi, r.min_theta);
    }
    const double pad = 0.1 * std::max(1e-12, y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    const auto X = [&](double a) {
        return a_hi > a_lo ? ml + pw * (a - a_lo) / (a_hi - a_lo) : ml + pw / 2;
    };
    const auto Y = [&](double y) { return mt + ph * (1.0 - (y - y_lo) / (y_hi - y_lo)); };

    std::ofstream out(path);
    if (!out) throw Error("emit_scan: cannot open '" + path + "'");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";

    // shaded bands where the exact verdict is existence
    const double half = rows.size() > 1 ? 0.5 * (a_hi - a_lo) / (rows.size() - 1) : 0.5;
    size_t i = 0;
    while (i < rows.size()) {
        if (!rows[i].exists) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j + 1 < rows.size() && rows[j + 1].exists) ++j;
        const double x0 = std::max(ml, X(rows[i].a.to_double() - half));
        const double x1 = std::min(ml + pw, X(rows[j].a.to_double() + half));
        out << "<rect x=\"" << x0 << "\" y=\"" << mt << "\" width=\"" << (x1 - x0)
            << "\" height=\"" << ph << "\" fill=\"#cde8cd\"/>\n";
        i = j + 1;
    }

    // frame, zero line
    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"#444\"/>\n";
    if (y_lo < 0.0 && y_hi > 0.0)
        out << "<line x1=\"" << ml << "\" y1=\"" << Y(0) << "\" x2=\"" << ml + pw << "\" y2=\""
            << Y(0) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";

    out << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
    for (const auto& r : rows) out << X(r.a.to_double()) << ',' << Y(r.min_theta) << ' ';
    out << "\"/>\n";

    out << std::setprecision(4);
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"13\">a  (b = " << rows.front().b.to_string()
        << ")</text>\n";
    out << "<text x=\"16\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
        << mt + ph / 2 << ")\">sampled min of the momentum profile</text>\n";
    out << "<text x=\"" << ml << "\" y=\"" << height - 34 << "\" font-size=\"11\">" << a_lo
        << "</text>\n";
    out << "<text x=\"" << ml + pw << "\" y=\"" << height - 34
        << "\" text-anchor=\"end\" font-size=\"11\">" << a_hi << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << Y(y_lo) << "\" text-anchor=\"end\" font-size=\"11\">"
        << y_lo << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << Y(y_hi) + 10
        << "\" text-anchor=\"end\" font-size=\"11\">" << y_hi << "</text>\n";
    out << "</svg>\n";
    if (!out) throw Error("emit_scan: write failed for '" + path + "'");
}

} // namespace sasaki
