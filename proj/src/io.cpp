#include "cct/io.hpp"

#include <algorithm>
#include <cstdio>

namespace cct {

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t,F_pop,U2,U4,U6\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        os << format_g17(traj.times[i]) << ',' << format_g17(traj.f_pop[i]) << ','
           << format_g17(traj.u2[i]) << ',' << format_g17(traj.u4[i]) << ','
           << format_g17(traj.u6[i]) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "delta,t_star,quality,max_f_pop,feasible\n";
    for (const SweepRow& row : rows) {
        os << format_g17(row.delta) << ',' << format_g17(row.result.t_star) << ','
           << format_g17(row.result.quality) << ','
           << format_g17(row.result.max_f_pop) << ',' << (row.feasible ? 1 : 0)
           << '\n';
    }
}

namespace {

constexpr int kWidth = 960;
constexpr int kHeight = 540;
constexpr int kMarginLeft = 60;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 20;
constexpr int kMarginBottom = 45;

void write_polyline(std::ostream& os, const std::vector<double>& xs,
                    const std::vector<double>& ys, double x_max,
                    const char* color) {
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    os << "<polyline fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double px = kMarginLeft + plot_w * (x_max > 0 ? xs[i] / x_max : 0.0);
        const double py = kMarginTop + plot_h * (1.0 - std::clamp(ys[i], 0.0, 1.0));
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px, py);
        os << buf;
    }
    os << "\"/>\n";
}

}  // namespace

void write_trajectory_svg(std::ostream& os, const Trajectory& traj) {
    const double x_max = traj.times.empty() ? 1.0 : traj.times.back();
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
       << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
       << kHeight << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
       << kWidth - kMarginLeft - kMarginRight << "\" height=\""
       << kHeight - kMarginTop - kMarginBottom
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    write_polyline(os, traj.times, traj.f_pop, x_max, "#1f77b4");  // F: blue
    write_polyline(os, traj.times, traj.u2, x_max, "#e0a800");     // U2: yellow
    write_polyline(os, traj.times, traj.u4, x_max, "#d62728");     // U4: red
    write_polyline(os, traj.times, traj.u6, x_max, "#2ca02c");     // U6: green

    const char* labels[] = {"F", "U2", "U4", "U6"};
    const char* colors[] = {"#1f77b4", "#e0a800", "#d62728", "#2ca02c"};
    for (int i = 0; i < 4; ++i) {
        const int y = kMarginTop + 18 + 20 * i;
        os << "<line x1=\"" << kMarginLeft + 12 << "\" y1=\"" << y - 4
           << "\" x2=\"" << kMarginLeft + 40 << "\" y2=\"" << y - 4
           << "\" stroke=\"" << colors[i] << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << kMarginLeft + 46 << "\" y=\"" << y
           << "\" font-family=\"sans-serif\" font-size=\"14\">" << labels[i]
           << "</text>\n";
    }
    os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
       << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">t"
       << "</text>\n";
    os << "<text x=\"18\" y=\"" << kHeight / 2
       << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
          "transform=\"rotate(-90 18 "
       << kHeight / 2 << ")\">population</text>\n";
    os << "</svg>\n";
}

}  // namespace cct
