#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cct/transfer.hpp"

namespace cct {

// Shortest representation that round-trips a double (17 significant digits).
std::string format_g17(double x);

// Header `t,F_pop,U2,U4,U6`, '\n' line endings, '.' decimal separator.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

struct SweepRow {
    double delta = 0.0;
    TransferResult result;
    bool feasible = false;
};

// Header `delta,t_star,quality,max_f_pop,feasible`.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

// Self-contained 960x540 line plot of the four curves with a legend.
void write_trajectory_svg(std::ostream& os, const Trajectory& traj);

}  // namespace cct
