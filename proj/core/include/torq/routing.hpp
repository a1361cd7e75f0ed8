#ifndef TORQ_ROUTING_HPP
#define TORQ_ROUTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "torq/layout.hpp"
#include "torq/noise.hpp"
#include "torq/schedule.hpp"

namespace torq {

struct Leg {
  int dir = 0;  // -1/+1 along the axis, 0 when len == 0
  int len = 0;  // cavity hops
};

// One gate's trip through the oscillator network. The traveling mode is
// the check-side photon: X-check modes go left on the X leg, Z-check
// modes right, Y legs take the short way around. The mode departs late
// enough to finish its X leg exactly when the pass's longest one does,
// so corners turn in lockstep and no in-network idling is needed.
struct Route {
  int gate_id = 0;
  CheckType check = CheckType::X;
  DataFamily family = DataFamily::L;
  int term_index = 0;
  int src_qubit = 0;  // check side (traveling mode)
  int dst_qubit = 0;  // data side
  CavityCoord src;
  CavityCoord dst;
  Leg x_leg;
  Leg y_leg;
  int idle_steps = 0;  // scheduler-inserted in-network waits
  int departure = 0;   // timestep the mode swaps into the network
  int round = 0;       // 0 under maximum parallelism
};

// One-way SWAP count of a route: leg lengths plus scheduled idles.
int compute_r(const Route& route);

struct RoutedPass {
  int pass_number = 0;
  bool toric = true;
  std::vector<Route> routes;
  int rounds = 1;
  int t_x_max = 0;  // longest X leg; Y legs start here
  int t_y_max = 0;

  int max_r() const;
};

// Routes every CNOT of the pass in a single round; throws
// std::runtime_error if the occupancy scan finds a conflict (the layout
// then violates the symmetry preconditions).
RoutedPass route_pass_toric(const TorusLayout& layout, const SchedulePass& pass);

std::vector<RoutedPass> route_cycle_toric(const TorusLayout& layout,
                                          const SyndromeSchedule& schedule);

// Greedy multi-round XY routing on the same placement with the wrap
// couplers removed; a gate joins the current round only if its planar XY
// path shares no cavity with paths already committed to that round.
RoutedPass route_pass_lattice_greedy(const TorusLayout& layout, const SchedulePass& pass);

std::vector<RoutedPass> route_cycle_lattice(const TorusLayout& layout,
                                            const SyndromeSchedule& schedule);

// Network cavity held by the route at an integer timestep, if any. The
// return trip mirrors the outbound timeline in reverse.
std::optional<CavityCoord> route_position(const Route& route, const RoutedPass& pass,
                                          const GridDims& dims, int step);

// Exhaustive occupancy scan (outbound and return): no cavity may host two
// modes at one timestep, and during X legs same-direction neighbors must
// keep one idle cavity between them. Lattice passes are checked per round
// on path disjointness.
bool verify_conflict_free(const RoutedPass& routed, const GridDims& dims);

double pass_duration_us(const RoutedPass& routed, const HardwareParams& params, GateImpl impl,
                        bool detect);

// Seven passes plus the measurement/reset window (defaults to t_det).
double cycle_duration_us(const std::vector<RoutedPass>& passes, const HardwareParams& params,
                         GateImpl impl, bool detect, double meas_reset_us = -1.0);

std::vector<int> cycle_r_values(const std::vector<RoutedPass>& passes);

std::string routed_to_json(const std::vector<RoutedPass>& passes);
std::string occupancy_csv(const RoutedPass& routed, const GridDims& dims);

}  // namespace torq

#endif
