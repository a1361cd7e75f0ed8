#ifndef TORQ_NOISE_HPP
#define TORQ_NOISE_HPP

#include <span>
#include <string>
#include <vector>

namespace torq {

enum class GateImpl { DualRailSws, IswapCz, CvDv };

std::string impl_name(GateImpl impl);
GateImpl impl_from_name(const std::string& name);

// Per-role dual-rail figures; ctrl is the routed side of the SWS gate,
// trgt the resident side.
struct DualRailRole {
  double t_phi_us = 0.0;
  double t_bitflip_us = 0.0;
  double p_meas = 0.0;
  double p_1q = 0.0;
};

// Device constants. Defaults are the published hardware tables; times in
// microseconds throughout.
struct HardwareParams {
  double t1_transmon_us = 70.0;
  double tphi_transmon_us = 327.0;
  double t1_cavity_us = 500.0;
  double t1_dual_rail_us = 500.0;
  double t_det_us = 1.8;
  double p_false_positive = 0.0051;
  double t_cd_us = 1.0;
  double t_zz_us = 2.0;  // listed device constant; no implemented equation uses it
  double t_swap_us = 0.2;
  double t_sws_us = 0.5;
  DualRailRole ctrl{4000.0, 520000.0, 2.0e-4, 9.0e-5};
  DualRailRole trgt{4800.0, 1100000.0, 2.3e-4, 1.08e-5};
  // SWS gate additive error constants (X ctrl, Z ctrl, X trgt, Z trgt).
  double sws_px_ctrl = 2.8e-6;
  double sws_pz_ctrl = 3.9e-4;
  double sws_px_trgt = 0.5e-6;
  double sws_pz_trgt = 1.1e-4;
  double n_bar = 1.0;
  // iSWAP+CZ transmon figures.
  double t_2q_ns = 80.0;
  double p_2q_local = 0.001;

  void validate() const;  // throws std::invalid_argument
};

HardwareParams params_from_json(const std::string& json_text);  // partial override of defaults
std::string params_to_json(const HardwareParams& params);

// Long-range CZ duration: 2*t_SWAP*(r+1) + t_SWS (+ t_det with detection).
double t_dur_us(int r, const HardwareParams& params, bool detect);

double p_loss_coupler(double t_us, const HardwareParams& params);
double p_loss_cavity(double t_us, const HardwareParams& params);

// Control-side cavity exposure t_dur - p_route*t_SWS, p_route = 1/2 for |+>.
double effective_ctrl_cav_time(int r, double p_route, const HardwareParams& params, bool detect);

struct ErasureRates {
  double ctrl = 0.0;
  double trgt = 0.0;
};
ErasureRates erasure_rates(int r, const HardwareParams& params);

struct ResidualPauli {
  double x_ctrl = 0.0;
  double z_ctrl = 0.0;
  double x_trgt = 0.0;
  double z_trgt = 0.0;
};
ResidualPauli residual_pauli(int r, const HardwareParams& params, bool detect);

// Full per-gate decomposition for the dual-rail+SWS implementation. With
// detection the loss terms are heralded erasures; without it they stay as
// unheralded loss of the same magnitude, minus the false positives.
struct NoiseBreakdown {
  int r = 0;
  bool detect = true;
  double t_dur = 0.0;
  double p_loss_cav_ctrl = 0.0;
  double p_loss_cav_trgt = 0.0;
  double p_loss_cpl = 0.0;
  double p_eras_ctrl = 0.0;  // zero when detect == false
  double p_eras_trgt = 0.0;
  double px_ctrl = 0.0;
  double pz_ctrl = 0.0;
  double px_trgt = 0.0;
  double pz_trgt = 0.0;
  double total = 0.0;
};
NoiseBreakdown p2q_sws(int r, const HardwareParams& params, bool detect);

struct ImplPoint {
  double t_dur_us = 0.0;
  double p2q = 0.0;
};
ImplPoint p2q_iswap_cz(int r, const HardwareParams& params);

struct CvDvPoint {
  double t_dur_us = 0.0;
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;
  double p_loss = 0.0;
  double p2q = 0.0;
};
CvDvPoint p2q_cvdv(int r, const HardwareParams& params);

double p2q_total(int r, const HardwareParams& params, GateImpl impl, bool detect);

double worst_case_p2q(std::span<const int> gate_r_values, const HardwareParams& params,
                      GateImpl impl, bool detect);

struct NoJumpInputs {
  double kappa_coupler = 0.0;    // 1/us
  double kappa_a1 = 0.0;         // stationary rail decay rate
  double kappa_path_mean = 0.0;  // mean decay rate along routed rail + path
  double kappa_path_var = 0.0;   // ensemble variance of (path mean - a1)
  double gamma_phi = 0.0;        // dual-rail dephasing rate, caller-chosen role
};

struct NoJumpEstimate {
  double delta_kappa_t = 0.0;
  double eps_nj = 0.0;
  double eps_nj_mean = 0.0;
};
NoJumpEstimate nojump_estimate(int r, const HardwareParams& params, const NoJumpInputs& in,
                               bool detect = true);

struct AxisRange {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;
};

struct Landscape {
  AxisRange t_swap;
  AxisRange t1_cav;
  std::vector<double> worst_p2q;  // row-major, t1_cav rows x t_swap cols
};
Landscape landscape(std::span<const int> gate_r_values, const HardwareParams& params, GateImpl impl,
                    bool detect, const AxisRange& t_swap, const AxisRange& t1_cav);

struct DescentPoint {
  double t_swap_us = 0.0;
  double t1_cav_us = 0.0;
  double worst_p2q = 0.0;
};

// Steepest descent on log worst-case p2Q in (t_SWAP, T1_cav), axes
// normalized by the starting hardware point; finite-difference gradient.
std::vector<DescentPoint> steepest_descent_path(std::span<const int> gate_r_values,
                                                const HardwareParams& start, GateImpl impl,
                                                bool detect, double step, int count);

// Per-logical-qubit rate: 1 - (1 - p_L)^(1/k), the form consistent with
// the published numeric pairs.
double epsilon_k(double p_l, int k);

}  // namespace torq

#endif
