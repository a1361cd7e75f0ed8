#include "torq/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace torq {

namespace {

double decay(double t_us, double lifetime_us) { return 1.0 - std::exp(-t_us / lifetime_us); }

void require(bool cond, const char* msg) {
  if (!cond) {
    throw std::invalid_argument(msg);
  }
}

}  // namespace

std::string impl_name(GateImpl impl) {
  switch (impl) {
    case GateImpl::DualRailSws: return "sws";
    case GateImpl::IswapCz: return "iswap-cz";
    case GateImpl::CvDv: return "cvdv";
  }
  return "sws";
}

GateImpl impl_from_name(const std::string& name) {
  if (name == "sws") {
    return GateImpl::DualRailSws;
  }
  if (name == "iswap-cz") {
    return GateImpl::IswapCz;
  }
  if (name == "cvdv") {
    return GateImpl::CvDv;
  }
  throw std::invalid_argument("unknown gate implementation \"" + name + "\"");
}

void HardwareParams::validate() const {
  require(t1_transmon_us > 0 && tphi_transmon_us > 0 && t1_cavity_us > 0 && t1_dual_rail_us > 0,
          "params: lifetimes must be positive");
  require(t_det_us >= 0 && t_cd_us > 0 && t_swap_us > 0 && t_sws_us > 0,
          "params: durations must be positive");
  require(p_false_positive >= 0 && p_false_positive <= 1, "params: p_FP out of [0,1]");
  for (const DualRailRole* role : {&ctrl, &trgt}) {
    require(role->t_phi_us > 0 && role->t_bitflip_us > 0, "params: dual-rail times must be positive");
    require(role->p_meas >= 0 && role->p_meas <= 1 && role->p_1q >= 0 && role->p_1q <= 1,
            "params: dual-rail probabilities out of [0,1]");
  }
  require(n_bar > 0, "params: n_bar must be positive");
}

namespace {

void load_role(const nlohmann::json& j, DualRailRole& role) {
  if (j.contains("t_phi_us")) j.at("t_phi_us").get_to(role.t_phi_us);
  if (j.contains("t_bitflip_us")) j.at("t_bitflip_us").get_to(role.t_bitflip_us);
  if (j.contains("p_meas")) j.at("p_meas").get_to(role.p_meas);
  if (j.contains("p_1q")) j.at("p_1q").get_to(role.p_1q);
}

}  // namespace

HardwareParams params_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  HardwareParams p;
  if (j.contains("t1_transmon_us")) j.at("t1_transmon_us").get_to(p.t1_transmon_us);
  if (j.contains("tphi_transmon_us")) j.at("tphi_transmon_us").get_to(p.tphi_transmon_us);
  if (j.contains("t1_cavity_us")) j.at("t1_cavity_us").get_to(p.t1_cavity_us);
  if (j.contains("t1_dual_rail_us")) j.at("t1_dual_rail_us").get_to(p.t1_dual_rail_us);
  if (j.contains("t_det_us")) j.at("t_det_us").get_to(p.t_det_us);
  if (j.contains("p_false_positive")) j.at("p_false_positive").get_to(p.p_false_positive);
  if (j.contains("t_cd_us")) j.at("t_cd_us").get_to(p.t_cd_us);
  if (j.contains("t_zz_us")) j.at("t_zz_us").get_to(p.t_zz_us);
  if (j.contains("t_swap_us")) j.at("t_swap_us").get_to(p.t_swap_us);
  if (j.contains("t_sws_us")) j.at("t_sws_us").get_to(p.t_sws_us);
  if (j.contains("ctrl")) load_role(j.at("ctrl"), p.ctrl);
  if (j.contains("trgt")) load_role(j.at("trgt"), p.trgt);
  if (j.contains("sws_px_ctrl")) j.at("sws_px_ctrl").get_to(p.sws_px_ctrl);
  if (j.contains("sws_pz_ctrl")) j.at("sws_pz_ctrl").get_to(p.sws_pz_ctrl);
  if (j.contains("sws_px_trgt")) j.at("sws_px_trgt").get_to(p.sws_px_trgt);
  if (j.contains("sws_pz_trgt")) j.at("sws_pz_trgt").get_to(p.sws_pz_trgt);
  if (j.contains("n_bar")) j.at("n_bar").get_to(p.n_bar);
  if (j.contains("t_2q_ns")) j.at("t_2q_ns").get_to(p.t_2q_ns);
  if (j.contains("p_2q_local")) j.at("p_2q_local").get_to(p.p_2q_local);
  p.validate();
  return p;
}

std::string params_to_json(const HardwareParams& p) {
  nlohmann::ordered_json j;
  j["t1_transmon_us"] = p.t1_transmon_us;
  j["tphi_transmon_us"] = p.tphi_transmon_us;
  j["t1_cavity_us"] = p.t1_cavity_us;
  j["t1_dual_rail_us"] = p.t1_dual_rail_us;
  j["t_det_us"] = p.t_det_us;
  j["p_false_positive"] = p.p_false_positive;
  j["t_cd_us"] = p.t_cd_us;
  j["t_zz_us"] = p.t_zz_us;
  j["t_swap_us"] = p.t_swap_us;
  j["t_sws_us"] = p.t_sws_us;
  for (const auto& [name, role] : {std::pair{"ctrl", &p.ctrl}, std::pair{"trgt", &p.trgt}}) {
    j[name] = {{"t_phi_us", role->t_phi_us},
               {"t_bitflip_us", role->t_bitflip_us},
               {"p_meas", role->p_meas},
               {"p_1q", role->p_1q}};
  }
  j["sws_px_ctrl"] = p.sws_px_ctrl;
  j["sws_pz_ctrl"] = p.sws_pz_ctrl;
  j["sws_px_trgt"] = p.sws_px_trgt;
  j["sws_pz_trgt"] = p.sws_pz_trgt;
  j["n_bar"] = p.n_bar;
  j["t_2q_ns"] = p.t_2q_ns;
  j["p_2q_local"] = p.p_2q_local;
  return j.dump(2);
}

double t_dur_us(int r, const HardwareParams& params, bool detect) {
  require(r >= 0, "t_dur: r must be nonnegative");
  return 2.0 * params.t_swap_us * (r + 1) + params.t_sws_us + (detect ? params.t_det_us : 0.0);
}

double p_loss_coupler(double t_us, const HardwareParams& params) {
  return decay(t_us, params.t1_transmon_us);
}

double p_loss_cavity(double t_us, const HardwareParams& params) {
  return decay(t_us, params.t1_cavity_us);
}

double effective_ctrl_cav_time(int r, double p_route, const HardwareParams& params, bool detect) {
  require(p_route >= 0 && p_route <= 1, "effective_ctrl_cav_time: p_route out of [0,1]");
  return t_dur_us(r, params, detect) - p_route * params.t_sws_us;
}

ErasureRates erasure_rates(int r, const HardwareParams& params) {
  const double t = t_dur_us(r, params, true);
  ErasureRates rates;
  rates.ctrl = p_loss_cavity(t - params.t_sws_us / 2.0, params) +
               p_loss_coupler(params.t_sws_us / 2.0, params) + params.p_false_positive;
  rates.trgt = p_loss_cavity(t, params) + params.p_false_positive;
  return rates;
}

ResidualPauli residual_pauli(int r, const HardwareParams& params, bool detect) {
  const double exposure = t_dur_us(r, params, detect) - params.t_sws_us;
  ResidualPauli p;
  p.x_ctrl = decay(exposure, params.ctrl.t_bitflip_us) + params.sws_px_ctrl;
  p.z_ctrl = decay(exposure, params.ctrl.t_phi_us) + params.sws_pz_ctrl;
  p.x_trgt = decay(exposure, params.trgt.t_bitflip_us) + params.sws_px_trgt;
  p.z_trgt = decay(exposure, params.trgt.t_phi_us) + params.sws_pz_trgt;
  return p;
}

NoiseBreakdown p2q_sws(int r, const HardwareParams& params, bool detect) {
  NoiseBreakdown out;
  out.r = r;
  out.detect = detect;
  out.t_dur = t_dur_us(r, params, detect);
  const ResidualPauli pauli = residual_pauli(r, params, detect);
  out.px_ctrl = pauli.x_ctrl;
  out.pz_ctrl = pauli.z_ctrl;
  out.px_trgt = pauli.x_trgt;
  out.pz_trgt = pauli.z_trgt;
  out.p_loss_cav_ctrl = p_loss_cavity(out.t_dur - params.t_sws_us / 2.0, params);
  out.p_loss_cav_trgt = p_loss_cavity(out.t_dur, params);
  out.p_loss_cpl = p_loss_coupler(params.t_sws_us / 2.0, params);
  double loss_terms;
  if (detect) {
    out.p_eras_ctrl = out.p_loss_cav_ctrl + out.p_loss_cpl + params.p_false_positive;
    out.p_eras_trgt = out.p_loss_cav_trgt + params.p_false_positive;
    loss_terms = out.p_eras_ctrl + out.p_eras_trgt;
  } else {
    loss_terms = out.p_loss_cav_ctrl + out.p_loss_cpl + out.p_loss_cav_trgt;
  }
  out.total = out.px_ctrl + out.pz_ctrl + out.px_trgt + out.pz_trgt + loss_terms;
  return out;
}

ImplPoint p2q_iswap_cz(int r, const HardwareParams& params) {
  require(r >= 0, "p2q_iswap_cz: r must be nonnegative");
  // One SWAP = iSWAP + CZ, both ways, plus the entangling CNOT; single-
  // qubit contributions ignored.
  const double per = params.t_2q_ns;
  ImplPoint out;
  out.t_dur_us = (2.0 * 2.0 * per * r + 2.0 * per + per) / 1000.0;
  out.p2q = 2.0 * 2.0 * params.p_2q_local * r + 2.0 * params.p_2q_local + params.p_2q_local;
  return out;
}

CvDvPoint p2q_cvdv(int r, const HardwareParams& params) {
  require(r >= 0, "p2q_cvdv: r must be nonnegative");
  CvDvPoint out;
  out.t_dur_us = 4.0 * (params.t_cd_us + r * params.t_swap_us);
  const double t = out.t_dur_us;
  // 1/T2 = 1/(2 T1) + 1/Tphi for the transmon.
  const double t2 = 1.0 / (1.0 / (2.0 * params.t1_transmon_us) + 1.0 / params.tphi_transmon_us);
  const double damp = decay(t, params.t1_transmon_us);
  out.px = damp / 4.0;
  out.py = damp / 4.0;
  out.pz = decay(t, t2) / 2.0 - damp / 4.0;
  out.p_loss = 1.0 - std::exp(-t * params.n_bar / params.t1_cavity_us);
  out.p2q = out.px + out.py + out.pz + out.p_loss;
  return out;
}

double p2q_total(int r, const HardwareParams& params, GateImpl impl, bool detect) {
  switch (impl) {
    case GateImpl::DualRailSws: return p2q_sws(r, params, detect).total;
    case GateImpl::IswapCz: return p2q_iswap_cz(r, params).p2q;
    case GateImpl::CvDv: return p2q_cvdv(r, params).p2q;
  }
  return 0.0;
}

double worst_case_p2q(std::span<const int> gate_r_values, const HardwareParams& params,
                      GateImpl impl, bool detect) {
  double worst = 0.0;
  for (int r : gate_r_values) {
    worst = std::max(worst, p2q_total(r, params, impl, detect));
  }
  return worst;
}

NoJumpEstimate nojump_estimate(int r, const HardwareParams& params, const NoJumpInputs& in,
                               bool detect) {
  require(in.kappa_coupler >= 0 && in.kappa_a1 >= 0 && in.kappa_path_mean >= 0 &&
              in.kappa_path_var >= 0,
          "nojump_estimate: decay-rate inputs must be nonnegative");
  const double t_cav = 2.0 * params.t_swap_us * (r + 1);
  const double t_dur = t_dur_us(r, params, detect);
  NoJumpEstimate out;
  out.delta_kappa_t = (in.kappa_coupler - in.kappa_a1) * params.t_sws_us +
                      (in.kappa_path_mean - in.kappa_a1) * t_cav;
  const double first_order = 0.5 * in.gamma_phi * t_dur;
  out.eps_nj = first_order + out.delta_kappa_t * out.delta_kappa_t / 16.0;
  const double coupler_term = (in.kappa_coupler - in.kappa_a1) * (in.kappa_coupler - in.kappa_a1) *
                              params.t_sws_us * params.t_sws_us;
  out.eps_nj_mean = first_order + (coupler_term + in.kappa_path_var * t_cav * t_cav) / 16.0;
  return out;
}

Landscape landscape(std::span<const int> gate_r_values, const HardwareParams& params, GateImpl impl,
                    bool detect, const AxisRange& t_swap, const AxisRange& t1_cav) {
  require(t_swap.lo > 0 && t_swap.hi >= t_swap.lo && t_swap.steps >= 1,
          "landscape: bad t_swap range");
  require(t1_cav.lo > 0 && t1_cav.hi >= t1_cav.lo && t1_cav.steps >= 1,
          "landscape: bad t1_cav range");
  Landscape out;
  out.t_swap = t_swap;
  out.t1_cav = t1_cav;
  out.worst_p2q.reserve(static_cast<std::size_t>(t_swap.steps) * t1_cav.steps);
  for (int i = 0; i < t1_cav.steps; ++i) {
    HardwareParams p = params;
    p.t1_cavity_us = t1_cav.steps == 1
                         ? t1_cav.lo
                         : t1_cav.lo + (t1_cav.hi - t1_cav.lo) * i / (t1_cav.steps - 1);
    for (int j = 0; j < t_swap.steps; ++j) {
      p.t_swap_us = t_swap.steps == 1
                        ? t_swap.lo
                        : t_swap.lo + (t_swap.hi - t_swap.lo) * j / (t_swap.steps - 1);
      out.worst_p2q.push_back(worst_case_p2q(gate_r_values, p, impl, detect));
    }
  }
  return out;
}

std::vector<DescentPoint> steepest_descent_path(std::span<const int> gate_r_values,
                                                const HardwareParams& start, GateImpl impl,
                                                bool detect, double step, int count) {
  require(step > 0 && count >= 1, "descent: step and count must be positive");
  const double swap0 = start.t_swap_us;
  const double cav0 = start.t1_cavity_us;
  auto eval = [&](double u_swap, double u_cav) {
    HardwareParams p = start;
    p.t_swap_us = u_swap * swap0;
    p.t1_cavity_us = u_cav * cav0;
    if (p.t_swap_us <= 0 || p.t1_cavity_us <= 0) {
      throw std::invalid_argument("descent: step left the positive domain");
    }
    return std::log(worst_case_p2q(gate_r_values, p, impl, detect));
  };
  double u_swap = 1.0;
  double u_cav = 1.0;
  std::vector<DescentPoint> path;
  for (int i = 0; i < count; ++i) {
    HardwareParams p = start;
    p.t_swap_us = u_swap * swap0;
    p.t1_cavity_us = u_cav * cav0;
    path.push_back(DescentPoint{p.t_swap_us, p.t1_cavity_us,
                                worst_case_p2q(gate_r_values, p, impl, detect)});
    if (i + 1 == count) {
      break;
    }
    const double h = 1e-6;
    const double g_swap = (eval(u_swap + h, u_cav) - eval(u_swap - h, u_cav)) / (2 * h);
    const double g_cav = (eval(u_swap, u_cav + h) - eval(u_swap, u_cav - h)) / (2 * h);
    const double norm = std::hypot(g_swap, g_cav);
    if (norm == 0.0) {
      break;
    }
    u_swap -= step * g_swap / norm;
    u_cav -= step * g_cav / norm;
    if (u_swap <= 0 || u_cav <= 0) {
      throw std::invalid_argument("descent: step left the positive domain");
    }
  }
  return path;
}

double epsilon_k(double p_l, int k) {
  require(p_l >= 0 && p_l <= 1, "epsilon_k: p_L out of [0,1]");
  require(k >= 1, "epsilon_k: k must be >= 1");
  return 1.0 - std::pow(1.0 - p_l, 1.0 / static_cast<double>(k));
}

}  // namespace torq
