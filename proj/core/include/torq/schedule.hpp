#ifndef TORQ_SCHEDULE_HPP
#define TORQ_SCHEDULE_HPP

#include <vector>

#include "torq/code.hpp"

namespace torq {

// One CNOT of the extraction circuit. X checks act as controls onto data;
// data act as controls onto Z checks. The category triple identifies the
// interaction class shared by all n/2 gates of its kind.
struct ScheduledGate {
  int gate_id = 0;        // unique within a pass
  CheckType check = CheckType::X;
  DataFamily family = DataFamily::L;
  int term_index = 0;     // i in 1..3
  int control_qubit = 0;
  int target_qubit = 0;
  int check_qubit = 0;
  int data_qubit = 0;
};

struct SchedulePass {
  int pass_number = 0;  // 1..7
  std::vector<ScheduledGate> gates;
  bool init_x_plus = false;   // pass 1: X checks prepared in |+>
  bool measure_z = false;     // pass 7: Z checks measured
};

// One full cycle: Z checks init |0> before pass 1, seven CNOT-bearing
// passes, X checks measured (and Z reinit) after pass 7.
struct SyndromeSchedule {
  std::vector<SchedulePass> passes;  // size 7

  std::size_t total_gates() const;
};

SyndromeSchedule build_schedule(const BBCode& code);

// True iff no qubit appears twice within any single pass.
bool passes_are_qubit_disjoint(const SyndromeSchedule& schedule);

}  // namespace torq

#endif
