// budget.hpp -- plain-text link budget report and per-m sublook CSV.
#pragma once

#include <string>

#include "sarcomm/config.hpp"

namespace sarcomm {

struct BudgetReport {
  std::string text;
  std::string sublook_csv;  // rows: m, delta_t_s, sublook SNRs, BER
  bool radiometric_ok = true;
};

BudgetReport make_budget_report(const ScenarioConfig& cfg);

}  // namespace sarcomm
