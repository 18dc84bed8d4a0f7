#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace randtherm {

struct Precondition {
  std::string description;
  bool satisfied = false;
};

enum class BoundStatus { Pass, Fail, NotApplicable, NotEvaluated };

// One named inequality lhs <= rhs. The verdict is always derived from the
// stored sides, never set directly.
struct BoundReport {
  std::string name;
  double lhs = std::nan("");
  double rhs = std::nan("");
  double tolerance = 1e-9;
  std::vector<Precondition> preconditions;
  std::optional<long long> block;  // per-block ledger rows
  std::optional<double> param;     // t or T for time-indexed rows

  bool preconditions_hold() const {
    for (const auto& p : preconditions)
      if (!p.satisfied) return false;
    return true;
  }

  BoundStatus status() const {
    if (!preconditions_hold()) return BoundStatus::NotApplicable;
    if (std::isnan(lhs) || std::isnan(rhs)) return BoundStatus::NotEvaluated;
    return lhs <= rhs + tolerance ? BoundStatus::Pass : BoundStatus::Fail;
  }

  double slack() const { return rhs - lhs; }
};

const char* to_string(BoundStatus s);

// Forecast of the thermalization time scale: at time T the mean time-averaged
// distance obeys E[Delta(T)]^2 <= bound; optional Markov-composed floors.
struct ThermalizationForecast {
  double T = 0.0;
  double bound_on_EDelta2 = 0.0;
  std::optional<double> probability_floor;
  std::optional<double> distance_threshold;
  std::optional<double> fraction_floor;
  bool probability_clipped = false;  // raw floor fell outside [0, 1]
  bool fraction_clipped = false;
};

// P[Delta <= y c] >= 1 - 1/y, and the fraction of times with distance
// <= 1/x is >= 1 - x y c. Floors are clipped to [0, 1] with the clip flagged.
ThermalizationForecast compose_markov(ThermalizationForecast f, double c, double x, double y);

}  // namespace randtherm
