#pragma once

#include <string>
#include <vector>

#include "stoim/ascent.hpp"
#include "stoim/matching.hpp"

namespace stoim {

/// Which removal or addition rule fired at a recursion step.
enum class RuleTag { Rem1, Rem2, Rem3, Add1, Add2, Add3 };

std::string to_string(RuleTag tag);

struct RemovalStep {
  Matching result;
  int extracted = 0;
  RuleTag rule = RuleTag::Rem1;
};

struct AdditionStep {
  Matching result;
  RuleTag rule = RuleTag::Add1;
};

/// One step of the full decomposition: the rule, the integer extracted
/// (or inserted), and the matchings on either side of the step.
struct TraceEntry {
  RuleTag rule = RuleTag::Rem1;
  int value = 0;
  Matching before;
  Matching after;

  std::string to_string() const;  // "Rem2 1: 2 1 4 3 -> 2 1"
};

/// Removes the reduction arc by whichever of Rem1/Rem2/Rem3 applies,
/// returning the smaller Stoimenow matching and the extracted label
/// i = stat_m(m). Requires a Stoimenow matching with at least two arcs.
/// The statistic update stat_M(result) = stat_M(m) - [i > stat_m(result)]
/// and the Stoimenow closure are verified before returning.
RemovalStep remove_arc(const Matching& m);

/// Inserts a new arc whose reduction label is i, by whichever of
/// Add1/Add2/Add3 applies; the inverse of remove_arc. Requires a
/// Stoimenow matching and 0 <= i <= 1 + stat_M(m). Verifies
/// stat_m(result) = i, the statistic update, and the Stoimenow closure.
AdditionStep add_arc(const Matching& m, int i);

/// Encodes a Stoimenow matching with n arcs as an ascent sequence of
/// length n: the single-arc matching maps to (0), and each removal step
/// contributes its extracted label as the next entry from the right.
AscentSequence encode(const Matching& m);

/// Inverse of encode: folds add_arc over x_2,...,x_n starting from the
/// single-arc matching.
Matching decode(const AscentSequence& x);

/// The removal steps performed by encode, in application order (the
/// first entry removes an arc from m itself).
std::vector<TraceEntry> trace_encode(const Matching& m);

}  // namespace stoim
