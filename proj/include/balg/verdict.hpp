#pragma once

#include <string>
#include <vector>

#include "balg/algebra.hpp"

namespace balg {

/// Outcome of checking one biconditional (or identity) on a concrete instance.
struct Verdict {
  std::string check;
  bool lhs = false;
  bool rhs = false;
  bool agree = false;
  bool biconditional = true;  // false for set/tensor comparisons
  std::string note;
  std::vector<Residual> residuals;
  std::vector<std::string> witnesses;           // unmatched members, failing conditions
  std::vector<std::size_t> identification;      // coordinate permutation, when one is involved

  /// "agree (both true)" / "agree (both false)" for biconditionals, else "agree"; or "mismatch".
  std::string label() const;
};

}  // namespace balg
