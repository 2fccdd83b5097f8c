#pragma once

#include <stdexcept>
#include <string>

namespace braid {

// malformed input (bad text format, out-of-range index, infeasible request)
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// a configured budget (steps, vertices, iteration cap) was exhausted
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// an internal invariant failed; indicates a bug, not bad input
struct invariant_error : std::logic_error {
  explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_invariant(bool ok, const char* what) {
  if (!ok) throw invariant_error(what);
}

}  // namespace braid
