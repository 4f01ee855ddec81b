#pragma once

#include <stdexcept>
#include <string>

namespace degseq {

// Error codes carried by every exception thrown from this library, so callers
// (and tests) can dispatch on the failure kind without parsing messages.
enum class Errc {
  sum_mismatch,          // degree entries do not sum to n-1
  negative_entry,        // degree entry below zero
  empty_sequence,        // n = 0
  not_a_tree,            // parent map has a cycle or bad root
  bad_label,             // label outside [1, n]
  not_compressed,        // operation requires zeros-last degree sequence
  malformed_code,        // code multiplicities disagree with degrees
  out_of_range,          // numeric argument outside its documented domain
  budget_exceeded,       // enumeration larger than the caller's budget
  rejection_budget,      // conditioned sampler exhausted its rejection budget
  bad_weights,           // weight sequence violates w0 > 0 or max support < 2
  radius_zero,           // declared radius of convergence is zero
  no_convergence,        // iterative solver failed to converge
  sigma_zero,            // experiment requires sigma_d > 0
  precondition,          // generic violated precondition (move, companion, ...)
  parameter_order,       // k, l arguments violate their required ordering
  label_collision,       // stretch labels intersect the base tree's labels
  not_connected,         // no ancestor of the queried vertex lies in the set
  parse,                 // malformed textual input
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace degseq
