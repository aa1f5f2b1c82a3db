#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace flowpart {

/// A resource cap was hit. Distinct from a definitive negative answer:
/// callers that receive this know the computation was inconclusive.
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Search and enumeration limits. Defaults are sized so the largest stock
/// instances (11 and 16 edges) complete comfortably; all are adjustable.
struct Caps {
  std::int64_t max_flows = 1'000'000;        // enumerate_flows output cap
  int max_ground = 16;                       // vertex enumeration ground size
  int max_members = 200;                     // vertex enumeration member count
  int max_blocker_ground = 24;               // blocker computation ground size
  int max_iso_ground = 14;                   // clutter isomorphism ground size
  int max_balance_dim = 20;                  // balanced-matrix test rows/cols
  std::int64_t max_minor_states = 100'000;   // strong-minor search states
  int max_family_k = 9;                      // family detectors search odd k <= this
  int max_lp_cuts = 500;                     // cycle LP working-set size
  int max_partition_vertices = 12;           // brute-force clustering
  int max_cc_edges = 24;                     // branch-and-bound edge count
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void check_deadline(const char* where) const {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      throw SizeLimitError(std::string(where) + ": deadline exceeded");
    }
  }

  Caps with_deadline_ms(std::int64_t ms) const {
    Caps c = *this;
    c.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
    return c;
  }
};

}  // namespace flowpart
