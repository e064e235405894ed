#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace flatac {

enum class errc {
  empty_cardinality,
  full_cardinality,
  count_out_of_range,
  zero_has_no_cascade,
  bad_family,
  not_t_graph,
  not_properly_labeled,
  starter_index_out_of_range,
  too_many_deletions,
  out_of_top_row,
  out_of_base_interval,
  level_range,
  ground_mismatch,
  bad_core,
  bad_plan,
  out_of_small_range,
  out_of_large_range,
  out_of_level_range,
  out_of_theorem_range,
  bad_t,
  size_range,
  not_near_top,
  search_too_large,
  bad_trace,
  verification_failed,
};

constexpr std::string_view to_string(errc e) noexcept {
  switch (e) {
    case errc::empty_cardinality: return "EmptyCardinality";
    case errc::full_cardinality: return "FullCardinality";
    case errc::count_out_of_range: return "CountOutOfRange";
    case errc::zero_has_no_cascade: return "ZeroHasNoCascade";
    case errc::bad_family: return "BadFamily";
    case errc::not_t_graph: return "NotTGraph";
    case errc::not_properly_labeled: return "NotProperlyLabeled";
    case errc::starter_index_out_of_range: return "StarterIndexOutOfRange";
    case errc::too_many_deletions: return "TooManyDeletions";
    case errc::out_of_top_row: return "OutOfTopRow";
    case errc::out_of_base_interval: return "OutOfBaseInterval";
    case errc::level_range: return "LevelRange";
    case errc::ground_mismatch: return "GroundMismatch";
    case errc::bad_core: return "BadCore";
    case errc::bad_plan: return "BadPlan";
    case errc::out_of_small_range: return "OutOfSmallRange";
    case errc::out_of_large_range: return "OutOfLargeRange";
    case errc::out_of_level_range: return "OutOfLevelRange";
    case errc::out_of_theorem_range: return "OutOfTheoremRange";
    case errc::bad_t: return "BadT";
    case errc::size_range: return "SizeRange";
    case errc::not_near_top: return "NotNearTop";
    case errc::search_too_large: return "SearchTooLarge";
    case errc::bad_trace: return "BadTrace";
    case errc::verification_failed: return "VerificationFailed";
  }
  return "Unknown";
}

/// Nearest sizes on either side of a rejected target (used by OutOfTheoremRange).
struct nearest_sizes {
  std::optional<std::int64_t> below;
  std::optional<std::int64_t> above;
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  error(errc code, const std::string& what, nearest_sizes nearest)
      : error(code, what) {
    nearest_ = std::move(nearest);
  }

  [[nodiscard]] errc code() const noexcept { return code_; }
  [[nodiscard]] const nearest_sizes& nearest() const noexcept { return nearest_; }

 private:
  errc code_;
  nearest_sizes nearest_;
};

}  // namespace flatac
