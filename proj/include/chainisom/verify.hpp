#ifndef CHAINISOM_VERIFY_HPP
#define CHAINISOM_VERIFY_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chainisom/greens.hpp"

namespace chainisom {

  // Largest chain for which commands build full multiplication tables.
  inline constexpr int table_max_n = 7;

  struct NRange {
    int lo = 0;
    int hi = 0;
  };

  // "a..b" or a single integer. Throws Error(parse_error).
  NRange parse_n_range(std::string_view text);

  struct VerificationInstance {
    nlohmann::json                params;
    bool                          pass = true;
    std::optional<nlohmann::json> witness;
    std::string                   note;
  };

  struct VerificationReport {
    std::string                       check;
    NRange                            range;
    std::vector<VerificationInstance> instances;
    bool                              pass         = true;
    double                            wall_seconds = 0.0;

    // First failing instance, if any.
    VerificationInstance const* first_failure() const;
  };

  std::span<std::string_view const> check_names() noexcept;
  bool                              is_check_name(std::string_view name) noexcept;

  //! Runs one named check over every n in the range.
  //!
  //! Throws Error(parse_error) for an unknown check and Error(limit_exceeded)
  //! when the range exceeds what the check can enumerate.
  VerificationReport run_check(std::string_view check, NRange range);

  nlohmann::json report_to_json(VerificationReport const& r);
  std::string    report_to_text(VerificationReport const& r);

  nlohmann::json witness_to_json(SemigroupTable const& t, Witness const& w);

}  // namespace chainisom

#endif
