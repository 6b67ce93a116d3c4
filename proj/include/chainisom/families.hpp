#ifndef CHAINISOM_FAMILIES_HPP
#define CHAINISOM_FAMILIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "chainisom/partial_injection.hpp"

namespace chainisom {

  // DP: partial isometries of X_n. ODP: the order-preserving ones.
  enum class Family { dp, odp };

  enum class Statistic { height, fix };

  std::string_view to_string(Family fam) noexcept;
  std::string_view to_string(Statistic stat) noexcept;
  std::optional<Family>    parse_family(std::string_view text) noexcept;
  std::optional<Statistic> parse_statistic(std::string_view text) noexcept;

  using Count = std::uint64_t;

  struct EnumerationLimits {
    int max_n = 20;
  };

  // Generating all of I_n is only feasible for small n.
  inline constexpr int oracle_max_n = 8;

  //! Triangle of counts F(n;k), 0 <= k <= n <= max_n, for one statistic.
  struct CountTable {
    Statistic                       statistic = Statistic::height;
    Family                          family    = Family::dp;
    std::vector<std::vector<Count>> rows;
    std::vector<Count>              row_sums;

    friend bool operator==(CountTable const&, CountTable const&) = default;
  };

  using ElementVisitor = std::function<void(PartialInjection const&)>;

  bool is_member(PartialInjection const& a, Family fam) noexcept;

  //! Emits every element of the family on X_n exactly once, in canonical
  //! order (height, then domain, then image).
  //!
  //! Every partial isometry is the restriction of a translation x -> x + t
  //! or a reflection x -> c - x, so for each domain D the candidate images
  //! are the translates of D that fit in X_n and, for DP, the reflections
  //! of D that fit. Maps of height <= 1 are produced by the translation pass
  //! only.
  //!
  //! Throws Error(limit_exceeded) if n > limits.max_n, Error(domain_error)
  //! if n < 0.
  void enumerate_fast(int                   n,
                      Family                fam,
                      std::optional<int>    height_filter,
                      ElementVisitor const& visit,
                      EnumerationLimits     limits = {});

  std::vector<PartialInjection> enumerate_fast(int                n,
                                               Family             fam,
                                               std::optional<int> height_filter = {},
                                               EnumerationLimits  limits = {});

  //! Independent route: generates every partial injection of X_n and keeps
  //! those satisfying is_member. Output is in canonical order.
  //!
  //! Throws Error(limit_exceeded) if n > oracle_max_n.
  void enumerate_oracle(int n, Family fam, ElementVisitor const& visit);
  std::vector<PartialInjection> enumerate_oracle(int n, Family fam);

  std::vector<Count> count_by_height(int n, Family fam, EnumerationLimits limits = {});
  std::vector<Count> count_by_fix(int n, Family fam, EnumerationLimits limits = {});
  Count              order(int n, Family fam, EnumerationLimits limits = {});

  CountTable empirical_count_table(Statistic         stat,
                                   Family            fam,
                                   int               max_n,
                                   EnumerationLimits limits = {});

}  // namespace chainisom

#endif
