#ifndef CHAINISOM_CLOSED_FORMS_HPP
#define CHAINISOM_CLOSED_FORMS_HPP

#include <string_view>

#include "chainisom/families.hpp"
#include "chainisom/partial_injection.hpp"

namespace chainisom {

  // Every closed form below stays inside 64 bits up to this chain size;
  // intermediates are computed in 128 bits.
  inline constexpr int closed_form_max_n = 60;

  struct FormulaResult {
    Count            value = 0;
    std::string_view branch;  // which closed form produced the value
  };

  // All of these throw Error(domain_error) when k < 0, k > n or
  // n > closed_form_max_n.
  FormulaResult f_height_odp(int n, int p);
  FormulaResult f_height_dp(int n, int p);
  FormulaResult f_fix_odp(int n, int m);
  FormulaResult f_fix_dp(int n, int m);

  FormulaResult f_height(int n, int p, Family fam);
  FormulaResult f_fix(int n, int m, Family fam);

  Count order_odp(int n);
  Count order_dp(int n);
  Count order_formula(int n, Family fam);

  Count binomial(int n, int k);

  // Sum over p = 2..n of (2n-p+1)/(p+1) C(n,p) against 3*2^n - n^2 - 2n - 3.
  // Requires n >= 2.
  bool verify_sum_identity(int n);

  // F(n;p) = F(n-1;p-1) + F(n-1;p) on the closed forms, with F(n-1;p) = 0
  // when p > n-1. Requires n >= p >= 3.
  bool recurrence_check(int n, int p, Family fam);

  CountTable formula_count_table(Statistic stat, Family fam, int max_n);

  //! The map from height-(p-1) elements of ODP_{n-1} onto the height-p
  //! elements of ODP_n whose domain or image contains n.
  //!
  //! With right shoulder s = max Dom a and right waist w = max Im a:
  //!  * s == w: adjoin n -> n;
  //!  * s >  w: adjoin n -> n - s + w;
  //!  * s <  w: invert a, apply the previous case, invert back.
  //!
  //! Throws Error(domain_error) if a is empty, not in ODP or
  //! a.chain_size() != n - 1.
  PartialInjection phi_bijection(PartialInjection const& a, int n);

  //! Inclusion of ODP_{n-1} into ODP_n (same pairs, larger chain).
  PartialInjection extend_chain(PartialInjection const& a, int n);

}  // namespace chainisom

#endif
