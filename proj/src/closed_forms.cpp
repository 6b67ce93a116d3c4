#include "chainisom/closed_forms.hpp"

#include <string>

namespace chainisom {

  namespace {

    using Wide = __int128;

    void check_range(int n, int k, char const* what) {
      if (n < 0 || k < 0 || k > n) {
        throw Error(ErrorKind::domain_error,
                    std::string(what) + " requires 0 <= k <= n, found n = "
                        + std::to_string(n) + ", k = " + std::to_string(k));
      }
      if (n > closed_form_max_n) {
        throw Error(ErrorKind::domain_error,
                    "closed forms are capped at n = "
                        + std::to_string(closed_form_max_n));
      }
    }

    Wide wide_binomial(int n, int k) {
      if (k < 0 || k > n) {
        return 0;
      }
      Wide r = 1;
      for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
      }
      return r;
    }

    Wide pow2(int e) {
      return Wide{1} << e;
    }

    Count exact_div(Wide num, Wide den, char const* what) {
      if (num % den != 0) {
        throw Error(ErrorKind::domain_error,
                    std::string("non-exact division in ") + what);
      }
      return static_cast<Count>(num / den);
    }

    // (2n-p+1) C(n,p) / (p+1)
    Count odp_height_term(int n, int p) {
      return exact_div(Wide{2 * n - p + 1} * wide_binomial(n, p),
                       p + 1,
                       "(2n-p+1)C(n,p)/(p+1)");
    }

  }  // namespace

  Count binomial(int n, int k) {
    check_range(n, k, "binomial");
    return static_cast<Count>(wide_binomial(n, k));
  }

  FormulaResult f_height_odp(int n, int p) {
    check_range(n, p, "f_height_odp");
    if (p == 0) {
      return {1, "odp-height-p0"};
    }
    return {odp_height_term(n, p), "odp-height-closed"};
  }

  FormulaResult f_height_dp(int n, int p) {
    check_range(n, p, "f_height_dp");
    if (p == 0) {
      return {1, "dp-height-p0"};
    }
    if (p == 1) {
      return {static_cast<Count>(n) * static_cast<Count>(n), "dp-height-p1"};
    }
    return {2 * odp_height_term(n, p), "dp-height-closed"};
  }

  FormulaResult f_fix_odp(int n, int m) {
    check_range(n, m, "f_fix_odp");
    if (m >= 1) {
      return {binomial(n, m), "odp-fix-binomial"};
    }
    return {static_cast<Count>(pow2(n + 1) - (2 * n + 1)), "odp-fix-m0"};
  }

  FormulaResult f_fix_dp(int n, int m) {
    check_range(n, m, "f_fix_dp");
    if (m >= 2) {
      return {binomial(n, m), "dp-fix-binomial"};
    }
    bool const even = n % 2 == 0;
    if (m == 1) {
      if (even) {
        return {exact_div(2 * (pow2(n) - 1), 3, "2(2^n-1)/3"), "dp-fix-m1-even"};
      }
      return {exact_div(2 * (pow2(n - 1) - 1), 3, "2(2^(n-1)-1)/3")
                  + static_cast<Count>(pow2(n - 1)),
              "dp-fix-m1-odd"};
    }
    Wide const poly = Wide{3} * n * n + Wide{9} * n + 10;
    if (even) {
      return {exact_div(13 * pow2(n) - poly, 3, "(13*2^n-(3n^2+9n+10))/3"),
              "dp-fix-m0-even"};
    }
    return {exact_div(25 * pow2(n - 1) - poly, 3, "(25*2^(n-1)-(3n^2+9n+10))/3"),
            "dp-fix-m0-odd"};
  }

  FormulaResult f_height(int n, int p, Family fam) {
    return fam == Family::dp ? f_height_dp(n, p) : f_height_odp(n, p);
  }

  FormulaResult f_fix(int n, int m, Family fam) {
    return fam == Family::dp ? f_fix_dp(n, m) : f_fix_odp(n, m);
  }

  Count order_odp(int n) {
    check_range(n, 0, "order_odp");
    return static_cast<Count>(3 * pow2(n) - 2 * (n + 1));
  }

  Count order_dp(int n) {
    check_range(n, 0, "order_dp");
    return static_cast<Count>(3 * pow2(n + 1) - Wide{n + 2} * (n + 2) - 1);
  }

  Count order_formula(int n, Family fam) {
    return fam == Family::dp ? order_dp(n) : order_odp(n);
  }

  bool verify_sum_identity(int n) {
    if (n < 2) {
      throw Error(ErrorKind::domain_error,
                  "sum identity requires n >= 2, found " + std::to_string(n));
    }
    check_range(n, 0, "verify_sum_identity");
    Wide lhs = 0;
    for (int p = 2; p <= n; ++p) {
      lhs += odp_height_term(n, p);
    }
    Wide rhs = 3 * pow2(n) - Wide{n} * n - 2 * n - 3;
    return lhs == rhs;
  }

  bool recurrence_check(int n, int p, Family fam) {
    if (!(n >= p && p >= 3)) {
      throw Error(ErrorKind::domain_error,
                  "recurrence requires n >= p >= 3, found n = " + std::to_string(n)
                      + ", p = " + std::to_string(p));
    }
    Count const lhs   = f_height(n, p, fam).value;
    Count const left  = f_height(n - 1, p - 1, fam).value;
    Count const right = p > n - 1 ? 0 : f_height(n - 1, p, fam).value;
    return lhs == left + right;
  }

  CountTable formula_count_table(Statistic stat, Family fam, int max_n) {
    check_range(max_n, 0, "formula_count_table");
    CountTable table{stat, fam, {}, {}};
    for (int n = 0; n <= max_n; ++n) {
      std::vector<Count> row;
      Count              sum = 0;
      for (int k = 0; k <= n; ++k) {
        auto v = stat == Statistic::height ? f_height(n, k, fam) : f_fix(n, k, fam);
        row.push_back(v.value);
        sum += v.value;
      }
      table.rows.push_back(std::move(row));
      table.row_sums.push_back(sum);
    }
    return table;
  }

  namespace {

    PartialInjection adjoin_top(PartialInjection const& a, int n) {
      auto const s = statistics(a);
      Point      w = *s.right_waist;
      Point      r = *s.right_shoulder;
      std::vector<Pair> pairs(a.pairs().begin(), a.pairs().end());
      // r < n, so (n, n - r + w) sorts last.
      pairs.push_back({n, n - r + w});
      return PartialInjection::make(n, std::move(pairs));
    }

  }  // namespace

  PartialInjection phi_bijection(PartialInjection const& a, int n) {
    if (a.chain_size() != n - 1) {
      throw Error(ErrorKind::domain_error,
                  "phi expects a map on X_" + std::to_string(n - 1) + ", found X_"
                      + std::to_string(a.chain_size()));
    }
    if (a.empty()) {
      throw Error(ErrorKind::domain_error,
                  "phi is undefined on the empty map (no shoulder or waist)");
    }
    if (!is_member(a, Family::odp)) {
      throw Error(ErrorKind::domain_error, "phi expects an element of ODP");
    }
    auto const s = statistics(a);
    if (*s.right_shoulder >= *s.right_waist) {
      // Covers both s == w (adjoin n -> n) and s > w.
      return adjoin_top(a, n);
    }
    return inverse(adjoin_top(inverse(a), n));
  }

  PartialInjection extend_chain(PartialInjection const& a, int n) {
    if (n < a.chain_size()) {
      throw Error(ErrorKind::domain_error, "cannot shrink the chain");
    }
    return PartialInjection::make(
        n, std::vector<Pair>(a.pairs().begin(), a.pairs().end()));
  }

}  // namespace chainisom
