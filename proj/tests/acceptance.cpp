// Acceptance suite: one line per criterion, exit status 0 only if all pass.
// Every count comparison is exact; every criterion also has a wall-time
// budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "chainisom/closed_forms.hpp"
#include "chainisom/families.hpp"
#include "chainisom/greens.hpp"
#include "chainisom/verify.hpp"
#include "cli_runner.hpp"
#include "expected_tables.hpp"

using namespace chainisom;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok && pass) {
        pass   = false;
        detail = what;
      }
    }
  };

  struct Criterion {
    int                      id;
    std::string              name;
    double                   budget_seconds;
    std::function<Outcome()> run;
  };

  std::vector<std::vector<std::uint64_t>> parse_csv_triangle(std::string const& csv,
                                                             std::vector<std::uint64_t>& sums) {
    std::vector<std::vector<std::uint64_t>> rows;
    std::istringstream                      in(csv);
    std::string                             line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      std::vector<std::string> cells;
      std::string              cell;
      std::istringstream       ls(line);
      while (std::getline(ls, cell, ',')) {
        cells.push_back(cell);
      }
      if (line.back() == ',') {
        cells.emplace_back();
      }
      std::vector<std::uint64_t> row;
      for (std::size_t i = 1; i + 1 < cells.size(); ++i) {
        if (!cells[i].empty()) {
          row.push_back(std::stoull(cells[i]));
        }
      }
      rows.push_back(std::move(row));
      sums.push_back(std::stoull(cells.back()));
    }
    return rows;
  }

  std::uint64_t odp_order_closed(int n) {
    return 3 * (std::uint64_t{1} << n) - 2 * static_cast<std::uint64_t>(n + 1);
  }

  std::uint64_t dp_order_closed(int n) {
    auto const m = static_cast<std::uint64_t>(n + 2);
    return 3 * (std::uint64_t{1} << (n + 1)) - m * m - 1;
  }

  std::string nf(int n, Family fam) {
    return "n=" + std::to_string(n) + " " + std::string(to_string(fam));
  }

  Outcome tables() {
    Outcome o;
    struct Case {
      char const*                             args;
      expected::Triangle const*               want;
      std::vector<std::uint64_t> const*       sums;
    };
    Case const cases[] = {
        {"--family odp --by height", &expected::odp_by_height, &expected::odp_orders},
        {"--family odp --by fix", &expected::odp_by_fix, &expected::odp_orders},
        {"--family dp --by height", &expected::dp_by_height, &expected::dp_orders},
        {"--family dp --by fix", &expected::dp_by_fix, &expected::dp_orders},
    };
    for (auto const& c : cases) {
      auto const r = testing::run_cli(std::string("table ") + c.args + " --max-n 7 --format csv");
      o.require(r.exit_code == 0, std::string("table ") + c.args + " failed");
      std::vector<std::uint64_t> sums;
      auto const                 rows = parse_csv_triangle(r.out, sums);
      o.require(rows == *c.want, std::string("cells differ for ") + c.args);
      o.require(sums == *c.sums, std::string("row sums differ for ") + c.args);
    }
    return o;
  }

  Outcome orders() {
    Outcome o;
    for (int n = 0; n <= 10; ++n) {
      o.require(order(n, Family::odp) == odp_order_closed(n), "fast " + nf(n, Family::odp));
      o.require(order(n, Family::dp) == dp_order_closed(n), "fast " + nf(n, Family::dp));
    }
    for (int n = 0; n <= 7; ++n) {
      o.require(enumerate_oracle(n, Family::odp).size() == odp_order_closed(n),
                "oracle " + nf(n, Family::odp));
      o.require(enumerate_oracle(n, Family::dp).size() == dp_order_closed(n),
                "oracle " + nf(n, Family::dp));
    }
    return o;
  }

  Outcome formula_suite() {
    Outcome o;
    for (int n = 0; n <= 9; ++n) {
      for (Family fam : {Family::odp, Family::dp}) {
        auto const h = count_by_height(n, fam);
        auto const f = count_by_fix(n, fam);
        for (int k = 0; k <= n; ++k) {
          o.require(f_height(n, k, fam).value == h[k], "height " + nf(n, fam));
          o.require(f_fix(n, k, fam).value == f[k], "fix " + nf(n, fam));
        }
      }
    }
    for (int n = 3; n <= 30; ++n) {
      for (int p = 3; p <= n; ++p) {
        o.require(recurrence_check(n, p, Family::odp), "recurrence odp n=" + std::to_string(n));
        o.require(recurrence_check(n, p, Family::dp), "recurrence dp n=" + std::to_string(n));
      }
    }
    for (int n = 2; n <= 30; ++n) {
      o.require(verify_sum_identity(n), "sum identity n=" + std::to_string(n));
    }
    return o;
  }

  Outcome from_report(VerificationReport const& r) {
    Outcome o;
    if (auto const* f = r.first_failure()) {
      o.require(false, r.check + " " + f->params.dump() + " " + f->note);
    }
    return o;
  }

  Outcome phi() {
    auto const r = run_check("phi-bijection", {3, 8});
    Outcome    o = from_report(r);
    // 3 <= p <= n <= 8 gives 21 (n, p) instances.
    o.require(r.instances.size() == 21, "expected 21 instances");
    return o;
  }

  Outcome greens() {
    Outcome o = from_report(run_check("greens", {0, 5}));
    for (int n = 0; n <= 6; ++n) {
      for (Family fam : {Family::odp, Family::dp}) {
        auto const elems = enumerate_fast(n, fam);
        auto const h     = greens_classes_criterion(elems, fam, Relation::h);
        for (auto const& block : h.partition) {
          bool const ok = fam == Family::odp ? block.size() == 1
                                             : (block.size() == 1 || block.size() == 2);
          o.require(ok, "H-class size " + std::to_string(block.size()) + " in " + nf(n, fam));
        }
      }
    }
    return o;
  }

  Outcome structure() {
    Outcome o;
    for (int n = 0; n <= 5; ++n) {
      for (Family fam : {Family::odp, Family::dp}) {
        o.require(is_inverse(build_table(enumerate_fast(n, fam))), "is_inverse " + nf(n, fam));
      }
    }
    for (int n = 3; n <= 6; ++n) {
      auto const odp = build_table(enumerate_fast(n, Family::odp));
      auto const dp  = build_table(enumerate_fast(n, Family::dp));
      o.require(is_zero_e_unitary(odp).holds, "ODP 0-E-unitary n=" + std::to_string(n));
      auto const eu = is_zero_e_unitary(dp);
      o.require(!eu.holds && eu.witness && replay(dp, *eu.witness),
                "DP witness n=" + std::to_string(n));
      auto const cat = is_categorical(odp);
      o.require(!cat.holds && cat.witness && replay(odp, *cat.witness),
                "ODP categorical witness n=" + std::to_string(n));
      for (int p = 1; p <= n; ++p) {
        auto const q = build_rees_quotient(n, p);
        o.require(is_zero_e_unitary(q.table).holds && is_categorical(q.table).holds,
                  "Q(" + std::to_string(n) + "," + std::to_string(p) + ")");
      }
    }
    return o;
  }

  Outcome fix_properties() {
    Outcome o = from_report(run_check("fix-trichotomy", {0, 7}));
    if (o.pass) {
      o = from_report(run_check("dichotomy", {0, 7}));
    }
    return o;
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "tables by height and fix reproduce the published triangles", 1.0, tables},
      {2, "enumerated orders match the closed forms (fast n<=10, oracle n<=7)", 30.0, orders},
      {3, "closed forms, recurrence and sum identity", 10.0, formula_suite},
      {4, "phi is a bijection onto B and |A|+|B| = F(n;p), 3<=p<=n<=8", 10.0, phi},
      {5, "Green's criterion partitions equal the oracle; H-class sizes", 60.0, greens},
      {6, "inverse, 0-E-unitary, categorical and Rees quotients", 60.0, structure},
      {7, "fixed-point and order properties over all elements, n<=7", 30.0, fix_properties},
  };

  bool all = true;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    out;
    try {
      out = c.run();
    } catch (std::exception const& e) {
      out = Outcome{false, std::string("exception: ") + e.what()};
    }
    double const secs
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const in_time = secs < c.budget_seconds;
    bool const pass    = out.pass && in_time;
    all                = all && pass;
    std::printf("[%s] criterion %d: %s (%.2f s, budget %.0f s)",
                pass ? "PASS" : "FAIL",
                c.id,
                c.name.c_str(),
                secs,
                c.budget_seconds);
    if (!out.pass) {
      std::printf(" -- %s", out.detail.c_str());
    } else if (!in_time) {
      std::printf(" -- over budget");
    }
    std::printf("\n");
  }
  std::printf("%s\n", all ? "all acceptance criteria passed" : "acceptance FAILED");
  return all ? 0 : 1;
}
