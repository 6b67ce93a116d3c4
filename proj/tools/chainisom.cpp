// chainisom: enumerate, count and check the semigroups of partial isometries
// DP_n and order-preserving partial isometries ODP_n of the chain {1..n}.
//
// Exit codes: 0 success, 1 property violation, 2 usage or cap error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chainisom/closed_forms.hpp"
#include "chainisom/families.hpp"
#include "chainisom/greens.hpp"
#include "chainisom/render.hpp"
#include "chainisom/serialize.hpp"
#include "chainisom/verify.hpp"

namespace {

  using namespace chainisom;

  constexpr int exit_violation = 1;
  constexpr int exit_usage     = 2;

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  Family family_or_throw(std::string const& s) {
    if (auto f = parse_family(s)) {
      return *f;
    }
    throw UsageError("unknown family '" + s + "' (expected dp or odp)");
  }

  void require_table_cap(int n) {
    if (n < 0 || n > table_max_n) {
      throw UsageError("multiplication tables are limited to 0 <= n <= "
                       + std::to_string(table_max_n));
    }
  }

  std::string family_title(Family fam, int n) {
    return std::string(fam == Family::dp ? "DP_" : "ODP_") + std::to_string(n);
  }

  struct EnumerateOptions {
    int                n = 0;
    std::string        family;
    std::optional<int> height;
    std::string        format = "jsonl";
    int                cap    = EnumerationLimits{}.max_n;
    bool               oracle = false;
  };

  int run_enumerate(EnumerateOptions const& o) {
    Family const fam = family_or_throw(o.family);
    bool const   text = o.format == "text";
    if (!text && o.format != "jsonl") {
      throw UsageError("unknown format '" + o.format + "' (expected jsonl or text)");
    }
    std::string buffer;
    auto        emit = [&](PartialInjection const& a) {
      buffer += text ? to_matrix(a) : to_json_line(a);
      buffer += '\n';
      if (buffer.size() > (1u << 16)) {
        std::cout << buffer;
        buffer.clear();
      }
    };
    if (o.oracle) {
      for (auto const& a : enumerate_oracle(o.n, fam)) {
        if (!o.height || a.height() == static_cast<std::size_t>(*o.height)) {
          emit(a);
        }
      }
    } else {
      enumerate_fast(o.n, fam, o.height, emit, EnumerationLimits{o.cap});
    }
    std::cout << buffer;
    return 0;
  }

  struct TableOptions {
    std::string family;
    std::string by;
    int         max_n     = 7;
    std::string format    = "text";
    bool        empirical = false;
    int         cap       = EnumerationLimits{}.max_n;
  };

  int run_table(TableOptions const& o) {
    Family const fam  = family_or_throw(o.family);
    auto const   stat = parse_statistic(o.by);
    if (!stat) {
      throw UsageError("unknown statistic '" + o.by + "' (expected height or fix)");
    }
    auto const fmt = parse_table_format(o.format);
    if (!fmt) {
      throw UsageError("unknown format '" + o.format + "' (expected text, csv or json)");
    }
    if (o.max_n < 0) {
      throw UsageError("--max-n must be non-negative");
    }
    CountTable table = o.empirical
                           ? empirical_count_table(*stat, fam, o.max_n, EnumerationLimits{o.cap})
                           : formula_count_table(*stat, fam, o.max_n);
    std::cout << render_count_table(table, *fmt);
    return 0;
  }

  int run_verify(std::string const& check, std::string const& range, std::string const& format) {
    if (!is_check_name(check)) {
      std::string known;
      for (auto name : check_names()) {
        known += (known.empty() ? "" : ", ") + std::string(name);
      }
      throw UsageError("unknown check '" + check + "' (known: " + known + ")");
    }
    if (format != "text" && format != "json") {
      throw UsageError("unknown format '" + format + "' (expected text or json)");
    }
    auto const report = run_check(check, parse_n_range(range));
    if (format == "json") {
      std::cout << report_to_json(report).dump(2) << '\n';
    } else {
      std::cout << report_to_text(report);
      if (auto const* fail = report.first_failure()) {
        std::cout << "first failure: " << fail->params.dump();
        if (fail->witness) {
          std::cout << " witness " << fail->witness->dump();
        }
        std::cout << '\n';
      }
    }
    std::cerr << "wall time: " << report.wall_seconds << " s\n";
    return report.pass ? 0 : exit_violation;
  }

  int run_greens(int n, std::string const& family, std::string const& relation, bool oracle) {
    Family const fam = family_or_throw(family);
    auto const   rel = parse_relation(relation);
    if (!rel) {
      throw UsageError("unknown relation '" + relation + "' (expected r, l, h or d)");
    }
    auto const elems = enumerate_fast(n, fam);
    if (oracle) {
      require_table_cap(n);
      auto const table = build_table(elems);
      std::cout << render_classes(elems, greens_classes_oracle(table, *rel));
    } else {
      std::cout << render_classes(elems, greens_classes_criterion(elems, fam, *rel));
    }
    return 0;
  }

  int run_structure(int n, std::string const& family, std::optional<int> rees_p) {
    Family const fam = family_or_throw(family);
    require_table_cap(n);
    if (rees_p) {
      if (fam != Family::odp) {
        throw UsageError("Rees quotients are defined for the odp family");
      }
      auto const q = build_rees_quotient(n, *rees_p);
      std::cout << render_structure(
          "Q(" + std::to_string(n) + "," + std::to_string(*rees_p) + ")", q.table);
      return 0;
    }
    auto const table = build_table(enumerate_fast(n, fam));
    std::cout << render_structure(family_title(fam, n), table);
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial isometries of a finite chain: enumeration, counting and "
               "structure checks"};
  app.require_subcommand(1);

  EnumerateOptions eo;
  auto*            enumerate = app.add_subcommand("enumerate", "Stream the elements of DP_n or ODP_n");
  enumerate->add_option("--n", eo.n, "Chain size")->required();
  enumerate->add_option("--family", eo.family, "dp or odp")->required();
  enumerate->add_option("--height", eo.height, "Only elements of this height");
  enumerate->add_option("--format", eo.format, "jsonl or text")->capture_default_str();
  enumerate->add_option("--cap", eo.cap, "Enumeration cap on n")->capture_default_str();
  enumerate->add_flag("--oracle", eo.oracle, "Filter all partial injections instead (n <= 8)");

  TableOptions to;
  auto*        table = app.add_subcommand("table", "Counts F(n;k) by height or by fixed points");
  table->add_option("--family", to.family, "dp or odp")->required();
  table->add_option("--by", to.by, "height or fix")->required();
  table->add_option("--max-n", to.max_n, "Largest n")->capture_default_str();
  table->add_option("--format", to.format, "text, csv or json")->capture_default_str();
  table->add_flag("--empirical", to.empirical, "Count by enumeration instead of closed forms");
  table->add_option("--cap", to.cap, "Enumeration cap on n")->capture_default_str();

  std::string check, range = "0..5", verify_format = "text";
  auto*       verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--check", check, "Check name")->required();
  verify->add_option("--n-range", range, "a..b")->capture_default_str();
  verify->add_option("--format", verify_format, "text or json")->capture_default_str();

  int         greens_n = 0;
  std::string greens_family, greens_relation = "d";
  bool        greens_oracle = false;
  auto*       greens = app.add_subcommand("greens", "List Green's classes");
  greens->add_option("--n", greens_n, "Chain size")->required();
  greens->add_option("--family", greens_family, "dp or odp")->required();
  greens->add_option("--classes", greens_relation, "r, l, h or d")->capture_default_str();
  greens->add_flag("--oracle", greens_oracle, "Use the multiplication-table oracle");

  int                structure_n = 0;
  std::string        structure_family;
  std::optional<int> rees_p;
  auto* structure = app.add_subcommand("structure", "Summarise structural properties");
  structure->add_option("--n", structure_n, "Chain size")->required();
  structure->add_option("--family", structure_family, "dp or odp")->required();
  structure->add_option("--rees-p", rees_p, "Use the Rees quotient Q(n,p) instead");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*enumerate) {
      return run_enumerate(eo);
    }
    if (*table) {
      return run_table(to);
    }
    if (*verify) {
      return run_verify(check, range, verify_format);
    }
    if (*greens) {
      return run_greens(greens_n, greens_family, greens_relation, greens_oracle);
    }
    if (*structure) {
      return run_structure(structure_n, structure_family, rees_p);
    }
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
