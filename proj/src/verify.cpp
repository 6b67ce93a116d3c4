#include "chainisom/verify.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

#include "chainisom/closed_forms.hpp"
#include "chainisom/serialize.hpp"

namespace chainisom {

  namespace {

    constexpr std::array<std::string_view, 13> check_list{"closure",
                                                          "fix-trichotomy",
                                                          "dichotomy",
                                                          "oracle-equivalence",
                                                          "formulas",
                                                          "recurrence",
                                                          "sum-identity",
                                                          "phi-bijection",
                                                          "greens",
                                                          "eunitary",
                                                          "categorical",
                                                          "rees",
                                                          "inverse-laws"};

    constexpr std::array<Family, 2> both_families{Family::odp, Family::dp};

    int parse_int(std::string_view s) {
      int  v   = 0;
      auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw Error(ErrorKind::parse_error, "not an integer: '" + std::string(s) + "'");
      }
      return v;
    }

    nlohmann::json params(int n, Family fam) {
      return {{"n", n}, {"family", std::string(to_string(fam))}};
    }

    nlohmann::json elements_json(std::initializer_list<PartialInjection> xs) {
      auto out = nlohmann::json::array();
      for (auto const& x : xs) {
        out.push_back(to_json(x));
      }
      return out;
    }

    using Instances = std::vector<VerificationInstance>;

    void require_cap(std::string_view check, NRange r, int lo, int hi) {
      if (r.lo > r.hi || r.lo < lo || r.hi > hi) {
        throw Error(ErrorKind::limit_exceeded,
                    "check '" + std::string(check) + "' supports " + std::to_string(lo)
                        + " <= n <= " + std::to_string(hi));
      }
    }

    // Runs `pred` over every element and reports the first counterexample.
    VerificationInstance for_all_elements(
        nlohmann::json                                p,
        std::vector<PartialInjection> const&          elems,
        std::function<bool(PartialInjection const&)> const& pred) {
      VerificationInstance inst{std::move(p), true, std::nullopt, ""};
      for (auto const& a : elems) {
        if (!pred(a)) {
          inst.pass    = false;
          inst.witness = nlohmann::json{{"element", to_json(a)}};
          break;
        }
      }
      return inst;
    }

    ////////////////////////////////////////////////////////////////////////
    // Individual checks
    ////////////////////////////////////////////////////////////////////////

    void check_closure(NRange r, Instances& out) {
      require_cap("closure", r, 0, 10);
      for (int n = r.lo; n <= r.hi; ++n) {
        for (Family fam : both_families) {
          auto                 elems = enumerate_fast(n, fam);
          VerificationInstance inst{params(n, fam), true, std::nullopt, ""};
          for (std::size_t i = 0; i < elems.size() && inst.pass; ++i) {
            for (auto const& b : elems) {
              auto const ab = compose(elems[i], b);
              if (!is_member(ab, fam)) {
                inst.pass    = false;
                inst.witness = nlohmann::json{
                    {"elements", elements_json({elems[i], b})}, {"product", to_json(ab)}};
                break;
              }
            }
          }
          out.push_back(std::move(inst));
        }
      }
    }

    void check_inverse_laws(NRange r, Instances& out) {
      require_cap("inverse-laws", r, 0, 12);
      for (int n = r.lo; n <= r.hi; ++n) {
        for (Family fam : both_families) {
          out.push_back(for_all_elements(
              params(n, fam), enumerate_fast(n, fam), [fam](PartialInjection const& a) {
                auto const inv = inverse(a);
                return compose(compose(a, inv), a) == a
                       && compose(compose(inv, a), inv) == inv && inverse(inv) == a
                       && is_member(inv, fam);
              }));
        }
      }
    }

    void check_fix_properties(NRange r, Instances& out) {
      require_cap("fix-trichotomy", r, 0, 12);
      using Pred = std::function<bool(PartialInjection const&)>;
      struct Property {
        char const* name;
        Family      fam;
        Pred        pred;
      };
      std::vector<Property> const props{
          {"fix in {0,1,height}",
           Family::dp,
           [](PartialInjection const& a) {
             auto f = statistics(a).fix_count;
             return f == 0 || f == 1 || f == a.height();
           }},
          {"fix > 1 implies idempotent",
           Family::dp,
           [](PartialInjection const& a) {
             return statistics(a).fix_count <= 1 || is_idempotent(a);
           }},
          {"1 or n fixed implies partial identity",
           Family::dp,
           [](PartialInjection const& a) {
             int const n     = a.chain_size();
             bool      ends  = a(1) == std::optional<Point>(1)
                         || a(n) == std::optional<Point>(n);
             return !ends || is_partial_identity(a);
           }},
          {"single fixed point i implies x + xa = 2i",
           Family::dp,
           [](PartialInjection const& a) {
             auto s = statistics(a);
             if (s.fix_count != 1) {
               return true;
             }
             Point const i = s.fix_set.front();
             return std::all_of(a.pairs().begin(), a.pairs().end(), [i](Pair const& p) {
               return p.x + p.y == 2 * i;
             });
           }},
          {"n in Dom and Im implies n fixed",
           Family::odp,
           [](PartialInjection const& a) {
             int const  n  = a.chain_size();
             auto const im = a.image();
             bool in_both  = a(n).has_value()
                            && std::binary_search(im.begin(), im.end(), n);
             return !in_both || a(n) == std::optional<Point>(n);
           }},
          {"fix >= 1 implies idempotent",
           Family::odp,
           [](PartialInjection const& a) {
             return statistics(a).fix_count == 0 || is_idempotent(a);
           }},
      };
      for (int n = r.lo; n <= r.hi; ++n) {
        auto const dp  = enumerate_fast(n, Family::dp);
        auto const odp = enumerate_fast(n, Family::odp);
        for (auto const& prop : props) {
          auto p        = params(n, prop.fam);
          p["property"] = prop.name;
          out.push_back(
              for_all_elements(std::move(p), prop.fam == Family::dp ? dp : odp, prop.pred));
        }
      }
    }

    void check_dichotomy(NRange r, Instances& out) {
      require_cap("dichotomy", r, 0, 12);
      for (int n = r.lo; n <= r.hi; ++n) {
        out.push_back(for_all_elements(
            params(n, Family::dp),
            enumerate_fast(n, Family::dp),
            [](PartialInjection const& a) {
              return is_order_preserving(a) || is_order_reversing(a);
            }));
      }
    }

    void check_oracle_equivalence(NRange r, Instances& out) {
      require_cap("oracle-equivalence", r, 0, oracle_max_n);
      for (int n = r.lo; n <= r.hi; ++n) {
        for (Family fam : both_families) {
          auto fast   = enumerate_fast(n, fam);
          auto oracle = enumerate_oracle(n, fam);
          VerificationInstance inst{params(n, fam), true, std::nullopt, ""};
          std::unordered_set<PartialInjection> seen(fast.begin(), fast.end());
          if (seen.size() != fast.size()) {
            inst.pass = false;
            inst.note = "fast enumeration emitted duplicates";
          } else if (!std::is_sorted(fast.begin(), fast.end())) {
            inst.pass = false;
            inst.note = "fast enumeration is not in canonical order";
          } else if (fast != oracle) {
            inst.pass = false;
            std::vector<PartialInjection> diff;
            std::set_symmetric_difference(fast.begin(),
                                          fast.end(),
                                          oracle.begin(),
                                          oracle.end(),
                                          std::back_inserter(diff));
            inst.note = "fast " + std::to_string(fast.size()) + " vs oracle "
                        + std::to_string(oracle.size());
            if (!diff.empty()) {
              inst.witness = nlohmann::json{{"element", to_json(diff.front())}};
            }
          }
          out.push_back(std::move(inst));
        }
        // ODP_n ⊆ DP_n
        auto const           odp = enumerate_fast(n, Family::odp);
        auto const           dp  = enumerate_fast(n, Family::dp);
        std::unordered_set<PartialInjection> dps(dp.begin(), dp.end());
        auto p        = params(n, Family::odp);
        p["property"] = "ODP subset of DP";
        out.push_back(for_all_elements(std::move(p), odp, [&dps](PartialInjection const& a) {
          return dps.contains(a);
        }));
      }
    }

    void check_formulas(NRange r, Instances& out) {
      require_cap("formulas", r, 0, EnumerationLimits{}.max_n);
      for (int n = r.lo; n <= r.hi; ++n) {
        for (Family fam : both_families) {
          auto const by_height = count_by_height(n, fam);
          auto const by_fix    = count_by_fix(n, fam);
          VerificationInstance inst{params(n, fam), true, std::nullopt, ""};
          auto mismatch = [&](char const* what, int k, Count got, Count want) {
            inst.pass    = false;
            inst.witness = nlohmann::json{
                {"statistic", what}, {"k", k}, {"enumerated", got}, {"formula", want}};
          };
          for (int k = 0; k <= n && inst.pass; ++k) {
            if (auto f = f_height(n, k, fam).value; f != by_height[k]) {
              mismatch("height", k, by_height[k], f);
            }
          }
          for (int k = 0; k <= n && inst.pass; ++k) {
            if (auto f = f_fix(n, k, fam).value; f != by_fix[k]) {
              mismatch("fix", k, by_fix[k], f);
            }
          }
          if (inst.pass) {
            Count total = 0;
            for (Count c : by_height) {
              total += c;
            }
            if (total != order_formula(n, fam)) {
              mismatch("order", -1, total, order_formula(n, fam));
            }
          }
          out.push_back(std::move(inst));
        }
      }
    }

    void check_recurrence(NRange r, Instances& out) {
      require_cap("recurrence", r, 0, closed_form_max_n);
      for (int n = std::max(r.lo, 3); n <= r.hi; ++n) {
        for (Family fam : both_families) {
          VerificationInstance inst{params(n, fam), true, std::nullopt, ""};
          for (int p = 3; p <= n; ++p) {
            if (!recurrence_check(n, p, fam)) {
              inst.pass    = false;
              inst.witness = nlohmann::json{{"p", p}};
              break;
            }
          }
          out.push_back(std::move(inst));
        }
      }
    }

    void check_sum_identity(NRange r, Instances& out) {
      require_cap("sum-identity", r, 0, closed_form_max_n);
      for (int n = std::max(r.lo, 2); n <= r.hi; ++n) {
        out.push_back({nlohmann::json{{"n", n}}, verify_sum_identity(n), std::nullopt, ""});
      }
    }

    // Image of Φ on the height-(p-1) elements of ODP_{n-1} against the set
    // B of height-p elements of ODP_n touching n; also |A| + |B| = F(n;p)
    // where A is the image of the inclusion of height-p elements of ODP_{n-1}.
    VerificationInstance phi_instance(int n, int p) {
      VerificationInstance inst{nlohmann::json{{"n", n}, {"p", p}}, true, std::nullopt, ""};
      std::vector<PartialInjection> images;
      enumerate_fast(n - 1, Family::odp, p - 1, [&](PartialInjection const& a) {
        images.push_back(phi_bijection(a, n));
      });
      std::vector<PartialInjection> a_set;
      enumerate_fast(n - 1, Family::odp, p, [&](PartialInjection const& a) {
        a_set.push_back(extend_chain(a, n));
      });
      std::vector<PartialInjection> b_set;
      std::vector<PartialInjection> all;
      enumerate_fast(n, Family::odp, p, [&](PartialInjection const& a) {
        all.push_back(a);
        auto const im = a.image();
        if (a(n) || std::binary_search(im.begin(), im.end(), n)) {
          b_set.push_back(a);
        }
      });
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        inst.pass    = false;
        inst.note    = "phi is not injective";
        inst.witness = nlohmann::json{
            {"element", to_json(*std::adjacent_find(images.begin(), images.end()))}};
        return inst;
      }
      if (images != b_set) {
        inst.pass = false;
        inst.note = "image of phi is not B (" + std::to_string(images.size()) + " vs "
                    + std::to_string(b_set.size()) + ")";
        return inst;
      }
      std::vector<PartialInjection> merged;
      std::sort(a_set.begin(), a_set.end());
      std::merge(a_set.begin(), a_set.end(), b_set.begin(), b_set.end(),
                 std::back_inserter(merged));
      if (merged != all || all.size() != f_height_odp(n, p).value) {
        inst.pass = false;
        inst.note = "A and B do not partition the height-p elements";
        return inst;
      }
      inst.note = "|A| = " + std::to_string(a_set.size())
                  + ", |B| = " + std::to_string(b_set.size());
      return inst;
    }

    void check_phi(NRange r, Instances& out) {
      require_cap("phi-bijection", r, 0, 14);
      for (int n = std::max(r.lo, 3); n <= r.hi; ++n) {
        for (int p = 3; p <= n; ++p) {
          out.push_back(phi_instance(n, p));
        }
      }
    }

    void check_greens(NRange r, Instances& out) {
      require_cap("greens", r, 0, 6);
      constexpr std::array<Relation, 4> relations{
          Relation::r, Relation::l, Relation::h, Relation::d};
      for (int n = r.lo; n <= r.hi; ++n) {
        for (Family fam : both_families) {
          auto const elems = enumerate_fast(n, fam);
          auto const table = build_table(elems);
          for (Relation rel : relations) {
            auto p        = params(n, fam);
            p["relation"] = std::string(to_string(rel));
            auto crit     = greens_classes_criterion(elems, fam, rel);
            auto orac     = greens_classes_oracle(table, rel);
            VerificationInstance inst{std::move(p), crit == orac, std::nullopt, ""};
            inst.note = std::to_string(crit.partition.size()) + " classes";
            if (rel == Relation::h) {
              std::size_t const bound = fam == Family::odp ? 1 : 2;
              for (auto const& block : crit.partition) {
                if (block.size() > bound) {
                  inst.pass    = false;
                  inst.witness = nlohmann::json{{"element", to_json(elems[block.front()])},
                                                {"h_class_size", block.size()}};
                  break;
                }
              }
            }
            out.push_back(std::move(inst));
          }
        }
      }
    }

    void check_eunitary(NRange r, Instances& out) {
      require_cap("eunitary", r, 0, table_max_n);
      for (int n = r.lo; n <= r.hi; ++n) {
        {
          auto const t   = build_table(enumerate_fast(n, Family::odp));
          auto const res = is_zero_e_unitary(t);
          VerificationInstance inst{params(n, Family::odp), res.holds, std::nullopt,
                                    "0-E-unitary: " + std::string(res.holds ? "true" : "false")};
          if (res.witness) {
            inst.witness = witness_to_json(t, *res.witness);
          }
          out.push_back(std::move(inst));
        }
        if (n >= 3) {
          auto const t   = build_table(enumerate_fast(n, Family::dp));
          auto const res = is_zero_e_unitary(t);
          bool const ok  = !res.holds && res.witness && replay(t, *res.witness);
          VerificationInstance inst{params(n, Family::dp), ok, std::nullopt,
                                    "0-E-unitary: " + std::string(res.holds ? "true" : "false")
                                        + " (expected false)"};
          if (res.witness) {
            inst.witness = witness_to_json(t, *res.witness);
          }
          out.push_back(std::move(inst));
        }
      }
    }

    VerificationInstance quotient_instance(int n, int p, bool full) {
      auto const q    = build_rees_quotient(n, p);
      auto const& t   = q.table;
      auto const  cat = is_categorical(t);
      auto const  eu  = is_zero_e_unitary(t);
      VerificationInstance inst{nlohmann::json{{"n", n}, {"p", p}}, true, std::nullopt, ""};
      inst.pass = cat.holds && eu.holds;
      if (full) {
        inst.pass = inst.pass && is_associative(t) && is_inverse(t)
                    && t.size() == f_height_odp(n, p).value + 1;
      }
      inst.note = "|Q| = " + std::to_string(t.size()) + ", categorical: "
                  + (cat.holds ? "true" : "false")
                  + ", 0-E-unitary: " + (eu.holds ? "true" : "false");
      if (cat.witness) {
        inst.witness = witness_to_json(t, *cat.witness);
      } else if (eu.witness) {
        inst.witness = witness_to_json(t, *eu.witness);
      }
      return inst;
    }

    void check_categorical(NRange r, Instances& out) {
      require_cap("categorical", r, 0, table_max_n);
      for (int n = r.lo; n <= r.hi; ++n) {
        if (n >= 3) {
          auto const t   = build_table(enumerate_fast(n, Family::odp));
          auto const res = is_categorical(t);
          bool const ok  = !res.holds && res.witness && replay(t, *res.witness);
          VerificationInstance inst{params(n, Family::odp), ok, std::nullopt,
                                    "categorical: " + std::string(res.holds ? "true" : "false")
                                        + " (expected false)"};
          if (res.witness) {
            inst.witness = witness_to_json(t, *res.witness);
          }
          out.push_back(std::move(inst));
        }
        for (int p = 1; p <= n; ++p) {
          out.push_back(quotient_instance(n, p, false));
        }
      }
    }

    void check_rees(NRange r, Instances& out) {
      require_cap("rees", r, 0, table_max_n);
      for (int n = r.lo; n <= r.hi; ++n) {
        for (int p = 1; p <= n; ++p) {
          out.push_back(quotient_instance(n, p, true));
        }
      }
    }

  }  // namespace

  NRange parse_n_range(std::string_view text) {
    auto const dots = text.find("..");
    NRange     r;
    if (dots == std::string_view::npos) {
      r.lo = r.hi = parse_int(text);
    } else {
      r.lo = parse_int(text.substr(0, dots));
      r.hi = parse_int(text.substr(dots + 2));
    }
    if (r.lo < 0 || r.lo > r.hi) {
      throw Error(ErrorKind::parse_error, "bad range '" + std::string(text) + "'");
    }
    return r;
  }

  VerificationInstance const* VerificationReport::first_failure() const {
    for (auto const& inst : instances) {
      if (!inst.pass) {
        return &inst;
      }
    }
    return nullptr;
  }

  std::span<std::string_view const> check_names() noexcept {
    return check_list;
  }

  bool is_check_name(std::string_view name) noexcept {
    return std::find(check_list.begin(), check_list.end(), name) != check_list.end();
  }

  VerificationReport run_check(std::string_view check, NRange range) {
    using Runner = void (*)(NRange, Instances&);
    static constexpr std::array<std::pair<std::string_view, Runner>, 13> runners{{
        {"closure", check_closure},
        {"fix-trichotomy", check_fix_properties},
        {"dichotomy", check_dichotomy},
        {"oracle-equivalence", check_oracle_equivalence},
        {"formulas", check_formulas},
        {"recurrence", check_recurrence},
        {"sum-identity", check_sum_identity},
        {"phi-bijection", check_phi},
        {"greens", check_greens},
        {"eunitary", check_eunitary},
        {"categorical", check_categorical},
        {"rees", check_rees},
        {"inverse-laws", check_inverse_laws},
    }};
    auto it = std::find_if(runners.begin(), runners.end(), [check](auto const& r) {
      return r.first == check;
    });
    if (it == runners.end()) {
      throw Error(ErrorKind::parse_error, "unknown check '" + std::string(check) + "'");
    }
    VerificationReport report;
    report.check = std::string(check);
    report.range = range;
    auto const start = std::chrono::steady_clock::now();
    it->second(range, report.instances);
    report.wall_seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.pass = report.first_failure() == nullptr;
    return report;
  }

  nlohmann::json witness_to_json(SemigroupTable const& t, Witness const& w) {
    auto elems = nlohmann::json::array();
    for (Index i : w.elements) {
      auto e     = to_json(t.element(i));
      e["index"] = i;
      e["label"] = t.label(i);
      elems.push_back(std::move(e));
    }
    return nlohmann::json{{"kind", std::string(to_string(w.kind))},
                          {"elements", std::move(elems)}};
  }

  nlohmann::json report_to_json(VerificationReport const& r) {
    auto instances = nlohmann::json::array();
    for (auto const& inst : r.instances) {
      nlohmann::json j{{"params", inst.params}, {"pass", inst.pass}};
      if (inst.witness) {
        j["witness"] = *inst.witness;
      }
      if (!inst.note.empty()) {
        j["note"] = inst.note;
      }
      instances.push_back(std::move(j));
    }
    return nlohmann::json{{"check", r.check},
                          {"range", std::to_string(r.range.lo) + ".." + std::to_string(r.range.hi)},
                          {"instances", std::move(instances)},
                          {"pass", r.pass}};
  }

  std::string report_to_text(VerificationReport const& r) {
    std::ostringstream out;
    for (auto const& inst : r.instances) {
      out << (inst.pass ? "PASS " : "FAIL ") << r.check << ' ' << inst.params.dump();
      if (!inst.note.empty()) {
        out << "  " << inst.note;
      }
      if (inst.witness) {
        out << "  witness " << inst.witness->dump();
      }
      out << '\n';
    }
    out << r.check << ' ' << r.range.lo << ".." << r.range.hi << ": "
        << (r.pass ? "pass" : "FAIL") << " (" << r.instances.size() << " instances)\n";
    return out.str();
  }

}  // namespace chainisom
