#include "chainisom/families.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <string>

namespace chainisom {

  std::string_view to_string(Family fam) noexcept {
    return fam == Family::dp ? "dp" : "odp";
  }

  std::string_view to_string(Statistic stat) noexcept {
    return stat == Statistic::height ? "height" : "fix";
  }

  std::optional<Family> parse_family(std::string_view text) noexcept {
    if (text == "dp" || text == "DP") {
      return Family::dp;
    }
    if (text == "odp" || text == "ODP") {
      return Family::odp;
    }
    return std::nullopt;
  }

  std::optional<Statistic> parse_statistic(std::string_view text) noexcept {
    if (text == "height") {
      return Statistic::height;
    }
    if (text == "fix") {
      return Statistic::fix;
    }
    return std::nullopt;
  }

  bool is_member(PartialInjection const& a, Family fam) noexcept {
    if (fam == Family::dp) {
      return is_isometry(a);
    }
    return is_isometry(a) && is_order_preserving(a);
  }

  namespace {

    void check_enumeration_bounds(int n, EnumerationLimits limits) {
      if (n < 0) {
        throw Error(ErrorKind::domain_error,
                    "chain size must be non-negative, found " + std::to_string(n));
      }
      if (n > limits.max_n) {
        throw Error(ErrorKind::limit_exceeded,
                    "n = " + std::to_string(n) + " exceeds the enumeration cap "
                        + std::to_string(limits.max_n));
      }
    }

    // Visits every p-subset of {1..n} in lexicographic order.
    template <typename F>
    void for_each_subset(int n, int p, F&& f) {
      std::vector<Point> subset(static_cast<std::size_t>(p));
      std::iota(subset.begin(), subset.end(), 1);
      if (p > n) {
        return;
      }
      while (true) {
        f(std::span<Point const>(subset));
        int i = p - 1;
        while (i >= 0 && subset[i] == n - p + i + 1) {
          --i;
        }
        if (i < 0) {
          return;
        }
        ++subset[i];
        for (int j = i + 1; j < p; ++j) {
          subset[j] = subset[j - 1] + 1;
        }
      }
    }

    void enumerate_height(int n, Family fam, int p, ElementVisitor const& visit) {
      if (p == 0) {
        visit(PartialInjection::empty_map(n));
        return;
      }
      std::vector<std::vector<Point>> images;
      for_each_subset(n, p, [&](std::span<Point const> dom) {
        images.clear();
        Point const lo = dom.front();
        Point const hi = dom.back();
        // Translations x -> x + t with 1 <= lo + t and hi + t <= n.
        for (int t = 1 - lo; t <= n - hi; ++t) {
          std::vector<Point> img(dom.size());
          for (std::size_t i = 0; i < dom.size(); ++i) {
            img[i] = dom[i] + t;
          }
          images.push_back(std::move(img));
        }
        // Reflections x -> c - x with 1 <= c - hi and c - lo <= n.
        if (fam == Family::dp && p >= 2) {
          for (int c = hi + 1; c <= n + lo; ++c) {
            std::vector<Point> img(dom.size());
            for (std::size_t i = 0; i < dom.size(); ++i) {
              img[i] = c - dom[i];
            }
            images.push_back(std::move(img));
          }
        }
        std::sort(images.begin(), images.end());
        for (auto const& img : images) {
          std::vector<Pair> pairs(dom.size());
          for (std::size_t i = 0; i < dom.size(); ++i) {
            pairs[i] = {dom[i], img[i]};
          }
          visit(PartialInjection::from_sorted(n, std::move(pairs)));
        }
      });
    }

    struct Tally {
      std::vector<Count> by_height;
      std::vector<Count> by_fix;
    };

    // Each height is an independent slice of the enumeration; slices are
    // counted concurrently and summed in height order.
    Tally tally(int n, Family fam, EnumerationLimits limits) {
      check_enumeration_bounds(n, limits);
      std::vector<std::future<std::vector<Count>>> slices;
      for (int p = 0; p <= n; ++p) {
        slices.push_back(std::async(std::launch::async, [n, fam, p] {
          std::vector<Count> by_fix(static_cast<std::size_t>(n) + 1, 0);
          enumerate_height(n, fam, p, [&by_fix](PartialInjection const& a) {
            std::size_t f = 0;
            for (auto const& [x, y] : a.pairs()) {
              f += (x == y);
            }
            ++by_fix[f];
          });
          return by_fix;
        }));
      }
      Tally t{std::vector<Count>(static_cast<std::size_t>(n) + 1, 0),
              std::vector<Count>(static_cast<std::size_t>(n) + 1, 0)};
      for (int p = 0; p <= n; ++p) {
        auto by_fix = slices[p].get();
        for (std::size_t m = 0; m < by_fix.size(); ++m) {
          t.by_height[p] += by_fix[m];
          t.by_fix[m] += by_fix[m];
        }
      }
      return t;
    }

  }  // namespace

  void enumerate_fast(int                   n,
                      Family                fam,
                      std::optional<int>    height_filter,
                      ElementVisitor const& visit,
                      EnumerationLimits     limits) {
    check_enumeration_bounds(n, limits);
    if (height_filter) {
      if (*height_filter < 0 || *height_filter > n) {
        return;
      }
      enumerate_height(n, fam, *height_filter, visit);
      return;
    }
    for (int p = 0; p <= n; ++p) {
      enumerate_height(n, fam, p, visit);
    }
  }

  std::vector<PartialInjection> enumerate_fast(int                n,
                                               Family             fam,
                                               std::optional<int> height_filter,
                                               EnumerationLimits  limits) {
    std::vector<PartialInjection> out;
    enumerate_fast(
        n,
        fam,
        height_filter,
        [&out](PartialInjection const& a) { out.push_back(a); },
        limits);
    return out;
  }

  void enumerate_oracle(int n, Family fam, ElementVisitor const& visit) {
    for (auto const& a : enumerate_oracle(n, fam)) {
      visit(a);
    }
  }

  std::vector<PartialInjection> enumerate_oracle(int n, Family fam) {
    if (n < 0) {
      throw Error(ErrorKind::domain_error,
                  "chain size must be non-negative, found " + std::to_string(n));
    }
    if (n > oracle_max_n) {
      throw Error(ErrorKind::limit_exceeded,
                  "oracle enumeration is limited to n <= "
                      + std::to_string(oracle_max_n));
    }
    std::vector<PartialInjection> out;
    std::vector<Pair>             current;
    std::vector<bool>             used(static_cast<std::size_t>(n) + 1, false);
    // Walk every partial injection of X_n: each x is either left out or
    // sent to an unused point.
    auto rec = [&](auto&& self, Point x) -> void {
      if (x > n) {
        auto a = PartialInjection::make(n, current);
        if (is_member(a, fam)) {
          out.push_back(std::move(a));
        }
        return;
      }
      self(self, x + 1);
      for (Point y = 1; y <= n; ++y) {
        if (!used[y]) {
          used[y] = true;
          current.push_back({x, y});
          self(self, x + 1);
          current.pop_back();
          used[y] = false;
        }
      }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Count> count_by_height(int n, Family fam, EnumerationLimits limits) {
    return tally(n, fam, limits).by_height;
  }

  std::vector<Count> count_by_fix(int n, Family fam, EnumerationLimits limits) {
    return tally(n, fam, limits).by_fix;
  }

  Count order(int n, Family fam, EnumerationLimits limits) {
    auto h = count_by_height(n, fam, limits);
    return std::accumulate(h.begin(), h.end(), Count{0});
  }

  CountTable empirical_count_table(Statistic         stat,
                                   Family            fam,
                                   int               max_n,
                                   EnumerationLimits limits) {
    check_enumeration_bounds(max_n, limits);
    CountTable table{stat, fam, {}, {}};
    for (int n = 0; n <= max_n; ++n) {
      auto t   = tally(n, fam, limits);
      auto row = stat == Statistic::height ? t.by_height : t.by_fix;
      table.row_sums.push_back(std::accumulate(row.begin(), row.end(), Count{0}));
      table.rows.push_back(std::move(row));
    }
    return table;
  }

}  // namespace chainisom
