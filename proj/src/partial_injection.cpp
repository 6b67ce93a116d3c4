#include "chainisom/partial_injection.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace chainisom {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::out_of_range:
        return "OutOfRange";
      case ErrorKind::not_functional:
        return "NotFunctional";
      case ErrorKind::not_injective:
        return "NotInjective";
      case ErrorKind::mismatched_chain:
        return "MismatchedChain";
      case ErrorKind::limit_exceeded:
        return "LimitExceeded";
      case ErrorKind::domain_error:
        return "DomainError";
      case ErrorKind::not_closed:
        return "NotClosed";
      case ErrorKind::not_associative:
        return "NotAssociative";
      case ErrorKind::no_zero:
        return "NoZero";
      case ErrorKind::parse_error:
        return "ParseError";
    }
    return "Unknown";
  }

  PartialInjection PartialInjection::make(int n, std::vector<Pair> pairs) {
    if (n < 0) {
      throw Error(ErrorKind::out_of_range,
                  "chain size must be non-negative, found "
                      + std::to_string(n));
    }
    for (auto const& [x, y] : pairs) {
      if (x < 1 || x > n || y < 1 || y > n) {
        throw Error(ErrorKind::out_of_range,
                    "pair (" + std::to_string(x) + "," + std::to_string(y)
                        + ") not in [1," + std::to_string(n) + "]");
      }
    }
    std::sort(pairs.begin(), pairs.end(), [](Pair const& a, Pair const& b) {
      return a.x < b.x;
    });
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i > 0 && pairs[i].x == pairs[i - 1].x) {
        throw Error(ErrorKind::not_functional,
                    "point " + std::to_string(pairs[i].x)
                        + " has more than one image");
      }
      if (seen[pairs[i].y]) {
        throw Error(ErrorKind::not_injective,
                    "point " + std::to_string(pairs[i].y)
                        + " is the image of more than one point");
      }
      seen[pairs[i].y] = true;
    }
    return PartialInjection(n, std::move(pairs));
  }

  PartialInjection PartialInjection::from_sorted(int n, std::vector<Pair> pairs) {
#ifndef NDEBUG
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      assert(pairs[i].x >= 1 && pairs[i].x <= n);
      assert(pairs[i].y >= 1 && pairs[i].y <= n);
      assert(i == 0 || pairs[i - 1].x < pairs[i].x);
    }
#endif
    return PartialInjection(n, std::move(pairs));
  }

  PartialInjection PartialInjection::empty_map(int n) {
    return make(n, {});
  }

  PartialInjection PartialInjection::identity(int n) {
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (Point x = 1; x <= n; ++x) {
      pairs.push_back({x, x});
    }
    return make(n, std::move(pairs));
  }

  PartialInjection PartialInjection::partial_identity(int                     n,
                                                      std::span<Point const> points) {
    std::vector<Pair> pairs;
    pairs.reserve(points.size());
    for (Point x : points) {
      pairs.push_back({x, x});
    }
    return make(n, std::move(pairs));
  }

  std::vector<Point> PartialInjection::domain() const {
    std::vector<Point> out;
    out.reserve(_pairs.size());
    for (auto const& p : _pairs) {
      out.push_back(p.x);
    }
    return out;
  }

  std::vector<Point> PartialInjection::image() const {
    auto out = image_in_domain_order();
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Point> PartialInjection::image_in_domain_order() const {
    std::vector<Point> out;
    out.reserve(_pairs.size());
    for (auto const& p : _pairs) {
      out.push_back(p.y);
    }
    return out;
  }

  std::optional<Point> PartialInjection::operator()(Point x) const noexcept {
    auto it = std::lower_bound(
        _pairs.begin(), _pairs.end(), x, [](Pair const& p, Point v) {
          return p.x < v;
        });
    if (it != _pairs.end() && it->x == x) {
      return it->y;
    }
    return std::nullopt;
  }

  std::strong_ordering operator<=>(PartialInjection const& a,
                                   PartialInjection const& b) {
    if (auto c = a._n <=> b._n; c != 0) {
      return c;
    }
    if (auto c = a._pairs.size() <=> b._pairs.size(); c != 0) {
      return c;
    }
    for (std::size_t i = 0; i < a._pairs.size(); ++i) {
      if (auto c = a._pairs[i].x <=> b._pairs[i].x; c != 0) {
        return c;
      }
    }
    for (std::size_t i = 0; i < a._pairs.size(); ++i) {
      if (auto c = a._pairs[i].y <=> b._pairs[i].y; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  GapSignature GapSignature::reversed() const {
    return GapSignature{std::vector<int>(diffs.rbegin(), diffs.rend())};
  }

  PartialInjection compose(PartialInjection const& a, PartialInjection const& b) {
    if (a.chain_size() != b.chain_size()) {
      throw Error(ErrorKind::mismatched_chain,
                  "cannot compose maps on X_" + std::to_string(a.chain_size())
                      + " and X_" + std::to_string(b.chain_size()));
    }
    // Dense lookup for b; 0 marks "undefined".
    std::vector<Point> lookup(static_cast<std::size_t>(b.chain_size()) + 1, 0);
    for (auto const& [x, y] : b.pairs()) {
      lookup[x] = y;
    }
    std::vector<Pair> out;
    out.reserve(std::min(a.height(), b.height()));
    for (auto const& [x, y] : a.pairs()) {
      if (Point z = lookup[y]; z != 0) {
        out.push_back({x, z});
      }
    }
    return PartialInjection::from_sorted(a.chain_size(), std::move(out));
  }

  PartialInjection inverse(PartialInjection const& a) {
    std::vector<Pair> out;
    out.reserve(a.height());
    for (auto const& [x, y] : a.pairs()) {
      out.push_back({y, x});
    }
    std::sort(out.begin(), out.end(), [](Pair const& p, Pair const& q) {
      return p.x < q.x;
    });
    return PartialInjection::from_sorted(a.chain_size(), std::move(out));
  }

  MapStatistics statistics(PartialInjection const& a) {
    MapStatistics s;
    s.height = a.height();
    if (!a.empty()) {
      auto pairs       = a.pairs();
      s.left_shoulder  = pairs.front().x;
      s.right_shoulder = pairs.back().x;
      auto [lo, hi]    = std::minmax_element(
          pairs.begin(), pairs.end(), [](Pair const& p, Pair const& q) {
            return p.y < q.y;
          });
      s.left_waist  = lo->y;
      s.right_waist = hi->y;
    }
    for (auto const& [x, y] : a.pairs()) {
      if (x == y) {
        s.fix_set.push_back(x);
      }
    }
    s.fix_count = s.fix_set.size();
    return s;
  }

  bool is_isometry(PartialInjection const& a) noexcept {
    auto pairs = a.pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        if (std::abs(pairs[i].x - pairs[j].x)
            != std::abs(pairs[i].y - pairs[j].y)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_order_preserving(PartialInjection const& a) noexcept {
    auto pairs = a.pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        // pairs[i].x < pairs[j].x by construction
        if (pairs[i].y > pairs[j].y) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_order_reversing(PartialInjection const& a) noexcept {
    auto pairs = a.pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        if (pairs[i].y < pairs[j].y) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_idempotent(PartialInjection const& a) {
    return compose(a, a) == a;
  }

  bool is_partial_identity(PartialInjection const& a) noexcept {
    return std::all_of(a.pairs().begin(), a.pairs().end(), [](Pair const& p) {
      return p.x == p.y;
    });
  }

  GapSignature gap_signature(std::span<Point const> sorted_points) {
    GapSignature sig;
    if (sorted_points.size() > 1) {
      sig.diffs.reserve(sorted_points.size() - 1);
      for (std::size_t i = 1; i < sorted_points.size(); ++i) {
        sig.diffs.push_back(sorted_points[i] - sorted_points[i - 1]);
      }
    }
    return sig;
  }

  std::size_t PartialInjectionHash::operator()(PartialInjection const& a) const noexcept {
    // FNV-1a over n and the pair list.
    std::uint64_t h   = 1469598103934665603ULL;
    auto          mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(a.chain_size()));
    for (auto const& [x, y] : a.pairs()) {
      mix(static_cast<std::uint64_t>(x));
      mix(static_cast<std::uint64_t>(y));
    }
    return static_cast<std::size_t>(h);
  }

}  // namespace chainisom
