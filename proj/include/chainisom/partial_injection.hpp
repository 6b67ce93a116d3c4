#ifndef CHAINISOM_PARTIAL_INJECTION_HPP
#define CHAINISOM_PARTIAL_INJECTION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chainisom/error.hpp"

namespace chainisom {

  // A point of the chain X_n = {1, ..., n}.
  using Point = int;

  struct Pair {
    Point x;  // domain point
    Point y;  // image point

    friend bool operator==(Pair const&, Pair const&) = default;
  };

  //! A partial injective map on the chain X_n.
  //!
  //! The pairs are stored sorted by domain point. Values are immutable; two
  //! maps compare equal only when both the chain size and the pair lists
  //! agree. The empty map is a valid element for every n and is the zero of
  //! every semigroup built from these maps.
  //!
  //! The ordering `<=>` is the canonical order used for enumeration output:
  //! chain size, then height, then the domain read left to right, then the
  //! image read in domain order.
  class PartialInjection {
   public:
    PartialInjection() = default;

    //! Validates and canonicalises `pairs`.
    //!
    //! Throws Error with kind out_of_range, not_functional or not_injective.
    static PartialInjection make(int n, std::vector<Pair> pairs);

    //! Builds from pairs already known to be sorted, in range and injective.
    //! No validation beyond debug assertions.
    static PartialInjection from_sorted(int n, std::vector<Pair> pairs);

    static PartialInjection empty_map(int n);
    static PartialInjection identity(int n);
    static PartialInjection partial_identity(int n, std::span<Point const> points);

    int chain_size() const noexcept {
      return _n;
    }

    std::span<Pair const> pairs() const noexcept {
      return _pairs;
    }

    std::size_t height() const noexcept {
      return _pairs.size();
    }

    bool empty() const noexcept {
      return _pairs.empty();
    }

    // Sorted ascending.
    std::vector<Point> domain() const;
    std::vector<Point> image() const;

    // Image points listed in domain order.
    std::vector<Point> image_in_domain_order() const;

    std::optional<Point> operator()(Point x) const noexcept;

    friend bool operator==(PartialInjection const&,
                           PartialInjection const&) = default;
    friend std::strong_ordering operator<=>(PartialInjection const& a,
                                            PartialInjection const& b);

   private:
    PartialInjection(int n, std::vector<Pair> pairs)
        : _n(n), _pairs(std::move(pairs)) {}

    int               _n = 0;
    std::vector<Pair> _pairs;
  };

  struct MapStatistics {
    std::size_t          height = 0;
    std::optional<Point> right_waist;     // max Im
    std::optional<Point> left_waist;      // min Im
    std::optional<Point> right_shoulder;  // max Dom
    std::optional<Point> left_shoulder;   // min Dom
    std::vector<Point>   fix_set;
    std::size_t          fix_count = 0;
  };

  // Successive differences of a sorted point set.
  struct GapSignature {
    std::vector<int> diffs;

    GapSignature reversed() const;

    friend bool operator==(GapSignature const&, GapSignature const&) = default;
    friend auto operator<=>(GapSignature const&, GapSignature const&) = default;
  };

  //! Left-to-right composition: x(ab) = (xa)b.
  //! Throws Error(mismatched_chain) when the chain sizes differ.
  PartialInjection compose(PartialInjection const& a, PartialInjection const& b);

  PartialInjection inverse(PartialInjection const& a);

  MapStatistics statistics(PartialInjection const& a);

  bool is_isometry(PartialInjection const& a) noexcept;
  bool is_order_preserving(PartialInjection const& a) noexcept;
  bool is_order_reversing(PartialInjection const& a) noexcept;

  bool is_idempotent(PartialInjection const& a);
  bool is_partial_identity(PartialInjection const& a) noexcept;

  GapSignature gap_signature(std::span<Point const> sorted_points);

  struct PartialInjectionHash {
    std::size_t operator()(PartialInjection const& a) const noexcept;
  };

}  // namespace chainisom

template <>
struct std::hash<chainisom::PartialInjection> {
  std::size_t operator()(chainisom::PartialInjection const& a) const noexcept {
    return chainisom::PartialInjectionHash{}(a);
  }
};

#endif
