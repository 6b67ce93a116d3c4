#ifndef CHAINISOM_GREENS_HPP
#define CHAINISOM_GREENS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chainisom/families.hpp"
#include "chainisom/partial_injection.hpp"

namespace chainisom {

  enum class Relation { r, l, h, d };

  std::string_view        to_string(Relation rel) noexcept;
  std::optional<Relation> parse_relation(std::string_view text) noexcept;

  using Index = std::uint32_t;

  //! A partition of element indices. Blocks are sorted internally and
  //! ordered by their least index, so two partitions of the same index set
  //! compare equal exactly when they are the same partition.
  struct GreensClasses {
    Relation                        relation = Relation::r;
    std::vector<std::vector<Index>> partition;

    friend bool operator==(GreensClasses const&, GreensClasses const&) = default;
  };

  // Preorders from domain/image inclusion. Throw Error(mismatched_chain).
  bool r_le(PartialInjection const& a, PartialInjection const& b);
  bool l_le(PartialInjection const& a, PartialInjection const& b);
  bool h_le(PartialInjection const& a, PartialInjection const& b);

  //! True iff some subset of Dom b is the image of an isometry from Dom a
  //! (order-preserving for ODP). Scans every subset of Dom b of size
  //! |Dom a|, so it is only meant for small chains.
  bool d_le(PartialInjection const& a, PartialInjection const& b, Family fam);

  //! Equal heights and matching domain gap signatures (for DP the
  //! signature may also match reversed).
  bool d_related(PartialInjection const& a, PartialInjection const& b, Family fam);

  GreensClasses greens_classes_criterion(std::span<PartialInjection const> elements,
                                         Family                            fam,
                                         Relation                          rel);

  //! Finite semigroup given by an indexed element list and a Cayley table.
  //!
  //! Element payloads are partial injections. Elements adjoined by the
  //! construction (an external identity, or the zero of a Rees quotient)
  //! carry a stand-in payload and the labels "1" and "0".
  class SemigroupTable {
   public:
    SemigroupTable(std::vector<PartialInjection> elements,
                   std::vector<std::string>      labels,
                   std::vector<Index>            mult,
                   std::optional<Index>          zero_index,
                   bool                          identity_adjoined);

    std::size_t size() const noexcept {
      return _elements.size();
    }

    Index product(Index a, Index b) const noexcept {
      return _mult[static_cast<std::size_t>(a) * _elements.size() + b];
    }

    PartialInjection const& element(Index i) const {
      return _elements.at(i);
    }

    std::span<PartialInjection const> elements() const noexcept {
      return _elements;
    }

    std::string const& label(Index i) const {
      return _labels.at(i);
    }

    std::optional<Index> zero_index() const noexcept {
      return _zero;
    }

    bool identity_adjoined() const noexcept {
      return _identity_adjoined;
    }

    std::optional<Index> index_of(PartialInjection const& a) const;

   private:
    std::vector<PartialInjection> _elements;
    std::vector<std::string>      _labels;
    std::vector<Index>            _mult;
    std::optional<Index>          _zero;
    bool                          _identity_adjoined;
  };

  //! Cayley table of `elements` under composition, in the given order.
  //! zero_index is the position of the empty map, if present. With
  //! adjoin_identity an external identity is appended as the last element.
  //!
  //! Throws Error(not_closed) naming the first product that falls outside.
  SemigroupTable build_table(std::vector<PartialInjection> elements,
                             bool                          adjoin_identity = false);

  // First triple (a, b, c) with (ab)c != a(bc), if any.
  std::optional<std::array<Index, 3>> associativity_violation(SemigroupTable const& t);
  bool is_associative(SemigroupTable const& t);

  //! Green's classes from principal one-sided ideals of S^1 (an identity is
  //! always adjoined for this purpose). D is computed as R∘L.
  //!
  //! Throws Error(not_associative).
  GreensClasses greens_classes_oracle(SemigroupTable const& t, Relation rel);

  // R∘L == L∘R as relations on the table.
  bool rl_lr_commute(SemigroupTable const& t);

  // Classes of equal principal two-sided ideals S^1 a S^1.
  GreensClasses j_classes_oracle(SemigroupTable const& t);

  // a ≤_J b, i.e. S^1 a S^1 ⊆ S^1 b S^1.
  bool j_le_oracle(SemigroupTable const& t, Index a, Index b);

  std::vector<Index> idempotents(SemigroupTable const& t);

  // Every element regular and idempotents commute.
  bool is_inverse(SemigroupTable const& t);

  enum class WitnessKind { not_zero_e_unitary, not_categorical };

  std::string_view to_string(WitnessKind kind) noexcept;

  // (e, s) for not_zero_e_unitary, (a, b, c) for not_categorical.
  struct Witness {
    WitnessKind        kind = WitnessKind::not_zero_e_unitary;
    std::vector<Index> elements;
  };

  struct PropertyResult {
    bool                   holds = true;
    std::optional<Witness> witness;
  };

  //! For all nonzero idempotents e and all s: es a nonzero idempotent
  //! implies s a nonzero idempotent. Returns the first violating (e, s) in
  //! index order. Throws Error(no_zero).
  PropertyResult is_zero_e_unitary(SemigroupTable const& t);

  //! abc = 0 implies ab = 0 or bc = 0. Returns the first violating (a, b, c)
  //! in index order. Throws Error(no_zero).
  PropertyResult is_categorical(SemigroupTable const& t);

  // Recomputes the products and confirms the witness really is a violation.
  bool replay(SemigroupTable const& t, Witness const& w);

  struct ReesQuotient {
    int            n = 0;
    int            p = 0;
    SemigroupTable table;
  };

  //! L(n,p)/L(n,p-1) where L(n,p) is the ideal of ODP_n of elements of
  //! height at most p. Index 0 is the quotient zero (payload: the empty
  //! map); the rest are the height-p elements of ODP_n in canonical order.
  //!
  //! Throws Error(domain_error) unless 1 <= p <= n.
  ReesQuotient build_rees_quotient(int n, int p, EnumerationLimits limits = {});

}  // namespace chainisom

#endif
