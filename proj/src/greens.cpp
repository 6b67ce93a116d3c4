#include "chainisom/greens.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "chainisom/serialize.hpp"

namespace chainisom {

  std::string_view to_string(Relation rel) noexcept {
    switch (rel) {
      case Relation::r:
        return "R";
      case Relation::l:
        return "L";
      case Relation::h:
        return "H";
      case Relation::d:
        return "D";
    }
    return "?";
  }

  std::optional<Relation> parse_relation(std::string_view text) noexcept {
    if (text == "r" || text == "R") {
      return Relation::r;
    }
    if (text == "l" || text == "L") {
      return Relation::l;
    }
    if (text == "h" || text == "H") {
      return Relation::h;
    }
    if (text == "d" || text == "D") {
      return Relation::d;
    }
    return std::nullopt;
  }

  std::string_view to_string(WitnessKind kind) noexcept {
    return kind == WitnessKind::not_zero_e_unitary ? "not_0_E_unitary"
                                                   : "not_categorical";
  }

  namespace {

    void check_same_chain(PartialInjection const& a, PartialInjection const& b) {
      if (a.chain_size() != b.chain_size()) {
        throw Error(ErrorKind::mismatched_chain,
                    "maps on X_" + std::to_string(a.chain_size()) + " and X_"
                        + std::to_string(b.chain_size()));
      }
    }

    bool is_subset(std::vector<Point> const& small, std::vector<Point> const& big) {
      return std::includes(big.begin(), big.end(), small.begin(), small.end());
    }

    // Blocks in order of least member; keys compared with operator<.
    template <typename Key>
    std::vector<std::vector<Index>> partition_by(std::vector<Key> const& keys) {
      std::map<Key, std::size_t>      block_of;
      std::vector<std::vector<Index>> blocks;
      for (Index i = 0; i < keys.size(); ++i) {
        auto [it, inserted] = block_of.try_emplace(keys[i], blocks.size());
        if (inserted) {
          blocks.emplace_back();
        }
        blocks[it->second].push_back(i);
      }
      return blocks;
    }

    GapSignature d_class_key(PartialInjection const& a, Family fam) {
      auto sig = gap_signature(a.domain());
      if (fam == Family::dp) {
        auto rev = sig.reversed();
        return std::min(sig, rev);
      }
      return sig;
    }

  }  // namespace

  bool r_le(PartialInjection const& a, PartialInjection const& b) {
    check_same_chain(a, b);
    return is_subset(a.domain(), b.domain());
  }

  bool l_le(PartialInjection const& a, PartialInjection const& b) {
    check_same_chain(a, b);
    return is_subset(a.image(), b.image());
  }

  bool h_le(PartialInjection const& a, PartialInjection const& b) {
    return r_le(a, b) && l_le(a, b);
  }

  bool d_le(PartialInjection const& a, PartialInjection const& b, Family fam) {
    check_same_chain(a, b);
    auto const dom_a = a.domain();
    auto const dom_b = b.domain();
    std::size_t const k = dom_a.size();
    if (k > dom_b.size()) {
      return false;
    }
    auto const sig     = gap_signature(dom_a);
    auto const rev_sig = sig.reversed();
    // Every k-subset of Dom b, via a selection mask.
    std::vector<bool> mask(dom_b.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    std::vector<Point> subset;
    do {
      subset.clear();
      for (std::size_t i = 0; i < dom_b.size(); ++i) {
        if (mask[i]) {
          subset.push_back(dom_b[i]);
        }
      }
      auto const s = gap_signature(subset);
      if (s == sig || (fam == Family::dp && s == rev_sig)) {
        return true;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return false;
  }

  bool d_related(PartialInjection const& a, PartialInjection const& b, Family fam) {
    check_same_chain(a, b);
    if (a.height() != b.height()) {
      return false;
    }
    return d_class_key(a, fam) == d_class_key(b, fam);
  }

  GreensClasses greens_classes_criterion(std::span<PartialInjection const> elements,
                                         Family                            fam,
                                         Relation                          rel) {
    GreensClasses out{rel, {}};
    switch (rel) {
      case Relation::r: {
        std::vector<std::vector<Point>> keys;
        for (auto const& a : elements) {
          keys.push_back(a.domain());
        }
        out.partition = partition_by(keys);
        break;
      }
      case Relation::l: {
        std::vector<std::vector<Point>> keys;
        for (auto const& a : elements) {
          keys.push_back(a.image());
        }
        out.partition = partition_by(keys);
        break;
      }
      case Relation::h: {
        std::vector<std::pair<std::vector<Point>, std::vector<Point>>> keys;
        for (auto const& a : elements) {
          keys.emplace_back(a.domain(), a.image());
        }
        out.partition = partition_by(keys);
        break;
      }
      case Relation::d: {
        std::vector<std::pair<std::size_t, GapSignature>> keys;
        for (auto const& a : elements) {
          keys.emplace_back(a.height(), d_class_key(a, fam));
        }
        out.partition = partition_by(keys);
        break;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // SemigroupTable
  ////////////////////////////////////////////////////////////////////////

  SemigroupTable::SemigroupTable(std::vector<PartialInjection> elements,
                                 std::vector<std::string>      labels,
                                 std::vector<Index>            mult,
                                 std::optional<Index>          zero_index,
                                 bool                          identity_adjoined)
      : _elements(std::move(elements)),
        _labels(std::move(labels)),
        _mult(std::move(mult)),
        _zero(zero_index),
        _identity_adjoined(identity_adjoined) {
    if (_labels.size() != _elements.size()
        || _mult.size() != _elements.size() * _elements.size()) {
      throw Error(ErrorKind::domain_error, "inconsistent table dimensions");
    }
    for (Index v : _mult) {
      if (v >= _elements.size()) {
        throw Error(ErrorKind::domain_error, "table entry out of range");
      }
    }
  }

  std::optional<Index> SemigroupTable::index_of(PartialInjection const& a) const {
    for (Index i = 0; i < _elements.size(); ++i) {
      if (_elements[i] == a && _labels[i] != "1" && _labels[i] != "0") {
        return i;
      }
    }
    return std::nullopt;
  }

  SemigroupTable build_table(std::vector<PartialInjection> elements,
                             bool                          adjoin_identity) {
    std::unordered_map<PartialInjection, Index> index;
    for (Index i = 0; i < elements.size(); ++i) {
      index.emplace(elements[i], i);
    }
    std::size_t const base = elements.size();
    std::size_t const size = base + (adjoin_identity ? 1 : 0);
    std::vector<Index> mult(size * size);
    for (std::size_t i = 0; i < base; ++i) {
      for (std::size_t j = 0; j < base; ++j) {
        auto prod = compose(elements[i], elements[j]);
        auto it   = index.find(prod);
        if (it == index.end()) {
          throw Error(ErrorKind::not_closed,
                      to_matrix(elements[i]) + " * " + to_matrix(elements[j])
                          + " = " + to_matrix(prod) + " is not in the set");
        }
        mult[i * size + j] = it->second;
      }
    }
    std::vector<std::string> labels;
    for (auto const& a : elements) {
      labels.push_back(to_matrix(a));
    }
    if (adjoin_identity) {
      Index const one = static_cast<Index>(base);
      for (std::size_t i = 0; i < size; ++i) {
        mult[one * size + i] = static_cast<Index>(i);
        mult[i * size + one] = static_cast<Index>(i);
      }
      int const n = elements.empty() ? 0 : elements.front().chain_size();
      elements.push_back(PartialInjection::identity(n));
      labels.emplace_back("1");
    }
    std::optional<Index> zero;
    for (Index i = 0; i < base; ++i) {
      if (elements[i].empty()) {
        zero = i;
        break;
      }
    }
    return SemigroupTable(
        std::move(elements), std::move(labels), std::move(mult), zero, adjoin_identity);
  }

  std::optional<std::array<Index, 3>> associativity_violation(SemigroupTable const& t) {
    Index const n = static_cast<Index>(t.size());
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        Index const ab = t.product(a, b);
        for (Index c = 0; c < n; ++c) {
          if (t.product(ab, c) != t.product(a, t.product(b, c))) {
            return std::array<Index, 3>{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_associative(SemigroupTable const& t) {
    return !associativity_violation(t).has_value();
  }

  namespace {

    using IndexSet = std::vector<bool>;

    // a S^1
    IndexSet right_ideal(SemigroupTable const& t, Index a) {
      IndexSet s(t.size(), false);
      s[a] = true;
      for (Index x = 0; x < t.size(); ++x) {
        s[t.product(a, x)] = true;
      }
      return s;
    }

    // S^1 a
    IndexSet left_ideal(SemigroupTable const& t, Index a) {
      IndexSet s(t.size(), false);
      s[a] = true;
      for (Index x = 0; x < t.size(); ++x) {
        s[t.product(x, a)] = true;
      }
      return s;
    }

    // S^1 a S^1
    IndexSet two_sided_ideal(SemigroupTable const& t, Index a) {
      IndexSet left = left_ideal(t, a);
      IndexSet s    = left;
      for (Index x = 0; x < t.size(); ++x) {
        if (left[x]) {
          for (Index y = 0; y < t.size(); ++y) {
            s[t.product(x, y)] = true;
          }
        }
      }
      return s;
    }

    void require_associative(SemigroupTable const& t) {
      if (auto v = associativity_violation(t)) {
        throw Error(ErrorKind::not_associative,
                    "(" + t.label((*v)[0]) + ", " + t.label((*v)[1]) + ", "
                        + t.label((*v)[2]) + ")");
      }
    }

    struct OneSidedIds {
      std::vector<std::size_t> r;
      std::vector<std::size_t> l;
    };

    std::vector<std::size_t> block_ids(std::vector<std::vector<Index>> const& blocks,
                                       std::size_t                            size) {
      std::vector<std::size_t> ids(size);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (Index i : blocks[b]) {
          ids[i] = b;
        }
      }
      return ids;
    }

    std::vector<std::vector<Index>> r_blocks(SemigroupTable const& t) {
      std::vector<IndexSet> keys;
      for (Index a = 0; a < t.size(); ++a) {
        keys.push_back(right_ideal(t, a));
      }
      return partition_by(keys);
    }

    std::vector<std::vector<Index>> l_blocks(SemigroupTable const& t) {
      std::vector<IndexSet> keys;
      for (Index a = 0; a < t.size(); ++a) {
        keys.push_back(left_ideal(t, a));
      }
      return partition_by(keys);
    }

    OneSidedIds one_sided_ids(SemigroupTable const& t) {
      return {block_ids(r_blocks(t), t.size()), block_ids(l_blocks(t), t.size())};
    }

    // Row a of the composite relation first∘second: all b with a first c and
    // c second b for some c.
    std::vector<IndexSet> compose_relations(std::vector<std::size_t> const& first,
                                            std::vector<std::size_t> const& second) {
      std::size_t const     n = first.size();
      std::vector<IndexSet> rows(n, IndexSet(n, false));
      for (std::size_t a = 0; a < n; ++a) {
        std::vector<bool> reach(n, false);  // indexed by block id of `second`
        for (std::size_t c = 0; c < n; ++c) {
          if (first[c] == first[a]) {
            reach[second[c]] = true;
          }
        }
        for (std::size_t b = 0; b < n; ++b) {
          rows[a][b] = reach[second[b]];
        }
      }
      return rows;
    }

  }  // namespace

  GreensClasses greens_classes_oracle(SemigroupTable const& t, Relation rel) {
    require_associative(t);
    GreensClasses out{rel, {}};
    switch (rel) {
      case Relation::r:
        out.partition = r_blocks(t);
        break;
      case Relation::l:
        out.partition = l_blocks(t);
        break;
      case Relation::h: {
        auto ids = one_sided_ids(t);
        std::vector<std::pair<std::size_t, std::size_t>> keys;
        for (std::size_t i = 0; i < t.size(); ++i) {
          keys.emplace_back(ids.r[i], ids.l[i]);
        }
        out.partition = partition_by(keys);
        break;
      }
      case Relation::d: {
        auto ids      = one_sided_ids(t);
        out.partition = partition_by(compose_relations(ids.r, ids.l));
        break;
      }
    }
    return out;
  }

  bool rl_lr_commute(SemigroupTable const& t) {
    auto ids = one_sided_ids(t);
    return compose_relations(ids.r, ids.l) == compose_relations(ids.l, ids.r);
  }

  GreensClasses j_classes_oracle(SemigroupTable const& t) {
    require_associative(t);
    std::vector<IndexSet> keys;
    for (Index a = 0; a < t.size(); ++a) {
      keys.push_back(two_sided_ideal(t, a));
    }
    return GreensClasses{Relation::d, partition_by(keys)};
  }

  bool j_le_oracle(SemigroupTable const& t, Index a, Index b) {
    auto const ia = two_sided_ideal(t, a);
    auto const ib = two_sided_ideal(t, b);
    for (std::size_t i = 0; i < ia.size(); ++i) {
      if (ia[i] && !ib[i]) {
        return false;
      }
    }
    return true;
  }

  std::vector<Index> idempotents(SemigroupTable const& t) {
    std::vector<Index> out;
    for (Index e = 0; e < t.size(); ++e) {
      if (t.product(e, e) == e) {
        out.push_back(e);
      }
    }
    return out;
  }

  bool is_inverse(SemigroupTable const& t) {
    Index const n = static_cast<Index>(t.size());
    for (Index a = 0; a < n; ++a) {
      bool regular = false;
      for (Index x = 0; x < n && !regular; ++x) {
        regular = t.product(t.product(a, x), a) == a;
      }
      if (!regular) {
        return false;
      }
    }
    auto const es = idempotents(t);
    for (Index e : es) {
      for (Index f : es) {
        if (t.product(e, f) != t.product(f, e)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    Index require_zero(SemigroupTable const& t) {
      if (!t.zero_index()) {
        throw Error(ErrorKind::no_zero, "table has no zero element");
      }
      return *t.zero_index();
    }
  }  // namespace

  PropertyResult is_zero_e_unitary(SemigroupTable const& t) {
    Index const       zero = require_zero(t);
    Index const       n    = static_cast<Index>(t.size());
    std::vector<bool> nonzero_idem(n, false);
    for (Index e : idempotents(t)) {
      nonzero_idem[e] = e != zero;
    }
    for (Index e = 0; e < n; ++e) {
      if (!nonzero_idem[e]) {
        continue;
      }
      for (Index s = 0; s < n; ++s) {
        if (nonzero_idem[t.product(e, s)] && !nonzero_idem[s]) {
          return {false, Witness{WitnessKind::not_zero_e_unitary, {e, s}}};
        }
      }
    }
    return {true, std::nullopt};
  }

  PropertyResult is_categorical(SemigroupTable const& t) {
    Index const zero = require_zero(t);
    Index const n    = static_cast<Index>(t.size());
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        Index const ab = t.product(a, b);
        if (ab == zero) {
          continue;
        }
        for (Index c = 0; c < n; ++c) {
          if (t.product(b, c) != zero && t.product(ab, c) == zero) {
            return {false, Witness{WitnessKind::not_categorical, {a, b, c}}};
          }
        }
      }
    }
    return {true, std::nullopt};
  }

  bool replay(SemigroupTable const& t, Witness const& w) {
    Index const zero = require_zero(t);
    auto        in_range = [&t](Index i) { return i < t.size(); };
    if (!std::all_of(w.elements.begin(), w.elements.end(), in_range)) {
      return false;
    }
    auto nonzero_idem = [&](Index x) {
      return x != zero && t.product(x, x) == x;
    };
    if (w.kind == WitnessKind::not_zero_e_unitary) {
      if (w.elements.size() != 2) {
        return false;
      }
      Index const e = w.elements[0];
      Index const s = w.elements[1];
      return nonzero_idem(e) && nonzero_idem(t.product(e, s)) && !nonzero_idem(s);
    }
    if (w.elements.size() != 3) {
      return false;
    }
    Index const a = w.elements[0];
    Index const b = w.elements[1];
    Index const c = w.elements[2];
    return t.product(t.product(a, b), c) == zero && t.product(a, b) != zero
           && t.product(b, c) != zero;
  }

  ReesQuotient build_rees_quotient(int n, int p, EnumerationLimits limits) {
    if (!(1 <= p && p <= n)) {
      throw Error(ErrorKind::domain_error,
                  "Rees quotient Q(n,p) requires 1 <= p <= n, found n = "
                      + std::to_string(n) + ", p = " + std::to_string(p));
    }
    std::vector<PartialInjection> elements{PartialInjection::empty_map(n)};
    std::vector<std::string>      labels{"0"};
    enumerate_fast(
        n,
        Family::odp,
        p,
        [&](PartialInjection const& a) {
          elements.push_back(a);
          labels.push_back(to_matrix(a));
        },
        limits);

    std::unordered_map<PartialInjection, Index> index;
    for (Index i = 1; i < elements.size(); ++i) {
      index.emplace(elements[i], i);
    }
    std::size_t const  size = elements.size();
    std::vector<Index> mult(size * size, 0);
    for (std::size_t i = 1; i < size; ++i) {
      for (std::size_t j = 1; j < size; ++j) {
        auto prod = compose(elements[i], elements[j]);
        if (prod.height() == static_cast<std::size_t>(p)) {
          mult[i * size + j] = index.at(prod);
        }
      }
    }
    return ReesQuotient{
        n,
        p,
        SemigroupTable(std::move(elements), std::move(labels), std::move(mult), 0, false)};
  }

}  // namespace chainisom
