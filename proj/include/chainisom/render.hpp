#ifndef CHAINISOM_RENDER_HPP
#define CHAINISOM_RENDER_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "chainisom/families.hpp"
#include "chainisom/greens.hpp"

namespace chainisom {

  enum class TableFormat { text, csv, json };

  std::optional<TableFormat> parse_table_format(std::string_view text) noexcept;

  // CSV header is "n,k0,k1,...,sum"; cells with k > n are left empty.
  std::string render_count_table(CountTable const& table, TableFormat fmt);

  // One line per class: "<relation>-class <i> (<size>): <elements...>".
  std::string render_classes(std::span<PartialInjection const> elements,
                             GreensClasses const&              classes);

  //! Property summary for a table: order, idempotent count, inverse,
  //! 0-E-unitary and categorical, with witnesses in matrix notation.
  //! `title` heads the block, e.g. "DP_3" or "Q(4,2)".
  std::string render_structure(std::string_view title, SemigroupTable const& t);

}  // namespace chainisom

#endif
