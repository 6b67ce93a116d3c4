#include "chainisom/render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "chainisom/serialize.hpp"

namespace chainisom {

  std::optional<TableFormat> parse_table_format(std::string_view text) noexcept {
    if (text == "text") {
      return TableFormat::text;
    }
    if (text == "csv") {
      return TableFormat::csv;
    }
    if (text == "json") {
      return TableFormat::json;
    }
    return std::nullopt;
  }

  namespace {

    std::string render_csv(CountTable const& table) {
      std::ostringstream out;
      std::size_t const  width = table.rows.size();
      out << 'n';
      for (std::size_t k = 0; k < width; ++k) {
        out << ",k" << k;
      }
      out << ",sum\n";
      for (std::size_t n = 0; n < table.rows.size(); ++n) {
        out << n;
        for (std::size_t k = 0; k < width; ++k) {
          out << ',';
          if (k < table.rows[n].size()) {
            out << table.rows[n][k];
          }
        }
        out << ',' << table.row_sums[n] << '\n';
      }
      return out.str();
    }

    std::string render_text(CountTable const& table) {
      std::size_t const width = table.rows.size();
      std::size_t       cell  = 3;
      for (std::size_t n = 0; n < table.rows.size(); ++n) {
        for (Count v : table.rows[n]) {
          cell = std::max(cell, std::to_string(v).size());
        }
        cell = std::max(cell, std::to_string(table.row_sums[n]).size());
      }
      auto pad = [cell](std::string const& s) {
        return std::string(cell + 1 - std::min(cell, s.size()), ' ') + s;
      };
      std::string const key = table.statistic == Statistic::height ? "p" : "m";
      std::ostringstream out;
      out << (table.family == Family::dp ? "DP" : "ODP") << " counts by "
          << to_string(table.statistic) << '\n';
      out << pad("n\\" + key);
      for (std::size_t k = 0; k < width; ++k) {
        out << pad(std::to_string(k));
      }
      out << pad("sum") << '\n';
      for (std::size_t n = 0; n < table.rows.size(); ++n) {
        out << pad(std::to_string(n));
        for (std::size_t k = 0; k < width; ++k) {
          out << pad(k < table.rows[n].size() ? std::to_string(table.rows[n][k]) : "");
        }
        out << pad(std::to_string(table.row_sums[n])) << '\n';
      }
      return out.str();
    }

    std::string render_json(CountTable const& table) {
      auto rows = nlohmann::json::array();
      for (std::size_t n = 0; n < table.rows.size(); ++n) {
        rows.push_back({{"n", n}, {"counts", table.rows[n]}, {"sum", table.row_sums[n]}});
      }
      nlohmann::json j{{"family", std::string(to_string(table.family))},
                       {"by", std::string(to_string(table.statistic))},
                       {"rows", std::move(rows)}};
      return j.dump(2) + "\n";
    }

  }  // namespace

  std::string render_count_table(CountTable const& table, TableFormat fmt) {
    switch (fmt) {
      case TableFormat::csv:
        return render_csv(table);
      case TableFormat::json:
        return render_json(table);
      case TableFormat::text:
        break;
    }
    return render_text(table);
  }

  std::string render_classes(std::span<PartialInjection const> elements,
                             GreensClasses const&              classes) {
    std::ostringstream out;
    for (std::size_t i = 0; i < classes.partition.size(); ++i) {
      auto const& block = classes.partition[i];
      out << to_string(classes.relation) << "-class " << i << " (" << block.size() << "):";
      for (Index e : block) {
        out << ' ' << to_matrix(elements[e]);
      }
      out << '\n';
    }
    out << classes.partition.size() << ' ' << to_string(classes.relation) << "-classes\n";
    return out.str();
  }

  namespace {
    std::string witness_text(SemigroupTable const& t, Witness const& w) {
      std::string s;
      for (Index i : w.elements) {
        if (!s.empty()) {
          s += ' ';
        }
        s += t.label(i);
      }
      return s;
    }
  }  // namespace

  std::string render_structure(std::string_view title, SemigroupTable const& t) {
    std::ostringstream out;
    out << title << '\n';
    out << "  order: " << t.size() << '\n';
    out << "  idempotents: " << idempotents(t).size() << '\n';
    out << "  inverse: " << (is_inverse(t) ? "true" : "false") << '\n';
    auto const eu = is_zero_e_unitary(t);
    out << "  0-E-unitary: " << (eu.holds ? "true" : "false");
    if (eu.witness) {
      out << ", witness e = " << t.label(eu.witness->elements[0])
          << ", s = " << t.label(eu.witness->elements[1]);
    }
    out << '\n';
    auto const cat = is_categorical(t);
    out << "  categorical: " << (cat.holds ? "true" : "false");
    if (cat.witness) {
      out << ", witness (a, b, c) = " << witness_text(t, *cat.witness);
    }
    out << '\n';
    out << title << ": 0-E-unitary: " << (eu.holds ? "true" : "false")
        << ", categorical: " << (cat.holds ? "true" : "false") << '\n';
    return out.str();
  }

}  // namespace chainisom
