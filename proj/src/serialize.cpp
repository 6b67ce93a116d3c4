#include "chainisom/serialize.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace chainisom {

  nlohmann::json to_json(PartialInjection const& a) {
    auto map = nlohmann::json::array();
    for (auto const& [x, y] : a.pairs()) {
      map.push_back({x, y});
    }
    return nlohmann::json{{"n", a.chain_size()}, {"map", std::move(map)}};
  }

  PartialInjection from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("map")
        || !j["n"].is_number_integer() || !j["map"].is_array()) {
      throw Error(ErrorKind::parse_error,
                  "expected {\"n\": int, \"map\": [[x,y],...]}");
    }
    std::vector<Pair> pairs;
    for (auto const& p : j["map"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer()
          || !p[1].is_number_integer()) {
        throw Error(ErrorKind::parse_error, "pair must be [x, y]: " + p.dump());
      }
      pairs.push_back({p[0].get<Point>(), p[1].get<Point>()});
    }
    return PartialInjection::make(j["n"].get<int>(), std::move(pairs));
  }

  std::string to_json_line(PartialInjection const& a) {
    nlohmann::ordered_json j;
    j["n"]   = a.chain_size();
    j["map"] = to_json(a)["map"];
    return j.dump();
  }

  std::string to_matrix(PartialInjection const& a) {
    std::string top, bottom;
    for (auto const& [x, y] : a.pairs()) {
      if (!top.empty()) {
        top += ' ';
        bottom += ' ';
      }
      top += std::to_string(x);
      bottom += std::to_string(y);
    }
    return "(" + top + " / " + bottom + ")";
  }

  namespace {
    std::vector<Point> parse_row(std::string_view row) {
      std::vector<Point> out;
      std::istringstream in{std::string(row)};
      std::string        tok;
      while (in >> tok) {
        for (char c : tok) {
          if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw Error(ErrorKind::parse_error, "bad token '" + tok + "'");
          }
        }
        out.push_back(std::stoi(tok));
      }
      return out;
    }
  }  // namespace

  PartialInjection from_matrix(int n, std::string_view text) {
    auto open  = text.find('(');
    auto slash = text.find('/');
    auto close = text.rfind(')');
    if (open == std::string_view::npos || slash == std::string_view::npos
        || close == std::string_view::npos || !(open < slash && slash < close)) {
      throw Error(ErrorKind::parse_error,
                  "expected \"(x1 ... / y1 ...)\", found \"" + std::string(text)
                      + "\"");
    }
    auto xs = parse_row(text.substr(open + 1, slash - open - 1));
    auto ys = parse_row(text.substr(slash + 1, close - slash - 1));
    if (xs.size() != ys.size()) {
      throw Error(ErrorKind::parse_error, "rows have different lengths");
    }
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      pairs.push_back({xs[i], ys[i]});
    }
    return PartialInjection::make(n, std::move(pairs));
  }

}  // namespace chainisom
