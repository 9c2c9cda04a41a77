#include "seqpipe/dsl/format.hpp"

#include <algorithm>

namespace seqpipe::dsl {

std::optional<Format> parse_format(std::string_view name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

namespace {

using Grid = std::vector<std::vector<std::string>>;

std::vector<std::string> strings(const std::vector<FieldElem>& row) {
  std::vector<std::string> out;
  for (const auto& e : row) out.push_back(e.to_string());
  return out;
}

Grid grid(const std::vector<std::vector<FieldElem>>& rows) {
  Grid g;
  for (const auto& r : rows) g.push_back(strings(r));
  return g;
}

std::string table_lines(const Grid& g) {
  std::vector<std::size_t> width;
  for (const auto& row : g) {
    if (width.size() < row.size()) width.resize(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : g) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += ", ";
      line += std::string(g.size() > 1 ? width[i] - row[i].size() : 0, ' ') + row[i];
    }
    out += line + "\n";
  }
  return out;
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_lines(const Grid& g) {
  std::string out;
  for (const auto& row : g) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += csv_field(row[i]);
    }
    out += "\n";
  }
  return out;
}

/// Labelled rows for the fraction kinds and lists.
Grid value_grid(const Value& v, std::vector<std::string>* labels) {
  if (v.is<FieldElem>()) return {{v.as<FieldElem>().to_string()}};
  if (v.is<PolyX>()) return {strings(v.as<PolyX>().coeffs())};
  if (v.is<Series>()) return {strings(v.as<Series>().coeffs())};
  if (v.is<Triangle>()) return grid(v.as<Triangle>().rows);
  if (v.is<SquareMatrix>()) return grid(v.as<SquareMatrix>().m);
  if (v.is<JFraction>()) {
    *labels = {"b", "lam"};
    return {strings(v.as<JFraction>().b), strings(v.as<JFraction>().lam)};
  }
  if (v.is<SFraction>()) {
    *labels = {"s"};
    return {strings(v.as<SFraction>().s)};
  }
  if (v.is<List>()) {
    std::vector<std::string> row;
    for (const auto& item : v.as<List>().items) {
      std::vector<std::string> ignored;
      Grid g = value_grid(item, &ignored);
      std::string cell;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) cell += "; ";
        for (std::size_t k = 0; k < g[i].size(); ++k) cell += (k ? ", " : "") + g[i][k];
      }
      row.push_back(g.size() == 1 && g[0].size() == 1 ? cell : "[" + cell + "]");
    }
    return {row};
  }
  return {{v.as<Symbol>().name}};
}

}  // namespace

std::string format(const Value& v, Format f) {
  if (f == Format::Json) return to_json(v).dump() + "\n";
  std::vector<std::string> labels;
  Grid g = value_grid(v, &labels);
  if (f == Format::Csv) {
    for (std::size_t i = 0; i < labels.size(); ++i) g[i].insert(g[i].begin(), labels[i]);
    return csv_lines(g);
  }
  if (labels.empty()) return table_lines(g);
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) out += labels[i] + ": " + table_lines({g[i]});
  return out;
}

}  // namespace seqpipe::dsl
