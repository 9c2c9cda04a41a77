#include <stdexcept>

#include "seqpipe/dsl/format.hpp"

namespace seqpipe::dsl {

using nlohmann::ordered_json;

namespace {

ordered_json poly_to_json(const Poly& p) {
  ordered_json out = ordered_json::array();
  if (p.is_zero()) {
    out.push_back("0");
    return out;
  }
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

Poly poly_from_json(const ordered_json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("coefficient list expected");
  std::vector<mpz_class> c;
  for (const auto& s : j) {
    if (!s.is_string()) throw std::invalid_argument("coefficients must be decimal strings");
    mpz_class v;
    if (v.set_str(s.get<std::string>(), 10) != 0) {
      throw std::invalid_argument("bad integer '" + s.get<std::string>() + "'");
    }
    c.push_back(v);
  }
  Poly out;
  for (std::size_t i = c.size(); i-- > 0;) out = out * Poly::r() + Poly(c[i]);
  return out;
}

ordered_json row_to_json(const std::vector<FieldElem>& row) {
  ordered_json out = ordered_json::array();
  for (const auto& e : row) out.push_back(field_to_json(e));
  return out;
}

std::vector<FieldElem> row_from_json(const ordered_json& j) {
  if (!j.is_array()) throw std::invalid_argument("entry list expected");
  std::vector<FieldElem> out;
  for (const auto& e : j) out.push_back(field_from_json(e));
  return out;
}

std::vector<std::vector<FieldElem>> rows_from_json(const ordered_json& j) {
  if (!j.is_array()) throw std::invalid_argument("row list expected");
  std::vector<std::vector<FieldElem>> out;
  for (const auto& r : j) out.push_back(row_from_json(r));
  return out;
}

}  // namespace

ordered_json field_to_json(const FieldElem& e) {
  if (e.den().is_one()) return poly_to_json(e.num());
  ordered_json out;
  out["num"] = poly_to_json(e.num());
  out["den"] = poly_to_json(e.den());
  return out;
}

FieldElem field_from_json(const ordered_json& j) {
  if (j.is_array()) return FieldElem(poly_from_json(j));
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    return FieldElem(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
  }
  throw std::invalid_argument("field element must be a coefficient list or {num, den}");
}

ordered_json to_json(const Value& v) {
  ordered_json out;
  out["kind"] = std::string(kind_name(v));
  if (v.is<FieldElem>()) {
    out["entries"] = ordered_json::array({field_to_json(v.as<FieldElem>())});
  } else if (v.is<PolyX>()) {
    out["degree"] = v.as<PolyX>().degree();
    out["entries"] = row_to_json(v.as<PolyX>().coeffs());
  } else if (v.is<Series>()) {
    out["order"] = v.as<Series>().prec();
    out["entries"] = row_to_json(v.as<Series>().coeffs());
  } else if (v.is<Triangle>()) {
    out["rows"] = v.as<Triangle>().size();
    ordered_json rows = ordered_json::array();
    for (const auto& r : v.as<Triangle>().rows) rows.push_back(row_to_json(r));
    out["entries"] = rows;
  } else if (v.is<JFraction>()) {
    out["entries"] = ordered_json::array({row_to_json(v.as<JFraction>().b), row_to_json(v.as<JFraction>().lam)});
  } else if (v.is<SFraction>()) {
    out["entries"] = row_to_json(v.as<SFraction>().s);
  } else if (v.is<SquareMatrix>()) {
    out["size"] = v.as<SquareMatrix>().size();
    ordered_json rows = ordered_json::array();
    for (const auto& r : v.as<SquareMatrix>().m) rows.push_back(row_to_json(r));
    out["entries"] = rows;
  } else if (v.is<List>()) {
    ordered_json items = ordered_json::array();
    for (const auto& item : v.as<List>().items) items.push_back(to_json(item));
    out["entries"] = items;
  } else {
    out["entries"] = v.as<Symbol>().name;
  }
  return out;
}

Value from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("entries")) {
    throw std::invalid_argument("value object with kind and entries expected");
  }
  const std::string kind = j.at("kind").get<std::string>();
  const ordered_json& e = j.at("entries");
  if (kind == "scalar") {
    if (!e.is_array() || e.size() != 1) throw std::invalid_argument("scalar needs one entry");
    return Value{field_from_json(e[0])};
  }
  if (kind == "polynomial") return Value{PolyX(row_from_json(e))};
  if (kind == "series") return Value{Series(row_from_json(e))};
  if (kind == "triangle") {
    Triangle t{rows_from_json(e)};
    for (std::size_t n = 0; n < t.size(); ++n) {
      if (t.rows[n].size() != n + 1) throw std::invalid_argument("triangle row has wrong length");
    }
    return Value{std::move(t)};
  }
  if (kind == "jfraction") {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("jfraction needs [b, lam]");
    return Value{JFraction{row_from_json(e[0]), row_from_json(e[1])}};
  }
  if (kind == "sfraction") return Value{SFraction{row_from_json(e)}};
  if (kind == "matrix") return Value{SquareMatrix{rows_from_json(e)}};
  if (kind == "list") {
    List l;
    for (const auto& item : e) l.items.push_back(from_json(item));
    return Value{std::move(l)};
  }
  if (kind == "symbol") return Value{Symbol{e.get<std::string>()}};
  throw std::invalid_argument("unknown kind '" + kind + "'");
}

}  // namespace seqpipe::dsl
