#include "isokit/io.hpp"

#include <algorithm>
#include <sstream>

namespace isokit::io {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw PreconditionError(std::string("missing JSON field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw PreconditionError(std::string("malformed JSON field \"") + key + "\"");
  }
}

Json rows_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    const auto row = m.row(r);
    rows.push_back(Json(Vec(row.begin(), row.end())));
  }
  return rows;
}

}  // namespace

Json big(const BigInt& v) { return v.str(); }

BigInt parse_big(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (!j.is_string()) throw PreconditionError("expected an integer or a decimal string");
  try {
    return BigInt(j.get<std::string>());
  } catch (const std::exception&) {
    throw PreconditionError("malformed decimal integer");
  }
}

Json rational(const BigRational& v) {
  return Json{{"num", numerator(v).str()}, {"den", denominator(v).str()}};
}

Json to_json(const FieldSpec& s) { return Json{{"p", s.p}, {"e", s.e}, {"modulus", s.modulus}}; }

FieldSpec field_spec_from_json(const Json& j) {
  FieldSpec s;
  s.p = get_field<std::uint32_t>(j, "p");
  s.e = get_field<std::uint32_t>(j, "e");
  s.modulus = get_field<std::vector<std::uint32_t>>(j, "modulus");
  return s;
}

Json to_json(const Tensor& t) {
  return Json{{"field", to_json(t.field().spec())}, {"kind", "hom"}, {"n", t.n()},
              {"d", t.d()},   {"m", t.m()},        {"coeffs", t.coeffs()}};
}

Json to_json(const AltTensor& t) {
  return Json{{"field", to_json(t.field().spec())}, {"kind", "alt"}, {"n", t.n()},
              {"d", t.d()},   {"m", t.m()},        {"coeffs", t.coeffs()}};
}

AnyTensor tensor_from_json(const Json& j) {
  const Field f = Field::from_spec(field_spec_from_json(get_field<Json>(j, "field")));
  const auto kind = get_field<std::string>(j, "kind");
  const auto n = get_field<std::size_t>(j, "n");
  const auto d = get_field<std::size_t>(j, "d");
  const auto m = get_field<std::size_t>(j, "m");
  auto coeffs = get_field<Vec>(j, "coeffs");
  if (kind == "hom") return Tensor(f, n, d, m, std::move(coeffs));
  if (kind == "alt") return AltTensor(f, n, d, m, std::move(coeffs));
  throw PreconditionError("tensor kind must be \"hom\" or \"alt\"");
}

Json to_json(const Subspace& s) { return Json{{"n", s.ambient()}, {"k", s.dim()}, {"rows", rows_json(s.basis())}}; }

Subspace subspace_from_json(const Field& f, const Json& j) {
  const auto n = get_field<std::size_t>(j, "n");
  const auto k = get_field<std::size_t>(j, "k");
  const auto rows = get_field<std::vector<Vec>>(j, "rows");
  if (rows.size() != k) throw PreconditionError("subspace row count differs from k");
  Matrix m(0, n);
  for (const auto& r : rows) {
    if (r.size() != n) throw PreconditionError("subspace row length differs from n");
    for (Elem x : r)
      if (!f.contains(x)) throw PreconditionError("subspace entry outside the field");
    m.append_row(r);
  }
  return Subspace::from_rref(n, std::move(m));
}

Json to_json(const IsotropyResult& r) {
  Json w = Json::array();
  for (const auto& s : r.witness) w.push_back(to_json(s));
  return Json{{"index", r.index}, {"exhausted", r.exhausted}, {"witness", w}};
}

Json to_json(const HomIsotropyResult& r, std::size_t k) {
  Json w = Json::array();
  for (const auto& s : r.witness) w.push_back(to_json(s));
  return Json{{"k", k}, {"found", r.found}, {"exhausted", r.exhausted}, {"witness", w}};
}

Json to_json(const RankReport& r) {
  return Json{{"zero_count", big(r.zero_count)}, {"dn1", r.dn1},       {"q", r.q},
              {"bound_m", r.bound_m},            {"ar_leq_m", r.ar_leq_m}, {"ar_geq_0", r.ar_geq_0},
              {"ar_decimal", r.ar_decimal}};
}

Json to_json(const Hypergraph& h) {
  return Json{{"d", h.d}, {"parts", h.parts}, {"edges", h.edges}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  Hypergraph h;
  h.d = get_field<std::size_t>(j, "d");
  h.parts = get_field<std::vector<std::vector<Vec>>>(j, "parts");
  h.edges = get_field<std::vector<Edge>>(j, "edges");
  if (h.parts.size() != h.d) throw PreconditionError("hypergraph needs one part per slot");
  for (const auto& e : h.edges) {
    if (e.size() != h.d) throw PreconditionError("edge arity differs from d");
    for (std::size_t s = 0; s < h.d; ++s)
      if (e[s] >= h.parts[s].size()) throw PreconditionError("edge references a missing vertex");
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
  return h;
}

std::string edge_list_text(const Hypergraph& h, std::uint64_t q, std::size_t n, std::size_t m) {
  std::ostringstream os;
  os << "# " << h.d << ' ' << n << ' ' << q << ' ' << m << '\n';
  for (const auto& e : h.edges) {
    for (std::size_t s = 0; s < e.size(); ++s) os << (s == 0 ? "" : " ") << e[s];
    os << '\n';
  }
  return os.str();
}

Json to_json(const BoxCertificate& c) {
  auto s = [](std::uint64_t v) { return std::to_string(v); };
  return Json{
      {"params", {{"q", c.q}, {"n", c.n}, {"d", c.d}, {"m", c.m}}},
      {"edge_count_before", s(c.edge_count_before)},
      {"edge_count_after", s(c.edge_count_after)},
      {"dt_size", s(c.dt_size)},
      {"deleted_count", s(c.deleted_count)},
      {"deletion_budget", big(c.deletion_budget)},
      {"deletion_disjoint", c.deletion_disjoint},
      {"edge_bound",
       {{"edges", big(c.edge_bound.edges)},
        {"bound_numerator", big(c.edge_bound.numerator)},
        {"bound_denominator", big(c.edge_bound.denominator)},
        {"holds", c.edge_bound.holds}}},
      {"pigeonhole", {{"dt_size", s(c.dt_size)}, {"bound", big(c.dt_bound)}, {"holds", c.dt_bound_met}}},
      {"k22_copies_before", s(c.k22_copies)},
      {"key_step_verified", c.key_step_verified},
      {"freeness_verified", c.freeness_verified},
  };
}

}  // namespace isokit::io
