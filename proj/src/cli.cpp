#include "isokit/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "isokit/boxfree.hpp"
#include "isokit/formulas.hpp"
#include "isokit/grassmann.hpp"
#include "isokit/io.hpp"
#include "isokit/isotropy.hpp"
#include "isokit/rank.hpp"
#include "isokit/selftest.hpp"

namespace isokit {

namespace {

using io::Json;
namespace fm = isokit::formulas;

struct RunConfig {
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> e;
  std::uint32_t r = 1;
  std::optional<std::int64_t> n, d, m, k, l;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> cap;
  std::string out;
  std::string format = "json";
  unsigned threads = 1;
  bool char_zero = false;
  std::string tensor;
  std::string graph;
  std::string kind = "hom";
  std::uint64_t samples = 0;
  std::uint64_t max_trials = 10'000;
  std::string mutation;
  std::vector<int> only;
};

// The output of a handler: JSON, or preformatted text for --format csv.
struct Output {
  Output(Json j, std::string t = {}, int c = kExitOk) : json(std::move(j)), text(std::move(t)), code(c) {}

  Json json;
  std::string text;
  int code;
};

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) throw PreconditionError(std::string("missing required flag ") + flag);
  return *v;
}

std::size_t need_size(const std::optional<std::int64_t>& v, const char* flag) {
  const auto x = need(v, flag);
  if (x < 0) throw PreconditionError(std::string(flag) + " must be non-negative");
  return static_cast<std::size_t>(x);
}

Field base_field(const RunConfig& c) {
  if (c.q) return Field::of_order(*c.q);
  if (c.p) return Field::make(*c.p, c.e.value_or(1));
  throw PreconditionError("a field is required: pass --q or --p [--e]");
}

// The field the computation runs over: GF(q) extended to degree r.
Field work_field(const RunConfig& c) {
  const Field f = base_field(c);
  if (c.r == 1) return f;
  if (c.r == 0) throw PreconditionError("--r must be at least 1");
  return Field::make(f.characteristic(), f.degree() * c.r);
}

std::uint64_t cap_of(const RunConfig& c) { return c.cap.value_or(default_cap()); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw PreconditionError("invalid JSON in " + path + ": " + ex.what());
  }
}

io::AnyTensor load_or_random(const RunConfig& c, TensorKind kind) {
  if (!c.tensor.empty()) return io::tensor_from_json(read_json_file(c.tensor));
  const Field f = base_field(c);
  const auto n = need_size(c.n, "--n");
  const auto d = need_size(c.d, "--d");
  const auto m = need_size(c.m, "--m");
  if (kind == TensorKind::alt) return random_alt_tensor(f, n, d, m, c.seed);
  return random_tensor(f, n, d, m, c.seed);
}

Tensor hom_tensor(const RunConfig& c) {
  auto t = load_or_random(c, TensorKind::hom);
  if (auto* h = std::get_if<Tensor>(&t)) return *h;
  return expand(std::get<AltTensor>(t));
}

AltTensor alt_tensor(const RunConfig& c) {
  auto t = load_or_random(c, TensorKind::alt);
  if (auto* a = std::get_if<AltTensor>(&t)) return *a;
  throw PreconditionError("this command needs an alternating tensor (kind \"alt\")");
}

template <typename T>
T extended(const T& t, const RunConfig& c) {
  if (c.r == 1) return t;
  const Field& f = t.field();
  return base_change(t, Field::make(f.characteristic(), f.degree() * c.r));
}

Json formula_value(const BigInt& v) {
  if (v >= -(BigInt(1) << 53) && v <= (BigInt(1) << 53)) return static_cast<std::int64_t>(v);
  return io::big(v);
}

Json formula_json(const std::string& quantity, Json params, Json value, const std::string& branch) {
  return Json{{"quantity", quantity}, {"params", std::move(params)}, {"value", std::move(value)}, {"branch", branch}};
}

Json tuples_json(const std::vector<std::vector<Subspace>>& tuples) {
  Json out = Json::array();
  for (const auto& tuple : tuples) {
    Json row = Json::array();
    for (const auto& s : tuple) row.push_back(io::to_json(s));
    out.push_back(row);
  }
  return out;
}

std::optional<BigInt> try_count(const std::function<BigInt()>& fn) {
  try {
    return fn();
  } catch (const CapExceeded&) {
    return std::nullopt;
  }
}

Json opt_big(const std::optional<BigInt>& v) { return v ? io::big(*v) : Json(nullptr); }

void require_json(const RunConfig& c) {
  if (c.format != "json") throw PreconditionError("--format csv is only available for tabular sweeps");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Isotropic subspaces of multilinear maps over finite fields", "isokit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "isokit 1.0.0");

  std::vector<std::pair<CLI::App*, std::function<Output()>>> handlers;

  auto field_opts = [&](CLI::App* s) {
    auto* q = s->add_option("--q", c.q, "field order (prime power)");
    auto* p = s->add_option("--p", c.p, "characteristic");
    auto* e = s->add_option("--e", c.e, "extension degree over GF(p)");
    q->excludes(p)->excludes(e);
    e->needs(p);
  };
  auto common = [&](CLI::App* s) {
    s->add_option("--out", c.out, "write the result here instead of stdout");
    s->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--cap", c.cap, "enumeration cap (default ISOTROPY_CAP or 1e7)");
    s->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                  std::function<Output()> fn) {
    auto* s = parent->add_subcommand(name, desc);
    common(s);
    handlers.emplace_back(s, std::move(fn));
    return s;
  };
  auto opt = [](CLI::App* s, const std::string& flag, std::optional<std::int64_t>& v, const std::string& desc) {
    s->add_option(flag, v, desc);
  };
  auto tensor_source = [&](CLI::App* s) {
    field_opts(s);
    s->add_option("--tensor", c.tensor, "tensor JSON file; otherwise a random map is drawn");
    opt(s, "--n", c.n, "domain dimension");
    opt(s, "--d", c.d, "number of arguments");
    opt(s, "--m", c.m, "codomain dimension");
    s->add_option("--seed", c.seed, "seed for random maps");
  };

  // formula
  auto* formula = app.add_subcommand("formula", "closed-form extremal quantities");
  formula->require_subcommand(1);
  auto* f_k0 = leaf(formula, "k0", "max s with s(n-s) >= m C(s,d)", [&] {
    require_json(c);
    const auto n = need(c.n, "--n"), d = need(c.d, "--d"), m = need(c.m, "--m");
    return Output{formula_json("k0", {{"n", n}, {"d", d}, {"m", m}}, fm::k0(n, d, m), "generic")};
  });
  auto* f_alpha = leaf(formula, "alpha-alt", "isotropy index over an algebraically closed field", [&] {
    require_json(c);
    const auto n = need(c.n, "--n"), d = need(c.d, "--d"), m = need(c.m, "--m");
    const auto v = fm::alpha_alt_closed(n, d, m, c.char_zero);
    return Output{formula_json("alpha-alt", {{"n", n}, {"d", d}, {"m", m}, {"char_zero", c.char_zero}},
                               formula_value(v.value), v.branch)};
  });
  auto* f_fp = leaf(formula, "fp", "Feldman-Propp number", [&] {
    require_json(c);
    const auto d = need(c.d, "--d"), m = need(c.m, "--m"), k = need(c.k, "--k");
    const auto v = fm::fp_number(d, m, k, c.char_zero);
    return Output{formula_json("fp", {{"d", d}, {"m", m}, {"k", k}, {"char_zero", c.char_zero}},
                               formula_value(v.value), v.branch)};
  });
  auto* f_turan = leaf(formula, "turan", "Turan number", [&] {
    require_json(c);
    const auto n = need(c.n, "--n"), d = need(c.d, "--d"), k = need(c.k, "--k");
    const auto v = fm::turan_number(n, d, k, c.char_zero);
    return Output{formula_json("turan", {{"n", n}, {"d", d}, {"k", k}, {"char_zero", c.char_zero}},
                               formula_value(v.value), v.branch)};
  });
  auto* f_gq = leaf(formula, "gq", "Gow-Quinlan number", [&] {
    require_json(c);
    const auto n = need(c.n, "--n"), d = need(c.d, "--d");
    return Output{formula_json("gq", {{"n", n}, {"d", d}}, formula_value(fm::gq_number(n, d)), "generic")};
  });
  auto* f_thm13 = leaf(formula, "thm13", "predicate d(n-2) >= m 2^(d-1)", [&] {
    require_json(c);
    const auto n = need(c.n, "--n"), d = need(c.d, "--d"), m = need(c.m, "--m");
    return Output{formula_json("thm13", {{"n", n}, {"d", d}, {"m", m}}, fm::thm13_predicate(n, d, m), "generic")};
  });
  auto* f_cpz = leaf(formula, "cpz", "exponent d - m/n and its admissibility", [&] {
    require_json(c);
    const auto n = need(c.n, "--n"), d = need(c.d, "--d"), m = need(c.m, "--m");
    const auto v = fm::cpz_exponent(n, d, m);
    Json j = formula_json("cpz", {{"n", n}, {"d", d}, {"m", m}}, io::rational(v.exponent), "generic");
    j["admissible"] = v.admissible;
    return Output{j};
  });
  for (auto* s : {f_k0, f_alpha, f_turan, f_thm13, f_cpz}) opt(s, "--n", c.n, "dimension");
  for (auto* s : {f_k0, f_alpha, f_fp, f_turan, f_gq, f_thm13, f_cpz}) opt(s, "--d", c.d, "arity");
  opt(f_gq, "--n", c.n, "dimension");
  for (auto* s : {f_k0, f_alpha, f_fp, f_thm13, f_cpz}) opt(s, "--m", c.m, "codomain dimension");
  for (auto* s : {f_fp, f_turan}) opt(s, "--k", c.k, "target isotropy index");
  for (auto* s : {f_alpha, f_fp, f_turan}) s->add_flag("--char-zero", c.char_zero, "characteristic 0 branch for m = 1");

  // isotropy
  auto* iso = app.add_subcommand("isotropy", "isotropic subspace searches and counts");
  iso->require_subcommand(1);
  auto* i_alt = leaf(iso, "alt", "isotropy index of an alternating map", [&] {
    require_json(c);
    return Output{io::to_json(alpha_alt(extended(alt_tensor(c), c), cap_of(c)))};
  });
  auto* i_hom = leaf(iso, "hom", "k-dimensional isotropic tuple of a general map", [&] {
    require_json(c);
    const auto k = need_size(c.k, "--k");
    return Output{io::to_json(alpha_hom(extended(hom_tensor(c), c), k, cap_of(c)), k)};
  });
  auto* i_min = leaf(iso, "field-min", "minimum isotropy index over all alternating maps", [&] {
    require_json(c);
    const Field f = work_field(c);
    const auto n = need_size(c.n, "--n"), d = need_size(c.d, "--d"), m = need_size(c.m, "--m");
    const auto r = alpha_field_alt(f, n, d, m, std::uint64_t{1} << 20U, c.samples, c.seed, cap_of(c));
    return Output{Json{{"value", r.value},
                       {"exact", r.exact},
                       {"tensors_examined", r.tensors_examined},
                       {"minimizer", r.minimizer ? io::to_json(*r.minimizer) : Json(nullptr)}}};
  });
  i_min->add_option("--samples", c.samples, "random maps to draw when exhaustive search is too large");
  auto* i_i1 = leaf(iso, "count-i1", "points of the incidence variety I_1", [&] {
    require_json(c);
    const Field f = work_field(c);
    const auto n = need_size(c.n, "--n"), d = need_size(c.d, "--d"), m = need_size(c.m, "--m");
    const auto k = need_size(c.k, "--k");
    const auto raw = try_count([&] { return count_I1_raw(f, n, d, m, k, cap_of(c)); });
    return Output{Json{{"quantity", "I1"},
                       {"q", f.order()},
                       {"params", {{"n", n}, {"d", d}, {"m", m}, {"k", k}}},
                       {"formula", io::big(count_I1_points(f, n, d, m, k))},
                       {"raw", opt_big(raw)},
                       {"dimension", dim_I1(n, d, m, k)}}};
  });
  auto* i_j1 = leaf(iso, "count-j1", "points of the incidence variety J_1", [&] {
    require_json(c);
    const Field f = work_field(c);
    const auto n = need_size(c.n, "--n"), d = need_size(c.d, "--d"), m = need_size(c.m, "--m");
    const auto fibers = try_count([&] { return count_J1_by_fibers(f, n, d, m, cap_of(c)); });
    const auto raw = try_count([&] { return count_J1_raw(f, n, d, m, cap_of(c)); });
    return Output{Json{{"quantity", "J1"},
                       {"q", f.order()},
                       {"params", {{"n", n}, {"d", d}, {"m", m}}},
                       {"formula", io::big(count_J1_points(f, n, d, m))},
                       {"fibers", opt_big(fibers)},
                       {"raw", opt_big(raw)},
                       {"dimension", dim_J1(n, d, m)}}};
  });
  auto* i_dt = leaf(iso, "dt", "D_T: tuples of isotropic planes", [&] {
    require_json(c);
    const Tensor t = extended(hom_tensor(c), c);
    const auto tuples = enumerate_DT(t, cap_of(c));
    return Output{Json{{"q", t.field().order()}, {"dt_size", tuples.size()}, {"tuples", tuples_json(tuples)}}};
  });
  for (auto* s : {i_alt, i_hom, i_dt}) tensor_source(s);
  for (auto* s : {i_min, i_i1, i_j1}) {
    field_opts(s);
    opt(s, "--n", c.n, "domain dimension");
    opt(s, "--d", c.d, "number of arguments");
    opt(s, "--m", c.m, "codomain dimension");
  }
  i_min->add_option("--seed", c.seed, "seed for sampling");
  opt(i_hom, "--k", c.k, "subspace dimension");
  opt(i_i1, "--k", c.k, "subspace dimension");
  for (auto* s : {i_alt, i_hom, i_dt, i_min, i_i1, i_j1})
    s->add_option("--r", c.r, "work over GF(q^r)")->check(CLI::PositiveNumber);

  // rank
  auto* rk = app.add_subcommand("rank", "zero counts and analytic rank");
  rk->require_subcommand(1);
  auto* r_zeros = leaf(rk, "zeros", "|Z_T| for a general map", [&] {
    require_json(c);
    const Tensor t = hom_tensor(c);
    return Output{Json{{"zero_count", io::big(zero_count(t, 0, cap_of(c), c.threads))},
                       {"dn1", t.d() * t.n()},
                       {"q", t.field().order()}}};
  });
  auto* r_ar = leaf(rk, "ar", "analytic rank report", [&] {
    require_json(c);
    const Tensor t = hom_tensor(c);
    Json j = io::to_json(analytic_rank(t, cap_of(c), c.threads));
    j["partition_rank_bound"] = partition_rank_bound(t);
    return Output{j};
  });
  for (auto* s : {r_zeros, r_ar}) tensor_source(s);

  // grassmann
  auto* gr = app.add_subcommand("grassmann", "Grassmannian enumeration and counts");
  gr->require_subcommand(1);
  auto* g_enum = leaf(gr, "enum", "list Gr(k, GF(q)^n) in canonical order", [&] {
    const Field f = work_field(c);
    const auto n = need_size(c.n, "--n"), k = need_size(c.k, "--k");
    const auto spaces = enumerate_grassmannian(f, n, k, cap_of(c));
    if (c.format == "csv") {
      std::ostringstream os;
      os << "index,rows\n";
      for (std::size_t i = 0; i < spaces.size(); ++i) {
        os << i << ',';
        for (std::size_t r = 0; r < spaces[i].dim(); ++r) {
          if (r > 0) os << ';';
          for (Elem x : spaces[i].row(r)) os << x;
        }
        os << '\n';
      }
      return Output{Json(), os.str()};
    }
    Json list = Json::array();
    for (const auto& s : spaces) list.push_back(io::to_json(s));
    return Output{Json{{"q", f.order()}, {"n", n}, {"k", k}, {"count", std::to_string(spaces.size())},
                       {"subspaces", list}}};
  });
  auto* g_count = leaf(gr, "count", "Gaussian binomial", [&] {
    require_json(c);
    const Field f = work_field(c);
    const auto n = need_size(c.n, "--n"), k = need_size(c.k, "--k");
    return Output{Json{{"q", f.order()}, {"n", n}, {"k", k}, {"value", io::big(gauss_binom(n, k, f.order()))}}};
  });
  auto* g_sigma = leaf(gr, "sigma", "ordered pairs of k-subspaces by intersection dimension", [&] {
    const Field f = work_field(c);
    const auto n = need_size(c.n, "--n"), k = need_size(c.k, "--k");
    std::vector<BigInt> counts;
    std::size_t lo = 2 * k > n ? 2 * k - n : 0;
    std::size_t hi = k;
    if (c.l) {
      lo = hi = need_size(c.l, "--l");
      counts.assign(k + 1, 0);
      counts.at(lo) = sigma_count(f, n, k, lo, SigmaMethod::automatic, cap_of(c), c.threads);
    } else {
      counts = sigma_counts(f, n, k, SigmaMethod::automatic, cap_of(c), c.threads);
    }
    if (c.format == "csv") {
      std::ostringstream os;
      os << "l,count,dimension\n";
      for (std::size_t l = lo; l <= hi; ++l)
        os << l << ',' << counts[l] << ',' << sigma_dimension(n, k, l) << '\n';
      return Output{Json(), os.str()};
    }
    Json rows = Json::array();
    for (std::size_t l = lo; l <= hi; ++l)
      rows.push_back({{"l", l}, {"count", io::big(counts[l])}, {"dimension", sigma_dimension(n, k, l)}});
    return Output{Json{{"q", f.order()}, {"n", n}, {"k", k}, {"strata", rows}}};
  });
  for (auto* s : {g_enum, g_count, g_sigma}) {
    field_opts(s);
    s->add_option("--r", c.r, "work over GF(q^r)")->check(CLI::PositiveNumber);
    opt(s, "--n", c.n, "ambient dimension");
    opt(s, "--k", c.k, "subspace dimension");
  }
  opt(g_sigma, "--l", c.l, "single intersection dimension");

  // boxfree
  auto* bx = app.add_subcommand("boxfree", "K_{2,...,2}-free hypergraphs from multilinear maps");
  bx->require_subcommand(1);
  auto write_graph = [&](const Hypergraph& g, const BoxCertificate& cert) {
    if (c.graph.empty()) return;
    std::ofstream f(c.graph);
    if (!f) throw PreconditionError("cannot write " + c.graph);
    const bool text = c.graph.size() > 4 && c.graph.substr(c.graph.size() - 4) == ".txt";
    if (text)
      f << io::edge_list_text(g, cert.q, cert.n, cert.m);
    else
      f << io::to_json(g).dump() << '\n';
  };
  auto* b_gen = leaf(bx, "gen", "search a map with few isotropic plane tuples and prune G(T)", [&] {
    require_json(c);
    const Field f = base_field(c);
    const auto n = need_size(c.n, "--n"), d = need_size(c.d, "--d"), m = need_size(c.m, "--m");
    const auto found = pigeonhole_search_T(f, n, d, m, c.seed, c.max_trials, std::uint64_t{1} << 20U, cap_of(c));
    const auto p = delete_and_verify(found.tensor, cap_of(c));
    write_graph(p.after, p.certificate);
    Json j = io::to_json(p.certificate);
    j["search"] = {{"exhaustive", found.exhaustive}, {"trials", found.trials}, {"met_bound", found.met_bound}};
    j["tensor"] = io::to_json(found.tensor);
    return Output{j};
  });
  b_gen->add_option("--max-trials", c.max_trials, "random maps to try when exhaustive search is too large");
  auto* b_verify = leaf(bx, "verify", "run the pipeline on a given map, or check a hypergraph file", [&] {
    require_json(c);
    if (!c.graph.empty() && c.tensor.empty()) {
      const auto h = io::hypergraph_from_json(read_json_file(c.graph));
      const auto r = freeness_check(h, cap_of(c));
      Json v = nullptr;
      if (r.violation) v = {h.edges[r.violation->first], h.edges[r.violation->second]};
      return Output{Json{{"edges", std::to_string(h.edges.size())}, {"free", r.free}, {"violation", v}},
                    "", r.free ? kExitOk : kExitInvariant};
    }
    const Tensor t = hom_tensor(c);
    const auto p = delete_and_verify(t, cap_of(c));
    write_graph(p.after, p.certificate);
    Json j = io::to_json(p.certificate);
    j["tensor"] = io::to_json(t);
    return Output{j};
  });
  field_opts(b_gen);
  opt(b_gen, "--n", c.n, "projective dimension (maps act on GF(q)^{n+1})");
  opt(b_gen, "--d", c.d, "number of parts");
  opt(b_gen, "--m", c.m, "codomain dimension");
  b_gen->add_option("--seed", c.seed, "seed for the search");
  b_gen->add_option("--graph", c.graph, "write the pruned hypergraph (JSON, or edge list if *.txt)");
  b_verify->add_option("--tensor", c.tensor, "tensor JSON file (general map on GF(q)^{n+1})");
  b_verify->add_option("--graph", c.graph, "hypergraph JSON to check, or output path with --tensor");

  // tensor
  auto* tn = app.add_subcommand("tensor", "create and inspect tensor files");
  tn->require_subcommand(1);
  auto* t_random = leaf(tn, "random", "draw a random map", [&] {
    require_json(c);
    if (c.kind == "alt") return Output{io::to_json(alt_tensor(c))};
    return Output{io::to_json(hom_tensor(c))};
  });
  t_random->add_option("--kind", c.kind, "hom or alt")->check(CLI::IsMember({"hom", "alt"}));
  auto* t_show = leaf(tn, "show", "summarize a tensor file", [&] {
    require_json(c);
    if (c.tensor.empty()) throw PreconditionError("missing required flag --tensor");
    const auto any = io::tensor_from_json(read_json_file(c.tensor));
    Json j = std::visit([](const auto& t) { return io::to_json(t); }, any);
    const Vec& coeffs = std::visit([](const auto& t) -> const Vec& { return t.coeffs(); }, any);
    j["q"] = std::visit([](const auto& t) { return t.field().order(); }, any);
    j["nonzero"] = std::count_if(coeffs.begin(), coeffs.end(), [](Elem x) { return x != 0; });
    return Output{j};
  });
  tensor_source(t_random);
  t_show->add_option("--tensor", c.tensor, "tensor JSON file");

  // selftest
  auto* st = leaf(&app, "selftest", "run the acceptance criteria", [&] {
    require_json(c);
    selftest::Options o;
    o.seed = c.seed;
    o.mutation = c.mutation;
    o.threads = c.threads;
    auto progress = [&](const selftest::Criterion& r) {
      err << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.seconds << " s)\n";
    };
    std::vector<selftest::Criterion> results;
    if (c.only.empty()) {
      results = selftest::run_all(o, progress);
    } else {
      for (int id : c.only) {
        results.push_back(selftest::run(id, o));
        progress(results.back());
      }
    }
    Json rep = selftest::report(results, o);
    const bool ok = rep["pass"].get<bool>();
    return Output{std::move(rep), "", ok ? kExitOk : kExitFailure};
  });
  st->add_option("--seed", c.seed, "seed for the sampled criteria");
  st->add_option("--mutation", c.mutation, "negative control (\"k0-constant\")");
  st->add_option("--only", c.only, "run only these criteria")->check(CLI::Range(1, selftest::kCriterionCount));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    err << os.str();
    return kExitPrecondition;
  }

  try {
    for (auto& [sub, fn] : handlers) {
      if (!sub->parsed()) continue;
      if (c.format == "csv" && sub != g_enum && sub != g_sigma)
        throw PreconditionError("--format csv is only available for grassmann enum and grassmann sigma");
      Output o = fn();
      const std::string body = o.text.empty() ? o.json.dump(2) + "\n" : o.text;
      if (c.out.empty()) {
        out << body;
      } else {
        std::ofstream f(c.out);
        if (!f) throw PreconditionError("cannot write " + c.out);
        f << body;
      }
      return o.code;
    }
    throw PreconditionError("no command selected");
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace isokit
