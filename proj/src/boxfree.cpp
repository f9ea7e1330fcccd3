#include "isokit/boxfree.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "isokit/grassmann.hpp"
#include "isokit/isotropy.hpp"
#include "isokit/rng.hpp"

namespace isokit {

namespace {

// Scales v so its first nonzero coordinate is 1.
Vec normalize(const Field& f, Vec v) {
  auto lead = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
  if (lead == v.end()) return v;
  const Elem s = f.inv(*lead);
  for (auto& x : v) x = f.mul(x, s);
  return v;
}

std::uint64_t code_of(std::span<const Elem> v, std::uint32_t q) {
  std::uint64_t c = 0;
  for (Elem x : v) c = c * q + x;
  return c;
}

// Vertex index of each canonical point, keyed by code_of.
std::vector<std::int64_t> point_index(const std::vector<Vec>& points, std::uint32_t q, std::size_t N) {
  std::vector<std::int64_t> idx(static_cast<std::size_t>(pow_saturating(q, N)), -1);
  for (std::size_t i = 0; i < points.size(); ++i) idx[code_of(points[i], q)] = static_cast<std::int64_t>(i);
  return idx;
}

// The q + 1 canonical points of a plane.
std::vector<Vec> plane_points(const Field& f, const Subspace& v) {
  std::vector<Vec> out;
  const auto r0 = v.row(0);
  const auto r1 = v.row(1);
  auto combo = [&](Elem a, Elem b) {
    Vec w(v.ambient());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = f.add(f.mul(a, r0[i]), f.mul(b, r1[i]));
    return w;
  };
  out.push_back(combo(0, 1));
  for (Elem b = 0; b < f.order(); ++b) out.push_back(combo(1, b));
  return out;
}

}  // namespace

std::vector<Vec> projective_points(const Field& f, std::size_t N) {
  const std::uint32_t q = f.order();
  const std::uint64_t total = pow_saturating(q, N);
  if (total > kTensorSizeCap) throw CapExceeded("projective space too large");
  std::vector<Vec> out;
  Vec v(N);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t x = c;
    for (std::size_t i = N; i-- > 0;) {
      v[i] = static_cast<Elem>(x % q);
      x /= q;
    }
    auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (lead != v.end() && *lead == 1) out.push_back(v);
  }
  return out;
}

bool Hypergraph::has_edge(const Edge& e) const { return std::binary_search(edges.begin(), edges.end(), e); }

Hypergraph build_G(const Tensor& t, std::uint64_t cap) {
  const auto points = projective_points(t.field(), t.n());
  const std::size_t P = points.size();
  const std::uint64_t total = pow_saturating(P, t.d());
  if (total > cap) throw CapExceeded("edge enumeration over " + std::to_string(total) + " tuples exceeds the cap");
  Hypergraph g;
  g.d = t.d();
  g.parts.assign(t.d(), points);
  Edge e(t.d(), 0);
  std::vector<Vec> args(t.d());
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t x = c;
    for (std::size_t s = t.d(); s-- > 0;) {
      e[s] = static_cast<std::uint32_t>(x % P);
      x /= P;
    }
    for (std::size_t s = 0; s < t.d(); ++s) args[s] = points[e[s]];
    if (is_zero(eval(t, args))) g.edges.push_back(e);
  }
  return g;
}

EdgeBound edge_bound_check(const Tensor& t, const Hypergraph& g) {
  const std::uint64_t q = t.field().order();
  const std::uint64_t N = t.n();
  const std::uint64_t d = t.d();
  EdgeBound b;
  b.edges = g.edges.size();
  const std::uint64_t top = d * N >= t.m() ? d * N - t.m() : 0;
  b.numerator = d * N >= t.m() ? big_pow(q, top) : BigInt(0);
  b.numerator -= BigInt(d) * big_pow(q, (d - 1) * N);
  b.denominator = big_pow(q - 1, d);
  b.holds = b.edges * b.denominator >= b.numerator;
  return b;
}

bool box_admissible(std::size_t n, std::size_t d, std::size_t m) {
  return BigInt(m) * (big_pow(2, d) - 1) < BigInt(n) * d - d;
}

BigInt dt_pigeonhole_bound(std::uint64_t q, std::size_t N, std::size_t d, std::size_t m) {
  const BigInt qN = big_pow(q, N);
  BigInt num = 1;
  BigInt den = big_pow(q, m * (std::size_t{1} << d));
  for (std::size_t i = 0; i < d; ++i) {
    num *= (qN - 1) * (qN - q);
    den *= BigInt(q * q - 1) * (q * q - q);
  }
  return num / den;
}

PigeonholeResult pigeonhole_search_T(const Field& f, std::size_t n, std::size_t d, std::size_t m,
                                     std::uint64_t seed, std::uint64_t max_trials,
                                     std::uint64_t exhaustive_threshold, std::uint64_t cap) {
  if (d < 1 || m < 1 || n < 1) throw PreconditionError("pigeonhole search needs n, d, m >= 1");
  if (!box_admissible(n, d, m)) throw PreconditionError("parameters fail m(2^d - 1) < (n - 1)d");
  const std::size_t N = n + 1;
  const std::uint32_t q = f.order();
  const std::uint64_t size = pow_saturating(N, d) * m;
  if (size > kTensorSizeCap) throw CapExceeded("tensor too large");
  const auto planes = enumerate_grassmannian(f, N, 2, cap);

  PigeonholeResult best{Tensor(f, N, d, m), 0, dt_pigeonhole_bound(q, N, d, m)};
  const std::uint64_t total = pow_saturating(q, size);
  best.exhaustive = total <= exhaustive_threshold;
  bool have = false;
  auto consider = [&](Tensor t) {
    ++best.trials;
    const std::uint64_t c = count_DT(t, &planes, cap);
    if (!have || c < best.dt_size) {
      have = true;
      best.tensor = std::move(t);
      best.dt_size = c;
    }
    best.met_bound = BigInt(best.dt_size) <= best.bound;
    return best.met_bound;
  };

  if (best.exhaustive) {
    const std::uint64_t start = seed == 0 ? 0 : SplitMix64(seed).below(total);
    Vec coeffs(size);
    for (std::uint64_t i = 0; i < total; ++i) {
      std::uint64_t x = (start + i) % total;
      for (auto& c : coeffs) {
        c = static_cast<Elem>(x % q);
        x /= q;
      }
      if (consider(Tensor(f, N, d, m, coeffs))) return best;
    }
    throw InvariantViolation("no map meets the averaging bound on |D_T|");
  }
  SplitMix64 rng(seed);
  for (std::uint64_t i = 0; i < max_trials; ++i)
    if (consider(random_tensor(f, N, d, m, rng.next()))) break;
  return best;
}

FreenessResult freeness_check(const Hypergraph& h, std::uint64_t cap) {
  const std::uint64_t E = h.edges.size();
  if (pow_saturating(E, 2) > cap / std::max<std::uint64_t>(1, pow_saturating(2, h.d)))
    throw CapExceeded("freeness scan over " + std::to_string(E) + " edges exceeds the cap");
  FreenessResult out;
  Edge mix(h.d);
  for (std::size_t i = 0; i < E; ++i) {
    const Edge& a = h.edges[i];
    for (std::size_t j = i + 1; j < E; ++j) {
      const Edge& b = h.edges[j];
      bool distinct = true;
      for (std::size_t s = 0; s < h.d && distinct; ++s) distinct = a[s] != b[s];
      if (!distinct) continue;
      bool all = true;
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << h.d) && all; ++mask) {
        for (std::size_t s = 0; s < h.d; ++s) mix[s] = (mask >> s & 1U) != 0 ? b[s] : a[s];
        all = h.has_edge(mix);
      }
      if (all) {
        out.free = false;
        out.violation = {i, j};
        return out;
      }
    }
  }
  return out;
}

KeyStep key_step_check(const Tensor& t, const Hypergraph& g, const std::vector<std::vector<Subspace>>& dt,
                       std::uint64_t cap) {
  const std::uint64_t E = g.edges.size();
  if (pow_saturating(E, 2) > cap) throw CapExceeded("copy enumeration exceeds the cap");
  const std::set<std::vector<Subspace>> members(dt.begin(), dt.end());
  std::set<std::vector<std::pair<std::uint32_t, std::uint32_t>>> seen;
  KeyStep out;
  Edge mix(g.d);
  for (std::size_t i = 0; i < E; ++i) {
    const Edge& a = g.edges[i];
    for (std::size_t j = i + 1; j < E; ++j) {
      const Edge& b = g.edges[j];
      bool distinct = true;
      for (std::size_t s = 0; s < g.d && distinct; ++s) distinct = a[s] != b[s];
      if (!distinct) continue;
      bool all = true;
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << g.d) && all; ++mask) {
        for (std::size_t s = 0; s < g.d; ++s) mix[s] = (mask >> s & 1U) != 0 ? b[s] : a[s];
        all = g.has_edge(mix);
      }
      if (!all) continue;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> key(g.d);
      for (std::size_t s = 0; s < g.d; ++s) key[s] = std::minmax(a[s], b[s]);
      if (!seen.insert(key).second) continue;
      ++out.copies;
      std::vector<Subspace> spans;
      for (std::size_t s = 0; s < g.d; ++s) {
        const std::vector<Vec> pair{g.parts[s][a[s]], g.parts[s][b[s]]};
        spans.push_back(Subspace::span(t.field(), t.n(), pair));
      }
      if (!members.contains(spans)) out.all_in_dt = false;
    }
  }
  return out;
}

Pipeline delete_and_verify(const Tensor& t, std::uint64_t cap) {
  const Field& f = t.field();
  const std::uint32_t q = f.order();
  if (t.n() < 2) throw PreconditionError("the box pipeline needs n + 1 >= 2");
  Pipeline p;
  p.before = build_G(t, cap);
  const auto dt = enumerate_DT(t, cap);
  const auto index = point_index(p.before.parts[0], q, t.n());

  std::vector<bool> deleted(p.before.edges.size(), false);
  Edge e(t.d());
  for (const auto& tuple : dt) {
    std::vector<std::vector<std::uint32_t>> slots;
    for (const auto& v : tuple) {
      std::vector<std::uint32_t> ids;
      for (const auto& pt : plane_points(f, v)) ids.push_back(static_cast<std::uint32_t>(index[code_of(normalize(f, pt), q)]));
      slots.push_back(std::move(ids));
    }
    const std::uint64_t combos = pow_saturating(q + 1, t.d());
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::uint64_t x = c;
      for (std::size_t s = t.d(); s-- > 0;) {
        e[s] = slots[s][x % (q + 1)];
        x /= q + 1;
      }
      auto it = std::lower_bound(p.before.edges.begin(), p.before.edges.end(), e);
      if (it == p.before.edges.end() || *it != e)
        throw InvariantViolation("a product of isotropic planes left the edge set");
      deleted[static_cast<std::size_t>(it - p.before.edges.begin())] = true;
    }
  }
  p.after.d = p.before.d;
  p.after.parts = p.before.parts;
  for (std::size_t i = 0; i < deleted.size(); ++i)
    if (!deleted[i]) p.after.edges.push_back(p.before.edges[i]);

  auto& c = p.certificate;
  c.q = q;
  c.n = t.n() - 1;
  c.d = t.d();
  c.m = t.m();
  c.edge_count_before = p.before.edges.size();
  c.edge_count_after = p.after.edges.size();
  c.dt_size = dt.size();
  c.deleted_count = c.edge_count_before - c.edge_count_after;
  c.deletion_budget = big_pow(q + 1, t.d()) * c.dt_size;
  if (BigInt(c.deleted_count) > c.deletion_budget) throw InvariantViolation("deleted more edges than the budget");
  c.deletion_disjoint = BigInt(c.deleted_count) == c.deletion_budget;
  c.edge_bound = edge_bound_check(t, p.before);
  if (!c.edge_bound.holds) throw InvariantViolation("edge count below the analytic-rank lower bound");
  c.dt_bound = dt_pigeonhole_bound(q, t.n(), t.d(), t.m());
  c.dt_bound_met = BigInt(c.dt_size) <= c.dt_bound;
  const auto free = freeness_check(p.after, cap);
  if (!free.free) throw InvariantViolation("the pruned hypergraph contains a copy of K_{2,...,2}");
  c.freeness_verified = true;
  const auto key = key_step_check(t, p.before, dt, cap);
  c.k22_copies = key.copies;
  c.key_step_verified = key.all_in_dt;
  if (!key.all_in_dt) throw InvariantViolation("a copy of K_{2,...,2} spans planes outside D_T");
  return p;
}

}  // namespace isokit
