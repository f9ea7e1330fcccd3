#include "isokit/selftest.hpp"

#include <chrono>
#include <ctime>
#include <map>

#include "isokit/boxfree.hpp"
#include "isokit/formulas.hpp"
#include "isokit/grassmann.hpp"
#include "isokit/isotropy.hpp"
#include "isokit/rank.hpp"
#include "isokit/rng.hpp"

namespace isokit::selftest {

namespace fm = isokit::formulas;
using io::Json;

namespace {

// Largest k with an isotropic k-subspace, by scanning whole Grassmannians.
std::size_t alpha_by_scan(const AltTensor& t) {
  for (std::size_t k = t.n() + 1; k-- > 0;)
    for (const auto& s : enumerate_grassmannian(t.field(), t.n(), k))
      if (restrict_zero(t, s)) return k;
  return 0;
}

Criterion named(int id, std::string name) {
  Criterion c;
  c.id = id;
  c.name = std::move(name);
  return c;
}

Json degree_json(const DegreeCheck& c) {
  Json counts = Json::array();
  for (const auto& v : c.counts) counts.push_back(io::big(v));
  return Json{{"qs", c.qs}, {"counts", counts}, {"degree", c.degree}, {"confirmed", c.confirmed}};
}

Criterion k0_closed_form(const Options& opts) {
  Criterion c = named(1, "k0(n,2,m) equals floor((2n+m)/(m+2))");
  const std::int64_t shift = opts.mutation == "k0-constant" ? 1 : 0;
  std::uint64_t checked = 0;
  c.pass = true;
  for (std::int64_t m = 2; m <= 10 && c.pass; ++m)
    for (std::int64_t n = 2; n <= 200; ++n) {
      ++checked;
      const std::int64_t want = (2 * n + m) / (m + 2 + shift);
      const std::int64_t got = fm::k0(n, 2, m);
      if (got != want) {
        c.pass = false;
        c.details["first_mismatch"] = {{"n", n}, {"m", m}, {"k0", got}, {"closed_form", want}};
        break;
      }
    }
  c.details["checked"] = checked;
  return c;
}

Criterion exceptional(const Options&) {
  Criterion c = named(2, "alpha_alt_closed exceptional rows for m = 1 in characteristic 0");
  Json rows = Json::array();
  auto row = [&](std::int64_t n, std::int64_t d, std::int64_t want) {
    const auto e = fm::alpha_alt_closed(n, d, 1, true);
    const bool ok = e.value == want;
    rows.push_back({{"n", n}, {"d", d}, {"value", io::big(e.value)}, {"branch", e.branch}, {"ok", ok}});
    return ok;
  };
  c.pass = row(7, 3, 4);
  c.pass = row(6, 4, 4) && c.pass;
  for (std::int64_t n = 1; n <= 20; ++n) c.pass = row(n, 2, n / 2) && c.pass;
  c.details["rows"] = rows;
  return c;
}

Criterion round_trips(const Options&) {
  Criterion c = named(3, "fp_number, turan_number and gq_number match their defining scans");
  c.pass = true;
  std::uint64_t fp_checked = 0;
  std::uint64_t turan_checked = 0;
  std::uint64_t turan_undefined = 0;
  auto fail = [&](Json why) {
    if (c.pass) c.details["first_mismatch"] = std::move(why);
    c.pass = false;
  };
  for (std::int64_t d = 1; d <= 5; ++d)
    for (std::int64_t m = 1; m <= 6; ++m)
      for (std::int64_t k = 1; k <= 30; ++k) {
        std::int64_t n = 1;
        while (fm::alpha_alt_closed(n, d, m, true).value < k) ++n;
        ++fp_checked;
        const auto got = fm::fp_number(d, m, k, true);
        if (got.value != n) fail({{"quantity", "fp"}, {"d", d}, {"m", m}, {"k", k}, {"scan", n}, {"value", io::big(got.value)}});
      }
  for (std::int64_t n = 1; n <= 30; ++n)
    for (std::int64_t d = 2; d <= 5; ++d)
      for (std::int64_t k = 1; k <= 30; ++k) {
        // Past r = n^2 only subspaces of dimension below d stay isotropic,
        // so the scan can stop there.
        std::int64_t r = 1;
        const std::int64_t limit = n * n + 2;
        while (r <= limit && fm::alpha_alt_closed(n, d, r, true).value > k) ++r;
        ++turan_checked;
        if (r > limit) {
          ++turan_undefined;
          try {
            const auto got = fm::turan_number(n, d, k, true);
            fail({{"quantity", "turan"}, {"n", n}, {"d", d}, {"k", k}, {"scan", "none"}, {"value", io::big(got.value)}});
          } catch (const PreconditionError&) {
          }
          continue;
        }
        const auto got = fm::turan_number(n, d, k, true);
        if (got.value != r) fail({{"quantity", "turan"}, {"n", n}, {"d", d}, {"k", k}, {"scan", r}, {"value", io::big(got.value)}});
      }
  for (std::int64_t n = 2; n <= 100; ++n)
    if (fm::gq_number(n, 2) != 2 * n - 3) fail({{"quantity", "gq"}, {"n", n}});
  c.details["fp_checked"] = fp_checked;
  c.details["turan_checked"] = turan_checked;
  c.details["turan_undefined"] = turan_undefined;
  return c;
}

Criterion intersection_inequality(const Options&) {
  Criterion c = named(4, "l(n + l - 2k) >= m C(l, d) over every admissible tuple with n <= 60");
  std::uint64_t tuples = 0;
  std::uint64_t strict_hyp = 0;
  std::uint64_t violations = 0;
  std::uint64_t not_propagated = 0;
  for (std::int64_t n = 1; n <= 60; ++n)
    for (std::int64_t k = 2; k < n; ++k)
      for (std::int64_t d = 2; d <= k; ++d) {
        const BigInt ck = binomial(k, d);
        const BigInt mmax = BigInt(k) * (n - k) / ck;
        for (std::int64_t m = 2; m <= mmax; ++m)
          for (std::int64_t l = std::max(d, 2 * k - n); l <= k; ++l) {
            const auto r = fm::lemma35_check(m, n, k, d, l);
            ++tuples;
            if (r.verdict == fm::Verdict::violated) ++violations;
            if (r.strict_hypothesis) {
              ++strict_hyp;
              if (r.verdict != fm::Verdict::strict) ++not_propagated;
            }
          }
      }
  c.pass = violations == 0 && not_propagated == 0 && tuples > 0;
  c.details = {{"tuples", tuples}, {"strict_hypothesis", strict_hyp}, {"violations", violations},
               {"strictness_not_propagated", not_propagated}};
  return c;
}

Criterion grassmann(const Options& opts) {
  Criterion c = named(5, "Grassmannian counts, Sigma_l partition and q-degrees");
  c.pass = true;
  std::uint64_t spaces = 0;
  std::uint64_t partitions = 0;
  for (std::uint64_t q : {2, 3, 4}) {
    const Field f = Field::of_order(q);
    for (std::size_t n = 0; n <= 5; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        const auto gr = enumerate_grassmannian(f, n, k);
        spaces += gr.size();
        const BigInt want = gauss_binom(n, k, q);
        if (BigInt(gr.size()) != want) {
          c.pass = false;
          c.details["count_mismatch"] = {{"q", q}, {"n", n}, {"k", k}};
        }
        const BigInt pairs = want * want;
        const bool small = pairs <= 200'000;
        const auto sig = sigma_counts(f, n, k, small ? SigmaMethod::pairs : SigmaMethod::orbit, default_cap(),
                                      opts.threads);
        BigInt total = 0;
        for (const auto& s : sig) total += s;
        ++partitions;
        bool ok = total == pairs;
        if (small) ok = ok && sig == sigma_counts(f, n, k, SigmaMethod::orbit);
        if (!ok) {
          c.pass = false;
          c.details["partition_mismatch"] = {{"q", q}, {"n", n}, {"k", k}};
        }
      }
  }
  Json degrees = Json::array();
  const std::size_t k = 2;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::map<std::uint64_t, std::vector<BigInt>> cache;
    auto counts = [&](const Field& f) -> const std::vector<BigInt>& {
      auto it = cache.find(f.order());
      if (it == cache.end()) it = cache.emplace(f.order(), sigma_counts(f, n, k, SigmaMethod::orbit)).first;
      return it->second;
    };
    for (std::size_t l = (2 * k > n ? 2 * k - n : 0); l <= k; ++l) {
      const auto check = degree_in_q(2 * k * (n - k), [&](const Field& f) { return counts(f)[l]; });
      const auto want = sigma_dimension(static_cast<std::int64_t>(n), k, static_cast<std::int64_t>(l));
      const bool ok = check.confirmed && check.degree == want;
      c.pass = c.pass && ok;
      degrees.push_back({{"n", n}, {"k", k}, {"l", l}, {"expected", want}, {"degree", check.degree},
                         {"confirmed", check.confirmed}});
    }
  }
  c.details["subspaces_enumerated"] = spaces;
  c.details["partitions_checked"] = partitions;
  c.details["degrees"] = degrees;
  return c;
}

Criterion incidence(const Options&) {
  Criterion c = named(6, "I_1 and J_1 point counts and their q-degrees");
  c.pass = true;
  const Field f2 = Field::of_order(2);
  Json pointwise = Json::array();
  for (std::size_t k : {1, 2}) {
    const BigInt formula = count_I1_points(f2, 3, 2, 1, k);
    const BigInt raw = count_I1_raw(f2, 3, 2, 1, k);
    c.pass = c.pass && formula == raw;
    pointwise.push_back({{"quantity", "I1"}, {"k", k}, {"formula", io::big(formula)}, {"raw", io::big(raw)}});
  }
  const BigInt j_formula = count_J1_points(f2, 3, 2, 1);
  const BigInt j_fibers = count_J1_by_fibers(f2, 3, 2, 1);
  const BigInt j_raw = count_J1_raw(f2, 3, 2, 1);
  c.pass = c.pass && j_formula == j_fibers && j_fibers == j_raw;
  pointwise.push_back({{"quantity", "J1"},
                       {"formula", io::big(j_formula)},
                       {"fibers", io::big(j_fibers)},
                       {"raw", io::big(j_raw)}});
  c.details["pointwise"] = pointwise;

  // A priori bounds: dim Gr + dim of the ambient projective space of maps.
  const auto i1 = degree_in_q(2 * 1 + 3 - 1 + 1, [](const Field& f) { return count_I1_raw(f, 3, 2, 1, 2); });
  const auto i1_want = dim_I1(3, 2, 1, 2);
  const auto j1 = degree_in_q(2 * 2 * 1 + 9 - 1, [](const Field& f) { return count_J1_by_fibers(f, 3, 2, 1); });
  const auto j1_want = dim_J1(3, 2, 1);
  c.pass = c.pass && i1.confirmed && i1.degree == i1_want && j1.confirmed && j1.degree == j1_want;
  c.details["I1_degree"] = degree_json(i1);
  c.details["I1_degree"]["expected"] = i1_want;
  c.details["J1_degree"] = degree_json(j1);
  c.details["J1_degree"]["expected"] = j1_want;
  return c;
}

Criterion oracle(const Options& opts) {
  Criterion c = named(7, "pruned alpha_alt agrees with the Grassmannian scan; alpha >= min(d-1, n)");
  c.pass = true;
  const Field f2 = Field::of_order(2);
  std::vector<std::uint64_t> histogram(5, 0);
  for (std::uint32_t code = 0; code < 64; ++code) {
    Vec coeffs(6);
    for (std::size_t i = 0; i < 6; ++i) coeffs[i] = (code >> i) & 1U;
    const AltTensor t(f2, 4, 2, 1, coeffs);
    const auto fast = alpha_alt(t);
    const auto slow = alpha_by_scan(t);
    ++histogram[fast.index];
    if (fast.index != slow || !fast.exhausted) {
      if (c.pass) c.details["first_mismatch"] = {{"coeffs", coeffs}, {"dfs", fast.index}, {"scan", slow}};
      c.pass = false;
    }
  }
  c.details["histogram_n4_d2"] = histogram;
  SplitMix64 rng(opts.seed * 0x100000001B3ULL + 7);
  std::uint64_t below = 0;
  for (int i = 0; i < 500; ++i) {
    const Field f = Field::of_order(2 + rng.below(2));
    const std::size_t n = 1 + rng.below(5);
    const std::size_t d = 1 + rng.below(4);
    const std::size_t m = 1 + rng.below(2);
    const auto t = random_alt_tensor(f, n, d, m, rng.next());
    if (alpha_alt(t).index < std::min(d - 1, n)) ++below;
  }
  c.pass = c.pass && below == 0;
  c.details["random_samples"] = 500;
  c.details["below_lower_bound"] = below;
  return c;
}

Criterion extension(const Options& opts) {
  Criterion c = named(8, "alpha_alt does not drop under base change to GF(q^2)");
  const Field f2 = Field::of_order(2);
  const Field f4 = Field::of_order(4);
  SplitMix64 rng(opts.seed * 0x100000001B3ULL + 8);
  std::uint64_t failures = 0;
  std::uint64_t increases = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng.below(4);
    const std::size_t m = 1 + rng.below(2);
    const auto t = random_alt_tensor(f2, n, 2, m, rng.next());
    const auto a = alpha_alt(t).index;
    const auto b = alpha_alt(base_change(t, f4)).index;
    if (a > b) ++failures;
    if (a < b) ++increases;
  }
  c.pass = failures == 0;
  c.details = {{"samples", 100}, {"failures", failures}, {"strict_increases", increases}};
  return c;
}

Criterion analytic(const Options& opts) {
  Criterion c = named(9, "zero counts satisfy |Z_T| >= q^{dN - m}; optimized count equals raw");
  c.pass = true;
  SplitMix64 rng(opts.seed * 0x100000001B3ULL + 9);
  std::uint64_t below = 0;
  std::uint64_t above_pr = 0;
  for (int i = 0; i < 200; ++i) {
    const Field f = Field::of_order(2 + rng.below(2));
    const std::size_t d = 2 + rng.below(2);
    const std::size_t N = 1 + rng.below(3);
    const std::size_t m = 1 + rng.below(2);
    const auto t = random_tensor(f, N, d, m, rng.next());
    const BigInt z = zero_count(t);
    if (z < big_pow(f.order(), d * N - std::min(d * N, m))) ++below;
    const auto r = analytic_rank(t);
    if (r.ar_decimal > static_cast<double>(partition_rank_bound(t)) + 1e-9) ++above_pr;
  }
  c.details["random_samples"] = 200;
  c.details["below_bound"] = below;
  c.details["above_partition_rank_bound"] = above_pr;
  c.pass = below == 0 && above_pr == 0;

  const Field f2 = Field::of_order(2);
  for (std::size_t d : {2, 3}) {
    const Tensor zero(Field::of_order(3), 2, d, 2);
    const auto r = analytic_rank(zero);
    c.pass = c.pass && r.zero_count == big_pow(3, r.dn1);
  }
  std::uint64_t exhaustive = 0;
  std::uint64_t mismatches = 0;
  for (std::size_t m = 1; m <= 2; ++m) {
    const std::uint32_t count = 1U << (4 * m);
    for (std::uint32_t code = 0; code < count; ++code) {
      Vec coeffs(4 * m);
      for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = (code >> i) & 1U;
      const Tensor t(f2, 2, 2, m, coeffs);
      ++exhaustive;
      if (zero_count(t, 0) != zero_count_raw(t) || zero_count(t, 1) != zero_count_raw(t)) ++mismatches;
    }
  }
  // AR = 0 exactly for the zero map, over every GF(2) map with dN <= 4, m = 1.
  std::uint64_t ar_zero_mismatches = 0;
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t N = 1; d * N <= 4; ++N) {
      const std::size_t size = static_cast<std::size_t>(pow_saturating(N, d));
      for (std::uint32_t code = 0; code < (1U << size); ++code) {
        Vec coeffs(size);
        for (std::size_t i = 0; i < size; ++i) coeffs[i] = (code >> i) & 1U;
        const Tensor t(f2, N, d, 1, coeffs);
        const bool ar_zero = zero_count(t) == big_pow(2, d * N);
        if (ar_zero != t.is_zero()) ++ar_zero_mismatches;
      }
    }
  c.pass = c.pass && mismatches == 0 && ar_zero_mismatches == 0;
  c.details["exhaustive_tensors"] = exhaustive;
  c.details["raw_mismatches"] = mismatches;
  c.details["ar_zero_mismatches"] = ar_zero_mismatches;
  return c;
}

Criterion box(const Options& opts) {
  Criterion c = named(10, "box-free pipeline at q = 2, d = 2, n = 3, m = 1");
  const Field f2 = Field::of_order(2);
  const bool admissible = box_admissible(3, 2, 1);
  const BigInt bound = dt_pigeonhole_bound(2, 4, 2, 1);
  const auto found = pigeonhole_search_T(f2, 3, 2, 1, opts.seed);
  const auto p = delete_and_verify(found.tensor);
  const auto& cert = p.certificate;
  const bool a2 = cert.edge_bound.numerator == 96 && cert.edge_bound.denominator == 1 && cert.edge_bound.holds;
  c.pass = admissible && bound == 76 && found.met_bound && found.exhaustive && a2 && cert.freeness_verified &&
           freeness_check(p.after).free && cert.key_step_verified;
  c.details = {{"admissible", admissible},
               {"dt_bound", io::big(bound)},
               {"tensor", io::to_json(found.tensor)},
               {"trials", found.trials},
               {"certificate", io::to_json(cert)}};
  return c;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Criterion run(int id, const Options& opts) {
  if (!opts.mutation.empty() && opts.mutation != "k0-constant") throw PreconditionError("unknown mutation: " + opts.mutation);
  using Fn = Criterion (*)(const Options&);
  static constexpr Fn table[] = {k0_closed_form, exceptional, round_trips, intersection_inequality, grassmann,
                                 incidence, oracle, extension, analytic, box};
  if (id < 1 || id > kCriterionCount) throw PreconditionError("criterion id out of range");
  const auto start = std::chrono::steady_clock::now();
  Criterion c;
  try {
    c = table[id - 1](opts);
  } catch (const std::exception& e) {
    c.id = id;
    c.pass = false;
    c.details = {{"error", e.what()}};
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

std::vector<Criterion> run_all(const Options& opts, const std::function<void(const Criterion&)>& progress) {
  std::vector<Criterion> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run(id, opts));
    if (progress) progress(out.back());
  }
  return out;
}

Json report(const std::vector<Criterion>& results, const Options& opts) {
  Json list = Json::array();
  bool all = true;
  for (const auto& c : results) {
    all = all && c.pass;
    list.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  }
  return Json{{"timestamp", utc_now()}, {"seed", opts.seed}, {"mutation", opts.mutation},
              {"criteria", list},       {"pass", all}};
}

}  // namespace isokit::selftest
