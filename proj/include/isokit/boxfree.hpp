#pragma once

/// The hypergraph G(T) over d copies of P^n(GF(q)), its edge count bounds,
/// the deletion of bad products indexed by D_T, and the brute-force
/// K_{2,...,2}-freeness verifier.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "isokit/common.hpp"
#include "isokit/field.hpp"
#include "isokit/subspace.hpp"
#include "isokit/tensor.hpp"

namespace isokit {

/// Canonical representatives of P^{N-1}(GF(q)) (first nonzero coordinate 1),
/// in ascending order of the vector read with coordinate 0 most significant.
std::vector<Vec> projective_points(const Field& f, std::size_t N);

using Edge = std::vector<std::uint32_t>;

struct Hypergraph {
  std::size_t d = 0;
  std::vector<std::vector<Vec>> parts;
  /// Sorted lexicographically.
  std::vector<Edge> edges;

  bool has_edge(const Edge& e) const;
};

/// Edges are the projective d-tuples on which T vanishes.
Hypergraph build_G(const Tensor& t, std::uint64_t cap = default_cap());

struct EdgeBound {
  BigInt edges;
  /// Bound numerator q^{dN - m} - d q^{(d-1)N} over denominator (q - 1)^d.
  BigInt numerator;
  BigInt denominator;
  bool holds = false;
};

EdgeBound edge_bound_check(const Tensor& t, const Hypergraph& g);

/// m(2^d - 1) < (n - 1)d, with n the projective dimension.
bool box_admissible(std::size_t n, std::size_t d, std::size_t m);

/// floor(q^{-m 2^d} (q^N - 1)^d (q^N - q)^d / ((q^2 - 1)^d (q^2 - q)^d)).
BigInt dt_pigeonhole_bound(std::uint64_t q, std::size_t N, std::size_t d, std::size_t m);

struct BoxCertificate {
  std::uint64_t q = 0;
  /// Projective dimension; tensors act on GF(q)^{n+1}.
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t m = 0;
  std::uint64_t edge_count_before = 0;
  std::uint64_t edge_count_after = 0;
  std::uint64_t dt_size = 0;
  std::uint64_t deleted_count = 0;
  /// (q + 1)^d |D_T|
  BigInt deletion_budget;
  bool deletion_disjoint = false;
  EdgeBound edge_bound;
  BigInt dt_bound;
  bool dt_bound_met = false;
  bool freeness_verified = false;
  std::uint64_t k22_copies = 0;
  bool key_step_verified = false;
};

struct PigeonholeResult {
  Tensor tensor;
  std::uint64_t dt_size = 0;
  BigInt bound;
  bool met_bound = false;
  bool exhaustive = false;
  std::uint64_t trials = 0;
};

/// Searches for T in Hom((GF(q)^{n+1})^d, GF(q)^m) with |D_T| at most the
/// pigeonhole bound. When q^{m (n+1)^d} <= exhaustive_threshold every map is
/// visited, starting at an offset drawn from `seed` and wrapping around;
/// otherwise max_trials random maps are drawn and the best one returned.
PigeonholeResult pigeonhole_search_T(const Field& f, std::size_t n, std::size_t d, std::size_t m,
                                     std::uint64_t seed, std::uint64_t max_trials = 10'000,
                                     std::uint64_t exhaustive_threshold = std::uint64_t{1} << 20U,
                                     std::uint64_t cap = default_cap());

struct FreenessResult {
  bool free = true;
  /// Edge indices (e, f) spanning the first violating copy.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Scans edge pairs distinct in every slot, in index order, for a pair whose
/// 2^d mixed tuples are all edges.
FreenessResult freeness_check(const Hypergraph& h, std::uint64_t cap = default_cap());

struct KeyStep {
  std::uint64_t copies = 0;
  bool all_in_dt = true;
};

/// Every copy of K_{2,...,2} in g, with the check that the planes spanned by
/// its vertex pairs form a tuple of D_T.
KeyStep key_step_check(const Tensor& t, const Hypergraph& g, const std::vector<std::vector<Subspace>>& dt,
                       std::uint64_t cap = default_cap());

struct Pipeline {
  Hypergraph before;
  Hypergraph after;
  BoxCertificate certificate;
};

/// Removes every edge inside P(V_1) x ... x P(V_d) for (V_i) in D_T and
/// verifies the result is K_{2,...,2}-free (InvariantViolation otherwise).
Pipeline delete_and_verify(const Tensor& t, std::uint64_t cap = default_cap());

}  // namespace isokit
