#pragma once

#include <cstddef>
#include <cstdint>

#include "isokit/common.hpp"
#include "isokit/tensor.hpp"

namespace isokit {

/// |Z_T| by direct enumeration of all (GF(q)^N)^d argument tuples.
BigInt zero_count_raw(const Tensor& t, std::uint64_t cap = default_cap());

/// |Z_T| by fixing every slot except `slot` and adding q^{N - rank} for the
/// induced linear map in the free slot.
BigInt zero_count(const Tensor& t, std::size_t slot = 0, std::uint64_t cap = default_cap(), unsigned threads = 1);

struct RankReport {
  BigInt zero_count;
  /// d * N for a map on (GF(q)^N)^d; AR = dn1 - log_q zero_count.
  std::uint64_t dn1 = 0;
  std::uint64_t q = 0;
  std::uint64_t bound_m = 0;
  /// zero_count >= q^{dn1 - m}
  bool ar_leq_m = false;
  /// zero_count <= q^{dn1}
  bool ar_geq_0 = false;
  /// Presentation only.
  double ar_decimal = 0.0;
};

/// Analytic rank dn1 - log_q |Z_T|, compared against the bound m by exact
/// integer inequalities. Throws InvariantViolation if 0 <= AR <= m fails.
RankReport analytic_rank(const Tensor& t, std::uint64_t cap = default_cap(), unsigned threads = 1);

/// Partition rank is at most m (split into the m coordinate maps).
inline std::size_t partition_rank_bound(const Tensor& t) { return t.m(); }

}  // namespace isokit
