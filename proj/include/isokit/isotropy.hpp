#pragma once

/// Isotropic subspace searches: alpha_Lambda(T) for alternating maps,
/// k-dimensional isotropic tuples for general maps, the field minimum over
/// all alternating maps, the incidence counts I_1 / J_1, and D_T.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "isokit/common.hpp"
#include "isokit/field.hpp"
#include "isokit/subspace.hpp"
#include "isokit/tensor.hpp"

namespace isokit {

struct IsotropyResult {
  std::size_t index = 0;
  std::vector<Subspace> witness;
  /// False when the visit cap stopped the search; index is then a lower bound.
  bool exhausted = true;
  std::uint64_t visits = 0;
};

/// Largest k with an isotropic k-subspace, by depth-first flag extension.
///
/// Each node is an isotropic subspace in RREF. Children append a row whose
/// leading 1 sits left of every current pivot and which is zero in the
/// current pivot columns; the stacked rows are again in RREF, so every
/// subspace is reached exactly once. A child is kept only if T vanishes on
/// every d-tuple of distinct basis rows that contains the new row. Branches
/// that cannot beat the best depth found so far are pruned. The witness is
/// the first maximal subspace met in this order.
IsotropyResult alpha_alt(const AltTensor& t, std::uint64_t cap = default_cap());

struct HomIsotropyResult {
  bool found = false;
  /// One subspace per slot when found.
  std::vector<Subspace> witness;
  bool exhausted = true;
  std::uint64_t visits = 0;
};

/// Whether some (V_1, ..., V_d) in Gr(k)^d annihilates T.
///
/// Slots 1..d-1 are enumerated in Grassmannian order; for each prefix the
/// last slot is restricted to the common kernel of the linear maps
/// x -> T(b_1, ..., b_{d-1}, x) over basis rows b_j of the prefix, and only
/// subspaces inside that kernel are tested.
HomIsotropyResult alpha_hom(const Tensor& t, std::size_t k, std::uint64_t cap = default_cap());

/// Every tuple (V_1, ..., V_d) in Gr(k, GF(q)^n)^d with T|_{V_1 x ... x V_d} = 0,
/// in lexicographic order of Grassmannian positions.
std::vector<std::vector<Subspace>> enumerate_isotropic_tuples(const Tensor& t, std::size_t k,
                                                              std::uint64_t cap = default_cap());

/// D_T: the 2-dimensional isotropic tuples.
std::vector<std::vector<Subspace>> enumerate_DT(const Tensor& t, std::uint64_t cap = default_cap());

/// |D_T| without materializing the tuples. `planes` may pass a precomputed
/// Gr(2, n) to skip re-enumeration inside hot loops.
std::uint64_t count_DT(const Tensor& t, const std::vector<Subspace>* planes = nullptr,
                       std::uint64_t cap = default_cap());

struct FieldAlphaResult {
  std::size_t value = 0;
  /// True when every alternating map was examined; otherwise value is an
  /// upper bound on the minimum taken over random samples.
  bool exact = true;
  std::uint64_t tensors_examined = 0;
  /// Coefficients of the first tensor attaining the value.
  std::optional<AltTensor> minimizer;
};

/// alpha_Lambda(GF(q), n, d, m) = min over T in Alt^d(GF(q)^n, GF(q)^m).
/// Exhaustive when q^{m C(n,d)} <= tensor_cap; otherwise `samples` random
/// maps are drawn from `seed` if samples > 0, else CapExceeded.
FieldAlphaResult alpha_field_alt(const Field& f, std::size_t n, std::size_t d, std::size_t m,
                                 std::uint64_t tensor_cap = std::uint64_t{1} << 20U, std::uint64_t samples = 0,
                                 std::uint64_t seed = 0, std::uint64_t cap = default_cap());

/// |I_1(GF(q))| = |Gr(k, n)| * (q^{m(C(n,d) - C(k,d))} - 1) / (q - 1).
BigInt count_I1_points(const Field& f, std::size_t n, std::size_t d, std::size_t m, std::size_t k);

/// |I_1(GF(q))| by enumerating every k-subspace and every nonzero
/// alternating map, dividing by q - 1 for projective classes.
BigInt count_I1_raw(const Field& f, std::size_t n, std::size_t d, std::size_t m, std::size_t k,
                    std::uint64_t cap = default_cap());

/// |J_1(GF(q))| = |Gr(2, n)|^d * (q^{m(n^d - 2^d)} - 1) / (q - 1).
BigInt count_J1_points(const Field& f, std::size_t n, std::size_t d, std::size_t m);

/// |J_1(GF(q))| from the rank of the vanishing conditions on each tuple of
/// planes, without the closed-form fiber size.
BigInt count_J1_by_fibers(const Field& f, std::size_t n, std::size_t d, std::size_t m,
                          std::uint64_t cap = default_cap());

/// |J_1(GF(q))| by enumerating every nonzero general map.
BigInt count_J1_raw(const Field& f, std::size_t n, std::size_t d, std::size_t m, std::uint64_t cap = default_cap());

}  // namespace isokit
