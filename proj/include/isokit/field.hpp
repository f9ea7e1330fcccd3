#pragma once

/// Exact arithmetic in GF(p^e).
///
/// A field is described by a FieldSpec (characteristic, degree, monic
/// irreducible modulus). Elements are polynomial residues of degree < e over
/// GF(p); the coefficient vector (c_0, ..., c_{e-1}) is packed into a single
/// integer code sum c_i p^i, so that equality of codes is equality of
/// elements. Field values are cheap to copy and immutable once built.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "isokit/common.hpp"

namespace isokit {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

inline constexpr std::uint64_t kFieldOrderCap = 1U << 20U;

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  /// Monic modulus, coefficients low to high, length e + 1.
  std::vector<std::uint32_t> modulus;

  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

/// Trial-division irreducibility test for a polynomial over GF(p).
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

class Field {
 public:
  /// GF(p^e) with the lexicographically smallest (low degree first) monic
  /// irreducible modulus of degree e.
  static Field make(std::uint32_t p, std::uint32_t e);
  /// Validates the spec (prime p, monic irreducible modulus, order cap).
  static Field from_spec(const FieldSpec& spec);
  /// GF(q) for a prime power q.
  static Field of_order(std::uint64_t q);

  const FieldSpec& spec() const { return impl_->spec; }
  std::uint32_t characteristic() const { return impl_->spec.p; }
  std::uint32_t degree() const { return impl_->spec.e; }
  std::uint32_t order() const { return impl_->q; }

  static constexpr Elem zero() { return 0; }
  static constexpr Elem one() { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws PreconditionError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  /// a^p
  Elem frobenius(Elem a) const { return pow(a, characteristic()); }

  /// Image of the integer c in the prime subfield.
  Elem from_int(std::int64_t c) const;

  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const std::uint32_t> c) const;

  bool contains(Elem a) const { return a < impl_->q; }

  /// All q elements in ascending code order.
  std::vector<Elem> elements() const;

  bool operator==(const Field& other) const {
    return impl_ == other.impl_ || impl_->spec == other.impl_->spec;
  }

 private:
  struct Impl {
    FieldSpec spec;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> pow_p;  // p^i, i < e
    std::vector<Elem> add_table;       // q*q when q <= kTableCap
    std::vector<Elem> mul_table;
    std::vector<Elem> neg_table;
    std::vector<Elem> inv_table;  // when q <= kInvTableCap
  };
  static constexpr std::uint32_t kTableCap = 256;
  static constexpr std::uint32_t kInvTableCap = 1U << 16U;

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static std::shared_ptr<const Impl> build(FieldSpec spec);

  Elem add_slow(const Impl& im, Elem a, Elem b) const;
  Elem mul_slow(const Impl& im, Elem a, Elem b) const;
  Elem neg_slow(const Impl& im, Elem a) const;

  std::shared_ptr<const Impl> impl_;
};

/// A ring embedding GF(p^e) -> GF(p^{e r}); sends the source generator x to
/// the root of the source modulus with the smallest code in the target.
class Embedding {
 public:
  Embedding(Field source, Field target);

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  Elem operator()(Elem a) const { return image_.at(a); }
  Vec apply(std::span<const Elem> v) const;

 private:
  Field source_;
  Field target_;
  std::vector<Elem> image_;
};

/// Convenience form of Embedding for a single element.
Elem embed(Elem a, const Field& source, const Field& target);

/// sum_i a_i b_i
Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b);

}  // namespace isokit
