#include "isokit/field.hpp"

#include <algorithm>
#include <string>

namespace isokit {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = lead * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool next_digits(Poly& digits, std::uint32_t base) {
  for (auto& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Any factorization has a monic factor of degree <= deg/2.
  for (std::size_t t = 1; t <= deg / 2; ++t) {
    Poly low(t, 0);
    do {
      Poly g = low;
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    } while (next_digits(low, p));
  }
  return true;
}

std::shared_ptr<const Field::Impl> Field::build(FieldSpec spec) {
  if (!is_prime(spec.p))
    throw PreconditionError("field characteristic " + std::to_string(spec.p) + " is not prime");
  if (spec.e < 1) throw PreconditionError("field extension degree must be >= 1");
  const std::uint64_t q = pow_saturating(spec.p, spec.e);
  if (q > kFieldOrderCap)
    throw PreconditionError("field order " + std::to_string(spec.p) + "^" + std::to_string(spec.e) +
                            " exceeds the 2^20 cap");
  if (spec.modulus.size() != spec.e + 1 || spec.modulus.back() != 1)
    throw PreconditionError("modulus must be monic of degree e");
  for (auto c : spec.modulus)
    if (c >= spec.p) throw PreconditionError("modulus coefficients must be reduced mod p");
  if (!is_irreducible(spec.modulus, spec.p)) throw PreconditionError("modulus is not irreducible");

  auto impl = std::make_shared<Impl>();
  impl->spec = std::move(spec);
  impl->q = static_cast<std::uint32_t>(q);
  impl->pow_p.resize(impl->spec.e);
  std::uint32_t pp = 1;
  for (std::uint32_t i = 0; i < impl->spec.e; ++i) {
    impl->pow_p[i] = pp;
    pp *= impl->spec.p;
  }

  Field tmp(impl);
  const std::uint32_t qq = impl->q;
  impl->neg_table.resize(qq);
  for (Elem a = 0; a < qq; ++a) impl->neg_table[a] = tmp.neg_slow(*impl, a);
  if (qq <= kTableCap) {
    impl->add_table.resize(static_cast<std::size_t>(qq) * qq);
    impl->mul_table.resize(static_cast<std::size_t>(qq) * qq);
    for (Elem a = 0; a < qq; ++a)
      for (Elem b = 0; b < qq; ++b) {
        impl->add_table[a * qq + b] = tmp.add_slow(*impl, a, b);
        impl->mul_table[a * qq + b] = tmp.mul_slow(*impl, a, b);
      }
  }
  if (qq <= kInvTableCap) {
    impl->inv_table.assign(qq, 0);
    for (Elem a = 1; a < qq; ++a) {
      if (impl->inv_table[a] != 0) continue;
      // a^{q-2} = a^{-1}
      Elem r = 1;
      Elem base = a;
      for (std::uint64_t k = qq - 2; k > 0; k >>= 1U) {
        if (k & 1U) r = tmp.mul_slow(*impl, r, base);
        base = tmp.mul_slow(*impl, base, base);
      }
      impl->inv_table[a] = r;
      impl->inv_table[r] = a;
    }
  }
  return impl;
}

Field Field::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw PreconditionError("field extension degree must be >= 1");
  if (pow_saturating(p, e) > kFieldOrderCap)
    throw PreconditionError("field order " + std::to_string(p) + "^" + std::to_string(e) + " exceeds the 2^20 cap");
  // Lexicographic order with the constant term most significant: the
  // innermost loop runs over the highest non-leading coefficient.
  Poly low(e, 0);
  for (;;) {
    Poly f = low;
    f.push_back(1);
    if (is_irreducible(f, p)) return from_spec(FieldSpec{p, e, f});
    // increment with c_{e-1} fastest
    std::int64_t i = static_cast<std::int64_t>(e) - 1;
    for (; i >= 0; --i) {
      if (++low[static_cast<std::size_t>(i)] < p) break;
      low[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
  throw InvariantViolation("no irreducible polynomial found");
}

Field Field::from_spec(const FieldSpec& spec) { return Field(build(spec)); }

Field Field::of_order(std::uint64_t q) {
  if (q < 2) throw PreconditionError("field order must be a prime power >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw PreconditionError("field order " + std::to_string(q) + " is not a prime power");
  return make(static_cast<std::uint32_t>(p), e);
}

Elem Field::add_slow(const Impl& im, Elem a, Elem b) const {
  const std::uint32_t p = im.spec.p;
  if (im.spec.e == 1) return (a + b) % p;
  Elem r = 0;
  for (std::uint32_t i = 0; i < im.spec.e; ++i) {
    const std::uint32_t da = a % p, db = b % p;
    r += ((da + db) % p) * im.pow_p[i];
    a /= p;
    b /= p;
  }
  return r;
}

Elem Field::neg_slow(const Impl& im, Elem a) const {
  const std::uint32_t p = im.spec.p;
  Elem r = 0;
  for (std::uint32_t i = 0; i < im.spec.e; ++i) {
    const std::uint32_t da = a % p;
    r += ((p - da) % p) * im.pow_p[i];
    a /= p;
  }
  return r;
}

Elem Field::mul_slow(const Impl& im, Elem a, Elem b) const {
  const std::uint64_t p = im.spec.p;
  const std::uint32_t e = im.spec.e;
  if (e == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
  std::vector<std::uint64_t> ca(e), cb(e), prod(2 * e - 1, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    ca[i] = a % p;
    cb[i] = b % p;
    a /= static_cast<Elem>(p);
    b /= static_cast<Elem>(p);
  }
  for (std::uint32_t i = 0; i < e; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  }
  const auto& mod = im.spec.modulus;
  for (std::size_t k = prod.size(); k-- > e;) {
    const std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    for (std::uint32_t i = 0; i < e; ++i)
      prod[k - e + i] = (prod[k - e + i] + p - lead * mod[i] % p) % p;
    prod[k] = 0;
  }
  Elem r = 0;
  for (std::uint32_t i = 0; i < e; ++i) r += static_cast<Elem>(prod[i]) * im.pow_p[i];
  return r;
}

Elem Field::add(Elem a, Elem b) const {
  const Impl& im = *impl_;
  if (!im.add_table.empty()) return im.add_table[a * im.q + b];
  return add_slow(im, a, b);
}

Elem Field::neg(Elem a) const { return impl_->neg_table[a]; }

Elem Field::mul(Elem a, Elem b) const {
  const Impl& im = *impl_;
  if (!im.mul_table.empty()) return im.mul_table[a * im.q + b];
  return mul_slow(im, a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  if (!impl_->inv_table.empty()) return impl_->inv_table[a];
  return pow(a, impl_->q - 2);
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  Elem r = one();
  Elem base = a;
  while (k > 0) {
    if (k & 1U) r = mul(r, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return r;
}

Elem Field::from_int(std::int64_t c) const {
  const auto p = static_cast<std::int64_t>(characteristic());
  return static_cast<Elem>(((c % p) + p) % p);
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(degree());
  for (auto& x : c) {
    x = a % characteristic();
    a /= characteristic();
  }
  return c;
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != degree()) throw PreconditionError("coefficient vector length must equal the extension degree");
  Elem r = 0;
  for (std::size_t i = 0; i < c.size(); ++i) r += (c[i] % characteristic()) * impl_->pow_p[i];
  return r;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(order());
  for (Elem a = 0; a < order(); ++a) out[a] = a;
  return out;
}

Embedding::Embedding(Field source, Field target) : source_(std::move(source)), target_(std::move(target)) {
  if (source_.characteristic() != target_.characteristic())
    throw PreconditionError("embedding requires equal characteristic");
  if (target_.degree() % source_.degree() != 0)
    throw PreconditionError("target degree is not a multiple of the source degree");

  const auto& mod = source_.spec().modulus;
  auto eval_mod = [&](Elem x) {
    // Horner, coefficients lifted through the prime subfield.
    Elem acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = target_.add(target_.mul(acc, x), target_.from_int(mod[i]));
    return acc;
  };
  Elem root = 0;
  bool found = false;
  for (Elem x = 0; x < target_.order(); ++x) {
    if (eval_mod(x) == 0) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) throw InvariantViolation("source modulus has no root in the target field");

  image_.resize(source_.order());
  for (Elem a = 0; a < source_.order(); ++a) {
    const auto c = source_.coeffs(a);
    Elem acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = target_.add(target_.mul(acc, root), target_.from_int(c[i]));
    image_[a] = acc;
  }
}

Vec Embedding::apply(std::span<const Elem> v) const {
  Vec out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [this](Elem a) { return (*this)(a); });
  return out;
}

Elem embed(Elem a, const Field& source, const Field& target) { return Embedding(source, target)(a); }

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Elem acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

}  // namespace isokit
