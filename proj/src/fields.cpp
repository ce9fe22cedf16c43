#include "etass/fields.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace etass::fields {

namespace {

long long powmod(long long base, long long exp, long long mod) {
  __int128 acc = 1, b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) acc = (acc * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<long long>(acc);
}

/* Legendre symbol (x/p), p an odd prime, x a unit mod p. */
int legendre(long long x, long long p) {
  long long r = powmod(x, (p - 1) / 2, p);
  if (r == 1) return 1;
  if (r == p - 1) return -1;
  throw InternalError("legendre: argument not a unit");
}

int vp_of(long long n, long long p) {
  n = std::llabs(n);
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long long strip(long long n, long long p) {
  while (n % p == 0) n /= p;
  return n;
}

int eps_mod2(long long u) {  // (u-1)/2 mod 2 for odd u
  long long m = ((u % 4) + 4) % 4;
  return m == 3 ? 1 : 0;
}

int omega_mod2(long long u) {  // (u^2-1)/8 mod 2 for odd u
  long long m = ((u % 8) + 8) % 8;
  return (m == 3 || m == 5) ? 1 : 0;
}

}  // namespace

Rat::Rat(long long n, long long d) : num(n), den(d) {
  if (num == 0 || den == 0) throw ConfigError("Rat: zero numerator or denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(std::llabs(num), den);
  num /= g;
  den /= g;
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a.num == 0 || b.num == 0) throw ConfigError("hilbert_symbol: zero argument");
  if (v.infinite) return (a.num < 0 && b.num < 0) ? -1 : 1;
  long long p = v.p;
  if (!is_prime(p)) throw ConfigError("hilbert_symbol: place is not prime");
  int alpha = vp_of(a.num, p) - vp_of(a.den, p);
  int beta = vp_of(b.num, p) - vp_of(b.den, p);
  long long an = strip(a.num, p), ad = strip(a.den, p);
  long long bn = strip(b.num, p), bd = strip(b.den, p);
  if (p == 2) {
    // unit parts mod 8; an odd d satisfies d^2 = 1 mod 8, so inverse = itself
    long long u8 = ((an % 8) * (ad % 8)) % 8;
    long long w8 = ((bn % 8) * (bd % 8)) % 8;
    u8 = ((u8 % 8) + 8) % 8;
    w8 = ((w8 % 8) + 8) % 8;
    int e = (eps_mod2(u8) * eps_mod2(w8) + alpha * omega_mod2(w8) + beta * omega_mod2(u8)) & 1;
    return e ? -1 : 1;
  }
  long long inv_ad = powmod(ad, p - 2, p);
  long long inv_bd = powmod(bd, p - 2, p);
  long long u = (((an % p) * inv_ad) % p + p) % p;
  long long w = (((bn % p) * inv_bd) % p + p) % p;
  int s = 1;
  if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) s = -s;
  if (beta & 1) s *= legendre(u, p);
  if (alpha & 1) s *= legendre(w, p);
  return s;
}

std::vector<Place> relevant_places(const Rat& a, const Rat& b) {
  std::vector<Place> out{Place::real(), Place::finite(2)};
  std::vector<long long> vals{a.num, a.den, b.num, b.den};
  std::vector<long long> odd;
  for (long long v : vals) {
    v = std::llabs(v);
    while (v % 2 == 0) v /= 2;
    for (long long d = 3; d * d <= v; d += 2)
      while (v % d == 0) {
        odd.push_back(d);
        v /= d;
      }
    if (v > 1) odd.push_back(v);
  }
  std::sort(odd.begin(), odd.end());
  odd.erase(std::unique(odd.begin(), odd.end()), odd.end());
  for (long long p : odd) out.push_back(Place::finite(p));
  return out;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long long> primes_up_to(long long bound) {
  std::vector<long long> out;
  for (long long n = 2; n <= bound; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

/* ------------------------------------------------------------------ */

class FieldImpl {
 public:
  FieldDescriptor desc;
  long long p = 0;  // residue characteristic for Finite/Padic
  int e = 1;        // q = p^e for Finite
  long long u = 0;  // canonical nonsquare unit for Finite(prime)/Padic(odd)

  // Rational-only data (bounded by desc.prime_support_bound)
  std::vector<long long> tags;            // degree-1 basis values: -1, then primes
  std::vector<Place> places;              // real, 2, odd primes <= bound
  std::vector<std::pair<int, int>> d2_pairs;  // chosen degree-2 basis, as tag index pairs
  std::vector<gf2::BitVec> d2_vectors;        // their Hilbert vectors
  std::vector<bool> d2_inf_bits;              // their real-place coordinates
  std::vector<gf2::BitVec> pair_coords;       // all tag pairs (i<=j) in d2 basis coords

  int pair_index(int i, int j) const {
    int t = static_cast<int>(tags.size());
    return i * t - i * (i - 1) / 2 + (j - i);
  }

  gf2::BitVec hilbert_vector(const Rat& a, const Rat& b) const {
    gf2::BitVec v(static_cast<int>(places.size()));
    for (std::size_t k = 0; k < places.size(); ++k)
      if (hilbert_symbol(a, b, places[k]) == -1) v.set(static_cast<int>(k));
    return v;
  }
};

namespace {

std::shared_ptr<const FieldImpl> build_impl(FieldKind kind, long long param, int bound) {
  auto impl = std::make_shared<FieldImpl>();
  auto& d = impl->desc;
  d.kind = kind;
  const ExtNat inf = ExtNat::infinity();
  switch (kind) {
    case FieldKind::Complex:
      d.level = ExtNat(1);
      d.cd = ExtNat(0);
      d.cd2 = ExtNat(0);
      d.rho_nilpotence = ExtNat(1);
      break;
    case FieldKind::Real:
      d.level = inf;
      d.cd = inf;
      d.cd2 = inf;
      d.rho_nilpotence = inf;
      break;
    case FieldKind::Finite: {
      long long q = param;
      if (q < 3 || q % 2 == 0) throw ConfigError("Fq: q must be an odd prime power");
      long long p = 2;
      while (q % p != 0) ++p;
      long long t = q;
      int e = 0;
      while (t % p == 0) {
        t /= p;
        ++e;
      }
      if (t != 1) throw ConfigError("Fq: q must be a prime power");
      d.q = q;
      impl->p = p;
      impl->e = e;
      bool minus_one_square = (q % 4 == 1);
      d.level = ExtNat(minus_one_square ? 1 : 2);
      d.cd = ExtNat(1);
      d.cd2 = ExtNat(1);
      d.rho_nilpotence = ExtNat(minus_one_square ? 1 : 2);
      if (e == 1) {
        if (p % 4 == 3)
          impl->u = -1;
        else
          for (long long c = 2;; ++c)
            if (legendre(c, p) == -1) {
              impl->u = c;
              break;
            }
      }
      break;
    }
    case FieldKind::Padic: {
      long long p = param;
      if (!is_prime(p)) throw ConfigError("Qp: p must be prime");
      d.q = p;
      impl->p = p;
      d.cd = ExtNat(2);
      d.cd2 = ExtNat(2);
      if (p == 2) {
        d.level = ExtNat(4);
        d.rho_nilpotence = ExtNat(3);
      } else if (p % 4 == 1) {
        d.level = ExtNat(1);
        d.rho_nilpotence = ExtNat(1);
        for (long long c = 2;; ++c)
          if (legendre(c, p) == -1) {
            impl->u = c;
            break;
          }
      } else {
        d.level = ExtNat(2);
        d.rho_nilpotence = ExtNat(2);
        impl->u = -1;
      }
      break;
    }
    case FieldKind::Rational: {
      if (bound < 2) throw ConfigError("Q: prime support bound must be >= 2");
      d.level = inf;
      d.cd = inf;
      d.cd2 = inf;
      d.rho_nilpotence = inf;
      d.prime_support_bound = bound;
      impl->tags.push_back(-1);
      for (long long p : primes_up_to(bound)) impl->tags.push_back(p);
      impl->places.push_back(Place::real());
      impl->places.push_back(Place::finite(2));
      for (long long p : primes_up_to(bound))
        if (p != 2) impl->places.push_back(Place::finite(p));
      // degree-2 basis: Hilbert vectors of tag pair symbols, eliminated in
      // lexicographic pair order; pivots become the basis
      int t = static_cast<int>(impl->tags.size());
      int npairs = t * (t + 1) / 2;
      impl->pair_coords.resize(npairs);
      struct Row {
        gf2::BitVec vec;
        gf2::BitVec combo;  // vec as a sum of chosen basis vectors
        int pivot;
      };
      std::vector<Row> rows;  // sorted by pivot so one ascending pass reduces fully
      int combo_width = npairs;  // upper bound on basis size
      for (int i = 0; i < t; ++i)
        for (int j = i; j < t; ++j) {
          gf2::BitVec v = impl->hilbert_vector(Rat(impl->tags[static_cast<std::size_t>(i)]),
                                               Rat(impl->tags[static_cast<std::size_t>(j)]));
          gf2::BitVec orig = v;
          gf2::BitVec combo(combo_width);
          for (const Row& r : rows)
            if (v.get(r.pivot)) {
              v ^= r.vec;
              combo ^= r.combo;
            }
          int piv = v.first_set();
          if (piv >= 0) {
            // residue is independent: this pair becomes basis element k, and
            // residue = orig + (reductions) = basis_k + combo in basis terms
            int k = static_cast<int>(impl->d2_pairs.size());
            impl->d2_pairs.emplace_back(i, j);
            impl->d2_vectors.push_back(orig);
            gf2::BitVec rowcombo = combo;
            rowcombo.flip(k);
            std::size_t pos = 0;
            while (pos < rows.size() && rows[pos].pivot < piv) ++pos;
            rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos),
                        Row{v, rowcombo, piv});
            combo = gf2::BitVec(combo_width);
            combo.flip(k);
          }
          impl->pair_coords[static_cast<std::size_t>(impl->pair_index(i, j))] = combo;
        }
      // shrink combo vectors to the final basis dimension
      int dim2 = static_cast<int>(impl->d2_pairs.size());
      for (auto& c : impl->pair_coords) {
        gf2::BitVec s(dim2);
        for (int k = 0; k < dim2; ++k)
          if (c.get(k)) s.set(k);
        c = s;
      }
      for (const auto& v : impl->d2_vectors) impl->d2_inf_bits.push_back(v.get(0));
      break;
    }
    case FieldKind::RationalI:
      d.level = ExtNat(1);
      d.cd = ExtNat(2);
      d.cd2 = ExtNat(2);
      d.rho_nilpotence = ExtNat(1);
      break;
  }
  return impl;
}

}  // namespace

Field Field::make(FieldKind kind, long long param, int prime_bound) {
  Field f;
  f.impl_ = build_impl(kind, param, prime_bound);
  return f;
}

Field Field::parse(const std::string& name, int prime_bound) {
  if (name == "C") return make(FieldKind::Complex);
  if (name == "R") return make(FieldKind::Real);
  if (name == "Q") return make(FieldKind::Rational, 0, prime_bound);
  if (name == "Qi") return make(FieldKind::RationalI);
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon);
    long long param = 0;
    try {
      param = std::stoll(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw ConfigError("unrecognized field name: " + name);
    }
    if (head == "Fq") return make(FieldKind::Finite, param);
    if (head == "Qp") return make(FieldKind::Padic, param);
  }
  throw ConfigError("unrecognized field name: " + name);
}

const FieldDescriptor& Field::desc() const {
  if (!impl_) throw InternalError("Field: empty handle");
  return impl_->desc;
}

std::string Field::name() const {
  const auto& d = desc();
  switch (d.kind) {
    case FieldKind::Complex: return "C";
    case FieldKind::Real: return "R";
    case FieldKind::Finite: return "Fq:" + std::to_string(d.q);
    case FieldKind::Padic: return "Qp:" + std::to_string(d.q);
    case FieldKind::Rational: return "Q";
    case FieldKind::RationalI: return "Qi";
  }
  return "?";
}

bool Field::milnor_enumerable(int degree) const {
  const auto& d = desc();
  if (degree < 0) return true;  // zero space
  if (d.kind == FieldKind::RationalI) return degree == 0;
  return true;
}

int Field::milnor_dim(int degree) const {
  const auto& d = desc();
  if (!milnor_enumerable(degree))
    throw EnumerationError(name() + ": Milnor basis not enumerable in degree " +
                           std::to_string(degree));
  if (degree < 0) return 0;
  if (degree == 0) return 1;
  switch (d.kind) {
    case FieldKind::Complex: return 0;
    case FieldKind::Real: return 1;
    case FieldKind::Finite: return degree == 1 ? 1 : 0;
    case FieldKind::Padic:
      if (degree == 1) return d.q == 2 ? 3 : 2;
      return degree == 2 ? 1 : 0;
    case FieldKind::Rational:
      if (degree == 1) return static_cast<int>(impl_->tags.size());
      if (degree == 2) return static_cast<int>(impl_->d2_pairs.size());
      return 1;
    case FieldKind::RationalI: return 1;  // degree 0 only (guarded above)
  }
  return 0;
}

gf2::LabeledBasis Field::milnor_basis(int degree) const {
  gf2::LabeledBasis b;
  int n = milnor_dim(degree);
  if (n == 0) return b;
  const auto& d = desc();
  if (degree == 0) {
    b.labels.push_back("1");
    return b;
  }
  switch (d.kind) {
    case FieldKind::Real:
      b.labels.push_back(degree == 1 ? "rho" : "rho^" + std::to_string(degree));
      break;
    case FieldKind::Finite:
      b.labels.push_back(impl_->e == 1 ? "[" + std::to_string(impl_->u) + "]" : "[u]");
      break;
    case FieldKind::Padic: {
      if (d.q == 2) {
        if (degree == 1)
          b.labels = {"[-1]", "[2]", "[5]"};
        else
          b.labels = {"[-1][-1]"};
      } else {
        std::string su = "[" + std::to_string(impl_->u) + "]";
        std::string sp = "[" + std::to_string(d.q) + "]";
        if (degree == 1)
          b.labels = {su, sp};
        else
          b.labels = {su + sp};
      }
      break;
    }
    case FieldKind::Rational: {
      if (degree == 1) {
        for (long long t : impl_->tags) b.labels.push_back("[" + std::to_string(t) + "]");
      } else if (degree == 2) {
        for (auto [i, j] : impl_->d2_pairs)
          b.labels.push_back("[" + std::to_string(impl_->tags[static_cast<std::size_t>(i)]) +
                             "][" + std::to_string(impl_->tags[static_cast<std::size_t>(j)]) +
                             "]");
      } else {
        b.labels.push_back("rho^" + std::to_string(degree));
      }
      break;
    }
    default:
      throw InternalError("milnor_basis: unexpected kind");
  }
  if (b.dim() != n) throw InternalError("milnor_basis: label count mismatch");
  return b;
}

MilnorElement Field::zero_element(int degree) const {
  MilnorElement x;
  x.impl_ = impl_;
  x.degree_ = degree;
  x.coords_ = gf2::BitVec(milnor_dim(degree));
  return x;
}

MilnorElement Field::basis_element(int degree, int index) const {
  MilnorElement x = zero_element(degree);
  if (index < 0 || index >= x.coords_.size())
    throw InternalError("basis_element: index out of range");
  x.coords_.set(index);
  return x;
}

MilnorElement Field::from_coords(int degree, gf2::BitVec coords) const {
  MilnorElement x = zero_element(degree);
  if (coords.size() != x.coords_.size())
    throw InternalError("from_coords: dimension mismatch");
  x.coords_ = std::move(coords);
  return x;
}

MilnorElement Field::rho() const { return symbol({Rat(-1)}); }

namespace {

/* degree-1 class of a rational in the canonical coordinates */
gf2::BitVec class_of(const FieldImpl& impl, const Rat& a) {
  const auto& d = impl.desc;
  switch (d.kind) {
    case FieldKind::Complex: return gf2::BitVec(0);
    case FieldKind::Real: {
      gf2::BitVec v(1);
      if (a.num < 0) v.set(0);
      return v;
    }
    case FieldKind::Finite: {
      long long q = d.q, p = impl.p;
      long long n = ((a.num % p) + p) % p, m = ((a.den % p) + p) % p;
      if (n == 0 || m == 0) throw ConfigError("Fq: symbol entry is not a unit");
      long long x = (n * powmod(m, p - 2, p)) % p;
      // x in the prime subfield is a square in Fq iff x^((q-1)/2) = 1
      long long expo = ((q - 1) / 2) % (p - 1);
      bool square = expo == 0 || powmod(x, expo, p) == 1;
      gf2::BitVec v(1);
      if (!square) v.set(0);
      return v;
    }
    case FieldKind::Padic: {
      long long p = d.q;
      if (p == 2) {
        int val = vp_of(a.num, 2) - vp_of(a.den, 2);
        long long n = strip(a.num, 2), m = strip(a.den, 2);
        long long u8 = ((((n % 8) * (m % 8)) % 8) + 8) % 8;
        gf2::BitVec v(3);
        if (val & 1) v.set(1);
        if (u8 == 3) {  // -5 mod 8
          v.set(0);
          v.set(2);
        } else if (u8 == 5) {
          v.set(2);
        } else if (u8 == 7) {
          v.set(0);
        }
        return v;
      }
      int val = vp_of(a.num, p) - vp_of(a.den, p);
      long long n = strip(a.num, p), m = strip(a.den, p);
      long long x = ((((n % p) * powmod(m, p - 2, p)) % p) + p) % p;
      gf2::BitVec v(2);
      if (legendre(x, p) == -1) v.set(0);
      if (val & 1) v.set(1);
      return v;
    }
    case FieldKind::Rational: {
      gf2::BitVec v(static_cast<int>(impl.tags.size()));
      if (a.num < 0) v.flip(0);
      long long rest = std::llabs(a.num) * a.den;  // den^2 is a square; parity matches num*den
      for (std::size_t i = 1; i < impl.tags.size(); ++i) {
        long long p = impl.tags[i];
        while (rest % p == 0) {
          rest /= p;
          v.flip(static_cast<int>(i));
        }
      }
      // leftover must be a perfect square of in-bound primes; any other factor
      // falls outside the supported square-class group
      if (rest != 1) {
        long long r = std::llround(std::sqrt(static_cast<double>(rest)));
        if (r * r != rest)
          throw EnumerationError("Q: symbol entry has prime support beyond the bound");
      }
      return v;
    }
    case FieldKind::RationalI:
      throw EnumerationError("Qi: Milnor classes in degree >= 1 are not enumerated");
  }
  throw InternalError("class_of: unexpected kind");
}

long long tag_rep(const FieldImpl& impl, int index) {
  const auto& d = impl.desc;
  if (d.kind == FieldKind::Rational) return impl.tags[static_cast<std::size_t>(index)];
  if (d.kind == FieldKind::Padic) {
    if (d.q == 2) {
      static const long long reps[3] = {-1, 2, 5};
      return reps[index];
    }
    return index == 0 ? impl.u : d.q;
  }
  throw InternalError("tag_rep: unexpected kind");
}

int real_bit(const FieldImpl& impl, int degree, const gf2::BitVec& coords) {
  // image in k^M(R) = F2 under the real-place map (Q only)
  if (degree == 0) return coords.get(0);
  if (degree == 1) return coords.get(0);  // only the tag -1 is negative
  if (degree == 2) {
    int b = 0;
    for (int k = 0; k < coords.size(); ++k)
      if (coords.get(k) && impl.d2_inf_bits[static_cast<std::size_t>(k)]) b ^= 1;
    return b;
  }
  return coords.get(0);
}

}  // namespace

MilnorElement Field::symbol(const std::vector<Rat>& entries) const {
  if (entries.empty()) return unit();
  MilnorElement acc;
  acc.impl_ = impl_;
  acc.degree_ = 1;
  acc.coords_ = class_of(*impl_, entries[0]);
  for (std::size_t i = 1; i < entries.size(); ++i) {
    MilnorElement next;
    next.impl_ = impl_;
    next.degree_ = 1;
    next.coords_ = class_of(*impl_, entries[i]);
    acc = km_mul(acc, next);
  }
  return acc;
}

Field MilnorElement::field() const {
  Field f;
  f.impl_ = impl_;
  return f;
}

std::string MilnorElement::label() const {
  if (!impl_) throw InternalError("MilnorElement: empty");
  if (coords_.zero()) return "0";
  Field f = field();
  auto basis = f.milnor_basis(degree_);
  std::string out;
  for (int i : coords_.support()) {
    if (!out.empty()) out += "+";
    out += basis.labels[static_cast<std::size_t>(i)];
  }
  return out;
}

bool operator==(const MilnorElement& a, const MilnorElement& b) {
  bool same = a.impl_ == b.impl_ || (a.impl_ && b.impl_ && a.impl_->desc == b.impl_->desc);
  return same && a.degree_ == b.degree_ && a.coords_ == b.coords_;
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  if (!a.impl_ || !b.impl_) return false;
  return a.impl_->desc == b.impl_->desc;
}

namespace {
bool same_field(const std::shared_ptr<const FieldImpl>& a,
                const std::shared_ptr<const FieldImpl>& b) {
  if (a == b) return true;
  return a && b && a->desc == b->desc;
}
}  // namespace

MilnorElement km_add(const MilnorElement& x, const MilnorElement& y) {
  if (!same_field(x.impl_, y.impl_) || x.degree_ != y.degree_)
    throw FieldMismatchError("km_add: mismatched fields or degrees");
  MilnorElement out = x;
  out.coords_ ^= y.coords_;
  return out;
}

MilnorElement km_mul(const MilnorElement& x, const MilnorElement& y) {
  if (!same_field(x.impl_, y.impl_))
    throw FieldMismatchError("km_mul: elements of different fields");
  const FieldImpl& impl = *x.impl_;
  const auto& d = impl.desc;
  int dx = x.degree_, dy = y.degree_;
  Field f = x.field();
  int target = dx + dy;
  // scalar factor
  if (dx == 0 || dy == 0) {
    const MilnorElement& s = dx == 0 ? x : y;
    const MilnorElement& v = dx == 0 ? y : x;
    MilnorElement out = v;
    out.degree_ = target;
    if (s.coords_.zero()) out.coords_ = gf2::BitVec(v.coords_.size());
    return out;
  }
  MilnorElement out = f.zero_element(target);
  if (out.coords_.size() == 0) return out;
  switch (d.kind) {
    case FieldKind::Real: {
      if (!x.coords_.zero() && !y.coords_.zero()) out.coords_.set(0);
      return out;
    }
    case FieldKind::Padic: {
      if (dx == 1 && dy == 1) {
        int bit = 0;
        for (int i : x.coords_.support())
          for (int j : y.coords_.support()) {
            Rat a(tag_rep(impl, i)), b(tag_rep(impl, j));
            if (hilbert_symbol(a, b, Place::finite(d.q)) == -1) bit ^= 1;
          }
        if (bit) out.coords_.set(0);
      }
      return out;  // higher targets have dimension 0 (handled by size check)
    }
    case FieldKind::Rational: {
      if (dx == 1 && dy == 1) {
        for (int i : x.coords_.support())
          for (int j : y.coords_.support()) {
            int a = std::min(i, j), b = std::max(i, j);
            out.coords_ ^=
                impl.pair_coords[static_cast<std::size_t>(impl.pair_index(a, b))];
          }
        return out;
      }
      // total degree >= 3: the class is determined by its real image
      if (real_bit(impl, dx, x.coords_) && real_bit(impl, dy, y.coords_)) out.coords_.set(0);
      return out;
    }
    default:
      return out;  // C, Fq: all positive-degree products vanish
  }
}

bool km_equal(const MilnorElement& x, const MilnorElement& y) {
  if (!(x.field() == y.field()))
    throw FieldMismatchError("km_equal: elements of different fields");
  if (x.degree() != y.degree()) throw FieldMismatchError("km_equal: degrees differ");
  return x.coords() == y.coords();
}

gf2::BitMatrix Field::rho_mul_matrix(int r, int degree) const {
  if (r < 1) throw ConfigError("rho_mul_matrix: r must be >= 1");
  int src = milnor_dim(degree), dst = milnor_dim(degree + r);
  gf2::BitMatrix m(dst, src);
  if (src == 0 || dst == 0) return m;
  MilnorElement rp = rho();
  for (int i = 1; i < r; ++i) rp = km_mul(rp, rho());
  for (int c = 0; c < src; ++c) {
    MilnorElement img = km_mul(rp, basis_element(degree, c));
    for (int row : img.coords().support()) m.set(row, c);
  }
  return m;
}

std::vector<MilnorElement> Field::rho_power_annihilator(int r, int degree) const {
  std::vector<MilnorElement> out;
  for (auto& v : gf2::kernel_basis(rho_mul_matrix(r, degree)))
    out.push_back(from_coords(degree, v));
  return out;
}

MilnorElement localize(const MilnorElement& x, const Field& target) {
  if (!x.impl_ || x.impl_->desc.kind != FieldKind::Rational)
    throw FieldMismatchError("localize: source must be Q");
  const auto& tk = target.desc().kind;
  if (tk != FieldKind::Padic && tk != FieldKind::Real)
    throw FieldMismatchError("localize: target must be Q_p or R");
  const FieldImpl& src = *x.impl_;
  int deg = x.degree();
  if (deg == 0) {
    MilnorElement out = target.zero_element(0);
    if (x.coords().get(0)) return target.unit();
    return out;
  }
  MilnorElement out = target.zero_element(deg);
  if (deg == 1) {
    for (int i : x.coords().support()) {
      MilnorElement cls = target.symbol({Rat(src.tags[static_cast<std::size_t>(i)])});
      out = km_add(out, cls);
    }
    return out;
  }
  if (deg == 2) {
    int bit = 0;
    Place v = tk == FieldKind::Real ? Place::real() : Place::finite(target.desc().q);
    for (int k : x.coords().support()) {
      auto [i, j] = src.d2_pairs[static_cast<std::size_t>(k)];
      if (hilbert_symbol(Rat(src.tags[static_cast<std::size_t>(i)]),
                         Rat(src.tags[static_cast<std::size_t>(j)]), v) == -1)
        bit ^= 1;
    }
    if (bit && out.coords().size() > 0) out.coords_.set(0);
    return out;
  }
  // degree >= 3: zero over Q_p, rho^deg times the real image over R
  if (tk == FieldKind::Real && real_bit(src, deg, x.coords())) out.coords_.set(0);
  return out;
}

gf2::BitMatrix localization_matrix(const Field& q, const Field& target, int degree) {
  int src = q.milnor_dim(degree), dst = target.milnor_dim(degree);
  gf2::BitMatrix m(dst, src);
  for (int c = 0; c < src; ++c) {
    MilnorElement img = localize(q.basis_element(degree, c), target);
    for (int row : img.coords().support()) m.set(row, c);
  }
  return m;
}

}  // namespace etass::fields
