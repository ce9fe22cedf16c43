#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "etass/gf2.hpp"
#include "etass/numext.hpp"

namespace etass::fields {

/* Nonzero rational with small integer parts; normalized so den > 0. */
struct Rat {
  long long num = 1;
  long long den = 1;
  Rat() = default;
  Rat(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d);
};

/* A place of Q: the real place or a finite prime. */
struct Place {
  bool infinite = true;
  long long p = 0;
  static Place real() { return Place{}; }
  static Place finite(long long p) { return Place{false, p}; }
  friend bool operator==(const Place& a, const Place& b) {
    return a.infinite == b.infinite && (a.infinite || a.p == b.p);
  }
};

/* Hilbert symbol (a,b)_v in {+1,-1}. Closed forms: Legendre-based at odd p,
   unit congruences mod 8 at p = 2, signs at the real place. */
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

/* Places where (a,b)_v can be nontrivial: real, 2, odd primes dividing a or b. */
std::vector<Place> relevant_places(const Rat& a, const Rat& b);

enum class FieldKind { Complex, Real, Finite, Padic, Rational, RationalI };

struct FieldDescriptor {
  FieldKind kind = FieldKind::Complex;
  long long q = 0;  // prime power for Finite, prime for Padic, else 0
  ExtNat level;
  ExtNat cd;   // cohomological dimension
  ExtNat cd2;  // mod-2 cohomological dimension
  ExtNat rho_nilpotence;
  int prime_support_bound = 100;  // Rational only
  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

class Field;

/* Homogeneous element of k^M_*(field) = K^M_*(field)/2, stored as coordinates
   in the canonical basis of its degree. */
class MilnorElement {
 public:
  MilnorElement() = default;
  Field field() const;
  int degree() const { return degree_; }
  const gf2::BitVec& coords() const { return coords_; }
  bool zero() const { return coords_.zero(); }
  std::string label() const;
  friend bool operator==(const MilnorElement& a, const MilnorElement& b);

 private:
  friend class Field;
  friend MilnorElement km_mul(const MilnorElement&, const MilnorElement&);
  friend MilnorElement km_add(const MilnorElement&, const MilnorElement&);
  friend MilnorElement localize(const MilnorElement&, const Field&);
  std::shared_ptr<const class FieldImpl> impl_;
  int degree_ = 0;
  gf2::BitVec coords_;
};

/* Immutable handle to a catalog field. All per-field data (bases, Hilbert
   elimination for Q in degree 2, rho matrices) is built at construction, so a
   Field is safe to share across threads. */
class Field {
 public:
  Field() = default;
  static Field make(FieldKind kind, long long param = 0, int prime_bound = 100);
  /* names: C, R, Fq:<q>, Qp:<p>, Q, Qi */
  static Field parse(const std::string& name, int prime_bound = 100);
  const FieldDescriptor& desc() const;
  std::string name() const;
  bool valid() const { return impl_ != nullptr; }

  /* k^M_n basis; EnumerationError if not enumerable (Q(i) in degrees >= 1) */
  bool milnor_enumerable(int degree) const;
  int milnor_dim(int degree) const;
  gf2::LabeledBasis milnor_basis(int degree) const;

  MilnorElement zero_element(int degree) const;
  MilnorElement basis_element(int degree, int index) const;
  MilnorElement from_coords(int degree, gf2::BitVec coords) const;
  MilnorElement unit() const { return basis_element(0, 0); }
  MilnorElement rho() const;  // class of [-1] in degree 1 (zero if -1 is a square)
  /* class of the symbol [a_1]...[a_n]; n = 0 gives the unit */
  MilnorElement symbol(const std::vector<Rat>& entries) const;

  /* matrix of rho^r : k^M_n -> k^M_{n+r}, r >= 1 */
  gf2::BitMatrix rho_mul_matrix(int r, int degree) const;
  /* basis of ker(rho^r) in degree n */
  std::vector<MilnorElement> rho_power_annihilator(int r, int degree) const;

  friend bool operator==(const Field& a, const Field& b);
  friend class MilnorElement;
  friend MilnorElement km_mul(const MilnorElement&, const MilnorElement&);
  friend MilnorElement km_add(const MilnorElement&, const MilnorElement&);
  friend MilnorElement localize(const MilnorElement&, const Field&);

 private:
  std::shared_ptr<const FieldImpl> impl_;
};

MilnorElement km_mul(const MilnorElement& x, const MilnorElement& y);
MilnorElement km_add(const MilnorElement& x, const MilnorElement& y);
bool km_equal(const MilnorElement& x, const MilnorElement& y);

/* Coefficient field change along Q -> Q_p or Q -> R (the appropriate
   completion map on Milnor K-theory mod 2). */
MilnorElement localize(const MilnorElement& x, const Field& target);
gf2::BitMatrix localization_matrix(const Field& q, const Field& target, int degree);

/* primes <= bound, ascending */
std::vector<long long> primes_up_to(long long bound);
bool is_prime(long long n);

}  // namespace etass::fields
