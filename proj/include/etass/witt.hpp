#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etass/fields.hpp"
#include "etass/pages.hpp"

namespace etass::witt {

/* Invariant factors of a (2-primary) abelian group, possibly with free rank.
   torsion2 lists exponents k of cyclic summands Z/2^k, sorted descending. */
struct GroupRealization {
  int free_rank = 0;
  std::vector<unsigned> torsion2;
  bool symbolic = false;   // structure known but not concretely listed (Q(i))
  bool truncated = false;  // prime-indexed summands beyond the support bound omitted

  bool is_zero() const { return free_rank == 0 && torsion2.empty() && !symbolic; }
  /* log2 of the group order; infinite for free/symbolic parts */
  ExtNat log2_order() const;
  std::string str() const;
  void canonicalize();
  friend bool operator==(const GroupRealization&, const GroupRealization&) = default;
};

/* Additive presentation of the Witt ring together with its fundamental-ideal
   filtration. The graded pieces match the Milnor ring degree by degree (that
   is the quadratic-forms Milnor conjecture, consumed here as a dictionary),
   and multiplication by 2 corresponds to multiplication by rho. */
struct WittPresentation {
  fields::Field field;
  int free_rank = 0;                    // signature copies of Z
  std::vector<unsigned> cyclic2;        // Z/2^k summands
  std::vector<long long> local_primes;  // Q: one W(F_p) block per odd p <= bound
  bool symbolic_only = false;           // Q(i): exponent-2, infinitely generated
  ExtNat exponent{0};                   // additive exponent, = 2 * level
  std::vector<int> graded;              // dim I^q/I^{q+1}

  GroupRealization additive() const;  // concrete expansion (local blocks unrolled)
  int graded_dim(int q) const;
  std::string describe() const;
};

/* Catalog presentation with the graded pieces verified against the Milnor
   ring in every enumerable degree <= 6. */
WittPresentation witt_presentation(const fields::Field& f);

struct TwoPowerData {
  GroupRealization quotient;  // W / 2^r
  GroupRealization torsion;   // 2^r-torsion subgroup
};
/* r >= 1 or infinite; r infinite returns (W itself, full torsion subgroup). */
TwoPowerData two_power_data(const WittPresentation& w, ExtNat r);

/* Symbolic group answer. Grammar: 0 | W | W/2^r | T_{2^r}W | A (+) B.
   Quotient/torsion forms carry finite r >= 3; degenerate r collapse to W at
   construction. */
class GroupExpr {
 public:
  enum class Kind { Zero, W, WMod, WTorsion, Sum };

  static GroupExpr zero();
  static GroupExpr w();
  static GroupExpr wmod(ExtNat r);
  static GroupExpr wtorsion(ExtNat r);
  static GroupExpr sum(std::vector<GroupExpr> parts);

  Kind kind() const { return kind_; }
  ExtNat r() const;
  const std::vector<GroupExpr>& parts() const { return parts_; }

  std::string str() const;
  static GroupExpr parse(const std::string& s);
  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;

 private:
  Kind kind_ = Kind::Zero;
  ExtNat r_{0};
  std::vector<GroupExpr> parts_;
};

GroupRealization realize(const WittPresentation& w, const GroupExpr& e);

/* The homotopy group of the eta-inverted sphere in stem m (weight-independent):
   m = 0 -> W; m = 4l-1 > 0 -> W/2^{r_k}; m = 4l > 0 -> T_{2^{r_k}}W with
   k = nu2(4l); zero otherwise. Forms that the ring exponent already kills
   (2*level | 2^{r_k}) reduce to W, which is the collapse answer. */
GroupExpr assemble_homotopy(const fields::Field& f, const pages::Profile& profile,
                            int m);

struct OrderCheckLine {
  int q = 0;
  int computed = 0;
  int expected = 0;
};
struct OrderReport {
  int m = 0;
  int cells_checked = 0;
  std::vector<OrderCheckLine> mismatches;
  bool order_checked = false;  // group order vs tower order (finite W only)
  ExtNat group_log2{0};
  ExtNat tower_log2{0};
  bool ok() const {
    return mismatches.empty() && (!order_checked || group_log2 == tower_log2);
  }
};
/* Compares the filtration pieces implied by assemble_homotopy (coker/ker of
   rho-power multiplication, since 2 in W is represented by rho) against the
   E-infinity tower in stem m, and the total group order against the tower
   order when W is finite. */
OrderReport cross_check_orders(const fields::Field& f, const pages::Profile& profile,
                               int m, const pages::EInfPage& einf);

struct RingExpr {
  struct Generator {
    std::string name;
    int stem = 0;   // coefficient of 1 in the degree
    int alpha = 0;  // coefficient of alpha
    bool invertible = false;
  };
  std::string coefficients;          // "W(<field>)"
  std::vector<Generator> generators; // eta, sigma, mu
  std::string relation = "sigma^2";
  std::string str() const;
};
/* Emitted exactly when collapse is certified: rho^3 = 0, or cd2 <= 1, or odd
   characteristic, or an all-infinite profile. Absent otherwise (only the
   groups are then meaningful). */
std::optional<RingExpr> ring_structure(const fields::Field& f,
                                       const pages::Profile& profile);

/* In the range n >= max{3m+5, 4m} over a field of finite cohomological
   dimension, the m+n*alpha homotopy group of the actual sphere spectrum
   agrees with the eta-periodic one; with rho^3 = 0 it resolves to 0 or W
   according to the stem class. Absent outside the range or when the
   dichotomy is not certified. */
std::optional<GroupExpr> nonperiodic_range(const fields::Field& f, int m, int n);

}  // namespace etass::witt
