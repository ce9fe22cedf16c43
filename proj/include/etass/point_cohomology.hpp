#pragma once

#include <string>
#include <vector>

#include "etass/fields.hpp"

namespace etass::point {

/* Operations appearing as entries of the first differential: multiplications
   by tau/rho and the motivic Steenrod squares that act nontrivially on the
   mod-2 cohomology of a point, plus the two composite sums that occur. */
enum class Op {
  Zero,
  One,
  Tau,
  Rho,
  Sq1,
  Sq2,
  Sq3,
  Sq2Sq1,
  Sq3Sq1,
  Sq2PlusRhoSq1,
  Sq2Sq1PlusSq3,
};

std::string op_name(Op op);
Op op_from_name(const std::string& name);

/* cohomological (degree, weight) shift */
struct Bidegree {
  int degree = 0;
  int weight = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};
Bidegree op_bidegree(Op op);

/* Action on tau^j * x for x of pure weight (a Milnor class): every listed op
   sends such a class to coeff * rho^a * tau^j' * x with coeff in F2. The
   closed forms follow from Sq1(tau) = rho, Sq2(tau) = 0 and the Cartan rule;
   positive squares kill pure-weight classes, so x just rides along. */
struct OpAction {
  bool nonzero = false;
  int tau_out = 0;
  int rho_power = 0;
};
OpAction op_on_tau_power(Op op, int j);

/* Element of the bigraded cohomology of the point: a sum of terms
   tau^j * x with x a Milnor class. Terms are kept normalized (unique
   (tau, degree) keys, zero classes dropped, sorted by tau then degree). */
struct PointTerm {
  int tau = 0;
  fields::MilnorElement cls;
};

class PointClass {
 public:
  PointClass() = default;
  static PointClass zero(const fields::Field& f);
  static PointClass term(int tau, fields::MilnorElement cls);
  const std::vector<PointTerm>& terms() const { return terms_; }
  const fields::Field& field() const { return field_; }
  bool zero_class() const { return terms_.empty(); }
  std::string label() const;
  friend PointClass operator+(const PointClass& a, const PointClass& b);
  friend bool operator==(const PointClass& a, const PointClass& b);

 private:
  void add_term(int tau, const fields::MilnorElement& cls);
  fields::Field field_;
  std::vector<PointTerm> terms_;
};

/* Apply an operation termwise via the closed forms. */
PointClass apply(Op op, const PointClass& c);

}  // namespace etass::point
