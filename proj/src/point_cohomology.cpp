#include "etass/point_cohomology.hpp"

#include <algorithm>

namespace etass::point {

namespace {

constexpr const char* kNames[] = {
    "0",   "1",      "tau",    "rho",          "Sq1",
    "Sq2", "Sq3",    "Sq2Sq1", "Sq3Sq1",       "Sq2+rhoSq1",
    "Sq2Sq1+Sq3",
};

bool choose2_odd(int j) {  // C(j,2) mod 2
  int m = j & 3;
  return m == 2 || m == 3;
}

}  // namespace

std::string op_name(Op op) { return kNames[static_cast<int>(op)]; }

Op op_from_name(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(Op::Sq2Sq1PlusSq3); ++i)
    if (name == kNames[i]) return static_cast<Op>(i);
  throw ConfigError("unknown operation name: " + name);
}

Bidegree op_bidegree(Op op) {
  switch (op) {
    case Op::Zero:
    case Op::One: return {0, 0};
    case Op::Tau: return {0, 1};
    case Op::Rho: return {1, 1};
    case Op::Sq1: return {1, 0};
    case Op::Sq2: return {2, 1};
    case Op::Sq3: return {3, 1};
    case Op::Sq2Sq1: return {3, 1};
    case Op::Sq3Sq1: return {4, 1};
    case Op::Sq2PlusRhoSq1: return {2, 1};
    case Op::Sq2Sq1PlusSq3: return {3, 1};
  }
  throw InternalError("op_bidegree: bad op");
}

OpAction op_on_tau_power(Op op, int j) {
  if (j < 0) throw InternalError("op_on_tau_power: negative tau exponent");
  bool odd = j & 1;
  int m4 = j & 3;
  OpAction a;
  switch (op) {
    case Op::Zero: return a;
    case Op::One: return {true, j, 0};
    case Op::Tau: return {true, j + 1, 0};
    case Op::Rho: return {true, j, 1};
    case Op::Sq1: return {odd, j - 1, 1};
    case Op::Sq2: return {choose2_odd(j), j - 1, 2};
    case Op::Sq3: return {m4 == 2, j - 2, 3};
    case Op::Sq2Sq1: return {m4 == 3, j - 2, 3};
    case Op::Sq3Sq1: return {m4 == 3, j - 3, 4};
    case Op::Sq2PlusRhoSq1: return {m4 == 1 || m4 == 2, j - 1, 2};
    case Op::Sq2Sq1PlusSq3: return {choose2_odd(j), j - 2, 3};
  }
  throw InternalError("op_on_tau_power: bad op");
}

PointClass PointClass::zero(const fields::Field& f) {
  PointClass c;
  c.field_ = f;
  return c;
}

PointClass PointClass::term(int tau, fields::MilnorElement cls) {
  PointClass c;
  c.field_ = cls.field();
  c.add_term(tau, cls);
  return c;
}

void PointClass::add_term(int tau, const fields::MilnorElement& cls) {
  if (cls.zero()) return;
  for (auto& t : terms_)
    if (t.tau == tau && t.cls.degree() == cls.degree()) {
      t.cls = fields::km_add(t.cls, cls);
      if (t.cls.zero())
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [&](const PointTerm& u) { return u.cls.zero(); }),
                     terms_.end());
      return;
    }
  terms_.push_back({tau, cls});
  std::sort(terms_.begin(), terms_.end(), [](const PointTerm& a, const PointTerm& b) {
    return a.tau != b.tau ? a.tau < b.tau : a.cls.degree() < b.cls.degree();
  });
}

std::string PointClass::label() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string x = t.cls.label();
    if (t.tau == 0) {
      out += x;
    } else {
      std::string tp = t.tau == 1 ? "tau" : "tau^" + std::to_string(t.tau);
      out += x == "1" ? tp : tp + "*" + x;
    }
  }
  return out;
}

PointClass operator+(const PointClass& a, const PointClass& b) {
  if (!(a.field_ == b.field_) && !a.terms_.empty() && !b.terms_.empty())
    throw FieldMismatchError("PointClass: adding classes over different fields");
  PointClass out = a.terms_.empty() ? b : a;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  out = a;
  for (const auto& t : b.terms_) out.add_term(t.tau, t.cls);
  return out;
}

bool operator==(const PointClass& a, const PointClass& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].tau != b.terms_[i].tau || !(a.terms_[i].cls == b.terms_[i].cls))
      return false;
  return true;
}

PointClass apply(Op op, const PointClass& c) {
  PointClass out = PointClass::zero(c.field());
  for (const auto& t : c.terms()) {
    OpAction a = op_on_tau_power(op, t.tau);
    if (!a.nonzero) continue;
    if (a.tau_out < 0)
      throw InternalError("apply: nonzero coefficient with negative tau power");
    fields::MilnorElement x = t.cls;
    if (a.rho_power > 0) {
      fields::MilnorElement rho = c.field().rho();
      for (int k = 0; k < a.rho_power; ++k) x = fields::km_mul(rho, x);
    }
    out = out + PointClass::term(a.tau_out, x);
  }
  return out;
}

}  // namespace etass::point
