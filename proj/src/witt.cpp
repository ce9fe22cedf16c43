#include "etass/witt.hpp"

#include <algorithm>
#include <functional>

namespace etass::witt {

ExtNat GroupRealization::log2_order() const {
  if (free_rank > 0 || symbolic) return ExtNat::infinity();
  unsigned total = 0;
  for (unsigned k : torsion2) total += k;
  return ExtNat(total);
}

std::string GroupRealization::str() const {
  if (symbolic) return "(infinitely generated, exponent 2)";
  if (is_zero()) return "0";
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " (+) ";
    out += part;
  };
  for (int i = 0; i < free_rank; ++i) append("Z");
  for (unsigned k : torsion2) append("Z/" + std::to_string(1ll << k));
  if (truncated) append("...");
  return out;
}

void GroupRealization::canonicalize() {
  std::sort(torsion2.begin(), torsion2.end(), std::greater<>());
}

GroupRealization WittPresentation::additive() const {
  GroupRealization g;
  g.free_rank = free_rank;
  g.torsion2 = cyclic2;
  g.symbolic = symbolic_only;
  g.truncated = !local_primes.empty();
  for (long long p : local_primes) {
    if (p % 4 == 3)
      g.torsion2.push_back(2);
    else {
      g.torsion2.push_back(1);
      g.torsion2.push_back(1);
    }
  }
  g.canonicalize();
  return g;
}

int WittPresentation::graded_dim(int q) const {
  if (q < 0) throw ConfigError("graded_dim: negative degree");
  if (q < static_cast<int>(graded.size())) return graded[static_cast<std::size_t>(q)];
  switch (field.desc().kind) {
    case fields::FieldKind::Real:
    case fields::FieldKind::Rational:
      return 1;  // powers of the signature/rho line persist in every degree
    case fields::FieldKind::RationalI:
      throw EnumerationError("graded pieces over Q(i) are only enumerated in degree 0");
    default:
      return 0;
  }
}

std::string WittPresentation::describe() const {
  std::string out = "W(" + field.name() + ") = ";
  if (symbolic_only)
    return out + "Z/2 (+) (second-residue blocks over the Gaussian primes)";
  std::string parts;
  auto append = [&](const std::string& p) {
    if (!parts.empty()) parts += " (+) ";
    parts += p;
  };
  for (int i = 0; i < free_rank; ++i) append("Z");
  for (unsigned k : cyclic2) append("Z/" + std::to_string(1ll << k));
  if (!local_primes.empty())
    append("sum over odd p <= " + std::to_string(field.desc().prime_support_bound) +
           " of W(F_p)");
  return out + (parts.empty() ? "0" : parts);
}

WittPresentation witt_presentation(const fields::Field& f) {
  const auto& d = f.desc();
  WittPresentation w;
  w.field = f;
  switch (d.kind) {
    case fields::FieldKind::Complex:
      w.cyclic2 = {1};
      w.exponent = ExtNat(2);
      w.graded = {1};
      break;
    case fields::FieldKind::Real:
      w.free_rank = 1;  // signature; I^q = 2^q Z
      w.exponent = ExtNat::infinity();
      w.graded = {1, 1, 1, 1, 1, 1, 1, 1};
      break;
    case fields::FieldKind::Finite:
      if (d.q % 4 == 1)
        w.cyclic2 = {1, 1};  // rank and discriminant both have order 2
      else
        w.cyclic2 = {2};  // <1> generates Z/4
      w.exponent = ExtNat(d.q % 4 == 1 ? 2 : 4);
      w.graded = {1, 1};
      break;
    case fields::FieldKind::Padic:
      if (d.q == 2) {
        w.cyclic2 = {3, 1, 1};
        w.exponent = ExtNat(8);
        w.graded = {1, 3, 1};
      } else {
        if (d.q % 4 == 1)
          w.cyclic2 = {1, 1, 1, 1};
        else
          w.cyclic2 = {2, 2};
        w.exponent = ExtNat(d.q % 4 == 1 ? 2 : 4);
        w.graded = {1, 2, 1};
      }
      break;
    case fields::FieldKind::Rational: {
      // Milnor's split exact sequence: Z from the signature, Z/2 from the
      // dyadic residue, one W(F_p) block per odd prime in the support bound
      w.free_rank = 1;
      w.cyclic2 = {1};
      for (long long p : fields::primes_up_to(d.prime_support_bound))
        if (p != 2) w.local_primes.push_back(p);
      w.exponent = ExtNat::infinity();
      int odd = static_cast<int>(w.local_primes.size());
      w.graded = {1, 2 + odd, 1 + odd, 1, 1, 1, 1, 1};
      break;
    }
    case fields::FieldKind::RationalI:
      w.symbolic_only = true;
      w.exponent = ExtNat(2);
      w.graded = {1};
      break;
  }
  for (int q = 0; q <= 6; ++q) {
    if (!f.milnor_enumerable(q)) continue;
    if (w.graded_dim(q) != f.milnor_dim(q))
      throw InternalError("witt_presentation: graded piece I^" + std::to_string(q) +
                          "/I^" + std::to_string(q + 1) + " does not match the Milnor ring");
  }
  return w;
}

TwoPowerData two_power_data(const WittPresentation& w, ExtNat r) {
  if (r.finite() && r.value() < 1) throw ConfigError("two_power_data: r must be >= 1");
  TwoPowerData out;
  if (w.symbolic_only) {
    // exponent 2 divides every 2^r: the quotient and the torsion are all of W
    out.quotient.symbolic = true;
    out.torsion.symbolic = true;
    return out;
  }
  GroupRealization full = w.additive();
  out.quotient.truncated = full.truncated;
  out.torsion.truncated = full.truncated;
  if (r.finite()) {
    out.quotient.torsion2.reserve(full.torsion2.size() +
                                  static_cast<std::size_t>(full.free_rank));
    for (int i = 0; i < full.free_rank; ++i)
      out.quotient.torsion2.push_back(r.value());
    for (unsigned k : full.torsion2) {
      unsigned cut = std::min(k, r.value());
      out.quotient.torsion2.push_back(cut);
      out.torsion.torsion2.push_back(cut);
    }
  } else {
    out.quotient = full;
    out.torsion.torsion2 = full.torsion2;  // full torsion subgroup
  }
  out.quotient.canonicalize();
  out.torsion.canonicalize();
  return out;
}

GroupExpr GroupExpr::zero() { return GroupExpr{}; }

GroupExpr GroupExpr::w() {
  GroupExpr e;
  e.kind_ = Kind::W;
  return e;
}

GroupExpr GroupExpr::wmod(ExtNat r) {
  if (!r.finite()) return w();
  if (r.value() < 3) throw ConfigError("GroupExpr: quotient forms carry r >= 3");
  GroupExpr e;
  e.kind_ = Kind::WMod;
  e.r_ = r;
  return e;
}

GroupExpr GroupExpr::wtorsion(ExtNat r) {
  if (!r.finite()) return w();
  if (r.value() < 3) throw ConfigError("GroupExpr: torsion forms carry r >= 3");
  GroupExpr e;
  e.kind_ = Kind::WTorsion;
  e.r_ = r;
  return e;
}

GroupExpr GroupExpr::sum(std::vector<GroupExpr> parts) {
  if (parts.empty()) return zero();
  if (parts.size() == 1) return parts.front();
  GroupExpr e;
  e.kind_ = Kind::Sum;
  e.parts_ = std::move(parts);
  return e;
}

ExtNat GroupExpr::r() const {
  if (kind_ != Kind::WMod && kind_ != Kind::WTorsion)
    throw ConfigError("GroupExpr: no exponent on this form");
  return r_;
}

std::string GroupExpr::str() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::W: return "W";
    case Kind::WMod: return "W/2^" + std::to_string(r_.value());
    case Kind::WTorsion: return "T_{2^" + std::to_string(r_.value()) + "}W";
    case Kind::Sum: {
      std::string out;
      for (const auto& p : parts_) {
        if (!out.empty()) out += " (+) ";
        out += p.str();
      }
      return out;
    }
  }
  return "0";
}

GroupExpr GroupExpr::parse(const std::string& s) {
  const std::string sep = " (+) ";
  auto cut = s.find(sep);
  if (cut != std::string::npos) {
    std::vector<GroupExpr> parts;
    std::size_t start = 0;
    while (true) {
      parts.push_back(parse(s.substr(start, cut - start)));
      start = cut + sep.size();
      cut = s.find(sep, start);
      if (cut == std::string::npos) {
        parts.push_back(parse(s.substr(start)));
        break;
      }
    }
    return sum(std::move(parts));
  }
  if (s == "0") return zero();
  if (s == "W") return w();
  auto number = [&](const std::string& t) -> unsigned {
    try {
      return static_cast<unsigned>(std::stoul(t));
    } catch (const std::exception&) {
      throw ConfigError("unparsable group expression: " + s);
    }
  };
  if (s.rfind("W/2^", 0) == 0) return wmod(ExtNat(number(s.substr(4))));
  const std::string tor = "T_{2^";
  if (s.rfind(tor, 0) == 0 && s.size() > tor.size() + 2 &&
      s.compare(s.size() - 2, 2, "}W") == 0)
    return wtorsion(ExtNat(number(s.substr(tor.size(), s.size() - tor.size() - 2))));
  throw ConfigError("unparsable group expression: " + s);
}

GroupRealization realize(const WittPresentation& w, const GroupExpr& e) {
  switch (e.kind()) {
    case GroupExpr::Kind::Zero: return {};
    case GroupExpr::Kind::W: return w.additive();
    case GroupExpr::Kind::WMod: return two_power_data(w, e.r()).quotient;
    case GroupExpr::Kind::WTorsion: return two_power_data(w, e.r()).torsion;
    case GroupExpr::Kind::Sum: {
      GroupRealization acc;
      for (const auto& p : e.parts()) {
        GroupRealization g = realize(w, p);
        acc.free_rank += g.free_rank;
        acc.torsion2.insert(acc.torsion2.end(), g.torsion2.begin(), g.torsion2.end());
        acc.symbolic = acc.symbolic || g.symbolic;
        acc.truncated = acc.truncated || g.truncated;
      }
      acc.canonicalize();
      return acc;
    }
  }
  return {};
}

namespace {

/* 2*level = 2^k for catalog levels 1, 2, 4; forms with exponent dividing
   2^r collapse to the full Witt group. */
bool exponent_divides(const fields::FieldDescriptor& d, ExtNat r) {
  if (!d.level.finite() || !r.finite()) return false;
  unsigned lvl = d.level.value();
  unsigned log2_exp = 1;
  while ((1u << (log2_exp - 1)) < lvl) ++log2_exp;
  return log2_exp <= r.value();
}

}  // namespace

GroupExpr assemble_homotopy(const fields::Field& f, const pages::Profile& profile,
                            int m) {
  profile.validate();
  if (m < 0) return GroupExpr::zero();
  if (m == 0) return GroupExpr::w();
  int cls = m % 4;
  if (cls == 1 || cls == 2) return GroupExpr::zero();
  int column = cls == 3 ? m + 1 : m;  // the stem divisible by 4 whose page governs m
  ExtNat r = profile.r(nu2(column));
  if (!r.finite() || exponent_divides(f.desc(), r)) return GroupExpr::w();
  return cls == 3 ? GroupExpr::wmod(r) : GroupExpr::wtorsion(r);
}

namespace {

int rho_rank(const fields::Field& f, int r, int degree) {
  if (degree < 0) return 0;
  if (f.milnor_dim(degree) == 0) return 0;
  return gf2::rank(f.rho_mul_matrix(r, degree));
}

/* filtration piece of the stem-m answer at Milnor degree d under the
   dictionary 2 <-> rho: quotients lose im(rho^r), torsion keeps ker(rho^r) */
int expected_graded(const fields::Field& f, const pages::Profile& profile, int m,
                    int d) {
  if (d < 0) return 0;
  if (m < 0 || (m > 0 && (m % 4 == 1 || m % 4 == 2))) return 0;
  if (m == 0) return f.milnor_dim(d);
  int column = m % 4 == 3 ? m + 1 : m;
  ExtNat r = profile.r(nu2(column));
  if (!r.finite()) return f.milnor_dim(d);
  int ri = static_cast<int>(r.value());
  if (m % 4 == 3) return f.milnor_dim(d) - rho_rank(f, ri, d - ri);
  return f.milnor_dim(d) - rho_rank(f, ri, d);
}

}  // namespace

OrderReport cross_check_orders(const fields::Field& f, const pages::Profile& profile,
                               int m, const pages::EInfPage& einf) {
  const auto& d = f.desc();
  if (d.kind == fields::FieldKind::RationalI)
    throw ConfigError("cross_check_orders: no enumerable filtration over Q(i)");
  if (einf.field().name() != f.name() ||
      einf.field().desc().prime_support_bound != d.prime_support_bound)
    throw FieldMismatchError("cross_check_orders: tower computed over a different field");
  if (einf.profile() != profile)
    throw ConfigError("cross_check_orders: tower computed under a different profile");
  if (m > einf.max_stem())
    throw HeadroomError("cross_check_orders: stem beyond the computed window");
  OrderReport rep;
  rep.m = m;
  int n = einf.weight();
  for (int q = n; q <= einf.max_filtration(); ++q) {
    int want = expected_graded(f, profile, m, q - n);
    int got = static_cast<int>(einf.cell(q, m).reps.size());
    ++rep.cells_checked;
    if (want != got) rep.mismatches.push_back({q, got, want});
  }
  bool finite_w = d.kind == fields::FieldKind::Complex ||
                  d.kind == fields::FieldKind::Finite ||
                  d.kind == fields::FieldKind::Padic;
  if (finite_w) {
    int support = 0;
    while (f.milnor_dim(support) > 0) ++support;  // dims vanish above cd
    if (einf.max_filtration() - n + 1 < support + 1)
      throw ConfigError("cross_check_orders: window too short for the full tower");
    unsigned total = 0;
    for (int dd = 0; dd < support; ++dd)
      total += static_cast<unsigned>(expected_graded(f, profile, m, dd));
    rep.order_checked = true;
    rep.tower_log2 = ExtNat(total);
    rep.group_log2 =
        realize(witt_presentation(f), assemble_homotopy(f, profile, m)).log2_order();
  }
  return rep;
}

std::string RingExpr::str() const {
  std::string gens;
  for (const auto& g : generators) {
    if (!gens.empty()) gens += ",";
    gens += g.name + (g.invertible ? "^{+-1}" : "");
  }
  return coefficients + "[" + gens + "]/(" + relation + ")";
}

std::optional<RingExpr> ring_structure(const fields::Field& f,
                                       const pages::Profile& profile) {
  profile.validate();
  const auto& d = f.desc();
  bool all_infinite = profile.tail == pages::Profile::Tail::AllInfinite;
  for (const auto& v : profile.values) all_infinite = all_infinite && !v.finite();
  bool rho_cubed_zero = d.rho_nilpotence.finite() && d.rho_nilpotence.value() <= 3;
  bool low_cd2 = d.cd2.finite() && d.cd2.value() <= 1;
  bool odd_char = d.kind == fields::FieldKind::Finite;
  if (!(rho_cubed_zero || low_cd2 || odd_char || all_infinite)) return std::nullopt;
  RingExpr ring;
  ring.coefficients = "W(" + f.name() + ")";
  ring.generators = {{"eta", 0, 1, true}, {"sigma", 3, 4, false}, {"mu", 4, 5, false}};
  return ring;
}

std::optional<GroupExpr> nonperiodic_range(const fields::Field& f, int m, int n) {
  const auto& d = f.desc();
  if (!d.cd.finite()) return std::nullopt;
  if (n < std::max(3 * m + 5, 4 * m)) return std::nullopt;
  if (!(d.rho_nilpotence.finite() && d.rho_nilpotence.value() <= 3))
    return std::nullopt;  // without rho^3 = 0 the dichotomy is not certified
  // collapse is certified, so the eta-periodic answer is profile-independent
  return assemble_homotopy(f, pages::Profile::collapse(), m);
}

}  // namespace etass::witt
