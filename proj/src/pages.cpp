#include "etass/pages.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace etass::pages {

namespace {

std::string power(const char* sym, int e) {
  if (e == 0) return "";
  if (e == 1) return sym;
  return std::string(sym) + "^" + std::to_string(e);
}

std::string join_parts(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out.empty() ? "1" : out;
}

/* family label of the closed-form generator at cell (q, m) */
std::string monomial_label(bool kw, int q, int m) {
  if (kw) {
    int k = m / 2;
    return join_parts({power("eta", q - 3 * k), power("sqrtb", k)});
  }
  return e2_at_slice(*e2_generator_at(m), q).label();
}

}  // namespace

Profile Profile::collapse() { return Profile{}; }

Profile Profile::conjecture() {
  Profile p;
  p.tail = Tail::Arithmetic;
  return p;
}

Profile Profile::parse(const std::string& s) {
  if (s == "collapse") return collapse();
  if (s == "conjecture") return conjecture();
  const std::string prefix = "custom:";
  if (s.rfind(prefix, 0) != 0) throw ConfigError("unknown profile: " + s);
  std::string body = s.substr(prefix.size());
  Profile p;
  auto semi = body.find(';');
  if (semi != std::string::npos) {
    std::string tail = body.substr(semi + 1);
    if (tail == "inf")
      p.tail = Tail::AllInfinite;
    else if (tail == "arith")
      p.tail = Tail::Arithmetic;
    else
      throw ConfigError("unknown profile tail: " + tail);
    body = body.substr(0, semi);
  }
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok == "inf") {
      p.values.push_back(ExtNat::infinity());
    } else {
      try {
        p.values.push_back(ExtNat(static_cast<unsigned>(std::stoul(tok))));
      } catch (const std::exception&) {
        throw ConfigError("bad profile value: " + tok);
      }
    }
  }
  p.validate();
  return p;
}

std::string Profile::str() const {
  if (values.empty()) return tail == Tail::AllInfinite ? "collapse" : "conjecture";
  std::string out = "custom:";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].str();
  }
  out += tail == Tail::AllInfinite ? ";inf" : ";arith";
  return out;
}

ExtNat Profile::r(int k) const {
  if (k < 2) throw ConfigError("profile index k must be >= 2");
  std::size_t idx = static_cast<std::size_t>(k - 2);
  if (idx < values.size()) return values[idx];
  return tail == Tail::Arithmetic ? ExtNat(static_cast<unsigned>(k + 1))
                                  : ExtNat::infinity();
}

ExtNat Profile::page_for_stem(int m) const {
  if (m <= 0 || m % 4 != 0) throw ConfigError("page_for_stem: stem must be positive ≡ 0 mod 4");
  return r(nu2(m));
}

void Profile::validate() const {
  ExtNat prev(3);
  int k = 2;
  for (const auto& v : values) {
    if (v < ExtNat(3))
      throw ConfigError("profile value r_" + std::to_string(k) + " below 3");
    if (v < prev) throw ConfigError("profile values must be nondecreasing");
    prev = v;
    ++k;
  }
  if (tail == Tail::Arithmetic) {
    // first tail value is k+1; the explicit prefix must not exceed it, and an
    // infinite prefix value cannot be followed by finite tail values
    if (!prev.finite())
      throw ConfigError("profile: infinite value followed by an arithmetic tail");
    if (prev > ExtNat(static_cast<unsigned>(k + 1)))
      throw ConfigError("profile values must be nondecreasing into the arithmetic tail");
  }
}

std::string E2Generator::label() const {
  return join_parts({power("a1", a), power("a4", c), power("a5", d)});
}

std::optional<E2Generator> e2_generator_at(int stem) {
  if (stem < 0) return std::nullopt;
  E2Generator g;
  switch (stem % 4) {
    case 0:
      g.d = stem / 4;
      break;
    case 3:
      g.c = 1;
      g.d = (stem - 3) / 4;
      break;
    default:
      return std::nullopt;
  }
  return g;
}

E2Generator e2_at_slice(const E2Generator& g, int q) {
  E2Generator h = g;
  h.a = q - 4 * g.c - 5 * g.d;
  return h;
}

bool e2_stem_alive(int m, bool kw) {
  if (m < 0) return false;
  return kw ? m % 4 == 0 : (m % 4 == 0 || m % 4 == 3);
}

namespace {

struct CellHomology {
  gf2::Subquotient h;
  int expected = 0;
  bool tau0_ok = true;
};

CellHomology cell_homology(const e1::Chart& ch, int q, int m) {
  CellHomology out;
  const gf2::BitMatrix& d_out = ch.d1(q, m);
  const gf2::BitMatrix& d_in = ch.d1(q - 1, m + 1);
  out.h = gf2::subquotient_homology(d_in, d_out);
  bool alive = e2_stem_alive(m, ch.is_kw());
  out.expected = alive ? ch.field().milnor_dim(q - ch.weight()) : 0;
  if (out.expected > 0) {
    const e1::ChartCell& cell = ch.cell(q, m);
    auto off = cell.tag_offset(m);
    if (!off) {
      out.tau0_ok = false;
      return out;
    }
    gf2::Echelon seen(cell.dim());
    for (const auto& b : gf2::image_basis(d_in)) seen.insert(b);
    int added = 0;
    for (int t = 0; t < out.expected; ++t) {
      gf2::BitVec v(cell.dim());
      v.set(*off + t);
      if (!d_out.apply(v).zero()) {
        out.tau0_ok = false;  // tau^0 class is not even a cycle
        return out;
      }
      if (seen.insert(v)) ++added;
    }
    out.tau0_ok = added == out.expected;
  }
  return out;
}

}  // namespace

Page turn_first_page(const e1::Chart& chart) {
  if (chart.max_stem() < 1 || chart.max_filtration() < chart.weight() + 1)
    throw ConfigError("turn_first_page: chart too small for one unit of headroom");
  Page p;
  p.field_ = chart.field();
  p.n_ = chart.weight();
  p.max_stem_ = chart.max_stem() - 1;
  p.max_q_ = chart.max_filtration() - 1;
  p.kw_ = chart.is_kw();
  int height = p.max_q_ - p.n_ + 1;
  p.cells_.resize(static_cast<std::size_t>(height));
  for (int qi = 0; qi < height; ++qi) {
    auto& row = p.cells_[static_cast<std::size_t>(qi)];
    row.resize(static_cast<std::size_t>(p.max_stem_ + 1));
    for (int m = 0; m <= p.max_stem_; ++m) {
      int q = p.n_ + qi;
      CellHomology ch = cell_homology(chart, q, m);
      PageCell& cell = row[static_cast<std::size_t>(m)];
      cell.q = q;
      cell.m = m;
      cell.dim = ch.h.dim;
      cell.closed_form = ch.h.dim == ch.expected && ch.tau0_ok;
      if (!cell.closed_form) p.all_closed_form_ = false;
      if (cell.closed_form && ch.expected > 0) {
        std::string mono = monomial_label(p.kw_, q, m);
        if (mono == "1") mono.clear();
        auto milnor = p.field_.milnor_basis(q - p.n_);
        for (const auto& x : milnor.labels)
          cell.labels.push_back(join_parts({mono, x == "1" ? "" : x}));
      }
    }
  }
  return p;
}

const PageCell& Page::cell(int q, int m) const {
  if (q > max_q_ || m > max_stem_)
    throw HeadroomError("second-page cell (" + std::to_string(q) + "," +
                        std::to_string(m) + ") outside the trusted window");
  if (m < 0 || q < n_) return empty_;
  return cells_[static_cast<std::size_t>(q - n_)][static_cast<std::size_t>(m)];
}

E2Report verify_e2(const e1::Chart& chart) {
  E2Report rep;
  for (int q = chart.weight(); q <= chart.max_filtration() - 1; ++q)
    for (int m = 0; m <= chart.max_stem() - 1; ++m) {
      CellHomology ch = cell_homology(chart, q, m);
      ++rep.cells_checked;
      if (ch.h.dim != ch.expected || !ch.tau0_ok)
        rep.mismatches.push_back({q, m, ch.h.dim, ch.expected, ch.tau0_ok});
    }
  return rep;
}

ExtNat collapse_bound(const fields::FieldDescriptor& d) {
  if (d.cd2.finite()) return ExtNat(std::max(2u, d.cd2.value() + 1));
  if (d.rho_nilpotence.finite()) {
    unsigned t = d.rho_nilpotence.value();
    return ExtNat(t <= 3 ? 2 : t);  // d_r carries rho^r and every page has r >= 3
  }
  return ExtNat::infinity();
}

const EInfCell& EInfPage::cell(int q, int m) const {
  if (q > max_q_ || m > max_stem_)
    throw HeadroomError("E-infinity cell (" + std::to_string(q) + "," +
                        std::to_string(m) + ") outside the trusted window");
  if (m < 0 || q < n_) return empty_;
  return cells_[static_cast<std::size_t>(q - n_)][static_cast<std::size_t>(m)];
}

EInfPage run_to_einf(const Page& e2, const Profile& profile, bool strict) {
  profile.validate();
  EInfPage out;
  out.field_ = e2.field();
  out.n_ = e2.weight();
  out.max_stem_ = e2.max_stem();
  out.max_q_ = e2.max_filtration();
  out.profile_ = profile;
  const fields::Field& f = out.field_;
  const int n = out.n_, M = out.max_stem_, Q = out.max_q_;

  struct State {
    std::vector<gf2::BitVec> reps;
    gf2::Echelon boundary;
  };
  std::vector<std::vector<State>> st;
  int height = Q - n + 1;
  st.reserve(static_cast<std::size_t>(height));
  for (int qi = 0; qi < height; ++qi) {
    std::vector<State> row;
    row.reserve(static_cast<std::size_t>(M + 1));
    for (int m = 0; m <= M; ++m) {
      const PageCell& cell = e2.cell(n + qi, m);
      if (!cell.closed_form)
        throw InternalError("run_to_einf: second page deviates from its closed form at (" +
                            std::to_string(n + qi) + "," + std::to_string(m) + ")");
      int width = e2_stem_alive(m, e2.is_kw()) ? f.milnor_dim(qi) : 0;
      State s{{}, gf2::Echelon(width)};
      for (int t = 0; t < width; ++t) {
        gf2::BitVec v(width);
        v.set(t);
        s.reps.push_back(std::move(v));
      }
      row.push_back(std::move(s));
    }
    st.push_back(std::move(row));
  }
  auto state_at = [&](int q, int m) -> State& {
    return st[static_cast<std::size_t>(q - n)][static_cast<std::size_t>(m)];
  };

  int rstop = 2;
  if (!e2.is_kw()) {
    for (int m = 4; m <= M; m += 4) {
      ExtNat rk = profile.r(nu2(m));
      if (rk.finite()) rstop = std::max(rstop, static_cast<int>(rk.value()));
    }
  } else if (M >= 3) {
    out.notes_.push_back(
        "kw: every receiving stem is ≡ 3 mod 4 and vanishes on the second page; "
        "no higher differentials");
  }

  std::map<std::pair<int, int>, gf2::BitMatrix> rho_cache;
  auto rho_at = [&](int r, int deg) -> const gf2::BitMatrix& {
    auto key = std::make_pair(r, deg);
    auto it = rho_cache.find(key);
    if (it == rho_cache.end())
      it = rho_cache.emplace(key, f.rho_mul_matrix(r, deg)).first;
    return it->second;
  };

  for (int r = 3; r <= rstop; ++r) {
    bool exited = false;
    for (int m = 4; m <= M; m += 4) {
      if (profile.r(nu2(m)) != ExtNat(static_cast<unsigned>(r))) continue;
      for (int q = n; q <= Q; ++q) {
        State& src = state_at(q, m);
        if (src.reps.empty()) continue;
        bool tracked = q + r <= Q;
        State* tgt = tracked ? &state_at(q + r, m - 1) : nullptr;
        if (tgt && tgt->boundary.rank() != 0)
          throw InternalError("run_to_einf: receiving cell already has boundaries");
        const gf2::BitMatrix& rho = rho_at(r, q - n);
        int tdim = f.milnor_dim(q - n + r);
        gf2::BitMatrix a(tdim, static_cast<int>(src.reps.size()));
        std::vector<gf2::BitVec> imgs;
        for (std::size_t i = 0; i < src.reps.size(); ++i) {
          gf2::BitVec w = rho.apply(src.reps[i]);
          for (int bit : w.support()) a.set(bit, static_cast<int>(i));
          imgs.push_back(std::move(w));
        }
        int rank = gf2::rank(a);
        if (rank > 0) {
          out.log_.push_back({r, q, m, n, monomial_label(e2.is_kw(), q, m),
                              monomial_label(e2.is_kw(), q + r, m - 1), rank});
          if (!tracked) {
            exited = true;
            out.notes_.push_back("page " + std::to_string(r) + ": differential from (q=" +
                                 std::to_string(q) + ", m=" + std::to_string(m) +
                                 ") leaves the filtration window; its source kernel "
                                 "remains exact");
          }
        }
        std::vector<gf2::BitVec> newreps;
        for (const auto& combo : gf2::kernel_basis(a)) {
          gf2::BitVec acc(f.milnor_dim(q - n));
          for (int i : combo.support()) acc ^= src.reps[static_cast<std::size_t>(i)];
          newreps.push_back(std::move(acc));
        }
        src.reps = std::move(newreps);
        if (tgt) {
          for (const auto& w : imgs) tgt->boundary.insert(w);
          std::vector<gf2::BitVec> pruned;
          gf2::Echelon chosen(tdim);
          for (const auto& rep : tgt->reps) {
            gf2::BitVec red = tgt->boundary.reduce(rep);
            if (red.zero()) continue;
            gf2::BitVec indep = chosen.reduce(red);
            if (indep.zero()) continue;
            chosen.insert(red);
            pruned.push_back(red);
          }
          tgt->reps = std::move(pruned);
        }
      }
    }
    if (exited && strict)
      throw HeadroomError("page " + std::to_string(r) +
                          " differential leaves the filtration window (strict mode)");
    // permanence of the receiving-free columns: recompute that every stem
    // ≡ 3 mod 4 maps into a vanishing stem on this page
    bool any3 = false, target_zero = true;
    for (int m = 3; m <= M; m += 4)
      for (int q = n; q <= Q; ++q) {
        if (!state_at(q, m).reps.empty()) any3 = true;
        if (m - 1 >= 0 && q + r <= Q && !state_at(q + r, m - 1).reps.empty())
          target_zero = false;
      }
    if (any3) {
      if (!target_zero)
        throw InternalError("run_to_einf: a stem ≡ 2 mod 4 cell is unexpectedly nonzero");
      out.notes_.push_back("page " + std::to_string(r) +
                           ": stems ≡ 3 mod 4 are permanent (recomputed receiving stems "
                           "≡ 2 mod 4 vanish)");
    }
  }

  out.cells_.resize(static_cast<std::size_t>(height));
  for (int qi = 0; qi < height; ++qi) {
    auto& row = out.cells_[static_cast<std::size_t>(qi)];
    row.resize(static_cast<std::size_t>(M + 1));
    for (int m = 0; m <= M; ++m) {
      EInfCell& cell = row[static_cast<std::size_t>(m)];
      cell.q = n + qi;
      cell.m = m;
      cell.reps = st[static_cast<std::size_t>(qi)][static_cast<std::size_t>(m)].reps;
      const PageCell& base = e2.cell(n + qi, m);
      for (const auto& rep : cell.reps) {
        std::string lab;
        for (int t : rep.support()) {
          if (!lab.empty()) lab += "+";
          lab += base.labels[static_cast<std::size_t>(t)];
        }
        cell.labels.push_back(lab.empty() ? "0" : lab);
      }
    }
  }
  return out;
}

}  // namespace etass::pages
