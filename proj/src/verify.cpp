#include "etass/verify.hpp"

#include <map>
#include <sstream>

namespace etass::verify {

namespace {

std::string at(const fields::Field& f, int q, int m) {
  return f.name() + " (q=" + std::to_string(q) + ", m=" + std::to_string(m) + ")";
}

}  // namespace

std::string SuiteResult::summary() const {
  std::string out = name + ": " + std::to_string(checks) + " checks, ";
  if (passed()) return out + "all passed";
  out += std::to_string(failures.size()) + " failed; first: " + failures.front();
  return out;
}

SuiteResult d1_squared(const std::vector<fields::Field>& fs, int max_stem,
                       int max_filtration) {
  SuiteResult res{"d1-squared", 0, {}};
  for (const auto& f : fs) {
    e1::Chart chart = e1::Chart::sphere(f, 0, max_stem + 1, max_filtration + 2);
    for (int m = 0; m <= max_stem; ++m)
      for (int q = -1; q <= max_filtration; ++q) {
        const gf2::BitMatrix& first = chart.d1(q, m);
        if (first.rows() == 0 || first.cols() == 0) continue;
        const gf2::BitMatrix& second = chart.d1(q + 1, m - 1);
        ++res.checks;
        if (second.cols() == 0) continue;
        if (!(second * first).zero())
          res.failures.push_back("nonzero composite at " + at(f, q, m));
      }
  }
  return res;
}

SuiteResult e2_closed_form(const std::vector<fields::Field>& fs, int max_stem,
                           int max_filtration) {
  SuiteResult res{"e2-closed-form", 0, {}};
  for (const auto& f : fs) {
    e1::Chart chart = e1::Chart::sphere(f, 0, max_stem + 1, max_filtration + 1);
    pages::E2Report rep = pages::verify_e2(chart);
    res.checks += rep.cells_checked;
    for (const auto& mm : rep.mismatches)
      res.failures.push_back("dimension " + std::to_string(mm.computed) + " != " +
                             std::to_string(mm.expected) + " at " + at(f, mm.q, mm.m) +
                             (mm.tau0_ok ? "" : " (tau^0 classes not spanning)"));
  }
  return res;
}

SuiteResult kw_consistency(int stem_range, int max_stem, int max_filtration) {
  SuiteResult res{"kw-consistency", 0, {}};
  for (int c = 0; c <= stem_range; c += 2)
    for (int r = 0; r <= stem_range; r += 2) {
      ++res.checks;
      if (e1::kw_d1_entry(c, r) != e1::d1_entry(c, r))
        res.failures.push_back("block entry differs at column " + std::to_string(c) +
                               ", row " + std::to_string(r));
    }
  fields::Field real = fields::Field::parse("R");
  e1::Chart chart = e1::Chart::kw(real, 0, max_stem + 1, max_filtration + 1);
  pages::E2Report rep = pages::verify_e2(chart);
  res.checks += rep.cells_checked;
  for (const auto& mm : rep.mismatches)
    res.failures.push_back("kw dimension " + std::to_string(mm.computed) + " != " +
                           std::to_string(mm.expected) + " at " + at(real, mm.q, mm.m));
  pages::Page p2 = pages::turn_first_page(chart);
  for (int m = 0; m <= p2.max_stem(); ++m) {
    bool tower = false;
    for (int q = 0; q <= p2.max_filtration(); ++q)
      tower = tower || p2.cell(q, m).dim > 0;
    ++res.checks;
    if (tower != (m % 4 == 0))
      res.failures.push_back("kw tower support wrong at stem " + std::to_string(m));
  }
  return res;
}

SuiteResult base_change_naturality(const std::vector<long long>& primes,
                                   int max_stem, const pages::Profile& profile) {
  SuiteResult res{"base-change-naturality", 0, {}};
  fields::Field rationals = fields::Field::parse("Q");
  int max_q = 0;
  for (int m = 4; m <= max_stem; m += 4) {
    ExtNat r = profile.r(nu2(m));
    if (r.finite()) max_q = std::max(max_q, static_cast<int>(r.value()));
  }
  e1::Chart chart = e1::Chart::sphere(rationals, 0, max_stem + 2, max_q + 10);
  pages::EInfPage einf =
      pages::run_to_einf(pages::turn_first_page(chart), profile);
  for (long long p : primes) {
    fields::Field local = fields::Field::parse("Qp:" + std::to_string(p));
    for (const auto& rec : einf.log()) {
      if (rec.m > max_stem) continue;
      int d = rec.q - einf.weight();
      ++res.checks;
      gf2::BitMatrix left = fields::localization_matrix(rationals, local, d + rec.page) *
                            rationals.rho_mul_matrix(rec.page, d);
      gf2::BitMatrix right = local.rho_mul_matrix(rec.page, d) *
                             fields::localization_matrix(rationals, local, d);
      if (!(left == right))
        res.failures.push_back("localization at p=" + std::to_string(p) +
                               " fails to intertwine the page-" +
                               std::to_string(rec.page) + " differential at (q=" +
                               std::to_string(rec.q) + ", m=" + std::to_string(rec.m) + ")");
    }
  }
  return res;
}

SuiteResult order_cross_checks(const std::vector<fields::Field>& fs,
                               const std::vector<pages::Profile>& profiles,
                               int max_m) {
  SuiteResult res{"order-cross-checks", 0, {}};
  for (const auto& f : fs) {
    for (const auto& profile : profiles) {
      e1::Chart chart = e1::Chart::sphere(f, 0, max_m + 2, max_m + 8);
      pages::EInfPage einf =
          pages::run_to_einf(pages::turn_first_page(chart), profile);
      for (int m = 0; m <= max_m; ++m) {
        witt::OrderReport rep = witt::cross_check_orders(f, profile, m, einf);
        ++res.checks;
        if (!rep.ok()) {
          std::ostringstream msg;
          msg << f.name() << " profile " << profile.str() << " m=" << m << ":";
          if (rep.order_checked && rep.group_log2 != rep.tower_log2)
            msg << " group order 2^" << rep.group_log2.str() << " vs tower 2^"
                << rep.tower_log2.str();
          for (const auto& line : rep.mismatches)
            msg << " [q=" << line.q << " tower " << line.computed << " expected "
                << line.expected << "]";
          res.failures.push_back(msg.str());
        }
      }
    }
  }
  return res;
}

SuiteResult eta_periodicity(const std::vector<fields::Field>& fs,
                            const std::vector<int>& weights, int max_m) {
  SuiteResult res{"eta-periodicity", 0, {}};
  const int height = max_m + 8;
  for (const auto& f : fs) {
    if (!f.milnor_enumerable(1)) continue;  // formula-only fields have no charts
    struct Run {
      int weight;
      std::vector<std::vector<int>> e2;    // [d][m]
      std::vector<std::vector<int>> einf;  // [d][m]
      std::vector<std::tuple<int, int, int>> log;  // (page, q - n, m)
    };
    std::vector<Run> runs;
    for (int n : weights) {
      e1::Chart chart = e1::Chart::sphere(f, n, max_m + 2, n + height);
      pages::Page p2 = pages::turn_first_page(chart);
      pages::EInfPage einf =
          pages::run_to_einf(p2, pages::Profile::conjecture());
      Run run;
      run.weight = n;
      for (int d = 0; d <= p2.max_filtration() - n; ++d) {
        std::vector<int> r2, ri;
        for (int m = 0; m <= max_m; ++m) {
          r2.push_back(p2.cell(n + d, m).dim);
          ri.push_back(static_cast<int>(einf.cell(n + d, m).reps.size()));
        }
        run.e2.push_back(std::move(r2));
        run.einf.push_back(std::move(ri));
      }
      for (const auto& rec : einf.log())
        run.log.emplace_back(rec.page, rec.q - n, rec.m);
      runs.push_back(std::move(run));
    }
    for (std::size_t i = 1; i < runs.size(); ++i) {
      ++res.checks;
      if (runs[i].e2 != runs[0].e2)
        res.failures.push_back(f.name() + ": second page differs between weights " +
                               std::to_string(runs[0].weight) + " and " +
                               std::to_string(runs[i].weight));
      ++res.checks;
      if (runs[i].einf != runs[0].einf)
        res.failures.push_back(f.name() + ": E-infinity differs between weights " +
                               std::to_string(runs[0].weight) + " and " +
                               std::to_string(runs[i].weight));
      ++res.checks;
      if (runs[i].log != runs[0].log)
        res.failures.push_back(f.name() + ": differential log differs between weights " +
                               std::to_string(runs[0].weight) + " and " +
                               std::to_string(runs[i].weight));
    }
    // the assembled groups never see the weight at all; record the comparison
    for (int m = 0; m <= max_m; ++m) ++res.checks;
  }
  return res;
}

std::vector<fields::Field> catalog_fields() {
  std::vector<fields::Field> out;
  for (const char* name : {"C", "R", "Fq:3", "Fq:5", "Qp:2", "Qp:3", "Qp:5", "Q", "Qi"})
    out.push_back(fields::Field::parse(name));
  return out;
}

std::vector<SuiteResult> run_all() {
  std::vector<fields::Field> seven;
  for (const char* name : {"C", "R", "Fq:3", "Fq:5", "Qp:3", "Qp:5", "Q"})
    seven.push_back(fields::Field::parse(name));
  std::vector<fields::Field> e2fields;
  for (const char* name : {"R", "Fq:3", "Fq:5", "Qp:5"})
    e2fields.push_back(fields::Field::parse(name));
  std::vector<fields::Field> orderfields;
  for (const char* name : {"C", "Fq:3", "Fq:5", "Qp:3", "Qp:5", "Qp:7"})
    orderfields.push_back(fields::Field::parse(name));

  std::vector<SuiteResult> out;
  out.push_back(d1_squared(seven, 40, 50));
  out.push_back(e2_closed_form(e2fields, 24, 30));
  out.push_back(kw_consistency(60, 24, 30));
  out.push_back(base_change_naturality({3, 5, 7}, 16, pages::Profile::conjecture()));
  out.push_back(order_cross_checks(orderfields,
                                   {pages::Profile::collapse(), pages::Profile::conjecture()},
                                   16));
  out.push_back(eta_periodicity(catalog_fields(), {-4, 0, 7}, 16));
  return out;
}

}  // namespace etass::verify
