#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "etass/json_io.hpp"
#include "etass/render.hpp"
#include "etass/verify.hpp"
#include "etass/witt.hpp"

namespace {

using namespace etass;

struct RunConfig {
  std::string field_name = "R";
  std::string profile_spec = "conjecture";
  int weight = 0;
  int max_stem = 16;
  int max_filtration = -1;  // derived from the profile when unset
  int prime_bound = 100;
  std::string format = "text";
  bool strict = false;
  std::string output;  // empty = stdout

  fields::Field field;
  pages::Profile profile;

  void resolve() {
    field = fields::Field::parse(field_name, prime_bound);
    profile = pages::Profile::parse(profile_spec);
    int reach = 0;  // longest differential leaving the requested stem range
    for (int m = 4; m <= max_stem; m += 4) {
      ExtNat r = profile.r(nu2(m));
      if (r.finite()) reach = std::max(reach, static_cast<int>(r.value()));
    }
    int required = weight + reach + 1;
    if (max_filtration < 0)
      max_filtration = required + 8;
    else if (max_filtration < required)
      throw ConfigError("max_filtration must be at least " + std::to_string(required) +
                        " (weight + longest profile differential in range + 1)");
  }
};

void add_config_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--field", cfg.field_name, "field name: C, R, Fq:<q>, Qp:<p>, Q, Qi");
  cmd->add_option("--profile", cfg.profile_spec,
                  "collapse | conjecture | custom:r2,r3,...;inf|;arith");
  cmd->add_option("--weight", cfg.weight, "weight of the computed column");
  cmd->add_option("--max-stem", cfg.max_stem, "largest stem reported")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-filtration", cfg.max_filtration,
                  "top of the filtration window (derived from the profile when unset)");
  cmd->add_option("--prime-bound", cfg.prime_bound,
                  "prime support bound for Q (default 100)");
  cmd->add_option("--output", cfg.output, "write to a file instead of stdout");
  cmd->add_flag("--strict", cfg.strict,
                "verification failures and window exits become errors");
}

void write_out(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw ConfigError("cannot open output file: " + cfg.output);
  out << text;
}

int cmd_compute(RunConfig& cfg, const std::string& format) {
  cfg.resolve();
  bool engine = cfg.field.milnor_enumerable(1);
  std::optional<pages::Page> p2;
  std::optional<pages::EInfPage> einf;
  if (engine) {
    e1::Chart chart = e1::Chart::sphere(cfg.field, cfg.weight, cfg.max_stem + 2,
                                        cfg.max_filtration + 1);
    if (cfg.strict) {
      pages::E2Report rep = pages::verify_e2(chart);
      if (!rep.ok()) {
        std::cerr << "second page deviates from the closed form in "
                  << rep.mismatches.size() << " cells\n";
        return 1;
      }
    }
    p2 = pages::turn_first_page(chart);
    einf = pages::run_to_einf(*p2, cfg.profile, cfg.strict);
  }

  witt::WittPresentation w = witt::witt_presentation(cfg.field);
  json_io::ComputeResult result;
  result.field = cfg.field.name();
  result.profile = cfg.profile.str();
  result.weight = cfg.weight;
  for (int m = -2; m <= cfg.max_stem; ++m) {
    witt::GroupExpr expr = witt::assemble_homotopy(cfg.field, cfg.profile, m);
    json_io::GroupLine line{m, expr.str(), std::nullopt};
    witt::GroupRealization real = witt::realize(w, expr);
    if (real.log2_order().finite()) line.realized = real.str();
    result.groups.push_back(std::move(line));
  }
  if (auto ring = witt::ring_structure(cfg.field, cfg.profile)) result.ring = ring->str();
  if (einf)
    for (const auto& rec : einf->log())
      result.differentials.push_back(
          {rec.page, rec.q, rec.m, rec.n, rec.source, rec.target});

  int status = 0;
  if (cfg.strict && engine && cfg.field.desc().kind != fields::FieldKind::RationalI) {
    for (int m = 0; m <= cfg.max_stem; ++m) {
      witt::OrderReport rep = witt::cross_check_orders(cfg.field, cfg.profile, m, *einf);
      if (!rep.ok()) {
        std::cerr << "order cross-check failed at stem " << m << "\n";
        status = 1;
      }
    }
  }

  if (format == "json") {
    write_out(cfg, json_io::emit(result));
    return status;
  }
  std::string text;
  if (p2) text += render::ascii_page(*p2, einf->log()) + "\n";
  if (einf) text += render::ascii_einf(*einf) + "\n";
  if (!engine)
    text += "engine charts are unavailable over " + cfg.field.name() +
            " (Milnor classes enumerable only in degree 0); groups come from the "
            "collapse formulas\n\n";
  text += "homotopy groups of the eta-periodic sphere over " + cfg.field.name() +
          " (profile " + cfg.profile.str() + ", weight-independent):\n";
  for (const auto& g : result.groups) {
    text += "  pi_" + std::to_string(g.m) + " = " + g.expr;
    if (g.realized) text += "   [" + *g.realized + "]";
    text += "\n";
  }
  if (result.ring)
    text += "ring structure: " + *result.ring + "\n";
  else
    text += "ring structure: not certified for this field/profile; the answer above "
            "is additive only\n";
  write_out(cfg, text);
  return status;
}

int cmd_chart(RunConfig& cfg, const std::string& format, const std::string& page,
              bool kw, int min_slice_opt, bool has_min_slice) {
  cfg.resolve();
  std::string text;
  if (page == "1") {
    int lo = has_min_slice ? min_slice_opt : -2;
    int hi = cfg.max_stem + 2;
    text = format == "svg" ? render::svg_generator_plane(cfg.max_stem, lo, hi, kw)
                           : render::ascii_generator_plane(cfg.max_stem, lo, hi, kw);
  } else {
    e1::Chart chart = kw ? e1::Chart::kw(cfg.field, cfg.weight, cfg.max_stem + 2,
                                         cfg.max_filtration + 1)
                         : e1::Chart::sphere(cfg.field, cfg.weight, cfg.max_stem + 2,
                                             cfg.max_filtration + 1);
    pages::Page p2 = pages::turn_first_page(chart);
    pages::EInfPage einf = pages::run_to_einf(p2, cfg.profile, cfg.strict);
    if (page == "2")
      text = format == "svg" ? render::svg_page(p2, einf.log())
                             : render::ascii_page(p2, einf.log());
    else
      text = format == "svg" ? render::svg_einf(einf) : render::ascii_einf(einf);
  }
  write_out(cfg, text);
  return 0;
}

int cmd_verify(const std::vector<std::string>& suites,
               const std::vector<std::string>& field_names, int max_stem,
               int max_filtration) {
  std::vector<fields::Field> fs;
  for (const auto& n : field_names) fs.push_back(fields::Field::parse(n));
  auto wants = [&](const std::string& s) {
    return suites.empty() || std::find(suites.begin(), suites.end(), s) != suites.end();
  };
  std::vector<verify::SuiteResult> results;
  if (suites.empty() && field_names.empty() && max_stem < 0) {
    results = verify::run_all();
  } else {
    int ms = max_stem < 0 ? 16 : max_stem;
    int mf = max_filtration < 0 ? ms + 10 : max_filtration;
    std::vector<fields::Field> chosen = fs.empty() ? verify::catalog_fields() : fs;
    std::vector<fields::Field> enumerable;
    for (const auto& f : chosen)
      if (f.milnor_enumerable(1)) enumerable.push_back(f);
    if (wants("d1d1")) results.push_back(verify::d1_squared(enumerable, ms, mf));
    if (wants("e2")) results.push_back(verify::e2_closed_form(enumerable, ms, mf));
    if (wants("kw")) results.push_back(verify::kw_consistency(60, ms, mf));
    if (wants("naturality"))
      results.push_back(
          verify::base_change_naturality({3, 5, 7}, ms, pages::Profile::conjecture()));
    if (wants("orders")) {
      std::vector<fields::Field> finite_w;
      for (const auto& f : enumerable) {
        auto kind = f.desc().kind;
        if (kind == fields::FieldKind::Complex || kind == fields::FieldKind::Finite ||
            kind == fields::FieldKind::Padic)
          finite_w.push_back(f);
      }
      results.push_back(verify::order_cross_checks(
          finite_w, {pages::Profile::collapse(), pages::Profile::conjecture()}, ms));
    }
    if (wants("periodicity"))
      results.push_back(verify::eta_periodicity(chosen, {-4, 0, 7}, ms));
  }
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed() ? "[PASS] " : "[FAIL] ") << r.summary() << "\n";
    all_ok = all_ok && r.passed();
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eta-periodic motivic sphere: slice spectral sequence engine"};
  app.require_subcommand(1);

  RunConfig cfg;
  CLI::App* compute = app.add_subcommand("compute", "run the pipeline and print groups");
  add_config_flags(compute, cfg);
  compute->add_option("--format", cfg.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  RunConfig chart_cfg;
  std::string page = "2";
  bool kw = false;
  int min_slice = -2;
  CLI::App* chart = app.add_subcommand("chart", "render a page of the chart");
  add_config_flags(chart, chart_cfg);
  chart->add_option("--format", chart_cfg.format, "text | svg")
      ->check(CLI::IsMember({"text", "svg"}));
  chart->add_option("--page", page, "1 (generator plane), 2, or inf")
      ->check(CLI::IsMember({"1", "2", "inf"}));
  chart->add_flag("--kw", kw, "chart the even-stem quotient instead of the sphere");
  CLI::Option* slice_opt =
      chart->add_option("--min-slice", min_slice, "lowest slice drawn on page 1");

  std::vector<std::string> suites, verify_fields;
  int verify_stem = -1, verify_filt = -1;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--suite", suites,
                         "d1d1 | e2 | kw | naturality | orders | periodicity")
      ->check(CLI::IsMember({"d1d1", "e2", "kw", "naturality", "orders", "periodicity"}));
  verify_cmd->add_option("--field", verify_fields, "restrict to these fields");
  verify_cmd->add_option("--max-stem", verify_stem, "window override for quick runs");
  verify_cmd->add_option("--max-filtration", verify_filt, "window override");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(cfg, cfg.format);
    if (chart->parsed())
      return cmd_chart(chart_cfg, chart_cfg.format, page, kw, min_slice,
                       slice_opt->count() > 0);
    return cmd_verify(suites, verify_fields, verify_stem, verify_filt);
  } catch (const etass::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
