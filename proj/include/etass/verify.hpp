#pragma once

#include <string>
#include <vector>

#include "etass/e1.hpp"
#include "etass/pages.hpp"
#include "etass/witt.hpp"

namespace etass::verify {

struct SuiteResult {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
  std::string summary() const;
};

/* every composite of consecutive first-page differentials vanishes */
SuiteResult d1_squared(const std::vector<fields::Field>& fs, int max_stem,
                       int max_filtration);

/* second-page dimensions follow the closed form k^M[a1^{±1},a4,a5]/(a4^2) */
SuiteResult e2_closed_form(const std::vector<fields::Field>& fs, int max_stem,
                           int max_filtration);

/* the sphere differential block restricted to even generator stems equals the
   kw block, and kw second-page towers over R occupy exactly stems ≡ 0 mod 4 */
SuiteResult kw_consistency(int stem_range, int max_stem, int max_filtration);

/* localization k^M(Q) -> k^M(Q_p) intertwines every logged differential */
SuiteResult base_change_naturality(const std::vector<long long>& primes,
                                   int max_stem, const pages::Profile& profile);

/* realized group orders match E-infinity tower orders stem by stem */
SuiteResult order_cross_checks(const std::vector<fields::Field>& fs,
                               const std::vector<pages::Profile>& profiles,
                               int max_m);

/* second page, E-infinity page, and differential log are weight-independent */
SuiteResult eta_periodicity(const std::vector<fields::Field>& fs,
                            const std::vector<int>& weights, int max_m);

/* catalog fields every suite defaults to */
std::vector<fields::Field> catalog_fields();

/* all suites at their acceptance windows, in a fixed order */
std::vector<SuiteResult> run_all();

}  // namespace etass::verify
