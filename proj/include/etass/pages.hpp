#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etass/e1.hpp"

namespace etass::pages {

/* Differential-length profile {r_k}, k >= 2: page numbers of the
   d_{r_k} : stem 2^k -> stem 2^k - 1 family, extended to all stems by
   2-adic valuation. Explicit prefix plus a tail rule. */
struct Profile {
  enum class Tail { AllInfinite, Arithmetic };  // Arithmetic: r_k = k+1
  std::vector<ExtNat> values;                   // r_2, r_3, ...
  Tail tail = Tail::AllInfinite;

  static Profile collapse();    // every r_k infinite
  static Profile conjecture();  // r_k = k+1
  /* "collapse" | "conjecture" | "custom:r2,r3,...[;inf|;arith]" */
  static Profile parse(const std::string& s);
  std::string str() const;

  ExtNat r(int k) const;  // k >= 2
  /* page of the differential leaving stem m (m positive, ≡ 0 mod 4) */
  ExtNat page_for_stem(int m) const;
  void validate() const;  // values in {3,4,...,inf}, nondecreasing, inf absorbing
  friend bool operator==(const Profile&, const Profile&) = default;
};

/* Monomial alpha1^a alpha4^c alpha5^d on the second page. */
struct E2Generator {
  int a = 0;
  int c = 0;  // 0 or 1
  int d = 0;
  int slice() const { return a + 4 * c + 5 * d; }
  int stem() const { return 3 * c + 4 * d; }
  std::string label() const;
  friend bool operator==(const E2Generator&, const E2Generator&) = default;
};
/* normalized (a = 0) generator; stems are exactly >= 0 and ≡ 0,3 mod 4 */
std::optional<E2Generator> e2_generator_at(int stem);
E2Generator e2_at_slice(const E2Generator& g, int q);

/* Whether the closed-form second page is nonzero in this stem. */
bool e2_stem_alive(int m, bool kw);

/* Second page in closed-form coordinates: cell (q, m) carries k^M_{q-n}
   on alive stems. dim is the honestly computed homology dimension;
   closed_form records whether it matched (and was tau^0-representable). */
struct PageCell {
  int q = 0;
  int m = 0;
  int dim = 0;
  bool closed_form = true;
  std::vector<std::string> labels;
};

class Page {
 public:
  const fields::Field& field() const { return field_; }
  int weight() const { return n_; }
  int max_stem() const { return max_stem_; }      // trusted stem range
  int max_filtration() const { return max_q_; }   // trusted filtration range
  bool is_kw() const { return kw_; }
  int page_number() const { return 2; }
  bool all_closed_form() const { return all_closed_form_; }
  const PageCell& cell(int q, int m) const;

 private:
  friend Page turn_first_page(const e1::Chart&);
  fields::Field field_;
  int n_ = 0, max_stem_ = 0, max_q_ = 0;
  bool kw_ = false;
  bool all_closed_form_ = true;
  std::vector<std::vector<PageCell>> cells_;  // [q - n][m]
  PageCell empty_;
};

/* Cellwise homology of the d1 complex, relabeled onto E2 monomials where the
   closed form matches. Trusted window is one stem and one filtration short of
   the chart's. */
Page turn_first_page(const e1::Chart& chart);

struct E2CheckLine {
  int q = 0, m = 0;
  int computed = 0, expected = 0;
  bool tau0_ok = true;
};
struct E2Report {
  int cells_checked = 0;
  std::vector<E2CheckLine> mismatches;
  bool ok() const { return mismatches.empty(); }
};
/* Independent comparison of every computed E2 cell against the closed form. */
E2Report verify_e2(const e1::Chart& chart);

/* First page from which no further differentials can be nonzero, certified a
   priori: cd2-based when cd2 is finite, rho-nilpotence-based otherwise. */
ExtNat collapse_bound(const fields::FieldDescriptor& d);

struct DiffRecord {
  int page = 0;
  int q = 0, m = 0, n = 0;  // source tri-degree
  std::string source, target;
  int rank = 0;
  friend bool operator==(const DiffRecord&, const DiffRecord&) = default;
};

struct EInfCell {
  int q = 0, m = 0;
  std::vector<gf2::BitVec> reps;  // second-page coordinates (k^M_{q-n})
  std::vector<std::string> labels;
  int dim() const { return static_cast<int>(reps.size()); }
};

class EInfPage {
 public:
  const fields::Field& field() const { return field_; }
  int weight() const { return n_; }
  int max_stem() const { return max_stem_; }
  int max_filtration() const { return max_q_; }
  const Profile& profile() const { return profile_; }
  const EInfCell& cell(int q, int m) const;
  const std::vector<DiffRecord>& log() const { return log_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  friend EInfPage run_to_einf(const Page&, const Profile&, bool);
  fields::Field field_;
  int n_ = 0, max_stem_ = 0, max_q_ = 0;
  Profile profile_;
  std::vector<std::vector<EInfCell>> cells_;  // [q - n][m]
  std::vector<DiffRecord> log_;
  std::vector<std::string> notes_;
  EInfCell empty_;
};

/* Honest page iteration: at each page of the profile, the active differential
   matrices (rho-power multiplications in second-page coordinates) are applied
   and homology is taken via representative/boundary tracking. strict = throw
   HeadroomError when a differential's target leaves the filtration window
   (otherwise a note is recorded; in-window cells stay exact either way). */
EInfPage run_to_einf(const Page& e2, const Profile& profile, bool strict = false);

}  // namespace etass::pages
