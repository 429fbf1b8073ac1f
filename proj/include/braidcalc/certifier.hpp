#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidcalc/b3.hpp"
#include "braidcalc/braid_word.hpp"
#include "braidcalc/templates.hpp"

namespace braidcalc {

struct FamilyParams {
  int p = 0;
  int q = 0;
  int r = 0;

  /// Violated conditions among p, q, r > 1, p + 1 != q, q != r.
  std::vector<std::string> violations() const;
  bool admissible() const { return violations().empty(); }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// TX+ = s1^{2p+1} s2^{2r} s1^{2q} s2^-1 and TX- = s1^{2p+1} s2^-1 s1^{2q} s2^{2r}.
std::pair<BraidWord, BraidWord> family_words(const FamilyParams& params);

/// The block words P, R, Q that carry the family pair on the negative flype.
BraidingAssignment family_assignment(const FamilyParams& params);

/// The fixed link assignment s1^3, s2^4, s1^-5 to P, R, Q used to show the
/// negative flype template cannot be transversal.
BraidingAssignment obstruction_assignment();

struct ObstructionCheck {
  BraidingAssignment assignment;
  BraidWord plus_word{3};
  BraidWord minus_word{3};
  std::vector<ComponentBetaDelta> component_table;
  bool swap_detected = false;
};

struct CertificationReport {
  FamilyParams params;
  BraidWord tx_plus{3};
  BraidWord tx_minus{3};

  bool conditions_ok = false;
  std::vector<std::string> condition_violations;
  bool template_agrees = false;  // direct construction == flype instantiation
  int beta_plus = 0;
  int beta_minus = 0;
  int beta_expected = 0;  // 2p + 2q + 2r - 3
  bool beta_formula_ok = false;
  std::string alexander_plus;
  std::string alexander_minus;
  bool alexander_equal = false;
  b3::NormalForm normal_form_plus;
  b3::NormalForm normal_form_minus;
  bool conjugacy_distinct = false;
  std::string class_plus;
  std::string class_minus;
  bool not_unknot = false;
  bool not_torus = false;
  bool kolee_single_sign = false;
  ObstructionCheck obstruction;

  bool certified = false;
  std::vector<std::string> failures;

  /// "CERTIFIED_NOT_TRANSVERSALLY_SIMPLE" or "FAILED(<reasons>)".
  std::string verdict() const;
};

/// Runs every check (no short-circuit) and never throws for bad parameters.
CertificationReport certify(const FamilyParams& params);

/// Admissible triples with 2 <= p,q,r <= max, ordered by (p, q, r).
std::vector<FamilyParams> admissible_triples(int p_max, int q_max, int r_max);

/// Certifies every admissible triple. `sweep` spreads the triples over
/// OpenMP threads; `sweep_serial` is the reference. Output order is the
/// order of admissible_triples either way.
std::vector<CertificationReport> sweep(int p_max, int q_max, int r_max);
std::vector<CertificationReport> sweep_serial(int p_max, int q_max, int r_max);

}  // namespace braidcalc
