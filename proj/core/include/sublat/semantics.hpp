#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sublat/algebra.hpp"
#include "sublat/classes.hpp"
#include "sublat/enumerate.hpp"
#include "sublat/formula.hpp"

namespace sublat {

struct Valuation {
  const FiniteAlgebra* algebra = nullptr;
  std::map<std::string, int> map;
};

/// Structural fold through the operation tables.  Throws ValidationError when
/// the formula uses a connective missing from the signature or an unassigned
/// variable.
int evaluate(const Formula& f, const Valuation& v);

struct Countermodel {
  ClassTag cls = ClassTag::sha;
  FiniteAlgebra algebra;
  std::map<std::string, int> valuation;
  Formula formula;
  int value = 0;  // != algebra.top
};

/// First class algebra (by size, canonical table order, then valuation
/// lexicographic on sorted variable names) that sends f somewhere below top.
std::optional<Countermodel> find_countermodel(const Formula& f, ClassTag cls, int max_size,
                                              const EnumerationCaps& caps = {});

struct EntailsResult {
  bool refuted = false;
  int max_size = 0;
  std::optional<Countermodel> countermodel;  // present iff refuted

  std::string verdict() const {
    return refuted ? "refuted" : ("no-countermodel-up-to(" + std::to_string(max_size) + ")");
  }
};

/// Semi-decision for Gamma |= f over the class: searches for a valuation with
/// h(Gamma) = {top} and h(f) != top.  Absence of a countermodel is reported as
/// a bound, never as theoremhood.
EntailsResult entails(const std::vector<Formula>& hypotheses, const Formula& goal, ClassTag cls, int max_size,
                      const EnumerationCaps& caps = {});

/// True iff the scheme evaluates to top under every assignment of its
/// metavariables.  Used by the soundness scans.
bool scheme_valid_in(const Formula& scheme, const FiniteAlgebra& algebra);

/// Rule preservation on one algebra: MP (a=1, a->b=1 => b=1),
/// T (a=1 => b->a=1), C (d->a=1, d->b=1 => d->(a/\b)=1).
bool mp_preserves_top(const FiniteAlgebra& algebra);
bool t_preserves_top(const FiniteAlgebra& algebra);
bool c_preserves_top(const FiniteAlgebra& algebra);

}  // namespace sublat
