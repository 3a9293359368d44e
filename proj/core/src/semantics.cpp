#include "sublat/semantics.hpp"

#include <set>

namespace sublat {

int evaluate(const Formula& f, const Valuation& v) {
  const FiniteAlgebra& a = *v.algebra;
  switch (f.kind()) {
    case Conn::Var: {
      auto it = v.map.find(f.name());
      if (it == v.map.end()) throw ValidationError("evaluate: unassigned variable " + f.name());
      return it->second;
    }
    case Conn::Imp:
      return a.imp(evaluate(f.left(), v), evaluate(f.right(), v));
    case Conn::And:
      if (!a.meet) throw ValidationError("evaluate: /\\ is not in the signature");
      return (*a.meet)(evaluate(f.left(), v), evaluate(f.right(), v));
    case Conn::Or:
      if (!a.join) throw ValidationError("evaluate: \\/ is not in the signature");
      return (*a.join)(evaluate(f.left(), v), evaluate(f.right(), v));
    case Conn::Not:
      if (!a.neg) throw ValidationError("evaluate: ~ is not in the signature");
      return (*a.neg)(evaluate(f.left(), v));
  }
  throw ValidationError("evaluate: malformed formula");
}

namespace {

// Runs fn on every assignment of the given variables, lexicographic in the
// sorted variable order; stops early when fn returns false.
template <typename Fn>
bool for_each_valuation(const std::vector<std::string>& vars, const FiniteAlgebra& algebra, Fn&& fn) {
  Valuation v;
  v.algebra = &algebra;
  std::vector<int> pick(vars.size(), 0);
  while (true) {
    for (size_t i = 0; i < vars.size(); ++i) v.map[vars[i]] = pick[i];
    if (!fn(v)) return false;
    int k = static_cast<int>(pick.size()) - 1;
    while (k >= 0 && pick[k] == algebra.size - 1) pick[k--] = 0;
    if (k < 0) return true;
    ++pick[k];
  }
}

}  // namespace

std::optional<Countermodel> find_countermodel(const Formula& f, ClassTag cls, int max_size,
                                              const EnumerationCaps& caps) {
  const std::vector<std::string> vars = variables(f);
  for (int n = 1; n <= max_size; ++n) {
    for (const FiniteAlgebra& algebra : enumerate_class(n, cls, /*up_to_iso=*/true, caps)) {
      std::optional<Countermodel> found;
      for_each_valuation(vars, algebra, [&](const Valuation& v) {
        const int value = evaluate(f, v);
        if (value != algebra.top) {
          found = Countermodel{cls, algebra, v.map, f, value};
          return false;
        }
        return true;
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

EntailsResult entails(const std::vector<Formula>& hypotheses, const Formula& goal, ClassTag cls, int max_size,
                      const EnumerationCaps& caps) {
  std::set<std::string> var_set;
  for (const Formula& h : hypotheses)
    for (const std::string& name : variables(h)) var_set.insert(name);
  for (const std::string& name : variables(goal)) var_set.insert(name);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());

  EntailsResult result;
  result.max_size = max_size;
  for (int n = 1; n <= max_size && !result.refuted; ++n) {
    for (const FiniteAlgebra& algebra : enumerate_class(n, cls, /*up_to_iso=*/true, caps)) {
      for_each_valuation(vars, algebra, [&](const Valuation& v) {
        for (const Formula& h : hypotheses)
          if (evaluate(h, v) != algebra.top) return true;
        const int value = evaluate(goal, v);
        if (value != algebra.top) {
          result.refuted = true;
          result.countermodel = Countermodel{cls, algebra, v.map, goal, value};
          return false;
        }
        return true;
      });
      if (result.refuted) break;
    }
  }
  return result;
}

bool scheme_valid_in(const Formula& scheme, const FiniteAlgebra& algebra) {
  return for_each_valuation(variables(scheme), algebra,
                            [&](const Valuation& v) { return evaluate(scheme, v) == algebra.top; });
}

bool mp_preserves_top(const FiniteAlgebra& algebra) {
  for (int b = 0; b < algebra.size; ++b)
    if (algebra.imp(algebra.top, b) == algebra.top && b != algebra.top) return false;
  return true;
}

bool t_preserves_top(const FiniteAlgebra& algebra) {
  for (int b = 0; b < algebra.size; ++b)
    if (algebra.imp(b, algebra.top) != algebra.top) return false;
  return true;
}

bool c_preserves_top(const FiniteAlgebra& algebra) {
  if (!algebra.meet) return false;
  for (int d = 0; d < algebra.size; ++d)
    for (int a = 0; a < algebra.size; ++a) {
      if (algebra.imp(d, a) != algebra.top) continue;
      for (int b = 0; b < algebra.size; ++b)
        if (algebra.imp(d, b) == algebra.top && algebra.imp(d, (*algebra.meet)(a, b)) != algebra.top)
          return false;
    }
  return true;
}

}  // namespace sublat
