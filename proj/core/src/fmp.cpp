#include "sublat/fmp.hpp"

#include <algorithm>
#include <set>

#include "sublat/pairs.hpp"

namespace sublat {

namespace {

bool arrow_only(const Formula& f) {
  switch (f.kind()) {
    case Conn::Var: return true;
    case Conn::Imp: return arrow_only(f.left()) && arrow_only(f.right());
    default: return false;
  }
}

bool uses_neg(const Formula& f) {
  switch (f.kind()) {
    case Conn::Var: return false;
    case Conn::Not: return true;
    default: return uses_neg(f.left()) || uses_neg(f.right());
  }
}

// position of x in the sorted carrier
int pos_of(const std::vector<int>& carrier, int x) {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), x);
  if (it == carrier.end() || *it != x) throw Error("internal: element escaped the shrunk carrier");
  return static_cast<int>(it - carrier.begin());
}

// checks ~ is x -> bottom so the shrunk algebra can re-derive it
void require_derived_neg(const FiniteAlgebra& a) {
  if (!a.neg) return;
  if (!a.bottom) throw ValidationError("fmp shrink: ~ present but no bottom");
  for (int x = 0; x < a.size; ++x)
    if ((*a.neg)(x) != a.imp(x, *a.bottom))
      throw ValidationError("fmp shrink: ~ is not the derived x -> 0");
}

std::vector<int> subformula_values(const Countermodel& cm) {
  Valuation v{&cm.algebra, cm.valuation};
  std::set<int> values;
  for (const Formula& s : subformulas(cm.formula)) values.insert(evaluate(s, v));
  return {values.begin(), values.end()};
}

}  // namespace

ShrinkResult fmp_shrink_sha(const Countermodel& cm, const RepresentationCaps& caps) {
  if (!check_sha(cm.algebra).member) throw ValidationError("fmp_shrink_sha: algebra is not a sub-Hilbert algebra");
  if (!arrow_only(cm.formula)) throw ValidationError("fmp_shrink_sha: formula must use -> only");

  UpsetAlgebra ua = build_upset_algebra(cm.algebra, FilterKind::implicative, caps);
  const FiniteAlgebra& hat = ua.algebra;

  // image of the valuation under j, evaluated in the upset algebra
  Valuation v{&cm.algebra, cm.valuation};
  Valuation w{&hat, {}};
  for (const auto& [name, value] : cm.valuation) w.map[name] = ua.j[value];

  std::set<int> x_set;
  for (const Formula& s : subformulas(cm.formula)) {
    const int in_hat = evaluate(s, w);
    if (in_hat != ua.j[evaluate(s, v)]) throw Error("internal: j does not commute with the formula");
    x_set.insert(in_hat);
  }
  const std::vector<int> x(x_set.begin(), x_set.end());

  FiniteLattice hat_lattice = underlying_lattice(hat);
  const std::vector<int> b = generated_sublattice(hat_lattice, x, /*bounded=*/true);
  std::vector<int> box_hat = box_set(hat);
  std::vector<int> d;
  std::set_intersection(b.begin(), b.end(), box_hat.begin(), box_hat.end(), std::back_inserter(d));

  FiniteLattice shrunk_lattice = lattice_from_poset(restrict_poset(hat_lattice.poset, b));
  std::vector<int> d_positions;
  for (int e : d) d_positions.push_back(pos_of(b, e));
  FiniteAlgebra shrunk = build_implication({shrunk_lattice, d_positions});

  ShrinkResult out;
  out.carrier_size = static_cast<int>(b.size());
  // inner -> must match the ambient one on X (the subformula images)
  for (int ea : x)
    for (int eb : x)
      if (x_set.count(hat.imp(ea, eb))) {
        if (shrunk.imp(pos_of(b, ea), pos_of(b, eb)) != pos_of(b, hat.imp(ea, eb)))
          throw Error("internal: shrunk residuum disagrees on the subformula images");
        ++out.residuum_agreements;
      }

  Countermodel shrunk_cm;
  shrunk_cm.cls = ClassTag::srl;
  shrunk_cm.algebra = shrunk;
  shrunk_cm.formula = cm.formula;
  for (const auto& [name, value] : cm.valuation) shrunk_cm.valuation[name] = pos_of(b, ua.j[value]);
  Valuation v2{&shrunk_cm.algebra, shrunk_cm.valuation};
  shrunk_cm.value = evaluate(cm.formula, v2);
  if (shrunk_cm.value != pos_of(b, evaluate(cm.formula, w)) || shrunk_cm.value == shrunk.top)
    throw Error("internal: shrink did not preserve the falsifying value");
  out.cm = std::move(shrunk_cm);
  return out;
}

namespace {

// shared by the srl and srlbs shrinks once carrier + designated are fixed;
// audit_scope is where the inner -> is guaranteed to agree (the subformula
// values for the srl cut, the whole carrier for the broad-sense one)
ShrinkResult cut_and_audit(const Countermodel& cm, const std::vector<int>& carrier, const std::vector<int>& d,
                           const std::vector<int>& audit_scope, bool broad_sense) {
  const FiniteAlgebra& a = cm.algebra;
  FiniteLattice ambient = underlying_lattice(a);
  FiniteLattice shrunk_lattice = lattice_from_poset(restrict_poset(ambient.poset, carrier));
  std::vector<int> d_positions;
  for (int e : d) d_positions.push_back(pos_of(carrier, e));
  FiniteAlgebra shrunk = build_implication({shrunk_lattice, d_positions});
  if (a.neg) shrunk = with_derived_neg(shrunk);

  ShrinkResult out;
  out.carrier_size = static_cast<int>(carrier.size());

  std::set<int> scope_set(audit_scope.begin(), audit_scope.end());
  std::set<int> in_carrier(carrier.begin(), carrier.end());
  for (int ea : audit_scope)
    for (int eb : audit_scope) {
      if (scope_set.count(a.imp(ea, eb))) {
        if (shrunk.imp(pos_of(carrier, ea), pos_of(carrier, eb)) != pos_of(carrier, a.imp(ea, eb)))
          throw Error("internal: shrunk residuum disagrees with the ambient one");
        ++out.residuum_agreements;
      }
    }
  if (broad_sense)
    for (int ea : carrier)
      for (int eb : carrier)
        if (in_carrier.count((*a.join)(ea, eb))) {
          if ((*shrunk.join)(pos_of(carrier, ea), pos_of(carrier, eb)) != pos_of(carrier, (*a.join)(ea, eb)))
            throw Error("internal: shrunk join disagrees with the ambient one");
          ++out.join_agreements;
        }

  Countermodel shrunk_cm;
  shrunk_cm.cls = broad_sense ? ClassTag::srlbs : ClassTag::srl;
  shrunk_cm.algebra = shrunk;
  shrunk_cm.formula = cm.formula;
  for (const auto& [name, value] : cm.valuation) shrunk_cm.valuation[name] = pos_of(carrier, value);
  Valuation v2{&shrunk_cm.algebra, shrunk_cm.valuation};
  shrunk_cm.value = evaluate(cm.formula, v2);

  Valuation v{&a, cm.valuation};
  if (shrunk_cm.value != pos_of(carrier, evaluate(cm.formula, v)) || shrunk_cm.value == shrunk.top)
    throw Error("internal: shrink did not preserve the falsifying value");
  out.cm = std::move(shrunk_cm);
  return out;
}

}  // namespace

ShrinkResult fmp_shrink_srl(const Countermodel& cm) {
  if (!check_srl(cm.algebra).member)
    throw ValidationError("fmp_shrink_srl: algebra is not a subresiduated lattice");
  if (uses_neg(cm.formula)) require_derived_neg(cm.algebra);

  FiniteLattice ambient = underlying_lattice(cm.algebra);
  const std::vector<int> x = subformula_values(cm);
  const std::vector<int> carrier = generated_sublattice(ambient, x, /*bounded=*/true);

  std::vector<int> box = box_set(cm.algebra);
  std::vector<int> box_x;
  std::set_intersection(x.begin(), x.end(), box.begin(), box.end(), std::back_inserter(box_x));
  std::vector<int> d = generated_sublattice(ambient, box_x, /*bounded=*/true);
  for (int e : d)
    if (!std::binary_search(box.begin(), box.end(), e)) throw Error("internal: D escaped box A");

  return cut_and_audit(cm, carrier, d, /*audit_scope=*/x, /*broad_sense=*/false);
}

ShrinkResult fmp_shrink_srlbs(const Countermodel& cm) {
  if (!check_srlbs(cm.algebra).member)
    throw ValidationError("fmp_shrink_srlbs: algebra is not a broad-sense subresiduated lattice");
  if (uses_neg(cm.formula)) require_derived_neg(cm.algebra);

  FiniteLattice ambient = underlying_lattice(cm.algebra);
  const std::vector<int> x0 = subformula_values(cm);

  std::vector<int> box = box_set(cm.algebra);
  std::vector<int> x0_box;
  std::set_intersection(x0.begin(), x0.end(), box.begin(), box.end(), std::back_inserter(x0_box));
  std::vector<int> d = generated_sublattice(ambient, x0_box, /*bounded=*/true);
  for (int e : d)
    if (!std::binary_search(box.begin(), box.end(), e)) throw Error("internal: D escaped box A");

  std::set<int> x_set(x0.begin(), x0.end());
  x_set.insert(d.begin(), d.end());
  const std::vector<int> carrier = generated_subsemilattice(ambient, {x_set.begin(), x_set.end()});

  return cut_and_audit(cm, carrier, d, /*audit_scope=*/carrier, /*broad_sense=*/true);
}

}  // namespace sublat
