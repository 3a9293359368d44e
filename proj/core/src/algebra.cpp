#include "sublat/algebra.hpp"

namespace sublat {

std::string signature_to_string(const Signature& sig) {
  std::string out = "{->";
  if (sig.meet) out += ",/\\";
  if (sig.join) out += ",\\/";
  if (sig.neg) out += ",~";
  if (sig.bottom) out += ",0";
  out += ",1}";
  return out;
}

void FiniteAlgebra::validate_shape() const {
  if (size <= 0) throw ValidationError("algebra size must be positive");
  auto check_bin = [&](const OpTable& t, const char* what) {
    if (t.size() != size || !t.in_range()) throw ValidationError(std::string(what) + " table has wrong shape or range");
  };
  check_bin(imp, "imp");
  if (meet) check_bin(*meet, "meet");
  if (join) check_bin(*join, "join");
  if (neg && (neg->size() != size || !neg->in_range())) throw ValidationError("neg table has wrong shape or range");
  if (top < 0 || top >= size) throw ValidationError("top index out of range");
  if (bottom && (*bottom < 0 || *bottom >= size)) throw ValidationError("bottom index out of range");
  if (names && static_cast<int>(names->size()) != size) throw ValidationError("names list has wrong length");
}

std::string FiniteAlgebra::element_name(int i) const {
  if (names && i >= 0 && i < size) return (*names)[i];
  return std::to_string(i);
}

FiniteAlgebra reduct(const FiniteAlgebra& algebra, const Signature& keep) {
  FiniteAlgebra out = algebra;
  if (!keep.meet) out.meet.reset();
  if (!keep.join) out.join.reset();
  if (!keep.neg) out.neg.reset();
  if (!keep.bottom) out.bottom.reset();
  return out;
}

FiniteAlgebra with_derived_neg(const FiniteAlgebra& algebra) {
  FiniteAlgebra out = algebra;
  int zero;
  if (algebra.bottom) {
    zero = *algebra.bottom;
  } else {
    // least element of the natural order
    FinitePoset order = natural_order(algebra);
    auto least = order.least();
    if (!least) throw ValidationError("with_derived_neg: algebra has no least element");
    zero = *least;
    out.bottom = zero;
  }
  UnTable neg(algebra.size);
  for (int x = 0; x < algebra.size; ++x) neg.at(x) = algebra.imp(x, zero);
  out.neg = neg;
  return out;
}

std::optional<FinitePoset> try_natural_order(const FiniteAlgebra& algebra, std::string* reason,
                                             std::vector<int>* witness) {
  const int n = algebra.size;
  auto fail = [&](const char* r, std::vector<int> w) -> std::optional<FinitePoset> {
    if (reason) *reason = r;
    if (witness) *witness = std::move(w);
    return std::nullopt;
  };
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (algebra.imp(a, b) == algebra.top) leq[static_cast<size_t>(a) * n + b] = 1;
  FinitePoset p(n, std::move(leq));
  for (int a = 0; a < n; ++a)
    if (!p.le(a, a)) return fail("reflexivity (I)", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && p.le(a, b) && p.le(b, a)) return fail("antisymmetry (A)", {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.le(a, b))
        for (int c = 0; c < n; ++c)
          if (p.le(b, c) && !p.le(a, c)) return fail("transitivity (B)", {a, b, c});
  return p;
}

FinitePoset natural_order(const FiniteAlgebra& algebra) {
  std::string reason;
  std::vector<int> witness;
  auto p = try_natural_order(algebra, &reason, &witness);
  if (!p) throw NotAnOrderError(reason, witness);
  return *p;
}

FiniteLattice underlying_lattice(const FiniteAlgebra& algebra) {
  if (!algebra.meet) throw ValidationError("underlying_lattice: algebra has no meet table");
  const int n = algebra.size;
  const OpTable& m = *algebra.meet;
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m(a, b) == a) leq[static_cast<size_t>(a) * n + b] = 1;
  FiniteLattice lat;
  lat.poset = FinitePoset(n, std::move(leq));
  lat.meet = m;
  lat.join = algebra.join;
  lat.top = algebra.top;
  lat.bottom = algebra.bottom;
  lat.validate();
  return lat;
}

}  // namespace sublat
