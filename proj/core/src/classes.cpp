#include "sublat/classes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sublat {

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::sha: return "sha";
    case ClassTag::srl: return "srl";
    case ClassTag::srs: return "srs";
    case ClassTag::srlbs: return "srlbs";
    case ClassTag::shs: return "shs";
    case ClassTag::shrl_appendix: return "shrl-appendix";
    case ClassTag::alg_r4star: return "alg-r4star";
    case ClassTag::alg_plus: return "alg-plus";
    case ClassTag::hilbert: return "hilbert";
  }
  return "?";
}

std::optional<ClassTag> class_tag_from_string(std::string_view name) {
  for (ClassTag tag : all_class_tags())
    if (to_string(tag) == name) return tag;
  return std::nullopt;
}

const std::vector<ClassTag>& all_class_tags() {
  static const std::vector<ClassTag> tags = {
      ClassTag::sha,       ClassTag::srl,        ClassTag::srs,      ClassTag::srlbs,   ClassTag::shs,
      ClassTag::shrl_appendix, ClassTag::alg_r4star, ClassTag::alg_plus, ClassTag::hilbert};
  return tags;
}

Signature required_signature(ClassTag tag) {
  Signature s;  // imp + top
  switch (tag) {
    case ClassTag::sha:
    case ClassTag::hilbert:
      break;
    case ClassTag::srs:
      s.meet = true;
      break;
    case ClassTag::shs:
    case ClassTag::shrl_appendix:
      s.meet = s.join = true;
      break;
    case ClassTag::srl:
    case ClassTag::srlbs:
      s.meet = s.join = s.bottom = true;
      break;
    case ClassTag::alg_r4star:
    case ClassTag::alg_plus:
      s.meet = s.join = s.neg = true;
      break;
  }
  return s;
}

namespace {

// shorthands used inside axiom lambdas
int I(const FiniteAlgebra& A, int x, int y) { return A.imp(x, y); }
int M(const FiniteAlgebra& A, int x, int y) { return (*A.meet)(x, y); }
int J(const FiniteAlgebra& A, int x, int y) { return (*A.join)(x, y); }
int N(const FiniteAlgebra& A, int x) { return (*A.neg)(x); }
int B(const FiniteAlgebra& A, int x) { return A.imp(A.top, x); }
// order expressed through meet: u <= v iff u /\ v = u
bool LE(const FiniteAlgebra& A, int u, int v) { return M(A, u, v) == u; }

// Lattice structure at one triple: commutativity, associativity, absorption,
// unit laws for the constants.  Covers the bounded case when bottom is set.
bool lattice_at(const FiniteAlgebra& A, const int* w) {
  const int x = w[0], y = w[1], z = w[2];
  if (M(A, x, y) != M(A, y, x)) return false;
  if (M(A, x, M(A, y, z)) != M(A, M(A, x, y), z)) return false;
  if (M(A, x, A.top) != x) return false;
  if (A.join) {
    if (J(A, x, y) != J(A, y, x)) return false;
    if (J(A, x, J(A, y, z)) != J(A, J(A, x, y), z)) return false;
    if (M(A, x, J(A, x, y)) != x) return false;
    if (J(A, x, M(A, x, y)) != x) return false;
    if (A.bottom && J(A, x, *A.bottom) != x) return false;
  }
  return true;
}

std::vector<AxiomDef> sha_axioms(bool mp_variant) {
  std::vector<AxiomDef> v;
  v.push_back({"B", 3, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, I(A, w[0], w[1]), I(A, I(A, w[1], w[2]), I(A, w[0], w[2]))) == A.top;
               }});
  v.push_back({"I", 1, [](const FiniteAlgebra& A, const int* w) { return I(A, w[0], w[0]) == A.top; }});
  v.push_back({"T", 1, [](const FiniteAlgebra& A, const int* w) { return I(A, w[0], A.top) == A.top; }});
  if (mp_variant)
    v.push_back({"MP", 1, [](const FiniteAlgebra& A, const int* w) {
                   return I(A, A.top, w[0]) != A.top || w[0] == A.top;
                 }});
  else
    v.push_back({"A", 2, [](const FiniteAlgebra& A, const int* w) {
                   return !(I(A, w[0], w[1]) == A.top && I(A, w[1], w[0]) == A.top && w[0] != w[1]);
                 }});
  v.push_back({"S", 3, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, I(A, w[0], I(A, w[1], w[2])), I(A, I(A, w[0], w[1]), I(A, w[0], w[2]))) == A.top;
               }});
  return v;
}

std::vector<AxiomDef> srl_axioms() {
  std::vector<AxiomDef> v;
  v.push_back({"Lattice", 3, lattice_at});
  v.push_back({"Dist", 3, [](const FiniteAlgebra& A, const int* w) {
                 return M(A, w[0], J(A, w[1], w[2])) == J(A, M(A, w[0], w[1]), M(A, w[0], w[2]));
               }});
  v.push_back({"A1", 1, [](const FiniteAlgebra& A, const int* w) { return I(A, w[0], w[0]) == A.top; }});
  v.push_back({"A2", 3, [](const FiniteAlgebra& A, const int* w) {
                 return LE(A, I(A, w[0], w[1]), I(A, w[2], I(A, w[0], w[1])));
               }});
  v.push_back({"A3", 2, [](const FiniteAlgebra& A, const int* w) {
                 return LE(A, M(A, w[0], I(A, w[0], w[1])), w[1]);
               }});
  v.push_back({"A4", 3, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, w[2], M(A, w[0], w[1])) == M(A, I(A, w[2], w[0]), I(A, w[2], w[1]));
               }});
  v.push_back({"A5", 3, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, J(A, w[0], w[1]), w[2]) == M(A, I(A, w[0], w[2]), I(A, w[1], w[2]));
               }});
  v.push_back({"A6", 3, [](const FiniteAlgebra& A, const int* w) {
                 return LE(A, M(A, I(A, w[0], w[1]), I(A, w[1], w[2])), I(A, w[0], w[2]));
               }});
  return v;
}

void append_sr(std::vector<AxiomDef>& v) {
  v.push_back({"SR1", 2, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, M(A, w[0], w[1]), w[1]) == A.top;
               }});
  v.push_back({"SR2", 3, [](const FiniteAlgebra& A, const int* w) {
                 return LE(A, I(A, w[0], w[1]), I(A, w[2], I(A, w[0], w[1])));
               }});
  v.push_back({"SR3", 2, [](const FiniteAlgebra& A, const int* w) {
                 return LE(A, M(A, w[0], I(A, w[0], w[1])), w[1]);
               }});
  v.push_back({"SR4", 3, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, w[2], M(A, w[0], w[1])) == M(A, I(A, w[2], w[0]), I(A, w[2], w[1]));
               }});
}

std::vector<AxiomDef> srs_axioms() {
  std::vector<AxiomDef> v;
  v.push_back({"SL1", 3, [](const FiniteAlgebra& A, const int* w) {
                 return M(A, w[0], M(A, w[1], w[2])) == M(A, M(A, w[0], w[1]), w[2]);
               }});
  v.push_back({"SL2", 2, [](const FiniteAlgebra& A, const int* w) { return M(A, w[0], w[1]) == M(A, w[1], w[0]); }});
  v.push_back({"SL3", 1, [](const FiniteAlgebra& A, const int* w) { return M(A, w[0], w[0]) == w[0]; }});
  v.push_back({"SL4", 1, [](const FiniteAlgebra& A, const int* w) { return M(A, w[0], A.top) == w[0]; }});
  append_sr(v);
  return v;
}

std::vector<AxiomDef> srlbs_axioms() {
  std::vector<AxiomDef> v;
  v.push_back({"Lattice", 3, lattice_at});
  append_sr(v);
  return v;
}

std::vector<AxiomDef> shs_axioms() {
  std::vector<AxiomDef> v;
  v.push_back({"Lattice", 3, lattice_at});
  v.push_back({"SH1", 2, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, M(A, w[0], w[1]), w[1]) == A.top;
               }});
  v.push_back({"SH2", 2, [](const FiniteAlgebra& A, const int* w) {
                 return LE(A, M(A, w[0], I(A, w[0], w[1])), w[1]);
               }});
  v.push_back({"SH3", 3, [](const FiniteAlgebra& A, const int* w) {
                 return LE(A, I(A, w[0], w[1]), I(A, I(A, w[1], w[2]), I(A, w[0], w[2])));
               }});
  v.push_back({"SH4", 3, [](const FiniteAlgebra& A, const int* w) {
                 return LE(A, I(A, w[0], I(A, w[1], w[2])), I(A, I(A, w[0], w[1]), I(A, w[0], w[2])));
               }});
  return v;
}

std::vector<AxiomDef> shrl_appendix_axioms() {
  std::vector<AxiomDef> v;
  v.push_back({"Lattice", 3, lattice_at});
  v.push_back({"hemi1", 1, [](const FiniteAlgebra& A, const int* w) { return I(A, w[0], w[0]) == A.top; }});
  v.push_back({"hemi2", 2, [](const FiniteAlgebra& A, const int* w) {
                 return LE(A, M(A, w[0], I(A, w[0], w[1])), M(A, w[0], w[1]));
               }});
  v.push_back({"a", 3, [](const FiniteAlgebra& A, const int* w) {
                 return LE(A, I(A, w[0], w[1]), I(A, w[2], I(A, w[0], w[1])));
               }});
  v.push_back({"b", 3, [](const FiniteAlgebra& A, const int* w) {
                 return LE(A, I(A, J(A, w[0], w[1]), w[2]), M(A, I(A, w[0], w[2]), I(A, w[1], w[2])));
               }});
  v.push_back({"c", 3, [](const FiniteAlgebra& A, const int* w) {
                 return LE(A, I(A, w[0], M(A, w[1], w[2])), M(A, I(A, w[0], w[1]), I(A, w[0], w[2])));
               }});
  v.push_back({"d", 4, [](const FiniteAlgebra& A, const int* w) {
                 const int a = w[0], b = w[1], c = w[2], d = w[3];
                 return LE(A, I(A, d, I(A, a, I(A, b, c))),
                           I(A, I(A, d, I(A, a, b)), I(A, d, I(A, a, c))));
               }});
  v.push_back({"e", 3, [](const FiniteAlgebra& A, const int* w) {
                 const int a = B(A, w[0]), b = B(A, w[1]), c = B(A, w[2]);
                 return I(A, a, I(A, b, c)) == I(A, b, I(A, a, c));
               }});
  v.push_back({"f", 3, [](const FiniteAlgebra& A, const int* w) {
                 const int a = B(A, w[0]), b = B(A, w[1]), c = B(A, w[2]);
                 return I(A, a, I(A, b, c)) == I(A, I(A, a, b), I(A, a, c));
               }});
  return v;
}

std::vector<AxiomDef> alg_r4star_axioms() {
  std::vector<AxiomDef> v = sha_axioms(false);  // B, I, T, A, S
  v.push_back({"EC1", 2, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, M(A, w[0], w[1]), w[0]) == A.top;
               }});
  v.push_back({"EC2", 2, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, M(A, w[0], w[1]), w[1]) == A.top;
               }});
  v.push_back({"EC3", 3, [](const FiniteAlgebra& A, const int* w) {
                 const int z = w[2], x = w[0], y = w[1];
                 return I(A, I(A, z, x), I(A, I(A, z, y), I(A, z, M(A, x, y)))) == A.top;
               }});
  v.push_back({"ED1", 2, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, w[0], J(A, w[0], w[1])) == A.top;
               }});
  v.push_back({"ED2", 2, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, w[1], J(A, w[0], w[1])) == A.top;
               }});
  v.push_back({"ED3", 3, [](const FiniteAlgebra& A, const int* w) {
                 const int x = w[0], y = w[1], z = w[2];
                 return I(A, I(A, x, z), I(A, I(A, y, z), I(A, J(A, x, y), z))) == A.top;
               }});
  v.push_back({"N1", 2, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, N(A, w[0]), I(A, w[0], w[1])) == A.top;
               }});
  v.push_back({"N2", 1, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, I(A, w[0], N(A, w[0])), N(A, w[0])) == A.top;
               }});
  v.push_back({"Dist", 3, [](const FiniteAlgebra& A, const int* w) {
                 const int x = w[0], y = w[1], z = w[2];
                 return I(A, M(A, x, J(A, y, z)), J(A, M(A, x, y), M(A, x, z))) == A.top;
               }});
  return v;
}

std::vector<AxiomDef> alg_plus_axioms() {
  std::vector<AxiomDef> v = alg_r4star_axioms();
  // drop EC3 and Dist, add QC
  std::erase_if(v, [](const AxiomDef& a) { return a.label == "EC3" || a.label == "Dist"; });
  v.push_back({"QC", 3, [](const FiniteAlgebra& A, const int* w) {
                 const int x = w[0], y = w[1], z = w[2];
                 return !(I(A, z, x) == A.top && I(A, z, y) == A.top) || I(A, z, M(A, x, y)) == A.top;
               }});
  return v;
}

std::vector<AxiomDef> hilbert_axioms() {
  std::vector<AxiomDef> v;
  v.push_back({"h1", 2, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, w[0], I(A, w[1], w[0])) == A.top;
               }});
  v.push_back({"S", 3, [](const FiniteAlgebra& A, const int* w) {
                 return I(A, I(A, w[0], I(A, w[1], w[2])), I(A, I(A, w[0], w[1]), I(A, w[0], w[2]))) == A.top;
               }});
  v.push_back({"A", 2, [](const FiniteAlgebra& A, const int* w) {
                 return !(I(A, w[0], w[1]) == A.top && I(A, w[1], w[0]) == A.top && w[0] != w[1]);
               }});
  return v;
}

ClassVerdict scan_axioms(const FiniteAlgebra& A, const std::vector<AxiomDef>& axioms) {
  ClassVerdict verdict;
  for (const AxiomDef& ax : axioms) {
    std::vector<int> tuple(ax.arity, 0);
    bool broken = false;
    while (true) {
      if (!ax.holds(A, tuple.data())) {
        verdict.violations.push_back({ax.label, tuple});
        broken = true;
        break;
      }
      int k = ax.arity - 1;
      while (k >= 0 && tuple[k] == A.size - 1) tuple[k--] = 0;
      if (k < 0) break;
      ++tuple[k];
    }
    if (broken) verdict.member = false;
  }
  return verdict;
}

void require_signature(const FiniteAlgebra& A, ClassTag tag) {
  A.validate_shape();
  if (!A.signature().covers(required_signature(tag)))
    throw ValidationError("class " + to_string(tag) + " needs signature " +
                          signature_to_string(required_signature(tag)) + ", algebra has " +
                          signature_to_string(A.signature()));
}

}  // namespace

const std::vector<AxiomDef>& class_axioms(ClassTag tag) {
  static const std::map<ClassTag, std::vector<AxiomDef>> table = [] {
    std::map<ClassTag, std::vector<AxiomDef>> m;
    m[ClassTag::sha] = sha_axioms(false);
    m[ClassTag::srl] = srl_axioms();
    m[ClassTag::srs] = srs_axioms();
    m[ClassTag::srlbs] = srlbs_axioms();
    m[ClassTag::shs] = shs_axioms();
    m[ClassTag::shrl_appendix] = shrl_appendix_axioms();
    m[ClassTag::alg_r4star] = alg_r4star_axioms();
    m[ClassTag::alg_plus] = alg_plus_axioms();
    m[ClassTag::hilbert] = hilbert_axioms();
    return m;
  }();
  return table.at(tag);
}

bool axiom_holds(const FiniteAlgebra& algebra, ClassTag tag, std::string_view label, std::span<const int> witness) {
  for (const AxiomDef& ax : class_axioms(tag))
    if (ax.label == label) {
      if (static_cast<int>(witness.size()) != ax.arity)
        throw ValidationError("axiom " + ax.label + " expects arity " + std::to_string(ax.arity));
      return ax.holds(algebra, witness.data());
    }
  throw ValidationError("no axiom labeled '" + std::string(label) + "' in class " + to_string(tag));
}

ClassVerdict check_class(const FiniteAlgebra& algebra, ClassTag tag) {
  require_signature(algebra, tag);
  return scan_axioms(algebra, class_axioms(tag));
}

ClassVerdict check_sha(const FiniteAlgebra& a) { return check_class(a, ClassTag::sha); }
ClassVerdict check_srl(const FiniteAlgebra& a) { return check_class(a, ClassTag::srl); }
ClassVerdict check_srs(const FiniteAlgebra& a) { return check_class(a, ClassTag::srs); }
ClassVerdict check_srlbs(const FiniteAlgebra& a) { return check_class(a, ClassTag::srlbs); }
ClassVerdict check_shs(const FiniteAlgebra& a) { return check_class(a, ClassTag::shs); }
ClassVerdict check_shrl_appendix(const FiniteAlgebra& a) { return check_class(a, ClassTag::shrl_appendix); }
ClassVerdict check_alg_r4star(const FiniteAlgebra& a) { return check_class(a, ClassTag::alg_r4star); }
ClassVerdict check_alg_plus(const FiniteAlgebra& a) { return check_class(a, ClassTag::alg_plus); }
ClassVerdict check_hilbert(const FiniteAlgebra& a) { return check_class(a, ClassTag::hilbert); }

ClassVerdict check_sha_mp_variant(const FiniteAlgebra& algebra) {
  require_signature(algebra, ClassTag::sha);
  static const std::vector<AxiomDef> axioms = sha_axioms(true);
  return scan_axioms(algebra, axioms);
}

int box_of(const FiniteAlgebra& algebra, int x) { return algebra.imp(algebra.top, x); }

std::vector<int> box_set(const FiniteAlgebra& algebra) {
  std::set<int> image, fixpoints;
  for (int x = 0; x < algebra.size; ++x) {
    image.insert(box_of(algebra, x));
    if (box_of(algebra, x) == x) fixpoints.insert(x);
  }
  if (image != fixpoints)
    throw ValidationError("box image differs from its fixpoint set; input is outside sha");
  return {image.begin(), image.end()};
}

namespace {

bool box_hilbert_at(const FiniteAlgebra& A, std::string_view label, const int* w) {
  if (label == "Closed") {
    const int v = A.imp(w[0], w[1]);
    return box_of(A, v) == v;  // closed under -> means the value is a box fixpoint
  }
  if (label == "h1") return A.imp(w[0], A.imp(w[1], w[0])) == A.top;
  if (label == "S")
    return A.imp(A.imp(w[0], A.imp(w[1], w[2])), A.imp(A.imp(w[0], w[1]), A.imp(w[0], w[2]))) == A.top;
  if (label == "A")
    return !(A.imp(w[0], w[1]) == A.top && A.imp(w[1], w[0]) == A.top && w[0] != w[1]);
  throw ValidationError("no box-Hilbert condition labeled '" + std::string(label) + "'");
}

}  // namespace

bool box_hilbert_axiom_holds(const FiniteAlgebra& algebra, std::string_view label, std::span<const int> witness) {
  return box_hilbert_at(algebra, label, witness.data());
}

ClassVerdict check_box_hilbert(const FiniteAlgebra& algebra) {
  if (!check_sha(algebra).member)
    throw ValidationError("check_box_hilbert requires a sub-Hilbert algebra");
  std::vector<int> box = box_set(algebra);
  ClassVerdict verdict;
  auto scan = [&](std::string_view label, int arity) {
    std::vector<int> tuple(arity, 0);
    std::vector<int> w(arity);
    while (true) {
      for (int i = 0; i < arity; ++i) w[i] = box[tuple[i]];
      if (!box_hilbert_at(algebra, label, w.data())) {
        verdict.violations.push_back({std::string(label), w});
        verdict.member = false;
        return;
      }
      int k = arity - 1;
      while (k >= 0 && tuple[k] == static_cast<int>(box.size()) - 1) tuple[k--] = 0;
      if (k < 0) return;
      ++tuple[k];
    }
  };
  if (std::find(box.begin(), box.end(), algebra.top) == box.end()) {
    verdict.violations.push_back({"Closed", {algebra.top}});
    verdict.member = false;
  }
  scan("Closed", 2);
  scan("h1", 2);
  scan("S", 3);
  scan("A", 2);
  return verdict;
}

bool is_homomorphism(const std::vector<int>& f, const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.signature() != b.signature())
    throw ValidationError("is_homomorphism: signatures differ");
  if (static_cast<int>(f.size()) != a.size) throw ValidationError("is_homomorphism: map is not total");
  for (int v : f)
    if (v < 0 || v >= b.size) throw ValidationError("is_homomorphism: map value out of range");

  if (f[a.top] != b.top) return false;
  if (a.bottom && f[*a.bottom] != *b.bottom) return false;
  for (int x = 0; x < a.size; ++x) {
    if (a.neg && f[(*a.neg)(x)] != (*b.neg)(f[x])) return false;
    for (int y = 0; y < a.size; ++y) {
      if (f[a.imp(x, y)] != b.imp(f[x], f[y])) return false;
      if (a.meet && f[(*a.meet)(x, y)] != (*b.meet)(f[x], f[y])) return false;
      if (a.join && f[(*a.join)(x, y)] != (*b.join)(f[x], f[y])) return false;
    }
  }
  return true;
}

}  // namespace sublat
