#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sublat/algebra.hpp"

namespace sublat {

enum class ClassTag { sha, srl, srs, srlbs, shs, shrl_appendix, alg_r4star, alg_plus, hilbert };

std::string to_string(ClassTag tag);
std::optional<ClassTag> class_tag_from_string(std::string_view name);
const std::vector<ClassTag>& all_class_tags();

/// Minimal signature an algebra needs before the class check makes sense.
Signature required_signature(ClassTag tag);

struct Violation {
  std::string axiom;
  std::vector<int> witness;
};

struct ClassVerdict {
  bool member = true;
  std::vector<Violation> violations;  // first witness per broken axiom, lexicographic scan
};

/// One (quasi-)equation of a class base, checkable at a single tuple.
struct AxiomDef {
  std::string label;
  int arity;
  std::function<bool(const FiniteAlgebra&, const int*)> holds;
};

/// The labeled base used by check_class for the given tag.
const std::vector<AxiomDef>& class_axioms(ClassTag tag);

/// Re-evaluates one labeled axiom of the class at a witness tuple.
bool axiom_holds(const FiniteAlgebra& algebra, ClassTag tag, std::string_view label, std::span<const int> witness);

ClassVerdict check_class(const FiniteAlgebra& algebra, ClassTag tag);

ClassVerdict check_sha(const FiniteAlgebra& algebra);
ClassVerdict check_srl(const FiniteAlgebra& algebra);
ClassVerdict check_srs(const FiniteAlgebra& algebra);
ClassVerdict check_srlbs(const FiniteAlgebra& algebra);
ClassVerdict check_shs(const FiniteAlgebra& algebra);
ClassVerdict check_shrl_appendix(const FiniteAlgebra& algebra);
ClassVerdict check_alg_r4star(const FiniteAlgebra& algebra);
ClassVerdict check_alg_plus(const FiniteAlgebra& algebra);
ClassVerdict check_hilbert(const FiniteAlgebra& algebra);

/// sha with (A) swapped for the quasi-equation (MP): 1->x = 1 implies x = 1.
/// The two bases agree on every order-backed table but differ on raw ones.
ClassVerdict check_sha_mp_variant(const FiniteAlgebra& algebra);

/// box x := 1 -> x.
int box_of(const FiniteAlgebra& algebra, int x);

/// {box x : x in A}, sorted.  Also recomputes {x : box x = x} and throws
/// ValidationError when the two differ (possible only outside sha).
std::vector<int> box_set(const FiniteAlgebra& algebra);

/// Verifies box A is the universe of a Hilbert subalgebra: closed under ->,
/// contains 1, and satisfies (A), (S), (h1) on box A.  Requires check_sha.
ClassVerdict check_box_hilbert(const FiniteAlgebra& algebra);
bool box_hilbert_axiom_holds(const FiniteAlgebra& algebra, std::string_view label, std::span<const int> witness);

/// f commutes with every operation and constant of the (shared) signature.
/// f is given as f[i] = image of i; must be total on A's carrier.
bool is_homomorphism(const std::vector<int>& f, const FiniteAlgebra& a, const FiniteAlgebra& b);

}  // namespace sublat
