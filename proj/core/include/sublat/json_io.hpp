#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sublat/algebra.hpp"
#include "sublat/classes.hpp"
#include "sublat/proof.hpp"
#include "sublat/semantics.hpp"

namespace sublat {

using Json = nlohmann::json;

/// An algebra file may also carry a designated-subset hint (used as the D of a
/// pair construction); for files with an imp table it must match box A.
struct LoadedAlgebra {
  FiniteAlgebra algebra;
  std::optional<std::vector<int>> designated;
};

/// Fields: size, names?, leq? (list of [i,j] pairs, closed reflexively and
/// transitively), imp?/meet?/join? (flat or nested row-major), neg?, top,
/// bottom?, D?.  Tables inconsistent with leq are rejected.
Json algebra_to_json(const FiniteAlgebra& algebra, const std::optional<std::vector<int>>& designated = {});
LoadedAlgebra algebra_from_json(const Json& j);

/// Requires imp. Validates any lattice tables against the order.
FiniteAlgebra load_algebra(const Json& j);

/// Requires meet/join (or leq to derive them), top, bottom; imp must be absent.
FiniteLattice load_lattice(const Json& j);

Json verdict_to_json(const ClassVerdict& verdict);

/// Proof scripts: {calculus, hypotheses: [...], lines: [{formula, rule}]}
/// with rule one of "axiom:<label>", "hyp:<k>" (0-based), "mp:i,j", "t:i",
/// "c:i,j" (1-based line citations).
Proof proof_from_json(const Json& j);
Json proof_to_json(const Proof& proof);
Json proof_verdict_to_json(const ProofVerdict& verdict);

Json countermodel_to_json(const Countermodel& cm);

Json read_json_file(const std::string& path);

}  // namespace sublat
