#pragma once

#include "sublat/representation.hpp"
#include "sublat/semantics.hpp"

namespace sublat {

/// A shrunk countermodel plus the agreement audits the construction promises.
/// The constructions throw on any broken postcondition (value changed,
/// agreement missed, carrier not closed), so a returned result is audited.
struct ShrinkResult {
  Countermodel cm;             // same formula, shrunk algebra, value preserved
  int carrier_size = 0;
  int residuum_agreements = 0; // audited cells where the inner -> matches the ambient one
  int join_agreements = 0;     // audited cells for the inner join (srlbs shrink only)
};

/// Embeds a sha countermodel of an ->-only formula into the upset algebra,
/// cuts the bounded sublattice B generated by the subformula images, takes
/// D = B n box, and rebuilds the implication.  Output class: srl.
ShrinkResult fmp_shrink_sha(const Countermodel& cm, const RepresentationCaps& caps = {});

/// Cuts an srl countermodel to the bounded sublattice generated by the
/// subformula values, with D generated by their box part.  Output class: srl.
/// Negation is accepted when the algebra's ~ is x -> bottom.
ShrinkResult fmp_shrink_srl(const Countermodel& cm);

/// The broad-sense version: meet-subsemilattice carrier with its own join,
/// D generated inside box A, implication by max over D.  Output class: srlbs.
ShrinkResult fmp_shrink_srlbs(const Countermodel& cm);

}  // namespace sublat
