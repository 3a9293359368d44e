#include "sublat/enumerate.hpp"

#include <algorithm>
#include <set>

#include "sublat/isomorphism.hpp"
#include "sublat/pairs.hpp"

namespace sublat {

namespace {

// All subsets of {0..n-1} containing `forced`, as sorted index vectors.
std::vector<std::vector<int>> subsets_containing(int n, const std::vector<int>& forced) {
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (std::find(forced.begin(), forced.end(), i) == forced.end()) rest.push_back(i);
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 0; mask < (1u << rest.size()); ++mask) {
    std::vector<int> s = forced;
    for (size_t k = 0; k < rest.size(); ++k)
      if ((mask >> k) & 1u) s.push_back(rest[k]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Runs fn on every imp table that is `top` exactly on the order cells of the
// poset and anything-but-top elsewhere.
template <typename Fn>
void for_each_order_compatible_table(const FinitePoset& poset, Fn&& fn) {
  const int n = poset.size();
  OpTable imp(n);
  std::vector<std::pair<int, int>> free_cells;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (poset.le(x, y))
        imp.at(x, y) = n - 1;
      else
        free_cells.emplace_back(x, y);
    }
  std::vector<int> choice(free_cells.size(), 0);
  while (true) {
    for (size_t i = 0; i < free_cells.size(); ++i) imp.at(free_cells[i].first, free_cells[i].second) = choice[i];
    fn(imp);
    int k = static_cast<int>(choice.size()) - 1;
    while (k >= 0 && choice[k] == n - 2) choice[k--] = 0;  // values range over 0..n-2 (never top)
    if (k < 0) break;
    ++choice[k];
  }
}

bool sha_table_ok(const FiniteAlgebra& A) {
  const int n = A.size;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = A.imp(x, y);
      for (int z = 0; z < n; ++z) {
        if (A.imp(xy, A.imp(A.imp(y, z), A.imp(x, z))) != A.top) return false;                        // B
        if (A.imp(A.imp(x, A.imp(y, z)), A.imp(A.imp(x, y), A.imp(x, z))) != A.top) return false;     // S
      }
    }
  return true;
}

bool hilbert_table_ok(const FiniteAlgebra& A) {
  const int n = A.size;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (A.imp(x, A.imp(y, x)) != A.top) return false;  // h1
      for (int z = 0; z < n; ++z)
        if (A.imp(A.imp(x, A.imp(y, z)), A.imp(A.imp(x, y), A.imp(x, z))) != A.top) return false;  // S
    }
  return true;
}

std::vector<FiniteAlgebra> enumerate_arrow_class(int n, ClassTag tag) {
  std::vector<FiniteAlgebra> out;
  for (const FinitePoset& poset : enumerate_posets_with_top(n)) {
    for_each_order_compatible_table(poset, [&](const OpTable& imp) {
      FiniteAlgebra a;
      a.size = n;
      a.imp = imp;
      a.top = n - 1;
      const bool ok = (tag == ClassTag::sha) ? sha_table_ok(a) : hilbert_table_ok(a);
      if (ok) out.push_back(std::move(a));
    });
  }
  return out;
}

// shs and the appendix base share the lattice backbone; the appendix variant
// must not assume x->y = top iff x <= y, so only hemi1 pins the diagonal.
std::vector<FiniteAlgebra> enumerate_sub_hilbert_lattices(int n, ClassTag tag) {
  std::vector<FiniteAlgebra> out;
  for (const FiniteLattice& L : enumerate_bounded_lattices(n)) {
    FiniteAlgebra a;
    a.size = n;
    a.meet = L.meet;
    a.join = L.join;
    a.top = L.top;
    a.bottom = L.bottom;
    if (tag == ClassTag::shs) {
      for_each_order_compatible_table(L.poset, [&](const OpTable& imp) {
        a.imp = imp;
        const auto& axioms = class_axioms(ClassTag::shs);
        // Lattice/SH1 hold by construction; scan SH2-SH4
        for (const AxiomDef& ax : axioms) {
          if (ax.label == "Lattice" || ax.label == "SH1") continue;
          std::vector<int> t(ax.arity, 0);
          while (true) {
            if (!ax.holds(a, t.data())) return;
            int k = ax.arity - 1;
            while (k >= 0 && t[k] == n - 1) t[k--] = 0;
            if (k < 0) break;
            ++t[k];
          }
        }
        out.push_back(a);
      });
    } else {
      // diagonal = top (hemi1), every other cell free over all values
      OpTable imp(n);
      std::vector<std::pair<int, int>> cells;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (x == y)
            imp.at(x, y) = L.top;
          else
            cells.emplace_back(x, y);
        }
      std::vector<int> choice(cells.size(), 0);
      while (true) {
        for (size_t i = 0; i < cells.size(); ++i) imp.at(cells[i].first, cells[i].second) = choice[i];
        a.imp = imp;
        ClassVerdict v = check_shrl_appendix(a);
        if (v.member) out.push_back(a);
        int k = static_cast<int>(choice.size()) - 1;
        while (k >= 0 && choice[k] == n - 1) choice[k--] = 0;
        if (k < 0) break;
        ++choice[k];
      }
    }
  }
  return out;
}

}  // namespace

std::vector<FinitePoset> enumerate_posets_with_top(int n) {
  std::vector<FinitePoset> out;
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back(FinitePoset(1, {1}));
    return out;
  }
  const int m = n - 1;  // elements below the top
  std::vector<std::pair<int, int>> arcs;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b) arcs.emplace_back(a, b);
  for (uint64_t mask = 0; mask < (1ull << arcs.size()); ++mask) {
    FinitePoset p(n, std::vector<uint8_t>(static_cast<size_t>(n) * n, 0));
    for (int i = 0; i < n; ++i) {
      p.set_le(i, i, true);
      p.set_le(i, n - 1, true);
    }
    for (size_t k = 0; k < arcs.size(); ++k)
      if ((mask >> k) & 1ull) p.set_le(arcs[k].first, arcs[k].second, true);
    if (!p.defect()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<FiniteLattice> enumerate_bounded_lattices(int n, int cap) {
  if (n > cap) throw CapExceeded("enumerate_bounded_lattices: size " + std::to_string(n) + " exceeds cap");
  std::vector<FiniteLattice> out;
  if (n <= 0) return out;
  if (n == 1) {
    FiniteLattice l = lattice_from_poset(FinitePoset(1, {1}));
    out.push_back(std::move(l));
    return out;
  }
  const int m = n - 2;  // strictly between the bounds
  std::vector<std::pair<int, int>> arcs;
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      if (a != b) arcs.emplace_back(a, b);
  for (uint64_t mask = 0; mask < (1ull << arcs.size()); ++mask) {
    FinitePoset p(n, std::vector<uint8_t>(static_cast<size_t>(n) * n, 0));
    for (int i = 0; i < n; ++i) {
      p.set_le(i, i, true);
      p.set_le(0, i, true);
      p.set_le(i, n - 1, true);
    }
    for (size_t k = 0; k < arcs.size(); ++k)
      if ((mask >> k) & 1ull) p.set_le(arcs[k].first, arcs[k].second, true);
    if (p.defect()) continue;
    bool lattice = true;
    for (int a = 0; a < n && lattice; ++a)
      for (int b = a + 1; b < n && lattice; ++b)
        lattice = p.glb(a, b).has_value() && p.lub(a, b).has_value();
    if (lattice) out.push_back(lattice_from_poset(p));
  }
  return out;
}

std::vector<FiniteLattice> enumerate_meet_semilattices(int n, int cap) {
  if (n > cap) throw CapExceeded("enumerate_meet_semilattices: size " + std::to_string(n) + " exceeds cap");
  std::vector<FiniteLattice> out;
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back(lattice_from_poset(FinitePoset(1, {1}), /*require_join=*/false));
    return out;
  }
  const int m = n - 2;
  std::vector<std::pair<int, int>> arcs;
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      if (a != b) arcs.emplace_back(a, b);
  for (uint64_t mask = 0; mask < (1ull << arcs.size()); ++mask) {
    FinitePoset p(n, std::vector<uint8_t>(static_cast<size_t>(n) * n, 0));
    for (int i = 0; i < n; ++i) {
      p.set_le(i, i, true);
      p.set_le(0, i, true);
      p.set_le(i, n - 1, true);
    }
    for (size_t k = 0; k < arcs.size(); ++k)
      if ((mask >> k) & 1ull) p.set_le(arcs[k].first, arcs[k].second, true);
    if (p.defect()) continue;
    bool meets = true;
    for (int a = 0; a < n && meets; ++a)
      for (int b = a + 1; b < n && meets; ++b) meets = p.glb(a, b).has_value();
    if (meets) out.push_back(lattice_from_poset(p, /*require_join=*/false));
  }
  return out;
}

std::vector<FiniteAlgebra> enumerate_class(int n, ClassTag tag, bool up_to_iso, const EnumerationCaps& caps) {
  const bool arrow_only = (tag == ClassTag::sha || tag == ClassTag::hilbert);
  const int cap = arrow_only ? caps.arrow_only : caps.lattice_backed;
  if (n > cap)
    throw CapExceeded("enumerate_class(" + to_string(tag) + "): size " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  if (n <= 0) return {};

  std::vector<FiniteAlgebra> out;
  switch (tag) {
    case ClassTag::sha:
    case ClassTag::hilbert:
      out = enumerate_arrow_class(n, tag);
      break;
    case ClassTag::srl:
    case ClassTag::srlbs:
      for (const FiniteLattice& L : enumerate_bounded_lattices(n)) {
        if (tag == ClassTag::srl && !is_distributive(L)) continue;
        for (const auto& d : subsets_containing(n, {0, n - 1})) {
          if (!is_sublattice(L, d, /*bounded=*/true)) continue;
          auto a = try_build_implication({L, d});
          if (a) out.push_back(std::move(*a));
        }
      }
      break;
    case ClassTag::srs:
      for (const FiniteLattice& L : enumerate_meet_semilattices(n)) {
        for (const auto& d : subsets_containing(n, {n - 1})) {
          if (!is_subsemilattice_with_top(L, d)) continue;
          auto a = try_build_srs_pair({L, d});
          if (a) out.push_back(std::move(*a));
        }
      }
      break;
    case ClassTag::shs:
    case ClassTag::shrl_appendix:
      out = enumerate_sub_hilbert_lattices(n, tag);
      break;
    case ClassTag::alg_r4star:
      for (FiniteAlgebra& a : enumerate_class(n, ClassTag::srl, false, caps)) out.push_back(with_derived_neg(a));
      break;
    case ClassTag::alg_plus:
      for (FiniteAlgebra& a : enumerate_class(n, ClassTag::shs, false, caps)) out.push_back(with_derived_neg(a));
      break;
  }

  if (up_to_iso) {
    std::set<std::vector<int>> seen;
    std::vector<FiniteAlgebra> dedup;
    for (FiniteAlgebra& a : out)
      if (seen.insert(canonical_key(a)).second) dedup.push_back(std::move(a));
    out = std::move(dedup);
  }
  std::sort(out.begin(), out.end(), [](const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return flatten_ops(a) < flatten_ops(b);
  });
  return out;
}

std::vector<FiniteAlgebra> enumerate_class_up_to(int max_size, ClassTag tag, bool up_to_iso,
                                                 const EnumerationCaps& caps) {
  std::vector<FiniteAlgebra> out;
  for (int n = 1; n <= max_size; ++n) {
    auto batch = enumerate_class(n, tag, up_to_iso, caps);
    out.insert(out.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  return out;
}

}  // namespace sublat
