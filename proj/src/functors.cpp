#include "specker/functors.hpp"

#include <utility>

#include "specker/enumerate.hpp"
#include "specker/error.hpp"

namespace specker {

SpeckerLattice specker_lattice(BooleanAlgebra base) { return SpeckerLattice(base); }

SpeckerMorphism::SpeckerMorphism(SpeckerLattice source, SpeckerLattice target, BoolHom underlying)
    : source_(source), target_(target), underlying_(std::move(underlying)) {
  if (underlying_.source() != source_.base() || underlying_.target() != target_.base()) {
    throw AlgebraMismatchError("underlying homomorphism does not match the lattice bases");
  }
}

SpeckerMorphism SpeckerMorphism::identity(const SpeckerLattice& lattice) {
  return SpeckerMorphism(lattice, lattice, BoolHom::identity(lattice.base()));
}

SpeckerMorphism lift_hom(const BoolHom& f) {
  return SpeckerMorphism(SpeckerLattice(f.source()), SpeckerLattice(f.target()), f);
}

SpeckerElement apply(const SpeckerMorphism& g, const SpeckerElement& v) {
  const BoolHom& f = g.underlying();
  if (v.algebra() != f.source()) {
    throw AlgebraMismatchError("element does not live in the morphism's source lattice");
  }
  // g(v)(f(b)) = v(b) on the image partition; blocks mapping to bottom drop
  // out. Distinct blocks have disjoint nonbottom images, so the assignment is
  // well-defined.
  std::vector<std::pair<Element, Rational>> entries;
  for (int i = 0; i < v.partition().size(); ++i) {
    Element image = apply_hom(f, v.partition().blocks()[i]);
    if (!image.is_bottom()) entries.emplace_back(image, v.values()[i]);
  }
  if (entries.empty()) return SpeckerElement::zero(f.target());
  return SpeckerElement::from_block_values(f.target(), std::move(entries));
}

SpeckerMorphism compose(const SpeckerMorphism& second, const SpeckerMorphism& first) {
  if (first.target() != second.source()) {
    throw AlgebraMismatchError("morphisms are not composable");
  }
  return SpeckerMorphism(first.source(), second.target(),
                         compose(second.underlying(), first.underlying()));
}

SpeckerElement BooleanElementsAlgebra::to_boolean(const Element& b) const {
  if (b.algebra() != algebra_) {
    throw AlgebraMismatchError("element does not belong to the Boolean-elements algebra");
  }
  return SpeckerElement::indicator(b);
}

Element BooleanElementsAlgebra::to_element(const SpeckerElement& v) const {
  if (v.algebra() != algebra_) {
    throw AlgebraMismatchError("element does not belong to this lattice");
  }
  if (!is_boolean_element(v)) {
    throw DomainError("not a Boolean element");
  }
  AtomMask m = 0;
  for (int i = 0; i < v.partition().size(); ++i) {
    if (v.values()[i] == Rational(1)) m |= v.partition().blocks()[i].mask();
  }
  return Element(algebra_, m);
}

BooleanElementsAlgebra boolean_elements(const SpeckerLattice& lattice) {
  return BooleanElementsAlgebra(lattice);
}

BoolHom boolean_restriction(const SpeckerMorphism& g) {
  BooleanElementsAlgebra src = boolean_elements(g.source());
  BooleanElementsAlgebra tgt = boolean_elements(g.target());
  // Recover the point map from g's action on atom indicators: pm(a) is the
  // unique source atom whose indicator maps to a Boolean element containing a.
  std::vector<int> pm(tgt.algebra().atom_count(), -1);
  for (int b = 0; b < src.algebra().atom_count(); ++b) {
    SpeckerElement image = apply(g, src.to_boolean(atom_element(src.algebra(), b)));
    Element hit = tgt.to_element(image);
    for (int a : hit.atoms()) pm[a] = b;
  }
  return BoolHom(src.algebra(), tgt.algebra(), std::move(pm));
}

Element EtaIso::forward(const SpeckerElement& v) const {
  return boolean_elements(SpeckerLattice(algebra_)).to_element(v);
}

SpeckerElement EtaIso::inverse(const Element& b) const {
  if (b.algebra() != algebra_) {
    throw AlgebraMismatchError("element does not belong to this algebra");
  }
  return SpeckerElement::indicator(b);
}

EtaIso eta(BooleanAlgebra algebra) { return EtaIso(algebra); }

SpeckerElement EpsilonIso::forward(const SpeckerElement& v) const {
  if (v.algebra() != lattice_.base()) {
    throw AlgebraMismatchError("element is not presented over the Boolean-elements algebra");
  }
  // sum over the partition of v(a) * a, computed with the lattice operations
  // of V; the partition blocks are Boolean elements of V.
  SpeckerElement acc = lattice_.zero();
  for (int i = 0; i < v.partition().size(); ++i) {
    acc = acc + v.values()[i] * SpeckerElement::indicator(v.partition().blocks()[i]);
  }
  return acc;
}

SpeckerElement EpsilonIso::inverse(const SpeckerElement& v) const {
  if (v.algebra() != lattice_.base()) {
    throw AlgebraMismatchError("element does not belong to this lattice");
  }
  // The canonical partition presents v as a map on Boolean elements already;
  // the level-set presentation is its own preimage.
  return v;
}

EpsilonIso epsilon(const SpeckerLattice& lattice) { return EpsilonIso(lattice); }

bool check_naturality(const BoolHom& f, const NaturalityOptions& options) {
  SpeckerMorphism g = lift_hom(f);
  EtaIso eta_src = eta(f.source());
  EtaIso eta_tgt = eta(f.target());
  auto square_commutes = [&](const Element& b) {
    SpeckerElement v = eta_src.inverse(b);  // Boolean element of H(source)
    return eta_tgt.forward(apply(g, v)) == apply_hom(f, eta_src.forward(v));
  };
  if (f.source().atom_count() <= options.exhaustive_atom_limit) {
    for (const Element& b : all_elements(f.source())) {
      if (!square_commutes(b)) return false;
    }
    return true;
  }
  Sampler sampler(options.seed);
  for (int i = 0; i < options.cases; ++i) {
    if (!square_commutes(sampler.element(f.source()))) return false;
  }
  return true;
}

bool check_naturality(const SpeckerMorphism& g, const NaturalityOptions& options) {
  // H(B(g)) acts between H(B(V)) and H(B(W)); with the Boolean-elements
  // algebras presented over the bases this is the lift of B(g).
  SpeckerMorphism hbg = lift_hom(boolean_restriction(g));
  EpsilonIso eps_src = epsilon(g.source());
  EpsilonIso eps_tgt = epsilon(g.target());
  auto square_commutes = [&](const SpeckerElement& w) {
    return eps_tgt.forward(apply(hbg, w)) == apply(g, eps_src.forward(w));
  };
  if (g.source().base().atom_count() <= options.exhaustive_atom_limit) {
    for (const SpeckerElement& w :
         all_grid_elements(g.source().base(), default_value_grid())) {
      if (!square_commutes(w)) return false;
    }
    return true;
  }
  Sampler sampler(options.seed);
  for (int i = 0; i < options.cases; ++i) {
    if (!square_commutes(sampler.specker_element(g.source().base(), 4, 6))) return false;
  }
  return true;
}

}  // namespace specker
