//! Finite-set-valued functors, natural transformations, representables and
//! categories of elements.
//!
//! A [`SetFunctor`] is always covariant on its base. A presheaf on `C` is a
//! `SetFunctor` whose base is `C.opposite()`; since the opposite keeps arrow
//! indices, the map stored for an arrow `f: c → d` of `C` is then the
//! restriction `F(d) → F(c)`.
//!
//! Variance conventions for the element constructions:
//!
//! | input                   | construction            | projection     |
//! |-------------------------|-------------------------|----------------|
//! | presheaf `F` on `C`     | [`elements_presheaf`]   | `∫F → C`       |
//! | covariant `P` on `C`    | [`elements_covariant`]  | `∫P → C`       |
//! | covariant `P` on `C`    | [`discrete_opfibration`]| `𝔽 → C`        |
//! | presheaf `F` on `C`     | `elements_covariant(F)` then `opposite()` | `(∫F)^op → C^op` |
//!
//! The projection `∫P → C^op` used for colimits over elements of a covariant
//! functor is `elements_covariant(P).projection.opposite()`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::category::{pair_id, Arrow, FinCat};
use crate::error::{CatError, Result};
use crate::functor::FinFunctor;

/// Default cap on the raw candidate space of brute-force searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug)]
struct SetFunctorData {
    base: FinCat,
    sets: Vec<Vec<String>>,
    maps: Vec<Vec<usize>>,
}

/// A covariant functor from a finite category to finite sets. Cloning is
/// cheap.
#[derive(Clone)]
pub struct SetFunctor(Arc<SetFunctorData>);

impl PartialEq for SetFunctor {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.sets == other.0.sets && self.0.maps == other.0.maps && self.0.base == other.0.base)
    }
}

impl Eq for SetFunctor {}

impl fmt::Debug for SetFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = &self.0.base;
        let mut m = f.debug_map();
        for c in 0..base.num_objects() {
            m.entry(&base.object_name(c), &self.0.sets[c]);
        }
        for (i, a) in base.arrows().iter().enumerate() {
            if !base.is_identity(i) {
                m.entry(&a.id, &self.0.maps[i]);
            }
        }
        m.finish()
    }
}

impl SetFunctor {
    /// Validates that every map has the right shape, identities act as
    /// identities and composition is preserved.
    pub fn new(base: FinCat, sets: Vec<Vec<String>>, maps: Vec<Vec<usize>>) -> Result<SetFunctor> {
        let bad = |detail: String| Err(CatError::NotFunctorial { detail });
        if sets.len() != base.num_objects() || maps.len() != base.num_arrows() {
            return bad("value sets or maps have the wrong length".into());
        }
        for (c, set) in sets.iter().enumerate() {
            let mut seen = std::collections::HashSet::new();
            for x in set {
                if !seen.insert(x) {
                    return bad(format!("element `{x}` repeated at `{}`", base.object_name(c)));
                }
            }
        }
        for (f, a) in base.arrows().iter().enumerate() {
            if maps[f].len() != sets[a.dom].len() || maps[f].iter().any(|&y| y >= sets[a.cod].len()) {
                return bad(format!("map of `{}` is not a function between its value sets", a.id));
            }
        }
        for c in 0..base.num_objects() {
            if maps[base.identity(c)].iter().enumerate().any(|(x, &y)| x != y) {
                return bad(format!("identity of `{}` does not act trivially", base.object_name(c)));
            }
        }
        for f in 0..base.num_arrows() {
            for &g in base.arrows_out_of(base.cod(f)) {
                let gf = base.comp(g, f);
                if (0..sets[base.dom(f)].len()).any(|x| maps[gf][x] != maps[g][maps[f][x]]) {
                    return bad(format!(
                        "composite {} . {} is not preserved",
                        base.arrow_name(g),
                        base.arrow_name(f)
                    ));
                }
            }
        }
        Ok(SetFunctor(Arc::new(SetFunctorData { base, sets, maps })))
    }

    /// Builds the maps from an action `(arrow, element) ↦ element`.
    pub fn from_fn(base: FinCat, sets: Vec<Vec<String>>, act: impl Fn(usize, usize) -> usize) -> Result<SetFunctor> {
        let maps = (0..base.num_arrows())
            .map(|f| (0..sets[base.dom(f)].len()).map(|x| act(f, x)).collect())
            .collect();
        SetFunctor::new(base, sets, maps)
    }

    /// Every value set equal to `elements`, every arrow acting as the identity.
    pub fn constant(base: &FinCat, elements: &[&str]) -> SetFunctor {
        let set: Vec<String> = elements.iter().map(|s| s.to_string()).collect();
        SetFunctor::from_fn(base.clone(), vec![set; base.num_objects()], |_, x| x).expect("constant functor")
    }

    /// The terminal functor with value `{*}` everywhere.
    pub fn singleton(base: &FinCat) -> SetFunctor {
        SetFunctor::constant(base, &["*"])
    }

    pub fn empty(base: &FinCat) -> SetFunctor {
        SetFunctor::constant(base, &[])
    }

    pub fn base(&self) -> &FinCat {
        &self.0.base
    }

    pub fn set(&self, c: usize) -> &[String] {
        &self.0.sets[c]
    }

    pub fn sets(&self) -> &[Vec<String>] {
        &self.0.sets
    }

    pub fn size(&self, c: usize) -> usize {
        self.0.sets[c].len()
    }

    pub fn total_size(&self) -> usize {
        self.0.sets.iter().map(Vec::len).sum()
    }

    pub fn map(&self, f: usize) -> &[usize] {
        &self.0.maps[f]
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.0.maps
    }

    pub fn apply(&self, f: usize, x: usize) -> usize {
        self.0.maps[f][x]
    }

    pub fn element_index(&self, c: usize, name: &str) -> Result<usize> {
        self.0.sets[c]
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| CatError::UnknownElement {
                object: self.base().object_name(c).to_string(),
                element: name.to_string(),
            })
    }

    /// `self ∘ along`.
    pub fn restrict(&self, along: &FinFunctor) -> Result<SetFunctor> {
        if along.target() != self.base() {
            return Err(CatError::BaseMismatch);
        }
        let src = along.source();
        let sets = (0..src.num_objects())
            .map(|c| self.0.sets[along.on_object(c)].clone())
            .collect();
        let maps = (0..src.num_arrows())
            .map(|f| self.0.maps[along.on_arrow(f)].clone())
            .collect();
        Ok(SetFunctor(Arc::new(SetFunctorData {
            base: src.clone(),
            sets,
            maps,
        })))
    }

    /// The same data read on the opposite base (a presheaf viewed as a
    /// covariant functor on the opposite, or back).
    pub fn on_opposite(&self) -> SetFunctor {
        SetFunctor(Arc::new(SetFunctorData {
            base: self.base().opposite(),
            sets: self.0.sets.clone(),
            maps: self.0.maps.clone(),
        }))
    }

    /// Same functor with value sets renamed to `0, 1, …`.
    pub fn with_numbered_elements(&self) -> SetFunctor {
        SetFunctor(Arc::new(SetFunctorData {
            base: self.base().clone(),
            sets: self
                .0
                .sets
                .iter()
                .map(|s| (0..s.len()).map(|i| i.to_string()).collect())
                .collect(),
            maps: self.0.maps.clone(),
        }))
    }
}

/// The representable presheaf `Hom(-, c)` on `C`, a functor on `C^op`.
pub fn yoneda(cat: &FinCat, c: usize) -> Result<SetFunctor> {
    if c >= cat.num_objects() {
        return Err(CatError::UnknownObject(c.to_string()));
    }
    let op = cat.opposite();
    let sets = (0..cat.num_objects())
        .map(|d| cat.hom(d, c).iter().map(|&h| cat.arrow_name(h).to_string()).collect())
        .collect();
    // g: d' → d in C acts as Hom(d, c) → Hom(d', c), h ↦ h ∘ g.
    SetFunctor::from_fn(op, sets, |g, i| {
        let (d_prime, d) = (cat.dom(g), cat.cod(g));
        let h = cat.hom(d, c)[i];
        let hg = cat.comp(h, g);
        cat.hom(d_prime, c).iter().position(|&k| k == hg).expect("composite lies in hom-set")
    })
}

/// Looks up the object by name and builds [`yoneda`].
pub fn yoneda_named(cat: &FinCat, c: &str) -> Result<SetFunctor> {
    yoneda(cat, cat.object_index(c)?)
}

/// The covariant representable `Hom(c, -)` on `C`.
pub fn yoneda_covariant(cat: &FinCat, c: usize) -> Result<SetFunctor> {
    if c >= cat.num_objects() {
        return Err(CatError::UnknownObject(c.to_string()));
    }
    let sets = (0..cat.num_objects())
        .map(|d| cat.hom(c, d).iter().map(|&h| cat.arrow_name(h).to_string()).collect())
        .collect();
    SetFunctor::from_fn(cat.clone(), sets, |g, i| {
        let h = cat.hom(c, cat.dom(g))[i];
        let gh = cat.comp(g, h);
        cat.hom(c, cat.cod(g)).iter().position(|&k| k == gh).expect("composite lies in hom-set")
    })
}

/// A category of elements with its projection to the base.
#[derive(Clone, Debug)]
pub struct Elements {
    pub category: FinCat,
    pub projection: FinFunctor,
    /// `(object, element)` for each object of `category`.
    pub elements: Vec<(usize, usize)>,
}

fn element_objects(functor: &SetFunctor, base: &FinCat) -> (Vec<(usize, usize)>, Vec<String>, Vec<Vec<usize>>) {
    let mut elements = Vec::new();
    let mut names = Vec::new();
    let mut index = vec![Vec::new(); base.num_objects()];
    for c in 0..base.num_objects() {
        for x in 0..functor.size(c) {
            index[c].push(elements.len());
            elements.push((c, x));
            names.push(pair_id(base.object_name(c), &functor.set(c)[x]));
        }
    }
    (elements, names, index)
}

/// Category of elements of a presheaf `F` on `C` (so `F.base() == C^op`):
/// objects `(c, x)` with `x ∈ F(c)`, and an arrow `(c,x) → (d,y)` for each
/// `f: c → d` in `C` with `F(f)(y) = x`. Arrow identifiers are `(f,y)`.
pub fn elements_presheaf(presheaf: &SetFunctor) -> Result<Elements> {
    let cat = presheaf.base().opposite();
    let (elements, names, index) = element_objects(presheaf, &cat);
    let mut arrows = Vec::new();
    let mut base_arrow = Vec::new();
    let mut lookup: HashMap<(usize, usize), usize> = HashMap::new();
    for (f, a) in cat.arrows().iter().enumerate() {
        for y in 0..presheaf.size(a.cod) {
            let x = presheaf.apply(f, y);
            lookup.insert((f, y), arrows.len());
            base_arrow.push(f);
            arrows.push(Arrow {
                id: pair_id(&a.id, &presheaf.set(a.cod)[y]),
                dom: index[a.dom][x],
                cod: index[a.cod][y],
            });
        }
    }
    let identity = elements.iter().map(|&(c, x)| lookup[&(cat.identity(c), x)]).collect();
    let cods: Vec<usize> = arrows.iter().map(|a| elements[a.cod].1).collect();
    let category = FinCat::from_fn(names, arrows, identity, |g, f| {
        let gf = cat.compose(base_arrow[g], base_arrow[f])?;
        lookup.get(&(gf, cods[g])).copied()
    })?;
    let projection = FinFunctor::new(
        category.clone(),
        cat,
        elements.iter().map(|e| e.0).collect(),
        base_arrow,
    )?;
    Ok(Elements {
        category,
        projection,
        elements,
    })
}

/// Category of elements of a covariant `P` on `C`: objects `(c, x)`, and an
/// arrow `(c,x) → (d,y)` for each `f: c → d` with `P(f)(x) = y`. Arrow
/// identifiers are `(f,x)`.
pub fn elements_covariant(functor: &SetFunctor) -> Result<Elements> {
    let cat = functor.base().clone();
    let (elements, names, _) = element_objects(functor, &cat);
    let mut arrows = Vec::new();
    let mut base_arrow = Vec::new();
    let mut lookup: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, &(c, x)) in elements.iter().enumerate() {
        for (j, &(d, y)) in elements.iter().enumerate() {
            for &f in cat.hom(c, d) {
                if functor.apply(f, x) == y {
                    lookup.insert((f, x), arrows.len());
                    base_arrow.push(f);
                    arrows.push(Arrow {
                        id: pair_id(cat.arrow_name(f), &functor.set(c)[x]),
                        dom: i,
                        cod: j,
                    });
                }
            }
        }
    }
    let identity = elements.iter().map(|&(c, x)| lookup[&(cat.identity(c), x)]).collect();
    let doms: Vec<usize> = arrows.iter().map(|a| elements[a.dom].1).collect();
    let category = FinCat::from_fn(names, arrows, identity, |g, f| {
        let gf = cat.compose(base_arrow[g], base_arrow[f])?;
        lookup.get(&(gf, doms[f])).copied()
    })?;
    let projection = FinFunctor::new(
        category.clone(),
        cat,
        elements.iter().map(|e| e.0).collect(),
        base_arrow,
    )?;
    Ok(Elements {
        category,
        projection,
        elements,
    })
}

/// The discrete opfibration `p: 𝔽 → C` of a covariant `G`, built from
/// coproducts: `𝔽₀ = ⨿_c G(c)`, `𝔽₁ = ⨿_f G(dom f)`, with `d₀` the
/// inclusion of `G(dom f)` and `d₁` on the summand of `f` equal to the
/// inclusion of `G(cod f)` after `G(f)`.
#[derive(Clone, Debug)]
pub struct OpFibration {
    pub total: FinCat,
    pub projection: FinFunctor,
    /// Isomorphism over `C` from `total` to `elements_covariant(G)`.
    pub to_elements: FinFunctor,
    pub elements: Elements,
}

pub fn discrete_opfibration(functor: &SetFunctor) -> Result<OpFibration> {
    let cat = functor.base();
    // μ_c: G(c) → 𝔽₀
    let mut offsets = Vec::with_capacity(cat.num_objects());
    let mut objects = Vec::new();
    for c in 0..cat.num_objects() {
        offsets.push(objects.len());
        for x in functor.set(c) {
            objects.push(pair_id(cat.object_name(c), x));
        }
    }
    // J_f: G(dom f) → 𝔽₁
    let mut arrow_offsets = Vec::with_capacity(cat.num_arrows());
    let mut arrows = Vec::new();
    for (f, a) in cat.arrows().iter().enumerate() {
        arrow_offsets.push(arrows.len());
        for x in 0..functor.size(a.dom) {
            arrows.push(Arrow {
                id: pair_id(&a.id, &functor.set(a.dom)[x]),
                dom: offsets[a.dom] + x,
                cod: offsets[a.cod] + functor.apply(f, x),
            });
        }
    }
    let mut summand = vec![(0, 0); arrows.len()];
    for f in 0..cat.num_arrows() {
        for x in 0..functor.size(cat.dom(f)) {
            summand[arrow_offsets[f] + x] = (f, x);
        }
    }
    let identity = (0..cat.num_objects())
        .flat_map(|c| (0..functor.size(c)).map(move |x| (c, x)))
        .map(|(c, x)| arrow_offsets[cat.identity(c)] + x)
        .collect();
    let total = FinCat::from_fn(objects, arrows, identity, |g, f| {
        let ((gb, _), (fb, x)) = (summand[g], summand[f]);
        Some(arrow_offsets[cat.compose(gb, fb)?] + x)
    })?;
    let projection = FinFunctor::new(
        total.clone(),
        cat.clone(),
        (0..cat.num_objects())
            .flat_map(|c| std::iter::repeat_n(c, functor.size(c)))
            .collect(),
        summand.iter().map(|s| s.0).collect(),
    )?;

    let elements = elements_covariant(functor)?;
    let mut elem_index = HashMap::new();
    for (i, e) in elements.elements.iter().enumerate() {
        elem_index.insert(*e, i);
    }
    let mut elem_arrow = HashMap::new();
    for (k, a) in elements.category.arrows().iter().enumerate() {
        let base = elements.projection.on_arrow(k);
        elem_arrow.insert((base, elements.elements[a.dom].1), k);
    }
    let obj_map = (0..cat.num_objects())
        .flat_map(|c| (0..functor.size(c)).map(move |x| (c, x)))
        .map(|e| elem_index[&e])
        .collect();
    let arr_map = summand.iter().map(|s| elem_arrow[s]).collect();
    let to_elements = FinFunctor::new(total.clone(), elements.category.clone(), obj_map, arr_map)?;
    if !(to_elements.is_injective_on_objects()
        && to_elements.is_faithful()
        && to_elements.is_full()
        && total.num_objects() == elements.category.num_objects()
        && total.num_arrows() == elements.category.num_arrows())
    {
        return Err(CatError::NotFunctorial {
            detail: "opfibration is not isomorphic to the category of elements".into(),
        });
    }
    Ok(OpFibration {
        total,
        projection,
        to_elements,
        elements,
    })
}

/// A natural transformation between set-valued functors on the same base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTransformation {
    source: SetFunctor,
    target: SetFunctor,
    components: Vec<Vec<usize>>,
}

impl NatTransformation {
    /// Checks shapes and every naturality square.
    pub fn new(source: SetFunctor, target: SetFunctor, components: Vec<Vec<usize>>) -> Result<Self> {
        if source.base() != target.base() {
            return Err(CatError::BaseMismatch);
        }
        let base = source.base();
        let bad = |detail: String| Err(CatError::NotFunctorial { detail });
        if components.len() != base.num_objects() {
            return bad("wrong number of components".into());
        }
        for c in 0..base.num_objects() {
            if components[c].len() != source.size(c) || components[c].iter().any(|&y| y >= target.size(c)) {
                return bad(format!("component at `{}` is not a function", base.object_name(c)));
            }
        }
        for (f, a) in base.arrows().iter().enumerate() {
            for x in 0..source.size(a.dom) {
                if target.apply(f, components[a.dom][x]) != components[a.cod][source.apply(f, x)] {
                    return bad(format!("naturality fails at `{}`", a.id));
                }
            }
        }
        Ok(NatTransformation {
            source,
            target,
            components,
        })
    }

    pub(crate) fn new_unchecked(source: SetFunctor, target: SetFunctor, components: Vec<Vec<usize>>) -> Self {
        NatTransformation {
            source,
            target,
            components,
        }
    }

    pub fn identity(functor: &SetFunctor) -> NatTransformation {
        let components = (0..functor.base().num_objects())
            .map(|c| (0..functor.size(c)).collect())
            .collect();
        NatTransformation::new_unchecked(functor.clone(), functor.clone(), components)
    }

    pub fn source(&self) -> &SetFunctor {
        &self.source
    }

    pub fn target(&self) -> &SetFunctor {
        &self.target
    }

    pub fn component(&self, c: usize) -> &[usize] {
        &self.components[c]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &NatTransformation) -> Result<NatTransformation> {
        if self.target != next.source {
            return Err(CatError::BaseMismatch);
        }
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(c, comp)| comp.iter().map(|&x| next.components[c][x]).collect())
            .collect();
        Ok(NatTransformation::new_unchecked(
            self.source.clone(),
            next.target.clone(),
            components,
        ))
    }

    /// Every component is a bijection.
    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().enumerate().all(|(c, comp)| {
            comp.len() == self.target.size(c) && {
                let mut seen = vec![false; comp.len()];
                comp.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
            }
        })
    }

    /// Renders the components as `obj:[x↦y,…];…`.
    pub fn render(&self) -> String {
        let base = self.source.base();
        (0..base.num_objects())
            .map(|c| {
                let body: Vec<String> = self.components[c]
                    .iter()
                    .enumerate()
                    .map(|(x, &y)| format!("{}>{}", self.source.set(c)[x], self.target.set(c)[y]))
                    .collect();
                format!("{}:[{}]", base.object_name(c), body.join(","))
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Size of the raw product space `∏_c |G(c)|^|F(c)|`, saturating.
pub fn component_space(source: &SetFunctor, target: &SetFunctor) -> u128 {
    let mut total: u128 = 1;
    for c in 0..source.base().num_objects() {
        for _ in 0..source.size(c) {
            total = total.saturating_mul(target.size(c) as u128);
        }
    }
    total
}

/// Every natural transformation `F → G`, found by exhaustive search and
/// listed in lexicographic order of their components.
pub fn nat_transformations(source: &SetFunctor, target: &SetFunctor, budget: u64) -> Result<Vec<NatTransformation>> {
    if source.base() != target.base() {
        return Err(CatError::BaseMismatch);
    }
    let space = component_space(source, target);
    if space > budget as u128 {
        return Err(CatError::SearchBudgetExceeded {
            candidates: space,
            budget,
            explored: 0.0,
        });
    }
    let base = source.base();
    // Flatten (c, x) in order; a constraint (f, p, q) reads G(f)(α[p]) == α[q]
    // and is checked once both positions are assigned.
    let mut position = Vec::with_capacity(base.num_objects());
    let mut slots = Vec::new();
    for c in 0..base.num_objects() {
        position.push(slots.len());
        for x in 0..source.size(c) {
            slots.push((c, x));
        }
    }
    let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); slots.len()];
    for (f, a) in base.arrows().iter().enumerate() {
        if base.is_identity(f) {
            continue;
        }
        for x in 0..source.size(a.dom) {
            let p = position[a.dom] + x;
            let q = position[a.cod] + source.apply(f, x);
            checks[p.max(q)].push((f, p, q));
        }
    }
    let mut assignment = vec![0usize; slots.len()];
    let mut out = Vec::new();
    search_nat(source, target, &slots, &checks, 0, &mut assignment, &mut out, &position);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search_nat(
    source: &SetFunctor,
    target: &SetFunctor,
    slots: &[(usize, usize)],
    checks: &[Vec<(usize, usize, usize)>],
    depth: usize,
    assignment: &mut Vec<usize>,
    out: &mut Vec<NatTransformation>,
    position: &[usize],
) {
    if depth == slots.len() {
        let base = source.base();
        let components = (0..base.num_objects())
            .map(|c| assignment[position[c]..position[c] + source.size(c)].to_vec())
            .collect();
        out.push(NatTransformation::new_unchecked(source.clone(), target.clone(), components));
        return;
    }
    let c = slots[depth].0;
    for y in 0..target.size(c) {
        assignment[depth] = y;
        let ok = checks[depth]
            .iter()
            .all(|&(f, p, q)| target.apply(f, assignment[p]) == assignment[q]);
        if ok {
            search_nat(source, target, slots, checks, depth + 1, assignment, out, position);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn yoneda_values() {
        let t = fixtures::term();
        let y = yoneda(&t, 0).unwrap();
        assert_eq!(y.set(0), &["id_*"]);
        let a2 = fixtures::arrow2();
        let y = yoneda_named(&a2, "b").unwrap();
        assert_eq!(y.set(0), &["f"]);
        assert_eq!(y.set(1), &["id_b"]);
        let p = fixtures::pair();
        let y = yoneda_named(&p, "b").unwrap();
        assert_eq!(y.set(0), &["f", "g"]);
        assert_eq!(y.set(1), &["id_b"]);
        assert!(matches!(yoneda_named(&p, "z"), Err(CatError::UnknownObject(_))));
    }

    #[test]
    fn elements_of_representable_on_arrow2() {
        let a2 = fixtures::arrow2();
        let els = elements_presheaf(&yoneda_named(&a2, "b").unwrap()).unwrap();
        let cat = &els.category;
        assert_eq!(cat.objects(), &["(a,f)", "(b,id_b)"]);
        assert_eq!(cat.num_arrows(), 3);
        assert_eq!(cat.hom(0, 1).len(), 1);
        assert!(cat.hom(1, 0).is_empty());
    }

    #[test]
    fn elements_of_empty_presheaf() {
        let t = fixtures::term();
        let els = elements_presheaf(&SetFunctor::empty(&t.opposite())).unwrap();
        assert!(els.category.is_empty());
    }

    #[test]
    fn representable_elements_have_terminal_object() {
        for cat in [fixtures::arrow2(), fixtures::pair(), fixtures::span()] {
            for c in 0..cat.num_objects() {
                let els = elements_presheaf(&yoneda(&cat, c).unwrap()).unwrap();
                let top = els
                    .elements
                    .iter()
                    .position(|&(d, h)| d == c && yoneda(&cat, c).unwrap().set(c)[h] == cat.arrow_name(cat.identity(c)))
                    .unwrap();
                for e in 0..els.category.num_objects() {
                    assert_eq!(els.category.hom(e, top).len(), 1);
                }
            }
        }
    }

    #[test]
    fn covariant_elements_examples() {
        let a2 = fixtures::arrow2();
        let single = elements_covariant(&SetFunctor::singleton(&a2)).unwrap();
        assert_eq!(single.category.num_objects(), 2);
        assert_eq!(single.category.num_arrows(), 3);

        let p = SetFunctor::new(
            a2.clone(),
            vec![vec!["0".into(), "1".into()], vec!["*".into()]],
            vec![vec![0, 0], vec![0, 1], vec![0]],
        )
        .unwrap();
        let els = elements_covariant(&p).unwrap();
        let cat = &els.category;
        assert_eq!(cat.num_objects(), 3);
        let non_id: Vec<_> = (0..cat.num_arrows()).filter(|&f| !cat.is_identity(f)).collect();
        assert_eq!(non_id.len(), 2);
        assert!(non_id.iter().all(|&f| cat.object_name(cat.cod(f)) == "(b,*)"));

        let gap = SetFunctor::new(a2, vec![vec![], vec!["*".into()]], vec![vec![], vec![], vec![0]]).unwrap();
        let els = elements_covariant(&gap).unwrap();
        assert_eq!(els.category.objects(), &["(b,*)"]);
    }

    #[test]
    fn opfibration_examples() {
        let t = fixtures::term();
        let two = SetFunctor::constant(&t, &["0", "1"]);
        let op = discrete_opfibration(&two).unwrap();
        assert_eq!(op.total.num_objects(), 2);
        assert_eq!(op.total.num_arrows(), 2);

        let a2 = fixtures::arrow2();
        let g = SetFunctor::new(
            a2,
            vec![vec!["0".into(), "1".into()], vec!["u".into(), "v".into()]],
            vec![vec![0, 0], vec![0, 1], vec![0, 1]],
        )
        .unwrap();
        let op = discrete_opfibration(&g).unwrap();
        let total = &op.total;
        let non_id: Vec<_> = (0..total.num_arrows()).filter(|&f| !total.is_identity(f)).collect();
        assert_eq!(non_id.len(), 2);
        for f in non_id {
            assert_eq!(total.object_name(total.cod(f)), "(b,u)");
        }
    }

    #[test]
    fn nat_counts() {
        let t = fixtures::term();
        let one = SetFunctor::singleton(&t);
        assert_eq!(nat_transformations(&one, &one, DEFAULT_BUDGET).unwrap().len(), 1);

        let y = yoneda_named(&fixtures::pair(), "b").unwrap();
        let nats = nat_transformations(&y, &y, DEFAULT_BUDGET).unwrap();
        assert_eq!(nats.len(), 1);
        assert_eq!(nats[0], NatTransformation::identity(&y));
    }

    #[test]
    fn nat_budget_enforced() {
        let t = fixtures::term();
        let big = SetFunctor::constant(&t, &["0", "1", "2", "3", "4", "5", "6", "7"]);
        let r = nat_transformations(&big, &big, 1000);
        assert!(matches!(r, Err(CatError::SearchBudgetExceeded { candidates: 16777216, .. })));
    }
}
