//! Finite categories given by explicit object lists, arrow lists, identities
//! and a total composition table.
//!
//! Composition is always written in "g after f" order: `compose(g, f)` is
//! defined exactly when `cod(f) == dom(g)` and has domain `dom(f)` and
//! codomain `cod(g)`.
//!
//! Objects and arrows are addressed by dense indices (`usize`) in the order
//! they were listed; their string identifiers are opaque and only used for
//! lookup and rendering. Two categories are equal when they have the same
//! identifiers in the same order and the same tables.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{CatError, Result};
use crate::unionfind::UnionFind;

/// Largest number of arrows a category may have.
pub const MAX_ARROWS: usize = 5000;

const NONE: u32 = u32::MAX;

/// Renders a structured identifier `(a,b)`.
pub fn pair_id(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub dom: usize,
    pub cod: usize,
}

#[derive(Debug)]
struct CatData {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identity: Vec<usize>,
    compose: Vec<u32>,
    ob_index: HashMap<String, usize>,
    ar_index: HashMap<String, usize>,
    homs: Vec<Vec<usize>>,
    into: Vec<Vec<usize>>,
    out_of: Vec<Vec<usize>>,
}

/// A validated finite category. Cloning is cheap.
#[derive(Clone)]
pub struct FinCat(Arc<CatData>);

impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.objects == other.0.objects
                && self.0.arrows == other.0.arrows
                && self.0.identity == other.0.identity
                && self.0.compose == other.0.compose)
    }
}

impl Eq for FinCat {}

impl fmt::Debug for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinCat")
            .field("objects", &self.0.objects)
            .field(
                "arrows",
                &self
                    .0
                    .arrows
                    .iter()
                    .map(|a| format!("{}: {} -> {}", a.id, self.0.objects[a.dom], self.0.objects[a.cod]))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl FinCat {
    /// Builds and validates a category, asking `compose(g, f)` for every
    /// composable pair.
    pub fn from_fn(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identity: Vec<usize>,
        mut compose: impl FnMut(usize, usize) -> Option<usize>,
    ) -> Result<FinCat> {
        if arrows.len() > MAX_ARROWS {
            return Err(CatError::TooLarge {
                arrows: arrows.len(),
                max: MAX_ARROWS,
            });
        }
        let n_ob = objects.len();
        let n_ar = arrows.len();
        let mut ob_index = HashMap::with_capacity(n_ob);
        for (i, o) in objects.iter().enumerate() {
            if ob_index.insert(o.clone(), i).is_some() {
                return Err(CatError::DuplicateId { id: o.clone() });
            }
        }
        let mut ar_index = HashMap::with_capacity(n_ar);
        for (i, a) in arrows.iter().enumerate() {
            if a.dom >= n_ob || a.cod >= n_ob {
                return Err(CatError::DomCodMismatch {
                    detail: format!("arrow `{}` refers to a missing object", a.id),
                });
            }
            if ar_index.insert(a.id.clone(), i).is_some() {
                return Err(CatError::DuplicateId { id: a.id.clone() });
            }
        }
        if identity.len() != n_ob {
            let object = objects.get(identity.len()).cloned().unwrap_or_default();
            return Err(CatError::MissingIdentity { object });
        }
        for (c, &i) in identity.iter().enumerate() {
            if i >= n_ar {
                return Err(CatError::MissingIdentity {
                    object: objects[c].clone(),
                });
            }
            if arrows[i].dom != c || arrows[i].cod != c {
                return Err(CatError::DomCodMismatch {
                    detail: format!(
                        "identity `{}` of `{}` is not an endomorphism of it",
                        arrows[i].id, objects[c]
                    ),
                });
            }
        }

        let mut homs = vec![Vec::new(); n_ob * n_ob];
        let mut into = vec![Vec::new(); n_ob];
        let mut out_of = vec![Vec::new(); n_ob];
        for (i, a) in arrows.iter().enumerate() {
            homs[a.dom * n_ob + a.cod].push(i);
            into[a.cod].push(i);
            out_of[a.dom].push(i);
        }

        let mut table = vec![NONE; n_ar * n_ar];
        for f in 0..n_ar {
            for &g in &out_of[arrows[f].cod] {
                let gf = compose(g, f).ok_or_else(|| CatError::IncompleteComposition {
                    g: arrows[g].id.clone(),
                    f: arrows[f].id.clone(),
                })?;
                if gf >= n_ar {
                    return Err(CatError::DomCodMismatch {
                        detail: format!("composite of ({}, {}) is not an arrow", arrows[g].id, arrows[f].id),
                    });
                }
                if arrows[gf].dom != arrows[f].dom || arrows[gf].cod != arrows[g].cod {
                    return Err(CatError::DomCodMismatch {
                        detail: format!(
                            "composite {} . {} = {} has the wrong domain or codomain",
                            arrows[g].id, arrows[f].id, arrows[gf].id
                        ),
                    });
                }
                table[g * n_ar + f] = gf as u32;
            }
        }

        let data = CatData {
            objects,
            arrows,
            identity,
            compose: table,
            ob_index,
            ar_index,
            homs,
            into,
            out_of,
        };
        let cat = FinCat(Arc::new(data));
        cat.check_laws()?;
        Ok(cat)
    }

    fn check_laws(&self) -> Result<()> {
        let d = &self.0;
        for (f, a) in d.arrows.iter().enumerate() {
            if self.comp(d.identity[a.cod], f) != f || self.comp(f, d.identity[a.dom]) != f {
                return Err(CatError::UnitLaw { arrow: a.id.clone() });
            }
        }
        for f in 0..d.arrows.len() {
            for &g in &d.out_of[d.arrows[f].cod] {
                let gf = self.comp(g, f);
                for &h in &d.out_of[d.arrows[g].cod] {
                    if self.comp(h, gf) != self.comp(self.comp(h, g), f) {
                        return Err(CatError::NonAssociative {
                            h: d.arrows[h].id.clone(),
                            g: d.arrows[g].id.clone(),
                            f: d.arrows[f].id.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The empty category.
    pub fn empty() -> FinCat {
        FinCat::from_fn(vec![], vec![], vec![], |_, _| None).expect("empty category is valid")
    }

    /// The discrete category on the given objects, with identities `id_<object>`.
    pub fn discrete<S: AsRef<str>>(objects: &[S]) -> Result<FinCat> {
        FinCat::presented(&objects.iter().map(|s| s.as_ref()).collect::<Vec<_>>(), &[], &[])
    }

    /// Builds a category from object names, non-identity arrows `(id, dom, cod)`
    /// and non-unit composition entries `(g, f, g∘f)`. Identities are named
    /// `id_<object>`.
    pub fn presented(
        objects: &[&str],
        arrows: &[(&str, &str, &str)],
        compose: &[(&str, &str, &str)],
    ) -> Result<FinCat> {
        let desc = CategoryDescription {
            objects: objects.iter().map(|s| s.to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|(id, dom, cod)| ArrowDescription {
                    id: id.to_string(),
                    dom: dom.to_string(),
                    cod: cod.to_string(),
                })
                .collect(),
            identity: objects
                .iter()
                .map(|o| (o.to_string(), format!("id_{o}")))
                .collect(),
            compose: compose
                .iter()
                .map(|(g, f, gf)| CompositionEntry {
                    g: g.to_string(),
                    f: f.to_string(),
                    gf: gf.to_string(),
                })
                .collect(),
        };
        validate_category(&desc.with_inferred_units())
    }

    pub fn num_objects(&self) -> usize {
        self.0.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.0.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.objects.is_empty()
    }

    pub fn objects(&self) -> &[String] {
        &self.0.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.0.arrows
    }

    pub fn object_name(&self, c: usize) -> &str {
        &self.0.objects[c]
    }

    pub fn arrow_name(&self, f: usize) -> &str {
        &self.0.arrows[f].id
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.0
            .ob_index
            .get(name)
            .copied()
            .ok_or_else(|| CatError::UnknownObject(name.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.0
            .ar_index
            .get(name)
            .copied()
            .ok_or_else(|| CatError::UnknownArrow(name.to_string()))
    }

    pub fn dom(&self, f: usize) -> usize {
        self.0.arrows[f].dom
    }

    pub fn cod(&self, f: usize) -> usize {
        self.0.arrows[f].cod
    }

    pub fn identity(&self, c: usize) -> usize {
        self.0.identity[c]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        let a = &self.0.arrows[f];
        a.dom == a.cod && self.0.identity[a.dom] == f
    }

    /// `g ∘ f`, or `None` when `cod(f) != dom(g)`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        let v = self.0.compose[g * self.0.arrows.len() + f];
        (v != NONE).then_some(v as usize)
    }

    /// `g ∘ f` for a pair known to be composable.
    ///
    /// Panics if the pair is not composable.
    pub fn comp(&self, g: usize, f: usize) -> usize {
        self.compose(g, f).unwrap_or_else(|| {
            panic!(
                "arrows `{}` and `{}` are not composable",
                self.arrow_name(g),
                self.arrow_name(f)
            )
        })
    }

    /// Arrows `x → y`, in listing order.
    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        &self.0.homs[x * self.num_objects() + y]
    }

    /// Arrows with codomain `c`.
    pub fn arrows_into(&self, c: usize) -> &[usize] {
        &self.0.into[c]
    }

    /// Arrows with domain `c`.
    pub fn arrows_out_of(&self, c: usize) -> &[usize] {
        &self.0.out_of[c]
    }

    /// The opposite category: same objects and arrow identifiers, domain and
    /// codomain swapped, and `g ∘ f` here equal to `f ∘ g` in `self`.
    pub fn opposite(&self) -> FinCat {
        let arrows = self
            .arrows()
            .iter()
            .map(|a| Arrow {
                id: a.id.clone(),
                dom: a.cod,
                cod: a.dom,
            })
            .collect();
        FinCat::from_fn(self.0.objects.clone(), arrows, self.0.identity.clone(), |g, f| {
            self.compose(f, g)
        })
        .expect("opposite of a valid category is valid")
    }

    /// Product category with objects `(a,b)` and arrows `(u,v)`.
    pub fn product(&self, other: &FinCat) -> FinCat {
        let n1 = self.num_objects();
        let n2 = other.num_objects();
        let m2 = other.num_arrows();
        let mut objects = Vec::with_capacity(n1 * n2);
        for a in self.objects() {
            for b in other.objects() {
                objects.push(pair_id(a, b));
            }
        }
        let mut arrows = Vec::with_capacity(self.num_arrows() * m2);
        for u in self.arrows() {
            for v in other.arrows() {
                arrows.push(Arrow {
                    id: pair_id(&u.id, &v.id),
                    dom: u.dom * n2 + v.dom,
                    cod: u.cod * n2 + v.cod,
                });
            }
        }
        let identity = (0..n1 * n2)
            .map(|ab| self.identity(ab / n2) * m2 + other.identity(ab % n2))
            .collect();
        FinCat::from_fn(objects, arrows, identity, |g, f| {
            let u = self.compose(g / m2, f / m2)?;
            let v = other.compose(g % m2, f % m2)?;
            Some(u * m2 + v)
        })
        .expect("product of valid categories is valid")
    }

    /// Disjoint union; identifiers are prefixed with `0.` and `1.`.
    pub fn coproduct(&self, other: &FinCat) -> FinCat {
        let n1 = self.num_objects();
        let m1 = self.num_arrows();
        let objects = self
            .objects()
            .iter()
            .map(|o| format!("0.{o}"))
            .chain(other.objects().iter().map(|o| format!("1.{o}")))
            .collect();
        let arrows = self
            .arrows()
            .iter()
            .map(|a| Arrow {
                id: format!("0.{}", a.id),
                dom: a.dom,
                cod: a.cod,
            })
            .chain(other.arrows().iter().map(|a| Arrow {
                id: format!("1.{}", a.id),
                dom: a.dom + n1,
                cod: a.cod + n1,
            }))
            .collect();
        let identity = self
            .0
            .identity
            .iter()
            .copied()
            .chain(other.0.identity.iter().map(|i| i + m1))
            .collect();
        FinCat::from_fn(objects, arrows, identity, |g, f| match (g < m1, f < m1) {
            (true, true) => self.compose(g, f),
            (false, false) => other.compose(g - m1, f - m1).map(|x| x + m1),
            _ => None,
        })
        .expect("coproduct of valid categories is valid")
    }

    /// Number of connected components of the underlying undirected graph.
    pub fn connected_components(&self) -> usize {
        let mut uf = UnionFind::new(self.num_objects());
        for a in self.arrows() {
            uf.union(a.dom, a.cod);
        }
        uf.count()
    }

    /// Nonempty and connected as an undirected graph.
    pub fn is_connected(&self) -> bool {
        self.connected_components() == 1
    }

    /// Nonempty, every pair of objects has a cocone, and every parallel pair
    /// is coequalized by some arrow.
    pub fn is_filtered(&self) -> bool {
        let n = self.num_objects();
        if n == 0 {
            return false;
        }
        for a in 0..n {
            for b in a + 1..n {
                let cocone = (0..n).any(|c| !self.hom(a, c).is_empty() && !self.hom(b, c).is_empty());
                if !cocone {
                    return false;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let hom = self.hom(a, b);
                for (i, &u) in hom.iter().enumerate() {
                    for &v in &hom[i + 1..] {
                        let coequalized = self
                            .arrows_out_of(b)
                            .iter()
                            .any(|&w| self.comp(w, u) == self.comp(w, v));
                        if !coequalized {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Whether `f` is an isomorphism, returning its inverse.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let a = &self.0.arrows[f];
        self.hom(a.cod, a.dom).iter().copied().find(|&g| {
            self.comp(g, f) == self.identity(a.dom) && self.comp(f, g) == self.identity(a.cod)
        })
    }

    /// Some isomorphism `x → y`, if one exists.
    pub fn find_isomorphism(&self, x: usize, y: usize) -> Option<usize> {
        self.hom(x, y).iter().copied().find(|&f| self.inverse(f).is_some())
    }

    /// The full description, with unit compositions left implicit.
    pub fn to_description(&self) -> CategoryDescription {
        let d = &self.0;
        let mut compose = Vec::new();
        for f in 0..d.arrows.len() {
            if self.is_identity(f) {
                continue;
            }
            for &g in &d.out_of[d.arrows[f].cod] {
                if self.is_identity(g) {
                    continue;
                }
                compose.push(CompositionEntry {
                    g: d.arrows[g].id.clone(),
                    f: d.arrows[f].id.clone(),
                    gf: d.arrows[self.comp(g, f)].id.clone(),
                });
            }
        }
        CategoryDescription {
            objects: d.objects.clone(),
            arrows: d
                .arrows
                .iter()
                .map(|a| ArrowDescription {
                    id: a.id.clone(),
                    dom: d.objects[a.dom].clone(),
                    cod: d.objects[a.cod].clone(),
                })
                .collect(),
            identity: d
                .objects
                .iter()
                .enumerate()
                .map(|(c, o)| (o.clone(), d.arrows[d.identity[c]].id.clone()))
                .collect(),
            compose,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDescription {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionEntry {
    pub g: String,
    pub f: String,
    pub gf: String,
}

/// An unvalidated category as written in JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryDescription {
    pub objects: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowDescription>,
    #[serde(default)]
    pub identity: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<CompositionEntry>,
}

impl CategoryDescription {
    /// Adds identity arrows that are named in `identity` but not listed, and
    /// the unit compositions `id ∘ f = f = f ∘ id` that are not given
    /// explicitly.
    pub fn with_inferred_units(&self) -> CategoryDescription {
        let mut out = self.clone();
        let listed: HashSet<String> = out.arrows.iter().map(|a| a.id.clone()).collect();
        for obj in &self.objects {
            if let Some(id) = self.identity.get(obj) {
                if !listed.contains(id) {
                    out.arrows.push(ArrowDescription {
                        id: id.clone(),
                        dom: obj.clone(),
                        cod: obj.clone(),
                    });
                }
            }
        }
        let present: HashSet<(String, String)> =
            out.compose.iter().map(|e| (e.g.clone(), e.f.clone())).collect();
        let mut extra = Vec::new();
        for a in &out.arrows {
            for (side, obj) in [(0, &a.cod), (1, &a.dom)] {
                let Some(id) = self.identity.get(obj) else { continue };
                let key = if side == 0 {
                    (id.clone(), a.id.clone())
                } else {
                    (a.id.clone(), id.clone())
                };
                if !present.contains(&key) && !extra.iter().any(|e: &CompositionEntry| (e.g.clone(), e.f.clone()) == key) {
                    extra.push(CompositionEntry {
                        g: key.0,
                        f: key.1,
                        gf: a.id.clone(),
                    });
                }
            }
        }
        out.compose.extend(extra);
        out
    }
}

/// Validates a category description exactly as given: every composable pair,
/// including unit pairs, must have a composition entry.
pub fn validate_category(raw: &CategoryDescription) -> Result<FinCat> {
    let mut ob_index = HashMap::new();
    for (i, o) in raw.objects.iter().enumerate() {
        if ob_index.insert(o.as_str(), i).is_some() {
            return Err(CatError::DuplicateId { id: o.clone() });
        }
    }
    let lookup_ob = |name: &str| {
        ob_index
            .get(name)
            .copied()
            .ok_or_else(|| CatError::UnknownObject(name.to_string()))
    };
    let mut arrows = Vec::with_capacity(raw.arrows.len());
    let mut ar_index = HashMap::new();
    for (i, a) in raw.arrows.iter().enumerate() {
        arrows.push(Arrow {
            id: a.id.clone(),
            dom: lookup_ob(&a.dom)?,
            cod: lookup_ob(&a.cod)?,
        });
        if ar_index.insert(a.id.as_str(), i).is_some() {
            return Err(CatError::DuplicateId { id: a.id.clone() });
        }
    }
    let lookup_ar = |name: &str| {
        ar_index
            .get(name)
            .copied()
            .ok_or_else(|| CatError::UnknownArrow(name.to_string()))
    };
    for key in raw.identity.keys() {
        lookup_ob(key)?;
    }
    let mut identity = Vec::with_capacity(raw.objects.len());
    for o in &raw.objects {
        let id = raw
            .identity
            .get(o)
            .ok_or_else(|| CatError::MissingIdentity { object: o.clone() })?;
        identity.push(lookup_ar(id)?);
    }
    if arrows.len() > MAX_ARROWS {
        return Err(CatError::TooLarge {
            arrows: arrows.len(),
            max: MAX_ARROWS,
        });
    }
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for e in &raw.compose {
        let (g, f, gf) = (lookup_ar(&e.g)?, lookup_ar(&e.f)?, lookup_ar(&e.gf)?);
        if arrows[f].cod != arrows[g].dom {
            return Err(CatError::DomCodMismatch {
                detail: format!("composition entry for non-composable pair ({}, {})", e.g, e.f),
            });
        }
        if let Some(prev) = table.insert((g, f), gf) {
            if prev != gf {
                return Err(CatError::Input(format!(
                    "conflicting composition entries for ({}, {})",
                    e.g, e.f
                )));
            }
        }
    }
    FinCat::from_fn(raw.objects.clone(), arrows, identity, |g, f| table.get(&(g, f)).copied())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn arrow2_raw() -> CategoryDescription {
        fixtures::arrow2().to_description().with_inferred_units()
    }

    #[test]
    fn term_validates() {
        let t = fixtures::term();
        assert_eq!(t.num_objects(), 1);
        assert_eq!(t.num_arrows(), 1);
    }

    #[test]
    fn missing_unit_entry_is_incomplete() {
        let mut raw = arrow2_raw();
        raw.compose.retain(|e| !(e.g == "f" && e.f == "id_a"));
        assert_eq!(
            validate_category(&raw),
            Err(CatError::IncompleteComposition {
                g: "f".into(),
                f: "id_a".into()
            })
        );
    }

    #[test]
    fn missing_identity_reported() {
        let mut raw = arrow2_raw();
        raw.identity.remove("b");
        assert!(matches!(validate_category(&raw), Err(CatError::MissingIdentity { object }) if object == "b"));
    }

    #[test]
    fn non_composable_entry_is_dom_cod_mismatch() {
        let mut raw = arrow2_raw();
        raw.compose.push(CompositionEntry {
            g: "f".into(),
            f: "f".into(),
            gf: "f".into(),
        });
        assert!(matches!(validate_category(&raw), Err(CatError::DomCodMismatch { .. })));
    }

    #[test]
    fn both_one_object_two_arrow_monoids_validate() {
        // e∘e = id gives Z/2, e∘e = e gives IDEM; both associative.
        for ee in ["id_x", "e"] {
            let c = FinCat::presented(&["x"], &[("e", "x", "x")], &[("e", "e", ee)]).unwrap();
            assert_eq!(c.num_arrows(), 2);
        }
    }

    #[test]
    fn non_associative_table_rejected() {
        // (b∘b)∘b = a∘b = b but b∘(b∘b) = b∘a = a.
        let r = FinCat::presented(
            &["x"],
            &[("a", "x", "x"), ("b", "x", "x")],
            &[("a", "a", "a"), ("a", "b", "b"), ("b", "a", "a"), ("b", "b", "a")],
        );
        assert!(matches!(r, Err(CatError::NonAssociative { .. })));
    }

    #[test]
    fn opposite_examples() {
        assert_eq!(fixtures::term().opposite(), fixtures::term());
        let a2 = fixtures::arrow2();
        assert_eq!(a2.opposite().opposite(), a2);
        assert_ne!(a2.opposite(), a2);
        assert_eq!(fixtures::span().opposite(), fixtures::cospan());
    }

    #[test]
    fn connectivity() {
        assert!(fixtures::term().is_connected());
        assert!(!FinCat::empty().is_connected());
        assert!(!fixtures::term().coproduct(&fixtures::term()).is_connected());
        assert!(fixtures::span().is_connected());
    }

    #[test]
    fn filteredness() {
        assert!(fixtures::term().is_filtered());
        assert!(!fixtures::pair().is_filtered());
        assert!(fixtures::cospan().is_filtered());
        assert!(!fixtures::span().is_filtered());
        assert!(!FinCat::empty().is_filtered());
        assert!(fixtures::idem().is_filtered());
    }

    #[test]
    fn arrow_cap_enforced() {
        let names: Vec<String> = (0..=MAX_ARROWS).map(|i| format!("o{i}")).collect();
        let arrows = names
            .iter()
            .enumerate()
            .map(|(i, n)| Arrow {
                id: format!("id_{n}"),
                dom: i,
                cod: i,
            })
            .collect();
        let r = FinCat::from_fn(names.clone(), arrows, (0..names.len()).collect(), |g, f| {
            (g == f).then_some(g)
        });
        assert!(matches!(r, Err(CatError::TooLarge { .. })));
    }

    #[test]
    fn product_has_pair_identities() {
        let p = fixtures::arrow2().product(&fixtures::arrow2());
        assert_eq!(p.num_objects(), 4);
        assert_eq!(p.num_arrows(), 9);
        assert_eq!(p.arrow_name(p.identity(0)), "(id_a,id_a)");
    }
}
