//! Functors between finite categories, comma categories and full
//! subcategories.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::category::{Arrow, FinCat};
use crate::error::{CatError, Result};

/// A functor between finite categories, stored as an object map and an
/// arrow map on indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinFunctor {
    source: FinCat,
    target: FinCat,
    obj_map: Vec<usize>,
    arr_map: Vec<usize>,
}

impl FinFunctor {
    /// Validates that the maps respect domains, codomains, identities and
    /// composition.
    pub fn new(source: FinCat, target: FinCat, obj_map: Vec<usize>, arr_map: Vec<usize>) -> Result<Self> {
        let bad = |detail: String| Err(CatError::NotFunctorial { detail });
        if obj_map.len() != source.num_objects() || arr_map.len() != source.num_arrows() {
            return bad("object or arrow map has the wrong length".into());
        }
        if obj_map.iter().any(|&o| o >= target.num_objects()) || arr_map.iter().any(|&a| a >= target.num_arrows()) {
            return bad("map lands outside the target category".into());
        }
        for (f, a) in source.arrows().iter().enumerate() {
            let img = arr_map[f];
            if target.dom(img) != obj_map[a.dom] || target.cod(img) != obj_map[a.cod] {
                return bad(format!("image of `{}` has the wrong domain or codomain", a.id));
            }
        }
        for c in 0..source.num_objects() {
            if arr_map[source.identity(c)] != target.identity(obj_map[c]) {
                return bad(format!("identity of `{}` is not preserved", source.object_name(c)));
            }
        }
        for f in 0..source.num_arrows() {
            for &g in source.arrows_out_of(source.cod(f)) {
                if arr_map[source.comp(g, f)] != target.comp(arr_map[g], arr_map[f]) {
                    return bad(format!(
                        "composite {} . {} is not preserved",
                        source.arrow_name(g),
                        source.arrow_name(f)
                    ));
                }
            }
        }
        Ok(FinFunctor {
            source,
            target,
            obj_map,
            arr_map,
        })
    }

    pub fn identity(c: &FinCat) -> FinFunctor {
        FinFunctor {
            source: c.clone(),
            target: c.clone(),
            obj_map: (0..c.num_objects()).collect(),
            arr_map: (0..c.num_arrows()).collect(),
        }
    }

    /// The functor sending everything to `object` and its identity.
    pub fn constant(source: &FinCat, target: &FinCat, object: usize) -> FinFunctor {
        FinFunctor {
            source: source.clone(),
            target: target.clone(),
            obj_map: vec![object; source.num_objects()],
            arr_map: vec![target.identity(object); source.num_arrows()],
        }
    }

    pub fn source(&self) -> &FinCat {
        &self.source
    }

    pub fn target(&self) -> &FinCat {
        &self.target
    }

    pub fn on_object(&self, c: usize) -> usize {
        self.obj_map[c]
    }

    pub fn on_arrow(&self, f: usize) -> usize {
        self.arr_map[f]
    }

    pub fn obj_map(&self) -> &[usize] {
        &self.obj_map
    }

    pub fn arr_map(&self) -> &[usize] {
        &self.arr_map
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FinFunctor) -> Result<FinFunctor> {
        if first.target != self.source {
            return Err(CatError::BaseMismatch);
        }
        Ok(FinFunctor {
            source: first.source.clone(),
            target: self.target.clone(),
            obj_map: first.obj_map.iter().map(|&o| self.obj_map[o]).collect(),
            arr_map: first.arr_map.iter().map(|&a| self.arr_map[a]).collect(),
        })
    }

    /// The same maps viewed between opposite categories.
    pub fn opposite(&self) -> FinFunctor {
        FinFunctor {
            source: self.source.opposite(),
            target: self.target.opposite(),
            obj_map: self.obj_map.clone(),
            arr_map: self.arr_map.clone(),
        }
    }

    pub fn is_injective_on_objects(&self) -> bool {
        let mut seen = vec![false; self.target.num_objects()];
        self.obj_map.iter().all(|&o| !std::mem::replace(&mut seen[o], true))
    }

    pub fn is_faithful(&self) -> bool {
        let n = self.source.num_objects();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let hom = self.source.hom(x, y);
                let mut imgs: Vec<usize> = hom.iter().map(|&f| self.arr_map[f]).collect();
                imgs.sort_unstable();
                imgs.dedup();
                imgs.len() == hom.len()
            })
        })
    }

    pub fn is_full(&self) -> bool {
        let n = self.source.num_objects();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let target_hom = self.target.hom(self.obj_map[x], self.obj_map[y]);
                target_hom
                    .iter()
                    .all(|t| self.source.hom(x, y).iter().any(|&f| self.arr_map[f] == *t))
            })
        })
    }

    /// Injective on objects and arrows, and full onto its image.
    pub fn is_full_embedding(&self) -> bool {
        self.is_injective_on_objects() && self.is_faithful() && self.is_full()
    }

    pub fn to_description(&self) -> FunctorDescription {
        FunctorDescription {
            objects: (0..self.source.num_objects())
                .map(|c| {
                    (
                        self.source.object_name(c).to_string(),
                        self.target.object_name(self.obj_map[c]).to_string(),
                    )
                })
                .collect(),
            arrows: (0..self.source.num_arrows())
                .filter(|&f| !self.source.is_identity(f))
                .map(|f| {
                    (
                        self.source.arrow_name(f).to_string(),
                        self.target.arrow_name(self.arr_map[f]).to_string(),
                    )
                })
                .collect(),
        }
    }

    /// Reads object and arrow maps by identifier. Identity arrows may be
    /// omitted; they are sent to the identity of the image object.
    pub fn from_description(desc: &FunctorDescription, source: &FinCat, target: &FinCat) -> Result<FinFunctor> {
        let mut obj_map = vec![usize::MAX; source.num_objects()];
        for (k, v) in &desc.objects {
            obj_map[source.object_index(k)?] = target.object_index(v)?;
        }
        if let Some(c) = obj_map.iter().position(|&o| o == usize::MAX) {
            return Err(CatError::NotFunctorial {
                detail: format!("object `{}` is not mapped", source.object_name(c)),
            });
        }
        let mut arr_map = vec![usize::MAX; source.num_arrows()];
        for (k, v) in &desc.arrows {
            arr_map[source.arrow_index(k)?] = target.arrow_index(v)?;
        }
        for c in 0..source.num_objects() {
            let id = source.identity(c);
            if arr_map[id] == usize::MAX {
                arr_map[id] = target.identity(obj_map[c]);
            }
        }
        if let Some(f) = arr_map.iter().position(|&a| a == usize::MAX) {
            return Err(CatError::NotFunctorial {
                detail: format!("arrow `{}` is not mapped", source.arrow_name(f)),
            });
        }
        FinFunctor::new(source.clone(), target.clone(), obj_map, arr_map)
    }
}

/// Object and arrow maps keyed by identifier, as written in JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorDescription {
    pub objects: BTreeMap<String, String>,
    #[serde(default)]
    pub arrows: BTreeMap<String, String>,
}

/// The comma category `(F ↓ G)` with its two projections.
#[derive(Clone, Debug)]
pub struct Comma {
    pub category: FinCat,
    /// Projection to the source of `F`.
    pub left: FinFunctor,
    /// Projection to the source of `G`.
    pub right: FinFunctor,
    /// `(a, b, h)` for each object, with `h: F a → G b`.
    pub triples: Vec<(usize, usize, usize)>,
}

/// Objects are triples `(a, b, h: F a → G b)`; arrows `(a,b,h) → (a',b',h')`
/// are pairs `(u, v)` with `G(v) ∘ h = h' ∘ F(u)`.
pub fn comma_category(f: &FinFunctor, g: &FinFunctor) -> Result<Comma> {
    if f.target != g.target {
        return Err(CatError::BaseMismatch);
    }
    let (a_cat, b_cat, c_cat) = (&f.source, &g.source, &f.target);
    let mut triples = Vec::new();
    let mut objects = Vec::new();
    for a in 0..a_cat.num_objects() {
        for b in 0..b_cat.num_objects() {
            for &h in c_cat.hom(f.on_object(a), g.on_object(b)) {
                triples.push((a, b, h));
                objects.push(format!(
                    "({},{},{})",
                    a_cat.object_name(a),
                    b_cat.object_name(b),
                    c_cat.arrow_name(h)
                ));
            }
        }
    }
    let mut arrows = Vec::new();
    let mut pairs = Vec::new();
    let mut index: HashMap<(usize, usize, usize, usize), usize> = HashMap::new();
    let mut identity = vec![usize::MAX; triples.len()];
    for (i, &(a, b, h)) in triples.iter().enumerate() {
        for (j, &(a2, b2, h2)) in triples.iter().enumerate() {
            for &u in a_cat.hom(a, a2) {
                for &v in b_cat.hom(b, b2) {
                    if c_cat.comp(g.on_arrow(v), h) != c_cat.comp(h2, f.on_arrow(u)) {
                        continue;
                    }
                    let k = arrows.len();
                    if i == j && u == a_cat.identity(a) && v == b_cat.identity(b) {
                        identity[i] = k;
                    }
                    index.insert((i, j, u, v), k);
                    pairs.push((u, v));
                    arrows.push(Arrow {
                        id: format!(
                            "({},{}):{}->{}",
                            a_cat.arrow_name(u),
                            b_cat.arrow_name(v),
                            objects[i],
                            objects[j]
                        ),
                        dom: i,
                        cod: j,
                    });
                }
            }
        }
    }
    let ends: Vec<(usize, usize)> = arrows.iter().map(|x| (x.dom, x.cod)).collect();
    let category = FinCat::from_fn(objects, arrows, identity, |x, y| {
        let (u1, v1) = pairs[x];
        let (u0, v0) = pairs[y];
        index
            .get(&(ends[y].0, ends[x].1, a_cat.compose(u1, u0)?, b_cat.compose(v1, v0)?))
            .copied()
    })?;
    let left = FinFunctor::new(
        category.clone(),
        a_cat.clone(),
        triples.iter().map(|t| t.0).collect(),
        pairs.iter().map(|p| p.0).collect(),
    )?;
    let right = FinFunctor::new(
        category.clone(),
        b_cat.clone(),
        triples.iter().map(|t| t.1).collect(),
        pairs.iter().map(|p| p.1).collect(),
    )?;
    Ok(Comma {
        category,
        left,
        right,
        triples,
    })
}

/// The full subcategory on `objects` (in the given order) and its inclusion.
pub fn full_subcategory(c: &FinCat, objects: &[usize]) -> Result<(FinCat, FinFunctor)> {
    let mut local = vec![usize::MAX; c.num_objects()];
    for (i, &o) in objects.iter().enumerate() {
        local[o] = i;
    }
    let mut arrows = Vec::new();
    let mut arr_map = Vec::new();
    let mut local_arrow = HashMap::new();
    for &x in objects {
        for &y in objects {
            for &f in c.hom(x, y) {
                local_arrow.insert(f, arrows.len());
                arr_map.push(f);
                arrows.push(Arrow {
                    id: c.arrow_name(f).to_string(),
                    dom: local[x],
                    cod: local[y],
                });
            }
        }
    }
    let identity = objects.iter().map(|&o| local_arrow[&c.identity(o)]).collect();
    let sub = FinCat::from_fn(
        objects.iter().map(|&o| c.object_name(o).to_string()).collect(),
        arrows,
        identity,
        |g, f| local_arrow.get(&c.compose(arr_map[g], arr_map[f])?).copied(),
    )?;
    let incl = FinFunctor::new(sub.clone(), c.clone(), objects.to_vec(), arr_map)?;
    Ok((sub, incl))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn comma_of_identities_on_term() {
        let t = fixtures::term();
        let id = FinFunctor::identity(&t);
        let comma = comma_category(&id, &id).unwrap();
        assert_eq!(comma.category.num_objects(), 1);
        assert_eq!(comma.category.num_arrows(), 1);
    }

    #[test]
    fn comma_const_a_over_arrow2_is_arrow_shaped() {
        let (t, a2) = (fixtures::term(), fixtures::arrow2());
        let const_a = FinFunctor::constant(&t, &a2, 0);
        let comma = comma_category(&const_a, &FinFunctor::identity(&a2)).unwrap();
        let cat = &comma.category;
        assert_eq!(cat.objects(), &["(*,a,id_a)", "(*,b,f)"]);
        assert_eq!(cat.num_arrows(), 3);
        assert_eq!(cat.hom(0, 1).len(), 1);
        assert_eq!(cat.hom(1, 0).len(), 0);
    }

    #[test]
    fn comma_with_no_arrows_is_empty() {
        let (t, a2) = (fixtures::term(), fixtures::arrow2());
        let const_b = FinFunctor::constant(&t, &a2, 1);
        let const_a = FinFunctor::constant(&t, &a2, 0);
        let comma = comma_category(&const_b, &const_a).unwrap();
        assert!(comma.category.is_empty());
    }

    #[test]
    fn invalid_functor_rejected() {
        let (a2, p) = (fixtures::arrow2(), fixtures::pair());
        // a ↦ b, b ↦ a cannot carry f anywhere
        let r = FinFunctor::new(a2.clone(), p.clone(), vec![1, 0], vec![0, 3, 2]);
        assert!(matches!(r, Err(CatError::NotFunctorial { .. })));
    }

    #[test]
    fn full_subcategory_of_span() {
        let span = fixtures::span();
        let (sub, incl) = full_subcategory(&span, &[0, 2]).unwrap();
        assert_eq!(sub.objects(), &["a", "c"]);
        assert_eq!(sub.num_arrows(), 3);
        assert!(incl.is_full_embedding());
    }
}
