//! Pointwise Kan extensions, extension of presheaves along full embeddings,
//! and final functors.
//!
//! Over `Set`, a functor `i: B → A` is final exactly when every comma
//! category `(a ↓ i)` is nonempty and connected. Given a compatible family of
//! elements over an epimorphic family, the zig-zags relating its members are
//! the paths in `(a ↓ i)`, so the family-indexed condition collapses to the
//! singleton family and reads as connectedness.

use std::collections::HashMap;

use crate::category::FinCat;
use crate::colimits::{colimit, limit, Limit, QuotientSet};
use crate::error::{CatError, Result};
use crate::flat::is_flat;
use crate::functor::{comma_category, FinFunctor};
use crate::setfun::{elements_covariant, yoneda_covariant, SetFunctor};

fn point() -> FinCat {
    FinCat::presented(&["*"], &[], &[]).expect("one-object category")
}

/// `Lan_f F` with the colimit computed at each object.
#[derive(Clone, Debug)]
pub struct LeftKan {
    pub functor: SetFunctor,
    /// `colim((f ↓ c) → D → Set)` for each object `c`.
    pub colimits: Vec<QuotientSet>,
    /// Objects of `(f ↓ c)` as `(d, h: f(d) → c)`, in block order.
    pub index: Vec<Vec<(usize, usize)>>,
}

/// `Lan_f F(c) = colim((f ↓ c) → D → Set)`. An arrow `g: c → c'` sends the
/// class of `((d, h), x)` to the class of `((d, g∘h), x)`.
pub fn lan(f: &FinFunctor, functor: &SetFunctor) -> Result<LeftKan> {
    if f.source() != functor.base() {
        return Err(CatError::BaseMismatch);
    }
    let c_cat = f.target().clone();
    let pt = point();
    let mut colimits = Vec::new();
    let mut index = Vec::new();
    let mut lookup = Vec::new();
    for c in 0..c_cat.num_objects() {
        let comma = comma_category(f, &FinFunctor::constant(&pt, &c_cat, c))?;
        let q = colimit(&functor.restrict(&comma.left)?);
        let idx: Vec<(usize, usize)> = comma.triples.iter().map(|&(d, _, h)| (d, h)).collect();
        lookup.push(idx.iter().enumerate().map(|(k, &t)| (t, k)).collect::<HashMap<_, _>>());
        index.push(idx);
        colimits.push(q);
    }
    let sets = colimits
        .iter()
        .map(|q| (0..q.num_classes()).map(|k| q.class_label(k)).collect())
        .collect();
    let result = SetFunctor::from_fn(c_cat.clone(), sets, |g, k| {
        let (c, c2) = (c_cat.dom(g), c_cat.cod(g));
        let q = &colimits[c];
        let (block, x) = q.carrier_element(q.representative(k));
        let (d, h) = index[c][block];
        let target = lookup[c2][&(d, c_cat.comp(g, h))];
        colimits[c2].inject(target, x)
    })?;
    Ok(LeftKan {
        functor: result,
        colimits,
        index,
    })
}

/// `Ran_f F` with the limit computed at each object.
#[derive(Clone, Debug)]
pub struct RightKan {
    pub functor: SetFunctor,
    /// `lim((c ↓ f) → D → Set)` for each object `c`.
    pub limits: Vec<Limit>,
    /// Objects of `(c ↓ f)` as `(d, h: c → f(d))`.
    pub index: Vec<Vec<(usize, usize)>>,
}

/// `Ran_f F(c) = lim((c ↓ f) → D → Set)`. An arrow `u: c → c'` sends a
/// family `(x_{(d,h)})` to `(x_{(d, h'∘u)})_{(d, h')}`.
pub fn ran(f: &FinFunctor, functor: &SetFunctor) -> Result<RightKan> {
    if f.source() != functor.base() {
        return Err(CatError::BaseMismatch);
    }
    let c_cat = f.target().clone();
    let pt = point();
    let mut limits = Vec::new();
    let mut index = Vec::new();
    let mut lookup = Vec::new();
    let mut family_lookup = Vec::new();
    let mut sets = Vec::new();
    for c in 0..c_cat.num_objects() {
        let comma = comma_category(&FinFunctor::constant(&pt, &c_cat, c), f)?;
        let diagram = functor.restrict(&comma.right)?;
        let lim = limit(&diagram);
        let idx: Vec<(usize, usize)> = comma.triples.iter().map(|&(_, d, h)| (d, h)).collect();
        lookup.push(idx.iter().enumerate().map(|(k, &t)| (t, k)).collect::<HashMap<_, _>>());
        family_lookup.push(
            lim.families
                .iter()
                .enumerate()
                .map(|(k, fam)| (fam.clone(), k))
                .collect::<HashMap<_, _>>(),
        );
        sets.push((0..lim.len()).map(|k| lim.render(&diagram, k)).collect());
        index.push(idx);
        limits.push(lim);
    }
    let result = SetFunctor::from_fn(c_cat.clone(), sets, |u, k| {
        let (c, c2) = (c_cat.dom(u), c_cat.cod(u));
        let family = &limits[c].families[k];
        let moved: Vec<usize> = index[c2]
            .iter()
            .map(|&(d, h2)| family[lookup[c][&(d, c_cat.comp(h2, u))]])
            .collect();
        family_lookup[c2][&moved]
    })?;
    Ok(RightKan {
        functor: result,
        limits,
        index,
    })
}

/// Extension of a presheaf along a full embedding, with the comparison maps.
#[derive(Clone, Debug)]
pub struct FlatExtension {
    /// `F̃`, a presheaf on `C`.
    pub functor: SetFunctor,
    /// `colim(F ∘ π_c)` over `A_c^op` for each object `c` of `C`.
    pub colimits: Vec<QuotientSet>,
    /// Objects of `A_c` as `(d, h: c → j(d))`, in block order.
    pub index: Vec<Vec<(usize, usize)>>,
    /// `χ_d: F(d) → F̃(j(d))` for each object `d` of `D`, as class indices.
    pub chi: Vec<Vec<usize>>,
}

fn require_embedding(j: &FinFunctor) -> Result<()> {
    if !j.is_injective_on_objects() {
        return Err(CatError::NotAnEmbedding {
            detail: "not injective on objects".into(),
        });
    }
    if !j.is_faithful() {
        return Err(CatError::NotAnEmbedding {
            detail: "not injective on arrows".into(),
        });
    }
    if !j.is_full() {
        return Err(CatError::NotAnEmbedding {
            detail: "not full".into(),
        });
    }
    Ok(())
}

/// `F̃(c) = colim(F ∘ π_c)` where `A_c` is the category of pairs
/// `(d, h: c → j(d))` and `π_c` projects to `D`. A presheaf arrow
/// `u: c → c'` acts `F̃(c') → F̃(c)` by `((d, h), x) ↦ ((d, h∘u), x)`.
pub fn flat_extend(j: &FinFunctor, presheaf: &SetFunctor) -> Result<FlatExtension> {
    require_embedding(j)?;
    let d_cat = j.source();
    if presheaf.base().opposite() != *d_cat {
        return Err(CatError::BaseMismatch);
    }
    let c_cat = j.target().clone();
    let mut colimits = Vec::new();
    let mut index = Vec::new();
    let mut lookup = Vec::new();
    for c in 0..c_cat.num_objects() {
        let hom_c = yoneda_covariant(&c_cat, c)?.restrict(j)?;
        let els = elements_covariant(&hom_c)?;
        let q = colimit(&presheaf.restrict(&els.projection.opposite())?);
        let idx: Vec<(usize, usize)> = els
            .elements
            .iter()
            .map(|&(d, k)| (d, c_cat.hom(c, j.on_object(d))[k]))
            .collect();
        lookup.push(idx.iter().enumerate().map(|(k, &t)| (t, k)).collect::<HashMap<_, _>>());
        index.push(idx);
        colimits.push(q);
    }
    let sets = colimits
        .iter()
        .map(|q| (0..q.num_classes()).map(|k| q.class_label(k)).collect())
        .collect();
    let result = SetFunctor::from_fn(c_cat.opposite(), sets, |u, k| {
        // u: c → c' in C; the presheaf map goes F̃(c') → F̃(c).
        let (c, c2) = (c_cat.dom(u), c_cat.cod(u));
        let q = &colimits[c2];
        let (block, x) = q.carrier_element(q.representative(k));
        let (d, h) = index[c2][block];
        colimits[c].inject(lookup[c][&(d, c_cat.comp(h, u))], x)
    })?;
    let chi = (0..d_cat.num_objects())
        .map(|d| {
            let jd = j.on_object(d);
            let block = lookup[jd][&(d, c_cat.identity(jd))];
            colimits[jd].injection(block).to_vec()
        })
        .collect();
    Ok(FlatExtension {
        functor: result,
        colimits,
        index,
        chi,
    })
}

/// The partition of `⨿_{(a,z) ∈ A_c} F(a)` by the single-span relation:
/// `((a,z),x) ~ ((a',z'),x')` when some `f: a → b`, `g: a' → b` have
/// `j(f)∘z = j(g)∘z'` and some `y ∈ F(b)` restricts to `x` and `x'`.
///
/// For flat `F` this relation is already an equivalence; a failure of
/// transitivity is reported rather than closed over.
pub fn flat_extend_quotient(j: &FinFunctor, presheaf: &SetFunctor, c: usize) -> Result<QuotientSet> {
    require_embedding(j)?;
    let d_cat = j.source().clone();
    let c_cat = j.target().clone();
    if presheaf.base().opposite() != d_cat {
        return Err(CatError::BaseMismatch);
    }
    if c >= c_cat.num_objects() {
        return Err(CatError::UnknownObject(c.to_string()));
    }
    if !is_flat(presheaf) {
        return Err(CatError::FlatnessRequired);
    }
    let mut blocks = Vec::new();
    let mut block_of = HashMap::new();
    for d in 0..d_cat.num_objects() {
        for &h in c_cat.hom(c, j.on_object(d)) {
            block_of.insert((d, h), blocks.len());
            blocks.push((d, h));
        }
    }
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut n = 0;
    for &(d, _) in &blocks {
        offsets.push(n);
        n += presheaf.size(d);
    }

    // Each apex ((b, w), y) relates everything it restricts to.
    let mut related = vec![false; n * n];
    for &(b, w) in &blocks {
        for y in 0..presheaf.size(b) {
            let mut below = Vec::new();
            for &f in d_cat.arrows_into(b) {
                let a = d_cat.dom(f);
                let jf = j.on_arrow(f);
                for &z in c_cat.hom(c, j.on_object(a)) {
                    if c_cat.comp(jf, z) == w {
                        below.push(offsets[block_of[&(a, z)]] + presheaf.apply(f, y));
                    }
                }
            }
            for &p in &below {
                for &q in &below {
                    related[p * n + q] = true;
                }
            }
        }
    }
    let labels: Vec<usize> = (0..n)
        .map(|p| (0..=p).find(|&q| related[p * n + q]).expect("relation is reflexive"))
        .collect();
    let tags = blocks
        .iter()
        .map(|&(d, h)| format!("({},{})", d_cat.object_name(d), c_cat.arrow_name(h)))
        .collect();
    let elements = blocks.iter().map(|&(d, _)| presheaf.set(d).to_vec()).collect();
    let quotient = QuotientSet::from_labels(tags, elements, &labels);
    for p in 0..n {
        for q in 0..n {
            if related[p * n + q] != (labels[p] == labels[q]) {
                return Err(CatError::RelationNotTransitive {
                    detail: format!("{} and {}", quotient.label(p), quotient.label(q)),
                });
            }
        }
    }
    Ok(quotient)
}

/// Why a functor fails to be final.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinalityViolation {
    pub object: String,
    /// `(a ↓ i)` is empty, as opposed to nonempty and disconnected.
    pub empty: bool,
}

/// `None` when every `(a ↓ i)` is nonempty and connected.
pub fn finality(i: &FinFunctor) -> Result<Option<FinalityViolation>> {
    let a_cat = i.target();
    for a in 0..a_cat.num_objects() {
        let under = elements_covariant(&yoneda_covariant(a_cat, a)?.restrict(i)?)?;
        if under.category.is_empty() || !under.category.is_connected() {
            return Ok(Some(FinalityViolation {
                object: a_cat.object_name(a).to_string(),
                empty: under.category.is_empty(),
            }));
        }
    }
    Ok(None)
}

pub fn is_final(i: &FinFunctor) -> Result<bool> {
    Ok(finality(i)?.is_none())
}

/// Whether `(b, x) ↦ (i(b), x)` induces a bijection `colim(D∘i) → colim(D)`.
pub fn restriction_preserves_colimit(i: &FinFunctor, diagram: &SetFunctor) -> Result<bool> {
    if i.target() != diagram.base() {
        return Err(CatError::BaseMismatch);
    }
    let whole = colimit(diagram);
    let restricted = colimit(&diagram.restrict(i)?);
    let mut image = vec![usize::MAX; restricted.num_classes()];
    let mut hit = vec![false; whole.num_classes()];
    for b in 0..i.source().num_objects() {
        for x in 0..diagram.size(i.on_object(b)) {
            let k = restricted.inject(b, x);
            let v = whole.inject(i.on_object(b), x);
            if image[k] == usize::MAX {
                image[k] = v;
                hit[v] = true;
            } else if image[k] != v {
                return Ok(false);
            }
        }
    }
    let mut seen = vec![false; whole.num_classes()];
    let injective = image.iter().all(|&v| !std::mem::replace(&mut seen[v], true));
    Ok(injective && hit.iter().all(|&h| h))
}

/// For final `i`, checks that restricting along `i` does not change the
/// colimit of `D`.
pub fn check_finality_theorem(i: &FinFunctor, diagram: &SetFunctor) -> Result<bool> {
    if let Some(v) = finality(i)? {
        return Err(CatError::NotFinal { object: v.object });
    }
    restriction_preserves_colimit(i, diagram)
}

/// Searches diagrams with value sets of size at most `max_size` for one whose
/// colimit changes size under restriction along `i`.
pub fn distinguishing_diagram(i: &FinFunctor, max_size: usize, budget: u64) -> Result<Option<SetFunctor>> {
    let mut found = None;
    crate::generate::for_each_set_functor(i.target(), max_size, budget, |d| {
        let restricted = match d.restrict(i) {
            Ok(r) => r,
            Err(_) => return true,
        };
        if colimit(d).num_classes() != colimit(&restricted).num_classes() {
            found = Some(d.clone());
            return false;
        }
        true
    })?;
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::setfun::{nat_transformations, yoneda, DEFAULT_BUDGET};

    fn const_obj(target: &FinCat, name: &str) -> FinFunctor {
        FinFunctor::constant(&fixtures::term(), target, target.object_index(name).unwrap())
    }

    #[test]
    fn lan_along_identity() {
        for (_, cat) in fixtures::all() {
            let f = SetFunctor::from_fn(
                cat.clone(),
                (0..cat.num_objects()).map(|_| vec!["p".to_string()]).collect(),
                |_, x| x,
            )
            .unwrap();
            let l = lan(&FinFunctor::identity(&cat), &f).unwrap();
            for c in 0..cat.num_objects() {
                assert_eq!(l.functor.size(c), f.size(c));
            }
        }
    }

    #[test]
    fn lan_along_points_of_arrow2() {
        let a2 = fixtures::arrow2();
        let f = SetFunctor::constant(&fixtures::term(), &["x", "y"]);
        let l = lan(&const_obj(&a2, "a"), &f).unwrap();
        assert_eq!((l.functor.size(0), l.functor.size(1)), (2, 2));
        let fmap = l.functor.map(a2.arrow_index("f").unwrap());
        assert_eq!(fmap, &[0, 1]);

        let l = lan(&const_obj(&a2, "b"), &f).unwrap();
        assert_eq!((l.functor.size(0), l.functor.size(1)), (0, 2));
    }

    #[test]
    fn ran_examples() {
        let a2 = fixtures::arrow2();
        let f = SetFunctor::constant(&fixtures::term(), &["x", "y", "z"]);
        // (b ↓ const_a) is empty, so the value at b is the empty limit.
        let r = ran(&const_obj(&a2, "a"), &f).unwrap();
        assert_eq!((r.functor.size(0), r.functor.size(1)), (3, 1));
        assert_eq!(r.functor.set(1), &["()".to_string()]);
        let r = ran(&const_obj(&a2, "b"), &f).unwrap();
        assert_eq!((r.functor.size(0), r.functor.size(1)), (3, 3));

        for (_, cat) in fixtures::all() {
            let s = SetFunctor::singleton(&cat);
            let r = ran(&FinFunctor::identity(&cat), &s).unwrap();
            assert!((0..cat.num_objects()).all(|c| r.functor.size(c) == 1));
        }
    }

    #[test]
    fn flat_extend_of_representable_is_representable() {
        let a2 = fixtures::arrow2();
        for (d_name, obj) in [("a", 0), ("b", 1)] {
            let term = fixtures::term();
            let j = const_obj(&a2, d_name);
            let ext = flat_extend(&j, &yoneda(&term, 0).unwrap()).unwrap();
            let y = yoneda(&a2, obj).unwrap();
            let isos: Vec<_> = nat_transformations(&ext.functor, &y, DEFAULT_BUDGET)
                .unwrap()
                .into_iter()
                .filter(|t| t.is_isomorphism())
                .collect();
            assert!(!isos.is_empty());
        }
    }

    #[test]
    fn flat_extend_point_into_arrow2() {
        let a2 = fixtures::arrow2();
        let f = SetFunctor::constant(&fixtures::term(), &["p", "q"]);
        let ext = flat_extend(&const_obj(&a2, "a"), &f).unwrap();
        assert_eq!((ext.functor.size(0), ext.functor.size(1)), (2, 0));
        assert_eq!(ext.chi, vec![vec![0, 1]]);
    }

    #[test]
    fn flat_extend_along_identity() {
        for (_, cat) in fixtures::all() {
            for c in 0..cat.num_objects() {
                let y = yoneda(&cat, c).unwrap();
                let ext = flat_extend(&FinFunctor::identity(&cat), &y).unwrap();
                for d in 0..cat.num_objects() {
                    assert_eq!(ext.functor.size(d), y.size(d));
                    let mut chi = ext.chi[d].clone();
                    chi.sort_unstable();
                    chi.dedup();
                    assert_eq!(chi.len(), y.size(d));
                }
            }
        }
    }

    #[test]
    fn flat_extend_rejects_non_embeddings() {
        let pair = fixtures::pair();
        let a2 = fixtures::arrow2();
        let collapse = FinFunctor::new(pair.clone(), a2, vec![0, 1], vec![0, 0, 1, 2]).unwrap();
        let y = yoneda(&pair, 1).unwrap();
        assert!(matches!(flat_extend(&collapse, &y), Err(CatError::NotAnEmbedding { .. })));
    }

    #[test]
    fn quotient_matches_extension() {
        let a2 = fixtures::arrow2();
        let term = fixtures::term();
        let j = const_obj(&a2, "b");
        let y = yoneda(&term, 0).unwrap();
        let ext = flat_extend(&j, &y).unwrap();
        for c in 0..2 {
            let q = flat_extend_quotient(&j, &y, c).unwrap();
            assert!(q.same_partition(&ext.colimits[c]));
            assert_eq!(q.num_classes(), a2.hom(c, 1).len());
        }
    }

    #[test]
    fn quotient_requires_flatness() {
        let pair = fixtures::pair();
        let f = SetFunctor::singleton(&pair.opposite());
        let j = FinFunctor::identity(&pair);
        assert_eq!(flat_extend_quotient(&j, &f, 0), Err(CatError::FlatnessRequired));
    }

    #[test]
    fn finality_examples() {
        let a2 = fixtures::arrow2();
        assert!(is_final(&FinFunctor::identity(&a2)).unwrap());
        assert!(is_final(&const_obj(&a2, "b")).unwrap());
        assert_eq!(
            finality(&const_obj(&a2, "a")).unwrap(),
            Some(FinalityViolation {
                object: "b".into(),
                empty: true
            })
        );
    }

    #[test]
    fn finality_theorem_examples() {
        let a2 = fixtures::arrow2();
        let d = SetFunctor::new(
            a2.clone(),
            vec![vec!["0".into(), "1".into()], vec!["u".into(), "v".into(), "w".into()]],
            vec![vec![0, 0], vec![0, 1], vec![0, 1, 2]],
        )
        .unwrap();
        assert!(check_finality_theorem(&const_obj(&a2, "b"), &d).unwrap());
        assert_eq!(colimit(&d).num_classes(), 3);
        assert!(check_finality_theorem(&FinFunctor::identity(&a2), &d).unwrap());
        assert!(matches!(
            check_finality_theorem(&const_obj(&a2, "a"), &d),
            Err(CatError::NotFinal { .. })
        ));
        let witness = distinguishing_diagram(&const_obj(&a2, "a"), 2, DEFAULT_BUDGET).unwrap();
        assert!(witness.is_some());
    }
}
