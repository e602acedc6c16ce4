//! Idempotent splitting and brute-force equivalence of finite categories.

use crate::category::{pair_id, Arrow, FinCat};
use crate::error::{CatError, Result};
use crate::functor::FinFunctor;

/// All `(c, e)` with `e: c → c` and `e∘e = e`, identities included.
pub fn idempotents(cat: &FinCat) -> Vec<(usize, usize)> {
    (0..cat.num_objects())
        .flat_map(|c| {
            cat.hom(c, c)
                .iter()
                .copied()
                .filter(|&e| cat.comp(e, e) == e)
                .map(move |e| (c, e))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// The idempotent completion with its embedding `c ↦ (c, id_c)`.
///
/// Objects are `(c, e)`; arrows `(c,e) → (d,e')` are the `f: c → d` with
/// `e'∘f = f = f∘e`, and the identity on `(c, e)` is `e`.
pub fn karoubi_envelope(cat: &FinCat) -> Result<(FinCat, FinFunctor)> {
    let objs = idempotents(cat);
    let objects: Vec<String> = objs
        .iter()
        .map(|&(c, e)| pair_id(cat.object_name(c), cat.arrow_name(e)))
        .collect();
    let mut arrows = Vec::new();
    let mut under = Vec::new();
    // index[(i, j)] maps an arrow of C to its arrow in the envelope.
    let mut index = std::collections::HashMap::new();
    for (i, &(c, e)) in objs.iter().enumerate() {
        for (j, &(d, e2)) in objs.iter().enumerate() {
            for &f in cat.hom(c, d) {
                if cat.comp(e2, f) == f && cat.comp(f, e) == f {
                    index.insert((i, j, f), arrows.len());
                    under.push(f);
                    arrows.push(Arrow {
                        id: format!("{}-{}->{}", objects[i], cat.arrow_name(f), objects[j]),
                        dom: i,
                        cod: j,
                    });
                }
            }
        }
    }
    let identity: Vec<usize> = objs.iter().enumerate().map(|(i, &(_, e))| index[&(i, i, e)]).collect();
    let ends: Vec<(usize, usize)> = arrows.iter().map(|a| (a.dom, a.cod)).collect();
    let envelope = FinCat::from_fn(objects, arrows, identity, |g, f| {
        index.get(&(ends[f].0, ends[g].1, cat.compose(under[g], under[f])?)).copied()
    })?;
    let obj_map: Vec<usize> = (0..cat.num_objects())
        .map(|c| objs.iter().position(|&(d, e)| d == c && e == cat.identity(c)).expect("identity is idempotent"))
        .collect();
    let arr_map = (0..cat.num_arrows())
        .map(|f| index[&(obj_map[cat.dom(f)], obj_map[cat.cod(f)], f)])
        .collect();
    let embedding = FinFunctor::new(cat.clone(), envelope.clone(), obj_map, arr_map)?;
    Ok((envelope, embedding))
}

/// A splitting `e = s∘r`, `r∘s = id`, through some object.
pub fn split(cat: &FinCat, e: usize) -> Option<(usize, usize)> {
    let c = cat.dom(e);
    for d in 0..cat.num_objects() {
        for &s in cat.hom(d, c) {
            for &r in cat.hom(c, d) {
                if cat.comp(s, r) == e && cat.comp(r, s) == cat.identity(d) {
                    return Some((s, r));
                }
            }
        }
    }
    None
}

/// First idempotent that does not split, if any.
pub fn unsplit_idempotent(cat: &FinCat) -> Option<usize> {
    idempotents(cat).into_iter().map(|(_, e)| e).find(|&e| split(cat, e).is_none())
}

pub fn is_cauchy_complete(cat: &FinCat) -> bool {
    unsplit_idempotent(cat).is_none()
}

/// An equivalence `F ⊣⊢ G` with its unit `id → G F` and counit `F G → id`,
/// given as one arrow per object.
#[derive(Clone, Debug)]
pub struct Equivalence {
    pub functor: FinFunctor,
    pub inverse: FinFunctor,
    pub unit: Vec<usize>,
    pub counit: Vec<usize>,
}

fn factorial_space(cat_c: &FinCat, cat_d: &FinCat) -> u128 {
    let mut space = (cat_d.num_objects() as u128).saturating_pow(cat_c.num_objects() as u32);
    for x in 0..cat_c.num_objects() {
        for y in 0..cat_c.num_objects() {
            for k in 1..=cat_c.hom(x, y).len() as u128 {
                space = space.saturating_mul(k);
            }
        }
    }
    space
}

struct EquivSearch<'a> {
    c: &'a FinCat,
    d: &'a FinCat,
    budget: u64,
    nodes: u64,
    /// Object maps started at the top level, for the explored fraction.
    first_level_done: usize,
}

impl EquivSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            let total = self.d.num_objects().max(1) as f64;
            return Err(CatError::SearchBudgetExceeded {
                candidates: factorial_space(self.c, self.d),
                budget: self.budget,
                explored: self.first_level_done as f64 / total,
            });
        }
        Ok(())
    }

    fn objects(&mut self, t: usize, obj: &mut Vec<usize>) -> Result<Option<Vec<usize>>> {
        let (c, d) = (self.c, self.d);
        if t == c.num_objects() {
            // Essential surjectivity.
            let covered = (0..d.num_objects()).all(|y| obj.iter().any(|&fx| d.find_isomorphism(fx, y).is_some()));
            if !covered {
                return Ok(None);
            }
            return self.arrows(obj);
        }
        for cand in 0..d.num_objects() {
            if t == 0 {
                self.first_level_done = cand;
            }
            self.tick()?;
            obj[t] = cand;
            let sizes_match = (0..=t).all(|s| {
                c.hom(s, t).len() == d.hom(obj[s], obj[t]).len() && c.hom(t, s).len() == d.hom(obj[t], obj[s]).len()
            });
            if sizes_match {
                if let Some(arr) = self.objects(t + 1, obj)? {
                    return Ok(Some(arr));
                }
            }
        }
        Ok(None)
    }

    fn arrows(&mut self, obj: &[usize]) -> Result<Option<Vec<usize>>> {
        let (c, d) = (self.c, self.d);
        let order: Vec<usize> = (0..c.num_arrows()).filter(|&f| !c.is_identity(f)).collect();
        let mut position = vec![usize::MAX; c.num_arrows()];
        for (t, &f) in order.iter().enumerate() {
            position[f] = t;
        }
        let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); order.len()];
        for &f in &order {
            for &g in c.arrows_out_of(c.cod(f)) {
                if c.is_identity(g) {
                    continue;
                }
                let gf = c.comp(g, f);
                let mut last = position[f].max(position[g]);
                if !c.is_identity(gf) {
                    last = last.max(position[gf]);
                }
                checks[last].push((g, f, gf));
            }
        }
        let mut map = vec![usize::MAX; c.num_arrows()];
        for x in 0..c.num_objects() {
            map[c.identity(x)] = d.identity(obj[x]);
        }
        let found = self.assign(0, &order, &checks, obj, &mut map)?;
        Ok(found.then_some(map))
    }

    fn assign(
        &mut self,
        t: usize,
        order: &[usize],
        checks: &[Vec<(usize, usize, usize)>],
        obj: &[usize],
        map: &mut Vec<usize>,
    ) -> Result<bool> {
        let (c, d) = (self.c, self.d);
        if t == order.len() {
            return Ok(true);
        }
        let f = order[t];
        let (x, y) = (c.dom(f), c.cod(f));
        for &cand in d.hom(obj[x], obj[y]) {
            // Faithful: no other arrow of hom(x, y) already uses cand.
            if c.hom(x, y).iter().any(|&h| h != f && map[h] == cand) {
                continue;
            }
            self.tick()?;
            map[f] = cand;
            if checks[t].iter().all(|&(g, f2, gf)| d.comp(map[g], map[f2]) == map[gf])
                && self.assign(t + 1, order, checks, obj, map)?
            {
                return Ok(true);
            }
            map[f] = usize::MAX;
        }
        Ok(false)
    }
}

/// Searches for a full, faithful, essentially surjective `F: C → D` and, if
/// one exists, builds and verifies a quasi-inverse with unit and counit.
/// `Ok(None)` is a definitive negative.
pub fn equivalent_categories(c: &FinCat, d: &FinCat, budget: u64) -> Result<Option<Equivalence>> {
    if c.num_objects() == 0 || d.num_objects() == 0 {
        if c.num_objects() == 0 && d.num_objects() == 0 {
            let f = FinFunctor::new(c.clone(), d.clone(), vec![], vec![])?;
            let g = FinFunctor::new(d.clone(), c.clone(), vec![], vec![])?;
            return Ok(Some(Equivalence {
                functor: f,
                inverse: g,
                unit: vec![],
                counit: vec![],
            }));
        }
        return Ok(None);
    }
    let mut search = EquivSearch {
        c,
        d,
        budget,
        nodes: 0,
        first_level_done: 0,
    };
    let mut obj = vec![0; c.num_objects()];
    let Some(arr) = search.objects(0, &mut obj)? else {
        return Ok(None);
    };
    let f = FinFunctor::new(c.clone(), d.clone(), obj.clone(), arr)?;
    build_quasi_inverse(f).map(Some)
}

fn build_quasi_inverse(f: FinFunctor) -> Result<Equivalence> {
    let (c, d) = (f.source().clone(), f.target().clone());
    let fail = |detail: &str| CatError::NotAnEmbedding { detail: detail.into() };
    // For each object y of D, a preimage x and an iso φ_y: F x → y.
    let mut g_obj = Vec::new();
    let mut phi = Vec::new();
    for y in 0..d.num_objects() {
        let (x, iso) = (0..c.num_objects())
            .find_map(|x| d.find_isomorphism(f.on_object(x), y).map(|iso| (x, iso)))
            .ok_or_else(|| fail("not essentially surjective"))?;
        g_obj.push(x);
        phi.push(iso);
    }
    let preimage = |x: usize, y: usize, target: usize| -> Result<usize> {
        c.hom(x, y)
            .iter()
            .copied()
            .find(|&h| f.on_arrow(h) == target)
            .ok_or_else(|| fail("not full"))
    };
    let inv = |a: usize| d.inverse(a).expect("isomorphism");
    let g_arr = (0..d.num_arrows())
        .map(|u| {
            let (y, y2) = (d.dom(u), d.cod(u));
            let t = d.comp(inv(phi[y2]), d.comp(u, phi[y]));
            preimage(g_obj[y], g_obj[y2], t)
        })
        .collect::<Result<Vec<_>>>()?;
    let g = FinFunctor::new(d.clone(), c.clone(), g_obj.clone(), g_arr)?;
    let unit = (0..c.num_objects())
        .map(|x| preimage(x, g_obj[f.on_object(x)], inv(phi[f.on_object(x)])))
        .collect::<Result<Vec<_>>>()?;
    let counit = phi;
    // Unit and counit are natural isomorphisms.
    for a in 0..c.num_arrows() {
        let (x, y) = (c.dom(a), c.cod(a));
        let gfa = g.on_arrow(f.on_arrow(a));
        if c.comp(gfa, unit[x]) != c.comp(unit[y], a) {
            return Err(fail("unit is not natural"));
        }
    }
    for u in 0..d.num_arrows() {
        let (y, y2) = (d.dom(u), d.cod(u));
        let fgu = f.on_arrow(g.on_arrow(u));
        if d.comp(counit[y2], fgu) != d.comp(u, counit[y]) {
            return Err(fail("counit is not natural"));
        }
    }
    if unit.iter().any(|&a| c.inverse(a).is_none()) || counit.iter().any(|&a| d.inverse(a).is_none()) {
        return Err(fail("unit or counit is not invertible"));
    }
    Ok(Equivalence {
        functor: f,
        inverse: g,
        unit,
        counit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::setfun::DEFAULT_BUDGET;

    #[test]
    fn idempotent_lists() {
        let term = fixtures::term();
        assert_eq!(idempotents(&term), vec![(0, 0)]);
        let idem = fixtures::idem();
        let names: Vec<&str> = idempotents(&idem).iter().map(|&(_, e)| idem.arrow_name(e)).collect();
        assert_eq!(names, vec!["e", "id_x"]);
        let a2 = fixtures::arrow2();
        assert!(idempotents(&a2).iter().all(|&(_, e)| a2.is_identity(e)));
    }

    #[test]
    fn envelope_of_idem_splits_e() {
        let idem = fixtures::idem();
        assert!(!is_cauchy_complete(&idem));
        let (k, emb) = karoubi_envelope(&idem).unwrap();
        assert_eq!(k.num_objects(), 2);
        assert!(emb.is_full_embedding());
        assert!(is_cauchy_complete(&k));
        let e = emb.on_arrow(idem.arrow_index("e").unwrap());
        let (s, r) = split(&k, e).unwrap();
        assert_eq!(k.comp(s, r), e);
        assert!(k.is_identity(k.comp(r, s)));
        assert_eq!(k.object_name(k.dom(s)), "(x,e)");
    }

    #[test]
    fn envelopes_of_complete_fixtures_are_equivalent() {
        for (name, cat) in fixtures::all() {
            let (k, emb) = karoubi_envelope(&cat).unwrap();
            assert!(emb.is_full_embedding(), "{name}");
            assert_eq!(k.num_objects(), idempotents(&cat).len());
            if is_cauchy_complete(&cat) {
                assert!(equivalent_categories(&cat, &k, DEFAULT_BUDGET).unwrap().is_some(), "{name}");
            }
            let (kk, _) = karoubi_envelope(&k).unwrap();
            assert!(equivalent_categories(&k, &kk, DEFAULT_BUDGET).unwrap().is_some(), "{name}");
        }
    }

    #[test]
    fn equivalence_examples() {
        let term = fixtures::term();
        let eq = equivalent_categories(&term, &term, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(eq.unit, vec![0]);
        let (k, _) = karoubi_envelope(&fixtures::idem()).unwrap();
        assert!(equivalent_categories(&k, &fixtures::discrete2(), DEFAULT_BUDGET).unwrap().is_none());
    }

    #[test]
    fn budget_is_reported() {
        let (k, _) = karoubi_envelope(&fixtures::idem()).unwrap();
        let err = equivalent_categories(&k, &k, 1).unwrap_err();
        assert_eq!(err.name(), "SearchBudgetExceeded");
    }
}
