//! Seeded random categories and functors, and exhaustive enumeration of small
//! set-valued functors.
//!
//! Random categories are concrete: objects are small finite sets, arrows are
//! functions between them, and the arrow set is the closure of a few random
//! generators under composition.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::category::{Arrow, FinCat};
use crate::error::{CatError, Result};
use crate::functor::{full_subcategory, FinFunctor};
use crate::setfun::{yoneda, SetFunctor};

/// Bounds for [`random_category`].
#[derive(Clone, Copy, Debug)]
pub struct CategoryShape {
    pub max_objects: usize,
    /// Bound on all arrows, identities included.
    pub max_arrows: usize,
    /// Bound on the carrier size of each object.
    pub max_carrier: usize,
    /// Adjoin a terminal object, which makes the result filtered.
    pub terminal: bool,
}

impl Default for CategoryShape {
    fn default() -> Self {
        CategoryShape {
            max_objects: 3,
            max_arrows: 8,
            max_carrier: 3,
            terminal: false,
        }
    }
}

fn compose_fn(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| g[x]).collect()
}

/// A random category within `shape`.
pub fn random_category<R: Rng>(rng: &mut R, shape: CategoryShape) -> FinCat {
    loop {
        if let Some(cat) = try_random_category(rng, shape) {
            return cat;
        }
    }
}

fn try_random_category<R: Rng>(rng: &mut R, shape: CategoryShape) -> Option<FinCat> {
    let mut n = rng.gen_range(1..=shape.max_objects.max(1));
    if shape.terminal && n == shape.max_objects {
        n = n.saturating_sub(1).max(1);
    }
    let mut carriers: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=shape.max_carrier.max(1))).collect();
    if shape.terminal {
        carriers.push(1);
    }
    let n_obj = carriers.len();
    let mut arrows: Vec<(usize, usize, Vec<usize>)> = (0..n_obj).map(|c| (c, c, (0..carriers[c]).collect())).collect();
    if shape.terminal {
        let t = n_obj - 1;
        for c in 0..t {
            arrows.push((c, t, vec![0; carriers[c]]));
        }
    }
    let generators = rng.gen_range(0..=3);
    for _ in 0..generators {
        let (d, c) = (rng.gen_range(0..n_obj), rng.gen_range(0..n_obj));
        let map = (0..carriers[d]).map(|_| rng.gen_range(0..carriers[c])).collect();
        arrows.push((d, c, map));
    }
    // Close under composition.
    let mut seen: HashMap<(usize, usize, Vec<usize>), usize> = HashMap::new();
    let mut list = Vec::new();
    for a in arrows {
        if !seen.contains_key(&a) {
            seen.insert(a.clone(), list.len());
            list.push(a);
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        let len = list.len();
        for i in 0..len {
            for k in 0..len {
                let (f, g) = (&list[i], &list[k]);
                if f.1 != g.0 {
                    continue;
                }
                let gf = (f.0, g.1, compose_fn(&g.2, &f.2));
                if !seen.contains_key(&gf) {
                    seen.insert(gf.clone(), list.len());
                    list.push(gf);
                    changed = true;
                    if list.len() > shape.max_arrows {
                        return None;
                    }
                }
            }
        }
    }
    if list.len() > shape.max_arrows {
        return None;
    }
    let objects: Vec<String> = (0..n_obj)
        .map(|c| if shape.terminal && c == n_obj - 1 { "t".to_string() } else { format!("o{c}") })
        .collect();
    let names: Vec<Arrow> = list
        .iter()
        .enumerate()
        .map(|(k, (d, c, _))| Arrow {
            id: if k < n_obj { format!("id_{}", objects[k]) } else { format!("m{k}") },
            dom: *d,
            cod: *c,
        })
        .collect();
    let identity = (0..n_obj).collect();
    FinCat::from_fn(objects, names, identity, |g, f| {
        let (fa, ga) = (&list[f], &list[g]);
        if fa.1 != ga.0 {
            return None;
        }
        seen.get(&(fa.0, ga.1, compose_fn(&ga.2, &fa.2))).copied()
    })
    .ok()
}

/// Backtracking over the maps of non-identity arrows for fixed set sizes.
struct MapSearch<'a> {
    cat: &'a FinCat,
    sizes: Vec<usize>,
    order: Vec<usize>,
    /// Composition triples `(g, f, g∘f)` to check once position `t` is set.
    checks: Vec<Vec<(usize, usize, usize)>>,
}

impl<'a> MapSearch<'a> {
    fn new(cat: &'a FinCat, sizes: Vec<usize>) -> Self {
        let order: Vec<usize> = (0..cat.num_arrows()).filter(|&f| !cat.is_identity(f)).collect();
        let mut position = vec![usize::MAX; cat.num_arrows()];
        for (t, &f) in order.iter().enumerate() {
            position[f] = t;
        }
        let mut checks = vec![Vec::new(); order.len()];
        for &f in &order {
            for &g in cat.arrows_out_of(cat.cod(f)) {
                if cat.is_identity(g) {
                    continue;
                }
                let gf = cat.comp(g, f);
                let mut last = position[f].max(position[g]);
                if !cat.is_identity(gf) {
                    last = last.max(position[gf]);
                }
                checks[last].push((g, f, gf));
            }
        }
        MapSearch {
            cat,
            sizes,
            order,
            checks,
        }
    }

    fn initial_maps(&self) -> Vec<Vec<usize>> {
        (0..self.cat.num_arrows())
            .map(|f| {
                if self.cat.is_identity(f) {
                    (0..self.sizes[self.cat.dom(f)]).collect()
                } else {
                    Vec::new()
                }
            })
            .collect()
    }

    fn consistent(&self, t: usize, maps: &[Vec<usize>]) -> bool {
        self.checks[t]
            .iter()
            .all(|&(g, f, gf)| maps[f].iter().enumerate().all(|(x, &y)| maps[g][y] == maps[gf][x]))
    }

    fn candidates(&self, f: usize) -> Vec<Vec<usize>> {
        let (d, c) = (self.sizes[self.cat.dom(f)], self.sizes[self.cat.cod(f)]);
        if d > 0 && c == 0 {
            return Vec::new();
        }
        let count = c.pow(d as u32);
        (0..count)
            .map(|mut k| {
                (0..d)
                    .map(|_| {
                        let v = k % c;
                        k /= c;
                        v
                    })
                    .collect()
            })
            .collect()
    }

    /// Visits every functorial assignment; the visitor returns `false` to stop.
    fn run(&self, visit: &mut dyn FnMut(&[Vec<usize>]) -> bool) -> bool {
        let mut maps = self.initial_maps();
        let cands: Vec<Vec<Vec<usize>>> = self.order.iter().map(|&f| self.candidates(f)).collect();
        self.go(0, &cands, &mut maps, visit)
    }

    fn go(
        &self,
        t: usize,
        cands: &[Vec<Vec<usize>>],
        maps: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]) -> bool,
    ) -> bool {
        if t == self.order.len() {
            return visit(maps);
        }
        let f = self.order[t];
        for m in &cands[t] {
            maps[f] = m.clone();
            if self.consistent(t, maps) && !self.go(t + 1, cands, maps, visit) {
                return false;
            }
        }
        true
    }

    fn random<R: Rng>(&self, rng: &mut R, steps: &mut usize) -> Option<Vec<Vec<usize>>> {
        let mut maps = self.initial_maps();
        let cands: Vec<Vec<Vec<usize>>> = self
            .order
            .iter()
            .map(|&f| {
                let mut c = self.candidates(f);
                c.shuffle(rng);
                c
            })
            .collect();
        self.go_random(0, &cands, &mut maps, steps).then_some(maps)
    }

    fn go_random(&self, t: usize, cands: &[Vec<Vec<usize>>], maps: &mut Vec<Vec<usize>>, steps: &mut usize) -> bool {
        if t == self.order.len() {
            return true;
        }
        let f = self.order[t];
        for m in &cands[t] {
            if *steps == 0 {
                return false;
            }
            *steps -= 1;
            maps[f] = m.clone();
            if self.consistent(t, maps) && self.go_random(t + 1, cands, maps, steps) {
                return true;
            }
        }
        false
    }
}

fn numbered_sets(sizes: &[usize]) -> Vec<Vec<String>> {
    sizes.iter().map(|&s| (0..s).map(|i| i.to_string()).collect()).collect()
}

/// Visits every functor `base → Set` whose value sets are `{0, …, k-1}` with
/// `k ≤ max_size`. The visitor returns `false` to stop early. Fails when the
/// raw space of candidate maps exceeds `budget`.
pub fn for_each_set_functor(
    base: &FinCat,
    max_size: usize,
    budget: u64,
    mut visit: impl FnMut(&SetFunctor) -> bool,
) -> Result<()> {
    let n = base.num_objects();
    let space = set_functor_space(base, max_size);
    if space > budget as u128 {
        return Err(CatError::SearchBudgetExceeded {
            candidates: space,
            budget,
            explored: 0.0,
        });
    }
    let mut sizes = vec![0usize; n];
    loop {
        let search = MapSearch::new(base, sizes.clone());
        let sets = numbered_sets(&sizes);
        let go_on = search.run(&mut |maps| {
            let f = SetFunctor::new(base.clone(), sets.clone(), maps.to_vec()).expect("search yields functors");
            visit(&f)
        });
        if !go_on {
            return Ok(());
        }
        // Next size vector in lexicographic order.
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if sizes[i] < max_size {
                sizes[i] += 1;
                for s in &mut sizes[i + 1..] {
                    *s = 0;
                }
                break;
            }
        }
    }
}

/// Number of raw map assignments [`for_each_set_functor`] would consider.
pub fn set_functor_space(base: &FinCat, max_size: usize) -> u128 {
    let n = base.num_objects();
    let mut total: u128 = 0;
    let mut sizes = vec![0usize; n];
    loop {
        let mut space: u128 = 1;
        for f in 0..base.num_arrows() {
            if !base.is_identity(f) {
                let (d, c) = (sizes[base.dom(f)], sizes[base.cod(f)]);
                space = space.saturating_mul((c as u128).saturating_pow(d as u32));
            }
        }
        total = total.saturating_add(space);
        let mut i = n;
        loop {
            if i == 0 {
                return total;
            }
            i -= 1;
            if sizes[i] < max_size {
                sizes[i] += 1;
                for s in &mut sizes[i + 1..] {
                    *s = 0;
                }
                break;
            }
        }
    }
}

/// Every functor `base → Set` with value sets of size at most `max_size`.
pub fn all_set_functors(base: &FinCat, max_size: usize, budget: u64) -> Result<Vec<SetFunctor>> {
    let mut out = Vec::new();
    for_each_set_functor(base, max_size, budget, |f| {
        out.push(f.clone());
        true
    })?;
    Ok(out)
}

/// A random functor `base → Set` with value sets of size at most `max_size`.
pub fn random_set_functor<R: Rng>(rng: &mut R, base: &FinCat, max_size: usize) -> SetFunctor {
    for _ in 0..64 {
        let sizes: Vec<usize> = (0..base.num_objects()).map(|_| rng.gen_range(0..=max_size)).collect();
        let search = MapSearch::new(base, sizes.clone());
        let mut steps = 10_000;
        if let Some(maps) = search.random(rng, &mut steps) {
            return SetFunctor::new(base.clone(), numbered_sets(&sizes), maps).expect("search yields functors");
        }
    }
    SetFunctor::singleton(base)
}

/// A random presheaf on `cat`, as a functor on `cat^op`.
pub fn random_presheaf<R: Rng>(rng: &mut R, cat: &FinCat, max_size: usize) -> SetFunctor {
    random_set_functor(rng, &cat.opposite(), max_size)
}

/// The retract `{h: d → c | e∘h = h}` of the representable on `c` cut out by
/// an idempotent `e: c → c`.
pub fn idempotent_retract(cat: &FinCat, e: usize) -> Result<SetFunctor> {
    let c = cat.dom(e);
    if cat.cod(e) != c || cat.comp(e, e) != e {
        return Err(CatError::Input(format!("`{}` is not an idempotent", cat.arrow_name(e))));
    }
    let rep = yoneda(cat, c)?;
    let keep: Vec<Vec<usize>> = (0..cat.num_objects())
        .map(|d| {
            let hom = cat.hom(d, c);
            (0..hom.len()).filter(|&i| cat.comp(e, hom[i]) == hom[i]).collect()
        })
        .collect();
    let sets = keep
        .iter()
        .enumerate()
        .map(|(d, ks)| ks.iter().map(|&i| rep.set(d)[i].clone()).collect())
        .collect();
    SetFunctor::from_fn(cat.opposite(), sets, |g, i| {
        // g: d' → d in C acts F(d) → F(d').
        let (d_prime, d) = (cat.dom(g), cat.cod(g));
        let image = rep.apply(g, keep[d][i]);
        keep[d_prime].iter().position(|&k| k == image).expect("retract is closed under precomposition")
    })
}

/// A random flat presheaf: a representable or an idempotent retract of one.
pub fn random_flat_presheaf<R: Rng>(rng: &mut R, cat: &FinCat) -> SetFunctor {
    let c = rng.gen_range(0..cat.num_objects());
    let idempotents: Vec<usize> = cat
        .hom(c, c)
        .iter()
        .copied()
        .filter(|&e| cat.comp(e, e) == e)
        .collect();
    let e = *idempotents.choose(rng).expect("identity is idempotent");
    idempotent_retract(cat, e).expect("valid idempotent")
}

/// The inclusion of a random nonempty full subcategory.
pub fn random_full_embedding<R: Rng>(rng: &mut R, cat: &FinCat) -> FinFunctor {
    let mut objects: Vec<usize> = (0..cat.num_objects()).filter(|_| rng.gen_bool(0.6)).collect();
    if objects.is_empty() {
        objects.push(rng.gen_range(0..cat.num_objects()));
    }
    full_subcategory(cat, &objects).expect("objects exist").1
}

/// Every functor `source → target`, by backtracking over object images and
/// then arrow images with composites checked as soon as both factors are
/// placed. Fails when the object-map space exceeds `budget`.
pub fn all_functors(source: &FinCat, target: &FinCat, budget: u64) -> Result<Vec<FinFunctor>> {
    let (n, m) = (source.num_objects(), target.num_objects());
    let space = (m as u128).saturating_pow(n as u32);
    if space > budget as u128 {
        return Err(CatError::SearchBudgetExceeded {
            candidates: space,
            budget,
            explored: 0.0,
        });
    }
    let mut out = Vec::new();
    if n > 0 && m == 0 {
        return Ok(out);
    }
    let free: Vec<usize> = (0..source.num_arrows()).filter(|&f| !source.is_identity(f)).collect();
    let mut obj = vec![0usize; n];
    loop {
        let mut arr = vec![usize::MAX; source.num_arrows()];
        for c in 0..n {
            arr[source.identity(c)] = target.identity(obj[c]);
        }
        assign_arrows(source, target, &obj, &free, 0, &mut arr, &mut out);
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if obj[i] + 1 < m {
                obj[i] += 1;
                for o in &mut obj[i + 1..] {
                    *o = 0;
                }
                break;
            }
        }
    }
}

fn assign_arrows(
    source: &FinCat,
    target: &FinCat,
    obj: &[usize],
    free: &[usize],
    k: usize,
    arr: &mut Vec<usize>,
    out: &mut Vec<FinFunctor>,
) {
    let consistent = |arr: &[usize]| {
        (0..source.num_arrows()).all(|f| {
            arr[f] == usize::MAX
                || source.arrows_out_of(source.cod(f)).iter().all(|&g| {
                    let gf = source.comp(g, f);
                    arr[g] == usize::MAX || arr[gf] == usize::MAX || target.comp(arr[g], arr[f]) == arr[gf]
                })
        })
    };
    if k == free.len() {
        if consistent(arr) {
            out.push(
                FinFunctor::new(source.clone(), target.clone(), obj.to_vec(), arr.clone())
                    .expect("consistent assignment is a functor"),
            );
        }
        return;
    }
    let f = free[k];
    for &h in target.hom(obj[source.dom(f)], obj[source.cod(f)]) {
        arr[f] = h;
        if consistent(arr) {
            assign_arrows(source, target, obj, free, k + 1, arr, out);
        }
    }
    arr[f] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::setfun::DEFAULT_BUDGET;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn functor_counts() {
        let a2 = fixtures::arrow2();
        // Functors ARROW2 → ARROW2 are the monotone maps of a two-element chain.
        assert_eq!(all_functors(&a2, &a2, DEFAULT_BUDGET).unwrap().len(), 3);
        let z2 = fixtures::z2();
        assert_eq!(all_functors(&z2, &z2, DEFAULT_BUDGET).unwrap().len(), 2);
        let t = fixtures::term();
        assert_eq!(all_functors(&fixtures::pair(), &t, DEFAULT_BUDGET).unwrap().len(), 1);
    }

    #[test]
    fn random_categories_respect_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for terminal in [false, true] {
            let shape = CategoryShape {
                terminal,
                ..CategoryShape::default()
            };
            for _ in 0..50 {
                let c = random_category(&mut rng, shape);
                assert!(c.num_objects() <= 3 && c.num_arrows() <= 8);
                if terminal {
                    assert!(c.is_filtered());
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        // Functors from ARROW2 with sets ≤ 1: sizes (0,0),(0,1),(1,1); (1,0) has none.
        assert_eq!(all_set_functors(&fixtures::arrow2(), 1, DEFAULT_BUDGET).unwrap().len(), 3);
        // Z/2 acting on sets of size ≤ 2: empty, point, two involutions on two points.
        assert_eq!(all_set_functors(&fixtures::z2(), 2, DEFAULT_BUDGET).unwrap().len(), 4);
    }

    #[test]
    fn random_functors_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let c = random_category(&mut rng, CategoryShape::default());
            let f = random_set_functor(&mut rng, &c, 3);
            assert_eq!(f.base(), &c);
            let p = random_flat_presheaf(&mut rng, &c);
            assert!(crate::flat::is_flat(&p));
        }
    }
}
