//! The adjunction `F ↦ F̃ ⊣ G ↦ G_r` induced by a functor
//! `P: C → [D^op, Set]`.
//!
//! `F̃(c) = colim(F ∘ π_c)` over the elements of `P(c)`, and
//! `G_r(d) = Nat(T_d, G)` with `T_d` the extension of the covariant
//! representable `Hom_D(d, -)`. Hom-sets of natural transformations are
//! enumerated exhaustively, so every claim about the adjunction is checked on
//! explicit lists.

use std::collections::HashMap;

use crate::category::FinCat;
use crate::colimits::{colimit, QuotientSet};
use crate::error::{CatError, Result};
use crate::functor::FinFunctor;
use crate::setfun::{elements_presheaf, nat_transformations, yoneda_covariant, NatTransformation, SetFunctor};

/// A functor `P: C → [D^op, Set]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfunctorP {
    source: FinCat,
    target: FinCat,
    values: Vec<SetFunctor>,
    actions: Vec<NatTransformation>,
}

impl ProfunctorP {
    /// `values[c]` is a presheaf on `target`; `actions[f]` is `P(f)`.
    pub fn new(
        source: FinCat,
        target: FinCat,
        values: Vec<SetFunctor>,
        actions: Vec<NatTransformation>,
    ) -> Result<ProfunctorP> {
        let target_op = target.opposite();
        if values.len() != source.num_objects() || actions.len() != source.num_arrows() {
            return Err(CatError::Input("one value per object and one action per arrow".into()));
        }
        if values.iter().any(|v| *v.base() != target_op) {
            return Err(CatError::BaseMismatch);
        }
        for (f, a) in source.arrows().iter().enumerate() {
            if actions[f].source() != &values[a.dom] || actions[f].target() != &values[a.cod] {
                return Err(CatError::NotFunctorial {
                    detail: format!("P({}) has the wrong endpoints", a.id),
                });
            }
        }
        for c in 0..source.num_objects() {
            if actions[source.identity(c)] != NatTransformation::identity(&values[c]) {
                return Err(CatError::NotFunctorial {
                    detail: format!("P({}) is not the identity", source.arrow_name(source.identity(c))),
                });
            }
        }
        for f in 0..source.num_arrows() {
            for &g in source.arrows_out_of(source.cod(f)) {
                let gf = source.comp(g, f);
                if actions[f].then(&actions[g])? != actions[gf] {
                    return Err(CatError::NotFunctorial {
                        detail: format!(
                            "P({}) ∘ P({}) != P({})",
                            source.arrow_name(g),
                            source.arrow_name(f),
                            source.arrow_name(gf)
                        ),
                    });
                }
            }
        }
        Ok(ProfunctorP {
            source,
            target,
            values,
            actions,
        })
    }

    /// Curries a functor `H: C × D^op → Set`.
    pub fn from_bifunctor(source: &FinCat, target: &FinCat, h: &SetFunctor) -> Result<ProfunctorP> {
        let target_op = target.opposite();
        if *h.base() != source.product(&target_op) {
            return Err(CatError::BaseMismatch);
        }
        let (n2, m2) = (target.num_objects(), target.num_arrows());
        let values = (0..source.num_objects())
            .map(|c| {
                let sets = (0..n2).map(|d| h.set(c * n2 + d).to_vec()).collect();
                let maps = (0..m2).map(|g| h.map(source.identity(c) * m2 + g).to_vec()).collect();
                SetFunctor::new(target_op.clone(), sets, maps)
            })
            .collect::<Result<Vec<_>>>()?;
        let actions = source
            .arrows()
            .iter()
            .enumerate()
            .map(|(f, a)| {
                let components = (0..n2).map(|d| h.map(f * m2 + target.identity(d)).to_vec()).collect();
                NatTransformation::new(values[a.dom].clone(), values[a.cod].clone(), components)
            })
            .collect::<Result<Vec<_>>>()?;
        ProfunctorP::new(source.clone(), target.clone(), values, actions)
    }

    /// `P(c) = Hom_C(f(-), c)` for `f: D → C`, whose induced adjunction is
    /// `Lan_f ⊣ (- ∘ f)`.
    pub fn from_functor(f: &FinFunctor) -> Result<ProfunctorP> {
        let (d_cat, c_cat) = (f.source().clone(), f.target().clone());
        let d_op = d_cat.opposite();
        let values = (0..c_cat.num_objects())
            .map(|c| {
                let sets = (0..d_cat.num_objects())
                    .map(|d| {
                        c_cat
                            .hom(f.on_object(d), c)
                            .iter()
                            .map(|&h| c_cat.arrow_name(h).to_string())
                            .collect()
                    })
                    .collect();
                SetFunctor::from_fn(d_op.clone(), sets, |g, i| {
                    // g: d' → d in D acts Hom(f d, c) → Hom(f d', c).
                    let (d2, d) = (d_cat.dom(g), d_cat.cod(g));
                    let h = c_cat.hom(f.on_object(d), c)[i];
                    let hg = c_cat.comp(h, f.on_arrow(g));
                    c_cat.hom(f.on_object(d2), c).iter().position(|&k| k == hg).expect("composite lies in hom-set")
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let actions = c_cat
            .arrows()
            .iter()
            .enumerate()
            .map(|(u, a)| {
                let components = (0..d_cat.num_objects())
                    .map(|d| {
                        let fd = f.on_object(d);
                        c_cat
                            .hom(fd, a.dom)
                            .iter()
                            .map(|&h| {
                                let uh = c_cat.comp(u, h);
                                c_cat.hom(fd, a.cod).iter().position(|&k| k == uh).expect("composite lies in hom-set")
                            })
                            .collect()
                    })
                    .collect();
                NatTransformation::new(values[a.dom].clone(), values[a.cod].clone(), components)
            })
            .collect::<Result<Vec<_>>>()?;
        ProfunctorP::new(c_cat, d_cat, values, actions)
    }

    /// `P` constant at the empty presheaf.
    pub fn empty(source: &FinCat, target: &FinCat) -> ProfunctorP {
        let empty = SetFunctor::empty(&target.opposite());
        let values = vec![empty.clone(); source.num_objects()];
        let actions = vec![NatTransformation::identity(&empty); source.num_arrows()];
        ProfunctorP::new(source.clone(), target.clone(), values, actions).expect("constant functor")
    }

    pub fn source(&self) -> &FinCat {
        &self.source
    }

    pub fn target(&self) -> &FinCat {
        &self.target
    }

    pub fn value(&self, c: usize) -> &SetFunctor {
        &self.values[c]
    }

    pub fn values(&self) -> &[SetFunctor] {
        &self.values
    }

    pub fn action(&self, f: usize) -> &NatTransformation {
        &self.actions[f]
    }

    pub fn actions(&self) -> &[NatTransformation] {
        &self.actions
    }
}

/// `F̃` together with the colimits presenting it.
#[derive(Clone, Debug)]
pub struct Tilde {
    pub functor: SetFunctor,
    /// `colim(F ∘ π_c)`, whose blocks are the elements `(d, z)` of `P(c)`.
    pub colimits: Vec<QuotientSet>,
    /// Block of `(d, z)` in `colimits[c]` is `offsets[c][d] + z`.
    offsets: Vec<Vec<usize>>,
    /// `(d, z)` for each block of `colimits[c]`.
    blocks: Vec<Vec<(usize, usize)>>,
}

impl Tilde {
    /// `κ_{(d,z)}(x)` in `F̃(c)`.
    pub fn class(&self, c: usize, d: usize, z: usize, x: usize) -> usize {
        self.colimits[c].inject(self.offsets[c][d] + z, x)
    }

    /// `(d, z, x)` with `κ_{(d,z)}(x)` the least member of class `k` of `F̃(c)`.
    pub fn representative(&self, c: usize, k: usize) -> (usize, usize, usize) {
        let q = &self.colimits[c];
        let (block, x) = q.carrier_element(q.representative(k));
        let (d, z) = self.blocks[c][block];
        (d, z, x)
    }
}

/// `F̃(c) = colim(F ∘ π_c)`, with `F̃(f)(κ_{(d,z)}(x)) = κ_{(d, P(f)(z))}(x)`.
pub fn tilde(p: &ProfunctorP, f: &SetFunctor) -> Result<Tilde> {
    if f.base() != p.target() {
        return Err(CatError::BaseMismatch);
    }
    let c_cat = p.source();
    let mut colimits = Vec::new();
    let mut offsets = Vec::new();
    let mut blocks = Vec::new();
    for c in 0..c_cat.num_objects() {
        let pc = p.value(c);
        let els = elements_presheaf(pc)?;
        colimits.push(colimit(&f.restrict(&els.projection)?));
        let mut off = Vec::new();
        let mut acc = 0;
        for d in 0..p.target().num_objects() {
            off.push(acc);
            acc += pc.size(d);
        }
        offsets.push(off);
        blocks.push(els.elements);
    }
    let sets = colimits
        .iter()
        .map(|q| (0..q.num_classes()).map(|k| q.class_label(k)).collect())
        .collect();
    let functor = SetFunctor::from_fn(c_cat.clone(), sets, |u, k| {
        let (c, c2) = (c_cat.dom(u), c_cat.cod(u));
        let q = &colimits[c];
        let (block, x) = q.carrier_element(q.representative(k));
        let (d, z) = blocks[c][block];
        let z2 = p.action(u).component(d)[z];
        colimits[c2].inject(offsets[c2][d] + z2, x)
    })?;
    Ok(Tilde {
        functor,
        colimits,
        offsets,
        blocks,
    })
}

/// `α̃: F̃ → F̃'` for `α: F → F'`, given both extensions.
pub fn tilde_map(source: &Tilde, target: &Tilde, alpha: &NatTransformation) -> Result<NatTransformation> {
    let components = (0..source.colimits.len())
        .map(|c| {
            (0..source.functor.size(c))
                .map(|k| {
                    let (d, z, x) = source.representative(c, k);
                    target.class(c, d, z, alpha.component(d)[x])
                })
                .collect()
        })
        .collect();
    NatTransformation::new(source.functor.clone(), target.functor.clone(), components)
}

/// `T_d = (Hom_D(d, -))~` for every object `d` of `D`.
pub fn representable_extensions(p: &ProfunctorP) -> Result<Vec<Tilde>> {
    (0..p.target().num_objects())
        .map(|d| tilde(p, &yoneda_covariant(p.target(), d)?))
        .collect()
}

/// `G_r` with its value sets materialized as lists of transformations.
#[derive(Clone, Debug)]
pub struct Right {
    pub functor: SetFunctor,
    /// `Nat(T_d, G)` in lexicographic order of components.
    pub transformations: Vec<Vec<NatTransformation>>,
    pub representables: Vec<Tilde>,
    /// `G` itself.
    pub base_functor: SetFunctor,
    lookup: Vec<HashMap<Vec<Vec<usize>>, usize>>,
}

impl Right {
    /// Position of a transformation `T_d → G` in `G_r(d)`.
    pub fn index_of(&self, d: usize, beta: &NatTransformation) -> Option<usize> {
        self.lookup[d].get(beta.components()).copied()
    }

    fn index_of_components(&self, d: usize, components: &[Vec<usize>]) -> Result<usize> {
        self.lookup[d].get(components).copied().ok_or_else(|| CatError::NotFunctorial {
            detail: "transformation is not natural".into(),
        })
    }
}

/// The map `T_{d'} → T_d` induced by `g: d → d'` on classes:
/// `κ_{(e,z)}(h) ↦ κ_{(e,z)}(h ∘ g)`.
fn representable_arrow(p: &ProfunctorP, reps: &[Tilde], g: usize) -> Vec<Vec<usize>> {
    let d_cat = p.target();
    let (d, d2) = (d_cat.dom(g), d_cat.cod(g));
    (0..p.source().num_objects())
        .map(|c| {
            (0..reps[d2].functor.size(c))
                .map(|k| {
                    let (e, z, hi) = reps[d2].representative(c, k);
                    let hg = d_cat.comp(d_cat.hom(d2, e)[hi], g);
                    let hgi = d_cat.hom(d, e).iter().position(|&x| x == hg).expect("composite lies in hom-set");
                    reps[d].class(c, e, z, hgi)
                })
                .collect()
        })
        .collect()
}

/// `G_r(d) = Nat(T_d, G)`; `G_r(g)` precomposes with `T_{d'} → T_d`.
pub fn r(p: &ProfunctorP, g: &SetFunctor, budget: u64) -> Result<Right> {
    if g.base() != p.source() {
        return Err(CatError::BaseMismatch);
    }
    let reps = representable_extensions(p)?;
    let d_cat = p.target().clone();
    let mut transformations = Vec::new();
    let mut lookup = Vec::new();
    for t in &reps {
        let mut list = nat_transformations(&t.functor, g, budget)?;
        list.sort_by(|a, b| a.components().cmp(b.components()));
        lookup.push(
            list.iter()
                .enumerate()
                .map(|(i, b)| (b.components().to_vec(), i))
                .collect::<HashMap<_, _>>(),
        );
        transformations.push(list);
    }
    let sets = transformations
        .iter()
        .map(|list| list.iter().map(|b| format!("{{{}}}", b.render())).collect())
        .collect();
    let arrow_maps: Vec<Vec<Vec<usize>>> = (0..d_cat.num_arrows())
        .map(|gi| representable_arrow(p, &reps, gi))
        .collect();
    let functor = SetFunctor::from_fn(d_cat.clone(), sets, |gi, k| {
        let (d, d2) = (d_cat.dom(gi), d_cat.cod(gi));
        let beta = &transformations[d][k];
        let moved: Vec<Vec<usize>> = arrow_maps[gi]
            .iter()
            .enumerate()
            .map(|(c, m)| m.iter().map(|&x| beta.component(c)[x]).collect())
            .collect();
        lookup[d2][&moved]
    })?;
    Ok(Right {
        functor,
        transformations,
        representables: reps,
        base_functor: g.clone(),
        lookup,
    })
}

/// `γ_r: G_r → G'_r` for `γ: G → G'`, by postcomposition.
pub fn r_map(source: &Right, target: &Right, gamma: &NatTransformation) -> Result<NatTransformation> {
    let components = source
        .transformations
        .iter()
        .enumerate()
        .map(|(d, list)| {
            list.iter()
                .map(|beta| target.index_of_components(d, beta.then(gamma)?.components()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    NatTransformation::new(source.functor.clone(), target.functor.clone(), components)
}

/// `τ(α): F̃ → G` for `α: F → G_r`:
/// `τ(α)(c)(κ_{(d,z)}(x)) = α(d)(x)(c)(κ_{(d,z)}(id_d))`.
pub fn tau(p: &ProfunctorP, tf: &Tilde, rg: &Right, alpha: &NatTransformation) -> Result<NatTransformation> {
    let d_cat = p.target();
    let components = (0..p.source().num_objects())
        .map(|c| {
            let q = &tf.colimits[c];
            let mut comp = vec![usize::MAX; q.num_classes()];
            for pt in 0..q.carrier_len() {
                let (block, x) = q.carrier_element(pt);
                let (d, z) = tf.blocks[c][block];
                let beta = &rg.transformations[d][alpha.component(d)[x]];
                let id_pos = d_cat.hom(d, d).iter().position(|&h| h == d_cat.identity(d)).expect("identity");
                let v = beta.component(c)[rg.representables[d].class(c, d, z, id_pos)];
                let k = q.class_of()[pt];
                if comp[k] == usize::MAX {
                    comp[k] = v;
                } else if comp[k] != v {
                    return Err(CatError::NotFunctorial {
                        detail: format!("τ is not well defined on {}", q.label(pt)),
                    });
                }
            }
            Ok(comp)
        })
        .collect::<Result<Vec<_>>>()?;
    NatTransformation::new(tf.functor.clone(), rg.base_functor.clone(), components)
}

/// `ã_x: T_d → F̃` for `x ∈ F(d)`, as components:
/// `κ_{(e,z)}(h) ↦ κ_{(e,z)}(F(h)(x))`.
fn extended_element(p: &ProfunctorP, f: &SetFunctor, tf: &Tilde, reps: &[Tilde], d: usize, x: usize) -> Vec<Vec<usize>> {
    let d_cat = p.target();
    (0..p.source().num_objects())
        .map(|c| {
            (0..reps[d].functor.size(c))
                .map(|k| {
                    let (e, z, hi) = reps[d].representative(c, k);
                    let h = d_cat.hom(d, e)[hi];
                    tf.class(c, e, z, f.apply(h, x))
                })
                .collect()
        })
        .collect()
}

/// `χ(β): F → G_r` for `β: F̃ → G`: `χ(β)(d)(x) = β ∘ ã_x`.
pub fn chi(p: &ProfunctorP, f: &SetFunctor, tf: &Tilde, rg: &Right, beta: &NatTransformation) -> Result<NatTransformation> {
    let components = (0..p.target().num_objects())
        .map(|d| {
            (0..f.size(d))
                .map(|x| {
                    let ax = extended_element(p, f, tf, &rg.representables, d, x);
                    let composed: Vec<Vec<usize>> = ax
                        .iter()
                        .enumerate()
                        .map(|(c, m)| m.iter().map(|&k| beta.component(c)[k]).collect())
                        .collect();
                    rg.index_of_components(d, &composed)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    NatTransformation::new(f.clone(), rg.functor.clone(), components)
}

/// The two enumerated hom-sets and the maps between them.
#[derive(Clone, Debug)]
pub struct AdjunctionBijection {
    /// `Nat(F̃, G)`.
    pub left: Vec<NatTransformation>,
    /// `Nat(F, G_r)`.
    pub right: Vec<NatTransformation>,
    /// `τ`, as indices from `right` into `left`.
    pub forward: Vec<usize>,
    /// `χ`, as indices from `left` into `right`.
    pub backward: Vec<usize>,
}

impl AdjunctionBijection {
    pub fn mutually_inverse(&self) -> bool {
        self.forward.iter().enumerate().all(|(i, &j)| self.backward[j] == i)
            && self.backward.iter().enumerate().all(|(j, &i)| self.forward[i] == j)
    }
}

/// Enumerates `Nat(F̃, G)` and `Nat(F, G_r)` and maps each through `τ`/`χ`.
pub fn adjunction_bijection(p: &ProfunctorP, f: &SetFunctor, g: &SetFunctor, budget: u64) -> Result<AdjunctionBijection> {
    let tf = tilde(p, f)?;
    let rg = r(p, g, budget)?;
    let left = nat_transformations(&tf.functor, g, budget)?;
    let right = nat_transformations(f, &rg.functor, budget)?;
    let find = |list: &[NatTransformation], t: &NatTransformation| {
        list.iter().position(|x| x.components() == t.components()).ok_or_else(|| CatError::NotFunctorial {
            detail: "image is missing from the enumerated hom-set".into(),
        })
    };
    let forward = right
        .iter()
        .map(|alpha| find(&left, &tau(p, &tf, &rg, alpha)?))
        .collect::<Result<Vec<_>>>()?;
    let backward = left
        .iter()
        .map(|beta| find(&right, &chi(p, f, &tf, &rg, beta)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(AdjunctionBijection {
        left,
        right,
        forward,
        backward,
    })
}

/// `η_F: F → (F̃)_r`, `η(d)(x) = ã_x`.
pub fn unit(p: &ProfunctorP, f: &SetFunctor, budget: u64) -> Result<NatTransformation> {
    let tf = tilde(p, f)?;
    let rf = r(p, &tf.functor, budget)?;
    unit_with(p, f, &tf, &rf)
}

fn unit_with(p: &ProfunctorP, f: &SetFunctor, tf: &Tilde, rf: &Right) -> Result<NatTransformation> {
    let components = (0..p.target().num_objects())
        .map(|d| {
            (0..f.size(d))
                .map(|x| rf.index_of_components(d, &extended_element(p, f, tf, &rf.representables, d, x)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    NatTransformation::new(f.clone(), rf.functor.clone(), components)
}

/// `ε_G: (G_r)~ → G`, `ε(c)(κ_{(d,z)}(β)) = β(c)(κ_{(d,z)}(id_d))`.
pub fn counit(p: &ProfunctorP, g: &SetFunctor, budget: u64) -> Result<NatTransformation> {
    let rg = r(p, g, budget)?;
    let trg = tilde(p, &rg.functor)?;
    counit_with(p, &rg, &trg)
}

fn counit_with(p: &ProfunctorP, rg: &Right, trg: &Tilde) -> Result<NatTransformation> {
    tau(p, trg, rg, &NatTransformation::identity(&rg.functor))
}

/// Whether `ε_{F̃} ∘ η̃_F = id` and `(ε_G)_r ∘ η_{G_r} = id`.
pub fn triangle_identities(p: &ProfunctorP, f: &SetFunctor, g: &SetFunctor, budget: u64) -> Result<(bool, bool)> {
    // First triangle, at F.
    let tf = tilde(p, f)?;
    let rtf = r(p, &tf.functor, budget)?;
    let eta = unit_with(p, f, &tf, &rtf)?;
    let t_rtf = tilde(p, &rtf.functor)?;
    let eta_tilde = tilde_map(&tf, &t_rtf, &eta)?;
    let eps = counit_with(p, &rtf, &t_rtf)?;
    let first = eta_tilde.then(&eps)? == NatTransformation::identity(&tf.functor);

    // Second triangle, at G.
    let rg = r(p, g, budget)?;
    let trg = tilde(p, &rg.functor)?;
    let r_trg = r(p, &trg.functor, budget)?;
    let eta_r = unit_with(p, &rg.functor, &trg, &r_trg)?;
    let eps_g = counit_with(p, &rg, &trg)?;
    let eps_r = r_map(&r_trg, &rg, &eps_g)?;
    let second = eta_r.then(&eps_r)? == NatTransformation::identity(&rg.functor);
    Ok((first, second))
}

/// Injectivity of `η(b)` and, independently, of `α ↦ α̃` on
/// `Nat(Hom_D(b, -), F)`. The two answers agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonicCheck {
    pub unit_injective: bool,
    pub tilde_injective: bool,
}

pub fn unit_monic_check(p: &ProfunctorP, f: &SetFunctor, b: usize, budget: u64) -> Result<MonicCheck> {
    if b >= p.target().num_objects() {
        return Err(CatError::UnknownObject(b.to_string()));
    }
    let eta = unit(p, f, budget)?;
    let mut seen = vec![false; eta.target().size(b)];
    let unit_injective = eta.component(b).iter().all(|&y| !std::mem::replace(&mut seen[y], true));

    let yb = yoneda_covariant(p.target(), b)?;
    let tb = tilde(p, &yb)?;
    let tf = tilde(p, f)?;
    let arrows = nat_transformations(&yb, f, budget)?;
    let mut images = Vec::with_capacity(arrows.len());
    for a in &arrows {
        images.push(tilde_map(&tb, &tf, a)?.components().to_vec());
    }
    images.sort();
    let before = images.len();
    images.dedup();
    Ok(MonicCheck {
        unit_injective,
        tilde_injective: images.len() == before,
    })
}

/// For `P = Hom_C(f(-), -)`, the comparison `G_r → G ∘ f` sending `β` to
/// `β(f d)(κ_{(d, id_{f d})}(id_d))`.
pub fn restriction_comparison(f: &FinFunctor, rg: &Right) -> Result<NatTransformation> {
    let (d_cat, c_cat) = (f.source(), f.target());
    let restricted = rg.base_functor.restrict(f)?;
    let components = (0..d_cat.num_objects())
        .map(|d| {
            let fd = f.on_object(d);
            let z = c_cat.hom(fd, fd).iter().position(|&h| h == c_cat.identity(fd)).expect("identity");
            let x = d_cat.hom(d, d).iter().position(|&h| h == d_cat.identity(d)).expect("identity");
            let k = rg.representables[d].class(fd, d, z, x);
            rg.transformations[d].iter().map(|beta| beta.component(fd)[k]).collect()
        })
        .collect();
    NatTransformation::new(rg.functor.clone(), restricted, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::kan::lan;
    use crate::setfun::DEFAULT_BUDGET;

    fn term_p() -> ProfunctorP {
        ProfunctorP::from_functor(&FinFunctor::identity(&fixtures::term())).unwrap()
    }

    #[test]
    fn from_functor_is_functorial() {
        for (_, cat) in fixtures::all() {
            ProfunctorP::from_functor(&FinFunctor::identity(&cat)).unwrap();
        }
        let a2 = fixtures::arrow2();
        let j = FinFunctor::constant(&fixtures::term(), &a2, 0);
        let p = ProfunctorP::from_functor(&j).unwrap();
        assert_eq!(p.value(1).size(0), 1);
    }

    #[test]
    fn bifunctor_currying_round_trip() {
        let a2 = fixtures::arrow2();
        let prod = a2.product(&a2.opposite());
        let h = SetFunctor::singleton(&prod);
        let p = ProfunctorP::from_bifunctor(&a2, &a2, &h).unwrap();
        assert!(p.values().iter().all(|v| v.total_size() == 2));
    }

    #[test]
    fn tilde_on_term_is_identity() {
        let f = SetFunctor::constant(&fixtures::term(), &["x", "y"]);
        let t = tilde(&term_p(), &f).unwrap();
        assert_eq!(t.functor.size(0), 2);
    }

    #[test]
    fn tilde_of_empty_profunctor_is_empty() {
        let a2 = fixtures::arrow2();
        let p = ProfunctorP::empty(&a2, &fixtures::pair());
        let f = SetFunctor::singleton(&fixtures::pair());
        assert_eq!(tilde(&p, &f).unwrap().functor.total_size(), 0);
    }

    #[test]
    fn tilde_agrees_with_lan() {
        for (_, cat) in fixtures::all() {
            let id = FinFunctor::identity(&cat);
            let p = ProfunctorP::from_functor(&id).unwrap();
            let f = crate::setfun::yoneda_covariant(&cat, 0).unwrap();
            let t = tilde(&p, &f).unwrap();
            let l = lan(&id, &f).unwrap();
            for c in 0..cat.num_objects() {
                assert_eq!(t.functor.size(c), l.functor.size(c));
            }
        }
    }

    #[test]
    fn r_of_singleton_is_singleton() {
        let a2 = fixtures::arrow2();
        let p = ProfunctorP::from_functor(&FinFunctor::identity(&a2)).unwrap();
        let g = SetFunctor::singleton(&a2);
        let rg = r(&p, &g, DEFAULT_BUDGET).unwrap();
        assert!((0..2).all(|d| rg.functor.size(d) == 1));
    }

    #[test]
    fn r_is_restriction() {
        let a2 = fixtures::arrow2();
        for obj in 0..2 {
            let j = FinFunctor::constant(&fixtures::term(), &a2, obj);
            let p = ProfunctorP::from_functor(&j).unwrap();
            let g = crate::setfun::yoneda_covariant(&a2, 0).unwrap();
            let rg = r(&p, &g, DEFAULT_BUDGET).unwrap();
            assert!(restriction_comparison(&j, &rg).unwrap().is_isomorphism());
        }
    }

    #[test]
    fn r_on_term_matches_g() {
        let g = SetFunctor::constant(&fixtures::term(), &["x", "y", "z"]);
        assert_eq!(r(&term_p(), &g, DEFAULT_BUDGET).unwrap().functor.size(0), 3);
    }

    #[test]
    fn bijection_and_triangles_on_fixtures() {
        for (_, cat) in fixtures::all() {
            let p = ProfunctorP::from_functor(&FinFunctor::identity(&cat)).unwrap();
            let f = crate::setfun::yoneda_covariant(&cat, 0).unwrap();
            let g = SetFunctor::from_fn(
                cat.clone(),
                (0..cat.num_objects()).map(|_| vec!["0".into(), "1".into()]).collect(),
                |_, x| x,
            )
            .unwrap();
            let b = adjunction_bijection(&p, &f, &g, DEFAULT_BUDGET).unwrap();
            assert_eq!(b.left.len(), b.right.len());
            assert!(b.mutually_inverse());
            assert_eq!(triangle_identities(&p, &f, &g, DEFAULT_BUDGET).unwrap(), (true, true));
        }
    }

    #[test]
    fn empty_source_hom_sets_are_singletons() {
        let a2 = fixtures::arrow2();
        let p = ProfunctorP::from_functor(&FinFunctor::identity(&a2)).unwrap();
        let b = adjunction_bijection(&p, &SetFunctor::empty(&a2), &SetFunctor::singleton(&a2), DEFAULT_BUDGET).unwrap();
        assert_eq!((b.left.len(), b.right.len()), (1, 1));
    }

    #[test]
    fn unit_on_term_and_identity_is_iso() {
        let f = SetFunctor::constant(&fixtures::term(), &["x", "y"]);
        assert!(unit(&term_p(), &f, DEFAULT_BUDGET).unwrap().is_isomorphism());
        assert!(counit(&term_p(), &f, DEFAULT_BUDGET).unwrap().is_isomorphism());
        let span = fixtures::span();
        let p = ProfunctorP::from_functor(&FinFunctor::identity(&span)).unwrap();
        let g = crate::setfun::yoneda_covariant(&span, 2).unwrap();
        assert!(unit(&p, &g, DEFAULT_BUDGET).unwrap().is_isomorphism());
    }

    #[test]
    fn monic_check_examples() {
        let f = SetFunctor::constant(&fixtures::term(), &["x", "y"]);
        let m = unit_monic_check(&term_p(), &f, 0, DEFAULT_BUDGET).unwrap();
        assert_eq!(m, MonicCheck { unit_injective: true, tilde_injective: true });

        let a2 = fixtures::arrow2();
        let j = FinFunctor::constant(&fixtures::term(), &a2, 0);
        let p = ProfunctorP::from_functor(&j).unwrap();
        let f = SetFunctor::constant(&fixtures::term(), &["x", "y"]);
        let m = unit_monic_check(&p, &f, 0, DEFAULT_BUDGET).unwrap();
        assert!(m.unit_injective && m.tilde_injective);
    }
}
