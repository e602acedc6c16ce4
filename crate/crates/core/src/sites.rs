//! Sieves, Grothendieck topologies and sheaves on finite categories.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::category::FinCat;
use crate::error::{CatError, Result};
use crate::functor::full_subcategory;
use crate::kan::ran;
use crate::setfun::{NatTransformation, SetFunctor};

/// A set of arrows into `codomain`, closed under precomposition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sieve {
    pub codomain: usize,
    pub arrows: BTreeSet<usize>,
}

impl Sieve {
    pub fn empty(codomain: usize) -> Sieve {
        Sieve {
            codomain,
            arrows: BTreeSet::new(),
        }
    }

    /// All arrows into `c`.
    pub fn maximal(cat: &FinCat, c: usize) -> Sieve {
        Sieve {
            codomain: c,
            arrows: cat.arrows_into(c).iter().copied().collect(),
        }
    }

    pub fn is_maximal(&self, cat: &FinCat) -> bool {
        self.arrows.len() == cat.arrows_into(self.codomain).len()
    }

    pub fn contains(&self, f: usize) -> bool {
        self.arrows.contains(&f)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Renders as `{f,g}` on `c`.
    pub fn display<'a>(&'a self, cat: &'a FinCat) -> impl fmt::Display + 'a {
        SieveDisplay { sieve: self, cat }
    }

    pub fn arrow_names(&self, cat: &FinCat) -> Vec<String> {
        self.arrows.iter().map(|&f| cat.arrow_name(f).to_string()).collect()
    }
}

struct SieveDisplay<'a> {
    sieve: &'a Sieve,
    cat: &'a FinCat,
}

impl fmt::Display for SieveDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}} on {}",
            self.sieve.arrow_names(self.cat).join(","),
            self.cat.object_name(self.sieve.codomain)
        )
    }
}

/// The smallest sieve on `c` containing `generators`.
pub fn sieve_generate(cat: &FinCat, c: usize, generators: &[usize]) -> Result<Sieve> {
    let mut arrows = BTreeSet::new();
    for &f in generators {
        if cat.cod(f) != c {
            return Err(CatError::CodMismatch {
                arrow: cat.arrow_name(f).to_string(),
                object: cat.object_name(c).to_string(),
            });
        }
        for &g in cat.arrows_into(cat.dom(f)) {
            arrows.insert(cat.comp(f, g));
        }
    }
    Ok(Sieve { codomain: c, arrows })
}

/// `f*(S) = {g : f∘g ∈ S}` on the domain of `f`.
pub fn pullback_sieve(cat: &FinCat, sieve: &Sieve, f: usize) -> Result<Sieve> {
    if cat.cod(f) != sieve.codomain {
        return Err(CatError::CodMismatch {
            arrow: cat.arrow_name(f).to_string(),
            object: cat.object_name(sieve.codomain).to_string(),
        });
    }
    let d = cat.dom(f);
    Ok(Sieve {
        codomain: d,
        arrows: cat
            .arrows_into(d)
            .iter()
            .copied()
            .filter(|&g| sieve.contains(cat.comp(f, g)))
            .collect(),
    })
}

/// Whether `arrows` is a sieve on `c`.
pub fn is_sieve(cat: &FinCat, sieve: &Sieve) -> bool {
    sieve.arrows.iter().all(|&f| {
        cat.cod(f) == sieve.codomain && cat.arrows_into(cat.dom(f)).iter().all(|&g| sieve.contains(cat.comp(f, g)))
    })
}

/// Every sieve on `c`: unions of principal sieves, found breadth first.
pub fn all_sieves(cat: &FinCat, c: usize) -> Vec<Sieve> {
    let principal: Vec<Sieve> = cat
        .arrows_into(c)
        .iter()
        .map(|&f| sieve_generate(cat, c, &[f]).expect("arrow into c"))
        .collect();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([Sieve::empty(c)]);
    seen.insert(Sieve::empty(c));
    while let Some(s) = queue.pop_front() {
        for p in &principal {
            if p.arrows.is_subset(&s.arrows) {
                continue;
            }
            let u = Sieve {
                codomain: c,
                arrows: s.arrows.union(&p.arrows).copied().collect(),
            };
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    seen.into_iter().collect()
}

/// The first axiom a candidate topology fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopologyViolation {
    NotASieve { sieve: String },
    Maximality { object: String },
    Stability { sieve: String, arrow: String },
    Transitivity { sieve: String, witness: String },
}

impl fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyViolation::NotASieve { sieve } => write!(f, "{sieve} is not a sieve"),
            TopologyViolation::Maximality { object } => write!(f, "maximal sieve on {object} does not cover"),
            TopologyViolation::Stability { sieve, arrow } => {
                write!(f, "pullback of covering {sieve} along {arrow} does not cover")
            }
            TopologyViolation::Transitivity { sieve, witness } => {
                write!(f, "{sieve} is locally covering over {witness} but does not cover")
            }
        }
    }
}

/// Covering sieves for each object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Topology {
    base: FinCat,
    covers: Vec<BTreeSet<Sieve>>,
}

impl Topology {
    /// Validates all three axioms.
    pub fn new(base: FinCat, covers: Vec<BTreeSet<Sieve>>) -> Result<Topology> {
        if let Some(v) = topology_violation(&base, &covers) {
            return Err(CatError::NotATopology { detail: v.to_string() });
        }
        Ok(Topology { base, covers })
    }

    /// Only maximal sieves cover.
    pub fn trivial(base: &FinCat) -> Topology {
        let covers = (0..base.num_objects())
            .map(|c| BTreeSet::from([Sieve::maximal(base, c)]))
            .collect();
        Topology {
            base: base.clone(),
            covers,
        }
    }

    pub fn base(&self) -> &FinCat {
        &self.base
    }

    pub fn covers(&self, c: usize) -> &BTreeSet<Sieve> {
        &self.covers[c]
    }

    pub fn all_covers(&self) -> &[BTreeSet<Sieve>] {
        &self.covers
    }

    pub fn is_covering(&self, sieve: &Sieve) -> bool {
        self.covers[sieve.codomain].contains(sieve)
    }

    pub fn num_sieves(&self) -> usize {
        self.covers.iter().map(BTreeSet::len).sum()
    }
}

/// Checks sieve shape, maximality, stability and transitivity in that
/// order, exhaustively. `None` means the candidate is a topology.
pub fn topology_violation(cat: &FinCat, covers: &[BTreeSet<Sieve>]) -> Option<TopologyViolation> {
    let n = cat.num_objects();
    if covers.len() != n {
        return Some(TopologyViolation::Maximality {
            object: "(missing objects)".into(),
        });
    }
    for (c, cov) in covers.iter().enumerate() {
        for s in cov {
            if s.codomain != c || !is_sieve(cat, s) {
                return Some(TopologyViolation::NotASieve {
                    sieve: s.display(cat).to_string(),
                });
            }
        }
    }
    for (c, cov) in covers.iter().enumerate() {
        if !cov.contains(&Sieve::maximal(cat, c)) {
            return Some(TopologyViolation::Maximality {
                object: cat.object_name(c).to_string(),
            });
        }
    }
    for (c, cov) in covers.iter().enumerate() {
        for s in cov {
            for &f in cat.arrows_into(c) {
                let p = pullback_sieve(cat, s, f).expect("arrow into c");
                if !covers[cat.dom(f)].contains(&p) {
                    return Some(TopologyViolation::Stability {
                        sieve: s.display(cat).to_string(),
                        arrow: cat.arrow_name(f).to_string(),
                    });
                }
            }
        }
    }
    for (c, cov) in covers.iter().enumerate() {
        for r in all_sieves(cat, c) {
            if cov.contains(&r) {
                continue;
            }
            if let Some(s) = cov.iter().find(|s| locally_covers(cat, covers, &r, s)) {
                return Some(TopologyViolation::Transitivity {
                    sieve: r.display(cat).to_string(),
                    witness: s.display(cat).to_string(),
                });
            }
        }
    }
    None
}

/// Every pullback of `r` along an arrow of `s` covers.
fn locally_covers(cat: &FinCat, covers: &[BTreeSet<Sieve>], r: &Sieve, s: &Sieve) -> bool {
    s.arrows
        .iter()
        .all(|&f| covers[cat.dom(f)].contains(&pullback_sieve(cat, r, f).expect("arrow into c")))
}

pub fn is_topology(cat: &FinCat, covers: &[BTreeSet<Sieve>]) -> bool {
    topology_violation(cat, covers).is_none()
}

/// The smallest topology containing `coverage` (each entry a sieve).
/// Starting from the maximal sieves and the coverage, a stability pass then
/// a transitivity pass are repeated until neither adds a sieve.
pub fn generate_topology(cat: &FinCat, coverage: &[Sieve]) -> Result<Topology> {
    let n = cat.num_objects();
    let mut covers: Vec<BTreeSet<Sieve>> = (0..n).map(|c| BTreeSet::from([Sieve::maximal(cat, c)])).collect();
    for s in coverage {
        if s.codomain >= n || !is_sieve(cat, s) {
            return Err(CatError::Input(format!("{:?} is not a sieve", s.arrows)));
        }
        covers[s.codomain].insert(s.clone());
    }
    let sieves: Vec<Vec<Sieve>> = (0..n).map(|c| all_sieves(cat, c)).collect();
    loop {
        let mut changed = false;
        for c in 0..n {
            let current: Vec<Sieve> = covers[c].iter().cloned().collect();
            for s in &current {
                for &f in cat.arrows_into(c) {
                    let p = pullback_sieve(cat, s, f)?;
                    changed |= covers[cat.dom(f)].insert(p);
                }
            }
        }
        for c in 0..n {
            for r in &sieves[c] {
                if covers[c].contains(r) {
                    continue;
                }
                if covers[c].iter().any(|s| locally_covers(cat, &covers, r, s)) {
                    covers[c].insert(r.clone());
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Topology::new(cat.clone(), covers)
}

/// Whether removing any non-maximal covering sieve yields something that is
/// not a topology containing `coverage`.
pub fn is_minimal(topology: &Topology, coverage: &[Sieve]) -> bool {
    let cat = topology.base();
    for c in 0..cat.num_objects() {
        for s in topology.covers(c) {
            if s.is_maximal(cat) {
                continue;
            }
            let mut smaller = topology.all_covers().to_vec();
            smaller[c].remove(s);
            let contains_coverage = coverage.iter().all(|g| smaller[g.codomain].contains(g));
            if contains_coverage && is_topology(cat, &smaller) {
                return false;
            }
        }
    }
    true
}

/// Objects whose only covering sieve is the maximal one.
pub fn irreducibles(topology: &Topology) -> Vec<usize> {
    (0..topology.base().num_objects())
        .filter(|&c| topology.covers(c).len() == 1)
        .collect()
}

/// Per object, the sieve generated by arrows out of irreducible objects and
/// whether it covers.
#[derive(Clone, Debug)]
pub struct Rigidity {
    pub irreducibles: Vec<usize>,
    pub witnesses: Vec<(Sieve, bool)>,
}

impl Rigidity {
    pub fn is_rigid(&self) -> bool {
        self.witnesses.iter().all(|w| w.1)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.witnesses.iter().position(|w| !w.1)
    }
}

pub fn rigidity(topology: &Topology) -> Rigidity {
    let cat = topology.base();
    let irr = irreducibles(topology);
    let is_irr: Vec<bool> = (0..cat.num_objects()).map(|c| irr.contains(&c)).collect();
    let witnesses = (0..cat.num_objects())
        .map(|c| {
            let gens: Vec<usize> = cat.arrows_into(c).iter().copied().filter(|&f| is_irr[cat.dom(f)]).collect();
            let s = sieve_generate(cat, c, &gens).expect("arrows into c");
            let covering = topology.is_covering(&s);
            (s, covering)
        })
        .collect();
    Rigidity {
        irreducibles: irr,
        witnesses,
    }
}

pub fn is_rigid(topology: &Topology) -> bool {
    rigidity(topology).is_rigid()
}

/// Matching families for `sieve` in a presheaf `F`: assignments
/// `f ↦ x_f ∈ F(dom f)` with `F(g)(x_f) = x_{f∘g}`, listed as vectors indexed
/// like `sieve.arrows`.
pub fn matching_families(cat: &FinCat, presheaf: &SetFunctor, sieve: &Sieve) -> Vec<Vec<usize>> {
    let arrows: Vec<usize> = sieve.arrows.iter().copied().collect();
    let pos: HashMap<usize, usize> = arrows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    // Constraint (i, g, j): F(g)(x_i) = x_j, checked at max(i, j).
    let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); arrows.len()];
    for (i, &f) in arrows.iter().enumerate() {
        for &g in cat.arrows_into(cat.dom(f)) {
            let j = pos[&cat.comp(f, g)];
            checks[i.max(j)].push((i, g, j));
        }
    }
    let mut out = Vec::new();
    let mut current = vec![0; arrows.len()];
    fn go(
        presheaf: &SetFunctor,
        cat: &FinCat,
        arrows: &[usize],
        checks: &[Vec<(usize, usize, usize)>],
        t: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if t == arrows.len() {
            out.push(current.clone());
            return;
        }
        for x in 0..presheaf.size(cat.dom(arrows[t])) {
            current[t] = x;
            if checks[t].iter().all(|&(i, g, j)| presheaf.apply(g, current[i]) == current[j]) {
                go(presheaf, cat, arrows, checks, t + 1, current, out);
            }
        }
    }
    go(presheaf, cat, &arrows, &checks, 0, &mut current, &mut out);
    out
}

/// A covering sieve for which restriction to matching families is not a
/// bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheafViolation {
    pub object: String,
    pub sieve: String,
    pub elements: usize,
    pub families: usize,
    pub injective: bool,
}

impl fmt::Display for SheafViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at {} for {}: {} elements, {} matching families{}",
            self.object,
            self.sieve,
            self.elements,
            self.families,
            if self.injective { "" } else { ", restriction not injective" }
        )
    }
}

/// `None` when `F(c) → Match(S, F)` is a bijection for every covering `S`.
pub fn sheaf_violation(presheaf: &SetFunctor, topology: &Topology) -> Result<Option<SheafViolation>> {
    let cat = topology.base();
    if presheaf.base().opposite() != *cat {
        return Err(CatError::BaseMismatch);
    }
    for c in 0..cat.num_objects() {
        for s in topology.covers(c) {
            let families = matching_families(cat, presheaf, s);
            let mut restricted: Vec<Vec<usize>> = (0..presheaf.size(c))
                .map(|x| s.arrows.iter().map(|&f| presheaf.apply(f, x)).collect())
                .collect();
            restricted.sort();
            restricted.dedup();
            let injective = restricted.len() == presheaf.size(c);
            if !injective || families.len() != presheaf.size(c) {
                return Ok(Some(SheafViolation {
                    object: cat.object_name(c).to_string(),
                    sieve: s.display(cat).to_string(),
                    elements: presheaf.size(c),
                    families: families.len(),
                    injective,
                }));
            }
        }
    }
    Ok(None)
}

pub fn is_sheaf(presheaf: &SetFunctor, topology: &Topology) -> Result<bool> {
    Ok(sheaf_violation(presheaf, topology)?.is_none())
}

/// Outcome of restricting a sheaf to the irreducible objects and extending
/// back.
#[derive(Clone, Debug)]
pub struct DenseReport {
    pub irreducibles: Vec<usize>,
    /// `F → Ran(F|irr)` is a pointwise bijection.
    pub comparison_bijective: bool,
    /// `Ran(G)` is a sheaf, for each supplied presheaf `G` on the irreducibles.
    pub extensions_are_sheaves: Vec<bool>,
}

impl DenseReport {
    pub fn passed(&self) -> bool {
        self.comparison_bijective && self.extensions_are_sheaves.iter().all(|&b| b)
    }
}

/// The full subcategory of irreducibles with its inclusion.
pub fn irreducible_subcategory(topology: &Topology) -> Result<(FinCat, crate::functor::FinFunctor)> {
    full_subcategory(topology.base(), &irreducibles(topology))
}

/// For a rigid topology and a sheaf `F`, checks `F ≅ Ran(F|irr)` through the
/// comparison `x ↦ (F(h)(x))_{h: d → c, d irreducible}`, and that `Ran(G)` is
/// a sheaf for each presheaf `G` in `others` (presheaves on the irreducibles).
pub fn dense_restriction_equivalence(
    topology: &Topology,
    sheaf: &SetFunctor,
    others: &[SetFunctor],
) -> Result<DenseReport> {
    let cat = topology.base();
    let rig = rigidity(topology);
    if let Some(c) = rig.first_failure() {
        return Err(CatError::NotRigid {
            object: cat.object_name(c).to_string(),
        });
    }
    if let Some(v) = sheaf_violation(sheaf, topology)? {
        return Err(CatError::NotASheaf { detail: v.to_string() });
    }
    let (_, incl) = full_subcategory(cat, &rig.irreducibles)?;
    let incl_op = incl.opposite();
    let restricted = sheaf.restrict(&incl_op)?;
    let ext = ran(&incl_op, &restricted)?;
    let components = (0..cat.num_objects())
        .map(|c| {
            let lookup: HashMap<&Vec<usize>, usize> =
                ext.limits[c].families.iter().enumerate().map(|(k, f)| (f, k)).collect();
            (0..sheaf.size(c))
                .map(|x| {
                    let family: Vec<usize> = ext.index[c].iter().map(|&(_, h)| sheaf.apply(h, x)).collect();
                    lookup.get(&family).copied().ok_or_else(|| CatError::NotFunctorial {
                        detail: "restriction is not a compatible family".into(),
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let comparison = NatTransformation::new(sheaf.clone(), ext.functor.clone(), components)?;
    let extensions_are_sheaves = others
        .iter()
        .map(|g| is_sheaf(&ran(&incl_op, g)?.functor, topology))
        .collect::<Result<Vec<_>>>()?;
    Ok(DenseReport {
        irreducibles: rig.irreducibles,
        comparison_bijective: comparison.is_isomorphism(),
        extensions_are_sheaves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(cat: &FinCat, s: &Sieve) -> Vec<String> {
        s.arrow_names(cat)
    }

    fn poset_topology() -> Topology {
        let p = fixtures::poset_ab();
        let f = p.arrow_index("f").unwrap();
        generate_topology(&p, &[sieve_generate(&p, 1, &[f]).unwrap()]).unwrap()
    }

    #[test]
    fn sieve_generation() {
        let p = fixtures::poset_ab();
        let (f, id_a, id_b) = (0, 1, 2);
        assert_eq!(sieve_generate(&p, 1, &[id_b]).unwrap(), Sieve::maximal(&p, 1));
        assert_eq!(names(&p, &sieve_generate(&p, 1, &[f]).unwrap()), vec!["f"]);
        assert!(sieve_generate(&p, 1, &[]).unwrap().is_empty());
        assert!(matches!(sieve_generate(&p, 1, &[id_a]), Err(CatError::CodMismatch { .. })));
    }

    #[test]
    fn pullbacks() {
        let p = fixtures::poset_ab();
        let f = 0;
        let max_b = Sieve::maximal(&p, 1);
        assert_eq!(pullback_sieve(&p, &max_b, f).unwrap(), Sieve::maximal(&p, 0));
        let sf = sieve_generate(&p, 1, &[f]).unwrap();
        assert_eq!(pullback_sieve(&p, &sf, f).unwrap(), Sieve::maximal(&p, 0));
        assert!(pullback_sieve(&p, &Sieve::empty(1), f).unwrap().is_empty());
    }

    #[test]
    fn topology_checks() {
        for (_, cat) in fixtures::all() {
            let t = Topology::trivial(&cat);
            assert!(is_topology(&cat, t.all_covers()));
            assert_eq!(irreducibles(&t).len(), cat.num_objects());
            assert!(is_rigid(&t));
        }
        let p = fixtures::poset_ab();
        let t = poset_topology();
        assert_eq!(t.covers(0).len(), 1);
        assert_eq!(t.covers(1).len(), 2);
        let only_f = vec![BTreeSet::from([Sieve::maximal(&p, 0)]), BTreeSet::from([sieve_generate(&p, 1, &[0]).unwrap()])];
        assert!(matches!(topology_violation(&p, &only_f), Some(TopologyViolation::Maximality { .. })));
    }

    #[test]
    fn generation_from_empty_coverage_is_trivial() {
        for (_, cat) in fixtures::all() {
            assert_eq!(generate_topology(&cat, &[]).unwrap(), Topology::trivial(&cat));
        }
    }

    #[test]
    fn empty_sieve_propagates_by_pullback() {
        let a2 = fixtures::arrow2();
        let t = generate_topology(&a2, &[Sieve::empty(0)]).unwrap();
        assert_eq!(t.covers(0).len(), 2);
        assert_eq!(t.covers(1).len(), 1);
        assert_eq!(irreducibles(&t), vec![1]);

        let t = generate_topology(&a2, &[Sieve::empty(1)]).unwrap();
        assert!(t.covers(0).contains(&Sieve::empty(0)));
        assert_eq!(t.covers(1).len(), all_sieves(&a2, 1).len());
    }

    #[test]
    fn pair_with_empty_sieve_on_b() {
        let pair = fixtures::pair();
        let t = generate_topology(&pair, &[Sieve::empty(1)]).unwrap();
        // Stability pulls the empty sieve back along f to a.
        assert!(irreducibles(&t).is_empty());
        assert!(is_rigid(&t));
    }

    #[test]
    fn poset_rigidity_and_irreducibles() {
        let t = poset_topology();
        assert_eq!(irreducibles(&t), vec![0]);
        let r = rigidity(&t);
        assert!(r.is_rigid());
        assert!(is_minimal(&t, &[sieve_generate(t.base(), 1, &[0]).unwrap()]));
    }

    #[test]
    fn sheaf_examples() {
        let p = fixtures::poset_ab();
        let t = poset_topology();
        let op = p.opposite();
        let bij = SetFunctor::new(op.clone(), vec![vec!["x".into(), "y".into()]; 2], vec![vec![1, 0], vec![0, 1], vec![0, 1]]).unwrap();
        assert!(is_sheaf(&bij, &t).unwrap());
        let collapse = SetFunctor::new(op.clone(), vec![vec!["x".into()], vec!["x".into(), "y".into()]], vec![vec![0, 0], vec![0], vec![0, 1]]).unwrap();
        assert!(!is_sheaf(&collapse, &t).unwrap());
        assert!(is_sheaf(&collapse, &Topology::trivial(&p)).unwrap());

        let e = generate_topology(&p, &[Sieve::empty(0)]).unwrap();
        let two_at_a = SetFunctor::new(op, vec![vec!["x".into(), "y".into()], vec!["x".into()]], vec![vec![0], vec![0, 1], vec![0]]).unwrap();
        assert!(!is_sheaf(&two_at_a, &e).unwrap());
    }

    #[test]
    fn dense_restriction_on_poset() {
        let p = fixtures::poset_ab();
        let t = poset_topology();
        let sheaf = SetFunctor::new(p.opposite(), vec![vec!["x".into(), "y".into()]; 2], vec![vec![0, 1], vec![0, 1], vec![0, 1]]).unwrap();
        let term = fixtures::term();
        let g = SetFunctor::constant(&term.opposite(), &["u", "v", "w"]);
        let (sub, _) = irreducible_subcategory(&t).unwrap();
        let g = SetFunctor::new(sub.opposite(), g.sets().to_vec(), g.maps().to_vec()).unwrap();
        let report = dense_restriction_equivalence(&t, &sheaf, &[g]).unwrap();
        assert!(report.passed());
        assert_eq!(report.irreducibles, vec![0]);
    }

    #[test]
    fn pullback_composition_law() {
        for (_, cat) in fixtures::all() {
            for c in 0..cat.num_objects() {
                for s in all_sieves(&cat, c) {
                    for &f in cat.arrows_into(c) {
                        for &g in cat.arrows_into(cat.dom(f)) {
                            let lhs = pullback_sieve(&cat, &pullback_sieve(&cat, &s, f).unwrap(), g).unwrap();
                            let rhs = pullback_sieve(&cat, &s, cat.comp(f, g)).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}
