//! Colimits, limits and tensor products of finite-set-valued functors.
//!
//! Colimits are computed as coequalizers: the carrier is the tagged disjoint
//! union `⨿_i H(i)` and the classes are the equivalence closure of the pairs
//! `((i, x), (j, H(u)(x)))` over every arrow `u: i → j`.

use crate::category::pair_id;
use crate::error::{CatError, Result};
use crate::setfun::{elements_covariant, elements_presheaf, SetFunctor};
use crate::unionfind::UnionFind;

/// A quotient of a tagged disjoint union `⨿_i H(i)`.
///
/// Classes are numbered in order of their least member in carrier order
/// (blocks in order, then elements in order), and that least member is the
/// representative. Two quotients of the same carrier describe the same
/// partition exactly when their `class_of` vectors agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSet {
    tags: Vec<String>,
    elements: Vec<Vec<String>>,
    offsets: Vec<usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl QuotientSet {
    /// The quotient by the equivalence relation generated by `pairs` of
    /// carrier indices.
    pub fn from_pairs(
        tags: Vec<String>,
        elements: Vec<Vec<String>>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> QuotientSet {
        let len = elements.iter().map(Vec::len).sum();
        let mut uf = UnionFind::new(len);
        for (p, q) in pairs {
            uf.union(p, q);
        }
        QuotientSet::from_labels(tags, elements, &uf.labels())
    }

    /// The partition induced by arbitrary class labels on the carrier.
    pub fn from_labels(tags: Vec<String>, elements: Vec<Vec<String>>, labels: &[usize]) -> QuotientSet {
        let mut offsets = Vec::with_capacity(tags.len() + 1);
        let mut acc = 0;
        for set in &elements {
            offsets.push(acc);
            acc += set.len();
        }
        offsets.push(acc);
        assert_eq!(labels.len(), acc, "one label per carrier element");
        let mut renumber = std::collections::HashMap::new();
        let mut class_of = Vec::with_capacity(acc);
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (p, l) in labels.iter().enumerate() {
            let k = *renumber.entry(*l).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            class_of.push(k);
            classes[k].push(p);
        }
        QuotientSet {
            tags,
            elements,
            offsets,
            class_of,
            classes,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Members of each class as carrier indices, ascending.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn carrier_len(&self) -> usize {
        self.class_of.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.tags.len()
    }

    pub fn tag(&self, block: usize) -> &str {
        &self.tags[block]
    }

    pub fn block_elements(&self, block: usize) -> &[String] {
        &self.elements[block]
    }

    pub fn carrier_index(&self, block: usize, x: usize) -> usize {
        self.offsets[block] + x
    }

    /// `(block, element)` of a carrier index.
    pub fn carrier_element(&self, p: usize) -> (usize, usize) {
        let block = self.offsets.partition_point(|&o| o <= p) - 1;
        (block, p - self.offsets[block])
    }

    /// The injection `κ_block` applied to `x`.
    pub fn inject(&self, block: usize, x: usize) -> usize {
        self.class_of[self.offsets[block] + x]
    }

    /// The whole map `κ_block`.
    pub fn injection(&self, block: usize) -> &[usize] {
        &self.class_of[self.offsets[block]..self.offsets[block + 1]]
    }

    /// Least member of a class.
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    /// Renders a carrier element as `(tag,element)`.
    pub fn label(&self, p: usize) -> String {
        let (b, x) = self.carrier_element(p);
        pair_id(&self.tags[b], &self.elements[b][x])
    }

    /// Label of the representative of a class.
    pub fn class_label(&self, class: usize) -> String {
        self.label(self.representative(class))
    }

    pub fn same_partition(&self, other: &QuotientSet) -> bool {
        self.class_of == other.class_of
    }

    /// Re-expresses this partition on another carrier through an injective
    /// map of carrier indices, returning per-target-element labels
    /// (`usize::MAX` where nothing maps).
    pub fn transport(&self, carrier_map: &[usize], target_len: usize) -> Vec<usize> {
        let mut labels = vec![usize::MAX; target_len];
        for (p, &q) in carrier_map.iter().enumerate() {
            labels[q] = self.class_of[p];
        }
        labels
    }
}

fn diagram_carrier(h: &SetFunctor) -> (Vec<String>, Vec<Vec<String>>, Vec<usize>) {
    let base = h.base();
    let mut offsets = Vec::with_capacity(base.num_objects());
    let mut acc = 0;
    for c in 0..base.num_objects() {
        offsets.push(acc);
        acc += h.size(c);
    }
    (base.objects().to_vec(), h.sets().to_vec(), offsets)
}

/// Colimit of a diagram of finite sets, as the coequalizer of
/// `⨿_{u: i → j} H(i) ⇉ ⨿_i H(i)`.
pub fn colimit(h: &SetFunctor) -> QuotientSet {
    let base = h.base();
    let (tags, elements, offsets) = diagram_carrier(h);
    let offsets = &offsets;
    let pairs = base
        .arrows()
        .iter()
        .enumerate()
        .filter(|(u, _)| !base.is_identity(*u))
        .flat_map(|(u, a)| (0..h.size(a.dom)).map(move |x| (offsets[a.dom] + x, offsets[a.cod] + h.apply(u, x))))
        .collect::<Vec<_>>();
    QuotientSet::from_pairs(tags, elements, pairs)
}

/// Colimit over a filtered index category: `(i,x) ~ (j,y)` exactly when one
/// cocone `u: i → k ← j: v` has `H(u)(x) = H(v)(y)`. No closure is taken; the
/// pairwise relation is checked to already be an equivalence.
pub fn colimit_filtered(h: &SetFunctor) -> Result<QuotientSet> {
    let base = h.base();
    if !base.is_filtered() {
        return Err(CatError::NotFiltered);
    }
    let (tags, elements, offsets) = diagram_carrier(h);
    let n = elements.iter().map(Vec::len).sum::<usize>();
    // Images of each carrier element under every arrow out of its object.
    let mut images: Vec<Vec<usize>> = Vec::with_capacity(n);
    for c in 0..base.num_objects() {
        for x in 0..h.size(c) {
            let mut imgs: Vec<usize> = base
                .arrows_out_of(c)
                .iter()
                .map(|&u| offsets[base.cod(u)] + h.apply(u, x))
                .collect();
            imgs.sort_unstable();
            imgs.dedup();
            images.push(imgs);
        }
    }
    let related = |p: usize, q: usize| {
        let (a, b) = (&images[p], &images[q]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    };
    let mut labels = vec![usize::MAX; n];
    for p in 0..n {
        labels[p] = (0..=p).find(|&q| related(p, q)).expect("relation is reflexive");
    }
    for p in 0..n {
        for q in 0..n {
            if related(p, q) != (labels[p] == labels[q]) {
                let q_all = QuotientSet::from_labels(tags.clone(), elements.clone(), &labels);
                return Err(CatError::RelationNotTransitive {
                    detail: format!("{} and {}", q_all.label(p), q_all.label(q)),
                });
            }
        }
    }
    Ok(QuotientSet::from_labels(tags, elements, &labels))
}

/// The limit of a diagram: compatible families with their projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limit {
    /// One entry per compatible family, giving the component at each object.
    pub families: Vec<Vec<usize>>,
}

impl Limit {
    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    /// The projection to object `c`.
    pub fn projection(&self, c: usize) -> Vec<usize> {
        self.families.iter().map(|fam| fam[c]).collect()
    }

    /// Renders a family as `(x_1,…,x_n)` using element names of `h`.
    pub fn render(&self, h: &SetFunctor, k: usize) -> String {
        let parts: Vec<&str> = self.families[k]
            .iter()
            .enumerate()
            .map(|(c, &x)| h.set(c)[x].as_str())
            .collect();
        format!("({})", parts.join(","))
    }
}

/// Families `(x_i)` in `∏_i H(i)` with `H(u)(x_i) = x_j` for every `u: i → j`,
/// in lexicographic order.
pub fn limit(h: &SetFunctor) -> Limit {
    let base = h.base();
    let n = base.num_objects();
    // Each non-identity arrow is checked once both ends are assigned.
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, a) in base.arrows().iter().enumerate() {
        if !base.is_identity(u) {
            checks[a.dom.max(a.cod)].push(u);
        }
    }
    let mut families = Vec::new();
    let mut current = vec![0; n];
    fn go(h: &SetFunctor, checks: &[Vec<usize>], depth: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if depth == current.len() {
            out.push(current.clone());
            return;
        }
        let base = h.base();
        for x in 0..h.size(depth) {
            current[depth] = x;
            if checks[depth]
                .iter()
                .all(|&u| h.apply(u, current[base.dom(u)]) == current[base.cod(u)])
            {
                go(h, checks, depth + 1, current, out);
            }
        }
    }
    go(h, &checks, 0, &mut current, &mut families);
    Limit { families }
}

fn check_tensor_bases(presheaf: &SetFunctor, covariant: &SetFunctor) -> Result<()> {
    if presheaf.base().opposite() != *covariant.base() {
        return Err(CatError::BaseMismatch);
    }
    Ok(())
}

/// Carrier offsets of `⨿_c F(c) × P(c)`.
fn tensor_offsets(presheaf: &SetFunctor, covariant: &SetFunctor) -> Vec<usize> {
    let mut offsets = Vec::new();
    let mut acc = 0;
    for c in 0..covariant.base().num_objects() {
        offsets.push(acc);
        acc += presheaf.size(c) * covariant.size(c);
    }
    offsets
}

/// Tensor product `F ⊗ P` of a presheaf `F` and a covariant `P` on `C`: the
/// quotient of `⨿_c F(c) × P(c)` by `(F(f)(x'), y) ~ (x', P(f)(y))` over
/// `f: c → c'`. Carrier blocks are objects of `C`; the element `(x,y)` of
/// block `c` sits at local index `x·|P(c)| + y`.
pub fn tensor(presheaf: &SetFunctor, covariant: &SetFunctor) -> Result<QuotientSet> {
    check_tensor_bases(presheaf, covariant)?;
    let cat = covariant.base();
    let offsets = tensor_offsets(presheaf, covariant);
    let idx = |c: usize, x: usize, y: usize| offsets[c] + x * covariant.size(c) + y;
    let mut pairs = Vec::new();
    for (f, a) in cat.arrows().iter().enumerate() {
        if cat.is_identity(f) {
            continue;
        }
        let (c, c2) = (a.dom, a.cod);
        for x2 in 0..presheaf.size(c2) {
            let x = presheaf.apply(f, x2);
            for y in 0..covariant.size(c) {
                pairs.push((idx(c, x, y), idx(c2, x2, covariant.apply(f, y))));
            }
        }
    }
    let elements = (0..cat.num_objects())
        .map(|c| {
            let mut v = Vec::new();
            for x in presheaf.set(c) {
                for y in covariant.set(c) {
                    v.push(pair_id(x, y));
                }
            }
            v
        })
        .collect();
    Ok(QuotientSet::from_pairs(cat.objects().to_vec(), elements, pairs))
}

/// The three computations of `F ⊗ P` and their identification.
#[derive(Clone, Debug)]
pub struct TensorCommutation {
    pub tensor: QuotientSet,
    /// `colim(F ∘ π_P)` over the opposite of the elements of `P`.
    pub via_elements_of_covariant: QuotientSet,
    /// `colim(P ∘ π_F)` over the elements of `F`.
    pub via_elements_of_presheaf: QuotientSet,
    /// Class of the first colimit ↦ class of the tensor.
    pub first_to_tensor: Vec<usize>,
    /// Class of the second colimit ↦ class of the tensor.
    pub second_to_tensor: Vec<usize>,
}

/// Computes `colim(F ∘ π_P)`, `colim(P ∘ π_F)` and `F ⊗ P` independently and
/// checks they partition the common carrier `{(c, x, y)}` identically.
pub fn tensor_commute_check(presheaf: &SetFunctor, covariant: &SetFunctor) -> Result<TensorCommutation> {
    check_tensor_bases(presheaf, covariant)?;
    let t = tensor(presheaf, covariant)?;
    let offsets = tensor_offsets(presheaf, covariant);
    let idx = |c: usize, x: usize, y: usize| offsets[c] + x * covariant.size(c) + y;

    let els_p = elements_covariant(covariant)?;
    let diag1 = presheaf.restrict(&els_p.projection.opposite())?;
    let first = colimit(&diag1);
    let mut map1 = Vec::with_capacity(first.carrier_len());
    for &(c, y) in &els_p.elements {
        for x in 0..presheaf.size(c) {
            map1.push(idx(c, x, y));
        }
    }

    let els_f = elements_presheaf(presheaf)?;
    let diag2 = covariant.restrict(&els_f.projection)?;
    let second = colimit(&diag2);
    let mut map2 = Vec::with_capacity(second.carrier_len());
    for &(c, x) in &els_f.elements {
        for y in 0..covariant.size(c) {
            map2.push(idx(c, x, y));
        }
    }

    let mut class_maps = Vec::new();
    for (name, q, map) in [("F∘π_P", &first, &map1), ("P∘π_F", &second, &map2)] {
        if q.carrier_len() != t.carrier_len() {
            return Err(CatError::CommutationFailure {
                detail: format!("carrier of colim({name}) has the wrong size"),
            });
        }
        let labels = q.transport(map, t.carrier_len());
        let moved = QuotientSet::from_labels(Vec::new(), vec![vec![String::new(); labels.len()]], &labels);
        if moved.class_of() != t.class_of() {
            return Err(CatError::CommutationFailure {
                detail: format!("colim({name}) partitions the carrier differently from the tensor"),
            });
        }
        class_maps.push(
            (0..q.num_classes())
                .map(|k| t.class_of()[map[q.representative(k)]])
                .collect::<Vec<_>>(),
        );
    }
    let second_to_tensor = class_maps.pop().unwrap_or_default();
    let first_to_tensor = class_maps.pop().unwrap_or_default();
    Ok(TensorCommutation {
        tensor: t,
        via_elements_of_covariant: first,
        via_elements_of_presheaf: second,
        first_to_tensor,
        second_to_tensor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::setfun::{yoneda, yoneda_named};

    fn sets(v: &[&[&str]]) -> Vec<Vec<String>> {
        v.iter().map(|s| s.iter().map(|x| x.to_string()).collect()).collect()
    }

    #[test]
    fn colimit_over_point_is_the_set() {
        let t = fixtures::term();
        let h = SetFunctor::constant(&t, &["p", "q", "r"]);
        let q = colimit(&h);
        assert_eq!(q.num_classes(), 3);
        assert_eq!(q.injection(0), &[0, 1, 2]);
    }

    #[test]
    fn coequalizer_of_identity_and_swap() {
        let p = fixtures::pair();
        // arrows: f, g, id_a, id_b
        let h = SetFunctor::new(p, sets(&[&["0", "1"], &["0", "1"]]), vec![vec![0, 1], vec![1, 0], vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(colimit(&h).num_classes(), 1);
    }

    #[test]
    fn pushout_of_sets() {
        let span = fixtures::span();
        // arrows: s: c→a, t: c→b, id_a, id_b, id_c
        let h = SetFunctor::new(
            span,
            sets(&[&["0", "1"], &["u", "v"], &["*"]]),
            vec![vec![0], vec![0], vec![0, 1], vec![0, 1], vec![0]],
        )
        .unwrap();
        let q = colimit(&h);
        assert_eq!(q.num_classes(), 3);
        let rendered: Vec<Vec<String>> = q
            .classes()
            .iter()
            .map(|cl| cl.iter().map(|&p| q.label(p)).collect())
            .collect();
        assert_eq!(
            rendered,
            vec![
                vec!["(a,0)".to_string(), "(b,u)".into(), "(c,*)".into()],
                vec!["(a,1)".to_string()],
                vec!["(b,v)".to_string()],
            ]
        );
    }

    #[test]
    fn limit_examples() {
        let t = fixtures::term();
        assert_eq!(limit(&SetFunctor::constant(&t, &["x", "y"])).len(), 2);

        let p = fixtures::pair();
        let h = SetFunctor::new(p, sets(&[&["0", "1"], &["0", "1"]]), vec![vec![0, 1], vec![1, 0], vec![0, 1], vec![0, 1]]).unwrap();
        assert!(limit(&h).is_empty());

        let cospan = fixtures::cospan();
        let h = SetFunctor::constant(&cospan, &["0", "1"]);
        let lim = limit(&h);
        assert_eq!(lim.families, vec![vec![0, 0, 0], vec![1, 1, 1]]);
        assert_eq!(lim.render(&h, 1), "(1,1,1)");
    }

    #[test]
    fn filtered_fast_path_on_cospan() {
        let cospan = fixtures::cospan();
        // arrows: s: a→c, t: b→c, id_a, id_b, id_c
        let h = SetFunctor::new(
            cospan,
            sets(&[&["0", "1"], &["u"], &["p", "q"]]),
            vec![vec![0, 0], vec![1], vec![0, 1], vec![0], vec![0, 1]],
        )
        .unwrap();
        let fast = colimit_filtered(&h).unwrap();
        let rendered: Vec<Vec<String>> = fast
            .classes()
            .iter()
            .map(|cl| cl.iter().map(|&p| fast.label(p)).collect())
            .collect();
        assert_eq!(
            rendered,
            vec![
                vec!["(a,0)".to_string(), "(a,1)".into(), "(c,p)".into()],
                vec!["(b,u)".to_string(), "(c,q)".into()],
            ]
        );
        assert!(fast.same_partition(&colimit(&h)));
    }

    #[test]
    fn filtered_fast_path_rejects_pair() {
        let h = SetFunctor::singleton(&fixtures::pair());
        assert_eq!(colimit_filtered(&h), Err(CatError::NotFiltered));
    }

    #[test]
    fn co_yoneda_class_counts() {
        for cat in [fixtures::arrow2(), fixtures::pair(), fixtures::span(), fixtures::idem()] {
            let p = SetFunctor::from_fn(
                cat.clone(),
                (0..cat.num_objects()).map(|c| (0..c + 1).map(|i| i.to_string()).collect()).collect(),
                |f, x| if cat.is_identity(f) { x } else { 0 },
            );
            let Ok(p) = p else { continue };
            for c in 0..cat.num_objects() {
                let t = tensor(&yoneda(&cat, c).unwrap(), &p).unwrap();
                assert_eq!(t.num_classes(), p.size(c));
            }
        }
    }

    #[test]
    fn tensor_with_empty_is_empty() {
        let a2 = fixtures::arrow2();
        let y = yoneda_named(&a2, "b").unwrap();
        assert!(tensor(&y, &SetFunctor::empty(&a2)).unwrap().is_empty());
        assert!(tensor(&SetFunctor::empty(&a2.opposite()), &SetFunctor::singleton(&a2)).unwrap().is_empty());
    }

    #[test]
    fn tensor_with_singleton_is_colimit_on_opposite() {
        let span = fixtures::span();
        let f = SetFunctor::new(
            span.opposite(),
            sets(&[&["0", "1"], &["u"], &["p", "q"]]),
            vec![vec![0, 1], vec![1], vec![0, 1], vec![0], vec![0, 1]],
        )
        .unwrap();
        let t = tensor(&f, &SetFunctor::singleton(&span)).unwrap();
        let c = colimit(&f);
        assert!(t.same_partition(&c));
    }

    #[test]
    fn commutation_on_arrow2_representable() {
        let a2 = fixtures::arrow2();
        let r = tensor_commute_check(&yoneda_named(&a2, "b").unwrap(), &SetFunctor::singleton(&a2)).unwrap();
        assert_eq!(r.tensor.num_classes(), 1);
        assert_eq!(r.via_elements_of_covariant.num_classes(), 1);
        assert_eq!(r.via_elements_of_presheaf.num_classes(), 1);
    }

    #[test]
    fn commutation_on_term() {
        let t = fixtures::term();
        let f = SetFunctor::constant(&t, &["x", "y"]);
        let p = SetFunctor::constant(&t, &["0", "1", "2"]);
        let r = tensor_commute_check(&f, &p).unwrap();
        assert_eq!(r.tensor.num_classes(), 6);
    }
}
