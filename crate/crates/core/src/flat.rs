//! Flatness of presheaves.
//!
//! A presheaf `F` on `C` is flat when its category of elements is filtered.
//! [`flatness`] checks the three filtering conditions directly on `F` and
//! reports the first failure; [`is_flat_via_elements`] builds the category of
//! elements and asks whether it is filtered.

use std::fmt;

use crate::error::Result;
use crate::setfun::{elements_presheaf, SetFunctor};

/// The first filtering condition a presheaf fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlatViolation {
    /// (i) every value set is empty.
    NoElements,
    /// (ii) no `z ∈ F(b)` restricts to both `x ∈ F(c)` and `y ∈ F(d)`.
    NoCone {
        c: String,
        x: String,
        d: String,
        y: String,
    },
    /// (iii) `F(u)(x) = F(v)(x)` for parallel `u, v: d → c` but no `w` out of
    /// `c` with `w∘u = w∘v` has an element restricting to `x`.
    NoEqualizer { u: String, v: String, x: String },
}

impl FlatViolation {
    pub fn condition(&self) -> &'static str {
        match self {
            FlatViolation::NoElements => "i",
            FlatViolation::NoCone { .. } => "ii",
            FlatViolation::NoEqualizer { .. } => "iii",
        }
    }
}

impl fmt::Display for FlatViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlatViolation::NoElements => write!(f, "(i) all value sets are empty"),
            FlatViolation::NoCone { c, x, d, y } => {
                write!(f, "(ii) no element restricts to both {x} in F({c}) and {y} in F({d})")
            }
            FlatViolation::NoEqualizer { u, v, x } => {
                write!(f, "(iii) no arrow coequalizing {u}, {v} lifts {x}")
            }
        }
    }
}

/// Checks conditions (i)–(iii) on a presheaf `F` (a functor on `C^op`).
/// `None` means `F` is flat.
pub fn flatness(presheaf: &SetFunctor) -> Option<FlatViolation> {
    let cat = presheaf.base().opposite();
    let n = cat.num_objects();
    if (0..n).all(|c| presheaf.size(c) == 0) {
        return Some(FlatViolation::NoElements);
    }

    // Global numbering of elements.
    let mut offsets = Vec::with_capacity(n + 1);
    let mut total = 0;
    for c in 0..n {
        offsets.push(total);
        total += presheaf.size(c);
    }
    let locate = |p: usize| {
        let c = offsets.partition_point(|&o| o <= p) - 1;
        (c, p - offsets[c])
    };

    // (ii): every pair of elements lies below a common element.
    let mut covered = vec![false; total * total];
    for b in 0..n {
        for z in 0..presheaf.size(b) {
            let mut below: Vec<usize> = cat
                .arrows_into(b)
                .iter()
                .map(|&u| offsets[cat.dom(u)] + presheaf.apply(u, z))
                .collect();
            below.sort_unstable();
            below.dedup();
            for &p in &below {
                for &q in &below {
                    covered[p * total + q] = true;
                }
            }
        }
    }
    if let Some(k) = covered.iter().position(|&c| !c) {
        let ((c, x), (d, y)) = (locate(k / total), locate(k % total));
        return Some(FlatViolation::NoCone {
            c: cat.object_name(c).to_string(),
            x: presheaf.set(c)[x].clone(),
            d: cat.object_name(d).to_string(),
            y: presheaf.set(d)[y].clone(),
        });
    }

    // (iii): parallel pairs agreeing on x are coequalized above x.
    for d in 0..n {
        for c in 0..n {
            let hom = cat.hom(d, c);
            for (i, &u) in hom.iter().enumerate() {
                for &v in &hom[i + 1..] {
                    for x in 0..presheaf.size(c) {
                        if presheaf.apply(u, x) != presheaf.apply(v, x) {
                            continue;
                        }
                        let lifted = cat.arrows_out_of(c).iter().any(|&w| {
                            cat.comp(w, u) == cat.comp(w, v)
                                && (0..presheaf.size(cat.cod(w))).any(|y| presheaf.apply(w, y) == x)
                        });
                        if !lifted {
                            return Some(FlatViolation::NoEqualizer {
                                u: cat.arrow_name(u).to_string(),
                                v: cat.arrow_name(v).to_string(),
                                x: presheaf.set(c)[x].clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn is_flat(presheaf: &SetFunctor) -> bool {
    flatness(presheaf).is_none()
}

/// Flatness read off the category of elements.
pub fn is_flat_via_elements(presheaf: &SetFunctor) -> Result<bool> {
    Ok(elements_presheaf(presheaf)?.category.is_filtered())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::setfun::yoneda;

    #[test]
    fn representables_are_flat() {
        for (_, cat) in fixtures::all() {
            for c in 0..cat.num_objects() {
                let y = yoneda(&cat, c).unwrap();
                assert_eq!(flatness(&y), None);
                assert!(is_flat_via_elements(&y).unwrap());
            }
        }
    }

    #[test]
    fn pair_presheaf_fails_condition_iii() {
        let pair = fixtures::pair();
        let f = SetFunctor::singleton(&pair.opposite());
        let v = flatness(&f).unwrap();
        assert_eq!(v.condition(), "iii");
        assert_eq!(
            v,
            FlatViolation::NoEqualizer {
                u: "f".into(),
                v: "g".into(),
                x: "*".into()
            }
        );
        assert!(!is_flat_via_elements(&f).unwrap());
    }

    #[test]
    fn empty_presheaf_fails_condition_i() {
        let f = SetFunctor::empty(&fixtures::arrow2().opposite());
        assert_eq!(flatness(&f), Some(FlatViolation::NoElements));
        assert!(!is_flat_via_elements(&f).unwrap());
    }

    #[test]
    fn disconnected_presheaf_fails_condition_ii() {
        let f = SetFunctor::singleton(&fixtures::discrete2());
        assert_eq!(flatness(&f).unwrap().condition(), "ii");
        assert!(!is_flat_via_elements(&f).unwrap());
    }
}
