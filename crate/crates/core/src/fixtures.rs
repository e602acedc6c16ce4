//! Small named categories used throughout tests, the CLI self-test and the
//! Python smoke test.

use crate::category::FinCat;

/// One object `*`, identity only.
pub fn term() -> FinCat {
    FinCat::presented(&["*"], &[], &[]).expect("TERM")
}

/// Objects `a`, `b` and one arrow `f: a → b`.
pub fn arrow2() -> FinCat {
    FinCat::presented(&["a", "b"], &[("f", "a", "b")], &[]).expect("ARROW2")
}

/// `a`, `b` with two parallel arrows `f, g: a → b`.
pub fn pair() -> FinCat {
    FinCat::presented(&["a", "b"], &[("f", "a", "b"), ("g", "a", "b")], &[]).expect("PAIR")
}

/// `s: c → a`, `t: c → b`.
pub fn span() -> FinCat {
    FinCat::presented(&["a", "b", "c"], &[("s", "c", "a"), ("t", "c", "b")], &[]).expect("SPAN")
}

/// `s: a → c`, `t: b → c`.
pub fn cospan() -> FinCat {
    FinCat::presented(&["a", "b", "c"], &[("s", "a", "c"), ("t", "b", "c")], &[]).expect("COSPAN")
}

/// One object `x` with a non-identity idempotent `e`.
pub fn idem() -> FinCat {
    FinCat::presented(&["x"], &[("e", "x", "x")], &[("e", "e", "e")]).expect("IDEM")
}

/// The two-element poset `a ≤ b`, used as a site.
pub fn poset_ab() -> FinCat {
    arrow2()
}

/// Two objects and no non-identity arrows.
pub fn discrete2() -> FinCat {
    FinCat::discrete(&["a", "b"]).expect("discrete category")
}

/// The cyclic group of order two as a one-object category.
pub fn z2() -> FinCat {
    FinCat::presented(&["x"], &[("s", "x", "x")], &[("s", "s", "id_x")]).expect("Z/2")
}

/// Every named fixture.
pub fn all() -> Vec<(&'static str, FinCat)> {
    vec![
        ("TERM", term()),
        ("ARROW2", arrow2()),
        ("PAIR", pair()),
        ("SPAN", span()),
        ("COSPAN", cospan()),
        ("IDEM", idem()),
        ("DISCRETE2", discrete2()),
        ("Z2", z2()),
    ]
}
