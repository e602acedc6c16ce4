//! Reading and writing the JSON interchange formats.
//!
//! Wherever a category (or set-functor) is expected, a string is accepted as
//! a path to a file holding it, resolved relative to the directory of the
//! file that mentions it.
//!
//! Set-functor format:
//!
//! ```json
//! {"base": "arrow2.json", "variance": "presheaf",
//!  "sets": {"a": ["x"], "b": ["y", "z"]},
//!  "maps": {"f": {"y": "x", "z": "x"}}}
//! ```
//!
//! For a presheaf the map listed under `f: c → d` goes from the value at `d`
//! to the value at `c`. Maps of identities may be left out. Elements may be
//! strings or numbers.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use crate::adjoint::ProfunctorP;
use crate::category::{validate_category, CategoryDescription, FinCat};
use crate::colimits::{Limit, QuotientSet};
use crate::error::{CatError, Result};
use crate::functor::{FinFunctor, FunctorDescription};
use crate::setfun::{NatTransformation, SetFunctor};
use crate::sites::{sieve_generate, Sieve, Topology};

/// Whether a loaded set-functor is covariant on its base or a presheaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Presheaf,
}

impl Variance {
    pub fn as_str(self) -> &'static str {
        match self {
            Variance::Covariant => "covariant",
            Variance::Presheaf => "presheaf",
        }
    }
}

/// A set-functor together with the variance it was written in. For a
/// presheaf, `functor` lives on the opposite of the written base.
#[derive(Clone, Debug)]
pub struct LoadedSetFunctor {
    pub functor: SetFunctor,
    pub variance: Variance,
}

impl LoadedSetFunctor {
    /// The category named under `"base"`.
    pub fn written_base(&self) -> FinCat {
        match self.variance {
            Variance::Covariant => self.functor.base().clone(),
            Variance::Presheaf => self.functor.base().opposite(),
        }
    }
}

fn input(msg: impl Into<String>) -> CatError {
    CatError::Input(msg.into())
}

/// Resolves file references against a directory.
#[derive(Clone, Debug)]
pub struct Loader {
    dir: PathBuf,
}

impl Default for Loader {
    fn default() -> Self {
        Loader { dir: PathBuf::from(".") }
    }
}

pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| input(format!("invalid JSON: {e}")))
}

impl Loader {
    pub fn new(dir: impl Into<PathBuf>) -> Loader {
        Loader { dir: dir.into() }
    }

    /// Reads a file and returns its contents with a loader for references
    /// made from inside it.
    pub fn read(&self, path: &str) -> Result<(Value, Loader)> {
        let full = self.dir.join(path);
        let text = fs::read_to_string(&full).map_err(|e| input(format!("cannot read {}: {e}", full.display())))?;
        let dir = full.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
        Ok((parse(&text)?, Loader { dir }))
    }

    fn deref(&self, v: &Value) -> Result<(Value, Loader)> {
        match v {
            Value::String(path) => self.read(path),
            other => Ok((other.clone(), self.clone())),
        }
    }

    pub fn category(&self, v: &Value) -> Result<FinCat> {
        let (v, _) = self.deref(v)?;
        let raw: CategoryDescription =
            serde_json::from_value(v).map_err(|e| input(format!("bad category: {e}")))?;
        validate_category(&raw.with_inferred_units())
    }

    /// `{"source", "target", "objects": {..}, "arrows": {..}}`.
    pub fn functor(&self, v: &Value) -> Result<FinFunctor> {
        let (v, here) = self.deref(v)?;
        let source = here.category(field(&v, "source")?)?;
        let target = here.category(field(&v, "target")?)?;
        let desc: FunctorDescription = serde_json::from_value(json!({
            "objects": v.get("objects").cloned().unwrap_or(json!({})),
            "arrows": v.get("arrows").cloned().unwrap_or(json!({})),
        }))
        .map_err(|e| input(format!("bad functor: {e}")))?;
        FinFunctor::from_description(&desc, &source, &target)
    }

    pub fn set_functor(&self, v: &Value) -> Result<LoadedSetFunctor> {
        let (v, here) = self.deref(v)?;
        let written = here.category(field(&v, "base")?)?;
        let variance = match v.get("variance").and_then(Value::as_str).unwrap_or("covariant") {
            "covariant" => Variance::Covariant,
            "presheaf" => Variance::Presheaf,
            other => return Err(input(format!("unknown variance `{other}`"))),
        };
        let base = match variance {
            Variance::Covariant => written,
            Variance::Presheaf => written.opposite(),
        };
        let functor = set_functor_on(&base, &v)?;
        Ok(LoadedSetFunctor { functor, variance })
    }

    /// `{"source", "target", "values": {c: {"sets", "maps"}}, "actions": {f: {d: {x: y}}}}`
    /// where each value is a presheaf on `target`.
    pub fn profunctor(&self, v: &Value) -> Result<ProfunctorP> {
        let (v, here) = self.deref(v)?;
        let source = here.category(field(&v, "source")?)?;
        let target = here.category(field(&v, "target")?)?;
        let target_op = target.opposite();
        let values_json = object(field(&v, "values")?, "values")?;
        let mut values = Vec::new();
        for c in source.objects() {
            let val = values_json
                .get(c)
                .ok_or_else(|| input(format!("no value for `{c}`")))?;
            values.push(set_functor_on(&target_op, val)?);
        }
        let empty = Map::new();
        let actions_json = match v.get("actions") {
            Some(a) => object(a, "actions")?,
            None => &empty,
        };
        for k in actions_json.keys() {
            source.arrow_index(k)?;
        }
        let mut actions = Vec::new();
        for (f, a) in source.arrows().iter().enumerate() {
            let (from, to) = (&values[a.dom], &values[a.cod]);
            match actions_json.get(&a.id) {
                Some(comp) => actions.push(nat_components(from, to, comp)?),
                None if source.is_identity(f) => actions.push(NatTransformation::identity(from)),
                None => return Err(input(format!("no action for `{}`", a.id))),
            }
        }
        ProfunctorP::new(source, target, values, actions)
    }

    /// `{"source": setfun, "target": setfun, "components": {c: {x: y}}}`.
    pub fn nat_transformation(&self, v: &Value) -> Result<NatTransformation> {
        let (v, here) = self.deref(v)?;
        let source = here.set_functor(field(&v, "source")?)?.functor;
        let target = here.set_functor(field(&v, "target")?)?.functor;
        nat_components(&source, &target, field(&v, "components")?)
    }

    /// Raw covering sieves per object: `{"covers": {obj: [[arrow ids]...]}}`,
    /// each list closed under precomposition. Objects not listed get no
    /// sieves.
    pub fn covers(&self, cat: &FinCat, v: &Value) -> Result<Vec<BTreeSet<Sieve>>> {
        let (v, _) = self.deref(v)?;
        let covers = object(field(&v, "covers")?, "covers")?;
        let mut out = vec![BTreeSet::new(); cat.num_objects()];
        for (obj, lists) in covers {
            let c = cat.object_index(obj)?;
            let lists = lists
                .as_array()
                .ok_or_else(|| input(format!("covers of `{obj}` must be a list of lists")))?;
            for gens in lists {
                out[c].insert(sieve_from(cat, c, gens)?);
            }
        }
        Ok(out)
    }

    /// A validated topology in the format of [`Loader::covers`].
    pub fn topology(&self, cat: &FinCat, v: &Value) -> Result<Topology> {
        Topology::new(cat.clone(), self.covers(cat, v)?)
    }

    /// A coverage in the same format, flattened.
    pub fn coverage(&self, cat: &FinCat, v: &Value) -> Result<Vec<Sieve>> {
        Ok(self.covers(cat, v)?.into_iter().flatten().collect())
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| input(format!("missing field `{key}`")))
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| input(format!("`{what}` must be an object")))
}

fn element(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(input(format!("element must be a string or number, got {other}"))),
    }
}

/// Reads `{"sets", "maps"}` against a base already in the stored variance.
fn set_functor_on(base: &FinCat, v: &Value) -> Result<SetFunctor> {
    let sets_json = object(field(v, "sets")?, "sets")?;
    for k in sets_json.keys() {
        base.object_index(k)?;
    }
    let mut sets = Vec::new();
    for obj in base.objects() {
        let set = match sets_json.get(obj) {
            Some(Value::Array(xs)) => xs.iter().map(element).collect::<Result<Vec<_>>>()?,
            Some(_) => return Err(input(format!("set of `{obj}` must be a list"))),
            None => return Err(input(format!("no set for `{obj}`"))),
        };
        sets.push(set);
    }
    let empty = Map::new();
    let maps_json = match v.get("maps") {
        Some(m) => object(m, "maps")?,
        None => &empty,
    };
    for k in maps_json.keys() {
        base.arrow_index(k)?;
    }
    let mut maps = Vec::new();
    for (f, a) in base.arrows().iter().enumerate() {
        let map = match maps_json.get(&a.id) {
            Some(m) => read_function(&sets[a.dom], &sets[a.cod], m, &a.id)?,
            None if base.is_identity(f) => (0..sets[a.dom].len()).collect(),
            None => return Err(input(format!("no map for `{}`", a.id))),
        };
        maps.push(map);
    }
    SetFunctor::new(base.clone(), sets, maps)
}

fn read_function(dom: &[String], cod: &[String], v: &Value, what: &str) -> Result<Vec<usize>> {
    let m = object(v, what)?;
    let position = |set: &[String], x: &str| {
        set.iter()
            .position(|y| y == x)
            .ok_or_else(|| CatError::UnknownElement { object: what.to_string(), element: x.to_string() })
    };
    for k in m.keys() {
        position(dom, k)?;
    }
    dom.iter()
        .map(|x| {
            let y = m
                .get(x)
                .ok_or_else(|| input(format!("`{what}` is not defined on `{x}`")))?;
            position(cod, &element(y)?)
        })
        .collect()
}

fn nat_components(source: &SetFunctor, target: &SetFunctor, v: &Value) -> Result<NatTransformation> {
    if source.base() != target.base() {
        return Err(CatError::BaseMismatch);
    }
    let base = source.base();
    let comps = object(v, "components")?;
    let mut components = Vec::new();
    for c in 0..base.num_objects() {
        let name = base.object_name(c);
        let comp = match comps.get(name) {
            Some(m) => read_function(source.set(c), target.set(c), m, name)?,
            None if source.size(c) == 0 => Vec::new(),
            None => return Err(input(format!("no component at `{name}`"))),
        };
        components.push(comp);
    }
    NatTransformation::new(source.clone(), target.clone(), components)
}

fn sieve_from(cat: &FinCat, c: usize, gens: &Value) -> Result<Sieve> {
    let gens = gens
        .as_array()
        .ok_or_else(|| input("a sieve is a list of arrow ids"))?
        .iter()
        .map(|g| {
            g.as_str()
                .ok_or_else(|| input("arrow ids are strings"))
                .and_then(|s| cat.arrow_index(s))
        })
        .collect::<Result<Vec<_>>>()?;
    sieve_generate(cat, c, &gens)
}

pub fn category_to_value(cat: &FinCat) -> Value {
    serde_json::to_value(cat.to_description()).expect("category description serializes")
}

pub fn functor_to_value(f: &FinFunctor) -> Value {
    let d = f.to_description();
    json!({
        "source": category_to_value(f.source()),
        "target": category_to_value(f.target()),
        "objects": d.objects,
        "arrows": d.arrows,
    })
}

fn sets_and_maps(f: &SetFunctor) -> (Value, Value) {
    let base = f.base();
    let sets: BTreeMap<&str, &[String]> = (0..base.num_objects()).map(|c| (base.object_name(c), f.set(c))).collect();
    let mut maps = BTreeMap::new();
    for (i, a) in base.arrows().iter().enumerate() {
        if base.is_identity(i) {
            continue;
        }
        let m: BTreeMap<&str, &str> = f
            .map(i)
            .iter()
            .enumerate()
            .map(|(x, &y)| (f.set(a.dom)[x].as_str(), f.set(a.cod)[y].as_str()))
            .collect();
        maps.insert(a.id.as_str(), m);
    }
    (json!(sets), json!(maps))
}

/// Writes a set-functor with its base inline. For a presheaf, `f` lives on
/// the opposite of the base that gets written.
pub fn set_functor_to_value(f: &SetFunctor, variance: Variance) -> Value {
    let base = match variance {
        Variance::Covariant => f.base().clone(),
        Variance::Presheaf => f.base().opposite(),
    };
    let (sets, maps) = sets_and_maps(f);
    json!({
        "base": category_to_value(&base),
        "variance": variance.as_str(),
        "sets": sets,
        "maps": maps,
    })
}

pub fn nat_to_value(t: &NatTransformation) -> Value {
    let (s, g) = (t.source(), t.target());
    let base = s.base();
    let comps: BTreeMap<&str, BTreeMap<&str, &str>> = (0..base.num_objects())
        .map(|c| {
            let m = t
                .component(c)
                .iter()
                .enumerate()
                .map(|(x, &y)| (s.set(c)[x].as_str(), g.set(c)[y].as_str()))
                .collect();
            (base.object_name(c), m)
        })
        .collect();
    json!({ "components": comps })
}

pub fn profunctor_to_value(p: &ProfunctorP) -> Value {
    let source = p.source();
    let mut values = BTreeMap::new();
    for c in 0..source.num_objects() {
        let (sets, maps) = sets_and_maps(p.value(c));
        values.insert(source.object_name(c), json!({ "sets": sets, "maps": maps }));
    }
    let mut actions = BTreeMap::new();
    for f in 0..source.num_arrows() {
        if !source.is_identity(f) {
            actions.insert(source.arrow_name(f), nat_to_value(p.action(f))["components"].clone());
        }
    }
    json!({
        "source": category_to_value(source),
        "target": category_to_value(p.target()),
        "values": values,
        "actions": actions,
    })
}

/// `{"classes": [[[tag, elem], ...], ...], "injections": {tag: {elem: class}}}`.
pub fn quotient_to_value(q: &QuotientSet) -> Value {
    let classes: Vec<Vec<[&str; 2]>> = q
        .classes()
        .iter()
        .map(|cls| {
            cls.iter()
                .map(|&p| {
                    let (b, x) = q.carrier_element(p);
                    [q.tag(b), q.block_elements(b)[x].as_str()]
                })
                .collect()
        })
        .collect();
    let mut injections: BTreeMap<&str, BTreeMap<&str, usize>> = BTreeMap::new();
    for b in 0..q.num_blocks() {
        let entry = injections.entry(q.tag(b)).or_default();
        for (x, name) in q.block_elements(b).iter().enumerate() {
            entry.insert(name.as_str(), q.inject(b, x));
        }
    }
    json!({ "classes": classes, "injections": injections })
}

/// `{"elements": [...], "projections": {obj: [...]}}` for a limit of `h`.
pub fn limit_to_value(l: &Limit, h: &SetFunctor) -> Value {
    let base = h.base();
    let elements: Vec<String> = (0..l.len()).map(|k| l.render(h, k)).collect();
    let projections: BTreeMap<&str, Vec<&str>> = (0..base.num_objects())
        .map(|c| {
            let proj = l.projection(c).into_iter().map(|x| h.set(c)[x].as_str()).collect();
            (base.object_name(c), proj)
        })
        .collect();
    json!({ "elements": elements, "projections": projections })
}

/// `{obj: [[arrow ids]...]}` listing full sieves.
pub fn covers_to_value(cat: &FinCat, covers: &[BTreeSet<Sieve>]) -> Value {
    let m: BTreeMap<&str, Vec<Vec<String>>> = covers
        .iter()
        .enumerate()
        .map(|(c, cov)| (cat.object_name(c), cov.iter().map(|s| s.arrow_names(cat)).collect()))
        .collect();
    json!({ "covers": m })
}

pub fn topology_to_value(t: &Topology) -> Value {
    covers_to_value(t.base(), t.all_covers())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn arrow2_json() -> Value {
        json!({
            "objects": ["a", "b"],
            "arrows": [{"id": "f", "dom": "a", "cod": "b"}],
            "identity": {"a": "id_a", "b": "id_b"},
            "compose": []
        })
    }

    #[test]
    fn category_units_inferred() {
        let c = Loader::default().category(&arrow2_json()).unwrap();
        assert_eq!(c.num_arrows(), 3);
        assert_eq!(c.hom(0, 1).len(), 1);
    }

    #[test]
    fn category_round_trip() {
        for (_, c) in fixtures::all() {
            let back = Loader::default().category(&category_to_value(&c)).unwrap();
            assert_eq!(back.to_description(), c.to_description());
        }
    }

    #[test]
    fn presheaf_maps_run_backwards() {
        let v = json!({
            "base": arrow2_json(),
            "variance": "presheaf",
            "sets": {"a": [0], "b": ["y", "z"]},
            "maps": {"f": {"y": 0, "z": 0}}
        });
        let loaded = Loader::default().set_functor(&v).unwrap();
        assert_eq!(loaded.variance, Variance::Presheaf);
        let f = loaded.functor;
        assert_eq!(f.set(0), ["0"]);
        let fa = f.base().arrow_index("f").unwrap();
        assert_eq!(f.map(fa), [0, 0]);
        let again = Loader::default()
            .set_functor(&set_functor_to_value(&f, Variance::Presheaf))
            .unwrap();
        assert_eq!(again.functor, f);
    }

    #[test]
    fn partial_map_is_rejected() {
        let v = json!({
            "base": arrow2_json(),
            "sets": {"a": ["x", "w"], "b": ["y"]},
            "maps": {"f": {"x": "y"}}
        });
        assert!(matches!(Loader::default().set_functor(&v), Err(CatError::Input(_))));
    }

    #[test]
    fn topology_sieves_closed_on_load() {
        let cat = fixtures::poset_ab();
        let v = json!({"covers": {"a": [["id_a"]], "b": [["id_b"], ["f"]]}});
        let t = Loader::default().topology(&cat, &v).unwrap();
        assert_eq!(t.num_sieves(), 3);
        let out = topology_to_value(&t);
        assert_eq!(out["covers"]["b"], json!([["f"], ["f", "id_b"]]));
        let bad = json!({"covers": {"a": [["id_a"]], "b": [["f"]]}});
        assert!(matches!(
            Loader::default().topology(&cat, &bad),
            Err(CatError::NotATopology { .. })
        ));
    }

    #[test]
    fn functor_and_profunctor_round_trip() {
        let a2 = fixtures::arrow2();
        let t = fixtures::term();
        let j = FinFunctor::constant(&t, &a2, 0);
        let back = Loader::default().functor(&functor_to_value(&j)).unwrap();
        assert_eq!(back.obj_map(), j.obj_map());
        let p = ProfunctorP::from_functor(&j).unwrap();
        let q = Loader::default().profunctor(&profunctor_to_value(&p)).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn quotient_shape() {
        let h = SetFunctor::constant(&fixtures::arrow2(), &["x"]);
        let q = crate::colimit(&h);
        let v = quotient_to_value(&q);
        assert_eq!(v["classes"], json!([[["a", "x"], ["b", "x"]]]));
        assert_eq!(v["injections"]["b"]["x"], json!(0));
    }
}
