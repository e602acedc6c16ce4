//! Command dispatch for the `fincat` binary.
//!
//! `run` is pure apart from reading the files named on the command line and
//! stdin, and returns the exit code with everything that would be printed.

use std::io::Read;

use clap::Parser;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use fincat::adjoint::{
    adjunction_bijection, counit, r, tilde, unit, unit_monic_check, ProfunctorP,
};
use fincat::colimits::tensor_commute_check;
use fincat::generate::random_presheaf;
use fincat::flat::{flatness, is_flat_via_elements, FlatViolation};
use fincat::json::{
    category_to_value, functor_to_value, limit_to_value, nat_to_value, quotient_to_value,
    set_functor_to_value, topology_to_value, Loader, LoadedSetFunctor, Variance,
};
use fincat::kan::{check_finality_theorem, finality, flat_extend, flat_extend_quotient, lan, ran};
use fincat::karoubi::{equivalent_categories, idempotents, is_cauchy_complete, karoubi_envelope};
use fincat::setfun::{
    discrete_opfibration, elements_covariant, elements_presheaf, nat_transformations, yoneda, Elements,
    DEFAULT_BUDGET,
};
use fincat::sites::{
    dense_restriction_equivalence, generate_topology, irreducible_subcategory, irreducibles, pullback_sieve,
    rigidity, sheaf_violation, sieve_generate, topology_violation, Sieve,
};
use fincat::suites::selftest;
use fincat::{colimit, colimit_filtered, comma_category, limit, tensor, CatError, FinCat, FinFunctor, SetFunctor};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "fincat",
    about = "Explicit constructions on finite categories",
    after_help = "Nouns: cat fun setfun colim limit tensor flat kan final adjoint site karoubi equiv.\n\
                  File arguments may be `@-` to read JSON from stdin."
)]
struct Args {
    /// Run the randomized self-test suites.
    #[arg(long)]
    selftest: bool,
    /// Emit JSON instead of prose.
    #[arg(long)]
    json: bool,
    /// Cap on the raw search space of brute-force enumerations.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    noun: Option<String>,
    verb: Option<String>,
    args: Vec<String>,
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    positive: bool,
    json: Value,
    text: String,
}

impl Report {
    fn ok(json: Value, text: impl Into<String>) -> Report {
        Report {
            positive: true,
            json,
            text: text.into(),
        }
    }

    fn verdict(positive: bool, json: Value, text: impl Into<String>) -> Report {
        Report {
            positive,
            json,
            text: text.into(),
        }
    }
}

type Res<T> = std::result::Result<T, CatError>;

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    stdin_text: Option<String>,
    budget: u64,
    seed: u64,
}

impl Ctx<'_> {
    fn value(&mut self, arg: &str) -> Res<(Value, Loader)> {
        if arg == "@-" {
            if self.stdin_text.is_none() {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| CatError::Input(format!("cannot read stdin: {e}")))?;
                self.stdin_text = Some(s);
            }
            let v = fincat::json::parse(self.stdin_text.as_deref().unwrap_or(""))?;
            return Ok((v, Loader::default()));
        }
        Loader::default().read(arg)
    }

    fn category(&mut self, arg: &str) -> Res<FinCat> {
        let (v, l) = self.value(arg)?;
        l.category(&v)
    }

    fn functor(&mut self, arg: &str) -> Res<FinFunctor> {
        let (v, l) = self.value(arg)?;
        l.functor(&v)
    }

    fn set_functor(&mut self, arg: &str) -> Res<LoadedSetFunctor> {
        let (v, l) = self.value(arg)?;
        l.set_functor(&v)
    }

    fn presheaf(&mut self, arg: &str) -> Res<SetFunctor> {
        let s = self.set_functor(arg)?;
        if s.variance != Variance::Presheaf {
            return Err(CatError::Input(format!("{arg}: expected a presheaf")));
        }
        Ok(s.functor)
    }

    fn covariant(&mut self, arg: &str) -> Res<SetFunctor> {
        let s = self.set_functor(arg)?;
        if s.variance != Variance::Covariant {
            return Err(CatError::Input(format!("{arg}: expected a covariant functor")));
        }
        Ok(s.functor)
    }

    fn profunctor(&mut self, arg: &str) -> Res<ProfunctorP> {
        let (v, l) = self.value(arg)?;
        l.profunctor(&v)
    }
}

fn arg<'a>(args: &'a [String], k: usize, what: &str) -> Res<&'a str> {
    args.get(k)
        .map(String::as_str)
        .ok_or_else(|| CatError::Input(format!("missing argument: {what}")))
}

fn exactly(args: &[String], n: usize) -> Res<()> {
    if args.len() > n {
        return Err(CatError::Input(format!("unexpected argument `{}`", args[n])));
    }
    Ok(())
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Runs one command line (including the program name).
pub fn run<I, S>(argv: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let json = args.json;
    let mut ctx = Ctx {
        stdin,
        stdin_text: None,
        budget: args.budget,
        seed: args.seed,
    };
    let result = if args.selftest {
        run_selftest(&mut ctx)
    } else {
        match (&args.noun, &args.verb) {
            (Some(noun), Some(verb)) => dispatch(&mut ctx, noun, verb, &args.args),
            _ => Err(CatError::Input("expected `<noun> <verb> [files...]` or `--selftest`".into())),
        }
    };
    match result {
        Ok(report) => {
            let stdout = if json {
                render_json(&report.json)
            } else {
                let mut t = report.text;
                if !t.ends_with('\n') {
                    t.push('\n');
                }
                t
            };
            Output {
                code: if report.positive { EXIT_OK } else { EXIT_NEGATIVE },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let code = match e {
                CatError::SearchBudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_INPUT,
            };
            if json {
                Output {
                    code,
                    stdout: render_json(&json!({"error": e.name(), "detail": e.to_string()})),
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: format!("error: {}: {}\n", e.name(), e),
                }
            }
        }
    }
}

fn run_selftest(ctx: &mut Ctx) -> Res<Report> {
    let reports = selftest(ctx.seed, ctx.budget)?;
    let passed = reports.iter().all(|r| r.passed());
    let text = reports
        .iter()
        .map(|r| format!("{} {r}", if r.passed() { "ok  " } else { "FAIL" }))
        .collect::<Vec<_>>()
        .join("\n");
    let json = json!({
        "seed": ctx.seed,
        "passed": passed,
        "suites": reports.iter().map(|r| json!({
            "name": r.name,
            "cases": r.cases,
            "skipped": r.skipped,
            "failures": r.failures,
        })).collect::<Vec<_>>(),
    });
    Ok(Report::verdict(passed, json, text))
}

fn dispatch(ctx: &mut Ctx, noun: &str, verb: &str, args: &[String]) -> Res<Report> {
    match noun {
        "cat" => cat_cmd(ctx, verb, args),
        "fun" => fun_cmd(ctx, verb, args),
        "setfun" => setfun_cmd(ctx, verb, args),
        "colim" => colim_cmd(ctx, verb, args),
        "limit" => limit_cmd(ctx, verb, args),
        "tensor" => tensor_cmd(ctx, verb, args),
        "flat" => flat_cmd(ctx, verb, args),
        "kan" => kan_cmd(ctx, verb, args),
        "final" => final_cmd(ctx, verb, args),
        "adjoint" => adjoint_cmd(ctx, verb, args),
        "site" => site_cmd(ctx, verb, args),
        "karoubi" => karoubi_cmd(ctx, verb, args),
        "equiv" => equiv_cmd(ctx, verb, args),
        other => Err(CatError::Input(format!("unknown noun `{other}`"))),
    }
}

fn unknown_verb(noun: &str, verb: &str) -> CatError {
    CatError::Input(format!("unknown command `{noun} {verb}`"))
}

fn describe_category(c: &FinCat) -> String {
    let arrows: Vec<String> = c
        .arrows()
        .iter()
        .enumerate()
        .filter(|(i, _)| !c.is_identity(*i))
        .map(|(_, a)| format!("{}: {} -> {}", a.id, c.object_name(a.dom), c.object_name(a.cod)))
        .collect();
    format!(
        "{} objects, {} arrows\nobjects: {}\nnon-identity arrows: {}",
        c.num_objects(),
        c.num_arrows(),
        c.objects().join(", "),
        if arrows.is_empty() { "none".to_string() } else { arrows.join(", ") }
    )
}

fn describe_set_functor(f: &SetFunctor) -> String {
    let base = f.base();
    let mut lines: Vec<String> = (0..base.num_objects())
        .map(|c| format!("{} |-> {{{}}}", base.object_name(c), f.set(c).join(", ")))
        .collect();
    for (i, a) in base.arrows().iter().enumerate() {
        if base.is_identity(i) {
            continue;
        }
        let pairs: Vec<String> = f
            .map(i)
            .iter()
            .enumerate()
            .map(|(x, &y)| format!("{} -> {}", f.set(a.dom)[x], f.set(a.cod)[y]))
            .collect();
        lines.push(format!("{}: {}", a.id, pairs.join(", ")));
    }
    lines.join("\n")
}

fn cat_cmd(ctx: &mut Ctx, verb: &str, args: &[String]) -> Res<Report> {
    match verb {
        "validate" => {
            exactly(args, 1)?;
            let c = ctx.category(arg(args, 0, "category")?)?;
            let text = format!("valid category\n{}", describe_category(&c));
            Ok(Report::ok(category_to_value(&c), text))
        }
        "opposite" => {
            exactly(args, 1)?;
            let c = ctx.category(arg(args, 0, "category")?)?.opposite();
            Ok(Report::ok(category_to_value(&c), describe_category(&c)))
        }
        "comma" => {
            exactly(args, 2)?;
            let f = ctx.functor(arg(args, 0, "left functor")?)?;
            let g = ctx.functor(arg(args, 1, "right functor")?)?;
            let comma = comma_category(&f, &g)?;
            let triples: Vec<Value> = comma
                .triples
                .iter()
                .map(|&(a, b, h)| {
                    json!([
                        f.source().object_name(a),
                        g.source().object_name(b),
                        f.target().arrow_name(h)
                    ])
                })
                .collect();
            let text = format!(
                "comma category\n{}\nobjects as (a, b, h): {}",
                describe_category(&comma.category),
                triples.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
            );
            Ok(Report::ok(
                json!({
                    "category": category_to_value(&comma.category),
                    "triples": triples,
                    "left": functor_to_value(&comma.left)["objects"],
                    "right": functor_to_value(&comma.right)["objects"],
                }),
                text,
            ))
        }
        "connected" => {
            exactly(args, 1)?;
            let c = ctx.category(arg(args, 0, "category")?)?;
            let n = c.connected_components();
            let yes = c.is_connected();
            Ok(Report::verdict(
                yes,
                json!({"connected": yes, "components": n}),
                format!("{} ({} components)", if yes { "connected" } else { "not connected" }, n),
            ))
        }
        "filtered" => {
            exactly(args, 1)?;
            let c = ctx.category(arg(args, 0, "category")?)?;
            let yes = c.is_filtered();
            Ok(Report::verdict(
                yes,
                json!({"filtered": yes}),
                if yes { "filtered" } else { "not filtered" },
            ))
        }
        _ => Err(unknown_verb("cat", verb)),
    }
}

fn fun_cmd(ctx: &mut Ctx, verb: &str, args: &[String]) -> Res<Report> {
    match verb {
        "validate" => {
            exactly(args, 1)?;
            let f = ctx.functor(arg(args, 0, "functor")?)?;
            let text = format!(
                "valid functor\nfull: {}\nfaithful: {}\ninjective on objects: {}",
                f.is_full(),
                f.is_faithful(),
                f.is_injective_on_objects()
            );
            let mut v = functor_to_value(&f);
            v["full"] = json!(f.is_full());
            v["faithful"] = json!(f.is_faithful());
            v["injective_on_objects"] = json!(f.is_injective_on_objects());
            Ok(Report::ok(v, text))
        }
        _ => Err(unknown_verb("fun", verb)),
    }
}

fn elements_report(els: &Elements, base: &FinCat, f: &SetFunctor) -> Report {
    let elements: Vec<Value> = els
        .elements
        .iter()
        .map(|&(c, x)| json!([base.object_name(c), f.set(c)[x]]))
        .collect();
    let json = json!({
        "category": category_to_value(&els.category),
        "elements": elements,
        "projection": functor_to_value(&els.projection)["arrows"],
    });
    Report::ok(json, format!("category of elements\n{}", describe_category(&els.category)))
}

fn setfun_cmd(ctx: &mut Ctx, verb: &str, args: &[String]) -> Res<Report> {
    match verb {
        "validate" => {
            exactly(args, 1)?;
            let s = ctx.set_functor(arg(args, 0, "set-functor")?)?;
            let text = format!("valid {} set-functor\n{}", s.variance.as_str(), describe_set_functor(&s.functor));
            Ok(Report::ok(set_functor_to_value(&s.functor, s.variance), text))
        }
        "elements" => {
            exactly(args, 1)?;
            let f = ctx.presheaf(arg(args, 0, "presheaf")?)?;
            let els = elements_presheaf(&f)?;
            Ok(elements_report(&els, &f.base().opposite(), &f))
        }
        "elements-covariant" => {
            exactly(args, 1)?;
            let f = ctx.covariant(arg(args, 0, "covariant functor")?)?;
            let els = elements_covariant(&f)?;
            Ok(elements_report(&els, f.base(), &f))
        }
        "opfibration" => {
            exactly(args, 1)?;
            let f = ctx.covariant(arg(args, 0, "covariant functor")?)?;
            let op = discrete_opfibration(&f)?;
            let json = json!({
                "total": category_to_value(&op.total),
                "projection": functor_to_value(&op.projection)["arrows"],
                "to_elements": functor_to_value(&op.to_elements)["objects"],
            });
            Ok(Report::ok(
                json,
                format!(
                    "discrete opfibration, isomorphic over the base to the category of elements\n{}",
                    describe_category(&op.total)
                ),
            ))
        }
        "yoneda" => {
            exactly(args, 2)?;
            let c = ctx.category(arg(args, 0, "category")?)?;
            let obj = c.object_index(arg(args, 1, "object")?)?;
            let y = yoneda(&c, obj)?;
            Ok(Report::ok(
                set_functor_to_value(&y, Variance::Presheaf),
                describe_set_functor(&y),
            ))
        }
        "nat" => {
            exactly(args, 2)?;
            let s = ctx.set_functor(arg(args, 0, "source")?)?;
            let t = ctx.set_functor(arg(args, 1, "target")?)?;
            if s.variance != t.variance {
                return Err(CatError::Input("source and target have different variance".into()));
            }
            let all = nat_transformations(&s.functor, &t.functor, ctx.budget)?;
            let text = std::iter::once(format!("{} natural transformations", all.len()))
                .chain(all.iter().map(|a| a.render()))
                .collect::<Vec<_>>()
                .join("\n");
            let json = json!({
                "count": all.len(),
                "transformations": all.iter().map(|a| nat_to_value(a)["components"].clone()).collect::<Vec<_>>(),
            });
            Ok(Report::ok(json, text))
        }
        _ => Err(unknown_verb("setfun", verb)),
    }
}

fn quotient_text(q: &fincat::QuotientSet) -> String {
    let classes: Vec<String> = (0..q.num_classes())
        .map(|k| {
            let members: Vec<String> = q.classes()[k].iter().map(|&p| q.label(p)).collect();
            format!("[{}] = {{{}}}", q.class_label(k), members.join(", "))
        })
        .collect();
    format!("{} classes\n{}", q.num_classes(), classes.join("\n"))
}

fn colim_cmd(ctx: &mut Ctx, verb: &str, args: &[String]) -> Res<Report> {
    exactly(args, 1)?;
    let h = ctx.set_functor(arg(args, 0, "set-functor")?)?.functor;
    let q = match verb {
        "compute" => colimit(&h),
        "filtered" => colimit_filtered(&h)?,
        _ => return Err(unknown_verb("colim", verb)),
    };
    Ok(Report::ok(quotient_to_value(&q), quotient_text(&q)))
}

fn limit_cmd(ctx: &mut Ctx, verb: &str, args: &[String]) -> Res<Report> {
    if verb != "compute" {
        return Err(unknown_verb("limit", verb));
    }
    exactly(args, 1)?;
    let h = ctx.set_functor(arg(args, 0, "set-functor")?)?.functor;
    let l = limit(&h);
    let text = std::iter::once(format!("{} compatible families", l.len()))
        .chain((0..l.len()).map(|k| l.render(&h, k)))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report::ok(limit_to_value(&l, &h), text))
}

fn tensor_cmd(ctx: &mut Ctx, verb: &str, args: &[String]) -> Res<Report> {
    exactly(args, 2)?;
    let f = ctx.presheaf(arg(args, 0, "presheaf")?)?;
    let p = ctx.covariant(arg(args, 1, "covariant functor")?)?;
    match verb {
        "compute" => {
            let q = tensor(&f, &p)?;
            Ok(Report::ok(quotient_to_value(&q), quotient_text(&q)))
        }
        "check" => match tensor_commute_check(&f, &p) {
            Ok(t) => {
                let json = json!({
                    "commutes": true,
                    "tensor": quotient_to_value(&t.tensor),
                    "first_to_tensor": t.first_to_tensor,
                    "second_to_tensor": t.second_to_tensor,
                });
                Ok(Report::ok(
                    json,
                    format!(
                        "both colimits over categories of elements agree with the tensor product ({} classes)",
                        t.tensor.num_classes()
                    ),
                ))
            }
            Err(CatError::CommutationFailure { detail }) => Ok(Report::verdict(
                false,
                json!({"commutes": false, "detail": detail}),
                format!("tensor routes disagree: {detail}"),
            )),
            Err(e) => Err(e),
        },
        _ => Err(unknown_verb("tensor", verb)),
    }
}

fn violation_json(v: &FlatViolation) -> Value {
    match v {
        FlatViolation::NoElements => json!({}),
        FlatViolation::NoCone { c, x, d, y } => json!({"c": c, "x": x, "d": d, "y": y}),
        FlatViolation::NoEqualizer { u, v, x } => json!({"u": u, "v": v, "x": x}),
    }
}

fn flat_cmd(ctx: &mut Ctx, verb: &str, args: &[String]) -> Res<Report> {
    match verb {
        "check" => {
            exactly(args, 1)?;
            let f = ctx.presheaf(arg(args, 0, "presheaf")?)?;
            Ok(match flatness(&f) {
                None => Report::ok(json!({"flat": true}), "flat"),
                Some(v) => Report::verdict(
                    false,
                    json!({"flat": false, "condition": v.condition(), "witness": violation_json(&v)}),
                    format!("not flat: condition {v}"),
                ),
            })
        }
        "elements" => {
            exactly(args, 1)?;
            let f = ctx.presheaf(arg(args, 0, "presheaf")?)?;
            let yes = is_flat_via_elements(&f)?;
            Ok(Report::verdict(
                yes,
                json!({"flat": yes}),
                if yes { "category of elements is filtered" } else { "category of elements is not filtered" },
            ))
        }
        "extend" => {
            exactly(args, 2)?;
            let j = ctx.functor(arg(args, 0, "embedding")?)?;
            let f = ctx.presheaf(arg(args, 1, "presheaf")?)?;
            let ext = flat_extend(&j, &f)?;
            let d_cat = j.source();
            let c_cat = j.target();
            let chi: serde_json::Map<String, Value> = (0..d_cat.num_objects())
                .map(|d| {
                    let m: serde_json::Map<String, Value> = (0..f.size(d))
                        .map(|x| (f.set(d)[x].clone(), json!(ext.functor.set(j.on_object(d))[ext.chi[d][x]])))
                        .collect();
                    (d_cat.object_name(d).to_string(), Value::Object(m))
                })
                .collect();
            let injective = ext.chi.iter().all(|comp| {
                let mut seen = std::collections::HashSet::new();
                comp.iter().all(|k| seen.insert(*k))
            });
            let text = format!(
                "extension to {}\n{}\ncomparison maps injective: {}",
                c_cat.objects().join(", "),
                describe_set_functor(&ext.functor),
                injective
            );
            Ok(Report::ok(
                json!({
                    "extension": set_functor_to_value(&ext.functor, Variance::Presheaf),
                    "chi": chi,
                    "chi_injective": injective,
                }),
                text,
            ))
        }
        "quotient" => {
            exactly(args, 3)?;
            let j = ctx.functor(arg(args, 0, "embedding")?)?;
            let f = ctx.presheaf(arg(args, 1, "presheaf")?)?;
            let c = j.target().object_index(arg(args, 2, "object")?)?;
            let q = flat_extend_quotient(&j, &f, c)?;
            Ok(Report::ok(quotient_to_value(&q), quotient_text(&q)))
        }
        _ => Err(unknown_verb("flat", verb)),
    }
}

fn kan_cmd(ctx: &mut Ctx, verb: &str, args: &[String]) -> Res<Report> {
    exactly(args, 2)?;
    let f = ctx.functor(arg(args, 0, "functor")?)?;
    let s = ctx.set_functor(arg(args, 1, "set-functor")?)?;
    // A presheaf extends along the opposite functor.
    let along = match s.variance {
        Variance::Covariant => f,
        Variance::Presheaf => f.opposite(),
    };
    let result = match verb {
        "lan" => lan(&along, &s.functor)?.functor,
        "ran" => ran(&along, &s.functor)?.functor,
        _ => return Err(unknown_verb("kan", verb)),
    };
    Ok(Report::ok(
        set_functor_to_value(&result, s.variance),
        describe_set_functor(&result),
    ))
}

fn final_cmd(ctx: &mut Ctx, verb: &str, args: &[String]) -> Res<Report> {
    match verb {
        "check" => {
            exactly(args, 1)?;
            let i = ctx.functor(arg(args, 0, "functor")?)?;
            Ok(match finality(&i)? {
                None => Report::ok(json!({"final": true}), "final: every comma category is nonempty and connected"),
                Some(v) => {
                    let why = if v.empty { "empty" } else { "disconnected" };
                    Report::verdict(
                        false,
                        json!({"final": false, "object": v.object, "reason": why}),
                        format!("not final: comma category under `{}` is {why}", v.object),
                    )
                }
            })
        }
        "theorem" => {
            exactly(args, 2)?;
            let i = ctx.functor(arg(args, 0, "functor")?)?;
            let d = ctx.covariant(arg(args, 1, "diagram")?)?;
            let yes = check_finality_theorem(&i, &d)?;
            Ok(Report::verdict(
                yes,
                json!({"preserved": yes}),
                if yes {
                    "restriction preserves the colimit"
                } else {
                    "restriction changes the colimit"
                },
            ))
        }
        _ => Err(unknown_verb("final", verb)),
    }
}

fn adjoint_cmd(ctx: &mut Ctx, verb: &str, args: &[String]) -> Res<Report> {
    let budget = ctx.budget;
    match verb {
        "tilde" => {
            exactly(args, 2)?;
            let p = ctx.profunctor(arg(args, 0, "profunctor")?)?;
            let f = ctx.covariant(arg(args, 1, "functor on the target")?)?;
            let t = tilde(&p, &f)?;
            Ok(Report::ok(
                set_functor_to_value(&t.functor, Variance::Covariant),
                describe_set_functor(&t.functor),
            ))
        }
        "r" => {
            exactly(args, 2)?;
            let p = ctx.profunctor(arg(args, 0, "profunctor")?)?;
            let g = ctx.covariant(arg(args, 1, "functor on the source")?)?;
            let rg = r(&p, &g, budget)?;
            Ok(Report::ok(
                set_functor_to_value(&rg.functor, Variance::Covariant),
                describe_set_functor(&rg.functor),
            ))
        }
        "bijection" => {
            exactly(args, 3)?;
            let p = ctx.profunctor(arg(args, 0, "profunctor")?)?;
            let f = ctx.covariant(arg(args, 1, "functor on the target")?)?;
            let g = ctx.covariant(arg(args, 2, "functor on the source")?)?;
            let b = adjunction_bijection(&p, &f, &g, budget)?;
            let inverse = b.mutually_inverse();
            Ok(Report::verdict(
                inverse,
                json!({
                    "left": b.left.len(),
                    "right": b.right.len(),
                    "forward": b.forward,
                    "backward": b.backward,
                    "mutually_inverse": inverse,
                }),
                format!(
                    "|Nat(F~, G)| = {}, |Nat(F, G_r)| = {}, maps mutually inverse: {inverse}",
                    b.left.len(),
                    b.right.len()
                ),
            ))
        }
        "unit" => {
            exactly(args, 2)?;
            let p = ctx.profunctor(arg(args, 0, "profunctor")?)?;
            let f = ctx.covariant(arg(args, 1, "functor on the target")?)?;
            let eta = unit(&p, &f, budget)?;
            Ok(Report::ok(nat_to_value(&eta), eta.render()))
        }
        "counit" => {
            exactly(args, 2)?;
            let p = ctx.profunctor(arg(args, 0, "profunctor")?)?;
            let g = ctx.covariant(arg(args, 1, "functor on the source")?)?;
            let eps = counit(&p, &g, budget)?;
            Ok(Report::ok(nat_to_value(&eps), eps.render()))
        }
        "monic" => {
            exactly(args, 3)?;
            let p = ctx.profunctor(arg(args, 0, "profunctor")?)?;
            let f = ctx.covariant(arg(args, 1, "functor on the target")?)?;
            let b = p.target().object_index(arg(args, 2, "object")?)?;
            let m = unit_monic_check(&p, &f, b, budget)?;
            Ok(Report::verdict(
                m.unit_injective,
                json!({"unit_injective": m.unit_injective, "tilde_injective": m.tilde_injective}),
                format!(
                    "unit injective at {}: {}\nextension injective on transformations: {}",
                    p.target().object_name(b),
                    m.unit_injective,
                    m.tilde_injective
                ),
            ))
        }
        _ => Err(unknown_verb("adjoint", verb)),
    }
}

fn sieve_report(cat: &FinCat, s: &Sieve) -> Report {
    Report::ok(
        json!({"codomain": cat.object_name(s.codomain), "arrows": s.arrow_names(cat)}),
        s.display(cat).to_string(),
    )
}

fn arrow_list(cat: &FinCat, names: &[String]) -> Res<Vec<usize>> {
    names.iter().map(|n| cat.arrow_index(n)).collect()
}

fn site_cmd(ctx: &mut Ctx, verb: &str, args: &[String]) -> Res<Report> {
    let cat = ctx.category(arg(args, 0, "category")?)?;
    match verb {
        "sieve" => {
            let c = cat.object_index(arg(args, 1, "object")?)?;
            let gens = arrow_list(&cat, &args[2..])?;
            Ok(sieve_report(&cat, &sieve_generate(&cat, c, &gens)?))
        }
        "pullback" => {
            let f = cat.arrow_index(arg(args, 1, "arrow")?)?;
            let gens = arrow_list(&cat, &args[2..])?;
            let s = sieve_generate(&cat, cat.cod(f), &gens)?;
            Ok(sieve_report(&cat, &pullback_sieve(&cat, &s, f)?))
        }
        "check" => {
            exactly(args, 2)?;
            let (v, l) = ctx.value(arg(args, 1, "topology")?)?;
            let covers = l.covers(&cat, &v)?;
            Ok(match topology_violation(&cat, &covers) {
                None => Report::ok(json!({"topology": true}), "a Grothendieck topology"),
                Some(why) => Report::verdict(
                    false,
                    json!({"topology": false, "violation": why.to_string()}),
                    format!("not a topology: {why}"),
                ),
            })
        }
        "generate" => {
            exactly(args, 2)?;
            let (v, l) = ctx.value(arg(args, 1, "coverage")?)?;
            let coverage = l.coverage(&cat, &v)?;
            let t = generate_topology(&cat, &coverage)?;
            let text = (0..cat.num_objects())
                .map(|c| {
                    let sieves: Vec<String> = t.covers(c).iter().map(|s| format!("{{{}}}", s.arrow_names(&cat).join(","))).collect();
                    format!("covers({}) = {}", cat.object_name(c), sieves.join(" "))
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Report::ok(topology_to_value(&t), text))
        }
        "irreducibles" => {
            exactly(args, 2)?;
            let t = load_topology(ctx, &cat, arg(args, 1, "topology")?)?;
            let names: Vec<&str> = irreducibles(&t).into_iter().map(|c| cat.object_name(c)).collect();
            Ok(Report::ok(
                json!({"irreducibles": names}),
                format!("irreducibles = [{}]", names.join(", ")),
            ))
        }
        "rigid" => {
            exactly(args, 2)?;
            let t = load_topology(ctx, &cat, arg(args, 1, "topology")?)?;
            let rig = rigidity(&t);
            let names: Vec<&str> = rig.irreducibles.iter().map(|&c| cat.object_name(c)).collect();
            let witnesses: Vec<Value> = rig
                .witnesses
                .iter()
                .map(|(s, covering)| {
                    json!({
                        "object": cat.object_name(s.codomain),
                        "sieve": s.arrow_names(&cat),
                        "covering": covering,
                    })
                })
                .collect();
            let mut text = vec![
                if rig.is_rigid() { "rigid".to_string() } else { "not rigid".to_string() },
                format!("irreducibles = [{}]", names.join(", ")),
            ];
            for (s, covering) in &rig.witnesses {
                text.push(format!("{}: {}", s.display(&cat), if *covering { "covering" } else { "not covering" }));
            }
            Ok(Report::verdict(
                rig.is_rigid(),
                json!({"rigid": rig.is_rigid(), "irreducibles": names, "witnesses": witnesses}),
                text.join("\n"),
            ))
        }
        "sheaf" => {
            exactly(args, 3)?;
            let t = load_topology(ctx, &cat, arg(args, 1, "topology")?)?;
            let f = ctx.presheaf(arg(args, 2, "presheaf")?)?;
            Ok(match sheaf_violation(&f, &t)? {
                None => Report::ok(json!({"sheaf": true}), "a sheaf"),
                Some(v) => Report::verdict(
                    false,
                    json!({
                        "sheaf": false,
                        "object": v.object,
                        "sieve": v.sieve,
                        "elements": v.elements,
                        "families": v.families,
                        "injective": v.injective,
                    }),
                    format!("not a sheaf: {v}"),
                ),
            })
        }
        "dense" => {
            exactly(args, 3)?;
            let t = load_topology(ctx, &cat, arg(args, 1, "topology")?)?;
            let f = ctx.presheaf(arg(args, 2, "sheaf")?)?;
            let (sub, _) = irreducible_subcategory(&t)?;
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let others: Vec<SetFunctor> = (0..8).map(|_| random_presheaf(&mut rng, &sub, 2)).collect();
            let rep = dense_restriction_equivalence(&t, &f, &others)?;
            let names: Vec<&str> = rep.irreducibles.iter().map(|&c| cat.object_name(c)).collect();
            Ok(Report::verdict(
                rep.passed(),
                json!({
                    "irreducibles": names,
                    "comparison_bijective": rep.comparison_bijective,
                    "extensions_are_sheaves": rep.extensions_are_sheaves,
                }),
                format!(
                    "irreducibles = [{}]\ncomparison with the extension of the restriction bijective: {}\nextensions of {} random presheaves on the irreducibles are sheaves: {}",
                    names.join(", "),
                    rep.comparison_bijective,
                    rep.extensions_are_sheaves.len(),
                    rep.extensions_are_sheaves.iter().all(|&b| b)
                ),
            ))
        }
        _ => Err(unknown_verb("site", verb)),
    }
}

fn load_topology(ctx: &mut Ctx, cat: &FinCat, file: &str) -> Res<fincat::sites::Topology> {
    let (v, l) = ctx.value(file)?;
    l.topology(cat, &v)
}

fn karoubi_cmd(ctx: &mut Ctx, verb: &str, args: &[String]) -> Res<Report> {
    exactly(args, 1)?;
    let cat = ctx.category(arg(args, 0, "category")?)?;
    match verb {
        "idempotents" => {
            let list: Vec<Value> = idempotents(&cat)
                .into_iter()
                .map(|(c, e)| {
                    json!({
                        "object": cat.object_name(c),
                        "arrow": cat.arrow_name(e),
                        "identity": cat.is_identity(e),
                    })
                })
                .collect();
            let text = list
                .iter()
                .map(|v| {
                    format!(
                        "{} on {}{}",
                        v["arrow"].as_str().unwrap_or(""),
                        v["object"].as_str().unwrap_or(""),
                        if v["identity"] == json!(true) { " (identity)" } else { "" }
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Report::ok(json!({"idempotents": list}), text))
        }
        "envelope" => {
            let (env, emb) = karoubi_envelope(&cat)?;
            Ok(Report::ok(
                json!({
                    "envelope": category_to_value(&env),
                    "embedding": functor_to_value(&emb)["objects"],
                }),
                format!("Karoubi envelope\n{}", describe_category(&env)),
            ))
        }
        "complete" => {
            let yes = is_cauchy_complete(&cat);
            let witness = fincat::karoubi::unsplit_idempotent(&cat).map(|e| cat.arrow_name(e).to_string());
            let text = match &witness {
                None => "Cauchy complete: every idempotent splits".to_string(),
                Some(e) => format!("not Cauchy complete: `{e}` does not split"),
            };
            Ok(Report::verdict(yes, json!({"complete": yes, "unsplit": witness}), text))
        }
        _ => Err(unknown_verb("karoubi", verb)),
    }
}

fn equiv_cmd(ctx: &mut Ctx, verb: &str, args: &[String]) -> Res<Report> {
    if verb != "check" {
        return Err(unknown_verb("equiv", verb));
    }
    exactly(args, 2)?;
    let c = ctx.category(arg(args, 0, "first category")?)?;
    let d = ctx.category(arg(args, 1, "second category")?)?;
    Ok(match equivalent_categories(&c, &d, ctx.budget)? {
        None => Report::verdict(false, json!({"equivalent": false}), "not equivalent"),
        Some(eq) => {
            let unit: serde_json::Map<String, Value> = (0..c.num_objects())
                .map(|x| (c.object_name(x).to_string(), json!(c.arrow_name(eq.unit[x]))))
                .collect();
            let counit: serde_json::Map<String, Value> = (0..d.num_objects())
                .map(|y| (d.object_name(y).to_string(), json!(d.arrow_name(eq.counit[y]))))
                .collect();
            let f = eq.functor.to_description();
            let g = eq.inverse.to_description();
            let text = format!(
                "equivalent\nfunctor on objects: {}\ninverse on objects: {}",
                f.objects.iter().map(|(a, b)| format!("{a} -> {b}")).collect::<Vec<_>>().join(", "),
                g.objects.iter().map(|(a, b)| format!("{a} -> {b}")).collect::<Vec<_>>().join(", ")
            );
            Report::ok(
                json!({
                    "equivalent": true,
                    "functor": {"objects": f.objects, "arrows": f.arrows},
                    "inverse": {"objects": g.objects, "arrows": g.arrows},
                    "unit": unit,
                    "counit": counit,
                }),
                text,
            )
        }
    })
}
