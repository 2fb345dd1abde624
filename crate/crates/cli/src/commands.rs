use std::fmt::Write as _;

use serde_json::{json, Value};
use thiserror::Error;

use halfturn_ice::determinant::{self, SpecialModel, UVector};
use halfturn_ice::enumerate::{self, AsmClass, GenfuncMode};
use halfturn_ice::formulas::{
    self, EnumFamily, HtReading, InputSource, RefinedFamily, RefinedOptions, XArg,
};
use halfturn_ice::icemodel::{self, IceConfig, ModelSpec};
use halfturn_ice::verify::{self, SuiteParams, VerificationReport, SCHEMA_VERSION};
use halfturn_ice::{Coeff, CycloNum, IntPoly, LaurentPoly, Rational, VarAssignment};

use crate::{ClassArg, Common, FamilyArg, Format, ModelArg, Size};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] halfturn_ice::Error),
}

type Result<T> = std::result::Result<T, CliError>;

/// Rendered output and whether every check in it passed.
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, ok: true }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Usage(msg.into()))
}

fn json_doc(command: &str, mut body: Value) -> String {
    if let Value::Object(map) = &mut body {
        map.insert("schemaVersion".into(), json!(SCHEMA_VERSION));
        map.insert("command".into(), json!(command));
    }
    format!("{body}\n")
}

fn ice_config(common: &Common) -> IceConfig {
    match common.max_states {
        Some(max_states) => IceConfig { max_states },
        None => IceConfig::default(),
    }
}

fn class_of(c: ClassArg) -> AsmClass {
    match c {
        ClassArg::All => AsmClass::All,
        ClassArg::Ht => AsmClass::HalfTurn,
    }
}

fn class_name(c: ClassArg) -> &'static str {
    match c {
        ClassArg::All => "all",
        ClassArg::Ht => "ht",
    }
}

fn require_order(size: &Size) -> Result<usize> {
    match (size.order, size.m) {
        (Some(n), _) => Ok(n),
        (None, Some(_)) => usage("this command takes --order"),
        (None, None) => usage("--order is required"),
    }
}

/// Size parameter of the model from `--order` or `--m`.
fn model_size(model: ModelArg, size: &Size) -> Result<usize> {
    match (model, size.order, size.m) {
        (_, Some(_), Some(_)) => usage("give either --order or --m, not both"),
        (ModelArg::Dwbc, Some(n), None) => Ok(n),
        (ModelArg::Dwbc, None, Some(_)) => usage("the domain-wall model takes --order"),
        (ModelArg::HtEven, Some(n), None) if n % 2 == 0 && n > 0 => Ok(n / 2),
        (ModelArg::HtEven, Some(n), None) => usage(format!("ht-even needs a positive even order, got {n}")),
        (ModelArg::HtOdd, Some(n), None) if n % 2 == 1 => Ok(n / 2),
        (ModelArg::HtOdd, Some(n), None) => usage(format!("ht-odd needs an odd order, got {n}")),
        (_, None, Some(m)) => Ok(m),
        (_, None, None) => usage("--order or --m is required"),
    }
}

fn parse_assignments(assign: &[String]) -> Result<VarAssignment<CycloNum>> {
    let mut at = VarAssignment::new();
    for a in assign {
        let Some((var, value)) = a.split_once('=') else {
            return usage(format!("--assign expects VAR=VALUE, got {a:?}"));
        };
        let var = var.trim();
        if var.is_empty() {
            return usage(format!("--assign expects VAR=VALUE, got {a:?}"));
        }
        let v: CycloNum = value.parse()?;
        if at.insert(var.to_string(), v).is_some() {
            return usage(format!("variable {var:?} assigned twice"));
        }
    }
    Ok(at)
}

pub fn enumerate(common: &Common, size: &Size, class: ClassArg, census: bool, list: bool) -> Result<Output> {
    let n = require_order(size)?;
    let cls = class_of(class);
    if census {
        let table = enumerate::census(n, cls)?;
        let (plus, minus) = table.central_totals();
        let split = cls == AsmClass::HalfTurn && n % 2 == 1;
        let text = match common.format {
            Format::Json => {
                let mut body = table.to_json();
                if split {
                    body["split"] = json!({ "plus": plus.to_string(), "minus": minus.to_string() });
                }
                json_doc("enumerate", body)
            }
            Format::Csv => table.to_csv(),
            Format::Text => {
                let mut s = format!("order {n}, class {}\ntotal {}\n", class_name(class), table.total());
                if split {
                    let _ = writeln!(s, "central entry +1: {plus}\ncentral entry -1: {minus}");
                }
                let counts: Vec<String> = table.refined_counts().iter().map(|c| c.to_string()).collect();
                let _ = writeln!(s, "by first-column position: {}", counts.join(" "));
                s
            }
        };
        return Ok(Output::ok(text));
    }
    let all = enumerate::gen_asms(n, cls)?;
    let text = match (common.format, list) {
        (Format::Json, false) => json_doc("enumerate", json!({ "order": n, "class": cls, "count": all.len() })),
        (Format::Json, true) => all.iter().map(|a| format!("{}\n", a.to_json())).collect(),
        (Format::Csv, false) => format!("order,class,count\n{n},{},{}\n", class_name(class), all.len()),
        (Format::Csv, true) => {
            let mut s = String::from("index,entries\n");
            for (i, a) in all.iter().enumerate() {
                let flat: Vec<String> = a.entries().iter().map(|e| e.to_string()).collect();
                let _ = writeln!(s, "{},{}", i + 1, flat.join(" "));
            }
            s
        }
        (Format::Text, false) => format!("{}\n", all.len()),
        (Format::Text, true) => all.iter().map(|a| format!("{}\n\n", a.to_text())).collect(),
    };
    Ok(Output::ok(text))
}

pub fn genfunc(common: &Common, size: &Size, class: ClassArg, brute: bool) -> Result<Output> {
    let n = require_order(size)?;
    let cls = class_of(class);
    let closed = enumerate::inversion_genfunc(n, cls, GenfuncMode::Closed)?;
    let brute_poly = if brute { Some(enumerate::inversion_genfunc(n, cls, GenfuncMode::Brute)?) } else { None };
    let ok = brute_poly.as_ref().is_none_or(|b| *b == closed);
    let text = match common.format {
        Format::Json => {
            let mut body = json!({ "order": n, "class": cls, "closed": closed.to_json() });
            if let Some(b) = &brute_poly {
                body["brute"] = b.to_json();
                body["equal"] = json!(ok);
            }
            json_doc("genfunc", body)
        }
        Format::Csv => {
            let mut s = String::from("exponent,coefficient\n");
            for (mono, c) in closed.terms() {
                let _ = writeln!(s, "{},{c}", closed.exponent_of(mono, "z"));
            }
            s
        }
        Format::Text => {
            let mut s = format!("{closed}\n");
            if brute_poly.is_some() {
                let _ = writeln!(s, "brute force {}", if ok { "agrees" } else { "DISAGREES" });
            }
            s
        }
    };
    Ok(Output { text, ok })
}

pub fn partition(
    common: &Common,
    size: &Size,
    model: ModelArg,
    symbolic: bool,
    modified: bool,
    assign: &[String],
) -> Result<Output> {
    let size_param = model_size(model, size)?;
    let mut spec = match model {
        ModelArg::Dwbc => ModelSpec::dwbc(size_param),
        ModelArg::HtEven => ModelSpec::ht_even(size_param),
        ModelArg::HtOdd => ModelSpec::ht_odd(size_param),
    };
    if modified {
        spec = spec.modified();
    }
    let at = parse_assignments(assign)?;
    let cfg = ice_config(common);
    let (value_json, value_text, count) = if symbolic || at.is_empty() {
        let r = icemodel::partition_function(&spec, None, &cfg)?;
        let p = r.symbolic().expect("symbolic result").clone();
        if at.is_empty() {
            (p.to_json(), p.to_string(), r.state_count)
        } else {
            let lifted: LaurentPoly<CycloNum> = icemodel::lift(&p, |c| CycloNum::from_rational(Rational::from(c.clone())));
            let q = lifted.partial_eval(&at)?;
            (q.to_json(), q.to_string(), r.state_count)
        }
    } else {
        let r = icemodel::partition_function(&spec, Some(&at), &cfg)?;
        let v = r.evaluated().expect("evaluated result").clone();
        (v.to_json(), v.to_string(), r.state_count)
    };
    let text = match common.format {
        Format::Json => {
            let model_json = json!({
                "kind": spec.kind,
                "sizeParam": spec.size_param,
                "normalization": spec.normalization,
                "stateCount": count.to_string(),
                "xVars": spec.x_vars,
                "yVars": spec.y_vars,
            });
            let mut body = json!({ "model": model_json, "value": value_json });
            if !at.is_empty() {
                body["assignment"] = assignment_json(&at);
            }
            json_doc("partition", body)
        }
        Format::Csv => {
            let mut s = String::from("model,sizeParam,normalization,stateCount,value\n");
            let _ = writeln!(
                s,
                "{:?},{},{:?},{count},\"{value_text}\"",
                spec.kind, spec.size_param, spec.normalization
            );
            s
        }
        Format::Text => format!("{value_text}\n"),
    };
    Ok(Output::ok(text))
}

fn assignment_json(at: &VarAssignment<CycloNum>) -> Value {
    Value::Object(at.iter().map(|(k, v)| (k.clone(), json!(v.to_string()))).collect())
}

pub fn det(common: &Common, size: &Size, model: ModelArg, assign: &[String], points: usize) -> Result<Output> {
    let size_param = model_size(model, size)?;
    let special = match model {
        ModelArg::Dwbc => SpecialModel::Dwbc,
        ModelArg::HtEven => SpecialModel::Ht2,
        ModelArg::HtOdd => SpecialModel::HtOdd,
    };
    let dim = special.dimension(size_param);
    let us: Vec<UVector> = if assign.is_empty() {
        if points == 0 {
            return usage("--points must be positive");
        }
        verify::random_points(common.seed, dim, points)
    } else {
        let at = parse_assignments(assign)?;
        let coords = (1..=dim)
            .map(|k| {
                at.get(&format!("u{k}"))
                    .cloned()
                    .ok_or_else(|| CliError::Usage(format!("missing --assign u{k}=…")))
            })
            .collect::<Result<Vec<_>>>()?;
        if at.len() != dim {
            return usage(format!("expected exactly u1..u{dim}"));
        }
        vec![UVector::new(coords)?]
    };
    let cfg = ice_config(common);
    let mut rows = Vec::new();
    let mut shown = Vec::new();
    for u in &us {
        let (d, z) = determinant::compare_at(special, size_param, u, &cfg)?;
        rows.push(determinant::comparison_json(special, size_param, u, &cfg)?);
        shown.push((u.to_json(), d.to_string(), z.to_string(), d == z));
    }
    let ok = shown.iter().all(|s| s.3);
    let text = match common.format {
        Format::Json => json_doc(
            "det",
            json!({ "model": format!("{special:?}"), "sizeParam": size_param, "a": "zeta", "seed": common.seed, "results": rows }),
        ),
        Format::Csv => {
            let mut s = String::from("point,determinant,stateSum,equal\n");
            for (i, (_, d, z, eq)) in shown.iter().enumerate() {
                let _ = writeln!(s, "{},\"{d}\",\"{z}\",{eq}", i + 1);
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (u, d, z, eq) in &shown {
                let _ = writeln!(s, "u = {u}: det {d} | states {z} | {}", if *eq { "equal" } else { "DIFFERENT" });
            }
            s
        }
    };
    Ok(Output { text, ok })
}

fn family_of(f: FamilyArg) -> EnumFamily {
    match f {
        FamilyArg::Asm => EnumFamily::Asm,
        FamilyArg::HtEven => EnumFamily::HtEven,
        FamilyArg::HtOdd => EnumFamily::HtOdd,
        FamilyArg::HtOddPlus => EnumFamily::HtOddPlus,
        FamilyArg::HtOddMinus => EnumFamily::HtOddMinus,
        FamilyArg::Robbins => EnumFamily::Robbins,
    }
}

fn refined_coeffs(family: EnumFamily, order: usize) -> Result<Vec<String>> {
    let opts = RefinedOptions { reading: HtReading::Factorial, base_case: true };
    let ints = |p: &IntPoly| formulas::t_coefficients(p).iter().map(|c| c.to_string()).collect::<Vec<_>>();
    match family {
        EnumFamily::Asm => Ok(ints(&formulas::refined_closed(RefinedFamily::Asm, order, opts)?)),
        EnumFamily::HtEven => {
            if order % 2 == 1 || order == 0 {
                return usage("ht-even needs a positive even order");
            }
            let m = order / 2;
            let p = formulas::refined_closed(RefinedFamily::Asm, m, opts)?
                .mul(&formulas::refined_closed(RefinedFamily::Ht2, m, opts)?);
            Ok(ints(&p))
        }
        _ => {
            if order.is_multiple_of(2) {
                return usage("the odd families need an odd order");
            }
            let one = Rational::from_integer(1.into());
            let split = formulas::refined_ht_odd(order / 2, &XArg::Value(one), InputSource::Closed)?;
            let p = match family {
                EnumFamily::HtOddPlus => split.plus,
                EnumFamily::HtOddMinus => split.minus,
                _ => split.plus.add(&split.minus),
            };
            let hi = p.degree_range("t").map_or(0, |(_, h)| h);
            Ok((0..=hi)
                .map(|j| {
                    p.coeff(&[("t", j)]).constant_value().map_or_else(|| "0".to_string(), |c| c.to_string())
                })
                .collect())
        }
    }
}

pub fn formulas(common: &Common, size: &Size, family: FamilyArg, refined: bool) -> Result<Output> {
    let order = require_order(size)?;
    let fam = family_of(family);
    if refined {
        let coeffs = refined_coeffs(fam, order)?;
        let text = match common.format {
            Format::Json => json_doc(
                "formulas",
                json!({ "family": fam.name(), "order": order, "refined": coeffs }),
            ),
            Format::Csv => {
                let mut s = String::from("r,count\n");
                for (i, c) in coeffs.iter().enumerate() {
                    let _ = writeln!(s, "{},{c}", i + 1);
                }
                s
            }
            Format::Text => format!("{}\n", coeffs.join(" ")),
        };
        return Ok(Output::ok(text));
    }
    let count = formulas::count_closed(fam, order)?;
    let text = match common.format {
        Format::Json => json_doc(
            "formulas",
            json!({ "family": fam.name(), "order": order, "count": count.to_string() }),
        ),
        Format::Csv => format!("family,order,count\n{},{order},{count}\n", fam.name()),
        Format::Text => format!("{count}\n"),
    };
    Ok(Output::ok(text))
}

fn render_reports(common: &Common, reports: &[VerificationReport], timings: bool) -> String {
    match common.format {
        Format::Json => reports.iter().map(|r| format!("{}\n", r.to_json_line(timings))).collect(),
        Format::Csv => {
            let mut s = String::from("suiteId,status,checksRun\n");
            for r in reports {
                let _ = writeln!(s, "{},{},{}", r.suite_id, if r.passed() { "pass" } else { "fail" }, r.checks_run);
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let _ = write!(s, "{:<20} {} ({} checks", r.suite_id, if r.passed() { "pass" } else { "FAIL" }, r.checks_run);
                if timings {
                    let _ = write!(s, ", {} ms", r.elapsed.as_millis());
                }
                s.push_str(")\n");
                for n in &r.notes {
                    let _ = writeln!(s, "    note: {n}");
                }
                if let Some(w) = &r.witness {
                    let _ = writeln!(s, "    witness: {w}");
                }
            }
            s
        }
    }
}

#[allow(clippy::too_many_arguments)]
pub fn verify(
    common: &Common,
    suite: Option<&str>,
    all: bool,
    list: bool,
    order: Option<usize>,
    m: Option<usize>,
    points: Option<usize>,
    timings: bool,
) -> Result<Output> {
    if list {
        let text = match common.format {
            Format::Json => json_doc(
                "verify",
                json!({ "suites": verify::suite_descriptions().iter().map(|(id, d)| json!({ "id": id, "description": d })).collect::<Vec<_>>() }),
            ),
            _ => verify::suite_descriptions().iter().map(|(id, d)| format!("{id}\t{d}\n")).collect(),
        };
        return Ok(Output::ok(text));
    }
    let params = SuiteParams {
        n_max: order,
        m_max: m,
        points,
        seed: common.seed,
        ice: ice_config(common),
    };
    let reports = if all {
        verify::run_all(&params)
    } else {
        let id = suite.expect("clap requires --suite without --all");
        vec![verify::run_suite(id, &params)?]
    };
    let ok = reports.iter().all(VerificationReport::passed);
    Ok(Output { text: render_reports(common, &reports, timings), ok })
}

pub fn report(common: &Common, lines: &[String]) -> Result<Output> {
    let reports = verify::merge_reports(lines)?;
    let ok = reports.iter().all(VerificationReport::passed);
    Ok(Output { text: render_reports(common, &reports, false), ok })
}
