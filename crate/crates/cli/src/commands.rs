use std::fmt::Write as _;
use std::time::Instant;

use erq_core::decompose::{
    classify, classify_homogeneous, detect_additive_form, detect_linear_form, detect_multiplicative_form,
    detect_power_product_form, Certificate, CertificateDocument, DecomposeError, HomogeneousVerdict,
    VerdictDocument,
};
use erq_core::harness::{
    chang_check, example1_witness, growth_sweep, image_size_with, measure_witness, witness_for_verdict,
    Execution, ExperimentRecord, HarnessError, SetSpec,
};
use erq_core::probe::{
    choose_exponent_and_genus, curve_points_bounded_height, enumerate_rationals_by_height, group_membership,
    intersection_count, popular_congruence_class, range_progression_probe, squares_no_4ap_check, CurveSpec, Domain,
    MultGroupSpec, ProbeError, ProbeReport, ProgressionKind,
};
use erq_core::{format_polynomial, parse_with, Polynomial, Rational, UniPoly};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Command, ExpandArgs, Kind, PolyArgs, Probe, WitnessArgs};
use crate::error::CliError;
use crate::runlog::LogEntry;

/// Result document of one command.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub log: Option<LogEntry>,
}

impl Output {
    fn new(json: impl Serialize, text: String) -> Self {
        Output {
            json: serde_json::to_value(json).expect("documents serialize"),
            text,
            log: None,
        }
    }
}

pub fn dispatch(cmd: &Command, seed: Option<u64>) -> Result<Output, CliError> {
    match cmd {
        Command::Parse(p) => parse_cmd(p),
        Command::Classify(p) => classify_cmd(p),
        Command::Decompose(p) => decompose_cmd(p),
        Command::Expand(e) => expand_cmd(e, seed),
        Command::Witness(w) => witness_cmd(w, seed),
        Command::Probe(p) => probe_cmd(&p.probe, seed),
    }
}

/// Names given with `--vars`, else `x`, `y`, `z` up to the last one that
/// occurs in the text.
pub fn resolve_vars(text: &str, vars: Option<&[String]>) -> Vec<String> {
    if let Some(v) = vars {
        return v.iter().map(|s| s.trim().to_string()).collect();
    }
    let used = ["x", "y", "z"]
        .iter()
        .rposition(|v| text.contains(v))
        .map_or(1, |i| i + 1);
    ["x", "y", "z"][..used].iter().map(|s| s.to_string()).collect()
}

fn parse(text: &str, names: &[String]) -> Result<Polynomial, CliError> {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    parse_with(text, &refs).map_err(|error| CliError::Parse {
        input: text.to_string(),
        error,
    })
}

fn parse_poly(p: &PolyArgs) -> Result<(Polynomial, Vec<String>), CliError> {
    let names = resolve_vars(&p.polynomial, p.vars.as_deref());
    Ok((parse(&p.polynomial, &names)?, names))
}

fn parse_uni(text: &str) -> Result<UniPoly, CliError> {
    let p = parse(text, &["x".to_string()])?;
    Ok(p.to_univariate(0).expect("one variable"))
}

fn parse_rational(text: &str) -> Result<Rational, CliError> {
    text.trim()
        .parse()
        .map_err(|e| CliError::Input(format!("{text:?} is not a rational: {e}")))
}

fn uni_text(g: &UniPoly) -> String {
    format_polynomial(&g.to_poly(1, 0), &["x"])
}

fn parse_cmd(p: &PolyArgs) -> Result<Output, CliError> {
    let (f, names) = parse_poly(p)?;
    let canonical = format_polynomial(&f, &names);
    let doc = json!({
        "polynomial": canonical,
        "variables": names,
        "terms": f.num_terms(),
        "total_degree": f.total_degree(),
        "homogeneous_degree": f.is_homogeneous(),
    });
    Ok(Output::new(doc, format!("{canonical}\n")))
}

fn decompose_error(e: DecomposeError) -> CliError {
    match e {
        DecomposeError::RecompositionFailed => CliError::Internal(e.to_string()),
        other => CliError::Input(other.to_string()),
    }
}

/// Rebuilds `F` from the certificate's printed text alone and compares it
/// with the input.
fn verify_document(doc: &CertificateDocument, f: &Polynomial, names: &[String], active: &[usize]) -> Result<(), CliError> {
    let bad = |what: &str| CliError::Internal(format!("certificate does not recompose: {what}"));
    let act: Vec<String> = active.iter().map(|&i| names[i].clone()).collect();
    let n = act.len();
    let var = |i: usize| Polynomial::var(n, i);
    let inner_poly = |i: usize, text: &str| -> Result<Polynomial, CliError> {
        let g = parse(text, &[act[i].clone()]).map_err(|_| bad("inner text"))?;
        g.embed(n, &[i]).map_err(|_| bad("inner arity"))
    };
    let inner = match doc.form.as_str() {
        "linear" => {
            let c = doc.coefficients.as_ref().ok_or_else(|| bad("coefficients"))?;
            (0..n).fold(Polynomial::zero(n), |acc, i| &acc + &var(i).scale(&c[i]))
        }
        "power_product" => {
            let (a, e) = (
                doc.shifts.as_ref().ok_or_else(|| bad("shifts"))?,
                doc.exponents.as_ref().ok_or_else(|| bad("exponents"))?,
            );
            (0..n).fold(Polynomial::one(n), |acc, i| {
                &acc * &(&var(i) + &Polynomial::constant(n, a[i].clone())).pow(e[i])
            })
        }
        "additive" => {
            let mut w = Polynomial::zero(n);
            for (i, t) in doc.inners.iter().enumerate() {
                w += &inner_poly(i, t)?;
            }
            w
        }
        "multiplicative" => {
            let mut w = Polynomial::one(n);
            for (i, t) in doc.inners.iter().enumerate() {
                w = &w * &inner_poly(i, t)?;
            }
            w
        }
        other => return Err(bad(other)),
    };
    let outer = parse(&doc.f, &["t".to_string()]).map_err(|_| bad("outer text"))?;
    let rebuilt = outer.substitute(&[inner]).map_err(|_| bad("substitution"))?;
    let rebuilt = rebuilt.embed(f.arity(), active).map_err(|_| bad("embedding"))?;
    if &rebuilt == f {
        Ok(())
    } else {
        Err(bad("mismatch"))
    }
}

fn homogeneous_doc(h: &HomogeneousVerdict) -> Value {
    match h {
        HomogeneousVerdict::LinearPower { a, coeffs, alpha } => json!({
            "form": "linear_power", "a": a, "coefficients": coeffs, "alpha": alpha,
        }),
        HomogeneousVerdict::MonomialPower { a, exponents, k } => json!({
            "form": "monomial_power", "a": a, "exponents": exponents, "k": k,
        }),
        HomogeneousVerdict::Expander => json!({ "form": "expander" }),
    }
}

fn classify_cmd(p: &PolyArgs) -> Result<Output, CliError> {
    let (f, names) = parse_poly(p)?;
    let v = classify(&f).map_err(decompose_error)?;
    let doc = VerdictDocument::new(&v, &names);
    if let Some(c) = &doc.certificate {
        verify_document(c, &f, &names, &v.active_vars)?;
    }
    let homogeneous = match classify_homogeneous(&f) {
        Ok(h) => Some(h),
        Err(DecomposeError::NotHomogeneous) => None,
        Err(e) => return Err(decompose_error(e)),
    };
    let mut json = serde_json::to_value(&doc).expect("documents serialize");
    if let Some(h) = &homogeneous {
        json["homogeneous"] = homogeneous_doc(h);
    }

    let mut text = format!("over Q: {}\nover R: {}\n", doc.over_q, doc.over_r);
    if let Some(c) = &doc.certificate {
        let _ = writeln!(text, "certificate: {}", certificate_line(c));
    }
    if let Some(h) = &homogeneous {
        let _ = writeln!(text, "homogeneous: {}", homogeneous_doc(h)["form"].as_str().unwrap_or(""));
    }
    for d in &doc.diagnostics {
        let _ = writeln!(text, "- {}", d.message);
    }
    Ok(Output::new(json, text))
}

fn certificate_line(c: &CertificateDocument) -> String {
    let mut s = format!("{} with f = {}", c.form, c.f);
    if !c.inners.is_empty() {
        let _ = write!(s, ", inners {}", c.inners.join(", "));
    }
    if let Some(k) = &c.coefficients {
        let _ = write!(s, ", coefficients {}", join(k));
    }
    if let (Some(a), Some(e)) = (&c.shifts, &c.exponents) {
        let _ = write!(s, ", shifts {}, exponents {}", join(a), join(e));
    }
    s
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn decompose_cmd(p: &PolyArgs) -> Result<Output, CliError> {
    let (f, names) = parse_poly(p)?;
    if f.is_constant() {
        return Err(CliError::Input("polynomial is constant".into()));
    }
    let active = f.dependent_vars();
    let g = f.project(&active).map_err(|e| CliError::Input(e.to_string()))?;
    let act: Vec<String> = active.iter().map(|&i| names[i].clone()).collect();
    let found: Vec<(&str, Option<Certificate>)> = vec![
        ("linear", detect_linear_form(&g).map(Certificate::Linear)),
        ("power_product", detect_power_product_form(&g).map(Certificate::PowerProduct)),
        ("additive", detect_additive_form(&g).map(Certificate::Additive)),
        ("multiplicative", detect_multiplicative_form(&g).map(Certificate::Multiplicative)),
    ];
    let mut json = serde_json::Map::new();
    let mut text = String::new();
    for (name, cert) in found {
        let doc = cert.map(|c| CertificateDocument::new(&c, &act));
        if let Some(d) = &doc {
            verify_document(d, &f, &names, &active)?;
        }
        let _ = writeln!(
            text,
            "{name}: {}",
            doc.as_ref().map_or("none".to_string(), certificate_line)
        );
        json.insert(name.to_string(), serde_json::to_value(doc).expect("documents serialize"));
    }
    json.insert("active_variables".into(), json!(act));
    Ok(Output::new(Value::Object(json), text))
}

fn harness_error(e: HarnessError) -> CliError {
    CliError::Input(e.to_string())
}

fn record_text(r: &ExperimentRecord) -> String {
    format!(
        "|{}| = {} on sets of size at most {} (ratio {})\n",
        r.polynomial, r.count, r.n, r.ratio
    )
}

fn expand_cmd(e: &ExpandArgs, seed: Option<u64>) -> Result<Output, CliError> {
    let (f, names) = parse_poly(&e.poly)?;
    let sets: Vec<SetSpec> =
        serde_json::from_str(&e.sets).map_err(|err| CliError::Input(format!("--sets: {err}")))?;
    for s in &sets {
        s.validate().map_err(harness_error)?;
    }
    if let Some(sizes) = &e.sizes {
        let r = growth_sweep(&f, &sets, sizes).map_err(harness_error)?;
        let text = format!(
            "counts {} at sizes {}; fitted exponent {:.4}\n",
            join(&r.counts),
            join(&r.sizes),
            r.slope
        );
        return Ok(Output::new(r, text));
    }
    let mut record = image_size_with(&f, &names, &sets, Execution::Parallel).map_err(harness_error)?;
    record.seed = seed;
    let text = record_text(&record);
    let mut out = Output::new(&record, text);
    out.log = Some(LogEntry::Experiment(record));
    Ok(out)
}

fn witness_cmd(w: &WitnessArgs, seed: Option<u64>) -> Result<Output, CliError> {
    if w.chang {
        let r = chang_check(w.n).map_err(harness_error)?;
        let text = format!("{} <= {}: {}\n", r.count, r.bound, r.holds);
        return Ok(Output::new(r, text));
    }
    let (f, names, witness) = if w.example1 {
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let f = parse("(x^2-1)*(y^2+1)*(z+1)", &names)?;
        (f, names, example1_witness(w.n, w.literal_paper_sets).map_err(harness_error)?)
    } else {
        let text = w.form.as_deref().expect("clap requires --form");
        let names = resolve_vars(text, w.vars.as_deref());
        let f = parse(text, &names)?;
        let v = classify(&f).map_err(decompose_error)?;
        let witness = witness_for_verdict(&v, w.n).map_err(harness_error)?;
        (f, names, witness)
    };
    let check = measure_witness(&f, &witness).map_err(harness_error)?;
    let mut record = image_size_with(&f, &names, &witness.sets, Execution::Parallel).map_err(harness_error)?;
    record.seed = seed;
    let mut text = format!("{} <= {}: {}\n", check.record.count, check.bound, check.holds);
    if let Some(note) = &check.note {
        let _ = writeln!(text, "note: {note}");
    }
    let doc = json!({
        "sets": witness.sets,
        "count": check.record.count,
        "bound": check.bound,
        "holds": check.holds,
        "note": check.note,
        "record": record,
    });
    let mut out = Output::new(doc, text);
    out.log = Some(LogEntry::Experiment(record));
    Ok(out)
}

fn probe_error(e: ProbeError) -> CliError {
    CliError::Input(e.to_string())
}

fn group(generators: &[String]) -> Result<MultGroupSpec, CliError> {
    let g = generators.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
    MultGroupSpec::new(g).map_err(probe_error)
}

fn probe_cmd(p: &Probe, seed: Option<u64>) -> Result<Output, CliError> {
    let start = Instant::now();
    let mut report = match p {
        Probe::Heights { height } => {
            let xs = enumerate_rationals_by_height(*height).map_err(probe_error)?;
            let mut r = ProbeReport::new("heights").param("height", height);
            r.count = Some(xs.len() as u64);
            r.witnesses = xs.iter().take(50).map(|x| json!(x)).collect();
            r
        }
        Probe::Curve { g, w, c, height } => {
            let spec = CurveSpec::new(parse_uni(g)?, parse_rational(c)?, *w).map_err(probe_error)?;
            let pts = curve_points_bounded_height(&spec, *height).map_err(probe_error)?;
            let mut r = ProbeReport::new("curve")
                .param("g", uni_text(&spec.g))
                .param("c", &spec.c)
                .param("w", w)
                .param("height", height);
            r.count = Some(pts.len() as u64);
            r.witnesses = pts.iter().take(50).map(|(x, y)| json!([x, y])).collect();
            if w % 2 == 0 {
                r.notes.push("only y >= 0 is listed".into());
            }
            r
        }
        Probe::Genus { g } => {
            let g = parse_uni(g)?;
            let c = choose_exponent_and_genus(&g).map_err(probe_error)?;
            let mut r = ProbeReport::new("genus").param("g", uni_text(&g));
            r.witnesses.push(serde_json::to_value(&c).expect("serializes"));
            r
        }
        Probe::Membership { r: value, generators } => {
            let g = group(generators)?;
            let value = parse_rational(value)?;
            let beta = group_membership(&value, &g);
            let mut r = ProbeReport::new("membership")
                .param("r", &value)
                .param("generators", g.generators());
            r.count = Some(beta.is_some() as u64);
            r.witnesses = beta.into_iter().map(|b| json!(b)).collect();
            r
        }
        Probe::Intersection { g, generators, height } => {
            let grp = group(generators)?;
            let g = parse_uni(g)?;
            let res = intersection_count(&g, &grp, *height).map_err(probe_error)?;
            let mut r = ProbeReport::new("intersection")
                .param("g", uni_text(&g))
                .param("generators", grp.generators())
                .param("height", height);
            r.count = Some(res.count);
            r.witnesses = res.witnesses.iter().map(|(x, v)| json!([x, v])).collect();
            r
        }
        Probe::Congruence { vectors, w } => {
            let vs: Vec<Vec<i64>> = serde_json::from_str(vectors)
                .map_err(|e| CliError::Input(format!("vectors: {e}")))?;
            let (class, count) = popular_congruence_class(&vs, *w).map_err(probe_error)?;
            let mut r = ProbeReport::new("congruence").param("w", w).param("size", vs.len());
            r.count = Some(count as u64);
            r.witnesses.push(json!(class));
            r
        }
        Probe::Progression { g, kind, n, height, shift } => {
            let g = parse_uni(g)?;
            let domain = match (n, height) {
                (Some(n), _) => Domain::Integers(*n),
                (None, Some(h)) => Domain::Height(*h),
                (None, None) => return Err(CliError::Input("give --n or --height".into())),
            };
            let kind = match kind {
                Kind::Arithmetic => ProgressionKind::Arithmetic,
                Kind::Geometric => ProgressionKind::Geometric,
            };
            let shift = shift.as_deref().map(parse_rational).transpose()?;
            let res = range_progression_probe(&g, domain, kind, shift.as_ref()).map_err(probe_error)?;
            let mut r = ProbeReport::new("progression")
                .param("g", uni_text(&g))
                .param("domain", domain)
                .param("kind", kind);
            if let Some(a) = &shift {
                r = r.param("shift", a);
            }
            r.count = Some(res.range_size as u64);
            r.length = Some(res.length);
            r.witnesses = res
                .witness
                .iter()
                .zip(&res.preimages)
                .map(|(v, pre)| json!({ "value": v, "preimages": pre }))
                .collect();
            if res.shifted_pure_power {
                r.notes.push("g is a shifted pure power or has degree at most 1".into());
            }
            r
        }
        Probe::Squares { n } => {
            let res = squares_no_4ap_check(*n).map_err(probe_error)?;
            let mut r = ProbeReport::new("squares").param("n", n);
            r.count = Some(res.three_term_count);
            r.length = Some(if res.four_term_found { 4 } else { 3 });
            r.witnesses = res.example.iter().map(|e| json!(e)).collect();
            r.notes.push(format!(
                "four-term progression {}",
                if res.four_term_found { "found" } else { "absent" }
            ));
            r
        }
    };
    if let Some(s) = seed {
        report = report.param("seed", s);
    }
    let text = probe_text(&report);
    let mut out = Output::new(&report, text);
    report.runtime_ms = Some(start.elapsed().as_millis() as u64);
    out.log = Some(LogEntry::Probe(report));
    Ok(out)
}

fn probe_text(r: &ProbeReport) -> String {
    let mut s = format!("{}", r.probe);
    for (k, v) in &r.parameters {
        let _ = write!(s, " {k}={}", plain(v));
    }
    s.push('\n');
    if let Some(c) = r.count {
        let _ = writeln!(s, "count: {c}");
    }
    if let Some(l) = r.length {
        let _ = writeln!(s, "length: {l}");
    }
    for w in &r.witnesses {
        let _ = writeln!(s, "  {}", plain(w));
    }
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
