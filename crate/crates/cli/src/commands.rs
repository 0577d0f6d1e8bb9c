use std::fmt::Write as _;
use std::sync::Mutex;

use serde_json::{json, Value};
use weaving_core::bounds::{bound_catalog, constructive_region_set, constructive_unknotting_set, gcd, verify_report, VerifyReport, WitnessReport};
use weaving_core::certify::{certify_triviality, Certificate};
use weaving_core::region::{faces_for_labels, isolate_region_number, rcc_apply, region_unknotting_search, region_warping_degree, sorted_labels, toggle_image};
use weaving_core::warping::{braid_warping_degree, closed_warping_degree, diagram_warping_count, diagram_warping_degree, warping_count, BaseSequence, WarpingReport};
use weaving_core::{BraidWord, ClosureDiagram, Limits, RegionLabel};

use crate::output::{Output, Table};
use crate::text::format_braid;
use crate::{Cli, CliError, Command};

pub const BOUND_COLUMNS: [&str; 7] = ["p", "q", "formula_id", "value", "applicable", "witness_size", "verdict"];
pub const GRID_COLUMNS: [&str; 7] = ["p", "q", "status", "checks", "passed", "discrepancies", "skipped"];

pub fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let limits = cli.limits();
    match &cli.command {
        Command::Gen { p, q } => {
            let b = BraidWord::weaving(*p, *q)?;
            Ok(Output::new(format_braid(&b), braid_json(&b)))
        }
        Command::Wd { source, seq } => {
            let b = source.braid()?;
            let report = match seq {
                Some(s) => warping_count(&b, &BaseSequence::from_one_based(&parse_list(s)?, b.strands())?)?,
                None => braid_warping_degree(&b, &limits)?,
            };
            Ok(warping_output(&report, 1))
        }
        Command::ClosedWd { source } => Ok(warping_output(&closed_warping_degree(&source.braid()?, &limits)?, 1)),
        Command::DiagramWd { source, base } => {
            let d = ClosureDiagram::close(&source.braid()?)?;
            let report = match base {
                Some(s) => diagram_warping_count(&d, &parse_list(s)?)?,
                None => diagram_warping_degree(&d, &limits)?,
            };
            Ok(warping_output(&report, 0))
        }
        Command::Regions { source } => Ok(regions(&ClosureDiagram::close(&source.braid()?)?)),
        Command::Rcc { source, regions } => rcc(&ClosureDiagram::close(&source.braid()?)?, regions),
        Command::Dr { source } => {
            let b = source.braid()?;
            let d = ClosureDiagram::close(&b)?;
            let rw = region_warping_degree(&b, &limits)?;
            let labels = label_strings(&d, &rw.regions);
            let plain = rw.value.map_or("none".to_string(), |v| v.to_string());
            let json = json!({
                "value": rw.value,
                "sequence": rw.sequence.map(|s| one_based(&s)),
                "regions": labels,
            });
            Ok(Output::new(plain, json))
        }
        Command::Ur { source } => {
            let d = ClosureDiagram::close(&source.braid()?)?;
            let ur = region_unknotting_search(&d, &limits)?;
            let json = json!({ "value": ur.value, "witness": label_strings(&d, &ur.witness) });
            Ok(Output::new(ur.value.to_string(), json))
        }
        Command::Isolate { source } => {
            let d = ClosureDiagram::close(&source.braid()?)?;
            let iso = isolate_region_number(&d, &limits)?;
            let construction = iso.construction.as_ref().map(|(faces, ok)| json!({ "regions": label_strings(&d, faces), "independent": ok }));
            let json = json!({ "number": iso.number, "witness": label_strings(&d, &iso.witness), "construction": construction });
            Ok(Output::new(iso.number.to_string(), json))
        }
        Command::Lk { source } => {
            let d = ClosureDiagram::close(&source.braid()?)?;
            let lk = d.linking_matrix();
            let mut plain = String::new();
            for row in &lk {
                let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                let _ = writeln!(plain, "{}", cells.join(" "));
            }
            let proper = d.is_proper();
            let _ = write!(plain, "{}", if proper { "proper" } else { "not proper" });
            Ok(Output::new(plain, json!({ "lk": lk, "proper": proper })))
        }
        Command::Certify { source } => Ok(certificate_output(&certify_triviality(&source.braid()?, &limits)?)),
        Command::Bounds { p, q } => bounds(*p, *q, &limits),
        Command::Verify { p, q } => Ok(verify_output(&verify_report(*p, *q, &limits)?)),
        Command::VerifyGrid { pmax, qmax } => Ok(verify_grid(*pmax, *qmax, &limits)),
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| CliError::Usage(format!("`{t}` is not a non-negative integer"))))
        .collect()
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

fn braid_json(b: &BraidWord) -> Value {
    json!({ "strands": b.strands(), "word": b.to_ints() })
}

fn label_strings(d: &ClosureDiagram, faces: &[usize]) -> Vec<String> {
    sorted_labels(d, faces).iter().map(RegionLabel::to_string).collect()
}

/// Strand sequences are shown 1-based, diagram base edges as edge ids.
fn warping_output(r: &WarpingReport, offset: usize) -> Output {
    let sequence: Vec<usize> = r.sequence.iter().map(|s| s + offset).collect();
    let json = json!({ "sequence": sequence, "warping_ordinals": one_based(&r.ordinals), "count": r.count });
    Output::new(r.count.to_string(), json)
}

fn regions(d: &ClosureDiagram) -> Output {
    let crossings: Vec<Value> = d
        .crossings()
        .iter()
        .map(|c| {
            json!({
                "id": c.ordinal + 1,
                "round": c.round,
                "letter": c.letter_pos,
                "generator": c.index,
                "sign": c.sign.value(),
                "over": c.over + 1,
                "under": c.under + 1,
            })
        })
        .collect();
    let mut plain = String::new();
    let faces: Vec<Value> = d
        .faces()
        .iter()
        .map(|f| {
            let mut ids: Vec<usize> = f.corners.iter().map(|&(c, _)| c + 1).collect();
            ids.sort_unstable();
            ids.dedup();
            let list: Vec<String> = ids.iter().map(usize::to_string).collect();
            let _ = writeln!(plain, "{} {}-gon: {}", f.label, f.gon(), list.join(" "));
            json!({ "label": f.label.to_string(), "gon": f.gon(), "crossings": ids })
        })
        .collect();
    let components: Vec<Value> = d
        .components()
        .iter()
        .map(|c| json!({ "strands": one_based(&c.strands), "edges": c.edges }))
        .collect();
    let json = json!({ "crossings": crossings, "faces": faces, "components": components, "lk": d.linking_matrix() });
    Output::new(plain, json)
}

fn rcc(d: &ClosureDiagram, regions: &str) -> Result<Output, CliError> {
    let labels = regions
        .split(',')
        .map(|t| RegionLabel::parse(t.trim()).ok_or_else(|| CliError::Usage(format!("`{t}` is not a region label"))))
        .collect::<Result<Vec<_>, _>>()?;
    let faces = faces_for_labels(d, &labels)?;
    let flipped: Vec<usize> = toggle_image(d, &faces)?.ones().collect();
    let after = rcc_apply(d, &faces)?;
    let json = json!({
        "regions": label_strings(d, &faces),
        "flipped": one_based(&flipped),
        "braid": braid_json(after.word()),
    });
    Ok(Output::new(format_braid(after.word()), json))
}

fn certificate_json(c: &Certificate) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("verdict".into(), json!(c.verdict.to_string()));
    m.insert("stage".into(), json!(c.stage.map(|s| s.name())));
    if !c.trace.is_empty() {
        let trace: Vec<Value> = c
            .trace
            .iter()
            .map(|s| json!({ "move": s.rule.to_string(), "strands": s.word.strands(), "word": s.word.to_ints() }))
            .collect();
        m.insert("trace".into(), Value::Array(trace));
    }
    if let Some(seq) = &c.sequence {
        m.insert("sequence".into(), json!(one_based(seq)));
    }
    if let Some(b) = &c.bracket {
        m.insert("bracket".into(), json!(b.to_string()));
    }
    if c.trivial_blocks > 0 {
        m.insert("trivial_blocks".into(), json!(c.trivial_blocks));
    }
    m.insert("skipped".into(), json!(c.skipped));
    Value::Object(m)
}

fn certificate_output(c: &Certificate) -> Output {
    let mut plain = c.verdict.to_string();
    if let Some(s) = c.stage {
        let _ = write!(plain, "\nstage: {}", s.name());
    }
    for s in &c.skipped {
        let _ = write!(plain, "\nskipped: {s}");
    }
    Output::new(plain, certificate_json(c))
}

fn bounds(p: usize, q: usize, limits: &Limits) -> Result<Output, CliError> {
    let catalog = bound_catalog(p, q)?;
    let mut witnesses: Vec<WitnessReport> = Vec::new();
    if p >= 3 && q >= 2 && gcd(p, q) == 1 {
        witnesses.extend(constructive_unknotting_set(p, q, limits).ok());
        witnesses.extend(constructive_region_set(p, q, limits).ok());
    }
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    let mut plain = String::new();
    for e in &catalog {
        let w = witnesses.iter().find(|w| w.formula_id == e.id);
        let size = w.map(|w| w.witness_size().to_string()).unwrap_or_default();
        let verdict = w.map(|w| w.certificate.verdict.to_string()).unwrap_or_default();
        rows.push(vec![
            p.to_string(),
            q.to_string(),
            e.id.to_string(),
            e.value.to_string(),
            e.applicable.to_string(),
            size.clone(),
            verdict.clone(),
        ]);
        entries.push(json!({
            "formula_id": e.id,
            "quantity": e.quantity,
            "kind": e.kind.symbol(),
            "value": e.value.to_string(),
            "applicable": e.applicable,
            "condition": e.condition,
            "witness_size": w.map(|w| w.witness_size()),
            "verdict": w.map(|w| w.certificate.verdict.to_string()),
        }));
        let _ = write!(plain, "{:<18} {} {} {}", e.id, e.quantity, e.kind.symbol(), e.value);
        if !e.applicable {
            let _ = write!(plain, "  (n/a: {})", e.condition);
        }
        if w.is_some() {
            let _ = write!(plain, "  witness {size} {verdict}");
        }
        plain.push('\n');
    }
    let json = json!({ "p": p, "q": q, "bounds": entries });
    Ok(Output::new(plain, json).with_table(Table { header: BOUND_COLUMNS.to_vec(), rows }))
}

fn verify_json(r: &VerifyReport) -> Value {
    let checks: Vec<Value> = r.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail })).collect();
    let discrepancies: Vec<Value> = r
        .discrepancies
        .iter()
        .map(|d| json!({ "what": d.what, "computed": d.computed, "published": d.published, "note": d.note }))
        .collect();
    let values: serde_json::Map<String, Value> = r.values.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    json!({
        "p": r.p,
        "q": r.q,
        "all_passed": r.all_passed(),
        "checks": checks,
        "discrepancies": discrepancies,
        "values": values,
        "skipped": r.skipped,
    })
}

fn verify_output(r: &VerifyReport) -> Output {
    let mut plain = String::new();
    let mut rows = Vec::new();
    for c in &r.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(plain, "{status} {}: {}", c.name, c.detail);
        rows.push(vec!["check".into(), c.name.clone(), status.into(), c.detail.clone()]);
    }
    for d in &r.discrepancies {
        let _ = writeln!(plain, "DISCREPANCY {}: computed {}, published {} ({})", d.what, d.computed, d.published, d.note);
        rows.push(vec!["discrepancy".into(), d.what.clone(), format!("computed {} published {}", d.computed, d.published), d.note.clone()]);
    }
    for (k, v) in &r.values {
        let _ = writeln!(plain, "VALUE {k} = {v}");
        rows.push(vec!["value".into(), k.clone(), v.clone(), String::new()]);
    }
    for s in &r.skipped {
        let _ = writeln!(plain, "SKIP {s}");
        rows.push(vec!["skipped".into(), s.clone(), String::new(), String::new()]);
    }
    Output::new(plain, verify_json(r)).with_table(Table { header: vec!["kind", "name", "status", "detail"], rows })
}

fn grid_pairs(pmax: usize, qmax: usize) -> Vec<(usize, usize)> {
    (3..=pmax).flat_map(|p| (2..=qmax).map(move |q| (p, q))).collect()
}

fn verify_grid(pmax: usize, qmax: usize, limits: &Limits) -> Output {
    let pairs = grid_pairs(pmax, qmax);
    let results: Mutex<Vec<(usize, Result<VerifyReport, weaving_core::Error>)>> = Mutex::new(Vec::new());
    let next = Mutex::new(0usize);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(pairs.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = {
                    let mut n = next.lock().unwrap();
                    let i = *n;
                    *n += 1;
                    i
                };
                let Some(&(p, q)) = pairs.get(i) else { break };
                let r = verify_report(p, q, limits);
                results.lock().unwrap().push((i, r));
            });
        }
    });
    let mut results = results.into_inner().unwrap();
    results.sort_by_key(|(i, _)| *i);

    let mut plain = String::new();
    let mut rows = Vec::new();
    let mut reports = Vec::new();
    for (i, r) in results {
        let (p, q) = pairs[i];
        let row = match &r {
            Ok(rep) => {
                let passed = rep.checks.iter().filter(|c| c.passed).count();
                let status = if rep.all_passed() { "ok" } else { "fail" };
                reports.push(verify_json(rep));
                [status.to_string(), rep.checks.len().to_string(), passed.to_string(), rep.discrepancies.len().to_string(), rep.skipped.len().to_string()]
            }
            Err(e) => {
                reports.push(json!({ "p": p, "q": q, "error": e.to_string() }));
                [format!("error: {e}"), "0".into(), "0".into(), "0".into(), "0".into()]
            }
        };
        let _ = writeln!(plain, "W({p},{q}) {} {}/{} checks, {} discrepancies, {} skipped", row[0], row[2], row[1], row[3], row[4]);
        let mut full = vec![p.to_string(), q.to_string()];
        full.extend(row);
        rows.push(full);
    }
    Output::new(plain, json!({ "reports": reports })).with_table(Table { header: GRID_COLUMNS.to_vec(), rows })
}
