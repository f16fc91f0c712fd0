use std::fmt::Write as _;

use gvm_core::ehw::{self, SpecialLine};
use gvm_core::jantzen::{JantzenTerm, SimplicityVerdict};
use gvm_core::rootdata::{sign_pattern_of, ParabolicRootDatum};
use gvm_core::scan::ScanRow;
use gvm_core::tables::Table;
use gvm_core::weyl::ChamberForm;
use gvm_core::{Rational, Weight};
use serde_json::{json, Value};

fn pattern_label(datum: &ParabolicRootDatum, beta: &Weight) -> Option<String> {
    if datum.ambient_dim() != 8 {
        return None;
    }
    sign_pattern_of(beta).map(|(p, _)| p.to_string())
}

fn term_json(datum: &ParabolicRootDatum, t: &JantzenTerm) -> Value {
    let mut v = json!({
        "beta": t.beta,
        "pairing": t.pairing,
        "image": t.image,
        "status": t.chamber.status(),
        "steps": t.chamber.steps(),
    });
    if let ChamberForm::Regular { rep, parity, .. } = &t.chamber {
        v["rep"] = json!(rep);
        v["parity"] = json!(parity);
    }
    if let Some(label) = pattern_label(datum, &t.beta) {
        v["pattern"] = json!(label);
    }
    v
}

pub fn classify_json(datum: &ParabolicRootDatum, c: &Rational, line: &SpecialLine, v: &SimplicityVerdict) -> Value {
    let classes: Vec<Value> = v
        .surviving_classes()
        .map(|cl| {
            json!({
                "rep": cl.rep,
                "net_sign": cl.net_sign,
                "theta": cl.theta,
                "members": cl.members.iter().map(|&i| &v.terms[i].beta).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "case": datum.case(),
        "c": c,
        "z": line.z,
        "lambda0": line.lambda0,
        "verdict": v.verdict,
        "route": v.route.name(),
        "s_lambda_size": v.terms.len(),
        "s_lambda": v.s_lambda().collect::<Vec<_>>(),
        "terms": v.terms.iter().map(|t| term_json(datum, t)).collect::<Vec<_>>(),
        "surviving_classes": classes,
        "witness": v.witness,
        "notes": datum.notes(),
    })
}

pub fn classify_pretty(datum: &ParabolicRootDatum, c: &Rational, line: &SpecialLine, v: &SimplicityVerdict) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "case      {}", datum.case());
    let _ = writeln!(s, "c         {c}");
    let _ = writeln!(s, "z         {}", line.z);
    let _ = writeln!(s, "lambda0   {}", line.lambda0);
    let _ = writeln!(s, "verdict   {:?} ({})", v.verdict, v.route.name());
    let _ = writeln!(s, "|S_lambda| {}", v.terms.len());
    for t in &v.terms {
        let label = pattern_label(datum, &t.beta).map(|l| format!(" [{l}]")).unwrap_or_default();
        match &t.chamber {
            ChamberForm::Singular { .. } => {
                let _ = writeln!(s, "  {}{label}  <.,beta>={}  singular", t.beta, t.pairing);
            }
            ChamberForm::Regular { rep, parity, steps } => {
                let _ = writeln!(
                    s,
                    "  {}{label}  <.,beta>={}  regular  rep={rep}  l={steps} ({parity:?})",
                    t.beta, t.pairing
                );
            }
        }
    }
    for cl in v.surviving_classes() {
        let _ = writeln!(s, "surviving class rep={} net_sign={}", cl.rep, cl.net_sign);
    }
    if let Some(w) = &v.witness {
        let _ = writeln!(s, "witness   {w}");
    }
    for n in datum.notes() {
        let _ = writeln!(s, "note      {n}");
    }
    s
}

pub fn datum_json(datum: &ParabolicRootDatum) -> Value {
    json!({
        "case": datum.case(),
        "ambient_dim": datum.ambient_dim(),
        "simple_roots": datum.simple_roots(),
        "levi_simples": datum.levi_simples(),
        "noncompact_simple": datum.noncompact_simple(),
        "nilradical_roots": datum.nilradical_roots(),
        "rho": datum.rho(),
        "gamma": datum.highest_root(),
        "zeta": datum.zeta(),
        "theta_u": datum.theta_u(),
        "notes": datum.notes(),
    })
}

pub fn datum_pretty(datum: &ParabolicRootDatum) -> String {
    let mut s = String::new();
    let list = |s: &mut String, name: &str, ws: &[Weight]| {
        let _ = writeln!(s, "{name} ({})", ws.len());
        for w in ws {
            let _ = writeln!(s, "  {w}");
        }
    };
    let _ = writeln!(s, "case {}  (ambient dimension {})", datum.case(), datum.ambient_dim());
    list(&mut s, "simple roots", datum.simple_roots());
    let _ = writeln!(s, "noncompact simple root {}", datum.noncompact_simple());
    list(&mut s, "nilradical roots", datum.nilradical_roots());
    let _ = writeln!(s, "rho     {}", datum.rho());
    let _ = writeln!(s, "gamma   {}", datum.highest_root());
    let _ = writeln!(s, "zeta    {}", datum.zeta());
    let _ = writeln!(s, "theta_u {}", datum.theta_u());
    for n in datum.notes() {
        let _ = writeln!(s, "note    {n}");
    }
    s
}

pub const SCAN_COLUMNS: [&str; 8] = ["case", "c", "z", "verdict", "route", "thm26", "thm11_member", "agree"];

fn scan_fields(case: &str, r: &ScanRow) -> [String; 8] {
    [
        case.to_string(),
        r.c.to_string(),
        r.z.to_string(),
        format!("{:?}", r.verdict),
        r.route.name().to_string(),
        r.thm26.name().to_string(),
        r.thm11_member.to_string(),
        r.agree.to_string(),
    ]
}

pub fn scan_tsv(case: &str, rows: &[ScanRow], header: bool) -> String {
    let mut s = String::new();
    if header {
        s.push_str(&SCAN_COLUMNS.join("\t"));
        s.push('\n');
    }
    for r in rows {
        s.push_str(&scan_fields(case, r).join("\t"));
        s.push('\n');
    }
    s
}

pub fn scan_json(case: &str, rows: &[ScanRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "case": case,
                    "c": r.c,
                    "z": r.z,
                    "verdict": r.verdict,
                    "route": r.route.name(),
                    "thm26": r.thm26,
                    "thm11_member": r.thm11_member,
                    "agree": r.agree,
                })
            })
            .collect(),
    )
}

pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|i| rows.iter().filter_map(|r| r.get(i)).map(|c| c.chars().count()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c:<w$}", w = widths[i]))
            .collect();
        s.push_str(line.join("  ").trim_end());
        s.push('\n');
    }
    s
}

fn table_grid(t: &Table) -> Vec<Vec<String>> {
    let mut header = vec!["beta".to_string()];
    header.extend(t.columns.iter().map(|c| c.to_string()));
    header.extend(["in_S".to_string(), "levi".to_string(), "d5".to_string()]);
    let mut grid = vec![header];
    for r in &t.rows {
        let mut line = vec![r.label.clone()];
        line.extend(r.values.iter().map(|v| v.to_string()));
        line.push(r.in_s_lambda.to_string());
        line.push(if r.levi_regular { "regular" } else { "singular" }.to_string());
        line.push(if r.d5_regular { "regular" } else { "singular" }.to_string());
        grid.push(line);
    }
    grid
}

pub fn table_pretty(t: &Table) -> String {
    let mut s = format!("Table {}: {} at c = {}, z = {}", t.id, t.case, t.c, t.z);
    if t.id >= 3 {
        let _ = write!(s, " (a = {})", t.c);
    }
    s.push('\n');
    s.push_str(&aligned(&table_grid(t)));
    s
}

pub fn table_tsv(t: &Table) -> String {
    table_grid(t).iter().map(|r| r.join("\t") + "\n").collect()
}

pub fn table_json(t: &Table) -> Value {
    json!({
        "table": t.id,
        "case": t.case,
        "c": t.c,
        "z": t.z,
        "columns": t.columns,
        "rows": t.rows.iter().map(|r| json!({
            "beta": r.label,
            "root": r.beta,
            "values": r.values,
            "in_s_lambda": r.in_s_lambda,
            "levi_regular": r.levi_regular,
            "d5_regular": r.d5_regular,
        })).collect::<Vec<_>>(),
    })
}

pub fn summary_line(datum: &ParabolicRootDatum, rows: &[ScanRow]) -> String {
    let pts: Vec<(Rational, gvm_core::Verdict)> = rows.iter().map(|r| (r.c.clone(), r.verdict)).collect();
    match ehw::progression_summary(datum, &pts) {
        Ok(s) => {
            let finite: Vec<String> = s.finite_part.iter().map(|c| c.to_string()).collect();
            format!(
                "reducible c: {{{}}} + ({} + {} Z>=0)",
                finite.join(", "),
                s.tail_start,
                s.tail_step
            )
        }
        Err(e) => format!("reducible c: {e}"),
    }
}
