use std::fmt::Write as _;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use avoidkit::closedform::{evaluate_with, generating_function, reduce_to_canonical};
use avoidkit::perm::{count_avoiders, enumerate_avoiders, AvoiderCache};
use avoidkit::wilf::{
    expected_rows, table_s3_s4, verify_closed_forms, ExpectedRow, TableDiff, WilfClass,
};
use avoidkit::{formula_for, Error, Evaluation, Method, Permutation};
use serde_json::{json, Number, Value};

use crate::args::{
    ClassifyArgs, Cli, Command, CountArgs, EnumerateArgs, Format, GfArgs, MethodArg, Target,
    VerifyArgs, WilfTableArgs,
};

/// Rendered output and whether a discrepancy should set the exit status.
pub struct Output {
    pub text: String,
    pub discrepancy: bool,
}

impl Output {
    fn clean(text: String) -> Self {
        Output {
            text,
            discrepancy: false,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let f = cli.format;
    match &cli.command {
        Command::Count(a) => count(a, f),
        Command::Enumerate(a) => enumerate(a, f),
        Command::Gf(a) => gf(a, f),
        Command::Classify(a) => classify(a, f),
        Command::Verify(a) => verify(a, f),
        Command::WilfTable(a) => wilf_table(a, f),
    }
}

fn json_text(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn big(value: impl ToString) -> Value {
    Value::Number(Number::from_str(&value.to_string()).expect("decimal integer"))
}

fn md_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let escape = |c: &str| c.replace('|', "\\|");
    let names: Vec<String> = headers.iter().map(|h| escape(h)).collect();
    let mut s = format!("| {} |\n", names.join(" | "));
    let _ = writeln!(s, "|{}", "---|".repeat(headers.len()));
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| escape(c)).collect();
        let _ = writeln!(s, "| {} |", cells.join(" | "));
    }
    s
}

fn csv_table(headers: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers)?;
    for row in rows {
        w.write_record(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn tau_text(tau: Option<&Permutation>) -> String {
    tau.map(|t| t.to_string()).unwrap_or_default()
}

fn header(target: &Target) -> String {
    match &target.tau {
        Some(tau) => format!("T = {}, τ = {tau}", target.avoid),
        None => format!("T = {}", target.avoid),
    }
}

fn count(a: &CountArgs, format: Format) -> Result<Output> {
    if a.strict && a.method != MethodArg::Both {
        bail!("--strict compares two methods; add --method both");
    }
    let t = &a.target;
    let method = Method::from(a.method);
    let formula = match &t.tau {
        Some(tau) if t.avoid.len() >= 2 => formula_for(&t.avoid, tau),
        _ => Err(Error::InvalidParameter(
            "closed forms need at least two patterns in T and a τ".into(),
        )),
    };
    let evals =
        a.n.0
            .clone()
            .map(|n| evaluate_with(&t.avoid, t.tau.as_ref(), n, method, formula.clone()))
            .collect::<avoidkit::Result<Vec<Evaluation>>>()?;
    let disagree = evals.iter().any(Evaluation::disagrees);
    let set = t.avoid.to_strings().join(",");
    let tau = tau_text(t.tau.as_ref());
    let text = match format {
        Format::Json => json_text(&json!({
            "T": t.avoid,
            "tau": t.tau,
            "method": method,
            "results": evals,
        })),
        Format::Text => {
            let mut s = header(t) + "\n";
            for e in &evals {
                let _ = write!(s, "n={}", e.n);
                match (&e.oracle, &e.printed) {
                    (Some(o), Some(p)) => {
                        let verdict = if e.disagrees() { "DISAGREE" } else { "agree" };
                        let _ = write!(s, "  oracle {o}  formula {p}  {verdict}");
                    }
                    (Some(o), None) if method == Method::Oracle => {
                        let _ = write!(s, "  {o}");
                    }
                    (Some(o), None) => {
                        let _ = write!(s, "  oracle {o}");
                    }
                    (None, Some(p)) => {
                        let _ = write!(s, "  formula {p}");
                    }
                    (None, None) => unreachable!("evaluation without a value"),
                }
                if let Some(note) = &e.note {
                    let _ = write!(s, "  ({note})");
                }
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for e in &evals {
                if let Some(o) = &e.oracle {
                    rows.push(vec![
                        set.clone(),
                        tau.clone(),
                        e.n.to_string(),
                        "oracle".into(),
                        o.to_string(),
                    ]);
                }
                if let Some(p) = &e.printed {
                    rows.push(vec![
                        set.clone(),
                        tau.clone(),
                        e.n.to_string(),
                        "formula".into(),
                        p.to_string(),
                    ]);
                }
            }
            csv_table(&["T", "tau", "n", "method", "count"], &rows)?
        }
        Format::Md => {
            let rows: Vec<Vec<String>> = evals
                .iter()
                .map(|e| {
                    vec![
                        e.n.to_string(),
                        e.oracle.as_ref().map(|v| v.to_string()).unwrap_or_default(),
                        e.printed
                            .as_ref()
                            .map(|v| v.to_string())
                            .unwrap_or_default(),
                        match e.agree {
                            Some(true) => "agree".into(),
                            Some(false) => "DISAGREE".into(),
                            None => String::new(),
                        },
                        e.note.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            format!("{}\n\n", header(t))
                + &md_table(&["n", "oracle", "formula", "agree", "note"], &rows)
        }
    };
    Ok(Output {
        text,
        discrepancy: a.strict && disagree,
    })
}

fn enumerate(a: &EnumerateArgs, format: Format) -> Result<Output> {
    let t = &a.target;
    let basis = match &t.tau {
        Some(tau) => t.avoid.with(tau.clone()),
        None => t.avoid.clone(),
    };
    let lists =
        a.n.0
            .clone()
            .map(|n| enumerate_avoiders(n, &basis).map(|perms| (n, perms)))
            .collect::<avoidkit::Result<Vec<_>>>()?;
    let text = match format {
        Format::Json => {
            let results: Vec<Value> = lists
                .iter()
                .map(|(n, perms)| json!({ "n": n, "count": perms.len(), "permutations": perms }))
                .collect();
            json_text(&json!({ "T": t.avoid, "tau": t.tau, "results": results }))
        }
        Format::Text => {
            let mut s = header(t) + "\n";
            for (n, perms) in &lists {
                let _ = writeln!(s, "# n={n}: {}", perms.len());
                for p in perms {
                    let _ = writeln!(s, "{p}");
                }
            }
            s
        }
        Format::Csv | Format::Md => {
            let rows: Vec<Vec<String>> = lists
                .iter()
                .flat_map(|(n, perms)| {
                    perms
                        .iter()
                        .map(move |p| vec![n.to_string(), p.to_string()])
                })
                .collect();
            if format == Format::Csv {
                csv_table(&["n", "permutation"], &rows)?
            } else {
                format!("{}\n\n", header(t)) + &md_table(&["n", "permutation"], &rows)
            }
        }
    };
    Ok(Output::clean(text))
}

fn gf(a: &GfArgs, format: Format) -> Result<Output> {
    let t = &a.target;
    let tau = t.tau.as_ref().context("gf needs --tau")?;
    let gf = generating_function(&t.avoid, tau)?;
    let expansion = a.expand.map(|n| gf.expand(n)).transpose()?;
    let text = match format {
        Format::Json => {
            let mut v = json!({ "num": gf.num(), "den": gf.den() });
            if let Some(e) = &expansion {
                v["expansion"] = Value::Array(e.iter().map(big).collect());
            }
            json_text(&v)
        }
        Format::Text => {
            let mut s = format!("{}\nF(x) = {gf}\n", header(t));
            if let Some(e) = &expansion {
                let terms: Vec<String> = e.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(s, "expansion: {}", terms.join(", "));
            }
            s
        }
        Format::Csv | Format::Md => {
            let rows: Vec<Vec<String>> = expansion
                .unwrap_or_default()
                .iter()
                .enumerate()
                .map(|(n, c)| vec![n.to_string(), c.to_string()])
                .collect();
            if format == Format::Csv {
                csv_table(&["n", "coefficient"], &rows)?
            } else {
                format!("{}\n\nF(x) = {gf}\n\n", header(t))
                    + &md_table(&["n", "coefficient"], &rows)
            }
        }
    };
    Ok(Output::clean(text))
}

fn classify(a: &ClassifyArgs, format: Format) -> Result<Output> {
    if a.strict && a.verify_to.is_none() {
        bail!("--strict reports discrepancies found by --verify-to N");
    }
    let t = &a.target;
    let tau = t.tau.as_ref().context("classify needs --tau")?;
    let reduction = reduce_to_canonical(&t.avoid, tau)?;
    let mut spec = formula_for(&t.avoid, tau)?;
    if let Some(n_max) = a.verify_to {
        spec.verify(n_max, |n| count_avoiders(n, &t.avoid, Some(tau)))?;
    }
    let discrepancy = a.strict && spec.status.is_discrepant();
    let fields = [
        ("case", reduction.case.name()),
        ("symmetry", reduction.symmetry.to_string()),
        ("image", format!("({}, {})", reduction.set, reduction.tau)),
        ("formula", spec.describe()),
        ("validity_from", spec.validity_from.to_string()),
        ("provenance", spec.provenance.to_string()),
        ("status", spec.status.to_string()),
    ];
    let text = match format {
        Format::Json => json_text(&json!({
            "T": t.avoid,
            "tau": tau,
            "reduction": reduction,
            "formula": spec,
        })),
        Format::Text => {
            let mut s = header(t) + "\n";
            for (k, v) in &fields {
                let _ = writeln!(s, "{k}: {v}");
            }
            s
        }
        Format::Csv => {
            let mut headers = vec!["T", "tau"];
            headers.extend(fields.iter().map(|(k, _)| *k));
            let mut row = vec![t.avoid.to_strings().join(","), tau.to_string()];
            row.extend(fields.iter().map(|(_, v)| v.clone()));
            csv_table(&headers, &[row])?
        }
        Format::Md => {
            let rows: Vec<Vec<String>> = fields
                .iter()
                .map(|(k, v)| vec![k.to_string(), v.clone()])
                .collect();
            format!("{}\n\n", header(t)) + &md_table(&["field", "value"], &rows)
        }
    };
    Ok(Output { text, discrepancy })
}

fn verify(a: &VerifyArgs, format: Format) -> Result<Output> {
    if a.k_max < 3 {
        bail!("--k-max must be at least 3");
    }
    let cache = AvoiderCache::new();
    let report = verify_closed_forms(a.k_max, a.n_max, &cache)?;
    let discrepant = report.discrepancies().count();
    let registries: Vec<(usize, Vec<_>)> = (3..=a.k_max).map(|k| (k, report.registry(k))).collect();
    let text = match format {
        Format::Json => {
            let registry: Vec<Value> = registries
                .iter()
                .map(|(k, orbits)| json!({ "k": k, "orbits": orbits }))
                .collect();
            json_text(&json!({
                "k_max": report.k_max,
                "n_max": report.n_max,
                "entries": report.entries,
                "registry": registry,
            }))
        }
        Format::Text => {
            let mut s = format!(
                "checked {} closed forms (3 ≤ k ≤ {}, n ≤ {}): {} verified, {} discrepant\n",
                report.entries.len(),
                a.k_max,
                a.n_max,
                report.entries.len() - discrepant,
                discrepant
            );
            for (k, orbits) in &registries {
                let _ = writeln!(s, "k={k}: {} discrepant orbits", orbits.len());
                for o in orbits {
                    let _ = writeln!(
                        s,
                        "  {}  first at n={}: formula {}, enumeration {}  ({} pairs)",
                        o.rep, o.n, o.printed, o.oracle, o.orbit_size
                    );
                }
            }
            s
        }
        Format::Md => {
            let rows: Vec<Vec<String>> = registries
                .iter()
                .flat_map(|(k, orbits)| {
                    orbits.iter().map(move |o| {
                        vec![
                            k.to_string(),
                            o.rep.to_string(),
                            o.n.to_string(),
                            o.printed.to_string(),
                            o.oracle.to_string(),
                            o.orbit_size.to_string(),
                        ]
                    })
                })
                .collect();
            md_table(
                &[
                    "k",
                    "orbit representative",
                    "n",
                    "formula",
                    "enumeration",
                    "orbit size",
                ],
                &rows,
            )
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .entries
                .iter()
                .map(|e| {
                    vec![
                        e.pair.set.to_strings().join(","),
                        e.pair.tau.to_string(),
                        e.pair.tau.len().to_string(),
                        e.formula.describe(),
                        e.formula.status.to_string(),
                    ]
                })
                .collect();
            csv_table(&["T", "tau", "k", "formula", "status"], &rows)?
        }
    };
    Ok(Output {
        text,
        discrepancy: a.strict && discrepant > 0,
    })
}

fn expected_for(class: &WilfClass) -> Vec<&'static ExpectedRow> {
    expected_rows()
        .iter()
        .filter(|r| class.members.contains(&r.rep))
        .collect()
}

fn class_status(class: &WilfClass) -> String {
    match expected_for(class).as_slice() {
        [] => "not in table".into(),
        [row] if row.size == class.size && row.catalog == class.formula => "matches".into(),
        [row] if row.size != class.size => format!("table |C| = {}", row.size),
        [row] => format!("table formula {}", row.catalog),
        many => format!("merges {} table rows", many.len()),
    }
}

fn describe_diff(d: &TableDiff) -> String {
    match d {
        TableDiff::Merged { rows, class_rep } => {
            let names: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
            format!("rows {} fall into one class {class_rep}", names.join(", "))
        }
        TableDiff::SizeMismatch {
            row,
            expected,
            actual,
            composition,
            ..
        } => {
            let parts: Vec<String> = composition
                .iter()
                .map(|c| {
                    format!(
                        "{} with |T|={}{} (e.g. {})",
                        c.pairs,
                        c.set_size,
                        if c.tau_contains_member {
                            ", τ containing a member of T"
                        } else {
                            ""
                        },
                        c.witness
                    )
                })
                .collect();
            format!(
                "class of {row}: table |C| = {expected}, computed {actual}: {}",
                parts.join("; ")
            )
        }
        TableDiff::FormulaMismatch {
            row,
            expected,
            matched,
        } => format!("class of {row}: table formula {expected}, vector matches {matched}"),
        TableDiff::Unlisted {
            class_rep,
            size,
            formula,
            ..
        } => format!("class {class_rep} ({size} pairs, {formula}) has no table row"),
    }
}

fn wilf_table(a: &WilfTableArgs, format: Format) -> Result<Output> {
    let cache = AvoiderCache::new();
    let report = table_s3_s4((a.window.0, a.window.1), &cache)?;
    let rows: Vec<Vec<String>> = report
        .classes
        .iter()
        .map(|c| {
            vec![
                c.rep.to_string(),
                c.size.to_string(),
                c.formula.to_string(),
                class_status(c),
            ]
        })
        .collect();
    let summary = format!(
        "{} classes, {} pairs, window {}:{}",
        report.classes.len(),
        report.total_size(),
        a.window.0,
        a.window.1
    );
    let text = match format {
        Format::Json => json_text(&serde_json::to_value(&report)?),
        Format::Text => {
            let mut s = summary + "\n";
            for r in &rows {
                let _ = writeln!(s, "{}  |C|={}  {}  [{}]", r[0], r[1], r[2], r[3]);
            }
            if report.table_diff.is_empty() {
                s.push_str("table: reproduced exactly\n");
            }
            for d in &report.table_diff {
                let _ = writeln!(s, "diff: {}", describe_diff(d));
            }
            s
        }
        Format::Md => {
            let mut s = md_table(&["class representative", "|C|", "formula", "status"], &rows);
            let _ = writeln!(s, "\n{summary}");
            for d in &report.table_diff {
                let _ = writeln!(s, "\n- {}", describe_diff(d));
            }
            s
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .classes
                .iter()
                .map(|c| {
                    let expected = expected_for(c);
                    vec![
                        c.rep.set.to_strings().join(","),
                        c.rep.tau.to_string(),
                        c.size.to_string(),
                        expected
                            .first()
                            .map(|r| r.size.to_string())
                            .unwrap_or_default(),
                        c.formula.to_string(),
                    ]
                })
                .collect();
            csv_table(&["T", "tau", "size", "table_size", "formula"], &rows)?
        }
    };
    Ok(Output::clean(text))
}
