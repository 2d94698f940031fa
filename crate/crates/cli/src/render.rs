//! Plain-text rendering of a report.

use std::fmt::Write;

use crate::report::{Check, ReportDocument};

struct Style {
    color: bool,
}

impl Style {
    fn header(&self, s: &str) -> String {
        if self.color {
            format!("\x1b[1m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    fn verdict(&self, ok: bool) -> String {
        let word = if ok { "ok" } else { "FAILED" };
        match (self.color, ok) {
            (false, _) => word.to_string(),
            (true, true) => format!("\x1b[32m{word}\x1b[0m"),
            (true, false) => format!("\x1b[31m{word}\x1b[0m"),
        }
    }
}

/// Left-aligned columns separated by two spaces.
fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().enumerate().map(|(c, s)| format!("{s:<w$}", w = widths[c])).collect();
        out.push_str("  ");
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn checks(out: &mut String, style: &Style, title: &str, items: &[Check]) {
    if items.is_empty() {
        return;
    }
    let _ = writeln!(out, "{}", style.header(title));
    for c in items {
        let _ = writeln!(out, "  [{}] {}: {}", style.verdict(c.holds), c.name, c.detail);
    }
}

pub fn render_table(r: &ReportDocument, color: bool) -> String {
    let style = Style { color };
    let mut out = String::new();
    let _ = writeln!(out, "{}", style.header(&format!("mode: {}", r.mode)));
    if !r.invariants.is_empty() {
        let rows: Vec<Vec<String>> = r.invariants.iter().map(|v| vec![v.name.clone(), v.value.clone()]).collect();
        out.push_str(&grid(&rows));
    }
    if !r.classes.is_empty() {
        let _ = writeln!(out, "{}", style.header("eigenvalue classes"));
        let mut rows = vec![vec!["class".into(), "phi(c)".into(), "c|d".into(), "c|e".into()]];
        for c in &r.classes {
            rows.push(vec![
                c.class.clone(),
                c.phi.clone().unwrap_or_else(|| "-".into()),
                c.divides_d.to_string(),
                c.divides_e.map_or_else(|| "-".into(), |b| b.to_string()),
            ]);
        }
        out.push_str(&grid(&rows));
    }
    if let Some(b) = &r.betti {
        let _ = writeln!(out, "{}", style.header("Betti numbers b^j of H^j(F_x) per class"));
        let mut rows = vec![std::iter::once("class".to_string())
            .chain(b.degrees.iter().map(|j| format!("j={j}")))
            .collect::<Vec<_>>()];
        for row in &b.rows {
            let cells = row.ranks.iter().zip(&row.semisimple).map(|(rank, ss)| {
                if *ss || rank == "undetermined" {
                    rank.clone()
                } else {
                    format!("{rank} (ns?)")
                }
            });
            rows.push(std::iter::once(row.class.clone()).chain(cells).collect());
        }
        if let Some(t) = &b.totals {
            rows.push(std::iter::once("total".to_string()).chain(t.iter().cloned()).collect());
        }
        out.push_str(&grid(&rows));
        for row in &b.rows {
            let types: Vec<&str> = row.hodge.iter().flatten().map(String::as_str).collect();
            if !types.is_empty() {
                let _ = writeln!(out, "  {}: pure of Hodge type {}", row.class, types.join(" "));
            }
        }
        if b.rows.iter().any(|row| row.semisimple.iter().zip(&row.ranks).any(|(s, r)| !s && r != "undetermined")) {
            let _ = writeln!(out, "  (ns?) semisimplicity not asserted in that degree");
        }
    }
    if !r.char_polys.is_empty() {
        let _ = writeln!(out, "{}", style.header("det(1 - tT | H^j)"));
        let rows: Vec<Vec<String>> =
            r.char_polys.iter().map(|p| vec![format!("j={}", p.degree), p.product.clone()]).collect();
        out.push_str(&grid(&rows));
    }
    if let Some(z) = &r.zeta {
        let _ = writeln!(out, "{}", style.header("zeta function"));
        let _ = writeln!(out, "  {}", z.convention);
        let _ = writeln!(out, "  zeta(t) = {}  (expected {})", z.value, z.expected);
    }
    if let Some(j) = &r.jordan {
        let _ = writeln!(out, "{}", style.header(&format!("non-semisimplicity test at order c={}", j.target_order)));
        let _ = writeln!(out, "  J(lambda) = {{{}}}", j.eigen_set.join(", "));
        for s in &j.strata_sets {
            let _ = writeln!(out, "  J({},{}) = {{{}}}", s.a, s.b, s.j.join(", "));
            let _ = writeln!(out, "  J_0({},{}) = {{{}}}", s.a, s.b, s.j0.join(", "));
        }
        match &j.witness {
            Some(w) => {
                let _ = writeln!(out, "  witness u:");
                let rows: Vec<Vec<String>> = w
                    .iter()
                    .map(|e| vec![e.stratum.clone(), e.index_set.clone(), e.values.join(" ")])
                    .collect();
                out.push_str(&grid(&rows));
            }
            None => {
                let _ = writeln!(out, "  witness u: none");
            }
        }
        let _ = writeln!(out, "  verdict: {} ({})", j.verdict, j.caveat);
    }
    if let Some(rc) = &r.rank_check {
        let _ = writeln!(out, "{}", style.header(&format!("rank consistency (n={})", rc.n)));
        let _ = writeln!(out, "  implied dim K_x = {}", rc.implied_k_x);
        for f in &rc.failures {
            let _ = writeln!(out, "  failure at degree {}: {}", f.degree, f.detail);
        }
        let _ = writeln!(out, "  [{}]", style.verdict(rc.passed));
    }
    checks(&mut out, &style, "Euler identities", &r.euler_checks);
    checks(&mut out, &style, "oracle cross-checks", &r.oracles);
    if !r.warnings.is_empty() {
        let _ = writeln!(out, "{}", style.header("warnings"));
        for w in &r.warnings {
            let _ = writeln!(out, "  {w}");
        }
    }
    out
}
