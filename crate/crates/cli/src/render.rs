use std::fmt::Write;
use std::io::IsTerminal;

use crate::record::{DescribeRecord, PairingRecord, VerifyReport};

#[derive(Clone, Copy, Debug)]
pub struct Style {
    ansi: bool,
}

impl Style {
    /// ANSI colors on a terminal unless `NO_COLOR` is set to a non-empty value.
    pub fn from_env() -> Self {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Style {
            ansi: !no_color && std::io::stdout().is_terminal(),
        }
    }

    fn paint(self, code: &str, text: &str) -> String {
        if self.ansi {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    fn pass(self) -> String {
        self.paint("32", "pass")
    }

    fn fail(self) -> String {
        self.paint("31", "FAIL")
    }
}

fn group(factors: &[u64], names: &[String]) -> String {
    if factors.is_empty() {
        return "0".to_string();
    }
    if factors.len() == names.len() {
        let parts: Vec<String> = factors
            .iter()
            .zip(names)
            .map(|(d, g)| format!("Z/{d}<{g}>"))
            .collect();
        return parts.join(" + ");
    }
    let parts: Vec<String> = factors.iter().map(|d| format!("Z/{d}")).collect();
    parts.join(" + ")
}

fn table(out: &mut String, names: &[String], values: &[Vec<String>]) {
    let width = names
        .iter()
        .chain(values.iter().flatten())
        .map(String::len)
        .max()
        .unwrap_or(0);
    let _ = write!(out, "  {:width$}", "");
    for n in names {
        let _ = write!(out, "  {n:>width$}");
    }
    out.push('\n');
    for (n, row) in names.iter().zip(values) {
        let _ = write!(out, "  {n:>width$}");
        for v in row {
            let _ = write!(out, "  {v:>width$}");
        }
        out.push('\n');
    }
}

fn list(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn describe(r: &DescribeRecord) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type        {}", r.type_label);
    let _ = writeln!(out, "rank        {}", r.rank);
    let _ = writeln!(out, "roots       {}", r.root_count);
    let _ = writeln!(out, "cartan");
    for row in &r.cartan {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
        let _ = writeln!(out, "  [{}]", cells.join(" "));
    }
    let _ = writeln!(out, "Delta       {}", group(&r.delta, &r.delta_generators));
    let _ = writeln!(out, "Delta_dual  {}", group(&r.delta_dual, &r.delta_dual_generators));
    let _ = writeln!(out, "rho         {} (kernel {})", r.rho_class, group(&r.rho_kernel, &[]));
    for (g, col) in r.delta_dual_generators.iter().enumerate() {
        let image: Vec<String> = r
            .rho
            .iter()
            .zip(&r.delta_generators)
            .filter(|(row, _)| row[g] != 0)
            .map(|(row, h)| if row[g] == 1 { h.clone() } else { format!("{}{h}", row[g]) })
            .collect();
        let image = if image.is_empty() { "0".to_string() } else { image.join(" + ") };
        let _ = writeln!(out, "  rho({col}) = {image}");
    }
    if r.pairing.is_empty() {
        let _ = writeln!(out, "pairing     (trivial)");
    } else {
        let _ = writeln!(out, "pairing");
        table(&mut out, &r.delta_dual_generators, &r.pairing);
    }
    let _ = writeln!(out, "pi_r        {}", list(&r.pi_r));
    let _ = writeln!(out, "pi_prime    {}", list(&r.pi_prime));
    for c in &r.components {
        let _ = writeln!(out, "  {} on nodes {} with d = {}", c.type_label, list(&c.nodes), c.d);
    }
    out
}

pub fn pairing(r: &PairingRecord) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}: Delta_dual x Delta_dual -> Q/Z", r.type_label);
    if r.values.is_empty() {
        let _ = writeln!(out, "  (trivial)");
    } else {
        table(&mut out, &r.generators, &r.values);
    }
    out
}

pub fn verify(r: &VerifyReport, style: Style) -> String {
    let mut out = String::new();
    let mut labels: Vec<&str> = Vec::new();
    for c in &r.checks {
        if labels.last() != Some(&c.type_label.as_str()) {
            labels.push(&c.type_label);
        }
    }
    for label in labels {
        let checks: Vec<_> = r.checks.iter().filter(|c| c.type_label == label).collect();
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        let tag = if failed.is_empty() { style.pass() } else { style.fail() };
        let _ = writeln!(out, "{tag} {label:<4} {} checks", checks.len());
        for c in failed {
            let _ = writeln!(
                out,
                "     {}: {}",
                c.check,
                c.witness.as_deref().unwrap_or("no witness")
            );
        }
    }
    let failures = r.checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(
        out,
        "{} scope {}, max rank {}: {} types, {} checks, {} failed",
        if r.passed { style.pass() } else { style.fail() },
        r.scope,
        r.max_rank,
        r.types_checked,
        r.checks.len(),
        failures
    );
    out
}
