//! Human-readable and CSV renderings of tables, reports and maps.

use std::collections::BTreeMap;

use g2_core::exactfield::FieldElement;
use g2_core::liealg::{AuditReport, Element, GeneratorLabel, LieAlgebra};
use g2_core::rootsys::{ChainRecord, Root};

/// Generator naming for one table.
#[derive(Clone, Copy, Debug)]
pub struct Style {
    pub raise: &'static str,
    pub lower: &'static str,
    pub prime: bool,
}

impl Style {
    pub const INTEGER: Style = Style { raise: "X", lower: "Y", prime: false };
    pub const UNSCALED: Style = Style { raise: "E", lower: "F", prime: false };
    pub const CYCLIC: Style = Style { raise: "X", lower: "Y", prime: true };

    pub fn name(self, l: GeneratorLabel) -> String {
        let (letter, root) = match l {
            GeneratorLabel::Cartan(r) => ("H", r),
            GeneratorLabel::Raise(r) => (self.raise, r),
            GeneratorLabel::Lower(r) => (self.lower, r),
        };
        let prime = if self.prime { "′" } else { "" };
        format!("{letter}{prime}_{{{}}}", root.pretty())
    }
}

fn minus(s: String) -> String {
    s.replace('-', "−")
}

/// Coefficient in front of a generator: `3`, `(1/2)`, `(√6/2)`; the sign is
/// returned separately.
fn coefficient(c: &FieldElement) -> (bool, String) {
    let neg = c.leading_negative();
    let mag = if neg { -c } else { c.clone() };
    let text = if mag.is_one() {
        String::new()
    } else if mag.is_integer() {
        mag.to_string()
    } else {
        format!("({mag})")
    };
    (neg, minus(text))
}

fn join_terms(terms: impl IntoIterator<Item = (FieldElement, String)>) -> String {
    let mut out = String::new();
    for (i, (c, name)) in terms.into_iter().enumerate() {
        let (neg, coeff) = coefficient(&c);
        match (i, neg) {
            (0, true) => out.push('−'),
            (0, false) => {}
            (_, true) => out.push_str(" − "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&coeff);
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Cartan-valued results are named by the root whose `H_γ` they are a
/// multiple of, when there is one.
pub fn cell(alg: &LieAlgebra, style: Style, e: &Element) -> String {
    if !e.is_zero() && e.terms().all(|(l, _)| l.is_cartan()) {
        for &gamma in alg.root_system().positive_roots() {
            let Ok(h) = alg.cartan_element(gamma) else { continue };
            let Some((l, c)) = h.terms().next() else { continue };
            let ratio = match e.coeff(l).checked_div(c) {
                Ok(r) => r,
                Err(_) => continue,
            };
            if !ratio.is_zero() && h.scale(&ratio) == *e {
                return join_terms([(ratio, style.name(GeneratorLabel::Cartan(gamma)))]);
            }
        }
    }
    join_terms(e.terms().map(|(l, c)| (c.clone(), style.name(l))))
}

/// Upper-triangular layout: Cartan rows first, diagonal `0`.
pub fn table_markdown(alg: &LieAlgebra, style: Style) -> String {
    let basis = alg.basis();
    let mut out = String::from("| [·,·] |");
    for &l in basis {
        out.push_str(&format!(" {} |", style.name(l)));
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(basis.len()));
    out.push('\n');
    for (i, &x) in basis.iter().enumerate() {
        out.push_str(&format!("| {} |", style.name(x)));
        for (j, &y) in basis.iter().enumerate() {
            let text = match j.cmp(&i) {
                std::cmp::Ordering::Less => String::new(),
                std::cmp::Ordering::Equal => "0".into(),
                std::cmp::Ordering::Greater => cell(alg, style, alg.bracket_basis(x, y).expect("basis label")),
            };
            out.push_str(&format!(" {text} |"));
        }
        out.push('\n');
    }
    out
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is UTF-8")
}

/// One row per unordered basis pair.
pub fn table_csv(alg: &LieAlgebra) -> String {
    let basis = alg.basis();
    let mut rows = Vec::new();
    for (i, &x) in basis.iter().enumerate() {
        for &y in &basis[i + 1..] {
            rows.push(vec![x.to_string(), y.to_string(), alg.bracket_basis(x, y).expect("basis label").to_string()]);
        }
    }
    csv_string(&["x", "y", "result"], rows)
}

pub fn roots_markdown(roots: &[Root]) -> String {
    let mut out = String::from("| # | root | coefficients | height |\n|---|---|---|---|\n");
    for (i, r) in roots.iter().enumerate() {
        out.push_str(&format!("| {} | {} | {} | {} |\n", i + 1, r.pretty(), r, r.height()));
    }
    out
}

pub fn roots_csv(roots: &[Root]) -> String {
    csv_string(&["m1", "m2", "height"], roots.iter().map(|r| vec![r.m1.to_string(), r.m2.to_string(), r.height().to_string()]))
}

pub fn chains_markdown(chains: &[ChainRecord]) -> String {
    let mut out = String::from("| β | α | p | q |\n|---|---|---|---|\n");
    for c in chains {
        out.push_str(&format!("| {} | {} | {} | {} |\n", c.beta.pretty(), c.alpha.pretty(), c.p, c.q));
    }
    out
}

pub fn chains_csv(chains: &[ChainRecord]) -> String {
    csv_string(
        &["beta", "alpha", "p", "q"],
        chains.iter().map(|c| vec![c.beta.to_string(), c.alpha.to_string(), c.p.to_string(), c.q.to_string()]),
    )
}

/// Two-column listing for rescalings, normalizations and maps.
pub fn pairs_markdown(head: [&str; 2], rows: &[(String, FieldElement)]) -> String {
    let mut out = format!("| {} | {} |\n|---|---|\n", head[0], head[1]);
    for (k, v) in rows {
        out.push_str(&format!("| {k} | {} |\n", minus(v.to_string())));
    }
    out
}

pub fn pairs_csv(head: [&str; 2], rows: &[(String, FieldElement)]) -> String {
    csv_string(&head, rows.iter().map(|(k, v)| vec![k.clone(), v.to_string()]))
}

pub fn report_markdown(reports: &BTreeMap<String, AuditReport>) -> String {
    let mut out = String::new();
    for (name, rep) in reports {
        out.push_str(&format!("## {name}\n\n| identity | instance | lhs | rhs | pass |\n|---|---|---|---|---|\n"));
        for c in &rep.checks {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                c.identity,
                c.instance,
                minus(c.lhs.to_string()),
                minus(c.rhs.to_string()),
                if c.pass { "pass" } else { "FAIL" }
            ));
        }
        out.push_str(&format!("\nsummary: {}\n\n", rep.summary()));
    }
    out
}

pub fn report_csv(reports: &BTreeMap<String, AuditReport>) -> String {
    let rows = reports.iter().flat_map(|(name, rep)| {
        rep.checks.iter().map(move |c| {
            vec![name.clone(), c.identity.clone(), c.instance.clone(), c.lhs.to_string(), c.rhs.to_string(), c.pass.to_string()]
        })
    });
    csv_string(&["check", "identity", "instance", "lhs", "rhs", "pass"], rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients() {
        let e = |c: FieldElement| join_terms([(c, "X".to_string())]);
        assert_eq!(e(FieldElement::from_int(-3)), "−3X");
        assert_eq!(e(FieldElement::frac(1, 2)), "(1/2)X");
        assert_eq!(e(FieldElement::frac(-1, 2)), "−(1/2)X");
        assert_eq!(e(FieldElement::one()), "X");
        assert_eq!(e(FieldElement::sqrt6().scale(&g2_core::exactfield::Rational::frac(1, 2))), "(√6/2)X");
    }

    #[test]
    fn names() {
        let l: GeneratorLabel = "F[2,3]".parse().unwrap();
        assert_eq!(Style::CYCLIC.name(l), "Y′_{2α₁+3α₂}");
        assert_eq!(Style::INTEGER.name("H[0,1]".parse().unwrap()), "H_{α₂}");
    }
}
