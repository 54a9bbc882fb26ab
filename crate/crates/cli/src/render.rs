//! Plain-text tables. Every renderer returns a string ending in a newline.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use zkring_core::checklist::Checklist;
use zkring_core::classify::{ModelReport, ObstructionReport, Verdict};
use zkring_core::hochster::BigradedBetti;
use zkring_core::hochster::ZkBetti;
use zkring_core::{GroupData, HomologySummary, SimplicialComplex};

pub fn group(g: &GroupData) -> String {
    let mut parts = Vec::new();
    match g.rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    parts.extend(g.torsion.iter().map(|t| format!("Z/{t}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn torsion(g: &GroupData) -> String {
    if g.torsion.is_empty() {
        "-".into()
    } else {
        g.torsion.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }
}

pub fn simplicial(k: &SimplicialComplex, homology: &HomologySummary, cohomology: &HomologySummary) -> String {
    let mut out = String::new();
    let f: Vec<String> = k.f_vector().iter().map(usize::to_string).collect();
    writeln!(out, "m = {}, dim = {}, f-vector ({})", k.m(), k.dim(), f.join(", ")).unwrap();
    writeln!(out, "reduced homology").unwrap();
    for (d, g) in homology.nonzero() {
        writeln!(out, "  H_{d} = {}", group(g)).unwrap();
    }
    writeln!(out, "reduced cohomology").unwrap();
    for (d, g) in cohomology.nonzero() {
        writeln!(out, "  H^{d} = {}", group(g)).unwrap();
    }
    out
}

pub fn totals(k: &SimplicialComplex, method: &str, betti: &ZkBetti) -> String {
    let mut out = String::new();
    writeln!(out, "H*(Z_K; Z), m = {}, dim K = {}, method {method}", k.m(), k.dim()).unwrap();
    writeln!(out, "{:>4}  {:>6}  torsion", "p", "rank").unwrap();
    for (p, g) in betti.iter() {
        writeln!(out, "{p:>4}  {:>6}  {}", g.rank, torsion(g)).unwrap();
    }
    out
}

pub fn hochster_entries(b: &BigradedBetti) -> String {
    let mut out = String::new();
    writeln!(out, "{:<24}  {:>3}  {:>4}  {:>6}  torsion", "J", "d", "p", "rank").unwrap();
    for e in b.entries() {
        writeln!(
            out,
            "{:<24}  {:>3}  {:>4}  {:>6}  {}",
            e.j.to_string(),
            e.d,
            e.degree(),
            e.group.rank,
            torsion(&e.group)
        )
        .unwrap();
    }
    out
}

pub fn bidegrees(table: &BTreeMap<(isize, usize), GroupData>) -> String {
    let mut out = String::new();
    writeln!(out, "{:>4}  {:>4}  {:>6}  torsion", "-i", "2j", "rank").unwrap();
    for ((i, j), g) in table.iter().filter(|(_, g)| !g.is_zero()) {
        writeln!(out, "{i:>4}  {j:>4}  {:>6}  {}", g.rank, torsion(g)).unwrap();
    }
    out
}

fn mark(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn obstructions(r: &ObstructionReport) -> String {
    let mut out = String::new();
    writeln!(out, "sphere dimension {}", r.dim).unwrap();
    for c in &r.checks {
        let verdict = match c.verdict {
            Verdict::Pass => "pass",
            Verdict::Obstruction => "obstruction",
            Verdict::Inapplicable => "inapplicable",
        };
        writeln!(out, "{}  {verdict:<12}  {}", c.id, c.detail).unwrap();
        for w in &c.witnesses {
            let w: Vec<String> = w.iter().map(usize::to_string).collect();
            writeln!(out, "      witness ({})", w.join(",")).unwrap();
        }
    }
    writeln!(out, "degree-0 classes: {}", r.degree_zero_classes).unwrap();
    writeln!(out, "verdict: {}", if r.obstructed() { "obstructed" } else { "no obstruction found" }).unwrap();
    out
}

pub fn model(r: &ModelReport) -> String {
    let mut out = String::new();
    writeln!(out, "model {}", r.model).unwrap();
    for c in &r.checks {
        writeln!(out, "[{}] {}: {}", mark(c.passed), c.name, c.detail).unwrap();
    }
    writeln!(out, "verdict: {}", if r.consistent() { "consistent" } else { "inconsistent" }).unwrap();
    out
}

pub fn checklist(c: &Checklist) -> String {
    let mut out = String::new();
    for i in &c.items {
        if i.detail.is_empty() {
            writeln!(out, "[{}] {}", mark(i.passed), i.name).unwrap();
        } else {
            writeln!(out, "[{}] {}: {}", mark(i.passed), i.name, i.detail).unwrap();
        }
    }
    let passed = c.items.iter().filter(|i| i.passed).count();
    writeln!(out, "{passed}/{} checks passed", c.items.len()).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_names() {
        assert_eq!(group(&GroupData::default()), "0");
        assert_eq!(group(&GroupData::free(1)), "Z");
        assert_eq!(group(&GroupData { rank: 2, torsion: vec![2, 4] }), "Z^2 + Z/2 + Z/4");
        assert_eq!(group(&GroupData { rank: 0, torsion: vec![3] }), "Z/3");
    }
}
