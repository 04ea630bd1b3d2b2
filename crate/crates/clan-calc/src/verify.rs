//! Exhaustive verification sweeps over all clan shapes up to a size bound.
//!
//! Each driver walks every `(p, q)` split with `p + q <= max_n`, runs one of
//! the geometric checks on every clan (or clan/permutation pair), and
//! returns one labeled pass/fail line per subject. Shapes are processed in
//! parallel; within a shape the order is canonical, so reports are
//! deterministic regardless of thread count.

use rayon::prelude::*;

use crate::clan::Clan;
use crate::geometry::{
    smoothness_report, theorem_a_check, theorem_b_check, theorem_c_check,
};
use crate::perm::Permutation;
use crate::schubert::{upsilon_walk, LocCache, SchubertCache, UpsilonCache};

/// One labeled check outcome.
#[derive(Clone, Debug)]
pub struct CheckLine {
    pub label: String,
    pub pass: bool,
    pub detail: Option<String>,
}

impl CheckLine {
    fn pass_line(label: String) -> CheckLine {
        CheckLine { label, pass: true, detail: None }
    }

    fn fail_line(label: String, detail: String) -> CheckLine {
        CheckLine { label, pass: false, detail: Some(detail) }
    }
}

/// A named sweep with its per-subject outcomes.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub name: String,
    pub lines: Vec<CheckLine>,
}

impl SweepReport {
    pub fn pass(&self) -> bool {
        self.lines.iter().all(|line| line.pass)
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|line| !line.pass).count()
    }

    /// One-line summary, e.g. `localization sweep: 403/403 pass`.
    pub fn summary(&self) -> String {
        let total = self.lines.len();
        format!("{}: {}/{} pass", self.name, total - self.failures(), total)
    }
}

/// All `(p, q)` splits with `2 <= p + q <= max_n`, in size order.
pub fn shapes_up_to(max_n: usize) -> Vec<(usize, usize)> {
    let mut shapes = Vec::new();
    for n in 2..=max_n {
        for p in 1..n {
            shapes.push((p, n - p));
        }
    }
    shapes
}

fn run_shapes(
    name: &str,
    max_n: usize,
    per_shape: impl Fn(usize, usize) -> Vec<CheckLine> + Sync,
) -> SweepReport {
    let lines: Vec<CheckLine> = shapes_up_to(max_n)
        .into_par_iter()
        .map(|(p, q)| per_shape(p, q))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    SweepReport { name: name.to_string(), lines }
}

/// Checks the localization closed form on every clan up to `max_n`.
pub fn verify_theorem_a(max_n: usize) -> SweepReport {
    run_shapes("localization closed form", max_n, |p, q| {
        let n = p + q;
        let mut schubert = SchubertCache::new(n);
        let mut rows: Vec<(Clan, CheckLine)> = Vec::new();
        upsilon_walk(p, q, &mut schubert, false, |clan, poly| {
            let outcome = theorem_a_check(clan, poly);
            let label = format!("({p},{q}) {clan}");
            let line = if outcome.pass {
                CheckLine::pass_line(label)
            } else {
                CheckLine::fail_line(
                    label,
                    format!("localized {} but closed form {}", outcome.lhs, outcome.rhs),
                )
            };
            rows.push((clan.clone(), line));
        });
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        rows.into_iter().map(|(_, line)| line).collect()
    })
}

/// Compares the three coefficient routes on every clan up to `max_n`.
pub fn verify_theorem_b(max_n: usize) -> SweepReport {
    run_shapes("expansion coefficient rule", max_n, |p, q| {
        let n = p + q;
        let mut schubert = SchubertCache::new(n);
        let upsilons = UpsilonCache::build(p, q, &mut schubert, false);
        let mut loc = LocCache::new(n);
        Clan::enumerate(p, q)
            .iter()
            .map(|clan| {
                let label = format!("({p},{q}) {clan}");
                match theorem_b_check(clan, &upsilons, &mut schubert, &mut loc) {
                    Ok(outcome) if outcome.pass => CheckLine::pass_line(label),
                    Ok(outcome) => {
                        let mut reasons = Vec::new();
                        if outcome.rule != outcome.expansion {
                            reasons.push("rule differs from interpolation");
                        }
                        if outcome.rule != outcome.proof {
                            reasons.push("rule differs from localization route");
                        }
                        if !outcome.y_zero_ok {
                            reasons.push("coefficients at y=0 are not 0/1 on rainbow transports");
                        }
                        CheckLine::fail_line(label, reasons.join("; "))
                    }
                    Err(err) => CheckLine::fail_line(label, err.to_string()),
                }
            })
            .collect()
    })
}

/// Compares product coefficients against the transport rule for every
/// non-crossing clan up to `max_n` and every permutation of its rank.
/// One line per clan; failing permutations are listed in the detail.
pub fn verify_theorem_c(max_n: usize) -> SweepReport {
    run_shapes("product coefficient rule", max_n, |p, q| {
        let n = p + q;
        let mut schubert = SchubertCache::new(n);
        let mut loc = LocCache::new(n);
        let perms = Permutation::all(n);
        Clan::enumerate(p, q)
            .iter()
            .filter(|clan| clan.is_noncrossing())
            .map(|clan| {
                let label = format!("({p},{q}) {clan} x {} perms", perms.len());
                let mut failing: Vec<String> = Vec::new();
                for v in &perms {
                    match theorem_c_check(clan, v, &mut schubert, &mut loc) {
                        Ok(outcome) if outcome.pass => {}
                        Ok(_) => failing.push(v.to_string()),
                        Err(err) => failing.push(format!("{v}: {err}")),
                    }
                }
                if failing.is_empty() {
                    CheckLine::pass_line(label)
                } else {
                    CheckLine::fail_line(label, format!("failing v: {}", failing.join("; ")))
                }
            })
            .collect()
    })
}

/// Checks the smoothness three-way equivalence on every clan up to `max_n`.
pub fn verify_theorem_d(max_n: usize) -> SweepReport {
    run_shapes("smoothness dichotomy", max_n, |p, q| {
        let n = p + q;
        let mut schubert = SchubertCache::new(n);
        let mut rows: Vec<(Clan, CheckLine)> = Vec::new();
        upsilon_walk(p, q, &mut schubert, false, |clan, poly| {
            let report = smoothness_report(clan, poly);
            let label = format!("({p},{q}) {clan}");
            let line = if report.consistent() {
                CheckLine::pass_line(label)
            } else {
                CheckLine::fail_line(
                    label,
                    format!(
                        "unique_bpd={} avoids_patterns={} localization_matches_product={}",
                        report.unique_bpd,
                        report.avoids_patterns,
                        report.localization_matches_product
                    ),
                )
            };
            rows.push((clan.clone(), line));
        });
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        rows.into_iter().map(|(_, line)| line).collect()
    })
}

/// Checks that droop-closure enumeration and brute-force tiling agree on
/// every clan up to `max_n`.
pub fn verify_oracle(max_n: usize) -> SweepReport {
    run_shapes("fragment enumeration oracle", max_n, |p, q| {
        Clan::enumerate(p, q)
            .iter()
            .map(|clan| {
                let label = format!("({p},{q}) {clan}");
                let mut droops = crate::bpd::BpdFragment::enumerate(clan);
                droops.sort();
                match crate::bpd::BpdFragment::enumerate_oracle(clan) {
                    Ok(tilings) if tilings == droops => CheckLine::pass_line(label),
                    Ok(tilings) => CheckLine::fail_line(
                        label,
                        format!("droop closure {} vs tilings {}", droops.len(), tilings.len()),
                    ),
                    Err(err) => CheckLine::fail_line(label, err.to_string()),
                }
            })
            .collect()
    })
}
