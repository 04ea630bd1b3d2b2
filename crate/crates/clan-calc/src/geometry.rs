//! Localization identities, Schubert-basis coefficients, torus-stable
//! curves, and the smoothness dichotomy.
//!
//! Four families of checks live here, all exact:
//!
//! * the localization of a representative at its minimal support point
//!   against the clan polynomial times the complement product;
//! * the Schubert expansion of a representative against the transport rule
//!   along the 0-Hecke action (three independent routes);
//! * coefficients of products of two Schubert polynomials for non-crossing
//!   clans, computed by interpolation over a Bruhat lower ideal;
//! * the equivalence of fragment uniqueness, pattern avoidance, and the
//!   curve-weight product criterion for smoothness at the minimal point.

use serde::Serialize;

use crate::bpd::{clan_polynomial, BpdFragment};
use crate::clan::Clan;
use crate::perm::Permutation;
use crate::poly::Polynomial;
use crate::schubert::{
    expand_in_schubert, product_coefficient, ExpandError, ExpansionTable, LocCache,
    SchubertCache, UpsilonCache,
};

/// Errors from the geometric checks.
#[derive(Debug, thiserror::Error)]
pub enum GeometryError {
    #[error("clan {0} has crossing arcs; the product rule requires a non-crossing clan")]
    NotNoncrossing(Clan),
    #[error(transparent)]
    Expand(#[from] ExpandError),
}

// ---------------------------------------------------------------------------
// Localization at the minimal support point
// ---------------------------------------------------------------------------

/// The product `prod (y_{n-c+1} - y_r)` over the cells `(r, c)` of the
/// complement of the clan's Young diagram inside the `p x q` rectangle.
pub fn complement_product(clan: &Clan) -> Polynomial {
    let n = clan.n();
    let mut acc = Polynomial::one(n);
    for (r, c) in clan.young_diagram().complement() {
        acc = acc.mul(&Polynomial::y_minus_y(n, n - c + 1, r));
    }
    acc
}

/// The closed form for the localization at `v`: the clan polynomial in `y`
/// times the complement product.
pub fn theorem_a_rhs(clan: &Clan) -> Polynomial {
    clan_polynomial(clan).mul(&complement_product(clan))
}

/// Outcome of one localization identity check.
#[derive(Clone, Debug)]
pub struct TheoremA {
    pub clan: Clan,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub pass: bool,
}

/// Compares `upsilon |_{v}` with the closed form. `upsilon` must be the
/// representative of `clan`.
pub fn theorem_a_check(clan: &Clan, upsilon: &Polynomial) -> TheoremA {
    let (_, v) = clan.uv_perms();
    let lhs = upsilon.localize(&v);
    let rhs = theorem_a_rhs(clan);
    let pass = lhs == rhs;
    TheoremA { clan: clan.clone(), lhs, rhs, pass }
}

// ---------------------------------------------------------------------------
// Schubert expansion coefficients
// ---------------------------------------------------------------------------

/// Transports a clan along the 0-Hecke action of `w` (via its
/// lexicographically smallest reduced word, rightmost letter first) and
/// reports whether the clan length grew by exactly `length(w)`.
pub fn hecke_transport(clan: &Clan, w: &Permutation) -> (Clan, bool) {
    let word = w.reduced_word();
    let transported = clan.hecke_word(&word);
    let additive = transported.length() == clan.length() + w.length();
    (transported, additive)
}

/// The combinatorial expansion rule: the coefficient of `S_w` is the clan
/// polynomial of `w * clan` whenever the transport is length-additive and
/// lands on a clan whose `v` is the identity; otherwise zero.
pub fn theorem_b_rule(clan: &Clan) -> ExpansionTable {
    let n = clan.n();
    let mut table = ExpansionTable::new(n);
    for w in Permutation::all(n) {
        let (transported, additive) = hecke_transport(clan, &w);
        if !additive {
            continue;
        }
        let (_, v) = transported.uv_perms();
        if !v.is_identity() {
            continue;
        }
        table.insert(w, clan_polynomial(&transported));
    }
    table
}

/// Outcome of the three-route expansion comparison for one clan.
#[derive(Clone, Debug)]
pub struct TheoremB {
    pub clan: Clan,
    /// The combinatorial transport rule.
    pub rule: ExpansionTable,
    /// Interpolation expansion of the representative.
    pub expansion: ExpansionTable,
    /// Localizations of transported representatives at the identity.
    pub proof: ExpansionTable,
    /// Every coefficient at `y = 0` is 1 on transports reaching the rainbow
    /// clan and 0 elsewhere.
    pub y_zero_ok: bool,
    pub pass: bool,
}

/// Runs all three coefficient routes for one clan and compares them.
pub fn theorem_b_check(
    clan: &Clan,
    upsilons: &UpsilonCache,
    schubert: &mut SchubertCache,
    loc: &mut LocCache,
) -> Result<TheoremB, ExpandError> {
    let n = clan.n();
    let rule = theorem_b_rule(clan);
    let expansion = expand_in_schubert(upsilons.get(clan), schubert, loc)?;
    let identity = Permutation::identity(n);
    let mut proof = ExpansionTable::new(n);
    for w in Permutation::all(n) {
        let (transported, additive) = hecke_transport(clan, &w);
        if !additive {
            continue;
        }
        proof.insert(w, upsilons.get(&transported).localize(&identity));
    }
    // At y = 0 a coefficient survives exactly on transports to the rainbow.
    let rainbow = Clan::rainbow(clan.p(), clan.q());
    let mut y_zero_ok = true;
    for (w, coeff) in rule.iter() {
        let (transported, _) = hecke_transport(clan, w);
        let specialized = coeff.set_y_zero();
        let expected_one = transported == rainbow;
        y_zero_ok &= if expected_one {
            specialized.is_one()
        } else {
            specialized.is_zero()
        };
    }
    let pass = rule == expansion && rule == proof && y_zero_ok;
    Ok(TheoremB { clan: clan.clone(), rule, expansion, proof, y_zero_ok, pass })
}

// ---------------------------------------------------------------------------
// Product coefficients for non-crossing clans
// ---------------------------------------------------------------------------

/// Outcome of one product-coefficient comparison.
#[derive(Clone, Debug)]
pub struct TheoremC {
    pub clan: Clan,
    pub v: Permutation,
    /// The permutation indexing the extracted coefficient: `w0 * v_clan`.
    pub target: Permutation,
    /// Coefficient of `S_target` in `S_u * S_v`, by ideal interpolation.
    pub product_coeff: Polynomial,
    /// The transport-rule coefficient `c_{clan, w0 v}` with `y` reversed.
    pub clan_coeff: Polynomial,
    pub pass: bool,
}

/// Compares the coefficient of `S_{w0 v_clan}` in `S_{u_clan} * S_v` with
/// the reversed transport-rule coefficient at `w0 v`. The clan must be
/// non-crossing.
pub fn theorem_c_check(
    clan: &Clan,
    v: &Permutation,
    schubert: &mut SchubertCache,
    loc: &mut LocCache,
) -> Result<TheoremC, GeometryError> {
    if !clan.is_noncrossing() {
        return Err(GeometryError::NotNoncrossing(clan.clone()));
    }
    let n = clan.n();
    assert_eq!(v.n(), n, "test permutation rank mismatch");
    let (u_clan, v_clan) = clan.uv_perms();
    let w0 = Permutation::longest(n);
    let target = w0.compose(&v_clan);
    let product_coeff = product_coefficient(&u_clan, v, &target, schubert, loc)?;
    let rule = theorem_b_rule(clan);
    let clan_coeff = rule.coefficient(&w0.compose(v)).reverse_y();
    let pass = product_coeff == clan_coeff;
    Ok(TheoremC {
        clan: clan.clone(),
        v: v.clone(),
        target,
        product_coeff,
        clan_coeff,
        pass,
    })
}

// ---------------------------------------------------------------------------
// Torus-stable curves and smoothness
// ---------------------------------------------------------------------------

/// Whether the torus-stable curve from `v` toward `v t_{ab}` (for node
/// positions `a < b`) stays inside the orbit closure: both values in the
/// same block, or a matching covers `[a, b]` when the values straddle the
/// block boundary in increasing order.
pub fn curve_in_orbit(clan: &Clan, a: usize, b: usize) -> bool {
    assert!(1 <= a && a < b && b <= clan.n(), "need node positions a < b");
    let p = clan.p();
    let (_, v) = clan.uv_perms();
    let va = v.apply(a);
    let vb = v.apply(b);
    if (va <= p && vb <= p) || (va > p && vb > p) {
        return true;
    }
    if va <= p && vb > p {
        return clan
            .arcs()
            .iter()
            .any(|&(i, j)| i <= a && b <= j);
    }
    false
}

/// Why a curve stays outside the orbit closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CurveCase {
    /// Values straddle the blocks in decreasing order.
    #[serde(rename = "I")]
    Descent,
    /// Values straddle in increasing order but no matching covers the pair.
    #[serde(rename = "II")]
    Uncovered,
}

/// A curve direction at `v` not contained in the orbit closure, with its
/// weight `y_{v(a)} - y_{v(b)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExcludedCurve {
    pub a: usize,
    pub b: usize,
    pub case: CurveCase,
    /// Indices `(s, t)` of the weight `y_s - y_t`.
    pub weight: (usize, usize),
}

/// All curve directions at `v` outside the orbit closure, in position order.
pub fn excluded_curves(clan: &Clan) -> Vec<ExcludedCurve> {
    let n = clan.n();
    let p = clan.p();
    let (_, v) = clan.uv_perms();
    let mut out = Vec::new();
    for a in 1..n {
        for b in (a + 1)..=n {
            if curve_in_orbit(clan, a, b) {
                continue;
            }
            let va = v.apply(a);
            let vb = v.apply(b);
            let case = if vb <= p && p < va {
                CurveCase::Descent
            } else {
                CurveCase::Uncovered
            };
            out.push(ExcludedCurve { a, b, case, weight: (va, vb) });
        }
    }
    out
}

/// The product of the weights of all excluded curve directions.
pub fn curve_product(clan: &Clan) -> Polynomial {
    let n = clan.n();
    excluded_curves(clan)
        .iter()
        .fold(Polynomial::one(n), |acc, curve| {
            acc.mul(&Polynomial::y_minus_y(n, curve.weight.0, curve.weight.1))
        })
}

/// The five patterns whose avoidance characterizes a unique fragment.
pub const UNIQUENESS_PATTERNS: [&str; 5] = ["3+-.", "4+1..", "41.-.", "51.1..", "522..."];

/// Whether the clan avoids all five uniqueness patterns.
pub fn avoids_uniqueness_patterns(clan: &Clan) -> bool {
    UNIQUENESS_PATTERNS.iter().all(|text| {
        let pattern = Clan::parse(text).expect("built-in pattern parses");
        !clan.contains_pattern(&pattern)
    })
}

/// The three equivalent smoothness tests for one clan. The report is
/// consistent when all three agree (all true or all false).
#[derive(Clone, Debug, Serialize)]
pub struct SmoothnessReport {
    pub clan: Clan,
    /// Exactly one fragment tiles the Young diagram.
    pub unique_bpd: bool,
    /// The clan avoids the five uniqueness patterns.
    pub avoids_patterns: bool,
    /// The localization at `v` equals the excluded-curve weight product.
    pub localization_matches_product: bool,
}

impl SmoothnessReport {
    /// All three indicators agree.
    pub fn consistent(&self) -> bool {
        self.unique_bpd == self.avoids_patterns
            && self.avoids_patterns == self.localization_matches_product
    }

    /// The common verdict (meaningful when consistent).
    pub fn smooth(&self) -> bool {
        self.unique_bpd
    }
}

/// Evaluates all three smoothness tests. `upsilon` must be the
/// representative of `clan`.
pub fn smoothness_report(clan: &Clan, upsilon: &Polynomial) -> SmoothnessReport {
    let unique_bpd = BpdFragment::enumerate(clan).len() == 1;
    let avoids_patterns = avoids_uniqueness_patterns(clan);
    let (_, v) = clan.uv_perms();
    let localization_matches_product = upsilon.localize(&v) == curve_product(clan);
    SmoothnessReport { clan: clan.clone(), unique_bpd, avoids_patterns, localization_matches_product }
}
