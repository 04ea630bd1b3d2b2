//! Exact sparse polynomials in two groups of variables `x1..xn` / `y1..yn`.
//!
//! Everything downstream (Schubert polynomials, orbit-closure representatives,
//! localization tables) reduces to arithmetic in `Z[x1..xn, y1..yn]`, so this
//! module keeps the representation deliberately compact:
//!
//! * a monomial is a fixed 25-byte key (total degree, then the twelve `x`
//!   exponents, then the twelve `y` exponents), so plain byte-wise comparison
//!   of keys is exactly the graded lexicographic order;
//! * a polynomial is a `Vec` of `(key, coefficient)` pairs sorted ascending by
//!   key with no zero coefficients, so structural equality is mathematical
//!   equality;
//! * coefficients are machine integers that promote to `BigInt` only on
//!   overflow, which keeps the common case allocation-free.
//!
//! All arithmetic is exact. Division helpers return `None` instead of rounding
//! when a quotient does not exist in `Z[x;y]`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::perm::Permutation;

/// Largest supported number of `x` (equivalently `y`) variables.
///
/// Exponent keys reserve twelve slots per block; the engines cap the ambient
/// size at twelve nodes, which is far beyond what exhaustive sweeps can visit.
pub const MAX_VARS: usize = 12;

/// Monomial key: `[total degree, x1..x12 exponents, y1..y12 exponents]`.
///
/// Byte-wise (array) comparison of two keys is the graded lexicographic order
/// with `x1 > x2 > ... > x12 > y1 > ... > y12`.
pub(crate) type Key = [u8; 1 + 2 * MAX_VARS];

const KEY_LEN: usize = 1 + 2 * MAX_VARS;
const ZERO_KEY: Key = [0u8; KEY_LEN];

/// Which variable block an index refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarKind {
    /// The `x1..xn` block.
    X,
    /// The `y1..yn` block.
    Y,
}

impl VarKind {
    /// Key slot (1-based index into the exponent bytes) of variable `i`.
    fn slot(self, i: usize) -> usize {
        debug_assert!((1..=MAX_VARS).contains(&i));
        match self {
            VarKind::X => i,
            VarKind::Y => MAX_VARS + i,
        }
    }
}

fn key_add(a: &Key, b: &Key) -> Key {
    let mut out = ZERO_KEY;
    for k in 0..KEY_LEN {
        out[k] = a[k].checked_add(b[k]).expect("monomial exponent overflow");
    }
    out
}

fn key_sub(a: &Key, b: &Key) -> Key {
    let mut out = ZERO_KEY;
    for k in 0..KEY_LEN {
        debug_assert!(a[k] >= b[k]);
        out[k] = a[k] - b[k];
    }
    out
}

fn key_divides(d: &Key, a: &Key) -> bool {
    d.iter().zip(a.iter()).all(|(x, y)| x <= y)
}

// ---------------------------------------------------------------------------
// Coefficients
// ---------------------------------------------------------------------------

/// Exact integer coefficient.
///
/// Invariant: the `Big` variant never holds a value that fits in `i64`, so the
/// derived equality is mathematical equality. All constructors and arithmetic
/// preserve this normalization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Coeff {
    /// Machine-word value; the overwhelmingly common case.
    Small(i64),
    /// Arbitrary-precision spill, boxed to keep the enum two words wide.
    Big(Box<BigInt>),
}

impl Coeff {
    /// Normalizing constructor from an arbitrary-precision value.
    pub fn from_bigint(value: BigInt) -> Coeff {
        match value.to_i64() {
            Some(small) => Coeff::Small(small),
            None => Coeff::Big(Box::new(value)),
        }
    }

    /// The coefficient as an arbitrary-precision integer.
    pub fn to_bigint(&self) -> BigInt {
        match self {
            Coeff::Small(v) => BigInt::from(*v),
            Coeff::Big(b) => (**b).clone(),
        }
    }

    /// True exactly for the integer zero.
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Small(v) => *v == 0,
            Coeff::Big(b) => b.is_zero(),
        }
    }

    /// True for strictly negative values.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(v) => *v < 0,
            Coeff::Big(b) => b.is_negative(),
        }
    }

    /// True for the integer one.
    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Small(1))
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if let Some(sum) = a.checked_add(*b) {
                return Coeff::Small(sum);
            }
        }
        Coeff::from_bigint(self.to_bigint() + other.to_bigint())
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if let Some(diff) = a.checked_sub(*b) {
                return Coeff::Small(diff);
            }
        }
        Coeff::from_bigint(self.to_bigint() - other.to_bigint())
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if let Some(prod) = a.checked_mul(*b) {
                return Coeff::Small(prod);
            }
        }
        Coeff::from_bigint(self.to_bigint() * other.to_bigint())
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Small(v) => match v.checked_neg() {
                Some(n) => Coeff::Small(n),
                None => Coeff::from_bigint(-BigInt::from(*v)),
            },
            Coeff::Big(b) => Coeff::from_bigint(-(**b).clone()),
        }
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    ///
    /// Dividing by zero panics: callers only divide by leading coefficients of
    /// nonzero polynomials.
    pub fn exact_div(&self, other: &Coeff) -> Option<Coeff> {
        assert!(!other.is_zero(), "division by zero coefficient");
        let a = self.to_bigint();
        let b = other.to_bigint();
        if (&a % &b).is_zero() {
            Some(Coeff::from_bigint(a / b))
        } else {
            None
        }
    }

    /// Decimal rendering, used both by `Display` and by JSON output.
    pub fn to_decimal(&self) -> String {
        match self {
            Coeff::Small(v) => v.to_string(),
            Coeff::Big(b) => b.to_string(),
        }
    }
}

impl From<i64> for Coeff {
    fn from(value: i64) -> Coeff {
        Coeff::Small(value)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal())
    }
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// Sparse polynomial in `Z[x1..xn, y1..yn]`, canonically sorted.
///
/// Terms are stored ascending in graded lexicographic order, so the leading
/// term is the last entry and `==` decides mathematical equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: Vec<(Key, Coeff)>,
}

impl Polynomial {
    /// The zero polynomial in ambient size `n` (that is, on `x1..xn, y1..yn`).
    pub fn zero(n: usize) -> Polynomial {
        assert!((1..=MAX_VARS).contains(&n), "ambient size {n} out of range");
        Polynomial { n, terms: Vec::new() }
    }

    /// The constant polynomial `value`.
    pub fn constant(n: usize, value: impl Into<Coeff>) -> Polynomial {
        let c = value.into();
        let mut p = Polynomial::zero(n);
        if !c.is_zero() {
            p.terms.push((ZERO_KEY, c));
        }
        p
    }

    /// The constant polynomial `1`.
    pub fn one(n: usize) -> Polynomial {
        Polynomial::constant(n, 1)
    }

    /// The single variable `x_i` or `y_i`.
    pub fn var(n: usize, kind: VarKind, i: usize) -> Polynomial {
        let mut p = Polynomial::zero(n);
        assert!(i >= 1 && i <= n, "variable index {i} out of range for n={n}");
        let mut key = ZERO_KEY;
        key[0] = 1;
        key[kind.slot(i)] = 1;
        p.terms.push((key, Coeff::Small(1)));
        p
    }

    /// The binomial `x_i - y_j`.
    pub fn x_minus_y(n: usize, i: usize, j: usize) -> Polynomial {
        Polynomial::var(n, VarKind::X, i).sub(&Polynomial::var(n, VarKind::Y, j))
    }

    /// The binomial `x_i - x_j`.
    pub fn x_minus_x(n: usize, i: usize, j: usize) -> Polynomial {
        Polynomial::var(n, VarKind::X, i).sub(&Polynomial::var(n, VarKind::X, j))
    }

    /// The binomial `y_i - y_j`.
    pub fn y_minus_y(n: usize, i: usize, j: usize) -> Polynomial {
        Polynomial::var(n, VarKind::Y, i).sub(&Polynomial::var(n, VarKind::Y, j))
    }

    pub(crate) fn from_map(n: usize, map: HashMap<Key, Coeff>) -> Polynomial {
        let mut terms: Vec<(Key, Coeff)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|term| term.0);
        Polynomial { n, terms }
    }

    /// Ambient size `n`: the polynomial lives in `Z[x1..xn, y1..yn]`.
    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True exactly for the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        matches!(self.as_constant(), Some(c) if c.is_one())
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.last().map_or(0, |(k, _)| k[0] as usize)
    }

    /// The constant coefficient (possibly zero).
    pub fn constant_term(&self) -> Coeff {
        match self.terms.first() {
            Some((k, c)) if *k == ZERO_KEY => c.clone(),
            _ => Coeff::Small(0),
        }
    }

    /// `Some(c)` when the polynomial is the constant `c`, `None` otherwise.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::Small(0)),
            1 if self.terms[0].0 == ZERO_KEY => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    fn leading(&self) -> Option<&(Key, Coeff)> {
        self.terms.last()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.n, other.n);
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.n, other.n);
        self.merge(other, true)
    }

    /// Sorted-merge addition/subtraction; linear in the combined term count.
    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ka, ca) = &self.terms[i];
            let (kb, cb) = &other.terms[j];
            match ka.cmp(kb) {
                Ordering::Less => {
                    terms.push((*ka, ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { cb.neg() } else { cb.clone() };
                    terms.push((*kb, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { ca.sub(cb) } else { ca.add(cb) };
                    if !c.is_zero() {
                        terms.push((*ka, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        for (kb, cb) in &other.terms[j..] {
            let c = if negate { cb.neg() } else { cb.clone() };
            terms.push((*kb, c));
        }
        Polynomial { n: self.n, terms }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, factor: &Coeff) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, c.mul(factor)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.n, other.n);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.n);
        }
        // Multiply the smaller support into the larger to keep the
        // accumulation map small.
        let (a, b) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        if a.terms.len() == 1 {
            let (k, c) = &a.terms[0];
            return b.mul_term(k, c);
        }
        let mut map: HashMap<Key, Coeff> =
            HashMap::with_capacity(a.terms.len() * b.terms.len() / 2 + 1);
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                merge_into(&mut map, key_add(ka, kb), ca.mul(cb));
            }
        }
        Polynomial::from_map(self.n, map)
    }

    /// Multiplication by a single monomial; preserves the sorted order.
    fn mul_term(&self, key: &Key, coeff: &Coeff) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (key_add(k, key), c.mul(coeff)))
                .collect(),
        }
    }

    /// Exact division: `Some(q)` with `self == q * divisor`, else `None`.
    ///
    /// Standard long division against the graded-lex leading term; the
    /// remainder must vanish for the quotient to be returned.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        debug_assert_eq!(self.n, divisor.n);
        let (dk, dc) = divisor
            .leading()
            .expect("exact_div: division by the zero polynomial");
        let mut rem = self.clone();
        // Quotient terms come out with strictly decreasing keys; collect and
        // reverse at the end to restore the ascending invariant.
        let mut quo: Vec<(Key, Coeff)> = Vec::new();
        while let Some((rk, rc)) = rem.leading() {
            if !key_divides(dk, rk) {
                return None;
            }
            let qc = rc.exact_div(dc)?;
            let qk = key_sub(rk, dk);
            rem = rem.sub(&divisor.mul_term(&qk, &qc));
            quo.push((qk, qc));
        }
        quo.reverse();
        debug_assert!(quo.windows(2).all(|w| w[0].0 < w[1].0));
        Some(Polynomial { n: self.n, terms: quo })
    }

    /// Divided difference `(f - s_i f) / (x_i - x_{i+1})`, where `s_i` swaps
    /// `x_i` and `x_{i+1}`.
    ///
    /// Works term by term: a monomial with `x_i^a x_{i+1}^b` and `a != b`
    /// contributes the telescoping quotient of `x^a y^b - x^b y^a` by `x - y`
    /// directly, so the division is exact by construction and the diagonal
    /// terms (`a == b`) drop out. The result always satisfies
    /// `result * (x_i - x_{i+1}) == f - s_i f`.
    pub fn divided_difference(&self, i: usize) -> Polynomial {
        assert!(i >= 1 && i < self.n, "divided difference index {i} out of range");
        let si = VarKind::X.slot(i);
        let mut map: HashMap<Key, Coeff> = HashMap::with_capacity(self.terms.len());
        for (key, coeff) in &self.terms {
            let a = key[si];
            let b = key[si + 1];
            if a == b {
                continue;
            }
            let (lo, hi, c) = if a > b {
                (b, a, coeff.clone())
            } else {
                (a, b, coeff.neg())
            };
            let mut base = *key;
            base[0] -= 1;
            for t in 0..(hi - lo) {
                let mut k = base;
                k[si] = lo + t;
                k[si + 1] = hi - 1 - t;
                merge_into(&mut map, k, c.clone());
            }
        }
        Polynomial::from_map(self.n, map)
    }

    /// Generic slot remapping: every exponent on slot `s` moves onto slot
    /// `f(s)`. Used by localization, renaming, and reversal; collisions are
    /// accumulated.
    fn map_slots(&self, f: impl Fn(usize) -> usize) -> Polynomial {
        let mut map: HashMap<Key, Coeff> = HashMap::with_capacity(self.terms.len());
        for (key, coeff) in &self.terms {
            let mut nk = ZERO_KEY;
            nk[0] = key[0];
            for (slot, &e) in key.iter().enumerate().skip(1) {
                if e > 0 {
                    let target = f(slot);
                    debug_assert!((1..KEY_LEN).contains(&target));
                    nk[target] = nk[target]
                        .checked_add(e)
                        .expect("monomial exponent overflow");
                }
            }
            merge_into(&mut map, nk, coeff.clone());
        }
        Polynomial::from_map(self.n, map)
    }

    /// Localization at `w`: substitutes `x_i -> y_{w(i)}`, leaving `y`
    /// variables untouched. The result is a polynomial in `y` alone whenever
    /// the input was.
    pub fn localize(&self, w: &Permutation) -> Polynomial {
        assert_eq!(w.n(), self.n, "localization permutation size mismatch");
        self.map_slots(|slot| {
            if slot <= MAX_VARS {
                MAX_VARS + w.apply(slot)
            } else {
                slot
            }
        })
    }

    /// Applies a permutation to the `y` alphabet: `y_j -> y_{w(j)}`.
    pub fn permute_y(&self, w: &Permutation) -> Polynomial {
        assert_eq!(w.n(), self.n, "permutation size mismatch");
        self.map_slots(|slot| {
            if slot > MAX_VARS {
                MAX_VARS + w.apply(slot - MAX_VARS)
            } else {
                slot
            }
        })
    }

    /// Reverses the `y` alphabet: `y_j -> y_{n+1-j}`.
    pub fn reverse_y(&self) -> Polynomial {
        let n = self.n;
        self.map_slots(move |slot| {
            if slot > MAX_VARS {
                MAX_VARS + (n + 1 - (slot - MAX_VARS))
            } else {
                slot
            }
        })
    }

    /// Renames `x_i -> y_i`, leaving existing `y` variables untouched.
    pub fn rename_x_to_y(&self) -> Polynomial {
        self.map_slots(|slot| if slot <= MAX_VARS { MAX_VARS + slot } else { slot })
    }

    /// Substitutes `x_j -> y_{n+1-j}` for `j > p` while keeping `x_1..x_p`.
    pub fn fold_high_x_into_y(&self, p: usize) -> Polynomial {
        let n = self.n;
        self.map_slots(move |slot| {
            if slot <= MAX_VARS && slot > p {
                MAX_VARS + (n + 1 - slot)
            } else {
                slot
            }
        })
    }

    /// Swaps two variables of the same block.
    pub fn swap_vars(&self, kind: VarKind, i: usize, j: usize) -> Polynomial {
        let (a, b) = (kind.slot(i), kind.slot(j));
        self.map_slots(move |slot| {
            if slot == a {
                b
            } else if slot == b {
                a
            } else {
                slot
            }
        })
    }

    /// True when the polynomial is invariant under all permutations of the
    /// variables `lo..=hi` of the given block (checked on adjacent swaps).
    pub fn is_symmetric_in(&self, kind: VarKind, lo: usize, hi: usize) -> bool {
        (lo..hi).all(|i| self.swap_vars(kind, i, i + 1) == *self)
    }

    /// Discards every term that involves a `y` variable (evaluation `y = 0`).
    pub fn set_y_zero(&self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k[MAX_VARS + 1..].iter().all(|&e| e == 0))
                .cloned()
                .collect(),
        }
    }

    /// True when no `x` variable occurs.
    pub fn is_y_only(&self) -> bool {
        self.terms
            .iter()
            .all(|(k, _)| k[1..=MAX_VARS].iter().all(|&e| e == 0))
    }

    /// Largest variable index of the given block that occurs with a positive
    /// exponent, or 0 when the block is unused.
    pub fn max_var(&self, kind: VarKind) -> usize {
        let mut best = 0;
        for (k, _) in &self.terms {
            for i in 1..=MAX_VARS {
                if k[kind.slot(i)] > 0 && i > best {
                    best = i;
                }
            }
        }
        best
    }

    /// JSON rendering: an array of `{"exps": [...], "coeff": "..."}` objects
    /// in display (descending) order. Exponents list `x1..xn` then `y1..yn`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut out = Vec::with_capacity(self.terms.len());
        for (key, coeff) in self.terms.iter().rev() {
            let mut exps = Vec::with_capacity(2 * self.n);
            for i in 1..=self.n {
                exps.push(serde_json::json!(key[VarKind::X.slot(i)]));
            }
            for j in 1..=self.n {
                exps.push(serde_json::json!(key[VarKind::Y.slot(j)]));
            }
            out.push(serde_json::json!({
                "exps": exps,
                "coeff": coeff.to_decimal(),
            }));
        }
        serde_json::Value::Array(out)
    }
}

fn merge_into(map: &mut HashMap<Key, Coeff>, key: Key, coeff: Coeff) {
    use std::collections::hash_map::Entry;
    match map.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        Entry::Occupied(mut slot) => {
            let sum = slot.get().add(&coeff);
            if sum.is_zero() {
                slot.remove();
            } else {
                *slot.get_mut() = sum;
            }
        }
    }
}

impl fmt::Display for Polynomial {
    /// Human-readable form in graded-lex descending order, e.g.
    /// `y1*y2 - y1*y4 + 2*y2^2`; unit coefficients are elided and a leading
    /// negative term renders as `-y2 + y3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (key, coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.is_negative();
            if idx == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let magnitude = {
                let s = coeff.to_decimal();
                s.strip_prefix('-').map(str::to_owned).unwrap_or(s)
            };
            let mut vars = String::new();
            for i in 1..=self.n {
                push_var(&mut vars, 'x', i, key[VarKind::X.slot(i)]);
            }
            for j in 1..=self.n {
                push_var(&mut vars, 'y', j, key[VarKind::Y.slot(j)]);
            }
            if vars.is_empty() {
                f.write_str(&magnitude)?;
            } else if magnitude == "1" {
                f.write_str(&vars)?;
            } else {
                write!(f, "{magnitude}*{vars}")?;
            }
        }
        Ok(())
    }
}

fn push_var(out: &mut String, letter: char, index: usize, exp: u8) {
    if exp == 0 {
        return;
    }
    if !out.is_empty() {
        out.push('*');
    }
    out.push(letter);
    out.push_str(&index.to_string());
    if exp > 1 {
        out.push('^');
        out.push_str(&exp.to_string());
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial(n={}, {})", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, VarKind::X, i)
    }

    fn y(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, VarKind::Y, i)
    }

    #[test]
    fn coeff_promotes_and_demotes() {
        let big = Coeff::Small(i64::MAX).add(&Coeff::Small(1));
        assert!(matches!(big, Coeff::Big(_)));
        let back = big.add(&Coeff::Small(-1));
        assert_eq!(back, Coeff::Small(i64::MAX));
        assert_eq!(
            Coeff::Small(i64::MIN).neg(),
            Coeff::from_bigint(-BigInt::from(i64::MIN))
        );
        assert_eq!(Coeff::Small(12).exact_div(&Coeff::Small(4)), Some(Coeff::Small(3)));
        assert_eq!(Coeff::Small(12).exact_div(&Coeff::Small(5)), None);
    }

    #[test]
    fn arithmetic_is_canonical() {
        let n = 3;
        let p = x(n, 1).add(&y(n, 2));
        let q = y(n, 2).add(&x(n, 1));
        assert_eq!(p, q);
        assert!(p.sub(&q).is_zero());
        let prod = p.mul(&p);
        assert_eq!(prod.num_terms(), 3);
        assert_eq!(prod.degree(), 2);
        assert_eq!(prod.to_string(), "x1^2 + 2*x1*y2 + y2^2");
    }

    #[test]
    fn display_matches_expected_forms() {
        let n = 4;
        let p = y(n, 1)
            .mul(&y(n, 2))
            .sub(&y(n, 1).mul(&y(n, 4)))
            .add(&y(n, 2).mul(&y(n, 2)).scale(&Coeff::Small(2)));
        assert_eq!(p.to_string(), "y1*y2 - y1*y4 + 2*y2^2");
        let q = y(n, 3).sub(&y(n, 2));
        assert_eq!(q.to_string(), "-y2 + y3");
        assert_eq!(Polynomial::zero(n).to_string(), "0");
        assert_eq!(Polynomial::constant(n, -7).to_string(), "-7");
    }

    #[test]
    fn divided_difference_basics() {
        let n = 3;
        // d_1 x1 = 1, d_1 x2 = -1, d_1 x3 = 0.
        assert_eq!(x(n, 1).divided_difference(1), Polynomial::one(n));
        assert_eq!(x(n, 2).divided_difference(1), Polynomial::constant(n, -1));
        assert!(x(n, 3).divided_difference(1).is_zero());
        // d_1 (x1^2 x2) = x1 x2.
        let f = x(n, 1).mul(&x(n, 1)).mul(&x(n, 2));
        assert_eq!(f.divided_difference(1), x(n, 1).mul(&x(n, 2)));
        // Symmetric polynomials are killed.
        let sym = x(n, 1).mul(&x(n, 2));
        assert!(sym.divided_difference(1).is_zero());
    }

    #[test]
    fn divided_difference_product_identity() {
        // result * (x_i - x_{i+1}) == f - s_i(f) on a handful of inputs.
        let n = 4;
        let f = x(n, 1)
            .mul(&x(n, 1))
            .mul(&x(n, 2))
            .add(&x(n, 2).mul(&x(n, 3)).mul(&y(n, 1)))
            .sub(&x(n, 3).mul(&x(n, 3)).mul(&x(n, 3)));
        for i in 1..n {
            let out = f.divided_difference(i);
            let lhs = out.mul(&Polynomial::x_minus_x(n, i, i + 1));
            let rhs = f.sub(&f.swap_vars(VarKind::X, i, i + 1));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exact_division_round_trips() {
        let n = 4;
        let a = Polynomial::x_minus_y(n, 1, 2);
        let b = Polynomial::x_minus_y(n, 2, 4);
        let c = Polynomial::y_minus_y(n, 1, 3);
        let prod = a.mul(&b).mul(&c);
        assert_eq!(prod.exact_div(&b), Some(a.mul(&c)));
        assert_eq!(prod.exact_div(&a.mul(&c)), Some(b.clone()));
        // Non-divisor returns None instead of a rounded quotient.
        assert_eq!(prod.exact_div(&Polynomial::x_minus_y(n, 1, 3)), None);
        assert_eq!(
            prod.exact_div(&Polynomial::constant(n, 2)),
            None,
            "content is not divisible by 2"
        );
    }

    #[test]
    fn localization_substitutes_x_for_y() {
        let n = 3;
        let w = Permutation::from_one_line(vec![2, 3, 1]).unwrap();
        let f = Polynomial::x_minus_y(n, 1, 2);
        // x1 -> y2, so f|_w = y2 - y2 = 0.
        assert!(f.localize(&w).is_zero());
        let g = Polynomial::x_minus_y(n, 2, 1);
        assert_eq!(g.localize(&w), Polynomial::y_minus_y(n, 3, 1));
        assert!(g.localize(&w).is_y_only());
    }

    #[test]
    fn reversal_and_renaming() {
        let n = 4;
        let f = y(n, 1).mul(&x(n, 2));
        assert_eq!(f.reverse_y(), y(n, 4).mul(&x(n, 2)));
        assert_eq!(f.reverse_y().reverse_y(), f);
        let g = x(n, 1).mul(&x(n, 3));
        assert_eq!(g.rename_x_to_y(), y(n, 1).mul(&y(n, 3)));
        // x3, x4 fold to y2, y1 while x1, x2 stay.
        let h = x(n, 1).mul(&x(n, 3)).mul(&x(n, 4));
        assert_eq!(h.fold_high_x_into_y(2), x(n, 1).mul(&y(n, 2)).mul(&y(n, 1)));
    }

    #[test]
    fn symmetry_checks() {
        let n = 4;
        let sym = y(n, 1).mul(&y(n, 2)).add(&y(n, 1)).add(&y(n, 2));
        assert!(sym.is_symmetric_in(VarKind::Y, 1, 2));
        assert!(!sym.is_symmetric_in(VarKind::Y, 1, 3));
        let e2 = y(n, 1).mul(&y(n, 2)).add(&y(n, 1).mul(&y(n, 3))).add(&y(n, 2).mul(&y(n, 3)));
        assert!(e2.is_symmetric_in(VarKind::Y, 1, 3));
    }

    #[test]
    fn y_zero_specialization() {
        let n = 3;
        let f = x(n, 1).mul(&x(n, 2)).add(&x(n, 1).mul(&y(n, 2))).add(&Polynomial::one(n));
        let g = f.set_y_zero();
        assert_eq!(g, x(n, 1).mul(&x(n, 2)).add(&Polynomial::one(n)));
    }

    #[test]
    fn json_shape() {
        let n = 2;
        let f = Polynomial::x_minus_y(n, 1, 2);
        let v = f.to_json();
        assert_eq!(
            v,
            serde_json::json!([
                {"exps": [1, 0, 0, 0], "coeff": "1"},
                {"exps": [0, 0, 0, 1], "coeff": "-1"},
            ])
        );
    }
}
