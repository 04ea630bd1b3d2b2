//! Double Schubert polynomials, orbit-closure representatives, and expansion
//! in the Schubert basis.
//!
//! Everything is anchored at the longest element: `S_{w0}` is the staircase
//! product `prod_{i+j <= n} (x_i - y_j)`, and `S_w = d_i S_{w s_i}` walks down
//! along first-ascent chains. Two evaluation strategies share one cache type:
//! small ranks memoize every intermediate, while larger ranks batch their
//! queries and release intermediates as soon as the last dependent chain has
//! passed through, keeping the peak footprint close to a single chain.
//!
//! The representative `Upsilon_c` of a clan `c` starts on matchless clans as
//! the product `S_u(x; y-reversed) * S_v(x; y)` and propagates up the weak
//! order by divided differences; the result is independent of the chosen
//! path, which the builder can verify on demand.
//!
//! Expansion in the Schubert basis works by interpolation over localizations:
//! processing permutations in a linear extension of Bruhat order, each
//! coefficient is an exact division of what remains of `f|_v` by `S_v|_v`.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::clan::{Clan, ClanError};
use crate::perm::Permutation;
use crate::poly::Polynomial;

/// Errors from Schubert-basis expansion.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ExpandError {
    #[error("polynomial has no exact Schubert expansion over Z[y] (division failed at {0})")]
    InexactDivision(Permutation),
    #[error("polynomial has no exact Schubert expansion over Z[y] (nonzero residual)")]
    NotInSpan,
}

// ---------------------------------------------------------------------------
// Double Schubert polynomials
// ---------------------------------------------------------------------------

/// Cache of double Schubert polynomials for one symmetric group.
///
/// For `n <= 6` every polynomial ever touched is memoized (all of `S_6` is
/// only 720 entries). For larger `n` the cache keeps queried results but
/// computes them in batches that drop chain intermediates eagerly.
pub struct SchubertCache {
    n: usize,
    memo: HashMap<Permutation, Arc<Polynomial>>,
    keep_intermediates: bool,
}

impl SchubertCache {
    pub fn new(n: usize) -> SchubertCache {
        SchubertCache {
            n,
            memo: HashMap::new(),
            keep_intermediates: n <= 6,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The top polynomial `prod_{i + j <= n} (x_i - y_j)`.
    fn staircase(n: usize) -> Polynomial {
        let mut acc = Polynomial::one(n);
        for i in 1..n {
            for j in 1..=(n - i) {
                acc = acc.mul(&Polynomial::x_minus_y(n, i, j));
            }
        }
        acc
    }

    /// The canonical parent along the walk to the longest element: `w * s_i`
    /// at the first ascent, together with the divided-difference index.
    fn parent(w: &Permutation) -> Option<(Permutation, usize)> {
        w.first_ascent().map(|i| (w.right_mul_simple(i), i))
    }

    /// The double Schubert polynomial of `w`.
    pub fn get(&mut self, w: &Permutation) -> Arc<Polynomial> {
        assert_eq!(w.n(), self.n, "permutation size does not match cache");
        if let Some(found) = self.memo.get(w) {
            return found.clone();
        }
        if self.keep_intermediates {
            let poly = match Self::parent(w) {
                None => Arc::new(Self::staircase(self.n)),
                Some((parent, i)) => Arc::new(self.get(&parent).divided_difference(i)),
            };
            self.memo.insert(w.clone(), poly.clone());
            poly
        } else {
            self.batch(std::slice::from_ref(w));
            self.memo.get(w).expect("batch computed the query").clone()
        }
    }

    /// Ensures every query is memoized. Chain intermediates that are not
    /// themselves queries are dropped as soon as their last dependent has
    /// been computed, which keeps large-rank sweeps within memory.
    pub fn batch(&mut self, queries: &[Permutation]) {
        // Collect the ancestor closure along canonical chains.
        let mut needed: HashSet<Permutation> = HashSet::new();
        for query in queries {
            assert_eq!(query.n(), self.n, "permutation size does not match cache");
            let mut cursor = query.clone();
            while !self.memo.contains_key(&cursor) && needed.insert(cursor.clone()) {
                match Self::parent(&cursor) {
                    Some((parent, _)) => cursor = parent,
                    None => break,
                }
            }
        }
        if needed.is_empty() {
            return;
        }
        let queried: HashSet<&Permutation> = queries.iter().collect();
        // Each needed node consumes its parent once.
        let mut pending: HashMap<Permutation, usize> = HashMap::new();
        for w in &needed {
            if let Some((parent, _)) = Self::parent(w) {
                if needed.contains(&parent) {
                    *pending.entry(parent).or_insert(0) += 1;
                }
            }
        }
        // Parents are strictly longer, so descending length is a topological
        // order with parents first.
        let mut order: Vec<Permutation> = needed.into_iter().collect();
        order.sort_by_key(|w| std::cmp::Reverse((w.length(), w.one_line().to_vec())));
        let mut live: HashMap<Permutation, Arc<Polynomial>> = HashMap::new();
        for w in order {
            let poly = match Self::parent(&w) {
                None => Arc::new(Self::staircase(self.n)),
                Some((parent, i)) => {
                    let source = live
                        .get(&parent)
                        .cloned()
                        .or_else(|| self.memo.get(&parent).cloned())
                        .expect("parent computed before child");
                    let derived = Arc::new(source.divided_difference(i));
                    if let Some(count) = pending.get_mut(&parent) {
                        *count -= 1;
                        if *count == 0 && !queried.contains(&parent) {
                            live.remove(&parent);
                        }
                    }
                    derived
                }
            };
            if queried.contains(&w) {
                self.memo.insert(w.clone(), poly.clone());
            }
            live.insert(w, poly);
        }
    }
}

/// One-shot double Schubert polynomial (uses a temporary cache).
pub fn double_schubert(w: &Permutation) -> Polynomial {
    (*SchubertCache::new(w.n()).get(w)).clone()
}

// ---------------------------------------------------------------------------
// Partial permutations attached to clans
// ---------------------------------------------------------------------------

/// Completes the partial permutation of a clan (defined when its `v` is the
/// identity) to the permutation whose pipe configuration extends the clan's
/// fragments: matched rows keep their column, `+` rows take `q+1, q+2, ...`
/// in order, and the remaining rows take the leftover values in increasing
/// order.
pub fn partial_perm_completion(clan: &Clan) -> Result<Permutation, ClanError> {
    let pm = clan.partial_perm()?;
    let n = clan.n();
    let q = clan.q();
    let mut word = vec![0usize; n];
    let mut used = vec![false; n + 1];
    for (idx, entry) in pm.iter().enumerate() {
        if let Some(col) = entry {
            word[idx] = *col;
            used[*col] = true;
        }
    }
    let mut next_high = q + 1;
    for (idx, entry) in pm.iter().enumerate() {
        if entry.is_none() {
            word[idx] = next_high;
            used[next_high] = true;
            next_high += 1;
        }
    }
    let mut next_free = 1;
    for slot in word.iter_mut().skip(clan.p()) {
        while used[next_free] {
            next_free += 1;
        }
        *slot = next_free;
        used[next_free] = true;
    }
    Ok(Permutation::from_one_line(word).expect("completion is a permutation"))
}

/// The double Schubert polynomial of the clan's completed partial
/// permutation. Only `x_1..x_p` and `y_1..y_q` can occur, which is asserted.
pub fn partial_schubert(
    clan: &Clan,
    cache: &mut SchubertCache,
) -> Result<Polynomial, ClanError> {
    let w = partial_perm_completion(clan)?;
    let poly = (*cache.get(&w)).clone();
    assert!(
        poly.max_var(crate::poly::VarKind::X) <= clan.p(),
        "partial Schubert polynomial uses x past p"
    );
    assert!(
        poly.max_var(crate::poly::VarKind::Y) <= clan.q(),
        "partial Schubert polynomial uses y past q"
    );
    Ok(poly)
}

// ---------------------------------------------------------------------------
// Orbit representatives
// ---------------------------------------------------------------------------

/// Walks the weak order of one clan shape from its matchless bottoms upward,
/// delivering `(clan, upsilon)` to the callback level by level (clans within
/// a level in canonical order).
///
/// On matchless clans `upsilon = S_u(x; y-reversed) * S_v(x; y)`; each weak
/// cover `s_i * c` receives the divided difference `d_i`. With `check_paths`
/// every rediscovery of a clan along a second path is asserted equal, making
/// the walk a path-independence test.
///
/// Only two levels are alive at any time, so sweeps at larger ranks can run
/// without retaining every polynomial.
pub fn upsilon_walk(
    p: usize,
    q: usize,
    schubert: &mut SchubertCache,
    check_paths: bool,
    mut visit: impl FnMut(&Clan, &Arc<Polynomial>),
) {
    let n = p + q;
    assert_eq!(schubert.n(), n, "Schubert cache rank mismatch");
    let clans = Clan::enumerate(p, q);
    let total = clans.len();
    let bottoms: Vec<&Clan> = clans.iter().filter(|c| c.is_matchless()).collect();
    // Batch the boundary Schubert polynomials before walking.
    let mut wanted: Vec<Permutation> = Vec::new();
    for clan in &bottoms {
        let (u, v) = clan.uv_perms();
        wanted.push(u);
        wanted.push(v);
    }
    schubert.batch(&wanted);
    let mut level: Vec<(Clan, Arc<Polynomial>)> = bottoms
        .iter()
        .map(|clan| {
            let (u, v) = clan.uv_perms();
            debug_assert_eq!(
                u.length() + v.length(),
                p * q,
                "matchless boundary lengths must fill the rectangle"
            );
            let poly = schubert
                .get(&u)
                .reverse_y()
                .mul(&schubert.get(&v));
            ((*clan).clone(), Arc::new(poly))
        })
        .collect();
    let mut seen = 0usize;
    while !level.is_empty() {
        level.sort_by(|a, b| a.0.cmp(&b.0));
        for (clan, poly) in &level {
            visit(clan, poly);
        }
        seen += level.len();
        let mut next: HashMap<Clan, Arc<Polynomial>> = HashMap::new();
        for (clan, poly) in &level {
            for (i, cover) in clan.weak_covers() {
                let derived = poly.divided_difference(i);
                match next.get(&cover) {
                    Some(existing) => {
                        if check_paths {
                            assert_eq!(
                                **existing, derived,
                                "representative of {cover} depends on the path taken"
                            );
                        }
                    }
                    None => {
                        next.insert(cover, Arc::new(derived));
                    }
                }
            }
        }
        level = next.into_iter().collect();
    }
    assert_eq!(seen, total, "weak order walk must reach every clan");
}

/// Retained map of orbit representatives for one clan shape.
pub struct UpsilonCache {
    p: usize,
    q: usize,
    map: HashMap<Clan, Arc<Polynomial>>,
}

impl UpsilonCache {
    /// Builds representatives for every (p,q)-clan. Path independence is
    /// asserted during the walk when `check_paths` is set.
    pub fn build(p: usize, q: usize, schubert: &mut SchubertCache, check_paths: bool) -> Self {
        let mut map = HashMap::new();
        upsilon_walk(p, q, schubert, check_paths, |clan, poly| {
            map.insert(clan.clone(), poly.clone());
        });
        UpsilonCache { p, q, map }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn get(&self, clan: &Clan) -> &Arc<Polynomial> {
        self.map.get(clan).expect("clan belongs to this cache's shape")
    }
}

// ---------------------------------------------------------------------------
// Localization cache
// ---------------------------------------------------------------------------

/// Memoized localizations `S_w |_z` (substitute `x_i -> y_{z(i)}`).
pub struct LocCache {
    n: usize,
    map: HashMap<(Permutation, Permutation), Arc<Polynomial>>,
}

impl LocCache {
    pub fn new(n: usize) -> LocCache {
        LocCache { n, map: HashMap::new() }
    }

    pub fn get(
        &mut self,
        schubert: &mut SchubertCache,
        w: &Permutation,
        z: &Permutation,
    ) -> Arc<Polynomial> {
        debug_assert_eq!(w.n(), self.n);
        debug_assert_eq!(z.n(), self.n);
        if let Some(found) = self.map.get(&(w.clone(), z.clone())) {
            return found.clone();
        }
        let value = Arc::new(schubert.get(w).localize(z));
        self.map.insert((w.clone(), z.clone()), value.clone());
        value
    }
}

// ---------------------------------------------------------------------------
// Schubert-basis expansion
// ---------------------------------------------------------------------------

/// A finite expansion `f = sum_w c_w(y) * S_w`, with entries sorted by
/// `(length(w), one-line word)` and zero coefficients omitted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExpansionTable {
    n: usize,
    entries: Vec<(Permutation, Polynomial)>,
}

impl ExpansionTable {
    pub fn new(n: usize) -> ExpansionTable {
        ExpansionTable { n, entries: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Inserts a nonzero coefficient, keeping the canonical order.
    pub fn insert(&mut self, w: Permutation, coeff: Polynomial) {
        if coeff.is_zero() {
            return;
        }
        let key = (w.length(), w.one_line().to_vec());
        let pos = self
            .entries
            .binary_search_by_key(&key, |(p, _)| (p.length(), p.one_line().to_vec()))
            .unwrap_or_else(|insertion| insertion);
        self.entries.insert(pos, (w, coeff));
    }

    pub fn get(&self, w: &Permutation) -> Option<&Polynomial> {
        self.entries.iter().find(|(p, _)| p == w).map(|(_, c)| c)
    }

    /// Coefficient lookup that treats missing entries as zero.
    pub fn coefficient(&self, w: &Permutation) -> Polynomial {
        self.get(w).cloned().unwrap_or_else(|| Polynomial::zero(self.n))
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Permutation, Polynomial)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|(w, c)| {
                    serde_json::json!({
                        "perm": w.to_string(),
                        "length": w.length(),
                        "coeff": c.to_string(),
                        "coeff_terms": c.to_json(),
                    })
                })
                .collect(),
        )
    }
}

/// Interpolates coefficients `c_w` with `values[k] = sum_w c_w * S_w |_z` at
/// `z = domain[k]`. The domain must be closed downward in Bruhat order and
/// sorted by `(length, word)`. Each step divides exactly or the input was not
/// expressible.
fn interpolate_on(
    domain: &[Permutation],
    values: Vec<Polynomial>,
    schubert: &mut SchubertCache,
    loc: &mut LocCache,
) -> Result<ExpansionTable, ExpandError> {
    let n = schubert.n();
    let mut table = ExpansionTable::new(n);
    for (z, value) in domain.iter().zip(values) {
        let mut residual = value;
        for (w, coeff) in table.iter() {
            let contribution = coeff.mul(&loc.get(schubert, w, z));
            residual = residual.sub(&contribution);
        }
        if residual.is_zero() {
            continue;
        }
        let self_loc = loc.get(schubert, z, z);
        let quotient = residual
            .exact_div(&self_loc)
            .ok_or_else(|| ExpandError::InexactDivision(z.clone()))?;
        table.insert(z.clone(), quotient);
    }
    Ok(table)
}

/// Expands `f` in the double Schubert basis of its rank, verifying the
/// residual: `f` must equal the rebuilt sum exactly.
pub fn expand_in_schubert(
    f: &Polynomial,
    schubert: &mut SchubertCache,
    loc: &mut LocCache,
) -> Result<ExpansionTable, ExpandError> {
    let n = schubert.n();
    assert_eq!(f.ambient(), n, "polynomial rank does not match cache");
    let mut domain = Permutation::all(n);
    domain.sort_by_key(|w| (w.length(), w.one_line().to_vec()));
    let values: Vec<Polynomial> = domain.iter().map(|z| f.localize(z)).collect();
    let table = interpolate_on(&domain, values, schubert, loc)?;
    // Zero residual: rebuild and compare.
    let mut rebuilt = Polynomial::zero(n);
    for (w, coeff) in table.iter() {
        rebuilt = rebuilt.add(&coeff.mul(&schubert.get(w)));
    }
    if rebuilt != *f {
        return Err(ExpandError::NotInSpan);
    }
    Ok(table)
}

/// The coefficient of `S_target` in the product `S_u * S_v`, computed by
/// interpolation over the localizations of the product on the Bruhat lower
/// ideal of `target`. Every coefficient on the ideal is determined by the
/// values there, so the computation never touches permutations outside the
/// ideal.
pub fn product_coefficient(
    u: &Permutation,
    v: &Permutation,
    target: &Permutation,
    schubert: &mut SchubertCache,
    loc: &mut LocCache,
) -> Result<Polynomial, ExpandError> {
    let n = schubert.n();
    let mut domain: Vec<Permutation> = Permutation::all(n)
        .into_iter()
        .filter(|z| z.bruhat_leq(target))
        .collect();
    domain.sort_by_key(|w| (w.length(), w.one_line().to_vec()));
    let values: Vec<Polynomial> = domain
        .iter()
        .map(|z| {
            let fu = loc.get(schubert, u, z);
            let fv = loc.get(schubert, v, z);
            fu.mul(&fv)
        })
        .collect();
    let table = interpolate_on(&domain, values, schubert, loc)?;
    Ok(table.coefficient(target))
}
