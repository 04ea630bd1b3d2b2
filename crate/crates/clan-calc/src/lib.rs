//! Exact combinatorics of (p,q)-clans and their orbit closures.
//!
//! The crate computes, with exact integer arithmetic throughout:
//!
//! * (p,q)-clans: parsing, enumeration, the two attached inverse
//!   Grassmannian permutations, Young diagrams, lengths, the 0-Hecke action
//!   and both Bruhat orders, pattern containment ([`clan`]);
//! * bumpless pipe dream fragments on a clan's Young diagram, generated by
//!   droop moves from the initial fragment, with a brute-force tiling oracle
//!   and clan polynomials as weight sums ([`bpd`]);
//! * double Schubert polynomials via divided differences, orbit
//!   representatives propagated up the weak order, localizations at torus
//!   fixed points, and exact expansion in the Schubert basis ([`schubert`]);
//! * the geometric identities tying these together: the localization closed
//!   form, the transport rule for expansion coefficients, product
//!   coefficients for non-crossing clans, and the smoothness dichotomy
//!   ([`geometry`], swept exhaustively by [`verify`]).
//!
//! [`Engine`] bundles the caches (Schubert polynomials per rank, orbit
//! representatives per shape, localizations) behind one handle for callers
//! that mix queries.

pub mod bpd;
pub mod clan;
pub mod geometry;
pub mod perm;
pub mod poly;
pub mod schubert;
pub mod verify;

use std::collections::HashMap;
use std::sync::Arc;

use clan::Clan;
use geometry::{GeometryError, SmoothnessReport, TheoremA, TheoremB, TheoremC};
use perm::Permutation;
use poly::Polynomial;
use schubert::{ExpandError, ExpansionTable, LocCache, SchubertCache, UpsilonCache};

/// Shared handle over the per-rank and per-shape caches.
#[derive(Default)]
pub struct Engine {
    schuberts: HashMap<usize, SchubertCache>,
    locs: HashMap<usize, LocCache>,
    upsilons: HashMap<(usize, usize), UpsilonCache>,
}

impl Engine {
    pub fn new() -> Engine {
        Engine::default()
    }

    fn schubert_cache(&mut self, n: usize) -> &mut SchubertCache {
        self.schuberts.entry(n).or_insert_with(|| SchubertCache::new(n))
    }

    /// Ensures the representative cache for the clan's shape exists.
    fn ensure_upsilons(&mut self, p: usize, q: usize) {
        if !self.upsilons.contains_key(&(p, q)) {
            let schubert = self
                .schuberts
                .entry(p + q)
                .or_insert_with(|| SchubertCache::new(p + q));
            // Path independence is asserted on shapes small enough for the
            // redundant comparisons to be free.
            let check_paths = p + q <= 5;
            let built = UpsilonCache::build(p, q, schubert, check_paths);
            self.upsilons.insert((p, q), built);
        }
    }

    /// The double Schubert polynomial of `w`.
    pub fn schubert(&mut self, w: &Permutation) -> Arc<Polynomial> {
        self.schubert_cache(w.n()).get(w)
    }

    /// The orbit representative of `clan`.
    pub fn upsilon(&mut self, clan: &Clan) -> Arc<Polynomial> {
        self.ensure_upsilons(clan.p(), clan.q());
        self.upsilons[&(clan.p(), clan.q())].get(clan).clone()
    }

    /// The localization `S_w |_z`.
    pub fn localization(&mut self, w: &Permutation, z: &Permutation) -> Arc<Polynomial> {
        let n = w.n();
        let schubert = self.schuberts.entry(n).or_insert_with(|| SchubertCache::new(n));
        let loc = self.locs.entry(n).or_insert_with(|| LocCache::new(n));
        loc.get(schubert, w, z)
    }

    /// Expands `f` in the double Schubert basis of its rank.
    pub fn expand(&mut self, f: &Polynomial) -> Result<ExpansionTable, ExpandError> {
        let n = f.ambient();
        let schubert = self.schuberts.entry(n).or_insert_with(|| SchubertCache::new(n));
        let loc = self.locs.entry(n).or_insert_with(|| LocCache::new(n));
        schubert::expand_in_schubert(f, schubert, loc)
    }

    /// The localization identity check for one clan.
    pub fn theorem_a(&mut self, clan: &Clan) -> TheoremA {
        let upsilon = self.upsilon(clan);
        geometry::theorem_a_check(clan, &upsilon)
    }

    /// The three-route coefficient comparison for one clan.
    pub fn theorem_b(&mut self, clan: &Clan) -> Result<TheoremB, ExpandError> {
        self.ensure_upsilons(clan.p(), clan.q());
        let n = clan.n();
        self.locs.entry(n).or_insert_with(|| LocCache::new(n));
        let upsilons = &self.upsilons[&(clan.p(), clan.q())];
        let schubert = self.schuberts.get_mut(&n).expect("rank cache exists");
        let loc = self.locs.get_mut(&n).expect("rank cache exists");
        geometry::theorem_b_check(clan, upsilons, schubert, loc)
    }

    /// The product-coefficient comparison for one non-crossing clan and one
    /// permutation.
    pub fn theorem_c(
        &mut self,
        clan: &Clan,
        v: &Permutation,
    ) -> Result<TheoremC, GeometryError> {
        let n = clan.n();
        let schubert = self.schuberts.entry(n).or_insert_with(|| SchubertCache::new(n));
        let loc = self.locs.entry(n).or_insert_with(|| LocCache::new(n));
        geometry::theorem_c_check(clan, v, schubert, loc)
    }

    /// The three smoothness tests for one clan.
    pub fn smoothness(&mut self, clan: &Clan) -> SmoothnessReport {
        let upsilon = self.upsilon(clan);
        geometry::smoothness_report(clan, &upsilon)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engine_round_trip() {
        let mut engine = Engine::new();
        let clan = Clan::parse("1.1.").unwrap();
        let a = engine.theorem_a(&clan);
        assert!(a.pass);
        let b = engine.theorem_b(&clan).unwrap();
        assert!(b.pass);
        let id = Permutation::identity(4);
        let c = engine.theorem_c(&clan, &id).unwrap();
        assert!(c.pass);
        let report = engine.smoothness(&clan);
        assert!(report.consistent() && report.smooth());
        // Reuse hits the caches.
        let first = engine.upsilon(&clan);
        let second = engine.upsilon(&clan);
        assert!(Arc::ptr_eq(&first, &second));
    }
}
