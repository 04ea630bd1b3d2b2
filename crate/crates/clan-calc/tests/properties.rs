//! Randomized invariants: structural laws that must hold for every clan,
//! permutation, and polynomial, exercised on proptest-generated inputs.

use proptest::prelude::*;

use clan_calc::bpd::{weight_sum, BpdFragment};
use clan_calc::clan::Clan;
use clan_calc::perm::Permutation;
use clan_calc::poly::{Polynomial, VarKind};
use clan_calc::schubert::SchubertCache;
use clan_calc::verify::shapes_up_to;

// ---------------------------------------------------------------------------
// Strategies
// ---------------------------------------------------------------------------

fn clan_strategy(max_n: usize) -> impl Strategy<Value = Clan> {
    prop::sample::select(shapes_up_to(max_n))
        .prop_flat_map(|(p, q)| prop::sample::select(Clan::enumerate(p, q)))
}

/// Two clans drawn from one shared shape.
fn clan_pair_strategy(max_n: usize) -> impl Strategy<Value = (Clan, Clan)> {
    prop::sample::select(shapes_up_to(max_n)).prop_flat_map(|(p, q)| {
        let clans = Clan::enumerate(p, q);
        (prop::sample::select(clans.clone()), prop::sample::select(clans))
    })
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|word| Permutation::from_one_line(word).unwrap())
}

fn any_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (2..=max_n).prop_flat_map(perm_strategy)
}

fn perm_pair_strategy(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (2..=max_n).prop_flat_map(|n| (perm_strategy(n), perm_strategy(n)))
}

/// Sparse polynomials in `x_1..x_n, y_1..y_n` with small coefficients and
/// per-variable exponents below 3.
fn poly_strategy(n: usize) -> impl Strategy<Value = Polynomial> {
    let term = (-6i64..=6, prop::collection::vec(0u8..3, 2 * n));
    prop::collection::vec(term, 1..7).prop_map(move |terms| {
        let mut poly = Polynomial::zero(n);
        for (coeff, exponents) in terms {
            let mut term = Polynomial::constant(n, coeff);
            for (slot, &e) in exponents.iter().enumerate() {
                let (kind, index) = if slot < n {
                    (VarKind::X, slot + 1)
                } else {
                    (VarKind::Y, slot - n + 1)
                };
                for _ in 0..e {
                    term = term.mul(&Polynomial::var(n, kind, index));
                }
            }
            poly = poly.add(&term);
        }
        poly
    })
}

fn any_poly(max_n: usize) -> impl Strategy<Value = Polynomial> {
    (2..=max_n).prop_flat_map(poly_strategy)
}

// ---------------------------------------------------------------------------
// Clan invariants
// ---------------------------------------------------------------------------

proptest! {
    #[test]
    fn clan_text_round_trips(c in clan_strategy(6)) {
        prop_assert_eq!(Clan::parse(&c.to_string()).unwrap(), c);
    }

    #[test]
    fn clan_symmetries_are_involutions(c in clan_strategy(6)) {
        prop_assert_eq!(c.mirror().mirror(), c.clone());
        prop_assert_eq!(c.reverse_signs().reverse_signs(), c.clone());
        // Reversing the signs swaps the two attached permutations' roles.
        let (u, _) = c.uv_perms();
        let (_, v_rev) = c.reverse_signs().uv_perms();
        prop_assert_eq!(u, v_rev);
    }

    #[test]
    fn attached_perms_are_inverse_grassmannian(c in clan_strategy(6)) {
        let (u, v) = c.uv_perms();
        prop_assert!(u.is_inverse_grassmannian(c.q()));
        prop_assert!(v.is_inverse_grassmannian(c.p()));
    }

    #[test]
    fn weak_covers_step_up_by_one(c in clan_strategy(6)) {
        for (i, cover) in c.weak_covers() {
            prop_assert_eq!(cover.length(), c.length() + 1, "cover via {}", i);
            prop_assert_eq!(c.hecke(i), cover.clone());
            prop_assert!(c.strong_leq(&cover).unwrap());
        }
    }

    #[test]
    fn hecke_action_never_lowers(
        (c, i) in clan_strategy(6).prop_flat_map(|c| {
            let n = c.n();
            (Just(c), 1..n)
        }),
    ) {
        let acted = c.hecke(i);
        prop_assert!(acted.length() >= c.length());
        prop_assert!(acted.length() <= c.length() + 1);
        prop_assert!(c.strong_leq(&acted).unwrap());
    }

    #[test]
    fn strong_order_is_an_order(pair in clan_pair_strategy(5)) {
        let (c, d) = pair;
        prop_assert!(c.strong_leq(&c).unwrap());
        let cd = c.strong_leq(&d).unwrap();
        let dc = d.strong_leq(&c).unwrap();
        if cd && dc {
            prop_assert_eq!(&c, &d);
        }
        if cd {
            prop_assert!(c.length() <= d.length());
        }
    }

    #[test]
    fn partial_perm_defined_exactly_on_full_diagrams(c in clan_strategy(6)) {
        let (_, v) = c.uv_perms();
        prop_assert_eq!(c.partial_perm().is_ok(), v.is_identity());
        prop_assert_eq!(c.young_diagram().is_full(), v.is_identity());
    }
}

// ---------------------------------------------------------------------------
// Fragment invariants
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fragments_read_back_their_clan(c in clan_strategy(6)) {
        let fragments = BpdFragment::enumerate(&c);
        prop_assert!(!fragments.is_empty());
        let blanks = fragments[0].blanks().len();
        for fragment in &fragments {
            prop_assert_eq!(fragment.read_clan().unwrap(), c.clone());
            prop_assert_eq!(fragment.blanks().len(), blanks);
        }
        let total = weight_sum(&c);
        if !total.is_zero() {
            prop_assert_eq!(total.degree(), blanks);
        }
    }

    #[test]
    fn droops_stay_inside_the_closure(c in clan_strategy(5)) {
        let fragments = BpdFragment::enumerate(&c);
        for fragment in &fragments {
            for successor in fragment.successors() {
                prop_assert!(fragments.contains(&successor));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Permutation invariants
// ---------------------------------------------------------------------------

proptest! {
    #[test]
    fn inverse_and_compose_round_trip(w in any_perm(7)) {
        let n = w.n();
        prop_assert_eq!(w.compose(&w.inverse()), Permutation::identity(n));
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(w.inverse().length(), w.length());
    }

    #[test]
    fn reduced_word_multiplies_back(w in any_perm(7)) {
        let n = w.n();
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        let product = word
            .iter()
            .fold(Permutation::identity(n), |acc, &i| acc.compose(&Permutation::simple(n, i)));
        prop_assert_eq!(product, w.clone());
    }

    #[test]
    fn bruhat_order_brackets_everything((w, z) in perm_pair_strategy(6)) {
        let n = w.n();
        prop_assert!(Permutation::identity(n).bruhat_leq(&w));
        prop_assert!(w.bruhat_leq(&Permutation::longest(n)));
        prop_assert!(w.bruhat_leq(&w));
        if w.bruhat_leq(&z) {
            prop_assert!(w.length() <= z.length());
            if w.length() == z.length() {
                prop_assert_eq!(&w, &z);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Polynomial invariants
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_laws_hold(f in poly_strategy(4), g in poly_strategy(4), h in poly_strategy(4)) {
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(f in poly_strategy(4), g in poly_strategy(4)) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!(f.mul(&g).exact_div(&g), Some(f));
    }

    #[test]
    fn divided_difference_satisfies_its_definition(f in any_poly(4)) {
        let n = f.ambient();
        for i in 1..n {
            let difference = f.sub(&f.swap_vars(VarKind::X, i, i + 1));
            let gap = Polynomial::x_minus_x(n, i, i + 1);
            let derived = f.divided_difference(i);
            prop_assert_eq!(derived.mul(&gap), difference);
            prop_assert!(derived.swap_vars(VarKind::X, i, i + 1) == derived);
        }
    }

    #[test]
    fn y_permutation_composes(f in any_poly(4), seed in 0usize..24) {
        let n = f.ambient();
        let perms = Permutation::all(n);
        let v = &perms[seed % perms.len()];
        let w = &perms[(seed * 7 + 3) % perms.len()];
        prop_assert_eq!(
            f.permute_y(v).permute_y(w),
            f.permute_y(&w.compose(v))
        );
    }
}

// ---------------------------------------------------------------------------
// Schubert polynomial invariants
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn localization_vanishes_exactly_below((w, z) in perm_pair_strategy(5)) {
        let mut cache = SchubertCache::new(w.n());
        let localized = cache.get(&w).localize(&z);
        prop_assert_eq!(localized.is_zero(), !w.bruhat_leq(&z));
    }

    #[test]
    fn descents_step_schubert_polynomials_down(w in any_perm(5)) {
        let n = w.n();
        let mut cache = SchubertCache::new(n);
        let poly = cache.get(&w);
        for i in 1..n {
            if !w.is_ascent(i) {
                let stepped = cache.get(&w.right_mul_simple(i));
                prop_assert_eq!(poly.divided_difference(i), (*stepped).clone());
            }
        }
    }
}
