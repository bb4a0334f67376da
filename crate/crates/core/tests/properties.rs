use avoidkit::closedform::{formula_for, reduce_to_canonical};
use avoidkit::perm::{
    contains_naive, count_avoiders, subsets_of_s3, symmetry_images, AvoiderCache, PatternSet,
    Permutation, Symmetry,
};
use avoidkit::series::{chain_det, chain_solve, ChainStep, IntPolynomial, RationalGF};
use avoidkit::wilf::{partition, Pair, PairPopulation};
use num_bigint::BigInt;
use proptest::prelude::*;

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn symmetry() -> impl Strategy<Value = Symmetry> {
    (0..8usize).prop_map(|i| Symmetry::ALL[i])
}

fn s3_subset() -> impl Strategy<Value = PatternSet> {
    (0..64usize).prop_map(|i| subsets_of_s3()[i].clone())
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 1..=4)
}

fn gf() -> impl Strategy<Value = RationalGF> {
    (coeffs(), coeffs()).prop_map(|(num, mut den)| {
        den[0] = 1;
        RationalGF::ratio(&num, &den).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn chain_det_equals_chain_solve(
        steps in prop::collection::vec((gf(), gf()), 0..=6),
        h in gf(),
    ) {
        let steps: Vec<ChainStep> = steps.into_iter().map(|(a, b)| ChainStep::new(a, b)).collect();
        prop_assert_eq!(chain_det(&steps, &h), chain_solve(&steps, &h));
    }

    #[test]
    fn product_expands_to_cauchy_convolution(f in gf(), g in gf()) {
        let n = 10;
        let (a, b) = (f.expand(n).unwrap(), g.expand(n).unwrap());
        let prod = (&f * &g).expand(n).unwrap();
        for k in 0..=n {
            let conv: BigInt = (0..=k).map(|i| &a[i] * &b[k - i]).sum();
            prop_assert_eq!(&prod[k], &conv);
        }
    }

    #[test]
    fn gf_canonicalization_is_idempotent(f in gf(), scale in 1i64..=5) {
        let again = RationalGF::new(f.num().clone(), f.den().clone()).unwrap();
        prop_assert_eq!(&again, &f);
        let c = BigInt::from(-scale);
        let scaled = RationalGF::new(f.num().scale(&c), f.den().scale(&c)).unwrap();
        prop_assert_eq!(&scaled, &f);
        let factor = IntPolynomial::from_i64s(&[1, scale]);
        let padded = RationalGF::new(f.num() * &factor, f.den() * &factor).unwrap();
        prop_assert_eq!(padded, f);
    }

    #[test]
    fn symmetries_are_involutive_group_actions(p in permutation(9), s in symmetry(), t in symmetry()) {
        prop_assert_eq!(p.reverse().reverse(), p.clone());
        prop_assert_eq!(p.complement().complement(), p.clone());
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(s.invert().apply(&s.apply(&p)), p.clone());
        prop_assert_eq!(s.compose(&t).apply(&p), s.apply(&t.apply(&p)));
    }

    #[test]
    fn containment_is_equivariant(host in permutation(8), pattern in permutation(4), s in symmetry()) {
        let plain = host.contains(&pattern);
        prop_assert_eq!(plain, contains_naive(&host, &pattern));
        prop_assert_eq!(plain, s.apply(&host).contains(&s.apply(&pattern)));
    }

    #[test]
    fn containment_is_a_partial_order(a in permutation(7), b in permutation(5), c in permutation(3)) {
        prop_assert!(a.contains(&a));
        if a.contains(&b) && b.contains(&c) {
            prop_assert!(a.contains(&c));
        }
        if a.contains(&b) && b.contains(&a) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn counts_are_symmetry_invariant(set in s3_subset(), tau in permutation(5), s in symmetry(), n in 0usize..=7) {
        let base = count_avoiders(n, &set, Some(&tau)).unwrap();
        let image = count_avoiders(n, &s.apply_set(&set), Some(&s.apply(&tau))).unwrap();
        prop_assert_eq!(base, image);
    }

    #[test]
    fn canonical_reduction_is_idempotent(set in s3_subset(), tau in permutation(5)) {
        prop_assume!(set.len() >= 2);
        let first = reduce_to_canonical(&set, &tau).unwrap();
        let second = reduce_to_canonical(&first.set, &first.tau).unwrap();
        prop_assert_eq!(second.case, first.case);
        prop_assert_eq!(second.symmetry, Symmetry::IDENTITY);
        prop_assert_eq!(second.tau, first.tau);
    }

    #[test]
    fn printed_values_do_not_depend_on_the_orbit_member(set in s3_subset(), tau in permutation(5), s in symmetry()) {
        prop_assume!(set.len() >= 2 && tau.len() >= 3 && tau.avoids_all(&set));
        let a = formula_for(&set, &tau).unwrap();
        let b = formula_for(&s.apply_set(&set), &s.apply(&tau)).unwrap();
        prop_assert_eq!(a.values(tau.len(), 12).unwrap(), b.values(tau.len(), 12).unwrap());
    }
}

#[test]
fn wider_windows_refine_the_partition() {
    let cache = AvoiderCache::new();
    let population = PairPopulation::new(2..=3, 4);
    let coarse = partition(&population, (6, 7), &cache).unwrap();
    let fine = partition(&population, (4, 8), &cache).unwrap();
    assert!(fine.classes.len() >= coarse.classes.len());
    for class in &fine.classes {
        let home = coarse.class_of(&class.members[0]).unwrap();
        assert!(class.members.iter().all(|m| home.members.contains(m)));
    }
    assert_eq!(fine.total_size(), population.len());
}

#[test]
fn classes_are_closed_under_symmetry() {
    let cache = AvoiderCache::new();
    let population = PairPopulation::new(1..=5, 4);
    let report = partition(&population, (5, 8), &cache).unwrap();
    for class in &report.classes {
        for member in &class.members {
            for (_, set, tau) in symmetry_images(&member.set, &member.tau) {
                let image = Pair::new(set, tau);
                assert!(
                    class.members.contains(&image),
                    "{image} left the class of {member}"
                );
            }
        }
    }
}
