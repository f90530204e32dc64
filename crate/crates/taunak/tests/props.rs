//! Randomized properties over arbitrary valid Kupisch series.

use proptest::prelude::*;
use std::collections::BTreeSet;
use taunak::arcs::{Arc, ArcOps, ArcPattern};
use taunak::lattice::TorsLattice;
use taunak::smc::SmcOps;
use taunak::tautilt::WideSub;
use taunak::{AlgebraSpec, Indec};

/// Repair an arbitrary positive vector into a valid Kupisch series by
/// raising entries until the cyclic successor condition holds. Entries
/// only grow and stay bounded by the initial maximum, so this terminates.
fn repair(n: usize, mut l: Vec<usize>) -> Vec<usize> {
    loop {
        let mut changed = false;
        for i in 0..n {
            let prev = l[(i + n - 1) % n];
            let mut v = l[i];
            if v + 1 < prev {
                v = prev - 1;
            }
            if i + 1 < n && v < 2 {
                v = 2;
            }
            if v != l[i] {
                l[i] = v;
                changed = true;
            }
        }
        if !changed {
            return l;
        }
    }
}

fn algebras() -> impl Strategy<Value = AlgebraSpec> {
    (1usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(1usize..=5, n)
            .prop_map(move |raw| AlgebraSpec::new(n, repair(n, raw)).unwrap())
    })
}

fn module_of(spec: &AlgebraSpec, seed: usize) -> Indec {
    let all = spec.indecs();
    all[seed % all.len()]
}

proptest! {
    #[test]
    fn repaired_series_are_always_valid(n in 1usize..=6, raw in proptest::collection::vec(1usize..=7, 6)) {
        let series = repair(n, raw[..n].to_vec());
        prop_assert!(AlgebraSpec::new(n, series).is_ok());
    }

    #[test]
    fn hom_counts_composition_series_windows(spec in algebras(), a in any::<usize>(), b in any::<usize>()) {
        let (x, y) = (module_of(&spec, a), module_of(&spec, b));
        let fx = spec.factors(x);
        let fy = spec.factors(y);
        let windows = (1..=fx.len().min(fy.len()))
            .filter(|&t| fx[..t] == fy[fy.len() - t..])
            .count();
        prop_assert_eq!(spec.hom_dim(x, y), windows);
    }

    #[test]
    fn translate_and_inverse_are_inverse(spec in algebras(), a in any::<usize>()) {
        let m = module_of(&spec, a);
        if let Some(t) = spec.tau(m) {
            prop_assert_eq!(spec.tau_inv(t), Some(m));
        }
        if let Some(t) = spec.tau_inv(m) {
            prop_assert_eq!(spec.tau(t), Some(m));
        }
    }

    #[test]
    fn arcs_and_bricks_correspond(spec in algebras()) {
        let from_bricks: BTreeSet<Arc> =
            spec.bricks().into_iter().map(Arc::of_brick).collect();
        let arcs: BTreeSet<Arc> = spec.arcs().into_iter().collect();
        prop_assert_eq!(arcs, from_bricks);
    }

    #[test]
    fn admissibility_is_closed_under_subpatterns(spec in algebras(), pick in any::<usize>(), mask in any::<u32>()) {
        let patterns = spec.maximal_patterns();
        let p = &patterns[pick % patterns.len()];
        let all: Vec<(Arc, bool)> = p
            .green
            .iter()
            .map(|&a| (a, true))
            .chain(p.red.iter().map(|&a| (a, false)))
            .collect();
        let mut sub = ArcPattern::default();
        for (i, &(a, green)) in all.iter().enumerate() {
            if mask & (1 << (i % 32)) != 0 {
                if green {
                    sub.green.insert(a);
                } else {
                    sub.red.insert(a);
                }
            }
        }
        prop_assert!(spec.is_admissible(&sub), "{:?} inside {:?}", sub, p);
    }

    #[test]
    fn maximal_patterns_touch_every_marked_point(spec in algebras()) {
        for p in spec.maximal_patterns() {
            let mut touched = BTreeSet::new();
            for &a in p.green.iter().chain(p.red.iter()) {
                touched.insert(a.source);
                touched.insert(spec.target(a));
            }
            prop_assert_eq!(touched.len(), spec.n());
        }
    }

    #[test]
    fn pattern_count_equals_torsion_class_count(spec in algebras()) {
        let lat = TorsLattice::build(WideSub::full(&spec));
        prop_assert_eq!(spec.maximal_patterns().len(), lat.len());
    }

    #[test]
    fn census_is_rotation_invariant_for_symmetric_series(n in 2usize..=4, l in 2usize..=4, shift in 1usize..=3) {
        let spec = AlgebraSpec::new(n, vec![l; n]).unwrap();
        let rotate = |p: &ArcPattern| -> ArcPattern {
            let mv = |a: Arc| Arc::new(spec.norm((a.source + shift) as i64), a.len);
            ArcPattern {
                green: p.green.iter().map(|&a| mv(a)).collect(),
                red: p.red.iter().map(|&a| mv(a)).collect(),
            }
        };
        let census: BTreeSet<ArcPattern> = spec.maximal_patterns().into_iter().collect();
        let rotated: BTreeSet<ArcPattern> = census.iter().map(&rotate).collect();
        prop_assert_eq!(census, rotated);
    }

    #[test]
    fn collections_and_patterns_biject(spec in algebras()) {
        let census = spec.all_two_smcs();
        prop_assert_eq!(census.len(), spec.maximal_patterns().len());
        for pair in census {
            let green: BTreeSet<Arc> =
                pair.positive.iter().map(|&m| Arc::of_brick(m)).collect();
            let red: BTreeSet<Arc> =
                pair.negative.iter().map(|&m| Arc::of_brick(m)).collect();
            let pattern = ArcPattern { green, red };
            prop_assert!(spec.is_admissible(&pattern));
        }
    }
}
