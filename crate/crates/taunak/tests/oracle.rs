//! Independent oracles for the closed-form arithmetic.
//!
//! Hom spaces are recomputed by matching composition-series windows, Ext
//! through the horseshoe of the projective cover, the arc case table
//! against the module arithmetic, and the re-presentation of wide
//! subcategories against a brute-force filtration closure.

use std::collections::BTreeSet;
use taunak::arcs::{Arc, ArcOps};
use taunak::smc::SmcOps;
use taunak::tautilt::WideSub;
use taunak::{AlgebraSpec, HomKind, Indec};

fn test_algebras() -> Vec<AlgebraSpec> {
    [
        (1, vec![1]),
        (1, vec![3]),
        (2, vec![2, 1]),
        (2, vec![4, 4]),
        (3, vec![3, 2, 1]),
        (3, vec![2, 2, 2]),
        (3, vec![4, 4, 4]),
        (4, vec![3, 3, 3, 3]),
        (4, vec![2, 2, 2, 2]),
        (4, vec![4, 3, 3, 4]),
    ]
    .into_iter()
    .map(|(n, k)| AlgebraSpec::new(n, k).unwrap())
    .collect()
}

/// A homomorphism of serial modules is determined by its image: a top
/// window of the source equal, as a composition series, to a bottom
/// window of the target. Counting matching windows gives the dimension.
fn hom_oracle(spec: &AlgebraSpec, x: Indec, y: Indec) -> usize {
    let fx = spec.factors(x);
    let fy = spec.factors(y);
    (1..=fx.len().min(fy.len()))
        .filter(|&t| fx[..t] == fy[fy.len() - t..])
        .count()
}

fn kind_oracle(spec: &AlgebraSpec, x: Indec, y: Indec) -> HomKind {
    let fx = spec.factors(x);
    let fy = spec.factors(y);
    if fx == fy {
        return HomKind::Iso;
    }
    if fx.len() < fy.len() && fx[..] == fy[fy.len() - fx.len()..] {
        return HomKind::Mono;
    }
    if fx.len() > fy.len() && fx[..fy.len()] == fy[..] {
        return HomKind::Epi;
    }
    if hom_oracle(spec, x, y) > 0 {
        HomKind::Proper
    } else {
        HomKind::Zero
    }
}

/// Ext through the projective cover: from 0 -> K -> P -> X -> 0,
/// dim Ext(X, Y) = hom(K, Y) - hom(P, Y) + hom(X, Y).
fn ext_oracle(spec: &AlgebraSpec, x: Indec, y: Indec) -> usize {
    let p = Indec::new(x.top, spec.l(x.top));
    if p.len == x.len {
        return 0;
    }
    let k = Indec::new(spec.norm((x.top + x.len) as i64), p.len - x.len);
    hom_oracle(spec, k, y) + hom_oracle(spec, x, y) - hom_oracle(spec, p, y)
}

#[test]
fn hom_spaces_match_the_window_oracle() {
    for spec in test_algebras() {
        for x in spec.indecs() {
            for y in spec.indecs() {
                assert_eq!(spec.hom_dim(x, y), hom_oracle(&spec, x, y), "{spec} hom({x},{y})");
                assert_eq!(spec.hom_kind(x, y), kind_oracle(&spec, x, y), "{spec} kind({x},{y})");
                assert_eq!(spec.ext_dim(x, y), ext_oracle(&spec, x, y), "{spec} ext({x},{y})");
            }
        }
    }
}

/// The arc case table against the module arithmetic: endpoint sharing
/// governs monos and epis, crossings govern proper maps, and serial
/// gluing governs Ext of non-crossing pairs.
#[test]
fn intersection_cases_match_module_spaces() {
    for spec in test_algebras() {
        let arcs = spec.arcs();
        for &a in &arcs {
            for &b in &arcs {
                if a == b {
                    continue;
                }
                let crossings = spec.interior_crossings(a, b);
                let glue = |u: Arc, v: Arc| -> bool {
                    spec.norm((u.source + u.len) as i64) == v.source
                        && u.len + v.len <= spec.l(u.source)
                };
                for (u, v) in [(a, b), (b, a)] {
                    let (x, y) = (u.brick(), v.brick());
                    let kind = spec.hom_kind(x, y);
                    if crossings == 0 {
                        let expected = if spec.target(u) == spec.target(v) && u.len < v.len {
                            HomKind::Mono
                        } else if u.source == v.source && u.len > v.len {
                            HomKind::Epi
                        } else {
                            HomKind::Zero
                        };
                        assert_eq!(kind, expected, "{spec} {u} {v}");
                        assert_eq!(
                            spec.ext_dim(x, y) > 0,
                            glue(u, v),
                            "{spec} ext({x},{y}) vs gluing"
                        );
                    } else {
                        // crossings exclude monomorphisms and epimorphisms
                        assert!(
                            matches!(kind, HomKind::Zero | HomKind::Proper),
                            "{spec} {u} {v}: {kind:?} despite a crossing"
                        );
                        // serial gluing still forces an extension
                        if glue(u, v) {
                            assert!(spec.ext_dim(x, y) > 0, "{spec} ext({x},{y})");
                        }
                    }
                }
                if crossings > 0 {
                    let proper = [(a, b), (b, a)]
                        .iter()
                        .filter(|&&(u, v)| {
                            spec.hom_kind(u.brick(), v.brick()) == HomKind::Proper
                        })
                        .count();
                    assert!(proper >= 1, "{spec} {a} {b}: crossing without a proper map");
                    if crossings == 2 {
                        assert_eq!(proper, 2, "{spec} {a} {b}: double crossing");
                    }
                }
            }
        }
    }
}

/// Brute-force filtration closure: a module lies in `Filt(S)` when some
/// bottom window is a member of `S` and the quotient lies in `Filt(S)`.
fn filt_closure(spec: &AlgebraSpec, simples: &BTreeSet<Indec>) -> BTreeSet<Indec> {
    fn belongs(spec: &AlgebraSpec, simples: &BTreeSet<Indec>, m: Indec) -> bool {
        simples.iter().any(|&s| {
            s.len <= m.len
                && spec.bottom_sub(m, s.len) == s
                && (s.len == m.len
                    || belongs(spec, simples, spec.top_quotient(m, m.len - s.len)))
        })
    }
    spec.indecs()
        .into_iter()
        .filter(|&m| belongs(spec, simples, m))
        .collect()
}

#[test]
fn re_presentation_matches_the_filtration_closure() {
    for spec in test_algebras() {
        // every Hom-orthogonal brick set, not only the ones arising from
        // complete collections
        let bricks = spec.bricks();
        if bricks.len() <= 12 {
            for mask in 0..(1usize << bricks.len()) {
                let chosen: BTreeSet<Indec> = bricks
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &b)| b)
                    .collect();
                let orthogonal = chosen.iter().all(|&x| {
                    chosen.iter().all(|&y| x == y || spec.hom_dim(x, y) == 0)
                });
                if !orthogonal {
                    continue;
                }
                let wide = WideSub::from_semibrick(&spec, chosen.iter().copied());
                assert_eq!(
                    *wide.indecs(),
                    filt_closure(&spec, &chosen),
                    "{spec} closure of {chosen:?}"
                );
            }
        } else {
            for smc in spec.all_two_smcs() {
                let wide = WideSub::from_semibrick(&spec, smc.positive.iter().copied());
                assert_eq!(*wide.indecs(), filt_closure(&spec, &smc.positive), "{spec}");
            }
        }
    }
}
