//! Semibrick pairs and two-term simple-minded collections.
//!
//! A semibrick pair is a set of bricks split into a module part and a shifted
//! part, Hom-orthogonal within each part and Hom-Ext-orthogonal from the
//! module part to the shifted part. Such a pair extends to a two-term
//! simple-minded collection exactly when every nonzero map from a shifted
//! brick to a module brick is injective or surjective; under the arc
//! dictionary this is admissibility of the associated two-colored pattern,
//! and the complete collections are the maximal admissible patterns.

use crate::algebra::{AlgebraSpec, HomKind, Indec};
use crate::arcs::{Arc, ArcOps, ArcPattern};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

/// A set of bricks with signs: `positive` in degree 0, `negative` shifted.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SemibrickPair {
    pub positive: BTreeSet<Indec>,
    pub negative: BTreeSet<Indec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SbpError {
    #[error("{0} is not a brick here")]
    NotABrick(Indec),
    #[error("{0} occurs in both parts")]
    BothSigns(Indec),
    #[error("Hom({x}, {y}) is nonzero within one part")]
    NotHomOrthogonal { x: Indec, y: Indec },
    #[error("Hom({x}, {y}[1]-part) is nonzero")]
    CrossHom { x: Indec, y: Indec },
    #[error("Ext({x}, {y}) is nonzero across the parts")]
    CrossExt { x: Indec, y: Indec },
    #[error("map from shifted {from} to {to} is neither injective nor surjective")]
    ProperApproximation { from: Indec, to: Indec },
    #[error("not a semibrick pair or not mutation compatible")]
    NotCompletable,
    #[error("{0} is not a summand of the relevant part")]
    NotASummand(Indec),
}

impl SemibrickPair {
    pub fn new(
        positive: impl IntoIterator<Item = Indec>,
        negative: impl IntoIterator<Item = Indec>,
    ) -> Self {
        SemibrickPair {
            positive: positive.into_iter().collect(),
            negative: negative.into_iter().collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.positive.len() + self.negative.len()
    }

    pub fn pattern(&self) -> ArcPattern {
        ArcPattern {
            green: self.positive.iter().map(|&m| Arc::of_brick(m)).collect(),
            red: self.negative.iter().map(|&m| Arc::of_brick(m)).collect(),
        }
    }

    pub fn of_pattern(p: &ArcPattern) -> Self {
        SemibrickPair {
            positive: p.green.iter().map(|a| a.brick()).collect(),
            negative: p.red.iter().map(|a| a.brick()).collect(),
        }
    }
}

pub trait SmcOps {
    fn check_semibrick_pair(&self, sbp: &SemibrickPair) -> Result<(), SbpError>;
    fn is_semibrick_pair(&self, sbp: &SemibrickPair) -> bool;
    fn check_mutation_compatible(&self, sbp: &SemibrickPair) -> Result<(), SbpError>;
    fn is_mutation_compatible(&self, sbp: &SemibrickPair) -> bool;
    fn complete(&self, sbp: &SemibrickPair) -> Result<SemibrickPair, SbpError>;
    fn is_two_smc(&self, sbp: &SemibrickPair) -> bool;
    fn all_two_smcs(&self) -> Vec<SemibrickPair>;
    fn mutate_smc(&self, smc: &SemibrickPair, at: Indec) -> Result<SemibrickPair, SbpError>;
}

impl SmcOps for AlgebraSpec {
    fn check_semibrick_pair(&self, sbp: &SemibrickPair) -> Result<(), SbpError> {
        for &m in sbp.positive.iter().chain(sbp.negative.iter()) {
            if !self.is_indec(m) || !self.is_brick(m) {
                return Err(SbpError::NotABrick(m));
            }
        }
        if let Some(&m) = sbp.positive.intersection(&sbp.negative).next() {
            return Err(SbpError::BothSigns(m));
        }
        for part in [&sbp.positive, &sbp.negative] {
            for &x in part {
                for &y in part {
                    if x != y && self.hom_dim(x, y) != 0 {
                        return Err(SbpError::NotHomOrthogonal { x, y });
                    }
                }
            }
        }
        for &x in &sbp.positive {
            for &y in &sbp.negative {
                if self.hom_dim(x, y) != 0 {
                    return Err(SbpError::CrossHom { x, y });
                }
                if self.ext_dim(x, y) != 0 {
                    return Err(SbpError::CrossExt { x, y });
                }
            }
        }
        Ok(())
    }

    fn is_semibrick_pair(&self, sbp: &SemibrickPair) -> bool {
        self.check_semibrick_pair(sbp).is_ok()
    }

    /// A semibrick pair is mutation compatible when no approximation map from
    /// a shifted brick to a module brick is "proper" (neither injective nor
    /// surjective); for serial algebras the approximation is the unique
    /// nonzero map between the bricks.
    fn check_mutation_compatible(&self, sbp: &SemibrickPair) -> Result<(), SbpError> {
        self.check_semibrick_pair(sbp)?;
        for &q in &sbp.negative {
            for &p in &sbp.positive {
                if self.hom_kind(q, p) == HomKind::Proper {
                    return Err(SbpError::ProperApproximation { from: q, to: p });
                }
            }
        }
        Ok(())
    }

    fn is_mutation_compatible(&self, sbp: &SemibrickPair) -> bool {
        self.check_mutation_compatible(sbp).is_ok()
    }

    /// Extend a mutation compatible pair to a complete collection by greedily
    /// adding compatible colored arcs.
    fn complete(&self, sbp: &SemibrickPair) -> Result<SemibrickPair, SbpError> {
        if !self.is_mutation_compatible(sbp) {
            return Err(SbpError::NotCompletable);
        }
        let mut pat = sbp.pattern();
        loop {
            let mut grew = false;
            'search: for a in self.arcs() {
                for (green, red) in [(true, false), (false, true)] {
                    let mut cand = pat.clone();
                    if green {
                        cand.green.insert(a);
                    }
                    if red {
                        cand.red.insert(a);
                    }
                    if cand != pat && self.is_admissible(&cand) {
                        pat = cand;
                        grew = true;
                        break 'search;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        Ok(SemibrickPair::of_pattern(&pat))
    }

    fn is_two_smc(&self, sbp: &SemibrickPair) -> bool {
        match self.complete(sbp) {
            Ok(c) => c == *sbp,
            Err(_) => false,
        }
    }

    fn all_two_smcs(&self) -> Vec<SemibrickPair> {
        let mut out: Vec<SemibrickPair> = self
            .maximal_patterns()
            .iter()
            .map(SemibrickPair::of_pattern)
            .collect();
        out.sort();
        out
    }

    /// Left mutation of a complete collection at a module-part brick: the
    /// brick itself moves to the shifted part, and every other member is
    /// replaced by the cone over its approximation into the brick.
    fn mutate_smc(&self, smc: &SemibrickPair, at: Indec) -> Result<SemibrickPair, SbpError> {
        if !smc.positive.contains(&at) {
            return Err(SbpError::NotASummand(at));
        }
        let mut next = SemibrickPair::default();
        next.negative.insert(at);
        for &p in &smc.positive {
            if p == at {
                continue;
            }
            if self.ext_dim(p, at) > 0 {
                // nonsplit gluing at |-> B ->> p along the boundary
                let glued = Indec::new(p.top, p.len + at.len);
                debug_assert!(self.is_indec(glued) && self.is_brick(glued));
                next.positive.insert(glued);
            } else {
                next.positive.insert(p);
            }
        }
        for &q in &smc.negative {
            match self.hom_kind(q, at) {
                HomKind::Zero => {
                    next.negative.insert(q);
                }
                HomKind::Mono => {
                    // cokernel of q |-> at: strip the shared socle window
                    next.positive.insert(Indec::new(at.top, at.len - q.len));
                }
                HomKind::Epi => {
                    // kernel of q ->> at: the bottom window of q
                    next.negative.insert(Indec::new(
                        self.norm(q.top as i64 + at.len as i64),
                        q.len - at.len,
                    ));
                }
                HomKind::Iso | HomKind::Proper => {
                    return Err(SbpError::ProperApproximation { from: q, to: at });
                }
            }
        }
        if !self.is_two_smc(&next) {
            return Err(SbpError::NotCompletable);
        }
        Ok(next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> AlgebraSpec {
        AlgebraSpec::new(2, vec![2, 1]).unwrap()
    }

    fn c3() -> AlgebraSpec {
        AlgebraSpec::new(3, vec![2, 2, 2]).unwrap()
    }

    #[test]
    fn census_small() {
        assert_eq!(a2().all_two_smcs().len(), 5);
        assert_eq!(AlgebraSpec::new(3, vec![3, 2, 1]).unwrap().all_two_smcs().len(), 14);
    }

    #[test]
    fn incompletable_pair_on_the_three_cycle() {
        let s = c3();
        let sbp = SemibrickPair::new([Indec::new(1, 2)], [Indec::new(2, 2)]);
        assert!(s.is_semibrick_pair(&sbp));
        assert!(matches!(
            s.check_mutation_compatible(&sbp),
            Err(SbpError::ProperApproximation { .. })
        ));
        assert!(s.complete(&sbp).is_err());
        // and indeed no complete collection contains it
        for smc in s.all_two_smcs() {
            assert!(
                !(sbp.positive.is_subset(&smc.positive) && sbp.negative.is_subset(&smc.negative))
            );
        }
    }

    #[test]
    fn mutation_walks_the_small_chain() {
        let s = a2();
        let top = SemibrickPair::new([Indec::new(1, 1), Indec::new(2, 1)], []);
        let m1 = s.mutate_smc(&top, Indec::new(1, 1)).unwrap();
        assert_eq!(m1, SemibrickPair::new([Indec::new(2, 1)], [Indec::new(1, 1)]));
        let m2 = s.mutate_smc(&top, Indec::new(2, 1)).unwrap();
        assert_eq!(m2, SemibrickPair::new([Indec::new(1, 2)], [Indec::new(2, 1)]));
    }

    #[test]
    fn compatibility_matches_admissibility_exhaustively() {
        for spec in [a2(), c3(), AlgebraSpec::new(3, vec![3, 2, 1]).unwrap()] {
            let bricks = spec.bricks();
            let k = bricks.len();
            // every sign assignment over every subset of bricks
            for mask in 0..3usize.pow(k as u32) {
                let mut sbp = SemibrickPair::default();
                let mut m = mask;
                for &b in &bricks {
                    match m % 3 {
                        1 => {
                            sbp.positive.insert(b);
                        }
                        2 => {
                            sbp.negative.insert(b);
                        }
                        _ => {}
                    }
                    m /= 3;
                }
                let compatible = spec.is_mutation_compatible(&sbp);
                let admissible = spec.is_admissible(&sbp.pattern());
                assert_eq!(compatible, admissible, "{spec} {sbp:?}");
            }
        }
    }
}
