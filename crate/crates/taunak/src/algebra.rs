//! Connected Nakayama algebras presented by their Kupisch series, together
//! with the arithmetic of their indecomposable (serial) modules.
//!
//! Every indecomposable module over such an algebra is determined by the
//! vertex carrying its top and by its composition length, so Hom spaces,
//! extensions, syzygies and the Auslander-Reiten translate all reduce to
//! modular interval arithmetic on the cyclically ordered vertex set.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Errors produced while validating an algebra description or module token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("vertex count must be positive")]
    EmptyQuiver,
    #[error("kupisch series has {got} entries, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("kupisch entry l({vertex}) = {value} must be at least 1")]
    NonPositiveLength { vertex: usize, value: usize },
    #[error("kupisch series fails l({vertex}) >= l({prev}) - 1")]
    NotSuccessorClosed { vertex: usize, prev: usize },
    #[error("kupisch entry l({vertex}) = 1 is only allowed at the last vertex")]
    PrematureSimpleProjective { vertex: usize },
    #[error("module M({top},{len}) does not exist: {reason}")]
    BadModule { top: usize, len: usize, reason: String },
    #[error("cannot parse module token `{0}`, expected M(i,j) or M(i,j)[1]")]
    BadToken(String),
}

/// A connected Nakayama algebra, recorded as the number of simples `n` and the
/// Kupisch series `l(1), ..., l(n)` of projective lengths.
///
/// Validity requires `l(i) >= l(i-1) - 1` cyclically and `l(i) > 1` for every
/// `i < n`; the algebra is *linear* (path algebra quotient of the straight
/// A_n quiver) when `l(n) = 1` and *cyclic* (quotient of the crown quiver)
/// otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraSpec {
    n: usize,
    kupisch: Vec<usize>,
}

/// An indecomposable serial module `M(top, len)`: the quotient of the
/// projective at `top` with composition series `S_top, S_{top+1}, ...`
/// (indices cyclic) of the given length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Indec {
    pub top: usize,
    pub len: usize,
}

/// A module together with an optional homological shift, used for the
/// two-term objects `M` and `P[1]` appearing in silting-style collections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignedIndec {
    pub module: Indec,
    pub shifted: bool,
}

/// Qualitative shape of the Hom space between two indecomposables.
///
/// For bricks the Hom space is at most one dimensional, so a single tag
/// describes the whole space; `Proper` marks a nonzero map that is neither
/// injective nor surjective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HomKind {
    Zero,
    Iso,
    Mono,
    Epi,
    Proper,
}

impl Indec {
    pub fn new(top: usize, len: usize) -> Self {
        Indec { top, len }
    }

    pub fn shifted(self) -> SignedIndec {
        SignedIndec { module: self, shifted: true }
    }

    pub fn plain(self) -> SignedIndec {
        SignedIndec { module: self, shifted: false }
    }
}

impl fmt::Display for Indec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.top, self.len)
    }
}

impl fmt::Display for SignedIndec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shifted {
            write!(f, "{}[1]", self.module)
        } else {
            write!(f, "{}", self.module)
        }
    }
}

/// Parse `M(i,j)` or `M(i,j)[1]`.
pub fn parse_signed_indec(token: &str) -> Result<SignedIndec, SpecError> {
    let t = token.trim();
    let bad = || SpecError::BadToken(token.to_string());
    let (body, shifted) = match t.strip_suffix("[1]") {
        Some(b) => (b, true),
        None => (t, false),
    };
    let inner = body
        .strip_prefix("M(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(bad)?;
    let (i, j) = inner.split_once(',').ok_or_else(bad)?;
    let top: usize = i.trim().parse().map_err(|_| bad())?;
    let len: usize = j.trim().parse().map_err(|_| bad())?;
    Ok(SignedIndec { module: Indec { top, len }, shifted })
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lambda({}; {:?})", self.n, self.kupisch)
    }
}

impl AlgebraSpec {
    /// Validate a Kupisch series and build the algebra.
    pub fn new(n: usize, kupisch: Vec<usize>) -> Result<Self, SpecError> {
        if n == 0 {
            return Err(SpecError::EmptyQuiver);
        }
        if kupisch.len() != n {
            return Err(SpecError::LengthMismatch { got: kupisch.len(), expected: n });
        }
        for (idx, &l) in kupisch.iter().enumerate() {
            if l == 0 {
                return Err(SpecError::NonPositiveLength { vertex: idx + 1, value: l });
            }
        }
        let spec = AlgebraSpec { n, kupisch };
        for i in 1..=n {
            let prev = spec.norm(i as i64 - 1);
            if i < n && spec.l(i) == 1 {
                return Err(SpecError::PrematureSimpleProjective { vertex: i });
            }
            if spec.l(i) + 1 < spec.l(prev) {
                return Err(SpecError::NotSuccessorClosed { vertex: i, prev });
            }
        }
        Ok(spec)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kupisch(&self) -> &[usize] {
        &self.kupisch
    }

    /// Projective length at vertex `i` (1-based).
    pub fn l(&self, i: usize) -> usize {
        self.kupisch[i - 1]
    }

    /// Reduce an integer to the cyclic vertex range `1..=n`.
    pub fn norm(&self, i: i64) -> usize {
        let n = self.n as i64;
        (((i - 1) % n + n) % n + 1) as usize
    }

    /// A linear algebra has a simple projective at the last vertex; otherwise
    /// the quiver is a single oriented cycle.
    pub fn is_cyclic(&self) -> bool {
        self.l(self.n) > 1
    }

    /// All indecomposable modules `M(i, j)`, `1 <= j <= l(i)`.
    pub fn indecs(&self) -> Vec<Indec> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.l(i) {
                out.push(Indec::new(i, j));
            }
        }
        out
    }

    pub fn check_indec(&self, m: Indec) -> Result<(), SpecError> {
        if m.top < 1 || m.top > self.n {
            return Err(SpecError::BadModule {
                top: m.top,
                len: m.len,
                reason: format!("top vertex out of range 1..={}", self.n),
            });
        }
        if m.len < 1 || m.len > self.l(m.top) {
            return Err(SpecError::BadModule {
                top: m.top,
                len: m.len,
                reason: format!("length out of range 1..=l({}) = {}", m.top, self.l(m.top)),
            });
        }
        Ok(())
    }

    pub fn is_indec(&self, m: Indec) -> bool {
        self.check_indec(m).is_ok()
    }

    /// Composition factors from top to socle, as vertex indices.
    pub fn factors(&self, m: Indec) -> Vec<usize> {
        (0..m.len).map(|k| self.norm(m.top as i64 + k as i64)).collect()
    }

    /// Vertex carrying the socle of `m`.
    pub fn socle(&self, m: Indec) -> usize {
        self.norm(m.top as i64 + m.len as i64 - 1)
    }

    pub fn is_projective(&self, m: Indec) -> bool {
        m.len == self.l(m.top)
    }

    pub fn projectives(&self) -> Vec<Indec> {
        (1..=self.n).map(|i| Indec::new(i, self.l(i))).collect()
    }

    /// Projective cover of `m`.
    pub fn proj_cover(&self, m: Indec) -> Indec {
        Indec::new(m.top, self.l(m.top))
    }

    /// First syzygy (kernel of the projective cover), `None` when projective.
    pub fn syzygy(&self, m: Indec) -> Option<Indec> {
        if self.is_projective(m) {
            None
        } else {
            Some(Indec::new(
                self.norm(m.top as i64 + m.len as i64),
                self.l(m.top) - m.len,
            ))
        }
    }

    /// Auslander-Reiten translate: shift the support one step around the
    /// cycle; projectives are sent to zero.
    pub fn tau(&self, m: Indec) -> Option<Indec> {
        if self.is_projective(m) {
            None
        } else {
            Some(Indec::new(self.norm(m.top as i64 + 1), m.len))
        }
    }

    /// Inverse translate, `None` on injectives.
    pub fn tau_inv(&self, m: Indec) -> Option<Indec> {
        let cand = Indec::new(self.norm(m.top as i64 - 1), m.len);
        if self.is_indec(cand) && !self.is_projective(cand) && self.tau(cand) == Some(m) {
            Some(cand)
        } else {
            None
        }
    }

    /// Dimension of `Hom(M(i,j), M(k,l))`.
    ///
    /// A basis is indexed by common "windows": quotients of the source that
    /// coincide with submodules of the target. The window of length `t`
    /// matches exactly when `i = k + l - t (mod n)` and `t <= min(j, l)`.
    pub fn hom_dim(&self, x: Indec, y: Indec) -> usize {
        let (i, j) = (x.top as i64, x.len as i64);
        let (k, l) = (y.top as i64, y.len as i64);
        let mut count = 0;
        for t in 1..=j.min(l) {
            if (k + l - t - i).rem_euclid(self.n as i64) == 0 {
                count += 1;
            }
        }
        count as usize
    }

    /// Qualitative shape of the Hom space from `x` to `y`.
    ///
    /// An injective map exists exactly when `x` is isomorphic to a submodule
    /// of `y` (socles aligned, `x` no longer than `y`); a surjection exists
    /// exactly when `y` is a quotient of `x` (tops aligned, `x` at least as
    /// long). Both at once forces an isomorphism.
    pub fn hom_kind(&self, x: Indec, y: Indec) -> HomKind {
        if self.hom_dim(x, y) == 0 {
            return HomKind::Zero;
        }
        if x == y {
            return HomKind::Iso;
        }
        if self.socle(x) == self.socle(y) && x.len <= y.len {
            return HomKind::Mono;
        }
        if x.top == y.top && x.len >= y.len {
            return HomKind::Epi;
        }
        HomKind::Proper
    }

    /// Dimension of `Ext^1(x, y)`, via the projective cover sequence
    /// `0 -> syzygy(x) -> P(x) -> x -> 0` and the induced long exact sequence.
    pub fn ext_dim(&self, x: Indec, y: Indec) -> usize {
        match self.syzygy(x) {
            None => 0,
            Some(om) => {
                let p0 = self.proj_cover(x);
                self.hom_dim(om, y) + self.hom_dim(x, y) - self.hom_dim(p0, y)
            }
        }
    }

    /// Bricks are exactly the serial modules not longer than the cycle.
    pub fn is_brick(&self, m: Indec) -> bool {
        m.len <= self.n
    }

    pub fn bricks(&self) -> Vec<Indec> {
        self.indecs().into_iter().filter(|&m| self.is_brick(m)).collect()
    }

    /// Quotient of `m` by the radical power leaving `keep` top factors.
    pub fn top_quotient(&self, m: Indec, keep: usize) -> Indec {
        debug_assert!(keep >= 1 && keep <= m.len);
        Indec::new(m.top, keep)
    }

    /// The submodule of `m` of the given length (bottom window).
    pub fn bottom_sub(&self, m: Indec, len: usize) -> Indec {
        debug_assert!(len >= 1 && len <= m.len);
        Indec::new(self.norm(m.top as i64 + m.len as i64 - len as i64), len)
    }

    /// Quotient of `y` by the trace of `u` under non-isomorphisms: removes the
    /// largest bottom window of `y` that is the image of a radical map from a
    /// summand of `u`. Returns `None` when the trace is all of `y`.
    pub fn radical_quotient(&self, u: &[Indec], y: Indec) -> Option<Indec> {
        let mut t_max = 0usize;
        for &x in u {
            // windows of maps x -> y; skip the identity window of an isomorphism
            for t in 1..=x.len.min(y.len) {
                let aligned = (y.top as i64 + y.len as i64 - t as i64 - x.top as i64)
                    .rem_euclid(self.n as i64)
                    == 0;
                if aligned && !(x == y && t == y.len) {
                    t_max = t_max.max(t);
                }
            }
        }
        if t_max >= y.len {
            None
        } else if t_max == 0 {
            Some(y)
        } else {
            Some(Indec::new(y.top, y.len - t_max))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> AlgebraSpec {
        AlgebraSpec::new(2, vec![2, 1]).unwrap()
    }

    fn a3() -> AlgebraSpec {
        AlgebraSpec::new(3, vec![3, 2, 1]).unwrap()
    }

    fn c3() -> AlgebraSpec {
        AlgebraSpec::new(3, vec![2, 2, 2]).unwrap()
    }

    #[test]
    fn kupisch_validation() {
        assert!(AlgebraSpec::new(3, vec![3, 2, 1]).is_ok());
        assert!(AlgebraSpec::new(3, vec![2, 2, 2]).is_ok());
        assert!(AlgebraSpec::new(4, vec![5, 5, 5, 5]).is_ok());
        assert!(AlgebraSpec::new(1, vec![1]).is_ok());
        assert!(AlgebraSpec::new(1, vec![4]).is_ok());
        // drop of more than one along the cycle
        assert!(matches!(
            AlgebraSpec::new(3, vec![3, 1, 1]),
            Err(SpecError::PrematureSimpleProjective { .. })
        ));
        assert!(matches!(
            AlgebraSpec::new(3, vec![3, 3, 1]),
            Err(SpecError::NotSuccessorClosed { vertex: 3, prev: 2 })
        ));
        assert!(matches!(AlgebraSpec::new(0, vec![]), Err(SpecError::EmptyQuiver)));
        assert!(matches!(
            AlgebraSpec::new(2, vec![2]),
            Err(SpecError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn classify_linear_vs_cyclic() {
        assert!(!a3().is_cyclic());
        assert!(c3().is_cyclic());
        assert!(!AlgebraSpec::new(1, vec![1]).unwrap().is_cyclic());
        assert!(AlgebraSpec::new(1, vec![3]).unwrap().is_cyclic());
    }

    #[test]
    fn factors_wrap_around_the_cycle() {
        let s = c3();
        assert_eq!(s.factors(Indec::new(3, 2)), vec![3, 1]);
        assert_eq!(s.factors(Indec::new(2, 2)), vec![2, 3]);
        let l = AlgebraSpec::new(4, vec![5, 5, 5, 5]).unwrap();
        assert_eq!(l.factors(Indec::new(3, 5)), vec![3, 4, 1, 2, 3]);
    }

    #[test]
    fn hom_kind_examples() {
        let s = a3();
        // proper submodule inclusion
        assert_eq!(s.hom_kind(Indec::new(2, 2), Indec::new(1, 3)), HomKind::Mono);
        // top quotient
        assert_eq!(s.hom_kind(Indec::new(1, 3), Indec::new(1, 1)), HomKind::Epi);
        assert_eq!(s.hom_kind(Indec::new(1, 1), Indec::new(2, 1)), HomKind::Zero);
        assert_eq!(s.hom_kind(Indec::new(2, 2), Indec::new(2, 2)), HomKind::Iso);
        // around the cycle: M(2,2) -> M(1,2) hits the middle, neither in nor onto
        let c = AlgebraSpec::new(3, vec![2, 2, 2]).unwrap();
        assert_eq!(c.hom_kind(Indec::new(2, 2), Indec::new(1, 2)), HomKind::Proper);
    }

    #[test]
    fn ext_detects_the_glued_module() {
        let s = a2();
        assert_eq!(s.ext_dim(Indec::new(1, 1), Indec::new(2, 1)), 1);
        assert_eq!(s.ext_dim(Indec::new(2, 1), Indec::new(1, 1)), 0);
        assert_eq!(s.ext_dim(Indec::new(1, 2), Indec::new(2, 1)), 0);
    }

    #[test]
    fn tau_shifts_support() {
        let s = c3();
        assert_eq!(s.tau(Indec::new(1, 1)), Some(Indec::new(2, 1)));
        assert_eq!(s.tau(Indec::new(3, 1)), Some(Indec::new(1, 1)));
        assert_eq!(s.tau(Indec::new(1, 2)), None); // projective
        assert_eq!(s.tau_inv(Indec::new(2, 1)), Some(Indec::new(1, 1)));
    }

    #[test]
    fn brick_cutoff_is_the_cycle_length() {
        let s = AlgebraSpec::new(2, vec![3, 3]).unwrap();
        assert!(s.is_brick(Indec::new(1, 2)));
        assert!(!s.is_brick(Indec::new(1, 3)));
        assert_eq!(s.hom_dim(Indec::new(1, 3), Indec::new(1, 3)), 2);
    }

    #[test]
    fn token_roundtrip() {
        let x = parse_signed_indec("M(2,3)[1]").unwrap();
        assert_eq!(x, Indec::new(2, 3).shifted());
        assert_eq!(x.to_string(), "M(2,3)[1]");
        let y = parse_signed_indec(" M(1,1) ").unwrap();
        assert!(!y.shifted);
        assert!(parse_signed_indec("M(1)").is_err());
        assert!(parse_signed_indec("N(1,2)").is_err());
    }

    #[test]
    fn radical_quotient_strips_the_trace() {
        let s = AlgebraSpec::new(3, vec![2, 2, 2]).unwrap();
        // trace of M(2,2) in M(1,2) is the socle S_2
        assert_eq!(
            s.radical_quotient(&[Indec::new(2, 2)], Indec::new(1, 2)),
            Some(Indec::new(1, 1))
        );
        // epi onto a quotient kills everything
        let lin = a3();
        assert_eq!(lin.radical_quotient(&[Indec::new(1, 3)], Indec::new(1, 2)), None);
        // no maps at all
        assert_eq!(
            lin.radical_quotient(&[Indec::new(2, 1)], Indec::new(1, 1)),
            Some(Indec::new(1, 1))
        );
    }
}
