//! The picture group, its presentations, and the brick-algebra certificate.
//!
//! The group has one generator per brick and one relation per polygon of the
//! torsion lattice; three further presentation styles (parallel Hasse paths,
//! maximal green sequences, coset symbols per torsion class) generate the
//! same group. Instead of solving the word problem we map every word into
//! the brick algebra: the free integer module on the bricks plus a unit,
//! with `S * T` the unique serial extension of `T` by `S` when one exists.
//! The homomorphism `phi` sending `X_S` to `1 + S` separates everything the
//! certificates need: relations hold, generators stay nontrivial and
//! distinct, and label words only depend on path endpoints.

use crate::algebra::{AlgebraSpec, Indec};
use crate::lattice::TorsLattice;
use crate::tautilt::RigidPair;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A generator symbol: `X_S` for a brick, or a coset symbol `g_T` for a
/// torsion class (referenced by its lattice vertex index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Generator {
    Brick(Indec),
    Coset(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Brick(s) => write!(f, "X[{s}]"),
            Generator::Coset(v) => write!(f, "g[{v}]"),
        }
    }
}

/// One letter of a group word: a generator with exponent `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub gen: Generator,
    pub inverse: bool,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gen)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in the group, read left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct GroupWord(pub Vec<Letter>);

impl GroupWord {
    pub fn of_bricks(bricks: impl IntoIterator<Item = Indec>) -> Self {
        GroupWord(
            bricks
                .into_iter()
                .map(|s| Letter { gen: Generator::Brick(s), inverse: false })
                .collect(),
        )
    }

    pub fn tokens(&self) -> Vec<String> {
        self.0.iter().map(|l| l.to_string()).collect()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        write!(f, "{}", self.tokens().join(" "))
    }
}

/// An element of the brick algebra: an integer combination of the unit
/// (keyed by `None`) and the bricks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BrickAlgebraElement {
    coeffs: BTreeMap<Option<Indec>, i64>,
}

/// The product of two basis bricks: the serial middle term of the unique
/// extension of `t` by `s`, when the arcs glue head to tail within the
/// length cap and the two bricks are Hom-orthogonal; zero otherwise.
pub fn basis_product(spec: &AlgebraSpec, s: Indec, t: Indec) -> Option<Indec> {
    debug_assert!(spec.is_brick(s) && spec.is_brick(t));
    if spec.norm((s.top + s.len) as i64) != t.top {
        return None;
    }
    if s.len + t.len > spec.l(s.top).min(spec.n()) {
        return None;
    }
    if s == t || spec.hom_dim(s, t) != 0 || spec.hom_dim(t, s) != 0 {
        return None;
    }
    Some(Indec::new(s.top, s.len + t.len))
}

impl BrickAlgebraElement {
    pub fn zero() -> Self {
        BrickAlgebraElement::default()
    }

    pub fn one() -> Self {
        BrickAlgebraElement { coeffs: [(None, 1)].into() }
    }

    pub fn brick(s: Indec) -> Self {
        BrickAlgebraElement { coeffs: [(Some(s), 1)].into() }
    }

    pub fn coeff(&self, basis: Option<Indec>) -> i64 {
        self.coeffs.get(&basis).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Option<Indec>, i64)> + '_ {
        self.coeffs.iter().map(|(&b, &c)| (b, c))
    }

    pub fn add_scaled(&self, other: &Self, scale: i64) -> Self {
        let mut out = self.coeffs.clone();
        for (&b, &c) in &other.coeffs {
            let e = out.entry(b).or_insert(0);
            *e += scale * c;
            if *e == 0 {
                out.remove(&b);
            }
        }
        BrickAlgebraElement { coeffs: out }
    }

    pub fn mul(&self, other: &Self, spec: &AlgebraSpec) -> Self {
        let mut out: BTreeMap<Option<Indec>, i64> = BTreeMap::new();
        for (&x, &cx) in &self.coeffs {
            for (&y, &cy) in &other.coeffs {
                let basis = match (x, y) {
                    (None, b) | (b, None) => Some(b),
                    (Some(s), Some(t)) => basis_product(spec, s, t).map(Some),
                };
                if let Some(b) = basis {
                    let e = out.entry(b).or_insert(0);
                    *e += cx * cy;
                    if *e == 0 {
                        out.remove(&b);
                    }
                }
            }
        }
        BrickAlgebraElement { coeffs: out }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl fmt::Display for BrickAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(b, c)| {
                let name = match b {
                    None => "1".to_string(),
                    Some(s) => s.to_string(),
                };
                match c {
                    1 => name,
                    -1 => format!("-{name}"),
                    c => format!("{c}*{name}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Image of a word of brick generators in the brick algebra:
/// `X_S` goes to `1 + S` and `X_S^{-1}` to `1 - S` (its inverse, since
/// `S * S = 0`). Coset symbols have no direct image and are rejected;
/// substitute their representative words first.
pub fn phi(spec: &AlgebraSpec, w: &GroupWord) -> BrickAlgebraElement {
    let mut acc = BrickAlgebraElement::one();
    for letter in &w.0 {
        let s = match letter.gen {
            Generator::Brick(s) => s,
            Generator::Coset(v) => panic!("phi is undefined on the coset symbol g[{v}]"),
        };
        let sign = if letter.inverse { -1 } else { 1 };
        let factor = BrickAlgebraElement::one().add_scaled(&BrickAlgebraElement::brick(s), sign);
        acc = acc.mul(&factor, spec);
    }
    acc
}

/// The four presentation styles of the picture group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    /// One relation per polygon of the torsion lattice.
    Polygon,
    /// One relation per parallel pair of directed Hasse paths.
    Path,
    /// Relations equating all maximal green sequence words.
    Mgs,
    /// Coset symbols `g_T` with one relation per Hasse arrow.
    Coset,
}

impl Style {
    pub const ALL: [Style; 4] = [Style::Polygon, Style::Path, Style::Mgs, Style::Coset];

    pub fn name(self) -> &'static str {
        match self {
            Style::Polygon => "polygon",
            Style::Path => "path",
            Style::Mgs => "mgs",
            Style::Coset => "coset",
        }
    }
}

impl std::str::FromStr for Style {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "polygon" => Ok(Style::Polygon),
            "path" => Ok(Style::Path),
            "mgs" => Ok(Style::Mgs),
            "coset" => Ok(Style::Coset),
            other => Err(format!("unknown presentation style {other:?}")),
        }
    }
}

/// A finite presentation: generators plus relation word pairs.
#[derive(Debug, Clone, Serialize)]
pub struct Presentation {
    pub style: Style,
    pub generators: Vec<Generator>,
    pub relations: Vec<(GroupWord, GroupWord)>,
}

impl Presentation {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "style": self.style.name(),
            "generators": self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "relations": self
                .relations
                .iter()
                .map(|(l, r)| vec![l.tokens(), r.tokens()])
                .collect::<Vec<_>>(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str("generators:");
        for g in &self.generators {
            out.push(' ');
            out.push_str(&g.to_string());
        }
        out.push('\n');
        out.push_str("relations:\n");
        for (l, r) in &self.relations {
            out.push_str(&format!("  {l} = {r}\n"));
        }
        out
    }
}

/// Normalize a relation to an unordered word pair and drop trivial ones.
fn push_relation(
    seen: &mut BTreeSet<(GroupWord, GroupWord)>,
    out: &mut Vec<(GroupWord, GroupWord)>,
    mut a: GroupWord,
    mut b: GroupWord,
) {
    if a == b {
        return;
    }
    if b < a {
        std::mem::swap(&mut a, &mut b);
    }
    if seen.insert((a.clone(), b.clone())) {
        out.push((a, b));
    }
}

/// All directed path label words between two comparable vertices.
fn all_paths(lat: &TorsLattice, a: usize, b: usize) -> Vec<Vec<Indec>> {
    if a == b {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for &(j, label) in &lat.vertices()[a].down {
        if lat.leq(b, j) {
            for mut rest in all_paths(lat, j, b) {
                rest.insert(0, label);
                out.push(rest);
            }
        }
    }
    out
}

/// The representative word of a coset symbol: the labels of one directed
/// path from the vertex down to the zero class.
pub fn coset_word(lat: &TorsLattice, v: usize) -> GroupWord {
    GroupWord::of_bricks(lat.path_labels(v, lat.bottom()).expect("no path to the zero class"))
}

/// Emit the presentation of the picture group in the requested style.
pub fn presentation_from(lat: &TorsLattice, style: Style) -> Presentation {
    let spec = lat.wide().ambient();
    let mut generators: Vec<Generator> = lat
        .wide()
        .indecs()
        .iter()
        .copied()
        .filter(|&s| spec.is_brick(s))
        .map(Generator::Brick)
        .collect();
    let mut seen = BTreeSet::new();
    let mut relations = Vec::new();
    match style {
        Style::Polygon => {
            for p in lat.polygons() {
                push_relation(
                    &mut seen,
                    &mut relations,
                    GroupWord::of_bricks(p.left),
                    GroupWord::of_bricks(p.right),
                );
            }
        }
        Style::Path => {
            for a in 0..lat.len() {
                for b in 0..lat.len() {
                    if a == b || !lat.leq(b, a) {
                        continue;
                    }
                    let words = all_paths(lat, a, b);
                    for w in &words[1..] {
                        push_relation(
                            &mut seen,
                            &mut relations,
                            GroupWord::of_bricks(words[0].iter().copied()),
                            GroupWord::of_bricks(w.iter().copied()),
                        );
                    }
                }
            }
        }
        Style::Mgs => {
            let mgs = lat.maximal_green_sequences();
            for w in &mgs[1..] {
                push_relation(
                    &mut seen,
                    &mut relations,
                    GroupWord::of_bricks(mgs[0].iter().copied()),
                    GroupWord::of_bricks(w.iter().copied()),
                );
            }
        }
        Style::Coset => {
            generators.extend((0..lat.len()).map(Generator::Coset));
            for arrow in lat.arrows() {
                let lhs = GroupWord(vec![Letter {
                    gen: Generator::Coset(arrow.from),
                    inverse: false,
                }]);
                let rhs = GroupWord(vec![
                    Letter { gen: Generator::Brick(arrow.label), inverse: false },
                    Letter { gen: Generator::Coset(arrow.to), inverse: false },
                ]);
                push_relation(&mut seen, &mut relations, lhs, rhs);
            }
            push_relation(
                &mut seen,
                &mut relations,
                GroupWord(vec![Letter { gen: Generator::Coset(lat.bottom()), inverse: false }]),
                GroupWord::default(),
            );
        }
    }
    Presentation { style, generators, relations }
}

pub fn presentation(spec: &AlgebraSpec, style: Style) -> Presentation {
    presentation_from(&TorsLattice::build(crate::tautilt::WideSub::full(spec)), style)
}

/// Replace coset symbols by their representative words so `phi` applies.
fn substitute(lat: &TorsLattice, w: &GroupWord) -> GroupWord {
    let mut out = Vec::new();
    for &letter in &w.0 {
        match letter.gen {
            Generator::Brick(_) => out.push(letter),
            Generator::Coset(v) => {
                assert!(!letter.inverse, "inverted coset symbols are not emitted");
                out.extend(coset_word(lat, v).0);
            }
        }
    }
    GroupWord(out)
}

/// The verification report of [`verify_presentation`].
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    /// Relation count per presentation style.
    pub relation_counts: BTreeMap<String, usize>,
    /// Failed checks, each with the offending word pair.
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Run every certificate the brick algebra can decide:
/// (i) `phi` respects each relation in all four styles;
/// (ii) the generator images are nontrivial and pairwise distinct;
/// (iii) `phi` of a directed path word only depends on its endpoints;
/// (iv) distinct torsion classes have distinct coset-representative images.
pub fn verify_presentation(spec: &AlgebraSpec) -> VerifyReport {
    let lat = TorsLattice::build(crate::tautilt::WideSub::full(spec));
    let mut report =
        VerifyReport { relation_counts: BTreeMap::new(), failures: Vec::new() };

    for style in Style::ALL {
        let pres = presentation_from(&lat, style);
        report.relation_counts.insert(style.name().to_string(), pres.relations.len());
        for (lhs, rhs) in &pres.relations {
            let il = phi(spec, &substitute(&lat, lhs));
            let ir = phi(spec, &substitute(&lat, rhs));
            if il != ir {
                report.failures.push(format!(
                    "phi breaks the {} relation: {lhs} = {rhs} ({il} vs {ir})",
                    style.name()
                ));
            }
        }
    }

    let bricks: Vec<Indec> = spec.bricks();
    let images: Vec<BrickAlgebraElement> = bricks
        .iter()
        .map(|&s| phi(spec, &GroupWord::of_bricks([s])))
        .collect();
    for (i, x) in images.iter().enumerate() {
        if x.is_one() {
            report.failures.push(format!("phi(X[{}]) is trivial", bricks[i]));
        }
        for (j, y) in images.iter().enumerate().skip(i + 1) {
            if x == y {
                report
                    .failures
                    .push(format!("phi(X[{}]) = phi(X[{}])", bricks[i], bricks[j]));
            }
        }
    }

    // path invariance: for each lower endpoint, propagate the set of
    // phi-images of all descending paths; invariance means every set stays
    // a singleton
    for b in 0..lat.len() {
        let mut images: BTreeMap<usize, Vec<BrickAlgebraElement>> = BTreeMap::new();
        images.insert(b, vec![BrickAlgebraElement::one()]);
        // vertices in order of increasing torsion class contain b's history
        let mut order: Vec<usize> = (0..lat.len()).filter(|&a| lat.leq(b, a)).collect();
        order.sort_by_key(|&a| lat.vertices()[a].fac.len());
        for &a in &order {
            if a == b {
                continue;
            }
            let mut found: Vec<BrickAlgebraElement> = Vec::new();
            for &(j, label) in &lat.vertices()[a].down {
                if !lat.leq(b, j) {
                    continue;
                }
                let step = phi(spec, &GroupWord::of_bricks([label]));
                for img in &images[&j] {
                    let x = step.mul(img, spec);
                    if !found.contains(&x) {
                        found.push(x);
                    }
                }
            }
            if found.len() > 1 {
                report.failures.push(format!(
                    "path words from vertex {a} to vertex {b} have {} distinct images",
                    found.len()
                ));
            }
            images.insert(a, found);
        }
    }

    // distinct torsion classes keep distinct coset representatives under phi
    let reps: Vec<BrickAlgebraElement> =
        (0..lat.len()).map(|v| phi(spec, &coset_word(&lat, v))).collect();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if reps[i] == reps[j] {
                report.failures.push(format!(
                    "coset representatives of vertices {i} and {j} have equal images"
                ));
            }
        }
    }

    report
}

/// The group-valued functor on a morphism of the cluster morphism category:
/// the label word of any directed path from the factor closure of the
/// payload's module part down to the zero class, inside the torsion lattice
/// of the source subcategory. Well-defined up to `phi` by path invariance.
pub fn group_functor_f(lat: &TorsLattice, payload: &RigidPair) -> GroupWord {
    let fac = lat.wide().fac(&payload.modules);
    let v = lat
        .vertices()
        .iter()
        .position(|vx| vx.fac == fac)
        .expect("factor closure is not a torsion class");
    GroupWord::of_bricks(lat.path_labels(v, lat.bottom()).expect("no path to the zero class"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tautilt::WideSub;

    fn a2() -> AlgebraSpec {
        AlgebraSpec::new(2, vec![2, 1]).unwrap()
    }

    #[test]
    fn basis_products_of_the_pentagon() {
        let spec = a2();
        assert_eq!(
            basis_product(&spec, Indec::new(1, 1), Indec::new(2, 1)),
            Some(Indec::new(1, 2))
        );
        // length cap: l(2) = 1 forbids the reversed gluing
        assert_eq!(basis_product(&spec, Indec::new(2, 1), Indec::new(1, 1)), None);
        for s in spec.bricks() {
            assert_eq!(basis_product(&spec, s, s), None);
        }
    }

    #[test]
    fn brick_multiplication_is_associative() {
        for spec in [a2(), AlgebraSpec::new(3, vec![2, 2, 2]).unwrap()] {
            let basis: Vec<BrickAlgebraElement> = std::iter::once(BrickAlgebraElement::one())
                .chain(spec.bricks().into_iter().map(BrickAlgebraElement::brick))
                .collect();
            for x in &basis {
                for y in &basis {
                    for z in &basis {
                        assert_eq!(
                            x.mul(y, &spec).mul(z, &spec),
                            x.mul(&y.mul(z, &spec), &spec)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn phi_expands_products_and_inverts() {
        let spec = a2();
        let w = GroupWord::of_bricks([Indec::new(1, 1), Indec::new(2, 1)]);
        let img = phi(&spec, &w);
        let mut expect = BrickAlgebraElement::one();
        for s in [Indec::new(1, 1), Indec::new(2, 1), Indec::new(1, 2)] {
            expect = expect.add_scaled(&BrickAlgebraElement::brick(s), 1);
        }
        assert_eq!(img, expect);
        for s in spec.bricks() {
            let word = GroupWord(vec![
                Letter { gen: Generator::Brick(s), inverse: false },
                Letter { gen: Generator::Brick(s), inverse: true },
            ]);
            assert!(phi(&spec, &word).is_one());
        }
    }

    #[test]
    fn pentagon_presentations() {
        let spec = a2();
        let lat = TorsLattice::build(WideSub::full(&spec));
        let polygon = presentation_from(&lat, Style::Polygon);
        assert_eq!(polygon.generators.len(), 3);
        assert_eq!(polygon.relations.len(), 1);
        let (lhs, rhs) = &polygon.relations[0];
        let short = GroupWord::of_bricks([Indec::new(1, 1), Indec::new(2, 1)]);
        let long =
            GroupWord::of_bricks([Indec::new(2, 1), Indec::new(1, 2), Indec::new(1, 1)]);
        assert!((lhs, rhs) == (&short, &long) || (lhs, rhs) == (&long, &short));

        let mgs = presentation_from(&lat, Style::Mgs);
        assert_eq!(mgs.relations, polygon.relations);

        let coset = presentation_from(&lat, Style::Coset);
        assert_eq!(coset.generators.len(), 3 + 5);
        // one relation per arrow plus the trivialized zero class
        assert_eq!(coset.relations.len(), 5 + 1);
    }

    #[test]
    fn verifier_passes_small_specs() {
        for spec in [
            a2(),
            AlgebraSpec::new(3, vec![3, 2, 1]).unwrap(),
            AlgebraSpec::new(3, vec![2, 2, 2]).unwrap(),
        ] {
            let report = verify_presentation(&spec);
            assert!(report.passed(), "{spec}: {:?}", report.failures);
            assert!(report.relation_counts.values().all(|&c| c > 0), "{spec}");
        }
    }

    #[test]
    fn functor_words_label_paths() {
        let spec = a2();
        let lat = TorsLattice::build(WideSub::full(&spec));
        // a single simple: one arrow Fac S1 -> 0
        let w = group_functor_f(&lat, &RigidPair::new([Indec::new(1, 1)], []));
        assert_eq!(w, GroupWord::of_bricks([Indec::new(1, 1)]));
        // the empty pair: empty word
        let e = group_functor_f(&lat, &RigidPair::default());
        assert!(e.0.is_empty());
        // a full pair reaches the bottom: its word is a maximal green sequence
        let full = group_functor_f(
            &lat,
            &RigidPair::new([Indec::new(1, 2), Indec::new(2, 1)], []),
        );
        let labels: Vec<Indec> = full
            .0
            .iter()
            .map(|l| match l.gen {
                Generator::Brick(s) => s,
                _ => unreachable!(),
            })
            .collect();
        assert!(lat.maximal_green_sequences().contains(&labels));
    }
}
