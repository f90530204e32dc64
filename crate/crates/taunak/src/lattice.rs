//! The lattice of torsion classes with its brick labeling.
//!
//! Vertices are support tau-tilting pairs of a wide subcategory (equivalently
//! the functorially finite torsion classes, recorded by their sets of
//! indecomposables); covering relations are the left mutations, and each
//! cover carries a brick label: the exchanged module modulo the trace of the
//! pair. Pairs of covers sharing a top span polygons whose two sides give the
//! defining relations of the picture group.

use crate::algebra::Indec;
use crate::smc::SemibrickPair;
use crate::tautilt::{RigidPair, WideSub};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// A labeled covering arrow `from -> to` (torsion classes shrink along it).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LabeledArrow {
    pub from: usize,
    pub to: usize,
    pub label: Indec,
}

#[derive(Debug, Clone)]
pub struct Vertex {
    pub pair: RigidPair,
    pub fac: BTreeSet<Indec>,
    pub down: Vec<(usize, Indec)>,
    pub up: Vec<(usize, Indec)>,
}

/// A polygon: an interval spanned by two covers with a common top, read as
/// the two maximal chains from top to bottom with their label words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Polygon {
    pub top: usize,
    pub bottom: usize,
    /// Label word of the side starting with the smaller first label.
    pub left: Vec<Indec>,
    /// Label word of the other side.
    pub right: Vec<Indec>,
}

#[derive(Debug, Clone)]
pub struct TorsLattice {
    wide: WideSub,
    vertices: Vec<Vertex>,
    top: usize,
    bottom: usize,
}

impl TorsLattice {
    pub fn build(wide: WideSub) -> Self {
        let pairs = wide.all_stt();
        let index: BTreeMap<RigidPair, usize> =
            pairs.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut vertices: Vec<Vertex> = pairs
            .iter()
            .map(|p| Vertex {
                pair: p.clone(),
                fac: wide.fac(&p.modules),
                down: Vec::new(),
                up: Vec::new(),
            })
            .collect();
        let mut ups: Vec<Vec<(usize, Indec)>> = vec![Vec::new(); vertices.len()];
        for i in 0..vertices.len() {
            let u = vertices[i].pair.clone();
            for x in u.summands() {
                let (v, left) = match wide.exchange(&u, x) {
                    Ok(r) => r,
                    Err(_) => continue,
                };
                if !left {
                    continue;
                }
                assert!(!x.shifted, "left mutation at a shifted summand");
                let modules: Vec<Indec> = u.modules.iter().copied().collect();
                let label = wide
                    .ambient()
                    .radical_quotient(&modules, x.module)
                    .expect("brick label collapsed to zero");
                assert!(wide.ambient().is_brick(label));
                let j = index[&v];
                vertices[i].down.push((j, label));
                ups[j].push((i, label));
            }
            vertices[i].down.sort();
        }
        for (v, up) in vertices.iter_mut().zip(ups) {
            v.up = up;
            v.up.sort();
        }
        let top = vertices
            .iter()
            .position(|v| v.up.is_empty())
            .expect("no maximal torsion class");
        let bottom = vertices
            .iter()
            .position(|v| v.down.is_empty())
            .expect("no minimal torsion class");
        TorsLattice { wide, vertices, top, bottom }
    }

    pub fn wide(&self) -> &WideSub {
        &self.wide
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn index_of(&self, pair: &RigidPair) -> Option<usize> {
        self.vertices.iter().position(|v| v.pair == *pair)
    }

    pub fn arrows(&self) -> Vec<LabeledArrow> {
        let mut out = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            for &(j, label) in &v.down {
                out.push(LabeledArrow { from: i, to: j, label });
            }
        }
        out
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.vertices[a].fac.is_subset(&self.vertices[b].fac)
    }

    /// Join: the intersection of every torsion class containing both.
    pub fn join(&self, a: usize, b: usize) -> usize {
        let mut acc: Option<BTreeSet<Indec>> = None;
        for v in &self.vertices {
            if self.vertices[a].fac.is_subset(&v.fac) && self.vertices[b].fac.is_subset(&v.fac) {
                acc = Some(match acc {
                    None => v.fac.clone(),
                    Some(s) => s.intersection(&v.fac).copied().collect(),
                });
            }
        }
        let target = acc.expect("no upper bound");
        self.vertices
            .iter()
            .position(|v| v.fac == target)
            .expect("join is not a torsion class")
    }

    /// Meet: the unique largest class below both.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let below: Vec<usize> = (0..self.len())
            .filter(|&i| self.leq(i, a) && self.leq(i, b))
            .collect();
        *below
            .iter()
            .find(|&&i| below.iter().all(|&j| self.leq(j, i)))
            .expect("meet is not attained")
    }

    /// The complete collection sitting at a vertex: outgoing labels in degree
    /// zero, incoming labels shifted.
    pub fn x_of(&self, v: usize) -> SemibrickPair {
        SemibrickPair::new(
            self.vertices[v].down.iter().map(|&(_, s)| s),
            self.vertices[v].up.iter().map(|&(_, s)| s),
        )
    }

    /// Walk the unique chain from `top` towards `bottom` that starts with the
    /// given cover, staying inside the interval; returns the label word.
    fn side(&self, start: (usize, Indec), bottom: usize) -> Vec<Indec> {
        let mut word = vec![start.1];
        let mut cur = start.0;
        while cur != bottom {
            let next: Vec<(usize, Indec)> = self.vertices[cur]
                .down
                .iter()
                .copied()
                .filter(|&(j, _)| self.leq(bottom, j))
                .collect();
            assert_eq!(next.len(), 1, "polygon side branches");
            word.push(next[0].1);
            cur = next[0].0;
        }
        word
    }

    /// All polygons, deduplicated by their pair of label words.
    pub fn polygons(&self) -> Vec<Polygon> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for top in 0..self.len() {
            let down = &self.vertices[top].down;
            for i in 0..down.len() {
                for k in i + 1..down.len() {
                    let bottom = self.meet(down[i].0, down[k].0);
                    let mut a = self.side(down[i], bottom);
                    let mut b = self.side(down[k], bottom);
                    if a > b {
                        std::mem::swap(&mut a, &mut b);
                    }
                    if seen.insert((a.clone(), b.clone())) {
                        out.push(Polygon { top, bottom, left: a, right: b });
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// All maximal label words from the whole category down to zero.
    pub fn maximal_green_sequences(&self) -> Vec<Vec<Indec>> {
        let mut out = Vec::new();
        let mut word = Vec::new();
        self.dfs_green(self.top, &mut word, &mut out);
        out.sort();
        out
    }

    fn dfs_green(&self, v: usize, word: &mut Vec<Indec>, out: &mut Vec<Vec<Indec>>) {
        if v == self.bottom {
            out.push(word.clone());
            return;
        }
        for &(j, label) in &self.vertices[v].down {
            word.push(label);
            self.dfs_green(j, word, out);
            word.pop();
        }
    }

    /// Any one directed path of covers from `a` down to `b`, as labels.
    pub fn path_labels(&self, a: usize, b: usize) -> Option<Vec<Indec>> {
        if a == b {
            return Some(Vec::new());
        }
        for &(j, label) in &self.vertices[a].down {
            if self.leq(b, j) {
                if let Some(mut rest) = self.path_labels(j, b) {
                    rest.insert(0, label);
                    return Some(rest);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;
    use crate::smc::SmcOps;

    fn lat(spec: &AlgebraSpec) -> TorsLattice {
        TorsLattice::build(WideSub::full(spec))
    }

    #[test]
    fn two_vertex_chain_lattice() {
        let spec = AlgebraSpec::new(2, vec![2, 1]).unwrap();
        let l = lat(&spec);
        assert_eq!(l.len(), 5);
        let mgs = l.maximal_green_sequences();
        // the two maximal chains of the pentagon
        assert_eq!(mgs.len(), 2);
        assert!(mgs.contains(&vec![Indec::new(1, 1), Indec::new(2, 1)]));
        assert!(mgs.contains(&vec![Indec::new(2, 1), Indec::new(1, 2), Indec::new(1, 1)]));
        assert_eq!(l.polygons().len(), 1);
    }

    #[test]
    fn labels_reproduce_the_collections() {
        for spec in [
            AlgebraSpec::new(2, vec![2, 1]).unwrap(),
            AlgebraSpec::new(3, vec![3, 2, 1]).unwrap(),
            AlgebraSpec::new(3, vec![2, 2, 2]).unwrap(),
        ] {
            let l = lat(&spec);
            let from_lattice: BTreeSet<SemibrickPair> =
                (0..l.len()).map(|v| l.x_of(v)).collect();
            let from_arcs: BTreeSet<SemibrickPair> =
                spec.all_two_smcs().into_iter().collect();
            assert_eq!(from_lattice, from_arcs, "{spec}");
        }
    }

    #[test]
    fn lattice_adjacency_matches_collection_mutation() {
        for spec in [
            AlgebraSpec::new(3, vec![3, 2, 1]).unwrap(),
            AlgebraSpec::new(3, vec![2, 2, 2]).unwrap(),
        ] {
            let l = lat(&spec);
            for i in 0..l.len() {
                let x = l.x_of(i);
                for &(j, label) in &l.vertices()[i].down {
                    assert!(x.positive.contains(&label));
                    let mutated = spec.mutate_smc(&x, label).unwrap();
                    assert_eq!(mutated, l.x_of(j), "{spec} at {label}");
                }
            }
        }
    }

    #[test]
    fn polygon_sides_are_short_and_exact()
    {
        for spec in [
            AlgebraSpec::new(3, vec![3, 2, 1]).unwrap(),
            AlgebraSpec::new(3, vec![2, 2, 2]).unwrap(),
            AlgebraSpec::new(4, vec![3, 3, 3, 3]).unwrap(),
        ] {
            let l = lat(&spec);
            for p in l.polygons() {
                // each side starts with one of the two top labels and ends
                // with the other
                for (side, other) in [(&p.left, &p.right), (&p.right, &p.left)] {
                    let s = side[0];
                    let t = other[0];
                    assert!(side.len() <= 3);
                    assert_eq!(*side.last().unwrap(), t);
                    match side.len() {
                        2 => assert_eq!(spec.ext_dim(t, s), 0),
                        3 => {
                            assert_eq!(spec.ext_dim(t, s), 1);
                            // middle term of the extension of t by s
                            assert_eq!(side[1], Indec::new(t.top, t.len + s.len));
                        }
                        _ => panic!("degenerate polygon side"),
                    }
                }
            }
        }
    }
}
