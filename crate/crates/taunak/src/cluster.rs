//! The cubical morphism category of wide subcategories and its complex.
//!
//! Objects are the wide subcategories (filtration closures of semibrick
//! parts of the collections); a morphism out of `W` is a relative rigid
//! pair, its target the perpendicular subcategory, and composition pulls
//! the second payload back through the reduction dictionary. Every rank-k
//! morphism factors as a standard k-cube; gluing all cubes yields the
//! classifying complex, whose nonpositive curvature is certified by the
//! Gromov flag condition on vertex links.

use crate::algebra::{AlgebraSpec, Indec, SignedIndec};
use crate::smc::{SemibrickPair, SmcOps};
use crate::tautilt::{Reduction, RigidPair, WideSub};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// A morphism: a rigid pair in its source subcategory; the target is the
/// perpendicular subcategory and is derived, never chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morph {
    pub source: usize,
    pub payload: RigidPair,
    pub target: usize,
}

impl Morph {
    pub fn rank(&self) -> usize {
        self.payload.rank()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    #[error("target of the first morphism is {got}, source of the second is {want}")]
    Mismatched { got: usize, want: usize },
    #[error("{0} is not a morphism of the category")]
    NoSuchMorphism(String),
}

/// The factorization cube of one morphism: one vertex per subset of its
/// summands, one edge per one-summand step, all realized in the category.
#[derive(Debug, Clone)]
pub struct FactorizationCube {
    pub base: usize,
    /// Fixed order of the base morphism's summands.
    pub summands: Vec<SignedIndec>,
    /// `vertices[mask]` is the wide reached by the sub-payload `mask`.
    pub vertices: Vec<usize>,
    /// `(mask, position, morph)`: the edge adding summand `position` to the
    /// subset `mask`, realized by the stated rank-one morphism.
    pub edges: Vec<(usize, usize, usize)>,
}

impl FactorizationCube {
    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    /// Number of maximal chains from the empty subset to the full one.
    pub fn maximal_chains(&self) -> usize {
        let k = self.rank();
        let mut count = vec![0usize; 1 << k];
        count[0] = 1;
        for mask in 0..(1usize << k) {
            for p in 0..k {
                if mask & (1 << p) == 0 {
                    count[mask | (1 << p)] += count[mask];
                }
            }
        }
        count[(1 << k) - 1]
    }

    pub fn edge(&self, mask: usize, position: usize) -> usize {
        self.edges
            .iter()
            .find(|&&(m, p, _)| m == mask && p == position)
            .map(|&(_, _, e)| e)
            .expect("missing cube edge")
    }
}

/// The whole category at desk scale: all objects, all morphisms, and the
/// reduction dictionary of each morphism (which carries its target).
#[derive(Debug)]
pub struct ClusterCategory {
    spec: AlgebraSpec,
    wides: Vec<WideSub>,
    wide_index: BTreeMap<BTreeSet<Indec>, usize>,
    stt: Vec<Vec<RigidPair>>,
    morphs: Vec<Morph>,
    morph_index: BTreeMap<(usize, RigidPair), usize>,
    reductions: Vec<Reduction>,
}

/// The projective generator of the filtration closure of a single brick.
pub fn br(spec: &AlgebraSpec, s: Indec) -> Indec {
    assert!(spec.is_brick(s), "{s} is not a brick");
    let w = WideSub::from_semibrick(spec, [s]);
    let ps = w.projectives();
    assert_eq!(ps.len(), 1);
    ps[0]
}

/// Inverse of [`br`]: the head of a relative projective over its radical
/// endomorphisms recovers the brick.
pub fn br_inv(spec: &AlgebraSpec, p: Indec) -> Indec {
    spec.radical_quotient(&[p], p).expect("radical trace exhausts the module")
}

impl ClusterCategory {
    pub fn build(spec: &AlgebraSpec) -> Self {
        // objects: filtration closures of the semibrick parts of the
        // maximal collections
        let mut wides: Vec<WideSub> = Vec::new();
        let mut wide_index: BTreeMap<BTreeSet<Indec>, usize> = BTreeMap::new();
        let mut seen: BTreeSet<BTreeSet<Indec>> = BTreeSet::new();
        for smc in spec.all_two_smcs() {
            if seen.insert(smc.positive.clone()) {
                wides.push(WideSub::from_semibrick(spec, smc.positive.iter().copied()));
            }
        }
        wides.sort_by_key(|w| (w.rank(), w.simples().clone()));
        for (i, w) in wides.iter().enumerate() {
            wide_index.insert(w.simples().clone(), i);
        }
        let stt: Vec<Vec<RigidPair>> = wides.iter().map(|w| w.all_stt()).collect();

        let mut morphs = Vec::new();
        let mut morph_index = BTreeMap::new();
        let mut reductions = Vec::new();
        for (wi, w) in wides.iter().enumerate() {
            let mut payloads: BTreeSet<RigidPair> = BTreeSet::new();
            for u in &stt[wi] {
                let summands = u.summands();
                for mask in 0..(1usize << summands.len()) {
                    payloads.insert(RigidPair::of_summands(
                        summands
                            .iter()
                            .enumerate()
                            .filter(|&(p, _)| mask & (1 << p) != 0)
                            .map(|(_, &x)| x),
                    ));
                }
            }
            for payload in payloads {
                let red = w.reduction(&payload, &stt[wi]);
                let target = *wide_index
                    .get(red.j.simples())
                    .expect("perpendicular subcategory is not an enumerated object");
                let idx = morphs.len();
                morph_index.insert((wi, payload.clone()), idx);
                morphs.push(Morph { source: wi, payload, target });
                reductions.push(red);
            }
        }
        ClusterCategory {
            spec: spec.clone(),
            wides,
            wide_index,
            stt,
            morphs,
            morph_index,
            reductions,
        }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn wides(&self) -> &[WideSub] {
        &self.wides
    }

    pub fn wide_of(&self, simples: &BTreeSet<Indec>) -> Option<usize> {
        self.wide_index.get(simples).copied()
    }

    pub fn full_wide(&self) -> usize {
        self.wide_of(&(1..=self.spec.n()).map(|i| Indec::new(i, 1)).collect())
            .expect("the whole module category is missing")
    }

    pub fn zero_wide(&self) -> usize {
        self.wide_of(&BTreeSet::new()).expect("the zero subcategory is missing")
    }

    pub fn stt_of(&self, wide: usize) -> &[RigidPair] {
        &self.stt[wide]
    }

    pub fn morphs(&self) -> &[Morph] {
        &self.morphs
    }

    pub fn reduction_of(&self, m: usize) -> &Reduction {
        &self.reductions[m]
    }

    pub fn morph_of(&self, source: usize, payload: &RigidPair) -> Result<usize, CatError> {
        self.morph_index
            .get(&(source, payload.clone()))
            .copied()
            .ok_or_else(|| CatError::NoSuchMorphism(format!("[{payload}] out of object {source}")))
    }

    pub fn identity(&self, wide: usize) -> usize {
        self.morph_of(wide, &RigidPair::default()).unwrap()
    }

    pub fn morphs_from(&self, wide: usize) -> Vec<usize> {
        (0..self.morphs.len()).filter(|&m| self.morphs[m].source == wide).collect()
    }

    pub fn describe(&self, m: usize) -> String {
        let mor = &self.morphs[m];
        format!("[{}]: {} -> {}", mor.payload, self.wides[mor.source], self.wides[mor.target])
    }

    /// Composition: pull the second payload back through the reduction
    /// dictionary of the first and take the union.
    pub fn compose(&self, f: usize, g: usize) -> Result<usize, CatError> {
        let (mf, mg) = (&self.morphs[f], &self.morphs[g]);
        if mf.target != mg.source {
            return Err(CatError::Mismatched { got: mf.target, want: mg.source });
        }
        let pulled = self.reductions[f].unapply_pair(&mg.payload);
        self.morph_of(mf.source, &mf.payload.union(&pulled))
    }

    /// The factorization cube of a morphism. Asserts the cube structure:
    /// distinct vertices (the embedding is injective on objects) and one
    /// realized edge per one-summand step.
    pub fn factorization_cube(&self, f: usize) -> FactorizationCube {
        let base = &self.morphs[f];
        let summands = base.payload.summands();
        let k = summands.len();
        let sub_morph = |mask: usize| -> usize {
            let payload = RigidPair::of_summands(
                summands
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| mask & (1 << p) != 0)
                    .map(|(_, &x)| x),
            );
            self.morph_of(base.source, &payload).expect("sub-payload is not a morphism")
        };
        let mut vertices = Vec::with_capacity(1 << k);
        let mut edges = Vec::new();
        for mask in 0..(1usize << k) {
            let sub = sub_morph(mask);
            vertices.push(self.morphs[sub].target);
            let red = &self.reductions[sub];
            for p in 0..k {
                if mask & (1 << p) != 0 {
                    continue;
                }
                let image = red.apply(summands[p]);
                let edge = self
                    .morph_of(self.morphs[sub].target, &RigidPair::of_summands([image]))
                    .expect("cube edge is not a morphism");
                edges.push((mask, p, edge));
            }
        }
        let distinct: BTreeSet<usize> = vertices.iter().copied().collect();
        assert_eq!(distinct.len(), vertices.len(), "cube vertices collide");
        FactorizationCube { base: f, summands, vertices, edges }
    }

    /// The rank-one final edges of the factorization cube.
    pub fn last_factors(&self, f: usize) -> Vec<usize> {
        let cube = self.factorization_cube(f);
        let full = (1usize << cube.rank()) - 1;
        (0..cube.rank()).map(|p| cube.edge(full & !(1 << p), p)).collect()
    }

    /// The rank-one initial edges: the summands themselves.
    pub fn first_factors(&self, f: usize) -> BTreeSet<SignedIndec> {
        self.morphs[f].payload.summands().into_iter().collect()
    }

    /// The collection attached to a support tau-tilting pair of the whole
    /// category, read off the last factors: each final edge starts at a
    /// rank-one object whose brick it contributes, shifted when the edge
    /// payload is.
    pub fn x_of_stt(&self, u: &RigidPair) -> SemibrickPair {
        let f = self
            .morph_of(self.full_wide(), u)
            .expect("not a morphism out of the whole category");
        assert_eq!(self.morphs[f].target, self.zero_wide());
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for l in self.last_factors(f) {
            let m = &self.morphs[l];
            let x = m.payload.summands()[0];
            let brick = br_inv(&self.spec, x.module);
            // the brick is the unique simple of the edge's source object
            assert_eq!(
                self.wides[m.source].simples().iter().copied().collect::<Vec<_>>(),
                vec![brick]
            );
            if x.shifted {
                negative.push(brick);
            } else {
                positive.push(brick);
            }
        }
        SemibrickPair::new(positive, negative)
    }
}

/// A link vertex: one end of a rank-one morphism, sitting at the source
/// (`at_target = false`) or at the target object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeEnd {
    pub edge: usize,
    pub at_target: bool,
}

/// The classifying complex: objects as vertices, rank-one morphisms as
/// edges, each rank-k morphism spanning a k-cube; links stored per vertex
/// as corner simplices over the incident edge-ends.
#[derive(Debug)]
pub struct CubeComplex {
    pub cubes_by_rank: Vec<usize>,
    pub cells_by_rank: Vec<usize>,
    /// Rank-one morphism indices, the edges of the 1-skeleton.
    pub edges: Vec<usize>,
    /// Per vertex: the incident edge-ends.
    pub link_vertices: Vec<Vec<EdgeEnd>>,
    /// Per vertex: corner simplices as sorted lists of link-vertex ids.
    pub link_simplices: Vec<BTreeSet<Vec<usize>>>,
}

/// Per-vertex verdicts of the flag condition on links.
#[derive(Debug, Clone, Serialize)]
pub struct LinkReport {
    pub per_vertex: Vec<bool>,
    pub flag: bool,
}

impl ClusterCategory {
    pub fn build_cube_complex(&self) -> CubeComplex {
        let max_rank = self.wides.iter().map(|w| w.rank()).max().unwrap_or(0);
        let mut cubes_by_rank = vec![0usize; max_rank + 1];
        for m in &self.morphs {
            cubes_by_rank[m.rank()] += 1;
        }
        let mut cells_by_rank = vec![0usize; max_rank + 1];
        for w in &self.wides {
            cells_by_rank[w.rank()] += 1;
        }
        let edges: Vec<usize> =
            (0..self.morphs.len()).filter(|&m| self.morphs[m].rank() == 1).collect();

        let mut link_vertices: Vec<Vec<EdgeEnd>> = vec![Vec::new(); self.wides.len()];
        for &e in &edges {
            link_vertices[self.morphs[e].source].push(EdgeEnd { edge: e, at_target: false });
            link_vertices[self.morphs[e].target].push(EdgeEnd { edge: e, at_target: true });
        }
        for l in &mut link_vertices {
            l.sort();
        }
        let local_id = |v: usize, end: EdgeEnd| -> usize {
            link_vertices[v].binary_search(&end).expect("edge end missing from link")
        };

        let mut link_simplices: Vec<BTreeSet<Vec<usize>>> =
            vec![BTreeSet::new(); self.wides.len()];
        for f in 0..self.morphs.len() {
            let k = self.morphs[f].rank();
            if k < 2 {
                continue;
            }
            let cube = self.factorization_cube(f);
            for mask in 0..(1usize << k) {
                let corner = cube.vertices[mask];
                let mut simplex = Vec::with_capacity(k);
                for p in 0..k {
                    let end = if mask & (1 << p) == 0 {
                        EdgeEnd { edge: cube.edge(mask, p), at_target: false }
                    } else {
                        EdgeEnd { edge: cube.edge(mask & !(1 << p), p), at_target: true }
                    };
                    simplex.push(local_id(corner, end));
                }
                simplex.sort();
                simplex.dedup();
                assert_eq!(simplex.len(), k, "cube corner edges collide in the link");
                link_simplices[corner].insert(simplex);
            }
        }
        CubeComplex { cubes_by_rank, cells_by_rank, edges, link_vertices, link_simplices }
    }
}

impl CubeComplex {
    /// The flag condition at every vertex: each pairwise-adjacent set of
    /// link vertices must lie in a common corner simplex.
    pub fn check_links_flag(&self) -> LinkReport {
        let mut per_vertex = Vec::with_capacity(self.link_vertices.len());
        for v in 0..self.link_vertices.len() {
            per_vertex.push(self.link_is_flag(v));
        }
        let flag = per_vertex.iter().all(|&b| b);
        LinkReport { per_vertex, flag }
    }

    fn link_is_flag(&self, v: usize) -> bool {
        let n = self.link_vertices[v].len();
        let mut adj = vec![vec![false; n]; n];
        for s in &self.link_simplices[v] {
            for (i, &a) in s.iter().enumerate() {
                for &b in &s[i + 1..] {
                    adj[a][b] = true;
                    adj[b][a] = true;
                }
            }
        }
        let mut cliques = Vec::new();
        let mut r = Vec::new();
        let p: Vec<usize> = (0..n).collect();
        bron_kerbosch(&adj, &mut r, p, Vec::new(), &mut cliques);
        cliques.iter().all(|c| {
            c.len() <= 1
                || self.link_simplices[v].iter().any(|s| c.iter().all(|x| s.contains(x)))
        })
    }

    pub fn stats_json(&self) -> serde_json::Value {
        serde_json::json!({
            "cubes_by_rank": self.cubes_by_rank,
            "cells_by_rank": self.cells_by_rank,
            "flag": self.check_links_flag().flag,
        })
    }
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: &mut Vec<usize>,
    mut p: Vec<usize>,
    mut x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    let pivot = *p.iter().chain(x.iter()).next().unwrap();
    let candidates: Vec<usize> = p.iter().copied().filter(|&u| !adj[pivot][u]).collect();
    for u in candidates {
        r.push(u);
        let p2: Vec<usize> = p.iter().copied().filter(|&w| adj[u][w]).collect();
        let x2: Vec<usize> = x.iter().copied().filter(|&w| adj[u][w]).collect();
        bron_kerbosch(adj, r, p2, x2, out);
        r.pop();
        p.retain(|&w| w != u);
        x.push(u);
    }
}

/// Results of the five cubical-structure checks and the sphere condition
/// on forward links.
#[derive(Debug, Clone, Serialize)]
pub struct CubicalReport {
    pub failures: Vec<String>,
}

impl CubicalReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl ClusterCategory {
    /// Verify the cubical structure exhaustively: rank additivity of
    /// composition, cube shape and object-injectivity of factorizations,
    /// and determination of morphisms by first and by last factors.
    pub fn check_cubical(&self) -> CubicalReport {
        let mut failures = Vec::new();
        for f in 0..self.morphs.len() {
            for &g in &self.morphs_from(self.morphs[f].target) {
                match self.compose(f, g) {
                    Ok(h) => {
                        if self.morphs[h].rank() != self.morphs[f].rank() + self.morphs[g].rank()
                        {
                            failures.push(format!(
                                "rank not additive: {} after {}",
                                self.describe(g),
                                self.describe(f)
                            ));
                        }
                    }
                    Err(e) => failures.push(format!(
                        "composition failed: {} after {}: {e}",
                        self.describe(g),
                        self.describe(f)
                    )),
                }
            }
        }
        for f in 0..self.morphs.len() {
            let cube = self.factorization_cube(f);
            let k = cube.rank();
            let distinct: BTreeSet<usize> = cube.vertices.iter().copied().collect();
            if distinct.len() != 1 << k {
                failures.push(format!("cube of {} is not embedded", self.describe(f)));
            }
            if k > 0 && cube.edges.len() != k * (1 << k) / 2 {
                failures.push(format!("cube of {} has a wrong edge count", self.describe(f)));
            }
            let expected: usize = (1..=k).product();
            if cube.maximal_chains() != expected {
                failures.push(format!(
                    "cube of {} has {} maximal chains, expected {expected}",
                    self.describe(f),
                    cube.maximal_chains()
                ));
            }
        }
        for w in 0..self.wides.len() {
            let out = self.morphs_from(w);
            let firsts: BTreeSet<BTreeSet<SignedIndec>> =
                out.iter().map(|&f| self.first_factors(f)).collect();
            if firsts.len() != out.len() {
                failures.push(format!(
                    "first factors do not determine morphisms out of {}",
                    self.wides[w]
                ));
            }
            let lasts: BTreeSet<BTreeSet<usize>> = out
                .iter()
                .map(|&f| self.last_factors(f).into_iter().collect())
                .collect();
            if lasts.len() != out.len() {
                failures.push(format!(
                    "last factors do not determine morphisms out of {}",
                    self.wides[w]
                ));
            }
        }
        CubicalReport { failures }
    }

    /// The forward link of an object: morphisms to the zero object are the
    /// maximal simplices on the rank-one summand candidates, and they must
    /// triangulate a sphere combinatorially: all maximal simplices have
    /// full rank and every codimension-one face lies in exactly two.
    pub fn check_sphere_links(&self) -> CubicalReport {
        let mut failures = Vec::new();
        for (w, wide) in self.wides.iter().enumerate() {
            let rank = wide.rank();
            if rank == 0 {
                continue;
            }
            let maximal: Vec<BTreeSet<SignedIndec>> = self.stt[w]
                .iter()
                .map(|u| u.summands().into_iter().collect())
                .collect();
            for s in &maximal {
                if s.len() != rank {
                    failures.push(format!("a maximal simplex of {wide} has size {}", s.len()));
                }
            }
            let mut faces: BTreeMap<BTreeSet<SignedIndec>, usize> = BTreeMap::new();
            for s in &maximal {
                for x in s {
                    let mut face = s.clone();
                    face.remove(x);
                    *faces.entry(face).or_insert(0) += 1;
                }
            }
            for (face, count) in faces {
                if count != 2 {
                    let parts: Vec<String> = face.iter().map(|x| x.to_string()).collect();
                    failures.push(format!(
                        "face {{{}}} of {wide} lies in {count} maximal simplices",
                        parts.join(", ")
                    ));
                }
            }
        }
        CubicalReport { failures }
    }
}

impl ClusterCategory {
    /// Fundamental-group bookkeeping of the complex: every rank-one object
    /// contributes exactly the two edges to zero realizing a generator,
    /// and the boundary of every two-cell reads off the polygon sides of
    /// the torsion lattice spanned by the cell's two simples.
    pub fn check_pi1_cells(&self) -> CubicalReport {
        let mut failures = Vec::new();
        let zero = self.zero_wide();
        let ambient = crate::lattice::TorsLattice::build(WideSub::full(&self.spec));
        let ambient_polygons = ambient.polygons();
        for (w, wide) in self.wides.iter().enumerate() {
            if wide.rank() == 1 {
                let s = *wide.simples().iter().next().unwrap();
                let p = br(&self.spec, s);
                let mut to_zero: Vec<RigidPair> = self
                    .morphs_from(w)
                    .into_iter()
                    .filter(|&m| self.morphs[m].target == zero && self.morphs[m].rank() == 1)
                    .map(|m| self.morphs[m].payload.clone())
                    .collect();
                to_zero.sort();
                let expected = vec![RigidPair::new([], [p]), RigidPair::new([p], [])];
                if to_zero != expected {
                    failures.push(format!("generator edges of {wide} are not {p} and {p}[1]"));
                }
            }
            if wide.rank() == 2 {
                let local = crate::lattice::TorsLattice::build(wide.clone());
                let cell_polys = local.polygons();
                if cell_polys.len() != 1 {
                    failures.push(format!("{wide} spans {} polygons", cell_polys.len()));
                    continue;
                }
                let cell_sides =
                    [cell_polys[0].left.clone(), cell_polys[0].right.clone()];
                let tops: BTreeSet<Indec> =
                    cell_sides.iter().map(|s| s[0]).collect();
                if tops != *wide.simples() {
                    failures.push(format!("boundary of {wide} starts off its simples"));
                }
                let found = ambient_polygons.iter().any(|p| {
                    let mut a = [p.left.clone(), p.right.clone()];
                    let mut b = cell_sides.clone();
                    a.sort();
                    b.sort();
                    a == b
                });
                if !found {
                    failures.push(format!(
                        "boundary of {wide} matches no polygon of the full lattice"
                    ));
                }
            }
        }
        CubicalReport { failures }
    }
}
