//! Rational polyhedral cones in `Z^n`, their duals, faces and Hilbert bases,
//! and plain fans.

pub mod lp;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::intlin::{
    dot, integer_kernel, integer_left_kernel, is_zero_vec, lattice_basis, neg_vec, primitive,
    saturate, smith_normal_form, solve_integer_affine, solve_rational, sub_vec, IntMatrix, IntVec,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error("cone contains a line")]
    NotPointed,
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// A rational polyhedral cone in `R^n`, stored in both descriptions.
///
/// The generator description is canonical: `lineality` is the Hermite basis
/// of the lattice of the largest linear subspace, and `rays` are the primitive
/// extreme rays of the part orthogonal to it, sorted. The inequality
/// description is `facets` (primitive normals lying in the span of the cone)
/// together with `equations` (a basis of the orthogonal complement of the
/// span).
#[derive(Clone)]
pub struct Cone {
    ambient: usize,
    lineality: Vec<IntVec>,
    rays: Vec<IntVec>,
    facets: Vec<IntVec>,
    equations: Vec<IntVec>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.lineality == other.lineality
            && self.rays == other.rays
    }
}

impl Eq for Cone {}

impl Hash for Cone {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.lineality.hash(state);
        self.rays.hash(state);
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cone {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.ambient, self.dim(), &self.lineality, &self.rays).cmp(&(
            other.ambient,
            other.dim(),
            &other.lineality,
            &other.rays,
        ))
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cone{}", self)
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_vec = |v: &IntVec| format!("({})", v.iter().join(","));
        let mut parts: Vec<String> = self.rays.iter().map(fmt_vec).collect();
        parts.extend(self.lineality.iter().map(|l| format!("±{}", fmt_vec(l))));
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Lineality basis and extreme rays of `{x : a_i · x ≥ 0}`.
fn generators_of_inequalities(n: usize, ineqs: &[IntVec]) -> (Vec<IntVec>, Vec<IntVec>) {
    let rows: Vec<IntVec> = ineqs
        .iter()
        .filter(|r| !is_zero_vec(r))
        .map(|r| primitive(r))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let lin = integer_kernel(&IntMatrix::from_rows(n, &rows));
    let r = n - lin.len();
    let mut rays = BTreeSet::new();
    if r > 0 {
        for subset in rows.iter().combinations(r - 1) {
            let mut sys: Vec<IntVec> = subset.into_iter().cloned().collect();
            sys.extend(lin.iter().cloned());
            let ker = integer_kernel(&IntMatrix::from_rows(n, &sys));
            if ker.len() != 1 {
                continue;
            }
            let x = &ker[0];
            let vals: Vec<BigInt> = rows.iter().map(|a| dot(a, x)).collect();
            if vals.iter().all(|v| !v.is_negative()) {
                rays.insert(x.clone());
            } else if vals.iter().all(|v| !v.is_positive()) {
                rays.insert(neg_vec(x));
            }
        }
    }
    (lin, rays.into_iter().collect())
}

fn with_negatives(vs: &[IntVec]) -> Vec<IntVec> {
    vs.iter().flat_map(|v| [v.clone(), neg_vec(v)]).collect()
}

impl Cone {
    /// The cone `R_{≥0}·gens` in `R^n`.
    pub fn from_generators(n: usize, gens: &[IntVec]) -> Self {
        for g in gens {
            assert_eq!(g.len(), n, "generator of wrong length");
        }
        let (equations, facets) = generators_of_inequalities(n, gens);
        let mut h = facets.clone();
        h.extend(with_negatives(&equations));
        let (lineality, rays) = generators_of_inequalities(n, &h);
        Cone {
            ambient: n,
            lineality,
            rays,
            facets,
            equations,
        }
    }

    /// The cone `{x : a·x ≥ 0 for a in ineqs, e·x = 0 for e in eqs}`.
    pub fn from_inequalities(n: usize, ineqs: &[IntVec], eqs: &[IntVec]) -> Self {
        let mut h: Vec<IntVec> = ineqs.to_vec();
        h.extend(with_negatives(eqs));
        for a in &h {
            assert_eq!(a.len(), n, "inequality of wrong length");
        }
        let (lineality, rays) = generators_of_inequalities(n, &h);
        let mut g = rays.clone();
        g.extend(with_negatives(&lineality));
        let (equations, facets) = generators_of_inequalities(n, &g);
        Cone {
            ambient: n,
            lineality,
            rays,
            facets,
            equations,
        }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(n: usize, gens: &[&[i64]]) -> Self {
        let g: Vec<IntVec> = gens.iter().map(|v| crate::intlin::ivec(v)).collect();
        Self::from_generators(n, &g)
    }

    pub fn zero(n: usize) -> Self {
        Self::from_generators(n, &[])
    }

    pub fn full(n: usize) -> Self {
        Self::from_inequalities(n, &[], &[])
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn lineality(&self) -> &[IntVec] {
        &self.lineality
    }

    pub fn facet_normals(&self) -> &[IntVec] {
        &self.facets
    }

    pub fn equations(&self) -> &[IntVec] {
        &self.equations
    }

    /// Canonical generators: the rays followed by `±` the lineality basis.
    pub fn generators(&self) -> Vec<IntVec> {
        let mut g = self.rays.clone();
        g.extend(with_negatives(&self.lineality));
        g
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.equations.len()
    }

    pub fn is_strongly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Pointed with linearly independent rays.
    pub fn is_simplicial(&self) -> bool {
        self.is_strongly_convex() && self.rays.len() == self.dim()
    }

    pub fn contains(&self, u: &[BigInt]) -> bool {
        assert_eq!(u.len(), self.ambient, "vector of wrong length");
        self.facets.iter().all(|f| !dot(f, u).is_negative())
            && self.equations.iter().all(|e| dot(e, u).is_zero())
    }

    /// True iff `u` lies in the relative interior.
    pub fn contains_relative_interior(&self, u: &[BigInt]) -> bool {
        self.contains(u) && self.facets.iter().all(|f| dot(f, u).is_positive())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    /// A lattice point in the relative interior.
    pub fn relative_interior_point(&self) -> IntVec {
        self.rays
            .iter()
            .fold(vec![BigInt::zero(); self.ambient], |acc, r| {
                acc.iter().zip(r).map(|(a, b)| a + b).collect()
            })
    }

    pub fn dual(&self) -> Cone {
        let mut g = self.facets.clone();
        g.extend(with_negatives(&self.equations));
        Cone::from_generators(self.ambient, &g)
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        assert_eq!(self.ambient, other.ambient, "ambient ranks differ");
        let mut ineqs = self.facets.clone();
        ineqs.extend(other.facets.iter().cloned());
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        Cone::from_inequalities(self.ambient, &ineqs, &eqs)
    }

    /// Preimage under the linear map `x ↦ phi·x`.
    pub fn preimage(&self, phi: &IntMatrix) -> Cone {
        assert_eq!(phi.nrows(), self.ambient, "map has wrong target");
        let pull = |a: &IntVec| phi.transpose().mul_vec(a);
        let ineqs: Vec<IntVec> = self.facets.iter().map(pull).collect();
        let eqs: Vec<IntVec> = self.equations.iter().map(pull).collect();
        Cone::from_inequalities(phi.ncols(), &ineqs, &eqs)
    }

    /// Image under the linear map `x ↦ phi·x`.
    pub fn image(&self, phi: &IntMatrix) -> Cone {
        assert_eq!(phi.ncols(), self.ambient, "map has wrong source");
        let g: Vec<IntVec> = self.generators().iter().map(|g| phi.mul_vec(g)).collect();
        Cone::from_generators(phi.nrows(), &g)
    }

    fn face_from_rays(&self, idx: &BTreeSet<usize>) -> Cone {
        let mut g: Vec<IntVec> = idx.iter().map(|&i| self.rays[i].clone()).collect();
        g.extend(with_negatives(&self.lineality));
        Cone::from_generators(self.ambient, &g)
    }

    fn rays_on(&self, normal: &IntVec) -> BTreeSet<usize> {
        (0..self.rays.len())
            .filter(|&i| dot(normal, &self.rays[i]).is_zero())
            .collect()
    }

    /// All faces, sorted by dimension and then by generators. Includes the
    /// cone itself, and `{0}` when the cone is pointed.
    pub fn faces(&self) -> Vec<Cone> {
        let mut sets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        sets.insert((0..self.rays.len()).collect());
        let mut frontier: Vec<BTreeSet<usize>> =
            self.facets.iter().map(|f| self.rays_on(f)).collect();
        let facet_sets = frontier.clone();
        while let Some(s) = frontier.pop() {
            if !sets.insert(s.clone()) {
                continue;
            }
            for f in &facet_sets {
                let t: BTreeSet<usize> = s.intersection(f).cloned().collect();
                if !sets.contains(&t) {
                    frontier.push(t);
                }
            }
        }
        let mut faces: Vec<Cone> = sets.iter().map(|s| self.face_from_rays(s)).collect();
        faces.sort();
        faces.dedup();
        faces
    }

    /// Faces of codimension one.
    pub fn facets(&self) -> Vec<Cone> {
        self.facets
            .iter()
            .map(|f| self.face_from_rays(&self.rays_on(f)))
            .collect()
    }

    /// True iff `self` is a face of `sigma`.
    pub fn is_face_of(&self, sigma: &Cone) -> bool {
        if self.ambient != sigma.ambient || !sigma.contains_cone(self) {
            return false;
        }
        let gens = self.generators();
        let active: BTreeSet<usize> = sigma
            .facets
            .iter()
            .filter(|f| gens.iter().all(|g| dot(f, g).is_zero()))
            .fold(
                (0..sigma.rays.len()).collect(),
                |acc: BTreeSet<usize>, f| acc.intersection(&sigma.rays_on(f)).cloned().collect(),
            );
        sigma.face_from_rays(&active) == *self
    }

    /// Minimal generating set of the monoid `self ∩ Z^n`.
    pub fn hilbert_basis(&self) -> Result<Vec<IntVec>, ConeError> {
        if !self.is_strongly_convex() {
            return Err(ConeError::NotPointed);
        }
        let mut cands: BTreeSet<IntVec> = self.rays.iter().cloned().collect();
        for simplex in self.triangulate() {
            cands.extend(parallelepiped_points(self.ambient, &simplex));
        }
        let cands: Vec<IntVec> = cands.into_iter().collect();
        let basis = cands
            .iter()
            .filter(|x| {
                cands
                    .iter()
                    .all(|g| g == *x || !self.contains(&sub_vec(x, g)))
            })
            .cloned()
            .collect();
        Ok(basis)
    }

    /// A triangulation of a pointed cone using only its rays, as lists of rays.
    pub fn triangulate(&self) -> Vec<Vec<IntVec>> {
        if self.rays.len() == self.dim() {
            return vec![self.rays.clone()];
        }
        let apex = &self.rays[0];
        let mut out = Vec::new();
        for face in self.facets() {
            if face.contains(apex) {
                continue;
            }
            for mut s in face.triangulate() {
                s.push(apex.clone());
                out.push(s);
            }
        }
        out
    }
}

/// Nonzero lattice points of the half-open parallelepiped spanned by the
/// linearly independent vectors `v`.
fn parallelepiped_points(n: usize, v: &[IntVec]) -> Vec<IntVec> {
    let d = v.len();
    if d == 0 {
        return Vec::new();
    }
    let vmat = IntMatrix::from_cols(n, v);
    let bs = saturate(&vmat);
    let c_cols: Vec<IntVec> = v
        .iter()
        .map(|col| {
            solve_integer_affine(&bs, col)
                .expect("vector lies in its saturation")
                .particular
        })
        .collect();
    let c = IntMatrix::from_cols(d, &c_cols);
    let snf = smith_normal_form(&c);
    let u_inv_cols: Vec<IntVec> = (0..d)
        .map(|i| {
            solve_integer_affine(&snf.u, &crate::intlin::unit_vec(d, i))
                .expect("unimodular")
                .particular
        })
        .collect();
    let u_inv = IntMatrix::from_cols(d, &u_inv_cols);
    let ranges: Vec<Vec<BigInt>> = (0..d)
        .map(|i| {
            let di = snf.d[(i, i)].clone();
            num_iter_range(&di)
        })
        .collect();
    let mut out = Vec::new();
    for k in ranges.into_iter().multi_cartesian_product() {
        let y = u_inv.mul_vec(&k);
        let lambda = solve_rational(&c, &y).expect("nonsingular");
        let floors: IntVec = lambda
            .iter()
            .map(|l| l.numer().div_floor(l.denom()))
            .collect();
        let p = sub_vec(&y, &c.mul_vec(&floors));
        if is_zero_vec(&p) {
            continue;
        }
        out.push(bs.mul_vec(&p));
    }
    out
}

fn num_iter_range(d: &BigInt) -> Vec<BigInt> {
    let mut v = Vec::new();
    let mut i = BigInt::zero();
    while &i < d {
        v.push(i.clone());
        i += 1;
    }
    v
}

/// Basis of the integer annihilator of a cone's span, i.e. `σ^⊥ ∩ Z^n`.
pub fn orthogonal_lattice(sigma: &Cone) -> Vec<IntVec> {
    sigma.equations().to_vec()
}

/// Canonical basis of `span(σ) ∩ Z^n`.
pub fn span_lattice(sigma: &Cone) -> Vec<IntVec> {
    let n = sigma.ambient_rank();
    if sigma.equations().is_empty() {
        return (0..n).map(|i| crate::intlin::unit_vec(n, i)).collect();
    }
    integer_kernel(&IntMatrix::from_rows(n, sigma.equations()))
}

/// Matrix `P` whose rows span the annihilator of the lattice spanned by
/// `sub` (columns), so `x ↦ P x` is the projection `Z^n → Z^n / sat(sub)`.
pub fn quotient_projection(n: usize, sub: &[IntVec]) -> IntMatrix {
    let rows = integer_left_kernel(&IntMatrix::from_cols(n, sub));
    IntMatrix::from_rows(n, &rows)
}

/// True iff `region` is covered by the union of `pieces`.
///
/// Only the intersections `region ∩ piece` of full dimension in `region`
/// matter. They cover iff every codimension-one face of such a piece either
/// lies on the relative boundary of `region` or is shared by exactly two of
/// them.
pub fn covers(region: &Cone, pieces: &[Cone]) -> bool {
    let d = region.dim();
    if d == 0 {
        return true;
    }
    let cells: BTreeSet<Cone> = pieces
        .iter()
        .map(|p| region.intersect(p))
        .filter(|c| c.dim() == d)
        .collect();
    if cells.is_empty() {
        return false;
    }
    let boundary = region.facets();
    let mut count: HashMap<Cone, usize> = HashMap::new();
    for c in &cells {
        for f in c.facets() {
            *count.entry(f).or_default() += 1;
        }
    }
    count.iter().all(|(f, &k)| {
        let on_boundary = boundary.iter().any(|b| b.contains_cone(f));
        if on_boundary {
            k == 1
        } else {
            k == 2
        }
    })
}

/// A fan of strongly convex cones, closed under faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainFan {
    ambient: usize,
    cones: Vec<Cone>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FanError {
    #[error("cone {0} is not strongly convex")]
    NotStronglyConvex(Cone),
    #[error("cones {0} and {1} do not meet in a common face")]
    BadIntersection(Cone, Cone),
    #[error("cone has ambient rank {found}, expected {expected}")]
    AmbientMismatch { expected: usize, found: usize },
}

impl PlainFan {
    /// Closes the given cones under faces and checks the fan axioms.
    pub fn new(ambient: usize, cones: &[Cone]) -> Result<Self, FanError> {
        let mut all = BTreeSet::new();
        all.insert(Cone::zero(ambient));
        for c in cones {
            if c.ambient_rank() != ambient {
                return Err(FanError::AmbientMismatch {
                    expected: ambient,
                    found: c.ambient_rank(),
                });
            }
            if !c.is_strongly_convex() {
                return Err(FanError::NotStronglyConvex(c.clone()));
            }
            all.extend(c.faces());
        }
        let cones: Vec<Cone> = all.into_iter().collect();
        let maximal = maximal_cones(&cones);
        for (a, b) in maximal.iter().tuple_combinations() {
            let i = a.intersect(b);
            if !i.is_face_of(a) || !i.is_face_of(b) {
                return Err(FanError::BadIntersection(a.clone(), b.clone()));
            }
        }
        Ok(PlainFan { ambient, cones })
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn maximal_cones(&self) -> Vec<Cone> {
        maximal_cones(&self.cones)
    }

    pub fn support_contains(&self, u: &[BigInt]) -> bool {
        self.cones.iter().any(|c| c.contains(u))
    }

    pub fn is_complete(&self) -> bool {
        support_is_everything(self.ambient, &self.cones)
    }
}

/// Cones not strictly contained in another member of the list.
pub fn maximal_cones(cones: &[Cone]) -> Vec<Cone> {
    cones
        .iter()
        .filter(|c| !cones.iter().any(|d| d != *c && d.contains_cone(c)))
        .cloned()
        .collect()
}

/// True iff the union of `cones` is all of `R^n`. Rank zero counts as covered.
pub fn support_is_everything(n: usize, cones: &[Cone]) -> bool {
    covers(&Cone::full(n), cones)
}

pub fn support_contains(fan: &PlainFan, u: &[BigInt]) -> bool {
    fan.support_contains(u)
}

pub fn fan_is_complete(fan: &PlainFan) -> bool {
    fan.is_complete()
}

pub fn dual_cone(sigma: &Cone) -> Cone {
    sigma.dual()
}

pub fn cone_dim(sigma: &Cone) -> usize {
    sigma.dim()
}

/// Lattice basis of the integer points of a linear subspace given by spanning vectors.
pub fn subspace_lattice(n: usize, span: &[IntVec]) -> Vec<IntVec> {
    lattice_basis(n, &saturate(&IntMatrix::from_cols(n, span)).col_vecs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlin::ivec;
    use proptest::prelude::*;

    fn c(n: usize, gens: &[&[i64]]) -> Cone {
        Cone::from_i64(n, gens)
    }

    fn vs(v: &[&[i64]]) -> Vec<IntVec> {
        v.iter().map(|x| ivec(x)).collect()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(c(2, &[&[1, 0], &[0, 1]]).dual(), c(2, &[&[1, 0], &[0, 1]]));
        let half = c(2, &[&[1, 0]]).dual();
        assert_eq!(half, c(2, &[&[1, 0], &[0, 1], &[0, -1]]));
        assert_eq!(half.rays(), vs(&[&[1, 0]]));
        assert_eq!(half.lineality(), vs(&[&[0, 1]]));
        let all = Cone::zero(2).dual();
        assert_eq!(all, Cone::full(2));
        assert_eq!(all.generators().len(), 4);
    }

    #[test]
    fn face_examples() {
        let q = c(2, &[&[1, 0], &[0, 1]]);
        let f = q.faces();
        assert_eq!(f.len(), 4);
        assert_eq!(f[0], Cone::zero(2));
        assert_eq!(f[3], q);
        assert_eq!(c(1, &[&[1]]).faces().len(), 2);
        let s = c(2, &[&[1, 1], &[1, -1]]);
        assert_eq!(s.facet_normals(), vs(&[&[1, -1], &[1, 1]]));
        let proper: Vec<Cone> = s.faces().into_iter().filter(|f| f.dim() == 1).collect();
        assert_eq!(proper, vec![c(2, &[&[1, -1]]), c(2, &[&[1, 1]])]);
    }

    #[test]
    fn intersections_and_faces() {
        let a = c(2, &[&[1, 1], &[1, -1]]);
        let b = c(2, &[&[-1, 0], &[1, 1]]);
        assert_eq!(a.intersect(&b), c(2, &[&[1, 1]]));
        assert_eq!(a.intersect(&a), a);
        assert!(a.is_face_of(&a));
        assert!(c(2, &[&[1, 0]]).is_face_of(&c(2, &[&[1, 0], &[0, 1]])));
        assert!(!c(2, &[&[1, 1]]).is_face_of(&c(2, &[&[1, 0], &[0, 1]])));
        assert!(Cone::zero(2).is_face_of(&a));
        assert!(!Cone::zero(2).is_face_of(&c(2, &[&[1, 0], &[-1, 0]])));
    }

    #[test]
    fn redundant_generators_removed() {
        let s = c(2, &[&[1, 0], &[2, 2], &[0, 3], &[1, 2]]);
        assert_eq!(s.rays(), vs(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(
            c(2, &[&[1, 0], &[0, 1]]).hilbert_basis().unwrap(),
            vs(&[&[0, 1], &[1, 0]])
        );
        assert_eq!(
            c(2, &[&[1, 0], &[1, 2]]).hilbert_basis().unwrap(),
            vs(&[&[1, 0], &[1, 1], &[1, 2]])
        );
        assert_eq!(c(1, &[&[1]]).hilbert_basis().unwrap(), vs(&[&[1]]));
        assert_eq!(
            c(1, &[&[1], &[-1]]).hilbert_basis(),
            Err(ConeError::NotPointed)
        );
        assert!(Cone::zero(3).hilbert_basis().unwrap().is_empty());
        // non-saturated span: a ray of a 2-cone inside Z^3
        assert_eq!(
            c(3, &[&[2, 2, 0]]).hilbert_basis().unwrap(),
            vs(&[&[1, 1, 0]])
        );
    }

    #[test]
    fn completeness() {
        let tri = [
            c(2, &[&[1, 0], &[0, 1]]),
            c(2, &[&[0, 1], &[-1, -1]]),
            c(2, &[&[1, 0], &[-1, -1]]),
        ];
        let fan = PlainFan::new(2, &tri).unwrap();
        assert!(fan.is_complete());
        assert_eq!(fan.cones().len(), 7);
        assert!(!PlainFan::new(1, &[c(1, &[&[1]])]).unwrap().is_complete());
        assert!(PlainFan::new(1, &[c(1, &[&[1]]), c(1, &[&[-1]])])
            .unwrap()
            .is_complete());
        assert!(!PlainFan::new(2, &tri[..2]).unwrap().is_complete());
        assert!(PlainFan::new(0, &[]).unwrap().is_complete());
        assert!(!c(1, &[&[1], &[-1]]).is_strongly_convex());
        assert!(
            PlainFan::new(2, &[c(2, &[&[1, 0], &[0, 1]]), c(2, &[&[1, 1], &[-1, 0]])]).is_err()
        );
    }

    #[test]
    fn covering_regions() {
        let upper = Cone::from_inequalities(2, &[ivec(&[0, 1])], &[]);
        let pieces = [
            c(2, &[&[1, 0], &[1, 1]]),
            c(2, &[&[1, 1], &[-1, 1]]),
            c(2, &[&[-1, 0], &[-1, 1]]),
        ];
        assert!(covers(&upper, &pieces));
        assert!(!covers(&upper, &pieces[..2]));
        let line = c(2, &[&[1, 1], &[-1, -1]]);
        assert!(covers(&line, &[c(2, &[&[1, 1]]), c(2, &[&[-1, -1]])]));
        assert!(!covers(&line, &[c(2, &[&[1, 1]])]));
    }

    #[test]
    fn triangulation_of_square_cone() {
        let s = c(3, &[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]]);
        let t = s.triangulate();
        assert_eq!(t.len(), 2);
        let hb = s.hilbert_basis().unwrap();
        assert_eq!(
            hb,
            vs(&[&[-1, 0, 1], &[0, -1, 1], &[0, 0, 1], &[0, 1, 1], &[1, 0, 1]])
        );
    }

    fn gens_strategy() -> impl Strategy<Value = (usize, Vec<IntVec>)> {
        (1usize..4).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(-3i64..4, n), 0..6)
                .prop_map(move |g| (n, g.iter().map(|v| ivec(v)).collect()))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn duality_is_an_involution((n, g) in gens_strategy()) {
            let s = Cone::from_generators(n, &g);
            prop_assert_eq!(s.dual().dual(), s.clone());
            for x in &g {
                prop_assert!(s.contains(x));
            }
            prop_assert_eq!(s.dim(), IntMatrix::from_rows(n, &g).rank());
        }

        #[test]
        fn descriptions_agree((n, g) in gens_strategy()) {
            let s = Cone::from_generators(n, &g);
            let t = Cone::from_inequalities(n, s.facet_normals(), s.equations());
            prop_assert_eq!(&t, &s);
            prop_assert_eq!(t.facet_normals(), s.facet_normals());
        }

        #[test]
        fn simplicial_face_count((n, g) in gens_strategy()) {
            let s = Cone::from_generators(n, &g);
            if s.is_simplicial() {
                prop_assert_eq!(s.faces().len(), 1usize << s.dim());
            }
            for f in s.faces() {
                prop_assert!(f.is_face_of(&s));
            }
        }
    }
}
