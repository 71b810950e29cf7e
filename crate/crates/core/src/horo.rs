//! Coloured lattices, coloured cones and coloured fans.
//!
//! A horospherical datum `(I, M)` stores `M` as a matrix whose columns are a
//! basis of the character lattice, written in fundamental-weight coordinates
//! followed by the characters of the central torus. The lattice `N` is the
//! dual of `M`, with coordinates dual to that basis, and the colour point of
//! `α ∉ I` is `m ↦ ⟨m, α∨⟩`, i.e. row `α` of `M`.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::intlin::{
    integer_left_kernel, is_saturated, is_zero_vec, left_unimodular_equivalent,
    solve_integer_affine, IntMatrix, IntVec,
};
use crate::polyhedra::Cone;
use crate::rootsys::RootDatum;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HoroError {
    #[error("invalid horospherical datum: {0}")]
    InvalidDatum(String),
    #[error("sublattice is not saturated")]
    NotSaturated,
    #[error("colour point of {0} is not in the sublattice")]
    ColourOutsideSublattice(String),
    #[error("not a subdatum: {0}")]
    NotASubdatum(String),
    #[error("the two data live on different groups")]
    GroupMismatch,
    #[error("the fan does not live on the coloured lattice of the datum")]
    LatticeMismatch,
    #[error("invalid coloured fan:\n{0}")]
    InvalidFan(ValidationReport),
}

/// The pair `(I, M)` presenting `G/H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HorosphericalDatum {
    group: RootDatum,
    parabolic: BTreeSet<usize>,
    characters: IntMatrix,
}

impl HorosphericalDatum {
    pub fn new(
        group: RootDatum,
        parabolic: BTreeSet<usize>,
        characters: IntMatrix,
    ) -> Result<Self, HoroError> {
        let s = group.semisimple_rank();
        if characters.nrows() != group.rank() {
            return Err(HoroError::InvalidDatum(format!(
                "characters have {} coordinates, the torus has rank {}",
                characters.nrows(),
                group.rank()
            )));
        }
        if let Some(&bad) = parabolic.iter().find(|&&i| i >= s) {
            return Err(HoroError::InvalidDatum(format!(
                "no simple root with index {bad}"
            )));
        }
        for &i in &parabolic {
            if let Some(j) = (0..characters.ncols()).find(|&j| !characters[(i, j)].is_zero()) {
                return Err(HoroError::InvalidDatum(format!(
                    "character {} pairs nonzero with {} in I",
                    j + 1,
                    group.label(i)
                )));
            }
        }
        if characters.rank() != characters.ncols() {
            return Err(HoroError::InvalidDatum(
                "characters are linearly dependent".into(),
            ));
        }
        Ok(HorosphericalDatum {
            group,
            parabolic,
            characters,
        })
    }

    /// `G/U` type datum: `I = ∅` and `M` the full character lattice.
    pub fn full(group: RootDatum) -> Self {
        let r = group.rank();
        Self::new(group, BTreeSet::new(), IntMatrix::identity(r)).expect("full lattice is valid")
    }

    pub fn group(&self) -> &RootDatum {
        &self.group
    }

    pub fn parabolic(&self) -> &BTreeSet<usize> {
        &self.parabolic
    }

    pub fn characters(&self) -> &IntMatrix {
        &self.characters
    }

    /// Rank of `M`, hence of `N`.
    pub fn lattice_rank(&self) -> usize {
        self.characters.ncols()
    }

    /// The universal colour set `S ∖ I`.
    pub fn colours(&self) -> BTreeSet<usize> {
        (0..self.group.semisimple_rank())
            .filter(|i| !self.parabolic.contains(i))
            .collect()
    }

    /// Datum of `G1 × G2 / H1 × H2`.
    pub fn product(&self, other: &HorosphericalDatum) -> HorosphericalDatum {
        let (s1, s2) = (self.group.semisimple_rank(), other.group.semisimple_rank());
        let t1 = self.group.torus_rank();
        let (k1, k2) = (self.lattice_rank(), other.lattice_rank());
        let group = self.group.product(&other.group);
        let mut m = IntMatrix::zeros(group.rank(), k1 + k2);
        for i in 0..self.group.rank() {
            let row = if i < s1 { i } else { i + s2 };
            for j in 0..k1 {
                m[(row, j)] = self.characters[(i, j)].clone();
            }
        }
        for i in 0..other.group.rank() {
            let row = if i < s2 {
                s1 + i
            } else {
                s1 + s2 + t1 + (i - s2)
            };
            for j in 0..k2 {
                m[(row, k1 + j)] = other.characters[(i, j)].clone();
            }
        }
        let mut parabolic = self.parabolic.clone();
        parabolic.extend(other.parabolic.iter().map(|i| i + s1));
        HorosphericalDatum::new(group, parabolic, m).expect("product of valid data")
    }
}

/// A colour with its colour point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Colour {
    pub root: usize,
    pub point: IntVec,
}

/// `(N, C, ξ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredLattice {
    group: RootDatum,
    rank: usize,
    colours: Vec<Colour>,
}

impl ColouredLattice {
    pub fn new(group: RootDatum, rank: usize, colours: Vec<Colour>) -> Self {
        for c in &colours {
            assert_eq!(c.point.len(), rank, "colour point of wrong length");
        }
        ColouredLattice {
            group,
            rank,
            colours,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn group(&self) -> &RootDatum {
        &self.group
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn colour_roots(&self) -> BTreeSet<usize> {
        self.colours.iter().map(|c| c.root).collect()
    }

    pub fn colour_point(&self, root: usize) -> Option<&IntVec> {
        self.colours
            .iter()
            .find(|c| c.root == root)
            .map(|c| &c.point)
    }

    /// Position of a colour in [`Self::colours`].
    pub fn colour_index(&self, root: usize) -> Option<usize> {
        self.colours.iter().position(|c| c.root == root)
    }

    pub fn label(&self, root: usize) -> String {
        self.group.label(root)
    }

    /// Colours of `colours` whose points lie in `tau`.
    pub fn induced_colours(&self, colours: &BTreeSet<usize>, tau: &Cone) -> BTreeSet<usize> {
        colours
            .iter()
            .copied()
            .filter(|&a| self.colour_point(a).is_some_and(|u| tau.contains(u)))
            .collect()
    }

    pub fn product(&self, other: &ColouredLattice) -> ColouredLattice {
        let shift = self.group.semisimple_rank();
        let mut colours: Vec<Colour> = self
            .colours
            .iter()
            .map(|c| {
                let mut p = c.point.clone();
                p.resize(self.rank + other.rank, BigInt::zero());
                Colour {
                    root: c.root,
                    point: p,
                }
            })
            .collect();
        colours.extend(other.colours.iter().map(|c| {
            let mut p = vec![BigInt::zero(); self.rank];
            p.extend(c.point.iter().cloned());
            Colour {
                root: c.root + shift,
                point: p,
            }
        }));
        ColouredLattice {
            group: self.group.product(&other.group),
            rank: self.rank + other.rank,
            colours,
        }
    }

    pub fn describe_colours(&self, colours: &BTreeSet<usize>) -> String {
        format!("{{{}}}", colours.iter().map(|&a| self.label(a)).join(", "))
    }

    pub fn describe(&self, c: &ColouredCone) -> String {
        format!("({}, {})", c.cone, self.describe_colours(&c.colours))
    }
}

/// `({a1, ...}, <(m), ...>)`: the parabolic labels and the columns of `M`.
impl fmt::Display for HorosphericalDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self
            .parabolic
            .iter()
            .map(|&a| self.group.label(a))
            .join(", ");
        let cols = self
            .characters
            .col_vecs()
            .iter()
            .map(|c| format!("({})", c.iter().join(",")))
            .join(", ");
        write!(f, "({{{labels}}}, <{cols}>)")
    }
}

pub fn build_coloured_lattice(d: &HorosphericalDatum) -> ColouredLattice {
    let colours = d
        .colours()
        .into_iter()
        .map(|a| Colour {
            root: a,
            point: d.characters.row(a),
        })
        .collect();
    ColouredLattice {
        group: d.group.clone(),
        rank: d.lattice_rank(),
        colours,
    }
}

/// `(σ, F)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColouredCone {
    pub cone: Cone,
    pub colours: BTreeSet<usize>,
}

impl ColouredCone {
    pub fn new(cone: Cone, colours: impl IntoIterator<Item = usize>) -> Self {
        ColouredCone {
            cone,
            colours: colours.into_iter().collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        ColouredCone {
            cone: Cone::zero(rank),
            colours: BTreeSet::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    /// `τ^c ⊆ σ^c`: `τ` a face of `σ` carrying exactly the induced colours.
    pub fn is_coloured_face_of(&self, sigma: &ColouredCone, lattice: &ColouredLattice) -> bool {
        self.cone.is_face_of(&sigma.cone)
            && lattice.induced_colours(&sigma.colours, &self.cone) == self.colours
    }
}

/// Faces of `σ` with induced colour sets, largest first.
pub fn coloured_faces(sigma: &ColouredCone, lattice: &ColouredLattice) -> Vec<ColouredCone> {
    let mut faces = sigma.cone.faces();
    faces.reverse();
    faces
        .into_iter()
        .map(|tau| {
            let colours = lattice.induced_colours(&sigma.colours, &tau);
            ColouredCone { cone: tau, colours }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    AmbientMismatch,
    NotStronglyConvex,
    UnknownColour,
    ColourOutsideCone,
    ZeroColourPoint,
    MissingFace,
    BadIntersection,
    DuplicateCone,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Indices into the fan's cone list.
    pub cones: Vec<usize>,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "- {}", v.message)?;
        }
        Ok(())
    }
}

/// A finite collection of coloured cones on a coloured lattice. Use
/// [`validate_coloured_fan`] or the checked constructors to ensure the fan
/// axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredFan {
    lattice: ColouredLattice,
    cones: Vec<ColouredCone>,
}

impl ColouredFan {
    /// Takes the list literally and checks the axioms.
    pub fn new(lattice: ColouredLattice, cones: Vec<ColouredCone>) -> Result<Self, HoroError> {
        let fan = ColouredFan { lattice, cones };
        let report = validate_coloured_fan(&fan);
        if report.is_valid() {
            Ok(fan)
        } else {
            Err(HoroError::InvalidFan(report))
        }
    }

    /// Keeps the given cones in order, appends their missing coloured faces
    /// (largest first) and the trivial cone, then checks the axioms.
    pub fn from_cones(
        lattice: ColouredLattice,
        cones: Vec<ColouredCone>,
    ) -> Result<Self, HoroError> {
        Self::new(lattice.clone(), close_under_faces(&lattice, cones))
    }

    /// No checks at all.
    pub fn new_unchecked(lattice: ColouredLattice, cones: Vec<ColouredCone>) -> Self {
        ColouredFan { lattice, cones }
    }

    /// The fan `{0^c}` of the homogeneous space itself.
    pub fn trivial(lattice: ColouredLattice) -> Self {
        let z = ColouredCone::zero(lattice.rank());
        ColouredFan {
            lattice,
            cones: vec![z],
        }
    }

    pub fn lattice(&self) -> &ColouredLattice {
        &self.lattice
    }

    pub fn cones(&self) -> &[ColouredCone] {
        &self.cones
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn index_of(&self, c: &ColouredCone) -> Option<usize> {
        self.cones.iter().position(|x| x == c)
    }

    pub fn index_of_cone(&self, c: &Cone) -> Option<usize> {
        self.cones.iter().position(|x| x.cone == *c)
    }

    pub fn underlying(&self) -> Vec<Cone> {
        self.cones.iter().map(|c| c.cone.clone()).collect()
    }

    /// Indices of cones not strictly contained in another cone of the fan.
    pub fn maximal_indices(&self) -> Vec<usize> {
        (0..self.cones.len())
            .filter(|&i| {
                !self.cones.iter().enumerate().any(|(j, d)| {
                    j != i
                        && d.cone != self.cones[i].cone
                        && d.cone.contains_cone(&self.cones[i].cone)
                })
            })
            .collect()
    }

    /// `F(Σ^c)`.
    pub fn colour_set(&self) -> BTreeSet<usize> {
        self.cones
            .iter()
            .flat_map(|c| c.colours.iter().copied())
            .collect()
    }

    /// Primitive generators of the non-coloured rays, in fan order.
    pub fn non_coloured_rays(&self) -> Vec<IntVec> {
        self.cones
            .iter()
            .filter(|c| c.dim() == 1 && c.colours.is_empty())
            .map(|c| c.cone.rays()[0].clone())
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        crate::polyhedra::support_is_everything(self.lattice.rank(), &self.underlying())
    }
}

fn close_under_faces(lattice: &ColouredLattice, cones: Vec<ColouredCone>) -> Vec<ColouredCone> {
    let mut extra: BTreeSet<(std::cmp::Reverse<usize>, ColouredCone)> = BTreeSet::new();
    for c in &cones {
        for f in coloured_faces(c, lattice) {
            if !cones.contains(&f) {
                extra.insert((std::cmp::Reverse(f.dim()), f));
            }
        }
    }
    let mut out = cones;
    out.extend(extra.into_iter().map(|(_, f)| f));
    let zero = ColouredCone::zero(lattice.rank());
    if !out.contains(&zero) {
        out.push(zero);
    }
    out
}

/// Checks every axiom of a coloured fan and lists every violation.
pub fn validate_coloured_fan(fan: &ColouredFan) -> ValidationReport {
    let lat = &fan.lattice;
    let mut violations = Vec::new();
    let mut sound = vec![true; fan.cones.len()];
    let mut push = |kind, cones: Vec<usize>, message: String| {
        violations.push(Violation {
            kind,
            cones,
            message,
        })
    };
    for (i, c) in fan.cones.iter().enumerate() {
        if c.cone.ambient_rank() != lat.rank() {
            push(
                ViolationKind::AmbientMismatch,
                vec![i],
                format!(
                    "cone {i} lives in rank {}, the lattice has rank {}",
                    c.cone.ambient_rank(),
                    lat.rank()
                ),
            );
            sound[i] = false;
            continue;
        }
        if !c.cone.is_strongly_convex() {
            push(
                ViolationKind::NotStronglyConvex,
                vec![i],
                format!("cone {i} {} contains a line", c.cone),
            );
            sound[i] = false;
        }
        for &a in &c.colours {
            match lat.colour_point(a) {
                None => {
                    push(
                        ViolationKind::UnknownColour,
                        vec![i],
                        format!("cone {i} uses {}, which is not a colour", lat.label(a)),
                    );
                    sound[i] = false;
                }
                Some(u) if is_zero_vec(u) => {
                    push(
                        ViolationKind::ZeroColourPoint,
                        vec![i],
                        format!("cone {i} uses {} whose colour point is 0", lat.label(a)),
                    );
                    sound[i] = false;
                }
                Some(u) if !c.cone.contains(u) => {
                    push(
                        ViolationKind::ColourOutsideCone,
                        vec![i],
                        format!(
                            "colour point of {} is not in cone {i} {}",
                            lat.label(a),
                            c.cone
                        ),
                    );
                    sound[i] = false;
                }
                Some(_) => {}
            }
        }
    }
    for (i, c) in fan.cones.iter().enumerate() {
        if !sound[i] {
            continue;
        }
        for f in coloured_faces(c, lat) {
            if !fan.cones.contains(&f) {
                push(
                    ViolationKind::MissingFace,
                    vec![i],
                    format!(
                        "coloured face {} of cone {i} {} is missing",
                        lat.describe(&f),
                        lat.describe(c)
                    ),
                );
            }
        }
    }
    for (i, j) in (0..fan.cones.len()).tuple_combinations() {
        if !sound[i] || !sound[j] {
            continue;
        }
        let (a, b) = (&fan.cones[i], &fan.cones[j]);
        if a.cone == b.cone {
            push(
                ViolationKind::DuplicateCone,
                vec![i, j],
                format!("cones {i} and {j} share the underlying cone {}", a.cone),
            );
            continue;
        }
        let tau = a.cone.intersect(&b.cone);
        let common: BTreeSet<usize> = a.colours.intersection(&b.colours).copied().collect();
        let ok = tau.is_face_of(&a.cone)
            && tau.is_face_of(&b.cone)
            && lat.induced_colours(&a.colours, &tau) == common
            && lat.induced_colours(&b.colours, &tau) == common;
        if !ok {
            push(
                ViolationKind::BadIntersection,
                vec![i, j],
                format!(
                    "cones {i} {} and {j} {} do not meet in a common coloured face",
                    lat.describe(a),
                    lat.describe(b)
                ),
            );
        }
    }
    ValidationReport { violations }
}

/// `N / N'` with the colours of `C'` removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientLattice {
    pub lattice: ColouredLattice,
    pub datum: HorosphericalDatum,
    /// The projection `N → N/N'`.
    pub projection: IntMatrix,
}

/// Quotient of the coloured lattice of `d` by the saturated sublattice spanned
/// by `sub`, removing the colours `removed` (whose points must lie in it).
pub fn quotient_coloured_lattice(
    d: &HorosphericalDatum,
    sub: &[IntVec],
    removed: &BTreeSet<usize>,
) -> Result<QuotientLattice, HoroError> {
    let lattice = build_coloured_lattice(d);
    let n = lattice.rank();
    let b = IntMatrix::from_cols(n, sub);
    if !is_saturated(&b) {
        return Err(HoroError::NotSaturated);
    }
    for &a in removed {
        let u = lattice.colour_point(a).ok_or_else(|| {
            HoroError::InvalidDatum(format!("{} is not a colour", lattice.label(a)))
        })?;
        if solve_integer_affine(&b, u).is_none() {
            return Err(HoroError::ColourOutsideSublattice(lattice.label(a)));
        }
    }
    let p = IntMatrix::from_rows(n, &integer_left_kernel(&b));
    let m = d.characters() * &p.transpose();
    let mut parabolic = d.parabolic().clone();
    parabolic.extend(removed.iter().copied());
    let datum = HorosphericalDatum::new(d.group().clone(), parabolic, m)?;
    let quotient = build_coloured_lattice(&datum);
    debug_assert!(quotient
        .colours
        .iter()
        .all(|c| { lattice.colour_point(c.root).map(|u| p.mul_vec(u)) == Some(c.point.clone()) }));
    Ok(QuotientLattice {
        lattice: quotient,
        datum,
        projection: p,
    })
}

/// The map of coloured lattices induced by `H1 ⊆ H2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredLatticeMap {
    pub source: ColouredLattice,
    pub target: ColouredLattice,
    /// `rank N2 × rank N1`.
    pub matrix: IntMatrix,
    /// `C_Φ = I2 ∖ I1`, the colours sent to 0.
    pub dominant: BTreeSet<usize>,
}

impl ColouredLatticeMap {
    pub fn identity(lattice: &ColouredLattice) -> Self {
        ColouredLatticeMap {
            source: lattice.clone(),
            target: lattice.clone(),
            matrix: IntMatrix::identity(lattice.rank()),
            dominant: BTreeSet::new(),
        }
    }

    pub fn apply(&self, u: &[BigInt]) -> IntVec {
        self.matrix.mul_vec(u)
    }
}

pub fn coloured_lattice_map(
    source: &HorosphericalDatum,
    target: &HorosphericalDatum,
) -> Result<ColouredLatticeMap, HoroError> {
    if source.group() != target.group() {
        return Err(HoroError::GroupMismatch);
    }
    if !source.parabolic().is_subset(target.parabolic()) {
        return Err(HoroError::NotASubdatum(
            "I of the source is not contained in I of the target".into(),
        ));
    }
    let m1 = source.characters();
    let mut k_cols = Vec::new();
    for (j, col) in target.characters().col_vecs().into_iter().enumerate() {
        let sol = solve_integer_affine(m1, &col).ok_or_else(|| {
            HoroError::NotASubdatum(format!(
                "character {} of the target is not in M of the source",
                j + 1
            ))
        })?;
        k_cols.push(sol.particular);
    }
    let k = IntMatrix::from_cols(source.lattice_rank(), &k_cols);
    let map = ColouredLatticeMap {
        source: build_coloured_lattice(source),
        target: build_coloured_lattice(target),
        matrix: k.transpose(),
        dominant: target
            .parabolic()
            .difference(source.parabolic())
            .copied()
            .collect(),
    };
    for c in map.source.colours() {
        let image = map.apply(&c.point);
        match map.target.colour_point(c.root) {
            Some(u) => assert_eq!(&image, u, "colour points must map to colour points"),
            None => assert!(is_zero_vec(&image), "dominant colours map to 0"),
        }
    }
    Ok(map)
}

/// `G/H1 ≅ G/H2` equivariantly.
pub fn homogeneous_spaces_isomorphic(
    d1: &HorosphericalDatum,
    d2: &HorosphericalDatum,
) -> Result<bool, HoroError> {
    if d1.group() != d2.group() {
        return Err(HoroError::GroupMismatch);
    }
    if d1.parabolic() != d2.parabolic() || d1.lattice_rank() != d2.lattice_rank() {
        return Ok(false);
    }
    let colour_matrix = |d: &HorosphericalDatum| {
        let l = build_coloured_lattice(d);
        let cols: Vec<IntVec> = l.colours().iter().map(|c| c.point.clone()).collect();
        IntMatrix::from_cols(l.rank(), &cols)
    };
    Ok(left_unimodular_equivalent(
        &colour_matrix(d1),
        &colour_matrix(d2),
    ))
}

/// `Σ1 × Σ2` on `N1 × N2`.
pub fn product_coloured_fan(f1: &ColouredFan, f2: &ColouredFan) -> ColouredFan {
    let lattice = f1.lattice.product(&f2.lattice);
    let (n1, n2) = (f1.lattice.rank(), f2.lattice.rank());
    let shift = f1.lattice.group().semisimple_rank();
    let mut cones = Vec::new();
    for a in &f1.cones {
        for b in &f2.cones {
            let mut gens: Vec<IntVec> = a
                .cone
                .generators()
                .into_iter()
                .map(|mut g| {
                    g.resize(n1 + n2, BigInt::zero());
                    g
                })
                .collect();
            gens.extend(b.cone.generators().into_iter().map(|g| {
                let mut v = vec![BigInt::zero(); n1];
                v.extend(g);
                v
            }));
            let mut colours = a.colours.clone();
            colours.extend(b.colours.iter().map(|x| x + shift));
            cones.push(ColouredCone {
                cone: Cone::from_generators(n1 + n2, &gens),
                colours,
            });
        }
    }
    ColouredFan { lattice, cones }
}
