//! Geometry read off a coloured fan: orbits and their closures, global
//! properties, regularity and smoothness, morphisms, local structure and
//! coordinate rings.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::horo::{
    build_coloured_lattice, quotient_coloured_lattice, ColouredCone, ColouredFan,
    ColouredLatticeMap, HoroError, HorosphericalDatum,
};
use crate::intlin::{
    dot, integer_kernel, neg_vec, reduce_mod_lattice, smith_normal_form, solve_integer_affine,
    IntMatrix, IntVec,
};
use crate::polyhedra::lp::{maximize, Constraint, LpOutcome, Relation};
use crate::polyhedra::{covers, quotient_projection, span_lattice, Cone, ConeError};
use crate::rootsys::{colour_smoothness_check, SmoothnessCheck};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DictError {
    #[error("the fan does not live on the coloured lattice of the datum")]
    LatticeMismatch,
    #[error("no cone with index {0} in the fan")]
    ConeNotInFan(usize),
    #[error("cone is not strongly convex")]
    NotStronglyConvex,
    #[error("cancelled")]
    Cancelled,
    #[error(transparent)]
    Horo(#[from] HoroError),
}

/// Cooperative cancellation for the slower checks.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }

    fn check(&self) -> Result<(), DictError> {
        if self.is_cancelled() {
            Err(DictError::Cancelled)
        } else {
            Ok(())
        }
    }
}

fn check_lattice(fan: &ColouredFan, d: &HorosphericalDatum) -> Result<(), DictError> {
    if fan.lattice() == &build_coloured_lattice(d) {
        Ok(())
    } else {
        Err(DictError::LatticeMismatch)
    }
}

/// One `G`-orbit of the variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub cone_index: usize,
    pub dimension: usize,
    /// The orbit as a homogeneous space `G/H_{(J, M)}`.
    pub datum: HorosphericalDatum,
    /// Cones whose orbit closure contains this orbit, i.e. its coloured faces.
    pub in_closure_of: Vec<usize>,
}

impl OrbitRecord {
    pub fn closure(
        &self,
        fan: &ColouredFan,
        d: &HorosphericalDatum,
    ) -> Result<(ColouredFan, HorosphericalDatum), DictError> {
        orbit_closure(fan, self.cone_index, d)
    }
}

pub fn orbit_table(
    fan: &ColouredFan,
    d: &HorosphericalDatum,
) -> Result<Vec<OrbitRecord>, DictError> {
    check_lattice(fan, d)?;
    let lat = fan.lattice();
    let rank = lat.rank();
    let mut out = Vec::with_capacity(fan.len());
    for (i, c) in fan.cones().iter().enumerate() {
        let mut j: BTreeSet<usize> = d.parabolic().clone();
        j.extend(c.colours.iter().copied());
        let dimension = rank - c.dim() + d.group().flag_dimension(&j);
        let q = quotient_coloured_lattice(d, &span_lattice(&c.cone), &c.colours)?;
        let in_closure_of = fan
            .cones()
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_coloured_face_of(c, lat))
            .map(|(k, _)| k)
            .collect();
        out.push(OrbitRecord {
            cone_index: i,
            dimension,
            datum: q.datum,
            in_closure_of,
        });
    }
    Ok(out)
}

/// The coloured fan `(Σ/τ)^c` of the closure of the orbit of cone `tau`,
/// with the datum of its open orbit.
pub fn orbit_closure(
    fan: &ColouredFan,
    tau: usize,
    d: &HorosphericalDatum,
) -> Result<(ColouredFan, HorosphericalDatum), DictError> {
    check_lattice(fan, d)?;
    let t = fan.cones().get(tau).ok_or(DictError::ConeNotInFan(tau))?;
    let q = quotient_coloured_lattice(d, &span_lattice(&t.cone), &t.colours)?;
    let cones = fan
        .cones()
        .iter()
        .filter(|s| t.is_coloured_face_of(s, fan.lattice()))
        .map(|s| ColouredCone {
            cone: s.cone.image(&q.projection),
            colours: s.colours.difference(&t.colours).copied().collect(),
        })
        .collect();
    let closure = ColouredFan::new(q.lattice, cones)?;
    Ok((closure, q.datum))
}

/// Regularity data of one coloured cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeRegularity {
    pub index: usize,
    /// Non-coloured ray generators followed by the colour points of `F`.
    #[serde(serialize_with = "ser_vecs")]
    pub multiset: Vec<IntVec>,
    pub simplicial: bool,
    pub regular: bool,
    pub smooth: bool,
    pub smoothness: SmoothnessCheck,
}

pub(crate) fn ser_vecs<S: serde::Serializer>(v: &[IntVec], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        let row: Vec<String> = x.iter().map(|e| e.to_string()).collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}

/// Regularity analysis of a single coloured cone.
pub fn cone_regularity(
    index: usize,
    c: &ColouredCone,
    fan: &ColouredFan,
    d: &HorosphericalDatum,
) -> ConeRegularity {
    let lat = fan.lattice();
    let mut multiset: Vec<IntVec> = c
        .cone
        .rays()
        .iter()
        .filter(|r| {
            let ray = Cone::from_generators(lat.rank(), &[(*r).clone()]);
            lat.induced_colours(&c.colours, &ray).is_empty()
        })
        .cloned()
        .collect();
    multiset.extend(
        c.colours
            .iter()
            .filter_map(|&a| lat.colour_point(a).cloned()),
    );
    let m = IntMatrix::from_cols(lat.rank(), &multiset);
    let simplicial = m.rank() == multiset.len();
    let regular = simplicial
        && smith_normal_form(&m)
            .invariant_factors()
            .iter()
            .all(One::is_one);
    let smoothness = colour_smoothness_check(d.group(), d.parabolic(), &c.colours);
    ConeRegularity {
        index,
        multiset,
        simplicial,
        regular,
        smooth: regular && smoothness.smooth,
        smoothness,
    }
}

pub fn regularity_report(
    fan: &ColouredFan,
    d: &HorosphericalDatum,
) -> Result<Vec<ConeRegularity>, DictError> {
    check_lattice(fan, d)?;
    Ok(fan
        .cones()
        .iter()
        .enumerate()
        .map(|(i, c)| cone_regularity(i, c, fan, d))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub is_simple: bool,
    pub is_affine: bool,
    pub is_complete: bool,
    pub is_toroidal: bool,
    pub is_projective: bool,
    pub is_simplicial: bool,
    pub is_regular: bool,
    pub is_factorial: bool,
    pub is_q_factorial: bool,
    pub is_smooth: bool,
    pub cones: Vec<ConeRegularity>,
}

pub fn classify_variety(
    fan: &ColouredFan,
    d: &HorosphericalDatum,
) -> Result<PropertyReport, DictError> {
    classify_variety_with(fan, d, &CancelToken::new())
}

pub fn classify_variety_with(
    fan: &ColouredFan,
    d: &HorosphericalDatum,
    cancel: &CancelToken,
) -> Result<PropertyReport, DictError> {
    let cones = regularity_report(fan, d)?;
    let is_simple = fan.maximal_indices().len() == 1;
    let used = fan.colour_set();
    let is_complete = fan.is_complete();
    cancel.check()?;
    let is_projective = is_complete && strictly_convex_plf_exists(fan, cancel)?;
    let is_simplicial = cones.iter().all(|c| c.simplicial);
    let is_regular = cones.iter().all(|c| c.regular);
    Ok(PropertyReport {
        is_simple,
        is_affine: is_simple && used == fan.lattice().colour_roots(),
        is_complete,
        is_toroidal: used.is_empty(),
        is_projective,
        is_simplicial,
        is_regular,
        is_factorial: is_regular,
        is_q_factorial: is_simplicial,
        is_smooth: cones.iter().all(|c| c.smooth),
        cones,
    })
}

fn rat(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Maximizes a common gap `ε ≤ 1` in the strict convexity inequalities of a
/// piecewise linear function across the walls of a complete fan. The function
/// vanishes on the first maximal cone and is written in a basis of the
/// solutions of the gluing equations.
fn strictly_convex_plf_exists(fan: &ColouredFan, cancel: &CancelToken) -> Result<bool, DictError> {
    let n = fan.lattice().rank();
    let maxi: Vec<&Cone> = fan
        .maximal_indices()
        .into_iter()
        .map(|i| &fan.cones()[i].cone)
        .collect();
    let k = maxi.len();
    if k <= 1 {
        return Ok(true);
    }
    let width = (k - 1) * n;
    let row = |i: usize, j: usize, u: &IntVec| {
        let mut r = vec![BigInt::zero(); width];
        for t in 0..n {
            if i > 0 {
                r[(i - 1) * n + t] += &u[t];
            }
            if j > 0 {
                r[(j - 1) * n + t] -= &u[t];
            }
        }
        r
    };
    let mut gluing = Vec::new();
    let mut gaps = Vec::new();
    for (i, j) in (0..k).tuple_combinations() {
        cancel.check()?;
        let wall = maxi[i].intersect(maxi[j]);
        if wall.dim() + 1 != n {
            continue;
        }
        gluing.extend(wall.generators().iter().map(|g| row(i, j, g)));
        for (a, b) in [(i, j), (j, i)] {
            let u = maxi[a]
                .generators()
                .into_iter()
                .find(|u| !wall.contains(u))
                .expect("a wall is a proper face");
            gaps.push(row(a, b, &u));
        }
    }
    let plf = integer_kernel(&IntMatrix::from_rows(width, &gluing));
    if plf.is_empty() {
        return Ok(false);
    }
    let vars = plf.len() + 1;
    let mut cons: Vec<Constraint> = gaps
        .iter()
        .map(|g| {
            let mut r: Vec<BigRational> = plf.iter().map(|b| rat(&dot(g, b))).collect();
            r.push(-BigRational::one());
            Constraint::new(r, Relation::Ge, BigRational::zero())
        })
        .collect();
    let mut cap = vec![BigRational::zero(); vars];
    cap[vars - 1] = BigRational::one();
    cons.push(Constraint::new(
        cap.clone(),
        Relation::Le,
        BigRational::one(),
    ));
    cancel.check()?;
    match maximize(&cap, &cons) {
        LpOutcome::Optimal { value, .. } => Ok(value.is_positive()),
        LpOutcome::Infeasible | LpOutcome::Unbounded => {
            unreachable!("the zero function is feasible and ε is capped")
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub compatible: bool,
    pub proper: bool,
}

pub fn morphism_check(
    map: &ColouredLatticeMap,
    fan1: &ColouredFan,
    fan2: &ColouredFan,
) -> Result<MorphismReport, DictError> {
    morphism_check_with(map, fan1, fan2, &CancelToken::new())
}

pub fn morphism_check_with(
    map: &ColouredLatticeMap,
    fan1: &ColouredFan,
    fan2: &ColouredFan,
    cancel: &CancelToken,
) -> Result<MorphismReport, DictError> {
    if fan1.lattice() != &map.source || fan2.lattice() != &map.target {
        return Err(DictError::LatticeMismatch);
    }
    let phi = &map.matrix;
    let compatible = fan1.cones().iter().all(|s1| {
        let image = s1.cone.image(phi);
        let needed: BTreeSet<usize> = s1.colours.difference(&map.dominant).copied().collect();
        fan2.cones()
            .iter()
            .any(|s2| s2.cone.contains_cone(&image) && needed.is_subset(&s2.colours))
    });
    let targets = fan2.underlying();
    let sources = fan1.underlying();
    let mut proper = true;
    for &i in &fan1.maximal_indices() {
        cancel.check()?;
        if !covers(&fan1.cones()[i].cone.image(phi), &targets) {
            proper = false;
            break;
        }
    }
    if proper {
        for &i in &fan2.maximal_indices() {
            cancel.check()?;
            if !covers(&fan2.cones()[i].cone.preimage(phi), &sources) {
                proper = false;
                break;
            }
        }
    }
    Ok(MorphismReport { compatible, proper })
}

/// The same underlying fan with every colour set emptied.
pub fn decolouration(fan: &ColouredFan) -> ColouredFan {
    let cones = fan
        .cones()
        .iter()
        .map(|c| ColouredCone {
            cone: c.cone.clone(),
            colours: BTreeSet::new(),
        })
        .collect();
    ColouredFan::new_unchecked(fan.lattice().clone(), cones)
}

/// The trivial cone and the non-coloured rays.
pub fn open_toroidal_subfan(fan: &ColouredFan) -> ColouredFan {
    let cones = fan
        .cones()
        .iter()
        .filter(|c| c.dim() <= 1 && c.colours.is_empty())
        .cloned()
        .collect();
    ColouredFan::new_unchecked(fan.lattice().clone(), cones)
}

/// `P_{I ∪ F} = L ⋉ P_u` and the affine slice `Z` through a simple cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalStructure {
    pub q_index: BTreeSet<usize>,
    /// Datum of `L / (L ∩ H)`.
    pub levi: HorosphericalDatum,
    /// Original index of each simple root of the Levi subgroup.
    pub levi_roots: Vec<usize>,
    /// `σ^c` on the coloured lattice of `levi`.
    pub z_cone: ColouredCone,
}

pub fn affine_local_structure(
    sigma: &ColouredCone,
    d: &HorosphericalDatum,
) -> Result<LocalStructure, DictError> {
    if !sigma.cone.is_strongly_convex() {
        return Err(DictError::NotStronglyConvex);
    }
    let g = d.group();
    let s = g.semisimple_rank();
    let mut q_index = d.parabolic().clone();
    q_index.extend(sigma.colours.iter().copied());
    let outside: Vec<usize> = (0..s).filter(|i| !q_index.contains(i)).collect();
    let (levi_group, levi_roots) = g.levi(&q_index, outside.len() + g.torus_rank());
    let mut row_order = levi_roots.clone();
    row_order.extend(outside.iter().copied());
    row_order.extend(s..g.rank());
    let m = d.characters().select_rows(&row_order);
    let local = |a: usize| {
        levi_roots
            .iter()
            .position(|&r| r == a)
            .expect("root of the Levi")
    };
    let parabolic = d.parabolic().iter().map(|&a| local(a)).collect();
    let levi = HorosphericalDatum::new(levi_group, parabolic, m)?;
    let z_cone = ColouredCone {
        cone: sigma.cone.clone(),
        colours: sigma.colours.iter().map(|&a| local(a)).collect(),
    };
    Ok(LocalStructure {
        q_index,
        levi,
        levi_roots,
        z_cone,
    })
}

/// Generators of the monoid `σ∨ ∩ N∨`: a Hilbert basis modulo units, then
/// `±` a basis of the units.
pub fn weight_monoid_generators(sigma: &ColouredCone) -> Result<Vec<IntVec>, DictError> {
    if !sigma.cone.is_strongly_convex() {
        return Err(DictError::NotStronglyConvex);
    }
    let n = sigma.cone.ambient_rank();
    let dual = sigma.cone.dual();
    let units = dual.lineality().to_vec();
    let proj = quotient_projection(n, &units);
    let pointed = dual.image(&proj);
    let hb = pointed.hilbert_basis().map_err(|e| match e {
        ConeError::NotPointed | ConeError::DimensionMismatch { .. } => DictError::NotStronglyConvex,
    })?;
    let mut out: Vec<IntVec> = hb
        .iter()
        .map(|h| {
            let lift = solve_integer_affine(&proj, h)
                .expect("projection is onto")
                .particular;
            reduce_mod_lattice(&lift, &units)
        })
        .collect();
    for u in &units {
        out.push(u.clone());
        out.push(neg_vec(u));
    }
    debug_assert!(out.iter().all(|m| sigma
        .cone
        .generators()
        .iter()
        .all(|g| !dot(m, g).is_negative())));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::horo::{coloured_lattice_map, validate_coloured_fan};
    use crate::intlin::ivec;
    use crate::rootsys::RootDatum;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn cc(n: usize, g: &[&[i64]], colours: &[usize]) -> ColouredCone {
        ColouredCone::new(Cone::from_i64(n, g), colours.iter().copied())
    }

    fn sl3u3() -> HorosphericalDatum {
        HorosphericalDatum::full(RootDatum::parse("A2", 0).unwrap())
    }

    fn orbits_fan() -> ColouredFan {
        ColouredFan::from_cones(
            build_coloured_lattice(&sl3u3()),
            vec![
                cc(2, &[&[1, 0], &[0, 1]], &[0]),
                cc(2, &[&[0, 1], &[-1, -1]], &[]),
                cc(2, &[&[1, 0], &[-1, -1]], &[0]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn orbit_dimensions() {
        let d = sl3u3();
        let fan = orbits_fan();
        let t = orbit_table(&fan, &d).unwrap();
        assert_eq!(t.len(), 7);
        let dim_of = |c: ColouredCone| t[fan.index_of(&c).unwrap()].dimension;
        assert_eq!(dim_of(cc(2, &[&[1, 0], &[0, 1]], &[0])), 2);
        assert_eq!(dim_of(cc(2, &[&[0, 1], &[-1, -1]], &[])), 3);
        assert_eq!(dim_of(cc(2, &[&[1, 0], &[-1, -1]], &[0])), 2);
        assert_eq!(dim_of(cc(2, &[&[0, 1]], &[])), 4);
        assert_eq!(dim_of(cc(2, &[&[1, 0]], &[0])), 3);
        assert_eq!(dim_of(cc(2, &[&[-1, -1]], &[])), 4);
        assert_eq!(dim_of(ColouredCone::zero(2)), 5);
    }

    #[test]
    fn trivial_and_toric_orbits() {
        let d = sl3u3();
        let triv = ColouredFan::trivial(build_coloured_lattice(&d));
        let t = orbit_table(&triv, &d).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].dimension, 2 + 3);

        let torus = HorosphericalDatum::full(RootDatum::parse("", 2).unwrap());
        let quad = ColouredFan::from_cones(
            build_coloured_lattice(&torus),
            vec![cc(2, &[&[1, 0], &[0, 1]], &[])],
        )
        .unwrap();
        let mut dims: Vec<usize> = orbit_table(&quad, &torus)
            .unwrap()
            .iter()
            .map(|r| r.dimension)
            .collect();
        dims.sort();
        assert_eq!(dims, vec![0, 1, 1, 2]);
        assert_eq!(orbit_table(&quad, &d), Err(DictError::LatticeMismatch));
    }

    #[test]
    fn closures() {
        let d = sl3u3();
        let fan = orbits_fan();
        let s1 = fan.index_of(&cc(2, &[&[1, 0], &[0, 1]], &[0])).unwrap();
        let (f, dd) = orbit_closure(&fan, s1, &d).unwrap();
        assert_eq!(f.lattice().rank(), 0);
        assert_eq!(f.len(), 1);
        assert_eq!(dd.parabolic(), &set(&[0]));
        assert_eq!(dd.lattice_rank(), 0);

        let s12 = fan.index_of(&cc(2, &[&[0, 1]], &[])).unwrap();
        let (f, dd) = orbit_closure(&fan, s12, &d).unwrap();
        assert_eq!(f.lattice().rank(), 1);
        assert_eq!(f.lattice().colour_point(0), Some(&ivec(&[1])));
        assert_eq!(f.lattice().colour_point(1), Some(&ivec(&[0])));
        assert!(dd.parabolic().is_empty());
        assert_eq!(dd.characters(), &IntMatrix::from_i64(&[&[1], &[0]]));
        assert!(validate_coloured_fan(&f).is_valid());
        assert_eq!(f.len(), 3);

        let zero = fan.index_of(&ColouredCone::zero(2)).unwrap();
        let (f, dd) = orbit_closure(&fan, zero, &d).unwrap();
        assert_eq!(f, fan);
        assert_eq!(dd, d);
        assert_eq!(
            orbit_closure(&fan, 99, &d),
            Err(DictError::ConeNotInFan(99))
        );
    }

    #[test]
    fn classification() {
        let d = sl3u3();
        let lat = build_coloured_lattice(&d);
        let aff = ColouredFan::from_cones(lat.clone(), vec![cc(2, &[&[1, 0], &[0, 1]], &[0, 1])])
            .unwrap();
        let r = classify_variety(&aff, &d).unwrap();
        assert!(r.is_affine && r.is_simple && !r.is_complete);

        let r = classify_variety(&orbits_fan(), &d).unwrap();
        assert!(r.is_complete && r.is_projective && !r.is_affine && !r.is_toroidal);

        let sl2 = HorosphericalDatum::full(RootDatum::parse("A1", 0).unwrap());
        let bl = ColouredFan::from_cones(build_coloured_lattice(&sl2), vec![cc(1, &[&[1]], &[])])
            .unwrap();
        let r = classify_variety(&bl, &sl2).unwrap();
        assert!(r.is_toroidal && !r.is_complete && !r.is_projective);
    }

    #[test]
    fn cancellation() {
        let token = CancelToken::new();
        token.cancel();
        assert_eq!(
            classify_variety_with(&orbits_fan(), &sl3u3(), &token),
            Err(DictError::Cancelled)
        );
    }

    #[test]
    fn non_projective_complete_fan() {
        // A complete rank-3 fan with no strictly convex support function
        let torus = HorosphericalDatum::full(RootDatum::parse("", 3).unwrap());
        let lat = build_coloured_lattice(&torus);
        let r = |v: [i64; 3]| ivec(&v);
        let (e1, e2, e3) = (r([1, 0, 0]), r([0, 1, 0]), r([0, 0, 1]));
        let m = r([-1, -1, -1]);
        let (a, b, c) = (r([2, 1, 1]), r([1, 2, 1]), r([1, 1, 2]));
        let tri = |x: &IntVec, y: &IntVec, z: &IntVec| {
            ColouredCone::new(
                Cone::from_generators(3, &[x.clone(), y.clone(), z.clone()]),
                [],
            )
        };
        let cones = vec![
            tri(&a, &b, &c),
            tri(&e1, &e2, &b),
            tri(&e1, &b, &a),
            tri(&e2, &e3, &c),
            tri(&e2, &c, &b),
            tri(&e3, &e1, &a),
            tri(&e3, &a, &c),
            tri(&e1, &e2, &m),
            tri(&e2, &e3, &m),
            tri(&e3, &e1, &m),
        ];
        let fan = ColouredFan::from_cones(lat.clone(), cones).unwrap();
        let rep = classify_variety(&fan, &torus).unwrap();
        assert!(rep.is_complete && rep.is_simplicial);
        assert!(!rep.is_projective);

        let p3 = vec![
            tri(&e1, &e2, &e3),
            tri(&e1, &e2, &m),
            tri(&e2, &e3, &m),
            tri(&e3, &e1, &m),
        ];
        let fan = ColouredFan::from_cones(lat, p3).unwrap();
        let rep = classify_variety(&fan, &torus).unwrap();
        assert!(rep.is_complete && rep.is_projective && rep.is_smooth);
    }

    #[test]
    fn non_factorial_example() {
        let d = HorosphericalDatum::new(
            RootDatum::parse("A2", 0).unwrap(),
            set(&[]),
            IntMatrix::from_i64(&[&[1], &[1]]),
        )
        .unwrap();
        let lat = build_coloured_lattice(&d);
        let both = ColouredFan::from_cones(lat.clone(), vec![cc(1, &[&[1]], &[0, 1])]).unwrap();
        let rep = regularity_report(&both, &d).unwrap();
        let top = &rep[0];
        assert_eq!(top.multiset, vec![ivec(&[1]), ivec(&[1])]);
        assert!(!top.simplicial);
        let one = ColouredFan::from_cones(lat, vec![cc(1, &[&[1]], &[0])]).unwrap();
        assert!(regularity_report(&one, &d).unwrap()[0].regular);
    }

    #[test]
    fn smoothness_table() {
        let g = RootDatum::parse("A4", 0).unwrap();
        let mut m = IntMatrix::zeros(4, 2);
        m[(0, 0)] = 1.into();
        m[(2, 1)] = 1.into();
        let d = HorosphericalDatum::new(g, set(&[1, 3]), m).unwrap();
        let lat = build_coloured_lattice(&d);
        let check = |c: ColouredCone| {
            let fan = ColouredFan::from_cones(lat.clone(), vec![c.clone()]).unwrap();
            let i = fan.index_of(&c).unwrap();
            regularity_report(&fan, &d).unwrap()[i].clone()
        };
        let a = check(cc(2, &[&[1, 0], &[-1, 1]], &[0, 2]));
        assert!(!a.smooth && !a.simplicial);
        let b = check(cc(2, &[&[1, 0], &[0, 1]], &[0]));
        assert!(b.smooth);
        let c = check(cc(2, &[&[1, 0], &[0, 1]], &[2]));
        assert!(c.regular && !c.smooth);
        assert_eq!(
            c.smoothness.violations[0].describe(d.group()),
            "a3 is connected to two components"
        );
    }

    #[test]
    fn morphisms() {
        let sl2 = HorosphericalDatum::full(RootDatum::parse("A1", 0).unwrap());
        let lat = build_coloured_lattice(&sl2);
        let a2 = ColouredFan::from_cones(lat.clone(), vec![cc(1, &[&[1]], &[0])]).unwrap();
        let bl = decolouration(&a2);
        let id = ColouredLatticeMap::identity(&lat);
        assert_eq!(
            morphism_check(&id, &a2, &a2).unwrap(),
            MorphismReport {
                compatible: true,
                proper: true
            }
        );
        assert_eq!(
            morphism_check(&id, &bl, &a2).unwrap(),
            MorphismReport {
                compatible: true,
                proper: true
            }
        );
        assert!(!morphism_check(&id, &a2, &bl).unwrap().compatible);

        let flag =
            HorosphericalDatum::new(sl2.group().clone(), set(&[]), IntMatrix::zeros(1, 0)).unwrap();
        let to_flag = coloured_lattice_map(&sl2, &flag).unwrap();
        assert!(to_flag.dominant.is_empty());
        let pt = ColouredFan::trivial(build_coloured_lattice(&flag));
        assert!(!morphism_check(&to_flag, &a2, &pt).unwrap().compatible);
        assert!(morphism_check(&to_flag, &bl, &pt).unwrap().compatible);

        // the open subvariety A² ∖ 0 → A² is compatible but not proper
        let open = ColouredFan::trivial(lat.clone());
        assert_eq!(
            morphism_check(&id, &open, &a2).unwrap(),
            MorphismReport {
                compatible: true,
                proper: false
            }
        );
        assert_eq!(
            morphism_check(&id, &a2, &pt),
            Err(DictError::LatticeMismatch)
        );
    }

    #[test]
    fn decolouring() {
        let d = sl3u3();
        let fan = orbits_fan();
        let dec = decolouration(&fan);
        assert!(validate_coloured_fan(&dec).is_valid());
        assert_eq!(decolouration(&dec), dec);
        let sl2 = HorosphericalDatum::full(RootDatum::parse("A1", 0).unwrap());
        let a2 = ColouredFan::from_cones(build_coloured_lattice(&sl2), vec![cc(1, &[&[1]], &[0])])
            .unwrap();
        assert_eq!(decolouration(&a2).cones()[0], cc(1, &[&[1]], &[]));

        let open = open_toroidal_subfan(&fan);
        let mut got: Vec<ColouredCone> = open.cones().to_vec();
        got.sort();
        let mut want = vec![
            ColouredCone::zero(2),
            cc(2, &[&[0, 1]], &[]),
            cc(2, &[&[-1, -1]], &[]),
        ];
        want.sort();
        assert_eq!(got, want);
        assert!(validate_coloured_fan(&open).is_valid());
        let id = ColouredLatticeMap::identity(fan.lattice());
        assert!(morphism_check(&id, &open, &fan).unwrap().compatible);
        assert!(morphism_check(&id, &dec, &fan).unwrap().proper);
        let _ = d;
    }

    #[test]
    fn local_structure() {
        let d = sl3u3();
        let ls = affine_local_structure(&cc(2, &[&[1, 0], &[0, 1]], &[0]), &d).unwrap();
        assert_eq!(ls.q_index, set(&[0]));
        assert_eq!(ls.levi.group().descriptor(), "A1");
        assert_eq!(ls.levi.group().torus_rank(), 1);
        assert_eq!(ls.z_cone, cc(2, &[&[1, 0], &[0, 1]], &[0]));
        let ll = build_coloured_lattice(&ls.levi);
        assert_eq!(ll.rank(), 2);
        assert_eq!(ll.colour_roots(), set(&[0]));
        let zf = ColouredFan::from_cones(ll, vec![ls.z_cone.clone()]).unwrap();
        assert!(classify_variety(&zf, &ls.levi).unwrap().is_affine);

        let tor = affine_local_structure(&cc(2, &[&[1, 0], &[1, 1]], &[]), &d).unwrap();
        assert_eq!(tor.levi.group().semisimple_rank(), 0);
        assert_eq!(tor.levi.group().torus_rank(), 2);

        let all = affine_local_structure(&cc(2, &[&[1, 0], &[0, 1]], &[0, 1]), &d).unwrap();
        assert_eq!(all.levi, d);
        assert_eq!(
            affine_local_structure(&cc(1, &[&[1], &[-1]], &[]), &d),
            Err(DictError::NotStronglyConvex)
        );
    }

    #[test]
    fn weight_monoids() {
        let sorted = |mut v: Vec<IntVec>| {
            v.sort();
            v
        };
        assert_eq!(
            sorted(weight_monoid_generators(&cc(2, &[&[1, 0], &[0, 1]], &[0, 1])).unwrap()),
            vec![ivec(&[0, 1]), ivec(&[1, 0])]
        );
        assert_eq!(
            weight_monoid_generators(&ColouredCone::zero(1)).unwrap(),
            vec![ivec(&[1]), ivec(&[-1])]
        );
        assert_eq!(
            sorted(weight_monoid_generators(&cc(2, &[&[1, 0], &[1, 2]], &[])).unwrap()),
            vec![ivec(&[0, 1]), ivec(&[1, 0]), ivec(&[2, -1])]
        );
        let ray = weight_monoid_generators(&cc(2, &[&[1, 1]], &[])).unwrap();
        assert_eq!(ray.len(), 3);
    }
}
