//! Random fans and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use horofan::horo::{build_coloured_lattice, ColouredCone, ColouredFan, HorosphericalDatum};
use horofan::intlin::{ivec, IntMatrix, IntVec};
use horofan::polyhedra::Cone;
use horofan::rootsys::RootDatum;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn datum(group: &str, torus: usize, i: &[usize], m: &[&[i64]]) -> HorosphericalDatum {
    let g = RootDatum::parse(group, torus).unwrap();
    let m = if m.is_empty() {
        IntMatrix::zeros(g.rank(), 0)
    } else {
        IntMatrix::from_i64(m)
    };
    HorosphericalDatum::new(g, i.iter().copied().collect(), m).unwrap()
}

pub fn full(group: &str, torus: usize) -> HorosphericalDatum {
    HorosphericalDatum::full(RootDatum::parse(group, torus).unwrap())
}

pub fn cc(n: usize, gens: &[&[i64]], colours: &[usize]) -> ColouredCone {
    ColouredCone::new(Cone::from_i64(n, gens), colours.iter().copied())
}

fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |a, &b| a.gcd(&b));
    v.iter().map(|x| x / g).collect()
}

fn random_vector<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
        if v.iter().any(|&x| x != 0) {
            return primitive(&v);
        }
    }
}

fn rank2_datum<R: Rng>(rng: &mut R) -> HorosphericalDatum {
    match rng.gen_range(0..5) {
        0 => full("A2", 0),
        1 => full("A1xA1", 0),
        2 => full("A1", 1),
        3 => full("", 2),
        _ => datum("A2", 0, &[], &[&[1, 0], &[0, 2]]),
    }
}

fn rank3_datum<R: Rng>(rng: &mut R) -> HorosphericalDatum {
    match rng.gen_range(0..4) {
        0 => full("A3", 0),
        1 => full("A2", 1),
        2 => full("A1xA1xA1", 0),
        _ => full("", 3),
    }
}

/// Colour sets chosen once for the whole fan: a cone carries every chosen
/// colour whose point it contains.
fn colour_cones<R: Rng>(rng: &mut R, d: &HorosphericalDatum, cones: Vec<Cone>) -> ColouredFan {
    let lat = build_coloured_lattice(d);
    let chosen: BTreeSet<usize> = lat
        .colours()
        .iter()
        .map(|c| c.root)
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    let coloured = cones
        .into_iter()
        .map(|c| {
            let f = lat.induced_colours(&chosen, &c);
            ColouredCone {
                cone: c,
                colours: f,
            }
        })
        .collect();
    ColouredFan::from_cones(lat, coloured).expect("random fan is valid")
}

fn cross(a: &[i64], b: &[i64]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Distinct primitive rank-2 rays sorted by angle.
fn angular_rays<R: Rng>(rng: &mut R, k: usize) -> Vec<Vec<i64>> {
    let mut rays: Vec<Vec<i64>> = Vec::new();
    while rays.len() < k {
        let v = random_vector(rng, 2, 3);
        if !rays.contains(&v) {
            rays.push(v);
        }
    }
    rays.sort_by(|a, b| {
        let ta = (a[1] as f64).atan2(a[0] as f64);
        let tb = (b[1] as f64).atan2(b[0] as f64);
        ta.partial_cmp(&tb).unwrap()
    });
    rays
}

fn cone_of(n: usize, gens: &[&Vec<i64>]) -> Cone {
    let g: Vec<IntVec> = gens.iter().map(|v| ivec(v)).collect();
    Cone::from_generators(n, &g)
}

/// A random valid rank-2 coloured fan, usually with several maximal cones.
pub fn random_rank2_fan<R: Rng>(rng: &mut R) -> (HorosphericalDatum, ColouredFan) {
    let d = rank2_datum(rng);
    let k = rng.gen_range(3..=6);
    let rays = angular_rays(rng, k);
    let mut cones = Vec::new();
    let mut used = vec![false; k];
    for i in 0..k {
        let j = (i + 1) % k;
        if cross(&rays[i], &rays[j]) > 0 && rng.gen_bool(0.7) {
            cones.push(cone_of(2, &[&rays[i], &rays[j]]));
            used[i] = true;
            used[j] = true;
        }
    }
    for i in 0..k {
        if !used[i] && (rng.gen_bool(0.5) || cones.is_empty()) {
            cones.push(cone_of(2, &[&rays[i]]));
        }
    }
    cones.shuffle(rng);
    let fan = colour_cones(rng, &d, cones);
    (d, fan)
}

/// A random complete rank-2 coloured fan.
pub fn random_complete_rank2_fan<R: Rng>(rng: &mut R) -> (HorosphericalDatum, ColouredFan) {
    let d = rank2_datum(rng);
    loop {
        let k = rng.gen_range(3..=6);
        let rays = angular_rays(rng, k);
        if (0..k).all(|i| cross(&rays[i], &rays[(i + 1) % k]) > 0) {
            let cones = (0..k)
                .map(|i| cone_of(2, &[&rays[i], &rays[(i + 1) % k]]))
                .collect();
            return (d.clone(), colour_cones(rng, &d, cones));
        }
    }
}

/// Generators of a random pointed cone in rank `n` (all in an open half-space).
pub fn random_pointed_generators<R: Rng>(
    rng: &mut R,
    n: usize,
    count: usize,
    bound: i64,
) -> Vec<Vec<i64>> {
    let w: Vec<i64> = (0..n)
        .map(|_| if rng.gen_bool(0.5) { 1 } else { 2 } * if rng.gen_bool(0.5) { 1 } else { -1 })
        .collect();
    let mut out: Vec<Vec<i64>> = Vec::new();
    while out.len() < count {
        let v = random_vector(rng, n, bound);
        let s: i64 = v.iter().zip(&w).map(|(a, b)| a * b).sum();
        if s > 0 && !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// A random valid rank-3 fan consisting of one cone and its faces.
pub fn random_rank3_fan<R: Rng>(rng: &mut R) -> (HorosphericalDatum, ColouredFan) {
    let d = rank3_datum(rng);
    let count = rng.gen_range(1..=4);
    let gens = random_pointed_generators(rng, 3, count, 2);
    let cone = cone_of(3, &gens.iter().collect::<Vec<_>>());
    let fan = colour_cones(rng, &d, vec![cone]);
    (d, fan)
}

pub fn random_fan<R: Rng>(rng: &mut R) -> (HorosphericalDatum, ColouredFan) {
    if rng.gen_bool(0.6) {
        random_rank2_fan(rng)
    } else {
        random_rank3_fan(rng)
    }
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        3 => {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        _ => unimplemented!("rank at most 3"),
    }
}

fn subsets(k: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    if k < n {
        return vec![];
    }
    let mut out = subsets(k - 1, n);
    for mut s in subsets(k - 1, n - 1) {
        s.push(k - 1);
        out.push(s);
    }
    out
}

/// Membership in a full-dimensional cone: `x` is a nonnegative combination of
/// some `n` independent generators (Carathéodory), decided by Cramer's rule.
pub fn in_cone(gens: &[Vec<i64>], x: &[i64]) -> bool {
    let n = x.len();
    for s in subsets(gens.len(), n) {
        // columns are the chosen generators
        let cols: Vec<&Vec<i64>> = s.iter().map(|&i| &gens[i]).collect();
        let a: Vec<Vec<i64>> = (0..n)
            .map(|r| cols.iter().map(|c| c[r]).collect())
            .collect();
        let d = det(&a);
        if d == 0 {
            continue;
        }
        let ok = (0..n).all(|j| {
            let aj: Vec<Vec<i64>> = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| if c == j { x[r] } else { a[r][c] })
                        .collect()
                })
                .collect();
            det(&aj) * d.signum() >= 0
        });
        if ok {
            return true;
        }
    }
    false
}

pub fn full_dimensional(gens: &[Vec<i64>], n: usize) -> bool {
    subsets(gens.len(), n).iter().any(|s| {
        let a: Vec<Vec<i64>> = (0..n)
            .map(|r| s.iter().map(|&i| gens[i][r]).collect())
            .collect();
        det(&a) != 0
    })
}

fn box_points(lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for (l, h) in lo.iter().zip(hi) {
        let mut next = Vec::new();
        for p in &out {
            for v in *l..=*h {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Hilbert basis of a full-dimensional pointed cone by enumerating the
/// bounding box of `Σ [0,1] g_i` and discarding decomposable points. Points
/// are visited by increasing height, so a point is decomposable iff it minus
/// some earlier irreducible point stays in the cone.
pub fn brute_force_hilbert_basis(gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = gens[0].len();
    let lo: Vec<i64> = (0..n)
        .map(|i| gens.iter().map(|g| g[i].min(0)).sum())
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|i| gens.iter().map(|g| g[i].max(0)).sum())
        .collect();
    let height = box_points(&vec![-3; n], &vec![3; n])
        .into_iter()
        .find(|w| {
            gens.iter()
                .all(|g| g.iter().zip(w).map(|(a, b)| a * b).sum::<i64>() > 0)
        })
        .expect("pointed cone");
    let h = |p: &[i64]| p.iter().zip(&height).map(|(a, b)| a * b).sum::<i64>();
    let mut pts: Vec<Vec<i64>> = box_points(&lo, &hi)
        .into_iter()
        .filter(|p| p.iter().any(|&x| x != 0) && in_cone(gens, p))
        .collect();
    pts.sort_by_key(|p| h(p));
    let mut out: Vec<Vec<i64>> = Vec::new();
    for x in pts {
        let decomposable = out.iter().any(|y| {
            h(y) < h(&x) && {
                let z: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                in_cone(gens, &z)
            }
        });
        if !decomposable {
            out.push(x);
        }
    }
    out.sort();
    out
}
