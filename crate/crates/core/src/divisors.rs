//! B⁻-invariant divisors on a coloured fan: class and Picard groups,
//! Cartier data, positivity and the anticanonical divisor.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::horo::{ColouredFan, ColouredLattice, HorosphericalDatum};
use crate::intlin::{
    cokernel, dot, integer_kernel, lattice_basis, lattice_quotient, reduce_mod_lattice,
    smith_normal_form, solve_integer_affine, unit_vec, AbelianGroup, IntMatrix, IntVec, Smith,
};
use crate::polyhedra::Cone;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivisorError {
    #[error("the fan is not complete")]
    NotComplete,
    #[error("expected {expected} coefficients, found {found}")]
    WrongShape { expected: usize, found: usize },
    #[error("{0} is not a non-coloured ray of the fan")]
    UnknownRay(String),
    #[error("{0} is not a colour of the lattice")]
    UnknownColour(usize),
    #[error("the datum does not match the fan's coloured lattice")]
    LatticeMismatch,
}

/// A B⁻-stable prime divisor: `D_ρ` for a non-coloured ray or `D_α` for a colour.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimeDivisor {
    Ray(IntVec),
    Colour(usize),
}

impl PrimeDivisor {
    pub fn point<'a>(&'a self, lattice: &'a ColouredLattice) -> &'a IntVec {
        match self {
            PrimeDivisor::Ray(u) => u,
            PrimeDivisor::Colour(a) => lattice.colour_point(*a).expect("colour of the lattice"),
        }
    }

    pub fn label(&self, lattice: &ColouredLattice) -> String {
        match self {
            PrimeDivisor::Ray(u) => format!(
                "D({})",
                u.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            PrimeDivisor::Colour(a) => format!("D_{}", lattice.label(*a)),
        }
    }
}

/// Non-coloured rays in fan order, then all colours in lattice order.
pub fn prime_divisors(fan: &ColouredFan) -> Vec<PrimeDivisor> {
    let mut out: Vec<PrimeDivisor> = fan
        .non_coloured_rays()
        .into_iter()
        .map(PrimeDivisor::Ray)
        .collect();
    out.extend(
        fan.lattice()
            .colours()
            .iter()
            .map(|c| PrimeDivisor::Colour(c.root)),
    );
    out
}

/// `Σ a_ρ D_ρ + Σ a_α D_α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BInvariantDivisor {
    pub rays: Vec<IntVec>,
    pub ray_coeffs: Vec<BigInt>,
    pub colours: Vec<usize>,
    pub colour_coeffs: Vec<BigInt>,
}

impl BInvariantDivisor {
    pub fn zero(fan: &ColouredFan) -> Self {
        let rays = fan.non_coloured_rays();
        let colours: Vec<usize> = fan.lattice().colours().iter().map(|c| c.root).collect();
        BInvariantDivisor {
            ray_coeffs: vec![BigInt::zero(); rays.len()],
            colour_coeffs: vec![BigInt::zero(); colours.len()],
            rays,
            colours,
        }
    }

    /// Coefficients in the order of [`prime_divisors`].
    pub fn from_coefficients(fan: &ColouredFan, coeffs: &[BigInt]) -> Result<Self, DivisorError> {
        let mut d = Self::zero(fan);
        let k = d.rays.len();
        if coeffs.len() != k + d.colours.len() {
            return Err(DivisorError::WrongShape {
                expected: k + d.colours.len(),
                found: coeffs.len(),
            });
        }
        d.ray_coeffs = coeffs[..k].to_vec();
        d.colour_coeffs = coeffs[k..].to_vec();
        Ok(d)
    }

    pub fn from_terms(
        fan: &ColouredFan,
        terms: &[(PrimeDivisor, BigInt)],
    ) -> Result<Self, DivisorError> {
        let mut d = Self::zero(fan);
        for (p, c) in terms {
            match p {
                PrimeDivisor::Ray(u) => {
                    let i = d
                        .rays
                        .iter()
                        .position(|r| r == u)
                        .ok_or_else(|| DivisorError::UnknownRay(format!("{u:?}")))?;
                    d.ray_coeffs[i] += c;
                }
                PrimeDivisor::Colour(a) => {
                    let i = d
                        .colours
                        .iter()
                        .position(|r| r == a)
                        .ok_or(DivisorError::UnknownColour(*a))?;
                    d.colour_coeffs[i] += c;
                }
            }
        }
        Ok(d)
    }

    pub fn coefficients(&self) -> IntVec {
        self.ray_coeffs
            .iter()
            .chain(&self.colour_coeffs)
            .cloned()
            .collect()
    }

    pub fn coefficient(&self, p: &PrimeDivisor) -> BigInt {
        match p {
            PrimeDivisor::Ray(u) => self
                .rays
                .iter()
                .position(|r| r == u)
                .map(|i| self.ray_coeffs[i].clone()),
            PrimeDivisor::Colour(a) => self
                .colours
                .iter()
                .position(|r| r == a)
                .map(|i| self.colour_coeffs[i].clone()),
        }
        .unwrap_or_default()
    }

    pub fn ray_coefficient(&self, u: &[BigInt]) -> BigInt {
        self.coefficient(&PrimeDivisor::Ray(u.to_vec()))
    }

    pub fn colour_coefficient(&self, root: usize) -> BigInt {
        self.coefficient(&PrimeDivisor::Colour(root))
    }

    pub fn is_zero(&self) -> bool {
        self.ray_coeffs
            .iter()
            .chain(&self.colour_coeffs)
            .all(Zero::is_zero)
    }

    pub fn describe(&self, lattice: &ColouredLattice) -> String {
        let terms: Vec<String> = self
            .rays
            .iter()
            .cloned()
            .map(PrimeDivisor::Ray)
            .zip(&self.ray_coeffs)
            .chain(
                self.colours
                    .iter()
                    .map(|&a| PrimeDivisor::Colour(a))
                    .zip(&self.colour_coeffs),
            )
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| {
                if c.is_one() {
                    p.label(lattice)
                } else {
                    format!("{c}·{}", p.label(lattice))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for BInvariantDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}",
            self.coefficients()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
        )
    }
}

/// `div(f_m) = Σ ⟨m, u_D⟩ D`.
pub fn principal_divisor(m: &[BigInt], fan: &ColouredFan) -> BInvariantDivisor {
    let lat = fan.lattice();
    let coeffs: IntVec = prime_divisors(fan)
        .iter()
        .map(|p| dot(m, p.point(lat)))
        .collect();
    BInvariantDivisor::from_coefficients(fan, &coeffs).expect("shape from prime_divisors")
}

/// Matrix whose column `i` is `div(f_{e_i})`.
fn principal_matrix(fan: &ColouredFan) -> IntMatrix {
    let lat = fan.lattice();
    let pts: Vec<IntVec> = prime_divisors(fan)
        .iter()
        .map(|p| p.point(lat).clone())
        .collect();
    IntMatrix::from_rows(lat.rank(), &pts)
}

#[derive(Clone, Debug)]
pub struct ClassGroup {
    pub group: AbelianGroup,
    /// Prime divisors whose classes generate the group.
    pub generators: Vec<PrimeDivisor>,
    /// `div(f_{e_i})` for the standard basis of `N∨`.
    pub relations: Vec<BInvariantDivisor>,
    pub left_exact: bool,
    snf: Smith,
}

impl ClassGroup {
    /// Coordinates of the class of `δ`: torsion parts reduced, then free parts.
    pub fn class_of(&self, delta: &BInvariantDivisor) -> IntVec {
        let y = self.snf.u.mul_vec(&delta.coefficients());
        let r = self.snf.invariant_factors().len();
        let mut out = Vec::new();
        for (i, yi) in y.iter().enumerate() {
            if i < r {
                let di = &self.snf.d[(i, i)];
                if !di.is_one() {
                    out.push(yi.mod_floor(di));
                }
            } else {
                out.push(yi.clone());
            }
        }
        out
    }

    pub fn is_principal(&self, delta: &BInvariantDivisor) -> bool {
        self.class_of(delta).iter().all(Zero::is_zero)
    }
}

/// True iff the unit vectors in `keep` together with the columns of `rel`
/// generate `Z^k`.
fn generates(k: usize, keep: &[usize], rel: &IntMatrix) -> bool {
    let mut cols: Vec<IntVec> = keep.iter().map(|&i| unit_vec(k, i)).collect();
    cols.extend(rel.col_vecs());
    let m = IntMatrix::from_cols(k, &cols);
    cokernel(&m).is_trivial()
}

pub fn class_group(fan: &ColouredFan) -> ClassGroup {
    let p = principal_matrix(fan);
    let k = p.nrows();
    let primes = prime_divisors(fan);
    let n_rays = fan.non_coloured_rays().len();
    let mut keep: Vec<usize> = (0..k).collect();
    // drop rays before colours, later ones first
    for i in (0..n_rays).rev().chain((n_rays..k).rev()) {
        let trial: Vec<usize> = keep.iter().copied().filter(|&j| j != i).collect();
        if generates(k, &trial, &p) {
            keep = trial;
        }
    }
    let relations = (0..fan.lattice().rank())
        .map(|i| principal_divisor(&unit_vec(fan.lattice().rank(), i), fan))
        .collect();
    ClassGroup {
        group: cokernel(&p),
        generators: keep.into_iter().map(|i| primes[i].clone()).collect(),
        relations,
        left_exact: p.rank() == fan.lattice().rank(),
        snf: smith_normal_form(&p),
    }
}

/// Piecewise linear data `{m_σ}` on the maximal cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartierData {
    /// Fan indices of the maximal cones.
    pub cones: Vec<usize>,
    pub m: Vec<IntVec>,
}

impl CartierData {
    pub fn get(&self, cone_index: usize) -> Option<&IntVec> {
        self.cones
            .iter()
            .position(|&c| c == cone_index)
            .map(|i| &self.m[i])
    }

    /// `φ(u)` for `u` in the support.
    pub fn evaluate(&self, fan: &ColouredFan, u: &[BigInt]) -> Option<BigInt> {
        self.cones
            .iter()
            .zip(&self.m)
            .find(|(&c, _)| fan.cones()[c].cone.contains(u))
            .map(|(_, m)| dot(m, u))
    }
}

/// Rows of the linear conditions on `(m_σ)_σ maximal` plus one column per
/// prime divisor: `⟨m_σ, u_D⟩ − δ_D = 0` for each `D` attached to `σ`, and
/// `⟨m_σ − m_σ′, g⟩ = 0` on generators of `σ ∩ σ′`.
struct CartierSystem {
    maximal: Vec<usize>,
    n: usize,
    n_primes: usize,
    rows: Vec<IntVec>,
}

impl CartierSystem {
    fn new(fan: &ColouredFan) -> Self {
        let lat = fan.lattice();
        let n = lat.rank();
        let maximal = fan.maximal_indices();
        let primes = prime_divisors(fan);
        let k = maximal.len();
        let width = k * n + primes.len();
        let mut rows = Vec::new();
        for (s, &ci) in maximal.iter().enumerate() {
            let c = &fan.cones()[ci];
            for (j, p) in primes.iter().enumerate() {
                let attached = match p {
                    PrimeDivisor::Ray(u) => c.cone.contains(u),
                    PrimeDivisor::Colour(a) => c.colours.contains(a),
                };
                if attached {
                    let mut row = vec![BigInt::zero(); width];
                    row[s * n..(s + 1) * n].clone_from_slice(p.point(lat));
                    row[k * n + j] = -BigInt::one();
                    rows.push(row);
                }
            }
        }
        for s in 0..k {
            for t in s + 1..k {
                let inter = fan.cones()[maximal[s]]
                    .cone
                    .intersect(&fan.cones()[maximal[t]].cone);
                for g in inter.generators() {
                    let mut row = vec![BigInt::zero(); width];
                    for i in 0..n {
                        row[s * n + i] = g[i].clone();
                        row[t * n + i] = -g[i].clone();
                    }
                    rows.push(row);
                }
            }
        }
        CartierSystem {
            maximal,
            n,
            n_primes: primes.len(),
            rows,
        }
    }

    fn width(&self) -> usize {
        self.maximal.len() * self.n + self.n_primes
    }

    fn matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.width(), &self.rows)
    }

    /// `σ⊥ ∩ N∨` placed in the slot of each maximal cone.
    fn gauge(&self, fan: &ColouredFan) -> Vec<IntVec> {
        let mut out = Vec::new();
        for (s, &ci) in self.maximal.iter().enumerate() {
            for e in fan.cones()[ci].cone.equations() {
                let mut v = vec![BigInt::zero(); self.maximal.len() * self.n];
                v[s * self.n..(s + 1) * self.n].clone_from_slice(e);
                out.push(v);
            }
        }
        out
    }
}

/// Cartier data of `δ`, or `None` when `δ` is not Cartier.
///
/// Each `m_σ` is reduced against the Hermite basis of `σ⊥ ∩ N∨`, which makes
/// the answer unique.
pub fn cartier_data(delta: &BInvariantDivisor, fan: &ColouredFan) -> Option<CartierData> {
    let sys = CartierSystem::new(fan);
    let k = sys.maximal.len();
    let n = sys.n;
    let a = sys.matrix();
    // move δ to the right-hand side
    let coeffs = delta.coefficients();
    let lhs_cols: Vec<IntVec> = (0..k * n).map(|j| a.col(j)).collect();
    let lhs = IntMatrix::from_cols(a.nrows(), &lhs_cols);
    let rhs: IntVec = (0..a.nrows())
        .map(|i| {
            -(0..sys.n_primes)
                .map(|j| &a[(i, k * n + j)] * &coeffs[j])
                .sum::<BigInt>()
        })
        .collect();
    let sol = if a.nrows() == 0 {
        vec![BigInt::zero(); k * n]
    } else {
        solve_integer_affine(&lhs, &rhs)?.particular
    };
    let m = sys
        .maximal
        .iter()
        .enumerate()
        .map(|(s, &ci)| {
            reduce_mod_lattice(&sol[s * n..(s + 1) * n], fan.cones()[ci].cone.equations())
        })
        .collect();
    Some(CartierData {
        cones: sys.maximal,
        m,
    })
}

/// The exact sequence
/// `Span(|Σ|)⊥ → Z(C∖F(Σ)) → Pic → PLF/LF → 0`, recomputed from its pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSequenceReport {
    pub span_perp_rank: usize,
    pub unused_colours: Vec<usize>,
    /// `Z(C∖F) / image(Span⊥ ∩ N∨)`.
    pub colour_part: AbelianGroup,
    /// The sequence is short exact on the left.
    pub left_injective: bool,
    pub ranks_agree: bool,
    /// When `PLF/LF` is free the sequence splits; then `Pic ≅ colour_part ⊕ PLF/LF`.
    pub splits_as_expected: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardReport {
    pub pic: AbelianGroup,
    pub plf_mod_lf: AbelianGroup,
    /// A basis of the lattice of B⁻-invariant Cartier divisors.
    pub cartier_lattice: Vec<IntVec>,
    pub sequence: ExactSequenceReport,
}

fn direct_sum(a: &AbelianGroup, b: &AbelianGroup) -> AbelianGroup {
    let t: Vec<BigInt> = a.torsion.iter().chain(&b.torsion).cloned().collect();
    let tors = cokernel(&IntMatrix::diagonal(&t));
    AbelianGroup {
        free_rank: a.free_rank + b.free_rank,
        torsion: tors.torsion,
    }
}

pub fn picard_group(fan: &ColouredFan) -> PicardReport {
    let lat = fan.lattice();
    let sys = CartierSystem::new(fan);
    let k = sys.maximal.len();
    let n = sys.n;
    let np = sys.n_primes;

    // Cartier divisors: projections of the integer kernel of the full system
    let kernel = if sys.rows.is_empty() {
        (0..sys.width()).map(|i| unit_vec(sys.width(), i)).collect()
    } else {
        integer_kernel(&sys.matrix())
    };
    let cartier: Vec<IntVec> = kernel.iter().map(|v| v[k * n..].to_vec()).collect();
    let cartier_lattice = lattice_basis(np, &cartier);
    let principal: Vec<IntVec> = principal_matrix(fan).col_vecs();
    let pic = lattice_quotient(np, &cartier_lattice, &principal);

    // PLF: compatibility rows only, restricted to the m-variables
    let compat: Vec<IntVec> = sys
        .rows
        .iter()
        .filter(|r| r[k * n..].iter().all(Zero::is_zero))
        .map(|r| r[..k * n].to_vec())
        .collect();
    let plf = if compat.is_empty() {
        (0..k * n).map(|i| unit_vec(k * n, i)).collect()
    } else {
        integer_kernel(&IntMatrix::from_rows(k * n, &compat))
    };
    let mut small = sys.gauge(fan);
    for i in 0..n {
        small.push(
            (0..k * n)
                .map(|j| {
                    if j % n == i {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect(),
        );
    }
    let plf_mod_lf = lattice_quotient(k * n, &plf, &small);

    // the sequence
    let support: Vec<IntVec> = fan
        .cones()
        .iter()
        .flat_map(|c| c.cone.generators())
        .collect();
    let span_perp = if support.is_empty() {
        (0..n).map(|i| unit_vec(n, i)).collect()
    } else {
        integer_kernel(&IntMatrix::from_rows(n, &support))
    };
    let used = fan.colour_set();
    let unused_colours: Vec<usize> = lat
        .colours()
        .iter()
        .map(|c| c.root)
        .filter(|a| !used.contains(a))
        .collect();
    let images: Vec<IntVec> = span_perp
        .iter()
        .map(|m| {
            unused_colours
                .iter()
                .map(|&a| dot(m, lat.colour_point(a).expect("colour")))
                .collect()
        })
        .collect();
    let colour_part = if unused_colours.is_empty() {
        AbelianGroup::free(0)
    } else {
        cokernel(&IntMatrix::from_cols(unused_colours.len(), &images))
    };
    let left_injective = span_perp.is_empty();
    let ranks_agree = pic.free_rank == colour_part.free_rank + plf_mod_lf.free_rank;
    let splits_as_expected = plf_mod_lf
        .torsion
        .is_empty()
        .then(|| direct_sum(&colour_part, &plf_mod_lf) == pic);

    PicardReport {
        pic,
        plf_mod_lf,
        cartier_lattice,
        sequence: ExactSequenceReport {
            span_perp_rank: span_perp.len(),
            unused_colours,
            colour_part,
            left_injective,
            ranks_agree,
            splits_as_expected,
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Positivity {
    pub cartier: bool,
    pub basepoint_free: bool,
    pub ample: bool,
}

pub fn positivity_check(
    delta: &BInvariantDivisor,
    fan: &ColouredFan,
) -> Result<Positivity, DivisorError> {
    if !fan.is_complete() {
        return Err(DivisorError::NotComplete);
    }
    let Some(data) = cartier_data(delta, fan) else {
        return Ok(Positivity {
            cartier: false,
            basepoint_free: false,
            ample: false,
        });
    };
    let cones: Vec<&Cone> = data.cones.iter().map(|&c| &fan.cones()[c].cone).collect();
    let mut convex = true;
    let mut strict = true;
    for (s, sigma) in cones.iter().enumerate() {
        for (t, other) in cones.iter().enumerate() {
            if s == t {
                continue;
            }
            for u in sigma.rays() {
                let here = dot(&data.m[s], u);
                let there = dot(&data.m[t], u);
                if there > here {
                    convex = false;
                }
                if !other.contains(u) && there >= here {
                    strict = false;
                }
            }
        }
    }
    let used = fan.colour_set();
    let lat = fan.lattice();
    for c in lat.colours() {
        if used.contains(&c.root) {
            continue;
        }
        let phi = data.evaluate(fan, &c.point).expect("complete fan");
        let a = delta.colour_coefficient(c.root);
        if phi > a {
            convex = false;
        }
        if phi >= a {
            strict = false;
        }
    }
    Ok(Positivity {
        cartier: true,
        basepoint_free: convex,
        ample: convex && strict,
    })
}

/// `−K_X = Σ D_ρ + Σ b_α D_α`.
///
/// # Panics
/// If some `b_α < 2`, which would mean the root data are inconsistent.
pub fn anticanonical(
    fan: &ColouredFan,
    d: &HorosphericalDatum,
) -> Result<BInvariantDivisor, DivisorError> {
    if d.group() != fan.lattice().group() || d.lattice_rank() != fan.lattice().rank() {
        return Err(DivisorError::LatticeMismatch);
    }
    let mut delta = BInvariantDivisor::zero(fan);
    delta.ray_coeffs.iter_mut().for_each(|c| *c = BigInt::one());
    for (i, &a) in delta.colours.clone().iter().enumerate() {
        let b = d.group().anticanonical_coefficient(d.parabolic(), a);
        assert!(b >= 2, "anticanonical coefficient {b} < 2 for colour {a}");
        delta.colour_coeffs[i] = b.into();
    }
    Ok(delta)
}
