//! Exact integer linear algebra: Smith and Hermite normal forms, kernels,
//! saturation and finitely generated abelian groups.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An integer vector.
pub type IntVec = Vec<BigInt>;

/// Converts machine integers into an [`IntVec`].
pub fn ivec(v: &[i64]) -> IntVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Gcd of the entries (zero for the zero vector).
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides out the content. The zero vector is returned unchanged.
pub fn primitive(v: &[BigInt]) -> IntVec {
    let g = content(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn neg_vec(v: &[BigInt]) -> IntVec {
    v.iter().map(|x| -x).collect()
}

pub fn add_vec(a: &[BigInt], b: &[BigInt]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[BigInt], b: &[BigInt]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &BigInt, v: &[BigInt]) -> IntVec {
    v.iter().map(|x| c * x).collect()
}

pub fn unit_vec(n: usize, i: usize) -> IntVec {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers.
    ///
    /// # Panics
    /// If the rows have different lengths.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &x) in r.iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    /// Builds a matrix with the given rows. `cols` is needed when `rows` is empty.
    pub fn from_rows(cols: usize, rows: &[IntVec]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix with the given columns. `rows` is needed when `cols` is empty.
    pub fn from_cols(rows: usize, cols: &[IntVec]) -> Self {
        Self::from_rows(rows, cols).transpose()
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> IntVec {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> IntVec {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<IntVec> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn col_vecs(&self) -> Vec<IntVec> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> IntVec {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| dot(&self.data[i * self.cols..(i + 1) * self.cols], v))
            .collect()
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.cols, other.cols, "dimension mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &IntMatrix) -> Self {
        self.transpose().vstack(&other.transpose()).transpose()
    }

    /// The submatrix on the given rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let rows: Vec<IntVec> = idx.iter().map(|&i| self.row(i)).collect();
        Self::from_rows(self.cols, &rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let h = hermite_normal_form(self).h;
        (0..h.rows).filter(|&i| !is_zero_vec(&h.row(i))).count()
    }

    /// Square matrices only. True iff the determinant is ±1.
    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && hermite_normal_form(self).h == IntMatrix::identity(self.rows)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * c;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += c * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * c;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self.data[i * self.cols + j];
            self.data[i * self.cols + j] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = a * &rhs[(k, j)];
                    out[(i, j)] += v;
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)?;
        f.debug_list()
            .entries(self.row_vecs().iter().map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            }))
            .finish()
    }
}

/// Result of [`smith_normal_form`]: `u * a * v == d`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// The nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.d.rows.min(self.d.cols);
        (0..k)
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = &d[(i, j)];
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return Smith { u, d, v };
            };
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);
            let p = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                let q = -d[(i, t)].div_floor(&p);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = -d[(t, j)].div_floor(&p);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Smith { u, d, v }
}

/// Result of [`hermite_normal_form`]: `u * a == h`.
#[derive(Clone, Debug)]
pub struct Hermite {
    pub h: IntMatrix,
    pub u: IntMatrix,
}

impl Hermite {
    pub fn nonzero_rows(&self) -> Vec<IntVec> {
        self.h
            .row_vecs()
            .into_iter()
            .filter(|r| !is_zero_vec(r))
            .collect()
    }
}

/// Row-style Hermite form: positive pivots, entries above each pivot in
/// `[0, pivot)`, zero rows last.
pub fn hermite_normal_form(a: &IntMatrix) -> Hermite {
    let (m, n) = (a.rows, a.cols);
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let best = (r..m)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&i, &j| h[(i, c)].abs().cmp(&h[(j, c)].abs()));
            let Some(b) = best else { break };
            h.swap_rows(r, b);
            u.swap_rows(r, b);
            let p = h[(r, c)].clone();
            let mut done = true;
            for i in r + 1..m {
                let q = -h[(i, c)].div_floor(&p);
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
                done &= h[(i, c)].is_zero();
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let p = h[(r, c)].clone();
        for i in 0..r {
            let q = -h[(i, c)].div_floor(&p);
            h.add_row_multiple(i, r, &q);
            u.add_row_multiple(i, r, &q);
        }
        r += 1;
    }
    Hermite { h, u }
}

/// Canonical basis (nonzero Hermite rows) of the lattice spanned by `vecs`.
pub fn lattice_basis(dim: usize, vecs: &[IntVec]) -> Vec<IntVec> {
    hermite_normal_form(&IntMatrix::from_rows(dim, vecs)).nonzero_rows()
}

/// True iff both families span the same sublattice of `Z^dim`.
pub fn same_lattice(dim: usize, a: &[IntVec], b: &[IntVec]) -> bool {
    lattice_basis(dim, a) == lattice_basis(dim, b)
}

/// Reduces `v` modulo a lattice given by its canonical Hermite basis.
pub fn reduce_mod_lattice(v: &[BigInt], hnf_rows: &[IntVec]) -> IntVec {
    let mut x = v.to_vec();
    for r in hnf_rows {
        let Some(p) = r.iter().position(|e| !e.is_zero()) else {
            continue;
        };
        let q = x[p].div_floor(&r[p]);
        if !q.is_zero() {
            x = sub_vec(&x, &scale_vec(&q, r));
        }
    }
    x
}

/// A finitely generated abelian group `Z^free_rank ⊕ ⊕ Z/d_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, serde::Serialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[serde(serialize_with = "ser_bigints")]
    pub torsion: Vec<BigInt>,
}

fn ser_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `Z^rows / image(a)`.
pub fn cokernel(a: &IntMatrix) -> AbelianGroup {
    let factors = smith_normal_form(a).invariant_factors();
    AbelianGroup {
        free_rank: a.rows - factors.len(),
        torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Canonical basis of `{x ∈ Z^n : a x = 0}`, as rows.
pub fn integer_kernel(a: &IntMatrix) -> Vec<IntVec> {
    let hnf = hermite_normal_form(&a.transpose());
    let basis: Vec<IntVec> = (0..hnf.h.rows)
        .filter(|&i| is_zero_vec(&hnf.h.row(i)))
        .map(|i| hnf.u.row(i))
        .collect();
    lattice_basis(a.cols, &basis)
}

/// Canonical basis of `{y : yᵀ a = 0}`, as rows.
pub fn integer_left_kernel(a: &IntMatrix) -> Vec<IntVec> {
    integer_kernel(&a.transpose())
}

/// Integer solution of `a x = b`, with a canonical basis of the kernel of `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: IntVec,
    pub kernel: Vec<IntVec>,
}

pub fn solve_integer_affine(a: &IntMatrix, b: &[BigInt]) -> Option<AffineSolution> {
    assert_eq!(a.rows, b.len(), "dimension mismatch");
    let s = smith_normal_form(a);
    let c = s.u.mul_vec(b);
    let r = s.invariant_factors().len();
    let mut y = vec![BigInt::zero(); a.cols];
    for i in 0..a.rows {
        if i < r {
            let (q, rem) = c[i].div_rem(&s.d[(i, i)]);
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !c[i].is_zero() {
            return None;
        }
    }
    Some(AffineSolution {
        particular: s.v.mul_vec(&y),
        kernel: integer_kernel(a),
    })
}

/// Columns generating `Span_Q(b) ∩ Z^n`, in canonical order.
pub fn saturate(b: &IntMatrix) -> IntMatrix {
    let n = b.rows;
    let ann = integer_left_kernel(b);
    let sat = integer_kernel(&IntMatrix::from_rows(n, &ann));
    IntMatrix::from_cols(n, &sat)
}

/// True iff the columns of `b` span a saturated sublattice.
pub fn is_saturated(b: &IntMatrix) -> bool {
    same_lattice(b.rows, &b.col_vecs(), &saturate(b).col_vecs())
}

/// True iff `u * a == b` for some unimodular `u`.
pub fn left_unimodular_equivalent(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.rows == b.rows && a.cols == b.cols && hermite_normal_form(a).h == hermite_normal_form(b).h
}

/// Presentation of `big / small` where both are families of vectors in `Z^dim`
/// with `small ⊆ span_Z(big)`.
///
/// # Panics
/// If some vector of `small` is not in the lattice spanned by `big`.
pub fn lattice_quotient(dim: usize, big: &[IntVec], small: &[IntVec]) -> AbelianGroup {
    let basis = lattice_basis(dim, big);
    let bmat = IntMatrix::from_cols(dim, &basis);
    let coords: Vec<IntVec> = small
        .iter()
        .map(|s| {
            solve_integer_affine(&bmat, s)
                .expect("subgroup not contained in the ambient lattice")
                .particular
        })
        .collect();
    cokernel(&IntMatrix::from_cols(basis.len(), &coords))
}

/// Solves a square nonsingular rational system `a x = b`.
pub fn solve_rational(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = a.rows;
    if a.cols != n || b.len() != n {
        return None;
    }
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..n)
                .map(|j| BigRational::from_integer(a[(i, j)].clone()))
                .collect();
            row.push(BigRational::from_integer(b[i].clone()));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let piv = m[c][c].clone();
        for x in m[c].iter_mut() {
            *x = &*x / &piv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let v = &f * &m[c][j];
                    m[i][j] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut row| row.pop().unwrap()).collect())
}
