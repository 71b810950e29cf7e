//! A small exact linear programming solver (two-phase simplex with Bland's rule).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

impl Constraint {
    pub fn new(coeffs: Vec<BigRational>, relation: Relation, rhs: BigRational) -> Self {
        Constraint {
            coeffs,
            relation,
            rhs,
        }
    }

    /// Integer coefficients.
    pub fn int(coeffs: &[BigInt], relation: Relation, rhs: BigInt) -> Self {
        Constraint {
            coeffs: coeffs
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
            relation,
            rhs: BigRational::from_integer(rhs),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal {
        value: BigRational,
        point: Vec<BigRational>,
    },
    Infeasible,
    Unbounded,
}

/// Maximizes `objective · x` over free variables `x` subject to `constraints`.
pub fn maximize(objective: &[BigRational], constraints: &[Constraint]) -> LpOutcome {
    let n = objective.len();
    // x = p - q with p, q >= 0; one slack per inequality, and an artificial
    // for every row whose slack cannot start in the basis.
    let n_slack = constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
        .count();
    let n_struct = 2 * n + n_slack;
    let flip = |c: &Constraint| match c.relation {
        Relation::Le => c.rhs.is_negative(),
        Relation::Ge => !c.rhs.is_positive(),
        Relation::Eq => c.rhs.is_negative(),
    };
    let needs_artificial = |c: &Constraint| match c.relation {
        Relation::Le => c.rhs.is_negative(),
        Relation::Ge => c.rhs.is_positive(),
        Relation::Eq => true,
    };
    let n_art = constraints.iter().filter(|c| needs_artificial(c)).count();
    let width = n_struct + n_art + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(constraints.len());
    let mut basis = Vec::with_capacity(constraints.len());
    let mut slack = 2 * n;
    let mut art = n_struct;
    for c in constraints {
        assert_eq!(c.coeffs.len(), n, "constraint of wrong width");
        let mut row = vec![BigRational::zero(); width];
        for j in 0..n {
            row[j] = c.coeffs[j].clone();
            row[n + j] = -c.coeffs[j].clone();
        }
        let slack_col = (c.relation != Relation::Eq).then_some(slack);
        match c.relation {
            Relation::Le => row[slack] = BigRational::one(),
            Relation::Ge => row[slack] = -BigRational::one(),
            Relation::Eq => {}
        }
        if slack_col.is_some() {
            slack += 1;
        }
        row[width - 1] = c.rhs.clone();
        if flip(c) {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        if needs_artificial(c) {
            row[art] = BigRational::one();
            basis.push(art);
            art += 1;
        } else {
            basis.push(slack_col.expect("only inequalities start on a slack"));
        }
        t.push(row);
    }

    if n_art > 0 {
        // Phase one: minimize the artificial sum, i.e. maximize its negative.
        let mut phase1 = vec![BigRational::zero(); width - 1];
        for x in &mut phase1[n_struct..] {
            *x = -BigRational::one();
        }
        if run_simplex(&mut t, &mut basis, &phase1, width - 1).is_none() {
            unreachable!("phase one is bounded");
        }
        let infeasible = basis
            .iter()
            .zip(&t)
            .any(|(&b, row)| b >= n_struct && !row[width - 1].is_zero());
        if infeasible {
            return LpOutcome::Infeasible;
        }
        // Drive remaining (zero-valued) artificials out of the basis where possible.
        for i in 0..t.len() {
            if basis[i] >= n_struct {
                if let Some(j) = (0..n_struct).find(|&j| !t[i][j].is_zero()) {
                    pivot(&mut t, &mut basis, i, j);
                }
            }
        }
    }

    let mut phase2 = vec![BigRational::zero(); width - 1];
    for j in 0..n {
        phase2[j] = objective[j].clone();
        phase2[n + j] = -objective[j].clone();
    }
    // artificials are frozen at zero by restricting entering columns
    match run_simplex(&mut t, &mut basis, &phase2, n_struct) {
        None => LpOutcome::Unbounded,
        Some(()) => {
            let mut vals = vec![BigRational::zero(); width - 1];
            for (i, &b) in basis.iter().enumerate() {
                vals[b] = t[i][width - 1].clone();
            }
            let point: Vec<BigRational> = (0..n).map(|j| &vals[j] - &vals[n + j]).collect();
            let value = point.iter().zip(objective).map(|(x, c)| x * c).sum();
            LpOutcome::Optimal { value, point }
        }
    }
}

fn pivot(t: &mut [Vec<BigRational>], basis: &mut [usize], r: usize, c: usize) {
    let p = t[r][c].clone();
    let support: Vec<usize> = (0..t[r].len()).filter(|&j| !t[r][j].is_zero()).collect();
    for &j in &support {
        t[r][j] = &t[r][j] / &p;
    }
    let prow = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for &j in &support {
            row[j] -= &f * &prow[j];
        }
    }
    basis[r] = c;
}

/// Maximizes `obj` with entering columns restricted to `0..allowed`.
/// Returns `None` when unbounded.
fn run_simplex(
    t: &mut [Vec<BigRational>],
    basis: &mut [usize],
    obj: &[BigRational],
    allowed: usize,
) -> Option<()> {
    let rhs = t.first().map_or(0, |r| r.len() - 1);
    loop {
        let costed: Vec<usize> = (0..basis.len())
            .filter(|&i| !obj[basis[i]].is_zero())
            .collect();
        // reduced cost c_j - c_B B^{-1} A_j
        let entering = (0..allowed).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut rc = obj[j].clone();
            for &i in &costed {
                if !t[i][j].is_zero() {
                    rc -= &obj[basis[i]] * &t[i][j];
                }
            }
            rc.is_positive()
        });
        let Some(j) = entering else { return Some(()) };
        let mut best: Option<(usize, BigRational)> = None;
        for i in 0..t.len() {
            if t[i][j].is_positive() {
                let ratio = &t[i][rhs] / &t[i][j];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && basis[i] < basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
        }
        let (r, _) = best?;
        pivot(t, basis, r, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn simple_maximum() {
        // max x + y with x + 2y <= 4, 3x + y <= 6
        let cons = vec![
            Constraint::new(vec![q(1), q(2)], Relation::Le, q(4)),
            Constraint::new(vec![q(3), q(1)], Relation::Le, q(6)),
            Constraint::new(vec![q(1), q(0)], Relation::Ge, q(0)),
            Constraint::new(vec![q(0), q(1)], Relation::Ge, q(0)),
        ];
        match maximize(&[q(1), q(1)], &cons) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, BigRational::new(14.into(), 5.into()));
                assert_eq!(
                    point,
                    vec![
                        BigRational::new(8.into(), 5.into()),
                        BigRational::new(6.into(), 5.into())
                    ]
                );
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let cons = vec![
            Constraint::new(vec![q(1)], Relation::Ge, q(2)),
            Constraint::new(vec![q(1)], Relation::Le, q(1)),
        ];
        assert_eq!(maximize(&[q(1)], &cons), LpOutcome::Infeasible);
        let cons = vec![Constraint::new(vec![q(1), q(-1)], Relation::Eq, q(-3))];
        assert_eq!(maximize(&[q(1), q(0)], &cons), LpOutcome::Unbounded);
    }

    #[test]
    fn free_variables_and_equalities() {
        // max -x subject to x = -5 (x is free)
        let cons = vec![Constraint::new(vec![q(1)], Relation::Eq, q(-5))];
        match maximize(&[q(-1)], &cons) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, q(5));
                assert_eq!(point, vec![q(-5)]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(maximize(&[q(0)], &[]), LpOutcome::Optimal { .. }));
    }
}
