//! Root data of reductive groups: Dynkin types, Cartan pairings, positive
//! roots, flag-variety dimensions and the Dynkin side of the smoothness test.
//!
//! Node numbering follows Bourbaki. Cartan entries are
//! `cartan[i][j] = ⟨α_j, α_i∨⟩`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl DynkinType {
    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n)
            | DynkinType::B(n)
            | DynkinType::C(n)
            | DynkinType::D(n)
            | DynkinType::E(n) => n,
            DynkinType::F4 => 4,
            DynkinType::G2 => 2,
        }
    }

    /// Classical number of positive roots.
    pub fn positive_root_count(self) -> usize {
        match self {
            DynkinType::A(n) => n * (n + 1) / 2,
            DynkinType::B(n) | DynkinType::C(n) => n * n,
            DynkinType::D(n) => n * (n - 1),
            DynkinType::E(6) => 36,
            DynkinType::E(7) => 63,
            DynkinType::E(_) => 120,
            DynkinType::F4 => 24,
            DynkinType::G2 => 6,
        }
    }

    fn check(self) -> Result<Self, RootError> {
        let ok = match self {
            DynkinType::A(n) => n >= 1,
            DynkinType::B(n) | DynkinType::C(n) => n >= 2,
            DynkinType::D(n) => n >= 4,
            DynkinType::E(n) => (6..=8).contains(&n),
            DynkinType::F4 | DynkinType::G2 => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(RootError::BadType(self.to_string()))
        }
    }

    /// Symmetrized Gram matrix `(α_i, α_j)`, short roots of squared length 2.
    fn gram(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self {
            DynkinType::A(_) => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 1..n {
                    link(&mut g, i - 1, i, -1);
                }
            }
            DynkinType::B(_) => {
                for i in 0..n {
                    g[i][i] = 4;
                }
                g[n - 1][n - 1] = 2;
                for i in 1..n {
                    link(&mut g, i - 1, i, -2);
                }
            }
            DynkinType::C(_) => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                g[n - 1][n - 1] = 4;
                for i in 1..n - 1 {
                    link(&mut g, i - 1, i, -1);
                }
                link(&mut g, n - 2, n - 1, -2);
            }
            DynkinType::D(_) => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 1..n - 1 {
                    link(&mut g, i - 1, i, -1);
                }
                link(&mut g, n - 3, n - 1, -1);
            }
            DynkinType::E(_) => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                for i in 3..n {
                    link(&mut g, i - 1, i, -1);
                }
            }
            DynkinType::F4 => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            DynkinType::G2 => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::B(n) => write!(f, "B{n}"),
            DynkinType::C(n) => write!(f, "C{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
            DynkinType::F4 => write!(f, "F4"),
            DynkinType::G2 => write!(f, "G2"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("unknown or invalid Dynkin type `{0}`")]
    BadType(String),
    #[error("unknown simple root label `{0}`")]
    BadLabel(String),
}

/// A simple component: its type and the global indices of its Bourbaki nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub kind: DynkinType,
    pub nodes: Vec<usize>,
}

/// Semisimple simply connected group times a central torus, presented by its
/// simple components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    components: Vec<Component>,
    torus_rank: usize,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
}

/// A root in simple-root coordinates (one entry per global simple root).
pub type Root = Vec<i64>;

impl RootDatum {
    pub fn new(types: &[DynkinType], torus_rank: usize) -> Result<Self, RootError> {
        let mut components = Vec::new();
        let mut next = 0;
        for &t in types {
            let t = t.check()?;
            components.push(Component {
                kind: t,
                nodes: (next..next + t.rank()).collect(),
            });
            next += t.rank();
        }
        let mut gram = vec![vec![0i64; next]; next];
        for c in &components {
            let g = c.kind.gram();
            for (a, &i) in c.nodes.iter().enumerate() {
                for (b, &j) in c.nodes.iter().enumerate() {
                    gram[i][j] = g[a][b];
                }
            }
        }
        Ok(Self::from_parts(components, torus_rank, gram))
    }

    fn from_parts(components: Vec<Component>, torus_rank: usize, gram: Vec<Vec<i64>>) -> Self {
        let s = gram.len();
        let cartan: Vec<Vec<i64>> = (0..s)
            .map(|i| (0..s).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        let positive = reflection_closure(&cartan);
        RootDatum {
            components,
            torus_rank,
            gram,
            cartan,
            positive,
        }
    }

    /// Parses descriptors like `"A4"`, `"B3xG2"`; the empty string or `"T"` is a torus.
    pub fn parse(desc: &str, torus_rank: usize) -> Result<Self, RootError> {
        let desc = desc.trim();
        let mut types = Vec::new();
        if !desc.is_empty() && desc != "T" {
            for part in desc.split(['x', '×']) {
                types.push(parse_type(part.trim())?);
            }
        }
        Self::new(&types, torus_rank)
    }

    /// The root datum of `G1 × G2`: components of `self` first, tori added.
    pub fn product(&self, other: &RootDatum) -> RootDatum {
        let shift = self.semisimple_rank();
        let mut components = self.components.clone();
        components.extend(other.components.iter().map(|c| Component {
            kind: c.kind,
            nodes: c.nodes.iter().map(|n| n + shift).collect(),
        }));
        let s = shift + other.semisimple_rank();
        let mut gram = vec![vec![0i64; s]; s];
        for i in 0..s {
            for j in 0..s {
                gram[i][j] = match (i < shift, j < shift) {
                    (true, true) => self.gram[i][j],
                    (false, false) => other.gram[i - shift][j - shift],
                    _ => 0,
                };
            }
        }
        Self::from_parts(components, self.torus_rank + other.torus_rank, gram)
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    /// Number of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        self.gram.len()
    }

    /// Rank of the character lattice of the maximal torus.
    pub fn rank(&self) -> usize {
        self.semisimple_rank() + self.torus_rank
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn squared_length(&self, i: usize) -> i64 {
        self.gram[i][i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    pub fn descriptor(&self) -> String {
        self.components
            .iter()
            .map(|c| c.kind.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    /// Positive roots in simple-root coordinates, by height and then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// `⟨γ, α_i∨⟩`.
    pub fn pairing(&self, gamma: &[i64], i: usize) -> i64 {
        gamma
            .iter()
            .enumerate()
            .map(|(j, &c)| c * self.cartan[i][j])
            .sum()
    }

    /// `dim G/P_I`: the number of positive roots not supported on `I`.
    pub fn flag_dimension(&self, parabolic: &BTreeSet<usize>) -> usize {
        self.positive
            .iter()
            .filter(|g| {
                g.iter()
                    .enumerate()
                    .any(|(j, &c)| c != 0 && !parabolic.contains(&j))
            })
            .count()
    }

    /// `Σ_{γ ∈ R⁺ ∖ R_I} ⟨γ, α∨⟩`.
    pub fn anticanonical_coefficient(&self, parabolic: &BTreeSet<usize>, alpha: usize) -> i64 {
        self.positive
            .iter()
            .filter(|g| {
                g.iter()
                    .enumerate()
                    .any(|(j, &c)| c != 0 && !parabolic.contains(&j))
            })
            .map(|g| self.pairing(g, alpha))
            .sum()
    }

    /// Label of a simple root: `a3`, or `2.a1` when there are several components.
    pub fn label(&self, i: usize) -> String {
        for (ci, c) in self.components.iter().enumerate() {
            if let Some(k) = c.nodes.iter().position(|&n| n == i) {
                return if self.components.len() > 1 {
                    format!("{}.a{}", ci + 1, k + 1)
                } else {
                    format!("a{}", k + 1)
                };
            }
        }
        format!("?{i}")
    }

    pub fn parse_label(&self, label: &str) -> Result<usize, RootError> {
        let bad = || RootError::BadLabel(label.to_string());
        let (comp, rest) = match label.split_once('.') {
            Some((c, r)) => (c.parse::<usize>().map_err(|_| bad())?, r),
            None if self.components.len() <= 1 => (1, label),
            None => return Err(bad()),
        };
        let rest = rest
            .strip_prefix('a')
            .or_else(|| rest.strip_prefix('α'))
            .ok_or_else(bad)?;
        let k: usize = rest.parse().map_err(|_| bad())?;
        let c = self.components.get(comp.wrapping_sub(1)).ok_or_else(bad)?;
        c.nodes.get(k.wrapping_sub(1)).copied().ok_or_else(bad)
    }

    /// The root datum of the Levi subgroup with simple roots `nodes` and the
    /// given central torus rank. Returns it with the list of original indices
    /// of its simple roots, in its own numbering.
    pub fn levi(&self, nodes: &BTreeSet<usize>, torus_rank: usize) -> (RootDatum, Vec<usize>) {
        let mut remaining: BTreeSet<usize> = nodes.clone();
        let mut parts: Vec<(DynkinType, Vec<usize>)> = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let comp = self.component_of(start, &remaining);
            for x in &comp {
                remaining.remove(x);
            }
            parts.push(self.recognize(&comp));
        }
        let mut components = Vec::new();
        let mut order = Vec::new();
        for (kind, ordered) in parts {
            let base = order.len();
            components.push(Component {
                kind,
                nodes: (base..base + ordered.len()).collect(),
            });
            order.extend(ordered);
        }
        let gram = order
            .iter()
            .map(|&i| order.iter().map(|&j| self.gram[i][j]).collect())
            .collect();
        (Self::from_parts(components, torus_rank, gram), order)
    }

    /// Connected component of `start` in the Dynkin subgraph on `within`.
    pub fn component_of(&self, start: usize, within: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in within {
                if self.adjacent(x, y) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Connected components of the Dynkin subgraph on `set`.
    pub fn components_of(&self, set: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
        let mut remaining = set.clone();
        let mut out = Vec::new();
        while let Some(&s) = remaining.iter().next() {
            let c = self.component_of(s, &remaining);
            for x in &c {
                remaining.remove(x);
            }
            out.push(c);
        }
        out
    }

    fn bond(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j] * self.cartan[j][i]
    }

    /// Identifies the type of a connected node set and orders it in Bourbaki numbering.
    fn recognize(&self, comp: &BTreeSet<usize>) -> (DynkinType, Vec<usize>) {
        let nodes: Vec<usize> = comp.iter().copied().collect();
        let n = nodes.len();
        if n == 1 {
            return (DynkinType::A(1), nodes);
        }
        let nbrs = |x: usize| -> Vec<usize> {
            nodes
                .iter()
                .copied()
                .filter(|&y| self.adjacent(x, y))
                .collect()
        };
        if let Some(&branch) = nodes.iter().find(|&&x| nbrs(x).len() == 3) {
            let mut arms: Vec<Vec<usize>> = nbrs(branch)
                .into_iter()
                .map(|first| {
                    let mut arm = vec![first];
                    let mut prev = branch;
                    let mut cur = first;
                    while let Some(next) = nbrs(cur).into_iter().find(|&y| y != prev) {
                        arm.push(next);
                        prev = cur;
                        cur = next;
                    }
                    arm
                })
                .collect();
            arms.sort_by_key(|a| (a.len(), a[0]));
            let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
            return match lens.as_slice() {
                [1, 1, 1] => {
                    let order = vec![arms[0][0], branch, arms[1][0], arms[2][0]];
                    (DynkinType::D(n), order)
                }
                [1, 1, _] => {
                    let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
                    order.push(branch);
                    order.push(arms[0][0]);
                    order.push(arms[1][0]);
                    (DynkinType::D(n), order)
                }
                [1, 2, _] => {
                    let mut order = vec![arms[1][1], arms[0][0], arms[1][0], branch];
                    order.extend(arms[2].iter().copied());
                    (DynkinType::E(n), order)
                }
                _ => unreachable!("not a Dynkin diagram"),
            };
        }
        let ends: Vec<usize> = nodes
            .iter()
            .copied()
            .filter(|&x| nbrs(x).len() == 1)
            .collect();
        let walk = |start: usize| -> Vec<usize> {
            let mut path = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while let Some(next) = nbrs(cur).into_iter().find(|&y| y != prev) {
                path.push(next);
                prev = cur;
                cur = next;
            }
            path
        };
        let path = walk(ends[0]);
        let bonds: Vec<i64> = path.windows(2).map(|w| self.bond(w[0], w[1])).collect();
        if bonds.iter().all(|&b| b == 1) {
            return (DynkinType::A(n), path);
        }
        if bonds.contains(&3) {
            let order = if self.gram[path[0]][path[0]] < self.gram[path[1]][path[1]] {
                path
            } else {
                vec![path[1], path[0]]
            };
            return (DynkinType::G2, order);
        }
        let k = bonds.iter().position(|&b| b == 2).expect("a double bond");
        if n == 4 && k == 1 {
            let order = if self.gram[path[0]][path[0]] > self.gram[path[3]][path[3]] {
                path
            } else {
                path.into_iter().rev().collect()
            };
            return (DynkinType::F4, order);
        }
        let order: Vec<usize> = if k == bonds.len() - 1 {
            path
        } else {
            path.into_iter().rev().collect()
        };
        let last = order[n - 1];
        let prev = order[n - 2];
        if self.gram[last][last] < self.gram[prev][prev] {
            (DynkinType::B(n), order)
        } else {
            (DynkinType::C(n), order)
        }
    }
}

fn parse_type(s: &str) -> Result<DynkinType, RootError> {
    let bad = || RootError::BadType(s.to_string());
    let mut chars = s.chars();
    let letter = chars.next().ok_or_else(bad)?;
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    let t = match letter.to_ascii_uppercase() {
        'A' => DynkinType::A(n),
        'B' => DynkinType::B(n),
        'C' => DynkinType::C(n),
        'D' => DynkinType::D(n),
        'E' => DynkinType::E(n),
        'F' if n == 4 => DynkinType::F4,
        'G' if n == 2 => DynkinType::G2,
        _ => return Err(bad()),
    };
    t.check()
}

fn reflection_closure(cartan: &[Vec<i64>]) -> Vec<Root> {
    let s = cartan.len();
    let mut found: BTreeSet<Root> = BTreeSet::new();
    let mut stack: Vec<Root> = (0..s)
        .map(|i| (0..s).map(|j| i64::from(i == j)).collect())
        .collect();
    while let Some(r) = stack.pop() {
        if !found.insert(r.clone()) {
            continue;
        }
        for i in 0..s {
            let p: i64 = r.iter().enumerate().map(|(j, &c)| c * cartan[i][j]).sum();
            let mut t = r.clone();
            t[i] -= p;
            if t.iter().all(|&c| c >= 0) && t.iter().any(|&c| c > 0) && !found.contains(&t) {
                stack.push(t);
            }
        }
    }
    let mut roots: Vec<Root> = found.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}

/// Which clause of the smoothness test failed, with the offending simple roots.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum SmoothnessViolation {
    /// Clause (a): two colours are joined by an edge.
    AdjacentColours { first: usize, second: usize },
    /// Clause (a): two colours touch the same component of `I`.
    SharedComponent { first: usize, second: usize },
    /// Clause (b): a colour touches more than one component of `I`.
    SeveralComponents { colour: usize, count: usize },
    /// Clause (c): `I_α ∪ {α}` is not `A_l` or `C_l` with `α` first.
    WrongChain { colour: usize },
}

impl SmoothnessViolation {
    pub fn describe(&self, d: &RootDatum) -> String {
        match self {
            SmoothnessViolation::AdjacentColours { first, second } => {
                format!("{} and {} are adjacent", d.label(*first), d.label(*second))
            }
            SmoothnessViolation::SharedComponent { first, second } => format!(
                "{} and {} are connected to a common component",
                d.label(*first),
                d.label(*second)
            ),
            SmoothnessViolation::SeveralComponents { colour, count } => {
                let n = match count {
                    2 => "two".to_string(),
                    3 => "three".to_string(),
                    k => k.to_string(),
                };
                format!("{} is connected to {} components", d.label(*colour), n)
            }
            SmoothnessViolation::WrongChain { colour } => {
                format!(
                    "the chain through {} is not of type A or C with it first",
                    d.label(*colour)
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SmoothnessCheck {
    pub smooth: bool,
    pub violations: Vec<SmoothnessViolation>,
}

/// Dynkin-diagram conditions on a set of colours `colours ⊆ S ∖ I` for
/// smoothness of a regular coloured cone.
pub fn colour_smoothness_check(
    d: &RootDatum,
    parabolic: &BTreeSet<usize>,
    colours: &BTreeSet<usize>,
) -> SmoothnessCheck {
    let comps = d.components_of(parabolic);
    let touching = |a: usize| -> Vec<usize> {
        (0..comps.len())
            .filter(|&k| comps[k].iter().any(|&x| d.adjacent(a, x)))
            .collect()
    };
    let mut violations = Vec::new();
    let cs: Vec<usize> = colours.iter().copied().collect();
    for (i, &a) in cs.iter().enumerate() {
        for &b in &cs[i + 1..] {
            if d.adjacent(a, b) {
                violations.push(SmoothnessViolation::AdjacentColours {
                    first: a,
                    second: b,
                });
            }
            let ta = touching(a);
            if touching(b).iter().any(|k| ta.contains(k)) {
                violations.push(SmoothnessViolation::SharedComponent {
                    first: a,
                    second: b,
                });
            }
        }
    }
    for &a in &cs {
        let t = touching(a);
        if t.len() > 1 {
            violations.push(SmoothnessViolation::SeveralComponents {
                colour: a,
                count: t.len(),
            });
        } else if let Some(&k) = t.first() {
            if !is_a_or_c_chain(d, a, &comps[k]) {
                violations.push(SmoothnessViolation::WrongChain { colour: a });
            }
        }
    }
    SmoothnessCheck {
        smooth: violations.is_empty(),
        violations,
    }
}

fn is_a_or_c_chain(d: &RootDatum, alpha: usize, comp: &BTreeSet<usize>) -> bool {
    let mut nodes = comp.clone();
    nodes.insert(alpha);
    let nbrs = |x: usize| -> Vec<usize> {
        nodes
            .iter()
            .copied()
            .filter(|&y| d.adjacent(x, y))
            .collect()
    };
    if nbrs(alpha).len() != 1 || nodes.iter().any(|&x| nbrs(x).len() > 2) {
        return false;
    }
    let mut path = vec![alpha];
    let mut prev = usize::MAX;
    let mut cur = alpha;
    while let Some(next) = nbrs(cur).into_iter().find(|&y| y != prev) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    if path.len() != nodes.len() {
        return false;
    }
    let bonds: Vec<i64> = path.windows(2).map(|w| d.bond(w[0], w[1])).collect();
    let l = bonds.len();
    if bonds.iter().all(|&b| b == 1) {
        return true;
    }
    let last = path[path.len() - 1];
    let before = path[path.len() - 2];
    bonds[..l - 1].iter().all(|&b| b == 1)
        && bonds[l - 1] == 2
        && d.gram[last][last] > d.gram[before][before]
}
