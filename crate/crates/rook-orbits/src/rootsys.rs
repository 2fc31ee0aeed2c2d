//! Root systems of types A(n), G2 and F4, and the combinatorics of rook
//! placements inside their positive halves.
//!
//! Roots are integer vectors over the simple roots; all geometry goes through
//! a rational Gram matrix, so inner products are exact even for G2.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::rational::{rat, rat_int, Rational};

/// Which root system to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SystemKind {
    /// A(n) of rank n (the root system of sl(n+1)).
    A(usize),
    G2,
    F4,
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemKind::A(n) => write!(f, "A{n}"),
            SystemKind::G2 => write!(f, "G2"),
            SystemKind::F4 => write!(f, "F4"),
        }
    }
}

/// A root as its coefficient vector over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// Sum of the coefficients.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn negate(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Root) -> Root {
        Root {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Compact wire format, e.g. `"1,2,3,2"`.
    pub fn to_compact(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses the compact format.
    pub fn from_compact(s: &str) -> Result<Root, String> {
        let coeffs: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse()).collect();
        coeffs
            .map(Root::new)
            .map_err(|_| format!("bad root string {s:?}"))
    }
}

/// Canonical order on roots: graded by height, ties broken so that among
/// equal-height roots the one whose first differing coefficient is larger
/// comes first. This puts the simple roots in index order.
pub fn canonical_cmp(a: &Root, b: &Root) -> Ordering {
    match a.height().cmp(&b.height()) {
        Ordering::Equal => {
            for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
                match y.cmp(x) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RootSysError {
    #[error("root has wrong rank: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0} is not a positive root")]
    NotPositive(String),
    #[error("{0}")]
    InvalidPlacement(String),
}

/// A root system with a fixed canonical enumeration of its positive half.
#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: SystemKind,
    rank: usize,
    gram: Vec<Vec<Rational>>,
    positive_roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    /// Builds the positive system by closing the simple roots under root
    /// strings, then fixing the canonical order.
    pub fn build(kind: SystemKind) -> RootSystem {
        let (rank, gram) = match kind {
            SystemKind::A(n) => {
                assert!(n >= 1, "A(n) requires n >= 1");
                let mut g = vec![vec![rat_int(0); n]; n];
                for i in 0..n {
                    g[i][i] = rat_int(2);
                    if i + 1 < n {
                        g[i][i + 1] = rat_int(-1);
                        g[i + 1][i] = rat_int(-1);
                    }
                }
                (n, g)
            }
            SystemKind::G2 => {
                let g = vec![vec![rat_int(1), rat(-3, 2)], vec![rat(-3, 2), rat_int(3)]];
                (2, g)
            }
            SystemKind::F4 => {
                // Inner products of the simple roots in epsilon coordinates:
                // a1 = e2-e3, a2 = e3-e4, a3 = e4, a4 = (e1-e2-e3-e4)/2.
                let g = vec![
                    vec![rat_int(2), rat_int(-1), rat_int(0), rat_int(0)],
                    vec![rat_int(-1), rat_int(2), rat_int(-1), rat_int(0)],
                    vec![rat_int(0), rat_int(-1), rat_int(1), rat(-1, 2)],
                    vec![rat_int(0), rat_int(0), rat(-1, 2), rat_int(1)],
                ];
                (4, g)
            }
        };

        let mut sys = RootSystem {
            kind,
            rank,
            gram,
            positive_roots: Vec::new(),
            index: HashMap::new(),
        };
        sys.positive_roots = sys.close_positive_roots();
        sys.positive_roots.sort_by(canonical_cmp);
        sys.index = sys
            .positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        sys
    }

    /// Root-string closure: beta + alpha_i is a root iff the alpha_i-string
    /// through beta extends upward, i.e. p - <beta, alpha_i^v> > 0 where
    /// p = max{k : beta - k*alpha_i is a root}.
    fn close_positive_roots(&self) -> Vec<Root> {
        let mut roots: Vec<Root> = (0..self.rank).map(|i| Root::simple(self.rank, i)).collect();
        let mut seen: std::collections::HashSet<Root> = roots.iter().cloned().collect();
        let mut frontier = roots.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..self.rank {
                    let alpha = Root::simple(self.rank, i);
                    let mut p = 0i64;
                    loop {
                        let mut down = beta.clone();
                        for _ in 0..=p {
                            down = down.sub(&alpha);
                        }
                        let in_set = seen.contains(&down) || seen.contains(&down.negate());
                        if in_set {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing = self.cartan_pairing_raw(i, beta);
                    if p - pairing > 0 {
                        let up = beta.add(&alpha);
                        if seen.insert(up.clone()) {
                            next.push(up.clone());
                            roots.push(up);
                        }
                    }
                }
            }
            frontier = next;
        }
        roots
    }

    /// 2(alpha_i, v)/(alpha_i, alpha_i) as an integer (exact for roots).
    fn cartan_pairing_raw(&self, i: usize, v: &Root) -> i64 {
        let alpha = Root::simple(self.rank, i);
        let num = self.inner_product(&alpha, v) * rat_int(2);
        let den = self.inner_product(&alpha, &alpha);
        let q = num / den;
        assert!(
            q.denom() == &num_bigint::BigInt::from(1),
            "non-integral Cartan pairing"
        );
        use num_traits::ToPrimitive;
        q.numer().to_i64().expect("pairing fits i64")
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank).map(|i| Root::simple(self.rank, i)).collect()
    }

    /// Position of a positive root in the canonical order.
    pub fn position(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// Bilinear extension of the Gram matrix.
    pub fn inner_product(&self, a: &Root, b: &Root) -> Rational {
        assert_eq!(a.rank(), self.rank, "inner_product: rank mismatch");
        assert_eq!(b.rank(), self.rank, "inner_product: rank mismatch");
        let mut acc = Rational::zero();
        for (i, &ai) in a.coeffs().iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coeffs().iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                acc += &self.gram[i][j] * rat_int(ai) * rat_int(bj);
            }
        }
        acc
    }

    /// 2(alpha_i, gamma)/(alpha_i, alpha_i) for a simple root index i.
    pub fn cartan_pairing(&self, i: usize, gamma: &Root) -> i64 {
        self.cartan_pairing_raw(i, gamma)
    }

    pub fn is_positive_root(&self, v: &Root) -> bool {
        self.index.contains_key(v)
    }

    /// Membership in the full system Phi = Phi+ U -Phi+.
    pub fn is_root(&self, v: &Root) -> bool {
        self.index.contains_key(v) || self.index.contains_key(&v.negate())
    }

    /// S(beta) = { alpha in Phi+ : beta - alpha in Phi+ }.
    pub fn singular_set(&self, beta: &Root) -> Result<Vec<Root>, RootSysError> {
        if !self.is_positive_root(beta) {
            return Err(RootSysError::NotPositive(beta.to_compact()));
        }
        Ok(self
            .positive_roots
            .iter()
            .filter(|alpha| self.is_positive_root(&beta.sub(alpha)))
            .cloned()
            .collect())
    }

    /// Union of S(beta) over beta in the set.
    pub fn singular_set_of(&self, roots: &[Root]) -> Vec<Root> {
        let mut out: Vec<Root> = Vec::new();
        for beta in roots {
            for alpha in self.singular_set(beta).expect("member of Phi+") {
                if !out.contains(&alpha) {
                    out.push(alpha);
                }
            }
        }
        out.sort_by(canonical_cmp);
        out
    }

    /// Partial order: alpha <= beta iff beta - alpha is a (possibly empty)
    /// sum of positive roots.
    pub fn leq(&self, alpha: &Root, beta: &Root) -> bool {
        let diff = beta.sub(alpha);
        if diff.is_zero() {
            return true;
        }
        if diff.coeffs().iter().any(|&c| c < 0) {
            return false;
        }
        !self.sum_decompositions(&diff).is_empty()
    }

    /// Strict version of `leq`.
    pub fn lt(&self, alpha: &Root, beta: &Root) -> bool {
        alpha != beta && self.leq(alpha, beta)
    }

    /// All multisets of positive roots summing to `gamma`, each multiset
    /// listed with non-decreasing canonical position.
    pub fn sum_decompositions(&self, gamma: &Root) -> Vec<Vec<Root>> {
        let mut out = Vec::new();
        if gamma.is_zero() {
            out.push(Vec::new());
            return out;
        }
        if gamma.coeffs().iter().any(|&c| c < 0) {
            return out;
        }
        let mut partial = Vec::new();
        self.decompose_rec(gamma, 0, &mut partial, &mut out);
        out
    }

    fn decompose_rec(
        &self,
        remaining: &Root,
        min_idx: usize,
        partial: &mut Vec<Root>,
        out: &mut Vec<Vec<Root>>,
    ) {
        if remaining.is_zero() {
            out.push(partial.clone());
            return;
        }
        for idx in min_idx..self.positive_roots.len() {
            let r = &self.positive_roots[idx];
            let next = remaining.sub(r);
            if next.coeffs().iter().any(|&c| c < 0) {
                continue;
            }
            partial.push(r.clone());
            self.decompose_rec(&next, idx, partial, out);
            partial.pop();
        }
    }
}

/// Which rook placements an enumeration should keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlacementFilter {
    All,
    NonSingular,
    Orthogonal,
    OrthogonalNonSingular,
}

/// An ordered set of distinct positive roots with pairwise non-positive
/// inner products.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RookPlacement {
    roots: Vec<Root>,
}

impl RookPlacement {
    /// Validates the defining condition and stores the roots in canonical
    /// order.
    pub fn new(sys: &RootSystem, mut roots: Vec<Root>) -> Result<RookPlacement, RootSysError> {
        roots.sort_by(canonical_cmp);
        roots.dedup();
        for r in &roots {
            if !sys.is_positive_root(r) {
                return Err(RootSysError::NotPositive(r.to_compact()));
            }
        }
        for i in 0..roots.len() {
            for j in (i + 1)..roots.len() {
                if sys.inner_product(&roots[i], &roots[j]) > Rational::zero() {
                    return Err(RootSysError::InvalidPlacement(format!(
                        "({}, {}) > 0",
                        roots[i].to_compact(),
                        roots[j].to_compact()
                    )));
                }
            }
        }
        Ok(RookPlacement { roots })
    }

    pub fn empty() -> RookPlacement {
        RookPlacement { roots: Vec::new() }
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.contains(r)
    }

    pub fn is_subset_of(&self, other: &RookPlacement) -> bool {
        self.roots.iter().all(|r| other.contains(r))
    }
}

/// Rook-placement predicate on an arbitrary set of positive roots: all
/// members positive with pairwise non-positive inner products.
pub fn is_rook_placement(sys: &RootSystem, roots: &[Root]) -> bool {
    for r in roots {
        if !sys.is_positive_root(r) {
            return false;
        }
    }
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            if sys.inner_product(&roots[i], &roots[j]) > Rational::zero() {
                return false;
            }
        }
    }
    true
}

/// No difference of two distinct members is a positive root.
pub fn is_nonsingular(sys: &RootSystem, roots: &[Root]) -> bool {
    for i in 0..roots.len() {
        for j in 0..roots.len() {
            if i != j && sys.is_positive_root(&roots[i].sub(&roots[j])) {
                return false;
            }
        }
    }
    true
}

/// All members pairwise orthogonal.
pub fn is_orthogonal(sys: &RootSystem, roots: &[Root]) -> bool {
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            if !sys.inner_product(&roots[i], &roots[j]).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Backtracking enumeration over the canonical order, pruning on the
/// pairwise inner-product condition. Deterministic output.
pub fn enumerate_rook_placements(sys: &RootSystem, filter: PlacementFilter) -> Vec<RookPlacement> {
    let roots = sys.positive_roots();
    let n = roots.len();
    // Pairwise compatibility (optionally sharpened by the filter).
    let mut compat = vec![vec![false; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let ip = sys.inner_product(&roots[i], &roots[j]);
            let ok = match filter {
                PlacementFilter::All | PlacementFilter::NonSingular => ip <= Rational::zero(),
                PlacementFilter::Orthogonal | PlacementFilter::OrthogonalNonSingular => {
                    ip.is_zero()
                }
            };
            let ok = ok
                && match filter {
                    PlacementFilter::All | PlacementFilter::Orthogonal => true,
                    PlacementFilter::NonSingular | PlacementFilter::OrthogonalNonSingular => {
                        !sys.is_positive_root(&roots[i].sub(&roots[j]))
                            && !sys.is_positive_root(&roots[j].sub(&roots[i]))
                    }
                };
            compat[i][j] = ok;
            compat[j][i] = ok;
        }
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn rec(
        n: usize,
        start: usize,
        compat: &[Vec<bool>],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(current.clone());
        for idx in start..n {
            if current.iter().all(|&c| compat[c][idx]) {
                current.push(idx);
                rec(n, idx + 1, compat, current, out);
                current.pop();
            }
        }
    }
    let mut sets = Vec::new();
    rec(n, 0, &compat, &mut current, &mut sets);
    for set in sets {
        let rs: Vec<Root> = set.iter().map(|&i| roots[i].clone()).collect();
        out.push(RookPlacement { roots: rs });
    }
    out
}

/// Placements passing `filter` that are not properly contained in another
/// placement passing `filter`.
pub fn maximal_rook_placements(sys: &RootSystem, filter: PlacementFilter) -> Vec<RookPlacement> {
    let all = enumerate_rook_placements(sys, filter);
    all.iter()
        .filter(|d| {
            !all.iter()
                .any(|e| e.len() > d.len() && d.is_subset_of(e))
        })
        .cloned()
        .collect()
}

/// For type A(n-1) identified with {e_i - e_j}: the pair (i, j) of a root.
/// The coefficient vector of e_i - e_j over the simple roots is the
/// indicator of the interval [i, j).
pub fn type_a_pair(r: &Root) -> Option<(usize, usize)> {
    let c = r.coeffs();
    let i = c.iter().position(|&x| x == 1)?;
    let j = c.iter().rposition(|&x| x == 1)? + 1;
    if c[i..j].iter().all(|&x| x == 1)
        && c[..i].iter().all(|&x| x == 0)
        && c[j..].iter().all(|&x| x == 0)
    {
        Some((i + 1, j + 1))
    } else {
        None
    }
}

/// The root e_i - e_j of A(n-1), 1 <= i < j <= n.
pub fn type_a_root(rank: usize, i: usize, j: usize) -> Root {
    assert!(1 <= i && i < j && j <= rank + 1);
    let mut coeffs = vec![0; rank];
    for k in (i - 1)..(j - 1) {
        coeffs[k] = 1;
    }
    Root::new(coeffs)
}
