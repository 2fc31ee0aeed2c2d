//! Basic subvarieties for the type A nilradical: minors, membership,
//! dimension, and decomposition of an arbitrary form into its unique basic
//! subvariety. Also the concrete matrix model of the coadjoint action, used
//! as an independent oracle against the abstract Chevalley implementation.

use num_traits::{One, Zero};

use crate::chevalley::{AlgebraElement, StructureTable};
use crate::coadjoint::{LinearForm, XiMap};
use crate::linalg;
use crate::rational::{rat, Rational};
use crate::rootsys::{type_a_pair, Root, RookPlacement, RootSystem};

#[derive(Debug, thiserror::Error)]
pub enum AndreError {
    #[error("root {0} is singular for the placement")]
    SingularRoot(String),
    #[error("not a type A root: {0}")]
    NotTypeA(String),
    #[error("decomposition did not terminate (internal bug)")]
    NonTermination,
}

/// n* for sl(n) realized as strictly lower-triangular n x n matrices, with
/// e*_{ij} stored at entry (j, i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixForm {
    n: usize,
    entries: Vec<Vec<Rational>>,
}

impl MatrixForm {
    pub fn zero(n: usize) -> MatrixForm {
        MatrixForm {
            n,
            entries: vec![vec![Rational::zero(); n]; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based access.
    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row - 1][col - 1]
    }

    /// 1-based; only strictly lower entries may be set.
    pub fn set(&mut self, row: usize, col: usize, v: Rational) {
        assert!(col < row, "matrix form must stay strictly lower triangular");
        self.entries[row - 1][col - 1] = v;
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// The abstract form with lambda_{e_i - e_j} read from entry (j, i).
    pub fn to_linear_form(&self, sys: &RootSystem) -> LinearForm {
        let mut f = LinearForm::zero();
        for gamma in sys.positive_roots() {
            let (i, j) = type_a_pair(gamma).expect("type A system");
            f.set(gamma.clone(), self.get(j, i).clone());
        }
        f
    }

    pub fn from_linear_form(sys: &RootSystem, f: &LinearForm) -> MatrixForm {
        let n = sys.rank() + 1;
        let mut m = MatrixForm::zero(n);
        for (gamma, v) in f.iter() {
            let (i, j) = type_a_pair(gamma).expect("type A root");
            m.set(j, i, v.clone());
        }
        m
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(crate::rational::rational_to_string).collect())
            .collect();
        serde_json::json!(rows)
    }
}

/// Row index i of e_i - e_j.
pub fn row_of(alpha: &Root) -> Result<usize, AndreError> {
    type_a_pair(alpha)
        .map(|(i, _)| i)
        .ok_or_else(|| AndreError::NotTypeA(alpha.to_compact()))
}

/// Column index j of e_i - e_j.
pub fn col_of(alpha: &Root) -> Result<usize, AndreError> {
    type_a_pair(alpha)
        .map(|(_, j)| j)
        .ok_or_else(|| AndreError::NotTypeA(alpha.to_compact()))
}

/// R(D) = Phi+ minus the union of the singular sets of the members of D.
pub fn regular_roots(sys: &RootSystem, d: &RookPlacement) -> Vec<Root> {
    let singular = sys.singular_set_of(d.roots());
    sys.positive_roots()
        .iter()
        .filter(|r| !singular.contains(r))
        .cloned()
        .collect()
}

/// D(alpha) = {alpha} union {beta in D : beta >= alpha}.
pub fn d_alpha(sys: &RootSystem, d: &RookPlacement, alpha: &Root) -> Result<Vec<Root>, AndreError> {
    if sys.singular_set_of(d.roots()).contains(alpha) {
        return Err(AndreError::SingularRoot(alpha.to_compact()));
    }
    let mut out = vec![alpha.clone()];
    for beta in d.roots() {
        if beta != alpha && sys.leq(alpha, beta) {
            out.push(beta.clone());
        }
    }
    Ok(out)
}

/// The minor spec of Delta^D_alpha: rows are the sorted column-indices of
/// D(alpha), columns the sorted row-indices. (The roles look crossed, but
/// that is where the entries of a lower-triangular matrix live: e_i - e_j
/// contributes the entry at matrix position (j, i).)
pub fn minor_spec(
    sys: &RootSystem,
    d: &RookPlacement,
    alpha: &Root,
) -> Result<(Vec<usize>, Vec<usize>), AndreError> {
    let da = d_alpha(sys, d, alpha)?;
    let mut rows: Vec<usize> = da.iter().map(|r| col_of(r)).collect::<Result<_, _>>()?;
    let mut cols: Vec<usize> = da.iter().map(|r| row_of(r)).collect::<Result<_, _>>()?;
    rows.sort_unstable();
    cols.sort_unstable();
    Ok((rows, cols))
}

/// Delta^D_alpha(lambda).
pub fn delta_minor(
    sys: &RootSystem,
    d: &RookPlacement,
    alpha: &Root,
    lambda: &MatrixForm,
) -> Result<Rational, AndreError> {
    let (rows, cols) = minor_spec(sys, d, alpha)?;
    let r0: Vec<usize> = rows.iter().map(|&r| r - 1).collect();
    let c0: Vec<usize> = cols.iter().map(|&c| c - 1).collect();
    Ok(linalg::minor(lambda.entries(), &r0, &c0))
}

/// lambda lies in O_{D,xi} iff all D-regular minors agree with those of
/// f_{D,xi}.
pub fn membership(
    sys: &RootSystem,
    d: &RookPlacement,
    xi: &XiMap,
    lambda: &MatrixForm,
) -> Result<bool, AndreError> {
    let f = crate::coadjoint::f_form(d, xi).expect("xi matches placement");
    let fmat = MatrixForm::from_linear_form(sys, &f);
    for alpha in regular_roots(sys, d) {
        if delta_minor(sys, d, &alpha, lambda)? != delta_minor(sys, d, &alpha, &fmat)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Processing order for decompose: e_i - e_j before e_r - e_s when s < j,
/// or s = j and i < r.
fn decompose_order(a: &Root, b: &Root) -> std::cmp::Ordering {
    let (i, j) = type_a_pair(a).expect("type A root");
    let (r, s) = type_a_pair(b).expect("type A root");
    s.cmp(&j).then(i.cmp(&r))
}

/// Finds the unique (D, xi) with lambda in O_{D,xi}, adjoining roots in the
/// fixed total order and solving each new xi value from the deviating minor.
pub fn decompose(
    sys: &RootSystem,
    lambda: &MatrixForm,
) -> Result<(RookPlacement, XiMap), AndreError> {
    let mut order: Vec<Root> = sys.positive_roots().to_vec();
    order.sort_by(decompose_order);
    let mut d_roots: Vec<Root> = Vec::new();
    let mut xi_pairs: Vec<(Root, Rational)> = Vec::new();
    for _ in 0..=sys.num_positive() {
        let d = RookPlacement::new(sys, d_roots.clone())
            .map_err(|_| AndreError::NonTermination)?;
        let xi = XiMap::new(xi_pairs.clone()).map_err(|_| AndreError::NonTermination)?;
        let f = crate::coadjoint::f_form(&d, &xi).expect("xi matches placement");
        let fmat = MatrixForm::from_linear_form(sys, &f);
        let regular = regular_roots(sys, &d);
        let deviating = order.iter().find(|alpha| {
            regular.contains(alpha)
                && delta_minor(sys, &d, alpha, lambda).unwrap()
                    != delta_minor(sys, &d, alpha, &fmat).unwrap()
        });
        let Some(alpha) = deviating else {
            return Ok((d, xi));
        };
        if d_roots.contains(alpha) {
            return Err(AndreError::NonTermination);
        }
        // D(alpha) already contains alpha, so the minor does not change when
        // alpha joins D; its value on f is linear in the new xi(alpha) with
        // coefficient the minor at xi(alpha) = 1.
        let target = delta_minor(sys, &d, alpha, lambda)?;
        let mut d2 = d_roots.clone();
        d2.push(alpha.clone());
        let d2p = RookPlacement::new(sys, d2.clone()).map_err(|_| AndreError::NonTermination)?;
        let mut probe_pairs = xi_pairs.clone();
        probe_pairs.push((alpha.clone(), Rational::one()));
        let probe_xi = XiMap::new(probe_pairs).map_err(|_| AndreError::NonTermination)?;
        let probe = MatrixForm::from_linear_form(
            sys,
            &crate::coadjoint::f_form(&d2p, &probe_xi).expect("domains match"),
        );
        let coeff = delta_minor(sys, &d2p, alpha, &probe)?;
        assert!(!coeff.is_zero(), "unit minor coefficient vanished");
        let value = target / coeff;
        if value.is_zero() {
            return Err(AndreError::NonTermination);
        }
        d_roots = d2;
        xi_pairs.push((alpha.clone(), value));
    }
    Err(AndreError::NonTermination)
}

/// dim O_{D,xi} = |S(D)|.
pub fn basic_dim(sys: &RootSystem, d: &RookPlacement) -> usize {
    sys.singular_set_of(d.roots()).len()
}

/// Jacobian rank at f_{D,xi} of the minor map lambda -> (Delta^D_alpha),
/// alpha over R(D). The level-set dimension |Phi+| - rank must equal |S(D)|.
pub fn minor_jacobian_rank(sys: &RootSystem, d: &RookPlacement, xi: &XiMap) -> usize {
    let f = crate::coadjoint::f_form(d, xi).expect("xi matches placement");
    let fmat = MatrixForm::from_linear_form(sys, &f);
    let regular = regular_roots(sys, d);
    let vars: Vec<(usize, usize)> = sys
        .positive_roots()
        .iter()
        .map(|r| {
            let (i, j) = type_a_pair(r).unwrap();
            (j, i) // matrix position of the variable
        })
        .collect();
    let mut jac: Vec<Vec<Rational>> = Vec::with_capacity(regular.len());
    for alpha in &regular {
        let (rows, cols) = minor_spec(sys, d, alpha).unwrap();
        let mut grad = vec![Rational::zero(); vars.len()];
        for (v_idx, &(r, c)) in vars.iter().enumerate() {
            let (Some(ri), Some(ci)) = (
                rows.iter().position(|&x| x == r),
                cols.iter().position(|&x| x == c),
            ) else {
                continue;
            };
            // Cofactor of the (ri, ci) slot inside the minor grid.
            let sub_rows: Vec<usize> = rows
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != ri)
                .map(|(_, &x)| x - 1)
                .collect();
            let sub_cols: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != ci)
                .map(|(_, &x)| x - 1)
                .collect();
            let cof = linalg::minor(fmat.entries(), &sub_rows, &sub_cols);
            let sign = if (ri + ci) % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            grad[v_idx] = sign * cof;
        }
        jac.push(grad);
    }
    linalg::rank(&jac)
}

/// Matrix model of the group action: g.lambda = (g lambda g^{-1})_low with
/// g = exp(X) for the upper-triangular matrix X of x.
pub fn matrix_action(
    sys: &RootSystem,
    t: &StructureTable,
    x: &AlgebraElement,
    lambda: &MatrixForm,
) -> MatrixForm {
    let n = sys.rank() + 1;
    // X as an upper-triangular matrix.
    let mut xm = vec![vec![Rational::zero(); n]; n];
    for (&idx, c) in &x.coeffs {
        let crate::chevalley::BasisTag::E(gamma) = &t.basis()[idx] else {
            panic!("matrix_action: x not in n");
        };
        let (i, j) = type_a_pair(gamma).expect("type A root");
        xm[i - 1][j - 1] = c.clone();
    }
    let g = exp_nilpotent(&xm);
    let ginv = exp_nilpotent(&neg(&xm));
    let prod = linalg::mat_mul(&linalg::mat_mul(&g, lambda.entries()), &ginv);
    let mut out = MatrixForm::zero(n);
    for r in 2..=n {
        for c in 1..(r) {
            out.set(r, c, prod[r - 1][c - 1].clone());
        }
    }
    out
}

fn neg(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    m.iter()
        .map(|r| r.iter().map(|v| -v.clone()).collect())
        .collect()
}

/// exp of a nilpotent matrix, exact.
fn exp_nilpotent(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut out = linalg::identity(n);
    let mut term = linalg::identity(n);
    let mut k: i64 = 0;
    loop {
        k += 1;
        term = linalg::mat_mul(&term, m);
        for row in term.iter_mut() {
            for v in row.iter_mut() {
                *v = v.clone() * rat(1, k);
            }
        }
        if linalg::is_zero_matrix(&term) {
            return out;
        }
        for i in 0..n {
            for j in 0..n {
                let v = out[i][j].clone() + term[i][j].clone();
                out[i][j] = v;
            }
        }
    }
}

/// Random strictly lower MatrixForm with small rational entries.
pub fn random_matrix_form<R: rand::Rng>(n: usize, rng: &mut R) -> MatrixForm {
    let mut m = MatrixForm::zero(n);
    for r in 2..=n {
        for c in 1..r {
            m.set(r, c, crate::coadjoint::random_rational(rng));
        }
    }
    m
}

/// Builds the n = 10 worked example placement used in tests.
#[cfg(test)]
fn example_placement(sys: &RootSystem) -> RookPlacement {
    use crate::rootsys::type_a_root;
    RookPlacement::new(
        sys,
        vec![
            type_a_root(9, 1, 6),
            type_a_root(9, 3, 10),
            type_a_root(9, 5, 8),
        ],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coadjoint::{coadjoint_act, random_nilpotent};
    use crate::rational::rat_int;
    use crate::rootsys::{type_a_root, SystemKind};
    use num_traits::Signed;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rows_and_columns() {
        let r = type_a_root(9, 5, 8);
        assert_eq!(row_of(&r).unwrap(), 5);
        assert_eq!(col_of(&r).unwrap(), 8);
    }

    #[test]
    fn worked_minor_example() {
        // n = 10, D = {e1-e6, e3-e10, e5-e8}.
        let sys = RootSystem::build(SystemKind::A(9));
        let d = example_placement(&sys);

        let alpha = type_a_root(9, 4, 5);
        let da = d_alpha(&sys, &d, &alpha).unwrap();
        let expect = vec![type_a_root(9, 4, 5), type_a_root(9, 1, 6), type_a_root(9, 3, 10)];
        assert_eq!(da.len(), 3);
        for r in expect {
            assert!(da.contains(&r));
        }
        let (rows, cols) = minor_spec(&sys, &d, &alpha).unwrap();
        assert_eq!(rows, vec![5, 6, 10]);
        assert_eq!(cols, vec![1, 3, 4]);

        let alpha2 = type_a_root(9, 5, 8);
        let (rows, cols) = minor_spec(&sys, &d, &alpha2).unwrap();
        assert_eq!(rows, vec![8, 10]);
        assert_eq!(cols, vec![3, 5]);
    }

    #[test]
    fn minors_on_f_form() {
        let sys = RootSystem::build(SystemKind::A(9));
        let d = example_placement(&sys);
        let xi = XiMap::new(
            d.roots()
                .iter()
                .enumerate()
                .map(|(k, r)| (r.clone(), rat_int(k as i64 + 2)))
                .collect(),
        )
        .unwrap();
        let f = crate::coadjoint::f_form(&d, &xi).unwrap();
        let fmat = MatrixForm::from_linear_form(&sys, &f);
        for alpha in regular_roots(&sys, &d) {
            let v = delta_minor(&sys, &d, &alpha, &fmat).unwrap();
            if d.contains(&alpha) {
                let da = d_alpha(&sys, &d, &alpha).unwrap();
                let prod: Rational = da
                    .iter()
                    .map(|b| xi.get(b).unwrap().clone())
                    .product();
                assert_eq!(v.abs(), prod.abs(), "alpha in D: |minor| = |prod xi|");
            } else {
                assert!(v.is_zero(), "alpha in R(D) \\ D must vanish");
            }
        }
    }

    #[test]
    fn membership_and_perturbation() {
        let sys = RootSystem::build(SystemKind::A(4));
        let t = StructureTable::build(&sys);
        let d = RookPlacement::new(&sys, vec![type_a_root(4, 1, 4), type_a_root(4, 2, 3)]).unwrap();
        let xi = XiMap::new(vec![
            (type_a_root(4, 1, 4), rat(3, 2)),
            (type_a_root(4, 2, 3), rat(-2, 1)),
        ])
        .unwrap();
        let f = crate::coadjoint::f_form(&d, &xi).unwrap();
        let fmat = MatrixForm::from_linear_form(&sys, &f);
        assert!(membership(&sys, &d, &xi, &fmat).unwrap());

        // Orbit samples stay members.
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let x = random_nilpotent(&t, &mut rng);
            let moved = coadjoint_act(&t, &x, &f).unwrap();
            let mmat = MatrixForm::from_linear_form(&sys, &moved);
            assert!(membership(&sys, &d, &xi, &mmat).unwrap());
        }

        // Perturbed xi fails.
        let xi2 = XiMap::new(vec![
            (type_a_root(4, 1, 4), rat(3, 2)),
            (type_a_root(4, 2, 3), rat(5, 1)),
        ])
        .unwrap();
        assert!(!membership(&sys, &d, &xi2, &fmat).unwrap());
    }

    #[test]
    fn oracle_matrix_vs_abstract() {
        for n in 3..=5usize {
            let sys = RootSystem::build(SystemKind::A(n - 1));
            let t = StructureTable::build(&sys);
            let mut rng = ChaCha8Rng::seed_from_u64(100 + n as u64);
            for _ in 0..10 {
                let lam_mat = random_matrix_form(n, &mut rng);
                let lam = lam_mat.to_linear_form(&sys);
                let x = random_nilpotent(&t, &mut rng);
                let via_abstract = coadjoint_act(&t, &x, &lam).unwrap();
                let via_matrix = matrix_action(&sys, &t, &x, &lam_mat);
                assert_eq!(
                    MatrixForm::from_linear_form(&sys, &via_abstract),
                    via_matrix,
                    "n = {n}"
                );
            }
        }
    }

    #[test]
    fn decompose_round_trip() {
        let sys = RootSystem::build(SystemKind::A(3));
        let t = StructureTable::build(&sys);
        let d = RookPlacement::new(&sys, vec![type_a_root(3, 1, 3), type_a_root(3, 2, 4)]).unwrap();
        let xi = XiMap::new(vec![
            (type_a_root(3, 1, 3), rat(1, 2)),
            (type_a_root(3, 2, 4), rat(7, 1)),
        ])
        .unwrap();
        let f = crate::coadjoint::f_form(&d, &xi).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let x = random_nilpotent(&t, &mut rng);
            let moved = coadjoint_act(&t, &x, &f).unwrap();
            let (d2, xi2) = decompose(&sys, &MatrixForm::from_linear_form(&sys, &moved)).unwrap();
            assert_eq!(d2, d);
            assert_eq!(xi2, xi);
        }
    }

    #[test]
    fn decompose_simple_cases() {
        let sys = RootSystem::build(SystemKind::A(3));
        let (d, xi) = decompose(&sys, &MatrixForm::zero(4)).unwrap();
        assert!(d.is_empty());
        assert!(xi.is_empty());

        let mut m = MatrixForm::zero(4);
        m.set(3, 2, rat(5, 3));
        let (d, xi) = decompose(&sys, &m).unwrap();
        assert_eq!(d.roots(), &[type_a_root(3, 2, 3)]);
        assert_eq!(xi.get(&type_a_root(3, 2, 3)), Some(&rat(5, 3)));
    }

    #[test]
    fn decompose_rook_condition_and_idempotence() {
        let sys = RootSystem::build(SystemKind::A(4));
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..25 {
            let m = random_matrix_form(5, &mut rng);
            let (d, xi) = decompose(&sys, &m).unwrap();
            assert!(membership(&sys, &d, &xi, &m).unwrap());
            // no two roots share a row or column index
            for (a, b) in itertools::Itertools::tuple_combinations::<(_, _)>(d.roots().iter()) {
                assert_ne!(row_of(a).unwrap(), row_of(b).unwrap());
                assert_ne!(col_of(a).unwrap(), col_of(b).unwrap());
            }
            // idempotence through f_{D,xi}
            let f = crate::coadjoint::f_form(&d, &xi).unwrap();
            let (d2, xi2) = decompose(&sys, &MatrixForm::from_linear_form(&sys, &f)).unwrap();
            assert_eq!(d2, d);
            assert_eq!(xi2, xi);
        }
    }

    #[test]
    fn dims() {
        let sys = RootSystem::build(SystemKind::A(9));
        let d = example_placement(&sys);
        assert_eq!(basic_dim(&sys, &RookPlacement::empty()), 0);
        let s = basic_dim(&sys, &d);
        assert!(s > 0);
        // highest-root singleton: |S(e_1 - e_n)| = 2(n-2)
        let high = RookPlacement::new(&sys, vec![type_a_root(9, 1, 10)]).unwrap();
        assert_eq!(basic_dim(&sys, &high), 16);
    }

    #[test]
    fn jacobian_rank_matches_dim_formula() {
        let sys = RootSystem::build(SystemKind::A(4));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let m = random_matrix_form(5, &mut rng);
            let (d, xi) = decompose(&sys, &m).unwrap();
            let rank = minor_jacobian_rank(&sys, &d, &xi);
            assert_eq!(
                sys.num_positive() - rank,
                basic_dim(&sys, &d),
                "dim mismatch for D = {:?}",
                d.roots().iter().map(|r| r.to_compact()).collect::<Vec<_>>()
            );
        }
    }
}
