//! The twelve G2 cases: per-case equation systems for the basic
//! subvarieties, the total classifier, and sampling-based verification.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chevalley::{g2_constants, StructureTable};
use crate::coadjoint::{
    self, f_form, kirillov_rank, orbit_sample_with_rng, LinearForm, XiMap,
};
use crate::linalg;
use crate::poly::Poly;
use crate::rational::{rational_to_string, Rational};
use crate::report::Report;
use crate::rootsys::{Root, RookPlacement, RootSystem};

/// Variable order for the six lambda coordinates.
pub const VAR_NAMES: [&str; 6] = ["l_a", "l_b", "l_ab", "l_2ab", "l_3ab", "l_3a2b"];

fn r(c: [i64; 2]) -> Root {
    Root::new(vec![c[0], c[1]])
}

/// alpha, beta, a+b, 2a+b, 3a+b, 3a+2b in variable order.
pub fn g2_roots() -> [Root; 6] {
    [r([1, 0]), r([0, 1]), r([1, 1]), r([2, 1]), r([3, 1]), r([3, 2])]
}

/// A row of the twelve-case table.
#[derive(Debug, Clone)]
pub struct G2Case {
    pub index: usize,
    pub placement: RookPlacement,
}

/// The twelve cases in table order: the empty set, the six singletons, and
/// the five non-singular pairs.
pub fn g2_cases(sys: &RootSystem) -> Vec<G2Case> {
    let g = g2_roots();
    let sets: [Vec<Root>; 12] = [
        vec![],
        vec![g[0].clone()],
        vec![g[1].clone()],
        vec![g[2].clone()],
        vec![g[3].clone()],
        vec![g[4].clone()],
        vec![g[5].clone()],
        vec![g[0].clone(), g[1].clone()],
        vec![g[1].clone(), g[3].clone()],
        vec![g[1].clone(), g[4].clone()],
        vec![g[2].clone(), g[4].clone()],
        vec![g[0].clone(), g[5].clone()],
    ];
    sets.into_iter()
        .enumerate()
        .map(|(k, roots)| G2Case {
            index: k + 1,
            placement: RookPlacement::new(sys, roots).expect("valid rook placement"),
        })
        .collect()
}

/// Defining equations of O_{D,xi} in the six lambda variables, with the
/// realized structure constants and the xi values substituted. Each entry is
/// a polynomial required to vanish.
pub fn g2_equations(t: &StructureTable, case: &G2Case, xi: &XiMap) -> Vec<Poly> {
    assert!(
        xi.matches_domain(&case.placement),
        "xi domain must equal the placement"
    );
    let c = g2_constants(t);
    let (c1, c2, c3, c5) = (&c[0], &c[1], &c[2], &c[4]);
    let v = |i: usize| Poly::var(6, i);
    let k = |x: Rational| Poly::constant(6, x);
    let ki = |n: i64| Poly::constant(6, crate::rational::rat_int(n));
    let g = g2_roots();
    let xiv = |i: usize| xi.get(&g[i]).cloned().expect("xi value present");
    // pin(i, value): l_i - value = 0
    let pin = |i: usize, val: Rational| v(i).sub(&k(val));
    let zero_at = |i: usize| v(i);

    match case.index {
        1 => (0..6).map(zero_at).collect(),
        2 => vec![pin(0, xiv(0)), zero_at(1), zero_at(2), zero_at(3), zero_at(4), zero_at(5)],
        3 => vec![zero_at(0), pin(1, xiv(1)), zero_at(2), zero_at(3), zero_at(4), zero_at(5)],
        8 => vec![pin(0, xiv(0)), pin(1, xiv(1)), zero_at(2), zero_at(3), zero_at(4), zero_at(5)],
        4 => vec![pin(2, xiv(2)), zero_at(3), zero_at(4), zero_at(5)],
        5 | 9 => {
            // 2 c2 l_b l_2ab - c1 l_ab^2 = rhs
            let lhs = ki(2)
                .mul(&k(c2.clone()))
                .mul(&v(1))
                .mul(&v(3))
                .sub(&k(c1.clone()).mul(&v(2)).mul(&v(2)));
            let rhs = if case.index == 9 {
                Rational::from_integer(2.into()) * c2 * xiv(1) * xiv(3)
            } else {
                Rational::zero()
            };
            vec![pin(3, xiv(3)), lhs.sub(&k(rhs)), zero_at(4), zero_at(5)]
        }
        6 | 10 => {
            // 6 c3^2 l_b l_3ab^2 - c1 c2 l_2ab^3 = rhs1
            // 2 c3 l_ab l_3ab - c2 l_2ab^2 = 0
            let cubic = ki(6)
                .mul(&k(c3 * c3))
                .mul(&v(1))
                .mul(&v(4))
                .mul(&v(4))
                .sub(&k(c1 * c2).mul(&v(3)).mul(&v(3)).mul(&v(3)));
            let rhs1 = if case.index == 10 {
                Rational::from_integer(6.into()) * c3 * c3 * xiv(1) * xiv(4) * xiv(4)
            } else {
                Rational::zero()
            };
            let quad = ki(2)
                .mul(&k(c3.clone()))
                .mul(&v(2))
                .mul(&v(4))
                .sub(&k(c2.clone()).mul(&v(3)).mul(&v(3)));
            vec![pin(4, xiv(4)), cubic.sub(&k(rhs1)), quad, zero_at(5)]
        }
        11 => {
            // 2 c3 l_ab l_3ab - c2 l_2ab^2 = 2 c3 xi(ab) xi(3ab)
            let quad = ki(2)
                .mul(&k(c3.clone()))
                .mul(&v(2))
                .mul(&v(4))
                .sub(&k(c2.clone()).mul(&v(3)).mul(&v(3)));
            let rhs = Rational::from_integer(2.into()) * c3 * xiv(2) * xiv(4);
            vec![pin(4, xiv(4)), quad.sub(&k(rhs)), zero_at(5)]
        }
        7 | 12 => {
            // 2 c5 l_a l_3a2b - 2 c3 l_ab l_3ab + c2 l_2ab^2 = rhs
            let lhs = ki(2)
                .mul(&k(c5.clone()))
                .mul(&v(0))
                .mul(&v(5))
                .sub(&ki(2).mul(&k(c3.clone())).mul(&v(2)).mul(&v(4)))
                .add(&k(c2.clone()).mul(&v(3)).mul(&v(3)));
            // rhs for the pair case: adding xi(a) e*_a to a top-root orbit
            // sample shifts the invariant by 2 c5 xi(a) xi(3a+2b) exactly
            // (the l_a cross term enters with coefficient 2 c5 l_3a2b).
            let rhs = if case.index == 12 {
                Rational::from_integer(2.into()) * c5 * xiv(0) * xiv(5)
            } else {
                Rational::zero()
            };
            vec![pin(5, xiv(5)), lhs.sub(&k(rhs))]
        }
        _ => unreachable!("case index out of range"),
    }
}

/// Coordinates of a form in the fixed variable order.
pub fn form_coords(f: &LinearForm) -> [Rational; 6] {
    let g = g2_roots();
    std::array::from_fn(|i| f.get(&g[i]))
}

/// Every sample point of the residual check: true iff all equations vanish.
pub fn satisfies_system(eqs: &[Poly], f: &LinearForm) -> bool {
    let pt = form_coords(f);
    eqs.iter().all(|e| e.eval(&pt).is_zero())
}

/// Total classifier: the unique (case, xi) whose system the form satisfies,
/// via the seven-branch decision tree on the top coordinates. Divisions only
/// occur under guards that keep the denominators nonzero.
pub fn classify(t: &StructureTable, sys: &RootSystem, f: &LinearForm) -> (G2Case, XiMap) {
    let c = g2_constants(t);
    let (c1, c2, c3, c5) = (&c[0], &c[1], &c[2], &c[4]);
    let [la, lb, lab, l2, l3, l32] = form_coords(f);
    let g = g2_roots();
    let cases = g2_cases(sys);
    let two = Rational::from_integer(2.into());
    let six = Rational::from_integer(6.into());
    let pick = |k: usize, pairs: Vec<(usize, Rational)>| -> (G2Case, XiMap) {
        let xi = XiMap::new(
            pairs
                .into_iter()
                .map(|(i, v)| (g[i].clone(), v))
                .collect(),
        )
        .expect("nonzero xi by branch guards");
        (cases[k - 1].clone(), xi)
    };

    if !l32.is_zero() {
        let residual = &two * c5 * &la * &l32 - &two * c3 * &lab * &l3 + c2 * &l2 * &l2;
        if residual.is_zero() {
            return pick(7, vec![(5, l32)]);
        }
        let xi_a = residual / (&two * c5 * &l32);
        return pick(12, vec![(0, xi_a), (5, l32)]);
    }
    if !l3.is_zero() {
        let ab_expected = c2 * &l2 * &l2 / (&two * c3 * &l3);
        if lab == ab_expected {
            let b_expected = c1 * c2 * &l2 * &l2 * &l2 / (&six * c3 * c3 * &l3 * &l3);
            if lb == b_expected {
                return pick(6, vec![(4, l3)]);
            }
            let xi_b = lb - b_expected;
            return pick(10, vec![(1, xi_b), (4, l3)]);
        }
        let xi_ab = lab - ab_expected;
        return pick(11, vec![(2, xi_ab), (4, l3)]);
    }
    if !l2.is_zero() {
        let b_expected = c1 * &lab * &lab / (&two * c2 * &l2);
        if lb == b_expected {
            return pick(5, vec![(3, l2)]);
        }
        let xi_b = lb - b_expected;
        return pick(9, vec![(1, xi_b), (3, l2)]);
    }
    if !lab.is_zero() {
        return pick(4, vec![(2, lab)]);
    }
    if !lb.is_zero() {
        if la.is_zero() {
            return pick(3, vec![(1, lb)]);
        }
        return pick(8, vec![(0, la), (1, lb)]);
    }
    if !la.is_zero() {
        return pick(2, vec![(0, la)]);
    }
    (cases[0].clone(), XiMap::empty())
}

/// One sample of the basic subvariety O_{D,xi}: the sum of independent
/// single-root orbit samples over the members of D. For |D| <= 1 this is
/// just an orbit sample.
pub fn basic_variety_sample<R: Rng>(
    t: &StructureTable,
    sys: &RootSystem,
    d: &RookPlacement,
    xi: &XiMap,
    rng: &mut R,
) -> LinearForm {
    let mut total = LinearForm::zero();
    for root in d.roots() {
        let single = RookPlacement::new(sys, vec![root.clone()]).expect("singleton placement");
        let xi1 = XiMap::new(vec![(root.clone(), xi.get(root).cloned().unwrap())])
            .expect("nonzero xi");
        let s = orbit_sample_with_rng(t, &single, &xi1, rng).expect("sample");
        total = total.add(&s);
    }
    total
}

/// Verifies one case: every O_{D,xi} sample satisfies the case's system with
/// zero residual and classifies back to (case, xi).
pub fn verify_case(
    t: &StructureTable,
    sys: &RootSystem,
    case: &G2Case,
    xi: &XiMap,
    samples: usize,
    seed: u64,
) -> Report {
    let mut report = Report::new(format!("g2 case {} orbit-in-variety", case.index));
    let eqs = g2_equations(t, case, xi);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad_eq = 0usize;
    let mut bad_classify = 0usize;
    for _ in 0..samples {
        let lam = basic_variety_sample(t, sys, &case.placement, xi, &mut rng);
        if !satisfies_system(&eqs, &lam) {
            bad_eq += 1;
            if bad_eq == 1 {
                report.fail(
                    "nonzero residual",
                    serde_json::json!({ "witness": lam.to_json() }),
                );
            }
            continue;
        }
        let (got_case, got_xi) = classify(t, sys, &lam);
        if got_case.index != case.index || &got_xi != xi {
            bad_classify += 1;
            if bad_classify == 1 {
                report.fail(
                    "classify mismatch",
                    serde_json::json!({
                        "expected_case": case.index,
                        "got_case": got_case.index,
                        "witness": lam.to_json(),
                    }),
                );
            }
        }
    }
    if bad_eq == 0 {
        report.pass(format!("{samples} samples satisfy the system exactly"));
    }
    if bad_classify == 0 && bad_eq == 0 {
        report.pass(format!("{samples} samples classify back to case {}", case.index));
    }
    report
}

/// Per-case dimension signals: |S(D)|, 6 minus the Jacobian rank of the
/// system at f_{D,xi}, and the Kirillov rank at f_{D,xi}. The unique case
/// where the Kirillov rank drops below |S(D)| is flagged.
pub fn g2_dimension_report(t: &StructureTable, sys: &RootSystem) -> Report {
    let mut report = Report::new("g2 dimension signals");
    for case in g2_cases(sys) {
        let xi = XiMap::ones(&case.placement);
        let f = f_form(&case.placement, &xi).expect("valid form");
        let s_size = sys.singular_set_of(case.placement.roots()).len();
        let eqs = g2_equations(t, &case, &xi);
        let pt = form_coords(&f);
        let jac: Vec<Vec<Rational>> = eqs
            .iter()
            .map(|e| (0..6).map(|i| e.partial(i).eval(&pt)).collect())
            .collect();
        let variety_dim = 6 - linalg::rank(&jac);
        let krank = kirillov_rank(t, &f);
        let details = serde_json::json!({
            "case": case.index,
            "singular_set": s_size,
            "variety_dim": variety_dim,
            "kirillov_rank": krank,
        });
        if krank < s_size {
            report.flag(
                format!("case {}: kirillov rank {} < |S(D)| = {}", case.index, krank, s_size),
                details,
            );
        } else if krank == s_size && variety_dim == s_size {
            report.pass(format!(
                "case {}: |S(D)| = variety dim = kirillov rank = {}",
                case.index, s_size
            ));
        } else {
            report.fail(format!("case {}: inconsistent dimensions", case.index), details);
        }
    }
    report
}

/// A random admissible rescaling of the structure table: new constants stay
/// nonzero and keep c1*c5 = c3*c4 automatically.
pub fn random_rescaled_table<R: Rng>(t: &StructureTable, rng: &mut R) -> StructureTable {
    let mut scale = std::collections::HashMap::new();
    let g = g2_roots();
    for root in &g[2..] {
        let mut v = Rational::zero();
        while v.is_zero() {
            v = coadjoint::random_rational(rng);
        }
        scale.insert(root.clone(), v);
    }
    t.rescale(&scale)
}

/// Degenerate-placement check: the singular pair {a, a+b} collapses onto case 4.
pub fn singular_collapse_report(t: &StructureTable, sys: &RootSystem, samples: usize, seed: u64) -> Report {
    let mut report = Report::new("g2 singular placement collapse");
    let g = g2_roots();
    let d = RookPlacement::new(sys, vec![g[0].clone(), g[2].clone()]).expect("rook placement");
    let xi = XiMap::new(vec![
        (g[0].clone(), crate::rational::rat(3, 2)),
        (g[2].clone(), crate::rational::rat(-5, 3)),
    ])
    .expect("nonzero xi");
    let mut ok = true;
    for lam in coadjoint::orbit_samples(t, &d, &xi, samples, seed).expect("samples") {
        let (case, got_xi) = classify(t, sys, &lam);
        let good = case.index == 4 && got_xi.get(&g[2]) == xi.get(&g[2]);
        if !good {
            ok = false;
            report.fail(
                "collapse mismatch",
                serde_json::json!({
                    "got_case": case.index,
                    "witness": lam.to_json(),
                }),
            );
            break;
        }
    }
    if ok {
        report.pass(format!(
            "{samples} samples of the singular pair classify as case 4 with xi({}) = {}",
            g[2].to_compact(),
            rational_to_string(xi.get(&g[2]).unwrap())
        ));
    }
    report
}
