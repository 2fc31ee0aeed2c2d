//! Minimal multivariate polynomials over exact rationals: just enough for
//! equation systems, residual evaluation and Jacobian ranks.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::{rational_to_string, Rational};

/// Polynomial in a fixed number of variables; monomials are exponent
/// vectors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Poly {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Poly {
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(exp, Rational::from_integer(1.into()));
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: Rational) {
        assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            let key: Vec<Vec<u32>> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&Rational::from_integer((-1).into())))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    m *= &point[i];
                }
            }
            acc += m;
        }
        acc
    }

    /// Partial derivative with respect to variable i.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * Rational::from_integer((e[i] as i64).into()));
        }
        out
    }

    /// Human-readable rendering with caller-supplied variable names.
    pub fn render(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut s = String::new();
            let coeff = rational_to_string(c);
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names[i].to_string()
                    } else {
                        format!("{}^{}", names[i], k)
                    }
                })
                .collect();
            if monomial.is_empty() {
                s.push_str(&coeff);
            } else if coeff == "1" {
                s.push_str(&monomial.join("*"));
            } else if coeff == "-1" {
                s.push('-');
                s.push_str(&monomial.join("*"));
            } else {
                s.push_str(&coeff);
                s.push('*');
                s.push_str(&monomial.join("*"));
            }
            parts.push(s);
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn arithmetic_and_eval() {
        // p = 2 x0 x1 - 3 x2^2
        let x0 = Poly::var(3, 0);
        let x1 = Poly::var(3, 1);
        let x2 = Poly::var(3, 2);
        let p = x0.mul(&x1).scale(&rat_int(2)).sub(&x2.mul(&x2).scale(&rat_int(3)));
        let v = p.eval(&[rat_int(1), rat(1, 2), rat_int(2)]);
        assert_eq!(v, rat_int(-11));
        assert_eq!(p.partial(2).eval(&[rat_int(0), rat_int(0), rat(1, 3)]), rat_int(-2));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn rendering() {
        let p = Poly::var(2, 0)
            .mul(&Poly::var(2, 0))
            .sub(&Poly::constant(2, rat(1, 2)));
        assert_eq!(p.render(&["x", "y"]), "x^2 - 1/2");
    }
}
