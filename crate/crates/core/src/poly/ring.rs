use super::coeff::Coeff;
use super::mono::{Monomial, Order};
use crate::error::{Error, Result};
use std::cmp::Ordering;

/// The ambient polynomial ring: variable set and term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    pub vars: Vec<String>,
    pub order: Order,
}

impl Ring {
    pub fn new(vars: Vec<String>, order: Order) -> Self {
        Ring { vars, order }
    }

    /// Variables `prefix1..prefixN`.
    pub fn numbered(prefix: &str, n: usize, order: Order) -> Self {
        Ring::new((1..=n).map(|i| format!("{prefix}{i}")).collect(), order)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// A sparse multivariate polynomial; terms sorted descending in the ring order.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<C> {
    pub terms: Vec<(Monomial, C)>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: vec![] }
    }

    pub fn constant(c: C, nvars: usize) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::one(nvars), c)],
            }
        }
    }

    pub fn var(i: usize, one: &C, nvars: usize) -> Self {
        Poly {
            terms: vec![(Monomial::var(nvars, i), one.clone())],
        }
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lt(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.deg).max().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sort, merge equal monomials, drop zeros.
    pub fn normalize(mut terms: Vec<(Monomial, C)>, ring: &Ring) -> Self {
        terms.sort_by(|a, b| ring.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = lc.add(&c);
                }
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn add(&self, other: &Poly<C>, ring: &Ring) -> Poly<C> {
        merge(self, other, ring, false)
    }

    pub fn sub(&self, other: &Poly<C>, ring: &Ring) -> Poly<C> {
        merge(self, other, ring, true)
    }

    pub fn neg(&self) -> Poly<C> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Poly<C> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.mul(c)))
                .collect(),
        }
    }

    /// Multiply by a single term (keeps the order).
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Poly<C> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly<C>, ring: &Ring) -> Poly<C> {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                terms.push((m1.mul(m2), c1.mul(c2)));
            }
        }
        Poly::normalize(terms, ring)
    }

    pub fn pow(&self, e: u32, ring: &Ring) -> Poly<C> {
        let one = self
            .terms
            .first()
            .map(|(_, c)| c.one())
            .expect("pow of zero polynomial needs a context");
        let mut acc = Poly::constant(one, ring.nvars());
        for _ in 0..e {
            acc = acc.mul(self, ring);
        }
        acc
    }

    pub fn evaluate(&self, point: &[C]) -> C {
        let zero = point
            .first()
            .map(|c| c.zero())
            .or_else(|| self.terms.first().map(|(_, c)| c.zero()))
            .expect("cannot infer domain");
        let mut acc = zero.clone();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&point[i]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    pub fn derivative(&self, var: usize, ring: &Ring) -> Poly<C> {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exps[var];
            if e > 0 {
                let mut nm = m.clone();
                nm.exps[var] = e - 1;
                nm.deg -= 1;
                let factor = c.from_i64(e as i64);
                let nc = c.mul(&factor);
                if !nc.is_zero() {
                    terms.push((nm, nc));
                }
            }
        }
        Poly::normalize(terms, ring)
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self, _ring: &Ring) -> Result<Poly<C>> {
        match self.lt() {
            None => Ok(Poly::zero()),
            Some((_, lc)) => {
                let inv = lc.inv()?;
                Ok(self.scale(&inv))
            }
        }
    }

    /// Exact division by `divisor`; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly<C>, ring: &Ring) -> Result<Poly<C>> {
        let (dm, dc) = divisor.lt().ok_or(Error::DivisionByZero)?;
        let dc_inv = dc.inv()?;
        let mut rem = self.clone();
        let mut quo_terms: Vec<(Monomial, C)> = Vec::new();
        while let Some((rm, rc)) = rem.lt() {
            if !dm.divides(rm) {
                return Err(Error::Invariant("inexact polynomial division".into()));
            }
            let qm = dm.quotient_into(rm);
            let qc = rc.mul(&dc_inv);
            rem = rem.sub(&divisor.mul_term(&qm, &qc), ring);
            quo_terms.push((qm, qc));
        }
        Ok(Poly::normalize(quo_terms, ring))
    }

    /// Apply a ring homomorphism given by images of every variable.
    pub fn substitute(&self, images: &[Poly<C>], dst: &Ring) -> Poly<C> {
        let one = match self.terms.first() {
            Some((_, c)) => c.one(),
            None => return Poly::zero(),
        };
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone(), dst.nvars());
            let _ = &one;
            for (i, &e) in m.exps.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&images[i], dst);
                }
            }
            acc = acc.add(&term, dst);
        }
        acc
    }
}

fn merge<C: Coeff>(a: &Poly<C>, b: &Poly<C>, ring: &Ring, subtract: bool) -> Poly<C> {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        let (ma, ca) = &a.terms[i];
        let (mb, cb) = &b.terms[j];
        match ring.order.cmp(ma, mb) {
            Ordering::Greater => {
                out.push((ma.clone(), ca.clone()));
                i += 1;
            }
            Ordering::Less => {
                out.push((mb.clone(), if subtract { cb.neg() } else { cb.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if subtract { ca.sub(cb) } else { ca.add(cb) };
                if !c.is_zero() {
                    out.push((ma.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(
        b.terms[j..]
            .iter()
            .map(|(m, c)| (m.clone(), if subtract { c.neg() } else { c.clone() })),
    );
    Poly { terms: out }
}

/// Apply a variable→polynomial map, erroring when a used variable is unmapped.
pub fn ring_homomorphism_apply<C: Coeff>(
    images: &[Option<Poly<C>>],
    f: &Poly<C>,
    src: &Ring,
    dst: &Ring,
) -> Result<Poly<C>> {
    for (m, _) in &f.terms {
        for (i, &e) in m.exps.iter().enumerate() {
            if e > 0 && images[i].is_none() {
                return Err(Error::MissingVariable(src.vars[i].clone()));
            }
        }
    }
    let full: Vec<Poly<C>> = images
        .iter()
        .map(|o| o.clone().unwrap_or_else(Poly::zero))
        .collect();
    Ok(f.substitute(&full, dst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff::Fp;
    use crate::poly::mono::Order;

    fn ring2() -> Ring {
        Ring::numbered("x", 2, Order::GrevLex)
    }

    fn fp(v: i64) -> Fp {
        Fp::new(v, 557)
    }

    #[test]
    fn basic_arithmetic() {
        let r = ring2();
        let x = Poly::var(0, &fp(1), 2);
        let y = Poly::var(1, &fp(1), 2);
        let f = x.add(&y, &r);
        let f2 = f.mul(&f, &r);
        // (x+y)^2 = x^2 + 2xy + y^2
        assert_eq!(f2.num_terms(), 3);
        assert_eq!(f2.evaluate(&[fp(2), fp(3)]).val, 25);
        let g = f2.sub(&f2, &r);
        assert!(g.is_zero());
    }

    #[test]
    fn derivative_and_division() {
        let r = ring2();
        let x = Poly::var(0, &fp(1), 2);
        let y = Poly::var(1, &fp(1), 2);
        let f = x.mul(&x, &r).mul(&y, &r); // x^2 y
        let d = f.derivative(0, &r); // 2xy
        assert_eq!(d.evaluate(&[fp(5), fp(7)]).val, 70);
        let q = f.div_exact(&x, &r).unwrap();
        assert_eq!(q, x.mul(&y, &r));
        assert!(f.add(&y, &r).div_exact(&x, &r).is_err());
    }

    #[test]
    fn evaluate_at_all_ones_is_coeff_sum() {
        let r = ring2();
        let x = Poly::var(0, &fp(1), 2);
        let y = Poly::var(1, &fp(1), 2);
        let f = x.mul_term(&Monomial::from_exps(&[1, 2]), &fp(3)).add(
            &y.scale(&fp(10)),
            &r,
        );
        let ones = vec![fp(1), fp(1)];
        let sum: i64 = f.terms.iter().map(|(_, c)| c.val as i64).sum();
        assert_eq!(f.evaluate(&ones).val as i64, sum % 557);
    }
}
