//! Dense univariate polynomials over F_p: gcd, squarefree part, and
//! distinct-degree factorization via repeated Frobenius powering.

use crate::error::{Error, Result};
use crate::poly::coeff::{Coeff, Fp};

/// Coefficients little-endian; always trimmed (no trailing zeros).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly {
    pub coeffs: Vec<u64>,
    pub p: u64,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<u64>, p: u64) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        let mut f = UPoly { coeffs, p };
        f.trim();
        f
    }

    pub fn zero(p: u64) -> Self {
        UPoly { coeffs: vec![], p }
    }

    pub fn one(p: u64) -> Self {
        UPoly { coeffs: vec![1], p }
    }

    pub fn x(p: u64) -> Self {
        UPoly { coeffs: vec![0, 1], p }
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn fp(&self, v: u64) -> Fp {
        Fp { val: v, p: self.p }
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = o.coeffs.get(i).copied().unwrap_or(0);
            out[i] = Coeff::add(&self.fp(a), &self.fp(b)).val;
        }
        UPoly::new(out, self.p)
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = o.coeffs.get(i).copied().unwrap_or(0);
            out[i] = Coeff::sub(&self.fp(a), &self.fp(b)).val;
        }
        UPoly::new(out, self.p)
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero(self.p);
        }
        let p = self.p as u128;
        let mut out = vec![0u128; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                if b != 0 {
                    out[i + j] = (out[i + j] + a as u128 * b as u128) % p;
                }
            }
        }
        UPoly::new(out.iter().map(|&c| c as u64).collect(), self.p)
    }

    /// (quotient, remainder) with respect to a nonzero divisor.
    pub fn div_rem(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return Ok((UPoly::zero(self.p), self.clone()));
        }
        let lead_inv = self.fp(*d.coeffs.last().unwrap()).inv()?;
        let mut quo = vec![0u64; rem.len() - d.coeffs.len() + 1];
        for k in (0..quo.len()).rev() {
            let top = rem[k + d.coeffs.len() - 1];
            if top == 0 {
                continue;
            }
            let q = Coeff::mul(&self.fp(top), &lead_inv);
            quo[k] = q.val;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let s = Coeff::mul(&self.fp(dc), &q);
                rem[k + i] = Coeff::sub(&self.fp(rem[k + i]), &s).val;
            }
        }
        Ok((UPoly::new(quo, self.p), UPoly::new(rem, self.p)))
    }

    pub fn rem(&self, d: &UPoly) -> Result<UPoly> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn monic(&self) -> Result<UPoly> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let inv = self.fp(*self.coeffs.last().unwrap()).inv()?;
        Ok(UPoly::new(
            self.coeffs
                .iter()
                .map(|&c| Coeff::mul(&self.fp(c), &inv).val)
                .collect(),
            self.p,
        ))
    }

    pub fn gcd(&self, o: &UPoly) -> Result<UPoly> {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        let out: Vec<u64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| ((i as u128 % self.p as u128) * c as u128 % self.p as u128) as u64)
            .collect();
        UPoly::new(out, self.p)
    }

    /// self^e mod m by binary powering.
    pub fn pow_mod(&self, mut e: u64, m: &UPoly) -> Result<UPoly> {
        let mut base = self.rem(m)?;
        let mut acc = UPoly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            base = base.mul(&base).rem(m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn evaluate(&self, x: u64) -> u64 {
        let mut acc = self.fp(0);
        let xv = self.fp(x % self.p);
        for &c in self.coeffs.iter().rev() {
            acc = Coeff::add(&Coeff::mul(&acc, &xv), &self.fp(c));
        }
        acc.val
    }
}

/// The squarefree part of a nonzero polynomial over F_p.
pub fn squarefree_part(f: &UPoly) -> Result<UPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.monic()?;
    if f.degree() == 0 {
        return Ok(f);
    }
    let d = f.derivative();
    if d.is_zero() {
        // f = g(x^p) = (p-th root of g, coefficient-wise Frobenius inverse)^p
        let mut root = Vec::with_capacity(f.degree() / f.p as usize + 1);
        for (i, &c) in f.coeffs.iter().enumerate() {
            if i % f.p as usize == 0 {
                root.push(c); // c^(1/p) = c over the prime field
            } else if c != 0 {
                return Err(Error::Invariant("not a p-th power".into()));
            }
        }
        return squarefree_part(&UPoly::new(root, f.p));
    }
    let g = f.gcd(&d)?;
    f.div_rem(&g)?.0.monic()
}

/// Distinct-degree factorization of a squarefree monic polynomial: returns
/// (d, product of all irreducible factors of degree d) with d increasing.
pub fn distinct_degree_factorization(f: &UPoly) -> Result<Vec<(usize, UPoly)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rest = f.monic()?;
    let mut out = Vec::new();
    // h ≡ x^{p^d} mod f, maintained by Frobenius powering
    let mut h = UPoly::x(f.p).rem(&rest)?;
    let mut d = 0usize;
    while rest.degree() > 0 {
        d += 1;
        if 2 * d > rest.degree() {
            // remainder is irreducible
            out.push((rest.degree(), rest.clone()));
            break;
        }
        h = h.pow_mod(f.p, &rest)?;
        let diff = h.sub(&UPoly::x(f.p));
        let g = rest.gcd(&diff)?;
        if g.degree() > 0 {
            out.push((d, g.clone()));
            rest = rest.div_rem(&g)?.0;
            h = h.rem(&rest)?;
        }
    }
    Ok(out)
}

/// Squarefree part followed by DDF; the sorted multiset of factor degrees
/// (with multiplicity = count of irreducible factors of that degree).
pub fn squarefree_and_ddf(f: &UPoly) -> Result<(UPoly, Vec<(usize, UPoly)>)> {
    let sf = squarefree_part(f)?;
    let ddf = distinct_degree_factorization(&sf)?;
    Ok((sf, ddf))
}

/// Flat list of factor degrees: each DDF block of degree d and block-degree
/// d·k contributes k copies of d.
pub fn ddf_degree_multiset(ddf: &[(usize, UPoly)]) -> Vec<usize> {
    let mut out = Vec::new();
    for (d, g) in ddf {
        for _ in 0..g.degree() / d {
            out.push(*d);
        }
    }
    out.sort_unstable();
    out
}

/// Irreducibility test: squarefree and a single DDF block of full degree.
pub fn is_irreducible(f: &UPoly) -> Result<bool> {
    if f.degree() == 0 {
        return Ok(false);
    }
    let sf = squarefree_part(f)?;
    if sf.degree() != f.degree() {
        return Ok(false);
    }
    let ddf = distinct_degree_factorization(&sf)?;
    Ok(ddf.len() == 1 && ddf[0].0 == f.degree())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x2_plus_1_mod_3_is_irreducible() {
        let f = UPoly::new(vec![1, 0, 1], 3);
        assert!(is_irreducible(&f).unwrap());
        let (_, ddf) = squarefree_and_ddf(&f).unwrap();
        assert_eq!(ddf_degree_multiset(&ddf), vec![2]);
    }

    #[test]
    fn x2_minus_1_mod_5_splits() {
        let f = UPoly::new(vec![4, 0, 1], 5); // x² − 1
        let (sf, ddf) = squarefree_and_ddf(&f).unwrap();
        assert_eq!(sf.degree(), 2);
        assert_eq!(ddf_degree_multiset(&ddf), vec![1, 1]);
    }

    #[test]
    fn squarefree_strips_multiplicity() {
        let p = 557;
        let x = UPoly::x(p);
        let f = x.mul(&x).mul(&x.add(&UPoly::one(p))); // x²(x+1)
        let sf = squarefree_part(&f).unwrap();
        assert_eq!(sf.degree(), 2);
        assert_eq!(sf.evaluate(0), 0);
        assert_eq!(sf.evaluate(p - 1), 0);
    }

    #[test]
    fn ddf_degrees_sum_and_product_reassemble() {
        let p = 557;
        // random-ish product of known factors: (x−1)(x−2)(x²+1 if irreducible...)
        let a = UPoly::new(vec![p - 1, 1], p);
        let b = UPoly::new(vec![p - 2, 1], p);
        let c = UPoly::new(vec![3, 1, 1], p); // x²+x+3, check below
        let f = a.mul(&b).mul(&c);
        let (sf, ddf) = squarefree_and_ddf(&f).unwrap();
        let sum: usize = ddf.iter().map(|(_, g)| g.degree()).sum();
        assert_eq!(sum, sf.degree());
        let mut prod = UPoly::one(p);
        for (_, g) in &ddf {
            prod = prod.mul(g);
        }
        assert_eq!(prod, sf);
        if is_irreducible(&c).unwrap() {
            assert_eq!(ddf_degree_multiset(&ddf), vec![1, 1, 2]);
        }
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(squarefree_part(&UPoly::zero(5)).is_err());
    }
}
