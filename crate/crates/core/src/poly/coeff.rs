use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::Arc;

/// Field elements carrying their own ring context (modulus etc.), so that
/// polynomial code can stay generic without threading a ring handle.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn from_i64(&self, v: i64) -> Self;
    /// Rough bit-size, used by coefficient blow-up guards; 0 for fixed-size
    /// domains.
    fn size_hint(&self) -> usize {
        0
    }
}

impl Coeff for BigRational {
    fn zero(&self) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(&self) -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }
    fn from_i64(&self, v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn size_hint(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

/// An element of the prime field F_p for a word-sized prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    pub val: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(val: i64, p: u64) -> Self {
        Fp {
            val: val.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        let mut base = *self;
        let mut acc = Fp { val: 1, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = Coeff::mul(&acc, &base);
            }
            base = Coeff::mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl Coeff for Fp {
    fn zero(&self) -> Self {
        Fp { val: 0, p: self.p }
    }
    fn one(&self) -> Self {
        Fp { val: 1, p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.val == 0
    }
    fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        let mut v = self.val + o.val;
        if v >= self.p {
            v -= self.p;
        }
        Fp { val: v, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        let v = if self.val >= o.val {
            self.val - o.val
        } else {
            self.val + self.p - o.val
        };
        Fp { val: v, p: self.p }
    }
    fn neg(&self) -> Self {
        if self.val == 0 {
            *self
        } else {
            Fp { val: self.p - self.val, p: self.p }
        }
    }
    fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Fp {
            val: ((self.val as u128 * o.val as u128) % self.p as u128) as u64,
            p: self.p,
        }
    }
    fn inv(&self) -> Result<Self> {
        if self.val == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.p - 2))
    }
    fn from_i64(&self, v: i64) -> Self {
        Fp::new(v, self.p)
    }
}

/// The extension field F_{p^k} = F_p[z] / (modulus), modulus monic irreducible.
#[derive(Debug, PartialEq, Eq)]
pub struct FqCtx {
    pub p: u64,
    /// Monic modulus, little-endian, length k+1.
    pub modulus: Vec<u64>,
}

impl FqCtx {
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

/// An element of F_{p^k}: residue polynomial of degree < k, little-endian.
#[derive(Debug, Clone)]
pub struct Fq {
    pub coeffs: Vec<u64>,
    pub ctx: Arc<FqCtx>,
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && Arc::ptr_eq(&self.ctx, &other.ctx)
    }
}

impl Fq {
    pub fn from_coeffs(mut coeffs: Vec<u64>, ctx: Arc<FqCtx>) -> Self {
        let k = ctx.degree();
        coeffs.resize(k, 0);
        Fq { coeffs, ctx }
    }

    pub fn scalar(v: u64, ctx: Arc<FqCtx>) -> Self {
        let mut coeffs = vec![0; ctx.degree()];
        if !coeffs.is_empty() {
            coeffs[0] = v % ctx.p;
        }
        Fq { coeffs, ctx }
    }

    /// The generator z of the extension.
    pub fn gen(ctx: Arc<FqCtx>) -> Self {
        let mut coeffs = vec![0; ctx.degree()];
        if coeffs.len() > 1 {
            coeffs[1] = 1;
        }
        Fq { coeffs, ctx }
    }

    pub fn pow(&self, e: &num_bigint::BigUint) -> Fq {
        let mut acc = self.one();
        let mut base = self.clone();
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = Coeff::mul(&acc, &base);
            }
            base = Coeff::mul(&base, &base);
        }
        acc
    }
}

fn poly_mod_reduce(coeffs: &mut Vec<u64>, ctx: &FqCtx) {
    let p = ctx.p;
    let k = ctx.degree();
    while coeffs.len() > k {
        let top = coeffs.pop().unwrap();
        if top != 0 {
            let d = coeffs.len() - k;
            for i in 0..k {
                let m = ctx.modulus[i];
                if m != 0 {
                    let sub = (top as u128 * m as u128) % p as u128;
                    let cur = coeffs[d + i] as u128;
                    coeffs[d + i] = ((cur + p as u128 - sub) % p as u128) as u64;
                }
            }
        }
    }
    coeffs.resize(k, 0);
}

impl Coeff for Fq {
    fn zero(&self) -> Self {
        Fq {
            coeffs: vec![0; self.ctx.degree()],
            ctx: self.ctx.clone(),
        }
    }
    fn one(&self) -> Self {
        Fq::scalar(1, self.ctx.clone())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
    fn add(&self, o: &Self) -> Self {
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(&a, &b)| {
                let v = a + b;
                if v >= p { v - p } else { v }
            })
            .collect();
        Fq { coeffs, ctx: self.ctx.clone() }
    }
    fn sub(&self, o: &Self) -> Self {
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(&a, &b)| if a >= b { a - b } else { a + p - b })
            .collect();
        Fq { coeffs, ctx: self.ctx.clone() }
    }
    fn neg(&self) -> Self {
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| if a == 0 { 0 } else { p - a })
            .collect();
        Fq { coeffs, ctx: self.ctx.clone() }
    }
    fn mul(&self, o: &Self) -> Self {
        let p = self.ctx.p as u128;
        let k = self.ctx.degree();
        let mut prod = vec![0u128; 2 * k - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                if b != 0 {
                    let cell = &mut prod[i + j];
                    *cell = (*cell + a as u128 * b as u128) % p;
                }
            }
        }
        let mut coeffs: Vec<u64> = prod.iter().map(|&c| c as u64).collect();
        poly_mod_reduce(&mut coeffs, &self.ctx);
        Fq { coeffs, ctx: self.ctx.clone() }
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid on (self, modulus) over F_p
        let p = self.ctx.p;
        let fp = |v: u64| Fp { val: v, p };
        let trim = |v: &mut Vec<u64>| {
            while v.last() == Some(&0) {
                v.pop();
            }
        };
        let mut r0: Vec<u64> = self.ctx.modulus.clone();
        let mut r1: Vec<u64> = self.coeffs.clone();
        trim(&mut r1);
        let mut s0: Vec<u64> = vec![];
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            // divide r0 by r1
            let mut rem = r0.clone();
            let mut quo = vec![0u64; rem.len().saturating_sub(r1.len()) + 1];
            let lead_inv = fp(*r1.last().unwrap()).inv()?;
            while rem.len() >= r1.len() && !rem.is_empty() {
                let d = rem.len() - r1.len();
                let c = Coeff::mul(&fp(*rem.last().unwrap()), &lead_inv);
                if c.val != 0 {
                    quo[d] = c.val;
                    for (i, &m) in r1.iter().enumerate() {
                        let sub = Coeff::mul(&fp(m), &c);
                        rem[d + i] = Coeff::sub(&fp(rem[d + i]), &sub).val;
                    }
                }
                rem.pop();
                trim(&mut rem);
                if rem.len() < r1.len() {
                    break;
                }
            }
            trim(&mut rem);
            // s_new = s0 - quo * s1
            let mut s_new = s0.clone();
            let conv_len = quo.len() + s1.len();
            s_new.resize(s_new.len().max(conv_len.saturating_sub(1)), 0);
            for (i, &q) in quo.iter().enumerate() {
                if q == 0 {
                    continue;
                }
                for (j, &s) in s1.iter().enumerate() {
                    let prod = Coeff::mul(&fp(q), &fp(s));
                    s_new[i + j] = Coeff::sub(&fp(s_new[i + j]), &prod).val;
                }
            }
            trim(&mut s_new);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s_new);
        }
        if r0.len() != 1 {
            return Err(Error::ReducibleModulus);
        }
        let norm = fp(r0[0]).inv()?;
        let coeffs: Vec<u64> = s0.iter().map(|&c| Coeff::mul(&fp(c), &norm).val).collect();
        Ok(Fq::from_coeffs(coeffs, self.ctx.clone()))
    }
    fn from_i64(&self, v: i64) -> Self {
        Fq::scalar(v.rem_euclid(self.ctx.p as i64) as u64, self.ctx.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn fp_arithmetic() {
        let a = Fp::new(300, 557);
        let b = Fp::new(400, 557);
        assert_eq!(Coeff::add(&a, &b).val, 143);
        assert_eq!(Coeff::mul(&a, &Coeff::inv(&a).unwrap()).val, 1);
        assert_eq!(Fp::new(-1, 557).val, 556);
    }

    #[test]
    fn fq_field_axioms_small() {
        // F_9 = F_3[z]/(z^2+1)
        let ctx = Arc::new(FqCtx { p: 3, modulus: vec![1, 0, 1] });
        let z = Fq::gen(ctx.clone());
        let z2 = Coeff::mul(&z, &z);
        assert_eq!(z2, Fq::scalar(2, ctx.clone())); // z² = −1
        for a in 0..3u64 {
            for b in 0..3u64 {
                let e = Fq::from_coeffs(vec![a, b], ctx.clone());
                if !e.is_zero() {
                    let inv = Coeff::inv(&e).unwrap();
                    assert_eq!(Coeff::mul(&e, &inv), Fq::scalar(1, ctx.clone()));
                }
            }
        }
    }

    #[test]
    fn frobenius_has_order_k() {
        // F_{5^3} with modulus z^3 + z + 1 (irreducible over F_5? check by use)
        let ctx = Arc::new(FqCtx { p: 5, modulus: vec![1, 1, 0, 1] });
        let z = Fq::gen(ctx.clone());
        let p = BigUint::from(5u64);
        let mut x = z.clone();
        for _ in 0..3 {
            x = x.pow(&p);
        }
        assert_eq!(x, z);
        let mut y = z.clone();
        y = y.pow(&p);
        assert_ne!(y, z);
    }
}
