//! Reduction of the binomial relations onto the 15 chosen coordinates and
//! the graded linear algebra certifying the generator counts of the ideals
//! 𝔞 (cubics) and 𝔟 (cubics + quartics).

use super::BasisSelection;
use crate::error::{Error, Result};
use crate::poly::coeff::Coeff;
use crate::theta::relations::monomial_exponents;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use std::collections::HashMap;

/// Dense indexing of the monomials of each degree in `n` variables, with a
/// multiplication table into the next degree.
pub struct GradedIndex {
    pub n: usize,
    pub monos: Vec<Vec<Vec<u8>>>,
    index: Vec<HashMap<Vec<u8>, usize>>,
    /// mult[d][i][v] = index in degree d+1 of monos[d][i]·x_v.
    mult: Vec<Vec<Vec<u32>>>,
}

impl GradedIndex {
    pub fn new(n: usize, maxdeg: u32) -> Self {
        let monos: Vec<Vec<Vec<u8>>> = (0..=maxdeg).map(|d| monomial_exponents(n, d)).collect();
        let index: Vec<HashMap<Vec<u8>, usize>> = monos
            .iter()
            .map(|ms| ms.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect())
            .collect();
        let mult = (0..maxdeg as usize)
            .map(|d| {
                monos[d]
                    .iter()
                    .map(|m| {
                        (0..n)
                            .map(|v| {
                                let mut up = m.clone();
                                up[v] += 1;
                                index[d + 1][&up] as u32
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        GradedIndex {
            n,
            monos,
            index,
            mult,
        }
    }

    pub fn dim(&self, d: usize) -> usize {
        self.monos[d].len()
    }

    pub fn index_of(&self, d: usize, exps: &[u8]) -> usize {
        self.index[d][exps]
    }
}

pub fn rat_mod_p(x: &BigRational, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let num = x.numer().mod_floor(&pb).to_u64().unwrap();
    let den = x.denom().mod_floor(&pb).to_u64().unwrap();
    assert!(den != 0, "denominator divisible by the working prime");
    num * pow_mod(den, p - 2, p) % p
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// The rewriting images of all Göpel coordinates as dense linear forms mod p.
pub fn basis_images_fp(sel: &BasisSelection, p: u64) -> Vec<Vec<u64>> {
    let n = sel.y15_ring.nvars();
    sel.rewrite
        .iter()
        .map(|poly| {
            let mut row = vec![0u64; n];
            for (m, c) in &poly.terms {
                let v = m.exps.iter().position(|&e| e == 1).expect("linear image");
                row[v] = rat_mod_p(c, p);
            }
            row
        })
        .collect()
}

/// Dense coefficient vector of ∏_{g∈groups} (image of Y_g), degree = |groups|.
pub fn product_vector_fp(
    gi: &GradedIndex,
    images: &[Vec<u64>],
    groups: &[usize],
    p: u64,
) -> Vec<u64> {
    let mut cur = vec![1u64];
    for (d, &g) in groups.iter().enumerate() {
        let img = &images[g];
        let mut next = vec![0u64; gi.dim(d + 1)];
        for (i, &c) in cur.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let row = &gi.mult[d][i];
            for (v, &iv) in img.iter().enumerate() {
                if iv != 0 {
                    let t = &mut next[row[v] as usize];
                    *t = (*t + c * iv) % p;
                }
            }
        }
        cur = next;
    }
    cur
}

/// Dense vector of a reduced binomial: lhs-product minus rhs-product mod p.
pub fn binomial_vector_fp(
    gi: &GradedIndex,
    images: &[Vec<u64>],
    lhs: &[usize],
    rhs: &[usize],
    p: u64,
) -> Vec<u64> {
    let l = product_vector_fp(gi, images, lhs, p);
    let r = product_vector_fp(gi, images, rhs, p);
    l.iter().zip(&r).map(|(&a, &b)| (a + p - b) % p).collect()
}

/// Dense coefficient vector of an exact polynomial, reduced mod p.
pub fn poly_vector_fp(
    gi: &GradedIndex,
    d: usize,
    poly: &crate::poly::ring::Poly<BigRational>,
    p: u64,
) -> Vec<u64> {
    let mut row = vec![0u64; gi.dim(d)];
    for (m, c) in &poly.terms {
        row[gi.index_of(d, &m.exps)] = rat_mod_p(c, p);
    }
    row
}

/// Incrementally maintained reduced row echelon form over F_p, optimized for
/// many insertions into a wide matrix (delayed modular reduction).
pub struct FpRref {
    pub p: u64,
    pub ncols: usize,
    /// (pivot column, normalized row with zeros at all other pivot columns),
    /// sorted by pivot column.
    pub rows: Vec<(usize, Vec<u64>)>,
}

impl FpRref {
    pub fn new(p: u64, ncols: usize) -> Self {
        FpRref {
            p,
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the current pivots in place (entries end up
    /// fully reduced mod p).
    pub fn reduce(&self, row: &mut [u64]) {
        let p = self.p;
        for (pc, prow) in &self.rows {
            let f = row[*pc] % p;
            if f != 0 {
                let f2 = p - f;
                for (x, &pv) in row.iter_mut().zip(prow.iter()) {
                    // pv < p and f2 < p ≤ 2^16, so the accumulator stays far
                    // below u64 overflow across all pivots
                    *x += f2 * pv;
                }
            }
        }
        for x in row.iter_mut() {
            *x %= p;
        }
    }

    /// Insert a (pre-reduced or raw) row; returns its pivot column if it was
    /// independent of the current span.
    pub fn insert(&mut self, mut row: Vec<u64>) -> Option<usize> {
        self.reduce(&mut row);
        let pc = row.iter().position(|&x| x != 0)?;
        let inv = pow_mod(row[pc], self.p - 2, self.p);
        for x in row.iter_mut() {
            *x = *x * inv % self.p;
        }
        // back-eliminate the new pivot column from stored rows to keep RREF
        let p = self.p;
        for (_, prow) in self.rows.iter_mut() {
            let f = prow[pc];
            if f != 0 {
                let f2 = p - f;
                for (x, &nv) in prow.iter_mut().zip(row.iter()) {
                    *x = (*x + f2 * nv) % p;
                }
            }
        }
        let at = self.rows.partition_point(|(c, _)| *c < pc);
        self.rows.insert(at, (pc, row));
        Some(pc)
    }
}

/// Exact incremental RREF over ℚ for moderate sizes.
pub struct QRref {
    pub ncols: usize,
    pub rows: Vec<(usize, Vec<BigRational>)>,
}

impl QRref {
    pub fn new(ncols: usize) -> Self {
        QRref {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, mut row: Vec<BigRational>) -> Option<usize> {
        for (pc, prow) in &self.rows {
            if !Coeff::is_zero(&row[*pc]) {
                let f = row[*pc].clone();
                for (x, pv) in row.iter_mut().zip(prow.iter()) {
                    *x = Coeff::sub(x, &Coeff::mul(&f, pv));
                }
            }
        }
        let pc = row.iter().position(|x| !Coeff::is_zero(x))?;
        let inv = Coeff::inv(&row[pc]).expect("nonzero pivot");
        for x in row.iter_mut() {
            *x = Coeff::mul(x, &inv);
        }
        for (_, prow) in self.rows.iter_mut() {
            if !Coeff::is_zero(&prow[pc]) {
                let f = prow[pc].clone();
                for (x, nv) in prow.iter_mut().zip(row.iter()) {
                    *x = Coeff::sub(x, &Coeff::mul(&f, nv));
                }
            }
        }
        let at = self.rows.partition_point(|(c, _)| *c < pc);
        self.rows.insert(at, (pc, row));
        Some(pc)
    }
}

/// Reduce all cubic binomials to ℚ[Y₁..Y₁₅] and extract a maximal
/// independent subset; returns (generators, indices of the chosen
/// binomials, span dimension).
pub fn independent_cubics(
    sel: &BasisSelection,
    cubics: &[([usize; 3], [usize; 3])],
) -> (Vec<crate::poly::ring::Poly<BigRational>>, Vec<usize>, usize) {
    let gi = GradedIndex::new(sel.y15_ring.nvars(), 3);
    let mut rref = QRref::new(gi.dim(3));
    let mut gens = Vec::new();
    let mut picked = Vec::new();
    for (i, (l, r)) in cubics.iter().enumerate() {
        let poly = super::reduce_binomial(sel, l, r);
        if poly.is_zero() {
            continue;
        }
        let mut row = vec![<BigRational as num_traits::Zero>::zero(); gi.dim(3)];
        for (m, c) in &poly.terms {
            row[gi.index_of(3, &m.exps)] = c.clone();
        }
        if rref.insert(row).is_some() {
            gens.push(poly);
            picked.push(i);
        }
    }
    let dim = rref.rank();
    (gens, picked, dim)
}

/// Result of the degree-4 graded computation over F_p.
pub struct QuarticReduction {
    /// dim of (𝔞)₄ = R₁·𝔞₃.
    pub dim_a4: usize,
    /// dim of (𝔞)₄ + span(reduced quartic binomials).
    pub dim_b4: usize,
    /// Indices (into the quartic list) of binomials chosen as the minimal
    /// quartic generators; length = dim_b4 − dim_a4.
    pub selected: Vec<usize>,
}

/// Certify the number of minimal quartic generators of 𝔟 beyond 𝔞 by
/// graded linear algebra in degree 4 over F_p: since 𝔟₃ = 𝔞₃, that number
/// is dim(𝔟)₄ − dim(𝔞)₄.
pub fn quartic_generators_fp(
    sel: &BasisSelection,
    cubic_gens: &[crate::poly::ring::Poly<BigRational>],
    quartics: &[([usize; 4], [usize; 4])],
    p: u64,
) -> Result<QuarticReduction> {
    let n = sel.y15_ring.nvars();
    let gi = GradedIndex::new(n, 4);
    let images = basis_images_fp(sel, p);
    let mut rref = FpRref::new(p, gi.dim(4));
    // degree-4 slice of 𝔞: every variable times every cubic generator
    for c in cubic_gens {
        let cvec = poly_vector_fp(&gi, 3, c, p);
        for v in 0..n {
            let mut row = vec![0u64; gi.dim(4)];
            for (i, &x) in cvec.iter().enumerate() {
                if x != 0 {
                    row[gi.mult[3][i][v] as usize] = x;
                }
            }
            rref.insert(row);
        }
    }
    let dim_a4 = rref.rank();
    let mut selected = Vec::new();
    for (ci, chunk) in quartics.chunks(2048).enumerate() {
        let base = ci * 2048;
        let reduced: Vec<(usize, Vec<u64>)> = chunk
            .par_iter()
            .enumerate()
            .map(|(i, (l, r))| {
                let mut row = binomial_vector_fp(&gi, &images, l, r, p);
                rref.reduce(&mut row);
                (i, row)
            })
            .filter(|(_, row)| row.iter().any(|&x| x != 0))
            .collect();
        for (i, row) in reduced {
            if rref.insert(row).is_some() {
                selected.push(base + i);
            }
        }
    }
    let dim_b4 = rref.rank();
    if dim_b4 - dim_a4 != selected.len() {
        return Err(Error::Invariant("quartic pivot bookkeeping mismatch".into()));
    }
    Ok(QuarticReduction {
        dim_a4,
        dim_b4,
        selected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_index_consistency() {
        let gi = GradedIndex::new(15, 4);
        assert_eq!(gi.dim(1), 15);
        assert_eq!(gi.dim(2), 120);
        assert_eq!(gi.dim(3), 680);
        assert_eq!(gi.dim(4), 3060);
        // x0·x0^3 lands on x0^4
        let i3 = gi.index_of(3, &[3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        let i4 = gi.index_of(4, &[4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(gi.mult[3][i3][0] as usize, i4);
    }

    #[test]
    fn fp_rref_small() {
        let mut r = FpRref::new(557, 4);
        assert!(r.insert(vec![1, 2, 3, 4]).is_some());
        assert!(r.insert(vec![2, 4, 6, 8]).is_none());
        assert!(r.insert(vec![0, 1, 0, 0]).is_some());
        assert_eq!(r.rank(), 2);
        let mut probe = vec![5, 11, 15, 20]; // 5·row1 + row2
        r.reduce(&mut probe);
        assert!(probe.iter().all(|&x| x == 0));
    }

    #[test]
    fn q_rref_small() {
        let q = |v: i64| BigRational::from_integer(BigInt::from(v));
        let mut r = QRref::new(3);
        assert!(r.insert(vec![q(2), q(0), q(4)]).is_some());
        assert!(r.insert(vec![q(1), q(0), q(2)]).is_none());
        assert!(r.insert(vec![q(0), q(3), q(0)]).is_some());
        assert_eq!(r.rank(), 2);
    }
}
