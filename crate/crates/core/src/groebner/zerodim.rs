//! Zero-dimensional ideals: standard-monomial bases of the quotient
//! algebra, minimal polynomials of linear forms (eliminants), shape-position
//! coordinate recovery, and Jacobian regularity at points.

use super::GroebnerBasis;
use crate::error::{Error, Result};
use crate::poly::coeff::Coeff;
use crate::poly::mono::Monomial;
use crate::poly::ring::{Poly, Ring};
use std::collections::{HashMap, VecDeque};

/// The finite-dimensional algebra R/I for a zero-dimensional I, with
/// multiplication matrices per variable.
pub struct QuotientAlgebra<C> {
    pub ring: Ring,
    pub basis: Vec<Monomial>,
    pub index: HashMap<Monomial, usize>,
    /// mul[v] is the dim×dim matrix of multiplication by x_v, column-major:
    /// mul[v][j] = coordinates of x_v·basis[j].
    pub mul: Vec<Vec<Vec<C>>>,
    one: C,
}

/// Standard monomials (not divisible by any leading term), BFS from 1;
/// errors out once `cap` is exceeded.
pub fn standard_monomials<C: Coeff>(
    gb: &GroebnerBasis<C>,
    ring: &Ring,
    cap: usize,
) -> Result<Vec<Monomial>> {
    let lead = gb.leading_monomials();
    let n = ring.nvars();
    let mut seen: HashMap<Monomial, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    let one = Monomial::one(n);
    if lead.iter().any(|l| l.divides(&one)) {
        return Ok(vec![]);
    }
    seen.insert(one.clone(), ());
    queue.push_back(one);
    let mut out = Vec::new();
    while let Some(m) = queue.pop_front() {
        out.push(m.clone());
        if out.len() > cap {
            return Err(Error::NotZeroDimensional);
        }
        for v in 0..n {
            let up = m.mul(&Monomial::var(n, v));
            if !seen.contains_key(&up) && !lead.iter().any(|l| l.divides(&up)) {
                seen.insert(up.clone(), ());
                queue.push_back(up);
            }
        }
    }
    out.sort_by(|a, b| ring.order.cmp(a, b));
    Ok(out)
}

impl<C: Coeff> QuotientAlgebra<C> {
    pub fn new(gb: &GroebnerBasis<C>, ring: &Ring, cap: usize) -> Result<Self> {
        let one = gb
            .polys
            .first()
            .and_then(|g| g.lt())
            .map(|(_, c)| c.one())
            .ok_or_else(|| Error::Invariant("empty basis has no coefficient context".into()))?;
        let basis = standard_monomials(gb, ring, cap)?;
        let dim = basis.len();
        let index: HashMap<Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let n = ring.nvars();
        let zero = one.zero();
        let mut mul = vec![vec![vec![zero.clone(); dim]; dim]; n];
        for (j, m) in basis.iter().enumerate() {
            for v in 0..n {
                let up = m.mul(&Monomial::var(n, v));
                if let Some(&i) = index.get(&up) {
                    mul[v][j][i] = one.clone();
                } else {
                    let nf = super::normal_form(
                        &Poly::monomial(up, one.clone()),
                        &gb.polys,
                        ring,
                    );
                    for (tm, tc) in &nf.terms {
                        let i = *index
                            .get(tm)
                            .ok_or_else(|| Error::Invariant("normal form left the basis".into()))?;
                        mul[v][j][i] = tc.clone();
                    }
                }
            }
        }
        Ok(QuotientAlgebra {
            ring: ring.clone(),
            basis,
            index,
            mul,
            one,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the residue class of a polynomial (must already be in
    /// normal form or reduced here by the caller).
    pub fn vector_of(&self, f: &Poly<C>) -> Result<Vec<C>> {
        let mut v = vec![self.one.zero(); self.dim()];
        for (m, c) in &f.terms {
            let i = *self
                .index
                .get(m)
                .ok_or_else(|| Error::Invariant("polynomial is not in normal form".into()))?;
            v[i] = v[i].add(c);
        }
        Ok(v)
    }

    /// Apply multiplication by the linear form Σ coeffs[v]·x_v.
    pub fn apply_linear(&self, coeffs: &[C], v: &[C]) -> Vec<C> {
        let dim = self.dim();
        let mut out = vec![self.one.zero(); dim];
        for (var, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mat = &self.mul[var];
            for (j, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let cx = c.mul(x);
                for (o, mij) in out.iter_mut().zip(mat[j].iter()) {
                    if !mij.is_zero() {
                        *o = o.add(&mij.mul(&cx));
                    }
                }
            }
        }
        out
    }

    /// Monic minimal polynomial (little-endian coefficients) of the linear
    /// form on the algebra, together with the Krylov vectors 1, ℓ, ℓ², …
    /// of length deg(minpoly).
    pub fn minimal_polynomial(&self, coeffs: &[C]) -> Result<(Vec<C>, Vec<Vec<C>>)> {
        let dim = self.dim();
        let zero = self.one.zero();
        let mut krylov: Vec<Vec<C>> = Vec::new();
        // incremental echelon with combination tracking
        let mut pivots: Vec<(usize, Vec<C>, Vec<C>)> = Vec::new(); // (col, vec, combo)
        let mut cur = vec![zero.clone(); dim];
        let i1 = *self
            .index
            .get(&Monomial::one(self.ring.nvars()))
            .ok_or_else(|| Error::Invariant("1 is not a standard monomial".into()))?;
        cur[i1] = self.one.clone();
        loop {
            let k = krylov.len();
            let mut v = cur.clone();
            let mut combo = vec![zero.clone(); k + 1];
            combo[k] = self.one.clone();
            for (pc, pv, pcombo) in &pivots {
                if !v[*pc].is_zero() {
                    let f = v[*pc].clone();
                    for (x, y) in v.iter_mut().zip(pv.iter()) {
                        *x = x.sub(&f.mul(y));
                    }
                    for (x, y) in combo.iter_mut().zip(pcombo.iter()) {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                Some(pc) => {
                    let inv = v[pc].inv()?;
                    for x in v.iter_mut() {
                        *x = x.mul(&inv);
                    }
                    for x in combo.iter_mut() {
                        *x = x.mul(&inv);
                    }
                    combo.resize(k + 1, zero.clone());
                    pivots.push((pc, v, combo));
                    krylov.push(cur.clone());
                    if k + 1 > dim {
                        return Err(Error::Invariant("Krylov space exceeded dimension".into()));
                    }
                    cur = self.apply_linear(coeffs, &cur);
                }
                None => {
                    // dependency 0 = Σ combo_j·ℓ^j; normalize monic
                    let lead = combo[k].inv()?;
                    let mut mp: Vec<C> =
                        combo[..k].iter().map(|c| c.mul(&lead)).collect();
                    mp.push(self.one.clone());
                    return Ok((mp, krylov));
                }
            }
        }
    }
}

/// Rank of the Jacobian matrix of `gens` at `point` (which must satisfy all
/// generators exactly).
pub fn jacobian_rank<C: Coeff>(
    gens: &[Poly<C>],
    point: &[C],
    ring: &Ring,
) -> Result<usize> {
    for g in gens {
        if !g.evaluate(point).is_zero() {
            return Err(Error::PointNotOnVariety);
        }
    }
    let rows: Vec<Vec<C>> = gens
        .iter()
        .map(|g| {
            (0..ring.nvars())
                .map(|v| g.derivative(v, ring).evaluate(point))
                .collect()
        })
        .collect();
    crate::linalg::Matrix::from_rows(rows).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use crate::poly::coeff::Fp;
    use crate::poly::mono::Order;
    use crate::poly::text::parse_poly;

    fn r(n: usize) -> Ring {
        Ring::numbered("x", n, Order::GrevLex)
    }

    fn p(s: &str, ring: &Ring) -> Poly<Fp> {
        parse_poly(s, ring, &Fp::new(1, 557)).unwrap()
    }

    #[test]
    fn quotient_algebra_of_two_points() {
        // V(x² − x) = {0, 1} on a line
        let ring = r(1);
        let gb = buchberger(&[p("x1^2 - x1", &ring)], &ring).unwrap();
        let alg = QuotientAlgebra::new(&gb, &ring, 100).unwrap();
        assert_eq!(alg.dim(), 2);
        let (mp, _) = alg.minimal_polynomial(&[Fp::new(1, 557)]).unwrap();
        // minpoly of x is x² − x: coefficients [0, −1, 1]
        assert_eq!(mp.len(), 3);
        assert_eq!(mp[0].val, 0);
        assert_eq!(mp[1].val, 556);
        assert_eq!(mp[2].val, 1);
    }

    #[test]
    fn cyclic3_has_dimension_6() {
        let ring = r(3);
        let gens = vec![
            p("x1 + x2 + x3", &ring),
            p("x1*x2 + x2*x3 + x3*x1", &ring),
            p("x1*x2*x3 - 1", &ring),
        ];
        let gb = buchberger(&gens, &ring).unwrap();
        let alg = QuotientAlgebra::new(&gb, &ring, 100).unwrap();
        assert_eq!(alg.dim(), 6);
    }

    #[test]
    fn non_zero_dimensional_is_rejected() {
        let ring = r(2);
        let gb = buchberger(&[p("x1", &ring)], &ring).unwrap();
        assert!(matches!(
            standard_monomials(&gb, &ring, 50),
            Err(Error::NotZeroDimensional)
        ));
    }

    #[test]
    fn jacobian_rank_examples() {
        let ring = r(2);
        // circle at (1, 0): rank 1
        let circle = [p("x1^2 + x2^2 - 1", &ring)];
        let pt = [Fp::new(1, 557), Fp::new(0, 557)];
        assert_eq!(jacobian_rank(&circle, &pt, &ring).unwrap(), 1);
        // xy at the origin: rank 0
        let axes = [p("x1*x2", &ring)];
        let origin = [Fp::new(0, 557), Fp::new(0, 557)];
        assert_eq!(jacobian_rank(&axes, &origin, &ring).unwrap(), 0);
        // off-variety point is rejected
        assert!(matches!(
            jacobian_rank(&circle, &origin, &ring),
            Err(Error::PointNotOnVariety)
        ));
    }
}
