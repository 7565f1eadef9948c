//! Gröbner-basis engine: Buchberger's algorithm with the Gebauer–Möller
//! pair criteria and sugar selection, normal forms, and reduced bases.

pub mod elim;
pub mod hilbert;
pub mod zerodim;

use crate::error::{Error, Result};
use crate::poly::coeff::Coeff;
use crate::poly::mono::Monomial;
use crate::poly::ring::{Poly, Ring};
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// A reduced Gröbner basis: monic elements, pairwise non-divisible leading
/// terms, tails fully reduced, sorted ascending in the ring order.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<C> {
    pub polys: Vec<Poly<C>>,
}

impl<C: Coeff> GroebnerBasis<C> {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|g| g.lt().unwrap().0.clone()).collect()
    }

    pub fn contains_one(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].lt().map(|(m, _)| m.is_one()) == Some(true)
    }
}

/// Support bitmask of a monomial; used as a cheap divisibility prefilter
/// (g divides m only if support(g) ⊆ support(m)).
fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.exps.iter().enumerate() {
        if e > 0 {
            mask |= 1 << (i & 63);
        }
    }
    mask
}

/// Injective u128 sort key matching the monomial order, so that a single
/// integer compare replaces the full comparison.
///
/// GrevLex (≤ 15 variables, degree ≤ 255): degree byte, then complemented
/// exponents from the last variable down.
///
/// Elim(1) (≤ 16 variables total): the eliminated exponent, then the degree
/// of the remainder, then its complemented exponents from the last variable
/// down. The first remainder exponent is omitted — it is determined by the
/// degree byte and the others, so the key stays injective and the compare
/// still agrees with grevlex tie-breaking on the remainder block.
fn grevlex_key(m: &Monomial, split: usize) -> u128 {
    debug_assert!(m.deg <= 255);
    let mut k;
    let rest;
    let mut shift;
    if split == 1 {
        debug_assert!(m.exps.len() <= 16);
        let t = m.exps[0] as u128;
        let rest_deg = m.deg - m.exps[0] as u32;
        k = (t << 120) | ((rest_deg as u128) << 112);
        rest = &m.exps[2..];
        shift = 104i32;
    } else {
        debug_assert!(m.exps.len() <= 15);
        k = (m.deg as u128) << 120;
        rest = &m.exps[..];
        shift = 112i32;
    }
    for &e in rest.iter().rev() {
        k |= ((255 - e) as u128) << shift;
        shift -= 8;
    }
    k
}

/// Whether `grevlex_key` is usable for this ring; returns the block split
/// (0 for plain grevlex, 1 for a single eliminated variable) or None.
fn keyed(ring: &Ring) -> Option<usize> {
    match ring.order {
        crate::poly::mono::Order::GrevLex if ring.nvars() <= 15 => Some(0),
        crate::poly::mono::Order::Elim(1) if ring.nvars() <= 16 => Some(1),
        _ => None,
    }
}

type KTerm<C> = (u128, Monomial, C);

fn kterm_cmp<C>(ring: &Ring, a: &KTerm<C>, b: &KTerm<C>) -> std::cmp::Ordering {
    a.0.cmp(&b.0).then_with(|| ring.order.cmp(&a.1, &b.1))
}

/// Merge two ascending-sorted term lists, combining equal monomials and
/// dropping cancellations.
fn merge_terms<C: Coeff>(a: Vec<KTerm<C>>, b: Vec<KTerm<C>>, ring: &Ring) -> Vec<KTerm<C>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ai = a.into_iter().peekable();
    let mut bi = b.into_iter().peekable();
    loop {
        match (ai.peek(), bi.peek()) {
            (Some(ta), Some(tb)) => match kterm_cmp(ring, ta, tb) {
                std::cmp::Ordering::Less => out.push(ai.next().unwrap()),
                std::cmp::Ordering::Greater => out.push(bi.next().unwrap()),
                std::cmp::Ordering::Equal => {
                    let (k, m, ca) = ai.next().unwrap();
                    let (_, _, cb) = bi.next().unwrap();
                    let c = ca.add(&cb);
                    if !c.is_zero() {
                        out.push((k, m, c));
                    }
                }
            },
            (Some(_), None) => out.push(ai.next().unwrap()),
            (None, Some(_)) => out.push(bi.next().unwrap()),
            (None, None) => return out,
        }
    }
}

/// Geobucket accumulator: terms spread over buckets of geometrically growing
/// capacity, each sorted ascending (leading term last, popped in O(1)).
/// Keeps reduction cost near O(total terms · log) instead of rebuilding the
/// full remainder on every step.
struct Geobucket<'r, C> {
    ring: &'r Ring,
    buckets: Vec<Vec<KTerm<C>>>,
}

impl<'r, C: Coeff> Geobucket<'r, C> {
    fn cap(i: usize) -> usize {
        1 << (2 * i + 4)
    }

    fn new(ring: &'r Ring) -> Self {
        Geobucket { ring, buckets: Vec::new() }
    }

    /// Add a list of keyed terms already sorted ascending in the ring order.
    fn add_sorted(&mut self, terms: Vec<KTerm<C>>) {
        if terms.is_empty() {
            return;
        }
        let mut i = 0;
        while Self::cap(i) < terms.len() {
            i += 1;
        }
        let mut carry = terms;
        loop {
            if self.buckets.len() <= i {
                self.buckets.resize_with(i + 1, Vec::new);
            }
            if self.buckets[i].is_empty() {
                self.buckets[i] = carry;
                return;
            }
            let merged = merge_terms(std::mem::take(&mut self.buckets[i]), carry, self.ring);
            if merged.len() <= Self::cap(i) {
                self.buckets[i] = merged;
                return;
            }
            carry = merged;
            i += 1;
        }
    }

    /// Pop the overall leading term (summing equal monomials across buckets,
    /// skipping cancellations).
    fn pop_lt(&mut self) -> Option<(Monomial, C)> {
        loop {
            let mut best: Option<usize> = None;
            for (bi, b) in self.buckets.iter().enumerate() {
                if let Some(t) = b.last() {
                    let better = match best {
                        None => true,
                        Some(i) => {
                            kterm_cmp(self.ring, t, self.buckets[i].last().unwrap())
                                == std::cmp::Ordering::Greater
                        }
                    };
                    if better {
                        best = Some(bi);
                    }
                }
            }
            let bi = best?;
            let (k, m, mut c) = self.buckets[bi].pop().unwrap();
            for (oi, b) in self.buckets.iter_mut().enumerate() {
                if oi == bi {
                    continue;
                }
                while b
                    .last()
                    .map(|(ok, om, _)| *ok == k && om == &m)
                    .unwrap_or(false)
                {
                    let (_, _, oc) = b.pop().unwrap();
                    c = c.add(&oc);
                }
            }
            if !c.is_zero() {
                return Some((m, c));
            }
        }
    }
}

/// Full normal form of `f` against `basis` (leading and tail terms).
pub fn normal_form<C: Coeff>(f: &Poly<C>, basis: &[Poly<C>], ring: &Ring) -> Poly<C> {
    let refs: Vec<&Poly<C>> = basis.iter().collect();
    normal_form_refs(f, &refs, ring)
}

fn normal_form_refs<C: Coeff>(f: &Poly<C>, basis: &[&Poly<C>], ring: &Ring) -> Poly<C> {
    let leads: Vec<(Monomial, C, u64)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.lt().expect("zero polynomial in basis");
            (m.clone(), c.inv().expect("unit leading coefficient"), divmask(m))
        })
        .collect();
    let use_keys = keyed(ring);
    let key = |m: &Monomial| match use_keys {
        Some(split) => grevlex_key(m, split),
        None => 0,
    };
    let mut bucket = Geobucket::new(ring);
    bucket.add_sorted(
        f.terms
            .iter()
            .rev()
            .map(|(m, c)| (key(m), m.clone(), c.clone()))
            .collect(),
    );
    let mut out: Vec<(Monomial, C)> = Vec::new();
    'outer: while let Some((m, c)) = bucket.pop_lt() {
        let mmask = divmask(&m);
        for (g, (gm, gcinv, gmask)) in basis.iter().zip(&leads) {
            if gmask & !mmask != 0 {
                continue;
            }
            if gm.divides(&m) {
                let q = gm.quotient_into(&m);
                // leading terms cancel exactly; feed back the scaled tail
                let s = c.mul(gcinv).neg();
                let tail: Vec<KTerm<C>> = g.terms[1..]
                    .iter()
                    .rev()
                    .map(|(tm, tc)| {
                        let prod = tm.mul(&q);
                        (key(&prod), prod, tc.mul(&s))
                    })
                    .collect();
                bucket.add_sorted(tail);
                continue 'outer;
            }
        }
        out.push((m, c));
    }
    Poly { terms: out }
}

/// Guard threshold for rational coefficient growth (total bits per
/// coefficient).
const BLOWUP_BITS: usize = 1 << 20;

fn spoly<C: Coeff>(f: &Poly<C>, g: &Poly<C>, ring: &Ring) -> Poly<C> {
    let (fm, fc) = f.lt().unwrap();
    let (gm, gc) = g.lt().unwrap();
    let l = fm.lcm(gm);
    let uf = fm.quotient_into(&l);
    let ug = gm.quotient_into(&l);
    let a = f.mul_term(&uf, &fc.inv().expect("unit leading coefficient"));
    let b = g.mul_term(&ug, &gc.inv().expect("unit leading coefficient"));
    a.sub(&b, ring)
}

#[derive(PartialEq, Eq)]
struct PairKey {
    sugar: u32,
    lcm_deg: u32,
    i: usize,
    j: usize,
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.sugar, self.lcm_deg, self.i, self.j).cmp(&(
            other.sugar,
            other.lcm_deg,
            other.i,
            other.j,
        ))
    }
}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Buchberger's algorithm; returns the reduced Gröbner basis.
pub fn buchberger<C: Coeff>(gens: &[Poly<C>], ring: &Ring) -> Result<GroebnerBasis<C>> {
    let mut basis: Vec<Poly<C>> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    // surviving critical pairs, keyed for the selection heap
    let mut pairs: BinaryHeap<Reverse<PairKey>> = BinaryHeap::new();
    // alive[j][i] (i < j) holds the cached pair lcm while the pair survives
    let mut alive: Vec<Vec<Option<Monomial>>> = Vec::new();

    let add = |basis: &mut Vec<Poly<C>>,
                   sugars: &mut Vec<u32>,
                   pairs: &mut BinaryHeap<Reverse<PairKey>>,
                   alive: &mut Vec<Vec<Option<Monomial>>>,
                   h: Poly<C>,
                   sugar: u32|
     -> Result<()> {
        for (_, c) in &h.terms {
            if c.size_hint() > BLOWUP_BITS {
                return Err(Error::CoefficientBlowup);
            }
        }
        let h = h.monic(ring)?;
        let t = basis.len();
        let hm = h.lt().unwrap().0.clone();
        let lcm_with = |g: &Poly<C>| hm.lcm(&g.lt().unwrap().0);
        // Gebauer–Möller B-criterion: kill old pairs strictly refined by h
        for j in 1..basis.len() {
            for i in 0..j {
                if let Some(lij) = &alive[j][i] {
                    if hm.divides(lij)
                        && &lcm_with(&basis[i]) != lij
                        && &lcm_with(&basis[j]) != lij
                    {
                        alive[j][i] = None;
                    }
                }
            }
        }
        // new pairs, pruned by the M/F criteria and Buchberger's coprimality
        let lcms: Vec<Monomial> = basis.iter().map(|g| lcm_with(g)).collect();
        let mut keep = vec![true; basis.len()];
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i != j && keep[i] && keep[j] {
                    let strictly = lcms[j].divides(&lcms[i]) && lcms[j] != lcms[i];
                    if strictly || (lcms[j] == lcms[i] && j < i) {
                        keep[i] = false;
                    }
                }
            }
        }
        for i in 0..basis.len() {
            if keep[i] && hm.coprime(&basis[i].lt().unwrap().0) {
                keep[i] = false;
            }
        }
        alive.push(
            keep.iter()
                .enumerate()
                .map(|(i, k)| if *k { Some(lcms[i].clone()) } else { None })
                .collect(),
        );
        for (i, k) in keep.iter().enumerate() {
            if *k {
                let l = &lcms[i];
                let s = sugar
                    .saturating_add(l.deg - hm.deg)
                    .max(sugars[i].saturating_add(l.deg - basis[i].lt().unwrap().0.deg));
                pairs.push(Reverse(PairKey {
                    sugar: s,
                    lcm_deg: l.deg,
                    i,
                    j: t,
                }));
            }
        }
        basis.push(h);
        sugars.push(sugar);
        Ok(())
    };

    for f in gens {
        if f.is_zero() {
            continue;
        }
        let s = f.total_degree();
        let red = normal_form(f, &basis, ring);
        if !red.is_zero() {
            add(&mut basis, &mut sugars, &mut pairs, &mut alive, red, s)?;
        }
    }

    let trace = std::env::var_os("GOEPEL_GB_TRACE").is_some();
    let mut processed = 0usize;
    while let Some(Reverse(pk)) = pairs.pop() {
        if alive[pk.j][pk.i].is_none() {
            continue;
        }
        alive[pk.j][pk.i] = None;
        let s = spoly(&basis[pk.i], &basis[pk.j], ring);
        let red = normal_form(&s, &basis, ring);
        if !red.is_zero() {
            add(&mut basis, &mut sugars, &mut pairs, &mut alive, red, pk.sugar)?;
        }
        processed += 1;
        if trace && processed % 500 == 0 {
            let max_terms = basis.iter().map(|g| g.terms.len()).max().unwrap_or(0);
            eprintln!(
                "gb: {} pairs done, basis {}, queue {}, sugar {}, max terms {}",
                processed,
                basis.len(),
                pairs.len(),
                pk.sugar,
                max_terms
            );
        }
    }

    Ok(reduce_basis(basis, ring))
}

/// Inter-reduce a Gröbner basis into the unique reduced one.
fn reduce_basis<C: Coeff>(mut basis: Vec<Poly<C>>, ring: &Ring) -> GroebnerBasis<C> {
    // drop elements whose leading term is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j && keep[i] && keep[j] {
                let mi = &basis[i].lt().unwrap().0;
                let mj = &basis[j].lt().unwrap().0;
                if mj.divides(mi) && (mi != mj || j < i) {
                    keep[i] = false;
                }
            }
        }
    }
    let mut kept: Vec<Poly<C>> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    // reduce each tail against the others (self temporarily zeroed out)
    for i in 0..kept.len() {
        let me = std::mem::replace(&mut kept[i], Poly::zero());
        let others: Vec<&Poly<C>> = kept.iter().filter(|g| !g.is_zero()).collect();
        kept[i] = normal_form_refs(&me, &others, ring);
    }
    kept.sort_by(|a, b| ring.order.cmp(&a.lt().unwrap().0, &b.lt().unwrap().0));
    GroebnerBasis { polys: kept }
}

/// True iff `f` lies in the ideal with the given Gröbner basis.
pub fn ideal_member<C: Coeff>(f: &Poly<C>, gb: &GroebnerBasis<C>, ring: &Ring) -> bool {
    normal_form(f, &gb.polys, ring).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff::Fp;
    use crate::poly::mono::Order;
    use crate::poly::text::parse_poly;

    fn fp_ring(n: usize) -> Ring {
        Ring::numbered("x", n, Order::GrevLex)
    }

    fn p(s: &str, ring: &Ring) -> Poly<Fp> {
        parse_poly(s, ring, &Fp::new(1, 557)).unwrap()
    }

    #[test]
    fn principal_and_monomial_ideals() {
        let r = fp_ring(2);
        let f = p("3*x1^2 + 2*x2", &r);
        let gb = buchberger(&[f.clone()], &r).unwrap();
        assert_eq!(gb.polys.len(), 1);
        assert_eq!(gb.polys[0].lt().unwrap().1.val, 1); // monic
        assert!(ideal_member(&f, &gb, &r));

        let gb2 = buchberger(&[p("x1", &r), p("x2", &r)], &r).unwrap();
        assert_eq!(gb2.polys.len(), 2);
    }

    #[test]
    fn katsura_like_spoly_closure() {
        // a classical non-trivial example: twisted cubic x2 - x1^2, x3 - x1^3
        // in lex gives an eliminant structure; grevlex basis closes under
        // S-polynomial reduction
        let r = fp_ring(3);
        let gens = vec![p("x2 - x1^2", &r), p("x3 - x1^3", &r)];
        let gb = buchberger(&gens, &r).unwrap();
        for i in 0..gb.polys.len() {
            for j in i + 1..gb.polys.len() {
                let s = spoly(&gb.polys[i], &gb.polys[j], &r);
                assert!(normal_form(&s, &gb.polys, &r).is_zero());
            }
        }
        // the implicit equation x1 x3 - x2^2 is in the ideal
        assert!(ideal_member(&p("x1*x3 - x2^2", &r), &gb, &r));
    }

    #[test]
    fn cyclic3_full_run() {
        let r = fp_ring(3);
        let gens = vec![
            p("x1 + x2 + x3", &r),
            p("x1*x2 + x2*x3 + x3*x1", &r),
            p("x1*x2*x3 - 1", &r),
        ];
        let gb = buchberger(&gens, &r).unwrap();
        // cyclic-3 has a zero-dimensional solution set of degree 6
        for g in &gens {
            assert!(ideal_member(g, &gb, &r));
        }
        // idempotence: running again on the basis returns the same basis
        let gb2 = buchberger(&gb.polys, &r).unwrap();
        assert_eq!(gb.polys, gb2.polys);
        // all S-polynomials reduce to zero
        for i in 0..gb.polys.len() {
            for j in i + 1..gb.polys.len() {
                let s = spoly(&gb.polys[i], &gb.polys[j], &r);
                assert!(normal_form(&s, &gb.polys, &r).is_zero());
            }
        }
    }

    #[test]
    fn rational_path_small() {
        use num_rational::BigRational;
        let r = fp_ring(2);
        let one = <BigRational as num_traits::One>::one();
        let f: Poly<BigRational> = parse_poly("x1^2 - x2", &r, &one).unwrap();
        let g: Poly<BigRational> = parse_poly("x1*x2 - 1", &r, &one).unwrap();
        let gb = buchberger(&[f, g], &r).unwrap();
        // x2^3 = x1^2 x2^2 = (x1 x2)^2 ... the lex-free certificate: x1 - x2^2
        let member: Poly<BigRational> = parse_poly("x1 - x2^2", &r, &one).unwrap();
        assert!(ideal_member(&member, &gb, &r));
    }
}
