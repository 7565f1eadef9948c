//! Hilbert series of quotients by monomial (leading-term) ideals, with
//! dimension and degree extraction.

use crate::poly::mono::Monomial;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Hilbert data of R/I: HS = numerator(t) / (1−t)^nvars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    pub nvars: usize,
    /// Raw numerator, coefficients of t^0, t^1, …
    pub numerator: Vec<BigInt>,
    /// Numerator with all (1−t) factors cancelled.
    pub reduced_numerator: Vec<BigInt>,
    /// Affine Krull dimension = nvars − (cancelled factors).
    pub dimension: usize,
    /// reduced_numerator(1).
    pub degree: BigInt,
}

fn poly_add_shifted(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

/// Multiply the coefficient vector by (1 − t^d).
fn mul_one_minus_td(a: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = a.to_vec();
    out.resize(a.len() + d, BigInt::zero());
    for (i, c) in a.iter().enumerate() {
        out[i + d] -= c;
    }
    out
}

fn minimalize(gens: &mut Vec<Monomial>) {
    gens.sort_by_key(|m| m.deg);
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens.drain(..) {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    *gens = out;
}

/// Numerator of the Hilbert series of R/(monomial ideal), by the standard
/// pivot recursion: N(I) = N(I + (x)) + t·N(I : x).
pub fn hilbert_numerator(gens: &[Monomial], nvars: usize) -> Vec<BigInt> {
    let mut gens = gens.to_vec();
    minimalize(&mut gens);
    rec(gens, nvars)
}

fn rec(gens: Vec<Monomial>, nvars: usize) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|m| m.deg == 0) {
        return vec![BigInt::zero()];
    }
    // base case: pairwise coprime generators (includes pure powers)
    if gens
        .iter()
        .enumerate()
        .all(|(i, m)| gens[i + 1..].iter().all(|g| m.coprime(g)))
    {
        let mut out = vec![BigInt::one()];
        for m in &gens {
            out = mul_one_minus_td(&out, m.deg as usize);
        }
        return out;
    }
    // pivot: a variable occurring in the most generators
    let pivot = (0..nvars)
        .max_by_key(|&v| gens.iter().filter(|m| m.exps[v] > 0).count())
        .unwrap();
    // I : x_pivot
    let mut colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut n = m.clone();
            if n.exps[pivot] > 0 {
                n.exps[pivot] -= 1;
                n.deg -= 1;
            }
            n
        })
        .collect();
    minimalize(&mut colon);
    // I + (x_pivot)
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exps[pivot] == 0)
        .cloned()
        .collect();
    plus.push(Monomial::var(gens[0].exps.len(), pivot));
    minimalize(&mut plus);
    let mut out = rec(plus, nvars);
    let colon_part = rec(colon, nvars);
    poly_add_shifted(&mut out, &colon_part, 1);
    out
}

/// Assemble full Hilbert data from the leading monomials of a Gröbner basis.
pub fn hilbert_data(lead: &[Monomial], nvars: usize) -> HilbertData {
    let numerator = hilbert_numerator(lead, nvars);
    let mut reduced = numerator.clone();
    let mut cancelled = 0usize;
    loop {
        let at_one: BigInt = reduced.iter().sum();
        if !at_one.is_zero() || reduced.iter().all(|c| c.is_zero()) {
            break;
        }
        // synthetic division by (1 − t): q_i = Σ_{j ≤ i} c_j
        let mut acc = BigInt::zero();
        let mut q = Vec::with_capacity(reduced.len().saturating_sub(1));
        for c in &reduced[..reduced.len() - 1] {
            acc += c;
            q.push(acc.clone());
        }
        while q.last().map(|c| c.is_zero()) == Some(true) {
            q.pop();
        }
        reduced = q;
        cancelled += 1;
        if reduced.is_empty() {
            break;
        }
    }
    let degree: BigInt = reduced.iter().sum();
    HilbertData {
        nvars,
        numerator,
        reduced_numerator: reduced,
        dimension: nvars - cancelled.min(nvars),
        degree,
    }
}

/// First `upto` values of the Hilbert function of R/I (coefficients of the
/// series numerator(t)/(1−t)^nvars).
pub fn hilbert_function_prefix(h: &HilbertData, upto: usize) -> Vec<BigInt> {
    let mut series = vec![BigInt::zero(); upto];
    for (i, c) in h.numerator.iter().enumerate().take(upto) {
        series[i] = c.clone();
    }
    // repeatedly integrate: multiply by 1/(1−t) = prefix sums
    for _ in 0..h.nvars {
        let mut acc = BigInt::zero();
        for v in series.iter_mut() {
            acc += &*v;
            *v = acc.clone();
        }
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u8]) -> Monomial {
        Monomial::from_exps(e)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn zero_ideal_and_pure_powers() {
        let h = hilbert_data(&[], 3);
        assert_eq!(h.numerator, vec![big(1)]);
        assert_eq!(h.dimension, 3);
        assert_eq!(h.degree, big(1));

        // (x^2, y^3) in 2 vars: artinian of length 6
        let h = hilbert_data(&[m(&[2, 0]), m(&[0, 3])], 2);
        assert_eq!(h.dimension, 0);
        assert_eq!(h.degree, big(6));
    }

    #[test]
    fn union_of_lines_with_multiplicity() {
        // (x2², x1x3, x1x2): standard monomials x1^a, x3^b, x2·x3^b, so the
        // Hilbert function is 1, 3, 3, … — dimension 1, degree 3
        let lead = [m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[1, 1, 0])];
        let h = hilbert_data(&lead, 3);
        assert_eq!(h.dimension, 1);
        assert_eq!(h.degree, big(3));
    }

    #[test]
    fn hilbert_function_of_hypersurface() {
        // quadric in 2 vars: HF = 1, 2, 2, 2, …
        let h = hilbert_data(&[m(&[2, 0])], 2);
        let f = hilbert_function_prefix(&h, 5);
        assert_eq!(f, vec![big(1), big(2), big(2), big(2), big(2)]);
    }
}
