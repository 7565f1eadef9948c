//! Numerical recovery of exact relations among theta products: kernel
//! computation with small-rational reconstruction, rank certification with a
//! singular-gap criterion, and sign discovery for Riemann relations.

use super::complex::Complex;
use crate::error::{Error, Result};
use crate::f2::{even_index_map, even_table, Characteristic};
use num_bigint::BigInt;
use rug::Float;
use std::collections::BTreeSet;

/// Exponent vectors of all degree-d monomials in k variables (colex order).
pub fn monomial_exponents(k: usize, d: u32) -> Vec<Vec<u8>> {
    fn rec(k: usize, d: u32, out: &mut Vec<Vec<u8>>, cur: &mut Vec<u8>) {
        if k == 1 {
            cur.push(d as u8);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in 0..=d {
            cur.push(e as u8);
            rec(k - 1, d - e, out, cur);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, d, &mut out, &mut Vec::new());
    out
}

/// A set of integer relations on a fixed list of monomials in the input forms.
#[derive(Debug, Clone)]
pub struct RelationSet {
    /// Exponent vector (over the input forms) of each monomial column.
    pub monomials: Vec<Vec<u8>>,
    /// Integer coefficient vectors; each row is one relation.
    pub relations: Vec<Vec<BigInt>>,
}

fn float_rows_from_complex(rows: &[Vec<Complex>]) -> Vec<Vec<Float>> {
    let mut out = Vec::with_capacity(2 * rows.len());
    for row in rows {
        out.push(row.iter().map(|c| c.re.clone()).collect());
        out.push(row.iter().map(|c| c.im.clone()).collect());
    }
    out
}

fn row_max_abs(row: &[Float]) -> f64 {
    row.iter()
        .map(|x| x.clone().abs().to_f64())
        .fold(0.0, f64::max)
}

/// Reduced row echelon form with a magnitude threshold for pivot detection.
/// Returns (pivot columns, pivot magnitudes seen in selection order).
fn rref_threshold(rows: &mut Vec<Vec<Float>>, thr: f64) -> (Vec<usize>, Vec<f64>) {
    // drop numerically-zero rows after normalizing each row to unit max
    rows.retain(|r| row_max_abs(r) > 0.0);
    for row in rows.iter_mut() {
        let m = row_max_abs(row);
        for x in row.iter_mut() {
            *x /= m;
        }
    }
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut pivot_mags = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let (best, mag) = (r..rows.len())
            .map(|i| (i, rows[i][c].clone().abs().to_f64()))
            .fold((r, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if mag < thr {
            continue;
        }
        rows.swap(r, best);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x /= &inv;
        }
        for i in 0..rows.len() {
            if i != r {
                let f = rows[i][c].clone();
                if f.clone().abs().to_f64() > 0.0 {
                    for j in 0..ncols {
                        let t = Float::with_val(f.prec(), &rows[r][j] * &f);
                        rows[i][j] -= t;
                    }
                }
            }
        }
        pivots.push(c);
        pivot_mags.push(mag);
        r += 1;
    }
    (pivots, pivot_mags)
}

/// Numerical rank of a complex value matrix with a safe singular-gap
/// criterion: the smallest accepted pivot must exceed the largest rejected
/// candidate by the factor `gap`, otherwise the rank is indeterminate.
pub fn numeric_rank(rows: &[Vec<Complex>], gap: f64) -> Result<usize> {
    let mut real = float_rows_from_complex(rows);
    // eliminate with no threshold, then look for the gap in pivot magnitudes
    let (pivots, mags) = rref_threshold(&mut real, 0.0);
    // candidate magnitudes include the largest residual after elimination
    let residual = real
        .iter()
        .skip(pivots.len())
        .map(|r| row_max_abs(r))
        .fold(0.0, f64::max);
    let mut sorted = mags.clone();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut rank = sorted.len();
    for (i, &m) in sorted.iter().enumerate() {
        if m < 1.0 / gap {
            rank = i;
            break;
        }
    }
    let floor = if rank < sorted.len() {
        sorted[rank]
    } else {
        residual
    };
    let ceiling = if rank == 0 { 1.0 } else { sorted[rank - 1] };
    if floor > 0.0 && ceiling / floor < gap {
        return Err(Error::RankIndeterminate);
    }
    Ok(rank)
}

/// Nearest rational with denominator ≤ `max_denom`, if within `tol`.
pub fn rationalize(x: f64, max_denom: i64, tol: f64) -> Option<(i64, i64)> {
    for q in 1..=max_denom {
        let p = (x * q as f64).round();
        if (x - p / q as f64).abs() < tol {
            return Some((p as i64, q));
        }
    }
    None
}

/// Integer kernel of a complex value matrix: eliminate, read kernel vectors
/// off the free columns, reconstruct small-rational entries, clear
/// denominators. Errors if any entry fails rational reconstruction.
pub fn integer_kernel(rows: &[Vec<Complex>]) -> Result<Vec<Vec<BigInt>>> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut real = float_rows_from_complex(rows);
    let (pivots, _) = rref_threshold(&mut real, 1e-12);
    let is_pivot = {
        let mut v = vec![false; ncols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut out = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut entries = vec![(0i64, 1i64); ncols];
        entries[free] = (1, 1);
        for (r, &pc) in pivots.iter().enumerate() {
            let x = -real[r][free].to_f64();
            let (p, q) = rationalize(x, 64, 1e-9).ok_or(Error::RationalizationFailure)?;
            entries[pc] = (p, q);
        }
        let lcm: i64 = entries
            .iter()
            .map(|&(_, q)| q)
            .fold(1, |acc, q| acc / gcd_i64(acc, q) * q);
        out.push(
            entries
                .iter()
                .map(|&(p, q)| BigInt::from(p * (lcm / q)))
                .collect(),
        );
    }
    Ok(out)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd_i64(b, a % b) }
}

/// Residual of Σ c_j·v_j relative to the largest contributing term.
pub fn relation_residual(coeffs: &[BigInt], values: &[Complex]) -> f64 {
    let prec = values[0].prec();
    let mut acc = Complex::zero(prec);
    let mut max_term = 0.0f64;
    for (c, v) in coeffs.iter().zip(values) {
        let cf: f64 = c.to_string().parse().unwrap_or(0.0);
        if cf == 0.0 {
            continue;
        }
        let term = v.scale_f64(cf);
        max_term = max_term.max(term.abs_f64());
        acc = acc.add(&term);
    }
    if max_term == 0.0 {
        return 0.0;
    }
    acc.abs_f64() / max_term
}

/// Kernel of the degree-`degree` monomials in the given forms, as integer
/// relations, each re-verified on the fresh sample rows.
pub fn find_relations(
    form_values: &[Vec<Complex>],
    degree: u32,
    verify_values: &[Vec<Complex>],
) -> Result<RelationSet> {
    let k = form_values
        .first()
        .map(|r| r.len())
        .ok_or(Error::RankIndeterminate)?;
    let monomials = monomial_exponents(k, degree);
    let build_row = |forms: &Vec<Complex>| -> Vec<Complex> {
        monomials
            .iter()
            .map(|exps| {
                let mut acc = Complex::one(forms[0].prec());
                for (i, &e) in exps.iter().enumerate() {
                    for _ in 0..e {
                        acc = acc.mul(&forms[i]);
                    }
                }
                acc
            })
            .collect()
    };
    let rows: Vec<Vec<Complex>> = form_values.iter().map(build_row).collect();
    let relations = integer_kernel(&rows)?;
    for rel in &relations {
        for forms in verify_values {
            let row = build_row(forms);
            let res = relation_residual(rel, &row);
            if res > 1e-10 {
                return Err(Error::Invariant(format!(
                    "recovered relation fails re-verification (residual {res:.2e})"
                )));
            }
        }
    }
    Ok(RelationSet {
        monomials,
        relations,
    })
}

/// The Riemann-relation parts for a pair (p, q): orbits {m, m+p, m+q, m+p+q}
/// of even characteristics in which all four members are even and distinct.
/// Each part is returned as sorted 1-based indices into the even table.
pub fn riemann_parts(
    p: &Characteristic,
    q: &Characteristic,
    genus: u8,
) -> Result<Vec<Vec<usize>>> {
    let table = even_table(genus)?;
    let index = even_index_map(genus)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for m in &table {
        let orbit_bits = [
            m.bits,
            m.bits ^ p.bits,
            m.bits ^ q.bits,
            m.bits ^ p.bits ^ q.bits,
        ];
        let mut idxs = Vec::with_capacity(4);
        for &bits in &orbit_bits {
            match index.get(&bits) {
                Some(&i) => idxs.push(i + 1),
                None => {
                    idxs.clear();
                    break;
                }
            }
        }
        if idxs.len() != 4 {
            continue;
        }
        idxs.sort_unstable();
        idxs.dedup();
        if idxs.len() != 4 {
            continue;
        }
        if seen.insert(idxs.clone()) {
            out.push(idxs);
        }
    }
    Ok(out)
}

/// Find ε ∈ {±1}^k (first sign +1) with Σ ε_i·r_i ≈ 0 at every sample; the
/// search runs in f64 and the winning assignment is certified in full
/// precision. Falls back to a kernel solve allowing zero coefficients.
pub fn discover_part_signs(values: &[Vec<Complex>]) -> Result<Vec<i8>> {
    let k = values
        .first()
        .map(|v| v.len())
        .ok_or(Error::NoVanishingSigns)?;
    let approx: Vec<Vec<(f64, f64)>> = values
        .iter()
        .map(|row| row.iter().map(|c| (c.re.to_f64(), c.im.to_f64())).collect())
        .collect();
    let tol = 1e-10;
    if k <= 20 {
        'mask: for mask in 0u32..(1 << (k - 1)) {
            let signs: Vec<i8> = std::iter::once(1i8)
                .chain((0..k - 1).map(|i| if (mask >> i) & 1 == 1 { -1 } else { 1 }))
                .collect();
            for row in &approx {
                let mut re = 0.0;
                let mut im = 0.0;
                let mut maxmag: f64 = 0.0;
                for (s, &(r, i)) in signs.iter().zip(row) {
                    let s = *s as f64;
                    re += s * r;
                    im += s * i;
                    maxmag = maxmag.max((r * r + i * i).sqrt());
                }
                if (re * re + im * im).sqrt() > tol * maxmag {
                    continue 'mask;
                }
            }
            // certify in full precision
            let coeffs: Vec<BigInt> = signs.iter().map(|&s| BigInt::from(s)).collect();
            if values.iter().all(|row| relation_residual(&coeffs, row) < tol) {
                return Ok(signs);
            }
        }
    }
    // allow zero coefficients: exact small-integer kernel vector
    if let Ok(kernel) = integer_kernel(values) {
        for vec_ in kernel {
            let small = vec_.iter().all(|c| {
                let s = c.to_string();
                s == "0" || s == "1" || s == "-1"
            });
            let support = vec_.iter().filter(|c| c.to_string() != "0").count();
            if small && support >= 2 && values.iter().all(|row| relation_residual(&vec_, row) < tol)
            {
                return Ok(vec_
                    .iter()
                    .map(|c| c.to_string().parse::<i8>().unwrap())
                    .collect());
            }
        }
    }
    Err(Error::NoVanishingSigns)
}

/// Numerical rank of the value matrix of the given forms (gap 10⁶ per the
/// rank-certification policy).
pub fn verify_linear_independence(rows: &[Vec<Complex>]) -> Result<usize> {
    numeric_rank(rows, 1e6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::{gopel_form, reciprocal_form, SiegelPoint, ThetaSample};
    use crate::f2::enumerate_gopel_groups;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn samples(genus: usize, n: usize, seed: u64) -> Vec<ThetaSample> {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                ThetaSample::new(SiegelPoint::sample(genus, 1e-20, &mut rng).unwrap()).unwrap()
            })
            .collect()
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_exponents(3, 2).len(), 6);
        assert_eq!(monomial_exponents(15, 1).len(), 15);
        assert_eq!(monomial_exponents(15, 2).len(), 120);
    }

    #[test]
    fn genus1_quadric_recovered() {
        // the three genus-1 Göpel products f_i; among their degree-2
        // monomials there is exactly one relation, and it is
        // f0·f1 − f0·f2 − f1·f2 = 0 (not the misprinted variant).
        let groups = enumerate_gopel_groups(1).unwrap();
        assert_eq!(groups.len(), 3);
        let all = samples(1, 10, 101);
        let rows: Vec<Vec<Complex>> = all
            .iter()
            .map(|s| {
                groups
                    .iter()
                    .map(|g| {
                        let v = gopel_form(g, s).unwrap();
                        v.mul(&v).mul(&v.mul(&v)) // ϑ_G^4 = f_i (k_1 = 4)
                    })
                    .collect()
            })
            .collect();
        let (train, fresh) = rows.split_at(7);
        let rels = find_relations(train, 2, fresh).unwrap();
        assert_eq!(rels.relations.len(), 1);
        // identify the relation up to global sign
        let rel = &rels.relations[0];
        let coeff = |a: u8, b: u8, c: u8| {
            let pos = rels
                .monomials
                .iter()
                .position(|m| m == &vec![a, b, c])
                .unwrap();
            rel[pos].clone()
        };
        let f0f1 = coeff(1, 1, 0);
        let f0f2 = coeff(1, 0, 1);
        let f1f2 = coeff(0, 1, 1);
        assert_eq!(f0f1, -(f0f2.clone()));
        assert_eq!(f0f2, f1f2);
        // squares do not appear
        assert_eq!(coeff(2, 0, 0).to_string(), "0");
    }

    #[test]
    fn genus2_linear_kernel_dimension_10() {
        let groups = enumerate_gopel_groups(2).unwrap();
        assert_eq!(groups.len(), 15);
        let all = samples(2, 22, 103);
        let rows: Vec<Vec<Complex>> = all
            .iter()
            .map(|s| {
                groups
                    .iter()
                    .map(|g| {
                        let v = reciprocal_form(g, s).unwrap();
                        v.mul(&v) // s_G² (k_2 = 2)
                    })
                    .collect()
            })
            .collect();
        let (train, fresh) = rows.split_at(18);
        let rels = find_relations(train, 1, fresh).unwrap();
        assert_eq!(rels.relations.len(), 10);
        // span has dimension 5
        assert_eq!(verify_linear_independence(train).unwrap(), 5);
    }

    #[test]
    fn genus2_quadric_kernel_dimension_51() {
        // the Igusa quartic sits inside P^14 as an intersection of 51
        // quadrics: kernel of the 120 degree-2 monomials in the 15 ϑ_G²
        let groups = enumerate_gopel_groups(2).unwrap();
        let all = samples(2, 75, 211);
        let rows: Vec<Vec<Complex>> = all
            .iter()
            .map(|s| {
                groups
                    .iter()
                    .map(|g| {
                        let v = gopel_form(g, s).unwrap();
                        v.mul(&v)
                    })
                    .collect()
            })
            .collect();
        let (train, fresh) = rows.split_at(70);
        let rels = find_relations(train, 2, fresh).unwrap();
        assert_eq!(rels.relations.len(), 51);
    }

    #[test]
    fn rank_of_goepel_forms() {
        // genus 1: the three ϑ_G^4 are independent
        let g1 = enumerate_gopel_groups(1).unwrap();
        let rows: Vec<Vec<Complex>> = samples(1, 5, 107)
            .iter()
            .map(|s| {
                g1.iter()
                    .map(|g| {
                        let v = gopel_form(g, s).unwrap();
                        v.mul(&v).mul(&v.mul(&v))
                    })
                    .collect()
            })
            .collect();
        assert_eq!(verify_linear_independence(&rows).unwrap(), 3);
        // genus 2: the fifteen ϑ_G² are independent
        let g2 = enumerate_gopel_groups(2).unwrap();
        let rows: Vec<Vec<Complex>> = samples(2, 18, 109)
            .iter()
            .map(|s| {
                g2.iter()
                    .map(|g| {
                        let v = gopel_form(g, s).unwrap();
                        v.mul(&v)
                    })
                    .collect()
            })
            .collect();
        assert_eq!(verify_linear_independence(&rows).unwrap(), 15);
    }

    #[test]
    fn genus2_quartic_signs() {
        // the classical relation ϑ₁⁴ − ϑ₃⁴ − ϑ₇⁴ − ϑ₁₀⁴ = 0 in the ten-row
        // numbering: parts are fourth powers, signs recovered numerically
        let parts: Vec<Vec<usize>> = vec![vec![1; 4], vec![3; 4], vec![7; 4], vec![10; 4]];
        let all = samples(2, 3, 113);
        let values: Vec<Vec<Complex>> = all
            .iter()
            .map(|s| parts.iter().map(|p| s.product(p)).collect())
            .collect();
        let signs = discover_part_signs(&values).unwrap();
        assert_eq!(signs, vec![1, -1, -1, -1]);
    }

    #[test]
    fn rationalization_bounds() {
        assert_eq!(rationalize(0.5, 64, 1e-9), Some((1, 2)));
        assert_eq!(rationalize(-2.0, 64, 1e-9), Some((-2, 1)));
        assert_eq!(rationalize(1.0 / 3.0, 64, 1e-9), Some((1, 3)));
        assert!(rationalize(0.123456789, 4, 1e-9).is_none());
    }
}
