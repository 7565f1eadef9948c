//! Exhaustive scan of projective points with coordinates in {−1, 0, 1}
//! against the binomial supports of 𝔞 and 𝔟.

use crate::error::Result;
use crate::pipeline::GoepelSystem;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;

/// Outcome of the {−1, 0, 1}-box scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    /// Projective representatives examined (first nonzero coordinate = 1).
    pub representatives: usize,
    /// Points annihilating all 35 cubics (V(𝔞) ∩ box).
    pub on_a: usize,
    /// Points additionally annihilating all 35 quartics (V(𝔟) ∩ box).
    pub on_b: usize,
    /// Points on V(𝔞) ∖ V(𝔟), the "extra" locus.
    pub extra: Vec<[i8; 15]>,
}

struct ImageRow {
    /// Integer numerator coefficients over the 15 basis coordinates.
    num: [i64; 15],
    /// Positive common denominator.
    den: i64,
}

/// Clear denominators of the 135 rewriting rows.
fn integer_images(system: &GoepelSystem) -> Result<Vec<ImageRow>> {
    let mut rows = Vec::with_capacity(135);
    for g in 0..system.table.groups.len() {
        let poly = &system.sel.rewrite[g];
        let mut den = BigInt::from(1);
        for (_, c) in &poly.terms {
            let d = c.denom();
            den = num_integer::lcm(den.clone(), d.abs());
        }
        let mut num = [0i64; 15];
        for (m, c) in &poly.terms {
            let var = m
                .exps
                .iter()
                .position(|&e| e > 0)
                .expect("rewrite rows are linear forms");
            let scaled: BigRational = c * BigRational::from_integer(den.clone());
            debug_assert!(scaled.is_integer());
            num[var] = i64::try_from(scaled.to_integer())
                .map_err(|_| crate::error::Error::Invariant("rewrite coefficient exceeds i64".into()))?;
        }
        rows.push(ImageRow {
            num,
            den: i64::try_from(den)
                .map_err(|_| crate::error::Error::Invariant("rewrite denominator exceeds i64".into()))?,
        });
    }
    Ok(rows)
}

/// value of coordinate g at the point, as (numerator, denominator)
fn coord_value(rows: &[ImageRow], g: usize, pt: &[i8; 15]) -> (i64, i64) {
    let row = &rows[g];
    let mut n = 0i64;
    for (c, &x) in row.num.iter().zip(pt.iter()) {
        n += c * x as i64;
    }
    (n, row.den)
}

/// ∏ n_g/d_g over `l` equals ∏ over `r`? Exact via i128 cross products,
/// escalating to BigInt on overflow.
fn binomial_holds(rows: &[ImageRow], l: &[usize], r: &[usize], pt: &[i8; 15]) -> bool {
    let mut ln: i128 = 1;
    let mut ld: i128 = 1;
    let mut rn: i128 = 1;
    let mut rd: i128 = 1;
    let mut overflow = false;
    for &g in l {
        let (n, d) = coord_value(rows, g, pt);
        match (ln.checked_mul(n as i128), ld.checked_mul(d as i128)) {
            (Some(a), Some(b)) => {
                ln = a;
                ld = b;
            }
            _ => {
                overflow = true;
                break;
            }
        }
    }
    if !overflow {
        for &g in r {
            let (n, d) = coord_value(rows, g, pt);
            match (rn.checked_mul(n as i128), rd.checked_mul(d as i128)) {
                (Some(a), Some(b)) => {
                    rn = a;
                    rd = b;
                }
                _ => {
                    overflow = true;
                    break;
                }
            }
        }
    }
    if !overflow {
        if let (Some(a), Some(b)) = (ln.checked_mul(rd), rn.checked_mul(ld)) {
            return a == b;
        }
    }
    // exact fallback
    let prod = |s: &[usize]| {
        let mut n = BigInt::from(1);
        let mut d = BigInt::from(1);
        for &g in s {
            let (vn, vd) = coord_value(rows, g, pt);
            n *= BigInt::from(vn);
            d *= BigInt::from(vd);
        }
        (n, d)
    };
    let (an, ad) = prod(l);
    let (bn, bd) = prod(r);
    an * bd == bn * ad
}

fn decode(mut idx: u32) -> Option<[i8; 15]> {
    let mut pt = [0i8; 15];
    for slot in pt.iter_mut() {
        let d = idx % 3;
        idx /= 3;
        *slot = match d {
            0 => 0,
            1 => 1,
            _ => -1,
        };
    }
    // projective representative: first nonzero coordinate must be +1
    match pt.iter().find(|&&x| x != 0) {
        Some(1) => Some(pt),
        _ => None,
    }
}

/// Scan all (3¹⁵ − 1)/2 projective representatives.
pub fn brute_force_extra_points(system: &GoepelSystem) -> Result<ScanResult> {
    let rows = integer_images(system)?;
    let supports = system.generator_supports();
    let (cubics, quartics) = supports.split_at(system.cubic_picked.len());
    let total: u32 = 3u32.pow(15);
    let merged = (0..total)
        .into_par_iter()
        .fold(
            || (0usize, 0usize, 0usize, Vec::new()),
            |mut acc, idx| {
                if let Some(pt) = decode(idx) {
                    acc.0 += 1;
                    if cubics.iter().all(|(l, r)| binomial_holds(&rows, l, r, &pt)) {
                        acc.1 += 1;
                        if quartics.iter().all(|(l, r)| binomial_holds(&rows, l, r, &pt)) {
                            acc.2 += 1;
                        } else {
                            acc.3.push(pt);
                        }
                    }
                }
                acc
            },
        )
        .reduce(
            || (0, 0, 0, Vec::new()),
            |mut a, b| {
                a.0 += b.0;
                a.1 += b.1;
                a.2 += b.2;
                a.3.extend(b.3);
                a
            },
        );
    let mut extra = merged.3;
    extra.sort();
    Ok(ScanResult {
        representatives: merged.0,
        on_a: merged.1,
        on_b: merged.2,
        extra,
    })
}

/// Is the printed example point among the scan's extra points (up to the
/// projective representative convention, which may flip the overall sign)?
pub fn contains_point(result: &ScanResult, point: &[i64; 15]) -> bool {
    let as_i8 = |sign: i64| -> [i8; 15] {
        let mut p = [0i8; 15];
        for (o, &v) in p.iter_mut().zip(point.iter()) {
            *o = (v * sign) as i8;
        }
        p
    };
    let rep = match point.iter().find(|&&x| x != 0) {
        Some(&v) if v < 0 => as_i8(-1),
        _ => as_i8(1),
    };
    result.extra.contains(&rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_counts_projective_representatives() {
        let n = (0..3u32.pow(15)).filter(|&i| decode(i).is_some()).count();
        assert_eq!(n, (3usize.pow(15) - 1) / 2);
    }
}
