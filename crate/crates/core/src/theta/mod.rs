//! High-precision evaluation of theta constants and Göpel forms on the
//! Siegel upper half space, plus numerical discovery of the relations whose
//! signs the classical literature leaves unstated.

pub mod complex;
pub mod relations;

pub use complex::Complex;

use crate::error::{Error, Result};
use crate::f2::{even_table, Characteristic, GopelGroup};
use rand::Rng;

/// A point Z = X + iY of the Siegel upper half space 𝓗_g together with the
/// target absolute accuracy for evaluations at it.
#[derive(Debug, Clone)]
pub struct SiegelPoint {
    pub genus: usize,
    /// Row-major g×g complex entries; symmetric.
    pub z: Vec<Complex>,
    /// Target absolute error for theta evaluations.
    pub precision: f64,
    /// Working significand size in bits.
    pub prec_bits: u32,
    /// Certified lower bound for the smallest eigenvalue of Y = Im Z.
    pub y_min_eig: f64,
}

/// Working precision: enough headroom below the requested accuracy that
/// products of dozens of theta values stay trustworthy.
pub fn bits_for(precision: f64) -> u32 {
    let need = (-precision.log2()).ceil() as u32;
    (need + 96).max(192)
}

impl SiegelPoint {
    pub fn new(genus: usize, z: Vec<Complex>, precision: f64) -> Result<Self> {
        assert_eq!(z.len(), genus * genus);
        for i in 0..genus {
            for j in 0..i {
                if z[i * genus + j] != z[j * genus + i] {
                    return Err(Error::Invariant("Siegel point must be symmetric".into()));
                }
            }
        }
        let mut y: Vec<f64> = z.iter().map(|c| c.im.to_f64()).collect();
        let min_eig = sym_min_eigenvalue(&mut y, genus);
        if !(min_eig > 0.0) {
            return Err(Error::NotPositiveDefinite);
        }
        let prec_bits = bits_for(precision);
        Ok(SiegelPoint {
            genus,
            z,
            precision,
            prec_bits,
            y_min_eig: min_eig,
        })
    }

    /// Purely imaginary diagonal point i·t·E (t > 0).
    pub fn diagonal_imaginary(genus: usize, t: f64, precision: f64) -> Result<Self> {
        let bits = bits_for(precision);
        let mut z = vec![Complex::zero(bits); genus * genus];
        for i in 0..genus {
            z[i * genus + i] = Complex::from_f64(0.0, t, bits);
        }
        SiegelPoint::new(genus, z, precision)
    }

    /// Random well-conditioned point: X symmetric with entries in [−1/2, 1/2],
    /// Y = D + εS with D diagonal in [1, 2] and S symmetric in [−1, 1].
    pub fn sample<R: Rng>(genus: usize, precision: f64, rng: &mut R) -> Result<Self> {
        let bits = bits_for(precision);
        let eps = 0.1;
        let mut z = vec![Complex::zero(bits); genus * genus];
        for i in 0..genus {
            for j in i..genus {
                let x: f64 = rng.gen_range(-0.5..0.5);
                let y = if i == j {
                    rng.gen_range(1.0..2.0)
                } else {
                    eps * rng.gen_range(-1.0..1.0)
                };
                let c = Complex::from_f64(x, y, bits);
                z[i * genus + j] = c.clone();
                z[j * genus + i] = c;
            }
        }
        SiegelPoint::new(genus, z, precision)
    }

    /// The point s·Z with the same precision target.
    pub fn scaled(&self, s: f64) -> Result<SiegelPoint> {
        SiegelPoint::new(
            self.genus,
            self.z.iter().map(|c| c.scale_f64(s)).collect(),
            self.precision,
        )
    }

    /// Lattice truncation radius guaranteeing the requested absolute error.
    pub fn truncation_radius(&self) -> Result<usize> {
        truncation_radius(self.y_min_eig, self.genus, self.precision)
    }
}

/// Smallest eigenvalue of a symmetric matrix by cyclic Jacobi rotations
/// (f64 accuracy is ample: it only drives truncation-radius selection).
fn sym_min_eigenvalue(a: &mut [f64], n: usize) -> f64 {
    if n == 1 {
        return a[0];
    }
    for _sweep in 0..64 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += a[i * n + j].abs();
            }
        }
        if off < 1e-14 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).fold(f64::INFINITY, f64::min)
}

/// Smallest box radius R such that the lattice tail beyond [−R, R]^g is below
/// the target absolute error.
pub fn truncation_radius(lambda_min: f64, genus: usize, eps: f64) -> Result<usize> {
    let pi = std::f64::consts::PI;
    for r in 2usize..=60 {
        let mut tail = 0.0f64;
        for k in r + 1..r + 200 {
            let shell =
                ((2 * k + 1) as f64).powi(genus as i32) - ((2 * k - 1) as f64).powi(genus as i32);
            tail += shell * (-pi * lambda_min * (k as f64 - 0.5).powi(2)).exp();
            if tail > eps {
                break;
            }
        }
        if tail < eps * 0.5 {
            return Ok(r);
        }
    }
    Err(Error::PrecisionUnachievable)
}

/// Z[v] = v′Zv for a real vector v (exact in f64 for half-integer v).
fn quad_form(z: &[Complex], g: usize, v: &[f64], prec: u32) -> Complex {
    let mut acc = Complex::zero(prec);
    for i in 0..g {
        let c = v[i] * v[i];
        if c != 0.0 {
            acc = acc.add(&z[i * g + i].scale_f64(c));
        }
        for j in i + 1..g {
            let c = 2.0 * v[i] * v[j];
            if c != 0.0 {
                acc = acc.add(&z[i * g + j].scale_f64(c));
            }
        }
    }
    acc
}

fn for_each_lattice_point<F: FnMut(&[i64])>(g: usize, r: i64, mut f: F) {
    let mut n = vec![-r; g];
    loop {
        f(&n);
        let mut k = 0;
        loop {
            n[k] += 1;
            if n[k] <= r {
                break;
            }
            n[k] = -r;
            k += 1;
            if k == g {
                return;
            }
        }
    }
}

/// The thetanullwert ϑ[m](Z) = Σ_n e^{πi{Z[n+a/2] + b′(n+a/2)}}.
/// Odd characteristics yield exactly 0 without any summation.
pub fn theta_nullwert(m: &Characteristic, point: &SiegelPoint) -> Result<Complex> {
    let g = point.genus;
    if m.genus as usize != g {
        return Err(Error::GenusMismatch(m.genus as usize, g));
    }
    let prec = point.prec_bits;
    if !m.is_even() {
        return Ok(Complex::zero(prec));
    }
    let r = point.truncation_radius()? as i64;
    theta_sum_with_radius(m, point, r)
}

/// Same series with an explicit truncation radius (exposed for the
/// radius-doubling soundness check).
pub fn theta_sum_with_radius(
    m: &Characteristic,
    point: &SiegelPoint,
    r: i64,
) -> Result<Complex> {
    let g = point.genus;
    let prec = point.prec_bits;
    let a: Vec<f64> = (0..g).map(|i| ((m.a() >> i) & 1) as f64).collect();
    let b: Vec<f64> = (0..g).map(|i| ((m.b() >> i) & 1) as f64).collect();
    let mut acc = Complex::zero(prec);
    let mut v = vec![0.0f64; g];
    for_each_lattice_point(g, r, |n| {
        for i in 0..g {
            v[i] = n[i] as f64 + a[i] / 2.0;
        }
        let mut w = quad_form(&point.z, g, &v, prec);
        let bv: f64 = (0..g).map(|i| b[i] * v[i]).sum();
        if bv != 0.0 {
            w.re += bv;
        }
        acc = acc.add(&Complex::exp_pi_i(&w));
    });
    Ok(acc)
}

/// Second-kind constant f_a(Z) = ϑ[(a;0)](2Z) = Σ_n e^{2πi Z[n+a/2]},
/// evaluated by direct summation (the independent code path).
pub fn second_kind_direct(a_bits: u16, point: &SiegelPoint) -> Result<Complex> {
    let g = point.genus;
    let prec = point.prec_bits;
    let r = point.truncation_radius()? as i64;
    let a: Vec<f64> = (0..g).map(|i| ((a_bits >> i) & 1) as f64).collect();
    let mut acc = Complex::zero(prec);
    let mut v = vec![0.0f64; g];
    for_each_lattice_point(g, r, |n| {
        for i in 0..g {
            v[i] = n[i] as f64 + a[i] / 2.0;
        }
        let w = quad_form(&point.z, g, &v, prec).scale_f64(2.0);
        acc = acc.add(&Complex::exp_pi_i(&w));
    });
    Ok(acc)
}

/// All theta data at one Siegel point: the even thetanullwerte (indexed
/// parallel to the canonical even table) and the 2^g second-kind values.
#[derive(Debug, Clone)]
pub struct ThetaSample {
    pub point: SiegelPoint,
    pub theta: Vec<Complex>,
    pub second_kind: Vec<Complex>,
}

impl ThetaSample {
    /// Evaluate every even theta constant in one lattice pass per a-pattern:
    /// for fixed a the series of all compatible b differ only by the real
    /// sign (−1)^{b′n + (b′a)/2}, so one complex exponential serves them all.
    pub fn new(point: SiegelPoint) -> Result<Self> {
        let g = point.genus;
        let prec = point.prec_bits;
        let table = even_table(g as u8)?;
        let r = point.truncation_radius()? as i64;

        // group even characteristics by their a-part
        let mut by_a: Vec<(u16, Vec<usize>)> = Vec::new();
        for (idx, m) in table.iter().enumerate() {
            match by_a.iter_mut().find(|(a, _)| *a == m.a()) {
                Some((_, v)) => v.push(idx),
                None => by_a.push((m.a(), vec![idx])),
            }
        }

        let mut theta = vec![Complex::zero(prec); table.len()];
        let mut v = vec![0.0f64; g];
        for (a_bits, members) in &by_a {
            // precompute per-member data: b bits and the constant (b′a)/2 parity
            let consts: Vec<(u16, u32)> = members
                .iter()
                .map(|&idx| {
                    let b = table[idx].b();
                    let ba = (b & a_bits).count_ones();
                    debug_assert_eq!(ba % 2, 0, "even characteristic has even b'a");
                    (b, (ba / 2) % 2)
                })
                .collect();
            for_each_lattice_point(g, r, |n| {
                for i in 0..g {
                    v[i] = n[i] as f64 + ((a_bits >> i) & 1) as f64 / 2.0;
                }
                let t = Complex::exp_pi_i(&quad_form(&point.z, g, &v, prec));
                for (k, &(b, half_ba)) in consts.iter().enumerate() {
                    let mut parity = half_ba;
                    for i in 0..g {
                        if (b >> i) & 1 == 1 {
                            parity = (parity + n[i].rem_euclid(2) as u32) % 2;
                        }
                    }
                    let idx = members[k];
                    theta[idx] = if parity == 0 {
                        theta[idx].add(&t)
                    } else {
                        theta[idx].sub(&t)
                    };
                }
            });
        }

        // second-kind values by doubling the period matrix and reusing the
        // grouped sums is possible, but the direct path keeps this an
        // independent check target; it is cheap at these sizes.
        let mut second_kind = Vec::with_capacity(1 << g);
        for a_bits in 0..(1u16 << g) {
            second_kind.push(second_kind_direct(a_bits, &point)?);
        }

        Ok(ThetaSample {
            point,
            theta,
            second_kind,
        })
    }

    /// Product of the theta values at the given 1-based even-table indices.
    pub fn product(&self, indices_1based: &[usize]) -> Complex {
        let mut acc = Complex::one(self.point.prec_bits);
        for &i in indices_1based {
            acc = acc.mul(&self.theta[i - 1]);
        }
        acc
    }

    /// Θ_g = product of all even theta constants.
    pub fn theta_g(&self) -> Complex {
        let mut acc = Complex::one(self.point.prec_bits);
        for t in &self.theta {
            acc = acc.mul(t);
        }
        acc
    }
}

/// ϑ_G = ∏_{m∈M} ϑ[m] over the even coset M of G.
pub fn gopel_form(group: &GopelGroup, sample: &ThetaSample) -> Result<Complex> {
    if group.genus as usize != sample.point.genus {
        return Err(Error::GenusMismatch(group.genus as usize, sample.point.genus));
    }
    Ok(sample.product(&group.coset_indices))
}

/// s_G = ∏_{m∉M} ϑ[m] over the even characteristics outside the coset.
pub fn reciprocal_form(group: &GopelGroup, sample: &ThetaSample) -> Result<Complex> {
    if group.genus as usize != sample.point.genus {
        return Err(Error::GenusMismatch(group.genus as usize, sample.point.genus));
    }
    let in_coset: Vec<bool> = {
        let mut v = vec![false; sample.theta.len()];
        for &i in &group.coset_indices {
            v[i - 1] = true;
        }
        v
    };
    let mut acc = Complex::one(sample.point.prec_bits);
    for (i, t) in sample.theta.iter().enumerate() {
        if !in_coset[i] {
            acc = acc.mul(t);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::{enumerate_gopel_groups, even_table};
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    const PREC: f64 = 1e-20;

    fn sample_g(genus: usize, seed: u64) -> ThetaSample {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let p = SiegelPoint::sample(genus, PREC, &mut rng).unwrap();
        ThetaSample::new(p).unwrap()
    }

    #[test]
    fn odd_characteristic_vanishes_exactly() {
        let p = SiegelPoint::diagonal_imaginary(3, 1.0, PREC).unwrap();
        let odd = Characteristic::from_tuple(&[1, 0, 0, 1, 0, 0]);
        assert!(!odd.is_even());
        let v = theta_nullwert(&odd, &p).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn genus1_value_at_i_matches_direct_sum() {
        let p = SiegelPoint::diagonal_imaginary(1, 1.0, PREC).unwrap();
        let m = Characteristic::from_tuple(&[0, 0]);
        let v = theta_nullwert(&m, &p).unwrap();
        // independent oracle: plain summation of e^{−π n²} over |n| ≤ 50
        let bits = p.prec_bits;
        let pi = rug::Float::with_val(bits, rug::float::Constant::Pi);
        let mut oracle = rug::Float::with_val(bits, 0);
        for n in -50i64..=50 {
            oracle += (-rug::Float::with_val(bits, &pi * (n * n))).exp();
        }
        assert!((v.re.to_f64() - oracle.to_f64()).abs() < 1e-18);
        assert!(v.im.to_f64().abs() < 1e-18);
        assert!((v.re.to_f64() - 1.0864348112).abs() < 1e-9);
    }

    #[test]
    fn genus1_jacobi_identity() {
        let s = sample_g(1, 7);
        let t = even_table(1).unwrap();
        let find = |a: u8, b: u8| {
            t.iter()
                .position(|m| m.tuple() == vec![a, b])
                .unwrap()
        };
        let pow4 = |c: &Complex| c.mul(c).mul(c).mul(c);
        let lhs = pow4(&s.theta[find(0, 0)])
            .sub(&pow4(&s.theta[find(0, 1)]))
            .sub(&pow4(&s.theta[find(1, 0)]));
        assert!(lhs.abs_f64() < 1e-12);
    }

    #[test]
    fn product_identity_all_groups_genus3() {
        let s = sample_g(3, 11);
        let big = s.theta_g();
        for g in enumerate_gopel_groups(3).unwrap() {
            let lhs = gopel_form(&g, &s).unwrap().mul(&reciprocal_form(&g, &s).unwrap());
            let rel = lhs.sub(&big).abs_f64() / big.abs_f64();
            assert!(rel < 1e-10, "group {:?} relative error {rel}", g.coset_indices);
        }
    }

    #[test]
    fn degenerate_limit_selects_standard_group() {
        let p = SiegelPoint::diagonal_imaginary(3, 12.0, 1e-20).unwrap();
        let s = ThetaSample::new(p).unwrap();
        let groups = enumerate_gopel_groups(3).unwrap();
        // the standard group: the one whose coset thetas all have zero
        // quadratic shift, ϑ[(0;b)](itE) → 1 as t → ∞
        let standard = groups
            .iter()
            .find(|g| g.even_coset.iter().all(|m| m.a() == 0))
            .unwrap();
        let val = gopel_form(standard, &s).unwrap();
        assert!((val.re.to_f64() - 1.0).abs() < 1e-10);
        for g in &groups {
            if g.coset_indices != standard.coset_indices {
                assert!(gopel_form(g, &s).unwrap().abs_f64() < 1e-3);
            }
        }
    }

    #[test]
    fn reciprocal_form_has_28_factors_genus3() {
        // weight bookkeeping: 36 even thetas minus the 8 in the coset
        let s = sample_g(3, 3);
        assert_eq!(s.theta.len(), 36);
        let g = &enumerate_gopel_groups(3).unwrap()[0];
        assert_eq!(g.coset_indices.len(), 8);
        assert_eq!(36 - g.coset_indices.len(), 28);
        // and the product relation pins the factor count numerically
        let lhs = gopel_form(g, &s).unwrap().mul(&reciprocal_form(g, &s).unwrap());
        assert!(lhs.sub(&s.theta_g()).abs_f64() / s.theta_g().abs_f64() < 1e-12);
    }

    #[test]
    fn second_kind_two_paths_agree() {
        for genus in 1..=3usize {
            let mut rng = ChaCha20Rng::seed_from_u64(19 + genus as u64);
            let p = SiegelPoint::sample(genus, PREC, &mut rng).unwrap();
            let s = ThetaSample::new(p.clone()).unwrap();
            let doubled = p.scaled(2.0).unwrap();
            for a in 0..(1u16 << genus) {
                let via_theta =
                    theta_nullwert(&Characteristic::new(a, genus as u8), &doubled).unwrap();
                assert!(s.second_kind[a as usize].sub(&via_theta).abs_f64() < 1e-18);
            }
        }
    }

    #[test]
    fn truncation_doubling_changes_nothing() {
        let mut rng = ChaCha20Rng::seed_from_u64(23);
        for genus in 1..=3usize {
            let p = SiegelPoint::sample(genus, PREC, &mut rng).unwrap();
            let r = p.truncation_radius().unwrap() as i64;
            for m in even_table(genus as u8).unwrap().iter().take(4) {
                let v1 = theta_sum_with_radius(m, &p, r).unwrap();
                let v2 = theta_sum_with_radius(m, &p, 2 * r).unwrap();
                assert!(v1.sub(&v2).abs_f64() < p.precision);
            }
        }
    }

    #[test]
    fn grouped_and_single_evaluation_agree() {
        let s = sample_g(3, 5);
        for (idx, m) in even_table(3).unwrap().iter().enumerate().step_by(7) {
            let single = theta_nullwert(m, &s.point).unwrap();
            assert!(s.theta[idx].sub(&single).abs_f64() < 1e-18);
        }
    }

    #[test]
    fn non_positive_definite_rejected() {
        let bits = bits_for(PREC);
        let z = vec![
            Complex::from_f64(0.0, 1.0, bits),
            Complex::from_f64(0.0, 2.0, bits),
            Complex::from_f64(0.0, 2.0, bits),
            Complex::from_f64(0.0, 1.0, bits),
        ];
        assert!(matches!(
            SiegelPoint::new(2, z, PREC),
            Err(Error::NotPositiveDefinite)
        ));
    }
}
