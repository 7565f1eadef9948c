//! End-to-end assembly: the exact relation system, the ideals 𝔞 and 𝔟, the
//! Noether normalization data, and the heavy certifications (Hilbert data,
//! cluster eliminant, smoothness at Galois-orbit representatives, extra
//! points).

pub mod report;
pub mod scan;
pub mod stages;

use crate::error::{Error, Result};
use crate::groebner::hilbert::{hilbert_data, hilbert_function_prefix, HilbertData};
use crate::groebner::zerodim::QuotientAlgebra;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::poly::coeff::{Coeff, Fp, Fq, FqCtx};
use crate::poly::mono::Order;
use crate::poly::ring::{Poly, Ring};
use crate::poly::univar::{ddf_degree_multiset, squarefree_part, UPoly};
use crate::relations::{self, reduce, search, BasisSelection, GopelMonomialTable};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use std::sync::Arc;

/// The 7 explicit linear forms of the Noether normalization, as integer
/// coefficient vectors over Y₁..Y₁₅.
pub const NOETHER_FORMS: [[i64; 15]; 7] = [
    [3, 2, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [9, 4, 3, 3, 1, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0],
    [-9, -2, -3, -3, -2, 0, 1, 0, 0, -1, 1, 0, 0, 0, 0],
    [11, 5, 4, 4, 1, -1, 0, 0, 1, 1, -1, 1, 0, 0, 0],
    [24, 9, 7, 9, 2, -3, -1, -1, 2, 2, -2, 1, 1, 0, 0],
    [9, 1, 4, 4, 4, 2, -1, 1, 0, 1, -1, 1, 0, 1, 0],
    [-25, -8, -6, -9, -1, 4, 1, 2, -1, -1, 2, 0, -1, 1, 1],
];

/// The printed example of a point on V(𝔞) ∖ V(𝔟).
pub const EXTRA_POINT: [i64; 15] = [-1, 0, 1, 0, 1, 0, 1, -1, 1, 0, 0, 0, 0, 0, 0];

/// The complete exact relation system: table, basis, and the 35+35
/// generators of 𝔞 and 𝔟 with their binomial supports.
pub struct GoepelSystem {
    pub table: GopelMonomialTable,
    pub trinomials: Vec<relations::Trinomial>,
    pub signs: Vec<[i8; 3]>,
    pub sel: BasisSelection,
    pub cubic_binomials: Vec<([usize; 3], [usize; 3])>,
    pub cubic_picked: Vec<usize>,
    pub cubic_gens: Vec<Poly<BigRational>>,
    pub quartic_binomials: Vec<([usize; 4], [usize; 4])>,
    pub quartic_picked: Vec<usize>,
    pub quartic_gens: Vec<Poly<BigRational>>,
    pub dim_a4: usize,
    pub dim_b4: usize,
}

impl GoepelSystem {
    /// Deterministic full build from the frozen sign table.
    pub fn build() -> Result<Self> {
        let table = GopelMonomialTable::build(3)?;
        let trinomials = relations::find_trinomials(&table);
        let signs = relations::load_trinomial_signs(&trinomials)?;
        let rels = relations::linear_relations(&trinomials, &signs);
        let basis_groups = relations::printed_basis_groups(&table)?;
        let sel = relations::select_basis(&table, &rels, &basis_groups)?;
        let cubic_binomials = search::cubic_relations(&table);
        let (cubic_gens, cubic_picked, cubic_dim) =
            reduce::independent_cubics(&sel, &cubic_binomials);
        if cubic_dim != 35 {
            return Err(Error::Invariant(format!("cubic span dimension {cubic_dim} ≠ 35")));
        }
        let quartic_binomials = search::quartic_relations(&table);
        let qr = reduce::quartic_generators_fp(&sel, &cubic_gens, &quartic_binomials, 557)?;
        let quartic_gens = qr
            .selected
            .iter()
            .map(|&i| {
                let (l, r) = quartic_binomials[i];
                relations::reduce_binomial(&sel, &l, &r)
            })
            .collect();
        Ok(GoepelSystem {
            table,
            trinomials,
            signs,
            sel,
            cubic_binomials,
            cubic_picked,
            cubic_gens,
            quartic_binomials,
            quartic_picked: qr.selected,
            quartic_gens,
            dim_a4: qr.dim_a4,
            dim_b4: qr.dim_b4,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.sel.y15_ring
    }

    /// Binomial supports of the 70 generators of 𝔟 (35 cubic, then 35
    /// quartic), as (lhs groups, rhs groups).
    pub fn generator_supports(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut out = Vec::with_capacity(70);
        for &i in &self.cubic_picked {
            let (l, r) = self.cubic_binomials[i];
            out.push((l.to_vec(), r.to_vec()));
        }
        for &i in &self.quartic_picked {
            let (l, r) = self.quartic_binomials[i];
            out.push((l.to_vec(), r.to_vec()));
        }
        out
    }

    pub fn a_gens_fp(&self, p: u64) -> Vec<Poly<Fp>> {
        self.cubic_gens.iter().map(|f| poly_to_fp(f, p)).collect()
    }

    pub fn b_gens_fp(&self, p: u64) -> Vec<Poly<Fp>> {
        let mut out = self.a_gens_fp(p);
        out.extend(self.quartic_gens.iter().map(|f| poly_to_fp(f, p)));
        out
    }
}

pub fn poly_to_fp(f: &Poly<BigRational>, p: u64) -> Poly<Fp> {
    Poly {
        terms: f
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let v = reduce::rat_mod_p(c, p);
                if v == 0 {
                    None
                } else {
                    Some((m.clone(), Fp { val: v, p }))
                }
            })
            .collect(),
    }
}

/// The Noether forms as polynomials over any coefficient domain.
pub fn noether_polys<C: Coeff>(one: &C, ring: &Ring) -> Vec<Poly<C>> {
    NOETHER_FORMS
        .iter()
        .map(|row| {
            let terms = row
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (crate::poly::mono::Monomial::var(15, i), one.from_i64(c)))
                .collect();
            Poly::normalize(terms, ring)
        })
        .collect()
}

/// Substitution images eliminating Y₉..Y₁₅ through the triangular Noether
/// forms: ℓ₁ ↦ `l1_value` (0 for the homogeneous artinian check, 1 for the
/// cluster chart) and ℓ₂..ℓ₇ ↦ 0. Returns the image of each of the 15
/// variables in the 8-variable ring.
pub fn noether_images<C: Coeff>(one: &C, l1_value: i64) -> (Vec<Poly<C>>, Ring) {
    let ring8 = Ring::numbered("Y", 8, Order::GrevLex);
    let mut images: Vec<Poly<C>> = (0..8).map(|i| Poly::var(i, one, 8)).collect();
    // solve ℓ_k = rhs for its last variable Y_{8+k} in order
    for (k, row) in NOETHER_FORMS.iter().enumerate() {
        let rhs = if k == 0 { l1_value } else { 0 };
        let solved_var = 8 + k;
        debug_assert_eq!(row[solved_var], 1, "Noether forms must be triangular");
        let mut img = Poly::constant(one.from_i64(rhs), 8);
        for (j, &c) in row.iter().enumerate() {
            if j == solved_var || c == 0 {
                continue;
            }
            img = img.sub(&images[j].scale(&one.from_i64(c)), &ring8);
        }
        images.push(img);
    }
    (images, ring8)
}

/// Hilbert certification of 𝔟: projective dimension, degree, and the
/// freeness certificate through the artinian quotient.
pub struct HilbertAnalysis {
    pub b_hilbert: HilbertData,
    /// Hilbert function of the artinian quotient by all 7 Noether forms.
    pub artinian_hf: Vec<BigInt>,
    pub artinian_length: BigInt,
    pub numerator_nonnegative: bool,
    /// Numerator of 𝔟 equals the artinian Hilbert function entrywise.
    pub freeness_match: bool,
}

/// Gröbner basis of 𝔟 over F_p (the single heaviest computation).
pub fn b_groebner(system: &GoepelSystem, p: u64) -> Result<GroebnerBasis<Fp>> {
    buchberger(&system.b_gens_fp(p), system.ring())
}

pub fn analyze_hilbert(
    system: &GoepelSystem,
    b_gb: &GroebnerBasis<Fp>,
    p: u64,
) -> Result<HilbertAnalysis> {
    let b_hilbert = hilbert_data(&b_gb.leading_monomials(), 15);
    // artinian quotient: substitute the 7 forms away (homogeneously)
    let one = Fp { val: 1, p };
    let (images, ring8) = noether_images(&one, 0);
    let gens8: Vec<Poly<Fp>> = system
        .b_gens_fp(p)
        .iter()
        .map(|f| f.substitute(&images, &ring8))
        .collect();
    let gb8 = buchberger(&gens8, &ring8)?;
    let h8 = hilbert_data(&gb8.leading_monomials(), 8);
    if h8.dimension != 0 {
        return Err(Error::Invariant(format!(
            "quotient by the Noether forms is not artinian (dimension {})",
            h8.dimension
        )));
    }
    let upto = h8.numerator.len().max(b_hilbert.reduced_numerator.len()) + 1;
    let mut artinian_hf = hilbert_function_prefix(&h8, upto);
    while artinian_hf.last() == Some(&BigInt::zero()) {
        artinian_hf.pop();
    }
    let artinian_length: BigInt = artinian_hf.iter().sum();
    let numerator_nonnegative = b_hilbert
        .reduced_numerator
        .iter()
        .all(|c| c >= &BigInt::zero());
    let freeness_match = artinian_hf == b_hilbert.reduced_numerator;
    Ok(HilbertAnalysis {
        b_hilbert,
        artinian_hf,
        artinian_length,
        numerator_nonnegative,
        freeness_match,
    })
}

/// The cluster 𝔠 = 𝔟 + (last 6 Noether forms), analyzed on the chart
/// ℓ₁ = 1 (certified admissible by the artinian check: no cluster point has
/// ℓ₁ = 0).
pub struct ClusterAnalysis {
    pub quotient_dim: usize,
    pub separating_form: Vec<u64>,
    pub eliminant: UPoly,
    pub squarefree: bool,
    pub ddf_degrees: Vec<usize>,
    /// Coordinate polynomials g_i(ℓ) for the 8 chart variables,
    /// little-endian coefficients over F_p.
    pub coords: Vec<Vec<u64>>,
    pub p: u64,
}

pub fn analyze_cluster(system: &GoepelSystem, p: u64, seed: u64) -> Result<ClusterAnalysis> {
    let one = Fp { val: 1, p };
    let (images, ring8) = noether_images(&one, 1);
    let gens8: Vec<Poly<Fp>> = system
        .b_gens_fp(p)
        .iter()
        .map(|f| f.substitute(&images, &ring8))
        .collect();
    let gb8 = buchberger(&gens8, &ring8)?;
    let alg = QuotientAlgebra::new(&gb8, &ring8, 4000)?;
    let dim = alg.dim();
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
    for _attempt in 0..24 {
        let coeffs: Vec<Fp> = (0..8).map(|_| Fp::new(rng.gen_range(0..p as i64), p)).collect();
        let (mp, krylov) = alg.minimal_polynomial(&coeffs)?;
        if mp.len() != dim + 1 {
            continue; // not separating
        }
        let eliminant = UPoly::new(mp.iter().map(|c| c.val).collect(), p);
        let squarefree = squarefree_part(&eliminant)?.degree() == eliminant.degree();
        if !squarefree {
            continue;
        }
        let ddf = crate::poly::univar::distinct_degree_factorization(&eliminant)?;
        let ddf_degrees = ddf_degree_multiset(&ddf);
        // shape position: solve for each chart coordinate in powers of ℓ
        let cols = dim;
        let mut kmat = crate::linalg::Matrix::zeros(dim, cols, &one);
        for (j, v) in krylov.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                kmat.set(i, j, x.clone());
            }
        }
        let mut coords = Vec::with_capacity(8);
        for var in 0..8 {
            let xv = alg.vector_of(&crate::groebner::normal_form(
                &Poly::var(var, &one, 8),
                &gb8.polys,
                &ring8,
            ))?;
            let c = kmat.solve(&xv)?;
            coords.push(c.iter().map(|x| x.val).collect());
        }
        return Ok(ClusterAnalysis {
            quotient_dim: dim,
            separating_form: coeffs.iter().map(|c| c.val).collect(),
            eliminant,
            squarefree,
            ddf_degrees,
            coords,
            p,
        });
    }
    Err(Error::NoSeparatingForm)
}

fn fq_scale(x: &Fq, s: u64) -> Fq {
    let p = x.ctx.p;
    Fq {
        coeffs: x
            .coeffs
            .iter()
            .map(|&c| (c as u128 * s as u128 % p as u128) as u64)
            .collect(),
        ctx: x.ctx.clone(),
    }
}

/// Evaluate a little-endian F_p coefficient vector at an F_q element.
fn horner_fq(coeffs: &[u64], x: &Fq) -> Fq {
    let mut acc = x.zero();
    for &c in coeffs.iter().rev() {
        acc = Coeff::mul(&acc, x);
        acc = acc.add(&Fq::scalar(c, x.ctx.clone()));
    }
    acc
}

/// One representative point per Galois orbit: for each distinct-degree
/// factor h_k of the eliminant, the point with ℓ-value the class of z in
/// F_p[z]/(h_k), lifted to all 15 coordinates.
pub struct OrbitRepresentative {
    pub field_degree: usize,
    /// Full 15-coordinate point over F_{p^k}.
    pub point: Vec<Fq>,
}

pub fn orbit_representatives(cluster: &ClusterAnalysis) -> Result<Vec<OrbitRepresentative>> {
    let p = cluster.p;
    let ddf = crate::poly::univar::distinct_degree_factorization(&cluster.eliminant)?;
    let mut out = Vec::new();
    for (d, factor) in &ddf {
        // each component of degree d·m splits into m degree-d irreducibles;
        // a representative needs one irreducible factor — when the component
        // is already irreducible (m = 1) it is the factor itself
        if factor.degree() != *d {
            return Err(Error::Invariant(
                "distinct-degree component is not irreducible; representative extraction \
                 needs equal-degree splitting"
                    .into(),
            ));
        }
        let ctx = Arc::new(FqCtx {
            p,
            modulus: factor.monic()?.coeffs.clone(),
        });
        let z = Fq::gen(ctx.clone());
        // chart coordinates from shape position
        let coords8: Vec<Fq> = cluster
            .coords
            .iter()
            .map(|g| horner_fq(g, &z))
            .collect();
        // lift through the Noether substitution to all 15 coordinates
        let one_q = z.one();
        let (images, ring8) = noether_images(&one_q, 1);
        let point: Vec<Fq> = images.iter().map(|img| {
            let _ = &ring8;
            img.evaluate(&coords8)
        }).collect();
        out.push(OrbitRepresentative {
            field_degree: *d,
            point,
        });
    }
    Ok(out)
}

/// Rank of the Jacobian of the 70 binomial generators of 𝔟 at a point given
/// in the 15 basis coordinates over F_{p^k}, via the chain rule through the
/// rewriting map (avoids expanding dense derivatives over big extensions).
pub fn jacobian_rank_via_supports(
    system: &GoepelSystem,
    point15: &[Fq],
    p: u64,
) -> Result<usize> {
    let images = reduce::basis_images_fp(&system.sel, p);
    let zero = point15[0].zero();
    // values of all 135 Göpel coordinates
    let values: Vec<Fq> = images
        .iter()
        .map(|row| {
            let mut acc = zero.clone();
            for (j, &c) in row.iter().enumerate() {
                if c != 0 {
                    acc = acc.add(&fq_scale(&point15[j], c));
                }
            }
            acc
        })
        .collect();
    let supports = system.generator_supports();
    // exact on-variety check: each binomial's two products agree
    for (l, r) in &supports {
        let prod = |s: &[usize]| {
            s.iter()
                .fold(zero.one(), |acc, &g| Coeff::mul(&acc, &values[g]))
        };
        if prod(l) != prod(r) {
            return Err(Error::PointNotOnVariety);
        }
    }
    let rows: Vec<Vec<Fq>> = supports
        .iter()
        .map(|(l, r)| {
            let mut row = vec![zero.clone(); 15];
            let mut side = |groups: &[usize], negate: bool| {
                for (i, &g) in groups.iter().enumerate() {
                    // ∂/∂v_g = product of the other values
                    let mut d = zero.one();
                    for (j, &h) in groups.iter().enumerate() {
                        if j != i {
                            d = Coeff::mul(&d, &values[h]);
                        }
                    }
                    if negate {
                        d = d.neg();
                    }
                    for (col, &c) in images[g].iter().enumerate() {
                        if c != 0 {
                            row[col] = row[col].add(&fq_scale(&d, c));
                        }
                    }
                }
            };
            side(l, false);
            side(r, true);
            row
        })
        .collect();
    crate::linalg::Matrix::from_rows(rows).rank()
}

/// Re-derive a Noether normalization independently: random linear forms
/// until the quotient is artinian (finiteness test), guarding the embedded
/// coefficients against transcription errors.
pub fn rederive_noether(system: &GoepelSystem, p: u64, seed: u64) -> Result<bool> {
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
    let ring15 = system.ring().clone();
    let gens = system.b_gens_fp(p);
    for _ in 0..8 {
        let forms: Vec<Poly<Fp>> = (0..7)
            .map(|_| {
                let terms = (0..15)
                    .map(|i| {
                        (
                            crate::poly::mono::Monomial::var(15, i),
                            Fp::new(rng.gen_range(0..p as i64), p),
                        )
                    })
                    .collect();
                Poly::normalize(terms, &ring15)
            })
            .collect();
        let mut all = gens.clone();
        all.extend(forms);
        let gb = buchberger(&all, &ring15)?;
        let h = hilbert_data(&gb.leading_monomials(), 15);
        if h.dimension == 0 {
            return Ok(true);
        }
    }
    Ok(false)
}
