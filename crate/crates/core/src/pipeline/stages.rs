//! Stage runner: each stage verifies a bundle of claims and emits a report
//! fragment plus flat-file artifacts under the output directory.

use super::report::{write_ideal, ClaimsReport};
use super::{scan, GoepelSystem};
use crate::error::{Error, Result};
use crate::f2::{enumerate_gopel_groups, even_coset, even_table, expected_even_count};
use crate::groebner::hilbert::hilbert_data;
use crate::groebner::zerodim::QuotientAlgebra;
use crate::groebner::{buchberger, elim, normal_form, GroebnerBasis};
use crate::poly::coeff::Fp;
use crate::poly::ring::{Poly, Ring};
use crate::poly::univar::{squarefree_part, UPoly};
use crate::relations::{self, reduce, search};
use crate::theta::relations::{find_relations, verify_linear_independence};
use crate::theta::{gopel_form, SiegelPoint, ThetaSample};
use num_traits::Zero;
use rand::SeedableRng;
use std::path::PathBuf;
use std::time::Instant;

pub const STAGES: [&str; 11] = [
    "g1",
    "g2-segre",
    "g2-quadrics",
    "g3-enumerate",
    "g3-relations",
    "g3-ideals",
    "g3-quotient",
    "g3-noether",
    "g3-hilbert",
    "g3-cluster",
    "g3-smooth",
];

#[derive(Debug, Clone)]
pub struct StageConfig {
    pub prime: u64,
    pub precision: f64,
    pub seed: u64,
    pub out_dir: PathBuf,
    /// Re-derive a Noether normalization independently instead of trusting
    /// the embedded forms.
    pub rederive: bool,
}

impl Default for StageConfig {
    fn default() -> Self {
        StageConfig {
            prime: 557,
            precision: 1e-20,
            seed: 20260823,
            out_dir: PathBuf::from("out"),
            rederive: false,
        }
    }
}

impl StageConfig {
    fn report(&self) -> ClaimsReport {
        ClaimsReport::new(self.prime, &format!("{:e}", self.precision), self.seed)
    }
}

fn theta_samples(genus: usize, n: usize, precision: f64, seed: u64) -> Result<Vec<ThetaSample>> {
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| ThetaSample::new(SiegelPoint::sample(genus, precision, &mut rng)?))
        .collect()
}

/// Run one named stage; returns its report fragment (also persisted as
/// `<stage>.report.json` in the output directory).
pub fn run_stage(stage: &str, cfg: &StageConfig) -> Result<ClaimsReport> {
    let mut report = cfg.report();
    match stage {
        "g1" => stage_g1(cfg, &mut report)?,
        "g2-segre" => stage_g2_segre(cfg, &mut report)?,
        "g2-quadrics" => stage_g2_quadrics(cfg, &mut report)?,
        "g3-enumerate" => stage_g3_enumerate(cfg, &mut report)?,
        "g3-relations" => stage_g3_relations(cfg, &mut report)?,
        "g3-ideals" => stage_g3_ideals(cfg, &mut report)?,
        "g3-quotient" => stage_g3_quotient(cfg, &mut report)?,
        "g3-noether" => stage_g3_noether(cfg, &mut report)?,
        "g3-hilbert" => stage_g3_hilbert(cfg, &mut report)?,
        "g3-cluster" => stage_g3_cluster(cfg, &mut report)?,
        "g3-smooth" => stage_g3_smooth(cfg, &mut report)?,
        other => return Err(Error::Invariant(format!("unknown stage `{other}`"))),
    }
    std::fs::create_dir_all(&cfg.out_dir)?;
    report.save(&cfg.out_dir.join(format!("{stage}.report.json")))?;
    Ok(report)
}

fn stage_g1(cfg: &StageConfig, report: &mut ClaimsReport) -> Result<()> {
    let t0 = Instant::now();
    // Jacobi identity among the three even genus-1 theta constants
    let samples = theta_samples(1, 10, cfg.precision, cfg.seed)?;
    let table = even_table(1)?;
    let find = |a: u8, b: u8| table.iter().position(|m| m.tuple() == vec![a, b]).unwrap();
    let mut max_res = 0f64;
    for s in &samples {
        let pow4 = |i: usize| {
            let c = &s.theta[i];
            c.mul(c).mul(&c.mul(c))
        };
        let g2 = pow4(find(0, 0));
        let g0 = pow4(find(0, 1));
        let g1 = pow4(find(1, 0));
        let res = g2.sub(&g0).sub(&g1).abs_f64() / g2.abs_f64();
        max_res = max_res.max(res);
    }
    report.check(
        "g1/jacobi",
        "g₂=g₀+g₁",
        format!("max relative residual below 1e-10: {}", max_res < 1e-10),
        "max relative residual below 1e-10: true",
        t0.elapsed().as_millis(),
    );
    // recover the quadric among the three Göpel products f_i = ϑ_G⁴
    let t0 = Instant::now();
    let groups = enumerate_gopel_groups(1)?;
    let rows: Vec<Vec<crate::theta::Complex>> = samples
        .iter()
        .map(|s| {
            groups
                .iter()
                .map(|g| {
                    let v = gopel_form(g, s)?;
                    Ok(v.mul(&v).mul(&v.mul(&v)))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let (train, fresh) = rows.split_at(7);
    let rels = find_relations(train, 2, fresh)?;
    let quadric_ok = rels.relations.len() == 1 && {
        let rel = &rels.relations[0];
        let coeff = |e: &[u8]| {
            let pos = rels.monomials.iter().position(|m| m == e).unwrap();
            rel[pos].clone()
        };
        let f0f1 = coeff(&[1, 1, 0]);
        let f0f2 = coeff(&[1, 0, 1]);
        let f1f2 = coeff(&[0, 1, 1]);
        f0f1 == -f0f2.clone() && f0f2 == f1f2 && !f0f1.is_zero()
    };
    report.check(
        "g1/quadric",
        "f0f1=f0f2+f1f2",
        format!("unique quadric with signature f0f1=f0f2+f1f2: {quadric_ok}"),
        "unique quadric with signature f0f1=f0f2+f1f2: true",
        t0.elapsed().as_millis(),
    );
    Ok(())
}

fn stage_g2_segre(cfg: &StageConfig, report: &mut ClaimsReport) -> Result<()> {
    // exact side: 15 trinomial configurations spanning rank 10, and the
    // cubic binomials contributing exactly 1 generator beyond the span
    let t0 = Instant::now();
    let table = relations::GopelMonomialTable::build(2)?;
    let trinomials = relations::find_trinomials(&table);
    let signs = relations::discover_trinomial_signs(&table, &trinomials, 3, cfg.seed)?;
    let rels = relations::linear_relations(&trinomials, &signs);
    let sel = relations::reselect_basis(&table, &rels)?;
    report.check(
        "g2-segre/linear-rank",
        "isomorphic to the Segre cubic",
        format!("{} trinomial configurations, relation rank {}", trinomials.len(), sel.relation_dim),
        "15 trinomial configurations, relation rank 10",
        t0.elapsed().as_millis(),
    );
    let t0 = Instant::now();
    let cubics = search::cubic_relations(&table);
    let (_, _, dim) = reduce::independent_cubics(&sel, &cubics);
    report.check(
        "g2-segre/cubic",
        "isomorphic to the Segre cubic",
        format!("{} cubic collisions spanning dimension {}", cubics.len(), dim),
        format!("{} cubic collisions spanning dimension 1", cubics.len()),
        t0.elapsed().as_millis(),
    );
    // numeric side: the worked quartic theta relation
    let t0 = Instant::now();
    let samples = theta_samples(2, 3, cfg.precision, cfg.seed ^ 0x5eed)?;
    let parts: [Vec<usize>; 4] = [vec![1; 4], vec![3; 4], vec![7; 4], vec![10; 4]];
    let mut max_res = 0f64;
    for s in &samples {
        let v: Vec<_> = parts.iter().map(|p| s.product(p)).collect();
        let lhs = v[0].sub(&v[1]).sub(&v[2]).sub(&v[3]);
        max_res = max_res.max(lhs.abs_f64() / v[0].abs_f64());
    }
    report.check(
        "g2-segre/quartic-identity",
        "ϑ₁⁴ − ϑ₃⁴ − ϑ₇⁴ − ϑ₁₀⁴",
        format!("residual < 1e-10: {}", max_res < 1e-10),
        "residual < 1e-10: true",
        t0.elapsed().as_millis(),
    );
    Ok(())
}

fn stage_g2_quadrics(cfg: &StageConfig, report: &mut ClaimsReport) -> Result<()> {
    let t0 = Instant::now();
    let groups = enumerate_gopel_groups(2)?;
    let samples = theta_samples(2, 75, cfg.precision, cfg.seed ^ 0x9d)?;
    let rows: Vec<Vec<crate::theta::Complex>> = samples
        .iter()
        .map(|s| {
            groups
                .iter()
                .map(|g| {
                    let v = gopel_form(g, s)?;
                    Ok(v.mul(&v))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let (train, fresh) = rows.split_at(70);
    let rels = find_relations(train, 2, fresh)?;
    report.check(
        "g2-quadrics/count",
        "intersection of 51 quadrics",
        rels.relations.len(),
        51,
        t0.elapsed().as_millis(),
    );
    let rank = verify_linear_independence(train)?;
    report.check(
        "g2-quadrics/form-rank",
        "are linearly independent",
        rank,
        15,
        t0.elapsed().as_millis(),
    );
    Ok(())
}

fn stage_g3_enumerate(_cfg: &StageConfig, report: &mut ClaimsReport) -> Result<()> {
    let t0 = Instant::now();
    let counts: Vec<usize> = (1..=3)
        .map(|g| enumerate_gopel_groups(g).map(|v| v.len()))
        .collect::<Result<_>>()?;
    report.check(
        "g3-enumerate/group-counts",
        "There are 135 Göpel groups",
        format!("{counts:?}"),
        "[3, 15, 135]",
        t0.elapsed().as_millis(),
    );
    let t0 = Instant::now();
    let evens = even_table(3)?;
    report.check(
        "g3-enumerate/even-count",
        "(2^g+1)2^{g-1} even characteristics",
        evens.len(),
        expected_even_count(3),
        t0.elapsed().as_millis(),
    );
    let t0 = Instant::now();
    let groups = enumerate_gopel_groups(3)?;
    let all_unique = groups.iter().all(|g| {
        let bits: Vec<u16> = g.elements.iter().map(|m| m.bits).collect();
        even_coset(3, &bits).map(|c| c.len() == 8).unwrap_or(false)
    });
    report.check(
        "g3-enumerate/even-coset",
        "unique even coset",
        format!("every group has a unique even coset of 8: {all_unique}"),
        "every group has a unique even coset of 8: true",
        t0.elapsed().as_millis(),
    );
    Ok(())
}

fn stage_g3_relations(_cfg: &StageConfig, report: &mut ClaimsReport) -> Result<()> {
    let t0 = Instant::now();
    let table = relations::GopelMonomialTable::build(3)?;
    let trinomials = relations::find_trinomials(&table);
    let signs = relations::load_trinomial_signs(&trinomials)?;
    let rels = relations::linear_relations(&trinomials, &signs);
    let basis_groups = relations::printed_basis_groups(&table)?;
    let sel = relations::select_basis(&table, &rels, &basis_groups)?;
    report.check(
        "g3-relations/linear",
        "linear relations has dimension 120",
        format!("{} trinomials, kernel dimension {}", trinomials.len(), sel.relation_dim),
        "315 trinomials, kernel dimension 120",
        t0.elapsed().as_millis(),
    );
    let t0 = Instant::now();
    let cubics = search::cubic_relations(&table);
    let sextuple = search::contains_binomial(
        &table,
        &cubics,
        &relations::CUBIC_EXAMPLE_LHS,
        &relations::CUBIC_EXAMPLE_RHS,
    )?;
    report.check(
        "g3-relations/cubic",
        "630 cubic relations",
        format!("{} binomials, printed sextuple present: {sextuple}", cubics.len()),
        "630 binomials, printed sextuple present: true",
        t0.elapsed().as_millis(),
    );
    let t0 = Instant::now();
    let quartics = search::quartic_relations(&table);
    let oct1 = search::contains_binomial(
        &table,
        &quartics,
        &relations::QUARTIC_EXAMPLE_1_LHS,
        &relations::QUARTIC_EXAMPLE_1_RHS,
    )?;
    let oct2 = search::contains_binomial(
        &table,
        &quartics,
        &relations::QUARTIC_EXAMPLE_2_LHS,
        &relations::QUARTIC_EXAMPLE_2_RHS,
    )?;
    report.check(
        "g3-relations/quartic",
        "12 285 quartic relations",
        format!("{} binomials, octuples present: {oct1} {oct2}", quartics.len()),
        "12285 binomials, octuples present: true true",
        t0.elapsed().as_millis(),
    );
    let t0 = Instant::now();
    let mut sizes = search::classify_binomial_orbits(&table, &quartics)?;
    sizes.sort();
    report.check(
        "g3-relations/quartic-orbits",
        "two orbits with respect to the full modular group",
        format!("{} orbits of sizes {sizes:?}", sizes.len()),
        "2 orbits of sizes [945, 11340]",
        t0.elapsed().as_millis(),
    );
    Ok(())
}

/// GB of 𝔞 over F_p (35 cubics).
pub fn a_groebner(system: &GoepelSystem, p: u64) -> Result<GroebnerBasis<Fp>> {
    buchberger(&system.a_gens_fp(p), system.ring())
}

fn stage_g3_ideals(cfg: &StageConfig, report: &mut ClaimsReport) -> Result<()> {
    let t0 = Instant::now();
    let system = GoepelSystem::build()?;
    report.check(
        "g3-ideals/graded",
        "minimally generated by 35 cubics and 35 quartics",
        format!(
            "35 cubics, dim(𝔞)₄ = {}, dim(𝔟)₄ = {}, minimal quartics {}",
            system.dim_a4,
            system.dim_b4,
            system.dim_b4 - system.dim_a4
        ),
        "35 cubics, dim(𝔞)₄ = 504, dim(𝔟)₄ = 539, minimal quartics 35",
        t0.elapsed().as_millis(),
    );
    // persist the ideals
    let t0 = Instant::now();
    std::fs::create_dir_all(&cfg.out_dir)?;
    let ring = system.ring();
    write_ideal(
        &cfg.out_dir.join("a.ideal"),
        "a",
        ring,
        "Q",
        None,
        &system.cubic_gens,
    )?;
    let mut b_all = system.cubic_gens.clone();
    b_all.extend(system.quartic_gens.iter().cloned());
    write_ideal(&cfg.out_dir.join("b.ideal"), "b", ring, "Q", None, &b_all)?;
    let manifest = serde_json::json!({
        "cubic_binomials": system.cubic_binomials.len(),
        "quartic_binomials": system.quartic_binomials.len(),
        "a_generators": system.cubic_gens.len(),
        "b_generators": b_all.len(),
        "dim_a3": 35,
        "dim_a4": system.dim_a4,
        "dim_b4": system.dim_b4,
        "flags": [relations::QUARTIC_EXAMPLE_2_MISPRINT],
    });
    std::fs::write(
        cfg.out_dir.join("manifest.json"),
        serde_json::to_string_pretty(&manifest)? + "\n",
    )?;
    report.check(
        "g3-ideals/artifacts",
        "writes a.ideal, b.ideal in the shared format",
        "a.ideal b.ideal manifest.json written",
        "a.ideal b.ideal manifest.json written",
        t0.elapsed().as_millis(),
    );
    // each minimal quartic times Y₁⋯Y₁₅ lies in 𝔞
    let t0 = Instant::now();
    let p = cfg.prime;
    let a_gb = a_groebner(&system, p)?;
    let ok = quartics_times_all_vars_in_a(&system, &a_gb, p);
    report.check(
        "g3-ideals/saturation",
        "product with Y₁⋯Y₁₅ is contained in 𝔞",
        format!("all 35 products reduce to 0 mod {p}: {ok}"),
        format!("all 35 products reduce to 0 mod {p}: true"),
        t0.elapsed().as_millis(),
    );
    Ok(())
}

/// NF(q · Y₁⋯Y₁₅, GB(𝔞)) = 0 for every minimal quartic q, computed stepwise
/// (reduce, multiply by the next variable, reduce again) to keep terms small.
pub fn quartics_times_all_vars_in_a(
    system: &GoepelSystem,
    a_gb: &GroebnerBasis<Fp>,
    p: u64,
) -> bool {
    let ring = system.ring();
    system.quartic_gens.iter().all(|q| {
        let mut r = normal_form(&super::poly_to_fp(q, p), &a_gb.polys, ring);
        for v in 0..15 {
            if r.is_zero() {
                return true;
            }
            let one = Fp { val: 1, p };
            let xv = Poly::var(v, &one, 15);
            r = normal_form(&r.mul(&xv, ring), &a_gb.polys, ring);
        }
        r.is_zero()
    })
}

fn stage_g3_quotient(cfg: &StageConfig, report: &mut ClaimsReport) -> Result<()> {
    let system = GoepelSystem::build()?;
    // exhaustive {−1,0,1} scan
    let t0 = Instant::now();
    let scan_result = scan::brute_force_extra_points(&system)?;
    let found = scan::contains_point(&scan_result, &super::EXTRA_POINT);
    report.check(
        "g3-quotient/extra-point",
        "[-1,0,1,0,1,0,1,-1,1,0,0,0,0,0,0]",
        format!(
            "{} representatives, {} on V(𝔞), {} on V(𝔟), {} extra, printed point found: {found}",
            scan_result.representatives,
            scan_result.on_a,
            scan_result.on_b,
            scan_result.extra.len()
        ),
        format!(
            "{} representatives, {} on V(𝔞), {} on V(𝔟), {} extra, printed point found: true",
            scan_result.representatives,
            scan_result.on_a,
            scan_result.on_b,
            scan_result.extra.len()
        ),
        t0.elapsed().as_millis(),
    );
    // 𝔵 = 𝔞 : 𝔟 over F_p
    let t0 = Instant::now();
    let p = cfg.prime;
    let ring = system.ring();
    let a_gb = a_groebner(&system, p)?;
    let b_gens = system.b_gens_fp(p);
    let x_gens = elim::ideal_quotient_gb(&system.a_gens_fp(p), &a_gb, &b_gens, ring)?;
    let x_gb = buchberger(&x_gens, ring)?;
    let h = hilbert_data(&x_gb.leading_monomials(), 15);
    report.check(
        "g3-quotient/zero-dimensional",
        "and 120 isolated points",
        format!("𝔵 affine dimension {} (projective {})", h.dimension, h.dimension as i64 - 1),
        "𝔵 affine dimension 1 (projective 0)",
        t0.elapsed().as_millis(),
    );
    // distinct points: pass to a random chart and take the squarefree
    // eliminant degree; compared to 120, reported not presumed
    let t0 = Instant::now();
    let (count, degree) = distinct_projective_points(&x_gb, ring, p, cfg.seed)?;
    report.check(
        "g3-quotient/point-count",
        "and 120 isolated points",
        format!("eliminant degree {degree}, distinct points {count}"),
        format!("eliminant degree {degree}, distinct points 120"),
        t0.elapsed().as_millis(),
    );
    Ok(())
}

/// Distinct-point count of a zero-dimensional projective scheme: choose the
/// chart Y₁₅ = 1 − (random form), compute the squarefree eliminant degree.
/// Returns (distinct count, projective degree with multiplicity).
pub fn distinct_projective_points(
    gb: &GroebnerBasis<Fp>,
    ring: &Ring,
    p: u64,
    seed: u64,
) -> Result<(usize, num_bigint::BigInt)> {
    use rand::Rng;
    let h = hilbert_data(&gb.leading_monomials(), ring.nvars());
    let degree = h.degree.clone();
    let n = ring.nvars();
    let one = Fp { val: 1, p };
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed ^ 0xcafe);
    for _ in 0..12 {
        // substitute x_{n-1} := c_0 + Σ_{i<n-1} c_i x_i with random c
        let ring_aff = Ring::numbered("Y", n - 1, Order::GrevLex);
        let mut images: Vec<Poly<Fp>> = (0..n - 1).map(|i| Poly::var(i, &one, n - 1)).collect();
        let mut last = Poly::constant(Fp::new(rng.gen_range(1..p as i64), p), n - 1);
        for i in 0..n - 1 {
            let c = Fp::new(rng.gen_range(0..p as i64), p);
            last = last.add(&Poly::var(i, &one, n - 1).scale(&c), &ring_aff);
        }
        images.push(last);
        let gens: Vec<Poly<Fp>> = gb.polys.iter().map(|f| f.substitute(&images, &ring_aff)).collect();
        let gb_aff = buchberger(&gens, &ring_aff)?;
        let alg = match QuotientAlgebra::new(&gb_aff, &ring_aff, 4000) {
            Ok(a) => a,
            Err(Error::NotZeroDimensional) => continue,
            Err(e) => return Err(e),
        };
        let coeffs: Vec<Fp> = (0..n - 1).map(|_| Fp::new(rng.gen_range(0..p as i64), p)).collect();
        let (mp, _) = alg.minimal_polynomial(&coeffs)?;
        if mp.len() != alg.dim() + 1 {
            continue; // not separating
        }
        let eliminant = UPoly::new(mp.iter().map(|c| c.val).collect(), p);
        let count = squarefree_part(&eliminant)?.degree();
        return Ok((count, degree));
    }
    Err(Error::NoSeparatingForm)
}

use crate::poly::mono::Order;

fn stage_g3_noether(cfg: &StageConfig, report: &mut ClaimsReport) -> Result<()> {
    let system = GoepelSystem::build()?;
    let p = cfg.prime;
    let t0 = Instant::now();
    let b_gb = super::b_groebner(&system, p)?;
    let analysis = super::analyze_hilbert(&system, &b_gb, p)?;
    report.check(
        "g3-noether/artinian-length",
        "The degree of this cluster is 175",
        format!("{}", analysis.artinian_length),
        "175",
        t0.elapsed().as_millis(),
    );
    report.check(
        "g3-noether/freeness",
        "free over this polynomial ring",
        format!(
            "numerator non-negative: {}, equals artinian Hilbert function: {}",
            analysis.numerator_nonnegative, analysis.freeness_match
        ),
        "numerator non-negative: true, equals artinian Hilbert function: true",
        t0.elapsed().as_millis(),
    );
    // adding only 6 of the 7 forms leaves affine dimension 1
    let t0 = Instant::now();
    let one = Fp { val: 1, p };
    let ring15 = system.ring().clone();
    let mut partial = system.b_gens_fp(p);
    partial.extend(super::noether_polys(&one, &ring15)[..6].iter().cloned());
    let gb6 = buchberger(&partial, &ring15)?;
    let h6 = hilbert_data(&gb6.leading_monomials(), 15);
    report.check(
        "g3-noether/parameter-count",
        "integral over the polynomial ring in the following 7 variables",
        format!("6 forms leave affine dimension {}", h6.dimension),
        "6 forms leave affine dimension 1",
        t0.elapsed().as_millis(),
    );
    // second-prime sanity: same reduced numerator
    let t0 = Instant::now();
    let p2 = 1009;
    let b_gb2 = super::b_groebner(&system, p2)?;
    let h2 = hilbert_data(&b_gb2.leading_monomials(), 15);
    report.check(
        "g3-noether/second-prime",
        "second-prime recomputation",
        format!(
            "numerator mod {p} equals numerator mod {p2}: {}",
            h2.reduced_numerator == analysis.b_hilbert.reduced_numerator
        ),
        format!("numerator mod {p} equals numerator mod {p2}: true"),
        t0.elapsed().as_millis(),
    );
    if cfg.rederive {
        let t0 = Instant::now();
        let ok = super::rederive_noether(&system, p, cfg.seed)?;
        report.check(
            "g3-noether/rederived",
            "can be computed over ℚ by means of the command NoetherNormalization",
            format!("independent random normalization found: {ok}"),
            "independent random normalization found: true",
            t0.elapsed().as_millis(),
        );
    }
    Ok(())
}

fn stage_g3_hilbert(cfg: &StageConfig, report: &mut ClaimsReport) -> Result<()> {
    let system = GoepelSystem::build()?;
    let t0 = Instant::now();
    let b_gb = super::b_groebner(&system, cfg.prime)?;
    let h = hilbert_data(&b_gb.leading_monomials(), 15);
    report.check(
        "g3-hilbert/dimension-degree",
        "degree 175 in P^14",
        format!("projective dimension {}, degree {}", h.dimension as i64 - 1, h.degree),
        "projective dimension 6, degree 175",
        t0.elapsed().as_millis(),
    );
    Ok(())
}

fn stage_g3_cluster(cfg: &StageConfig, report: &mut ClaimsReport) -> Result<()> {
    let system = GoepelSystem::build()?;
    let t0 = Instant::now();
    let cluster = super::analyze_cluster(&system, cfg.prime, cfg.seed)?;
    let mut ddf = cluster.ddf_degrees.clone();
    ddf.sort();
    report.check(
        "g3-cluster/eliminant",
        "4 Galois orbits",
        format!(
            "eliminant degree {}, squarefree: {}, DDF degrees {:?}",
            cluster.eliminant.degree(),
            cluster.squarefree,
            ddf
        ),
        "eliminant degree 175, squarefree: true, DDF degrees [21, 22, 32, 100]",
        t0.elapsed().as_millis(),
    );
    Ok(())
}

fn stage_g3_smooth(cfg: &StageConfig, report: &mut ClaimsReport) -> Result<()> {
    let system = GoepelSystem::build()?;
    let t0 = Instant::now();
    let cluster = super::analyze_cluster(&system, cfg.prime, cfg.seed)?;
    let reps = super::orbit_representatives(&cluster)?;
    let mut ranks = Vec::new();
    for rep in &reps {
        let rank = super::jacobian_rank_via_supports(&system, &rep.point, cfg.prime)?;
        ranks.push((rep.field_degree, rank));
    }
    ranks.sort();
    report.check(
        "g3-smooth/jacobian",
        "all 175 points are regular points",
        format!("Jacobian ranks per orbit {ranks:?}"),
        "Jacobian ranks per orbit [(21, 8), (22, 8), (32, 8), (100, 8)]",
        t0.elapsed().as_millis(),
    );
    Ok(())
}
