//! Ideal intersection (tag-variable elimination) and colon ideals.

use super::{buchberger, normal_form, GroebnerBasis};
use crate::error::{Error, Result};
use crate::poly::coeff::Coeff;
use crate::poly::mono::{Monomial, Order};
use crate::poly::ring::{Poly, Ring};
use smallvec::SmallVec;

/// R[t] with t as the first (eliminated) variable.
fn t_ring(ring: &Ring) -> Ring {
    let mut vars = vec!["t#".to_string()];
    vars.extend(ring.vars.iter().cloned());
    Ring::new(vars, Order::Elim(1))
}

fn lift<C: Coeff>(f: &Poly<C>, t_deg: u8) -> Poly<C> {
    Poly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps: SmallVec<[u8; 16]> = SmallVec::with_capacity(m.exps.len() + 1);
                exps.push(t_deg);
                exps.extend(m.exps.iter().copied());
                (
                    Monomial {
                        exps,
                        deg: m.deg + t_deg as u32,
                    },
                    c.clone(),
                )
            })
            .collect(),
    }
}

fn drop_t<C: Coeff>(f: &Poly<C>) -> Poly<C> {
    Poly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| {
                (
                    Monomial {
                        exps: SmallVec::from_slice(&m.exps[1..]),
                        deg: m.deg,
                    },
                    c.clone(),
                )
            })
            .collect(),
    }
}

/// I ∩ J via the tag trick: eliminate t from t·I + (1−t)·J.
pub fn intersect<C: Coeff>(
    a: &[Poly<C>],
    b: &[Poly<C>],
    ring: &Ring,
) -> Result<Vec<Poly<C>>> {
    let ext = t_ring(ring);
    let mut gens: Vec<Poly<C>> = Vec::new();
    for f in a {
        gens.push(lift(f, 1)); // t·f
    }
    for g in b {
        let tg = lift(g, 1);
        let g0 = lift(g, 0);
        gens.push(g0.sub(&tg, &ext)); // (1−t)·g
    }
    let gb = buchberger(&gens, &ext)?;
    Ok(gb
        .polys
        .iter()
        .filter(|f| f.terms.iter().all(|(m, _)| m.exps[0] == 0))
        .map(drop_t)
        .collect())
}

/// (I : f) = (I ∩ (f)) / f.
pub fn colon_single<C: Coeff>(
    a: &[Poly<C>],
    f: &Poly<C>,
    ring: &Ring,
) -> Result<Vec<Poly<C>>> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let inter = intersect(a, std::slice::from_ref(f), ring)?;
    inter.iter().map(|g| g.div_exact(f, ring)).collect()
}

/// The colon ideal (a : b) = { P : P·b ⊆ a } = ∩_{g ∈ b} (a : g).
///
/// The intersection is accumulated lazily: after each single colon we check
/// whether the current candidate already multiplies every generator of b
/// into a (a certificate that the remaining intersections are redundant) —
/// for the ideals in this pipeline the very first quotient usually suffices.
pub fn ideal_quotient<C: Coeff>(
    a: &[Poly<C>],
    b: &[Poly<C>],
    ring: &Ring,
) -> Result<Vec<Poly<C>>> {
    let a_gb = buchberger(a, ring)?;
    quotient_impl(a, &a_gb, b, ring)
}

/// As [`ideal_quotient`], but reusing an already-computed Gröbner basis of a.
/// `a_gens` is a (possibly smaller) generating set of the same ideal, used as
/// the input to the tag-variable eliminations.
pub fn ideal_quotient_gb<C: Coeff>(
    a_gens: &[Poly<C>],
    a_gb: &GroebnerBasis<C>,
    b: &[Poly<C>],
    ring: &Ring,
) -> Result<Vec<Poly<C>>> {
    quotient_impl(a_gens, a_gb, b, ring)
}

fn quotient_impl<C: Coeff>(
    a: &[Poly<C>],
    a_gb: &GroebnerBasis<C>,
    b: &[Poly<C>],
    ring: &Ring,
) -> Result<Vec<Poly<C>>> {
    let witness = match b.iter().find(|f| !f.is_zero()) {
        Some(f) => f.terms[0].1.one(),
        None => return Err(Error::DivisionByZero),
    };
    // Generators of b already inside a contribute (a : g) = (1) and can be
    // skipped. If every generator is inside a, the colon is the unit ideal.
    let nonzero: Vec<&Poly<C>> = b
        .iter()
        .filter(|f| !f.is_zero() && !normal_form(f, &a_gb.polys, ring).is_zero())
        .collect();
    if nonzero.is_empty() {
        return Ok(vec![Poly::constant(witness, ring.nvars())]);
    }
    let certified = |cand: &[Poly<C>]| -> bool {
        cand.iter().all(|q| {
            nonzero
                .iter()
                .all(|g| normal_form(&q.mul(g, ring), &a_gb.polys, ring).is_zero())
        })
    };
    let mut cur = colon_single(a, nonzero[0], ring)?;
    for g in &nonzero[1..] {
        if certified(&cur) {
            return Ok(cur);
        }
        let next = colon_single(a, g, ring)?;
        cur = intersect(&cur, &next, ring)?;
    }
    Ok(cur)
}

/// Reduced Gröbner basis of the quotient, for downstream Hilbert work.
pub fn quotient_basis<C: Coeff>(
    a: &[Poly<C>],
    b: &[Poly<C>],
    ring: &Ring,
) -> Result<GroebnerBasis<C>> {
    let q = ideal_quotient(a, b, ring)?;
    buchberger(&q, ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_member;
    use crate::poly::coeff::Fp;
    use crate::poly::text::parse_poly;

    fn r(n: usize) -> Ring {
        Ring::numbered("x", n, Order::GrevLex)
    }

    fn p(s: &str, ring: &Ring) -> Poly<Fp> {
        parse_poly(s, ring, &Fp::new(1, 557)).unwrap()
    }

    #[test]
    fn intersection_of_principal_ideals() {
        let ring = r(2);
        let out = intersect(&[p("x1", &ring)], &[p("x2", &ring)], &ring).unwrap();
        let gb = buchberger(&out, &ring).unwrap();
        assert!(ideal_member(&p("x1*x2", &ring), &gb, &ring));
        assert!(!ideal_member(&p("x1", &ring), &gb, &ring));
    }

    #[test]
    fn colon_examples() {
        let ring = r(2);
        // (x²) : (x) = (x)
        let out = ideal_quotient(&[p("x1^2", &ring)], &[p("x1", &ring)], &ring).unwrap();
        let gb = buchberger(&out, &ring).unwrap();
        assert!(ideal_member(&p("x1", &ring), &gb, &ring));
        assert!(!ideal_member(&p("1", &ring), &gb, &ring));
        // a : (1) = a
        let a = [p("x1*x2 - 1", &ring)];
        let out = ideal_quotient(&a, &[p("1", &ring)], &ring).unwrap();
        let gb = buchberger(&out, &ring).unwrap();
        assert!(ideal_member(&a[0], &gb, &ring));
        assert!(!ideal_member(&p("x1", &ring), &gb, &ring));
    }

    #[test]
    fn colon_matches_bruteforce_membership() {
        // (x²y, xy²) : (xy) = (x, y)
        let ring = r(2);
        let a = [p("x1^2*x2", &ring), p("x1*x2^2", &ring)];
        let b = [p("x1*x2", &ring)];
        let out = ideal_quotient(&a, &b, &ring).unwrap();
        let gb = buchberger(&out, &ring).unwrap();
        assert!(ideal_member(&p("x1", &ring), &gb, &ring));
        assert!(ideal_member(&p("x2", &ring), &gb, &ring));
        assert!(!ideal_member(&p("1", &ring), &gb, &ring));
        // brute-force oracle on low-degree monomials
        let a_gb = buchberger(&a, &ring).unwrap();
        for dx in 0..3u8 {
            for dy in 0..3u8 {
                let m = Poly::monomial(
                    Monomial::from_exps(&[dx, dy]),
                    Fp::new(1, 557),
                );
                let in_colon = ideal_member(&m, &gb, &ring);
                let product_in_a = b
                    .iter()
                    .all(|g| normal_form(&m.mul(g, &ring), &a_gb.polys, &ring).is_zero());
                assert_eq!(in_colon, product_in_a, "mismatch at x^{dx} y^{dy}");
            }
        }
    }
}
