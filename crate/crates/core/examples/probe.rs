use goepel_core::groebner::hilbert::hilbert_data;
use goepel_core::groebner::{buchberger, elim};
use goepel_core::pipeline::{stages, GoepelSystem};
use std::time::Instant;

fn main() {
    let p = 557u64;
    let t0 = Instant::now();
    let sys = GoepelSystem::build().unwrap();
    println!("system build: {:?}", t0.elapsed());
    let ring = sys.ring();
    let t0 = Instant::now();
    let a_gb = stages::a_groebner(&sys, p).unwrap();
    println!("GB of a: {} elements in {:?}", a_gb.polys.len(), t0.elapsed());
    let h = hilbert_data(&a_gb.leading_monomials(), 15);
    println!("a: dim (affine) {}, degree {}", h.dimension, h.degree);
    let t0 = Instant::now();
    let sat = stages::quartics_times_all_vars_in_a(&sys, &a_gb, p);
    println!("quartic saturation check: {} in {:?}", sat, t0.elapsed());
    let t0 = Instant::now();
    let x_gens = elim::ideal_quotient_gb(&sys.a_gens_fp(p), &a_gb, &sys.b_gens_fp(p), ring).unwrap();
    println!("colon a:b -> {} gens in {:?}", x_gens.len(), t0.elapsed());
    let t0 = Instant::now();
    let x_gb = buchberger(&x_gens, ring).unwrap();
    let h = hilbert_data(&x_gb.leading_monomials(), 15);
    println!(
        "GB of x: {} elements in {:?}; dim (affine) {}, degree {}",
        x_gb.polys.len(),
        t0.elapsed(),
        h.dimension,
        h.degree
    );
    let t0 = Instant::now();
    let (count, degree) = stages::distinct_projective_points(&x_gb, ring, p, 20260823).unwrap();
    println!(
        "distinct points: {count} (eliminant degree {degree}) in {:?}",
        t0.elapsed()
    );
}
