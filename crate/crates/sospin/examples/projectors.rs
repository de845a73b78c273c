//! Decomposing real operators without eigenvalues: build orthogonal
//! idempotents straight from a factored minimal polynomial, then compose
//! two commuting decompositions into a mutual one.
//!
//! Run with: cargo run -p sospin --example projectors

use sospin::matrix::RatMatrix;
use sospin::poly::Polynomial;
use sospin::projector::{
    bezout_projectors, mutual_projectors, simple_projector, FactoredMinPoly, OperatorDecomposition,
};
use sospin::rational::{int, rat};

fn main() {
    // A minimal polynomial x(x+2) with two simple roots.
    let m = FactoredMinPoly::from_simple_roots(&[int(0), int(-2)]).unwrap();
    let set = bezout_projectors(&m).unwrap();
    println!("minimal polynomial m(x) = {}", set.modulus);
    for (i, p) in set.projectors.iter().enumerate() {
        println!("  projector {i}: {p}");
    }
    println!(
        "congruences (sum, orthogonality, idempotency, annihilation): {}",
        set.congruences_hold(&m)
    );

    // The simple-eigenvalue shortcut: projector = q(x)/q(lambda).
    let q = &Polynomial::from_i64(&[0, 1]) * &Polynomial::from_i64(&[12, 1]); // x(x+12)
    let p = simple_projector(&int(-2), &q).unwrap();
    println!("\nsimple projector at lambda = -2 with q = x(x+12): {p}");

    // A factor can be irreducible over the rationals: a planar rotation
    // block with cos(theta) = 3/5 never splits, yet still gets a projector.
    let rotation = Polynomial::new(vec![int(1), rat(-6, 5), int(1)]);
    let m = FactoredMinPoly::new(vec![(Polynomial::from_i64(&[-1, 1]), 1), (rotation, 1)]).unwrap();
    let set = bezout_projectors(&m).unwrap();
    println!("\nrotation-block example, m(x) = {}", set.modulus);
    println!("  plane projector: {}", set.projectors[1]);
    println!("  congruences: {}", set.congruences_hold(&m));

    // Mutual decomposition of two commuting operators on Q^4.
    let a = RatMatrix::from_rows(vec![
        vec![int(0), int(0), int(0), int(0)],
        vec![int(0), int(0), int(0), int(0)],
        vec![int(0), int(0), int(-2), int(0)],
        vec![int(0), int(0), int(0), int(-2)],
    ]);
    let b = RatMatrix::from_rows(vec![
        vec![int(1), int(0), int(0), int(0)],
        vec![int(0), int(3), int(0), int(0)],
        vec![int(0), int(0), int(1), int(0)],
        vec![int(0), int(0), int(0), int(3)],
    ]);
    let decomp_a = OperatorDecomposition {
        operator: a,
        projectors: bezout_projectors(
            &FactoredMinPoly::from_simple_roots(&[int(0), int(-2)]).unwrap(),
        )
        .unwrap(),
    };
    let decomp_b = OperatorDecomposition {
        operator: b,
        projectors: bezout_projectors(
            &FactoredMinPoly::from_simple_roots(&[int(1), int(3)]).unwrap(),
        )
        .unwrap(),
    };
    println!("\nmutual decomposition of two commuting operators:");
    for cell in mutual_projectors(&[decomp_a, decomp_b]).unwrap() {
        println!(
            "  cell {:?}: rank {}{}",
            cell.indices,
            cell.image_rank(),
            if cell.trivial { " (trivial)" } else { "" }
        );
    }
}
