//! Cross-validating the symbolic kernel against the standard complex spin
//! matrices: convention conversion, element evaluation, structure-constant
//! agreement, and multipole image ranks.
//!
//! Run with: cargo run -p sospin --example oracle_check

use sospin::multipole::{index_multisets, multipole};
use sospin::oracle::{
    build_spin_matrices, compare_structure_constants, evaluate, numerical_rank, to_real_convention,
    Rep,
};
use sospin::spinalg::{build_spin_algebra, SpinLabel};
use sospin::uea::{casimir, Axis, UeaElement};

fn main() {
    // Physics convention: Hermitian S_a with [S_x, S_y] = i S_z.
    let physics = build_spin_matrices(2);
    let real = to_real_convention(&physics);
    let comm = real[0].mul(&real[1]).sub(&real[1].mul(&real[0]));
    println!(
        "two_s = 2: || [Jx, Jy] - Jz ||_F = {:.2e}",
        comm.sub(&real[2]).frobenius_norm()
    );

    // The Casimir element evaluates to its scalar.
    let rep = Rep::real(2);
    let c = evaluate(&casimir(), &rep);
    println!(
        "C at two_s = 2 deviates from -2*I by {:.2e}",
        c.sub(&sospin::oracle::ComplexMatrix::identity(3).scale((-2.0).into()))
            .frobenius_norm()
    );

    // Structure constants of every spin table reproduce in matrices.
    for two_s in 0..=3u32 {
        let table = build_spin_algebra(SpinLabel { two_s }).unwrap();
        let report = compare_structure_constants(&table, 1e-10);
        println!(
            "two_s = {two_s}: {} products, max deviation {:.3e}, pass = {}",
            report.pairs_checked,
            report.max_deviation,
            report.passed()
        );
    }

    // Multipole images have rank 2k+1 up to k = 2s, then collapse to zero.
    let rep = Rep::real(2);
    for k in 0..=3u32 {
        let mats: Vec<_> = index_multisets(k)
            .iter()
            .map(|w| evaluate(&multipole(k, w).unwrap(), &rep))
            .collect();
        println!(
            "rank of evaluated Im T_{k} at two_s = 2: {}",
            numerical_rank(&mats, 1e-8)
        );
    }

    // A generator evaluates to an anti-Hermitian matrix in the real
    // convention; its square has the expected spectrum signature.
    let jz = evaluate(&UeaElement::generator(Axis::Z), &rep);
    let dag = jz.adjoint_conj();
    println!(
        "|| Jz + Jz^dagger ||_F at two_s = 2: {:.2e}",
        jz.add(&dag).frobenius_norm()
    );
}
