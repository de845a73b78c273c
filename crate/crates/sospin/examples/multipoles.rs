//! The multipole tensors T_k: totally symmetric, traceless in every slot
//! pair, annihilated by E_k, and spanning a (2k+1)-dimensional image.
//!
//! Run with: cargo run -p sospin --example multipoles

use sospin::multipole::{
    index_multisets, multipole, multipole_basis, multipole_image_rank, slot_contraction,
};
use sospin::uea::{e_factor, Axis};

fn main() {
    use Axis::{X, Y, Z};

    for k in 0..=3u32 {
        let basis = multipole_basis(k);
        println!(
            "level {k}: {} independent components",
            basis.components.len()
        );
        for c in &basis.components {
            let idx: String = c.indices.iter().map(|a| a.name()).collect();
            println!("  T{k}[{idx}] = {}", c.expansion);
        }
    }

    // Symmetry: slot order never matters.
    let t = multipole(3, &[X, Y, Z]).unwrap();
    assert_eq!(multipole(3, &[Z, Y, X]).unwrap(), t);
    assert_eq!(multipole(3, &[Y, Z, X]).unwrap(), t);
    println!("\nT3 is slot-symmetric: T3[xyz] = {t}");

    // Tracelessness: contracting any two slots gives zero.
    let contracted = slot_contraction(3, &[X, Y, Z], 0, 2).unwrap();
    println!("sum_a T3[a y a] = {contracted}");

    // Annihilation and rank.
    for k in 0..=4u32 {
        for w in index_multisets(k) {
            assert!(e_factor(k, &multipole(k, &w).unwrap()).is_zero());
        }
        println!(
            "level {k}: E_{k} T_{k} = 0, exact rank = {}",
            multipole_image_rank(k)
        );
    }
}
