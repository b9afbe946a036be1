//! Tour of the Cartan layer: matrices, root systems, the Casimir constant,
//! and reduced words for the longest Weyl element.
//!
//! Run with: cargo run --example cartan_tour

use loopbraid::cartan::{
    cartan_data, inversion_roots, is_reduced, kappa, longest_word, positive_roots, WeylWord,
};

fn main() {
    for ty in ["A2", "B3", "G2", "F4"] {
        let cd = cartan_data(ty.parse().unwrap()).unwrap();
        let (pos, theta) = positive_roots(&cd);
        let k = kappa(&cd).unwrap();
        println!("== {} ==", ty);
        println!("Cartan matrix : {:?}", cd.a_matrix());
        println!("symmetrizers  : {:?}", cd.d_vector());
        println!(
            "positive roots: {} (highest {:?}, height {})",
            pos.len(),
            theta.coords,
            theta.height()
        );
        println!("Casimir       : c_g = {}, 2*kappa = {}", k.c_g, k.two_kappa);

        let (w0, alt) = longest_word(&cd).unwrap();
        println!("longest word  : {} (alternative {})", w0, alt);
        assert!(is_reduced(&cd, &w0));
        // the inversion set of a reduced word for w0 is all of the
        // positive roots
        assert_eq!(inversion_roots(&cd, &w0).len(), pos.len());

        // a repeated letter is never reduced
        let silly = WeylWord::new(vec![1, 1]);
        println!("word (1,1) reduced? {}", is_reduced(&cd, &silly));
        println!();
    }
}
