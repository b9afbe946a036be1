//! The truncated intertwining between the quantum-loop braid action and
//! the Yangian one, through the embedding of the normalized loop-Cartan
//! generators as Borel-transform series.
//!
//! Run with: cargo run --example gtl_intertwiner

use loopbraid::cartan::cartan_data;
use loopbraid::exact::GlobalParams;
use loopbraid::qloop::{gtl_intertwine_check, gtl_phi, GTLContext};

fn main() {
    let cd = cartan_data("B2".parse().unwrap()).unwrap();
    let gp = GlobalParams::default();
    let ctx = GTLContext::new(&cd, &gp, 6).unwrap();

    // the embedded generator Phi(h_{1,1}) as a t-span vector of v-series
    let phi = gtl_phi(&ctx, 1, 1).unwrap();
    println!("Phi(h_(1,1)) in the t-span, coefficients mod v^6:");
    for (idx, series) in phi.iter().enumerate() {
        if !series.is_zero() {
            let terms: Vec<String> = series
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(k, c)| format!("({})v^{}", c, k))
                .collect();
            println!("  basis {:2}: {}", idx, terms.join(" + "));
        }
    }

    // the intertwining identity for every node pair and mode, at two
    // truncation orders (passing once, it keeps passing at higher order)
    for order in [6usize, 8] {
        let ctx = GTLContext::new(&cd, &gp, order).unwrap();
        for i in 1..=2 {
            for j in 1..=2 {
                for r in [1i64, -1, 2, -2] {
                    let ok = gtl_intertwine_check(&ctx, i, j, r).unwrap();
                    assert!(ok, "(i, j, r) = ({}, {}, {}) at order {}", i, j, r, order);
                }
            }
        }
        println!("intertwining holds for all (i, j, r) mod v^{}", order);
    }
}
