//! Exact matrix model of the braid operators on the span of logarithmic
//! coefficients, and the Iwahori-Hecke relations they satisfy.
//!
//! Run with: cargo run --example hecke_relations

use loopbraid::cartan::cartan_data;
use loopbraid::exact::{ratio, GlobalParams};
use loopbraid::hecke::{build_model, submodule_check, verify_hecke};

fn main() {
    // a rank-one model small enough to print whole
    let cd = cartan_data("A1".parse().unwrap()).unwrap();
    let gp = GlobalParams::default();
    let model = build_model(&cd, &gp, 1);
    println!("A1 at level r = 1 (basis t_(1,0), t_(1,1)):");
    println!("Z   =\n{}", model.z());
    println!("Tau =\n{}", model.tau(1));
    println!("T   =\n{}", model.t(1));

    // the full battery over several types and a non-unit hbar
    for ty in ["A2", "B2", "C3", "G2", "F4"] {
        let cd = cartan_data(ty.parse().unwrap()).unwrap();
        for hbar in [ratio(1, 1), ratio(-1, 2)] {
            let gp = GlobalParams::new(hbar.clone());
            let model = build_model(&cd, &gp, 3);
            let report = verify_hecke(&model);
            println!(
                "{} (hbar = {}): braid {}, quadratic {}, commute {}, submodules {}",
                ty,
                hbar,
                report.braid_ok,
                report.quadratic_ok,
                report.commute_ok,
                (0..=3).all(|r| submodule_check(&model, r)),
            );
            assert!(report.all_ok());
        }
    }
}
