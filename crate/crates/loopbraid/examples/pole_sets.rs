//! Pole sets of irreducible modules: fundamental pole sets from the
//! inverse quantized Cartan matrix, and the two equivalent routes to the
//! pole set of a general module.
//!
//! Run with: cargo run --example pole_sets

use loopbraid::baxter::{fundamental_poles, pole_set, pole_set_union_route, qcartan_inverse};
use loopbraid::braid::DrinfeldTuple;
use loopbraid::cartan::{cartan_data, kappa};
use loopbraid::exact::{rat, GlobalParams, RootMultiset};

fn main() {
    for ty in ["A2", "B2"] {
        let cd = cartan_data(ty.parse().unwrap()).unwrap();
        let gp = GlobalParams::default();
        let k = kappa(&cd).unwrap();
        let qci = qcartan_inverse(&cd, &k).unwrap();

        println!("== {} (2*kappa = {}) ==", ty, k.two_kappa);
        for i in cd.nodes() {
            for j in cd.nodes() {
                let fp = fundamental_poles(&qci, &gp, i, j);
                let pts: Vec<String> = fp.iter().map(|p| p.to_string()).collect();
                println!("sigma_{}(L_varpi_{}) = {{{}}}", i, j, pts.join(", "));
            }
        }

        // a two-node module: P = ((u)(u - 2), (u - 1))
        let p = DrinfeldTuple::new(vec![
            RootMultiset::from_entries([(rat(0), 1), (rat(2), 1)]),
            RootMultiset::linear(rat(1)),
        ]);
        println!("P = {}", p.as_monic());
        for i in cd.nodes() {
            let direct = pole_set(&qci, &gp, &p, i);
            let union = pole_set_union_route(&qci, &gp, &p, i);
            assert_eq!(direct, union);
            let pts: Vec<String> = direct.iter().map(|x| x.to_string()).collect();
            println!(
                "sigma_{}(L(P)) = {{{}}}  (union route agrees)",
                i,
                pts.join(", ")
            );
        }
        println!();
    }
}
