//! Sufficient conditions for cyclicity and irreducibility of tensor
//! products, with the direction asymmetry of the rank-one example.
//!
//! Run with: cargo run --example cyclicity_check

use loopbraid::baxter::qcartan_inverse;
use loopbraid::braid::DrinfeldTuple;
use loopbraid::cartan::{cartan_data, kappa};
use loopbraid::cyclicity::verdict;
use loopbraid::exact::{rat, GlobalParams, RootMultiset};

fn show(label: &str, v: &loopbraid::cyclicity::CyclicityVerdict) {
    println!(
        "{}: poles {}, braid {}, cyclic {}, irreducible {}",
        label, v.condition_poles, v.condition_braid, v.cyclic_sufficient, v.irreducible_sufficient
    );
    for w in &v.pole_witnesses {
        println!("    witness: node {} collides at {}", w.node, w.point);
    }
}

fn main() {
    let cd = cartan_data("A1".parse().unwrap()).unwrap();
    let gp = GlobalParams::default();
    let k = kappa(&cd).unwrap();
    let qci = qcartan_inverse(&cd, &k).unwrap();

    let at = |a: i64| DrinfeldTuple::new(vec![RootMultiset::linear(rat(a))]);

    // a generic pair is cyclic and irreducible
    let v = verdict(&cd, &gp, &qci, &at(0), &at(10)).unwrap();
    show("L(u) (x) L(u - 10)   ", &v);

    // the collision pair Q = (u - a - hbar) fails
    let v = verdict(&cd, &gp, &qci, &at(0), &at(1)).unwrap();
    show("L(u) (x) L(u - 1)    ", &v);

    // the reversed shift passes one way only: cyclic but not irreducible
    let v = verdict(&cd, &gp, &qci, &at(0), &at(-1)).unwrap();
    show("L(u) (x) L(u + 1)    ", &v);
    assert!(v.cyclic_sufficient && !v.irreducible_sufficient);

    // a rank-two pair with collisions across different nodes
    let cd = cartan_data("A2".parse().unwrap()).unwrap();
    let k = kappa(&cd).unwrap();
    let qci = qcartan_inverse(&cd, &k).unwrap();
    let p = DrinfeldTuple::new(vec![RootMultiset::linear(rat(0)), RootMultiset::one()]);
    let q = DrinfeldTuple::new(vec![
        RootMultiset::one(),
        RootMultiset::linear(loopbraid::exact::ratio(3, 2)),
    ]);
    let v = verdict(&cd, &gp, &qci, &p, &q).unwrap();
    show("A2 cross-node pair   ", &v);
}
