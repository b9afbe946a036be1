//! Baxter polynomials computed two ways: through the inverse quantized
//! Cartan matrix, and as a product over suffixes of a reduced word for the
//! longest element.
//!
//! Run with: cargo run --example baxter_factorization

use loopbraid::baxter::{baxter_extremal, baxter_poly, qcartan_inverse, verify_factorization};
use loopbraid::braid::DrinfeldTuple;
use loopbraid::cartan::{cartan_data, kappa, longest_word};
use loopbraid::exact::{rat, ratio, GlobalParams, RootMultiset};

fn main() {
    let cd = cartan_data("G2".parse().unwrap()).unwrap();
    let gp = GlobalParams::default();
    let k = kappa(&cd).unwrap();
    let qci = qcartan_inverse(&cd, &k).unwrap();
    println!(
        "G2: 2*kappa = {}, expansion order {}",
        qci.two_kappa(),
        qci.order
    );

    let p = DrinfeldTuple::new(vec![
        RootMultiset::linear(rat(0)),
        RootMultiset::linear(ratio(1, 2)),
    ]);
    println!("P = {}", p.as_monic());

    let (w0, alt) = longest_word(&cd).unwrap();
    println!("w0 = {} / {}", w0, alt);
    for i in 1..=cd.n() {
        let direct = baxter_poly(&qci, &gp, &p, i);
        let via_word = baxter_extremal(&cd, &gp, &p, &w0, i).unwrap();
        let via_alt = baxter_extremal(&cd, &gp, &p, &alt, i).unwrap();
        println!("Q_{} = {}", i, direct);
        assert_eq!(direct, via_word);
        assert_eq!(direct, via_alt);
    }
    println!("both reduced words reproduce the quantized-Cartan route exactly");

    let report = verify_factorization(&cd, &gp, &qci, &p).unwrap();
    println!("factorization verdict per node: {:?}", report.per_node);
}
