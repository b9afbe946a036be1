//! The two dual braid actions on tuples of monic rational functions, their
//! compatibility through the additive difference equation, and the
//! character-level GKLO change of variables.
//!
//! Run with: cargo run --example braid_orbit

use loopbraid::braid::{
    act_hw, act_monic, act_monic_inverse, act_word, gklo_to_xi, hw_ratio, solve_difference,
    MonicTuple,
};
use loopbraid::cartan::{cartan_data, WeylWord};
use loopbraid::exact::{rat, GlobalParams, RootMultiset};

fn main() {
    let cd = cartan_data("A2".parse().unwrap()).unwrap();
    let gp = GlobalParams::default();

    // the worked rank-two example: P = ((u - a), 1) with a = 0
    let p = MonicTuple::new(vec![RootMultiset::linear(rat(0)), RootMultiset::one()]);
    println!("P                = {}", p);

    let t1 = act_monic(&cd, &gp, 1, &p);
    println!("T_1(P)           = {}", t1);

    let t21 = act_word(&cd, &gp, &WeylWord::new(vec![2, 1]), &p);
    println!("T_2 T_1 (P)      = {}", t21);

    let back = act_monic_inverse(&cd, &gp, 1, &t1);
    println!("T_1^-1 T_1 (P)   = {}  (round trip)", back);
    assert_eq!(back, p);

    // the highest-weight action is the same action seen through the ratio
    // lambda_i(u) = mu_i(u + hbar d_i) / mu_i(u) ...
    let lam = hw_ratio(&cd, &gp, &p);
    let lhs = act_hw(&cd, &gp, 1, &lam);
    let rhs = hw_ratio(&cd, &gp, &t1);
    assert_eq!(lhs, rhs);
    println!("ratio of T_1(P) matches the dual action on highest weights");

    // ... and the difference-equation solver recovers the monic orbit from
    // the highest-weight side alone
    for i in 1..=2 {
        let solved = solve_difference(&gp, lhs.component(i), cd.d(i)).unwrap();
        assert_eq!(&solved, t1.component(i));
    }
    println!("difference solver reproduces T_1(P) componentwise");

    // character-level GKLO: xi from an A-tuple, compatible with the action
    let a = MonicTuple::new(vec![RootMultiset::linear(rat(5)), RootMultiset::one()]);
    let xi = gklo_to_xi(&cd, &gp, &a);
    println!("gklo_to_xi(A)    = {}", xi);
}
