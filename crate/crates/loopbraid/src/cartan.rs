//! Cartan data for the simple Lie types, the Weyl group acting on weights
//! and roots, reduced words, and the Casimir constant.
//!
//! Conventions, fixed once and used everywhere:
//! - Node numbering is Bourbaki's, and all node indices are 1-based.
//! - The symmetrized form is `(alpha_i, alpha_j) = d_i a_ij` with the
//!   minimal symmetrizers `d_i in {1,2,3}`.
//! - `a_ij = <alpha_j, alpha_i^vee>`, so `alpha_j = sum_i a_ij varpi_i`
//!   (column `j` of the Cartan matrix in the fundamental-weight basis),
//!   the reflection acts on weights by `s_j: m_i -> m_i - m_j a_ij`, and
//!   on roots by `s_j: alpha_i -> alpha_i - a_ji alpha_j`.
//! - Words act right-to-left: the word `(j_1, ..., j_p)` applies the
//!   reflection `s_{j_p}` first and `s_{j_1}` last.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exact::{rat, Rat};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CartanError {
    #[error("illegal Lie type: {0}")]
    IllegalType(String),
    #[error("internal convention inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("word is not reduced")]
    NotReduced,
}

/// The seven series of simple Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A simple Lie type such as `B3`, with the rank validated against the
/// series' legal range (A: n >= 1, B/C: n >= 2, D: n >= 4, E: 6..8, F4, G2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<Self, CartanError> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(LieType { series, rank })
        } else {
            Err(CartanError::IllegalType(format!("{:?}{}", series, rank)))
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl FromStr for LieType {
    type Err = CartanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next() {
            Some('A') | Some('a') => Series::A,
            Some('B') | Some('b') => Series::B,
            Some('C') | Some('c') => Series::C,
            Some('D') | Some('d') => Series::D,
            Some('E') | Some('e') => Series::E,
            Some('F') | Some('f') => Series::F,
            Some('G') | Some('g') => Series::G,
            _ => return Err(CartanError::IllegalType(s.to_owned())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| CartanError::IllegalType(s.to_owned()))?;
        LieType::new(series, rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

/// A root in the simple-root basis (integer coordinates).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    pub fn simple(n: usize, i: usize) -> Self {
        let mut coords = vec![0; n];
        coords[i - 1] = 1;
        Root { coords }
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

/// A weight in the fundamental-weight basis (integer coordinates).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight { coords: vec![0; n] }
    }

    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut coords = vec![0; n];
        coords[i - 1] = 1;
        Weight { coords }
    }

    /// rho = sum of all fundamental weights.
    pub fn rho(n: usize) -> Self {
        Weight { coords: vec![1; n] }
    }
}

/// A word in the generators, letters being 1-based node indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeylWord {
    pub letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word of the inverse element.
    pub fn reversed(&self) -> WeylWord {
        WeylWord {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l)?;
        }
        write!(f, ")")
    }
}

/// The Casimir constant data: `c_g` is the quadratic Casimir eigenvalue on
/// the adjoint representation, `kappa = c_g / 4` and `two_kappa = c_g / 2`
/// is always a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaData {
    pub two_kappa: i64,
    pub c_g: Rat,
}

/// Cartan matrix, symmetrizers and braid exponents of a simple Lie type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    lie_type: LieType,
    n: usize,
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
    m: Vec<Vec<i64>>,
}

/// Braid exponent from the product `a_ij * a_ji`: 0, 1, 2, 3 give 2, 3, 4, 6.
fn braid_exponent(prod: i64) -> i64 {
    match prod {
        0 => 2,
        1 => 3,
        2 => 4,
        3 => 6,
        _ => unreachable!("a_ij * a_ji out of range for finite type"),
    }
}

/// Build the Cartan data of a legal simple Lie type in the Bourbaki
/// numbering. The symmetrizability identity `d_i a_ij = d_j a_ji` is
/// verified before returning.
pub fn cartan_data(lie_type: LieType) -> Result<CartanData, CartanError> {
    let n = lie_type.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    // 0-based helper for the single/double/triple bonds
    let bond = |a: &mut Vec<Vec<i64>>, i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    let mut d = vec![1i64; n];
    match lie_type.series() {
        Series::A => {
            for i in 0..n - 1 {
                bond(&mut a, i, i + 1, -1, -1);
            }
        }
        Series::B => {
            // nodes 1..n-1 long (d = 2), node n short (d = 1)
            for i in 0..n - 2 {
                bond(&mut a, i, i + 1, -1, -1);
            }
            bond(&mut a, n - 2, n - 1, -1, -2);
            for di in d.iter_mut().take(n - 1) {
                *di = 2;
            }
        }
        Series::C => {
            // nodes 1..n-1 short (d = 1), node n long (d = 2)
            for i in 0..n - 2 {
                bond(&mut a, i, i + 1, -1, -1);
            }
            bond(&mut a, n - 2, n - 1, -2, -1);
            d[n - 1] = 2;
        }
        Series::D => {
            // chain 1..n-1, with node n forking off node n-2
            for i in 0..n - 2 {
                bond(&mut a, i, i + 1, -1, -1);
            }
            bond(&mut a, n - 3, n - 1, -1, -1);
        }
        Series::E => {
            // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4
            let chain = [1usize, 3, 4, 5, 6, 7, 8];
            for w in chain.windows(2) {
                if w[1] <= n {
                    bond(&mut a, w[0] - 1, w[1] - 1, -1, -1);
                }
            }
            bond(&mut a, 2 - 1, 4 - 1, -1, -1);
        }
        Series::F => {
            // 1 - 2 => 3 - 4 with nodes 1, 2 long
            bond(&mut a, 0, 1, -1, -1);
            bond(&mut a, 1, 2, -1, -2);
            bond(&mut a, 2, 3, -1, -1);
            d[0] = 2;
            d[1] = 2;
        }
        Series::G => {
            // node 1 short, node 2 long
            bond(&mut a, 0, 1, -3, -1);
            d[1] = 3;
        }
    }
    let mut m = vec![vec![1i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m[i][j] = braid_exponent(a[i][j] * a[j][i]);
            }
        }
    }
    let cd = CartanData {
        lie_type,
        n,
        a,
        d,
        m,
    };
    for i in 0..n {
        for j in 0..n {
            if cd.d[i] * cd.a[i][j] != cd.d[j] * cd.a[j][i] {
                return Err(CartanError::InternalInconsistency(format!(
                    "symmetrizability fails at ({}, {}) for {}",
                    i + 1,
                    j + 1,
                    lie_type
                )));
            }
        }
    }
    Ok(cd)
}

impl CartanData {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    /// Number of nodes.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Cartan matrix entry, 1-based indices.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i - 1][j - 1]
    }

    /// Symmetrizer, 1-based index.
    pub fn d(&self, i: usize) -> i64 {
        self.d[i - 1]
    }

    /// Braid exponent `m_ij`, 1-based indices.
    pub fn m(&self, i: usize, j: usize) -> i64 {
        self.m[i - 1][j - 1]
    }

    pub fn a_matrix(&self) -> &Vec<Vec<i64>> {
        &self.a
    }

    pub fn d_vector(&self) -> &Vec<i64> {
        &self.d
    }

    pub fn m_matrix(&self) -> &Vec<Vec<i64>> {
        &self.m
    }

    /// 1-based node indices.
    pub fn nodes(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    /// Symmetrized bilinear form on roots: `(alpha_i, alpha_j) = d_i a_ij`
    /// extended bilinearly to simple-root coordinates.
    pub fn root_form(&self, x: &Root, y: &Root) -> i64 {
        let mut acc = 0;
        for i in 0..self.n {
            if x.coords[i] == 0 {
                continue;
            }
            for j in 0..self.n {
                acc += x.coords[i] * y.coords[j] * self.d[i] * self.a[i][j];
            }
        }
        acc
    }

    /// Simple reflection `s_j` on a weight: `m_i -> m_i - m_j a_ij`.
    pub fn reflect_weight(&self, j: usize, w: &Weight) -> Weight {
        let mj = w.coords[j - 1];
        let coords = w
            .coords
            .iter()
            .enumerate()
            .map(|(i, &mi)| mi - mj * self.a[i][j - 1])
            .collect();
        Weight { coords }
    }

    /// Simple reflection `s_j` on a root: `c_j -> c_j - sum_i c_i a_ji`.
    pub fn reflect_root(&self, j: usize, r: &Root) -> Root {
        let pairing: i64 = (0..self.n).map(|i| r.coords[i] * self.a[j - 1][i]).sum();
        let mut coords = r.coords.clone();
        coords[j - 1] -= pairing;
        Root { coords }
    }
}

/// Apply a word right-to-left to a weight.
pub fn weyl_apply_weight(cd: &CartanData, word: &WeylWord, w: &Weight) -> Weight {
    let mut out = w.clone();
    for &j in word.letters.iter().rev() {
        out = cd.reflect_weight(j, &out);
    }
    out
}

/// Apply a word right-to-left to a root.
pub fn weyl_apply_root(cd: &CartanData, word: &WeylWord, r: &Root) -> Root {
    let mut out = r.clone();
    for &j in word.letters.iter().rev() {
        out = cd.reflect_root(j, &out);
    }
    out
}

/// The integer matrix of the word's action on the root lattice, columns
/// being the images of the simple roots. Two words represent the same Weyl
/// element exactly when their matrices agree.
pub fn weyl_action_matrix(cd: &CartanData, word: &WeylWord) -> Vec<Vec<i64>> {
    let n = cd.n();
    let mut m = vec![vec![0i64; n]; n];
    for j in 1..=n {
        let img = weyl_apply_root(cd, word, &Root::simple(n, j));
        for (row, coord) in m.iter_mut().zip(&img.coords) {
            row[j - 1] = *coord;
        }
    }
    m
}

/// The complete set of positive roots, together with the highest root.
///
/// Generated by closing the simple roots under all simple reflections and
/// keeping the positive ones; terminates for finite type.
pub fn positive_roots(cd: &CartanData) -> (Vec<Root>, Root) {
    let n = cd.n();
    let mut set: std::collections::BTreeSet<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
    loop {
        let mut fresh = Vec::new();
        for r in &set {
            for j in 1..=n {
                let img = cd.reflect_root(j, r);
                if img.is_positive() && !set.contains(&img) {
                    fresh.push(img);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        set.extend(fresh);
    }
    let roots: Vec<Root> = set.into_iter().collect();
    let max_height = roots.iter().map(Root::height).max().expect("nonempty");
    let highest: Vec<&Root> = roots.iter().filter(|r| r.height() == max_height).collect();
    assert_eq!(
        highest.len(),
        1,
        "highest root must be unique for simple type"
    );
    let theta = highest[0].clone();
    (roots, theta)
}

/// Casimir data from the root system: `c_g = (theta, theta + 2 rho)` under
/// the form `(alpha_i, alpha_j) = d_i a_ij`, using `(rho, alpha_i) = d_i`.
pub fn kappa(cd: &CartanData) -> Result<KappaData, CartanError> {
    let (_, theta) = positive_roots(cd);
    let theta_sq = cd.root_form(&theta, &theta);
    let theta_two_rho: i64 = (0..cd.n()).map(|i| 2 * theta.coords[i] * cd.d[i]).sum();
    let c_g = theta_sq + theta_two_rho;
    if c_g % 2 != 0 || c_g <= 0 {
        return Err(CartanError::InternalInconsistency(format!(
            "Casimir constant c_g = {} is not a positive even integer",
            c_g
        )));
    }
    Ok(KappaData {
        two_kappa: c_g / 2,
        c_g: rat(c_g),
    })
}

/// The roots `s_{j_1} ... s_{j_{b-1}} (alpha_{j_b})` for `b = 1..len`.
///
/// The word is reduced exactly when all of them are positive, in which case
/// they are the (pairwise distinct) inversion set of the element.
pub fn inversion_roots(cd: &CartanData, word: &WeylWord) -> Vec<Root> {
    let n = cd.n();
    let mut out = Vec::with_capacity(word.len());
    for b in 0..word.len() {
        let mut r = Root::simple(n, word.letters[b]);
        for &j in word.letters[..b].iter().rev() {
            r = cd.reflect_root(j, &r);
        }
        out.push(r);
    }
    out
}

pub fn is_reduced(cd: &CartanData, word: &WeylWord) -> bool {
    inversion_roots(cd, word).iter().all(Root::is_positive)
}

/// A reduced word for the longest element, by greedy descent from `rho` to
/// `-rho`: repeatedly reflect at the preferred node whose coordinate is
/// still positive. `smallest_first` fixes the tie-breaking preference, so
/// the two choices give two (usually different) reduced words for the same
/// element.
fn longest_word_with_preference(cd: &CartanData, smallest_first: bool) -> WeylWord {
    let n = cd.n();
    let mut lambda = Weight::rho(n);
    let mut applied = Vec::new();
    loop {
        let pick = if smallest_first {
            (1..=n).find(|&i| lambda.coords[i - 1] > 0)
        } else {
            (1..=n).rev().find(|&i| lambda.coords[i - 1] > 0)
        };
        match pick {
            Some(i) => {
                lambda = cd.reflect_weight(i, &lambda);
                applied.push(i);
            }
            None => break,
        }
    }
    debug_assert_eq!(
        lambda,
        Weight {
            coords: vec![-1; n]
        }
    );
    // reflections were applied to rho first-to-last; under the right-to-left
    // convention the corresponding word lists them in reverse
    applied.reverse();
    WeylWord::new(applied)
}

/// A reduced word for the longest element `w_0`, plus an alternative reduced
/// word for the same element obtained by reversing the node preference.
///
/// Both are verified reduced, of length `|positive roots|`, and equal as
/// Weyl elements (same action matrix on the root lattice).
pub fn longest_word(cd: &CartanData) -> Result<(WeylWord, WeylWord), CartanError> {
    let w = longest_word_with_preference(cd, true);
    let alt = longest_word_with_preference(cd, false);
    let (pos, _) = positive_roots(cd);
    if w.len() != pos.len() || alt.len() != pos.len() {
        return Err(CartanError::InternalInconsistency(
            "longest word length differs from the number of positive roots".into(),
        ));
    }
    if !is_reduced(cd, &w) || !is_reduced(cd, &alt) {
        return Err(CartanError::NotReduced);
    }
    if weyl_action_matrix(cd, &w) != weyl_action_matrix(cd, &alt) {
        return Err(CartanError::InternalInconsistency(
            "the two longest-word candidates differ as Weyl elements".into(),
        ));
    }
    Ok((w, alt))
}
