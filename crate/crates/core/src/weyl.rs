//! Weyl group elements as words in the simple reflections.
//!
//! A word `s_{a_1} s_{a_2} ⋯ s_{a_k}` acts right to left. Two words are the
//! same group element exactly when they move every fundamental weight to the
//! same place; since `ρ` is regular, the image of `ρ` already determines the
//! element, and that image is the key used for enumeration.

use crate::error::{Error, Result};
use crate::rootdata::{Coweight, RootDatum, Weight};
use std::collections::{BTreeSet, HashSet};
use std::fmt;

/// Largest rank for which the whole Weyl group is enumerated by default.
pub const EXHAUSTIVE_RANK_LIMIT: usize = 7;

/// A word in the simple reflections, letters 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    /// The empty word.
    pub fn identity() -> Self {
        WeylWord {
            letters: Vec::new(),
        }
    }

    /// The word with the given letters (applied right to left).
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }

    /// The single reflection `s_k`.
    pub fn s(k: usize) -> Self {
        WeylWord { letters: vec![k] }
    }

    /// The letters, leftmost first.
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Whether this is the empty word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The inverse element (reversed word).
    pub fn inverse(&self) -> Self {
        WeylWord {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// The product `self · other`.
    pub fn compose(&self, other: &WeylWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        WeylWord { letters }
    }

    fn check(&self, rd: &RootDatum) -> Result<()> {
        for &k in &self.letters {
            rd.check_index(k)?;
        }
        Ok(())
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|k| format!("s{k}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `w(x)` for a weight: `s_i(x) = x - ⟨x, α_i∨⟩ α_i`.
pub fn act_on_weight(rd: &RootDatum, w: &WeylWord, x: &Weight) -> Result<Weight> {
    w.check(rd)?;
    if x.len() != rd.rank() {
        return Err(Error::RankMismatch {
            expected: rd.rank(),
            found: x.len(),
        });
    }
    let mut v = x.clone();
    for &k in w.letters.iter().rev() {
        let c = v.0[k - 1].clone();
        v = &v - &rd.simple_root(k).scale(&c);
    }
    Ok(v)
}

/// `w(c)` for a coweight: `s_i(c) = c - ⟨α_i, c⟩ α_i∨`.
pub fn act_on_coweight(rd: &RootDatum, w: &WeylWord, c: &Coweight) -> Result<Coweight> {
    w.check(rd)?;
    if c.len() != rd.rank() {
        return Err(Error::RankMismatch {
            expected: rd.rank(),
            found: c.len(),
        });
    }
    let mut v = c.clone();
    for &k in w.letters.iter().rev() {
        let p = rd.pairing(&rd.simple_root(k), &v)?;
        v.0[k - 1] -= p;
    }
    Ok(v)
}

/// `w(α)` for a root given by simple-root coefficients.
pub fn act_on_root_coeffs(rd: &RootDatum, w: &WeylWord, c: &[i64]) -> Vec<i64> {
    let mut v = c.to_vec();
    for &k in w.letters.iter().rev() {
        v = rd.reflect_root_coeffs(k, &v);
    }
    v
}

/// `w(c)` for an integral coweight in simple-coroot coordinates.
pub fn act_on_coroot_coeffs(rd: &RootDatum, w: &WeylWord, c: &[i64]) -> Vec<i64> {
    let mut v = c.to_vec();
    for &k in w.letters.iter().rev() {
        let p: i64 = (0..rd.rank()).map(|j| rd.cartan()[k - 1][j] * v[j]).sum();
        v[k - 1] -= p;
    }
    v
}

/// Image of `ρ = Σ ϖ_k` under `w`, in ϖ-coordinates.
pub fn rho_image(rd: &RootDatum, w: &WeylWord) -> Vec<i64> {
    let mut v = vec![1i64; rd.rank()];
    for &k in w.letters.iter().rev() {
        reflect_weight_int(rd, k, &mut v);
    }
    v
}

fn reflect_weight_int(rd: &RootDatum, k: usize, v: &mut [i64]) {
    let c = v[k - 1];
    if c != 0 {
        for (x, a) in v.iter_mut().zip(&rd.cartan()[k - 1]) {
            *x -= c * a;
        }
    }
}

/// The matrix of `w` on weights: column `k` holds `w(ϖ_k)`.
pub fn action_matrix(rd: &RootDatum, w: &WeylWord) -> Result<Vec<Weight>> {
    (1..=rd.rank())
        .map(|k| act_on_weight(rd, w, &rd.fundamental_weight(k)))
        .collect()
}

/// Whether two words represent the same group element.
pub fn same_element(rd: &RootDatum, a: &WeylWord, b: &WeylWord) -> Result<bool> {
    Ok(action_matrix(rd, a)? == action_matrix(rd, b)?)
}

/// Length of `w`: the number of positive roots it sends to negative roots.
pub fn length(rd: &RootDatum, w: &WeylWord) -> usize {
    rd.positive_roots()
        .iter()
        .filter(|r| act_on_root_coeffs(rd, w, &r.coeffs).iter().any(|&c| c < 0))
        .count()
}

/// Lexicographically smallest reduced word of the element with `ρ`-image `img`.
fn canonical_from_rho_image(rd: &RootDatum, mut img: Vec<i64>) -> WeylWord {
    // A left descent s of w is a letter with w⁻¹α_s < 0, i.e. ⟨wρ, α_s∨⟩ < 0.
    // The smallest left descent starts the lexicographically smallest reduced word.
    let mut letters = Vec::new();
    while let Some(k) = img.iter().position(|&x| x < 0) {
        letters.push(k + 1);
        reflect_weight_int(rd, k + 1, &mut img);
    }
    WeylWord { letters }
}

/// Lexicographically smallest reduced word for the element `w`.
pub fn canonical_word(rd: &RootDatum, w: &WeylWord) -> Result<WeylWord> {
    w.check(rd)?;
    Ok(canonical_from_rho_image(rd, rho_image(rd, w)))
}

/// Every element of `W`, as canonical words sorted by (length, word).
///
/// Refuses groups of rank above [`EXHAUSTIVE_RANK_LIMIT`].
pub fn enumerate(rd: &RootDatum) -> Result<Vec<WeylWord>> {
    enumerate_with_limit(rd, EXHAUSTIVE_RANK_LIMIT)
}

/// [`enumerate`] with a caller-supplied rank limit.
pub fn enumerate_with_limit(rd: &RootDatum, max_rank: usize) -> Result<Vec<WeylWord>> {
    if rd.rank() > max_rank {
        return Err(Error::SearchBudget {
            rank: rd.rank(),
            limit: max_rank,
        });
    }
    let start = vec![1i64; rd.rank()];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
    let mut layer = vec![start];
    let mut out = Vec::new();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for img in &layer {
            for k in 1..=rd.rank() {
                if img[k - 1] > 0 {
                    let mut v = img.clone();
                    reflect_weight_int(rd, k, &mut v);
                    if seen.insert(v.clone()) {
                        next.push(v);
                    }
                }
            }
        }
        let mut words: Vec<WeylWord> = layer
            .drain(..)
            .map(|img| canonical_from_rho_image(rd, img))
            .collect();
        words.sort();
        out.extend(words);
        layer = next;
    }
    Ok(out)
}

/// `|W|`, computed recursively from orbit sizes of fundamental weights under
/// standard parabolic subgroups (`|W_J| = |W_J · ϖ_k| · |W_{J∖{k}}|`).
pub fn weyl_order(rd: &RootDatum) -> u64 {
    let all: Vec<usize> = (1..=rd.rank()).collect();
    parabolic_order(rd, &all)
}

/// Order of the standard parabolic subgroup `W_J` generated by `{s_k : k ∈ J}`.
pub fn parabolic_order(rd: &RootDatum, j: &[usize]) -> u64 {
    let Some((&k, rest)) = j.split_first() else {
        return 1;
    };
    let mut start = vec![0i64; rd.rank()];
    start[k - 1] = 1;
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &g in j {
            if v[g - 1] != 0 {
                let mut u = v.clone();
                reflect_weight_int(rd, g, &mut u);
                if seen.insert(u.clone()) {
                    stack.push(u);
                }
            }
        }
    }
    seen.len() as u64 * parabolic_order(rd, rest)
}

/// Whether `w⁻¹ α_k` is a positive root.
pub fn inverse_sends_simple_positive(rd: &RootDatum, w: &WeylWord, k: usize) -> bool {
    rho_image(rd, w)[k - 1] > 0
}

/// Whether `w α_k` is a positive root.
pub fn sends_simple_positive(rd: &RootDatum, w: &WeylWord, k: usize) -> bool {
    rho_image(rd, &w.inverse())[k - 1] > 0
}

/// Whether `w` satisfies the two positivity conditions defining `W⁰_{P,P'}`,
/// where `tp`, `tp2` list the simple roots that are not roots of `P`, `P'`.
pub fn is_min_coset_rep(
    rd: &RootDatum,
    w: &WeylWord,
    tp: &BTreeSet<usize>,
    tp2: &BTreeSet<usize>,
) -> bool {
    let img = rho_image(rd, w);
    let inv_img = rho_image(rd, &w.inverse());
    (1..=rd.rank())
        .all(|k| (tp.contains(&k) || img[k - 1] > 0) && (tp2.contains(&k) || inv_img[k - 1] > 0))
}

/// The minimal-length representatives `W⁰_{P,P'}` of `W_P \ W / W_{P'}`:
/// all `w` with `w⁻¹α_i > 0` for `α_i ∉ t(P)` and `wα_j > 0` for `α_j ∉ t(P')`.
pub fn min_coset_reps(
    rd: &RootDatum,
    tp: &BTreeSet<usize>,
    tp2: &BTreeSet<usize>,
) -> Result<Vec<WeylWord>> {
    min_coset_reps_with_limit(rd, tp, tp2, EXHAUSTIVE_RANK_LIMIT)
}

/// [`min_coset_reps`] with a caller-supplied rank limit.
pub fn min_coset_reps_with_limit(
    rd: &RootDatum,
    tp: &BTreeSet<usize>,
    tp2: &BTreeSet<usize>,
    max_rank: usize,
) -> Result<Vec<WeylWord>> {
    for &k in tp.iter().chain(tp2) {
        rd.check_index(k)?;
    }
    Ok(enumerate_with_limit(rd, max_rank)?
        .into_iter()
        .filter(|w| is_min_coset_rep(rd, w, tp, tp2))
        .collect())
}
