//! Bruhat-cell combinatorics: `GL_n` cells and the Weyl-group lemmas behind
//! the blowup descriptions.
//!
//! `GL_n` objects live in the `e`-basis: a permutation `w` is stored as the
//! list `[w(1), …, w(n)]`, a coweight as its `e*`-coordinates, and the root
//! `e_a − e_b` as the pair `(a, b)`. The simple roots are `β_a = e_a − e_{a+1}`.
//! The Borel `Q^n_n` is lower triangular, `Q^n_k` has type `{β_1, …, β_{k−1}}`
//! and `R_n` has type `{β_{n−1}}`.

use crate::error::{Error, Result};
use crate::rootdata::{Coweight, RootDatum};
use crate::subregular::{SeriesTag, SubregularClass};
use crate::weyl::{self, WeylWord};
use std::collections::BTreeSet;
use std::fmt;

/// Largest `n` for which `S_n` is searched exhaustively.
pub const GLN_LIMIT: usize = 8;

/// Largest rank for which the Weyl-group lemma verifiers search exhaustively.
pub const LEMMA_RANK_LIMIT: usize = 5;

/// A permutation of `{1, …, n}`, stored as `[w(1), …, w(n)]`.
pub type Permutation = Vec<usize>;

/// A `GL_n` coweight in the basis `e_1*, …, e_n*`.
pub type GlnCoweight = Vec<i64>;

/// The `GL_n` root `e_a − e_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlnRoot {
    /// Index `a`.
    pub a: usize,
    /// Index `b`.
    pub b: usize,
}

impl GlnRoot {
    /// Whether the root is positive (`a < b`).
    pub fn is_positive(&self) -> bool {
        self.a < self.b
    }

    /// Coefficients in the simple roots `β_1, …, β_{n−1}`.
    pub fn beta_coeffs(&self, n: usize) -> Vec<i64> {
        let (lo, hi, sign) = if self.a < self.b {
            (self.a, self.b, 1)
        } else {
            (self.b, self.a, -1)
        };
        (1..n)
            .map(|m| if lo <= m && m < hi { sign } else { 0 })
            .collect()
    }

    /// Image under a permutation: `w(e_a − e_b) = e_{w(a)} − e_{w(b)}`.
    pub fn apply(&self, w: &[usize]) -> GlnRoot {
        GlnRoot {
            a: w[self.a - 1],
            b: w[self.b - 1],
        }
    }
}

impl fmt::Display for GlnRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi, sign) = if self.a < self.b {
            (self.a, self.b, "")
        } else {
            (self.b, self.a, "−")
        };
        let terms: Vec<String> = (lo..hi).rev().map(|m| format!("{sign}β{m}")).collect();
        if sign.is_empty() {
            write!(f, "{}", terms.join("+"))
        } else {
            write!(f, "{}", terms.concat())
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if !(2..=GLN_LIMIT).contains(&n) {
        return Err(Error::GlnRange(format!("n = {n} outside 2..={GLN_LIMIT}")));
    }
    Ok(())
}

/// The identity permutation of `{1, …, n}`.
pub fn identity_perm(n: usize) -> Permutation {
    (1..=n).collect()
}

/// Inverse permutation.
pub fn inverse_perm(w: &[usize]) -> Permutation {
    let mut inv = vec![0; w.len()];
    for (x, &y) in w.iter().enumerate() {
        inv[y - 1] = x + 1;
    }
    inv
}

/// The permutation of a Weyl word of `A_{n−1}`, where `s_a` swaps `a` and `a+1`.
pub fn word_to_perm(n: usize, w: &WeylWord) -> Permutation {
    let mut p = identity_perm(n);
    for &a in w.letters().iter().rev() {
        for v in p.iter_mut() {
            if *v == a {
                *v = a + 1;
            } else if *v == a + 1 {
                *v = a;
            }
        }
    }
    p
}

/// All permutations of `{1, …, n}` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut p = identity_perm(n);
    loop {
        out.push(p.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..n)
            .rev()
            .find(|&j| p[j] > p[i])
            .expect("successor exists");
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

/// `w_p = s_{n−1} s_{n−2} ⋯ s_p`: sends `p ↦ n` and `x ↦ x − 1` for `p < x ≤ n`.
pub fn w_p(n: usize, p: usize) -> Result<Permutation> {
    check_n(n)?;
    if !(1..=n).contains(&p) {
        return Err(Error::GlnRange(format!("p = {p} outside 1..={n}")));
    }
    Ok((1..=n)
        .map(|x| match x {
            _ if x == p => n,
            _ if x > p => x - 1,
            _ => x,
        })
        .collect())
}

/// The word `s_{n−1} ⋯ s_p` of `w_p`.
pub fn w_p_word(n: usize, p: usize) -> WeylWord {
    WeylWord::new((p..n).rev().collect())
}

/// Survivors of the slope inequalities `⟨e_1 + ⋯ + e_i, λ⟩ ≥ −i/(n−1)` among
/// `λ = −e_n* − Σ d_i β_i∨` with every `d_i ∈ [0, n]`.
pub fn degree_filter(n: usize) -> Result<Vec<GlnCoweight>> {
    check_n(n)?;
    let m = n - 1;
    let mut d = vec![0i64; m];
    let mut out = Vec::new();
    loop {
        let mut lambda = vec![0i64; n];
        lambda[n - 1] = -1;
        for (idx, &di) in d.iter().enumerate() {
            lambda[idx] -= di;
            lambda[idx + 1] += di;
        }
        let mut partial = 0i64;
        let survives = (1..=m).all(|i| {
            partial += lambda[i - 1];
            partial * m as i64 >= -(i as i64)
        });
        if survives {
            out.push(lambda);
        }
        let Some(pos) = (0..m).find(|&k| d[k] < n as i64) else {
            break;
        };
        d[pos] += 1;
        for x in d.iter_mut().take(pos) {
            *x = 0;
        }
    }
    out.sort();
    Ok(out)
}

/// `W⁰_{R_n, Q^n_k}` by brute force over `S_n`: `w⁻¹(a) < w⁻¹(a+1)` for
/// `a ≠ n−1` and `w(b) < w(b+1)` for `b ≥ k`.
pub fn gln_coset_reps(n: usize, k: usize) -> Result<Vec<Permutation>> {
    check_n(n)?;
    if !(1..=n).contains(&k) {
        return Err(Error::GlnRange(format!("k = {k} outside 1..={n}")));
    }
    Ok(all_perms(n)
        .into_iter()
        .filter(|w| {
            let inv = inverse_perm(w);
            (1..n - 1).all(|a| inv[a - 1] < inv[a]) && (k..n).all(|b| w[b - 1] < w[b])
        })
        .collect())
}

/// The expected coset set `{w_p | 1 ≤ p < k} ∪ {w_n}`.
pub fn expected_gln_coset_reps(n: usize, k: usize) -> Result<Vec<Permutation>> {
    let mut v = (1..k)
        .chain([n])
        .map(|p| w_p(n, p))
        .collect::<Result<Vec<_>>>()?;
    v.sort();
    v.dedup();
    Ok(v)
}

/// Whether `e_a − e_b` is a root of `Q^n_k` (negative, or `a < b` with `a ≥ k`).
pub fn in_q(k: usize, r: &GlnRoot) -> bool {
    !r.is_positive() || r.a >= k
}

/// The roots `β` of `R_u(R_n)` with `w_p⁻¹ β` not a root of `Q^n_k`.
pub fn unipotent_quotient_roots(n: usize, k: usize, p: usize) -> Result<Vec<GlnRoot>> {
    check_n(n)?;
    if !(p < k && k <= n) || p == 0 {
        return Err(Error::GlnRange(format!(
            "need 1 ≤ p < k ≤ n, got p = {p}, k = {k}, n = {n}"
        )));
    }
    let inv = inverse_perm(&w_p(n, p)?);
    let mut out: Vec<GlnRoot> = (1..n)
        .map(|q| GlnRoot { a: n, b: q })
        .filter(|r| !in_q(k, &r.apply(&inv)))
        .collect();
    out.sort_by_key(|r| std::cmp::Reverse(r.b));
    Ok(out)
}

/// The chain `{−β_{n−1}, −β_{n−1} − β_{n−2}, …, −β_{n−1} − ⋯ − β_p}`.
pub fn expected_unipotent_chain(n: usize, p: usize) -> Vec<GlnRoot> {
    (p..n).rev().map(|q| GlnRoot { a: n, b: q }).collect()
}

fn coroot_positive(rd: &RootDatum, w: &WeylWord, c: &[i64]) -> bool {
    let img = weyl::act_on_coroot_coeffs(rd, &w.inverse(), c);
    img.iter().all(|&x| x >= 0) && img.iter().any(|&x| x > 0)
}

fn unit(l: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0; l];
    v[k - 1] = 1;
    v
}

fn check_rank(rd: &RootDatum) -> Result<()> {
    if rd.rank() > LEMMA_RANK_LIMIT {
        return Err(Error::SearchBudget {
            rank: rd.rank(),
            limit: LEMMA_RANK_LIMIT,
        });
    }
    Ok(())
}

fn canonical_set(
    rd: &RootDatum,
    words: impl IntoIterator<Item = WeylWord>,
) -> Result<BTreeSet<Vec<usize>>> {
    words
        .into_iter()
        .map(|w| Ok(weyl::canonical_word(rd, &w)?.letters().to_vec()))
        .collect()
}

/// Whether `(β_j, c)` is a valid configuration: `c` lists the nodes of a
/// connected component of `Δ ∖ {β_j}` of type `A_n` as a chain, with `c_n`
/// adjacent to `β_j` and no other node of `c` adjacent to it.
pub fn is_valid_sigma_configuration(rd: &RootDatum, beta_j: usize, c: &[usize]) -> bool {
    if rd.check_index(beta_j).is_err() || c.is_empty() || c.contains(&beta_j) {
        return false;
    }
    let others: Vec<usize> = (1..=rd.rank()).filter(|&k| k != beta_j).collect();
    let mut sorted = c.to_vec();
    sorted.sort_unstable();
    if !rd.components(&others).contains(&sorted) {
        return false;
    }
    let Some(chain) = rd.as_simply_laced_chain(&sorted) else {
        return false;
    };
    let mut rev = chain.clone();
    rev.reverse();
    (chain == c || rev == c)
        && rd.adjacent(*c.last().expect("nonempty"), beta_j)
        && c[..c.len() - 1].iter().all(|&x| !rd.adjacent(x, beta_j))
}

/// Every valid `(β_j, c)` configuration of the group.
pub fn valid_sigma_configurations(rd: &RootDatum) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    for j in 1..=rd.rank() {
        let others: Vec<usize> = (1..=rd.rank()).filter(|&k| k != j).collect();
        for comp in rd.components(&others) {
            if let Some(mut chain) = rd.as_simply_laced_chain(&comp) {
                if chain.first().is_some_and(|&x| rd.adjacent(x, j)) {
                    chain.reverse();
                }
                if is_valid_sigma_configuration(rd, j, &chain) {
                    out.push((j, chain));
                }
            }
        }
    }
    out
}

/// All `w` with `w⁻¹β_k∨ > 0` for `β_k ≠ β_{c,n}` and `w⁻¹(β_{c,n}∨ + β_j∨) > 0`,
/// found by exhaustive search, as canonical words.
pub fn sigma_set_check(rd: &RootDatum, beta_j: usize, c: &[usize]) -> Result<BTreeSet<Vec<usize>>> {
    check_rank(rd)?;
    if !is_valid_sigma_configuration(rd, beta_j, c) {
        return Err(Error::InvalidConfiguration(format!(
            "({beta_j}, {c:?}) is not a valid chain configuration in {}",
            rd.name()
        )));
    }
    let l = rd.rank();
    let cn = *c.last().expect("nonempty");
    let mut pair = unit(l, cn);
    pair[beta_j - 1] += 1;
    let words = weyl::enumerate_with_limit(rd, LEMMA_RANK_LIMIT)?
        .into_iter()
        .filter(|w| {
            (1..=l)
                .filter(|&k| k != cn)
                .all(|k| coroot_positive(rd, w, &unit(l, k)))
                && coroot_positive(rd, w, &pair)
        });
    canonical_set(rd, words)
}

/// `{1} ∪ {s_{c,n} s_{c,n−1} ⋯ s_{c,k} | 1 ≤ k ≤ n}` as canonical words.
pub fn expected_sigma_set(rd: &RootDatum, c: &[usize]) -> Result<BTreeSet<Vec<usize>>> {
    canonical_set(rd, chain_words(c))
}

/// `⟨β_{c,n}, β_j∨⟩`; the chain description of the set needs this to be `−1`.
pub fn sigma_end_pairing(rd: &RootDatum, beta_j: usize, c: &[usize]) -> i64 {
    rd.cartan_entry(*c.last().expect("nonempty"), beta_j)
}

/// `1, s_{c,n}, s_{c,n} s_{c,n−1}, …, s_{c,n} ⋯ s_{c,1}`.
pub fn chain_words(c: &[usize]) -> Vec<WeylWord> {
    (0..=c.len())
        .map(|m| WeylWord::new(c.iter().rev().take(m).copied().collect()))
        .collect()
}

/// Which degree bound a Borel-cell search imposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CellBound {
    /// `λ ≤ −α_j∨`.
    AlphaJ,
    /// `λ ≤ −α_i∨`.
    AlphaI,
}

/// A surviving Borel cell `(w, λ)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BorelCell {
    /// Canonical word of `w`.
    pub w: Vec<usize>,
    /// `λ` in simple-coroot coordinates.
    pub lambda: Vec<i64>,
}

/// Pairs `(w, λ)` with `w ∈ W⁰_{P,B}`, `λ` below the bound, `−λ` and `−wλ` in
/// `{α_i∨, α_j∨, α_i∨ + α_j∨}`, and `⟨ϖ_k, wλ⟩ = ⟨ϖ_k, μ⟩` for `α_k ∈ t(P)`.
pub fn borel_cell_filter(class: &SubregularClass, bound: CellBound) -> Result<BTreeSet<BorelCell>> {
    let rd = &class.rd;
    check_rank(rd)?;
    let j = class.alpha_j.ok_or_else(|| Error::UnsupportedTag {
        op: "borel_cell_filter",
        tag: class.label(),
    })?;
    let (i, l) = (class.alpha_i, rd.rank());
    let ai = unit(l, i);
    let aj = unit(l, j);
    let aij: Vec<i64> = ai.iter().zip(&aj).map(|(x, y)| x + y).collect();
    let candidates = [ai.clone(), aj.clone(), aij];
    let neg = |v: &Vec<i64>| v.iter().map(|x| -x).collect::<Vec<i64>>();
    let bound_vec = neg(match bound {
        CellBound::AlphaJ => &aj,
        CellBound::AlphaI => &ai,
    });
    let slopes: Vec<&Vec<i64>> = candidates
        .iter()
        .filter(|c| {
            class.tp.t().iter().all(|&k| {
                let tau = Coweight::from_ints(&neg(c));
                tau.0[k - 1] == class.mu.0[k - 1]
            })
        })
        .collect();
    let borel: BTreeSet<usize> = (1..=l).collect();
    let reps = weyl::min_coset_reps_with_limit(rd, class.tp.t(), &borel, LEMMA_RANK_LIMIT)?;
    let mut out = BTreeSet::new();
    for w in &reps {
        for tau in &slopes {
            let lambda = weyl::act_on_coroot_coeffs(rd, &w.inverse(), &neg(tau));
            let below = bound_vec.iter().zip(&lambda).all(|(b, x)| b - x >= 0);
            if below && candidates.contains(&neg(&lambda)) {
                out.insert(BorelCell {
                    w: weyl::canonical_word(rd, w)?.letters().to_vec(),
                    lambda,
                });
            }
        }
    }
    Ok(out)
}

/// The expected survivors of [`borel_cell_filter`].
///
/// For `λ ≤ −α_j∨`: `(1, −α_i∨ − α_j∨)` and `(s_{c_0,n_0} ⋯ s_{c_0,k}, −α_j∨)`.
/// For `λ ≤ −α_i∨` outside tag A: `w = 1` with `λ = −α_i∨` or `−α_i∨ − α_j∨`
///
/// For `λ ≤ −α_i∨` in tag A: `(1, −α_i∨ − α_j∨)` and `(s_j s_{j+1} ⋯ s_k, −α_i∨)`.
pub fn expected_borel_cells(
    class: &SubregularClass,
    bound: CellBound,
) -> Result<BTreeSet<BorelCell>> {
    let rd = &class.rd;
    let j = class.alpha_j.ok_or_else(|| Error::UnsupportedTag {
        op: "expected_borel_cells",
        tag: class.label(),
    })?;
    let (i, l) = (class.alpha_i, rd.rank());
    let mut ai = vec![0; l];
    ai[i - 1] = -1;
    let mut aj = vec![0; l];
    aj[j - 1] = -1;
    let aij: Vec<i64> = ai.iter().zip(&aj).map(|(x, y)| x + y).collect();
    let cell = |w: &WeylWord, lambda: &Vec<i64>| -> Result<BorelCell> {
        Ok(BorelCell {
            w: weyl::canonical_word(rd, w)?.letters().to_vec(),
            lambda: lambda.clone(),
        })
    };
    let mut out = BTreeSet::new();
    out.insert(cell(&WeylWord::identity(), &aij)?);
    match (bound, class.tag) {
        (CellBound::AlphaJ, _) => {
            for w in chain_words(&class.c0).iter().skip(1) {
                out.insert(cell(w, &aj)?);
            }
        }
        (CellBound::AlphaI, SeriesTag::A) => {
            let mut c1 = class.c1.clone();
            c1.reverse();
            for w in chain_words(&c1).iter().skip(1) {
                out.insert(cell(w, &ai)?);
            }
        }
        (CellBound::AlphaI, _) => {
            out.insert(cell(&WeylWord::identity(), &ai)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_datum, Series};
    use crate::subregular::enumerate_subregular;

    fn rd(s: Series, l: usize) -> RootDatum {
        build_root_datum(s, l).unwrap()
    }

    fn set(words: &[&[usize]]) -> BTreeSet<Vec<usize>> {
        words.iter().map(|w| w.to_vec()).collect()
    }

    #[test]
    fn w_p_examples() {
        assert_eq!(w_p(4, 4).unwrap(), identity_perm(4));
        assert_eq!(w_p(3, 1).unwrap(), vec![3, 1, 2]);
        assert_eq!(w_p(3, 2).unwrap(), vec![1, 3, 2]);
        for n in 2..=6 {
            for p in 1..=n {
                assert_eq!(word_to_perm(n, &w_p_word(n, p)), w_p(n, p).unwrap());
            }
        }
        assert!(w_p(3, 4).is_err());
    }

    #[test]
    fn degree_filter_two_survivors() {
        assert_eq!(degree_filter(2).unwrap(), vec![vec![-1, 0], vec![0, -1]]);
        for n in 2..=8 {
            let mut en = vec![0; n];
            en[n - 1] = -1;
            let mut en1 = vec![0; n];
            en1[n - 2] = -1;
            let mut expected = vec![en, en1];
            expected.sort();
            assert_eq!(degree_filter(n).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn gln_cosets_match_formula_and_weyl() {
        assert_eq!(gln_coset_reps(4, 2).unwrap(), {
            let mut v = vec![w_p(4, 1).unwrap(), identity_perm(4)];
            v.sort();
            v
        });
        assert_eq!(gln_coset_reps(3, 1).unwrap(), vec![identity_perm(3)]);
        for n in 2..=6 {
            let a = rd(Series::A, n - 1);
            for k in 1..=n {
                let brute = gln_coset_reps(n, k).unwrap();
                assert_eq!(brute, expected_gln_coset_reps(n, k).unwrap(), "n={n} k={k}");
                let tp: BTreeSet<usize> = [n - 1].into();
                let tq: BTreeSet<usize> = (1..k).collect();
                let mut via_weyl: Vec<Permutation> = weyl::min_coset_reps(&a, &tp, &tq)
                    .unwrap()
                    .iter()
                    .map(|w| word_to_perm(n, w))
                    .collect();
                via_weyl.sort();
                assert_eq!(brute, via_weyl, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn unipotent_chains() {
        let r = unipotent_quotient_roots(3, 3, 1).unwrap();
        assert_eq!(
            r.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            vec!["−β2", "−β2−β1"]
        );
        assert_eq!(unipotent_quotient_roots(4, 4, 3).unwrap().len(), 1);
        for n in 2..=6 {
            for k in 2..=n {
                for p in 1..k {
                    let r = unipotent_quotient_roots(n, k, p).unwrap();
                    assert_eq!(r, expected_unipotent_chain(n, p));
                    assert_eq!(r.len(), n - p);
                }
            }
        }
        assert_eq!(GlnRoot { a: 3, b: 1 }.beta_coeffs(3), vec![-1, -1]);
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(
            sigma_set_check(&rd(Series::A, 2), 2, &[1]).unwrap(),
            set(&[&[], &[1]])
        );
        assert_eq!(
            sigma_set_check(&rd(Series::A, 3), 3, &[1, 2]).unwrap(),
            set(&[&[], &[2], &[2, 1]])
        );
        assert_eq!(
            sigma_set_check(&rd(Series::D, 4), 2, &[1]).unwrap(),
            set(&[&[], &[1]])
        );
        assert!(sigma_set_check(&rd(Series::A, 3), 3, &[2, 1]).is_err());
        assert!(matches!(
            sigma_set_check(&rd(Series::A, 6), 6, &[1, 2, 3, 4, 5]),
            Err(Error::SearchBudget { .. })
        ));
    }

    #[test]
    fn sigma_all_configurations() {
        for (s, l) in [
            (Series::A, 2),
            (Series::A, 3),
            (Series::A, 4),
            (Series::A, 5),
            (Series::B, 3),
            (Series::C, 3),
            (Series::D, 4),
            (Series::D, 5),
            (Series::G, 2),
            (Series::B, 4),
            (Series::C, 4),
            (Series::F, 4),
        ] {
            let r = rd(s, l);
            let configs = valid_sigma_configurations(&r);
            assert!(!configs.is_empty());
            for (j, c) in configs {
                let got = sigma_set_check(&r, j, &c).unwrap();
                let matches = got == expected_sigma_set(&r, &c).unwrap();
                assert_eq!(
                    matches,
                    sigma_end_pairing(&r, j, &c) == -1,
                    "{s}{l} j={j} c={c:?}: {got:?}"
                );
                if matches {
                    assert_eq!(got.len(), c.len() + 1);
                }
            }
        }
    }

    #[test]
    fn sigma_short_end_counterexample() {
        let b3 = rd(Series::B, 3);
        let got = sigma_set_check(&b3, 3, &[1, 2]).unwrap();
        assert_eq!(got.len(), 7);
        assert!(got.contains(
            weyl::canonical_word(&b3, &WeylWord::new(vec![2, 3]))
                .unwrap()
                .letters()
        ));
    }

    #[test]
    fn borel_cells_match_lemmas() {
        for (s, l) in Series::all_types(5) {
            for class in enumerate_subregular(&rd(s, l)).unwrap() {
                if class.tag == SeriesTag::A1 {
                    continue;
                }
                for bound in [CellBound::AlphaJ, CellBound::AlphaI] {
                    let got = borel_cell_filter(&class, bound).unwrap();
                    let want = expected_borel_cells(&class, bound).unwrap();
                    assert_eq!(got, want, "{} {bound:?}", class.describe());
                }
                let trivial = BorelCell {
                    w: vec![],
                    lambda: {
                        let mut v = vec![0; l];
                        v[class.alpha_i - 1] = -1;
                        v[class.j() - 1] -= 1;
                        v
                    },
                };
                assert!(borel_cell_filter(&class, CellBound::AlphaJ)
                    .unwrap()
                    .contains(&trivial));
            }
        }
    }

    #[test]
    fn borel_examples() {
        let a2 = enumerate_subregular(&rd(Series::A, 2)).unwrap().remove(0);
        let lambdas: BTreeSet<Vec<i64>> = borel_cell_filter(&a2, CellBound::AlphaJ)
            .unwrap()
            .into_iter()
            .map(|c| c.lambda)
            .collect();
        assert_eq!(lambdas, [vec![0, -1], vec![-1, -1]].into());
        let c2 = enumerate_subregular(&rd(Series::C, 2)).unwrap().remove(0);
        assert!(borel_cell_filter(&c2, CellBound::AlphaI)
            .unwrap()
            .iter()
            .all(|c| c.w.is_empty()));
    }
}
