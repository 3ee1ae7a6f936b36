//! Torus-weight bookkeeping for subregular slices.
//!
//! The torus `Z(L)_rig` is identified with `G_m` through `−ϖ_i∨` (with
//! `G_m × G_m` through `(−ϖ_i∨, −ϖ_{i+1}∨)` for tag A), and every weight
//! multiset below is expressed in that identification.

use crate::error::{Error, Result};
use crate::parabolic;
use crate::rational::{q, to_integer, Rational};
use crate::subregular::{standard_class, SeriesTag, SubregularClass};
use num_traits::{Signed, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// A finite multiset of integer weight vectors (length 1, or 2 for tag A).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeightMultiset {
    entries: BTreeMap<Vec<i64>, u64>,
}

impl WeightMultiset {
    /// The empty multiset.
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a multiset from `(weight, multiplicity)` pairs, dropping zero multiplicities.
    pub fn from_pairs<I: IntoIterator<Item = (Vec<i64>, u64)>>(pairs: I) -> Self {
        let mut m = Self::new();
        for (w, k) in pairs {
            m.insert(w, k);
        }
        m
    }

    /// Builds a scalar multiset from `(weight, multiplicity)` pairs.
    pub fn scalar<I: IntoIterator<Item = (i64, u64)>>(pairs: I) -> Self {
        Self::from_pairs(pairs.into_iter().map(|(w, k)| (vec![w], k)))
    }

    /// Adds `k` copies of `w`.
    pub fn insert(&mut self, w: Vec<i64>, k: u64) {
        if k > 0 {
            *self.entries.entry(w).or_insert(0) += k;
        }
    }

    /// Multiplicity of `w`.
    pub fn multiplicity(&self, w: &[i64]) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Sorted `(weight, multiplicity)` entries.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<i64>, u64)> {
        self.entries.iter().map(|(w, &k)| (w, k))
    }

    /// Number of elements counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// `Σ w · multiplicity`, componentwise.
    pub fn weighted_sum(&self) -> Vec<i64> {
        let width = self.entries.keys().next().map_or(1, Vec::len);
        let mut out = vec![0; width];
        for (w, &k) in &self.entries {
            for (o, x) in out.iter_mut().zip(w) {
                *o += x * k as i64;
            }
        }
        out
    }

    /// Every weight multiplied componentwise by `factor` (broadcast when `factor` has length 1).
    pub fn scaled(&self, factor: &[i64]) -> Self {
        Self::from_pairs(self.entries.iter().map(|(w, &k)| {
            let v = if factor.len() == 1 {
                w.iter().map(|x| x * factor[0]).collect()
            } else {
                w.iter()
                    .flat_map(|x| factor.iter().map(move |f| x * f))
                    .collect()
            };
            (v, k)
        }))
    }

    /// The sub-multiset of weights all of whose components are divisible by `d`.
    pub fn divisible_by(&self, d: i64) -> Self {
        Self::from_pairs(
            self.entries
                .iter()
                .filter(|(w, _)| w.iter().all(|x| x % d == 0))
                .map(|(w, &k)| (w.clone(), k)),
        )
    }

    /// Exponent notation such as `1²2³` or, with `ascii`, `1^2 2^3`.
    pub fn render(&self, ascii: bool) -> String {
        let weight = |w: &Vec<i64>| {
            if w.len() == 1 {
                w[0].to_string()
            } else {
                format!(
                    "({})",
                    w.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
                )
            }
        };
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(w, &k)| {
                if ascii {
                    format!("{}^{}", weight(w), k)
                } else {
                    format!("{}{}", weight(w), superscript(k))
                }
            })
            .collect();
        if parts.is_empty() {
            "∅".into()
        } else if ascii {
            parts.join(" ")
        } else {
            parts.concat()
        }
    }
}

fn superscript(k: u64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap_or(0) as usize])
        .collect()
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

struct Entry<'a>(&'a [i64], u64);

impl Serialize for Entry<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Entry", 2)?;
        if self.0.len() == 1 {
            st.serialize_field("weight", &self.0[0])?;
        } else {
            st.serialize_field("weight", self.0)?;
        }
        st.serialize_field("multiplicity", &self.1)?;
        st.end()
    }
}

impl Serialize for WeightMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (w, &k) in &self.entries {
            seq.serialize_element(&Entry(w, k))?;
        }
        seq.end()
    }
}

/// `−⟨2ρ, μ⟩`, the dimension of the fibres of the slice over its base.
pub fn slice_fiber_dimension(class: &SubregularClass) -> Result<i64> {
    let v = -parabolic::two_rho_pairing(&class.rd, &class.mu);
    match to_integer(&v) {
        Some(n) if n >= 0 => Ok(n),
        _ => Err(Error::Consistency(format!(
            "−⟨2ρ, μ⟩ = {v} for {}",
            class.describe()
        ))),
    }
}

fn torus_coweights(class: &SubregularClass) -> Vec<usize> {
    match class.tag {
        SeriesTag::A => vec![class.alpha_i, class.alpha_i + 1],
        _ => vec![class.alpha_i],
    }
}

/// `Z(L)_rig`-weights of the slice: each `α ∈ Φ_μ` contributes mass `−⟨α, μ⟩`
/// at the weight `⟨α, ϖ_i∨⟩` (a pair in tag A); masses are summed per weight.
pub fn slice_weights(class: &SubregularClass) -> Result<WeightMultiset> {
    let rd = &class.rd;
    let coweights: Vec<_> = torus_coweights(class)
        .into_iter()
        .map(|k| rd.fundamental_coweight(k))
        .collect();
    let mut mass: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
    for root in parabolic::phi_mu(rd, &class.mu) {
        let weight = coweights
            .iter()
            .map(|c| {
                let p = rd.root_pairing(&root.coeffs, c);
                to_integer(&p).ok_or_else(|| Error::Consistency(format!("non-integral weight {p}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        *mass.entry(weight).or_insert_with(Rational::zero) -=
            rd.root_pairing(&root.coeffs, &class.mu);
    }
    let mut out = WeightMultiset::new();
    for (w, m) in mass {
        let k = to_integer(&m).filter(|k| *k >= 0).ok_or_else(|| {
            Error::Consistency(format!("mass {m} at weight {w:?} in {}", class.describe()))
        })?;
        if w.iter().any(|x| x.is_negative()) || w.iter().all(|x| x.is_zero()) {
            return Err(Error::Consistency(format!(
                "non-positive weight {w:?} in {}",
                class.describe()
            )));
        }
        out.insert(w, k as u64);
    }
    Ok(out)
}

/// `−(μ | ϖ_i∨)` (componentwise in tag A), checked against the tag table.
pub fn mu_weight(class: &SubregularClass) -> Result<Vec<i64>> {
    let rd = &class.rd;
    let values = torus_coweights(class)
        .into_iter()
        .map(|k| {
            let v = -rd.killing_form(&class.mu, &rd.fundamental_coweight(k))?;
            to_integer(&v).ok_or_else(|| Error::Consistency(format!("(μ | ϖ_{k}∨) = {v}")))
        })
        .collect::<Result<Vec<i64>>>()?;
    let expected = match class.tag {
        SeriesTag::A => vec![1, 1],
        SeriesTag::A1 => vec![2],
        _ => vec![class.d],
    };
    if values != expected {
        return Err(Error::Consistency(format!(
            "(μ | −) = {values:?} but {expected:?} expected for {}",
            class.describe()
        )));
    }
    Ok(values)
}

/// Looijenga weights `{1, g_1, …, g_l}` of the affine cone, unscaled.
pub fn looijenga_weights(class: &SubregularClass) -> WeightMultiset {
    let mut m = WeightMultiset::scalar([(1, 1)]);
    for g in class.rd.coroot_integers() {
        m.insert(vec![g], 1);
    }
    m
}

/// Looijenga weights multiplied by [`mu_weight`].
pub fn base_weights(class: &SubregularClass) -> Result<WeightMultiset> {
    Ok(looijenga_weights(class).scaled(&mu_weight(class)?))
}

/// The result of comparing a small class with the `μ_d`-invariant part of a big one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldingOutcome {
    /// `d = (μ | −)` of the small class.
    pub d: i64,
    /// Base weights of the small class.
    pub small_base: WeightMultiset,
    /// Base weights of the big class divisible by `d`.
    pub big_base_invariant: WeightMultiset,
    /// Slice weights of the small class divisible by `d`.
    pub small_slice_invariant: WeightMultiset,
    /// Slice weights of the big class divisible by `d`.
    pub big_slice_invariant: WeightMultiset,
}

impl FoldingOutcome {
    /// Whether both comparisons agree.
    pub fn holds(&self) -> bool {
        self.small_base == self.big_base_invariant
            && self.small_slice_invariant == self.big_slice_invariant
    }
}

/// Whether `(small, big)` is an admitted folding pair: `(A_1, E_5)`,
/// `(C_l, D_{l+4})`, `(F_l, E_{l+3})`, `(F_l, E_{l+4})` or `(G_2, E_8)`.
pub fn is_folding_pair(small: &SubregularClass, big: &SubregularClass) -> bool {
    let (l, m) = (small.rank(), big.rank());
    match (small.tag, big.tag) {
        (SeriesTag::A1, SeriesTag::E) => m == 5,
        (SeriesTag::C, SeriesTag::D) => m == l + 4,
        (SeriesTag::F, SeriesTag::E) => m == l + 3 || m == l + 4,
        (SeriesTag::G, SeriesTag::E) => m == 8,
        _ => false,
    }
}

/// Compares base and slice weights of an admitted pair after the divisibility filter.
pub fn folding_outcome(small: &SubregularClass, big: &SubregularClass) -> Result<FoldingOutcome> {
    if !is_folding_pair(small, big) {
        return Err(Error::NotFoldingPair {
            small: small.label(),
            big: big.label(),
        });
    }
    let d = mu_weight(small)?[0];
    Ok(FoldingOutcome {
        d,
        small_base: base_weights(small)?,
        big_base_invariant: base_weights(big)?.divisible_by(d),
        small_slice_invariant: slice_weights(small)?.divisible_by(d),
        big_slice_invariant: slice_weights(big)?.divisible_by(d),
    })
}

/// `true` iff the folding comparison holds for an admitted pair.
pub fn folding_check(small: &SubregularClass, big: &SubregularClass) -> Result<bool> {
    Ok(folding_outcome(small, big)?.holds())
}

/// The folding pairs in the form `(F_l, E_{l+3})`, as stated in the introduction.
pub fn stated_folding_pairs() -> Vec<((SeriesTag, usize), (SeriesTag, usize))> {
    use SeriesTag::*;
    vec![
        ((A1, 1), (E, 5)),
        ((C, 2), (D, 6)),
        ((C, 3), (D, 7)),
        ((C, 4), (D, 8)),
        ((F, 3), (E, 6)),
        ((F, 4), (E, 7)),
        ((G, 2), (E, 8)),
    ]
}

/// The folding pairs in the form `(F_l, E_{l+4})`, as used in the deformation argument.
pub fn deformation_folding_pairs() -> Vec<((SeriesTag, usize), (SeriesTag, usize))> {
    use SeriesTag::*;
    vec![
        ((A1, 1), (E, 5)),
        ((C, 2), (D, 6)),
        ((C, 3), (D, 7)),
        ((C, 4), (D, 8)),
        ((F, 3), (E, 7)),
        ((F, 4), (E, 8)),
        ((G, 2), (E, 8)),
    ]
}

/// One printed row of the weights table, for comparison with derived values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedWeightsRow {
    /// Weights of the affine cone.
    pub base: WeightMultiset,
    /// `(μ | −)`.
    pub mu_weight: Vec<i64>,
    /// Weights of the slice.
    pub slice: WeightMultiset,
}

/// The published weights table row for a family at rank `l`, if the table has one.
pub fn printed_weights_row(tag: SeriesTag, l: usize) -> Option<PrintedWeightsRow> {
    let li = l as u64;
    let s = |pairs: &[(i64, u64)]| WeightMultiset::scalar(pairs.iter().copied());
    let row = |base, mu: i64, slice| PrintedWeightsRow {
        base,
        mu_weight: vec![mu],
        slice,
    };
    Some(match (tag, l) {
        (SeriesTag::A1, 1) => row(s(&[(1, 2)]), 2, s(&[(1, 4)])),
        (SeriesTag::A, _) if l > 1 => PrintedWeightsRow {
            base: s(&[(1, li + 1)]),
            mu_weight: vec![1, 1],
            slice: WeightMultiset::from_pairs([(vec![1, 0], 1), (vec![0, 1], 1), (vec![1, 1], li)]),
        },
        (SeriesTag::B, _) if l >= 3 => row(s(&[(1, 3), (2, li - 2)]), 1, s(&[(1, 5), (2, li - 3)])),
        (SeriesTag::C, _) if l >= 2 => row(s(&[(1, li + 1)]), 2, s(&[(1, 2), (2, li)])),
        (SeriesTag::D, _) if l >= 4 => row(s(&[(1, 4), (2, li - 3)]), 1, s(&[(1, 6), (2, li - 4)])),
        (SeriesTag::E, 5) => row(s(&[(1, 4), (2, 2)]), 1, s(&[(1, 8)])),
        (SeriesTag::E, 6) => row(s(&[(1, 3), (2, 3), (3, 1)]), 1, s(&[(1, 6), (2, 3)])),
        (SeriesTag::E, 7) => row(
            s(&[(1, 2), (2, 2), (3, 2), (4, 1)]),
            1,
            s(&[(1, 4), (2, 4), (3, 2)]),
        ),
        (SeriesTag::E, 8) => row(
            s(&[(1, 1), (2, 2), (3, 2), (4, 2), (5, 1), (6, 1)]),
            1,
            s(&[(1, 2), (2, 3), (3, 3), (4, 2), (5, 1)]),
        ),
        (SeriesTag::F, 3) => row(s(&[(1, 3), (2, 1)]), 2, s(&[(1, 2), (2, 4)])),
        (SeriesTag::F, 4) => row(
            s(&[(1, 2), (2, 2), (3, 1)]),
            2,
            s(&[(1, 1), (2, 3), (3, 1), (4, 2)]),
        ),
        (SeriesTag::G, 2) => row(s(&[(1, 2), (2, 1)]), 3, s(&[(1, 1), (2, 1), (3, 3)])),
        _ => return None,
    })
}

/// A derived weights-table row together with any disagreement with the printed table.
#[derive(Debug, Clone)]
pub struct WeightsRow {
    /// Row label such as `E7`.
    pub label: String,
    /// Family tag.
    pub tag: SeriesTag,
    /// Rank.
    pub rank: usize,
    /// Derived Looijenga weights (unscaled).
    pub base: WeightMultiset,
    /// Derived `(μ | −)`.
    pub mu_weight: Vec<i64>,
    /// Derived slice weights.
    pub slice: WeightMultiset,
    /// `−⟨2ρ, μ⟩`.
    pub fiber_dimension: i64,
    /// Human-readable discrepancies against the printed row (empty when they agree).
    pub discrepancies: Vec<String>,
}

/// Derives the weights-table row of the standard class of a family at rank `l`.
pub fn weights_row(tag: SeriesTag, l: usize) -> Result<WeightsRow> {
    let class = standard_class(tag, l)?;
    let base = looijenga_weights(&class);
    let mu = mu_weight(&class)?;
    let slice = slice_weights(&class)?;
    let mut discrepancies = Vec::new();
    if let Some(p) = printed_weights_row(tag, l) {
        if p.base != base {
            discrepancies.push(format!("base: derived {} vs printed {}", base, p.base));
        }
        if p.mu_weight != mu {
            discrepancies.push(format!(
                "(μ|−): derived {mu:?} vs printed {:?}",
                p.mu_weight
            ));
        }
        if p.slice != slice {
            discrepancies.push(format!("slice: derived {} vs printed {}", slice, p.slice));
        }
    }
    Ok(WeightsRow {
        label: class.label(),
        tag,
        rank: l,
        base,
        mu_weight: mu,
        slice,
        fiber_dimension: slice_fiber_dimension(&class)?,
        discrepancies,
    })
}

/// `⟨2ρ, ϖ_k∨⟩ / ⟨ϖ_k, ϖ_k∨⟩` for each `k`.
pub fn rho_bound_ratios(rd: &crate::rootdata::RootDatum) -> Result<Vec<Rational>> {
    let two_rho = rd.two_rho();
    (1..=rd.rank())
        .map(|k| {
            let c = rd.fundamental_coweight(k);
            let num = rd.pairing(&two_rho, &c)?;
            let den = rd.pairing(&rd.fundamental_weight(k), &c)?;
            if den.is_zero() {
                return Err(Error::Consistency(format!("⟨ϖ_{k}, ϖ_{k}∨⟩ = 0")));
            }
            Ok(num / den)
        })
        .collect()
}

/// Whether every ratio in [`rho_bound_ratios`] is at least `l + 1`.
pub fn rho_bound_holds(rd: &crate::rootdata::RootDatum) -> Result<bool> {
    let bound = q(rd.rank() as i64 + 1);
    Ok(rho_bound_ratios(rd)?.iter().all(|r| *r >= bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_datum, Series};
    use crate::subregular::{enumerate_subregular, family_ranks, ALL_TAGS};

    #[test]
    fn dimensions() {
        assert_eq!(
            slice_fiber_dimension(&standard_class(SeriesTag::A1, 1).unwrap()).unwrap(),
            4
        );
        assert_eq!(
            slice_fiber_dimension(&standard_class(SeriesTag::G, 2).unwrap()).unwrap(),
            5
        );
        for l in 2..=8 {
            assert_eq!(
                slice_fiber_dimension(&standard_class(SeriesTag::C, l).unwrap()).unwrap(),
                l as i64 + 2
            );
        }
    }

    #[test]
    fn slice_examples() {
        let g = standard_class(SeriesTag::G, 2).unwrap();
        assert_eq!(
            slice_weights(&g).unwrap(),
            WeightMultiset::scalar([(1, 1), (2, 1), (3, 3)])
        );
        for l in 3..=8 {
            let b = standard_class(SeriesTag::B, l).unwrap();
            assert_eq!(
                slice_weights(&b).unwrap(),
                WeightMultiset::scalar([(1, 5), (2, l as u64 - 3)])
            );
        }
        for l in 2..=8 {
            for c in enumerate_subregular(&build_root_datum(Series::A, l).unwrap()).unwrap() {
                let expected = WeightMultiset::from_pairs([
                    (vec![1, 0], 1),
                    (vec![0, 1], 1),
                    (vec![1, 1], l as u64),
                ]);
                assert_eq!(slice_weights(&c).unwrap(), expected, "{}", c.describe());
            }
        }
    }

    #[test]
    fn base_examples() {
        let f4 = standard_class(SeriesTag::F, 4).unwrap();
        assert_eq!(
            looijenga_weights(&f4),
            WeightMultiset::scalar([(1, 2), (2, 2), (3, 1)])
        );
        assert_eq!(
            base_weights(&f4).unwrap(),
            WeightMultiset::scalar([(2, 2), (4, 2), (6, 1)])
        );
        let a3 = standard_class(SeriesTag::A, 3).unwrap();
        assert_eq!(
            base_weights(&a3).unwrap(),
            WeightMultiset::from_pairs([(vec![1, 1], 4)])
        );
        assert_eq!(
            mu_weight(&standard_class(SeriesTag::G, 2).unwrap()).unwrap(),
            vec![3]
        );
        assert_eq!(
            mu_weight(&standard_class(SeriesTag::E, 6).unwrap()).unwrap(),
            vec![1]
        );
    }

    #[test]
    fn invariants_every_class() {
        for (s, l) in Series::all_types(8) {
            for c in enumerate_subregular(&build_root_datum(s, l).unwrap()).unwrap() {
                let sw = slice_weights(&c).unwrap();
                let total = match c.tag {
                    SeriesTag::A | SeriesTag::B | SeriesTag::C | SeriesTag::D => l + 2,
                    _ => l + 3,
                };
                assert_eq!(sw.total(), total as u64, "{}", c.describe());
                assert_eq!(sw.total() as i64, slice_fiber_dimension(&c).unwrap());
                assert_eq!(base_weights(&c).unwrap().total(), l as u64 + 1);
                mu_weight(&c).unwrap();
            }
        }
    }

    #[test]
    fn table_matches_except_e7_base() {
        for tag in ALL_TAGS {
            for l in family_ranks(tag, 8) {
                let row = weights_row(tag, l).unwrap();
                if (tag, l) == (SeriesTag::E, 7) {
                    assert_eq!(
                        row.base,
                        WeightMultiset::scalar([(1, 2), (2, 3), (3, 2), (4, 1)])
                    );
                    assert_eq!(row.discrepancies.len(), 1);
                    assert!(row.discrepancies[0].starts_with("base"));
                } else {
                    assert!(
                        row.discrepancies.is_empty(),
                        "{}: {:?}",
                        row.label,
                        row.discrepancies
                    );
                }
            }
        }
    }

    #[test]
    fn folding_pairs() {
        let get = |(t, l)| standard_class(t, l).unwrap();
        for (s, b) in deformation_folding_pairs() {
            assert!(folding_check(&get(s), &get(b)).unwrap(), "{s:?} {b:?}");
        }
        let f3 = get((SeriesTag::F, 3));
        assert!(!folding_check(&f3, &get((SeriesTag::E, 6))).unwrap());
        assert!(matches!(
            folding_check(&f3, &get((SeriesTag::D, 6))),
            Err(Error::NotFoldingPair { .. })
        ));
        let a1 = get((SeriesTag::A1, 1));
        assert_eq!(base_weights(&a1).unwrap(), WeightMultiset::scalar([(2, 2)]));
    }

    #[test]
    fn bound_holds_everywhere() {
        for (s, l) in Series::all_types(8) {
            assert!(
                rho_bound_holds(&build_root_datum(s, l).unwrap()).unwrap(),
                "{s}{l}"
            );
        }
    }

    #[test]
    fn rendering_and_json() {
        let m = WeightMultiset::scalar([(1, 2), (2, 4)]);
        assert_eq!(m.render(false), "1²2⁴");
        assert_eq!(m.render(true), "1^2 2^4");
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"[{"weight":1,"multiplicity":2},{"weight":2,"multiplicity":4}]"#
        );
        let a = WeightMultiset::from_pairs([(vec![1, 0], 1)]);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"[{"weight":[1,0],"multiplicity":1}]"#
        );
    }
}
