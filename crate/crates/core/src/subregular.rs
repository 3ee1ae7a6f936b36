//! Classification of subregular Harder-Narasimhan classes.
//!
//! A class is a triple `(G, P, μ)`: a simple group, a standard parabolic and
//! a Harder-Narasimhan vector. The eight families are tagged `A1, A, B, C, D,
//! E, F, G`; a group can carry classes from more than one family (`D_5`
//! carries `D` and `E` classes, `B_3` carries `B` and `F` classes).

use crate::error::{Error, Result};
use crate::parabolic::{self, ParabolicType, SlopeVector};
use crate::rational::{q, Rational};
use crate::rootdata::{build_root_datum, Coweight, RootDatum, Series};
use num_traits::Signed;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Family tag of a subregular class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SeriesTag {
    A1,
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for SeriesTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SeriesTag::A1 => "A1",
            SeriesTag::A => "A",
            SeriesTag::B => "B",
            SeriesTag::C => "C",
            SeriesTag::D => "D",
            SeriesTag::E => "E",
            SeriesTag::F => "F",
            SeriesTag::G => "G",
        };
        write!(f, "{s}")
    }
}

/// A subregular Harder-Narasimhan class with its Dynkin decomposition data.
#[derive(Debug, Clone)]
pub struct SubregularClass {
    /// Family tag.
    pub tag: SeriesTag,
    /// The ambient root datum.
    pub rd: RootDatum,
    /// The parabolic `P`.
    pub tp: ParabolicType,
    /// The slope `μ`.
    pub mu: SlopeVector,
    /// `⟨ϖ_k, μ⟩` for `k ∈ t(P)`.
    pub targets: BTreeMap<usize, Rational>,
    /// The node `α_i`.
    pub alpha_i: usize,
    /// The node `α_j` (absent for tag `A1`).
    pub alpha_j: Option<usize>,
    /// `c_0`, ordered so that its last node is `α_i`.
    pub c0: Vec<usize>,
    /// `c_1`, the component containing `α_j` after deleting the edge `α_i α_j`.
    pub c1: Vec<usize>,
    /// `(α_i∨ | α_i∨)/2`.
    pub d: i64,
    /// `N`: `n_1 + 1` for tag A, `n_1 - 1` for tag F, `n_1` otherwise (0 for `A1`).
    pub big_n: usize,
}

impl SubregularClass {
    /// Rank `l` of the group.
    pub fn rank(&self) -> usize {
        self.rd.rank()
    }

    /// `n_0 = |c_0|`.
    pub fn n0(&self) -> usize {
        self.c0.len()
    }

    /// `n_1 = |c_1|`.
    pub fn n1(&self) -> usize {
        self.c1.len()
    }

    /// Name used in tables: the family letter with the rank, e.g. `E5`, `F3`, `C4`.
    pub fn label(&self) -> String {
        match self.tag {
            SeriesTag::A1 => "A1".into(),
            tag => format!("{tag}{}", self.rank()),
        }
    }

    /// Human-readable description including the group and `α_i`.
    pub fn describe(&self) -> String {
        format!(
            "{} in {} (i = {})",
            self.label(),
            self.rd.name(),
            self.alpha_i
        )
    }

    /// `α_j`, panicking for tag `A1`.
    pub fn j(&self) -> usize {
        self.alpha_j.expect("class has an α_j")
    }

    /// The `k`-th node `α_{c_0,k}` (1-based).
    pub fn c0_node(&self, k: usize) -> usize {
        self.c0[k - 1]
    }

    /// `−⟨2ρ, μ⟩`.
    pub fn minus_two_rho_mu(&self) -> Rational {
        -parabolic::two_rho_pairing(&self.rd, &self.mu)
    }
}

/// A candidate `(tag, α_i)` pair for a group, as listed by the classification theorem.
fn candidates(rd: &RootDatum) -> Vec<(SeriesTag, usize)> {
    let l = rd.rank();
    match rd.series() {
        Series::A if l == 1 => vec![(SeriesTag::A1, 1)],
        Series::A => (1..l).map(|i| (SeriesTag::A, i)).collect(),
        Series::B => {
            let mut v = Vec::new();
            if l >= 3 {
                v.push((SeriesTag::B, l - 2));
            }
            if l == 3 {
                v.push((SeriesTag::F, 3));
            }
            v
        }
        Series::C => vec![(SeriesTag::C, l - 1)],
        Series::D if l == 4 => vec![(SeriesTag::D, 1), (SeriesTag::D, 3), (SeriesTag::D, 4)],
        Series::D if l == 5 => vec![(SeriesTag::D, 2), (SeriesTag::E, 4), (SeriesTag::E, 5)],
        Series::D => vec![(SeriesTag::D, l - 3)],
        Series::E if l == 6 => vec![(SeriesTag::E, 2), (SeriesTag::E, 5)],
        Series::E => vec![(SeriesTag::E, 5)],
        Series::F => vec![(SeriesTag::F, 3)],
        Series::G => vec![(SeriesTag::G, 1)],
    }
}

fn candidate_type(tag: SeriesTag, i: usize) -> (Vec<usize>, BTreeMap<usize, Rational>) {
    match tag {
        SeriesTag::A1 => (vec![i], BTreeMap::from([(i, q(-2))])),
        SeriesTag::A => (vec![i, i + 1], BTreeMap::from([(i, q(-1)), (i + 1, q(-1))])),
        _ => (vec![i], BTreeMap::from([(i, q(-1))])),
    }
}

fn build_class(rd: &RootDatum, tag: SeriesTag, i: usize) -> Result<SubregularClass> {
    let (t, targets) = candidate_type(tag, i);
    let tp = ParabolicType::new(rd, t)?;
    let mu = parabolic::solve_slope(rd, &tp, &targets)?;
    let alpha_j = match tag {
        SeriesTag::A1 => None,
        SeriesTag::A => Some(i + 1),
        _ => {
            let special = rd.special_roots();
            if special.len() != 1 {
                return Err(Error::Consistency(format!(
                    "{} has {} special roots",
                    rd.name(),
                    special.len()
                )));
            }
            Some(special[0])
        }
    };
    let (c0, c1) = match alpha_j {
        None => (vec![i], Vec::new()),
        Some(j) => decompose(rd, i, j)?,
    };
    let d = rd.symmetrizer()[i - 1];
    let n1 = c1.len();
    let big_n = match tag {
        SeriesTag::A1 => 0,
        SeriesTag::A => n1 + 1,
        SeriesTag::F => n1 - 1,
        _ => n1,
    };
    Ok(SubregularClass {
        tag,
        rd: rd.clone(),
        tp,
        mu,
        targets,
        alpha_i: i,
        alpha_j,
        c0,
        c1,
        d,
        big_n,
    })
}

/// Deletes the edge `α_i α_j` and returns `(c_0, c_1)`, with `c_0` a chain
/// ending at `α_i` and `c_1` a chain when it is of type A (sorted otherwise).
fn decompose(rd: &RootDatum, i: usize, j: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if !rd.adjacent(i, j) {
        return Err(Error::Consistency(format!(
            "α_{i} and α_{j} are not adjacent in {}",
            rd.name()
        )));
    }
    let reach = |start: usize, banned: usize| -> Vec<usize> {
        let mut seen = vec![start];
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in rd.neighbors(x) {
                if (x == start && y == banned) || seen.contains(&y) {
                    continue;
                }
                seen.push(y);
                stack.push(y);
            }
        }
        seen.sort_unstable();
        seen
    };
    let c0_nodes = reach(i, j);
    let c1_nodes = reach(j, i);
    let mut c0 = rd
        .as_simply_laced_chain(&c0_nodes)
        .ok_or_else(|| Error::Consistency(format!("c_0 = {c0_nodes:?} is not of type A")))?;
    if c0.last() != Some(&i) {
        c0.reverse();
    }
    if c0.last() != Some(&i) {
        return Err(Error::Consistency(format!(
            "α_{i} is not an end of c_0 = {c0:?}"
        )));
    }
    let c1 = rd.as_simply_laced_chain(&c1_nodes).unwrap_or(c1_nodes);
    Ok((c0, c1))
}

/// Every subregular class of the group, ordered by `(tag, α_i)`.
pub fn enumerate_subregular(rd: &RootDatum) -> Result<Vec<SubregularClass>> {
    let mut out = candidates(rd)
        .into_iter()
        .map(|(tag, i)| build_class(rd, tag, i))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|c| (c.tag, c.alpha_i));
    Ok(out)
}

/// Classifies `(G, P, μ)`: the class when it is on the list, `None` otherwise.
pub fn classify(
    rd: &RootDatum,
    tp: &ParabolicType,
    mu: &SlopeVector,
) -> Result<Option<SubregularClass>> {
    if !parabolic::is_hn_vector(rd, tp, mu) {
        return Err(Error::NotHnVector {
            tp: tp.t().iter().copied().collect(),
        });
    }
    let pairings: BTreeMap<usize, Rational> =
        tp.t().iter().map(|&k| (k, mu.0[k - 1].clone())).collect();
    for (tag, i) in candidates(rd) {
        let (t, targets) = candidate_type(tag, i);
        if t.iter().copied().eq(tp.t().iter().copied()) && targets == pairings {
            let class = build_class(rd, tag, i)?;
            if &class.mu == mu {
                return Ok(Some(class));
            }
        }
    }
    Ok(None)
}

/// Convenience: the class of a given tag and `α_i` in `series_rank`.
pub fn find_class(
    series: Series,
    rank: usize,
    tag: SeriesTag,
    i: usize,
) -> Result<SubregularClass> {
    let rd = build_root_datum(series, rank)?;
    enumerate_subregular(&rd)?
        .into_iter()
        .find(|c| c.tag == tag && c.alpha_i == i)
        .ok_or_else(|| {
            Error::InvalidConfiguration(format!("no {tag} class with i = {i} in {series}{rank}"))
        })
}

/// The standard class of a family at a given rank (`α_i` as in the
/// canonical numbering: `D_l` with `i = l-3`, `E_l` with `i = 5`, `E_5` in `D_5`,
/// `F_3` in `B_3`, `A_l` with `i = 1`).
pub fn standard_class(tag: SeriesTag, rank: usize) -> Result<SubregularClass> {
    let l = rank;
    let bad = || Error::InvalidConfiguration(format!("no {tag} class at rank {rank}"));
    match tag {
        SeriesTag::A1 if l == 1 => find_class(Series::A, 1, tag, 1),
        SeriesTag::A if l >= 2 => find_class(Series::A, l, tag, 1),
        SeriesTag::B if l >= 3 => find_class(Series::B, l, tag, l - 2),
        SeriesTag::C if l >= 2 => find_class(Series::C, l, tag, l - 1),
        SeriesTag::D if l >= 4 => find_class(Series::D, l, tag, l - 3),
        SeriesTag::E if l == 5 => find_class(Series::D, 5, tag, 5),
        SeriesTag::E if (6..=8).contains(&l) => find_class(Series::E, l, tag, 5),
        SeriesTag::F if l == 3 => find_class(Series::B, 3, tag, 3),
        SeriesTag::F if l == 4 => find_class(Series::F, 4, tag, 3),
        SeriesTag::G if l == 2 => find_class(Series::G, 2, tag, 1),
        _ => Err(bad()),
    }
}

/// Valid ranks of a family up to `max_rank`.
pub fn family_ranks(tag: SeriesTag, max_rank: usize) -> Vec<usize> {
    let range: Vec<usize> = match tag {
        SeriesTag::A1 => vec![1],
        SeriesTag::A => (2..=max_rank).collect(),
        SeriesTag::B => (3..=max_rank).collect(),
        SeriesTag::C => (2..=max_rank).collect(),
        SeriesTag::D => (4..=max_rank).collect(),
        SeriesTag::E => (5..=8).collect(),
        SeriesTag::F => vec![3, 4],
        SeriesTag::G => vec![2],
    };
    range.into_iter().filter(|&l| l <= max_rank).collect()
}

/// All tags in order.
pub const ALL_TAGS: [SeriesTag; 8] = [
    SeriesTag::A1,
    SeriesTag::A,
    SeriesTag::B,
    SeriesTag::C,
    SeriesTag::D,
    SeriesTag::E,
    SeriesTag::F,
    SeriesTag::G,
];

/// One row of the table of Levi roots with negative pairing against `μ'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviSlopeRow {
    /// Simple-root coefficients of the (negative) root.
    pub root: Vec<i64>,
    /// `⟨α, μ'⟩`.
    pub mu_prime: Rational,
    /// `⟨α, ϖ_l∨⟩`.
    pub varpi_l: Rational,
}

/// For a `B`, `C` or `D` class (with `α_i = α_{l-2}, α_{l-1}, α_{l-3}`), the
/// roots `α` of the Levi `L` with `⟨α, μ'⟩ < 0`, where `μ'` has
/// `⟨ϖ_i, μ'⟩ = -1`, `⟨ϖ_l, μ'⟩ = 0` and pairs to zero with the other simple roots.
pub fn levi_slope_roots(class: &SubregularClass) -> Result<Vec<LeviSlopeRow>> {
    let rd = &class.rd;
    let l = rd.rank();
    let canonical = match class.tag {
        SeriesTag::B => l >= 3 && class.alpha_i == l - 2,
        SeriesTag::C => class.alpha_i == l - 1,
        SeriesTag::D => class.alpha_i == l - 3,
        _ => false,
    };
    if !canonical {
        return Err(Error::UnsupportedTag {
            op: "levi_slope_roots",
            tag: class.describe(),
        });
    }
    let i = class.alpha_i;
    let pt = ParabolicType::new(rd, [i, l])?;
    let mu_prime = parabolic::solve_slope(rd, &pt, &BTreeMap::from([(i, q(-1)), (l, q(0))]))?;
    let varpi_l = rd.fundamental_coweight(l);
    let mut rows: Vec<LeviSlopeRow> = parabolic::levi_roots(rd, &class.tp)
        .into_iter()
        .filter_map(|r| {
            let p = rd.root_pairing(&r.coeffs, &mu_prime);
            p.is_negative().then(|| LeviSlopeRow {
                mu_prime: p,
                varpi_l: rd.root_pairing(&r.coeffs, &varpi_l),
                root: r.coeffs,
            })
        })
        .collect();
    rows.sort_by(|a, b| {
        let ha: i64 = -a.root.iter().sum::<i64>();
        let hb: i64 = -b.root.iter().sum::<i64>();
        (ha, a.root.iter().rev().map(|x| -x).collect::<Vec<_>>())
            .cmp(&(hb, b.root.iter().rev().map(|x| -x).collect()))
    });
    Ok(rows)
}

/// `μ` of a class written as `⟨ϖ_k, μ⟩` for each `k`, i.e. its simple-coroot coordinates.
pub fn mu_pairings(class: &SubregularClass) -> &Coweight {
    &class.mu
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    fn rd(s: Series, l: usize) -> RootDatum {
        build_root_datum(s, l).unwrap()
    }

    #[test]
    fn class_counts() {
        let counts = |s, l| enumerate_subregular(&rd(s, l)).unwrap().len();
        assert_eq!(counts(Series::A, 1), 1);
        assert_eq!(counts(Series::D, 4), 3);
        assert_eq!(counts(Series::D, 5), 3);
        assert_eq!(counts(Series::B, 3), 2);
        assert_eq!(counts(Series::E, 6), 2);
        for (s, l) in [
            (Series::E, 7),
            (Series::E, 8),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            assert_eq!(counts(s, l), 1);
        }
        for l in 2..=8 {
            assert_eq!(counts(Series::A, l), l - 1);
        }
    }

    #[test]
    fn a1_class() {
        let cs = enumerate_subregular(&rd(Series::A, 1)).unwrap();
        assert_eq!(cs[0].tag, SeriesTag::A1);
        assert_eq!(cs[0].targets[&1], q(-2));
    }

    #[test]
    fn classify_examples() {
        let a3 = rd(Series::A, 3);
        let pt = ParabolicType::new(&a3, [1, 2]).unwrap();
        let mu =
            parabolic::solve_slope(&a3, &pt, &BTreeMap::from([(1, q(-1)), (2, q(-1))])).unwrap();
        let c = classify(&a3, &pt, &mu).unwrap().unwrap();
        assert_eq!((c.tag, c.alpha_i, c.alpha_j), (SeriesTag::A, 1, Some(2)));

        let d5 = rd(Series::D, 5);
        let pt = ParabolicType::new(&d5, [4]).unwrap();
        let mu = parabolic::solve_slope(&d5, &pt, &BTreeMap::from([(4, q(-1))])).unwrap();
        assert_eq!(classify(&d5, &pt, &mu).unwrap().unwrap().tag, SeriesTag::E);

        let b3 = rd(Series::B, 3);
        let pt = ParabolicType::new(&b3, [3]).unwrap();
        let mu = parabolic::solve_slope(&b3, &pt, &BTreeMap::from([(3, q(-1))])).unwrap();
        assert_eq!(classify(&b3, &pt, &mu).unwrap().unwrap().tag, SeriesTag::F);
    }

    #[test]
    fn classify_rejects_off_list_and_non_hn() {
        let a3 = rd(Series::A, 3);
        let pt = ParabolicType::new(&a3, [1]).unwrap();
        let mu = parabolic::solve_slope(&a3, &pt, &BTreeMap::from([(1, q(-1))])).unwrap();
        assert!(classify(&a3, &pt, &mu).unwrap().is_none());
        let mu = parabolic::solve_slope(&a3, &pt, &BTreeMap::from([(1, q(1))])).unwrap();
        assert!(matches!(
            classify(&a3, &pt, &mu),
            Err(Error::NotHnVector { .. })
        ));
    }

    #[test]
    fn decomposition_examples() {
        let g = standard_class(SeriesTag::G, 2).unwrap();
        assert_eq!((g.c0.clone(), g.c1.clone()), (vec![1], vec![2]));
        let e8 = standard_class(SeriesTag::E, 8).unwrap();
        assert_eq!(e8.c0, vec![8, 7, 6, 5]);
        let mut c1 = e8.c1.clone();
        c1.sort_unstable();
        assert_eq!(c1, vec![1, 2, 3, 4]);
        for l in 3..=8 {
            let b = standard_class(SeriesTag::B, l).unwrap();
            assert_eq!((b.n0(), b.n1()), (l - 2, 2));
        }
    }

    #[test]
    fn invariants_over_all_groups() {
        for (s, l) in Series::all_types(8) {
            let r = rd(s, l);
            for c in enumerate_subregular(&r).unwrap() {
                let expected = match c.tag {
                    SeriesTag::A | SeriesTag::B | SeriesTag::C | SeriesTag::D => l + 2,
                    _ => l + 3,
                };
                assert_eq!(c.minus_two_rho_mu(), q(expected as i64), "{}", c.describe());
                let again = classify(&r, &c.tp, &c.mu).unwrap().unwrap();
                assert_eq!((again.tag, again.alpha_i), (c.tag, c.alpha_i));
                assert!(parabolic::is_hn_vector(&r, &c.tp, &c.mu));
                let d_tag = match c.tag {
                    SeriesTag::C | SeriesTag::F => 2,
                    SeriesTag::G => 3,
                    _ => 1,
                };
                assert_eq!(c.d, d_tag, "{}", c.describe());
                if let Some(j) = c.alpha_j {
                    assert!(r.adjacent(c.alpha_i, j));
                    if c.tag != SeriesTag::A {
                        assert_eq!(r.special_roots(), vec![j]);
                    }
                    assert_eq!(c.n0() + c.n1(), l);
                    assert_eq!(*c.c0.last().unwrap(), c.alpha_i);
                }
            }
        }
    }

    #[test]
    fn table2_rows() {
        for l in 3..=8 {
            let rows = levi_slope_roots(&standard_class(SeriesTag::B, l).unwrap()).unwrap();
            let mut a = vec![0; l];
            a[l - 1] = -1;
            let mut b = vec![0; l];
            b[l - 2] = -1;
            b[l - 1] = -1;
            let mut c = vec![0; l];
            c[l - 2] = -1;
            c[l - 1] = -2;
            let expected = vec![
                LeviSlopeRow {
                    root: a,
                    mu_prime: qf(-1, 2),
                    varpi_l: q(-1),
                },
                LeviSlopeRow {
                    root: b,
                    mu_prime: qf(-1, 2),
                    varpi_l: q(-1),
                },
                LeviSlopeRow {
                    root: c,
                    mu_prime: q(-1),
                    varpi_l: q(-2),
                },
            ];
            assert_eq!(rows, expected, "B{l}");
        }
        for l in 2..=8 {
            let rows = levi_slope_roots(&standard_class(SeriesTag::C, l).unwrap()).unwrap();
            let mut a = vec![0; l];
            a[l - 1] = -1;
            assert_eq!(
                rows,
                vec![LeviSlopeRow {
                    root: a,
                    mu_prime: q(-2),
                    varpi_l: q(-1)
                }]
            );
        }
        for l in 4..=8 {
            let rows = levi_slope_roots(&standard_class(SeriesTag::D, l).unwrap()).unwrap();
            let mk = |nodes: &[usize]| {
                let mut v = vec![0; l];
                for &n in nodes {
                    v[n - 1] = -1;
                }
                LeviSlopeRow {
                    root: v,
                    mu_prime: qf(-2, 3),
                    varpi_l: q(-1),
                }
            };
            let expected = vec![mk(&[l]), mk(&[l - 2, l]), mk(&[l - 2, l - 1, l])];
            assert_eq!(rows, expected, "D{l}");
        }
    }
}
