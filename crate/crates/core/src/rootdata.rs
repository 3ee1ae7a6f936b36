//! Root data of the simply connected simple groups.
//!
//! Nodes are labelled `1..=l` following the convention used throughout the
//! crate:
//!
//! * `A_l`: a chain `1 - 2 - ... - l`.
//! * `B_l`: a chain with a double edge between `l-1` and `l`, `α_l` short.
//! * `C_l`: a chain with a double edge between `l-1` and `l`, `α_l` long.
//! * `D_l`: a chain `1 - ... - (l-1)` with `l` attached to `l-2`.
//! * `E_l`: a chain `1 - 2 - 3 - 5 - 6 - ... - l` with `4` attached to `3`.
//! * `F_4`: `1 - 2 => 3 - 4` with `α_1, α_2` long.
//! * `G_2`: `α_1` short, `α_2` long.
//!
//! Weights are stored in the fundamental-weight basis `ϖ_1, ..., ϖ_l` and
//! coweights in the simple-coroot basis `α_1∨, ..., α_l∨`, so that the
//! pairing is the plain dot product of coordinate vectors.

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{q, Rational};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// The Cartan-Killing series of a simple group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    /// Parses a single letter, case-insensitively.
    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }

    /// The series letter.
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    /// Every valid simple type of rank at most `max_rank`, in (series, rank) order.
    pub fn all_types(max_rank: usize) -> Vec<(Series, usize)> {
        let series = [
            Series::A,
            Series::B,
            Series::C,
            Series::D,
            Series::E,
            Series::F,
            Series::G,
        ];
        let mut out = Vec::new();
        for s in series {
            for l in 1..=max_rank {
                if is_valid_type(s, l) {
                    out.push((s, l));
                }
            }
        }
        out
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Whether `(series, rank)` names a simple type.
pub fn is_valid_type(series: Series, rank: usize) -> bool {
    match series {
        Series::A => rank >= 1,
        Series::B | Series::C => rank >= 2,
        Series::D => rank >= 4,
        Series::E => (6..=8).contains(&rank),
        Series::F => rank == 4,
        Series::G => rank == 2,
    }
}

/// Relative length of a simple root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RootLength {
    Short,
    Long,
}

/// A weight, in coordinates with respect to the fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rational>);

/// A coweight, in coordinates with respect to the simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight(pub Vec<Rational>);

macro_rules! vector_ops {
    ($t:ident) => {
        impl $t {
            /// The zero vector of length `l`.
            pub fn zero(l: usize) -> Self {
                $t(vec![Rational::zero(); l])
            }

            /// The vector with integer coordinates `v`.
            pub fn from_ints(v: &[i64]) -> Self {
                $t(v.iter().map(|&x| q(x)).collect())
            }

            /// The `k`-th unit vector (1-based `k`).
            pub fn unit(l: usize, k: usize) -> Self {
                let mut v = vec![Rational::zero(); l];
                v[k - 1] = q(1);
                $t(v)
            }

            /// Number of coordinates.
            pub fn len(&self) -> usize {
                self.0.len()
            }

            /// Whether there are no coordinates.
            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            /// Integer coordinates, or `None` if some coordinate is fractional.
            pub fn to_ints(&self) -> Option<Vec<i64>> {
                self.0.iter().map(crate::rational::to_integer).collect()
            }

            /// Whether every coordinate is an integer.
            pub fn is_integral(&self) -> bool {
                self.0.iter().all(|x| x.is_integer())
            }

            /// Scalar multiple.
            pub fn scale(&self, c: &Rational) -> Self {
                $t(self.0.iter().map(|x| x * c).collect())
            }
        }

        impl Add for &$t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                assert_eq!(self.0.len(), o.0.len(), "rank mismatch");
                $t(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                assert_eq!(self.0.len(), o.0.len(), "rank mismatch");
                $t(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t(self.0.iter().map(|a| -a).collect())
            }
        }

        impl Mul<&$t> for i64 {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                o.scale(&q(self))
            }
        }
    };
}

vector_ops!(Weight);
vector_ops!(Coweight);

/// A root, stored by its simple-root and simple-coroot coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    /// Coefficients in the basis of simple roots.
    pub coeffs: Vec<i64>,
    /// Coefficients of the associated coroot in the basis of simple coroots.
    pub coroot: Vec<i64>,
}

impl Root {
    /// Whether the root is positive.
    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Sum of the simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// The opposite root.
    pub fn negate(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            coroot: self.coroot.iter().map(|c| -c).collect(),
        }
    }

    /// Simple indices (1-based) with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, _)| k + 1)
            .collect()
    }
}

/// The root datum of a simply connected simple group.
#[derive(Debug, Clone)]
pub struct RootDatum {
    series: Series,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    lengths: Vec<RootLength>,
    cartan_inverse: Vec<Vec<Rational>>,
    roots: Vec<Root>,
}

/// Edge of a Dynkin diagram: `(long node, other node, multiplicity)`.
type Edge = (usize, usize, i64);

fn dynkin_edges(series: Series, l: usize) -> Vec<Edge> {
    let chain = |n: usize| (1..n).map(|k| (k, k + 1, 1)).collect::<Vec<Edge>>();
    match series {
        Series::A => chain(l),
        Series::B => {
            let mut e = chain(l - 1);
            e.push((l - 1, l, 2));
            e
        }
        Series::C => {
            let mut e = chain(l - 1);
            e.push((l, l - 1, 2));
            e
        }
        Series::D => {
            let mut e = chain(l - 1);
            e.push((l - 2, l, 1));
            e
        }
        Series::E => {
            let mut e = vec![(1, 2, 1), (2, 3, 1), (3, 4, 1), (3, 5, 1)];
            e.extend((5..l).map(|k| (k, k + 1, 1)));
            e
        }
        Series::F => vec![(1, 2, 1), (2, 3, 2), (3, 4, 1)],
        Series::G => vec![(2, 1, 3)],
    }
}

/// Builds the root datum of type `series_rank` with the crate's node labelling.
pub fn build_root_datum(series: Series, rank: usize) -> Result<RootDatum> {
    if !is_valid_type(series, rank) {
        return Err(Error::InvalidType {
            series: series.letter(),
            rank,
        });
    }
    let l = rank;
    let mut cartan = vec![vec![0i64; l]; l];
    for (i, row) in cartan.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (long, other, m) in dynkin_edges(series, l) {
        // ⟨α_long, α_other∨⟩ = -m and ⟨α_other, α_long∨⟩ = -1.
        cartan[long - 1][other - 1] = -m;
        cartan[other - 1][long - 1] = -1;
    }
    let symmetrizer = symmetrizer(&cartan);
    let lengths = symmetrizer
        .iter()
        .map(|&d| {
            if d == 1 {
                RootLength::Long
            } else {
                RootLength::Short
            }
        })
        .collect();
    let cartan_inverse = linalg::inverse(&linalg::to_rational(&cartan))
        .ok_or_else(|| Error::Consistency("Cartan matrix is singular".into()))?;
    let mut rd = RootDatum {
        series,
        rank,
        cartan,
        symmetrizer,
        lengths,
        cartan_inverse,
        roots: Vec::new(),
    };
    rd.roots = rd.generate_roots()?;
    Ok(rd)
}

/// Integers `D_k = (α_k∨ | α_k∨)/2`, i.e. 1 on long roots and the square
/// length ratio on short roots.
///
/// Found by propagating `D_i ⟨α_i, α_j∨⟩ = D_j ⟨α_j, α_i∨⟩` along the
/// connected diagram and normalising the minimum to 1.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let l = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; l];
    d[0] = Some(q(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..l {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().expect("visited");
                d[j] = Some(di * q(cartan[i][j]) / q(cartan[j][i]));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Rational> = d
        .into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect();
    let min = d.iter().min().expect("nonempty").clone();
    d.iter()
        .map(|x| crate::rational::to_integer(&(x / &min)).expect("integral symmetrizer"))
        .collect()
}

impl RootDatum {
    /// The series letter.
    pub fn series(&self) -> Series {
        self.series
    }

    /// The rank `l`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Display name such as `E8`.
    pub fn name(&self) -> String {
        format!("{}{}", self.series, self.rank)
    }

    /// The Cartan matrix, `cartan()[i][j] = ⟨α_{i+1}, α_{j+1}∨⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `⟨α_i, α_j∨⟩` for 1-based `i`, `j`.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    /// The integers `D_k = (α_k∨ | α_k∨)/2`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Lengths of the simple roots.
    pub fn root_lengths(&self) -> &[RootLength] {
        &self.lengths
    }

    /// Whether the simple root `α_k` is long.
    pub fn is_long(&self, k: usize) -> bool {
        self.lengths[k - 1] == RootLength::Long
    }

    /// Nodes adjacent to `k` in the Dynkin diagram.
    pub fn neighbors(&self, k: usize) -> Vec<usize> {
        (1..=self.rank)
            .filter(|&j| j != k && self.cartan[k - 1][j - 1] != 0)
            .collect()
    }

    /// Whether `i` and `j` are joined by an edge.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i - 1][j - 1] != 0
    }

    /// Checks that `k` is a valid 1-based simple index.
    pub fn check_index(&self, k: usize) -> Result<()> {
        if (1..=self.rank).contains(&k) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: k,
                rank: self.rank,
            })
        }
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank,
                found: n,
            })
        }
    }

    /// The fundamental weight `ϖ_k`.
    pub fn fundamental_weight(&self, k: usize) -> Weight {
        Weight::unit(self.rank, k)
    }

    /// The simple coroot `α_k∨`.
    pub fn simple_coroot(&self, k: usize) -> Coweight {
        Coweight::unit(self.rank, k)
    }

    /// The simple root `α_k` as a weight: `α_k = Σ_j ⟨α_k, α_j∨⟩ ϖ_j`.
    pub fn simple_root(&self, k: usize) -> Weight {
        Weight::from_ints(&self.cartan[k - 1])
    }

    /// The fundamental coweight `ϖ_k∨`, dual to the simple roots.
    pub fn fundamental_coweight(&self, k: usize) -> Coweight {
        Coweight(
            (0..self.rank)
                .map(|r| self.cartan_inverse[r][k - 1].clone())
                .collect(),
        )
    }

    /// The weight `Σ c_k α_k` for simple-root coefficients `c`.
    pub fn root_combination(&self, c: &[i64]) -> Weight {
        let mut out = vec![0i64; self.rank];
        for (k, &ck) in c.iter().enumerate() {
            for (j, o) in out.iter_mut().enumerate() {
                *o += ck * self.cartan[k][j];
            }
        }
        Weight::from_ints(&out)
    }

    /// The coweight `Σ c_k α_k∨` for simple-coroot coefficients `c`.
    pub fn coroot_combination(&self, c: &[i64]) -> Coweight {
        Coweight::from_ints(c)
    }

    /// A root as a weight.
    pub fn root_weight(&self, r: &Root) -> Weight {
        self.root_combination(&r.coeffs)
    }

    /// The coroot of `r` as a coweight.
    pub fn root_coweight(&self, r: &Root) -> Coweight {
        Coweight::from_ints(&r.coroot)
    }

    /// Simple-root coordinates of a weight, i.e. `C^{-T}` applied to its ϖ-coordinates.
    pub fn weight_root_coords(&self, w: &Weight) -> Vec<Rational> {
        // w_j = Σ_k c_k C[k][j]  ⇒  c = (C^T)^{-1} w, and (C^T)^{-1}[k][j] = C^{-1}[j][k].
        (0..self.rank)
            .map(|k| {
                (0..self.rank)
                    .map(|j| &self.cartan_inverse[j][k] * &w.0[j])
                    .sum()
            })
            .collect()
    }

    /// The pairing `⟨w, c⟩`.
    pub fn pairing(&self, w: &Weight, c: &Coweight) -> Result<Rational> {
        self.check_len(w.len())?;
        self.check_len(c.len())?;
        Ok(w.0.iter().zip(&c.0).map(|(a, b)| a * b).sum())
    }

    /// `⟨α, c⟩` for a root given by simple-root coefficients.
    pub fn root_pairing(&self, coeffs: &[i64], c: &Coweight) -> Rational {
        self.pairing(&self.root_combination(coeffs), c)
            .expect("root of this datum")
    }

    /// The W-invariant form on coweights with short coroots of square length 2:
    /// `(α_i∨ | α_j∨) = D_i ⟨α_i, α_j∨⟩`.
    pub fn killing_form(&self, a: &Coweight, b: &Coweight) -> Result<Rational> {
        self.check_len(a.len())?;
        self.check_len(b.len())?;
        let mut total = Rational::zero();
        for i in 0..self.rank {
            if a.0[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                let g = self.symmetrizer[i] * self.cartan[i][j];
                if g != 0 {
                    total += &a.0[i] * &b.0[j] * q(g);
                }
            }
        }
        Ok(total)
    }

    /// Every root, positive ones first, each block sorted by height then coefficients.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// The positive roots, sorted by height then coefficients.
    pub fn positive_roots(&self) -> Vec<Root> {
        self.roots
            .iter()
            .filter(|r| r.is_positive())
            .cloned()
            .collect()
    }

    /// Looks up a root by its simple-root coefficients.
    pub fn root_from_coeffs(&self, c: &[i64]) -> Option<Root> {
        self.roots.iter().find(|r| r.coeffs == c).cloned()
    }

    /// `2ρ`, the sum of the positive roots.
    pub fn two_rho(&self) -> Weight {
        let mut sum = vec![0i64; self.rank];
        for r in self.roots.iter().filter(|r| r.is_positive()) {
            for (s, c) in sum.iter_mut().zip(&r.coeffs) {
                *s += c;
            }
        }
        self.root_combination(&sum)
    }

    /// The highest root.
    pub fn highest_root(&self) -> Root {
        self.roots
            .iter()
            .filter(|r| r.is_positive())
            .max_by_key(|r| r.height())
            .expect("nonempty root system")
            .clone()
    }

    /// The coroot integers `g_1, ..., g_l` with `Σ g_k α_k∨` the coroot of the highest root.
    pub fn coroot_integers(&self) -> Vec<i64> {
        self.highest_root().coroot
    }

    /// `c1 ≤ c2` in the dominance order on integral coweights.
    pub fn dominance_leq(&self, c1: &Coweight, c2: &Coweight) -> Result<bool> {
        self.check_len(c1.len())?;
        self.check_len(c2.len())?;
        let diff = c2 - c1;
        Ok(diff.0.iter().all(|x| x.is_integer() && !x.is_negative()))
    }

    /// Simple long roots whose removal leaves type-A chains, each attached at one end.
    pub fn special_roots(&self) -> Vec<usize> {
        (1..=self.rank)
            .filter(|&k| self.is_long(k) && self.is_special(k))
            .collect()
    }

    fn is_special(&self, k: usize) -> bool {
        let rest: Vec<usize> = (1..=self.rank).filter(|&j| j != k).collect();
        self.components(&rest).iter().all(|comp| {
            let Some(chain) = self.as_simply_laced_chain(comp) else {
                return false;
            };
            let attached: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|&x| self.adjacent(x, k))
                .collect();
            attached.len() == 1
                && (attached[0] == chain[0] || attached[0] == *chain.last().expect("nonempty"))
        })
    }

    /// Connected components of the subdiagram on `nodes`, each sorted, in order of smallest node.
    pub fn components(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        let set: BTreeSet<usize> = nodes.iter().copied().collect();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &start in &set {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for y in self.neighbors(x) {
                    if set.contains(&y) && seen.insert(y) {
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// If the connected node set `comp` forms a type-A diagram, returns it as a
    /// chain starting from its smaller end node.
    pub fn as_simply_laced_chain(&self, comp: &[usize]) -> Option<Vec<usize>> {
        let set: BTreeSet<usize> = comp.iter().copied().collect();
        let inner = |x: usize| -> Vec<usize> {
            self.neighbors(x)
                .into_iter()
                .filter(|y| set.contains(y))
                .collect()
        };
        for &x in &set {
            let nb = inner(x);
            if nb.len() > 2 || nb.iter().any(|&y| self.cartan_entry(x, y) != -1) {
                return None;
            }
        }
        if set.len() == 1 {
            return Some(comp.to_vec());
        }
        let start = *set.iter().find(|&&x| inner(x).len() == 1)?;
        let mut chain = vec![start];
        let mut prev = 0;
        let mut cur = start;
        loop {
            let next: Vec<usize> = inner(cur).into_iter().filter(|&y| y != prev).collect();
            match next.as_slice() {
                [] => break,
                [n] => {
                    prev = cur;
                    cur = *n;
                    chain.push(cur);
                }
                _ => return None,
            }
        }
        (chain.len() == set.len()).then_some(chain)
    }

    /// Applies the simple reflection `s_k` to a root given by coefficients.
    pub fn reflect_root_coeffs(&self, k: usize, c: &[i64]) -> Vec<i64> {
        let pairing: i64 = c
            .iter()
            .enumerate()
            .map(|(m, &cm)| cm * self.cartan[m][k - 1])
            .sum();
        let mut out = c.to_vec();
        out[k - 1] -= pairing;
        out
    }

    fn generate_roots(&self) -> Result<Vec<Root>> {
        let l = self.rank;
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        for k in 1..=l {
            let mut e = vec![0i64; l];
            e[k - 1] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(c) = queue.pop_front() {
            for k in 1..=l {
                let r = self.reflect_root_coeffs(k, &c);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut roots = seen
            .into_iter()
            .map(|c| {
                let coroot = self.coroot_of(&c)?;
                Ok(Root { coeffs: c, coroot })
            })
            .collect::<Result<Vec<Root>>>()?;
        roots.sort_by(|a, b| {
            (!a.is_positive(), a.height().abs(), &a.coeffs).cmp(&(
                !b.is_positive(),
                b.height().abs(),
                &b.coeffs,
            ))
        });
        Ok(roots)
    }

    /// Coroot coefficients of the root `Σ c_k α_k`: `α∨ = (2/(α,α)) Σ (c_k / D_k) α_k∨`
    /// with `(α_i, α_j) = ⟨α_i, α_j∨⟩ / D_j`.
    fn coroot_of(&self, c: &[i64]) -> Result<Vec<i64>> {
        let l = self.rank;
        let mut norm = Rational::zero();
        for i in 0..l {
            for j in 0..l {
                if c[i] != 0 && c[j] != 0 && self.cartan[i][j] != 0 {
                    norm += q(c[i] * c[j] * self.cartan[i][j]) / q(self.symmetrizer[j]);
                }
            }
        }
        (0..l)
            .map(|k| {
                let v = q(2 * c[k]) / (&norm * q(self.symmetrizer[k]));
                crate::rational::to_integer(&v)
                    .ok_or_else(|| Error::Consistency(format!("non-integral coroot for {c:?}")))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rd(s: Series, l: usize) -> RootDatum {
        build_root_datum(s, l).unwrap()
    }

    /// Independent oracle: positive roots by the string algorithm
    /// (add α_k to β whenever the α_k-string through β continues).
    fn positive_roots_by_strings(r: &RootDatum) -> BTreeSet<Vec<i64>> {
        let l = r.rank();
        let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut layer: Vec<Vec<i64>> = (0..l)
            .map(|k| {
                let mut e = vec![0; l];
                e[k] = 1;
                e
            })
            .collect();
        found.extend(layer.iter().cloned());
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for k in 0..l {
                    // p = largest p with β - pα_k a root (or zero-height stop).
                    let mut p = 0;
                    loop {
                        let mut down = beta.clone();
                        down[k] -= p + 1;
                        if found.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pair: i64 = (0..l).map(|m| beta[m] * r.cartan()[m][k]).sum();
                    let qk = p - pair;
                    if qk > 0 {
                        let mut up = beta.clone();
                        up[k] += 1;
                        if found.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            layer = next;
        }
        found
    }

    #[test]
    fn a2_cartan() {
        assert_eq!(rd(Series::A, 2).cartan(), &[vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn g2_cartan_and_lengths() {
        let g = rd(Series::G, 2);
        assert_eq!(g.cartan_entry(1, 2), -1);
        assert_eq!(g.cartan_entry(2, 1), -3);
        assert_eq!(g.root_lengths(), &[RootLength::Short, RootLength::Long]);
    }

    #[test]
    fn b3_double_edge() {
        let b = rd(Series::B, 3);
        assert_eq!(b.cartan_entry(2, 3), -2);
        assert_eq!(b.cartan_entry(3, 2), -1);
        assert!(!b.is_long(3));
        assert!(b.is_long(2));
    }

    #[test]
    fn c_symmetrizer_is_uniform_on_short_nodes() {
        let c = rd(Series::C, 5);
        assert_eq!(c.symmetrizer(), &[2, 2, 2, 2, 1]);
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(build_root_datum(Series::D, 3).is_err());
        assert!(build_root_datum(Series::E, 5).is_err());
        assert!(build_root_datum(Series::B, 1).is_err());
        assert!(build_root_datum(Series::F, 3).is_err());
    }

    #[test]
    fn dual_bases() {
        let g = rd(Series::G, 2);
        for i in 1..=2 {
            for j in 1..=2 {
                let p = g
                    .pairing(&g.fundamental_weight(i), &g.simple_coroot(j))
                    .unwrap();
                assert_eq!(p, q((i == j) as i64));
                let p = g
                    .pairing(&g.simple_root(i), &g.fundamental_coweight(j))
                    .unwrap();
                assert_eq!(p, q((i == j) as i64));
            }
        }
    }

    #[test]
    fn b_table_pairing() {
        for l in 3..=8 {
            let b = rd(Series::B, l);
            let mut c = vec![0; l];
            c[l - 2] = -1;
            c[l - 1] = -2;
            assert_eq!(b.root_pairing(&c, &b.fundamental_coweight(l)), q(-2));
        }
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let a = rd(Series::A, 2);
        let err = a.pairing(&Weight::zero(3), &Coweight::zero(2)).unwrap_err();
        assert!(matches!(err, Error::RankMismatch { .. }));
    }

    #[test]
    fn killing_normalization() {
        let a = rd(Series::A, 4);
        assert_eq!(
            a.killing_form(&a.simple_coroot(1), &a.simple_coroot(1))
                .unwrap(),
            q(2)
        );
        let g = rd(Series::G, 2);
        assert_eq!(
            g.killing_form(&g.simple_coroot(1), &g.simple_coroot(1))
                .unwrap(),
            q(6)
        );
        let w1 = g.fundamental_coweight(1);
        assert_eq!(w1, Coweight::from_ints(&[2, 3]));
        assert_eq!(g.killing_form(&w1, &w1).unwrap(), q(6));
    }

    #[test]
    fn short_coroots_have_length_two_everywhere() {
        for (s, l) in Series::all_types(8) {
            let r = rd(s, l);
            let min = r
                .roots()
                .iter()
                .map(|x| {
                    r.killing_form(&r.root_coweight(x), &r.root_coweight(x))
                        .unwrap()
                })
                .min()
                .unwrap();
            assert_eq!(min, q(2), "{}", r.name());
        }
    }

    #[test]
    fn root_counts() {
        assert_eq!(rd(Series::A, 2).positive_roots().len(), 3);
        assert_eq!(rd(Series::G, 2).positive_roots().len(), 6);
        assert_eq!(rd(Series::E, 8).positive_roots().len(), 120);
        assert_eq!(rd(Series::E, 7).positive_roots().len(), 63);
        assert_eq!(rd(Series::F, 4).positive_roots().len(), 24);
        assert_eq!(rd(Series::B, 5).positive_roots().len(), 25);
        assert_eq!(rd(Series::D, 6).positive_roots().len(), 30);
    }

    #[test]
    fn g2_positive_roots() {
        let got: BTreeSet<Vec<i64>> = rd(Series::G, 2)
            .positive_roots()
            .into_iter()
            .map(|r| r.coeffs)
            .collect();
        let want: BTreeSet<Vec<i64>> = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]]
            .iter()
            .map(|v| v.to_vec())
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn reflection_closure_matches_string_oracle() {
        for (s, l) in Series::all_types(8) {
            let r = rd(s, l);
            let got: BTreeSet<Vec<i64>> =
                r.positive_roots().into_iter().map(|x| x.coeffs).collect();
            assert_eq!(got, positive_roots_by_strings(&r), "{}", r.name());
            assert_eq!(r.roots().len(), 2 * got.len());
        }
    }

    #[test]
    fn two_rho_pairs_to_two_with_simple_coroots() {
        for (s, l) in Series::all_types(8) {
            let r = rd(s, l);
            let tr = r.two_rho();
            for k in 1..=l {
                assert_eq!(r.pairing(&tr, &r.simple_coroot(k)).unwrap(), q(2));
            }
        }
    }

    #[test]
    fn two_rho_examples() {
        let a1 = rd(Series::A, 1);
        assert_eq!(a1.two_rho(), a1.simple_root(1));
        let a2 = rd(Series::A, 2);
        assert_eq!(
            a2.pairing(&a2.two_rho(), &a2.fundamental_coweight(1))
                .unwrap(),
            q(2)
        );
        let g = rd(Series::G, 2);
        assert_eq!(
            g.pairing(&g.two_rho(), &g.fundamental_coweight(1)).unwrap(),
            q(10)
        );
    }

    fn sorted_with_one(r: &RootDatum) -> Vec<i64> {
        let mut v = r.coroot_integers();
        v.push(1);
        v.sort_unstable();
        v
    }

    #[test]
    fn coroot_integer_examples() {
        assert!(rd(Series::A, 5).coroot_integers().iter().all(|&g| g == 1));
        assert_eq!(
            sorted_with_one(&rd(Series::E, 8)),
            vec![1, 2, 2, 3, 3, 4, 4, 5, 6]
        );
        assert_eq!(sorted_with_one(&rd(Series::G, 2)), vec![1, 1, 2]);
        assert_eq!(
            sorted_with_one(&rd(Series::E, 7)),
            vec![1, 1, 2, 2, 2, 3, 3, 4]
        );
        assert_eq!(sorted_with_one(&rd(Series::F, 4)), vec![1, 1, 2, 2, 3]);
        assert_eq!(sorted_with_one(&rd(Series::B, 5)), vec![1, 1, 1, 2, 2, 2]);
        assert_eq!(sorted_with_one(&rd(Series::C, 5)), vec![1; 6]);
    }

    #[test]
    fn highest_coroot_is_highest_short_coroot_oracle() {
        // The coroot of the highest root is the highest short coroot, i.e. the
        // dominant short coroot: it pairs nonnegatively with every simple root.
        for (s, l) in Series::all_types(8) {
            let r = rd(s, l);
            let h = r.coroot_combination(&r.coroot_integers());
            for k in 1..=l {
                assert!(r.pairing(&r.simple_root(k), &h).unwrap() >= q(0));
            }
            assert_eq!(r.killing_form(&h, &h).unwrap(), q(2));
        }
    }

    #[test]
    fn dominance_examples() {
        let a = rd(Series::A, 2);
        let z = Coweight::zero(2);
        assert!(a.dominance_leq(&z, &z).unwrap());
        let x = Coweight::from_ints(&[1, 0]);
        let y = Coweight::from_ints(&[1, 1]);
        assert!(a.dominance_leq(&x, &y).unwrap());
        assert!(!a.dominance_leq(&y, &x).unwrap());
    }

    #[test]
    fn special_root_examples() {
        assert_eq!(rd(Series::A, 5).special_roots(), vec![1, 2, 3, 4, 5]);
        for l in 3..=8 {
            assert_eq!(rd(Series::B, l).special_roots(), vec![l - 1]);
        }
        assert_eq!(rd(Series::E, 6).special_roots(), vec![3]);
        for (s, l) in Series::all_types(8) {
            if s != Series::A {
                assert_eq!(rd(s, l).special_roots().len(), 1, "{s}{l}");
            }
        }
    }

    #[test]
    fn weight_root_coords_roundtrip() {
        let e = rd(Series::E, 7);
        for r in e.positive_roots() {
            let w = e.root_weight(&r);
            let back = e.weight_root_coords(&w);
            assert_eq!(back, r.coeffs.iter().map(|&c| q(c)).collect::<Vec<_>>());
        }
        let g = rd(Series::G, 2);
        let w1 = g.weight_root_coords(&g.fundamental_weight(1));
        assert_eq!(w1, vec![q(2), q(1)]);
    }
}
