//! Standard parabolics, Levi root subsystems, slope vectors and Levi presentations.
//!
//! A standard parabolic is named by its type `t(P)`, the set of simple roots
//! that are *not* roots of `P`. With the sign convention used here the Borel
//! has the negative roots, so the roots of `P` are the negative roots together
//! with the roots of the Levi (roots whose support avoids `t(P)`).

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{q, Rational};
use crate::rootdata::{Coweight, Root, RootDatum, Series, Weight};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// A rational coweight `μ` with `⟨α_k, μ⟩ = 0` for every simple `α_k ∉ t(P)`.
pub type SlopeVector = Coweight;

/// A standard parabolic subgroup, recorded by its type `t(P)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicType {
    rank: usize,
    t: BTreeSet<usize>,
}

impl ParabolicType {
    /// The parabolic of type `t` in a root datum of rank `rd.rank()`.
    pub fn new(rd: &RootDatum, t: impl IntoIterator<Item = usize>) -> Result<Self> {
        let t: BTreeSet<usize> = t.into_iter().collect();
        for &k in &t {
            rd.check_index(k)?;
        }
        Ok(ParabolicType { rank: rd.rank(), t })
    }

    /// The type `t(P)`.
    pub fn t(&self) -> &BTreeSet<usize> {
        &self.t
    }

    /// Simple roots of the Levi, `Δ ∖ t(P)`.
    pub fn levi_simple(&self) -> Vec<usize> {
        (1..=self.rank).filter(|k| !self.t.contains(k)).collect()
    }

    /// Whether the root with coefficients `c` is a root of `P`.
    pub fn contains_root(&self, r: &Root) -> bool {
        !r.is_positive() || self.is_levi_root(r)
    }

    /// Whether the support of `r` avoids `t(P)`.
    pub fn is_levi_root(&self, r: &Root) -> bool {
        r.coeffs
            .iter()
            .enumerate()
            .all(|(k, &c)| c == 0 || !self.t.contains(&(k + 1)))
    }
}

/// Roots of the standard Levi: those whose support avoids `t(P)`.
pub fn levi_roots(rd: &RootDatum, pt: &ParabolicType) -> Vec<Root> {
    rd.roots()
        .iter()
        .filter(|r| pt.is_levi_root(r))
        .cloned()
        .collect()
}

/// Whether `μ` is a Harder-Narasimhan vector for `P`: `α` is a root of `P`
/// exactly when `⟨α, μ⟩ ≥ 0`.
pub fn is_hn_vector(rd: &RootDatum, pt: &ParabolicType, mu: &SlopeVector) -> bool {
    rd.roots().iter().all(|r| {
        let p = rd.root_pairing(&r.coeffs, mu);
        pt.contains_root(r) == !p.is_negative()
    })
}

/// The unique coweight with `⟨ϖ_k, μ⟩ = targets[k]` for `k ∈ t(P)` and
/// `⟨α_k, μ⟩ = 0` for `k ∉ t(P)`.
pub fn solve_slope(
    rd: &RootDatum,
    pt: &ParabolicType,
    targets: &BTreeMap<usize, Rational>,
) -> Result<SlopeVector> {
    let keys: BTreeSet<usize> = targets.keys().copied().collect();
    if &keys != pt.t() {
        return Err(Error::BadTargets {
            tp: pt.t().iter().copied().collect(),
        });
    }
    let l = rd.rank();
    let mut a = Vec::with_capacity(l);
    let mut b = Vec::with_capacity(l);
    for k in 1..=l {
        if let Some(target) = targets.get(&k) {
            // ⟨ϖ_k, μ⟩ is the k-th simple-coroot coordinate of μ.
            let mut row = vec![Rational::zero(); l];
            row[k - 1] = q(1);
            a.push(row);
            b.push(target.clone());
        } else {
            a.push(rd.cartan()[k - 1].iter().map(|&x| q(x)).collect());
            b.push(Rational::zero());
        }
    }
    linalg::solve(&a, &b)
        .map(Coweight)
        .ok_or_else(|| Error::Consistency("slope system is singular".into()))
}

/// `⟨2ρ, μ⟩`.
pub fn two_rho_pairing(rd: &RootDatum, mu: &SlopeVector) -> Rational {
    rd.pairing(&rd.two_rho(), mu)
        .expect("coweight of this datum")
}

/// `Φ_μ = {α ∈ Φ : ⟨α, μ⟩ < 0}`.
pub fn phi_mu(rd: &RootDatum, mu: &SlopeVector) -> Vec<Root> {
    rd.roots()
        .iter()
        .filter(|r| rd.root_pairing(&r.coeffs, mu).is_negative())
        .cloned()
        .collect()
}

/// A type-A component of a Levi diagram with its attachment data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviComponent {
    /// Nodes `α_{c,1}, ..., α_{c,n_c}` in chain order.
    pub nodes: Vec<usize>,
    /// For each `α_k ∈ t(P)`: `(i_{c,k}, m_{c,k})`, with `i_{c,k} = n_c + 1` and
    /// `m_{c,k} = 0` when `α_k` is not adjacent to the component.
    pub attachments: BTreeMap<usize, (usize, i64)>,
}

impl LeviComponent {
    /// `n_c`.
    pub fn size(&self) -> usize {
        self.nodes.len()
    }
}

/// Presentation of a Levi subgroup as a subgroup of a product of general
/// linear groups and tori, recorded at the level of character lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviPresentation {
    /// `t(P)`.
    pub t: Vec<usize>,
    /// The type-A components.
    pub components: Vec<LeviComponent>,
    /// Present when the Levi has the `B_2 = C_2` factor `{α_{l-1}, α_l}` of
    /// the type `B` class, written as `GSp_4`.
    pub gsp4_node: Option<usize>,
    /// Images of the generators of the character lattice, in the order
    /// `e_{c,1..n_c+1}` per component, then `ω_k` per `k ∈ t`, then `f_1..f_4`.
    pub character_images: Vec<(String, Weight)>,
    relations: Vec<Vec<(usize, i64)>>,
    basis: Vec<usize>,
}

impl LeviPresentation {
    /// The image of the generator with the given label, e.g. `"e[1,2]"`, `"w3"`, `"f1"`.
    pub fn image(&self, label: &str) -> Option<&Weight> {
        self.character_images
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, w)| w)
    }

    /// Index of the component containing node `k`.
    pub fn component_of(&self, k: usize) -> Option<usize> {
        self.components.iter().position(|c| c.nodes.contains(&k))
    }

    /// Images of the characters `e_1, ..., e_{n_c+1}` of component `c`.
    pub fn component_images(&self, c: usize) -> Vec<Weight> {
        (1..=self.components[c].size() + 1)
            .map(|j| {
                self.image(&format!("e[{},{}]", c + 1, j))
                    .expect("label")
                    .clone()
            })
            .collect()
    }

    /// Whether every defining relation of the quotient lattice maps to zero.
    pub fn relations_vanish(&self) -> bool {
        let l = self.character_images[0].1.len();
        self.relations.iter().all(|rel| {
            let mut sum = Weight::zero(l);
            for &(g, c) in rel {
                sum = &sum + &self.character_images[g].1.scale(&q(c));
            }
            sum.0.iter().all(|x| x.is_zero())
        })
    }

    /// Determinant of the induced map on a free basis of the character lattice.
    pub fn determinant(&self) -> Rational {
        let rows: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|&g| self.character_images[g].1 .0.clone())
            .collect();
        linalg::determinant(&rows)
    }

    /// Whether each `β_{c,j} = e_{c,j} - e_{c,j+1}` maps to `α_{c,j}` (and the
    /// `GSp_4` simple roots `f_2 - f_3`, `f_1 - f_2` to `α_{l-1}`, `α_l`).
    pub fn maps_simple_roots(&self, rd: &RootDatum) -> bool {
        let comps = self.components.iter().enumerate().all(|(ci, c)| {
            let imgs = self.component_images(ci);
            c.nodes
                .iter()
                .enumerate()
                .all(|(j, &node)| &imgs[j] - &imgs[j + 1] == rd.simple_root(node))
        });
        let gsp = match self.gsp4_node {
            None => true,
            Some(_) => {
                let l = rd.rank();
                let f = |k: usize| self.image(&format!("f{k}")).expect("gsp4 label").clone();
                &f(2) - &f(3) == rd.simple_root(l - 1) && &f(1) - &f(2) == rd.simple_root(l)
            }
        };
        comps && gsp
    }
}

/// Builds the Levi presentation for `P`.
///
/// Every component of `Δ ∖ t(P)` must be of type A, except for the
/// `{α_{l-1}, α_l}` factor of a `B_l` group with `t(P) = {α_{l-2}}`, which is
/// written as `GSp_4` with the fixed character table.
pub fn levi_presentation(rd: &RootDatum, pt: &ParabolicType) -> Result<LeviPresentation> {
    let l = rd.rank();
    let t: Vec<usize> = pt.t().iter().copied().collect();
    let gsp4 = rd.series() == Series::B && l >= 3 && t == vec![l - 2];
    let mut components = Vec::new();
    for comp in rd.components(&pt.levi_simple()) {
        if gsp4 && comp == vec![l - 1, l] {
            continue;
        }
        let Some(chain) = rd.as_simply_laced_chain(&comp) else {
            return Err(Error::UnsupportedLevi(format!(
                "component {comp:?} of {} with t(P) = {t:?} is not of type A",
                rd.name()
            )));
        };
        components.push(orient_component(rd, chain, &t));
    }

    let mut images: Vec<(String, Weight)> = Vec::new();
    let mut relations: Vec<Vec<(usize, i64)>> = Vec::new();
    let mut basis = Vec::new();
    let mut omega_index = BTreeMap::new();
    let mut comp_ranges = Vec::new();

    for (ci, c) in components.iter().enumerate() {
        let start = images.len();
        let n = c.size();
        for j in 1..=n + 1 {
            images.push((
                format!("e[{},{}]", ci + 1, j),
                component_character(rd, c, j),
            ));
            if j <= n {
                basis.push(images.len() - 1);
            }
        }
        comp_ranges.push(start);
    }
    for &k in &t {
        images.push((format!("w{k}"), rd.fundamental_weight(k)));
        omega_index.insert(k, images.len() - 1);
        if !(gsp4 && k == l - 2) {
            basis.push(images.len() - 1);
        }
    }
    for (ci, c) in components.iter().enumerate() {
        let n = c.size();
        let mut rel: Vec<(usize, i64)> = (0..=n).map(|j| (comp_ranges[ci] + j, 1)).collect();
        for (&k, &(i, m)) in &c.attachments {
            let exp = m * (n as i64 + 1 - i as i64);
            if exp != 0 {
                rel.push((omega_index[&k], -exp));
            }
        }
        relations.push(rel);
    }
    if gsp4 {
        let fw = |k: usize| rd.fundamental_weight(k);
        let table = [
            fw(l),
            &fw(l - 1) - &fw(l),
            &(&fw(l - 2) - &fw(l - 1)) + &fw(l),
            &fw(l - 2) - &fw(l),
        ];
        let f0 = images.len();
        for (k, w) in table.into_iter().enumerate() {
            images.push((format!("f{}", k + 1), w));
        }
        basis.extend([f0, f0 + 1, f0 + 2]);
        relations.push(vec![(f0, 1), (f0 + 1, -1), (f0 + 2, -1), (f0 + 3, 1)]);
        relations.push(vec![(f0, 1), (f0 + 3, 1), (omega_index[&(l - 2)], -1)]);
    }
    Ok(LeviPresentation {
        t,
        components,
        gsp4_node: gsp4.then_some(l - 2),
        character_images: images,
        relations,
        basis,
    })
}

/// Orients a chain so that its attachments to `t(P)` sit as far along as
/// possible; ties keep the chain starting at its smaller end.
fn orient_component(rd: &RootDatum, chain: Vec<usize>, t: &[usize]) -> LeviComponent {
    let build = |nodes: Vec<usize>| {
        let n = nodes.len();
        let attachments = t
            .iter()
            .map(|&k| {
                let att = nodes.iter().position(|&x| rd.adjacent(x, k));
                let entry = match att {
                    Some(p) => (p + 1, -rd.cartan_entry(nodes[p], k)),
                    None => (n + 1, 0),
                };
                (k, entry)
            })
            .collect::<BTreeMap<usize, (usize, i64)>>();
        LeviComponent { nodes, attachments }
    };
    let score = |c: &LeviComponent| -> usize {
        c.attachments
            .values()
            .filter(|(_, m)| *m != 0)
            .map(|(i, _)| *i)
            .sum()
    };
    let forward = build(chain.clone());
    let backward = build(chain.into_iter().rev().collect());
    if score(&backward) > score(&forward) {
        backward
    } else {
        forward
    }
}

/// Image of `e_{c,j}`: the weight pairing with `α_{c,p}∨` as `e_{c,j}` pairs
/// with `e_{c,p}^* - e_{c,p+1}^*`, and with `α_k∨` (`k ∈ t`) as `m_{c,k}` when
/// `j > i_{c,k}` and 0 otherwise.
fn component_character(rd: &RootDatum, c: &LeviComponent, j: usize) -> Weight {
    let mut w = vec![0i64; rd.rank()];
    for (p, &node) in c.nodes.iter().enumerate() {
        let p = p + 1;
        w[node - 1] = (j == p) as i64 - (j == p + 1) as i64;
    }
    for (&k, &(i, m)) in &c.attachments {
        if j > i {
            w[k - 1] = m;
        }
    }
    Weight::from_ints(&w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;
    use crate::rootdata::build_root_datum;

    fn rd(s: Series, l: usize) -> RootDatum {
        build_root_datum(s, l).unwrap()
    }

    fn targets(v: &[(usize, Rational)]) -> BTreeMap<usize, Rational> {
        v.iter().cloned().collect()
    }

    #[test]
    fn levi_root_extremes() {
        let r = rd(Series::D, 5);
        let borel = ParabolicType::new(&r, 1..=5).unwrap();
        assert!(levi_roots(&r, &borel).is_empty());
        let whole = ParabolicType::new(&r, []).unwrap();
        assert_eq!(levi_roots(&r, &whole).len(), r.roots().len());
    }

    #[test]
    fn b_levi_root_count() {
        for l in 4..=8 {
            let r = rd(Series::B, l);
            let pt = ParabolicType::new(&r, [l - 2]).unwrap();
            let a_pos = (l - 3) * (l - 2) / 2;
            assert_eq!(levi_roots(&r, &pt).len(), 2 * a_pos + 8);
        }
    }

    #[test]
    fn hn_examples() {
        let a3 = rd(Series::A, 3);
        let none = ParabolicType::new(&a3, []).unwrap();
        assert!(is_hn_vector(&a3, &none, &Coweight::zero(3)));
        let pt = ParabolicType::new(&a3, [1, 2]).unwrap();
        let mu = solve_slope(&a3, &pt, &targets(&[(1, q(-1)), (2, q(-1))])).unwrap();
        assert!(is_hn_vector(&a3, &pt, &mu));
        let a2 = rd(Series::A, 2);
        let pt = ParabolicType::new(&a2, [1]).unwrap();
        let mu = solve_slope(&a2, &pt, &targets(&[(1, q(1))])).unwrap();
        assert!(!is_hn_vector(&a2, &pt, &mu));
    }

    #[test]
    fn slope_examples() {
        let a1 = rd(Series::A, 1);
        let pt = ParabolicType::new(&a1, [1]).unwrap();
        let mu = solve_slope(&a1, &pt, &targets(&[(1, q(-2))])).unwrap();
        assert_eq!(mu, Coweight::from_ints(&[-2]));

        let g = rd(Series::G, 2);
        let pt = ParabolicType::new(&g, [1]).unwrap();
        let mu = solve_slope(&g, &pt, &targets(&[(1, q(-1))])).unwrap();
        assert_eq!(mu, Coweight(vec![q(-1), qf(-3, 2)]));
        assert_eq!(mu, g.fundamental_coweight(1).scale(&qf(-1, 2)));

        let c2 = rd(Series::C, 2);
        let pt = ParabolicType::new(&c2, [1]).unwrap();
        let mu = solve_slope(&c2, &pt, &targets(&[(1, q(-1))])).unwrap();
        assert_eq!(two_rho_pairing(&c2, &mu), q(-4));
    }

    #[test]
    fn slope_targets_must_match_type() {
        let g = rd(Series::G, 2);
        let pt = ParabolicType::new(&g, [1]).unwrap();
        assert!(solve_slope(&g, &pt, &targets(&[(2, q(-1))])).is_err());
    }

    #[test]
    fn phi_mu_examples() {
        let g = rd(Series::G, 2);
        assert!(phi_mu(&g, &Coweight::zero(2)).is_empty());
        let pt = ParabolicType::new(&g, [1]).unwrap();
        let mu = solve_slope(&g, &pt, &targets(&[(1, q(-1))])).unwrap();
        let mut c1: Vec<i64> = phi_mu(&g, &mu).iter().map(|r| r.coeffs[0]).collect();
        c1.sort_unstable();
        assert_eq!(c1, vec![1, 1, 2, 3, 3]);

        let a1 = rd(Series::A, 1);
        let roots = phi_mu(&a1, &Coweight::from_ints(&[-2]));
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].coeffs, vec![1]);
    }

    #[test]
    fn g_presentation() {
        let g = rd(Series::G, 2);
        let p = levi_presentation(&g, &ParabolicType::new(&g, [1]).unwrap()).unwrap();
        let imgs = p.component_images(0);
        assert_eq!(imgs[0], g.fundamental_weight(2));
        assert_eq!(
            imgs[1],
            &(3 * &g.fundamental_weight(1)) - &g.fundamental_weight(2)
        );
        assert!(p.relations_vanish());
        assert_eq!(p.determinant().abs(), q(1));
        assert!(p.maps_simple_roots(&g));
    }

    #[test]
    fn b_presentation_gsp4_table() {
        for l in 3..=8 {
            let b = rd(Series::B, l);
            let p = levi_presentation(&b, &ParabolicType::new(&b, [l - 2]).unwrap()).unwrap();
            let fw = |k| b.fundamental_weight(k);
            assert_eq!(p.image("f1").unwrap(), &fw(l));
            assert_eq!(p.image("f2").unwrap(), &(&fw(l - 1) - &fw(l)));
            assert_eq!(
                p.image("f3").unwrap(),
                &(&(&fw(l - 2) - &fw(l - 1)) + &fw(l))
            );
            assert_eq!(p.image("f4").unwrap(), &(&fw(l - 2) - &fw(l)));
            assert!(p.relations_vanish(), "B{l}");
            assert_eq!(p.determinant().abs(), q(1), "B{l}");
            assert!(p.maps_simple_roots(&b), "B{l}");
        }
    }

    #[test]
    fn unsupported_levi() {
        let f = rd(Series::F, 4);
        let err = levi_presentation(&f, &ParabolicType::new(&f, [1]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::UnsupportedLevi(_)));
    }

    #[test]
    fn c_and_f_last_character() {
        for (s, l, i, j) in [
            (Series::C, 4, 3, 4),
            (Series::F, 4, 3, 2),
            (Series::B, 3, 3, 2),
        ] {
            let r = rd(s, l);
            let p = levi_presentation(&r, &ParabolicType::new(&r, [i]).unwrap()).unwrap();
            let c = p.component_of(j).unwrap();
            let comp = &p.components[c];
            assert_eq!(*comp.nodes.last().unwrap(), j);
            let imgs = p.component_images(c);
            let expected = &(2 * &r.fundamental_weight(i)) - &r.fundamental_weight(j);
            assert_eq!(imgs.last().unwrap(), &expected, "{}", r.name());
        }
    }
}
