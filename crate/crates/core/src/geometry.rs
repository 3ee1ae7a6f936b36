//! Symbolic surface and divisor ledger for the resolution of a subregular slice.
//!
//! Surfaces are descriptors, not schemes: the module records which surface
//! appears, along which sections blowups are centred, and the integers
//! (degrees, self-intersections, multiplicities) attached to them.

use crate::error::{Error, Result};
use crate::rational::{q, to_integer, Rational};
use crate::rootdata::{Coweight, RootDatum, Series, Weight};
use crate::subregular::{SeriesTag, SubregularClass};
use serde::Serialize;
use std::fmt;

fn unsupported(op: &'static str, class: &SubregularClass) -> Error {
    Error::UnsupportedTag {
        op,
        tag: class.label(),
    }
}

fn require_slice(op: &'static str, class: &SubregularClass) -> Result<usize> {
    class.alpha_j.ok_or_else(|| unsupported(op, class))
}

/// One component `D_λ(Z)` of the divisor decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorTerm {
    /// `α_i∨`, `α_j∨` or `α_i∨+α_j∨`.
    pub label: String,
    /// `λ` in simple-coroot coordinates.
    pub coroot: Vec<i64>,
    /// Multiplicity of the component.
    pub multiplicity: i64,
}

/// `d D_{α_i∨}(Z) + D_{α_j∨}(Z) + D_{α_i∨+α_j∨}(Z)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorDecomposition {
    /// The three components in the order `α_i∨, α_j∨, α_i∨+α_j∨`.
    pub terms: Vec<DivisorTerm>,
}

/// The decomposition of the unstable fibre, with multiplicities `(1/2)(λ|λ)`
/// checked against `(d, 1, 1)`.
pub fn divisor_decomposition(class: &SubregularClass) -> Result<DivisorDecomposition> {
    let j = require_slice("divisor_decomposition", class)?;
    let rd = &class.rd;
    let l = rd.rank();
    let mut ci = vec![0; l];
    ci[class.alpha_i - 1] = 1;
    let mut cj = vec![0; l];
    cj[j - 1] = 1;
    let cij: Vec<i64> = ci.iter().zip(&cj).map(|(a, b)| a + b).collect();
    let expected = [class.d, 1, 1];
    let labels = ["α_i∨", "α_j∨", "α_i∨+α_j∨"];
    let terms = [ci, cj, cij]
        .into_iter()
        .zip(labels)
        .zip(expected)
        .map(|((coroot, label), want)| {
            let c = Coweight::from_ints(&coroot);
            let half = rd.killing_form(&c, &c)? / q(2);
            match to_integer(&half) {
                Some(m) if m == want => Ok(DivisorTerm {
                    label: label.into(),
                    coroot,
                    multiplicity: m,
                }),
                _ => Err(Error::Consistency(format!(
                    "(1/2)({label}|{label}) = {half}, expected {want} for {}",
                    class.describe()
                ))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DivisorDecomposition { terms })
}

/// An atom of a section formula: `ϖ_k(y)` or `α_k(y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SectionAtom {
    /// `ϖ_k(y)`.
    Varpi(usize),
    /// `α_k(y)`.
    Alpha(usize),
}

/// A signed formal sum of atoms; the empty sum is the zero section.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SectionFormula {
    /// Nonzero `(coefficient, atom)` terms in insertion order, like terms merged.
    pub terms: Vec<(i64, SectionAtom)>,
}

impl SectionFormula {
    /// The zero section `(y, 0)`.
    pub fn zero() -> Self {
        SectionFormula { terms: Vec::new() }
    }

    /// Builds a formula, merging like terms and dropping zero coefficients.
    pub fn new(terms: impl IntoIterator<Item = (i64, SectionAtom)>) -> Self {
        let mut out: Vec<(i64, SectionAtom)> = Vec::new();
        for (c, a) in terms {
            match out.iter_mut().find(|(_, b)| *b == a) {
                Some(slot) => slot.0 += c,
                None => out.push((c, a)),
            }
        }
        out.retain(|(c, _)| *c != 0);
        SectionFormula { terms: out }
    }

    /// `α_a(y) + α_{a+1}(y) + ⋯` over the given nodes.
    pub fn root_sum(nodes: impl IntoIterator<Item = usize>) -> Self {
        Self::new(nodes.into_iter().map(|k| (1, SectionAtom::Alpha(k))))
    }

    /// Whether this is the zero section.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The character the formula evaluates, in ϖ-coordinates.
    pub fn as_weight(&self, rd: &RootDatum) -> Weight {
        let mut w = Weight::zero(rd.rank());
        for &(c, atom) in &self.terms {
            let v = match atom {
                SectionAtom::Varpi(k) => rd.fundamental_weight(k),
                SectionAtom::Alpha(k) => rd.simple_root(k),
            };
            w = &w + &(c * &v);
        }
        w
    }

    /// Relabels the atoms through `sigma` (1-based, `sigma[k-1]` is the image of `k`).
    pub fn relabel(&self, sigma: &[usize]) -> Self {
        Self::new(self.terms.iter().map(|&(c, a)| {
            let a = match a {
                SectionAtom::Varpi(k) => SectionAtom::Varpi(sigma[k - 1]),
                SectionAtom::Alpha(k) => SectionAtom::Alpha(sigma[k - 1]),
            };
            (c, a)
        }))
    }

    /// Text rendering; `ascii` writes `w3 - a2` instead of `ϖ3 − α2`.
    pub fn render(&self, ascii: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let (minus, plus) = if ascii {
            (" - ", " + ")
        } else {
            (" − ", " + ")
        };
        let mut s = String::new();
        for (idx, &(c, atom)) in self.terms.iter().enumerate() {
            let name = match (atom, ascii) {
                (SectionAtom::Varpi(k), false) => format!("ϖ{k}"),
                (SectionAtom::Varpi(k), true) => format!("w{k}"),
                (SectionAtom::Alpha(k), false) => format!("α{k}"),
                (SectionAtom::Alpha(k), true) => format!("a{k}"),
            };
            let sign = match (idx, c < 0) {
                (0, true) => minus.trim(),
                (0, false) => "",
                (_, true) => minus,
                (_, false) => plus,
            };
            let mag = c.abs();
            if mag == 1 {
                s.push_str(&format!("{sign}{name}"));
            } else {
                s.push_str(&format!("{sign}{mag}{name}"));
            }
        }
        s
    }
}

impl fmt::Display for SectionFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

/// Blowup centres `θ_1, …, θ_{n_0+1}` for `D_{α_j∨}(Z)`.
pub fn theta_sections(class: &SubregularClass) -> Result<Vec<SectionFormula>> {
    let j = require_slice("theta_sections", class)?;
    let i = class.alpha_i;
    let n0 = class.n0();
    use SectionAtom::Varpi;
    let mut out: Vec<SectionFormula> = (1..=n0)
        .map(|k| {
            let mut terms = vec![(1, Varpi(j)), (-1, Varpi(i)), (-1, Varpi(class.c0_node(k)))];
            if k > 1 {
                terms.push((1, Varpi(class.c0_node(k - 1))));
            }
            SectionFormula::new(terms)
        })
        .collect();
    out.push(SectionFormula::zero());
    Ok(out)
}

/// The diagram automorphism carrying the standard `α_i` of the family to the
/// class's `α_i`, as `σ` with `σ[k-1]` the image of `k` (identity when standard).
pub fn relabelling(class: &SubregularClass) -> Vec<usize> {
    let l = class.rank();
    let mut sigma: Vec<usize> = (1..=l).collect();
    let standard = match (class.tag, class.rd.series(), l) {
        (SeriesTag::D, _, _) => l - 3,
        (SeriesTag::E, _, _) => 5,
        _ => class.alpha_i,
    };
    if standard != class.alpha_i {
        match (class.rd.series(), l) {
            (Series::E, 6) => {
                for (a, b) in [(1, 6), (2, 5)] {
                    sigma[a - 1] = b;
                    sigma[b - 1] = a;
                }
            }
            _ => {
                sigma[standard - 1] = class.alpha_i;
                sigma[class.alpha_i - 1] = standard;
            }
        }
    }
    sigma
}

/// Blowup centres `θ'_1, …, θ'_N` for `D_{α_i∨}(Z)`.
pub fn theta_prime_sections(class: &SubregularClass) -> Result<Vec<SectionFormula>> {
    require_slice("theta_prime_sections", class)?;
    let l = class.rank();
    let i = class.alpha_i;
    let big_n = class.big_n;
    use SectionAtom::Varpi;
    let standard: Vec<SectionFormula> = match class.tag {
        SeriesTag::A => (1..big_n)
            .map(|k| {
                let mut terms = vec![(-1, Varpi(i)), (1, Varpi(i + 1)), (1, Varpi(l - k + 1))];
                if k > 1 {
                    terms.push((-1, Varpi(l - k + 2)));
                }
                SectionFormula::new(terms)
            })
            .collect(),
        SeriesTag::B => (1..big_n)
            .map(|_| SectionFormula::root_sum([l - 1]))
            .collect(),
        SeriesTag::D => (1..big_n)
            .map(|k| {
                if k == 1 {
                    SectionFormula::root_sum([l - 2, l - 1])
                } else {
                    SectionFormula::root_sum((l - k..=l - 2).rev())
                }
            })
            .collect(),
        SeriesTag::E => (1..big_n)
            .map(|k| SectionFormula::root_sum(k..=3))
            .collect(),
        _ => Vec::new(),
    };
    let sigma = relabelling(class);
    let mut out: Vec<SectionFormula> = standard.iter().map(|f| f.relabel(&sigma)).collect();
    out.push(SectionFormula::zero());
    Ok(out)
}

/// Base of a stacky Hirzebruch surface or of a double cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CurveBase {
    /// `P¹`.
    P1,
    /// The weighted projective line `P(1, 2)`.
    P12,
}

impl fmt::Display for CurveBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveBase::P1 => write!(f, "P1"),
            CurveBase::P12 => write!(f, "P(1,2)"),
        }
    }
}

/// A symbolic surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurfaceDescriptor {
    /// A line bundle over `E`; the degree is absent when only a sum is fixed.
    LineBundleOverE { degree: Option<i64> },
    /// The Hirzebruch surface `F_e`.
    Hirzebruch { index: i64 },
    /// `P_{P(1,2)}(O ⊕ O(twist))`.
    StackyHirzebruch { twist: i64 },
    /// `P²`.
    ProjectivePlane,
    /// The cone over `E` of the given degree.
    ConeOverE { degree: i64 },
    /// Two line bundles over `E` glued along `E ⊔ E → E`; only the sum of degrees is determined.
    GluedLineBundles { degree_sum: i64 },
    /// A line bundle of degree `line_degree` glued along a degree 2 map to `base`.
    GluedAlongDoubleCover {
        line_degree: i64,
        base: CurveBase,
        branch_points: u32,
    },
}

impl SurfaceDescriptor {
    /// Text rendering; `ascii` replaces non-ASCII symbols.
    pub fn render(&self, ascii: bool) -> String {
        let p2 = if ascii { "P2" } else { "P²" };
        let oplus = if ascii { "+" } else { "⊕" };
        match self {
            SurfaceDescriptor::LineBundleOverE { degree: Some(d) } => format!("line bundle of degree {d} over E"),
            SurfaceDescriptor::LineBundleOverE { degree: None } => "line bundle over E".into(),
            SurfaceDescriptor::Hirzebruch { index } => format!("F_{index}"),
            SurfaceDescriptor::StackyHirzebruch { twist } => format!("P_P(1,2)(O {oplus} O({twist}))"),
            SurfaceDescriptor::ProjectivePlane => p2.into(),
            SurfaceDescriptor::ConeOverE { degree } => format!("cone over E of degree {degree}"),
            SurfaceDescriptor::GluedLineBundles { degree_sum } => {
                format!("two line bundles over E glued along E ⊔ E -> E, degrees summing to {degree_sum}")
                    .replace('⊔', if ascii { "u" } else { "⊔" })
            }
            SurfaceDescriptor::GluedAlongDoubleCover {
                line_degree,
                base,
                branch_points,
            } => format!(
                "line bundle of degree {line_degree} glued along a degree 2 map E -> {base} branched over {branch_points} points"
            ),
        }
    }
}

impl fmt::Display for SurfaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

/// Fibres of `D_{α_i∨+α_j∨}(Z) → Y`: the Hirzebruch surface `F_{d−1}`.
pub fn hirzebruch_component(class: &SubregularClass) -> Result<SurfaceDescriptor> {
    require_slice("hirzebruch_component", class)?;
    Ok(SurfaceDescriptor::Hirzebruch { index: class.d - 1 })
}

/// Which locus of `Y` a base-surface fibre lies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum YCondition {
    /// `ϖ_l(y) ≠ 0` (`α_1(y) ≠ 0` in tag F).
    Generic,
    /// `ϖ_l(y) = 0` (`α_1(y) = 0` in tag F).
    Special,
}

/// The fibre `(D_1')_y` of the base surface.
pub fn base_surface(class: &SubregularClass, y: YCondition) -> Result<SurfaceDescriptor> {
    require_slice("base_surface", class)?;
    use SurfaceDescriptor::*;
    Ok(match (class.tag, y) {
        (SeriesTag::A, _) => LineBundleOverE { degree: None },
        (SeriesTag::B, YCondition::Generic) => StackyHirzebruch { twist: 1 },
        (SeriesTag::B, YCondition::Special) => StackyHirzebruch { twist: 3 },
        (SeriesTag::C | SeriesTag::D | SeriesTag::F, YCondition::Generic) => {
            Hirzebruch { index: 0 }
        }
        (SeriesTag::C | SeriesTag::D | SeriesTag::F, YCondition::Special) => {
            Hirzebruch { index: 2 }
        }
        (SeriesTag::E | SeriesTag::G, _) => ProjectivePlane,
        (SeriesTag::A1, _) => return Err(unsupported("base_surface", class)),
    })
}

/// `(E²)` of the elliptic curve in `(D_1')_y`: 6 (B), 8 (C, D, F), 9 (E, G).
pub fn base_self_intersection(class: &SubregularClass) -> Result<i64> {
    match class.tag {
        SeriesTag::B => Ok(6),
        SeriesTag::C | SeriesTag::D | SeriesTag::F => Ok(8),
        SeriesTag::E | SeriesTag::G => Ok(9),
        SeriesTag::A | SeriesTag::A1 => Err(unsupported("base_self_intersection", class)),
    }
}

/// `(E²)_{(D_1)_y} = (1/d)(N − (E²)_{(D_1')_y} − 1) + n_0 + 1`.
pub fn degree_d1(class: &SubregularClass) -> Result<i64> {
    let e2 = base_self_intersection(class)?;
    let value = Rational::new((class.big_n as i64 - e2 - 1).into(), class.d.into())
        + q(class.n0() as i64 + 1);
    to_integer(&value).ok_or_else(|| {
        Error::Consistency(format!(
            "degree of (D_1)_y = {value} for {}",
            class.describe()
        ))
    })
}

/// In tag A, `deg (D_1)_y + deg (D_1')_y = n_0 + n_1 + 1`.
pub fn degree_sum_type_a(class: &SubregularClass) -> Result<i64> {
    if class.tag != SeriesTag::A {
        return Err(unsupported("degree_sum_type_a", class));
    }
    Ok((class.n0() + class.n1() + 1) as i64)
}

/// `−2 + ⟨ρ, λ⟩` for `λ` a nonnegative integral combination of simple coroots.
pub fn canonical_multiplicity(rd: &RootDatum, lambda: &Coweight) -> Result<i64> {
    if lambda.len() != rd.rank() {
        return Err(Error::RankMismatch {
            expected: rd.rank(),
            found: lambda.len(),
        });
    }
    if !lambda.0.iter().all(|x| x.is_integer() && *x >= q(0)) {
        return Err(Error::InvalidConfiguration(format!(
            "λ = {:?} is not a nonnegative integral coroot combination",
            lambda.to_ints()
        )));
    }
    let rho_pairing = rd.pairing(&rd.two_rho(), lambda)? / q(2);
    let value = rho_pairing - q(2);
    to_integer(&value).ok_or_else(|| Error::Consistency(format!("−2 + ⟨ρ, λ⟩ = {value}")))
}

/// The surface `χ_Z⁻¹(0)`.
pub fn singular_fiber(class: &SubregularClass) -> Result<SurfaceDescriptor> {
    let l = class.rank() as i64;
    use SurfaceDescriptor::*;
    Ok(match class.tag {
        SeriesTag::A => GluedLineBundles {
            degree_sum: degree_sum_type_a(class)?,
        },
        SeriesTag::B => GluedAlongDoubleCover {
            line_degree: degree_d1(class)?,
            base: CurveBase::P12,
            branch_points: 3,
        },
        SeriesTag::C | SeriesTag::D => GluedAlongDoubleCover {
            line_degree: degree_d1(class)?,
            base: CurveBase::P1,
            branch_points: 4,
        },
        SeriesTag::E | SeriesTag::F | SeriesTag::G => ConeOverE {
            degree: -degree_d1(class)?,
        },
        SeriesTag::A1 => {
            debug_assert_eq!(l, 1);
            ConeOverE { degree: 4 }
        }
    })
}

/// The two line-bundle degrees in tag A once the first is chosen.
pub fn glued_degrees(class: &SubregularClass, deg1: i64) -> Result<(i64, i64)> {
    let sum = degree_sum_type_a(class)?;
    Ok((deg1, sum - deg1))
}

/// Singularities of `χ_Z⁻¹(0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityReport {
    /// Whether there is a curve of `A_∞` singularities.
    pub a_infinity: bool,
    /// Number of `D_∞` points.
    pub d_infinity_points: u32,
    /// Degree of the simply elliptic singularity, if any.
    pub simply_elliptic_degree: Option<i64>,
    /// One-line summary.
    pub summary: String,
    /// Characteristic assumptions carried with the statement.
    pub characteristic_flags: Vec<String>,
}

/// Singularity types of a descriptor returned by [`singular_fiber`].
pub fn singularity_types(desc: &SurfaceDescriptor) -> Result<SingularityReport> {
    Ok(match desc {
        SurfaceDescriptor::GluedLineBundles { .. } => SingularityReport {
            a_infinity: true,
            d_infinity_points: 0,
            simply_elliptic_degree: None,
            summary: "A∞ singularities only".into(),
            characteristic_flags: Vec::new(),
        },
        SurfaceDescriptor::GluedAlongDoubleCover {
            branch_points,
            base,
            ..
        } => SingularityReport {
            a_infinity: true,
            d_infinity_points: *branch_points,
            simply_elliptic_degree: None,
            summary: format!(
                "A∞ away from the branch points of {base}, D∞ at {branch_points} branch points"
            ),
            characteristic_flags: vec![
                "D∞ at the branch points if the characteristic of k is not 2".into(),
            ],
        },
        SurfaceDescriptor::ConeOverE { degree } => SingularityReport {
            a_infinity: false,
            d_infinity_points: 0,
            simply_elliptic_degree: Some(*degree),
            summary: format!("simply elliptic of degree {degree}"),
            characteristic_flags: Vec::new(),
        },
        other => {
            return Err(Error::InvalidConfiguration(format!(
                "{} is not a singular fibre descriptor",
                other.render(true)
            )))
        }
    })
}

/// Characteristic assumptions attached to a class's singularity and deformation statements.
pub fn characteristic_flags(class: &SubregularClass) -> Vec<String> {
    let mut flags = Vec::new();
    if class.tag == SeriesTag::A1 {
        flags.push("surface description assumes the characteristic of k is not 2".to_string());
    }
    let char2 = matches!(class.tag, SeriesTag::A1 | SeriesTag::B | SeriesTag::C)
        || (class.tag, class.rank()) == (SeriesTag::E, 7)
        || (class.tag, class.rank()) == (SeriesTag::F, 3);
    if char2 {
        flags.push("miniversality assumes the characteristic of k is not 2".into());
    }
    if (class.tag, class.rank()) == (SeriesTag::E, 6) {
        flags.push("miniversality assumes the characteristic of k is not 3".into());
    }
    flags
}

/// Full singularity report of a class, including class-specific characteristic flags.
pub fn singularity_report(
    class: &SubregularClass,
) -> Result<(SurfaceDescriptor, SingularityReport)> {
    let desc = singular_fiber(class)?;
    let mut report = singularity_types(&desc)?;
    report
        .characteristic_flags
        .extend(characteristic_flags(class));
    Ok((desc, report))
}
