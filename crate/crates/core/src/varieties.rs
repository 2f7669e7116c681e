//! Closed-form invariants of projective surfaces and of their dual varieties,
//! and the Meyer-function value on a lasso around the dual variety.
//!
//! For a smooth surface `X ⊂ P_N` whose generic hyperplane section has genus
//! `g > 0` (and whose first homology has rank below `2g` over some PID), a
//! generic pencil has `deg D_X = χ(X) + deg X - 2(2 - 2g)` nodal fibers, and
//! the lasso value is `(Sign X - deg X) / deg D_X`. Complete intersections and
//! Veronese images of complete intersections get exact closed forms; higher
//! dimensional `X` is reduced to the surface cut out by a generic linear
//! subspace.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::text::format_rational;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("invalid variety data: {0}")]
    InvalidSpec(String),
    #[error("excluded case: {0}")]
    ExcludedCase(String),
    #[error("hyperplane sections have genus 0; the lasso formula needs g > 0")]
    GenusZero,
    #[error("first homology hypothesis (rank H_1(X; R) < 2g) not asserted")]
    HomologyHypothesis,
    #[error("deg D_X = {0} is not positive, so D_X is not a hypersurface")]
    NonPositiveDegDx(String),
    #[error("c1.h - deg X = {0} is odd; no integral genus")]
    NonIntegralGenus(String),
    #[error("c1.h - deg X = {0} gives a negative genus")]
    NegativeGenus(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
}

impl VarietyError {
    /// Whether the error means a computed quantity broke a guaranteed
    /// property, as opposed to the input failing a precondition.
    pub fn is_contract_violation(&self) -> bool {
        matches!(self, VarietyError::NonPositiveDegDx(_))
    }
}

fn int(n: impl Into<BigInt>) -> BigInt {
    n.into()
}

fn ratio(n: &BigInt, d: &BigInt) -> Rational {
    Rational::new(n.clone(), d.clone())
}

/// Topological invariants of a surface and the genus of its hyperplane
/// sections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub sign: BigInt,
    pub chi: BigInt,
    pub deg: BigInt,
    pub genus: BigInt,
    /// User assertion that `rank H_1(X; R) < 2g` for some PID `R`. Not
    /// computable from the other fields.
    pub h1_rank_below_2g: bool,
}

impl SurfaceInvariants {
    pub fn new(
        sign: impl Into<BigInt>,
        chi: impl Into<BigInt>,
        deg: impl Into<BigInt>,
        genus: impl Into<BigInt>,
    ) -> Self {
        Self {
            sign: sign.into(),
            chi: chi.into(),
            deg: deg.into(),
            genus: genus.into(),
            h1_rank_below_2g: true,
        }
    }

    /// `χ(C) = 2 - 2g` of a generic hyperplane section.
    pub fn section_euler_char(&self) -> BigInt {
        int(2) - int(2) * &self.genus
    }

    pub fn key_values(&self) -> Vec<(&'static str, String)> {
        vec![
            ("sign", self.sign.to_string()),
            ("chi", self.chi.to_string()),
            ("deg", self.deg.to_string()),
            ("genus", self.genus.to_string()),
        ]
    }
}

/// Degree of the dual variety and the lasso value `φ = alpha / beta`.
///
/// For complete intersections and their Veronese images
/// `deg D_X = (Π n_i) d^{n-2} beta`. For invariants supplied directly,
/// `alpha = Sign X - deg X` and `beta = deg D_X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LassoReport {
    pub deg_dx: BigInt,
    pub phi: Rational,
    pub alpha: Rational,
    pub beta: Rational,
}

impl LassoReport {
    pub fn key_values(&self) -> Vec<(&'static str, String)> {
        vec![
            ("deg_DX", self.deg_dx.to_string()),
            ("phi", format_rational(&self.phi)),
            ("alpha", format_rational(&self.alpha)),
            ("beta", format_rational(&self.beta)),
        ]
    }
}

/// Lasso value for a surface given its invariants.
pub fn generic_surface_lasso(inv: &SurfaceInvariants) -> Result<LassoReport, VarietyError> {
    if inv.deg < BigInt::one() {
        return Err(VarietyError::InvalidSpec(format!("deg X = {} must be positive", inv.deg)));
    }
    if inv.genus.is_negative() {
        return Err(VarietyError::InvalidSpec(format!("genus {} is negative", inv.genus)));
    }
    if inv.genus.is_zero() {
        return Err(VarietyError::GenusZero);
    }
    if !inv.h1_rank_below_2g {
        return Err(VarietyError::HomologyHypothesis);
    }
    let deg_dx = &inv.chi + &inv.deg - int(2) * inv.section_euler_char();
    if !deg_dx.is_positive() {
        return Err(VarietyError::NonPositiveDegDx(deg_dx.to_string()));
    }
    let numer = &inv.sign - &inv.deg;
    Ok(LassoReport {
        phi: ratio(&numer, &deg_dx),
        alpha: Rational::from_integer(numer),
        beta: Rational::from_integer(deg_dx.clone()),
        deg_dx,
    })
}

/// Genus of a smooth hyperplane section from `<c_1(X) h, [X]>` and `deg X`,
/// via `2 - 2g = <c_1(X) h, [X]> - deg X`.
pub fn hyperplane_genus(c1_dot_h: &BigInt, deg: &BigInt) -> Result<BigInt, VarietyError> {
    let chi_c = c1_dot_h - deg;
    if chi_c.is_odd() {
        return Err(VarietyError::NonIntegralGenus(chi_c.to_string()));
    }
    let g = (int(2) - &chi_c) / int(2);
    if g.is_negative() {
        return Err(VarietyError::NegativeGenus(chi_c.to_string()));
    }
    Ok(g)
}

/// Codimension `i^2 - i` of the stratum of pairs meeting non-transversally
/// with an `i`-dimensional tangency, together with the `i - i^2` correction
/// to the fiber dimension.
pub fn stratum_codim(i: u64) -> (u64, i64) {
    assert!(i >= 1, "stratum index starts at 1");
    let c = i * i - i;
    (c, -(c as i64))
}

struct PowerSums {
    product: BigInt,
    sum: BigInt,
    sum_sq: BigInt,
    pair_sum: BigInt,
}

impl PowerSums {
    fn of(xs: &[BigInt]) -> Self {
        let sum: BigInt = xs.iter().sum();
        let sum_sq: BigInt = xs.iter().map(|x| x * x).sum();
        Self {
            product: xs.iter().product(),
            pair_sum: (&sum * &sum - &sum_sq) / int(2),
            sum,
            sum_sq,
        }
    }
}

fn binom2(n: &BigInt) -> BigInt {
    n * (n - int(1)) / int(2)
}

/// Invariants of a smooth complete intersection surface of type `degrees`
/// in `P_{k+2}` (`k = degrees.len()`), embedded further by `v_d` so that the
/// hyperplane class is `d` times the restricted one.
pub fn complete_intersection_surface(degrees: &[BigInt], d: &BigInt) -> Result<SurfaceInvariants, VarietyError> {
    let k = int(degrees.len() as u64);
    let p = PowerSums::of(degrees);
    let chi = &p.product * (binom2(&(&k + int(3))) + &p.sum_sq - (&k + int(3)) * &p.sum + &p.pair_sum);
    let sign3 = &p.product * (&k + int(3) - &p.sum_sq);
    if !sign3.is_multiple_of(&int(3)) {
        return Err(VarietyError::InvalidSpec(format!(
            "signature {sign3}/3 is not integral for degrees {degrees:?}"
        )));
    }
    let deg = &p.product * d * d;
    let c1_dot_h = &p.product * d * (&k + int(3) - &p.sum);
    let genus = hyperplane_genus(&c1_dot_h, &deg)?;
    Ok(SurfaceInvariants {
        sign: sign3 / int(3),
        chi,
        deg,
        genus,
        h1_rank_below_2g: true,
    })
}

/// `(m, [n_1..n_m], n, d)`: the `v_d`-image of a smooth complete intersection
/// of type `(n_1..n_m)` in `P_{m+n}`, of dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CiSpec {
    degrees: Vec<u64>,
    n: u64,
    d: u64,
}

impl CiSpec {
    pub fn new(m: usize, degrees: Vec<u64>, n: u64, d: u64) -> Result<Self, VarietyError> {
        if degrees.len() != m {
            return Err(VarietyError::InvalidSpec(format!(
                "m = {m} but {} degrees given",
                degrees.len()
            )));
        }
        if let Some(bad) = degrees.iter().find(|&&x| x < 2) {
            return Err(VarietyError::InvalidSpec(format!("defining degree {bad} < 2")));
        }
        if n < 2 {
            return Err(VarietyError::InvalidSpec(format!("dimension n = {n} < 2")));
        }
        if d < 1 {
            return Err(VarietyError::InvalidSpec("Veronese degree d must be >= 1".into()));
        }
        if m == 0 && d < 2 {
            return Err(VarietyError::InvalidSpec("m = 0 requires d >= 2".into()));
        }
        if d == 1 && degrees == [2] {
            return Err(VarietyError::ExcludedCase("(d, m, n_1) = (1, 1, 2): a quadric".into()));
        }
        if n == 2 && d == 2 && m == 0 {
            return Err(VarietyError::ExcludedCase(
                "(n, d, m) = (2, 2, 0): the Veronese surface".into(),
            ));
        }
        Ok(Self { degrees, n, d })
    }

    pub fn m(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// Type of the surface `X ∩ M` for a generic linear `M` of codimension
    /// `n - 2`, pulled back to `P_{m+n}`: the `n_i` followed by `n - 2`
    /// copies of `d`.
    pub fn section_surface_degrees(&self) -> Vec<BigInt> {
        self.degrees
            .iter()
            .map(|&x| int(x))
            .chain(std::iter::repeat_n(int(self.d), (self.n - 2) as usize))
            .collect()
    }

    /// Invariants of the surface section `X ∩ M`.
    pub fn section_surface(&self) -> Result<SurfaceInvariants, VarietyError> {
        complete_intersection_surface(&self.section_surface_degrees(), &int(self.d))
    }
}

impl fmt::Display for CiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degs: Vec<String> = self.degrees.iter().map(u64::to_string).collect();
        write!(f, "veronese-ci:{}:{}:{}:{}", self.m(), degs.join(","), self.n, self.d)
    }
}

/// Lasso value for a complete intersection surface of type `degrees` in
/// `P_{m+2}`, with its topological invariants.
pub fn ci_surface_invariants(
    m: usize,
    degrees: &[u64],
) -> Result<(SurfaceInvariants, LassoReport), VarietyError> {
    if degrees.len() != m {
        return Err(VarietyError::InvalidSpec(format!(
            "m = {m} but {} degrees given",
            degrees.len()
        )));
    }
    if m == 0 {
        return Err(VarietyError::InvalidSpec("a complete intersection needs m >= 1".into()));
    }
    if let Some(bad) = degrees.iter().find(|&&x| x < 2) {
        return Err(VarietyError::InvalidSpec(format!("defining degree {bad} < 2")));
    }
    if degrees == [2] {
        return Err(VarietyError::ExcludedCase("(m, n_1) = (1, 2): a quadric surface".into()));
    }
    let ns: Vec<BigInt> = degrees.iter().map(|&x| int(x)).collect();
    let inv = complete_intersection_surface(&ns, &int(1))?;
    if inv.genus.is_zero() {
        return Err(VarietyError::GenusZero);
    }
    let p = PowerSums::of(&ns);
    let mm = int(m as u64);
    let alpha = ratio(&(&mm - &p.sum_sq), &int(3));
    let beta = (&mm * &mm + &mm) / int(2) + &p.sum_sq - (&mm + int(1)) * &p.sum + &p.pair_sum;
    let deg_dx = &p.product * &beta;
    if !deg_dx.is_positive() {
        return Err(VarietyError::NonPositiveDegDx(deg_dx.to_string()));
    }
    let beta = Rational::from_integer(beta);
    let report = LassoReport {
        deg_dx,
        phi: &alpha / &beta,
        alpha,
        beta,
    };
    Ok((inv, report))
}

/// Lasso value for the `v_d`-image of a complete intersection.
pub fn veronese_ci_lasso(spec: &CiSpec) -> Result<LassoReport, VarietyError> {
    let ns: Vec<BigInt> = spec.degrees.iter().map(|&x| int(x)).collect();
    let p = PowerSums::of(&ns);
    let (n, d) = (int(spec.n), int(spec.d));
    let total = int(spec.m() as u64) + &n + int(1);
    let d2 = &d * &d;
    let alpha = ratio(&(&total - &p.sum_sq - (&n + int(1)) * &d2), &int(3));
    let beta = binom2(&total) + &p.sum_sq + &p.pair_sum - &total * (&p.sum + &n * &d)
        + &n * &d * &p.sum
        + (&n * &n + &n) * &d2 / int(2);
    let deg_dx = &p.product * num_traits::pow(d.clone(), (spec.n - 2) as usize) * &beta;
    if !deg_dx.is_positive() {
        return Err(VarietyError::NonPositiveDegDx(deg_dx.to_string()));
    }
    if spec.section_surface()?.genus.is_zero() {
        return Err(VarietyError::GenusZero);
    }
    let beta = Rational::from_integer(beta);
    Ok(LassoReport {
        deg_dx,
        phi: &alpha / &beta,
        alpha,
        beta,
    })
}

/// A named variety whose lasso value can be computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preset {
    /// Invariants supplied directly.
    Surface(SurfaceInvariants),
    CompleteIntersection(Vec<u64>),
    VeroneseCi(CiSpec),
}

/// The `(3,3)` Segre-type embedding of `P_1 × P_1`: `Sign = 0`, `χ = 4`,
/// `deg = 18`, sections of genus 4.
pub fn segre33() -> SurfaceInvariants {
    SurfaceInvariants::new(0, 4, 18, 4)
}

/// `v_2(P_4)`
pub fn veronese_p4_d2() -> CiSpec {
    CiSpec::new(0, vec![], 4, 2).expect("valid spec")
}

/// Names of the fixed presets with a short description. Parametrized
/// families `ci:<m>:<n1,..>` and `veronese-ci:<m>:<n1,..>:<n>:<d>` are
/// accepted by [`parse_preset`] as well.
pub fn builtin_presets() -> Vec<(&'static str, &'static str)> {
    vec![
        ("segre33", "P1 x P1 embedded by O(3,3): Sign 0, chi 4, deg 18, genus 4"),
        ("veronese-p4-d2", "v_2(P4), the degree-2 Veronese image of P4"),
        ("ci:<m>:<n1,...>", "complete intersection surface of type (n1..nm) in P_{m+2}"),
        (
            "veronese-ci:<m>:<n1,...>:<n>:<d>",
            "v_d-image of an n-dimensional complete intersection of type (n1..nm)",
        ),
    ]
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, VarietyError> {
    s.trim()
        .parse()
        .map_err(|_| VarietyError::InvalidSpec(format!("invalid {what} `{s}`")))
}

/// Comma-separated degree list; the empty string is the empty list.
pub fn parse_degrees(s: &str) -> Result<Vec<u64>, VarietyError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| parse_num(t, "degree")).collect()
}

pub fn parse_preset(name: &str) -> Result<Preset, VarietyError> {
    match name {
        "segre33" => return Ok(Preset::Surface(segre33())),
        "veronese-p4-d2" => return Ok(Preset::VeroneseCi(veronese_p4_d2())),
        _ => {}
    }
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["ci", m, degs] => {
            let m: usize = parse_num(m, "m")?;
            let degrees = parse_degrees(degs)?;
            if degrees.len() != m {
                return Err(VarietyError::InvalidSpec(format!("m = {m} but {} degrees", degrees.len())));
            }
            Ok(Preset::CompleteIntersection(degrees))
        }
        ["veronese-ci", m, degs, n, d] => Ok(Preset::VeroneseCi(CiSpec::new(
            parse_num(m, "m")?,
            parse_degrees(degs)?,
            parse_num(n, "n")?,
            parse_num(d, "d")?,
        )?)),
        _ => Err(VarietyError::UnknownPreset(name.to_string())),
    }
}

impl Preset {
    /// Surface invariants (where defined) and the lasso report.
    pub fn evaluate(&self) -> Result<(Option<SurfaceInvariants>, LassoReport), VarietyError> {
        match self {
            Preset::Surface(inv) => Ok((Some(inv.clone()), generic_surface_lasso(inv)?)),
            Preset::CompleteIntersection(degrees) => {
                let (inv, rep) = ci_surface_invariants(degrees.len(), degrees)?;
                Ok((Some(inv), rep))
            }
            Preset::VeroneseCi(spec) => {
                let inv = if spec.n == 2 { Some(spec.section_surface()?) } else { None };
                Ok((inv, veronese_ci_lasso(spec)?))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn segre_surface() {
        let r = generic_surface_lasso(&segre33()).unwrap();
        assert_eq!(r.deg_dx, int(34));
        assert_eq!(r.phi, q(-9, 17));
    }

    #[test]
    fn zero_numerator() {
        let r = generic_surface_lasso(&SurfaceInvariants::new(7, 10, 7, 3)).unwrap();
        assert!(r.phi.is_zero());
    }

    #[test]
    fn cubic_surface_both_paths() {
        let inv = SurfaceInvariants::new(-5, 9, 3, 1);
        let r = generic_surface_lasso(&inv).unwrap();
        assert_eq!((r.deg_dx.clone(), r.phi.clone()), (int(12), q(-2, 3)));
        let (ci_inv, ci) = ci_surface_invariants(1, &[3]).unwrap();
        assert_eq!(ci_inv, inv);
        assert_eq!(ci.phi, q(-2, 3));
        assert_eq!(ci.deg_dx, int(12));
    }

    #[test]
    fn single_hypersurface_dual_degree() {
        for n1 in 3..=9u64 {
            let (_, r) = ci_surface_invariants(1, &[n1]).unwrap();
            assert_eq!(r.deg_dx, int(n1 * (n1 - 1) * (n1 - 1)));
        }
    }

    #[test]
    fn genus_one_boundary() {
        // K3-type (2,2) in P4 hyperplane sections are elliptic: genus exactly 1
        let (inv, r) = ci_surface_invariants(2, &[2, 2]).unwrap();
        assert_eq!(inv.genus, int(1));
        assert_eq!(r.phi, q(-2, 3));
        assert_eq!(generic_surface_lasso(&inv).unwrap().phi, q(-2, 3));
    }

    #[test]
    fn veronese_values() {
        let r = veronese_ci_lasso(&veronese_p4_d2()).unwrap();
        assert_eq!(r.alpha, q(-5, 1));
        assert_eq!(r.beta, q(10, 1));
        assert_eq!(r.phi, q(-1, 2));
        assert_eq!(r.deg_dx, int(40));

        let r = veronese_ci_lasso(&CiSpec::new(0, vec![], 2, 3).unwrap()).unwrap();
        assert_eq!((r.alpha, r.beta, r.phi), (q(-8, 1), q(12, 1), q(-2, 3)));
        // plane cubics: 3 + 9 - 0 nodal members in a generic net pencil
        assert_eq!(r.deg_dx, int(12));

        let r = veronese_ci_lasso(&CiSpec::new(1, vec![3], 2, 1).unwrap()).unwrap();
        assert_eq!(r.phi, q(-2, 3));
    }

    #[test]
    fn excluded_and_invalid() {
        assert!(matches!(ci_surface_invariants(1, &[2]), Err(VarietyError::ExcludedCase(_))));
        assert!(matches!(CiSpec::new(1, vec![2], 3, 1), Err(VarietyError::ExcludedCase(_))));
        assert!(matches!(CiSpec::new(0, vec![], 2, 2), Err(VarietyError::ExcludedCase(_))));
        assert!(matches!(CiSpec::new(0, vec![], 3, 1), Err(VarietyError::InvalidSpec(_))));
        assert!(matches!(CiSpec::new(2, vec![3], 2, 1), Err(VarietyError::InvalidSpec(_))));
        assert!(matches!(CiSpec::new(1, vec![1], 2, 1), Err(VarietyError::InvalidSpec(_))));
        assert!(matches!(
            generic_surface_lasso(&SurfaceInvariants::new(1, 3, 1, 0)),
            Err(VarietyError::GenusZero)
        ));
        assert!(matches!(
            generic_surface_lasso(&SurfaceInvariants::new(0, -40, 2, 2)),
            Err(VarietyError::NonPositiveDegDx(_))
        ));
        let mut inv = segre33();
        inv.h1_rank_below_2g = false;
        assert_eq!(generic_surface_lasso(&inv), Err(VarietyError::HomologyHypothesis));
    }

    #[test]
    fn genus_from_chern_class() {
        assert_eq!(hyperplane_genus(&int(12), &int(18)).unwrap(), int(4));
        assert_eq!(hyperplane_genus(&int(5), &int(5)).unwrap(), int(1));
        assert_eq!(hyperplane_genus(&int(7), &int(5)).unwrap(), int(0));
        assert!(matches!(hyperplane_genus(&int(6), &int(5)), Err(VarietyError::NonIntegralGenus(_))));
        assert!(matches!(hyperplane_genus(&int(9), &int(5)), Err(VarietyError::NegativeGenus(_))));
    }

    #[test]
    fn strata() {
        assert_eq!(stratum_codim(1), (0, 0));
        assert_eq!(stratum_codim(2), (2, -2));
        assert_eq!(stratum_codim(3), (6, -6));
    }

    #[test]
    fn presets() {
        assert_eq!(parse_preset("segre33").unwrap(), Preset::Surface(segre33()));
        let (_, r) = parse_preset("veronese-p4-d2").unwrap().evaluate().unwrap();
        assert_eq!(r.deg_dx, int(40));
        let (inv, r) = parse_preset("ci:1:3").unwrap().evaluate().unwrap();
        assert_eq!(inv.unwrap().chi, int(9));
        assert_eq!(r.phi, q(-2, 3));
        let (_, r) = parse_preset("veronese-ci:0::4:2").unwrap().evaluate().unwrap();
        assert_eq!(r.phi, q(-1, 2));
        assert!(matches!(parse_preset("nope"), Err(VarietyError::UnknownPreset(_))));
        assert!(parse_preset("ci:2:3").is_err());
        assert_eq!(veronese_p4_d2().to_string(), "veronese-ci:0::4:2");
    }
}
