//! Local signatures of fiber germs and the global signature formula
//! `Sign(M) = Σ σ(F_i)` over the singular fiber germs of a fibration.
//!
//! A germ's local signature is its Meyer-function value plus the signature of
//! the fiber neighborhood. Surface invariants come in as `χ(O)` and `K^2`
//! and are converted with the Noether and Hirzebruch formulas.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::text::{format_rational, parse_rational};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalSigError {
    #[error("expected exactly one germ with unknown local signature, found {0}")]
    ZeroOrManyUnknowns(usize),
    #[error("germ `{0}` is flagged smooth but has nonzero phi or neighborhood signature")]
    SmoothGermNonzero(String),
    #[error("unknown germ `{0}`")]
    UnknownGerm(String),
    #[error("(chi_top, sign) = ({chi_top}, {sign}) does not come from integral chi(O), K^2")]
    NonIntegralInvariants { chi_top: String, sign: String },
    #[error("germ `{0}` has count 0")]
    ZeroCount(String),
    #[error("fiber genus must be at least 2, got {0}")]
    FiberGenus(u32),
    #[error("ledger format: {0}")]
    Format(String),
}

impl LocalSigError {
    pub fn is_contract_violation(&self) -> bool {
        matches!(self, LocalSigError::SmoothGermNonzero(_))
    }
}

fn int(n: impl Into<BigInt>) -> BigInt {
    n.into()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Base {
    Disk,
    P1,
}

impl Base {
    pub fn euler_char(self) -> i64 {
        match self {
            Base::Disk => 1,
            Base::P1 => 2,
        }
    }
}

/// Holomorphic invariants of a compact complex surface fibered in genus
/// `fiber_genus` curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexSurfaceData {
    pub chi_o: BigInt,
    pub k2: BigInt,
    pub fiber_genus: u32,
    pub base: Base,
}

impl ComplexSurfaceData {
    pub fn new(chi_o: impl Into<BigInt>, k2: impl Into<BigInt>, fiber_genus: u32, base: Base) -> Self {
        Self {
            chi_o: chi_o.into(),
            k2: k2.into(),
            fiber_genus,
            base,
        }
    }

    /// `(χ_top, Sign)` via `χ_top = 12χ(O) - K^2` and `Sign = K^2 - 8χ(O)`.
    pub fn topology(&self) -> (BigInt, BigInt) {
        surface_topology(&self.chi_o, &self.k2)
    }
}

/// Noether and Hirzebruch: `χ_top = 12χ(O) - K^2`, `Sign = K^2 - 8χ(O)`.
pub fn surface_topology(chi_o: &BigInt, k2: &BigInt) -> (BigInt, BigInt) {
    (int(12) * chi_o - k2, k2 - int(8) * chi_o)
}

/// Inverse of [`surface_topology`]: `χ(O) = (χ_top + Sign)/4`,
/// `K^2 = Sign + 8χ(O)`.
pub fn holomorphic_from_topology(chi_top: &BigInt, sign: &BigInt) -> Result<(BigInt, BigInt), LocalSigError> {
    let s = chi_top + sign;
    if !s.is_multiple_of(&int(4)) {
        return Err(LocalSigError::NonIntegralInvariants {
            chi_top: chi_top.to_string(),
            sign: sign.to_string(),
        });
    }
    let chi_o = s / int(4);
    let k2 = sign + int(8) * &chi_o;
    Ok((chi_o, k2))
}

/// Number of singular fibers counted with Euler contribution one:
/// `χ_top - χ(base)(2 - 2g)`.
pub fn fiber_count(chi_top: &BigInt, genus: u32, base_chi: i64) -> Result<BigInt, LocalSigError> {
    if genus < 2 {
        return Err(LocalSigError::FiberGenus(genus));
    }
    Ok(chi_top - int(base_chi) * (int(2) - int(2) * int(genus)))
}

/// `σ(F) = φ(x_F) + Sign(fiber neighborhood)`
pub fn germ_sigma(phi: &Rational, nbhd_sign: i64) -> Rational {
    phi + Rational::from_integer(nbhd_sign.into())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberGerm {
    pub name: String,
    pub phi: Rational,
    pub nbhd_sign: i64,
    pub sigma: Rational,
    pub smooth: bool,
}

impl FiberGerm {
    pub fn new(name: impl Into<String>, phi: Rational, nbhd_sign: i64) -> Self {
        Self {
            name: name.into(),
            sigma: germ_sigma(&phi, nbhd_sign),
            phi,
            nbhd_sign,
            smooth: false,
        }
    }

    pub fn smooth(name: impl Into<String>, phi: Rational, nbhd_sign: i64) -> Self {
        Self {
            smooth: true,
            ..Self::new(name, phi, nbhd_sign)
        }
    }
}

impl fmt::Display for FiberGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "phi={} nbhd_sign={} sigma={}",
            format_rational(&self.phi),
            self.nbhd_sign,
            format_rational(&self.sigma)
        )
    }
}

/// For a germ flagged smooth, checks that both `φ` and the neighborhood
/// signature vanish. Returns `Ok(false)` when the germ is not flagged smooth
/// and nothing was checked.
pub fn smooth_germ_check(germ: &FiberGerm) -> Result<bool, LocalSigError> {
    if !germ.smooth {
        return Ok(false);
    }
    if !germ.phi.is_zero() || germ.nbhd_sign != 0 {
        return Err(LocalSigError::SmoothGermNonzero(germ.name.clone()));
    }
    Ok(true)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Germs with known local signatures.
///
/// `R4/*` are fiber germs of fibrations by non-hyperelliptic genus 4 curves
/// of rank 4 (canonical image on a smooth quadric); `NT5/F_I` is the Lefschetz
/// germ for non-hyperelliptic, non-trigonal genus 5 curves.
pub fn ledger() -> Vec<FiberGerm> {
    vec![
        // lasso around the dual of the (3,3) embedding of P1 x P1
        FiberGerm::new("R4/F_I", q(-9, 17), 0),
        FiberGerm::new("R4/F_31", q(28, 17), -1),
        FiberGerm::new("R4/F_22", q(36, 17), -1),
        FiberGerm::new("R4/F_Rprime", q(4, 17), 0),
        FiberGerm::new("R4/F_R", q(2, 17), 0),
        // lasso around the dual of v_2(P4)
        FiberGerm::new("NT5/F_I", q(-1, 2), 0),
    ]
}

pub fn lookup_germ(name: &str) -> Option<FiberGerm> {
    ledger().into_iter().find(|g| g.name == name)
}

/// One line of a fibration ledger. `germ` is `None` when the local signature
/// is the unknown to solve for; `nbhd_sign` is still used to recover `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerEntry {
    pub name: String,
    pub germ: Option<FiberGerm>,
    pub nbhd_sign: i64,
    pub count: BigInt,
}

impl LedgerEntry {
    pub fn known(germ: FiberGerm, count: impl Into<BigInt>) -> Self {
        Self {
            name: germ.name.clone(),
            nbhd_sign: germ.nbhd_sign,
            germ: Some(germ),
            count: count.into(),
        }
    }

    pub fn unknown(name: impl Into<String>, nbhd_sign: i64, count: impl Into<BigInt>) -> Self {
        Self {
            name: name.into(),
            germ: None,
            nbhd_sign,
            count: count.into(),
        }
    }
}

/// Total signature of a fibered 4-manifold and the multiset of its singular
/// fiber germs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationLedger {
    pub total_sign: BigInt,
    pub entries: Vec<LedgerEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvedGerm {
    pub name: String,
    pub sigma: Rational,
    pub phi: Rational,
    pub nbhd_sign: i64,
}

impl fmt::Display for SolvedGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "name={} sigma={} phi={} nbhd_sign={}",
            self.name,
            format_rational(&self.sigma),
            format_rational(&self.phi),
            self.nbhd_sign
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationReport {
    pub total_sign: BigInt,
    pub germ_sum: Rational,
    pub residual: Rational,
}

impl FibrationReport {
    pub fn balanced(&self) -> bool {
        self.residual.is_zero()
    }
}

impl FibrationLedger {
    pub fn new(total_sign: impl Into<BigInt>, entries: Vec<LedgerEntry>) -> Self {
        Self {
            total_sign: total_sign.into(),
            entries,
        }
    }

    fn known_sum(&self) -> Rational {
        self.entries
            .iter()
            .filter_map(|e| e.germ.as_ref().map(|g| Rational::from_integer(e.count.clone()) * &g.sigma))
            .sum()
    }

    fn unknowns(&self) -> Vec<&LedgerEntry> {
        self.entries.iter().filter(|e| e.germ.is_none()).collect()
    }

    /// Parses the JSON ledger format. A germ without `phi` takes its values
    /// from the built-in table when the name is known there and is the
    /// unknown otherwise; `"phi": "?"` always marks the unknown. With
    /// `"smooth": true`, no `phi` and a name outside the table, the germ is
    /// known with `φ = 0`.
    pub fn from_json(text: &str) -> Result<Self, LocalSigError> {
        let file: LedgerFile =
            serde_json::from_str(text).map_err(|e| LocalSigError::Format(e.to_string()))?;
        let mut entries = Vec::with_capacity(file.germs.len());
        for rec in file.germs {
            let explicit_unknown = rec.phi.as_deref().map(str::trim) == Some("?");
            let mut entry = match (&rec.phi, lookup_germ(&rec.name)) {
                // a smooth germ has local signature zero by definition
                (None, None) if rec.smooth => LedgerEntry::known(
                    FiberGerm::new(rec.name, Rational::zero(), rec.nbhd_sign.unwrap_or(0)),
                    rec.count,
                ),
                (Some(_), _) if explicit_unknown => {
                    LedgerEntry::unknown(rec.name, rec.nbhd_sign.unwrap_or(0), rec.count)
                }
                (Some(p), _) => {
                    let phi = parse_rational(p).map_err(|e| LocalSigError::Format(e.to_string()))?;
                    let germ = FiberGerm::new(rec.name, phi, rec.nbhd_sign.unwrap_or(0));
                    LedgerEntry::known(germ, rec.count)
                }
                (None, Some(builtin)) => {
                    if let Some(s) = rec.nbhd_sign.filter(|&s| s != builtin.nbhd_sign) {
                        return Err(LocalSigError::Format(format!(
                            "`{}` has neighborhood signature {}, ledger file says {s}",
                            builtin.name, builtin.nbhd_sign
                        )));
                    }
                    LedgerEntry::known(builtin, rec.count)
                }
                (None, None) => LedgerEntry::unknown(rec.name, rec.nbhd_sign.unwrap_or(0), rec.count),
            };
            if let Some(g) = entry.germ.as_mut() {
                g.smooth = rec.smooth;
            }
            entries.push(entry);
        }
        Ok(Self::new(file.total_sign, entries))
    }

    pub fn to_json(&self) -> String {
        let germs = self
            .entries
            .iter()
            .map(|e| GermRecord {
                name: e.name.clone(),
                phi: Some(e.germ.as_ref().map_or("?".to_string(), |g| format_rational(&g.phi))),
                nbhd_sign: Some(e.nbhd_sign),
                smooth: e.germ.as_ref().is_some_and(|g| g.smooth),
                count: e.count.clone(),
            })
            .collect();
        let file = LedgerFile {
            total_sign: self.total_sign.clone(),
            germs,
        };
        serde_json::to_string_pretty(&file).expect("ledger serializes")
    }
}

/// Solves the global signature formula for the single germ of unknown local
/// signature: `count·σ = Sign - Σ known count·σ`.
pub fn solve_unknown_germ(ledger: &FibrationLedger) -> Result<SolvedGerm, LocalSigError> {
    let unknowns = ledger.unknowns();
    let [u] = unknowns.as_slice() else {
        return Err(LocalSigError::ZeroOrManyUnknowns(unknowns.len()));
    };
    if u.count.is_zero() {
        return Err(LocalSigError::ZeroCount(u.name.clone()));
    }
    let rest = Rational::from_integer(ledger.total_sign.clone()) - ledger.known_sum();
    let sigma = rest / Rational::from_integer(u.count.clone());
    Ok(SolvedGerm {
        name: u.name.clone(),
        phi: &sigma - Rational::from_integer(u.nbhd_sign.into()),
        sigma,
        nbhd_sign: u.nbhd_sign,
    })
}

/// Compares the total signature against the sum of local signatures. All
/// germs must be known; a mismatch is reported through `residual`.
pub fn check_fibration(ledger: &FibrationLedger) -> Result<FibrationReport, LocalSigError> {
    let unknown = ledger.unknowns().len();
    if unknown > 0 {
        return Err(LocalSigError::ZeroOrManyUnknowns(unknown));
    }
    for e in &ledger.entries {
        if let Some(g) = &e.germ {
            smooth_germ_check(g)?;
        }
    }
    let germ_sum = ledger.known_sum();
    Ok(FibrationReport {
        residual: Rational::from_integer(ledger.total_sign.clone()) - &germ_sum,
        total_sign: ledger.total_sign.clone(),
        germ_sum,
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct LedgerFile {
    #[serde(with = "bigint_as_i64")]
    total_sign: BigInt,
    germs: Vec<GermRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
struct GermRecord {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phi: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nbhd_sign: Option<i64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    smooth: bool,
    #[serde(with = "bigint_as_i64")]
    count: BigInt,
}

mod bigint_as_i64 {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        let v = v
            .to_i64()
            .ok_or_else(|| serde::ser::Error::custom("integer does not fit in i64"))?;
        s.serialize_i64(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        i64::deserialize(d).map(BigInt::from)
    }
}

/// `slope·α + intercept`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub slope: BigInt,
    pub intercept: BigInt,
}

impl LinearForm {
    pub fn new(slope: i64, intercept: i64) -> Self {
        Self {
            slope: slope.into(),
            intercept: intercept.into(),
        }
    }

    pub fn eval(&self, alpha: &BigInt) -> BigInt {
        &self.slope * alpha + &self.intercept
    }

    /// The affine function through `(a0, f(a0))` and `(a1, f(a1))`; `None`
    /// if the points do not determine an integral form.
    pub fn through(a0: &BigInt, f0: &BigInt, a1: &BigInt, f1: &BigInt) -> Option<Self> {
        let da = a1 - a0;
        if da.is_zero() {
            return None;
        }
        let df = f1 - f0;
        if !df.is_multiple_of(&da) {
            return None;
        }
        let slope = df / da;
        let intercept = f0 - &slope * a0;
        Some(Self { slope, intercept })
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.intercept.is_negative() { '-' } else { '+' };
        write!(f, "{}a {} {}", self.slope, sign, self.intercept.abs())
    }
}

/// A genus-4 fibration over `P_1` built by perturbing a local germ with a
/// large-degree generic term `z^α φ`: one copy of the germ under study and
/// otherwise only `R4/F_I` germs. The holomorphic invariants of the resolved
/// total space are linear in `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalizedFamily {
    /// Built-in name of the germ being solved for.
    pub target: &'static str,
    pub chi_o: LinearForm,
    pub k2: LinearForm,
    /// Whether the target germ is a topologically singular fiber. A
    /// topologically trivial germ does not use up one of the Euler-count
    /// slots, so all of them are `F_I`.
    pub target_is_singular: bool,
    pub target_nbhd_sign: i64,
    /// Printed forms for `χ_top`, `Sign`, and the singular fiber count.
    pub expected_chi_top: LinearForm,
    pub expected_sign: LinearForm,
    pub expected_fiber_count: LinearForm,
}

pub const FAMILY_GENUS: u32 = 4;

pub fn globalized_families() -> Vec<GlobalizedFamily> {
    vec![
        // the resolution drops χ(O) by 7 and K^2 by 25, the contraction gives back 3 on K^2
        GlobalizedFamily {
            target: "R4/F_31",
            chi_o: LinearForm::new(4, -10),
            k2: LinearForm::new(14, -46),
            target_is_singular: true,
            target_nbhd_sign: -1,
            expected_chi_top: LinearForm::new(34, -74),
            expected_sign: LinearForm::new(-18, 34),
            expected_fiber_count: LinearForm::new(34, -62),
        },
        // χ(O) drops by 3 and K^2 by 8, then one (-1)-curve is contracted
        GlobalizedFamily {
            target: "R4/F_22",
            chi_o: LinearForm::new(4, -6),
            k2: LinearForm::new(14, -31),
            target_is_singular: true,
            target_nbhd_sign: -1,
            expected_chi_top: LinearForm::new(34, -41),
            expected_sign: LinearForm::new(-18, 17),
            expected_fiber_count: LinearForm::new(34, -29),
        },
        // blow-up along the diagonal of the central fiber, nothing contracted
        GlobalizedFamily {
            target: "R4/F_Rprime",
            chi_o: LinearForm::new(4, -10),
            k2: LinearForm::new(14, -48),
            target_is_singular: false,
            target_nbhd_sign: 0,
            expected_chi_top: LinearForm::new(34, -72),
            expected_sign: LinearForm::new(-18, 32),
            expected_fiber_count: LinearForm::new(34, -60),
        },
    ]
}

impl GlobalizedFamily {
    pub fn surface(&self, alpha: &BigInt) -> ComplexSurfaceData {
        ComplexSurfaceData::new(self.chi_o.eval(alpha), self.k2.eval(alpha), FAMILY_GENUS, Base::P1)
    }

    /// `(χ_top, Sign, singular fiber count)` at `α`.
    pub fn topology(&self, alpha: &BigInt) -> Result<(BigInt, BigInt, BigInt), LocalSigError> {
        let s = self.surface(alpha);
        let (chi, sign) = s.topology();
        let n = fiber_count(&chi, s.fiber_genus, s.base.euler_char())?;
        Ok((chi, sign, n))
    }

    /// Ledger at `α` with the target germ as the unknown.
    pub fn ledger_at(&self, alpha: &BigInt) -> Result<FibrationLedger, LocalSigError> {
        let (_, sign, n) = self.topology(alpha)?;
        let type_i = lookup_germ("R4/F_I").expect("built-in germ");
        let n_type_i = if self.target_is_singular { n - int(1) } else { n };
        Ok(FibrationLedger::new(
            sign,
            vec![
                LedgerEntry::known(type_i, n_type_i),
                LedgerEntry::unknown(self.target, self.target_nbhd_sign, 1),
            ],
        ))
    }
}

/// Groups entries by germ name, summing counts. Used for display.
pub fn germ_counts(ledger: &FibrationLedger) -> BTreeMap<String, BigInt> {
    let mut out = BTreeMap::new();
    for e in &ledger.entries {
        *out.entry(e.name.clone()).or_insert_with(BigInt::zero) += &e.count;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noether_hirzebruch() {
        let alpha = 10;
        let s = ComplexSurfaceData::new(4 * alpha - 10, 14 * alpha - 46, 4, Base::P1);
        assert_eq!(s.topology(), (int(266), int(-146)));
        assert_eq!(surface_topology(&int(0), &int(0)), (int(0), int(0)));
        assert_eq!(surface_topology(&int(14), &int(39)), (int(129), int(-73)));
        assert_eq!(holomorphic_from_topology(&int(266), &int(-146)).unwrap(), (int(30), int(94)));
        assert!(holomorphic_from_topology(&int(1), &int(0)).is_err());
    }

    #[test]
    fn fiber_counts() {
        assert_eq!(fiber_count(&int(266), 4, 2).unwrap(), int(278));
        assert_eq!(fiber_count(&int(129), 4, 2).unwrap(), int(141));
        assert_eq!(fiber_count(&int(2 * (2 - 2 * 5)), 5, 2).unwrap(), int(0));
        assert!(fiber_count(&int(10), 1, 2).is_err());
    }

    #[test]
    fn sigma_from_phi() {
        assert_eq!(germ_sigma(&q(28, 17), -1), q(11, 17));
        assert_eq!(germ_sigma(&q(36, 17), -1), q(19, 17));
        assert_eq!(germ_sigma(&q(5, 7), 0), q(5, 7));
    }

    #[test]
    fn builtin_table() {
        assert_eq!(lookup_germ("R4/F_I").unwrap().sigma, q(-9, 17));
        assert_eq!(lookup_germ("R4/F_R").unwrap().sigma, q(2, 17));
        assert_eq!(lookup_germ("NT5/F_I").unwrap().sigma, q(-1, 2));
        assert_eq!(lookup_germ("R4/F_31").unwrap().to_string(), "phi=28/17 nbhd_sign=-1 sigma=11/17");
        assert!(lookup_germ("R4/F_99").is_none());
        for g in ledger() {
            assert_eq!(g.sigma, germ_sigma(&g.phi, g.nbhd_sign));
            assert_eq!(smooth_germ_check(&g), Ok(false));
        }
    }

    #[test]
    fn smooth_germs() {
        assert_eq!(smooth_germ_check(&FiberGerm::smooth("s", q(0, 1), 0)), Ok(true));
        assert_eq!(
            smooth_germ_check(&FiberGerm::smooth("s", q(-9, 17), 0)),
            Err(LocalSigError::SmoothGermNonzero("s".into()))
        );
    }

    #[test]
    fn solve_examples() {
        let fi = lookup_germ("R4/F_I").unwrap();
        let l = FibrationLedger::new(
            -146,
            vec![LedgerEntry::known(fi.clone(), 277), LedgerEntry::unknown("x", -1, 1)],
        );
        let s = solve_unknown_germ(&l).unwrap();
        assert_eq!((s.sigma.clone(), s.phi.clone()), (q(11, 17), q(28, 17)));

        let l = FibrationLedger::new(-73, vec![LedgerEntry::known(fi.clone(), 140), LedgerEntry::unknown("y", -1, 1)]);
        assert_eq!(solve_unknown_germ(&l).unwrap().sigma, q(19, 17));

        let l = FibrationLedger::new(0, vec![LedgerEntry::unknown("z", 0, 1)]);
        assert_eq!(solve_unknown_germ(&l).unwrap().sigma, q(0, 1));

        let none = FibrationLedger::new(0, vec![LedgerEntry::known(fi.clone(), 1)]);
        assert_eq!(solve_unknown_germ(&none), Err(LocalSigError::ZeroOrManyUnknowns(0)));
        let two = FibrationLedger::new(0, vec![LedgerEntry::unknown("a", 0, 1), LedgerEntry::unknown("b", 0, 1)]);
        assert_eq!(solve_unknown_germ(&two), Err(LocalSigError::ZeroOrManyUnknowns(2)));
        assert!(check_fibration(&two).is_err());
    }

    #[test]
    fn check_examples() {
        let g = |n: &str| lookup_germ(n).unwrap();
        let cases = [
            (-146, "R4/F_31", 277),
            (-73, "R4/F_22", 140),
            (-94, "R4/F_Rprime", 178),
        ];
        for (total, name, n_i) in cases {
            let l = FibrationLedger::new(
                total,
                vec![LedgerEntry::known(g("R4/F_I"), n_i), LedgerEntry::known(g(name), 1)],
            );
            let r = check_fibration(&l).unwrap();
            assert!(r.balanced(), "{name}: residual {}", r.residual);
        }
        let off = FibrationLedger::new(-94, vec![LedgerEntry::known(g("R4/F_I"), 177), LedgerEntry::known(g("R4/F_Rprime"), 1)]);
        assert_eq!(check_fibration(&off).unwrap().residual, q(-9, 17));
    }

    #[test]
    fn json_ledger() {
        let text = r#"{ "total_sign": -146, "germs": [
            { "name": "R4/F_I", "count": 277 },
            { "name": "R4/F_31", "phi": "?", "nbhd_sign": -1, "count": 1 } ] }"#;
        let l = FibrationLedger::from_json(text).unwrap();
        assert_eq!(solve_unknown_germ(&l).unwrap().sigma, q(11, 17));
        let back = FibrationLedger::from_json(&l.to_json()).unwrap();
        assert_eq!(back, l);

        let explicit = r#"{ "total_sign": 0, "germs": [ { "name": "w", "phi": "1/2", "nbhd_sign": -1, "count": 2 } ] }"#;
        let r = check_fibration(&FibrationLedger::from_json(explicit).unwrap()).unwrap();
        assert_eq!(r.residual, q(1, 1));

        let flagged = r#"{ "total_sign": 0, "germs": [ { "name": "R4/F_I", "smooth": true, "count": 1 } ] }"#;
        let l = FibrationLedger::from_json(flagged).unwrap();
        assert_eq!(check_fibration(&l), Err(LocalSigError::SmoothGermNonzero("R4/F_I".into())));
        assert_eq!(FibrationLedger::from_json(&l.to_json()).unwrap(), l);
        let plain = r#"{ "total_sign": 0, "germs": [ { "name": "c", "smooth": true, "count": 5 } ] }"#;
        assert!(check_fibration(&FibrationLedger::from_json(plain).unwrap()).unwrap().balanced());

        assert!(FibrationLedger::from_json("{}").is_err());
        assert!(FibrationLedger::from_json(
            r#"{ "total_sign": 0, "germs": [ { "name": "R4/F_I", "nbhd_sign": 3, "count": 1 } ] }"#
        )
        .is_err());
    }

    #[test]
    fn linear_forms() {
        let f = LinearForm::through(&int(3), &int(28), &int(5), &int(96)).unwrap();
        assert_eq!(f, LinearForm::new(34, -74));
        assert_eq!(f.to_string(), "34a - 74");
        assert!(LinearForm::through(&int(3), &int(0), &int(3), &int(1)).is_none());
        assert!(LinearForm::through(&int(0), &int(0), &int(2), &int(1)).is_none());
    }

    #[test]
    fn family_ledgers() {
        let fams = globalized_families();
        let expected = [q(11, 17), q(19, 17), q(4, 17)];
        for (fam, want) in fams.iter().zip(expected) {
            for alpha in [5, 7, 10, 50] {
                let solved = solve_unknown_germ(&fam.ledger_at(&int(alpha)).unwrap()).unwrap();
                assert_eq!(solved.sigma, want, "{} at alpha={alpha}", fam.target);
                assert_eq!(solved.sigma, lookup_germ(fam.target).unwrap().sigma);
            }
        }
    }
}
