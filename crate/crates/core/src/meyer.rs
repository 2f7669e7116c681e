//! Meyer's signature cocycle and the Meyer function in genus one.
//!
//! For `A_1, A_2` in `Sp(2g; Z)` let `V` be the kernel of
//! `[(A_1^{-1} - I) | (A_2 - I)]` acting on pairs `(x, y)`. The pairing
//! `<(x,y), (x',y')> = ᵗ(x+y) J (I - A_2) y'` is symmetric on `V`, and
//! `τ_g(A_1, A_2)` is its signature.
//!
//! In genus one the cocycle is a coboundary over `Q`: there is a unique
//! `φ: SL(2; Z) → Q` with `φ(A) - φ(AB) + φ(B) = τ(A, B)`. Its values on the
//! generators are solved from the relators `S^4` and `(ST)^6`, and extended
//! to any matrix by folding along a word.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{gram_restrict, kernel_basis, ExactError, Matrix};
use crate::symplectic::{
    sl2_word, standard_j, syllable_element, Generator, Letter, SL2Word, Syllable, SymplecticElement,
    SymplecticError,
};
use crate::{RatForm, RatMatrix, RatVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeyerError {
    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: usize, right: usize },
    #[error("the SL(2;Z) relations give an inconsistent system for phi(S), phi(T): {0}")]
    InconsistentRelations(String),
    #[error("lasso power must be at least 1, got {0}")]
    NonPositivePower(i64),
    #[error(transparent)]
    Symplectic(#[from] SymplecticError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

fn check_genus(a: &SymplecticElement, b: &SymplecticElement) -> Result<(), MeyerError> {
    if a.genus() != b.genus() {
        return Err(MeyerError::GenusMismatch {
            left: a.genus(),
            right: b.genus(),
        });
    }
    Ok(())
}

/// The space `V_{A_1,A_2}` and the form on it.
#[derive(Debug, Clone)]
pub struct CocycleForm {
    pub basis: Vec<RatVector>,
    pub form: RatForm,
}

impl CocycleForm {
    pub fn signature(&self) -> i64 {
        self.form.signature()
    }
}

/// Kernel basis of `[(A_1^{-1} - I) | (A_2 - I)]` and the Gram matrix of the
/// cocycle pairing on it.
pub fn cocycle_form(a1: &SymplecticElement, a2: &SymplecticElement) -> Result<CocycleForm, MeyerError> {
    check_genus(a1, a2)?;
    let g = a1.genus();
    let n = 2 * g;
    let id = RatMatrix::identity(n);
    let left = &a1.inverse().to_rational() - &id;
    let a2q = a2.to_rational();
    let right = &a2q - &id;
    let basis = kernel_basis(&left.hstack(&right)?);

    // (x, y) ↦ ᵗ(x + y) K y' with K = J (I - A_2), as a 2n x 2n block matrix [[0, K], [0, K]]
    let k = &standard_j::<Rational>(g) * &(&id - &a2q);
    let bilinear = Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if j < n {
            Rational::zero()
        } else {
            k.get(i % n, j - n).clone()
        }
    });
    let form = gram_restrict(&bilinear, &basis)?;
    Ok(CocycleForm { basis, form })
}

/// `τ_g(A_1, A_2)`. Always satisfies `|τ| <= min(4g, dim V)`.
pub fn tau(a1: &SymplecticElement, a2: &SymplecticElement) -> Result<i64, MeyerError> {
    let cf = cocycle_form(a1, a2)?;
    let value = cf.signature();
    debug_assert!(value.unsigned_abs() as usize <= cocycle_bound(a1.genus()));
    Ok(value)
}

/// The a priori bound `4g` on `|τ_g|`.
pub fn cocycle_bound(genus: usize) -> usize {
    4 * genus
}

/// `τ(A_1,A_2) + τ(A_1 A_2, A_3) - τ(A_2,A_3) - τ(A_1, A_2 A_3)`, which is
/// zero for a 2-cocycle.
pub fn tau_cocycle_defect(
    a1: &SymplecticElement,
    a2: &SymplecticElement,
    a3: &SymplecticElement,
) -> Result<i64, MeyerError> {
    check_genus(a1, a2)?;
    check_genus(a2, a3)?;
    let a12 = a1.checked_mul(a2)?;
    let a23 = a2.checked_mul(a3)?;
    Ok(tau(a1, a2)? + tau(&a12, a3)? - tau(a2, a3)? - tau(a1, &a23)?)
}

/// Values of the genus-one Meyer function on `S`, `T` and their inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiBase {
    pub phi_s: Rational,
    pub phi_t: Rational,
    pub phi_s_inv: Rational,
    pub phi_t_inv: Rational,
}

impl PhiBase {
    pub fn letter(&self, l: Letter) -> &Rational {
        match l {
            Letter::S => &self.phi_s,
            Letter::SInv => &self.phi_s_inv,
            Letter::T => &self.phi_t,
            Letter::TInv => &self.phi_t_inv,
        }
    }
}

/// `φ(l)` as an affine function `a·φ(S) + b·φ(T) + c` of the two unknowns.
#[derive(Clone)]
struct Affine([Rational; 3]);

impl Affine {
    fn letter(l: Letter) -> Result<Self, MeyerError> {
        let q = |n: i64| Rational::from_integer(n.into());
        // φ(g^{-1}) = τ(g, g^{-1}) - φ(g), from δφ(g, g^{-1}) = τ(g, g^{-1}) and φ(I) = 0
        Ok(match l {
            Letter::S => Affine([q(1), q(0), q(0)]),
            Letter::T => Affine([q(0), q(1), q(0)]),
            Letter::SInv => Affine([q(-1), q(0), q(tau(&Letter::S.element(), &Letter::SInv.element())?)]),
            Letter::TInv => Affine([q(0), q(-1), q(tau(&Letter::T.element(), &Letter::TInv.element())?)]),
        })
    }
}

/// Linear equation in `(φ(S), φ(T))` expressing `φ(w) = 0` for a relator `w`.
fn relator_equation(word: &SL2Word) -> Result<[Rational; 3], MeyerError> {
    let letters = word.letters();
    let mut eq = [Rational::zero(), Rational::zero(), Rational::zero()];
    let mut prefix = SymplecticElement::identity(1);
    for (i, &l) in letters.iter().enumerate() {
        let Affine(a) = Affine::letter(l)?;
        for (e, x) in eq.iter_mut().zip(a) {
            *e += x;
        }
        let g = l.element();
        if i > 0 {
            eq[2] -= Rational::from_integer(tau(&prefix, &g)?.into());
        }
        prefix = &prefix * &g;
    }
    if !prefix.is_identity() {
        return Err(MeyerError::InconsistentRelations(format!("`{word}` is not a relator")));
    }
    Ok(eq)
}

/// Solves `φ(S)`, `φ(T)` from `S^4 = I` and `(ST)^6 = I`, then checks the
/// solution against `(ST)^3 S^{-2} = I`.
pub fn phi1_base() -> Result<PhiBase, MeyerError> {
    let parse = |s: &str| s.parse::<SL2Word>().expect("static relator");
    let e1 = relator_equation(&parse("SSSS"))?;
    let e2 = relator_equation(&parse("STSTSTSTSTST"))?;
    let e3 = relator_equation(&parse("STSTSTss"))?;
    // a x + b y + c = 0
    let det = &e1[0] * &e2[1] - &e1[1] * &e2[0];
    if det.is_zero() {
        return Err(MeyerError::InconsistentRelations("relator system is singular".into()));
    }
    let phi_s = (&e1[1] * &e2[2] - &e2[1] * &e1[2]) / &det;
    let phi_t = (&e2[0] * &e1[2] - &e1[0] * &e2[2]) / &det;
    let residual = &e3[0] * &phi_s + &e3[1] * &phi_t + &e3[2];
    if !residual.is_zero() {
        return Err(MeyerError::InconsistentRelations(format!(
            "third relator leaves residual {residual}"
        )));
    }
    let eval = |l: Letter| -> Result<Rational, MeyerError> {
        let Affine([a, b, c]) = Affine::letter(l)?;
        Ok(a * &phi_s + b * &phi_t + c)
    };
    Ok(PhiBase {
        phi_s_inv: eval(Letter::SInv)?,
        phi_t_inv: eval(Letter::TInv)?,
        phi_s,
        phi_t,
    })
}

/// An element together with its Meyer-function value.
#[derive(Clone)]
struct Valued {
    elem: SymplecticElement,
    phi: Rational,
}

impl Valued {
    fn identity() -> Self {
        Self {
            elem: SymplecticElement::identity(1),
            phi: Rational::zero(),
        }
    }

    /// `φ(XY) = φ(X) + φ(Y) - τ(X, Y)`
    fn then(&self, rhs: &Self) -> Result<Self, MeyerError> {
        let t = tau(&self.elem, &rhs.elem)?;
        Ok(Self {
            elem: &self.elem * &rhs.elem,
            phi: &self.phi + &rhs.phi - Rational::from_integer(t.into()),
        })
    }
}

/// The genus-one Meyer function `φ_1`.
#[derive(Debug, Clone)]
pub struct MeyerFunction {
    base: PhiBase,
}

impl MeyerFunction {
    pub fn new() -> Result<Self, MeyerError> {
        Ok(Self { base: phi1_base()? })
    }

    pub fn base(&self) -> &PhiBase {
        &self.base
    }

    fn letter(&self, l: Letter) -> Valued {
        Valued {
            elem: l.element(),
            phi: self.base.letter(l).clone(),
        }
    }

    /// `φ(g^e)` by square-and-multiply on (element, value) pairs.
    fn syllable(&self, s: &Syllable) -> Result<Valued, MeyerError> {
        let positive = s.exponent.is_positive();
        let l = match (s.generator, positive) {
            (Generator::S, true) => Letter::S,
            (Generator::S, false) => Letter::SInv,
            (Generator::T, true) => Letter::T,
            (Generator::T, false) => Letter::TInv,
        };
        let mut e: BigInt = s.exponent.abs();
        let mut acc = Valued::identity();
        let mut sq = self.letter(l);
        let two = BigInt::from(2);
        while !e.is_zero() {
            if (&e % &two).is_one() {
                acc = acc.then(&sq)?;
            }
            e /= &two;
            if !e.is_zero() {
                sq = sq.then(&sq)?;
            }
        }
        debug_assert_eq!(acc.elem, syllable_element(s));
        Ok(acc)
    }

    /// Folds `φ(uv) = φ(u) + φ(v) - τ(u, v)` left to right along the word.
    pub fn eval_word(&self, word: &SL2Word) -> Result<Rational, MeyerError> {
        let mut acc = Valued::identity();
        for s in word.syllables() {
            acc = acc.then(&self.syllable(s)?)?;
        }
        Ok(acc.phi)
    }

    /// Same as [`Self::eval_word`] but one letter at a time, with no
    /// syllable shortcuts.
    pub fn eval_letters(&self, word: &SL2Word) -> Result<Rational, MeyerError> {
        let mut acc = Valued::identity();
        for l in word.letters() {
            acc = acc.then(&self.letter(l))?;
        }
        Ok(acc.phi)
    }

    pub fn eval(&self, a: &SymplecticElement) -> Result<Rational, MeyerError> {
        self.eval_word(&sl2_word(a)?)
    }
}

/// `φ_1(A)` for `A` in `SL(2; Z)`.
pub fn phi1(a: &SymplecticElement) -> Result<Rational, MeyerError> {
    MeyerFunction::new()?.eval(a)
}

/// `φ(σ^n) = n·φ(σ) + (n - 1)` for a lasso `σ` whose monodromy is the
/// inverse of a Dehn twist about a nonseparating curve, using
/// `τ(ρ(σ), ρ(σ)^i) = -1`.
pub fn lasso_power(phi_sigma: &Rational, n: i64) -> Result<Rational, MeyerError> {
    if n < 1 {
        return Err(MeyerError::NonPositivePower(n));
    }
    let n = Rational::from_integer(n.into());
    Ok(&n * phi_sigma + n - Rational::one())
}

/// `φ(σ^n) = n·φ(σ) - Σ_{i=1}^{n-1} τ(ρ, ρ^i)` with every cocycle value
/// computed from the monodromy matrix `ρ`.
pub fn lasso_power_by_accumulation(
    phi_sigma: &Rational,
    n: i64,
    monodromy: &SymplecticElement,
) -> Result<Rational, MeyerError> {
    if n < 1 {
        return Err(MeyerError::NonPositivePower(n));
    }
    let mut acc = Rational::from_integer(n.into()) * phi_sigma;
    let mut power = monodromy.clone();
    for _ in 1..n {
        acc -= Rational::from_integer(tau(monodromy, &power)?.into());
        power = &power * monodromy;
    }
    Ok(acc)
}
