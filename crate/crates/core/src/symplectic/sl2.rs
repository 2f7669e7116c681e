//! Words in the generators `S = [[0,-1],[1,0]]` and `T = [[1,1],[0,1]]` of
//! `SL(2; Z)`.
//!
//! Words are stored as syllables `S^e` / `T^k` so that a large translation
//! costs one syllable. The text form spells every letter out over the
//! alphabet `S s T t` (lowercase is the inverse); `T^k` and `t^k` shorthands
//! are accepted when parsing.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{SymplecticElement, SymplecticError};
use crate::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    S,
    SInv,
    T,
    TInv,
}

impl Letter {
    pub fn to_char(self) -> char {
        match self {
            Letter::S => 'S',
            Letter::SInv => 's',
            Letter::T => 'T',
            Letter::TInv => 't',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'S' => Some(Letter::S),
            's' => Some(Letter::SInv),
            'T' => Some(Letter::T),
            't' => Some(Letter::TInv),
            _ => None,
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            Letter::S => Letter::SInv,
            Letter::SInv => Letter::S,
            Letter::T => Letter::TInv,
            Letter::TInv => Letter::T,
        }
    }

    pub fn element(self) -> SymplecticElement {
        syllable_element(&Syllable::from(self))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    S,
    T,
}

/// `generator^exponent` with a nonzero exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub generator: Generator,
    pub exponent: BigInt,
}

impl From<Letter> for Syllable {
    fn from(l: Letter) -> Self {
        let (generator, e) = match l {
            Letter::S => (Generator::S, 1),
            Letter::SInv => (Generator::S, -1),
            Letter::T => (Generator::T, 1),
            Letter::TInv => (Generator::T, -1),
        };
        Syllable {
            generator,
            exponent: e.into(),
        }
    }
}

pub(crate) fn syllable_element(s: &Syllable) -> SymplecticElement {
    let m = match s.generator {
        Generator::T => IntMatrix::from_rows([
            [BigInt::one(), s.exponent.clone()],
            [BigInt::zero(), BigInt::one()],
        ]),
        Generator::S => {
            let e = s.exponent.mod_floor(&BigInt::from(4)).to_u8().unwrap();
            let r: [[i64; 2]; 2] = match e {
                0 => [[1, 0], [0, 1]],
                1 => [[0, -1], [1, 0]],
                2 => [[-1, 0], [0, -1]],
                _ => [[0, 1], [-1, 0]],
            };
            IntMatrix::from_rows(r.map(|row| row.map(BigInt::from)))
        }
    };
    SymplecticElement::new(m).expect("generator powers are in SL(2;Z)")
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SL2Word {
    syllables: Vec<Syllable>,
}

impl SL2Word {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Self {
            syllables: letters.into_iter().map(Syllable::from).collect(),
        }
    }

    pub fn from_syllables(syllables: Vec<Syllable>) -> Self {
        Self {
            syllables: syllables.into_iter().filter(|s| !s.exponent.is_zero()).collect(),
        }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn push(&mut self, letter: Letter) {
        self.syllables.push(letter.into());
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters when spelled out.
    pub fn letter_count(&self) -> BigInt {
        self.syllables
            .iter()
            .map(|s| match s.generator {
                Generator::T => s.exponent.abs(),
                Generator::S => spelled_s_len(&s.exponent).into(),
            })
            .sum()
    }

    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for s in &self.syllables {
            match s.generator {
                Generator::T => {
                    let l = if s.exponent.is_positive() { Letter::T } else { Letter::TInv };
                    let n = s.exponent.abs().to_usize().expect("exponent too large to spell out");
                    out.extend(std::iter::repeat_n(l, n));
                }
                Generator::S => out.extend(spell_s(&s.exponent)),
            }
        }
        out
    }

    pub fn evaluate(&self) -> SymplecticElement {
        self.syllables
            .iter()
            .fold(SymplecticElement::identity(1), |acc, s| &acc * &syllable_element(s))
    }

    pub fn inverse(&self) -> Self {
        Self {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    generator: s.generator,
                    exponent: -s.exponent.clone(),
                })
                .collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut syllables = self.syllables.clone();
        syllables.extend(other.syllables.iter().cloned());
        Self { syllables }
    }

    /// Merges adjacent powers of the same generator and reduces powers of
    /// `S` mod 4 (so `-I` appears as `S^2`). Evaluates to the same matrix.
    pub fn normalized(&self) -> Self {
        let four = BigInt::from(4);
        let mut out: Vec<Syllable> = Vec::with_capacity(self.syllables.len());
        for s in &self.syllables {
            let mut s = s.clone();
            if let Some(top) = out.last_mut() {
                if top.generator == s.generator {
                    s.exponent += &top.exponent;
                    out.pop();
                }
            }
            if s.generator == Generator::S {
                s.exponent = s.exponent.mod_floor(&four);
            }
            if !s.exponent.is_zero() {
                out.push(s);
            }
        }
        Self { syllables: out }
    }
}

/// `S^e` spelled with at most three letters: `S`, `SS`, `s`.
fn spell_s(e: &BigInt) -> Vec<Letter> {
    match e.mod_floor(&BigInt::from(4)).to_u8().unwrap() {
        0 => vec![],
        1 => vec![Letter::S],
        2 => vec![Letter::S, Letter::S],
        _ => vec![Letter::SInv],
    }
}

fn spelled_s_len(e: &BigInt) -> usize {
    spell_s(e).len()
}

impl fmt::Display for SL2Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for SL2Word {
    type Err = SymplecticError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut syllables = Vec::new();
        let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
        while let Some(c) = chars.next() {
            let letter = Letter::from_char(c)
                .ok_or_else(|| SymplecticError::BadWord(format!("unexpected character `{c}`")))?;
            let mut syl = Syllable::from(letter);
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                if chars.peek() == Some(&'-') {
                    digits.push(chars.next().unwrap());
                }
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                let k: BigInt = digits
                    .parse()
                    .map_err(|_| SymplecticError::BadWord(format!("bad exponent after `{c}`")))?;
                syl.exponent *= k;
            }
            syllables.push(syl);
        }
        Ok(Self::from_syllables(syllables))
    }
}

/// Decomposes a matrix of `SL(2; Z)` into `S` and `T` by Euclidean reduction
/// of the first column.
///
/// Each round left-multiplies by `T^k` to bring `|a| < |c|` and then by `S`,
/// which swaps the column entries. When `c = 0` the matrix is `±T^b`; a
/// leading `S^2` absorbs the sign. The number of syllables is linear in the
/// bit length of the entries.
pub fn sl2_word(a: &SymplecticElement) -> Result<SL2Word, SymplecticError> {
    if a.genus() != 1 {
        return Err(SymplecticError::GenusMismatch {
            left: a.genus(),
            right: 1,
        });
    }
    let m = a.matrix();
    let (mut p, mut q, mut r, mut s) = (
        m.get(0, 0).clone(),
        m.get(0, 1).clone(),
        m.get(1, 0).clone(),
        m.get(1, 1).clone(),
    );
    let det = &p * &s - &q * &r;
    if !det.is_one() {
        return Err(SymplecticError::NotUnimodular {
            det: det.to_string(),
        });
    }
    // reducers applied on the left, in order: L_n ... L_1 A = I
    let mut reducers: Vec<Syllable> = Vec::new();
    while !r.is_zero() {
        let rem = p.mod_floor(&r.abs());
        let k = (&rem - &p) / &r;
        if !k.is_zero() {
            p += &k * &r;
            q += &k * &s;
            reducers.push(Syllable {
                generator: Generator::T,
                exponent: k,
            });
        }
        // S·[[p,q],[r,s]] = [[-r,-s],[p,q]]
        let (np, nq) = (-r.clone(), -s.clone());
        r = std::mem::replace(&mut p, np);
        s = std::mem::replace(&mut q, nq);
        reducers.push(Syllable {
            generator: Generator::S,
            exponent: BigInt::one(),
        });
    }
    if p.is_negative() {
        p = -p;
        q = -q;
        reducers.push(Syllable {
            generator: Generator::S,
            exponent: BigInt::from(2),
        });
    }
    debug_assert!(p.is_one() && s.abs().is_one());
    if !q.is_zero() {
        reducers.push(Syllable {
            generator: Generator::T,
            exponent: -q,
        });
    }
    // A = L_1^{-1} L_2^{-1} ... L_n^{-1}
    let word = SL2Word::from_syllables(
        reducers
            .into_iter()
            .map(|l| Syllable {
                generator: l.generator,
                exponent: -l.exponent,
            })
            .collect(),
    );
    Ok(word.normalized())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(rows: [[i64; 2]; 2]) -> SymplecticElement {
        SymplecticElement::from_rows(rows).unwrap()
    }

    #[test]
    fn upper_triangular() {
        let w = sl2_word(&sp([[1, 5], [0, 1]])).unwrap();
        assert_eq!(w.evaluate(), sp([[1, 5], [0, 1]]));
        assert_eq!(w.to_string(), "TTTTT");
    }

    #[test]
    fn generators() {
        assert_eq!(sl2_word(&sp([[0, -1], [1, 0]])).unwrap().to_string(), "S");
        assert_eq!(sl2_word(&sp([[-1, 0], [0, -1]])).unwrap().to_string(), "SS");
        assert!(sl2_word(&SymplecticElement::identity(1)).unwrap().is_empty());
        let w = sl2_word(&sp([[-1, 3], [0, -1]])).unwrap();
        assert_eq!(w.evaluate(), sp([[-1, 3], [0, -1]]));
    }

    #[test]
    fn large_entries_stay_short() {
        let a = sp([[1_000_000_007, 1], [1_000_000_006, 1]]);
        let w = sl2_word(&a).unwrap();
        assert_eq!(w.evaluate(), a);
        assert!(w.syllables().len() <= 8);
    }

    #[test]
    fn rejects_non_genus_one() {
        assert!(matches!(
            sl2_word(&SymplecticElement::identity(2)),
            Err(SymplecticError::GenusMismatch { .. })
        ));
    }

    #[test]
    fn parse_and_print() {
        let w: SL2Word = "ST^3 s t^2".parse().unwrap();
        assert_eq!(w.to_string(), "STTTstt");
        assert_eq!(w.to_string().parse::<SL2Word>().unwrap().evaluate(), w.evaluate());
        assert!("SX".parse::<SL2Word>().is_err());
        assert!((&w.evaluate() * &w.inverse().evaluate()).is_identity());
    }

    #[test]
    fn normalization_reduces_s_mod_4() {
        let w: SL2Word = "SSSSSTtS".parse().unwrap();
        let n = w.normalized();
        assert_eq!(n.to_string(), "SS");
        assert_eq!(n.evaluate(), w.evaluate());
        assert_eq!("SSS".parse::<SL2Word>().unwrap().normalized().to_string(), "s");
    }
}
