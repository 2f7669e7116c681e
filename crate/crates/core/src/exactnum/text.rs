//! Plain-text matrix format: a `rows cols` header followed by `rows * cols`
//! whitespace-separated entries in row-major order. Entries are integers or
//! `p/q` rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{IntMatrix, RatMatrix, Rational};

use super::{ExactError, Matrix};

pub fn parse_rational(token: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::Parse(format!("invalid rational `{token}`"));
    let token = token.trim();
    match token.split_once('/') {
        None => {
            let n: BigInt = token.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(ExactError::Parse(format!("zero denominator in `{token}`")));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// `p/q` in lowest terms, or just `p` when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat_matrix(text: &str) -> Result<RatMatrix, ExactError> {
    let mut tokens = text.split_whitespace();
    let mut dim = |what: &str| -> Result<usize, ExactError> {
        let t = tokens
            .next()
            .ok_or_else(|| ExactError::Parse(format!("missing {what} in header")))?;
        t.parse()
            .map_err(|_| ExactError::Parse(format!("invalid {what} `{t}`")))
    };
    let rows = dim("row count")?;
    let cols = dim("column count")?;
    let entries = tokens.map(parse_rational).collect::<Result<Vec<_>, _>>()?;
    Matrix::from_vec(rows, cols, entries)
}

/// Like [`parse_rat_matrix`] but every entry must be an integer.
pub fn parse_int_matrix(text: &str) -> Result<IntMatrix, ExactError> {
    let m = parse_rat_matrix(text)?;
    if let Some(bad) = m.entries().iter().find(|x| !x.is_integer()) {
        return Err(ExactError::Parse(format!(
            "expected an integer entry, found {}",
            format_rational(bad)
        )));
    }
    Ok(m.map(|x| x.to_integer()))
}

pub fn format_rat_matrix(m: &RatMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(format_rational).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(format_rational(&parse_rational("6/-4").unwrap()), "-3/2");
        assert_eq!(format_rational(&parse_rational("-18/2").unwrap()), "-9");
        assert_eq!(format_rational(&parse_rational("0/5").unwrap()), "0");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }

    #[test]
    fn matrix_text() {
        let m = parse_rat_matrix("2 2\n1 -1\n0 1/2\n").unwrap();
        assert_eq!(format_rat_matrix(&m), "2 2\n1 -1\n0 1/2\n");
        assert!(parse_int_matrix("2 2\n1 -1\n0 1/2\n").is_err());
        assert_eq!(parse_int_matrix("1 2 3 4").unwrap().entries().len(), 2);
        assert!(matches!(
            parse_rat_matrix("2 2 1 2 3"),
            Err(ExactError::EntryCount { expected: 4, found: 3 })
        ));
        assert!(parse_rat_matrix("").is_err());
    }
}
