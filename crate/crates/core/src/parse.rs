//! Text grammar for polynomials and forms.
//!
//! Grammar (no whitespace significance, no parentheses):
//!   poly  := ['+'|'-'] term (('+'|'-') term)*
//!   term  := coeff | coeff vars | vars
//!   vars  := var ('^' uint)? vars?
//!   var   := 'x'            (univariate)
//!          | 'x' uint       (multivariate, 1-based index)
//! Coefficients are unsigned decimals; signs come from the separators.

use crate::error::{Error, Result};
use crate::residue::{HomogeneousForm, UnivariatePolynomial};

/// Signed coefficient with its (variable index, exponent) factors.
type Term = (i64, Vec<(usize, u32)>);

struct Scanner<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner { src, bytes: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} of {:?}", self.pos, self.src))
    }

    fn uint(&mut self, what: &str) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err(what));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err("integer too large"))
    }

    /// One signed term: coefficient plus (variable index, exponent) factors.
    /// Univariate input reports every variable as index 1.
    fn term(&mut self, sign: i64, multivariate: bool) -> Result<Term> {
        let mut coeff: i64 = sign;
        let mut saw_anything = false;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let c = self.uint("coefficient")?;
            coeff = coeff
                .checked_mul(i64::try_from(c).map_err(|_| self.err("coefficient too large"))?)
                .ok_or(Error::Overflow)?;
            saw_anything = true;
        }
        let mut factors = Vec::new();
        while self.peek() == Some(b'x') {
            self.bump();
            saw_anything = true;
            let index = if multivariate {
                let i = self.uint("variable index")? as usize;
                if i == 0 {
                    return Err(self.err("variable indices start at 1"));
                }
                i
            } else {
                if self.peek().is_some_and(|b| b.is_ascii_digit()) {
                    return Err(self.err("unexpected variable index in univariate polynomial"));
                }
                1
            };
            let exp = if self.peek() == Some(b'^') {
                self.bump();
                u32::try_from(self.uint("exponent")?).map_err(|_| self.err("exponent too large"))?
            } else {
                1
            };
            factors.push((index, exp));
            // products of variables only occur in forms
            if !multivariate {
                break;
            }
        }
        if !saw_anything {
            return Err(self.err("expected a term"));
        }
        Ok((coeff, factors))
    }

    fn terms(&mut self, multivariate: bool) -> Result<Vec<Term>> {
        let mut sign: i64 = match self.peek() {
            Some(b'-') => {
                self.bump();
                -1
            }
            Some(b'+') => {
                self.bump();
                1
            }
            _ => 1,
        };
        let mut out = vec![self.term(sign, multivariate)?];
        loop {
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.bump();
            out.push(self.term(sign, multivariate)?);
        }
    }
}

/// Parse a univariate polynomial such as `x^2+5x^3` or `-2x+x^4`.
pub fn parse_univariate(src: &str) -> Result<UnivariatePolynomial> {
    let raw = Scanner::new(src).terms(false)?;
    let mut coeffs: std::collections::BTreeMap<u32, i64> = std::collections::BTreeMap::new();
    for (c, factors) in raw {
        let e: u32 = factors.iter().map(|&(_, e)| e).sum();
        let slot = coeffs.entry(e).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
    }
    UnivariatePolynomial::new(coeffs)
}

/// Parse a homogeneous form over x1..xn, e.g. `x1^2+x2^2`; the arity is the
/// highest variable index seen and the degree must be uniform across terms.
pub fn parse_form(src: &str) -> Result<HomogeneousForm> {
    let raw = Scanner::new(src).terms(true)?;
    let arity = raw
        .iter()
        .flat_map(|(_, fs)| fs.iter().map(|&(i, _)| i))
        .max()
        .ok_or_else(|| Error::Parse(format!("no variables in form {src:?}")))?;
    let mut terms: std::collections::BTreeMap<Vec<u32>, i64> = std::collections::BTreeMap::new();
    for (c, factors) in raw {
        let mut ev = vec![0u32; arity];
        for (i, e) in factors {
            ev[i - 1] = ev[i - 1].checked_add(e).ok_or(Error::Overflow)?;
        }
        let slot = terms.entry(ev).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
    }
    let degree = terms
        .keys()
        .map(|ev| ev.iter().sum::<u32>())
        .max()
        .unwrap_or(0);
    HomogeneousForm::new(arity, degree, terms)
}

/// Parse a comma-separated residue list such as `0,2` or `0, 3, 6`.
pub fn parse_residue_list(src: &str) -> Result<Vec<u64>> {
    src.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("not a residue: {part:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn univariate_examples() {
        let f = parse_univariate("x^2+5x^3").unwrap();
        assert_eq!(f.terms(), &[(2, 1), (3, 5)]);
        let f = parse_univariate("-2x + x^4").unwrap();
        assert_eq!(f.terms(), &[(1, -2), (4, 1)]);
        let f = parse_univariate("7").unwrap();
        assert_eq!(f.terms(), &[(0, 7)]);
        let f = parse_univariate("x*x").err();
        assert!(f.is_some(), "no product operator in the grammar");
        // like terms merge
        let f = parse_univariate("x^2+x^2").unwrap();
        assert_eq!(f.terms(), &[(2, 2)]);
    }

    #[test]
    fn univariate_rejects_garbage() {
        for bad in ["", "+", "x^", "x1", "2*", "x^2 x", "y", "x^99999999999"] {
            assert!(parse_univariate(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn form_examples() {
        let f = parse_form("x1^2+x2^2").unwrap();
        assert_eq!(f, crate::residue::HomogeneousForm::two_squares());
        let f = parse_form("x1^4+x2^4+x3^4+x4^4+x5^4+x6^4+x7^4").unwrap();
        assert_eq!(f, crate::residue::HomogeneousForm::seven_fourth_powers());
        let f = parse_form("x1x2+x2^2").unwrap();
        assert_eq!(f.arity(), 2);
        assert_eq!(f.degree(), 2);
    }

    #[test]
    fn form_rejects_inhomogeneous_and_garbage() {
        assert!(parse_form("x1^2+x2^3").is_err());
        assert!(parse_form("x1^2+1").is_err());
        assert!(parse_form("x0^2").is_err());
        assert!(parse_form("5").is_err());
    }

    #[test]
    fn residue_lists() {
        assert_eq!(parse_residue_list("0,2").unwrap(), vec![0, 2]);
        assert_eq!(parse_residue_list("0, 3, 6").unwrap(), vec![0, 3, 6]);
        assert!(parse_residue_list("0,,2").is_err());
        assert!(parse_residue_list("a").is_err());
    }

    #[test]
    fn render_parse_round_trip_examples() {
        for src in ["x^2", "x^2+5x^3", "-x^3+4x^2-7", "x"] {
            let f = parse_univariate(src).unwrap();
            assert_eq!(parse_univariate(&f.render()).unwrap(), f);
        }
    }

    proptest! {
        #[test]
        fn univariate_round_trip(terms in proptest::collection::btree_map(0u32..12, -1000i64..1000, 1..6)) {
            prop_assume!(terms.values().any(|&c| c != 0));
            let f = UnivariatePolynomial::new(terms).unwrap();
            let back = parse_univariate(&f.render()).unwrap();
            prop_assert_eq!(back, f);
        }

        #[test]
        fn diagonal_form_round_trip(coeffs in proptest::collection::vec(-50i64..50, 1..5), k in 2u32..5) {
            prop_assume!(coeffs.iter().all(|&c| c != 0));
            let f = HomogeneousForm::diagonal(&coeffs, k).unwrap();
            let back = parse_form(&f.render()).unwrap();
            prop_assert_eq!(back, f);
        }

        #[test]
        fn parser_never_panics(src in "[x0-9+^ -]{0,20}") {
            let _ = parse_univariate(&src);
            let _ = parse_form(&src);
        }
    }
}
