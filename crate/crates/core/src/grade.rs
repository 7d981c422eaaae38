//! Exact rational membership grades.
//!
//! Grades live in [0, 1] and are stored as reduced rationals, so sup/inf
//! chains compare exactly. No floating point anywhere. The only
//! operations the theory needs are comparison, `min` and `max`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// An exact membership value in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Ratio<i64>);

impl Grade {
    pub const ZERO: Grade = Grade(Ratio::new_raw(0, 1));
    pub const ONE: Grade = Grade(Ratio::new_raw(1, 1));

    /// Builds `numer/denom`, reduced. Errors if the value leaves [0, 1]
    /// or the denominator is zero.
    pub fn new(numer: i64, denom: i64) -> Result<Grade> {
        if denom == 0 {
            return Err(Error::ParseError(format!("{numer}/{denom}: zero denominator")));
        }
        let r = Ratio::new(numer, denom);
        if r < Ratio::new(0, 1) || r > Ratio::new(1, 1) {
            return Err(Error::OutOfRange(format!("{numer}/{denom}")));
        }
        Ok(Grade(r))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        *self.0.numer() == 0
    }

    pub fn min(self, other: Grade) -> Grade {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Grade) -> Grade {
        if self >= other {
            self
        } else {
            other
        }
    }
}

/// Canonical rendering is always `n/d`, even for 0 and 1.
impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Grade {
    type Err = Error;

    /// Accepts `n/d` with integers or a finite decimal (`0.75`), parsed
    /// exactly.
    fn from_str(text: &str) -> Result<Grade> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::ParseError("empty grade".into()));
        }
        if let Some((n, d)) = text.split_once('/') {
            let numer: i64 = n
                .trim()
                .parse()
                .map_err(|_| Error::ParseError(format!("bad numerator in {text:?}")))?;
            let denom: i64 = d
                .trim()
                .parse()
                .map_err(|_| Error::ParseError(format!("bad denominator in {text:?}")))?;
            return Grade::new(numer, denom);
        }
        if let Some((int_part, frac_part)) = text.split_once('.') {
            let int_part = if int_part.is_empty() { "0" } else { int_part };
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::ParseError(format!("bad decimal {text:?}")));
            }
            let whole: i64 = int_part
                .parse()
                .map_err(|_| Error::ParseError(format!("bad decimal {text:?}")))?;
            let frac: i64 = frac_part
                .parse()
                .map_err(|_| Error::ParseError(format!("decimal too long {text:?}")))?;
            let denom = 10i64
                .checked_pow(frac_part.len() as u32)
                .ok_or_else(|| Error::ParseError(format!("decimal too long {text:?}")))?;
            let numer = whole
                .checked_mul(denom)
                .and_then(|w| w.checked_add(frac))
                .ok_or_else(|| Error::ParseError(format!("decimal too long {text:?}")))?;
            return Grade::new(numer, denom);
        }
        let whole: i64 = text
            .parse()
            .map_err(|_| Error::ParseError(format!("bad grade {text:?}")))?;
        Grade::new(whole, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!("7/10".parse::<Grade>().unwrap(), Grade::new(7, 10).unwrap());
        assert_eq!("0.8".parse::<Grade>().unwrap(), Grade::new(4, 5).unwrap());
        assert_eq!("1".parse::<Grade>().unwrap(), Grade::ONE);
        assert_eq!("0.25".parse::<Grade>().unwrap(), Grade::new(1, 4).unwrap());
        assert_eq!(".5".parse::<Grade>().unwrap(), Grade::new(1, 2).unwrap());
    }

    #[test]
    fn range_errors() {
        assert!(matches!("3/2".parse::<Grade>(), Err(Error::OutOfRange(_))));
        assert!(matches!("-1/2".parse::<Grade>(), Err(Error::OutOfRange(_))));
        assert!(matches!("1.5".parse::<Grade>(), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("".parse::<Grade>(), Err(Error::ParseError(_))));
        assert!(matches!("x".parse::<Grade>(), Err(Error::ParseError(_))));
        assert!(matches!("1/0".parse::<Grade>(), Err(Error::ParseError(_))));
        assert!(matches!("0.x".parse::<Grade>(), Err(Error::ParseError(_))));
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(Grade::new(8, 10).unwrap().to_string(), "4/5");
        assert_eq!(Grade::ZERO.to_string(), "0/1");
        assert_eq!(Grade::ONE.to_string(), "1/1");
    }

    #[test]
    fn ordering_is_exact() {
        let a = Grade::new(7, 10).unwrap();
        let b = Grade::new(4, 5).unwrap();
        assert!(a < b);
        assert_eq!(a.min(b), a);
        assert_eq!(a.max(b), b);
    }
}
