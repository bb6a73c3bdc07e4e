use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field, identified by its characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    /// Characteristic zero (the rationals).
    Rational,
    /// The prime field of the given order.
    Prime(u32),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.characteristic())
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let c: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Precondition(format!("characteristic must be 0 or a prime, got {s:?}")))?;
        if c == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(c)
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_characteristics() {
        assert_eq!("0".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("2".parse::<Field>().unwrap(), Field::Prime(2));
        assert_eq!("101".parse::<Field>().unwrap(), Field::Prime(101));
        assert!("4".parse::<Field>().is_err());
        assert!("1".parse::<Field>().is_err());
        assert!("x".parse::<Field>().is_err());
    }
}
