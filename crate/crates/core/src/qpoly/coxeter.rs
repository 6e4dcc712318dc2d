use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Irreducible finite Coxeter types handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(usize),
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n,
            CoxeterType::E6 => 6,
            CoxeterType::E7 => 7,
            CoxeterType::E8 => 8,
            CoxeterType::F4 => 4,
            CoxeterType::H3 => 3,
            CoxeterType::H4 => 4,
            CoxeterType::I2(_) => 2,
        }
    }

    pub fn is_exceptional(self) -> bool {
        matches!(
            self,
            CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 | CoxeterType::F4 | CoxeterType::H3 | CoxeterType::H4
        )
    }

    pub const EXCEPTIONAL: [CoxeterType; 6] = [
        CoxeterType::E6,
        CoxeterType::E7,
        CoxeterType::E8,
        CoxeterType::F4,
        CoxeterType::H3,
        CoxeterType::H4,
    ];
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E6 => write!(f, "E6"),
            CoxeterType::E7 => write!(f, "E7"),
            CoxeterType::E8 => write!(f, "E8"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
            CoxeterType::I2(a) => write!(f, "I2({a})"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    /// Accepts `A3`, `B2`, `D4`, `E6`, `F4`, `H3`, `I2(5)` and `I2_5`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let bad = || Error::Parse(format!("unknown Coxeter type `{s}`"));
        match t.as_str() {
            "E6" => return Ok(CoxeterType::E6),
            "E7" => return Ok(CoxeterType::E7),
            "E8" => return Ok(CoxeterType::E8),
            "F4" => return Ok(CoxeterType::F4),
            "H3" => return Ok(CoxeterType::H3),
            "H4" => return Ok(CoxeterType::H4),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("I2") {
            let a: usize = rest
                .trim_start_matches(['(', '_'])
                .trim_end_matches(')')
                .parse()
                .map_err(|_| bad())?;
            if a < 3 {
                return Err(bad());
            }
            return Ok(CoxeterType::I2(a));
        }
        let (head, num) = t.split_at(1);
        let n: usize = num.parse().map_err(|_| bad())?;
        match head {
            "A" if n >= 1 => Ok(CoxeterType::A(n)),
            "B" if n >= 2 => Ok(CoxeterType::B(n)),
            "D" if n >= 2 => Ok(CoxeterType::D(n)),
            _ => Err(bad()),
        }
    }
}

/// Coxeter number and exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDatum {
    pub ty: CoxeterType,
    pub h: usize,
    pub exponents: Vec<usize>,
}

impl CoxeterDatum {
    pub fn new(ty: CoxeterType) -> Self {
        let (h, exponents) = match ty {
            CoxeterType::A(n) => (n + 1, (1..=n).collect()),
            CoxeterType::B(n) => (2 * n, (0..n).map(|i| 2 * i + 1).collect()),
            CoxeterType::D(n) => {
                let mut e: Vec<usize> = (0..n - 1).map(|i| 2 * i + 1).collect();
                e.push(n - 1);
                (2 * (n - 1), e)
            }
            CoxeterType::E6 => (12, vec![1, 4, 5, 7, 8, 11]),
            CoxeterType::E7 => (18, vec![1, 5, 7, 9, 11, 13, 17]),
            CoxeterType::E8 => (30, vec![1, 7, 11, 13, 17, 19, 23, 29]),
            CoxeterType::F4 => (12, vec![1, 5, 7, 11]),
            CoxeterType::H3 => (10, vec![1, 5, 9]),
            CoxeterType::H4 => (30, vec![1, 11, 19, 29]),
            CoxeterType::I2(a) => (a, vec![1, a - 1]),
        };
        Self { ty, h, exponents }
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    /// Number of positive roots, `n h / 2`.
    pub fn positive_root_count(&self) -> usize {
        self.rank() * self.h / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponents_pair_up_with_coxeter_number() {
        // e_i + e_{n+1-i} = h for every irreducible type
        for ty in [
            CoxeterType::A(5),
            CoxeterType::B(4),
            CoxeterType::D(5),
            CoxeterType::E6,
            CoxeterType::E7,
            CoxeterType::E8,
            CoxeterType::F4,
            CoxeterType::H3,
            CoxeterType::H4,
            CoxeterType::I2(7),
        ] {
            let d = CoxeterDatum::new(ty);
            let mut e = d.exponents.clone();
            e.sort_unstable();
            let n = e.len();
            for i in 0..n {
                assert_eq!(e[i] + e[n - 1 - i], d.h, "{ty}");
            }
            assert_eq!(d.rank(), ty.rank());
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!("E8".parse::<CoxeterType>().unwrap(), CoxeterType::E8);
        assert_eq!("a3".parse::<CoxeterType>().unwrap(), CoxeterType::A(3));
        assert_eq!("I2(5)".parse::<CoxeterType>().unwrap(), CoxeterType::I2(5));
        assert!("X9".parse::<CoxeterType>().is_err());
        assert!("B1".parse::<CoxeterType>().is_err());
        assert_eq!(
            CoxeterType::I2(4).to_string().parse::<CoxeterType>().unwrap(),
            CoxeterType::I2(4)
        );
    }
}
