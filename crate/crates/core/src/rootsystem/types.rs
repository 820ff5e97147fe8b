use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    /// Central torus; the rank is its dimension.
    T,
}

impl Letter {
    fn from_char(c: char) -> Option<Letter> {
        Some(match c {
            'A' => Letter::A,
            'B' => Letter::B,
            'C' => Letter::C,
            'D' => Letter::D,
            'E' => Letter::E,
            'F' => Letter::F,
            'G' => Letter::G,
            'T' => Letter::T,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
            Letter::T => 'T',
        }
    }
}

/// A simple factor as written, e.g. `B1`, `D3`, `A2~`.
///
/// `short` marks a subsystem of short roots (written with a tilde); it is only
/// accepted on type A factors and only matters when locating Levi subgroups
/// inside `F4` and `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    pub letter: Letter,
    pub rank: usize,
    pub short: bool,
}

impl SimpleType {
    pub fn new(letter: Letter, rank: usize) -> Result<SimpleType> {
        let t = SimpleType {
            letter,
            rank,
            short: false,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn short(letter: Letter, rank: usize) -> Result<SimpleType> {
        let t = SimpleType {
            letter,
            rank,
            short: true,
        };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let ok = match self.letter {
            Letter::A | Letter::B | Letter::C | Letter::D | Letter::T => self.rank >= 1,
            Letter::E => (6..=8).contains(&self.rank),
            Letter::F => self.rank == 4,
            Letter::G => self.rank == 2,
        };
        if !ok || (self.short && self.letter != Letter::A) {
            return Err(Error::UnknownType(self.to_string()));
        }
        Ok(())
    }

    /// Torus factors, including `D1` (= SO2), carry no roots.
    pub fn is_torus(&self) -> bool {
        self.letter == Letter::T || (self.letter == Letter::D && self.rank == 1)
    }

    pub fn without_tilde(self) -> SimpleType {
        SimpleType {
            short: false,
            ..self
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.rank)?;
        if self.short {
            f.write_str("~")?;
        }
        Ok(())
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<SimpleType> {
        let unknown = || Error::UnknownType(s.to_string());
        let mut chars = s.chars();
        let letter = chars.next().and_then(Letter::from_char).ok_or_else(unknown)?;
        let rest = chars.as_str();
        let (digits, short) = match rest.strip_suffix('~') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return Err(unknown());
        }
        let rank: usize = digits.parse().map_err(|_| unknown())?;
        let t = SimpleType {
            letter,
            rank,
            short,
        };
        t.validate().map_err(|_| unknown())?;
        Ok(t)
    }
}

/// An ordered product of simple factors. The empty product is the trivial
/// group, written `1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct GroupType {
    pub factors: Vec<SimpleType>,
}

impl GroupType {
    pub fn new(factors: Vec<SimpleType>) -> GroupType {
        GroupType { factors }
    }

    pub fn trivial() -> GroupType {
        GroupType::default()
    }

    pub fn simple(letter: Letter, rank: usize) -> Result<GroupType> {
        Ok(GroupType::new(vec![SimpleType::new(letter, rank)?]))
    }

    pub fn torus(rank: usize) -> GroupType {
        if rank == 0 {
            return GroupType::trivial();
        }
        GroupType::new(vec![SimpleType {
            letter: Letter::T,
            rank,
            short: false,
        }])
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    /// Rank of the derived subgroup.
    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().filter(|f| !f.is_torus()).map(|f| f.rank).sum()
    }

    pub fn is_torus(&self) -> bool {
        self.factors.iter().all(|f| f.is_torus())
    }

    pub fn without_tildes(&self) -> GroupType {
        GroupType::new(self.factors.iter().map(|f| f.without_tilde()).collect())
    }

    /// Product with another type, factors of `self` first.
    pub fn product(&self, other: &GroupType) -> GroupType {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        GroupType::new(factors)
    }

    /// Coordinate offset of each factor in a weight of this type.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut acc = 0;
        for f in &self.factors {
            out.push(acc);
            acc += f.rank;
        }
        out
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupType> {
        if s == "1" {
            return Ok(GroupType::trivial());
        }
        if s.is_empty() {
            return Err(Error::UnknownType(s.to_string()));
        }
        let factors = s
            .split('.')
            .map(SimpleType::from_str)
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        Ok(GroupType::new(factors))
    }
}
