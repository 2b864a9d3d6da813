use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A letter of `B` (`dual = false`) or of `B^dual`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: i64,
    pub dual: bool,
}

pub type Word = Vec<Letter>;

impl Letter {
    pub fn b(index: i64) -> Self {
        Letter { index, dual: false }
    }

    pub fn v(index: i64) -> Self {
        Letter { index, dual: true }
    }

    pub fn dualize(self) -> Self {
        Letter { index: self.index, dual: !self.dual }
    }

    /// Strict crystal order within one alphabet: `i < j` on `B`, `i^ < j^` iff `i > j` on `B^dual`.
    pub fn less(self, other: Letter) -> bool {
        assert_eq!(self.dual, other.dual, "letters from different alphabets");
        if self.dual {
            self.index > other.index
        } else {
            self.index < other.index
        }
    }

    pub fn raise(self, i: i64) -> Option<Letter> {
        match self.dual {
            false if self.index == i + 1 => Some(Letter::b(i)),
            true if self.index == i => Some(Letter::v(i + 1)),
            _ => None,
        }
    }

    pub fn lower(self, i: i64) -> Option<Letter> {
        match self.dual {
            false if self.index == i => Some(Letter::b(i + 1)),
            true if self.index == i + 1 => Some(Letter::v(i)),
            _ => None,
        }
    }

    pub fn eps(self, i: i64) -> usize {
        self.raise(i).is_some() as usize
    }

    pub fn phi(self, i: i64) -> usize {
        self.lower(i).is_some() as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dual {
            write!(f, "{}*", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

impl FromStr for Letter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (body, dual) = match s.strip_suffix('*') {
            Some(b) => (b, true),
            None => (s, false),
        };
        body.parse::<i64>()
            .map(|index| Letter { index, dual })
            .map_err(|_| format!("bad letter {s:?}"))
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.dual {
            s.serialize_str(&self.to_string())
        } else {
            s.serialize_i64(self.index)
        }
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(i) => Ok(Letter::b(i)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}
