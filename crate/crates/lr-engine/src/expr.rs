use std::fmt;
use std::str::FromStr;

use shapes::{GenPartition, Partition};

use crate::class::{Decomposition, ExtremalClass};
use crate::error::LrError;
use crate::formulas::product;

/// One tensor factor of an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    /// `B(Lambda_lambda)`.
    B(GenPartition),
    /// The dual `B(Lambda_lambda)^dual = B(-Lambda_lambda)`.
    Bdual(GenPartition),
    /// `B_{mu,nu} = B_mu x B_nu^dual`.
    Bmn(Partition, Partition),
    /// `B_{(1^a)}`.
    Bcol(usize),
}

impl Factor {
    pub fn level(&self) -> i64 {
        match self {
            Factor::B(l) => l.len() as i64,
            Factor::Bdual(l) => -(l.len() as i64),
            _ => 0,
        }
    }

    /// Number of boxes in the level-0 part.
    pub fn boxes(&self) -> usize {
        match self {
            Factor::Bmn(m, n) => m.size() + n.size(),
            Factor::Bcol(a) => *a,
            _ => 0,
        }
    }

    /// The class of a factor of nonnegative level.
    pub fn class(&self) -> Option<ExtremalClass> {
        match self {
            Factor::B(l) => Some(ExtremalClass::highest(l.clone())),
            Factor::Bdual(l) if l.is_empty() => Some(ExtremalClass::level0(Partition::empty(), Partition::empty())),
            Factor::Bdual(_) => None,
            Factor::Bmn(m, n) => Some(ExtremalClass::level0(m.clone(), n.clone())),
            Factor::Bcol(a) => Some(ExtremalClass::level0(Partition::column(*a), Partition::empty())),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = |p: &Partition| if p.is_empty() { String::new() } else { p.to_string() };
        match self {
            Factor::B(l) => write!(f, "B({l})"),
            Factor::Bdual(l) => write!(f, "Bdual({l})"),
            Factor::Bmn(m, n) => write!(f, "Bmn({};{})", p(m), p(n)),
            Factor::Bcol(a) => write!(f, "Bcol({a})"),
        }
    }
}

/// A tensor product of factors, left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr(pub Vec<Factor>);

impl Expr {
    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn level(&self) -> i64 {
        self.0.iter().map(Factor::level).sum()
    }

    pub fn is_mixed(&self) -> bool {
        let pos = self.0.iter().any(|f| f.level() > 0);
        let neg = self.0.iter().any(|f| f.level() < 0);
        pos && neg
    }

    pub fn boxes(&self) -> usize {
        self.0.iter().map(Factor::boxes).sum()
    }

    /// All highest-weight entries occurring in the factors.
    pub fn hw_entries(&self) -> Vec<i64> {
        self.0
            .iter()
            .flat_map(|f| match f {
                Factor::B(l) | Factor::Bdual(l) => l.parts().to_vec(),
                _ => Vec::new(),
            })
            .collect()
    }

    /// Decomposition via the closed formulas, keeping highest weights with entries in `[lo, hi]`.
    pub fn decompose(&self, lo: i64, hi: i64) -> Result<Decomposition, LrError> {
        if self.is_mixed() {
            return Err(LrError::MixedLevel);
        }
        if self.level() < 0 {
            return Err(LrError::NegativeLevel(self.level()));
        }
        let slack = self.boxes() as i64;
        let (wlo, whi) = (lo - slack, hi + slack);
        let mut acc = Decomposition::unit();
        for f in &self.0 {
            let class = f.class().expect("nonnegative factor");
            acc = product(&acc, &Decomposition::single(class), wlo, whi);
        }
        Ok(acc.filter(|c| c.hw.as_ref().map_or(true, |h| h.parts().iter().all(|&x| lo <= x && x <= hi))))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(" * "))
    }
}

fn parse_err(token: &str, msg: &str) -> LrError {
    LrError::Parse { token: token.to_string(), msg: msg.to_string() }
}

fn parse_ints(s: &str) -> Result<Vec<i64>, LrError> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| parse_err(x.trim(), "expected an integer")))
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition, LrError> {
    Partition::from_i64(&parse_ints(s)?).map_err(|e| parse_err(s.trim(), &e.to_string()))
}

fn parse_gen(s: &str) -> Result<GenPartition, LrError> {
    GenPartition::new(parse_ints(s)?).map_err(|e| parse_err(s.trim(), &e.to_string()))
}

impl FromStr for Factor {
    type Err = LrError;

    fn from_str(s: &str) -> Result<Self, LrError> {
        let t = s.trim();
        let open = t.find('(').ok_or_else(|| parse_err(t, "expected '('"))?;
        let body = t[open + 1..].strip_suffix(')').ok_or_else(|| parse_err(t, "expected ')'"))?;
        if body.contains('(') || body.contains(')') {
            return Err(parse_err(t, "nested parentheses"));
        }
        let head = t[..open].trim();
        match head {
            "B" => Ok(Factor::B(parse_gen(body)?)),
            "Bdual" => Ok(Factor::Bdual(parse_gen(body)?)),
            "Bmn" => {
                let (m, n) = body.split_once(';').ok_or_else(|| parse_err(body, "expected ';'"))?;
                Ok(Factor::Bmn(parse_partition(m)?, parse_partition(n)?))
            }
            "Bcol" => {
                let a = body.trim().parse::<usize>().map_err(|_| parse_err(body.trim(), "expected a column length"))?;
                Ok(Factor::Bcol(a))
            }
            _ => Err(parse_err(head, "unknown factor")),
        }
    }
}

impl FromStr for Expr {
    type Err = LrError;

    fn from_str(s: &str) -> Result<Self, LrError> {
        if s.trim().is_empty() {
            return Err(parse_err(s, "empty expression"));
        }
        s.split('*').map(str::parse).collect::<Result<Vec<_>, _>>().map(Expr)
    }
}
