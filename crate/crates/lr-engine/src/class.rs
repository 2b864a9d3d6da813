use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use shapes::{GenPartition, Partition};

/// The class of `B_{mu,nu} x B(Lambda_hw)`; `hw = None` is level 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtremalClass {
    pub mu: Partition,
    pub nu: Partition,
    pub hw: Option<GenPartition>,
}

impl ExtremalClass {
    pub fn new(mu: Partition, nu: Partition, hw: Option<GenPartition>) -> Self {
        let hw = hw.filter(|h| !h.is_empty());
        ExtremalClass { mu, nu, hw }
    }

    pub fn level0(mu: Partition, nu: Partition) -> Self {
        ExtremalClass { mu, nu, hw: None }
    }

    pub fn highest(lambda: GenPartition) -> Self {
        ExtremalClass::new(Partition::empty(), Partition::empty(), Some(lambda))
    }

    pub fn level(&self) -> usize {
        self.hw.as_ref().map_or(0, |h| h.len())
    }

    /// `hw` as a possibly empty generalized partition.
    pub fn hw_or_empty(&self) -> GenPartition {
        self.hw.clone().unwrap_or_default()
    }
}

impl Ord for ExtremalClass {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.level(), &self.hw, &self.mu, &self.nu).cmp(&(o.level(), &o.hw, &o.mu, &o.nu))
    }
}

impl PartialOrd for ExtremalClass {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for ExtremalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B[{};{}]", self.mu, self.nu)?;
        if let Some(h) = &self.hw {
            write!(f, "xB({h})")?;
        }
        Ok(())
    }
}

/// Finite multiset of classes with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "Vec<Entry>", try_from = "Vec<Entry>")]
pub struct Decomposition {
    terms: BTreeMap<ExtremalClass, u64>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    class: ExtremalClass,
    mult: u64,
}

impl From<Decomposition> for Vec<Entry> {
    fn from(d: Decomposition) -> Self {
        d.terms.into_iter().map(|(class, mult)| Entry { class, mult }).collect()
    }
}

impl TryFrom<Vec<Entry>> for Decomposition {
    type Error = String;
    fn try_from(v: Vec<Entry>) -> Result<Self, String> {
        let mut d = Decomposition::new();
        for e in v {
            if e.mult == 0 {
                return Err(format!("zero multiplicity for {}", e.class));
            }
            d.add(ExtremalClass::new(e.class.mu, e.class.nu, e.class.hw), e.mult);
        }
        Ok(d)
    }
}

impl Decomposition {
    pub fn new() -> Self {
        Decomposition::default()
    }

    pub fn single(class: ExtremalClass) -> Self {
        let mut d = Decomposition::new();
        d.add(class, 1);
        d
    }

    /// The unit class `B_{0,0}`.
    pub fn unit() -> Self {
        Decomposition::single(ExtremalClass::level0(Partition::empty(), Partition::empty()))
    }

    pub fn add(&mut self, class: ExtremalClass, mult: u64) {
        if mult > 0 {
            *self.terms.entry(class).or_insert(0) += mult;
        }
    }

    pub fn get(&self, class: &ExtremalClass) -> u64 {
        self.terms.get(class).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExtremalClass, u64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn filter(&self, keep: impl Fn(&ExtremalClass) -> bool) -> Decomposition {
        Decomposition { terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, &v)| (k.clone(), v)).collect() }
    }

    pub fn merge(&mut self, other: &Decomposition, scale: u64) {
        for (k, v) in other.iter() {
            self.add(k.clone(), v * scale);
        }
    }

    /// Swap `mu` and `nu`; the dual of a level-0 decomposition.
    pub fn swap_sides(&self) -> Decomposition {
        let mut d = Decomposition::new();
        for (k, v) in self.iter() {
            d.add(ExtremalClass::new(k.nu.clone(), k.mu.clone(), k.hw.clone()), v);
        }
        d
    }

    /// First class whose multiplicity differs, with `(self, other)` multiplicities.
    pub fn first_difference(&self, other: &Decomposition) -> Option<(ExtremalClass, u64, u64)> {
        let keys: std::collections::BTreeSet<&ExtremalClass> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter()
            .find(|k| self.get(k) != other.get(k))
            .map(|k| (k.clone(), self.get(k), other.get(k)))
    }
}

impl FromIterator<(ExtremalClass, u64)> for Decomposition {
    fn from_iter<I: IntoIterator<Item = (ExtremalClass, u64)>>(iter: I) -> Self {
        let mut d = Decomposition::new();
        for (k, v) in iter {
            d.add(k, v);
        }
        d
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.iter().map(|(k, v)| if v == 1 { k.to_string() } else { format!("{v}*{k}") }).collect();
        if body.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", body.join(" + "))
        }
    }
}
