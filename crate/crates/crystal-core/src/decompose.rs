use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;
use thiserror::Error;

use crate::element::{highest_in_colors, Element};
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("operator {op}_{color} leaves the set at {elem}")]
    NotClosed { op: char, color: i64, elem: String },
    #[error("component of {elem} has {count} sources")]
    Sources { elem: String, count: usize },
    #[error("component exceeds {0} elements")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component<T> {
    pub highest: T,
    pub highest_weight: Weight,
    pub size: usize,
}

/// Split a finite set closed under the operators of `colors` into connected components.
pub fn decompose_components<T>(set: &[T], colors: &[i64]) -> Result<Vec<Component<T>>, CrystalError>
where
    T: Element + Hash + Eq + Debug,
{
    let index: HashMap<&T, usize> = set.iter().enumerate().map(|(k, b)| (b, k)).collect();
    let mut seen = vec![false; set.len()];
    let mut out = Vec::new();
    for start in 0..set.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut size = 0;
        let mut sources = Vec::new();
        while let Some(k) = queue.pop_front() {
            size += 1;
            let b = &set[k];
            if highest_in_colors(b, colors) {
                sources.push(k);
            }
            for &i in colors {
                for (op, next) in [('e', b.raise(i)), ('f', b.lower(i))] {
                    let Some(next) = next else { continue };
                    match index.get(&next) {
                        Some(&j) => {
                            if !seen[j] {
                                seen[j] = true;
                                queue.push_back(j);
                            }
                        }
                        None => {
                            return Err(CrystalError::NotClosed {
                                op,
                                color: i,
                                elem: format!("{b:?}"),
                            })
                        }
                    }
                }
            }
        }
        if sources.len() != 1 {
            return Err(CrystalError::Sources {
                elem: format!("{:?}", set[start]),
                count: sources.len(),
            });
        }
        let hw = set[sources[0]].clone();
        out.push(Component { highest_weight: hw.weight(), highest: hw, size });
    }
    Ok(out)
}

/// Multiset of `(highest weight, size)` over the components.
pub fn census<T>(components: &[Component<T>]) -> BTreeMap<(Weight, usize), usize> {
    let mut out = BTreeMap::new();
    for c in components {
        *out.entry((c.highest_weight.clone(), c.size)).or_insert(0) += 1;
    }
    out
}

/// Whether `w1 -> w2` extends to a color-preserving isomorphism of their components.
pub fn is_equivalent<T>(w1: &T, w2: &T, colors: &[i64], cap: usize) -> Result<bool, CrystalError>
where
    T: Element + Hash + Eq,
{
    let mut map: HashMap<T, T> = HashMap::new();
    let mut back: HashMap<T, T> = HashMap::new();
    let mut queue = VecDeque::new();
    map.insert(w1.clone(), w2.clone());
    back.insert(w2.clone(), w1.clone());
    queue.push_back((w1.clone(), w2.clone()));
    while let Some((a, b)) = queue.pop_front() {
        if map.len() > cap {
            return Err(CrystalError::TooLarge(cap));
        }
        for &i in colors {
            if a.eps(i) != b.eps(i) || a.phi(i) != b.phi(i) {
                return Ok(false);
            }
            for (na, nb) in [(a.raise(i), b.raise(i)), (a.lower(i), b.lower(i))] {
                match (na, nb) {
                    (None, None) => {}
                    (Some(x), Some(y)) => match (map.get(&x), back.get(&y)) {
                        (None, None) => {
                            map.insert(x.clone(), y.clone());
                            back.insert(y.clone(), x.clone());
                            queue.push_back((x, y));
                        }
                        (Some(y0), Some(x0)) if *y0 == y && *x0 == x => {}
                        _ => return Ok(false),
                    },
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(true)
}
