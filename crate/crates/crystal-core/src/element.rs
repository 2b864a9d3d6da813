use crate::letter::{Letter, Word};
use crate::weight::Weight;

/// An element of a crystal with Kashiwara operators for every integer color.
pub trait Element: Clone {
    fn raise(&self, i: i64) -> Option<Self>;
    fn lower(&self, i: i64) -> Option<Self>;
    fn eps(&self, i: i64) -> usize;
    fn phi(&self, i: i64) -> usize;
    fn weight(&self) -> Weight;
}

impl Element for Letter {
    fn raise(&self, i: i64) -> Option<Self> {
        Letter::raise(*self, i)
    }

    fn lower(&self, i: i64) -> Option<Self> {
        Letter::lower(*self, i)
    }

    fn eps(&self, i: i64) -> usize {
        Letter::eps(*self, i)
    }

    fn phi(&self, i: i64) -> usize {
        Letter::phi(*self, i)
    }

    fn weight(&self) -> Weight {
        if self.dual {
            -&Weight::epsilon(self.index)
        } else {
            Weight::epsilon(self.index)
        }
    }
}

/// Unmatched `-` factor positions (left to right) and unmatched `+` positions.
/// Each factor contributes `-^eps +^phi`; adjacent `+ -` pairs cancel.
fn signature<T: Element>(factors: &[T], i: i64) -> (Vec<usize>, Vec<usize>) {
    let mut minus = Vec::new();
    let mut plus: Vec<usize> = Vec::new();
    for (k, b) in factors.iter().enumerate() {
        for _ in 0..b.eps(i) {
            if plus.pop().is_none() {
                minus.push(k);
            }
        }
        for _ in 0..b.phi(i) {
            plus.push(k);
        }
    }
    (minus, plus)
}

pub fn tensor_raise<T: Element>(factors: &[T], i: i64) -> Option<Vec<T>> {
    let (minus, _) = signature(factors, i);
    let k = *minus.last()?;
    let mut out = factors.to_vec();
    out[k] = factors[k].raise(i)?;
    Some(out)
}

pub fn tensor_lower<T: Element>(factors: &[T], i: i64) -> Option<Vec<T>> {
    let (_, plus) = signature(factors, i);
    let k = *plus.first()?;
    let mut out = factors.to_vec();
    out[k] = factors[k].lower(i)?;
    Some(out)
}

pub fn tensor_eps<T: Element>(factors: &[T], i: i64) -> usize {
    signature(factors, i).0.len()
}

pub fn tensor_phi<T: Element>(factors: &[T], i: i64) -> usize {
    signature(factors, i).1.len()
}

impl<T: Element> Element for Vec<T> {
    fn raise(&self, i: i64) -> Option<Self> {
        tensor_raise(self, i)
    }

    fn lower(&self, i: i64) -> Option<Self> {
        tensor_lower(self, i)
    }

    fn eps(&self, i: i64) -> usize {
        tensor_eps(self, i)
    }

    fn phi(&self, i: i64) -> usize {
        tensor_phi(self, i)
    }

    fn weight(&self) -> Weight {
        self.iter().fold(Weight::zero(), |acc, b| &acc + &b.weight())
    }
}

pub fn raise(w: &[Letter], i: i64) -> Option<Word> {
    tensor_raise(w, i)
}

pub fn lower(w: &[Letter], i: i64) -> Option<Word> {
    tensor_lower(w, i)
}

pub fn eps(w: &[Letter], i: i64) -> usize {
    tensor_eps(w, i)
}

pub fn phi(w: &[Letter], i: i64) -> usize {
    tensor_phi(w, i)
}

pub fn weight(w: &[Letter]) -> Weight {
    w.iter().fold(Weight::zero(), |acc, b| &acc + &Element::weight(b))
}

/// `S_{r_i}`: lower `<wt, h_i>` times, or raise `-<wt, h_i>` times.
pub fn weyl_reflect<T: Element>(b: &T, i: i64) -> T {
    let k = b.phi(i) as i64 - b.eps(i) as i64;
    let mut cur = b.clone();
    for _ in 0..k.abs() {
        cur = if k > 0 { cur.lower(i) } else { cur.raise(i) }.expect("regular crystal");
    }
    cur
}

/// Dual of a word: reversed, with every letter dualized.
pub fn dual_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.dualize()).collect()
}

/// True when every raising operator in `colors` kills `b`.
pub fn highest_in_colors<T: Element>(b: &T, colors: &[i64]) -> bool {
    colors.iter().all(|&i| b.eps(i) == 0)
}
