use std::collections::{HashMap, VecDeque};

use crystal_core::{CrystalError, Weight};

use crate::matrix::BinaryMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiComponent {
    pub highest: BinaryMatrix,
    pub col_weight: Weight,
    pub row_sums: Vec<usize>,
    pub size: usize,
}

/// Components of a finite set of matrices under the column operators of
/// `col_colors` together with the row operators of `row_colors`.
pub fn bicrystal_components(
    set: &[BinaryMatrix],
    col_colors: &[i64],
    row_colors: &[i64],
) -> Result<Vec<BiComponent>, CrystalError> {
    let index: HashMap<&BinaryMatrix, usize> = set.iter().enumerate().map(|(k, a)| (a, k)).collect();
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
            let a = &set[k];
            let mut next = Vec::new();
            let mut source = true;
            for &c in col_colors {
                let up = a.matrix_raise(c);
                source &= up.is_none();
                next.push(('e', c, up));
                next.push(('f', c, a.matrix_lower(c)));
            }
            for &l in row_colors {
                let up = a.cap_raise(l);
                source &= up.is_none();
                next.push(('E', l, up));
                next.push(('F', l, a.cap_lower(l)));
            }
            if source {
                sources.push(k);
            }
            for (op, color, b) in next {
                let Some(b) = b else { continue };
                match index.get(&b) {
                    Some(&j) => {
                        if !seen[j] {
                            seen[j] = true;
                            queue.push_back(j);
                        }
                    }
                    None => return Err(CrystalError::NotClosed { op, color, elem: a.to_string() }),
                }
            }
        }
        if sources.len() != 1 {
            return Err(CrystalError::Sources { elem: set[start].to_string(), count: sources.len() });
        }
        let h = set[sources[0]].clone();
        out.push(BiComponent { col_weight: h.col_weight(), row_sums: h.row_sums(), highest: h, size });
    }
    Ok(out)
}
