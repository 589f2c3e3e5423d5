use std::cmp::Ordering;

use bott_index::character::TermRecord;
use bott_index::Character;
use serde::Serialize;

/// Term-by-term comparison of the cube and operator characters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompareReport {
    pub equal: bool,
    pub n_terms: usize,
    pub only_in_cube: Vec<TermRecord<i64>>,
    pub only_in_demazure: Vec<TermRecord<i64>>,
    pub signed_count: i64,
}

fn record(w: &bott_index::Weight, c: i64) -> TermRecord<i64> {
    TermRecord { weight: w.coords().to_vec(), coeff: c }
}

/// A term whose coefficient differs between the two sides is listed on both.
pub fn compare(cube: &Character, demazure: &Character) -> bott_index::Result<CompareReport> {
    let mut only_in_cube = Vec::new();
    let mut only_in_demazure = Vec::new();
    let (a, b) = (cube.terms(), demazure.terms());
    let (mut p, mut q) = (0, 0);
    while p < a.len() || q < b.len() {
        let order = match (a.get(p), b.get(q)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match order {
            Ordering::Less => {
                only_in_cube.push(record(&a[p].0, a[p].1));
                p += 1;
            }
            Ordering::Greater => {
                only_in_demazure.push(record(&b[q].0, b[q].1));
                q += 1;
            }
            Ordering::Equal => {
                if a[p].1 != b[q].1 {
                    only_in_cube.push(record(&a[p].0, a[p].1));
                    only_in_demazure.push(record(&b[q].0, b[q].1));
                }
                p += 1;
                q += 1;
            }
        }
    }
    Ok(CompareReport {
        equal: only_in_cube.is_empty() && only_in_demazure.is_empty(),
        n_terms: cube.len(),
        only_in_cube,
        only_in_demazure,
        signed_count: cube.signed_count()?,
    })
}
