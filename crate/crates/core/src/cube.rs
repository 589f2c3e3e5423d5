//! The generalized twisted cube: region test, density, and signed lattice
//! point enumeration.
//!
//! Level `i` of a point `x` satisfies the *negative* clause when every
//! `x_{i,k} <= 0` and `A_i(x) <= Σ_k x_{i,k} <= 0`, and the *positive* clause
//! when every `x_{i,k} > 0` and `0 < Σ_k x_{i,k} < A_i(x)`. The bound `A_i`
//! only reads coordinates of levels above `i`.

use std::io::Write;

use serde::Serialize;

use crate::character::colex;
use crate::compositions::Compositions;
use crate::error::{Error, Result};
use crate::tower::TowerSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Negative,
    Positive,
}

/// A lattice point of the cube with its density and per-level branch tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubePoint {
    pub x: Box<[i64]>,
    pub density: i8,
    pub branch: Box<[Branch]>,
    pub degree: usize,
}

/// Borrowed view handed to [`for_each_point`] visitors.
#[derive(Debug, Clone, Copy)]
pub struct PointView<'a> {
    pub x: &'a [i64],
    pub branch: &'a [Branch],
    pub density: i8,
    pub degree: usize,
}

impl PointView<'_> {
    pub fn to_point(&self) -> CubePoint {
        CubePoint {
            x: self.x.into(),
            density: self.density,
            branch: self.branch.into(),
            degree: self.degree,
        }
    }
}

/// `sgn` with the convention `sgn(0) = -1`.
pub fn sgn(v: i64) -> i8 {
    if v > 0 {
        1
    } else {
        -1
    }
}

/// Cohomological degree `q`: the sum of `n_ℓ` over positive-branch levels.
pub fn degree(spec: &TowerSpec, branch: &[Branch]) -> usize {
    branch
        .iter()
        .zip(spec.dims())
        .filter(|(b, _)| **b == Branch::Positive)
        .map(|(_, &n)| n)
        .sum()
}

fn checked_sum(values: &[i64]) -> Result<i64> {
    values
        .iter()
        .try_fold(0i64, |acc, &v| acc.checked_add(v))
        .ok_or(Error::Overflow("coordinate sum"))
}

// A_i reading the higher-level coordinates out of `higher`, which starts at
// the first coordinate of level i + 1.
fn bound_from_higher(spec: &TowerSpec, i: usize, higher: &[i64]) -> Result<i64> {
    let overflow = || Error::Overflow("level bound");
    let mut acc = spec.twist(i);
    let mut cursor = 0usize;
    for j in (i + 1)..=spec.height() {
        for &c in spec.coupling(i, j) {
            let term = c.checked_mul(higher[cursor]).ok_or_else(overflow)?;
            acc = acc.checked_add(term).ok_or_else(overflow)?;
            cursor += 1;
        }
    }
    acc.checked_neg().ok_or_else(overflow)
}

/// `A_i(x)` given the coordinates `x_high` of every level above `i`
/// (concatenated level-major; empty for the top level).
pub fn level_bound(spec: &TowerSpec, i: usize, x_high: &[i64]) -> Result<i64> {
    let i = spec.level_checked(i)?;
    let expected = spec.blocks_above(i).len();
    if x_high.len() != expected {
        return Err(Error::DimensionMismatch { expected, found: x_high.len() });
    }
    bound_from_higher(spec, i, x_high)
}

fn check_point(spec: &TowerSpec, x: &[i64]) -> Result<()> {
    if x.len() != spec.total_rank() {
        return Err(Error::DimensionMismatch { expected: spec.total_rank(), found: x.len() });
    }
    Ok(())
}

/// `A_i` evaluated at a full point `x ∈ Z^N`.
pub fn level_bound_at(spec: &TowerSpec, i: usize, x: &[i64]) -> Result<i64> {
    let i = spec.level_checked(i)?;
    check_point(spec, x)?;
    bound_from_higher(spec, i, &x[spec.blocks_above(i)])
}

/// Which clause, if any, level `i` of `x` satisfies.
pub fn level_clause(spec: &TowerSpec, i: usize, x: &[i64]) -> Result<Option<Branch>> {
    let bound = level_bound_at(spec, i, x)?;
    let block = &x[spec.block(i)];
    let total = checked_sum(block)?;
    if block.iter().all(|&v| v <= 0) && bound <= total && total <= 0 {
        Ok(Some(Branch::Negative))
    } else if block.iter().all(|&v| v > 0) && 0 < total && total < bound {
        Ok(Some(Branch::Positive))
    } else {
        Ok(None)
    }
}

/// Density `ρ(x)`: zero off the cube, `(-1)^N ∏ sgn(x_{i,k})` on it.
pub fn density(spec: &TowerSpec, x: &[i64]) -> Result<i8> {
    check_point(spec, x)?;
    for i in 1..=spec.height() {
        if level_clause(spec, i, x)?.is_none() {
            return Ok(0);
        }
    }
    Ok(signed_product(spec.total_rank(), x))
}

fn signed_product(rank: usize, x: &[i64]) -> i8 {
    let base: i8 = if rank.is_multiple_of(2) { 1 } else { -1 };
    x.iter().fold(base, |acc, &v| acc * sgn(v))
}

/// Exponent `i_{i,0}` of the omitted homogeneous coordinate, solved from the
/// invariance equation of level `i`: `A_i(x) - Σ_k x_{i,k}`.
///
/// Level `i` of `x` lies in the cube exactly when `sgn(i_{i,0})` agrees with
/// `sgn(x_{i,k})` for every `k`.
pub fn recover_i0(spec: &TowerSpec, x: &[i64], i: usize) -> Result<i64> {
    let bound = level_bound_at(spec, i, x)?;
    let total = checked_sum(&x[spec.block(i)])?;
    bound.checked_sub(total).ok_or(Error::Overflow("homogeneous coordinate"))
}

/// Visits every lattice point of the cube, level `m` outermost. Visit order
/// is deterministic but not lexicographic.
pub fn for_each_point<V>(spec: &TowerSpec, mut visit: V) -> Result<()>
where
    V: FnMut(PointView<'_>) -> Result<()>,
{
    let mut x = vec![0i64; spec.total_rank()];
    let mut branch = vec![Branch::Negative; spec.height()];
    descend(spec, spec.height(), &mut x, &mut branch, &mut visit)
}

fn descend<V>(spec: &TowerSpec, i: usize, x: &mut [i64], branch: &mut [Branch], visit: &mut V) -> Result<()>
where
    V: FnMut(PointView<'_>) -> Result<()>,
{
    if i == 0 {
        let degree = degree(spec, branch);
        let density = signed_product(spec.total_rank(), x);
        return visit(PointView { x, branch, density, degree });
    }
    let block = spec.block(i);
    let n = block.len();
    let bound = bound_from_higher(spec, i, &x[spec.blocks_above(i)])?;

    // Admissible blocks for this level, flat with stride `n`, visited in the
    // weight order so the whole stream comes out sorted.
    let mut blocks = Vec::new();
    if bound <= 0 {
        for r in 0..=-bound {
            let mut comps = Compositions::new(r, n, 0);
            while let Some(c) = comps.next() {
                blocks.extend(c.iter().map(|v| -v));
            }
        }
    }
    if bound > n as i64 {
        for total in (n as i64)..bound {
            let mut comps = Compositions::new(total, n, 1);
            while let Some(c) = comps.next() {
                blocks.extend_from_slice(c);
            }
        }
    }
    let mut order: Vec<usize> = (0..blocks.len() / n).collect();
    order.sort_unstable_by(|&a, &b| colex(&blocks[a * n..(a + 1) * n], &blocks[b * n..(b + 1) * n]));
    for idx in order {
        let values = &blocks[idx * n..(idx + 1) * n];
        // A block is never mixed: its sign decides the branch.
        branch[i - 1] = if values[0] > 0 { Branch::Positive } else { Branch::Negative };
        x[block.clone()].copy_from_slice(values);
        descend(spec, i - 1, x, branch, visit)?;
    }
    x[block].fill(0);
    Ok(())
}

/// Every lattice point of the cube, sorted lexicographically by `x` (not in
/// weight order).
pub fn enumerate(spec: &TowerSpec) -> Result<Vec<CubePoint>> {
    let mut points = Vec::new();
    for_each_point(spec, |p| {
        points.push(p.to_point());
        Ok(())
    })?;
    points.sort_unstable_by(|a, b| a.x.cmp(&b.x));
    Ok(points)
}

/// CSV with one column per coordinate followed by `sign`.
pub fn write_csv<W: Write>(spec: &TowerSpec, points: &[CubePoint], out: W) -> std::io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    let mut header = spec.coordinate_labels();
    header.push("sign".to_string());
    writer.write_record(&header)?;
    for p in points {
        let mut row: Vec<String> = p.x.iter().map(i64::to_string).collect();
        row.push(p.density.to_string());
        writer.write_record(&row)?;
    }
    writer.flush()
}

#[derive(Serialize)]
struct PointRecord<'a> {
    x: &'a [i64],
    sign: i8,
}

/// JSON array of `{"x": [...], "sign": ±1}`.
pub fn write_json<W: Write>(points: &[CubePoint], out: W) -> serde_json::Result<()> {
    let records: Vec<_> = points.iter().map(|p| PointRecord { x: &p.x, sign: p.density }).collect();
    serde_json::to_writer(out, &records)
}
