//! Brute-force reference computations for testing `bott-index`.
//!
//! Nothing here calls the library's enumeration, density or operator code;
//! only the tower accessors are shared. Membership is tested straight from the
//! defining inequalities and candidate points come from box scans.

use bott_index::TowerSpec;

pub mod golden;

/// Signed point list sorted by `x`.
pub type SignedPoints = Vec<(Vec<i64>, i8)>;

/// `A_i(x)` recomputed from the tower data (1-based level).
pub fn bound(spec: &TowerSpec, i: usize, x: &[i64]) -> i64 {
    let mut s = spec.twist(i);
    let mut pos: usize = spec.dims()[..i].iter().sum();
    for j in (i + 1)..=spec.height() {
        for &c in spec.coupling(i, j) {
            s += c * x[pos];
            pos += 1;
        }
    }
    -s
}

fn level_ok(spec: &TowerSpec, i: usize, x: &[i64]) -> bool {
    let start: usize = spec.dims()[..i - 1].iter().sum();
    let block = &x[start..start + spec.dims()[i - 1]];
    let a = bound(spec, i, x);
    let s: i64 = block.iter().sum();
    let neg = block.iter().all(|&v| v <= 0) && a <= s && s <= 0;
    let pos = block.iter().all(|&v| v > 0) && 0 < s && s < a;
    neg || pos
}

/// Density from the definition: zero off the cube, else
/// `(-1)^N ∏ sgn(x_{i,k})` with `sgn(0) = -1`.
pub fn density(spec: &TowerSpec, x: &[i64]) -> i8 {
    if !(1..=spec.height()).all(|i| level_ok(spec, i, x)) {
        return 0;
    }
    let negatives = x.iter().filter(|&&v| v <= 0).count() + spec.total_rank();
    if negatives.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Per-coordinate hull `[lo, hi]` of the cube, by interval arithmetic from
/// the top level down.
pub fn coordinate_intervals(spec: &TowerSpec) -> Vec<(i64, i64)> {
    let n_total = spec.total_rank();
    let mut iv = vec![(0i64, 0i64); n_total];
    for i in (1..=spec.height()).rev() {
        // A_i = -(ℓ_i + Σ c x)
        let (mut lo, mut hi) = (spec.twist(i), spec.twist(i));
        let mut pos: usize = spec.dims()[..i].iter().sum();
        for j in (i + 1)..=spec.height() {
            for &c in spec.coupling(i, j) {
                let (a, b) = (c * iv[pos].0, c * iv[pos].1);
                lo += a.min(b);
                hi += a.max(b);
                pos += 1;
            }
        }
        let (a_lo, a_hi) = (-hi, -lo);
        let n = spec.dims()[i - 1] as i64;
        let coord_lo = a_lo.min(0);
        let coord_hi = (a_hi - n).max(0);
        let start: usize = spec.dims()[..i - 1].iter().sum();
        iv[start..start + n as usize].fill((coord_lo, coord_hi));
    }
    iv
}

/// Number of points in the interval box, saturating.
pub fn box_volume(intervals: &[(i64, i64)]) -> u128 {
    intervals
        .iter()
        .fold(1u128, |acc, (lo, hi)| acc.saturating_mul((hi - lo + 1) as u128))
}

/// Scans the whole interval box, or returns `None` if it holds more than
/// `limit` points.
pub fn full_box_scan(spec: &TowerSpec, limit: u128) -> Option<SignedPoints> {
    let iv = coordinate_intervals(spec);
    if box_volume(&iv) > limit {
        return None;
    }
    let mut out = Vec::new();
    let mut x: Vec<i64> = iv.iter().map(|p| p.0).collect();
    if x.is_empty() {
        return Some(out);
    }
    loop {
        let d = density(spec, &x);
        if d != 0 {
            out.push((x.clone(), d));
        }
        // odometer, last coordinate fastest
        let mut p = x.len();
        loop {
            if p == 0 {
                out.sort();
                return Some(out);
            }
            p -= 1;
            if x[p] < iv[p].1 {
                x[p] += 1;
                break;
            }
            x[p] = iv[p].0;
        }
    }
}

/// Nested scan: levels from the top down, each level scanning the box
/// `[min(A_i, 0), max(A_i - 1, 0)]^{n_i}` implied by the already fixed higher
/// coordinates, keeping candidates that satisfy the level's inequalities.
pub fn levelwise_box_scan(spec: &TowerSpec) -> SignedPoints {
    let mut out = Vec::new();
    levelwise_box_visit(spec, |x, d| out.push((x.to_vec(), d)));
    out.sort();
    out
}

/// Streaming form of [`levelwise_box_scan`]; each point is visited once, in
/// scan order.
pub fn levelwise_box_visit(spec: &TowerSpec, mut visit: impl FnMut(&[i64], i8)) {
    let mut x = vec![0i64; spec.total_rank()];
    scan_level(spec, spec.height(), &mut x, &mut visit);
}

fn scan_level(spec: &TowerSpec, i: usize, x: &mut Vec<i64>, visit: &mut impl FnMut(&[i64], i8)) {
    if i == 0 {
        let d = density(spec, x);
        assert_ne!(d, 0, "level-wise scan produced a point outside the cube");
        visit(x, d);
        return;
    }
    let a = bound(spec, i, x);
    let (lo, hi) = (a.min(0), (a - 1).max(0));
    let start: usize = spec.dims()[..i - 1].iter().sum();
    let n = spec.dims()[i - 1];
    x[start..start + n].fill(lo);
    loop {
        if level_ok(spec, i, x) {
            scan_level(spec, i - 1, x, visit);
        }
        let mut p = start + n;
        loop {
            if p == start {
                x[start..start + n].fill(0);
                return;
            }
            p -= 1;
            if x[p] < hi {
                x[p] += 1;
                break;
            }
            x[p] = lo;
        }
    }
}

/// Best available brute-force scan: the full interval box when it holds at
/// most `limit` points, the level-wise scan otherwise.
pub fn brute_force_points(spec: &TowerSpec, limit: u128) -> SignedPoints {
    full_box_scan(spec, limit).unwrap_or_else(|| levelwise_box_scan(spec))
}

/// Solves `ℓ_i + i_0 + Σ_k x_{i,k} + Σ_{j>i,k} c x = 0` for the integer `i_0`
/// by trying every value in `[-radius, radius]`.
pub fn homogeneous_exponent_by_search(spec: &TowerSpec, x: &[i64], i: usize, radius: i64) -> Option<i64> {
    let start: usize = spec.dims()[..i - 1].iter().sum();
    let own: i64 = x[start..start + spec.dims()[i - 1]].iter().sum();
    let rest = -bound(spec, i, x) - spec.twist(i);
    (-radius..=radius).find(|&i0| spec.twist(i) + i0 + own + rest == 0)
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1i64, |acc, t| acc * (n - t) / (t + 1))
}
