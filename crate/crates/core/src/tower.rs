//! Defining integers of a generalized Bott tower together with a line bundle.
//!
//! Levels and within-level indices are 1-based throughout the public API,
//! matching the usual `(i, k)` labelling of coordinates `x_{i,k}`. Flat
//! coordinate positions are level-major: `x_{1,1}, .., x_{1,n_1}, x_{2,1}, ..`.

use std::collections::BTreeMap;
use std::ops::Range;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Tower data exactly as it appears in a spec file, before validation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawTower {
    pub n: Vec<i64>,
    pub l: Vec<i64>,
    #[serde(default)]
    pub c: BTreeMap<String, Vec<i64>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ValidateOptions {
    /// Treat absent coupling entries as zero instead of rejecting the spec.
    pub zero_fill_c: bool,
}

/// A validated generalized Bott tower with line-bundle twists.
///
/// Immutable once constructed.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(try_from = "RawTower")]
pub struct TowerSpec {
    dims: Vec<usize>,
    twists: Vec<i64>,
    // coupling[i][j - i - 1][k] = c_{i+1, j+1}^{(k+1)}, 0-based i < j
    coupling: Vec<Vec<Vec<i64>>>,
    offsets: Vec<usize>,
}

fn parse_key(key: &str) -> Result<(usize, usize)> {
    let bad = |reason: &str| Error::BadCIndex { key: key.to_string(), reason: reason.to_string() };
    let (a, b) = key.split_once(',').ok_or_else(|| bad("expected \"i,j\""))?;
    let i = a.trim().parse::<usize>().map_err(|_| bad("i is not a positive integer"))?;
    let j = b.trim().parse::<usize>().map_err(|_| bad("j is not a positive integer"))?;
    Ok((i, j))
}

impl RawTower {
    pub fn validate(&self, options: ValidateOptions) -> Result<TowerSpec> {
        let m = self.n.len();
        if m == 0 {
            return Err(Error::EmptyTower);
        }
        if self.l.len() != m {
            return Err(Error::TwistCountMismatch { expected: m, found: self.l.len() });
        }
        let mut dims = Vec::with_capacity(m);
        for (idx, &value) in self.n.iter().enumerate() {
            if value <= 0 {
                return Err(Error::NonPositiveDimension { level: idx + 1, value });
            }
            dims.push(usize::try_from(value).map_err(|_| Error::Overflow("fiber dimension"))?);
        }

        let mut given: BTreeMap<(usize, usize), &Vec<i64>> = BTreeMap::new();
        for (key, row) in &self.c {
            let (i, j) = parse_key(key)?;
            let bad = |reason: String| Error::BadCIndex { key: key.clone(), reason };
            if i == 0 || j == 0 {
                return Err(bad("indices are 1-based".into()));
            }
            if i >= j {
                return Err(bad(format!("needs i < j, got i = {i}, j = {j}")));
            }
            if j > m {
                return Err(bad(format!("j = {j} exceeds tower height {m}")));
            }
            if row.len() > dims[j - 1] {
                return Err(bad(format!("k = {} out of range 1..={}", row.len(), dims[j - 1])));
            }
            if given.insert((i, j), row).is_some() {
                return Err(bad("duplicate entry".into()));
            }
        }

        let mut coupling = Vec::with_capacity(m);
        for i in 1..=m {
            let mut rows = Vec::with_capacity(m - i);
            for j in (i + 1)..=m {
                let want = dims[j - 1];
                let row = match given.get(&(i, j)) {
                    Some(row) if row.len() == want => (*row).clone(),
                    Some(row) if options.zero_fill_c => {
                        let mut padded = (*row).clone();
                        padded.resize(want, 0);
                        padded
                    }
                    None if options.zero_fill_c => vec![0; want],
                    _ => return Err(Error::MissingCEntry { i, j }),
                };
                rows.push(row);
            }
            coupling.push(rows);
        }

        let mut offsets = Vec::with_capacity(m + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for &d in &dims {
            acc = acc.checked_add(d).ok_or(Error::Overflow("total rank"))?;
            offsets.push(acc);
        }
        Ok(TowerSpec { dims, twists: self.l.clone(), coupling, offsets })
    }
}

impl TryFrom<RawTower> for TowerSpec {
    type Error = Error;

    fn try_from(raw: RawTower) -> Result<Self> {
        raw.validate(ValidateOptions::default())
    }
}

impl TowerSpec {
    /// Builds a spec from fiber dimensions, twists and coupling rows keyed by
    /// 1-based `(i, j)`.
    pub fn new(
        n: &[i64],
        l: &[i64],
        c: impl IntoIterator<Item = ((usize, usize), Vec<i64>)>,
    ) -> Result<Self> {
        let raw = RawTower {
            n: n.to_vec(),
            l: l.to_vec(),
            c: c.into_iter().map(|((i, j), row)| (format!("{i},{j}"), row)).collect(),
        };
        raw.validate(ValidateOptions::default())
    }

    pub fn from_json(text: &str, options: ValidateOptions) -> Result<Self> {
        let raw: RawTower = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        raw.validate(options)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tower serialization is infallible")
    }

    /// Number of stages `m`.
    pub fn height(&self) -> usize {
        self.dims.len()
    }

    /// Fiber dimensions `n_1..n_m`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Fiber dimension of level `i` (1-based).
    pub fn dim(&self, i: usize) -> usize {
        self.dims[i - 1]
    }

    /// Line-bundle twists `ℓ_1..ℓ_m`.
    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn twist(&self, i: usize) -> i64 {
        self.twists[i - 1]
    }

    /// Coupling row `(c_{i,j}^{(1)}, .., c_{i,j}^{(n_j)})` for `1 <= i < j <= m`.
    pub fn coupling(&self, i: usize, j: usize) -> &[i64] {
        assert!(i >= 1 && i < j && j <= self.height(), "coupling({i}, {j}) out of range");
        &self.coupling[i - 1][j - i - 1]
    }

    /// Total torus rank `N = n_1 + .. + n_m`.
    pub fn total_rank(&self) -> usize {
        self.offsets[self.height()]
    }

    /// Length of weights: `N + 1`, the last slot being the circle factor.
    pub fn weight_dim(&self) -> usize {
        self.total_rank() + 1
    }

    /// 0-based flat positions occupied by level `i`.
    pub fn block(&self, i: usize) -> Range<usize> {
        self.offsets[i - 1]..self.offsets[i]
    }

    /// 0-based flat positions of every level strictly above `i`.
    pub fn blocks_above(&self, i: usize) -> Range<usize> {
        self.offsets[i]..self.total_rank()
    }

    fn check_level(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.height() {
            return Err(Error::IndexOutOfRange { what: "level", index: i });
        }
        Ok(())
    }

    pub(crate) fn level_checked(&self, i: usize) -> Result<usize> {
        self.check_level(i).map(|_| i)
    }

    /// Position (1-based, in `1..=N`) of coordinate `x_{i,k}`.
    pub fn flatten_index(&self, i: usize, k: usize) -> Result<usize> {
        self.check_level(i)?;
        if k == 0 || k > self.dims[i - 1] {
            return Err(Error::IndexOutOfRange { what: "within-level index", index: k });
        }
        Ok(self.offsets[i - 1] + k)
    }

    /// Inverse of [`flatten_index`](Self::flatten_index).
    pub fn unflatten_index(&self, position: usize) -> Result<(usize, usize)> {
        if position == 0 || position > self.total_rank() {
            return Err(Error::IndexOutOfRange { what: "flat position", index: position });
        }
        let i = self.offsets.partition_point(|&o| o < position);
        Ok((i, position - self.offsets[i - 1]))
    }

    /// Column labels `x_{1,1}, .., x_{m,n_m}`.
    pub fn coordinate_labels(&self) -> Vec<String> {
        let mut labels = Vec::with_capacity(self.total_rank());
        for (i, &n) in self.dims.iter().enumerate() {
            for k in 1..=n {
                labels.push(format!("x_{{{},{}}}", i + 1, k));
            }
        }
        labels
    }
}

impl Serialize for TowerSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Couplings<'a>(&'a TowerSpec);

        impl Serialize for Couplings<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let spec = self.0;
                let m = spec.height();
                let mut map = serializer.serialize_map(Some(m * (m - 1) / 2))?;
                for i in 1..=m {
                    for j in (i + 1)..=m {
                        map.serialize_entry(&format!("{i},{j}"), spec.coupling(i, j))?;
                    }
                }
                map.end()
            }
        }

        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("n", &self.dims)?;
        map.serialize_entry("l", &self.twists)?;
        map.serialize_entry("c", &Couplings(self))?;
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example(text: &str) -> Result<TowerSpec> {
        TowerSpec::from_json(text, ValidateOptions::default())
    }

    #[test]
    fn validates_two_stage_example() {
        let spec = example(r#"{"n":[1,2],"l":[1,2],"c":{"1,2":[2,-1]}}"#).unwrap();
        assert_eq!(spec.height(), 2);
        assert_eq!(spec.total_rank(), 3);
        assert_eq!(spec.coupling(1, 2), &[2, -1]);
    }

    #[test]
    fn one_stage_needs_no_coupling() {
        let spec = example(r#"{"n":[3],"l":[5]}"#).unwrap();
        assert_eq!(spec.total_rank(), 3);
        assert_eq!(spec.twists(), &[5]);
    }

    #[test]
    fn rejects_reversed_index() {
        let err = example(r#"{"n":[1,1],"l":[0,0],"c":{"2,1":[1]}}"#).unwrap_err();
        assert!(matches!(err, Error::BadCIndex { .. }), "{err:?}");
    }

    #[test]
    fn rejects_overlong_row_and_out_of_range_j() {
        let err = example(r#"{"n":[1,1],"l":[0,0],"c":{"1,2":[1,2]}}"#).unwrap_err();
        assert!(matches!(err, Error::BadCIndex { .. }));
        let err = example(r#"{"n":[1,1],"l":[0,0],"c":{"1,2":[1],"1,3":[1]}}"#).unwrap_err();
        assert!(matches!(err, Error::BadCIndex { .. }));
        let err = example(r#"{"n":[1,1],"l":[0,0],"c":{"x":[1]}}"#).unwrap_err();
        assert!(matches!(err, Error::BadCIndex { .. }));
    }

    #[test]
    fn missing_entries_are_errors_unless_zero_filled() {
        let text = r#"{"n":[1,2,1],"l":[0,0,0],"c":{"1,2":[1]}}"#;
        assert_eq!(example(text).unwrap_err(), Error::MissingCEntry { i: 1, j: 2 });
        let spec = TowerSpec::from_json(text, ValidateOptions { zero_fill_c: true }).unwrap();
        assert_eq!(spec.coupling(1, 2), &[1, 0]);
        assert_eq!(spec.coupling(1, 3), &[0]);
        assert_eq!(spec.coupling(2, 3), &[0]);
    }

    #[test]
    fn rejects_non_positive_dimension_and_length_mismatch() {
        assert_eq!(
            example(r#"{"n":[1,0],"l":[0,0],"c":{"1,2":[]}}"#).unwrap_err(),
            Error::NonPositiveDimension { level: 2, value: 0 }
        );
        assert!(matches!(
            example(r#"{"n":[1],"l":[0,0]}"#).unwrap_err(),
            Error::TwistCountMismatch { .. }
        ));
        assert_eq!(example(r#"{"n":[],"l":[]}"#).unwrap_err(), Error::EmptyTower);
        assert!(matches!(example(r#"{"n":[1],"l":[0],"m":1}"#), Err(Error::Parse(_))));
    }

    #[test]
    fn flatten_index_examples() {
        let spec = TowerSpec::new(&[1, 2], &[1, 2], [((1, 2), vec![2, -1])]).unwrap();
        assert_eq!(spec.flatten_index(2, 1).unwrap(), 2);
        assert_eq!(spec.flatten_index(1, 1).unwrap(), 1);
        let spec = TowerSpec::new(&[2, 2], &[0, 0], [((1, 2), vec![0, 0])]).unwrap();
        assert_eq!(spec.flatten_index(2, 2).unwrap(), 4);
        assert!(spec.flatten_index(3, 1).is_err());
        assert!(spec.flatten_index(1, 3).is_err());
        assert!(spec.unflatten_index(5).is_err());
    }

    #[test]
    fn serializes_in_numeric_key_order() {
        let spec = TowerSpec::new(&[1, 2], &[1, 2], [((1, 2), vec![2, -1])]).unwrap();
        assert_eq!(spec.to_json(), r#"{"n":[1,2],"l":[1,2],"c":{"1,2":[2,-1]}}"#);
    }
}
