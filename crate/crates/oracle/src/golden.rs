//! Published worked characters, kept in `λ^{...}` exponent notation and parsed
//! on demand so they can be compared against computed characters.

use bott_index::TowerSpec;

/// `(sign, exponent)` pairs for the `n = (1, 2)`, `ℓ = (1, 2)`,
/// `c_{1,2} = (2, -1)` tower.
pub const MIXED_SIGN_TERMS: &[(i64, &str)] = &[
    (1, "e_3"),
    (1, "e_3-e_{1,1}"),
    (1, "e_3-e_{2,2}"),
    (1, "e_3-e_{2,2}-e_{1,1}"),
    (1, "e_3-e_{2,2}-2e_{1,1}"),
    (-1, "e_3-2e_{2,1}+e_{1,1}"),
    (-1, "e_3-2e_{2,1}+2e_{1,1}"),
    (1, "e_3-e_{2,1}-e_{2,2}"),
    (1, "e_3-2e_{2,2}"),
    (1, "e_3-2e_{2,2}-e_{1,1}"),
    (1, "e_3-2e_{2,2}-2e_{1,1}"),
    (1, "e_3-2e_{2,2}-3e_{1,1}"),
];

/// Intermediate `D_2(λ^{e_3})` for the same tower.
pub const MIXED_SIGN_TOP_LEVEL: &[(i64, &str)] = &[
    (1, "e_3"),
    (1, "e_3-e_{2,1}"),
    (1, "e_3-e_{2,2}"),
    (1, "e_3-2e_{2,1}"),
    (1, "e_3-e_{2,1}-e_{2,2}"),
    (1, "e_3-2e_{2,2}"),
];

/// `n = (2, 1)`, `ℓ = (2, -6)`, `c_{1,2} = (-1)`.
pub const NEGATIVE_TERMS: &[(i64, &str)] = &[
    (-1, "e_3+e_{2,1}"),
    (-1, "e_3+e_{2,1}-e_{1,1}"),
    (-1, "e_3+e_{2,1}-e_{1,2}"),
    (-1, "e_3+2e_{2,1}"),
    (-1, "e_3+5e_{2,1}+e_{1,1}+e_{1,2}"),
];

pub const NEGATIVE_TOP_LEVEL: &[(i64, &str)] = &[
    (-1, "e_3+e_{2,1}"),
    (-1, "e_3+2e_{2,1}"),
    (-1, "e_3+3e_{2,1}"),
    (-1, "e_3+4e_{2,1}"),
    (-1, "e_3+5e_{2,1}"),
];

/// `n = (2, 2)`, `ℓ = (1, 2)`, `c_{1,2} = (2, -1)`.
pub const BALANCED_TERMS: &[(i64, &str)] = &[
    (1, "e_3"),
    (1, "e_3-e_{1,1}"),
    (1, "e_3-e_{1,2}"),
    (1, "e_3-e_{2,2}"),
    (1, "e_3-e_{2,2}-e_{1,1}"),
    (1, "e_3-e_{2,2}-e_{1,2}"),
    (1, "e_3-e_{2,2}-2e_{1,1}"),
    (1, "e_3-e_{2,2}-e_{1,1}-e_{1,2}"),
    (1, "e_3-e_{2,2}-2e_{1,2}"),
    (1, "e_3-2e_{2,1}+e_{1,1}+e_{1,2}"),
    (1, "e_3-e_{2,1}-e_{2,2}"),
    (1, "e_3-2e_{2,2}"),
    (1, "e_3-2e_{2,2}-e_{1,1}"),
    (1, "e_3-2e_{2,2}-e_{1,2}"),
    (1, "e_3-2e_{2,2}-2e_{1,1}"),
    (1, "e_3-2e_{2,2}-e_{1,1}-e_{1,2}"),
    (1, "e_3-2e_{2,2}-2e_{1,2}"),
    (1, "e_3-2e_{2,2}-3e_{1,1}"),
    (1, "e_3-2e_{2,2}-2e_{1,1}-e_{1,2}"),
    (1, "e_3-2e_{2,2}-e_{1,1}-2e_{1,2}"),
    (1, "e_3-2e_{2,2}-3e_{1,2}"),
];

/// Parses an exponent such as `e_3-2e_{2,1}+e_{1,1}` into a weight vector of
/// length `N + 1` laid out for `spec`.
pub fn parse_exponent(spec: &TowerSpec, text: &str) -> Vec<i64> {
    let mut w = vec![0i64; spec.weight_dim()];
    let circle = format!("e_{}", spec.height() + 1);
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = 1;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            sign = if bytes[pos] == b'-' { -1 } else { 1 };
            pos += 1;
        }
        let digits_end = pos + text[pos..].bytes().take_while(u8::is_ascii_digit).count();
        let mult: i64 = if digits_end == pos { 1 } else { text[pos..digits_end].parse().unwrap() };
        pos = digits_end;
        let rest = &text[pos..];
        let label_len = rest.find(['+', '-']).unwrap_or(rest.len());
        let label = &rest[..label_len];
        pos += label_len;
        let slot = if label == circle {
            spec.total_rank()
        } else {
            let inner = label
                .strip_prefix("e_{")
                .and_then(|s| s.strip_suffix('}'))
                .unwrap_or_else(|| panic!("bad label {label:?} in {text:?}"));
            let (i, k) = inner.split_once(',').unwrap();
            spec.flatten_index(i.parse().unwrap(), k.parse().unwrap()).unwrap() - 1
        };
        w[slot] += sign * mult;
    }
    w
}

/// Parsed `(weight, coefficient)` list, sorted by weight.
pub fn parse_terms(spec: &TowerSpec, terms: &[(i64, &str)]) -> Vec<(Vec<i64>, i64)> {
    let mut out: Vec<_> = terms.iter().map(|&(c, t)| (parse_exponent(spec, t), c)).collect();
    out.sort();
    out
}
