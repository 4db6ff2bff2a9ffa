//! Objective functions over triangle profiles.
//!
//! * `f1`: number of distinct triangle-degrees (maximise; `n` iff TD).
//! * `f2`: number of vertex pairs with equal triangle-degree (minimise; `0` iff TD).
//! * `f3`: `sum_{i<n} 1 / (t_i - t_{i+1} + 1/n)` over the profile sorted
//!   descending (minimise; `< n` iff TD).

use crate::graph::TriangleProfile;
use crate::scalar::Scalar;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Maximize,
    Minimize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObjectiveKind {
    F1,
    F2,
    F3,
}

impl ObjectiveKind {
    pub fn direction(self) -> Direction {
        match self {
            ObjectiveKind::F1 => Direction::Maximize,
            ObjectiveKind::F2 | ObjectiveKind::F3 => Direction::Minimize,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ObjectiveKind::F1 => "f1",
            ObjectiveKind::F2 => "f2",
            ObjectiveKind::F3 => "f3",
        }
    }

    pub fn evaluate<S: Scalar>(self, profile: &TriangleProfile) -> Value<S> {
        let mut scratch = Vec::with_capacity(profile.len());
        Value {
            value: evaluate_values(self, profile.values(), &mut scratch),
            direction: self.direction(),
        }
    }

    /// True when `candidate` beats `incumbent` by more than the scalar's
    /// improvement margin in this objective's direction.
    pub fn improves<S: Scalar>(self, candidate: &S, incumbent: &S) -> bool {
        let margin = S::improvement_margin();
        match self.direction() {
            Direction::Maximize => candidate.clone() > incumbent.clone() + margin,
            Direction::Minimize => candidate.clone() < incumbent.clone() - margin,
        }
    }
}

impl fmt::Display for ObjectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObjectiveKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "f1" => Ok(ObjectiveKind::F1),
            "f2" => Ok(ObjectiveKind::F2),
            "f3" => Ok(ObjectiveKind::F3),
            other => Err(format!(
                "unknown objective {other:?}; expected f1, f2 or f3"
            )),
        }
    }
}

/// An objective value tagged with its optimisation direction.
#[derive(Clone, Debug, PartialEq)]
pub struct Value<S> {
    pub value: S,
    pub direction: Direction,
}

/// Evaluates an objective on raw triangle-degrees, reusing `scratch` for the
/// sorted copy. This is the hot path of neighbourhood evaluation.
pub fn evaluate_values<S: Scalar>(kind: ObjectiveKind, t: &[u32], scratch: &mut Vec<u32>) -> S {
    scratch.clear();
    scratch.extend_from_slice(t);
    scratch.sort_unstable_by(|a, b| b.cmp(a));
    match kind {
        ObjectiveKind::F1 => S::from_count(runs(scratch).count() as u64),
        ObjectiveKind::F2 => S::from_count(runs(scratch).map(|k| k * (k - 1) / 2).sum()),
        ObjectiveKind::F3 => gap_penalty(scratch),
    }
}

/// Lengths of maximal runs of equal values in a sorted slice.
fn runs(sorted: &[u32]) -> impl Iterator<Item = u64> + '_ {
    sorted.chunk_by(|a, b| a == b).map(|c| c.len() as u64)
}

fn gap_penalty<S: Scalar>(sorted_desc: &[u32]) -> S {
    let n = sorted_desc.len() as u64;
    // 1 / (g + 1/n) == n / (g*n + 1)
    sorted_desc.windows(2).fold(S::zero(), |acc, w| {
        let gap = u64::from(w[0] - w[1]);
        acc + S::from_ratio(n, gap * n + 1)
    })
}

/// Number of distinct triangle-degrees.
pub fn f1(profile: &TriangleProfile) -> usize {
    let mut s = profile.sorted_desc();
    s.dedup();
    s.len()
}

/// Number of unordered vertex pairs with equal triangle-degree.
pub fn f2(profile: &TriangleProfile) -> u64 {
    runs(&profile.sorted_desc()).map(|k| k * (k - 1) / 2).sum()
}

/// Gap-penalty objective in an arbitrary scalar. Requires `n >= 2` to be
/// meaningful; smaller profiles evaluate to zero.
pub fn f3_in<S: Scalar>(profile: &TriangleProfile) -> S {
    gap_penalty(&profile.sorted_desc())
}

/// Gap-penalty objective in double precision.
pub fn f3(profile: &TriangleProfile) -> f64 {
    let n = profile.len() as f64;
    profile
        .sorted_desc()
        .windows(2)
        .map(|w| 1.0 / (f64::from(w[0] - w[1]) + 1.0 / n))
        .sum()
}

pub fn is_triangle_distinct(profile: &TriangleProfile) -> bool {
    f2(profile) == 0
}

/// `C(r, 2) >= n - 1`: an `r`-regular TD graph on `n` vertices needs `n`
/// distinct values in `0..=C(r, 2)`.
pub fn check_necessary_condition(n: usize, r: usize) -> bool {
    r * r.saturating_sub(1) / 2 + 1 >= n
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(v: &[u32]) -> TriangleProfile {
        TriangleProfile::new(v.to_vec())
    }

    #[test]
    fn f1_values() {
        assert_eq!(f1(&p(&[3, 3, 3, 3])), 1);
        assert_eq!(f1(&p(&[0, 0, 1])), 2);
    }

    #[test]
    fn f2_values() {
        assert_eq!(f2(&p(&[3, 3, 3, 3])), 6);
        // pairs among {5,5,5}: 3, among {7,7}: 1
        assert_eq!(f2(&p(&[5, 5, 5, 7, 7])), 4);
        assert_eq!(f2(&p(&[1, 2, 3])), 0);
    }

    #[test]
    fn f3_all_equal_profile() {
        assert_eq!(f3(&p(&[3, 3, 3, 3])), 12.0);
        let exact: BigRational = f3_in(&p(&[3, 3, 3, 3]));
        assert_eq!(exact, BigRational::from_integer(12.into()));
    }

    #[test]
    fn f3_unit_gaps() {
        let prof = p(&(10..=30).collect::<Vec<_>>());
        assert!((f3(&prof) - 420.0 / 22.0).abs() < 1e-9);
        let exact: BigRational = f3_in(&prof);
        assert_eq!(exact, BigRational::new(420.into(), 22.into()));
        let single: f32 = f3_in(&prof);
        assert!((f64::from(single) - 420.0 / 22.0).abs() < 1e-4);
    }

    #[test]
    fn generic_and_float_paths_agree() {
        let prof = p(&[9, 1, 4, 4, 0, 17, 2]);
        let generic: f64 = f3_in(&prof);
        assert!((generic - f3(&prof)).abs() < 1e-12);
    }

    #[test]
    fn necessary_condition() {
        assert!(check_necessary_condition(21, 10));
        assert!(!check_necessary_condition(21, 5));
        assert!(check_necessary_condition(7, 4));
        assert!(!check_necessary_condition(8, 4));
    }

    #[test]
    fn improvement_respects_direction() {
        let k = ObjectiveKind::F1;
        assert!(k.improves(&5.0, &4.0));
        assert!(!k.improves(&4.0, &4.0));
        assert!(ObjectiveKind::F3.improves(&1.0, &1.5));
        assert!(!ObjectiveKind::F3.improves(&(1.0 - 1e-12), &1.0));
        assert_eq!("F3".parse::<ObjectiveKind>(), Ok(ObjectiveKind::F3));
        assert!("f4".parse::<ObjectiveKind>().is_err());
    }

    #[test]
    fn value_carries_direction() {
        let v: Value<f64> = ObjectiveKind::F2.evaluate(&p(&[1, 1, 2]));
        assert_eq!(
            v,
            Value {
                value: 1.0,
                direction: Direction::Minimize
            }
        );
    }
}
