//! Per-tetrahedron classification reports and the enumeration table.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    is_clean_bruteforce, is_empty_bruteforce, parallelepiped_interior_points, volume6, Tetrahedron, MAX_INTERIOR_LIST_C,
};
use crate::normalize::{canonicalize, NormalizationResult};
use crate::whitefn::{is_clean_canonical, white_clauses, white_empty, CanonicalForm, WhiteClause};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest magnitude that survives a round trip through an IEEE double.
pub const JSON_SAFE_MAX: i64 = (1 << 53) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl From<CanonicalForm> for FormJson {
    fn from(f: CanonicalForm) -> Self {
        FormJson { a: f.a, b: f.b, c: f.c, d: f.d }
    }
}

/// Row-major matrix and translation of an affine map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub matrix: [[i64; 3]; 3],
    pub translation: [i64; 3],
}

impl From<&NormalizationResult> for MapJson {
    fn from(r: &NormalizationResult) -> Self {
        MapJson { matrix: r.map.matrix().rows, translation: r.map.translation().to_array() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    pub empty: bool,
    pub clean: bool,
    pub agrees: bool,
}

/// Plane containing the interior points of `P_{a,b,c}` for an empty form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PlaneTag {
    #[serde(rename = "x=1")]
    X,
    #[serde(rename = "y=1")]
    Y,
    #[serde(rename = "x+y-z=1")]
    XPlusYMinusZ,
    #[serde(rename = "c=1")]
    UnitVolume,
}

impl PlaneTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            PlaneTag::X => "x=1",
            PlaneTag::Y => "y=1",
            PlaneTag::XPlusYMinusZ => "x+y-z=1",
            PlaneTag::UnitVolume => "c=1",
        }
    }
}

fn plane_tags(cf: &CanonicalForm) -> Vec<PlaneTag> {
    white_clauses(cf)
        .into_iter()
        .map(|c| match c {
            WhiteClause::AIsOne => PlaneTag::X,
            WhiteClause::BIsOne => PlaneTag::Y,
            WhiteClause::CIsOne => PlaneTag::UnitVolume,
            WhiteClause::DIsOne => PlaneTag::XPlusYMinusZ,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub schema_version: u32,
    pub vertices: [[i64; 3]; 4],
    pub volume6: i64,
    pub clean: bool,
    pub empty: bool,
    pub canonical_form: Option<FormJson>,
    pub map: Option<MapJson>,
    pub interior_points: Option<Vec<[i64; 3]>>,
    pub planes: Option<Vec<PlaneTag>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<OracleJson>,
}

impl ClassificationReport {
    /// False only when an oracle cross-check ran and disagreed.
    pub fn consistent(&self) -> bool {
        self.oracle.is_none_or(|o| o.agrees)
    }
}

/// Fails when any integer in the report would lose precision as a JSON number.
pub fn ensure_json_safe<'a>(values: impl IntoIterator<Item = &'a i64>) -> Result<()> {
    for &v in values {
        if !(-JSON_SAFE_MAX..=JSON_SAFE_MAX).contains(&v) {
            return Err(Error::Precondition(format!("value {v} exceeds the JSON-safe range 2^53")));
        }
    }
    Ok(())
}

/// Classifies `t` with the fast criteria; `oracle` adds a brute-force scan.
///
/// Cleanness and emptiness are invariant under the witnessing map, so they are
/// read off the canonical form. A tetrahedron with no primitive edge pair
/// cannot be clean.
pub fn classify(t: &Tetrahedron, oracle: bool) -> Result<ClassificationReport> {
    let vol = volume6(t)?;
    let norm = match canonicalize(t) {
        Ok(r) => Some(r),
        Err(Error::NotNormalizable) => None,
        Err(e) => return Err(e),
    };
    let (clean, empty) = match &norm {
        Some(r) => (is_clean_canonical(&r.form), white_empty(&r.form)),
        None => (false, false),
    };
    let (interior_points, planes) = match &norm {
        Some(r) if empty => {
            let f = r.form;
            // listing is skipped above the size limit; the plane tags still apply
            let pts = if f.c <= MAX_INTERIOR_LIST_C {
                Some(parallelepiped_interior_points(f.a, f.b, f.c)?.into_iter().map(|p| p.to_array()).collect())
            } else {
                None
            };
            (pts, Some(plane_tags(&f)))
        }
        _ => (None, None),
    };
    let oracle = if oracle {
        let (oe, oc) = (is_empty_bruteforce(t)?, is_clean_bruteforce(t)?);
        Some(OracleJson { empty: oe, clean: oc, agrees: oe == empty && oc == clean })
    } else {
        None
    };
    let report = ClassificationReport {
        schema_version: SCHEMA_VERSION,
        vertices: t.vertices().map(|v| v.to_array()),
        volume6: vol,
        clean,
        empty,
        canonical_form: norm.map(|r| r.form.into()),
        map: norm.as_ref().map(MapJson::from),
        interior_points,
        planes,
        oracle,
    };
    let mut all: Vec<i64> = report.vertices.iter().flatten().copied().collect();
    all.push(report.volume6);
    if let Some(m) = &report.map {
        all.extend(m.matrix.iter().flatten());
        all.extend(m.translation);
    }
    ensure_json_safe(&all)?;
    Ok(report)
}

/// One row of the enumeration table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationRow {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub clauses: Vec<WhiteClause>,
}

/// All `(a, b)` with `T_{a,b,c}` empty, in lexicographic order.
pub fn enumerate_empty(c: i64) -> Result<Vec<EnumerationRow>> {
    if c < 1 {
        return Err(Error::Precondition(format!("c must be at least 1, got {c}")));
    }
    let mut rows = Vec::new();
    for a in 0..c {
        for b in 0..c {
            let f = CanonicalForm::new(a, b, c)?;
            if white_empty(&f) {
                rows.push(EnumerationRow { a, b, c, d: f.d, clauses: white_clauses(&f) });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_tetrahedron;

    #[test]
    fn classify_motivating_example() {
        let t = parse_tetrahedron("0 0 0 1 0 0 0 1 0 1 1 5").unwrap();
        let r = classify(&t, true).unwrap();
        assert!(r.empty && r.clean && r.consistent());
        assert_eq!(r.volume6, 5);
        let f = r.canonical_form.unwrap();
        assert_eq!((f.a, f.b, f.c), (1, 1, 5));
        assert_eq!(r.interior_points.as_ref().unwrap().len(), 4);
        assert_eq!(r.planes, Some(vec![PlaneTag::X, PlaneTag::Y]));
    }

    #[test]
    fn classify_clean_nonempty() {
        let t = parse_tetrahedron("0 0 0 1 0 0 0 1 0 2 3 7").unwrap();
        let r = classify(&t, true).unwrap();
        assert!(r.clean && !r.empty && r.consistent());
        assert!(r.interior_points.is_none() && r.planes.is_none());
    }

    #[test]
    fn classify_unnormalizable() {
        let t = parse_tetrahedron("0 0 0 2 0 0 0 2 0 0 0 2").unwrap();
        let r = classify(&t, true).unwrap();
        assert!(!r.clean && !r.empty && r.consistent());
        assert!(r.canonical_form.is_none() && r.map.is_none());
    }

    #[test]
    fn classify_agrees_with_oracle_on_small_boxes() {
        // every nondegenerate tetrahedron with origin, e1 and two more vertices in [-1,2]^3
        let r = -1..=2i64;
        let pts: Vec<[i64; 3]> = r
            .clone()
            .flat_map(|x| r.clone().flat_map(move |y| (-1..=2).map(move |z| [x, y, z])))
            .collect();
        let mut n = 0;
        for (i, p) in pts.iter().enumerate().step_by(3) {
            for q in pts.iter().skip(i + 1).step_by(5) {
                let text = format!("0 0 0 1 0 0 {} {} {} {} {} {}", p[0], p[1], p[2], q[0], q[1], q[2]);
                let Ok(t) = parse_tetrahedron(&text) else { continue };
                let rep = classify(&t, true).unwrap();
                assert!(rep.consistent(), "{text}: {rep:?}");
                n += 1;
            }
        }
        assert!(n > 50);
    }

    #[test]
    fn enumeration_examples() {
        let pairs = |c| enumerate_empty(c).unwrap().into_iter().map(|r| (r.a, r.b)).collect::<Vec<_>>();
        assert_eq!(pairs(1), vec![(0, 0)]);
        assert_eq!(pairs(2), vec![(1, 1)]);
        assert_eq!(pairs(3), vec![(1, 1), (1, 2), (2, 1)]);
        assert!(enumerate_empty(0).is_err());
    }

    #[test]
    fn huge_empty_tetrahedron_skips_listing() {
        let t = Tetrahedron::standard(1, 1, MAX_INTERIOR_LIST_C + 1).unwrap();
        let r = classify(&t, false).unwrap();
        assert!(r.empty);
        assert!(r.interior_points.is_none());
        assert_eq!(r.planes, Some(vec![PlaneTag::X, PlaneTag::Y]));
    }

    #[test]
    fn overflowing_coordinates_error_cleanly() {
        let big = i64::MAX / 2;
        let text = format!("0 0 0 {big} 0 0 0 {big} 0 0 0 {big}");
        assert!(matches!(parse_tetrahedron(&text), Err(Error::Overflow(_))));
        let text = format!("0 0 0 1 0 0 0 1 0 {big} {big} 3");
        let t = parse_tetrahedron(&text).unwrap();
        // the shear in the witnessing map is too large to report
        assert!(classify(&t, false).is_err());

        let t = parse_tetrahedron("0 0 0 1 0 0 0 1 0 1000000 1000001 3").unwrap();
        let r = classify(&t, false).unwrap();
        assert_eq!(r.volume6, 3);
        assert!(r.empty);
    }

    #[test]
    fn json_safe_bound() {
        assert!(ensure_json_safe(&[JSON_SAFE_MAX, -JSON_SAFE_MAX]).is_ok());
        assert!(ensure_json_safe(&[JSON_SAFE_MAX + 1]).is_err());
    }
}
