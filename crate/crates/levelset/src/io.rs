//! The fuzzy-set file format.
//!
//! ```json
//! {"dim": 1, "support": "bounded",
//!  "levels": [{"alpha": 0.5, "intervals": [[0.0, 2.0]]},
//!             {"alpha": 1.0, "intervals": [[0.0, 1.0]]}]}
//! ```
//!
//! Levels are sorted ascending by `alpha` and the last alpha is exactly 1.
//! 2-d levels carry `"polygon": [[x, y], ...]`; the extra `"points"` body
//! serializes point-cloud cuts, which the polygon/interval forms cannot
//! express. Families are `{"p": .., "ids": [..], "members": [..]}`.

use crate::{AlphaGrid, FuzzySet, LevelError, Result, SupportKind};
use serde::{Deserialize, Serialize};
use setgeom::{CutSet, Interval};

#[derive(Debug, Serialize, Deserialize)]
struct FileFuzzy {
    dim: u8,
    support: String,
    levels: Vec<FileLevel>,
}

#[derive(Debug, Serialize, Deserialize)]
struct FileLevel {
    alpha: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    intervals: Option<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    polygon: Option<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    points: Option<Vec<[f64; 2]>>,
}

/// On-disk family: shared exponent, ids, members.
#[derive(Debug, Serialize, Deserialize)]
pub struct FamilyFile {
    pub p: f64,
    pub ids: Vec<String>,
    pub members: Vec<serde_json::Value>,
}

fn cut_to_level(alpha: f64, cut: &CutSet) -> FileLevel {
    match cut {
        CutSet::Intervals(parts) => FileLevel {
            alpha,
            intervals: Some(parts.iter().map(|iv| [iv.lo, iv.hi]).collect()),
            polygon: None,
            points: None,
        },
        CutSet::Polygon(poly) => FileLevel {
            alpha,
            intervals: None,
            polygon: Some(poly.vertices().to_vec()),
            points: None,
        },
        CutSet::Points(pts) => FileLevel {
            alpha,
            intervals: None,
            polygon: None,
            points: Some(pts.clone()),
        },
    }
}

fn level_to_cut(level: &FileLevel, dim: u8) -> Result<CutSet> {
    let empty = |v: &Option<Vec<[f64; 2]>>| v.as_ref().map(|x| x.is_empty()).unwrap_or(false);
    if empty(&level.intervals) || empty(&level.polygon) || empty(&level.points) {
        return Err(if level.alpha == 1.0 {
            LevelError::EmptyTopCut
        } else {
            LevelError::EmptyCut(level.alpha)
        });
    }
    match (dim, &level.intervals, &level.polygon, &level.points) {
        (1, Some(parts), None, None) => {
            let ivs = parts
                .iter()
                .map(|&[lo, hi]| Interval::new(lo, hi))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            Ok(CutSet::intervals(ivs)?)
        }
        (2, None, Some(vs), None) => Ok(CutSet::polygon(vs.clone())?),
        (2, None, None, Some(pts)) => Ok(CutSet::points(pts.clone())?),
        _ => Err(LevelError::Parse(format!(
            "level alpha={}: body does not match dim {}",
            level.alpha, dim
        ))),
    }
}

pub fn to_json(u: &FuzzySet) -> String {
    let file = FileFuzzy {
        dim: u.dim() as u8,
        support: match u.support_kind() {
            SupportKind::Bounded => "bounded".into(),
            SupportKind::LpTail => "lp_tail".into(),
        },
        levels: u
            .grid()
            .levels()
            .iter()
            .zip(u.cuts())
            .map(|(&a, c)| cut_to_level(a, c))
            .collect(),
    };
    serde_json::to_string(&file).expect("fuzzy sets serialize")
}

pub fn from_json(text: &str) -> Result<FuzzySet> {
    let file: FileFuzzy =
        serde_json::from_str(text).map_err(|e| LevelError::Parse(e.to_string()))?;
    fuzzy_from_file(file)
}

fn fuzzy_from_file(file: FileFuzzy) -> Result<FuzzySet> {
    if file.dim != 1 && file.dim != 2 {
        return Err(LevelError::Parse(format!("dim must be 1 or 2, got {}", file.dim)));
    }
    let support = match file.support.as_str() {
        "bounded" => SupportKind::Bounded,
        "lp_tail" => SupportKind::LpTail,
        other => {
            return Err(LevelError::Parse(format!(
                "support must be \"bounded\" or \"lp_tail\", got {other:?}"
            )))
        }
    };
    if file.levels.is_empty() {
        return Err(LevelError::EmptyTopCut);
    }
    let alphas: Vec<f64> = file.levels.iter().map(|l| l.alpha).collect();
    let grid = AlphaGrid::new(alphas)?;
    // surface an empty top body as the dedicated error before cut parsing
    let cuts = file
        .levels
        .iter()
        .map(|l| level_to_cut(l, file.dim))
        .collect::<Result<Vec<_>>>()?;
    FuzzySet::new(grid, cuts, support)
}

pub fn family_to_json(p: f64, ids: &[String], members: &[FuzzySet]) -> String {
    let file = FamilyFile {
        p,
        ids: ids.to_vec(),
        members: members
            .iter()
            .map(|m| serde_json::from_str(&to_json(m)).expect("round-trip"))
            .collect(),
    };
    serde_json::to_string(&file).expect("families serialize")
}

pub fn family_from_json(text: &str) -> Result<(f64, Vec<String>, Vec<FuzzySet>)> {
    let file: FamilyFile =
        serde_json::from_str(text).map_err(|e| LevelError::Parse(e.to_string()))?;
    let members = file
        .members
        .iter()
        .map(|v| {
            let f: FileFuzzy = serde_json::from_value(v.clone())
                .map_err(|e| LevelError::Parse(e.to_string()))?;
            fuzzy_from_file(f)
        })
        .collect::<Result<Vec<_>>>()?;
    let ids = if file.ids.len() == members.len() {
        file.ids
    } else {
        (0..members.len()).map(|i| i.to_string()).collect()
    };
    Ok((file.p, ids, members))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> FuzzySet {
        let grid = AlphaGrid::new(vec![0.5, 1.0]).unwrap();
        FuzzySet::new(
            grid,
            vec![
                CutSet::interval(0.0, 2.0).unwrap(),
                CutSet::interval(0.0, 1.0).unwrap(),
            ],
            SupportKind::Bounded,
        )
        .unwrap()
    }

    #[test]
    fn round_trip() {
        let u = sample();
        let text = to_json(&u);
        assert!(text.starts_with("{\"dim\":1,\"support\":\"bounded\",\"levels\":[{\"alpha\":0.5"));
        let v = from_json(&text).unwrap();
        assert_eq!(u, v);
    }

    #[test]
    fn empty_top_cut_is_reported() {
        let text = r#"{"dim":1,"support":"bounded","levels":[
            {"alpha":0.5,"intervals":[[0.0,1.0]]},
            {"alpha":1.0,"intervals":[]}]}"#;
        assert_eq!(from_json(text), Err(LevelError::EmptyTopCut));
    }

    #[test]
    fn reversed_nesting_fails_validation() {
        let text = r#"{"dim":1,"support":"bounded","levels":[
            {"alpha":0.5,"intervals":[[0.0,1.0]]},
            {"alpha":1.0,"intervals":[[0.0,2.0]]}]}"#;
        assert!(matches!(
            from_json(text),
            Err(LevelError::NestednessViolation { .. })
        ));
    }

    #[test]
    fn unrepresentable_support_kinds_are_rejected() {
        // only compact support and the L_p-tail relaxation have a finite
        // representation; anything else is refused
        let text = r#"{"dim":1,"support":"gb","levels":[
            {"alpha":1.0,"intervals":[[0.0,1.0]]}]}"#;
        assert!(matches!(from_json(text), Err(LevelError::Parse(_))));
    }

    #[test]
    fn unsorted_levels_fail() {
        let text = r#"{"dim":1,"support":"bounded","levels":[
            {"alpha":1.0,"intervals":[[0.0,1.0]]},
            {"alpha":0.5,"intervals":[[0.0,2.0]]}]}"#;
        assert!(matches!(from_json(text), Err(LevelError::BadGrid(_))));
    }

    #[test]
    fn polygon_round_trip() {
        let grid = AlphaGrid::new(vec![1.0]).unwrap();
        let u = FuzzySet::new(
            grid,
            vec![CutSet::polygon(vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap()],
            SupportKind::Bounded,
        )
        .unwrap();
        let v = from_json(&to_json(&u)).unwrap();
        assert_eq!(u, v);
    }

    #[test]
    fn family_round_trip() {
        let u = sample();
        let text = family_to_json(2.0, &["a".into()], std::slice::from_ref(&u));
        let (p, ids, members) = family_from_json(&text).unwrap();
        assert_eq!(p, 2.0);
        assert_eq!(ids, vec!["a".to_string()]);
        assert_eq!(members, vec![u]);
    }
}
