use crate::{CompactError, Result};
use dpmetric::PNorm;
use levelset::FuzzySet;

/// A finite ordered collection of fuzzy sets sharing one dimension and one
/// exponent; the unit of every diagnostic. Order matters: sequence-style
/// operations read members as a sampled sequence.
#[derive(Debug, Clone)]
pub struct Family {
    members: Vec<FuzzySet>,
    ids: Vec<String>,
    p: PNorm,
}

impl Family {
    pub fn new(members: Vec<FuzzySet>, ids: Vec<String>, p: PNorm) -> Result<Self> {
        if members.is_empty() {
            return Err(CompactError::EmptyFamily);
        }
        let dim = members[0].dim();
        if members.iter().any(|m| m.dim() != dim) {
            return Err(CompactError::MixedDims);
        }
        let ids = if ids.len() == members.len() {
            ids
        } else {
            (0..members.len()).map(|i| i.to_string()).collect()
        };
        Ok(Family { members, ids, p })
    }

    pub fn with_default_ids(members: Vec<FuzzySet>, p: PNorm) -> Result<Self> {
        Family::new(members, Vec::new(), p)
    }

    pub fn members(&self) -> &[FuzzySet] {
        &self.members
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn p(&self) -> PNorm {
        self.p
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.members[0].dim()
    }

    pub fn to_json(&self) -> String {
        levelset::family_to_json(self.p.get(), &self.ids, &self.members)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let (p, ids, members) = levelset::family_from_json(text)?;
        let p = PNorm::new(p).map_err(CompactError::Metric)?;
        Family::new(members, ids, p)
    }
}
