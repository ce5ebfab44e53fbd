use crate::{CompactError, Family, Result};
use dpmetric::dp_distance;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Assignment {
    pub member: usize,
    pub center: usize,
    pub distance: f64,
}

/// A greedy epsilon-net: the chosen representatives are members of the
/// family (a finite epsilon-approximation from inside), every member is
/// assigned to a center strictly closer than `radius`.
#[derive(Debug, Clone, Serialize)]
pub struct NetResult {
    pub center_ids: Vec<usize>,
    pub radius: f64,
    pub assignments: Vec<Assignment>,
}

/// Greedy farthest-point construction: start at member 0, repeatedly add
/// the member farthest from the chosen centers until the farthest distance
/// drops below `eps`. Ties break toward the lowest index, so the result is
/// deterministic. Always terminates on finite families.
pub fn epsilon_net(family: &Family, eps: f64) -> Result<NetResult> {
    if !(eps > 0.0) {
        return Err(CompactError::BadEpsilon(eps));
    }
    let n = family.len();
    let p = family.p();
    let members = family.members();

    let mut centers = vec![0usize];
    // distance of each member to its nearest chosen center
    let mut best_dist: Vec<f64> = Vec::with_capacity(n);
    let mut best_center: Vec<usize> = vec![0; n];
    for m in members {
        best_dist.push(dp_distance(m, &members[0], p)?);
    }

    loop {
        let mut far = 0usize;
        for i in 1..n {
            if best_dist[i] > best_dist[far] {
                far = i;
            }
        }
        if best_dist[far] < eps {
            break;
        }
        centers.push(far);
        for i in 0..n {
            let d = dp_distance(&members[i], &members[far], p)?;
            if d < best_dist[i] {
                best_dist[i] = d;
                best_center[i] = far;
            }
        }
    }

    let assignments = (0..n)
        .map(|i| Assignment {
            member: i,
            center: best_center[i],
            distance: best_dist[i],
        })
        .collect();
    Ok(NetResult {
        center_ids: centers,
        radius: eps,
        assignments,
    })
}
