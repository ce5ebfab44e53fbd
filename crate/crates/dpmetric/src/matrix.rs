use crate::{dp_distance, PNorm, Result};
use levelset::FuzzySet;

/// Pairwise distance matrix of a family. Rows are computed concurrently
/// and written into preassigned slots, so the result is bitwise identical
/// to the sequential evaluation.
pub fn distance_matrix(members: &[FuzzySet], p: PNorm) -> Result<Vec<Vec<f64>>> {
    let n = members.len();
    let threads = std::thread::available_parallelism()
        .map(|t| t.get())
        .unwrap_or(1)
        .min(n.max(1));

    let mut rows: Vec<Result<Vec<f64>>> = (0..n).map(|_| Ok(Vec::new())).collect();
    if n == 0 {
        return Ok(Vec::new());
    }

    std::thread::scope(|scope| {
        let chunk = n.div_ceil(threads);
        for (t, slot) in rows.chunks_mut(chunk).enumerate() {
            let start = t * chunk;
            scope.spawn(move || {
                for (off, out) in slot.iter_mut().enumerate() {
                    let i = start + off;
                    let mut row = Vec::with_capacity(n);
                    for j in 0..n {
                        if i == j {
                            row.push(0.0);
                            continue;
                        }
                        match dp_distance(&members[i], &members[j], p) {
                            Ok(d) => row.push(d),
                            Err(e) => {
                                *out = Err(e);
                                return;
                            }
                        }
                    }
                    *out = Ok(row);
                }
            });
        }
    });

    rows.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use setgeom::CutSet;

    #[test]
    fn matrix_is_symmetric_with_zero_diagonal() {
        let members: Vec<FuzzySet> = (0..7)
            .map(|i| FuzzySet::crisp(CutSet::point_1d(i as f64).unwrap()))
            .collect();
        let m = distance_matrix(&members, PNorm::new(1.0).unwrap()).unwrap();
        for i in 0..7 {
            assert_eq!(m[i][i], 0.0);
            for j in 0..7 {
                assert_eq!(m[i][j], m[j][i]);
                assert_eq!(m[i][j], (i as f64 - j as f64).abs());
            }
        }
    }
}
