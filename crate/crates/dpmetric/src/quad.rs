/// Union of two ascending level lists, deduplicated by exact value. Both
/// inputs end at 1, so the merge does too.
pub fn merge_levels(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x < y => {
                i += 1;
                x
            }
            (Some(&x), Some(&y)) if x > y => {
                j += 1;
                y
            }
            (Some(&x), Some(_)) => {
                i += 1;
                j += 1;
                x
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (None, Some(&y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        out.push(next);
    }
    out
}

/// Trapezoid node weights for ascending `nodes`.
///
/// With `floor_mass` the segment `(0, nodes[0]]` is attached to the first
/// node (the step convention holds cuts constant below the grid floor).
/// Without it the quadrature covers `[nodes[0], nodes.last()]` only, as the
/// modulus integral does.
pub fn trapezoid_weights(nodes: &[f64], floor_mass: bool) -> Vec<f64> {
    let n = nodes.len();
    let mut w = vec![0.0; n];
    if floor_mass {
        w[0] = nodes[0];
    }
    for j in 1..n {
        let half = (nodes[j] - nodes[j - 1]) / 2.0;
        w[j - 1] += half;
        w[j] += half;
    }
    w
}

/// `(sum w_j x_j^p)^(1/p)` without intermediate allocation.
pub(crate) fn weighted_lp(values: &[f64], weights: &[f64], p: f64) -> f64 {
    let mut acc = 0.0;
    for (v, w) in values.iter().zip(weights) {
        acc += w * v.powf(p);
    }
    acc.powf(1.0 / p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_dedups() {
        let m = merge_levels(&[0.25, 0.5, 1.0], &[0.5, 0.75, 1.0]);
        assert_eq!(m, vec![0.25, 0.5, 0.75, 1.0]);
    }

    #[test]
    fn weights_partition_unit_mass() {
        let nodes = [0.1, 0.4, 1.0];
        let w = trapezoid_weights(&nodes, true);
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        let w2 = trapezoid_weights(&nodes, false);
        assert!((w2.iter().sum::<f64>() - 0.9).abs() < 1e-15);
    }
}
