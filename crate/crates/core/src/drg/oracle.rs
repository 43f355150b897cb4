use super::distance_partition;
use crate::cayley::CayleyGraph;
use crate::error::Result;
use crate::group::GroupAlgebraElement;

/// Decides distance-regularity through the group algebra. With `N_i` the
/// sum of the elements at distance `i` from the identity, the coefficient
/// of `g` in `N_i·N_j` counts vertices at distance `i` from `1` and `j` from
/// `g`. The graph is distance-regular exactly when each product is constant
/// on every class `N_k`, i.e. when the span of the `N_i` is closed.
pub fn distance_module_oracle(x: &CayleyGraph) -> Result<bool> {
    let group = x.group();
    let part = distance_partition(x.graph(), 0)?;
    let class_of = part.distances();
    let d = part.eccentricity();
    let sums: Vec<GroupAlgebraElement> =
        part.layers().iter().map(|l| GroupAlgebraElement::from_indices(group, l.ones())).collect();
    for i in 0..=d {
        for j in 0..=d {
            let p = sums[i].mul(&sums[j], group);
            let mut value: Vec<Option<i64>> = vec![None; d + 1];
            for (g, &k) in class_of.iter().enumerate() {
                match value[k] {
                    None => value[k] = Some(p.coeff(g)),
                    Some(v) if v != p.coeff(g) => return Ok(false),
                    _ => {}
                }
            }
        }
    }
    Ok(true)
}
