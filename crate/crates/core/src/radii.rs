//! Validated multiset of prescribed radii with its layer decomposition.

use crate::geom::GeomError;

/// One layer of a radii multiset: a radius value and the input indices
/// carrying it. Layers are ordered by strictly decreasing value.
#[derive(Debug, Clone)]
pub struct Layer {
    pub value: f64,
    pub members: Vec<usize>,
}

impl Layer {
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

/// An input multiset of positive radii measured from the origin.
///
/// Grouping into layers uses exact value equality: callers that want two
/// nearly-equal radii treated as one layer must snap them first.
#[derive(Debug, Clone)]
pub struct RadiiSet {
    values: Vec<f64>,
    layers: Vec<Layer>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RadiiError {
    #[error("radius at index {index} is not a positive finite number")]
    InvalidRadius { index: usize },
    #[error("empty radii set")]
    Empty,
}

impl RadiiSet {
    pub fn new(values: Vec<f64>) -> Result<Self, RadiiError> {
        if values.is_empty() {
            return Err(RadiiError::Empty);
        }
        for (index, v) in values.iter().enumerate() {
            if !(v.is_finite() && *v > 0.0) {
                return Err(RadiiError::InvalidRadius { index });
            }
        }
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
        let mut layers: Vec<Layer> = Vec::new();
        for i in order {
            match layers.last_mut() {
                Some(layer) if layer.value == values[i] => layer.members.push(i),
                _ => layers.push(Layer {
                    value: values[i],
                    members: vec![i],
                }),
            }
        }
        Ok(RadiiSet { values, layers })
    }

    /// Radii in input order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Layers in strictly decreasing value order.
    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    pub fn all_distinct(&self) -> bool {
        self.layers.iter().all(|l| l.multiplicity() == 1)
    }

    pub fn max_multiplicity(&self) -> usize {
        self.layers.iter().map(|l| l.multiplicity()).max().unwrap()
    }

    /// Input indices sorted by strictly descending radius.
    pub fn descending_indices(&self) -> Vec<usize> {
        self.layers
            .iter()
            .flat_map(|l| l.members.iter().copied())
            .collect()
    }
}

impl TryFrom<&[f64]> for RadiiSet {
    type Error = RadiiError;
    fn try_from(values: &[f64]) -> Result<Self, RadiiError> {
        RadiiSet::new(values.to_vec())
    }
}

// Shared by several construction modules.
pub(crate) fn too_few(needed: usize, got: usize) -> GeomError {
    GeomError::TooFewPoints { needed, got }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layers_sorted_and_grouped() {
        let rs = RadiiSet::new(vec![1.0, 3.0, 3.0, 2.0, 1.0]).unwrap();
        let vals: Vec<f64> = rs.layers().iter().map(|l| l.value).collect();
        assert_eq!(vals, vec![3.0, 2.0, 1.0]);
        let mults: Vec<usize> = rs.layers().iter().map(|l| l.multiplicity()).collect();
        assert_eq!(mults, vec![2, 1, 2]);
        assert_eq!(rs.layers()[0].members, vec![1, 2]);
        assert_eq!(rs.max_multiplicity(), 2);
        assert!(!rs.all_distinct());
    }

    #[test]
    fn rejects_nonpositive_and_nonfinite() {
        assert!(RadiiSet::new(vec![1.0, 0.0]).is_err());
        assert!(RadiiSet::new(vec![1.0, -2.0]).is_err());
        assert!(RadiiSet::new(vec![f64::NAN]).is_err());
        assert!(RadiiSet::new(vec![]).is_err());
    }
}
