use crate::base::{Grouping, RngStream};
use crate::error::{Error, Result};

/// Shuffles `0..dimension` and cuts it into `groups` contiguous chunks whose
/// sizes differ by at most one. The first `dimension % groups` chunks get the
/// extra element.
pub fn random_grouping(dimension: usize, groups: usize, rng: &mut RngStream) -> Result<Grouping> {
    if groups == 0 || groups > dimension {
        return Err(Error::InvalidGroupCount { groups, dimension });
    }
    let mut order: Vec<usize> = (0..dimension).collect();
    rng.shuffle(&mut order);
    let base = dimension / groups;
    let extra = dimension % groups;
    let mut chunks = Vec::with_capacity(groups);
    let mut start = 0;
    for g in 0..groups {
        let len = base + usize::from(g < extra);
        chunks.push(order[start..start + len].to_vec());
        start += len;
    }
    Grouping::new(chunks, dimension)
}

/// Strategy for splitting the dimensions into sub-problems.
pub trait Decomposer {
    fn decompose(&mut self, dimension: usize, groups: usize, rng: &mut RngStream) -> Result<Grouping>;
}

/// Uniform random grouping, redrawn on every call.
#[derive(Debug, Clone, Copy, Default)]
pub struct RandomGrouping;

impl Decomposer for RandomGrouping {
    fn decompose(&mut self, dimension: usize, groups: usize, rng: &mut RngStream) -> Result<Grouping> {
        random_grouping(dimension, groups, rng)
    }
}

/// Always returns the same user-supplied partition.
#[derive(Debug, Clone)]
pub struct FixedGrouping(pub Grouping);

impl Decomposer for FixedGrouping {
    fn decompose(&mut self, dimension: usize, groups: usize, _rng: &mut RngStream) -> Result<Grouping> {
        if self.0.dimension() != dimension || self.0.len() != groups {
            return Err(Error::InvalidGroupCount { groups, dimension });
        }
        Ok(self.0.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn even_split() {
        let mut rng = RngStream::new(1, "g", 0);
        let g = random_grouping(6, 3, &mut rng).unwrap();
        assert!(g.groups().iter().all(|c| c.len() == 2));
    }

    #[test]
    fn remainder_split() {
        let mut rng = RngStream::new(1, "g", 0);
        let g = random_grouping(7, 3, &mut rng).unwrap();
        let mut sizes: Vec<usize> = g.groups().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 3]);
    }

    #[test]
    fn too_many_groups() {
        let mut rng = RngStream::new(1, "g", 0);
        assert!(matches!(
            random_grouping(4, 5, &mut rng),
            Err(Error::InvalidGroupCount { groups: 5, dimension: 4 })
        ));
        assert!(random_grouping(4, 0, &mut rng).is_err());
    }

    proptest! {
        #[test]
        fn balanced_partition(d in 1usize..200, m_raw in 1usize..200, seed in any::<u64>()) {
            let m = 1 + (m_raw - 1) % d;
            let mut rng = RngStream::new(seed, "g", 0);
            let g = random_grouping(d, m, &mut rng).unwrap();
            prop_assert_eq!(g.len(), m);
            let sizes: Vec<usize> = g.groups().iter().map(Vec::len).collect();
            let lo = *sizes.iter().min().unwrap();
            let hi = *sizes.iter().max().unwrap();
            prop_assert!(hi - lo <= 1);
            let mut all: Vec<usize> = g.groups().concat();
            all.sort_unstable();
            prop_assert_eq!(all, (0..d).collect::<Vec<_>>());
        }
    }
}
