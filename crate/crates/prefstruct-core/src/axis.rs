use crate::{is_permutation, ProfileError};

/// A left-to-right arrangement of the alternatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Axis {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl Axis {
    pub fn new(order: Vec<usize>) -> Result<Self, ProfileError> {
        if !is_permutation(&order, order.len()) {
            return Err(ProfileError::BadOrdering { len: order.len() });
        }
        let mut pos = vec![0; order.len()];
        for (k, &a) in order.iter().enumerate() {
            pos[a] = k;
        }
        Ok(Axis { order, pos })
    }

    /// The axis `0, 1, ..., m - 1`.
    pub fn identity(m: usize) -> Self {
        Axis { order: (0..m).collect(), pos: (0..m).collect() }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Index of `a` counted from the left end.
    #[inline]
    pub fn position(&self, a: usize) -> usize {
        self.pos[a]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn reversed(&self) -> Axis {
        let mut order = self.order.clone();
        order.reverse();
        Axis::new(order).expect("reversal keeps a permutation")
    }

    /// The axis restricted to `keep`, with ids renumbered by `mapping`
    /// (new id `j` is old id `mapping[j]`).
    pub fn restricted(&self, mapping: &[usize]) -> Axis {
        let mut new_id = vec![usize::MAX; self.order.len()];
        for (j, &a) in mapping.iter().enumerate() {
            new_id[a] = j;
        }
        let order = self.order.iter().filter(|&&a| new_id[a] != usize::MAX).map(|&a| new_id[a]).collect();
        Axis::new(order).expect("restriction of a permutation")
    }
}

/// A rearrangement of the voters, `order[j]` being the voter placed at `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VoterOrdering {
    order: Vec<usize>,
}

impl VoterOrdering {
    pub fn new(order: Vec<usize>) -> Result<Self, ProfileError> {
        if !is_permutation(&order, order.len()) {
            return Err(ProfileError::BadOrdering { len: order.len() });
        }
        Ok(VoterOrdering { order })
    }

    pub fn identity(n: usize) -> Self {
        VoterOrdering { order: (0..n).collect() }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn reversed(&self) -> VoterOrdering {
        let mut order = self.order.clone();
        order.reverse();
        VoterOrdering { order }
    }
}
