use serde::{Deserialize, Serialize};

use super::PosetError;

/// Largest poset representable; element sets are stored as `u128` masks.
pub const MAX_ELEMENTS: usize = 128;

/// A finite poset on elements `0..len()` with string labels.
///
/// The poset keeps the relations it was presented with. Removing one of them
/// (see [`FinitePoset::remove_cover`]) restores relations it had made
/// redundant. Strict up- and down-closures are cached as bitmasks and the
/// cover list is always the transitive reduction. Equality compares labels
/// and covers only.
#[derive(Debug, Clone)]
pub struct FinitePoset {
    labels: Vec<String>,
    relations: Vec<(usize, usize)>,
    above: Vec<u128>,
    below: Vec<u128>,
    covers: Vec<(usize, usize)>,
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.covers == other.covers
    }
}

impl Eq for FinitePoset {}

/// JSON form: covers are index pairs into `elements`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<(usize, usize)>,
}

impl FinitePoset {
    /// Builds a poset from arbitrary (not necessarily covering) relations `a < b`.
    pub fn from_relations(
        labels: Vec<String>,
        relations: &[(usize, usize)],
    ) -> Result<Self, PosetError> {
        let size = labels.len();
        if size > MAX_ELEMENTS {
            return Err(PosetError::TooLarge {
                size,
                bound: MAX_ELEMENTS,
            });
        }
        let mut above = vec![0u128; size];
        let mut kept = Vec::with_capacity(relations.len());
        for &(a, b) in relations {
            for x in [a, b] {
                if x >= size {
                    return Err(PosetError::UnknownElement(x.to_string()));
                }
            }
            if a == b {
                return Err(PosetError::CycleCreated {
                    below: labels[a].clone(),
                    above: labels[b].clone(),
                });
            }
            above[a] |= 1 << b;
            if !kept.contains(&(a, b)) {
                kept.push((a, b));
            }
        }
        Self::close(labels, kept, above)
    }

    /// Closes the given successor masks transitively and reduces them.
    fn close(
        labels: Vec<String>,
        relations: Vec<(usize, usize)>,
        mut above: Vec<u128>,
    ) -> Result<Self, PosetError> {
        let size = labels.len();
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..size {
                let mut acc = above[i];
                let mut rest = above[i];
                while rest != 0 {
                    let j = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    acc |= above[j];
                }
                if acc != above[i] {
                    above[i] = acc;
                    changed = true;
                }
            }
        }
        for i in 0..size {
            if above[i] >> i & 1 == 1 {
                let j = (0..size)
                    .find(|&j| j != i && above[i] >> j & 1 == 1 && above[j] >> i & 1 == 1)
                    .unwrap_or(i);
                return Err(PosetError::CycleCreated {
                    below: labels[i].clone(),
                    above: labels[j].clone(),
                });
            }
        }
        let mut below = vec![0u128; size];
        for (i, &up) in above.iter().enumerate() {
            let mut rest = up;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                below[j] |= 1 << i;
            }
        }
        let mut covers = Vec::new();
        for (a, &up) in above.iter().enumerate() {
            let mut rest = up;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if up & below[b] == 0 {
                    covers.push((a, b));
                }
            }
        }
        Ok(FinitePoset {
            labels,
            relations,
            above,
            below,
            covers,
        })
    }

    /// Antichain on the given labels.
    pub fn antichain(labels: Vec<String>) -> Result<Self, PosetError> {
        Self::from_relations(labels, &[])
    }

    /// Chain `0 < 1 < ... < k-1` labelled `c1..ck`.
    pub fn chain(k: usize) -> Result<Self, PosetError> {
        let labels = (1..=k).map(|i| format!("c{i}")).collect();
        let rels: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Self::from_relations(labels, &rels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Cover relations `(a, b)` meaning `a` is covered by `b`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Defining relations `(a, b)` meaning `a < b`.
    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    pub fn index_of(&self, label: &str) -> Result<usize, PosetError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| PosetError::UnknownElement(label.to_string()))
    }

    /// True when `a < b` strictly.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.above[a] >> b & 1 == 1
    }

    /// Strict up-closure of `z` as a mask.
    pub fn strict_above(&self, z: usize) -> u128 {
        self.above[z]
    }

    /// Strict down-closure of `z` as a mask.
    pub fn strict_below(&self, z: usize) -> u128 {
        self.below[z]
    }

    /// Size of the down-set of `z`, including `z`.
    pub fn down_set_size(&self, z: usize) -> usize {
        self.below[z].count_ones() as usize + 1
    }

    /// Mask of all elements.
    pub fn full_mask(&self) -> u128 {
        if self.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.len()) - 1
        }
    }

    /// True when the mask is closed downward.
    pub fn is_down_closed(&self, mask: u128) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.below[i] & !mask != 0 {
                return false;
            }
        }
        true
    }

    /// Number of neighbours of `i` in the Hasse diagram.
    pub fn hasse_degree(&self, i: usize) -> usize {
        self.covers
            .iter()
            .filter(|&&(a, b)| a == i || b == i)
            .count()
    }

    fn check(&self, i: usize) -> Result<(), PosetError> {
        if i < self.len() {
            Ok(())
        } else {
            Err(PosetError::UnknownElement(i.to_string()))
        }
    }

    /// Adds the relation `i < j` and reduces.
    pub fn add_relation(&self, i: usize, j: usize) -> Result<Self, PosetError> {
        self.check(i)?;
        self.check(j)?;
        if i == j || self.less(j, i) {
            return Err(PosetError::CycleCreated {
                below: self.labels[i].clone(),
                above: self.labels[j].clone(),
            });
        }
        let mut rels = self.relations.clone();
        rels.push((i, j));
        Self::from_relations(self.labels.clone(), &rels)
    }

    /// Inserts a fresh element lying above every member of `set`.
    /// Returns the new poset and the index of the fresh element.
    pub fn add_above(&self, set: &[usize], label: &str) -> Result<(Self, usize), PosetError> {
        self.add_fresh(set, label, true)
    }

    /// Inserts a fresh element lying below every member of `set`.
    pub fn add_below(&self, set: &[usize], label: &str) -> Result<(Self, usize), PosetError> {
        self.add_fresh(set, label, false)
    }

    fn add_fresh(&self, set: &[usize], label: &str, up: bool) -> Result<(Self, usize), PosetError> {
        for &i in set {
            self.check(i)?;
        }
        let fresh = self.len();
        if fresh + 1 > MAX_ELEMENTS {
            return Err(PosetError::TooLarge {
                size: fresh + 1,
                bound: MAX_ELEMENTS,
            });
        }
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        let mut rels = self.relations.clone();
        for &i in set {
            rels.push(if up { (i, fresh) } else { (fresh, i) });
        }
        Ok((Self::from_relations(labels, &rels)?, fresh))
    }

    /// Removes the defining relation `a < b`.
    ///
    /// Every other defining relation stays, including those that were
    /// redundant while `a < b` was present; only order implied solely
    /// through `a < b` disappears.
    pub fn remove_cover(&self, a: usize, b: usize) -> Result<Self, PosetError> {
        self.check(a)?;
        self.check(b)?;
        if !self.relations.contains(&(a, b)) || !self.covers.contains(&(a, b)) {
            return Err(PosetError::UnknownCover(
                self.labels[a].clone(),
                self.labels[b].clone(),
            ));
        }
        let rels: Vec<_> = self
            .relations
            .iter()
            .copied()
            .filter(|&c| c != (a, b))
            .collect();
        Self::from_relations(self.labels.clone(), &rels)
    }

    /// Induced subposet on the elements of `keep`, preserving index order.
    pub fn restrict(&self, keep: u128) -> Self {
        let idx: Vec<usize> = (0..self.len()).filter(|&i| keep >> i & 1 == 1).collect();
        let labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
        let mut rels = Vec::new();
        for (ni, &i) in idx.iter().enumerate() {
            for (nj, &j) in idx.iter().enumerate() {
                if self.less(i, j) {
                    rels.push((ni, nj));
                }
            }
        }
        let full =
            Self::from_relations(labels, &rels).expect("induced subposet of a poset is acyclic");
        let covers = full.covers.clone();
        Self::from_relations(full.labels, &covers).expect("induced subposet of a poset is acyclic")
    }

    /// Removes `z` alone, keeping the induced order on the rest.
    pub fn delete_element(&self, z: usize) -> Result<Self, PosetError> {
        self.check(z)?;
        Ok(self.restrict(self.full_mask() & !(1 << z)))
    }

    /// Removes every listed element, keeping the induced order on the rest.
    pub fn delete_elements(&self, set: &[usize]) -> Result<Self, PosetError> {
        let mut mask = self.full_mask();
        for &z in set {
            self.check(z)?;
            mask &= !(1 << z);
        }
        Ok(self.restrict(mask))
    }

    /// Removes `z` and everything above it.
    pub fn delete_up_set(&self, z: usize) -> Result<Self, PosetError> {
        self.check(z)?;
        Ok(self.restrict(self.full_mask() & !(self.above[z] | 1 << z)))
    }

    /// Removes `z` and everything below it.
    pub fn delete_down_set(&self, z: usize) -> Result<Self, PosetError> {
        self.check(z)?;
        Ok(self.restrict(self.full_mask() & !(self.below[z] | 1 << z)))
    }

    /// Identifies `b` with `a`: the merged element keeps `a`'s label and
    /// inherits the relations of both.
    pub fn merge(&self, a: usize, b: usize) -> Result<Self, PosetError> {
        self.check(a)?;
        self.check(b)?;
        if a == b {
            return Ok(self.clone());
        }
        if self.less(a, b) || self.less(b, a) {
            return Err(PosetError::CycleCreated {
                below: self.labels[a].clone(),
                above: self.labels[b].clone(),
            });
        }
        let map = |i: usize| -> usize {
            let i = if i == b { a } else { i };
            if i > b {
                i - 1
            } else {
                i
            }
        };
        let labels: Vec<String> = (0..self.len())
            .filter(|&i| i != b)
            .map(|i| self.labels[i].clone())
            .collect();
        let rels: Vec<_> = self
            .relations
            .iter()
            .map(|&(x, y)| (map(x), map(y)))
            .collect();
        Self::from_relations(labels, &rels)
    }

    /// The order dual.
    pub fn dual(&self) -> Self {
        let rels: Vec<_> = self.relations.iter().map(|&(a, b)| (b, a)).collect();
        Self::from_relations(self.labels.clone(), &rels).expect("dual of a poset is acyclic")
    }

    /// True when the Hasse diagram is a single cycle through every element.
    pub fn is_hasse_cycle(&self) -> bool {
        if self.len() < 3 || self.covers.len() != self.len() {
            return false;
        }
        if (0..self.len()).any(|i| self.hasse_degree(i) != 2) {
            return false;
        }
        let mut seen = 1u128;
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            for &(a, b) in &self.covers {
                let next = if a == i {
                    b
                } else if b == i {
                    a
                } else {
                    continue;
                };
                if seen >> next & 1 == 0 {
                    seen |= 1 << next;
                    frontier.push(next);
                }
            }
        }
        seen == self.full_mask()
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.labels.clone(),
            covers: self.covers.clone(),
        }
    }

    pub fn from_json(json: &PosetJson) -> Result<Self, PosetError> {
        Self::from_relations(json.elements.clone(), &json.covers)
    }
}
