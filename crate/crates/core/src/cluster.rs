//! Colour labels, colour classes and colour clusters.
//!
//! A label is a canonical set of base-colour indices (`{1}`, `{1,2}`, ...).
//! Blending two labels is set union, so repeated colours collapse and the
//! operation is idempotent. A cluster is the multiset of colours used by a
//! proper colouring, stored as `(label, weight)` classes in canonical order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Non-empty set of base-colour indices, kept sorted and deduplicated.
///
/// The derived ordering compares the sorted member lists lexicographically,
/// which is the canonical class order inside a [`ColourCluster`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColourLabel(Vec<u32>);

impl ColourLabel {
    pub fn new<I: IntoIterator<Item = u32>>(members: I) -> Result<Self> {
        let mut members: Vec<u32> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::validation("colour label must be non-empty"));
        }
        if members.contains(&0) {
            return Err(Error::validation("base-colour indices start at 1"));
        }
        members.sort_unstable();
        members.dedup();
        Ok(ColourLabel(members))
    }

    /// The label `{index}` of a single base colour.
    pub fn singleton(index: u32) -> Result<Self> {
        Self::new([index])
    }

    pub fn members(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; labels are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.0.len() == 1
    }

    pub fn max_index(&self) -> u32 {
        *self.0.last().expect("labels are non-empty")
    }

    /// Applies `perm` to every member. `perm[i - 1]` is the image of index `i`.
    pub fn relabel(&self, perm: &[u32]) -> Result<Self> {
        let mapped = self
            .0
            .iter()
            .map(|&m| {
                perm.get(m as usize - 1).copied().ok_or_else(|| {
                    Error::validation(format!("permutation does not cover index {m}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(mapped)
    }
}

impl fmt::Display for ColourLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// Blend of two colours: the union of their base-colour sets.
pub fn blend_labels(a: &ColourLabel, b: &ColourLabel) -> ColourLabel {
    let mut merged = Vec::with_capacity(a.0.len() + b.0.len());
    let (mut i, mut j) = (0, 0);
    while i < a.0.len() && j < b.0.len() {
        match a.0[i].cmp(&b.0[j]) {
            std::cmp::Ordering::Less => {
                merged.push(a.0[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                merged.push(b.0[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                merged.push(a.0[i]);
                i += 1;
                j += 1;
            }
        }
    }
    merged.extend_from_slice(&a.0[i..]);
    merged.extend_from_slice(&b.0[j..]);
    ColourLabel(merged)
}

/// All vertices carrying one colour: a label and its colour weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColourClass {
    label: ColourLabel,
    weight: BigUint,
}

impl ColourClass {
    pub fn new(label: ColourLabel, weight: impl Into<BigUint>) -> Result<Self> {
        let weight = weight.into();
        if weight.is_zero() {
            return Err(Error::validation(format!(
                "colour class {label} must have weight >= 1"
            )));
        }
        Ok(ColourClass { label, weight })
    }

    pub fn label(&self) -> &ColourLabel {
        &self.label
    }

    pub fn weight(&self) -> &BigUint {
        &self.weight
    }
}

/// Canonical collection of colour classes with pairwise-distinct labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColourCluster {
    classes: Vec<ColourClass>,
    palette_size: u32,
}

/// Merges classes with equal labels (summing weights) and sorts by label.
pub fn normalize<I: IntoIterator<Item = ColourClass>>(raw: I) -> Result<ColourCluster> {
    let mut merged: BTreeMap<ColourLabel, BigUint> = BTreeMap::new();
    for class in raw {
        *merged.entry(class.label).or_insert_with(BigUint::zero) += class.weight;
    }
    if merged.is_empty() {
        return Err(Error::validation(
            "a colour cluster needs at least one class",
        ));
    }
    let palette_size = merged.keys().map(ColourLabel::max_index).max().unwrap_or(0);
    let classes = merged
        .into_iter()
        .map(|(label, weight)| ColourClass { label, weight })
        .collect();
    Ok(ColourCluster {
        classes,
        palette_size,
    })
}

impl ColourCluster {
    /// Base cluster with singleton labels `{1}..{ℓ}` and the given weights.
    pub fn from_weights<I, W>(weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = W>,
        W: Into<BigUint>,
    {
        let classes = weights
            .into_iter()
            .enumerate()
            .map(|(i, w)| ColourClass::new(ColourLabel::singleton(i as u32 + 1)?, w))
            .collect::<Result<Vec<_>>>()?;
        normalize(classes)
    }

    pub fn classes(&self) -> &[ColourClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// ℓ: the largest base-colour index used by any label.
    pub fn palette_size(&self) -> u32 {
        self.palette_size
    }

    /// N: the total number of coloured vertices.
    pub fn total_weight(&self) -> BigUint {
        self.classes.iter().map(|c| &c.weight).sum()
    }

    pub fn weights(&self) -> impl Iterator<Item = &BigUint> {
        self.classes.iter().map(|c| &c.weight)
    }

    /// True when the labels are exactly the singletons `{1}..{ℓ}`.
    pub fn is_base(&self) -> bool {
        self.classes
            .iter()
            .enumerate()
            .all(|(i, c)| c.label.members() == [i as u32 + 1])
    }

    /// Fails unless this is a base cluster with at least two classes.
    pub fn require_base(&self) -> Result<()> {
        if !self.is_base() {
            return Err(Error::validation(
                "operation is defined for base clusters (singleton labels {1}..{l})",
            ));
        }
        if self.classes.len() < 2 {
            return Err(Error::validation(
                "a colour cluster needs at least two classes",
            ));
        }
        Ok(())
    }

    /// True if every class has weight one.
    pub fn all_unit_weights(&self) -> bool {
        self.classes.iter().all(|c| c.weight.is_one())
    }

    /// Renames base colours by `perm` (a permutation of `1..=ℓ`) and
    /// re-canonicalizes.
    pub fn relabel(&self, perm: &[u32]) -> Result<Self> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=self.palette_size).collect::<Vec<_>>() {
            return Err(Error::validation(format!(
                "{perm:?} is not a permutation of 1..={}",
                self.palette_size
            )));
        }
        let classes = self
            .classes
            .iter()
            .map(|c| {
                Ok(ColourClass {
                    label: c.label.relabel(perm)?,
                    weight: c.weight.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        normalize(classes)
    }

    /// Weight list "r1,r2,...,rℓ" for a base cluster, `None` otherwise.
    pub fn to_literal(&self) -> Option<String> {
        if !self.is_base() {
            return None;
        }
        Some(
            self.classes
                .iter()
                .map(|c| c.weight.to_string())
                .collect::<Vec<_>>()
                .join(","),
        )
    }
}

impl fmt::Display for ColourCluster {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}:{}", c.label, c.weight)?;
        }
        f.write_str("]")
    }
}

/// Parses the cluster literal "r1,r2,...,rℓ".
impl FromStr for ColourCluster {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let weights = s
            .split(',')
            .map(|part| {
                let part = part.trim();
                let w: BigUint = part.parse().map_err(|_| {
                    Error::validation(format!(
                        "cluster literal: '{part}' is not a positive integer"
                    ))
                })?;
                Ok(w)
            })
            .collect::<Result<Vec<_>>>()?;
        ColourCluster::from_weights(weights)
    }
}
