//! Dense tensor fields with exact components.

use std::ops::{Add, Neg, Sub};

use super::chart::Chart;
use crate::error::{Error, Result};
use crate::symbolic::{Point, Rational, RationalFunction};

/// Position of one index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    /// Contravariant (upper) index.
    Up,
    /// Covariant (lower) index.
    Down,
}

/// A tensor field on a chart.
///
/// Every slot carries its own variance, so raising or lowering an index keeps
/// slot positions fixed. Components are stored row-major over the slots.
/// The usual constructors put contravariant slots first: a `(1,1)` tensor
/// `T` has components `T[i][j] = T^i_j`, and `T(X) = T^i_j X^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorField {
    chart: Chart,
    slots: Vec<Variance>,
    components: Vec<RationalFunction>,
}

/// Iterates over all multi-indices of the given rank in row-major order.
pub(crate) fn multi_indices(dim: usize, rank: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(rank as u32);
    (0..total).map(move |mut flat| {
        let mut idx = vec![0; rank];
        for slot in (0..rank).rev() {
            idx[slot] = flat % dim;
            flat /= dim;
        }
        idx
    })
}

impl TensorField {
    pub fn from_fn<F>(chart: &Chart, slots: &[Variance], mut f: F) -> Self
    where
        F: FnMut(&[usize]) -> RationalFunction,
    {
        let components = multi_indices(chart.dim(), slots.len())
            .map(|idx| f(&idx))
            .collect();
        TensorField {
            chart: chart.clone(),
            slots: slots.to_vec(),
            components,
        }
    }

    pub fn from_components(
        chart: &Chart,
        slots: &[Variance],
        components: Vec<RationalFunction>,
    ) -> Result<Self> {
        let expected = chart.dim().pow(slots.len() as u32);
        if components.len() != expected {
            return Err(Error::SlotMismatch(format!(
                "expected {expected} components, got {}",
                components.len()
            )));
        }
        if components.iter().any(|c| c.vars() != chart.vars()) {
            return Err(Error::ChartMismatch(
                "component over a different chart".into(),
            ));
        }
        Ok(TensorField {
            chart: chart.clone(),
            slots: slots.to_vec(),
            components,
        })
    }

    pub fn zeros(chart: &Chart, slots: &[Variance]) -> Self {
        Self::from_fn(chart, slots, |_| chart.zero())
    }

    pub fn scalar(chart: &Chart, value: RationalFunction) -> Self {
        TensorField {
            chart: chart.clone(),
            slots: Vec::new(),
            components: vec![value],
        }
    }

    pub fn vector(chart: &Chart, components: Vec<RationalFunction>) -> Result<Self> {
        Self::from_components(chart, &[Variance::Up], components)
    }

    pub fn covector(chart: &Chart, components: Vec<RationalFunction>) -> Result<Self> {
        Self::from_components(chart, &[Variance::Down], components)
    }

    fn from_matrix(
        chart: &Chart,
        slots: &[Variance],
        rows: Vec<Vec<RationalFunction>>,
    ) -> Result<Self> {
        let n = chart.dim();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::SlotMismatch(format!("expected a {n}x{n} matrix")));
        }
        Self::from_components(chart, slots, rows.into_iter().flatten().collect())
    }

    /// `(1,1)` tensor from `rows[i][j] = T^i_j`.
    pub fn endomorphism(chart: &Chart, rows: Vec<Vec<RationalFunction>>) -> Result<Self> {
        Self::from_matrix(chart, &[Variance::Up, Variance::Down], rows)
    }

    /// `(0,2)` tensor from `rows[i][j] = T_ij`.
    pub fn bilinear(chart: &Chart, rows: Vec<Vec<RationalFunction>>) -> Result<Self> {
        Self::from_matrix(chart, &[Variance::Down, Variance::Down], rows)
    }

    /// The identity endomorphism `δ^i_j`.
    pub fn identity(chart: &Chart) -> Self {
        Self::from_fn(chart, &[Variance::Up, Variance::Down], |idx| {
            if idx[0] == idx[1] {
                chart.one()
            } else {
                chart.zero()
            }
        })
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn dim(&self) -> usize {
        self.chart.dim()
    }

    pub fn slots(&self) -> &[Variance] {
        &self.slots
    }

    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    /// `(contravariant, covariant)` slot counts.
    pub fn valence(&self) -> (usize, usize) {
        let up = self.slots.iter().filter(|&&s| s == Variance::Up).count();
        (up, self.slots.len() - up)
    }

    pub fn components(&self) -> &[RationalFunction] {
        &self.components
    }

    fn flat_index(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.rank(), "index arity mismatch");
        let n = self.dim();
        idx.iter().fold(0, |acc, &i| {
            assert!(i < n, "index out of range");
            acc * n + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &RationalFunction {
        &self.components[self.flat_index(idx)]
    }

    /// The single component of a rank-0 tensor.
    pub fn as_scalar(&self) -> Option<&RationalFunction> {
        (self.rank() == 0).then(|| &self.components[0])
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(RationalFunction::is_zero)
    }

    /// Nonzero components with their multi-indices, in storage order.
    pub fn nonzero_components(&self) -> Vec<(Vec<usize>, &RationalFunction)> {
        multi_indices(self.dim(), self.rank())
            .zip(self.components.iter())
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn map<F>(&self, f: F) -> Self
    where
        F: FnMut(&RationalFunction) -> RationalFunction,
    {
        TensorField {
            chart: self.chart.clone(),
            slots: self.slots.clone(),
            components: self.components.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|x| x.scale(c))
    }

    pub fn scale_by(&self, f: &RationalFunction) -> Self {
        self.map(|x| x * f)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.chart != other.chart {
            return Err(Error::ChartMismatch("tensors on different charts".into()));
        }
        if self.slots != other.slots {
            return Err(Error::SlotMismatch(format!(
                "{:?} vs {:?}",
                self.slots, other.slots
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(TensorField {
            chart: self.chart.clone(),
            slots: self.slots.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Exact equality of all components.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.try_sub(other)?.is_zero())
    }

    /// Tensor product; slots of `self` come first.
    pub fn outer(&self, other: &Self) -> Result<Self> {
        if self.chart != other.chart {
            return Err(Error::ChartMismatch("tensors on different charts".into()));
        }
        let mut slots = self.slots.clone();
        slots.extend_from_slice(&other.slots);
        let mut components = Vec::with_capacity(self.components.len() * other.components.len());
        for a in &self.components {
            for b in &other.components {
                components.push(a * b);
            }
        }
        Ok(TensorField {
            chart: self.chart.clone(),
            slots,
            components,
        })
    }

    /// Contracts slot `a` against slot `b`; one must be upper and the other
    /// lower. Remaining slots keep their order.
    pub fn contract(&self, a: usize, b: usize) -> Result<Self> {
        let rank = self.rank();
        if a >= rank || b >= rank || a == b {
            return Err(Error::SlotMismatch(format!(
                "cannot contract slots {a} and {b} of a rank-{rank} tensor"
            )));
        }
        if self.slots[a] == self.slots[b] {
            return Err(Error::SlotMismatch(
                "contraction needs one upper and one lower slot".into(),
            ));
        }
        let slots: Vec<Variance> = (0..rank)
            .filter(|&s| s != a && s != b)
            .map(|s| self.slots[s])
            .collect();
        let n = self.dim();
        let mut full = vec![0; rank];
        Ok(Self::from_fn(&self.chart, &slots, |idx| {
            let mut rest = idx.iter();
            for (s, slot) in full.iter_mut().enumerate() {
                if s != a && s != b {
                    *slot = *rest.next().expect("arity");
                }
            }
            let mut acc = self.chart.zero();
            for k in 0..n {
                full[a] = k;
                full[b] = k;
                let c = self.get(&full);
                if !c.is_zero() {
                    acc = &acc + c;
                }
            }
            acc
        }))
    }

    /// Contracts slot `mine` of `self` with slot `theirs` of `other` without
    /// building the full outer product. Result slots: the remaining slots of
    /// `self`, then the remaining slots of `other`.
    pub fn contract_with(&self, mine: usize, other: &Self, theirs: usize) -> Result<Self> {
        if self.chart != other.chart {
            return Err(Error::ChartMismatch("tensors on different charts".into()));
        }
        if mine >= self.rank() || theirs >= other.rank() {
            return Err(Error::SlotMismatch("contraction slot out of range".into()));
        }
        if self.slots[mine] == other.slots[theirs] {
            return Err(Error::SlotMismatch(
                "contraction needs one upper and one lower slot".into(),
            ));
        }
        let mut slots: Vec<Variance> = Vec::new();
        slots.extend(
            (0..self.rank())
                .filter(|&s| s != mine)
                .map(|s| self.slots[s]),
        );
        slots.extend(
            (0..other.rank())
                .filter(|&s| s != theirs)
                .map(|s| other.slots[s]),
        );
        let left_rest = self.rank() - 1;
        let n = self.dim();
        let mut li = vec![0; self.rank()];
        let mut ri = vec![0; other.rank()];
        Ok(Self::from_fn(&self.chart, &slots, |idx| {
            let (lpart, rpart) = idx.split_at(left_rest);
            let mut it = lpart.iter();
            for (s, v) in li.iter_mut().enumerate() {
                if s != mine {
                    *v = *it.next().expect("arity");
                }
            }
            let mut it = rpart.iter();
            for (s, v) in ri.iter_mut().enumerate() {
                if s != theirs {
                    *v = *it.next().expect("arity");
                }
            }
            let mut acc = self.chart.zero();
            for k in 0..n {
                li[mine] = k;
                ri[theirs] = k;
                let a = self.get(&li);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(&ri);
                if b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b);
            }
            acc
        }))
    }

    /// Reorders slots: slot `k` of the result is slot `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        let rank = self.rank();
        let mut seen = vec![false; rank];
        if perm.len() != rank
            || perm
                .iter()
                .any(|&p| p >= rank || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::SlotMismatch(format!(
                "{perm:?} is not a permutation"
            )));
        }
        let slots: Vec<Variance> = perm.iter().map(|&p| self.slots[p]).collect();
        let mut src = vec![0; rank];
        Ok(Self::from_fn(&self.chart, &slots, |idx| {
            for (k, &p) in perm.iter().enumerate() {
                src[p] = idx[k];
            }
            self.get(&src).clone()
        }))
    }

    /// Swaps the two slots of a rank-2 tensor.
    pub fn transpose(&self) -> Result<Self> {
        if self.rank() != 2 {
            return Err(Error::SlotMismatch(
                "transpose needs a rank-2 tensor".into(),
            ));
        }
        self.permute(&[1, 0])
    }

    /// Composition `(self ∘ other)^i_j = self^i_k other^k_j` of two
    /// endomorphisms.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.require_endomorphism()?;
        other.require_endomorphism()?;
        self.contract_with(1, other, 0)
    }

    /// Applies an endomorphism to a vector field.
    pub fn apply(&self, v: &Self) -> Result<Self> {
        self.require_endomorphism()?;
        if v.slots != [Variance::Up] {
            return Err(Error::SlotMismatch("expected a vector field".into()));
        }
        self.contract_with(1, v, 0)
    }

    /// Trace of an endomorphism.
    pub fn trace(&self) -> Result<RationalFunction> {
        self.require_endomorphism()?;
        Ok(self.contract(0, 1)?.components[0].clone())
    }

    fn require_endomorphism(&self) -> Result<()> {
        if self.slots == [Variance::Up, Variance::Down] {
            Ok(())
        } else {
            Err(Error::SlotMismatch(format!(
                "expected a (1,1) tensor, got slots {:?}",
                self.slots
            )))
        }
    }

    /// Coordinate partial derivatives, appended as a new lower slot. Not a
    /// tensor operation in general; used to build the covariant ones.
    pub fn partials(&self) -> Self {
        let mut slots = self.slots.clone();
        slots.push(Variance::Down);
        let n = self.dim();
        let mut components = Vec::with_capacity(self.components.len() * n);
        for c in &self.components {
            for k in 0..n {
                components.push(c.partial(k));
            }
        }
        TensorField {
            chart: self.chart.clone(),
            slots,
            components,
        }
    }

    /// Exact values of all components at a point.
    pub fn eval(&self, p: &Point) -> Result<Vec<Rational>> {
        self.components.iter().map(|c| c.eval(p)).collect()
    }
}

impl Add for &TensorField {
    type Output = TensorField;
    fn add(self, rhs: &TensorField) -> TensorField {
        self.try_add(rhs).expect("incompatible tensors")
    }
}

impl Sub for &TensorField {
    type Output = TensorField;
    fn sub(self, rhs: &TensorField) -> TensorField {
        self.try_sub(rhs).expect("incompatible tensors")
    }
}

impl Neg for &TensorField {
    type Output = TensorField;
    fn neg(self) -> TensorField {
        self.map(|c| -c)
    }
}
