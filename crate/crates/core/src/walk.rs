//! State vectors and the search step `U' = S · (I ⊗ C) · (Q ⊗ I)`.
//!
//! Amplitudes are stored vertex-major with the coin index varying fastest, so
//! the coin is a short real-coefficient kernel over each vertex block and the
//! shift is a gather through a precomputed index table.

use std::collections::BTreeSet;
use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{Direction, GridGeometry, VertexCoord};

/// States at least this long run the coin and shift kernels on the rayon pool.
const PARALLEL_MIN_DIM: usize = 1 << 15;

pub fn check_weight(l: f64) -> Result<()> {
    if !(l.is_finite() && l >= 0.0) {
        return Err(Error::NegativeWeight(l));
    }
    Ok(())
}

/// The coin axis |s_c⟩: movement entries 1/√(d+l), loop entry √(l/(d+l)).
pub fn coin_state(geometry: &GridGeometry, l: f64) -> Result<Vec<f64>> {
    check_weight(l)?;
    let d = geometry.degree() as f64;
    let mut axis = vec![1.0 / (d + l).sqrt(); geometry.coin_arity()];
    axis[geometry.degree()] = (l / (d + l)).sqrt();
    Ok(axis)
}

/// A set of distinct marked vertices, kept sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MarkedSet {
    vertices: Vec<VertexCoord>,
}

impl MarkedSet {
    pub fn empty() -> Self {
        MarkedSet::default()
    }

    pub fn new(geometry: &GridGeometry, vertices: impl IntoIterator<Item = VertexCoord>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in vertices {
            geometry.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex { x: v.x, y: v.y });
            }
        }
        Ok(MarkedSet {
            vertices: seen.into_iter().collect(),
        })
    }

    /// `{(0, 2i) | i < m}`, the evenly spaced column used in the schedule comparisons.
    pub fn row_even(geometry: &GridGeometry, m: usize) -> Result<Self> {
        MarkedSet::new(geometry, (0..m).map(|i| VertexCoord::new(0, 2 * i)))
    }

    pub fn all(geometry: &GridGeometry) -> Self {
        MarkedSet {
            vertices: geometry.vertices().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: VertexCoord) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexCoord> + '_ {
        self.vertices.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexCoord] {
        &self.vertices
    }

    fn check(&self, geometry: &GridGeometry) -> Result<()> {
        self.vertices.iter().try_for_each(|&v| geometry.check_vertex(v))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    geometry: GridGeometry,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Uniform over vertices, coin axis on every vertex.
    pub fn initial(geometry: GridGeometry, l: f64) -> Result<Self> {
        let axis = coin_state(&geometry, l)?;
        let scale = 1.0 / (geometry.vertex_count() as f64).sqrt();
        let block: Vec<Complex64> = axis.iter().map(|&a| Complex64::new(a * scale, 0.0)).collect();
        let mut amplitudes = Vec::with_capacity(geometry.dimension());
        for _ in 0..geometry.vertex_count() {
            amplitudes.extend_from_slice(&block);
        }
        Ok(StateVector { geometry, amplitudes })
    }

    pub fn from_amplitudes(geometry: GridGeometry, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != geometry.dimension() {
            return Err(Error::GeometryMismatch);
        }
        Ok(StateVector { geometry, amplitudes })
    }

    pub fn geometry(&self) -> &GridGeometry {
        &self.geometry
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn amplitude(&self, v: VertexCoord, c: Direction) -> Complex64 {
        self.amplitudes[self.geometry.state_index(v, c)]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    fn vertex_block(&self, v: VertexCoord) -> std::ops::Range<usize> {
        let arity = self.geometry.coin_arity();
        let start = self.geometry.vertex_index(v) * arity;
        start..start + arity
    }

    /// Q: negate every amplitude of a marked vertex.
    pub fn apply_oracle(&mut self, marked: &MarkedSet) {
        for v in marked.iter() {
            let range = self.vertex_block(v);
            for a in &mut self.amplitudes[range] {
                *a = -*a;
            }
        }
    }

    /// C = 2|s_c⟩⟨s_c| − I on every vertex.
    pub fn apply_coin(&mut self, l: f64) -> Result<()> {
        let axis = coin_state(&self.geometry, l)?;
        self.apply_coin_axis(&axis);
        Ok(())
    }

    pub(crate) fn apply_coin_axis(&mut self, axis: &[f64]) {
        let arity = axis.len();
        let kernel = |block: &mut [Complex64]| {
            let mut s = Complex64::new(0.0, 0.0);
            for (a, &w) in block.iter().zip(axis) {
                s += a * w;
            }
            let s2 = s * 2.0;
            for (a, &w) in block.iter_mut().zip(axis) {
                *a = s2 * w - *a;
            }
        };
        if self.amplitudes.len() >= PARALLEL_MIN_DIM {
            self.amplitudes
                .par_chunks_mut(arity)
                .with_min_len(256)
                .for_each(kernel);
        } else {
            self.amplitudes.chunks_mut(arity).for_each(kernel);
        }
    }

    /// Flip-flop shift through an involutive index table, gathered into `scratch`
    /// and swapped in.
    pub fn apply_shift_with(&mut self, permutation: &[usize], scratch: &mut Vec<Complex64>) {
        debug_assert_eq!(permutation.len(), self.amplitudes.len());
        scratch.resize(self.amplitudes.len(), Complex64::new(0.0, 0.0));
        let src = &self.amplitudes;
        if src.len() >= PARALLEL_MIN_DIM {
            scratch
                .par_iter_mut()
                .with_min_len(1024)
                .zip(permutation.par_iter())
                .for_each(|(dst, &p)| *dst = src[p]);
        } else {
            for (dst, &p) in scratch.iter_mut().zip(permutation) {
                *dst = src[p];
            }
        }
        std::mem::swap(&mut self.amplitudes, scratch);
    }

    /// Convenience shift that builds the index table on the fly.
    pub fn apply_shift(&mut self) {
        let perm = self.geometry.shift_permutation();
        let mut scratch = Vec::new();
        self.apply_shift_with(&perm, &mut scratch);
    }

    /// p_M: total probability on marked vertices.
    pub fn success_probability(&self, marked: &MarkedSet) -> f64 {
        marked
            .iter()
            .map(|v| {
                self.amplitudes[self.vertex_block(v)]
                    .iter()
                    .map(|a| a.norm_sqr())
                    .sum::<f64>()
            })
            .sum()
    }

    /// ⟨ψ(0)|ψ⟩ where ψ(0) is the initial state for weight `l`.
    pub fn overlap_with_initial(&self, l: f64) -> Result<Complex64> {
        let axis = coin_state(&self.geometry, l)?;
        let scale = 1.0 / (self.geometry.vertex_count() as f64).sqrt();
        let mut acc = Complex64::new(0.0, 0.0);
        for block in self.amplitudes.chunks(axis.len()) {
            for (a, &w) in block.iter().zip(&axis) {
                acc += a * w;
            }
        }
        Ok(acc * scale)
    }

    /// Debug dump: `index,x,y,c,re,im`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "index,x,y,c,re,im")?;
        let arity = self.geometry.coin_arity();
        for (i, a) in self.amplitudes.iter().enumerate() {
            let v = self.geometry.vertex_at(i / arity);
            writeln!(out, "{},{},{},{},{:.16e},{:.16e}", i, v.x, v.y, i % arity, a.re, a.im)?;
        }
        Ok(())
    }
}

/// A configured search walk: geometry, marked set and weight, with the shift
/// table and coin axis precomputed.
#[derive(Debug, Clone)]
pub struct SearchWalk {
    geometry: GridGeometry,
    marked: MarkedSet,
    weight: f64,
    axis: Vec<f64>,
    permutation: Vec<usize>,
}

impl SearchWalk {
    pub fn new(geometry: GridGeometry, marked: MarkedSet, l: f64) -> Result<Self> {
        marked.check(&geometry)?;
        let axis = coin_state(&geometry, l)?;
        Ok(SearchWalk {
            permutation: geometry.shift_permutation(),
            geometry,
            marked,
            weight: l,
            axis,
        })
    }

    pub fn geometry(&self) -> &GridGeometry {
        &self.geometry
    }

    pub fn marked(&self) -> &MarkedSet {
        &self.marked
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn initial_state(&self) -> StateVector {
        StateVector::initial(self.geometry, self.weight).expect("weight validated on construction")
    }

    /// One application of U': oracle, coin, then shift.
    pub fn step(&self, state: &mut StateVector, scratch: &mut Vec<Complex64>) -> Result<()> {
        if state.geometry != self.geometry {
            return Err(Error::GeometryMismatch);
        }
        state.apply_oracle(&self.marked);
        state.apply_coin_axis(&self.axis);
        state.apply_shift_with(&self.permutation, scratch);
        Ok(())
    }

    pub fn success_probability(&self, state: &StateVector) -> f64 {
        state.success_probability(&self.marked)
    }

    /// Iterator over p_M(t) for t = 0, 1, 2, ... (unbounded).
    pub fn probabilities(&self) -> Probabilities<'_> {
        Probabilities {
            walk: self,
            state: self.initial_state(),
            scratch: Vec::with_capacity(self.geometry.dimension()),
            started: false,
        }
    }

    /// State after `steps` applications of U'.
    pub fn evolve(&self, steps: usize) -> StateVector {
        let mut state = self.initial_state();
        let mut scratch = Vec::with_capacity(self.geometry.dimension());
        for _ in 0..steps {
            self.step(&mut state, &mut scratch).expect("same geometry");
        }
        state
    }
}

pub struct Probabilities<'a> {
    walk: &'a SearchWalk,
    state: StateVector,
    scratch: Vec<Complex64>,
    started: bool,
}

impl Probabilities<'_> {
    pub fn state(&self) -> &StateVector {
        &self.state
    }
}

impl Iterator for Probabilities<'_> {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        if self.started {
            self.walk
                .step(&mut self.state, &mut self.scratch)
                .expect("same geometry");
        }
        self.started = true;
        Some(self.walk.success_probability(&self.state))
    }
}

/// Free-standing step for one-off use; builds the shift table each call.
pub fn step(state: &mut StateVector, marked: &MarkedSet, l: f64) -> Result<()> {
    let walk = SearchWalk::new(*state.geometry(), marked.clone(), l)?;
    let mut scratch = Vec::new();
    walk.step(state, &mut scratch)
}
