//! Dense-matrix reference for small grids.
//!
//! Builds Q, I⊗C, S and their product explicitly and evolves by plain
//! matrix-vector multiplication. Slow on purpose; it exists to check the
//! engine in [`crate::walk`] amplitude by amplitude.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{Direction, GridGeometry};
use crate::walk::{check_weight, MarkedSet};

/// Largest N·(d+1) the reference will allocate a matrix for.
pub const MAX_DENSE_DIM: usize = 4096;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    dim: usize,
    /// Row-major.
    entries: Vec<Complex64>,
}

impl DenseOperator {
    pub fn zeros(dim: usize) -> Result<Self> {
        if dim > MAX_DENSE_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        Ok(DenseOperator {
            dim,
            entries: vec![ZERO; dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.set(i, i, ONE);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] = value;
    }

    /// `self · rhs`. Zero entries of `self` are skipped, which keeps products
    /// with permutation and block-diagonal factors cheap.
    pub fn mul(&self, rhs: &DenseOperator) -> DenseOperator {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            let out_row = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == ZERO {
                    continue;
                }
                let rhs_row = &rhs.entries[k * n..(k + 1) * n];
                for (o, b) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        DenseOperator { dim: n, entries: out }
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        self.entries
            .chunks(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn adjoint(&self) -> DenseOperator {
        let n = self.dim;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                out[j * n + i] = self.entries[i * n + j].conj();
            }
        }
        DenseOperator { dim: n, entries: out }
    }

    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry of |A†A − I|.
    pub fn unitarity_error(&self) -> f64 {
        let id = DenseOperator::identity(self.dim).expect("same dimension as self");
        self.adjoint().mul(self).max_abs_diff(&id)
    }
}

fn dimension(geometry: &GridGeometry) -> Result<usize> {
    let dim = geometry.dimension();
    if dim > MAX_DENSE_DIM {
        return Err(Error::DimensionTooLarge(dim));
    }
    Ok(dim)
}

/// Q ⊗ I: −1 on the diagonal of marked vertex blocks, +1 elsewhere.
pub fn oracle_matrix(geometry: &GridGeometry, marked: &MarkedSet) -> Result<DenseOperator> {
    let dim = dimension(geometry)?;
    let mut q = DenseOperator::identity(dim)?;
    let arity = geometry.coin_arity();
    for v in marked.iter() {
        geometry.check_vertex(v)?;
        let base = geometry.vertex_index(v) * arity;
        for c in 0..arity {
            q.set(base + c, base + c, -ONE);
        }
    }
    Ok(q)
}

/// I_N ⊗ (2|s_c⟩⟨s_c| − I), with |s_c⟩ written out from its definition.
pub fn coin_matrix(geometry: &GridGeometry, l: f64) -> Result<DenseOperator> {
    check_weight(l)?;
    let dim = dimension(geometry)?;
    let d = geometry.degree();
    let norm = 1.0 / (d as f64 + l).sqrt();
    let axis: Vec<f64> = (0..=d).map(|c| if c < d { norm } else { l.sqrt() * norm }).collect();
    let arity = d + 1;
    let mut m = DenseOperator::zeros(dim)?;
    for vertex in 0..geometry.vertex_count() {
        let base = vertex * arity;
        for i in 0..arity {
            for j in 0..arity {
                let delta = if i == j { 1.0 } else { 0.0 };
                m.set(base + i, base + j, Complex64::new(2.0 * axis[i] * axis[j] - delta, 0.0));
            }
        }
    }
    Ok(m)
}

/// Flip-flop shift as a 0/1 matrix: column (v,c) has its 1 at row neighbor(v,c).
pub fn shift_matrix(geometry: &GridGeometry) -> Result<DenseOperator> {
    let dim = dimension(geometry)?;
    let mut m = DenseOperator::zeros(dim)?;
    for v in geometry.vertices() {
        for c in 0..geometry.degree() {
            let (w, back) = geometry.neighbor(v, Direction(c))?;
            m.set(geometry.state_index(w, back), geometry.state_index(v, Direction(c)), ONE);
        }
        let lp = geometry.state_index(v, geometry.loop_direction());
        m.set(lp, lp, ONE);
    }
    Ok(m)
}

/// U' = S · (I ⊗ C) · (Q ⊗ I).
pub fn build_step_matrix(geometry: &GridGeometry, marked: &MarkedSet, l: f64) -> Result<DenseOperator> {
    let q = oracle_matrix(geometry, marked)?;
    let c = coin_matrix(geometry, l)?;
    let s = shift_matrix(geometry)?;
    Ok(s.mul(&c.mul(&q)))
}

/// (1/√N) Σ_v |v⟩ ⊗ |s_c⟩ as a plain vector.
pub fn initial_vector(geometry: &GridGeometry, l: f64) -> Result<Vec<Complex64>> {
    check_weight(l)?;
    dimension(geometry)?;
    let d = geometry.degree() as f64;
    let n = geometry.vertex_count() as f64;
    let mut v = Vec::with_capacity(geometry.dimension());
    for _ in 0..geometry.vertex_count() {
        v.extend(std::iter::repeat_n(Complex64::new(1.0 / ((d + l) * n).sqrt(), 0.0), geometry.degree()));
        v.push(Complex64::new((l / ((d + l) * n)).sqrt(), 0.0));
    }
    Ok(v)
}

fn marked_probability(geometry: &GridGeometry, marked: &MarkedSet, v: &[Complex64]) -> f64 {
    let arity = geometry.coin_arity();
    marked
        .iter()
        .map(|w| {
            let base = geometry.vertex_index(w) * arity;
            v[base..base + arity].iter().map(|a| a.norm_sqr()).sum::<f64>()
        })
        .sum()
}

/// States ψ(0..=steps) by repeated matrix-vector products.
pub fn evolve_dense_states(
    geometry: &GridGeometry,
    marked: &MarkedSet,
    l: f64,
    steps: usize,
) -> Result<Vec<Vec<Complex64>>> {
    let u = build_step_matrix(geometry, marked, l)?;
    let mut states = Vec::with_capacity(steps + 1);
    states.push(initial_vector(geometry, l)?);
    for t in 0..steps {
        let next = u.apply(&states[t]);
        states.push(next);
    }
    Ok(states)
}

/// p_M(t) for t = 0..=steps.
pub fn evolve_dense(geometry: &GridGeometry, marked: &MarkedSet, l: f64, steps: usize) -> Result<Vec<f64>> {
    Ok(evolve_dense_states(geometry, marked, l, steps)?
        .iter()
        .map(|v| marked_probability(geometry, marked, v))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{GridKind, VertexCoord};

    fn geom(kind: GridKind, side: usize) -> GridGeometry {
        GridGeometry::new(kind, side).unwrap()
    }

    #[test]
    fn factors_are_unitary_involutions() {
        for kind in GridKind::ALL {
            let g = geom(kind, 4);
            let m = MarkedSet::new(&g, [VertexCoord::new(1, 2)]).unwrap();
            let id = DenseOperator::identity(g.dimension()).unwrap();
            for op in [
                oracle_matrix(&g, &m).unwrap(),
                coin_matrix(&g, 0.07).unwrap(),
                shift_matrix(&g).unwrap(),
            ] {
                assert!(op.unitarity_error() < 1e-10);
                assert!(op.mul(&op).max_abs_diff(&id) < 1e-10);
            }
        }
    }

    #[test]
    fn step_matrix_fixes_initial_without_marks() {
        let g = geom(GridKind::Rectangular, 2);
        let u = build_step_matrix(&g, &MarkedSet::empty(), 0.0).unwrap();
        assert!(u.unitarity_error() < 1e-10);
        let psi = initial_vector(&g, 0.0).unwrap();
        let out = u.apply(&psi);
        for (a, b) in out.iter().zip(&psi) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn step_matrix_is_unitary_with_marks() {
        let g = geom(GridKind::Triangular, 4);
        let m = MarkedSet::new(&g, [VertexCoord::new(0, 0), VertexCoord::new(2, 3)]).unwrap();
        let u = build_step_matrix(&g, &m, 0.75).unwrap();
        assert!(u.unitarity_error() < 1e-10);
    }

    #[test]
    fn dimension_guard() {
        let g = geom(GridKind::Triangular, 30);
        assert!(matches!(
            build_step_matrix(&g, &MarkedSet::empty(), 0.0),
            Err(Error::DimensionTooLarge(6300))
        ));
        assert!(evolve_dense(&g, &MarkedSet::empty(), 0.0, 1).is_err());
    }

    #[test]
    fn dense_series_bounds() {
        let g = geom(GridKind::Honeycomb, 4);
        let m = MarkedSet::new(&g, [VertexCoord::new(0, 0)]).unwrap();
        let series = evolve_dense(&g, &m, 3.0 / 16.0, 40).unwrap();
        assert!((series[0] - 1.0 / 16.0).abs() < 1e-15);
        assert!(series.iter().all(|&p| (-1e-12..=1.0 + 1e-12).contains(&p)));

        let empty = evolve_dense(&g, &MarkedSet::empty(), 0.0, 10).unwrap();
        assert!(empty.iter().all(|&p| p == 0.0));
    }
}
