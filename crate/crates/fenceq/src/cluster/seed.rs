use crate::polyseq::{Coeff, Poly};
use crate::surface::{shear_vector, Arc, MultiLamination, PolygonTriangulation};

use super::ClusterError;

/// Exchange matrix with coefficient rows, specialized cluster values and
/// the diagonal carried by each index.
///
/// Rows `0..k` form the skew-symmetric exchange block, rows `k..k+L` are
/// coefficient rows. Values are cluster variables with every initial
/// cluster variable set to 1 and every coefficient variable set to `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedSeed<C> {
    matrix: Vec<Vec<i64>>,
    values: Vec<Poly<C>>,
    labels: Vec<Arc>,
    triangulation: PolygonTriangulation,
}

/// Seed of `t` with one coefficient row per lamination (its shear vector).
pub fn seed_from<C: Coeff>(
    t: &PolygonTriangulation,
    ml: &MultiLamination,
) -> Result<ExtendedSeed<C>, ClusterError> {
    let mut matrix = t.signed_adjacency();
    for lam in ml {
        matrix.push(shear_vector(t, lam)?);
    }
    Ok(ExtendedSeed::new(t, matrix))
}

/// Seed of `t` with principal coefficients (identity coefficient block).
pub fn principal_seed<C: Coeff>(t: &PolygonTriangulation) -> ExtendedSeed<C> {
    let k = t.diagonals().len();
    let mut matrix = t.signed_adjacency();
    for i in 0..k {
        let mut row = vec![0; k];
        row[i] = 1;
        matrix.push(row);
    }
    ExtendedSeed::new(t, matrix)
}

impl<C: Coeff> ExtendedSeed<C> {
    fn new(t: &PolygonTriangulation, matrix: Vec<Vec<i64>>) -> Self {
        let k = t.diagonals().len();
        ExtendedSeed {
            matrix,
            values: vec![Poly::one(); k],
            labels: t.diagonals().to_vec(),
            triangulation: t.clone(),
        }
    }

    /// Number of mutable indices.
    pub fn width(&self) -> usize {
        self.labels.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn values(&self) -> &[Poly<C>] {
        &self.values
    }

    pub fn labels(&self) -> &[Arc] {
        &self.labels
    }

    pub fn triangulation(&self) -> &PolygonTriangulation {
        &self.triangulation
    }

    pub fn index_of_label(&self, d: &Arc) -> Option<usize> {
        self.labels.iter().position(|l| l == d)
    }

    /// Value carried by diagonal `d`, or 1 for a side or an initial diagonal.
    pub fn value_of(&self, d: &Arc) -> Poly<C> {
        self.index_of_label(d)
            .map_or_else(Poly::one, |i| self.values[i].clone())
    }

    /// The two monomial products of the exchange relation at `k`, with the
    /// coefficient exponents they carry: `(positive, negative)`.
    pub(crate) fn exchange_terms(&self, k: usize) -> ((Poly<C>, usize), (Poly<C>, usize)) {
        let width = self.width();
        let mut pos = Poly::one();
        let mut neg = Poly::one();
        let (mut e_pos, mut e_neg) = (0usize, 0usize);
        for (i, row) in self.matrix.iter().enumerate() {
            let b = row[k];
            if i < width {
                if b > 0 {
                    pos = pos.poly_mul(&self.values[i].pow(b as u32));
                } else if b < 0 {
                    neg = neg.poly_mul(&self.values[i].pow((-b) as u32));
                }
            } else if b > 0 {
                e_pos += b as usize;
            } else {
                e_neg += (-b) as usize;
            }
        }
        ((pos, e_pos), (neg, e_neg))
    }

    /// Mutation at index `k` (0-based): matrix rule, exchange relation and flip.
    pub fn mutate(&self, k: usize) -> Result<Self, ClusterError> {
        let mut next = self.clone();
        next.mutate_in_place(k)?;
        Ok(next)
    }

    pub fn mutate_in_place(&mut self, k: usize) -> Result<(), ClusterError> {
        let width = self.width();
        if k >= width {
            return Err(ClusterError::IndexOutOfRange { index: k, width });
        }
        let ((pos, e_pos), (neg, e_neg)) = self.exchange_terms(k);
        let num = pos.shift(e_pos).poly_add(&neg.shift(e_neg));
        let value = num.exact_div(&self.values[k])?;

        let old = &self.matrix;
        let mut m = old.clone();
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = if i == k || j == k {
                    -old[i][j]
                } else {
                    old[i][j] + (-old[i][k]).max(0) * old[k][j] + old[i][k] * old[k][j].max(0)
                };
            }
        }
        let d = self.labels[k];
        let flipped = self.triangulation.flipped_diagonal(&d)?;
        self.triangulation = self.triangulation.flip(&d)?;
        self.labels[k] = flipped;
        self.matrix = m;
        self.values[k] = value;
        Ok(())
    }
}
