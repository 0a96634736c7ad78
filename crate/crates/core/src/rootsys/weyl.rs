use serde::{Deserialize, Serialize};

/// An element of the Weyl group, stored as its integer matrix on
/// fundamental-weight coordinates (acting on column vectors).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        WeylElement { matrix }
    }

    pub(crate) fn from_matrix(matrix: Vec<Vec<i64>>) -> Self {
        WeylElement { matrix }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// The product `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..n).map(|k| self.matrix[i][k] * other.matrix[k][j]).sum();
            }
        }
        WeylElement { matrix: m }
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank())
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    /// Inverse, found as the last power before the identity.
    pub fn inverse(&self) -> WeylElement {
        let mut prev = WeylElement::identity(self.rank());
        let mut cur = self.clone();
        while !cur.is_identity() {
            prev = cur.clone();
            cur = cur.compose(self);
        }
        prev
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = cur.compose(self);
            k += 1;
        }
        k
    }

    /// `1 - w` as an integer matrix on fundamental-weight coordinates.
    pub fn one_minus(&self) -> Vec<Vec<i64>> {
        self.shifted(-1)
    }

    /// `1 + w` as an integer matrix on fundamental-weight coordinates.
    pub fn one_plus(&self) -> Vec<Vec<i64>> {
        self.shifted(1)
    }

    fn shifted(&self, sign: i64) -> Vec<Vec<i64>> {
        self.matrix
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| i64::from(i == j) + sign * x)
                    .collect()
            })
            .collect()
    }
}
