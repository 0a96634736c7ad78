use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A simple Cartan type with Bourbaki numbering of the simple roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InadmissibleType {
                letter: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }

    /// Squared lengths of the simple roots, short roots normalized to 2.
    pub fn simple_root_lengths(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![2; n],
            Family::B => (1..=n).map(|i| if i == n { 2 } else { 4 }).collect(),
            Family::C => (1..=n).map(|i| if i == n { 4 } else { 2 }).collect(),
            Family::F => vec![4, 4, 2, 2],
            Family::G => vec![2, 6],
        }
    }

    /// Edges of the Dynkin diagram as pairs of 0-based node indices.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let path = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => path(n),
            Family::D => {
                let mut e = path(n - 1);
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Every admissible type of rank at most `max_rank`, in a stable order.
    pub fn all_up_to(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D] {
            for rank in 1..=max_rank {
                if let Ok(t) = CartanType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        for (family, rank) in [
            (Family::E, 6),
            (Family::E, 7),
            (Family::E, 8),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            if rank <= max_rank {
                out.push(CartanType { family, rank });
            }
        }
        out
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::UnknownType(s.to_string()))?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest
            .parse::<usize>()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// Cartan matrix with `a[i][j] = <alpha_i, alpha_j^vee>`, so that
/// `s_j(alpha_i) = alpha_i - a[i][j] alpha_j`.
pub(crate) fn cartan_matrix(t: &CartanType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let len = t.simple_root_lengths();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in t.edges() {
        let b = -len[i].max(len[j]) / 2;
        a[i][j] = 2 * b / len[j];
        a[j][i] = 2 * b / len[i];
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_rejects() {
        assert_eq!("E7".parse::<CartanType>().unwrap().rank(), 7);
        assert_eq!("d_5".parse::<CartanType>().unwrap().family(), Family::D);
        assert_eq!(
            "D3".parse::<CartanType>(),
            Err(Error::InadmissibleType { letter: 'D', rank: 3 })
        );
        assert!("E9".parse::<CartanType>().is_err());
        assert!("X2".parse::<CartanType>().is_err());
    }

    #[test]
    fn g2_and_b2_cartan() {
        let g2 = cartan_matrix(&CartanType::new(Family::G, 2).unwrap());
        assert_eq!(g2, vec![vec![2, -1], vec![-3, 2]]);
        let b2 = cartan_matrix(&CartanType::new(Family::B, 2).unwrap());
        // alpha_2 short: <alpha_1, alpha_2^vee> = -2
        assert_eq!(b2, vec![vec![2, -2], vec![-1, 2]]);
        let c2 = cartan_matrix(&CartanType::new(Family::C, 2).unwrap());
        assert_eq!(c2, vec![vec![2, -1], vec![-2, 2]]);
    }

    #[test]
    fn e6_branch_node() {
        let a = cartan_matrix(&CartanType::new(Family::E, 6).unwrap());
        assert_eq!(a[1][3], -1);
        assert_eq!(a[0][2], -1);
        assert_eq!(a[1][2], 0);
    }
}
