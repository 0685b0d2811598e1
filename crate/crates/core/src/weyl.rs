//! Weyl group elements as integer matrices on simple-root coordinates.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, RootVector};

/// Default cap on the size of a generated subgroup.
pub const DEFAULT_SUBGROUP_CAP: usize = 1_000_000;

/// A linear map of the root lattice, stored row-major; column `j` is the
/// image of `α_{j+1}`. Equality and hashing go through the matrix itself.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    entries: Box<[i32]>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut entries = vec![0; rank * rank].into_boxed_slice();
        for i in 0..rank {
            entries[i * rank + i] = 1;
        }
        WeylElement { rank, entries }
    }

    pub fn from_columns(cols: &[RootVector]) -> Self {
        let rank = cols.len();
        let mut entries = vec![0; rank * rank].into_boxed_slice();
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.coeffs().iter().enumerate() {
                entries[i * rank + j] = x;
            }
        }
        WeylElement { rank, entries }
    }

    pub fn from_rows(rows: &[Vec<i32>]) -> Result<Self> {
        let rank = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != rank) {
            return Err(Error::DimensionMismatch { expected: rank, found: bad.len() });
        }
        Ok(WeylElement { rank, entries: rows.concat().into_boxed_slice() })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, row: usize, col: usize) -> i32 {
        self.entries[row * self.rank + col]
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        self.entries.chunks(self.rank.max(1)).map(<[i32]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank)
    }

    /// `self · other`, i.e. apply `other` first.
    pub fn multiply(&self, other: &WeylElement) -> Result<WeylElement> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(self.compose(other))
    }

    pub(crate) fn compose(&self, other: &WeylElement) -> WeylElement {
        let r = self.rank;
        let mut entries = vec![0i32; r * r].into_boxed_slice();
        for i in 0..r {
            for k in 0..r {
                let a = self.entries[i * r + k];
                if a == 0 {
                    continue;
                }
                for j in 0..r {
                    entries[i * r + j] += a * other.entries[k * r + j];
                }
            }
        }
        WeylElement { rank: r, entries }
    }

    pub fn apply(&self, x: &RootVector) -> Result<RootVector> {
        if x.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: x.len() });
        }
        let r = self.rank;
        Ok(RootVector::new(
            (0..r)
                .map(|i| (0..r).map(|j| self.entries[i * r + j] * x.coeffs()[j]).sum())
                .collect(),
        ))
    }

    fn rational(&self) -> Vec<Vec<Ratio<i64>>> {
        self.rows()
            .into_iter()
            .map(|r| r.into_iter().map(|x| Ratio::from_integer(x as i64)).collect())
            .collect()
    }

    /// Exact inverse. Elements of a Weyl group have determinant ±1, so the
    /// inverse is again integral; a non-integral result is an error.
    pub fn inverse(&self) -> Result<WeylElement> {
        let r = self.rank;
        let mut a = self.rational();
        let mut inv: Vec<Vec<Ratio<i64>>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| Ratio::from_integer((i == j) as i64))
                    .collect()
            })
            .collect();
        for col in 0..r {
            let pivot = (col..r)
                .find(|&i| a[i][col] != Ratio::from_integer(0))
                .ok_or_else(|| Error::InvalidInput("singular matrix".into()))?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col];
            for j in 0..r {
                a[col][j] /= p;
                inv[col][j] /= p;
            }
            for i in 0..r {
                if i != col && a[i][col] != Ratio::from_integer(0) {
                    let f = a[i][col];
                    for j in 0..r {
                        let (x, y) = (a[col][j], inv[col][j]);
                        a[i][j] -= f * x;
                        inv[i][j] -= f * y;
                    }
                }
            }
        }
        let rows = inv
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| {
                        if x.is_integer() {
                            Ok(x.to_integer() as i32)
                        } else {
                            Err(Error::InvalidInput("inverse is not integral".into()))
                        }
                    })
                    .collect::<Result<Vec<i32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        WeylElement::from_rows(&rows)
    }

    pub fn determinant(&self) -> i64 {
        let r = self.rank;
        let mut a = self.rational();
        let mut det = Ratio::from_integer(1i64);
        for col in 0..r {
            let Some(pivot) = (col..r).find(|&i| a[i][col] != Ratio::from_integer(0)) else {
                return 0;
            };
            if pivot != col {
                a.swap(col, pivot);
                det = -det;
            }
            let p = a[col][col];
            det *= p;
            for i in col + 1..r {
                let f = a[i][col] / p;
                for j in col..r {
                    let x = a[col][j];
                    a[i][j] -= f * x;
                }
            }
        }
        det.to_integer()
    }

    /// The sign character `ε`.
    pub fn sign(&self) -> i32 {
        self.determinant().signum() as i32
    }

    pub fn order(&self) -> usize {
        let id = WeylElement::identity(self.rank);
        let mut x = self.clone();
        let mut k = 1;
        while x != id {
            x = x.compose(self);
            k += 1;
        }
        k
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeylElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i32>>::deserialize(d)?;
        WeylElement::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// A reflection `s_β`, named by the index of its positive axis `β` in
/// [`RootSystem::positive_roots`]. The matrix lives in the root system's
/// reflection table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Reflection(u16);

impl Reflection {
    pub fn from_axis_index(positive: usize) -> Self {
        Reflection(positive as u16)
    }

    pub fn axis_index(self) -> usize {
        self.0 as usize
    }

    pub fn axis(self, rs: &RootSystem) -> &RootVector {
        &rs.positive_roots()[self.axis_index()]
    }

    pub fn element(self, rs: &RootSystem) -> &WeylElement {
        rs.reflection_matrix(self.axis_index())
    }

    /// `self · other · self`, again a reflection.
    pub fn conjugate(self, rs: &RootSystem, other: Reflection) -> Reflection {
        Reflection(rs.conjugate_index(self.axis_index(), other.axis_index()) as u16)
    }
}

/// `s_β` for any root `β`; `s_β = s_{-β}`.
pub fn reflection_element(rs: &RootSystem, beta: &RootVector) -> Result<Reflection> {
    rs.positive_index(beta).map(Reflection::from_axis_index)
}

pub fn is_reflection(rs: &RootSystem, g: &WeylElement) -> Option<Reflection> {
    rs.lookup_reflection(g).map(Reflection::from_axis_index)
}

pub fn simple_reflections(rs: &RootSystem) -> Vec<Reflection> {
    (0..rs.rank()).map(Reflection::from_axis_index).collect()
}

/// Closure of `gens` under multiplication. Fails once more than `cap`
/// elements have been found; never returns a partial group.
pub fn generate_subgroup(
    rs: &RootSystem,
    gens: &[WeylElement],
    cap: usize,
) -> Result<BTreeSet<WeylElement>> {
    for g in gens {
        if g.rank() != rs.rank() {
            return Err(Error::RankMismatch(rs.rank(), g.rank()));
        }
    }
    let id = WeylElement::identity(rs.rank());
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { what: "subgroup closure", cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Subgroup generated by a list of reflections.
pub fn reflection_subgroup(
    rs: &RootSystem,
    gens: &[Reflection],
    cap: usize,
) -> Result<BTreeSet<WeylElement>> {
    let mats: Vec<WeylElement> = gens.iter().map(|t| t.element(rs).clone()).collect();
    generate_subgroup(rs, &mats, cap)
}

pub fn weyl_group_order(rs: &RootSystem, cap: usize) -> Result<usize> {
    reflection_subgroup(rs, &simple_reflections(rs), cap).map(|g| g.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap()).unwrap()
    }

    fn v(c: &[i32]) -> RootVector {
        RootVector::new(c.to_vec())
    }

    #[test]
    fn a1_reflection_matrix() {
        let a1 = rs("A1");
        let s = reflection_element(&a1, &v(&[1])).unwrap();
        assert_eq!(s.element(&a1).rows(), vec![vec![-1]]);
    }

    #[test]
    fn a2_reflection_columns() {
        let a2 = rs("A2");
        let s1 = reflection_element(&a2, &v(&[1, 0])).unwrap();
        let m = s1.element(&a2);
        assert_eq!(m.apply(&v(&[1, 0])).unwrap(), v(&[-1, 0]));
        assert_eq!(m.apply(&v(&[0, 1])).unwrap(), v(&[1, 1]));
        assert_eq!(
            reflection_element(&a2, &v(&[-1, -1])).unwrap(),
            reflection_element(&a2, &v(&[1, 1])).unwrap()
        );
    }

    #[test]
    fn products_and_orders() {
        let a2 = rs("A2");
        let s1 = a2.reflection_matrix(0);
        let s2 = a2.reflection_matrix(1);
        assert!(s1.multiply(s1).unwrap().is_identity());
        let rot = s1.multiply(s2).unwrap();
        assert_eq!(rot.order(), 3);
        assert_eq!(is_reflection(&a2, &rot), None);
        assert_eq!(is_reflection(&a2, &WeylElement::identity(2)), None);
        assert!(WeylElement::identity(2).inverse().unwrap().is_identity());
        assert_eq!(rot.multiply(&rot.inverse().unwrap()).unwrap(), WeylElement::identity(2));
        assert_eq!(rot.sign(), 1);
        assert_eq!(s1.sign(), -1);
        assert!(matches!(
            s1.multiply(&WeylElement::identity(3)),
            Err(Error::RankMismatch(2, 3))
        ));
    }

    #[test]
    fn group_orders() {
        for (s, order) in [("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B3", 48)] {
            assert_eq!(weyl_group_order(&rs(s), DEFAULT_SUBGROUP_CAP).unwrap(), order, "{s}");
        }
        let a2 = rs("A2");
        assert_eq!(generate_subgroup(&a2, &[], 10).unwrap().len(), 1);
        assert!(weyl_group_order(&a2, 5).unwrap_err().is_cap());
    }

    #[test]
    fn g2_short_reflections_generate_no_long_ones() {
        let g2 = rs("G2");
        let short: Vec<Reflection> = (0..g2.num_positive())
            .filter(|&k| g2.length_class(k) == crate::rootsys::LengthClass::Short)
            .map(Reflection::from_axis_index)
            .collect();
        let group = reflection_subgroup(&g2, &short, 100).unwrap();
        for g in &group {
            if let Some(t) = is_reflection(&g2, g) {
                assert_eq!(g2.length_class(t.axis_index()), crate::rootsys::LengthClass::Short);
            }
        }
    }

    #[test]
    fn conjugation_covariance_on_b3() {
        let b3 = rs("B3");
        let w = weyl_group_order(&b3, 100).unwrap();
        assert_eq!(w, 48);
        let group = reflection_subgroup(&b3, &simple_reflections(&b3), 100).unwrap();
        for g in &group {
            let gi = g.inverse().unwrap();
            for (k, beta) in b3.positive_roots().iter().enumerate() {
                let conj = g.compose(b3.reflection_matrix(k)).compose(&gi);
                let axis = b3.positive_representative(&g.apply(beta).unwrap()).unwrap();
                assert_eq!(is_reflection(&b3, &conj).unwrap().axis(&b3), &axis);
            }
        }
    }
}
