//! Reduced crystallographic root systems in exact integer coordinates.
//!
//! Every vector is written over the concatenated simple roots
//! `α_1, …, α_r` of the components, in Bourbaki numbering:
//!
//! * `A_r`: a chain `1 - 2 - … - r`.
//! * `B_r`: chain, `α_1 … α_{r-1}` long, `α_r` short.
//! * `C_r`: chain, `α_1 … α_{r-1}` short, `α_r` long.
//! * `D_r`: chain `1 - … - (r-2)`, with both `r-1` and `r` attached to `r-2`.
//! * `E_r`: chain `1 - 3 - 4 - … - r`, with `2` attached to `4`.
//! * `F_4`: chain, `α_1, α_2` long, `α_3, α_4` short.
//! * `G_2`: `α_1` short, `α_2` long.
//!
//! The invariant form is scaled so short roots have squared length 2 and long
//! roots 4 (`B`, `C`, `F`) or 6 (`G`); all roots of a simply laced component
//! count as short.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Neg, Range};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{Reflection, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
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
    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }

    fn letter(self) -> char {
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

    fn from_letter(c: char) -> Option<Self> {
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

/// An irreducible component `X_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl Component {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            // C2 and D3 duplicate B2 and A3
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Component { family, rank })
        } else {
            Err(Error::InvalidSpec(format!(
                "{}{rank}: no such irreducible root system",
                family.letter()
            )))
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        self.family.is_simply_laced()
    }

    /// Number of short and long nodes in the Dynkin diagram, `(r_s, r_ℓ)`.
    /// Simply laced components report `(r, 0)`.
    pub fn node_counts(&self) -> (usize, usize) {
        let r = self.rank;
        match self.family {
            Family::B => (1, r - 1),
            Family::C => (r - 1, 1),
            Family::F => (2, 2),
            Family::G => (1, 1),
            _ => (r, 0),
        }
    }

    fn gram(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut g = vec![vec![0i64; r]; r];
        let mut link = |i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => (0..r.saturating_sub(1)).for_each(|i| link(i, i + 1, -1)),
            Family::B => (0..r - 1).for_each(|i| link(i, i + 1, -2)),
            Family::C => {
                (0..r - 2).for_each(|i| link(i, i + 1, -1));
                link(r - 2, r - 1, -2);
            }
            Family::D => {
                (0..r - 2).for_each(|i| link(i, i + 1, -1));
                link(r - 3, r - 1, -1);
            }
            Family::E => {
                link(0, 2, -1);
                link(1, 3, -1);
                (2..r - 1).for_each(|i| link(i, i + 1, -1));
            }
            Family::F => {
                link(0, 1, -2);
                link(1, 2, -2);
                link(2, 3, -1);
            }
            Family::G => link(0, 1, -3),
        }
        for i in 0..r {
            g[i][i] = match (self.family, i) {
                (Family::B, i) if i < r - 1 => 4,
                (Family::C, i) if i == r - 1 => 4,
                (Family::F, 0 | 1) => 4,
                (Family::G, 1) => 6,
                _ => 2,
            };
        }
        g
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for Component {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(format!("bad component {s:?}")))?;
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad rank in component {s:?}")))?;
        Component::new(family, rank)
    }
}

/// A (possibly reducible) root system type, components sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Component>", into = "Vec<Component>")]
pub struct RootSystemSpec {
    components: Vec<Component>,
}

impl RootSystemSpec {
    pub fn new(mut components: Vec<Component>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidSpec("no components".into()));
        }
        for c in &components {
            Component::new(c.family, c.rank)?;
        }
        components.sort();
        Ok(RootSystemSpec { components })
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }
}

impl TryFrom<Vec<Component>> for RootSystemSpec {
    type Error = Error;

    fn try_from(v: Vec<Component>) -> Result<Self> {
        RootSystemSpec::new(v)
    }
}

impl From<RootSystemSpec> for Vec<Component> {
    fn from(s: RootSystemSpec) -> Self {
        s.components
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    /// Parses `"A2"`, `"B3+G2"`, …
    fn from_str(s: &str) -> Result<Self> {
        let comps = s
            .split('+')
            .map(str::parse)
            .collect::<Result<Vec<Component>>>()?;
        RootSystemSpec::new(comps)
    }
}

/// Integer coordinates over the simple roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(Vec<i32>);

impl RootVector {
    pub fn new(coeffs: Vec<i32>) -> Self {
        RootVector(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        RootVector(vec![0; rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVector(v)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with all coefficients nonnegative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    /// `self - k·other`
    pub fn sub_scaled(&self, k: i64, other: &RootVector) -> RootVector {
        RootVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| (a as i64 - k * b as i64) as i32)
                .collect(),
        )
    }

    pub fn height(&self) -> i64 {
        self.0.iter().map(|&c| c as i64).sum()
    }
}

impl Neg for &RootVector {
    type Output = RootVector;

    fn neg(self) -> RootVector {
        RootVector(self.0.iter().map(|c| -c).collect())
    }
}

impl From<Vec<i32>> for RootVector {
    fn from(v: Vec<i32>) -> Self {
        RootVector(v)
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Short,
    Long,
}

/// Where a root lives in the positive-root table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootRef {
    pub positive: usize,
    pub negative: bool,
}

struct PositiveInfo {
    norm: i64,
    length: LengthClass,
    component: usize,
    height: i64,
}

/// An immutable root system with all derived tables built up front.
pub struct RootSystem {
    spec: RootSystemSpec,
    rank: usize,
    offsets: Vec<usize>,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<RootVector>,
    info: Vec<PositiveInfo>,
    index: HashMap<RootVector, RootRef>,
    dominant: Vec<usize>,
    reflections: Vec<WeylElement>,
    reflection_lookup: HashMap<WeylElement, u16>,
    conj: Vec<u16>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("spec", &self.spec.to_string())
            .field("positive_roots", &self.positive.len())
            .finish()
    }
}

impl RootSystem {
    /// Builds the root system of `spec` by closing the simple roots under the
    /// simple reflections.
    pub fn build(spec: &RootSystemSpec) -> Result<Self> {
        let rank = spec.rank();
        let mut offsets = Vec::with_capacity(spec.components.len() + 1);
        let mut gram = vec![vec![0i64; rank]; rank];
        let mut off = 0;
        for comp in &spec.components {
            for (i, row) in comp.gram().into_iter().enumerate() {
                gram[off + i][off..off + comp.rank].copy_from_slice(&row);
            }
            offsets.push(off);
            off += comp.rank;
        }
        offsets.push(rank);
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();

        let ip = |x: &RootVector, y: &RootVector| form(&gram, x, y);
        let simple: Vec<RootVector> = (0..rank).map(|i| RootVector::unit(rank, i)).collect();
        let mut seen: HashMap<RootVector, ()> = HashMap::new();
        let mut queue: VecDeque<RootVector> = simple.iter().cloned().collect();
        for s in &simple {
            seen.insert(s.clone(), ());
        }
        while let Some(x) = queue.pop_front() {
            for (i, a) in simple.iter().enumerate() {
                let n = 2 * ip(&x, a) / gram[i][i];
                let y = x.sub_scaled(n, a);
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }

        let mut positive: Vec<RootVector> =
            seen.into_keys().filter(RootVector::is_positive).collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        if positive.len() > u16::MAX as usize {
            return Err(Error::InvalidSpec("too many roots".into()));
        }

        let component_of = |v: &RootVector| {
            let first = v.coeffs().iter().position(|&c| c != 0).unwrap();
            offsets.partition_point(|&o| o <= first) - 1
        };
        let info: Vec<PositiveInfo> = positive
            .iter()
            .map(|p| {
                let norm = ip(p, p);
                PositiveInfo {
                    norm,
                    length: if norm == 2 { LengthClass::Short } else { LengthClass::Long },
                    component: component_of(p),
                    height: p.height(),
                }
            })
            .collect();

        let mut index = HashMap::with_capacity(2 * positive.len());
        for (k, p) in positive.iter().enumerate() {
            index.insert(p.clone(), RootRef { positive: k, negative: false });
            index.insert(-p, RootRef { positive: k, negative: true });
        }

        let dominant = (0..spec.components.len())
            .map(|c| {
                (0..positive.len())
                    .filter(|&k| info[k].component == c && info[k].length == LengthClass::Short)
                    .max_by_key(|&k| info[k].height)
                    .unwrap()
            })
            .collect();

        let mut rs = RootSystem {
            spec: spec.clone(),
            rank,
            offsets,
            gram,
            cartan,
            positive,
            info,
            index,
            dominant,
            reflections: Vec::new(),
            reflection_lookup: HashMap::new(),
            conj: Vec::new(),
        };

        let n = rs.positive.len();
        let mut conj = vec![0u16; n * n];
        for p in 0..n {
            for q in 0..n {
                let img = rs.reflect_unchecked(p, &rs.positive[q]);
                conj[p * n + q] = rs.index[&img].positive as u16;
            }
        }
        rs.conj = conj;
        rs.reflections = (0..n)
            .map(|p| {
                let cols: Vec<RootVector> = simple
                    .iter()
                    .map(|a| rs.reflect_unchecked(p, a))
                    .collect();
                WeylElement::from_columns(&cols)
            })
            .collect();
        rs.reflection_lookup = rs
            .reflections
            .iter()
            .enumerate()
            .map(|(p, m)| (m.clone(), p as u16))
            .collect();
        Ok(rs)
    }

    pub fn spec(&self) -> &RootSystemSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `cartan[i][j] = n(α_i, α_j) = 2(α_i|α_j)/(α_j|α_j)`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn num_components(&self) -> usize {
        self.spec.components.len()
    }

    /// Coordinate block of component `c`.
    pub fn component_range(&self, c: usize) -> Range<usize> {
        self.offsets[c]..self.offsets[c + 1]
    }

    /// Positive roots sorted by height, ties broken by descending coefficients,
    /// so index `i < rank` is the simple root `α_{i+1}`.
    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Positive roots followed by their negatives.
    pub fn roots(&self) -> Vec<RootVector> {
        self.positive
            .iter()
            .cloned()
            .chain(self.positive.iter().map(|p| -p))
            .collect()
    }

    pub fn simple_root(&self, i: usize) -> &RootVector {
        &self.positive[i]
    }

    pub fn root_ref(&self, v: &RootVector) -> Option<RootRef> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &RootVector) -> bool {
        self.index.contains_key(v)
    }

    pub fn positive_index(&self, v: &RootVector) -> Result<usize> {
        self.root_ref(v)
            .map(|r| r.positive)
            .ok_or_else(|| Error::NotARoot(v.clone()))
    }

    pub fn length_class(&self, positive: usize) -> LengthClass {
        self.info[positive].length
    }

    pub fn component_of(&self, positive: usize) -> usize {
        self.info[positive].component
    }

    pub fn norm(&self, positive: usize) -> i64 {
        self.info[positive].norm
    }

    pub fn root_height(&self, positive: usize) -> i64 {
        self.info[positive].height
    }

    /// `λ` of component `c`: the highest root if simply laced, else the
    /// highest short root.
    pub fn dominant_short(&self, c: usize) -> &RootVector {
        &self.positive[self.dominant[c]]
    }

    pub fn dominant_short_index(&self, c: usize) -> usize {
        self.dominant[c]
    }

    fn check_dim(&self, x: &RootVector) -> Result<()> {
        if x.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: x.len() });
        }
        Ok(())
    }

    pub fn inner_product(&self, x: &RootVector, y: &RootVector) -> Result<i64> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(form(&self.gram, x, y))
    }

    /// `n(x, α) = 2(x|α)/(α|α)` for a root `α`.
    pub fn cartan_integer(&self, x: &RootVector, alpha: &RootVector) -> Result<i64> {
        self.check_dim(x)?;
        let r = self.root_ref(alpha).ok_or_else(|| Error::NotARoot(alpha.clone()))?;
        let num = 2 * form(&self.gram, x, alpha);
        let den = self.info[r.positive].norm;
        if num % den != 0 {
            return Err(Error::InvalidInput(format!(
                "n({x}, {alpha}) = {num}/{den} is not an integer"
            )));
        }
        Ok(num / den)
    }

    /// `s_α(x) = x - n(x, α)·α`.
    pub fn reflect(&self, alpha: &RootVector, x: &RootVector) -> Result<RootVector> {
        let n = self.cartan_integer(x, alpha)?;
        Ok(x.sub_scaled(n, alpha))
    }

    pub(crate) fn reflect_unchecked(&self, positive: usize, x: &RootVector) -> RootVector {
        let a = &self.positive[positive];
        let n = 2 * form(&self.gram, x, a) / self.info[positive].norm;
        x.sub_scaled(n, a)
    }

    pub fn height(&self, beta: &RootVector) -> Result<i64> {
        let r = self.root_ref(beta).ok_or_else(|| Error::NotARoot(beta.clone()))?;
        if r.negative {
            return Err(Error::NotPositive(beta.clone()));
        }
        Ok(self.info[r.positive].height)
    }

    /// Total height of the axes, `h(T) = Σ ht(β_i)`.
    pub fn set_height(&self, reflections: &[Reflection]) -> i64 {
        reflections
            .iter()
            .map(|t| self.info[t.axis_index()].height)
            .sum()
    }

    pub fn positive_representative(&self, beta: &RootVector) -> Result<RootVector> {
        self.positive_index(beta).map(|k| self.positive[k].clone())
    }

    /// Axis index of `s_p s_q s_p`.
    #[inline]
    pub fn conjugate_index(&self, p: usize, q: usize) -> usize {
        self.conj[p * self.positive.len() + q] as usize
    }

    pub fn reflection_matrix(&self, positive: usize) -> &WeylElement {
        &self.reflections[positive]
    }

    pub(crate) fn lookup_reflection(&self, g: &WeylElement) -> Option<usize> {
        self.reflection_lookup.get(g).map(|&p| p as usize)
    }

    pub fn summary(&self) -> RootSystemSummary {
        RootSystemSummary {
            spec: self.spec.to_string(),
            components: self.spec.components.clone(),
            positive_roots: self.positive.clone(),
            roots: self.roots(),
            cartan: self.cartan.clone(),
            gram: self.gram.clone(),
            lengths: self.info.iter().map(|i| i.length).collect(),
            dominant_short: self.dominant.iter().map(|&k| self.positive[k].clone()).collect(),
        }
    }
}

fn form(gram: &[Vec<i64>], x: &RootVector, y: &RootVector) -> i64 {
    let mut s = 0;
    for (i, &a) in x.coeffs().iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in y.coeffs().iter().enumerate() {
            s += a as i64 * gram[i][j] * b as i64;
        }
    }
    s
}

/// Serialized form of a root system.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootSystemSummary {
    pub spec: String,
    pub components: Vec<Component>,
    pub positive_roots: Vec<RootVector>,
    pub roots: Vec<RootVector>,
    pub cartan: Vec<Vec<i64>>,
    pub gram: Vec<Vec<i64>>,
    pub lengths: Vec<LengthClass>,
    pub dominant_short: Vec<RootVector>,
}
