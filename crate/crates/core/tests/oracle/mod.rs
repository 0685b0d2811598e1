//! Independent reference implementations used to cross-check the library.
//!
//! Everything here starts from hand-written Cartan matrices and works with
//! plain `Vec<i32>` coefficient vectors and `Vec<i64>` matrices, sharing no
//! code with the crate under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

pub type Root = Vec<i32>;
pub type Mat = Vec<i64>;

/// Cartan matrix `a[i][j] = 2(α_i|α_j)/(α_j|α_j)`, Bourbaki numbering.
pub fn cartan(family: char, r: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut edge = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match family {
        'A' => (1..r).for_each(|i| edge(i - 1, i, -1, -1)),
        'B' => {
            (1..r - 1).for_each(|i| edge(i - 1, i, -1, -1));
            edge(r - 2, r - 1, -2, -1);
        }
        'C' => {
            (1..r - 1).for_each(|i| edge(i - 1, i, -1, -1));
            edge(r - 2, r - 1, -1, -2);
        }
        'D' => {
            (1..r - 1).for_each(|i| edge(i - 1, i, -1, -1));
            edge(r - 3, r - 1, -1, -1);
        }
        'E' => {
            edge(0, 2, -1, -1);
            edge(1, 3, -1, -1);
            (3..r).for_each(|i| edge(i - 1, i, -1, -1));
        }
        'F' => {
            edge(0, 1, -1, -1);
            edge(1, 2, -2, -1);
            edge(2, 3, -1, -1);
        }
        'G' => edge(0, 1, -1, -3),
        _ => panic!("unknown family {family}"),
    }
    a
}

/// Block-diagonal Cartan matrix of a spec like `"A1+G2"`.
pub fn cartan_of(spec: &str) -> Vec<Vec<i64>> {
    let blocks: Vec<Vec<Vec<i64>>> = spec
        .split('+')
        .map(|c| {
            let f = c.chars().next().unwrap();
            cartan(f, c[1..].parse().unwrap())
        })
        .collect();
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut out = vec![vec![0; n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            out[off + i][off..off + b.len()].copy_from_slice(row);
        }
        off += b.len();
    }
    out
}

pub fn determinant(m: &[Vec<i64>]) -> i64 {
    // Bareiss fraction-free elimination
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&p| a[p][k] != 0) else { return 0 };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

pub fn weyl_order(family: char, r: u64) -> u64 {
    let fact = |n: u64| (1..=n).product::<u64>();
    match family {
        'A' => fact(r + 1),
        'B' | 'C' => (1 << r) * fact(r),
        'D' => (1 << (r - 1)) * fact(r),
        'E' => [51_840, 2_903_040, 696_729_600][(r - 6) as usize],
        'F' => 1152,
        'G' => 12,
        _ => unreachable!(),
    }
}

pub fn num_roots(family: char, r: usize) -> usize {
    match family {
        'A' => r * (r + 1),
        'B' | 'C' => 2 * r * r,
        'D' => 2 * r * (r - 1),
        'E' => [72, 126, 240][r - 6],
        'F' => 48,
        'G' => 12,
        _ => unreachable!(),
    }
}

pub struct Oracle {
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// `(α_i|α_j)` with the short roots of every component of squared length 2.
    pub gram: Vec<Vec<i64>>,
    pub component: Vec<usize>,
    /// Positive roots from α-strings.
    pub positive: Vec<Root>,
}

impl Oracle {
    pub fn new(spec: &str) -> Self {
        let cartan = cartan_of(spec);
        let rank = cartan.len();

        // components and relative norms by walking the Dynkin diagram:
        // a[i][j] / a[j][i] = |α_i|² / |α_j|²
        let mut component = vec![usize::MAX; rank];
        let mut norm = vec![0f64; rank];
        let mut ncomp = 0;
        for s in 0..rank {
            if component[s] != usize::MAX {
                continue;
            }
            component[s] = ncomp;
            norm[s] = 1.0;
            let mut stack = vec![s];
            let mut members = vec![s];
            while let Some(i) = stack.pop() {
                for j in 0..rank {
                    if j != i && cartan[i][j] != 0 && component[j] == usize::MAX {
                        component[j] = ncomp;
                        norm[j] = norm[i] * cartan[j][i] as f64 / cartan[i][j] as f64;
                        stack.push(j);
                        members.push(j);
                    }
                }
            }
            let min = members.iter().map(|&i| norm[i]).fold(f64::INFINITY, f64::min);
            for &i in &members {
                norm[i] = 2.0 * norm[i] / min;
            }
            ncomp += 1;
        }
        let norm: Vec<i64> = norm.iter().map(|x| x.round() as i64).collect();
        let gram: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| cartan[i][j] * norm[j] / 2).collect())
            .collect();

        let positive = alpha_strings(&cartan);
        Oracle { rank, cartan, gram, component, positive }
    }

    pub fn ip(&self, x: &[i32], y: &[i32]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += x[i] as i64 * self.gram[i][j] * y[j] as i64;
            }
        }
        s
    }

    pub fn norm(&self, x: &[i32]) -> i64 {
        self.ip(x, x)
    }

    pub fn reflect(&self, beta: &[i32], x: &[i32]) -> Root {
        let k = 2 * self.ip(x, beta) / self.ip(beta, beta);
        x.iter().zip(beta).map(|(&a, &b)| a - (k as i32) * b).collect()
    }

    pub fn is_root(&self, x: &[i32]) -> bool {
        let p = positive_rep(x);
        self.positive.contains(&p)
    }

    /// Column `j` is `s_β(α_j)`.
    pub fn matrix(&self, beta: &[i32]) -> Mat {
        let r = self.rank;
        let mut m = vec![0i64; r * r];
        for j in 0..r {
            let img = self.reflect(beta, &unit(r, j));
            for i in 0..r {
                m[i * r + j] = img[i] as i64;
            }
        }
        m
    }

    pub fn apply(&self, m: &Mat, x: &[i32]) -> Root {
        let r = self.rank;
        (0..r).map(|i| (0..r).map(|j| m[i * r + j] * x[j] as i64).sum::<i64>() as i32).collect()
    }

    pub fn component_of(&self, x: &[i32]) -> usize {
        self.component[x.iter().position(|&c| c != 0).unwrap()]
    }

    /// `(component, is_long)`.
    pub fn class(&self, x: &[i32]) -> (usize, bool) {
        (self.component_of(x), self.norm(x) > 2)
    }

    pub fn product(&self, axes: &[Root]) -> Mat {
        let r = self.rank;
        let mut p = identity(r);
        for a in axes {
            p = mul(r, &p, &self.matrix(a));
        }
        p
    }

    pub fn order(&self) -> usize {
        self.group().len()
    }

    pub fn generates_group_of_order(&self, axes: &[Root], order: usize) -> bool {
        let set: BTreeSet<Root> = axes.iter().cloned().collect();
        let gens: Vec<Mat> = set.iter().map(|a| self.matrix(a)).collect();
        closure(&gens, order + 1).len() == order
    }

    /// Every tuple of positive roots with the given `(component, is_long)`
    /// counts, product identity and (optionally) generating `W`, in
    /// lexicographic order of positive-root indices.
    pub fn hurwitz_tuples(
        &self,
        counts: &HashMap<(usize, bool), usize>,
        generating: bool,
    ) -> Vec<Vec<Root>> {
        let n: usize = counts.values().sum();
        let mut out = Vec::new();
        let mut budget = counts.clone();
        let mut prefix = Vec::new();
        let mut memo = HashMap::new();
        let order = if generating { self.order() } else { 0 };
        self.tuples_rec(n, &mut budget, &mut prefix, order, &mut memo, &mut out);
        out
    }

    fn tuples_rec(
        &self,
        n: usize,
        budget: &mut HashMap<(usize, bool), usize>,
        prefix: &mut Vec<Root>,
        order: usize,
        memo: &mut HashMap<BTreeSet<Root>, bool>,
        out: &mut Vec<Vec<Root>>,
    ) {
        if prefix.len() == n {
            if self.product(prefix) != identity(self.rank) {
                return;
            }
            if order > 0 {
                let support: BTreeSet<Root> = prefix.iter().cloned().collect();
                let g = *memo
                    .entry(support)
                    .or_insert_with(|| self.generates_group_of_order(prefix, order));
                if !g {
                    return;
                }
            }
            out.push(prefix.clone());
            return;
        }
        for p in &self.positive {
            let key = self.class(p);
            match budget.get_mut(&key) {
                Some(b) if *b > 0 => *b -= 1,
                _ => continue,
            }
            prefix.push(p.clone());
            self.tuples_rec(n, budget, prefix, order, memo, out);
            prefix.pop();
            *budget.get_mut(&key).unwrap() += 1;
        }
    }

    /// Braid orbit by plain BFS over axis tuples.
    pub fn braid_orbit(&self, start: &[Root]) -> HashSet<Vec<Root>> {
        let mut seen = HashSet::from([start.to_vec()]);
        let mut queue = VecDeque::from([start.to_vec()]);
        while let Some(t) = queue.pop_front() {
            for i in 0..t.len().saturating_sub(1) {
                let (a, b) = (&t[i], &t[i + 1]);
                let mut fwd = t.clone();
                fwd[i] = positive_rep(&self.reflect(a, b));
                fwd[i + 1] = a.clone();
                let mut inv = t.clone();
                inv[i] = b.clone();
                inv[i + 1] = positive_rep(&self.reflect(b, a));
                for next in [fwd, inv] {
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        seen
    }

    pub fn group(&self) -> Vec<Mat> {
        let gens: Vec<Mat> = (0..self.rank).map(|i| self.matrix(&unit(self.rank, i))).collect();
        closure(&gens, usize::MAX).into_iter().collect()
    }

    /// Least tuple in the simultaneous conjugation orbit.
    pub fn nielsen_key(&self, group: &[Mat], t: &[Root]) -> Vec<Root> {
        group
            .iter()
            .map(|w| t.iter().map(|a| positive_rep(&self.apply(w, a))).collect::<Vec<_>>())
            .min()
            .unwrap()
    }
}

pub fn unit(r: usize, i: usize) -> Root {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}

pub fn positive_rep(x: &[i32]) -> Root {
    if x.iter().any(|&c| c < 0) {
        x.iter().map(|c| -c).collect()
    } else {
        x.to_vec()
    }
}

pub fn identity(r: usize) -> Mat {
    let mut m = vec![0; r * r];
    for i in 0..r {
        m[i * r + i] = 1;
    }
    m
}

pub fn mul(r: usize, a: &Mat, b: &Mat) -> Mat {
    let mut c = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x != 0 {
                for j in 0..r {
                    c[i * r + j] += x * b[k * r + j];
                }
            }
        }
    }
    c
}

pub fn closure(gens: &[Mat], cap: usize) -> HashSet<Mat> {
    let r = (gens.first().map_or(1, Vec::len) as f64).sqrt() as usize;
    let id = identity(r);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mul(r, &x, g);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return seen;
                }
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Positive roots by α-strings: `β + α_i` is a root iff `q > 0` where
/// `q = p − ⟨β, α_i^∨⟩` and `p` is the length of the string below `β`.
pub fn alpha_strings(cartan: &[Vec<i64>]) -> Vec<Root> {
    let r = cartan.len();
    let pairing = |b: &[i32], i: usize| -> i64 { (0..r).map(|j| b[j] as i64 * cartan[j][i]).sum() };
    let mut all: HashSet<Root> = (0..r).map(|i| unit(r, i)).collect();
    let mut layer: Vec<Root> = (0..r).map(|i| unit(r, i)).collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for b in &layer {
            for i in 0..r {
                let mut p = 0;
                let mut down = b.clone();
                loop {
                    down[i] -= 1;
                    if !all.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let q = p - pairing(b, i);
                if q > 0 {
                    let mut up = b.clone();
                    up[i] += 1;
                    if all.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    let mut v: Vec<Root> = all.into_iter().collect();
    v.sort();
    v
}
