//! Finite Coxeter systems.
//!
//! A [`CoxeterSystem`] enumerates its group once at construction time by
//! coset enumeration, renumbers the elements in ShortLex order of their
//! normal forms, and keeps left and right multiplication tables by simple
//! reflections. Products of arbitrary elements walk a normal form through the
//! right table, which is linear in the length.

mod combinat;
mod todd_coxeter;

use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

use thiserror::Error;

pub use combinat::{CosetPointer, Side, Sizig3Witness};

pub const DEFAULT_CAP: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("group has more than {cap} elements (or is infinite)")]
    InfiniteGroup { cap: usize },
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("unsupported type label `{0}`")]
    UnsupportedLabel(String),
    #[error("elements belong to different Coxeter systems")]
    MixedSystems,
    #[error("more than {cap} geodesics")]
    PathExplosion { cap: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("{0} is not a reflection")]
    NotAReflection(String),
    #[error("generator index {0} out of range")]
    BadIndex(usize),
    #[error("cannot parse element `{0}`")]
    BadWord(String),
}

static NEXT_ID: AtomicU32 = AtomicU32::new(1);

/// An element of a specific [`CoxeterSystem`]. The index is the position in
/// ShortLex order, so comparing elements of one system compares their
/// normal forms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GroupElement {
    system: u32,
    index: u32,
}

impl GroupElement {
    pub fn index(self) -> usize {
        self.index as usize
    }
}

/// A set of simple generators, as a bitmask over generator indices.
pub type GenSet = u32;

pub fn genset(gens: &[usize]) -> GenSet {
    gens.iter().fold(0, |acc, &g| acc | (1 << g))
}

pub fn genset_members(j: GenSet, rank: usize) -> Vec<usize> {
    (0..rank).filter(|&s| j & (1 << s) != 0).collect()
}

#[derive(Debug)]
pub struct CoxeterSystem {
    id: u32,
    rank: usize,
    matrix: Vec<Vec<u32>>,
    label: Option<String>,
    right: Vec<Vec<u32>>,
    left: Vec<Vec<u32>>,
    length: Vec<u32>,
    nf: Vec<Vec<u8>>,
    inverse: Vec<u32>,
}

impl CoxeterSystem {
    pub fn new(matrix: Vec<Vec<u32>>) -> Result<Self, CoxeterError> {
        Self::with_cap(matrix, DEFAULT_CAP)
    }

    pub fn with_cap(matrix: Vec<Vec<u32>>, cap: usize) -> Result<Self, CoxeterError> {
        validate_matrix(&matrix)?;
        let rank = matrix.len();
        // Finite Coxeter groups enumerate without much overshoot; the working
        // limit only has to separate them from infinite presentations.
        let table = todd_coxeter::enumerate(&matrix, cap.saturating_mul(8).max(64))
            .ok_or(CoxeterError::InfiniteGroup { cap })?;
        if table.rows.len() > cap {
            return Err(CoxeterError::InfiniteGroup { cap });
        }
        Ok(Self::from_table(matrix, table.rows, rank))
    }

    fn from_table(matrix: Vec<Vec<u32>>, rows: Vec<Vec<u32>>, rank: usize) -> Self {
        let n = rows.len();
        // Breadth-first search with generators in increasing order visits
        // elements in ShortLex order of their normal forms.
        let mut order = Vec::with_capacity(n);
        let mut new_of = vec![u32::MAX; n];
        let mut nf_old: Vec<Vec<u8>> = vec![Vec::new(); n];
        new_of[0] = 0;
        order.push(0u32);
        let mut head = 0;
        while head < order.len() {
            let c = order[head] as usize;
            head += 1;
            for s in 0..rank {
                let d = rows[c][s] as usize;
                if new_of[d] == u32::MAX {
                    new_of[d] = order.len() as u32;
                    order.push(d as u32);
                    let mut w = nf_old[c].clone();
                    w.push(s as u8);
                    nf_old[d] = w;
                }
            }
        }
        let right: Vec<Vec<u32>> = order
            .iter()
            .map(|&c| rows[c as usize].iter().map(|&d| new_of[d as usize]).collect())
            .collect();
        let nf: Vec<Vec<u8>> = order.iter().map(|&c| nf_old[c as usize].clone()).collect();
        let length: Vec<u32> = nf.iter().map(|w| w.len() as u32).collect();
        let mut left = vec![vec![0u32; rank]; n];
        let mut inverse = vec![0u32; n];
        for w in 0..n {
            match nf[w].split_last() {
                None => {
                    for s in 0..rank {
                        left[0][s] = right[0][s];
                    }
                }
                Some((&t, prefix)) => {
                    let u = prefix_index(&right, prefix);
                    for s in 0..rank {
                        left[w][s] = right[left[u][s] as usize][t as usize];
                    }
                    inverse[w] = left[inverse[u] as usize][t as usize];
                }
            }
        }
        CoxeterSystem {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            rank,
            matrix,
            label: None,
            right,
            left,
            length,
            nf,
            inverse,
        }
    }

    /// Build a system from a type label such as `A3`, `B2`, `D4` or `I2(6)`.
    pub fn from_label(label: &str) -> Result<Self, CoxeterError> {
        Self::from_label_with_cap(label, DEFAULT_CAP)
    }

    pub fn from_label_with_cap(label: &str, cap: usize) -> Result<Self, CoxeterError> {
        let matrix = label_matrix(label)?;
        let mut sys = Self::with_cap(matrix, cap)?;
        sys.label = Some(label.trim().to_string());
        Ok(sys)
    }

    pub fn a(n: usize) -> Self {
        Self::from_label(&format!("A{n}")).expect("supported label")
    }

    pub fn b(n: usize) -> Self {
        Self::from_label(&format!("B{n}")).expect("supported label")
    }

    pub fn i2(m: u32) -> Self {
        Self::from_label(&format!("I2({m})")).expect("supported label")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.length.len()
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn m(&self, s: usize, t: usize) -> u32 {
        self.matrix[s][t]
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn all_gens(&self) -> GenSet {
        (1u32 << self.rank) - 1
    }

    fn el(&self, index: usize) -> GroupElement {
        GroupElement {
            system: self.id,
            index: index as u32,
        }
    }

    pub fn element(&self, index: usize) -> GroupElement {
        assert!(index < self.order(), "element index out of range");
        self.el(index)
    }

    pub fn owns(&self, w: GroupElement) -> bool {
        w.system == self.id
    }

    fn check(&self, w: GroupElement) -> Result<(), CoxeterError> {
        if self.owns(w) {
            Ok(())
        } else {
            Err(CoxeterError::MixedSystems)
        }
    }

    /// All elements in ShortLex order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|i| self.el(i))
    }

    pub fn identity(&self) -> GroupElement {
        self.el(0)
    }

    pub fn gen(&self, s: usize) -> GroupElement {
        assert!(s < self.rank, "generator index out of range");
        self.el(self.right[0][s] as usize)
    }

    /// The longest element; it is last in ShortLex order.
    pub fn w0(&self) -> GroupElement {
        self.el(self.order() - 1)
    }

    pub fn length(&self, w: GroupElement) -> usize {
        debug_assert!(self.owns(w));
        self.length[w.index()] as usize
    }

    /// ShortLex normal form (0-based generator indices).
    pub fn normal_form(&self, w: GroupElement) -> Vec<usize> {
        self.nf[w.index()].iter().map(|&s| s as usize).collect()
    }

    pub fn mul_gen(&self, w: GroupElement, s: usize) -> GroupElement {
        self.el(self.right[w.index()][s] as usize)
    }

    pub fn gen_mul(&self, s: usize, w: GroupElement) -> GroupElement {
        self.el(self.left[w.index()][s] as usize)
    }

    /// Product `a·b`. Panics when the elements come from different systems;
    /// see [`Self::try_mul`].
    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.try_mul(a, b).expect("elements of one system")
    }

    pub fn try_mul(&self, a: GroupElement, b: GroupElement) -> Result<GroupElement, CoxeterError> {
        self.check(a)?;
        self.check(b)?;
        let mut x = a.index as usize;
        for &s in &self.nf[b.index()] {
            x = self.right[x][s as usize] as usize;
        }
        Ok(self.el(x))
    }

    pub fn inv(&self, w: GroupElement) -> GroupElement {
        self.el(self.inverse[w.index()] as usize)
    }

    /// Evaluate a word of 0-based generator indices.
    pub fn from_word(&self, word: &[usize]) -> Result<GroupElement, CoxeterError> {
        let mut x = 0usize;
        for &s in word {
            if s >= self.rank {
                return Err(CoxeterError::BadIndex(s));
            }
            x = self.right[x][s] as usize;
        }
        Ok(self.el(x))
    }

    /// Parse the 1-based dotted form used in files, e.g. `1.2.1`; `e` or the
    /// empty string is the identity.
    pub fn parse_element(&self, s: &str) -> Result<GroupElement, CoxeterError> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(self.identity());
        }
        let word = s
            .split('.')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(CoxeterError::BadWord(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.from_word(&word)
    }

    /// The 1-based dotted normal form, `e` for the identity.
    pub fn format_element(&self, w: GroupElement) -> String {
        format_word(&self.normal_form(w))
    }

    pub fn is_length_additive(&self, a: GroupElement, b: GroupElement) -> bool {
        self.length(self.mul(a, b)) == self.length(a) + self.length(b)
    }

    pub fn is_right_descent(&self, w: GroupElement, s: usize) -> bool {
        self.length(self.mul_gen(w, s)) < self.length(w)
    }

    pub fn is_left_descent(&self, w: GroupElement, s: usize) -> bool {
        self.length(self.gen_mul(s, w)) < self.length(w)
    }

    /// Reduced words of `w`, in lexicographic order, at most `limit` of them.
    pub fn reduced_words(&self, w: GroupElement, limit: Option<usize>) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.length(w));
        self.reduced_words_rec(w, &mut prefix, &mut out, limit.unwrap_or(usize::MAX));
        out
    }

    fn reduced_words_rec(
        &self,
        w: GroupElement,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if w.index == 0 {
            out.push(prefix.clone());
            return;
        }
        // First letters are the left descents.
        for s in 0..self.rank {
            if self.is_left_descent(w, s) {
                prefix.push(s);
                self.reduced_words_rec(self.gen_mul(s, w), prefix, out, limit);
                prefix.pop();
            }
        }
    }

    /// Whether `w` lies in the standard parabolic subgroup `W_J`.
    pub fn in_parabolic(&self, j: GenSet, w: GroupElement) -> bool {
        self.nf[w.index()].iter().all(|&s| j & (1 << s) != 0)
    }

    /// Elements of `W_J` in ShortLex order.
    pub fn parabolic(&self, j: GenSet) -> Vec<GroupElement> {
        self.elements().filter(|&w| self.in_parabolic(j, w)).collect()
    }

    /// The right coset `W_J x` in ShortLex order.
    pub fn right_coset(&self, j: GenSet, x: GroupElement) -> Vec<GroupElement> {
        let mut v: Vec<GroupElement> = self
            .parabolic(j)
            .into_iter()
            .map(|a| self.mul(a, x))
            .collect();
        v.sort();
        v
    }

    /// Right cosets `W_J x`, each listed in ShortLex order, ordered by their
    /// first (ShortLex least) element.
    pub fn right_cosets(&self, j: GenSet) -> Vec<Vec<GroupElement>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for x in self.elements() {
            if seen[x.index()] {
                continue;
            }
            let c = self.right_coset(j, x);
            for y in &c {
                seen[y.index()] = true;
            }
            out.push(c);
        }
        out
    }

    /// Left cosets `x W_J`, ordered like [`Self::right_cosets`].
    pub fn left_cosets(&self, j: GenSet) -> Vec<Vec<GroupElement>> {
        let sub = self.parabolic(j);
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for x in self.elements() {
            if seen[x.index()] {
                continue;
            }
            let mut c: Vec<GroupElement> = sub.iter().map(|&a| self.mul(x, a)).collect();
            c.sort();
            for y in &c {
                seen[y.index()] = true;
            }
            out.push(c);
        }
        out
    }

    /// All reflections `w s w⁻¹`, in ShortLex order.
    pub fn reflections(&self) -> Vec<GroupElement> {
        let mut seen = vec![false; self.order()];
        for w in self.elements() {
            for s in 0..self.rank {
                let r = self.mul(self.mul_gen(w, s), self.inv(w));
                seen[r.index()] = true;
            }
        }
        self.elements().filter(|w| seen[w.index()]).collect()
    }

    /// Distance in the graph with edges `{w, s·w}`, which is `ℓ(a b⁻¹)`.
    pub fn distance(&self, a: GroupElement, b: GroupElement) -> usize {
        self.length(self.mul(a, self.inv(b)))
    }
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|s| (s + 1).to_string())
        .collect::<Vec<_>>()
        .join(".")
}

fn prefix_index(right: &[Vec<u32>], word: &[u8]) -> usize {
    word.iter()
        .fold(0usize, |x, &s| right[x][s as usize] as usize)
}

fn validate_matrix(m: &[Vec<u32>]) -> Result<(), CoxeterError> {
    let n = m.len();
    if n == 0 {
        return Err(CoxeterError::InvalidMatrix("empty matrix".into()));
    }
    if n > 16 {
        return Err(CoxeterError::InvalidMatrix("rank above 16".into()));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(CoxeterError::InvalidMatrix(format!("row {} has length {}", i + 1, row.len())));
        }
        if row[i] != 1 {
            return Err(CoxeterError::InvalidMatrix(format!("diagonal entry {} is not 1", i + 1)));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if m[i][j] != m[j][i] {
                return Err(CoxeterError::InvalidMatrix(format!(
                    "not symmetric at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            if m[i][j] < 2 {
                return Err(CoxeterError::InvalidMatrix(format!(
                    "off-diagonal entry at ({}, {}) below 2",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

/// Coxeter matrix for a supported type label.
pub fn label_matrix(label: &str) -> Result<Vec<Vec<u32>>, CoxeterError> {
    let l = label.trim();
    let bad = || CoxeterError::UnsupportedLabel(l.to_string());
    if let Some(m) = l.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
        let m: u32 = m.parse().map_err(|_| bad())?;
        if !(2..=12).contains(&m) {
            return Err(bad());
        }
        return Ok(vec![vec![1, m], vec![m, 1]]);
    }
    let (kind, n) = l.split_at(1.min(l.len()));
    let n: usize = n.parse().map_err(|_| bad())?;
    let chain = |n: usize| -> Vec<Vec<u32>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 1,
                        1 => 3,
                        _ => 2,
                    })
                    .collect()
            })
            .collect()
    };
    match kind {
        "A" if (1..=5).contains(&n) => Ok(chain(n)),
        "B" if (2..=4).contains(&n) => {
            let mut m = chain(n);
            m[0][1] = 4;
            m[1][0] = 4;
            Ok(m)
        }
        "D" if n == 4 => {
            let mut m = vec![vec![2u32; 4]; 4];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 1;
            }
            for leaf in [0, 2, 3] {
                m[1][leaf] = 3;
                m[leaf][1] = 3;
            }
            Ok(m)
        }
        _ => Err(bad()),
    }
}

impl fmt::Display for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "{l} (|W| = {})", self.order()),
            None => write!(f, "rank {} (|W| = {})", self.rank, self.order()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_systems() {
        let a2 = CoxeterSystem::a(2);
        assert_eq!(a2.order(), 6);
        assert_eq!(a2.length(a2.w0()), 3);
        let b2 = CoxeterSystem::b(2);
        assert_eq!(b2.order(), 8);
        assert_eq!(b2.length(b2.w0()), 4);
        assert_eq!(b2.length(b2.from_word(&[0, 1, 0, 1]).unwrap()), 4);
        assert_eq!(b2.from_word(&[0, 1, 0, 1]).unwrap(), b2.w0());
    }

    #[test]
    fn braid_relation_in_a2() {
        let a2 = CoxeterSystem::a(2);
        assert_eq!(a2.from_word(&[0, 1, 0]), a2.from_word(&[1, 0, 1]));
    }

    #[test]
    fn reduced_words_of_w0() {
        let a2 = CoxeterSystem::a(2);
        assert_eq!(a2.reduced_words(a2.w0(), None), vec![vec![0, 1, 0], vec![1, 0, 1]]);
    }

    #[test]
    fn label_orders() {
        for (l, n) in [("A1", 2), ("A4", 120), ("B3", 48), ("D4", 192), ("I2(6)", 12), ("I2(12)", 24)] {
            assert_eq!(CoxeterSystem::from_label(l).unwrap().order(), n, "{l}");
        }
        assert!(CoxeterSystem::from_label("E8").is_err());
    }

    #[test]
    fn rejects_bad_matrices_and_infinite_groups() {
        assert!(matches!(
            CoxeterSystem::new(vec![vec![1, 3], vec![2, 1]]),
            Err(CoxeterError::InvalidMatrix(_))
        ));
        assert!(matches!(
            CoxeterSystem::with_cap(vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]], 2000),
            Err(CoxeterError::InfiniteGroup { .. })
        ));
    }

    #[test]
    fn mixed_systems() {
        let a = CoxeterSystem::a(2);
        let b = CoxeterSystem::a(2);
        assert_eq!(a.try_mul(a.gen(0), b.gen(0)), Err(CoxeterError::MixedSystems));
    }

    #[test]
    fn element_formatting() {
        let a2 = CoxeterSystem::a(2);
        let w = a2.parse_element("2.1").unwrap();
        assert_eq!(a2.format_element(w), "2.1");
        assert_eq!(a2.format_element(a2.w0()), "1.2.1");
        assert_eq!(a2.parse_element("e").unwrap(), a2.identity());
        assert!(a2.parse_element("3").is_err());
    }
}
