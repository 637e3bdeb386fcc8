//! Coset enumeration for Coxeter presentations.
//!
//! Every generator is an involution, so each table column is its own
//! inverse column and the relators `s²` are built into the table. Only the
//! braid relators `(st)^m` are scanned.

/// Right-multiplication table of the enumerated group, one row per element
/// with coset 0 the identity. Rows are in discovery order, not yet ShortLex.
pub(crate) struct CosetTable {
    pub rows: Vec<Vec<u32>>,
}

const UNDEF: u32 = u32::MAX;

struct Enumerator {
    ngens: usize,
    table: Vec<Vec<u32>>,
    parent: Vec<u32>,
    queue: Vec<u32>,
    limit: usize,
}

impl Enumerator {
    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != r {
            let next = self.parent[x as usize];
            self.parent[x as usize] = r;
            x = next;
        }
        r
    }

    fn define(&mut self, c: u32, s: usize) -> Result<(), ()> {
        if self.table.len() >= self.limit {
            return Err(());
        }
        let n = self.table.len() as u32;
        self.table.push(vec![UNDEF; self.ngens]);
        self.parent.push(n);
        self.table[c as usize][s] = n;
        self.table[n as usize][s] = c;
        Ok(())
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = (a.min(b), a.max(b));
        self.parent[kill as usize] = keep;
        self.queue.push(kill);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let c = self.queue[i];
            i += 1;
            for s in 0..self.ngens {
                let d = self.table[c as usize][s];
                if d == UNDEF {
                    continue;
                }
                self.table[d as usize][s] = UNDEF;
                let c1 = self.rep(c);
                let d1 = self.rep(d);
                let e = self.table[c1 as usize][s];
                if e != UNDEF {
                    self.merge(d1, e);
                    continue;
                }
                let f = self.table[d1 as usize][s];
                if f != UNDEF {
                    self.merge(c1, f);
                    continue;
                }
                self.table[c1 as usize][s] = d1;
                self.table[d1 as usize][s] = c1;
            }
        }
    }

    fn scan_and_fill(&mut self, c: u32, w: &[usize]) -> Result<(), ()> {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.table[f as usize][w[i]] != UNDEF {
                f = self.table[f as usize][w[i]];
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.table[b as usize][w[j as usize]] != UNDEF {
                b = self.table[b as usize][w[j as usize]];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                let s = w[i];
                self.table[f as usize][s] = b;
                self.table[b as usize][s] = f;
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// Enumerate the group with presentation `⟨S | s², (st)^{m(s,t)}⟩`.
///
/// Returns `None` when more than `limit` cosets are needed at any point.
pub(crate) fn enumerate(matrix: &[Vec<u32>], limit: usize) -> Option<CosetTable> {
    let n = matrix.len();
    let mut relators = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            let m = matrix[s][t] as usize;
            relators.push((0..2 * m).map(|k| if k % 2 == 0 { s } else { t }).collect::<Vec<_>>());
        }
    }
    let mut e = Enumerator {
        ngens: n,
        table: vec![vec![UNDEF; n]],
        parent: vec![0],
        queue: Vec::new(),
        limit,
    };
    let mut c = 0u32;
    while (c as usize) < e.table.len() {
        if e.alive(c) {
            for r in &relators {
                e.scan_and_fill(c, r).ok()?;
                if !e.alive(c) {
                    break;
                }
            }
            if e.alive(c) {
                for s in 0..n {
                    if e.table[c as usize][s] == UNDEF {
                        e.define(c, s).ok()?;
                    }
                }
            }
        }
        c += 1;
    }
    // Compact live cosets.
    let mut new_index = vec![UNDEF; e.table.len()];
    let mut next = 0u32;
    for c in 0..e.table.len() as u32 {
        if e.alive(c) {
            new_index[c as usize] = next;
            next += 1;
        }
    }
    let rows = (0..e.table.len() as u32)
        .filter(|&c| e.alive(c))
        .map(|c| {
            e.table[c as usize]
                .iter()
                .map(|&d| new_index[e.rep_const(d) as usize])
                .collect()
        })
        .collect();
    Some(CosetTable { rows })
}

impl Enumerator {
    fn rep_const(&self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(m: Vec<Vec<u32>>) -> usize {
        enumerate(&m, 1 << 20).unwrap().rows.len()
    }

    #[test]
    fn small_orders() {
        assert_eq!(order(vec![vec![1]]), 2);
        assert_eq!(order(vec![vec![1, 3], vec![3, 1]]), 6);
        assert_eq!(order(vec![vec![1, 4], vec![4, 1]]), 8);
        assert_eq!(order(vec![vec![1, 2], vec![2, 1]]), 4);
        let a3 = vec![vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]];
        assert_eq!(order(a3), 24);
    }

    #[test]
    fn affine_group_overflows() {
        let a2_affine = vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]];
        assert!(enumerate(&a2_affine, 5000).is_none());
    }
}
