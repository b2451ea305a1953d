//! Todd-Coxeter coset enumeration (HLT strategy) over the trivial subgroup,
//! used to count the order of a finitely presented group.
//!
//! Generators are `0..k`; a relator letter is `(generator, inverted)`.

use crate::error::{Error, Result};

pub type Letter = (usize, bool);

const NONE: usize = usize::MAX;

struct CosetTable {
    cols: usize,
    table: Vec<usize>,
    parent: Vec<usize>,
    limit: usize,
}

impl CosetTable {
    fn new(generators: usize, limit: usize) -> Self {
        let cols = 2 * generators;
        CosetTable {
            cols,
            table: vec![NONE; cols],
            parent: vec![0],
            limit,
        }
    }

    fn col(letter: Letter) -> usize {
        2 * letter.0 + letter.1 as usize
    }

    fn inv(col: usize) -> usize {
        col ^ 1
    }

    fn get(&self, c: usize, col: usize) -> usize {
        self.table[c * self.cols + col]
    }

    fn set(&mut self, c: usize, col: usize, v: usize) {
        self.table[c * self.cols + col] = v;
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, col: usize) -> Result<usize> {
        let d = self.parent.len();
        if d >= self.limit {
            return Err(Error::ClosureTooLarge { bound: self.limit });
        }
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.set(c, col, d);
        self.set(d, Self::inv(col), c);
        Ok(d)
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut k = c;
        while self.parent[k] != r {
            let next = self.parent[k];
            self.parent[k] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let r = self.rep(a);
        let s = self.rep(b);
        if r != s {
            let (lo, hi) = (r.min(s), r.max(s));
            self.parent[hi] = lo;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.get(e, x);
                if d == NONE {
                    continue;
                }
                self.set(d, Self::inv(x), NONE);
                let mu = self.rep(e);
                let nu = self.rep(d);
                let mx = self.get(mu, x);
                if mx != NONE {
                    self.merge(nu, mx, &mut queue);
                } else {
                    let nx = self.get(nu, Self::inv(x));
                    if nx != NONE {
                        self.merge(mu, nx, &mut queue);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, Self::inv(x), mu);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> Result<()> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = word.len() as isize - 1;
        loop {
            while (i as isize) <= j && self.get(f, word[i]) != NONE {
                f = self.get(f, word[i]);
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.get(b, Self::inv(word[j as usize])) != NONE {
                b = self.get(b, Self::inv(word[j as usize]));
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.set(f, word[i], b);
                self.set(b, Self::inv(word[i]), f);
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }
}

/// Order of `⟨0..generators | relators⟩`, enumerating at most `limit` cosets.
pub fn group_order(generators: usize, relators: &[Vec<Letter>], limit: usize) -> Result<usize> {
    let words: Vec<Vec<usize>> = relators
        .iter()
        .map(|r| r.iter().map(|&l| CosetTable::col(l)).collect())
        .collect();
    let mut t = CosetTable::new(generators, limit);
    let mut c = 0;
    while c < t.parent.len() {
        for w in &words {
            if !t.live(c) {
                break;
            }
            t.scan_and_fill(c, w)?;
        }
        for x in 0..t.cols {
            if !t.live(c) {
                break;
            }
            if t.get(c, x) == NONE {
                t.define(c, x)?;
            }
        }
        c += 1;
    }
    Ok((0..t.parent.len()).filter(|&k| t.live(k)).count())
}
