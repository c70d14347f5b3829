//! Lazy iterators over summation index sets.
//!
//! * [`compositions`]: `s`-tuples of nonnegative integers summing to `n`, in
//!   colexicographic order (`(n,0,..,0)` first, `(0,..,0,n)` last).
//! * [`vec_range`]: all `k` with `0 ≤ k ≤ n` componentwise, row-major (last
//!   component fastest).
//! * [`vec_compositions`]: `s`-tuples of vectors summing to `n`, the cartesian
//!   product of per-component compositions, row-major over components.
//!
//! Every cursor holds O(s·m) state, never the whole index set.

use crate::binomial::VecIndex;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<i64>>,
}

/// All `s`-tuples of nonnegative integers summing to `n`.
pub fn compositions(n: i64, s: usize) -> Result<Compositions> {
    if n < 0 {
        return Err(Error::NegativeComponent { index: 0, value: n });
    }
    if s == 0 {
        if n > 0 {
            return Err(Error::InvalidGrid(format!("no composition of {n} into 0 parts")));
        }
        return Ok(Compositions { current: Some(Vec::new()) });
    }
    let mut first = vec![0; s];
    first[0] = n;
    Ok(Compositions { current: Some(first) })
}

fn colex_successor(c: &mut [i64]) -> bool {
    let Some(i) = c.iter().position(|&v| v > 0) else {
        return false;
    };
    if i + 1 >= c.len() {
        return false;
    }
    let carry = c[i] - 1;
    c[i] = 0;
    c[i + 1] += 1;
    c[0] = carry;
    true
}

impl Iterator for Compositions {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let out = self.current.take()?;
        let mut succ = out.clone();
        if colex_successor(&mut succ) {
            self.current = Some(succ);
        }
        Some(out)
    }
}

#[derive(Debug, Clone)]
pub struct VecRange {
    bound: VecIndex,
    current: Option<Vec<i64>>,
}

/// All `k` with `0 ≤ k ≤ n` componentwise.
pub fn vec_range(n: &VecIndex) -> Result<VecRange> {
    n.check_nonnegative()?;
    Ok(VecRange { bound: n.clone(), current: Some(vec![0; n.dim()]) })
}

impl Iterator for VecRange {
    type Item = VecIndex;

    fn next(&mut self) -> Option<VecIndex> {
        let out = self.current.take()?;
        let mut succ = out.clone();
        let bound = self.bound.components();
        for i in (0..succ.len()).rev() {
            if succ[i] < bound[i] {
                succ[i] += 1;
                self.current = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(VecIndex::new(out))
    }
}

#[derive(Debug, Clone)]
pub struct VecCompositions {
    n: VecIndex,
    s: usize,
    cursors: Vec<Compositions>,
    current: Vec<Vec<i64>>,
    done: bool,
}

/// All `s`-tuples of vectors in `ℕ^m` summing componentwise to `n`.
pub fn vec_compositions(n: &VecIndex, s: usize) -> Result<VecCompositions> {
    n.check_nonnegative()?;
    let mut cursors = Vec::with_capacity(n.dim());
    let mut current = Vec::with_capacity(n.dim());
    for &ni in n.components() {
        let mut c = compositions(ni, s)?;
        current.push(c.next().expect("at least one composition"));
        cursors.push(c);
    }
    Ok(VecCompositions { n: n.clone(), s, cursors, current, done: false })
}

impl Iterator for VecCompositions {
    type Item = Vec<VecIndex>;

    fn next(&mut self) -> Option<Vec<VecIndex>> {
        if self.done {
            return None;
        }
        let m = self.n.dim();
        let out: Vec<VecIndex> = (0..self.s)
            .map(|j| VecIndex::new((0..m).map(|i| self.current[i][j]).collect()))
            .collect();
        // advance the last component fastest, restarting exhausted ones
        let mut advanced = false;
        for i in (0..m).rev() {
            if let Some(next) = self.cursors[i].next() {
                self.current[i] = next;
                advanced = true;
                break;
            }
            let mut fresh = compositions(self.n.components()[i], self.s).expect("validated");
            self.current[i] = fresh.next().expect("nonempty");
            self.cursors[i] = fresh;
        }
        if !advanced {
            self.done = true;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binom_int;
    use crate::rational::Rational;
    use std::collections::BTreeSet;

    #[test]
    fn composition_examples() {
        let c: Vec<_> = compositions(2, 2).unwrap().collect();
        assert_eq!(c, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(0, 3).unwrap().collect::<Vec<_>>(), vec![vec![0, 0, 0]]);
        assert_eq!(compositions(3, 1).unwrap().collect::<Vec<_>>(), vec![vec![3]]);
        assert_eq!(compositions(0, 0).unwrap().collect::<Vec<_>>(), vec![Vec::<i64>::new()]);
        assert!(compositions(2, 0).is_err());
    }

    #[test]
    fn composition_order_is_colex() {
        let c: Vec<Vec<i64>> = compositions(3, 3).unwrap().collect();
        for w in c.windows(2) {
            let a: Vec<_> = w[0].iter().rev().collect();
            let b: Vec<_> = w[1].iter().rev().collect();
            assert!(a < b, "{:?} !< {:?}", w[0], w[1]);
        }
        assert_eq!(c.first().unwrap(), &vec![3, 0, 0]);
        assert_eq!(c.last().unwrap(), &vec![0, 0, 3]);
    }

    #[test]
    fn composition_counts() {
        for n in 0..=8 {
            for s in 1..=5usize {
                let all: Vec<_> = compositions(n, s).unwrap().collect();
                let distinct: BTreeSet<_> = all.iter().cloned().collect();
                assert_eq!(distinct.len(), all.len());
                assert!(all.iter().all(|t| t.iter().sum::<i64>() == n && t.iter().all(|&v| v >= 0)));
                assert_eq!(Rational::from(all.len() as i64), binom_int(n + s as i64 - 1, s as i64 - 1));
            }
        }
    }

    #[test]
    fn vec_range_examples() {
        let v: Vec<_> = vec_range(&[1, 1].into()).unwrap().collect();
        assert_eq!(v, vec![[0, 0].into(), [0, 1].into(), [1, 0].into(), [1, 1].into()]);
        assert_eq!(vec_range(&[0, 0].into()).unwrap().count(), 1);
        let w: Vec<_> = vec_range(&[2].into()).unwrap().collect();
        assert_eq!(w, vec![[0].into(), [1].into(), [2].into()]);
        assert!(vec_range(&[1, -1].into()).is_err());
    }

    #[test]
    fn vec_range_grouped_by_norm() {
        let n = VecIndex::from([2, 1, 3]);
        let mut groups = std::collections::BTreeMap::new();
        for k in vec_range(&n).unwrap() {
            assert!(k.le(&n));
            *groups.entry(k.norm()).or_insert(0usize) += 1;
        }
        assert_eq!(groups.values().sum::<usize>(), 3 * 2 * 4);
        assert_eq!(groups.len(), 7);
    }

    #[test]
    fn vec_composition_examples() {
        let all: Vec<_> = vec_compositions(&[1, 1].into(), 2).unwrap().collect();
        assert_eq!(all.len(), 4);
        let expected: BTreeSet<Vec<VecIndex>> = [
            vec![[1, 1].into(), [0, 0].into()],
            vec![[1, 0].into(), [0, 1].into()],
            vec![[0, 1].into(), [1, 0].into()],
            vec![[0, 0].into(), [1, 1].into()],
        ]
        .into_iter()
        .collect();
        assert_eq!(all.into_iter().collect::<BTreeSet<_>>(), expected);

        let n = VecIndex::from([2, 0, 1]);
        assert_eq!(vec_compositions(&n, 1).unwrap().collect::<Vec<_>>(), vec![vec![n.clone()]]);
        let zeros: Vec<_> = vec_compositions(&[0, 0].into(), 3).unwrap().collect();
        assert_eq!(zeros, vec![vec![VecIndex::zeros(2); 3]]);
    }

    #[test]
    fn vec_composition_counts() {
        for n in [VecIndex::from([2, 1]), [1, 1, 1].into(), [3, 0].into(), [4].into()] {
            for s in 1..=4usize {
                let all: Vec<_> = vec_compositions(&n, s).unwrap().collect();
                let expected: i64 = n
                    .components()
                    .iter()
                    .map(|&ni| binom_int(ni + s as i64 - 1, s as i64 - 1).to_i64().unwrap())
                    .product();
                assert_eq!(all.len() as i64, expected);
                let distinct: BTreeSet<_> = all.iter().cloned().collect();
                assert_eq!(distinct.len(), all.len());
                for t in &all {
                    let sum = t.iter().fold(VecIndex::zeros(n.dim()), |a, b| a.add(b).unwrap());
                    assert_eq!(sum, n);
                }
            }
        }
    }

    #[test]
    fn traversal_is_deterministic() {
        let a: Vec<_> = vec_compositions(&[2, 2].into(), 3).unwrap().collect();
        let b: Vec<_> = vec_compositions(&[2, 2].into(), 3).unwrap().collect();
        assert_eq!(a, b);
    }
}
