//! Permutations of `[n]` in one-line notation (0-based internally).
//! Composition is left-to-right: `(a * b)(x) = b(a(x))`.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("images do not describe a bijection on [{degree}]")]
pub struct NotABijection {
    pub degree: usize,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Perm, NotABijection> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(NotABijection { degree: n });
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// From 1-based images, as used by the JSON group format.
    pub fn from_one_line_1based(images: &[usize]) -> Result<Perm, NotABijection> {
        let n = images.len();
        let shifted: Vec<usize> = images
            .iter()
            .map(|&i| i.checked_sub(1).unwrap_or(n))
            .collect();
        Perm::from_images(shifted)
    }

    /// From disjoint cycles over 1-based points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm, NotABijection> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w].checked_sub(1).filter(|&x| x < n);
                let to = cycle[(w + 1) % cycle.len()].checked_sub(1).filter(|&x| x < n);
                match (from, to) {
                    (Some(f), Some(t)) => images[f] = t,
                    _ => return Err(NotABijection { degree: n }),
                }
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Left-to-right composition: apply `self`, then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Perm { images }
    }

    /// Image of a bitset under element-wise application.
    pub fn act_on_set(&self, set: u64) -> u64 {
        let mut out = 0u64;
        for (i, &v) in self.images.iter().enumerate() {
            if set >> i & 1 == 1 {
                out |= 1 << v;
            }
        }
        out
    }

    /// Cycle type as a weakly decreasing list of cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// One-line images, 1-based.
    pub fn one_line_1based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line_1based().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All permutations of `[n]` in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm {
            images: current.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}
