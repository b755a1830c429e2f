use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition {
    parts: Vec<usize>,
}

/// Output of [`Partition::hook_data`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookData {
    /// Hook length of the corner cell (1,1).
    pub largest_hook: usize,
    /// Multiplicity of the largest part.
    pub top_multiplicity: usize,
    /// Smallest main hook.
    pub smallest_main_hook: usize,
    pub main_hooks: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("zero part in {parts:?}")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidShape(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition {
            parts: if n == 0 { vec![] } else { vec![n] },
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(n-k, 1^k)`.
    pub fn hook(n: usize, k: usize) -> Self {
        assert!(k < n);
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat(1).take(k));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn is_rectangular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (0..first)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Hook length of the cell in row `i`, column `j` (0-based).
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.parts[i] - j - 1;
        let leg = self.parts[i + 1..].iter().filter(|&&p| p > j).count();
        arm + leg + 1
    }

    /// Consecutive part differences (with a trailing zero) all below `e`;
    /// `None` stands for `e = ∞`.
    pub fn is_e_restricted(&self, e: Option<usize>) -> bool {
        let Some(e) = e else { return true };
        (0..self.len()).all(|i| self.part(i) - self.part(i + 1) < e)
    }

    /// The `e`-core, computed on an abacus with `e` runners.
    pub fn e_core(&self, e: usize) -> Partition {
        assert!(e >= 2, "e-core needs e >= 2");
        let len = self.len();
        let mut beads = vec![0usize; e];
        for (i, &p) in self.parts.iter().enumerate() {
            beads[(p + len - 1 - i) % e] += 1;
        }
        let mut betas: Vec<usize> = beads
            .iter()
            .enumerate()
            .flat_map(|(runner, &count)| (0..count).map(move |k| runner + k * e))
            .collect();
        betas.sort_unstable_by(|a, b| b.cmp(a));
        let parts = betas
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        Partition { parts }
    }

    /// Largest hook, top multiplicity and the main hooks `l..=L`.
    pub fn hook_data(&self) -> Result<HookData, Error> {
        if self.is_empty() {
            return Err(Error::InvalidShape("hook data of the empty partition".into()));
        }
        let largest_hook = self.hook_length(0, 0);
        let top = self.parts[0];
        let b = self.parts.iter().take_while(|&&p| p == top).count();
        let l = if self.is_rectangular() && b > 1 {
            largest_hook - b + 2
        } else {
            largest_hook - b + 1
        };
        let data = HookData {
            largest_hook,
            top_multiplicity: b,
            smallest_main_hook: l,
            main_hooks: (l..=largest_hook).collect(),
        };
        if self.len() > 1 {
            for &k in &data.main_hooks {
                debug_assert!(self.is_e_restricted(Some(k)), "{self} not {k}-restricted");
            }
        }
        Ok(data)
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn hook_length_count(&self) -> u128 {
        let num: u128 = (1..=self.size() as u128).product();
        let mut den: u128 = 1;
        for i in 0..self.len() {
            for j in 0..self.parts[i] {
                den *= self.hook_length(i, j) as u128;
            }
        }
        num / den
    }

    /// Dominance for partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        assert_eq!(self.size(), other.size(), "dominance needs equal sizes");
        let rows = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..rows {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n`, in reverse lexicographic order (starting with `(n)`).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in partition {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

/// An `r`-tuple of partitions; components may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "a multipartition has at least one component");
        MultiPartition { components }
    }

    pub fn single(p: Partition) -> Self {
        MultiPartition {
            components: vec![p],
        }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// `a_i = Σ_{j<i} |λ^j|`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.components
            .iter()
            .map(|c| {
                let a = acc;
                acc += c.size();
                a
            })
            .collect()
    }

    /// Row lengths in reading order: all rows of component 1, then component 2, ...
    pub fn rows(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(k, c)| c.parts().iter().enumerate().map(move |(i, &len)| (k, i, len)))
    }

    /// Dominance: all partial sums `Σ_{i<k}|a^i| + Σ_{i≤j} a^k_i` weakly exceed those of `other`.
    pub fn dominates(&self, other: &MultiPartition) -> bool {
        assert_eq!(self.size(), other.size(), "dominance needs equal sizes");
        assert_eq!(self.level(), other.level(), "dominance needs equal levels");
        let (mut base_a, mut base_b) = (0, 0);
        for (ca, cb) in self.components.iter().zip(&other.components) {
            let rows = ca.len().max(cb.len());
            let (mut a, mut b) = (base_a, base_b);
            for j in 0..rows.max(1) {
                a += ca.part(j);
                b += cb.part(j);
                if a < b {
                    return false;
                }
            }
            base_a += ca.size();
            base_b += cb.size();
        }
        true
    }

    /// Strict dominance.
    pub fn strictly_dominates(&self, other: &MultiPartition) -> bool {
        self != other && self.dominates(other)
    }

    /// All multipartitions of `n` with `r` components.
    pub fn all(n: usize, r: usize) -> Vec<MultiPartition> {
        fn rec(n: usize, r: usize, prefix: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
            if r == 1 {
                for p in Partition::all(n) {
                    let mut comps = prefix.clone();
                    comps.push(p);
                    out.push(MultiPartition { components: comps });
                }
                return;
            }
            for k in (0..=n).rev() {
                for p in Partition::all(k) {
                    prefix.push(p);
                    rec(n - k, r - 1, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(n, r, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let components = s
            .split('|')
            .map(str::parse)
            .collect::<Result<Vec<Partition>, _>>()?;
        Ok(MultiPartition { components })
    }
}

impl TryFrom<String> for MultiPartition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl From<MultiPartition> for String {
    fn from(p: MultiPartition) -> String {
        p.to_string()
    }
}

impl From<Partition> for MultiPartition {
    fn from(p: Partition) -> Self {
        MultiPartition::single(p)
    }
}
