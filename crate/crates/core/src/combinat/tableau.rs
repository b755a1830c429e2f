use std::fmt;

use serde::{Deserialize, Serialize};

use super::{MultiPartition, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    /// Rows increase left to right.
    RowStandard,
    /// Rows and columns increase (within each component).
    Standard,
}

/// Position of an entry: component, row, column (all 0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub component: usize,
    pub row: usize,
    pub col: usize,
}

impl Cell {
    /// `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// A filling of a multipartition diagram by `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    shape: MultiPartition,
    /// `rows[k][i]` is row `i` of component `k`.
    rows: Vec<Vec<Vec<u8>>>,
}

impl Tableau {
    /// `t^λ`: `1..n` filled along rows, component by component.
    pub fn initial(shape: &MultiPartition) -> Tableau {
        let mut next = 1u8;
        let rows = shape
            .components()
            .iter()
            .map(|c| {
                c.parts()
                    .iter()
                    .map(|&len| {
                        let row: Vec<u8> = (next..next + len as u8).collect();
                        next += len as u8;
                        row
                    })
                    .collect()
            })
            .collect();
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }

    /// Rebuilds a tableau of `shape` from its row-reading word.
    pub fn from_reading_word(shape: &MultiPartition, word: &[u8]) -> Tableau {
        let mut it = word.iter().copied();
        let rows = shape
            .components()
            .iter()
            .map(|c| {
                c.parts()
                    .iter()
                    .map(|&len| it.by_ref().take(len).collect())
                    .collect()
            })
            .collect();
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Vec<u8>>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Entries read along rows, component by component.
    pub fn reading_word(&self) -> Vec<u8> {
        self.rows.iter().flatten().flatten().copied().collect()
    }

    /// Cell holding `entry`.
    pub fn cell_of(&self, entry: usize) -> Cell {
        for (k, comp) in self.rows.iter().enumerate() {
            for (i, row) in comp.iter().enumerate() {
                if let Some(j) = row.iter().position(|&x| x as usize == entry) {
                    return Cell {
                        component: k,
                        row: i,
                        col: j,
                    };
                }
            }
        }
        panic!("entry {entry} not in tableau");
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows.iter().flatten().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_standard()
            && self.rows.iter().all(|comp| {
                comp.windows(2)
                    .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above))
            })
    }

    /// The tableau with entries `i` and `i+1` exchanged.
    pub fn swap_entries(&self, i: usize) -> Tableau {
        let mut t = self.clone();
        for x in t.rows.iter_mut().flatten().flatten() {
            if *x as usize == i {
                *x = (i + 1) as u8;
            } else if *x as usize == i + 1 {
                *x = i as u8;
            }
        }
        t
    }

    /// `d(t)`: the permutation with `t^λ d(t) = t`. In one-line notation
    /// this is the reading word of `t`.
    pub fn d_of(&self) -> Permutation {
        Permutation::from_word(self.reading_word()).expect("tableau entries are a permutation")
    }

    /// All tableaux of `shape` and `flavor`, sorted lexicographically by reading word.
    pub fn enumerate(shape: &MultiPartition, flavor: Flavor) -> Vec<Tableau> {
        let n = shape.size();
        let row_lens: Vec<(usize, usize, usize)> = shape.rows().collect();
        let mut fill: Vec<Vec<u8>> = vec![Vec::new(); row_lens.len()];
        let mut out = Vec::new();

        fn rec(
            next: usize,
            n: usize,
            row_lens: &[(usize, usize, usize)],
            fill: &mut Vec<Vec<u8>>,
            flavor: Flavor,
            out: &mut Vec<Vec<u8>>,
        ) {
            if next > n {
                out.push(fill.iter().flatten().copied().collect());
                return;
            }
            for (idx, &(comp, row, len)) in row_lens.iter().enumerate() {
                let col = fill[idx].len();
                if col == len {
                    continue;
                }
                if flavor == Flavor::Standard && row > 0 {
                    // the row above in the same component is row_lens[idx-1]
                    debug_assert_eq!(row_lens[idx - 1].0, comp);
                    if fill[idx - 1].len() <= col {
                        continue;
                    }
                }
                fill[idx].push(next as u8);
                rec(next + 1, n, row_lens, fill, flavor, out);
                fill[idx].pop();
            }
        }

        let mut words = Vec::new();
        rec(1, n, &row_lens, &mut fill, flavor, &mut words);
        words.sort();
        out.extend(words.iter().map(|w| Tableau::from_reading_word(shape, w)));
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, comp) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, " | ")?;
            }
            for (i, row) in comp.iter().enumerate() {
                if i > 0 {
                    write!(f, "/")?;
                }
                for x in row {
                    write!(f, "{x}")?;
                }
            }
        }
        Ok(())
    }
}

/// Indices `i` with `s_i` in the row stabiliser of `t^λ`.
pub fn young_subgroup_generators(shape: &MultiPartition) -> Vec<usize> {
    let t = Tableau::initial(shape);
    t.rows
        .iter()
        .flatten()
        .flat_map(|row| row.windows(2).map(|w| w[0] as usize))
        .collect()
}

/// All elements of the row stabiliser of `t^λ`.
pub fn young_subgroup(shape: &MultiPartition) -> Vec<Permutation> {
    let n = shape.size();
    let gens = young_subgroup_generators(shape);
    Permutation::all(n)
        .into_iter()
        .filter(|w| {
            // w stabilises the rows iff it is generated by the row transpositions,
            // i.e. every value stays inside its own row block.
            let t = Tableau::initial(shape);
            (1..=n).all(|j| {
                let a = t.cell_of(j);
                let b = t.cell_of(w.apply(j));
                a.component == b.component && a.row == b.row
            })
        })
        .inspect(|w| debug_assert!(w.reduced_word().iter().all(|i| gens.contains(i))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Partition;

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    #[test]
    fn standard_counts() {
        assert_eq!(Tableau::enumerate(&mp("2,1"), Flavor::Standard).len(), 2);
        assert_eq!(Tableau::enumerate(&mp("5"), Flavor::Standard).len(), 1);
        assert_eq!(Tableau::enumerate(&mp("2,2"), Flavor::Standard).len(), 2);
        for n in 0..=8 {
            for p in Partition::all(n) {
                let count = Tableau::enumerate(&p.clone().into(), Flavor::Standard).len();
                assert_eq!(count as u128, p.hook_length_count(), "{p}");
            }
        }
    }

    #[test]
    fn row_standard_counts() {
        // multinomial 4!/(2!1!1!) = 12
        assert_eq!(Tableau::enumerate(&mp("2,1,1"), Flavor::RowStandard).len(), 12);
        let all = Tableau::enumerate(&mp("2|1"), Flavor::RowStandard);
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(Tableau::is_standard));
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let ts = Tableau::enumerate(&mp("3,2"), Flavor::Standard);
        assert!(ts.windows(2).all(|w| w[0].reading_word() < w[1].reading_word()));
        assert!(ts.iter().all(Tableau::is_standard));
        assert_eq!(ts[0], Tableau::initial(&mp("3,2")));
    }

    #[test]
    fn d_of_examples() {
        let shape = mp("2,1");
        assert!(Tableau::initial(&shape).d_of().is_identity());
        let t = Tableau::from_reading_word(&shape, &[1, 3, 2]);
        assert_eq!(t.d_of(), Permutation::from_reduced_word(3, &[2]));
    }

    #[test]
    fn d_of_length_counts_inversions() {
        let shape = mp("3,1");
        let t0 = Tableau::initial(&shape);
        for t in Tableau::enumerate(&shape, Flavor::Standard) {
            // pairs (a<b) whose cells appear in reversed t^λ order
            let w = t.reading_word();
            let mut inv = 0;
            for x in 0..w.len() {
                for y in x + 1..w.len() {
                    if w[x] > w[y] {
                        inv += 1;
                    }
                }
            }
            assert_eq!(t.d_of().length(), inv);
            // t^λ d(t) = t
            let moved: Vec<u8> = t0
                .reading_word()
                .iter()
                .map(|&k| t.d_of().apply(k as usize) as u8)
                .collect();
            assert_eq!(moved, w);
        }
    }

    #[test]
    fn d_of_is_minimal_coset_representative() {
        let shape = mp("2,2");
        for t in Tableau::enumerate(&shape, Flavor::RowStandard) {
            let d = t.d_of();
            for v in young_subgroup(&shape) {
                assert!(v.then(&d).length() >= d.length());
            }
        }
    }

    #[test]
    fn young_generators() {
        assert_eq!(young_subgroup_generators(&mp("2,1")), vec![1]);
        assert!(young_subgroup_generators(&mp("1,1,1")).is_empty());
        assert_eq!(young_subgroup_generators(&mp("3")), vec![1, 2]);
        assert_eq!(young_subgroup_generators(&mp("2|2")), vec![1, 3]);
        assert_eq!(young_subgroup(&mp("2,2")).len(), 4);
    }
}
