//! Shared inputs for the benchmarks.

use heckeform::exact::RationalC;
use heckeform::Partition;

/// Shapes of increasing module dimension.
pub fn shapes() -> Vec<Partition> {
    [&[2, 1][..], &[3, 2], &[3, 2, 1], &[4, 2, 1]]
        .iter()
        .map(|p| Partition::new(p.to_vec()).expect("valid partition"))
        .collect()
}

/// A generic point and a singular one.
pub fn points() -> [RationalC; 2] {
    [RationalC::new(2, 9).expect("2/9"), RationalC::new(1, 4).expect("1/4")]
}
